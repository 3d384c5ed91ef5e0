#pragma once

// Multi-indexed Darboux transformations: Wronskians of seed lists, deformed
// potentials, eigenfunctions and scattering waves.

#include <vector>

#include "scatter/seeds.hpp"

namespace scatter {

struct Scenario {
    PotentialSpec spec;
    std::vector<SeedSolution> seeds;
    int M() const { return static_cast<int>(seeds.size()); }
};

/// Validates that every seed belongs to spec, degrees are distinct within
/// each (origin, twist) class, and all energies are distinct.
Scenario make_scenario(const PotentialSpec& spec, std::vector<SeedSolution> seeds);

enum class DetStrategy { Cofactor, LU, Crum };

/// Determinant of the Wronskian matrix d^i cols[j], as a jet of order
/// out_order. Each column needs order >= cols.size() - 1 + out_order.
Jet wronskian_determinant(const std::vector<Jet>& cols, int out_order, DetStrategy strategy = DetStrategy::LU);

struct WronskianEval {
    /// W itself; may overflow to inf while log_abs stays finite.
    Cplx value;
    double log_abs = 0.0;
    /// Sign of the real part (W is real for real seeds).
    int sign = 1;
    /// (log W)' and (log W)''.
    Cplx logderiv1;
    Cplx logderiv2;
};

/// W[seeds](x). Columns are divided by e^{L_j(x)} before the determinant.
/// Throws ZeroWronskian when |det| < 1e-13 times the product of column maxima.
WronskianEval wronskian(const std::vector<SeedSolution>& seeds, double x, DetStrategy strategy = DetStrategy::LU);

/// Normalised Wronskian of factored functions: returns det as a jet of
/// out_order; log_scale receives sum of the constant prefactor logs.
/// check_zero = false skips the ZeroWronskian test (numerators may have nodes).
Jet normalized_wronskian(const std::vector<FactoredJet>& fs, int out_order, Cplx& log_scale, double x,
                         DetStrategy strategy = DetStrategy::LU, bool check_zero = true);

/// U(x) - 2 (log W)''.
double deformed_potential(const Scenario& sc, double x);

/// W[seeds, phi_n] / W[seeds] as a jet of the given order (<= 3).
Jet deformed_eigenfunction(const Scenario& sc, int n, double x, int order = 2);

/// Jet of a solution of (-d^2 + U) f = E f from its value and derivative at x,
/// higher derivatives from the ODE itself.
Jet ode_jet(const PotentialSpec& spec, Cplx energy, double x, Cplx psi, Cplx dpsi, int order);

/// W[seeds, psi] / W[seeds] for a solution psi of the original equation at
/// energy k^2 given through psi(x), psi'(x).
Jet deformed_wave(const Scenario& sc, Cplx energy, double x, Cplx psi, Cplx dpsi, int order = 2);

/// prod_j (E_n - E~_j).
double norm_ratio(const Scenario& sc, int n);

/// ||phi^[M]_n||^2 / ||phi_n||^2 by adaptive quadrature.
double norm_ratio_quadrature(const Scenario& sc, int n);

/// Integral of phi^[M]_m phi^[M]_n over the domain.
double overlap_quadrature(const Scenario& sc, int m, int n);

/// Integration window where deformed eigenfunctions of sc are non-negligible.
std::pair<double, double> integration_window(const Scenario& sc, int n);

}  // namespace scatter
