#pragma once

// Independent numerical checks: scattering amplitudes and bound states from
// direct Numerov integration of the Schroedinger equation.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scatter/darboux.hpp"

namespace scatter {

enum class Geometry {
    FullLine,  // waves at both infinities
    Wall,      // full line, but U -> +inf at the left (Morse)
    HalfLine   // x > 0 with a centrifugal barrier at the origin
};

struct OracleProblem {
    std::function<double(double)> U;
    Geometry geometry = Geometry::FullLine;
    double u_left = 0.0;
    double u_right = 0.0;
    /// Coulomb: 1/x tail, scattering matching is not available.
    bool long_range = false;
    std::string label;
};

OracleProblem make_problem(const Scenario& sc);
OracleProblem make_problem(const PotentialSpec& spec);

struct OracleOptions {
    double step = 1e-3;
    double radius = 12.0;
    double max_radius = 40.0;
    double flat_tol = 1e-10;
    /// Threads used to tabulate U (0: hardware concurrency).
    unsigned threads = 0;
};

/// Grids and tabulated potential, reusable across k and E.
class PreparedProblem {
public:
    PreparedProblem(OracleProblem problem, const OracleOptions& opts = {}, double min_right = 0.0);

    const OracleProblem& problem() const { return problem_; }
    double x_left() const { return x_.front(); }
    double x_right() const { return x_.back(); }
    double h() const { return h_; }
    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& u() const { return u_; }
    /// Half line: log x grid from ~1e-4 to 0 (x = 1) plus one step.
    const std::vector<double>& log_grid() const { return lx_; }
    const std::vector<double>& log_u() const { return lu_; }
    double log_h() const { return lh_; }
    double start_power() const { return s_; }

private:
    OracleProblem problem_;
    double h_ = 0.0;
    std::vector<double> x_, u_;
    double lh_ = 0.0;
    std::vector<double> lx_, lu_;
    double s_ = 0.0;
};

struct OracleResult {
    Cplx r;
    std::optional<Cplx> t;
    std::optional<Cplx> kprime;
    double x_left = 0.0;
    double x_right = 0.0;
    /// Re(k'/k)|t|^2 + |r|^2 - 1 (full line) or |r| - 1 (half line).
    double flux_residual = 0.0;
};

/// Full line: e^{ik'x} data at x_right integrated leftward, projected onto
/// e^{+-ikx}: t = 1/A, r = B/A. Wall/half line: regular solution integrated
/// rightward, r = outgoing / incoming coefficient.
OracleResult numerov_scatter(const PreparedProblem& p, double k);
OracleResult numerov_scatter(const OracleProblem& problem, double k, const OracleOptions& opts = {});

/// Eigenvalues in [e_lo, e_hi] from sign changes of the matching Wronskian on
/// a mesh, bisected to 1e-8.
std::vector<double> shoot_bound_states(const OracleProblem& problem, double e_lo, double e_hi,
                                       const OracleOptions& opts = {}, int mesh = 400);
/// Window [min U, -1e-3] (Coulomb: [min U, -0.01]).
std::vector<double> shoot_bound_states(const OracleProblem& problem, const OracleOptions& opts = {});

/// psi and psi' at x of the original-equation solution with pure e^{ik'x}
/// behaviour at the right (full line), or the regular solution (others).
std::pair<Cplx, Cplx> base_wave(const PotentialSpec& spec, double k, double x, const OracleOptions& opts = {});

/// W[seeds, psi_k] / W[seeds] at x.
Cplx deformed_scattering_wave(const Scenario& sc, double k, double x, const OracleOptions& opts = {});

}  // namespace scatter
