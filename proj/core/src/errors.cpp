#include "scatter/errors.hpp"

#include <sstream>

namespace scatter {

namespace {
std::string fmt_cplx(Cplx z) {
    std::ostringstream os;
    os.precision(12);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}
}  // namespace

PoleAtNonpositiveInteger::PoleAtNonpositiveInteger(Cplx z)
    : Error("gamma pole at nonpositive integer z=" + fmt_cplx(z)), z(z) {}

ZeroWronskian::ZeroWronskian(double x)
    : Error("Wronskian vanishes at x=" + std::to_string(x)), x(x) {}

PoleHit::PoleHit(Cplx k) : Error("amplitude evaluated on a pole k=" + fmt_cplx(k)), k(k) {}

UncancelledPole::UncancelledPole(Cplx k)
    : Error("virtual-seed pole not cancelled at k=" + fmt_cplx(k)), k(k) {}

ParseError::ParseError(int line, const std::string& what)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}

}  // namespace scatter
