#include "ptscatter/bound.hpp"

#include "ptscatter/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace ptscatter::bound {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool odd_half_pi_multiple(double mu) {
    // mu = (2k+1) pi/2 <=> cos mu = 0
    return std::abs(std::remainder(mu - kPi / 2.0, kPi)) < 1e-12;
}
} // namespace

std::vector<BoundState> bound_spectrum(double v, double mu) {
    if (odd_half_pi_multiple(mu))
        throw std::domain_error("bound_spectrum: potential degenerate at odd multiples of pi/2");
    const double vc2 = v * std::pow(std::cos(mu), 2);
    if (!(vc2 > 0.0)) throw std::domain_error("bound_spectrum: requires v cos^2 mu > 0");

    const double root = std::sqrt(vc2 + 0.25);
    std::vector<BoundState> states;
    const double sin2mu = std::sin(2.0 * mu);
    const double cos2mu = std::cos(2.0 * mu);
    for (int n = 0; static_cast<double>(n) < root - 0.5; ++n) {
        BoundState s;
        s.n = n;
        s.b_n = root - (n + 0.5);
        s.a_n = Complex(0.0, v * sin2mu / (2.0 * s.b_n));
        s.epsilon_n = v * cos2mu + std::pow(v * sin2mu, 2) / (4.0 * s.b_n * s.b_n) -
                      s.b_n * s.b_n;
        s.A_n = pt_eigenvalue(s, v, mu);
        states.push_back(s);
    }
    return states;
}

Complex bound_wavefunction(const BoundState& state, double v, double mu, double z) {
    const double root = std::sqrt(v * std::pow(std::cos(mu), 2) + 0.25);
    const Complex beta(2.0 * root - state.n, 0.0);
    const Complex c = state.a_n + state.b_n + 1.0;
    // x = e^{-z} / (e^z + e^{-z}) computed without overflow
    const double x = 1.0 / (1.0 + std::exp(2.0 * z));
    // (e^z + e^{-z})^{-b} via log(2 cosh z) = |z| + log1p(e^{-2|z|})
    const double log_two_cosh = std::abs(z) + std::log1p(std::exp(-2.0 * std::abs(z)));
    const Complex envelope = std::exp(-state.a_n * z - state.b_n * log_two_cosh);
    return envelope * specfun::gauss_2f1_terminating(state.n, beta, c, Complex(x, 0.0));
}

Complex pt_eigenvalue(const BoundState& state, double v, double mu) {
    (void)v;
    (void)mu;
    const Complex a = state.a_n;
    const double b = state.b_n;
    const double n = static_cast<double>(state.n);
    // A_n = Gamma(-a-b) Gamma(-a+b+1) / [Gamma(-a-b-n) Gamma(-a+b+n+1)],
    // the proportionality constant of the argument-reversal identity applied
    // to conj(psi(-z)).
    const specfun::TaggedComplex ratio = specfun::gamma_ratio(
        {{-a - b, -a + b + 1.0}, {-a - b - n, -a + b + n + 1.0}});
    if (ratio.finite()) return ratio.value;
    // Pole/pole pairs (possible in the Hermitian limit where a = 0 and b is
    // an integer) still have a finite Pochhammer limit.
    Complex prod(1.0, 0.0);
    for (int j = 0; j < state.n; ++j)
        prod *= (-a - b - n + static_cast<double>(j)) / (-a + b + 1.0 + static_cast<double>(j));
    return prod;
}

} // namespace ptscatter::bound
