#pragma once

#include <complex>
#include <vector>

namespace ptscatter::bound {

using Complex = std::complex<double>;

/// One bound level of the mu -> i mu complexified potential.
/// b_n = sqrt(v cos^2 mu + 1/4) - (n + 1/2) > 0, a_n purely imaginary,
/// epsilon_n real by construction, |A_n| = 1.
struct BoundState {
    int n = 0;
    double b_n = 0.0;
    Complex a_n{0.0, 0.0};
    double epsilon_n = 0.0;
    Complex A_n{1.0, 0.0};
};

/// Discrete spectrum, ordered by n. Empty when sqrt(v cos^2 mu + 1/4) <= 1/2.
/// Throws std::domain_error for mu at an odd multiple of pi/2 (degenerate
/// potential) or v cos^2 mu <= 0.
std::vector<BoundState> bound_spectrum(double v, double mu);

/// Unnormalized bound wavefunction at coordinate z (in units of d):
///   psi_n(z) = e^{-a_n z} (e^z + e^{-z})^{-b_n} F(-n, 2 sqrt(v cos^2 mu+1/4) - n; a_n+b_n+1; x)
/// with x = e^{-z} / (e^z + e^{-z}).
Complex bound_wavefunction(const BoundState& state, double v, double mu, double z);

/// Eigenvalue A_n of the parity-time reflection acting on psi_n, i.e. the
/// constant with conj(psi_n(-z)) = A_n psi_n(z). Unit modulus for every
/// valid state.
Complex pt_eigenvalue(const BoundState& state, double v, double mu);

} // namespace ptscatter::bound
