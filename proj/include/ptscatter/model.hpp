#pragma once

#include <complex>

namespace ptscatter::model {

using Complex = std::complex<double>;

enum class CaseKind { Real, MuImaginary, DImaginary };

/// Dimensionless configuration of the potential family
///   V = v cosh^2(mu) (tanh z + tanh mu)^2   with v = 2 m d^2 V0 / hbar^2,
/// plus the complexification choice (mu -> i mu or d -> i d).
struct PotentialParams {
    double v = 1.0;
    double mu = 0.0;
    CaseKind kind = CaseKind::MuImaginary;

    bool free_particle() const { return v == 0.0; }
    /// mu at a multiple of pi/2 collapses the MuImaginary potential to a
    /// real or indefinite one.
    bool degenerate_mu() const;
};

/// Asymptotic values of the (effective) potential as z -> -inf / +inf.
/// Real: v e^{-+2mu}; MuImaginary: v e^{-+2 i mu}; DImaginary (inverted
/// barrier): -v e^{-+2mu}.
Complex asymptote_left(const PotentialParams& p);
Complex asymptote_right(const PotentialParams& p);

/// Principal square root normalised to Re >= 0, with Im >= 0 breaking the
/// Re == 0 tie. Selects rightward-decaying/propagating transmitted waves.
Complex branch_sqrt(Complex w);

struct ChannelMomenta {
    Complex k_plus;   // channel momentum at z -> +inf
    Complex k_minus;  // channel momentum at z -> -inf
    Complex gamma;    // sqrt(v cos^2 mu + 1/4) (case I) or sqrt(1/4 - v cosh^2 mu) (case II)
};

/// Momenta for the scattering families. DImaginary uses the penetrating
/// convention k = sqrt(eps + v e^{+-2mu}) for eps < 0 and the free-state
/// convention k = sqrt(eps - v e^{+-2mu}) for eps >= 0.
ChannelMomenta momenta(const PotentialParams& p, double eps);

enum class RegimeKind { Bound, Reflecting, Free, Scattering, Penetrating };

struct Regime {
    RegimeKind kind;
};

/// Classification of (params, eps). Boundary energies are assigned to the
/// higher regime.
Regime regime_of(const PotentialParams& p, double eps);

const char* regime_name(RegimeKind k);

/// Potential evaluated along the physical coordinate x (in units of d).
/// Real:        v cosh^2 mu (tanh x + tanh mu)^2
/// MuImaginary: v cos^2 mu (tanh(x - i mu) + i tan mu)^2
/// DImaginary:  v cosh^2 mu (tanh(-i(x + i zeta) - mu) + tanh mu)^2
/// zeta is the imaginary coordinate shift of the DImaginary case; it only
/// affects plotting, never amplitudes.
Complex potential_value(const PotentialParams& p, double x, double zeta = 0.0);

/// Effective real-line potential U(z) whose Schrodinger problem the
/// scattering amplitudes solve: case I keeps v cos^2 mu (tanh z + i tan mu)^2,
/// case II (penetrating) is the inverted barrier -v cosh^2 mu (tanh z + tanh mu)^2,
/// Real is the potential itself.
Complex effective_potential(const PotentialParams& p, double z);

} // namespace ptscatter::model
