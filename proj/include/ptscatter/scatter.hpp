#pragma once

#include "ptscatter/model.hpp"
#include "ptscatter/specfun.hpp"

#include <array>

namespace ptscatter::scatter {

using Complex = std::complex<double>;
using specfun::TaggedComplex;
using specfun::ValueTag;

/// Left/right transmission and reflection amplitudes. `family` keeps the four
/// underlying Gamma-ratio building blocks (G, P or H depending on the case)
/// so t_l = 1/family[1], r_l = family[0]/family[1], r_r = -family[3]/family[1]
/// stay re-derivable.
struct ScatteringAmplitudes {
    TaggedComplex t_left, r_left, t_right, r_right;
    std::array<TaggedComplex, 4> family;
};

/// mu -> i mu scattering amplitudes, defined for every real eps.
ScatteringAmplitudes amplitudes_case1(double v, double mu, double eps);

/// The shared Gamma-block layout evaluated from explicit channel momenta.
/// Both the mu -> i mu family and the penetrating family are this layout on
/// their own (k+, k-, gamma).
ScatteringAmplitudes amplitudes_from_momenta(const model::ChannelMomenta& m);

/// d -> i d penetrating amplitudes; requires -v e^{-2mu} < eps < 0.
ScatteringAmplitudes amplitudes_case2_penetrating(double v, double mu, double eps);

/// d -> i d free-state amplitudes; requires eps > 0. Real-form Gamma
/// arguments (k without i), matching the closed forms these states come with.
ScatteringAmplitudes amplitudes_case2_free(double v, double mu, double eps);

/// Dispatch on params.kind (DImaginary picks penetrating for eps < 0).
ScatteringAmplitudes amplitudes(const model::PotentialParams& p, double eps);

/// R = |r|^2 and T = |t|^2; transmission never carries a flux factor unless
/// FluxCorrected is requested (then T is scaled by Re k_+ / Re k_-).
enum class FluxConvention { AmplitudeSquared, FluxCorrected };

struct ScatteringCoefficients {
    double R_left = 0.0;
    double R_right = 0.0;
    double T_left = 0.0;
    double T_right = 0.0;
    double defect = 0.0;  // R_left + T_left - 1
    bool singular = false;
};

ScatteringCoefficients coefficients(const ScatteringAmplitudes& amps);
ScatteringCoefficients coefficients(const ScatteringAmplitudes& amps,
                                    const model::ChannelMomenta& momenta,
                                    FluxConvention convention);

} // namespace ptscatter::scatter
