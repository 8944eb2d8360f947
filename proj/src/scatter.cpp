#include "ptscatter/scatter.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ptscatter::scatter {

namespace {

using specfun::gamma_ratio;
using specfun::GammaRatioSpec;

constexpr Complex kI{0.0, 1.0};

// The three families share one layout: four building blocks
//   F1 = n1a n1b / [d1a d1b], ..., and amplitudes
//   t_l = 1/F2, r_l = F1/F2, r_r = -F4/F2, t_r = (F2 F3 - F1 F4)/F2.
// Common Gamma factors of the ratios are cancelled analytically so a pole
// shared by numerator and denominator never shows up as Indeterminate.
struct FamilyArgs {
    std::array<std::array<Complex, 4>, 4> block;  // {num_a, num_b, den_a, den_b} per block
};

ScatteringAmplitudes assemble(const FamilyArgs& fa) {
    ScatteringAmplitudes out;
    for (int i = 0; i < 4; ++i) {
        const auto& b = fa.block[static_cast<size_t>(i)];
        out.family[static_cast<size_t>(i)] = gamma_ratio({{b[0], b[1]}, {b[2], b[3]}});
    }
    const auto& f1 = fa.block[0];
    const auto& f2 = fa.block[1];
    const auto& f3 = fa.block[2];
    const auto& f4 = fa.block[3];

    // t_l = 1/F2
    out.t_left = gamma_ratio({{f2[2], f2[3]}, {f2[0], f2[1]}});
    // r_l = F1/F2; both carry the same first numerator factor
    out.r_left = gamma_ratio({{f1[1], f2[2], f2[3]}, {f2[1], f1[2], f1[3]}});
    // r_r = -F4/F2; F4 and F2 share the second numerator factor
    out.r_right = gamma_ratio({{f4[0], f2[2], f2[3]}, {f2[0], f4[2], f4[3]}});
    if (out.r_right.finite() || out.r_right.zero()) out.r_right.value = -out.r_right.value;
    // t_r literally as printed
    out.t_right = specfun::tagged_div(
        specfun::tagged_sub(specfun::tagged_mul(out.family[1], out.family[2]),
                            specfun::tagged_mul(out.family[0], out.family[3])),
        out.family[1]);
    (void)f3;
    return out;
}

} // namespace

namespace {

ScatteringAmplitudes g_family(const model::ChannelMomenta& m) {
    const Complex kp = m.k_plus, km = m.k_minus, g = m.gamma;
    const Complex s = kI * (kp + km) / 2.0;
    const Complex d = kI * (kp - km) / 2.0;
    FamilyArgs fa;
    fa.block[0] = {1.0 - kI * kp, kI * km, 0.5 - d + g, 0.5 - d - g};
    fa.block[1] = {1.0 - kI * kp, -kI * km, 0.5 - s + g, 0.5 - s - g};
    fa.block[2] = {1.0 + kI * kp, kI * km, 0.5 + s + g, 0.5 + s - g};
    fa.block[3] = {1.0 + kI * kp, -kI * km, 0.5 + d + g, 0.5 + d - g};
    return assemble(fa);
}

} // namespace

ScatteringAmplitudes amplitudes_from_momenta(const model::ChannelMomenta& m) {
    return g_family(m);
}

ScatteringAmplitudes amplitudes_case1(double v, double mu, double eps) {
    if (!std::isfinite(eps)) throw std::domain_error("amplitudes_case1: eps must be finite");
    model::PotentialParams p{v, mu, model::CaseKind::MuImaginary};
    return g_family(model::momenta(p, eps));
}

ScatteringAmplitudes amplitudes_case2_penetrating(double v, double mu, double eps) {
    const double window = v * std::exp(-2.0 * mu);
    if (!(eps > -window && eps < 0.0))
        throw std::domain_error("amplitudes_case2_penetrating: eps outside (-v e^{-2mu}, 0)");
    model::PotentialParams p{v, mu, model::CaseKind::DImaginary};
    // Identical hypergeometric layout as case I; only the momenta and gamma
    // change. The asymptotic decomposition fixes which block divides which:
    // the (k+ + k-)-type block is the transmission denominator. Note the
    // conjugation pairs family[0]* = family[3], family[1]* = family[2] for
    // real momenta, which forces R_left = R_right exactly.
    return g_family(model::momenta(p, eps));
}

ScatteringAmplitudes amplitudes_case2_free(double v, double mu, double eps) {
    if (!(eps > 0.0)) throw std::domain_error("amplitudes_case2_free: eps must be positive");
    model::PotentialParams p{v, mu, model::CaseKind::DImaginary};
    const model::ChannelMomenta m = model::momenta(p, eps);
    const Complex kp = m.k_plus, km = m.k_minus, g = m.gamma;
    // real-form arguments: sigma, delta without the factor i
    const Complex sg = (kp + km) / 2.0;
    const Complex dl = (kp - km) / 2.0;
    FamilyArgs fa;
    fa.block[0] = {1.0 + kp, -km, 0.5 + dl + g, 0.5 + dl - g};
    fa.block[1] = {1.0 + kp, km, 0.5 + sg - g, 0.5 + sg + g};
    fa.block[2] = {1.0 - kp, -km, 0.5 - sg + g, 0.5 - sg - g};
    fa.block[3] = {1.0 - kp, km, 0.5 - dl - g, 0.5 - dl + g};
    return assemble(fa);
}

ScatteringAmplitudes amplitudes(const model::PotentialParams& p, double eps) {
    switch (p.kind) {
        case model::CaseKind::Real:
            // same hypergeometric construction as case I, with the real-case
            // momenta and gamma = sqrt(v cosh^2 mu + 1/4)
            return g_family(model::momenta(p, eps));
        case model::CaseKind::MuImaginary: return amplitudes_case1(p.v, p.mu, eps);
        case model::CaseKind::DImaginary:
            return eps < 0.0 ? amplitudes_case2_penetrating(p.v, p.mu, eps)
                             : amplitudes_case2_free(p.v, p.mu, eps);
    }
    throw std::logic_error("amplitudes: unknown case");
}

namespace {

double coefficient_of(const TaggedComplex& amp, bool& singular) {
    switch (amp.tag) {
        case ValueTag::Finite: {
            const double c = std::norm(amp.value);
            if (!std::isfinite(c)) singular = true;
            return c;
        }
        case ValueTag::Zero: return 0.0;
        case ValueTag::Pole:
            singular = true;
            return std::numeric_limits<double>::infinity();
        case ValueTag::Indeterminate:
            singular = true;
            return std::numeric_limits<double>::quiet_NaN();
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace

ScatteringCoefficients coefficients(const ScatteringAmplitudes& amps) {
    ScatteringCoefficients c;
    c.R_left = coefficient_of(amps.r_left, c.singular);
    c.R_right = coefficient_of(amps.r_right, c.singular);
    c.T_left = coefficient_of(amps.t_left, c.singular);
    c.T_right = coefficient_of(amps.t_right, c.singular);
    c.defect = c.R_left + c.T_left - 1.0;
    return c;
}

ScatteringCoefficients coefficients(const ScatteringAmplitudes& amps,
                                    const model::ChannelMomenta& momenta,
                                    FluxConvention convention) {
    ScatteringCoefficients c = coefficients(amps);
    if (convention == FluxConvention::FluxCorrected) {
        // transmitted flux over incident flux; meaningful when both channels
        // propagate (Re k > 0 on both sides)
        const double flux_lr = momenta.k_plus.real() / momenta.k_minus.real();
        c.T_left *= flux_lr;
        c.T_right /= flux_lr;
        c.defect = c.R_left + c.T_left - 1.0;
    }
    return c;
}

} // namespace ptscatter::scatter
