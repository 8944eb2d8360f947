#include "ptscatter/model.hpp"

#include <cmath>
#include <stdexcept>

namespace ptscatter::model {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

bool PotentialParams::degenerate_mu() const {
    if (kind != CaseKind::MuImaginary) return false;
    const double r = std::remainder(mu, kPi / 2.0);
    return std::abs(r) < 1e-12;
}

Complex asymptote_left(const PotentialParams& p) {
    switch (p.kind) {
        case CaseKind::Real: return {p.v * std::exp(-2.0 * p.mu), 0.0};
        case CaseKind::MuImaginary: return p.v * std::exp(Complex(0.0, -2.0 * p.mu));
        case CaseKind::DImaginary: return {-p.v * std::exp(-2.0 * p.mu), 0.0};
    }
    return {};
}

Complex asymptote_right(const PotentialParams& p) {
    switch (p.kind) {
        case CaseKind::Real: return {p.v * std::exp(2.0 * p.mu), 0.0};
        case CaseKind::MuImaginary: return p.v * std::exp(Complex(0.0, 2.0 * p.mu));
        case CaseKind::DImaginary: return {-p.v * std::exp(2.0 * p.mu), 0.0};
    }
    return {};
}

Complex branch_sqrt(Complex w) {
    Complex s = std::sqrt(w);
    if (s.real() < 0.0 || (s.real() == 0.0 && s.imag() < 0.0)) s = -s;
    // canonicalise signed zeros so equal momenta compare equal
    return {s.real() + 0.0, s.imag() + 0.0};
}

ChannelMomenta momenta(const PotentialParams& p, double eps) {
    if (!std::isfinite(eps)) throw std::domain_error("momenta: eps must be finite");
    ChannelMomenta m;
    switch (p.kind) {
        case CaseKind::Real: {
            m.k_plus = branch_sqrt(Complex(eps, 0.0) - asymptote_right(p));
            m.k_minus = branch_sqrt(Complex(eps, 0.0) - asymptote_left(p));
            m.gamma = std::sqrt(Complex(p.v * std::pow(std::cosh(p.mu), 2) + 0.25, 0.0));
            break;
        }
        case CaseKind::MuImaginary: {
            m.k_plus = branch_sqrt(Complex(eps, 0.0) - asymptote_right(p));
            m.k_minus = branch_sqrt(Complex(eps, 0.0) - asymptote_left(p));
            m.gamma = std::sqrt(Complex(p.v * std::pow(std::cos(p.mu), 2) + 0.25, 0.0));
            break;
        }
        case CaseKind::DImaginary: {
            const double right = p.v * std::exp(2.0 * p.mu);
            const double left = p.v * std::exp(-2.0 * p.mu);
            if (eps < 0.0) {  // penetrating convention
                m.k_plus = branch_sqrt(Complex(eps + right, 0.0));
                m.k_minus = branch_sqrt(Complex(eps + left, 0.0));
            } else {  // free-state convention
                m.k_plus = branch_sqrt(Complex(eps - right, 0.0));
                m.k_minus = branch_sqrt(Complex(eps - left, 0.0));
            }
            m.gamma = std::sqrt(Complex(0.25 - p.v * std::pow(std::cosh(p.mu), 2), 0.0));
            break;
        }
    }
    return m;
}

Regime regime_of(const PotentialParams& p, double eps) {
    switch (p.kind) {
        case CaseKind::Real: {
            const double lo = p.v * std::exp(-2.0 * p.mu);
            const double hi = p.v * std::exp(2.0 * p.mu);
            if (eps >= hi) return {RegimeKind::Free};
            if (eps >= lo) return {RegimeKind::Reflecting};
            return {RegimeKind::Bound};
        }
        case CaseKind::MuImaginary: {
            const double threshold = p.v * std::cos(2.0 * p.mu);
            if (eps >= threshold) return {RegimeKind::Scattering};
            return {RegimeKind::Bound};
        }
        case CaseKind::DImaginary: {
            if (eps >= 0.0) return {RegimeKind::Free};
            return {RegimeKind::Penetrating};
        }
    }
    return {RegimeKind::Free};
}

const char* regime_name(RegimeKind k) {
    switch (k) {
        case RegimeKind::Bound: return "bound";
        case RegimeKind::Reflecting: return "reflecting";
        case RegimeKind::Free: return "free";
        case RegimeKind::Scattering: return "scattering";
        case RegimeKind::Penetrating: return "penetrating";
    }
    return "?";
}

Complex potential_value(const PotentialParams& p, double x, double zeta) {
    switch (p.kind) {
        case CaseKind::Real: {
            const double t = std::tanh(x) + std::tanh(p.mu);
            return {p.v * std::pow(std::cosh(p.mu), 2) * t * t, 0.0};
        }
        case CaseKind::MuImaginary: {
            const Complex z(x, -p.mu);
            // tanh poles sit at Im z = pi/2 + n pi; the line Im z = -mu can
            // come arbitrarily close for mu near an odd multiple of pi/2.
            const double dist = std::abs(std::remainder(-p.mu - kPi / 2.0, kPi));
            if (dist < 1e-6 && std::abs(x) < 1e-6)
                throw std::domain_error("potential_value: tanh pole on the evaluation line");
            const Complex t = std::tanh(z) + Complex(0.0, std::tan(p.mu));
            return p.v * std::pow(std::cos(p.mu), 2) * t * t;
        }
        case CaseKind::DImaginary: {
            // z = -i(x + i zeta) - mu = (zeta - mu) - i x
            const Complex z(zeta - p.mu, -x);
            const Complex t = std::tanh(z) + std::tanh(p.mu);
            return p.v * std::pow(std::cosh(p.mu), 2) * t * t;
        }
    }
    return {};
}

Complex effective_potential(const PotentialParams& p, double z) {
    switch (p.kind) {
        case CaseKind::Real: {
            const double t = std::tanh(z) + std::tanh(p.mu);
            return {p.v * std::pow(std::cosh(p.mu), 2) * t * t, 0.0};
        }
        case CaseKind::MuImaginary: {
            const Complex t = Complex(std::tanh(z), std::tan(p.mu));
            return p.v * std::pow(std::cos(p.mu), 2) * t * t;
        }
        case CaseKind::DImaginary: {
            const double t = std::tanh(z) + std::tanh(p.mu);
            return {-p.v * std::pow(std::cosh(p.mu), 2) * t * t, 0.0};
        }
    }
    return {};
}

} // namespace ptscatter::model
