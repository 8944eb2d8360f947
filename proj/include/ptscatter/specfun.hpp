#pragma once

#include <complex>
#include <vector>

namespace ptscatter::specfun {

using Complex = std::complex<double>;

/// Arguments closer than this to a non-positive integer count as Gamma poles.
inline constexpr double kPoleTolerance = 1e-9;

/// Principal-branch complex log-Gamma with in-band pole classification.
/// pole_order == 0 means a regular point and `value` holds ln Gamma(z);
/// pole_order == 1 means z sits within kPoleTolerance of a non-positive
/// integer and `value` is meaningless.
struct LogGammaValue {
    Complex value{0.0, 0.0};
    int pole_order = 0;
};

LogGammaValue log_gamma(Complex z);

/// Nearest non-positive integer if z is within tol of one, else no value.
bool near_gamma_pole(Complex z, double tol = kPoleTolerance);

enum class ValueTag { Finite, Pole, Zero, Indeterminate };

struct TaggedComplex {
    Complex value{0.0, 0.0};
    ValueTag tag = ValueTag::Finite;

    bool finite() const { return tag == ValueTag::Finite; }
    bool zero() const { return tag == ValueTag::Zero; }
    bool pole() const { return tag == ValueTag::Pole; }
};

TaggedComplex tagged_mul(const TaggedComplex& a, const TaggedComplex& b);
TaggedComplex tagged_sub(const TaggedComplex& a, const TaggedComplex& b);
TaggedComplex tagged_div(const TaggedComplex& a, const TaggedComplex& b);

/// Product of Gamma(arg) over numerator_args divided by the same over
/// denominator_args, evaluated in log space so no intermediate quantity
/// overflows for |arg| <= 60.
struct GammaRatioSpec {
    std::vector<Complex> numerator_args;
    std::vector<Complex> denominator_args;
};

/// Tag rules: Pole iff some numerator arg is a Gamma pole and no denominator
/// arg is; Zero iff vice versa; Indeterminate iff both sides hit poles.
TaggedComplex gamma_ratio(const GammaRatioSpec& spec);

/// Terminating Gauss hypergeometric series F(-n, beta; c; x), summed as the
/// exact n+1 term Horner polynomial.
/// Throws std::domain_error if c sits on a Gamma pole reached before the
/// series terminates (invalid quantum state).
Complex gauss_2f1_terminating(int n, Complex beta, Complex c, Complex x);

} // namespace ptscatter::specfun
