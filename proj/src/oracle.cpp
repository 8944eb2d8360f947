#include "ptscatter/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ptscatter::oracle {

namespace {

struct State {
    Complex psi;
    Complex dpsi;
};

// Dormand-Prince 5(4) pair on the two-component complex state.
// Integrates from z0 to z1 (either direction), error-controlled at
// atol = rtol with relative weighting on the larger component.
template <typename Rhs>
State integrate_dp45(const Rhs& rhs, State y, double z0, double z1, double rtol,
                     double max_step) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double dir = (z1 >= z0) ? 1.0 : -1.0;
    double z = z0;
    double h = dir * std::min(max_step, 1e-2);
    auto add = [](const State& s, double f, const State& k) {
        return State{s.psi + f * k.psi, s.dpsi + f * k.dpsi};
    };

    State k1 = rhs(z, y);
    int guard = 0;
    while (dir * (z1 - z) > 0.0) {
        if (++guard > 4000000) throw std::runtime_error("integrate_scattering: step limit exceeded");
        if (dir * (z + h - z1) > 0.0) h = z1 - z;

        State s2 = add(y, h * a21, k1);
        State k2 = rhs(z + c2 * h, s2);
        State s3 = add(add(y, h * a31, k1), h * a32, k2);
        State k3 = rhs(z + c3 * h, s3);
        State s4 = add(add(add(y, h * a41, k1), h * a42, k2), h * a43, k3);
        State k4 = rhs(z + c4 * h, s4);
        State s5 = add(add(add(add(y, h * a51, k1), h * a52, k2), h * a53, k3), h * a54, k4);
        State k5 = rhs(z + c5 * h, s5);
        State s6 = add(add(add(add(add(y, h * a61, k1), h * a62, k2), h * a63, k3), h * a64, k4),
                       h * a65, k5);
        State k6 = rhs(z + h, s6);
        State ynew{y.psi + h * (b1 * k1.psi + b3 * k3.psi + b4 * k4.psi + b5 * k5.psi + b6 * k6.psi),
                   y.dpsi +
                       h * (b1 * k1.dpsi + b3 * k3.dpsi + b4 * k4.dpsi + b5 * k5.dpsi + b6 * k6.dpsi)};
        State k7 = rhs(z + h, ynew);

        const Complex err_psi =
            h * (e1 * k1.psi + e3 * k3.psi + e4 * k4.psi + e5 * k5.psi + e6 * k6.psi + e7 * k7.psi);
        const Complex err_dpsi = h * (e1 * k1.dpsi + e3 * k3.dpsi + e4 * k4.dpsi + e5 * k5.dpsi +
                                      e6 * k6.dpsi + e7 * k7.dpsi);
        const double scale_psi = rtol * std::max({std::abs(y.psi), std::abs(ynew.psi), 1e-30});
        const double scale_dpsi = rtol * std::max({std::abs(y.dpsi), std::abs(ynew.dpsi), 1e-30});
        const double err = std::max(std::abs(err_psi) / scale_psi, std::abs(err_dpsi) / scale_dpsi);

        if (err <= 1.0) {
            z += h;
            y = ynew;
            k1 = k7;  // FSAL
            if (std::abs(y.psi) > 1e250 || std::abs(y.dpsi) > 1e250)
                throw std::runtime_error("integrate_scattering: solution overflow");
        }
        const double factor =
            std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
        h *= factor;
        if (std::abs(h) > max_step) h = dir * max_step;
        if (std::abs(h) < 1e-14) throw std::runtime_error("integrate_scattering: step underflow");
    }
    return y;
}

} // namespace

namespace {

// The effective potentials all have the shape w (tanh z + t)^2, so their
// asymptotic tails are U_inf_r - 4w(1+t) e^{-2z} (right) and
// U_inf_l + 4w(t-1) e^{2z} (left).
void tail_coefficients(const model::PotentialParams& p, Complex& c_left, Complex& c_right) {
    Complex w, t;
    switch (p.kind) {
        case model::CaseKind::Real:
            w = Complex(p.v * std::pow(std::cosh(p.mu), 2), 0.0);
            t = Complex(std::tanh(p.mu), 0.0);
            break;
        case model::CaseKind::MuImaginary:
            w = Complex(p.v * std::pow(std::cos(p.mu), 2), 0.0);
            t = Complex(0.0, std::tan(p.mu));
            break;
        case model::CaseKind::DImaginary:
            w = Complex(-p.v * std::pow(std::cosh(p.mu), 2), 0.0);
            t = Complex(std::tanh(p.mu), 0.0);
            break;
    }
    c_right = -4.0 * w * (1.0 + t);
    c_left = 4.0 * w * (t - 1.0);
}

// First-order tail-corrected plane wave e^{i k z} (1 + b e^{sign 2 z}) and
// its derivative, evaluated at z. sign = -1 on the right tail, +1 on the left.
struct Wave {
    Complex value, slope;
};

Wave tail_wave(Complex k, Complex tail_coeff, double sign, double z) {
    const Complex i_unit(0.0, 1.0);
    // psi = e^{ikz}(1 + b e^{2 sign z}) solves psi'' = (U - eps) psi through
    // first order in the tail when b (4 + 4 i k sign) = tail_coeff
    const Complex b = tail_coeff / (4.0 + 4.0 * i_unit * k * sign);
    const Complex tail = b * std::exp(2.0 * sign * z);
    const Complex phase = std::exp(i_unit * k * z);
    return {phase * (1.0 + tail), phase * (i_unit * k * (1.0 + tail) + 2.0 * sign * tail)};
}

} // namespace

OracleAmplitudes integrate_scattering(const model::PotentialParams& params, double eps,
                                      const IntegrationConfig& config) {
    if (config.half_domain < 8.0)
        throw std::domain_error("integrate_scattering: half_domain must be >= 8");
    if (params.kind == model::CaseKind::DImaginary && eps >= 0.0)
        throw std::domain_error("integrate_scattering: free states of the d -> i d case are not covered");

    const double L = config.half_domain;
    const model::ChannelMomenta m = model::momenta(params, eps);
    const Complex kp = m.k_plus, km = m.k_minus;
    Complex c_left, c_right;
    tail_coefficients(params, c_left, c_right);

    OracleAmplitudes out;
    out.ill_conditioned_warning =
        std::abs(kp.imag()) * L > 30.0 || std::abs(km.imag()) * L > 30.0;

    auto rhs = [&](double z, const State& s) {
        return State{s.dpsi, (model::effective_potential(params, z) - eps) * s.psi};
    };

    const bool left_incidence = config.side == Side::LeftIncidence;
    // transmitted wave: e^{i k+ z} past the right tail, or e^{-i k- z} past
    // the left tail
    const double seed_z = left_incidence ? L : -L;
    const Wave seed = left_incidence ? tail_wave(kp, c_right, -1.0, L)
                                     : tail_wave(-km, c_left, 1.0, -L);
    State y{seed.value, seed.slope};
    y = integrate_dp45(rhs, y, seed_z, -seed_z, config.rel_tol, config.max_step);

    // decompose into incident + reflected tail-corrected waves
    const Complex k_near = left_incidence ? km : kp;
    const double near_z = -seed_z;
    const double tail_sign = left_incidence ? 1.0 : -1.0;
    const Complex c_near = left_incidence ? c_left : c_right;
    const Wave incident = tail_wave(left_incidence ? k_near : -k_near, c_near, tail_sign, near_z);
    const Wave reflected = tail_wave(left_incidence ? -k_near : k_near, c_near, tail_sign, near_z);

    const Complex det = incident.value * reflected.slope - reflected.value * incident.slope;
    const Complex a = (y.psi * reflected.slope - reflected.value * y.dpsi) / det;
    const Complex b = (incident.value * y.dpsi - y.psi * incident.slope) / det;
    out.condition = (std::abs(y.psi * reflected.slope) + std::abs(reflected.value * y.dpsi)) /
                    (std::abs(a) * std::abs(det));
    if (!(out.condition < 1e12))
        throw std::runtime_error("integrate_scattering: matching too ill-conditioned");
    out.r = b / a;
    out.t = 1.0 / a;
    return out;
}

namespace {

// Tridiagonal LU solve with partial pivoting, complex coefficients.
// sub/diag/super are overwritten; one extra superdiagonal of fill-in.
void solve_tridiag(std::vector<Complex> sub, std::vector<Complex> diag,
                   std::vector<Complex> super, std::vector<Complex>& x) {
    const size_t n = diag.size();
    std::vector<Complex> super2(n, Complex(0.0, 0.0));
    for (size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(sub[i]) > std::abs(diag[i])) {
            std::swap(diag[i], sub[i]);
            std::swap(super[i], diag[i + 1]);
            if (i + 2 < n) std::swap(super2[i], super[i + 1]);
            std::swap(x[i], x[i + 1]);
        }
        if (diag[i] == Complex(0.0, 0.0)) diag[i] = Complex(1e-300, 0.0);
        const Complex f = sub[i] / diag[i];
        diag[i + 1] -= f * super[i];
        if (i + 2 < n) super[i + 1] -= f * super2[i];
        x[i + 1] -= f * x[i];
    }
    if (diag[n - 1] == Complex(0.0, 0.0)) diag[n - 1] = Complex(1e-300, 0.0);
    x[n - 1] /= diag[n - 1];
    if (n >= 2) x[n - 2] = (x[n - 2] - super[n - 2] * x[n - 1]) / diag[n - 2];
    for (size_t ir = n; ir >= 3; --ir) {
        const size_t i = ir - 3;
        x[i] = (x[i] - super[i] * x[i + 1] - super2[i] * x[i + 2]) / diag[i];
    }
}

struct Tridiag {
    std::vector<Complex> sub, diag, super;
};

Tridiag fd_hamiltonian(const model::PotentialParams& params, int n, double box) {
    const double h = 2.0 * box / (n + 1);
    Tridiag t;
    t.sub.assign(n - 1, Complex(-1.0 / (h * h), 0.0));
    t.super = t.sub;
    t.diag.resize(n);
    for (int i = 0; i < n; ++i) {
        const double z = -box + (i + 1) * h;
        t.diag[i] = 2.0 / (h * h) + model::effective_potential(params, z);
    }
    return t;
}

Complex apply_tridiag(const Tridiag& t, const std::vector<Complex>& x, std::vector<Complex>& y) {
    const size_t n = x.size();
    Complex bilinear(0.0, 0.0);
    for (size_t i = 0; i < n; ++i) {
        Complex v = t.diag[i] * x[i];
        if (i > 0) v += t.sub[i - 1] * x[i - 1];
        if (i + 1 < n) v += t.super[i] * x[i + 1];
        y[i] = v;
        bilinear += x[i] * v;
    }
    return bilinear;
}

// Shifted inverse iteration with bilinear Rayleigh-quotient updates (the
// matrix is complex symmetric, so left and right eigenvectors coincide under
// transpose). Several fixed-shift sweeps first: the start vector may have a
// tiny overlap with the target (near-parity eigenstates), and an early
// Rayleigh update from a contaminated iterate can lock onto the wrong level.
struct RefinedLevel {
    Complex lambda;
    double edge_weight;  // |psi|^2 fraction in the outer 8% of the box
};

RefinedLevel refine_eigenvalue(const Tridiag& t, Complex seed, unsigned restart) {
    const size_t n = t.diag.size();
    std::vector<Complex> x(n), y(n);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + restart);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (size_t i = 0; i < n; ++i) x[i] = Complex(uni(rng), uni(rng));
    Complex shift = seed + Complex(1e-10, 1e-12);
    Complex lambda = shift;
    for (int iter = 0; iter < 48; ++iter) {
        std::vector<Complex> diag = t.diag;
        for (size_t i = 0; i < n; ++i) diag[i] -= shift;
        solve_tridiag(t.sub, diag, t.super, x);
        double norm = 0.0;
        for (const Complex& v : x) norm += std::norm(v);
        norm = std::sqrt(norm);
        for (Complex& v : x) v /= norm;
        Complex xx(0.0, 0.0);
        const Complex xtax = apply_tridiag(t, x, y);
        for (const Complex& v : x) xx += v * v;
        if (std::abs(xx) < 1e-8) continue;  // quasi-null vector, keep iterating
        const Complex next = xtax / xx;
        if (iter >= 4) {
            if (std::abs(next - lambda) < 1e-13 * std::max(1.0, std::abs(next))) {
                lambda = next;
                break;
            }
            shift = next;
        }
        lambda = next;
    }
    const size_t edge = std::max<size_t>(1, n / 12);
    double edge_weight = 0.0;
    for (size_t i = 0; i < edge; ++i)
        edge_weight += std::norm(x[i]) + std::norm(x[n - 1 - i]);
    return {lambda, edge_weight};
}

// Refined value should stay near its coarse seed; a large jump means the
// iteration escaped to a different level, so retry from a fresh start and
// keep the candidate closest to the seed.
RefinedLevel refine_with_retry(const Tridiag& t, Complex seed) {
    RefinedLevel best = refine_eigenvalue(t, seed, 0);
    if (std::abs(best.lambda - seed) > 0.08 * std::max(1.0, std::abs(seed))) {
        const RefinedLevel retry = refine_eigenvalue(t, seed, 1);
        if (std::abs(retry.lambda - seed) < std::abs(best.lambda - seed)) best = retry;
    }
    return best;
}

} // namespace

namespace {

std::vector<Complex> coarse_seeds(const model::PotentialParams& params, int grid_n, double box) {
    // dense coarse solve for seeds
    const int coarse_n = std::min(grid_n, 360);
    Eigen::MatrixXcd hc = Eigen::MatrixXcd::Zero(coarse_n, coarse_n);
    {
        const Tridiag tc = fd_hamiltonian(params, coarse_n, box);
        for (int i = 0; i < coarse_n; ++i) {
            hc(i, i) = tc.diag[static_cast<size_t>(i)];
            if (i + 1 < coarse_n) {
                hc(i, i + 1) = tc.super[static_cast<size_t>(i)];
                hc(i + 1, i) = tc.sub[static_cast<size_t>(i)];
            }
        }
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(hc, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("bound_oracle: coarse eigensolve failed");

    // Discrete levels sit on the real axis; box-discretised continuum states
    // inherit Im ~ +-v sin(2 mu) from the complex asymptotes. Seed from the
    // small-|Im| candidates and let the localisation filter below sort out
    // the rest (at mu ~ 0 the continuum is real too and reaches this stage).
    const double im_tol =
        std::max(1e-3, 0.08 * std::abs(params.v * std::sin(2.0 * params.mu)));
    std::vector<Complex> seeds;
    for (int i = 0; i < coarse_n; ++i) {
        const Complex ev = solver.eigenvalues()(i);
        if (std::abs(ev.imag()) <= im_tol) seeds.push_back(ev);
    }
    std::sort(seeds.begin(), seeds.end(), [](const Complex& a, const Complex& b) {
        return std::abs(a.imag()) < std::abs(b.imag());
    });
    if (seeds.size() > 60) seeds.resize(60);
    return seeds;
}

std::vector<Complex> refine_levels(const model::PotentialParams& params, int grid_n, double box,
                                   const std::vector<Complex>& seeds) {
    const Tridiag tf = fd_hamiltonian(params, grid_n, box);
    std::vector<Complex> eigenvalues;
    for (const Complex& seed : seeds) {
        const RefinedLevel refined = refine_with_retry(tf, seed);
        if (refined.edge_weight > 1e-3) continue;  // not localised in the box
        bool duplicate = false;
        for (const Complex& known : eigenvalues)
            if (std::abs(known - refined.lambda) < 1e-7 * std::max(1.0, std::abs(refined.lambda)))
                duplicate = true;
        if (!duplicate) eigenvalues.push_back(refined.lambda);
    }
    std::sort(eigenvalues.begin(), eigenvalues.end(),
              [](const Complex& a, const Complex& b) { return a.real() < b.real(); });
    return eigenvalues;
}

} // namespace

std::vector<Complex> bound_oracle(const model::PotentialParams& params, int grid_n, double box) {
    if (params.kind != model::CaseKind::MuImaginary)
        throw std::domain_error("bound_oracle: only the mu -> i mu case is supported");
    if (grid_n > 4000) throw std::domain_error("bound_oracle: grid_n must be <= 4000");
    if (grid_n < 16) throw std::domain_error("bound_oracle: grid_n too small");
    return refine_levels(params, grid_n, box, coarse_seeds(params, grid_n, box));
}

BoundOracleLevels bound_oracle_levels(const model::PotentialParams& params, int grid_n,
                                      double box) {
    if (params.kind != model::CaseKind::MuImaginary)
        throw std::domain_error("bound_oracle_levels: only the mu -> i mu case is supported");
    if (grid_n > 4000 || grid_n < 64)
        throw std::domain_error("bound_oracle_levels: grid_n must be in [64, 4000]");
    const std::vector<Complex> seeds = coarse_seeds(params, grid_n, box);
    BoundOracleLevels out;
    out.fine = refine_levels(params, grid_n, box, seeds);
    out.half = refine_levels(params, grid_n / 2, box, seeds);
    out.quarter = refine_levels(params, grid_n / 4, box, seeds);
    return out;
}

} // namespace ptscatter::oracle
