#include "ptscatter/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ptscatter::analysis {

namespace {

using model::PotentialParams;
using scatter::ScatteringCoefficients;

int worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PTSCATTER_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return static_cast<int>(n);
}

ScatteringCoefficients coefficients_at(const PotentialParams& p, double eps,
                                       scatter::FluxConvention flux) {
    const scatter::ScatteringAmplitudes amps = scatter::amplitudes(p, eps);
    if (flux == scatter::FluxConvention::FluxCorrected)
        return scatter::coefficients(amps, model::momenta(p, eps), flux);
    return scatter::coefficients(amps);
}

ScatteringCoefficients plain_coefficients(const PotentialParams& p, double eps) {
    return scatter::coefficients(scatter::amplitudes(p, eps));
}

double r_left_at(const PotentialParams& p, double eps) {
    return plain_coefficients(p, eps).R_left;
}

// golden-section extremum refinement on a bracketing triple; `less` orders
// candidate values, so maximisation just flips the comparator. Infinities
// are legal values (exact reflection poles).
template <typename F, typename Less>
double golden_refine(const F& f, double a, double b, Less less, double xtol) {
    static constexpr double R = 0.6180339887498949;
    double x1 = b - R * (b - a), x2 = a + R * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (less(f1, f2)) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + R * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - R * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

// sign-change bisection to near machine precision
template <typename F>
double bisect(const F& f, double lo, double hi, double flo) {
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-15 * std::max(1.0, std::abs(mid))) return 0.5 * (lo + hi);
    }
    return 0.5 * (lo + hi);
}

bool near_boundary(double eps, const Window& w, double step) {
    return eps < w.lo + step || eps > w.hi - step;
}

void sort_points(std::vector<FeaturePoint>& pts) {
    std::sort(pts.begin(), pts.end(),
              [](const FeaturePoint& a, const FeaturePoint& b) { return a.epsilon < b.epsilon; });
}

} // namespace

const char* feature_kind_name(FeatureKind k) {
    switch (k) {
        case FeatureKind::Reciprocity: return "reciprocity";
        case FeatureKind::SpectralSingularity: return "spectral_singularity";
        case FeatureKind::InvisibleLeft: return "invisible_left";
        case FeatureKind::InvisibleRight: return "invisible_right";
        case FeatureKind::InvisibleBidirectional: return "invisible_bidirectional";
        case FeatureKind::Unitarity: return "unitarity";
    }
    return "?";
}

ScanTable scan(const PotentialParams& params, double eps_min, double eps_max, int steps,
               scatter::FluxConvention flux) {
    if (!(eps_min < eps_max)) throw std::domain_error("scan: eps_min must be below eps_max");
    if (steps < 2) throw std::domain_error("scan: steps must be >= 2");
    if (params.kind == model::CaseKind::DImaginary) {
        const double window = params.v * std::exp(-2.0 * params.mu);
        const bool penetrating = eps_min > -window && eps_max < 0.0;
        const bool free_states = eps_min > 0.0;
        if (!penetrating && !free_states) {
            std::ostringstream msg;
            msg << "scan: d -> i d windows must lie in (" << -window << ", 0) or (0, inf)";
            throw std::domain_error(msg.str());
        }
    }

    ScanTable table;
    table.params = params;
    table.rows.resize(static_cast<size_t>(steps) + 1);
    const double span = eps_max - eps_min;

    auto fill = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            const double eps = eps_min + span * i / steps;
            const ScatteringCoefficients c = coefficients_at(params, eps, flux);
            table.rows[static_cast<size_t>(i)] = {eps,      c.R_left, c.R_right,
                                                  c.T_left, c.defect, c.singular};
        }
    };

    const int rows = steps + 1;
    const int workers = std::min(worker_count(), rows);
    if (workers <= 1) {
        fill(0, rows);
        return table;
    }
    std::vector<std::future<void>> jobs;
    const int chunk = (rows + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * chunk;
        const int end = std::min(rows, begin + chunk);
        if (begin >= end) break;
        jobs.push_back(std::async(std::launch::async, fill, begin, end));
    }
    for (auto& j : jobs) j.get();
    return table;
}

FeatureScan find_reciprocity_points(const PotentialParams& params, Window window, int grid) {
    const ScanTable table = scan(params, window.lo, window.hi, grid);
    const double step = (window.hi - window.lo) / grid;
    FeatureScan out;

    bool everywhere = true;
    for (const ScanRow& row : table.rows) {
        if (row.singular || std::abs(row.R_left - row.R_right) >
                                1e-9 * std::max(1.0, row.R_left + row.R_right)) {
            everywhere = false;
            break;
        }
    }
    if (everywhere) {
        out.degenerate_everywhere = true;
        return out;
    }

    auto f = [&](double eps) {
        const ScatteringCoefficients c = plain_coefficients(params, eps);
        return c.R_left - c.R_right;
    };
    for (size_t i = 1; i < table.rows.size(); ++i) {
        const ScanRow& a = table.rows[i - 1];
        const ScanRow& b = table.rows[i];
        if (a.singular || b.singular) continue;
        const double fa = a.R_left - a.R_right, fb = b.R_left - b.R_right;
        if (!(fa * fb < 0.0)) continue;
        const double root = bisect(f, a.epsilon, b.epsilon, fa);
        const ScatteringCoefficients c = plain_coefficients(params, root);
        const double residual = std::abs(c.R_left - c.R_right);
        // a sign flip across a reflection pole is not a reciprocity point;
        // genuine crossings bisect to a vanishing residual
        if (!(residual <= 1e-10 * std::max(1.0, c.R_left + c.R_right))) continue;
        out.points.push_back({FeatureKind::Reciprocity, root, residual, true,
                              near_boundary(root, window, step)});
    }
    sort_points(out.points);
    return out;
}

std::vector<double> direct_singularity_roots(const PotentialParams& params, Window window) {
    std::vector<double> roots;
    auto push_if_inside = [&](double eps) {
        if (eps >= window.lo && eps < window.hi) roots.push_back(eps);
    };
    if (params.kind == model::CaseKind::MuImaginary) {
        // Gamma(i k_minus) numerator pole at k_minus = i m; along the real
        // energy axis the closest approach is eps = v cos 2 mu - m^2.
        const double base = params.v * std::cos(2.0 * params.mu);
        for (int m = 1; base - m * m >= window.lo - 1.0; ++m) push_if_inside(base - m * m);
    } else if (params.kind == model::CaseKind::DImaginary) {
        // Gamma(-k_minus) numerator pole at k_minus = m, hit exactly.
        const double base = params.v * std::exp(-2.0 * params.mu);
        for (int m = 1; base + m * m < window.hi + 1.0; ++m) push_if_inside(base + m * m);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

FeatureScan find_spectral_singularities(const PotentialParams& params, Window window, int grid,
                                        double peak_threshold) {
    const ScanTable table = scan(params, window.lo, window.hi, grid);
    const double step = (window.hi - window.lo) / grid;
    FeatureScan out;

    // maximise R_left; infinities (exact poles) order above every finite value
    auto higher = [](double a, double b) {
        if (std::isinf(a)) return false;
        if (std::isinf(b)) return true;
        return a < b;
    };
    auto f = [&](double eps) { return r_left_at(params, eps); };

    for (size_t i = 1; i + 1 < table.rows.size(); ++i) {
        const double prev = table.rows[i - 1].R_left;
        const double here = table.rows[i].R_left;
        const double next = table.rows[i + 1].R_left;
        if (std::isnan(here)) continue;
        const bool is_peak =
            std::isinf(here) || (here >= prev && here > next) || (here > prev && here >= next);
        if (!is_peak) continue;
        if (!std::isinf(here) && !(here > peak_threshold)) continue;
        const double refined = golden_refine(f, table.rows[i - 1].epsilon,
                                             table.rows[i + 1].epsilon, higher, 1e-12);
        const double value = f(refined);
        const double residual = std::isinf(value) ? 0.0 : 1.0 / value;
        out.points.push_back({FeatureKind::SpectralSingularity, refined, residual,
                              residual < 1e-6, near_boundary(refined, window, step)});
    }

    // merge unmatched analytic pole-condition roots
    for (double root : direct_singularity_roots(params, window)) {
        bool matched = false;
        for (const FeaturePoint& p : out.points)
            if (std::abs(p.epsilon - root) < std::max(1e-6, 2.0 * step)) matched = true;
        if (matched) continue;
        const double value = f(root);
        const double residual = std::isinf(value) ? 0.0 : 1.0 / std::max(value, 1e-300);
        out.points.push_back({FeatureKind::SpectralSingularity, root, residual, residual < 1e-6,
                              near_boundary(root, window, step)});
    }
    sort_points(out.points);
    return out;
}

namespace {

struct InvisibleCandidate {
    double epsilon;
    double residual;
};

std::vector<InvisibleCandidate> reflection_zeros(const PotentialParams& params, Window window,
                                                 int grid, bool right_side) {
    const ScanTable table = scan(params, window.lo, window.hi, grid);
    auto value = [&](const ScanRow& r) { return right_side ? r.R_right : r.R_left; };
    auto f = [&](double eps) {
        const ScatteringCoefficients c = plain_coefficients(params, eps);
        return right_side ? c.R_right : c.R_left;
    };
    auto lower = [](double a, double b) {
        if (std::isnan(a)) return true;
        if (std::isnan(b)) return false;
        return a > b;  // "better" = smaller
    };
    std::vector<InvisibleCandidate> zeros;
    for (size_t i = 1; i + 1 < table.rows.size(); ++i) {
        const double here = value(table.rows[i]);
        if (!(here < 5e-2)) continue;  // cheap prefilter; true zeros dive below this
        if (!(here <= value(table.rows[i - 1]) && here < value(table.rows[i + 1]))) continue;
        const double refined = golden_refine(f, table.rows[i - 1].epsilon,
                                             table.rows[i + 1].epsilon, lower, 1e-13);
        zeros.push_back({refined, f(refined)});
    }
    return zeros;
}

} // namespace

FeatureScan find_invisibility_points(const PotentialParams& params, InvisibilitySide side,
                                     Window window, int grid) {
    FeatureScan out;
    const double step = (window.hi - window.lo) / grid;
    auto transparent = [&](double eps) {
        return std::abs(plain_coefficients(params, eps).T_left - 1.0) < 1e-3;
    };

    if (side == InvisibilitySide::Left || side == InvisibilitySide::Right) {
        const bool right = side == InvisibilitySide::Right;
        for (const InvisibleCandidate& z : reflection_zeros(params, window, grid, right)) {
            if (!(z.residual < 1e-8) || !transparent(z.epsilon)) continue;
            out.points.push_back({right ? FeatureKind::InvisibleRight : FeatureKind::InvisibleLeft,
                                  z.epsilon, z.residual, true,
                                  near_boundary(z.epsilon, window, step)});
        }
        sort_points(out.points);
        return out;
    }

    // Both: pair each left zero with the nearest right zero and refine the
    // joint residual max(R_l, R_r) across the pair's span. The two zeros of
    // a bidirectional point are distinct but close; their joint residual at
    // the combined minimum is the coincidence measure.
    const auto left = reflection_zeros(params, window, grid, false);
    const auto right = reflection_zeros(params, window, grid, true);
    auto joint = [&](double eps) {
        const ScatteringCoefficients c = plain_coefficients(params, eps);
        return std::max(c.R_left, c.R_right);
    };
    auto lower = [](double a, double b) { return a > b; };
    for (const InvisibleCandidate& zl : left) {
        const InvisibleCandidate* partner = nullptr;
        for (const InvisibleCandidate& zr : right)
            if (!partner ||
                std::abs(zr.epsilon - zl.epsilon) < std::abs(partner->epsilon - zl.epsilon))
                partner = &zr;
        if (!partner) continue;
        const double pair_gap = std::abs(partner->epsilon - zl.epsilon);
        if (pair_gap > std::max(0.02, 10.0 * step)) continue;
        const double lo = std::min(zl.epsilon, partner->epsilon) - step;
        const double hi = std::max(zl.epsilon, partner->epsilon) + step;
        const double at = golden_refine(joint, lo, hi, lower, 1e-13);
        const double residual = joint(at);
        if (!(residual < 1e-6) || !transparent(at)) continue;
        out.points.push_back({FeatureKind::InvisibleBidirectional, at, residual, true,
                              near_boundary(at, window, step)});
    }
    sort_points(out.points);
    return out;
}

FeatureScan find_unitarity_points(const PotentialParams& params, Window window, int grid) {
    const ScanTable table = scan(params, window.lo, window.hi, grid);
    const double step = (window.hi - window.lo) / grid;
    FeatureScan out;

    // sustained restoration across the top decile of the window
    const size_t tail_begin = table.rows.size() - std::max<size_t>(1, table.rows.size() / 10);
    bool restored = true;
    for (size_t i = tail_begin; i < table.rows.size(); ++i)
        if (table.rows[i].singular || std::abs(table.rows[i].defect) >= 1e-3) restored = false;
    out.asymptotic_restoration = restored;

    bool everywhere = true;
    for (const ScanRow& row : table.rows) {
        if (row.singular || std::abs(row.defect) > 1e-9 * std::max(1.0, row.R_left + row.T)) {
            everywhere = false;
            break;
        }
    }
    if (everywhere) {
        out.degenerate_everywhere = true;
        return out;
    }

    auto f = [&](double eps) { return plain_coefficients(params, eps).defect; };
    for (size_t i = 1; i < table.rows.size(); ++i) {
        const ScanRow& a = table.rows[i - 1];
        const ScanRow& b = table.rows[i];
        if (a.singular || b.singular) continue;
        if (!(a.defect * b.defect < 0.0)) continue;
        const double root = bisect(f, a.epsilon, b.epsilon, a.defect);
        const ScatteringCoefficients c = plain_coefficients(params, root);
        const double residual = std::abs(c.defect);
        // defect divergences are one-signed, so every sign change is a
        // genuine root; the bound only screens bisection breakdowns on
        // extremely steep flanks
        if (!(residual <= 1e-6 * std::max(1.0, c.R_left + c.T_left))) continue;
        out.points.push_back({FeatureKind::Unitarity, root, residual, true,
                              near_boundary(root, window, step)});
    }

    sort_points(out.points);
    return out;
}

} // namespace ptscatter::analysis
