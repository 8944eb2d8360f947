#pragma once

#include "ptscatter/model.hpp"
#include "ptscatter/scatter.hpp"

#include <vector>

namespace ptscatter::analysis {

/// Energy window, half-open [lo, hi) for feature classification; features
/// landing within one grid step of an endpoint carry the boundary flag.
struct Window {
    double lo;
    double hi;
};

struct ScanRow {
    double epsilon;
    double R_left;
    double R_right;
    double T;
    double defect;
    bool singular;
};

struct ScanTable {
    model::PotentialParams params;
    std::vector<ScanRow> rows;
};

/// Dense coefficient scan with steps+1 rows, parallelised over grid chunks.
/// PTSCATTER_THREADS caps the worker count; output is identical for any
/// worker count. Singular rows are flagged, never dropped. For the
/// d -> i d case the window must stay inside one regime; violations raise
/// std::domain_error naming the valid windows.
ScanTable scan(const model::PotentialParams& params, double eps_min, double eps_max, int steps,
               scatter::FluxConvention flux = scatter::FluxConvention::AmplitudeSquared);

enum class FeatureKind {
    Reciprocity,
    SpectralSingularity,
    InvisibleLeft,
    InvisibleRight,
    InvisibleBidirectional,
    Unitarity,
};

const char* feature_kind_name(FeatureKind k);

struct FeaturePoint {
    FeatureKind kind;
    double epsilon;
    double residual;
    bool refined;
    bool boundary = false;
};

struct FeatureScan {
    /// Set when the defining residual vanishes at every grid point (the
    /// Hermitian limit for reciprocity and unitarity): no discrete points
    /// are reported in that case.
    bool degenerate_everywhere = false;
    /// Unitarity only: |defect| < 1e-3 sustained across the top decile of
    /// the window.
    bool asymptotic_restoration = false;
    std::vector<FeaturePoint> points;
};

/// Roots of R_left - R_right, bisected to machine precision.
FeatureScan find_reciprocity_points(const model::PotentialParams& params, Window window,
                                    int grid);

/// Local maxima of R_left above peak_threshold, refined by golden-section on
/// log R, merged with the analytic pole-condition roots (numerator Gamma
/// argument at a non-positive integer).
FeatureScan find_spectral_singularities(const model::PotentialParams& params, Window window,
                                        int grid, double peak_threshold = 1e3);

/// Analytic pole-condition energies inside the window (exact for the
/// d -> i d free states, nearest real energies to the complex poles for the
/// mu -> i mu case).
std::vector<double> direct_singularity_roots(const model::PotentialParams& params, Window window);

enum class InvisibilitySide { Left, Right, Both };

/// Zeros of the chosen reflection coefficient: grid minima refined by
/// golden-section, qualifying when the refined reflection falls below 1e-8
/// and |T - 1| < 1e-3. Both: left/right zero pairs whose joint residual
/// max(R_l, R_r) dips below 1e-6 at the combined minimum.
FeatureScan find_invisibility_points(const model::PotentialParams& params, InvisibilitySide side,
                                     Window window, int grid);

/// Roots of the unitarity defect R_left + T - 1.
FeatureScan find_unitarity_points(const model::PotentialParams& params, Window window, int grid);

} // namespace ptscatter::analysis
