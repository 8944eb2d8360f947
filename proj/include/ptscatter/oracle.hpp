#pragma once

#include "ptscatter/model.hpp"

#include <complex>
#include <vector>

namespace ptscatter::oracle {

using Complex = std::complex<double>;

enum class Side { LeftIncidence, RightIncidence };

struct IntegrationConfig {
    double half_domain = 15.0;  // L, in z units; must be >= 8
    double rel_tol = 1e-10;
    double max_step = 0.5;
    Side side = Side::LeftIncidence;
};

struct OracleAmplitudes {
    Complex r{0.0, 0.0};
    Complex t{1.0, 0.0};
    double condition = 1.0;          // matching conditioning estimate
    bool ill_conditioned_warning = false;  // |Im k| L > 30 on either channel
};

/// Direct integration of psi'' = (U(z) - eps) psi across [-L, L] with an
/// outgoing seed on the far side, decomposed into incident/reflected waves on
/// the near side. U is the effective real-line potential of the case (the
/// inverted barrier for DImaginary penetrating states).
/// Throws std::domain_error for unsupported regimes (DImaginary free states)
/// and std::runtime_error when the matching is too ill-conditioned
/// (condition > 1e12) or the solution overflows.
OracleAmplitudes integrate_scattering(const model::PotentialParams& params, double eps,
                                      const IntegrationConfig& config = {});

/// Eigenvalues of the finite-difference Hamiltonian -d2/dz2 + U(z) on
/// [-box, box] with Dirichlet ends and grid_n interior points (3-point
/// Laplacian). Returns the discrete levels, i.e. eigenvalues whose
/// eigenvector is localised inside the box (edge weight below 1e-3), sorted
/// by real part. For mu > pi/4 these can sit above Re(v cos 2mu); the
/// box-discretised continuum states are told apart by their delocalisation
/// and their Im ~ +-v sin(2 mu). Seeds come from a dense solve on a coarse
/// grid and are refined by shifted inverse iteration on the full grid.
/// Requires MuImaginary and grid_n <= 4000.
std::vector<Complex> bound_oracle(const model::PotentialParams& params, int grid_n,
                                  double box = 12.0);

/// Eigenvalue lists at grid_n, grid_n/2 and grid_n/4 sharing one coarse seed
/// pass, for stencil-bias extrapolation and convergence checks.
struct BoundOracleLevels {
    std::vector<Complex> fine, half, quarter;
};
BoundOracleLevels bound_oracle_levels(const model::PotentialParams& params, int grid_n,
                                      double box = 12.0);

} // namespace ptscatter::oracle
