#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "cglasso/types.hpp"

namespace cglasso {

struct SimulationTruth {
  SymmetricMatrix theta_true;
  SymmetricMatrix sigma_true;
  Partition partition_true;
  std::set<std::pair<int, int>> edge_set;  // unordered pairs i < j
  double theta_min = 0.0;                  // smallest |theta_ij| over edges
  double sparsity_s = 0.0;
  double off_block_fraction = 0.0;
  std::uint64_t seed = 0;
  // Off-diagonal draw before the diagonal positive-definiteness fix;
  // retained so off-block perturbation can be applied at the right stage.
  Matrix raw_off_diagonal;
};

// Block-diagonal sparse precision matrix: within each block the
// off-diagonals are Unif(0.25, 0.75) with probability (1-s)*0.75,
// Unif(-0.75, -0.25) with probability (1-s)*0.25, and zero otherwise; the
// diagonal is then set to max(-e_min, 0) + 0.1 with e_min the smallest
// eigenvalue of the assembled off-diagonal matrix.
SimulationTruth generate_precision(const std::vector<int>& block_sizes,
                                   double s, std::uint64_t rng_seed);

// Replaces round(fraction * #off-block unordered pairs) randomly chosen
// off-block pairs (round half to even) with Unif(-0.5, 0.5) draws in the
// pre-fix matrix, then re-applies the diagonal fix.  The nominal block
// partition is retained; the edge set is recomputed from the new support.
SimulationTruth perturb_off_block(const SimulationTruth& truth,
                                  double fraction, std::uint64_t rng_seed);

// n iid rows from N(0, theta_true^{-1}) via the Cholesky factor of Sigma.
DataMatrix sample_mvn(const SimulationTruth& truth, long n,
                      std::uint64_t rng_seed);

}  // namespace cglasso
