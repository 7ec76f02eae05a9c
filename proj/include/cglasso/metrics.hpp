#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "cglasso/hclust.hpp"
#include "cglasso/types.hpp"

namespace cglasso {

struct SimulationTruth;

// Confusion counts over unordered off-diagonal pairs.
struct EdgeConfusion {
  long tp = 0, fp = 0, tn = 0, fn = 0;
  double tpr = 0.0;  // tp / (tp + fn), 0 if no true edges
  double fpr = 0.0;  // fp / (fp + tn), 0 if no true non-edges
};

// Sum of squared entry differences divided by p^2 (all entries, both
// triangles plus the diagonal).
double precision_mse(const SymmetricMatrix& theta_hat,
                     const SymmetricMatrix& theta_true);

// A pair counts as estimated nonzero iff |theta_hat_ij| > zero_tol.
EdgeConfusion edge_confusion(const SymmetricMatrix& theta_hat,
                             const SymmetricMatrix& theta_true,
                             double zero_tol = 1e-8);

// True iff the partitions are identical as sets of sets.
bool partition_match(const Partition& a, const Partition& b);

// Assumption-1 diagnostic: with Gamma = Sigma (x) Sigma and F the edge set
// plus diagonal index pairs, returns max over e outside F of
// ||Gamma_eF Gamma_FF^{-1}||_1 (0 when no index pair lies outside F).
// Guarded to block dimension <= 15 since Gamma has p_k^4 entries.
double incoherence(const SymmetricMatrix& sigma_block,
                   const std::set<std::pair<int, int>>& edges);

// Smallest |theta_ij| over the true edge set.
double theta_min_of(const SimulationTruth& truth);

// Equicorrelation block design for recovery experiments: unit diagonal,
// within_correlation inside each block, zero across blocks.
SymmetricMatrix equicorrelation_sigma(const std::vector<int>& block_sizes,
                                      double within_correlation);

// Monte-Carlo fraction of replicates in which clustering the absolute
// empirical covariance at the true K recovers the true partition exactly.
double component_recovery_rate(LinkageMethod linkage,
                               const SymmetricMatrix& sigma_true,
                               const Partition& partition_true, long n,
                               int replicates, std::uint64_t seed);

}  // namespace cglasso
