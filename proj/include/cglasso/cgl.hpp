#pragma once

#include <vector>

#include "cglasso/glasso.hpp"
#include "cglasso/hclust.hpp"
#include "cglasso/types.hpp"

namespace cglasso {

struct CglConfig {
  LinkageMethod linkage = LinkageMethod::kAverage;
  int k = 1;
  // One lambda per cluster (length k) or a single shared lambda.
  std::vector<double> lambdas = {0.0};
  GlassoConfig glasso_cfg = {};
};

struct CglFit {
  Partition partition;
  std::vector<GlassoFit> per_cluster;
  SymmetricMatrix theta;  // p x p block-diagonal assembly
  std::vector<double> lambdas_used;
};

// Entrywise weight matrix: lambda_k inside cluster k (off-diagonal),
// +infinity across clusters, 0 on the diagonal.
PenaltyWeights weights_from_partition(const Partition& partition,
                                      const std::vector<double>& lambdas);

// Cluster graphical lasso: cluster the features on sim, solve the
// graphical lasso on each cluster's principal submatrix of s, and
// assemble the block-diagonal estimate.
CglFit run_cgl(const SymmetricMatrix& s, const SimilarityMatrix& sim,
               const CglConfig& cfg);

// Same pipeline with a precomputed partition (skips the clustering step).
CglFit run_cgl_with_partition(const SymmetricMatrix& s,
                              const Partition& partition,
                              const std::vector<double>& lambdas,
                              const GlassoConfig& glasso_cfg = {});

}  // namespace cglasso
