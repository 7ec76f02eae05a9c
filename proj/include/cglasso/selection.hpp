#pragma once

#include <cstdint>
#include <vector>

#include "cglasso/hclust.hpp"
#include "cglasso/types.hpp"

namespace cglasso {

struct SelectKConfig {
  std::vector<int> k_candidates;  // ascending, all in [1, p]
  int t_repeats = 10;
  LinkageMethod linkage = LinkageMethod::kAverage;
  std::uint64_t seed = 0;
};

struct SelectKResult {
  struct Row {
    int k;
    double m_k;  // mean held-out MSE over repeats
    double s_k;  // standard error (sample SD / sqrt(T))
  };
  int chosen_k = 0;
  std::vector<Row> table;
  double missing_fraction_per_repeat = 0.0;
  int degenerate_retries = 0;
};

// Cross-validation-style choice of the cluster count: per repeat, hide a
// random set of off-diagonal pairs of sim, impute them from row/column
// means, cluster the imputed matrix at each candidate k, rebuild a
// block-constant approximation from the cluster structure, and score the
// held-out squared error.  Picks the smallest k whose mean error is within
// 1.5 standard errors of the next candidate's; falls back to the largest
// candidate when no k qualifies.
SelectKResult select_k(const SimilarityMatrix& sim, const SelectKConfig& cfg);

// Probability-alpha bound on falsely joining two separated components:
// lambda = (max_{i<j} S_ii S_jj) * t / sqrt(n - 2 + t^2) with t the upper
// alpha/(2 p^2) quantile of Student's t with n-2 degrees of freedom.
double banerjee_lambda(const SymmetricMatrix& s, long n, double alpha);

// Per-cluster penalties just under the split threshold: for each cluster,
// lambda_k = max(lambda_bar_k - epsilon, 0) with lambda_bar_k the final
// single-linkage merge height inside the cluster.  Singleton clusters get 0.
std::vector<double> corollary_lambdas(const SimilarityMatrix& s_tilde,
                                      const Partition& partition,
                                      double epsilon);

struct TheoryParams {
  double alpha_incoherence = 1.0;  // in (0, 1]
  double tau = 4.0;                // > 3
  double c2 = 1.0;                 // > 0
  double alpha_banerjee = 0.05;    // in (0, 1)
  double epsilon = 0.01;           // > 0
  void validate() const;
};

// lambda_k = (8 / alpha) * sqrt(c2 (tau log p_k + log 4) / n).
double theorem4_lambda(int p_k, long n, const TheoryParams& params);

}  // namespace cglasso
