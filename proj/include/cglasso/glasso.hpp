#pragma once

#include <vector>

#include "cglasso/types.hpp"

namespace cglasso {

// Off-diagonal penalty weights: a single scalar lambda or an entrywise
// symmetric matrix.  Matrix weights may contain +infinity off the diagonal
// (a structural zero); the diagonal is always unpenalized (weight 0).
class PenaltyWeights {
 public:
  static PenaltyWeights scalar(double lambda);
  static PenaltyWeights entrywise(Matrix w);

  bool is_scalar() const { return is_scalar_; }
  double scalar_value() const { return lambda_; }
  int dim() const { return is_scalar_ ? -1 : static_cast<int>(w_.rows()); }

  // Weight for entry (i, j); 0 when i == j.
  double at(int i, int j) const {
    if (i == j) return 0.0;
    return is_scalar_ ? lambda_ : w_(i, j);
  }

 private:
  PenaltyWeights() = default;
  bool is_scalar_ = true;
  double lambda_ = 0.0;
  Matrix w_;
};

struct GlassoConfig {
  double tol = 1e-6;
  int max_sweeps = 500;
  double inner_tol = 1e-8;
  int inner_max_iter = 1000;
  // Connected-component screening before the sweeps.  Disabling it is a
  // debug path: infinite-weight blocks are still split structurally.
  bool screening = true;
};

struct GlassoFit {
  SymmetricMatrix theta;      // estimated precision matrix
  SymmetricMatrix sigma_hat;  // W = theta^{-1} as maintained by the solver
  double objective = 0.0;
  double kkt_residual = 0.0;
  int sweeps = 0;
  bool converged = false;
  // Assembled objective after initialization and after each sweep.
  std::vector<double> objective_trace;
};

// Connected components of the graph with adjacency 1(|s_ij| > lambda),
// self-loops implied.
Partition threshold_components(const SymmetricMatrix& s, double lambda);

// Entrywise generalization: edge kept iff |s_ij| > w_ij.
Partition threshold_components(const SymmetricMatrix& s,
                               const PenaltyWeights& w);

// -log det(theta) + tr(s * theta) + sum_{i != j} w_ij |theta_ij|.
// Returns +infinity if an infinitely weighted entry of theta is nonzero.
double objective(const SymmetricMatrix& theta, const SymmetricMatrix& s,
                 const PenaltyWeights& w);

// Minimizes the weighted penalized negative log likelihood by
// block-coordinate descent over columns of theta, with an l1 inner
// subproblem solved by cyclic coordinate descent.  Screened blocks are
// solved independently.
GlassoFit solve(const SymmetricMatrix& s, const PenaltyWeights& w,
                const GlassoConfig& cfg = {});

}  // namespace cglasso
