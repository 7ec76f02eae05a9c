#include "cglasso/metrics.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <cmath>
#include <numeric>

#include "cglasso/covariance.hpp"
#include "cglasso/rng.hpp"
#include "cglasso/simgen.hpp"

namespace cglasso {

double precision_mse(const SymmetricMatrix& theta_hat,
                     const SymmetricMatrix& theta_true) {
  if (theta_hat.dim() != theta_true.dim()) {
    throw DimensionMismatch("precision_mse", theta_hat.dim(),
                            theta_true.dim());
  }
  const double p = theta_hat.dim();
  return (theta_hat.mat() - theta_true.mat()).squaredNorm() / (p * p);
}

EdgeConfusion edge_confusion(const SymmetricMatrix& theta_hat,
                             const SymmetricMatrix& theta_true,
                             double zero_tol) {
  if (theta_hat.dim() != theta_true.dim()) {
    throw DimensionMismatch("edge_confusion", theta_hat.dim(),
                            theta_true.dim());
  }
  if (zero_tol < 0.0) throw InvalidArgument("zero_tol must be >= 0");
  EdgeConfusion c;
  const int p = theta_hat.dim();
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const bool est = std::abs(theta_hat(i, j)) > zero_tol;
      const bool truth = theta_true(i, j) != 0.0;
      if (est && truth) ++c.tp;
      if (est && !truth) ++c.fp;
      if (!est && truth) ++c.fn;
      if (!est && !truth) ++c.tn;
    }
  }
  c.tpr = (c.tp + c.fn) > 0 ? static_cast<double>(c.tp) / (c.tp + c.fn) : 0.0;
  c.fpr = (c.fp + c.tn) > 0 ? static_cast<double>(c.fp) / (c.fp + c.tn) : 0.0;
  return c;
}

bool partition_match(const Partition& a, const Partition& b) {
  if (a.p() != b.p()) throw DimensionMismatch("partition_match", a.p(), b.p());
  return a == b;  // both canonical
}

double incoherence(const SymmetricMatrix& sigma_block,
                   const std::set<std::pair<int, int>>& edges) {
  const int pk = sigma_block.dim();
  constexpr int kLimit = 15;
  if (pk > kLimit) throw BlockTooLarge(pk, kLimit);

  // F: both orientations of every edge plus the diagonal pairs, as
  // row-major indices into the pk^2-dimensional Kronecker space.
  std::vector<bool> in_f(static_cast<std::size_t>(pk) * pk, false);
  for (int j = 0; j < pk; ++j) in_f[j * pk + j] = true;
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= pk || j >= pk || i == j) {
      throw InvalidArgument("incoherence edge outside the block");
    }
    in_f[i * pk + j] = true;
    in_f[j * pk + i] = true;
  }
  std::vector<int> f_idx, e_idx;
  for (int a = 0; a < pk * pk; ++a) {
    (in_f[a] ? f_idx : e_idx).push_back(a);
  }
  if (e_idx.empty()) return 0.0;

  const Matrix& sig = sigma_block.mat();
  auto gamma = [&](int a, int b) {
    // (Sigma (x) Sigma)_{(i1 j1), (i2 j2)} = Sigma_{i1 i2} Sigma_{j1 j2}.
    return sig(a / pk, b / pk) * sig(a % pk, b % pk);
  };

  const int nf = static_cast<int>(f_idx.size());
  Matrix gff(nf, nf);
  for (int a = 0; a < nf; ++a) {
    for (int b = 0; b < nf; ++b) gff(a, b) = gamma(f_idx[a], f_idx[b]);
  }
  Eigen::FullPivLU<Matrix> lu(gff);
  if (!lu.isInvertible()) throw SingularGamma();

  double worst = 0.0;
  Vector row(nf);
  for (int e : e_idx) {
    for (int b = 0; b < nf; ++b) row(b) = gamma(e, f_idx[b]);
    // ||Gamma_eF Gamma_FF^{-1}||_1 with symmetric Gamma_FF.
    worst = std::max(worst, lu.solve(row).cwiseAbs().sum());
  }
  return worst;
}

double theta_min_of(const SimulationTruth& truth) {
  if (truth.edge_set.empty()) throw EmptyEdgeSet();
  return truth.theta_min;
}

SymmetricMatrix equicorrelation_sigma(const std::vector<int>& block_sizes,
                                      double within_correlation) {
  const int p = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (p < 1) throw InvalidArgument("empty design");
  Matrix sigma = Matrix::Identity(p, p);
  int offset = 0;
  for (int m : block_sizes) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j) sigma(offset + i, offset + j) = within_correlation;
      }
    }
    offset += m;
  }
  return SymmetricMatrix(std::move(sigma));
}

double component_recovery_rate(LinkageMethod linkage,
                               const SymmetricMatrix& sigma_true,
                               const Partition& partition_true, long n,
                               int replicates, std::uint64_t seed) {
  if (replicates < 1) throw InvalidArgument("replicates must be >= 1");
  if (sigma_true.dim() != partition_true.p()) {
    throw DimensionMismatch("component_recovery_rate", sigma_true.dim(),
                            partition_true.p());
  }
  const int p = sigma_true.dim();
  Eigen::LLT<Matrix> llt(sigma_true.mat());
  if (llt.info() != Eigen::Success) {
    throw FactorizationFailed("component_recovery_rate");
  }
  Matrix l = llt.matrixL();
  const int k_true = partition_true.size();

  int hits = 0;
  for (int rep = 0; rep < replicates; ++rep) {
    Rng rng = Rng::stream(seed, "recovery", rep);
    Matrix x(n, p);
    Vector z(p);
    for (long r = 0; r < n; ++r) {
      for (int j = 0; j < p; ++j) z(j) = rng.normal();
      x.row(r) = (l * z).transpose();
    }
    const auto sim = similarity_matrix(
        empirical_covariance(standardize(DataMatrix(std::move(x)))));
    const Partition est = cut_k(agglomerate(sim, linkage), k_true);
    if (est == partition_true) ++hits;
  }
  return static_cast<double>(hits) / replicates;
}

}  // namespace cglasso
