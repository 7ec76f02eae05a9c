#include "cglasso/cgl.hpp"

#include <limits>

namespace cglasso {

PenaltyWeights weights_from_partition(const Partition& partition,
                                      const std::vector<double>& lambdas) {
  const std::size_t k = partition.clusters().size();
  if (lambdas.size() != k) {
    throw LengthMismatch("weights_from_partition lambdas", lambdas.size(), k);
  }
  const int p = partition.p();
  Matrix w = Matrix::Constant(p, p, std::numeric_limits<double>::infinity());
  for (std::size_t c = 0; c < k; ++c) {
    for (int i : partition.cluster(static_cast<int>(c))) {
      for (int j : partition.cluster(static_cast<int>(c))) {
        w(i, j) = lambdas[c];
      }
    }
  }
  w.diagonal().setZero();
  return PenaltyWeights::entrywise(std::move(w));
}

static std::vector<double> broadcast_lambdas(const std::vector<double>& in,
                                             std::size_t k) {
  if (in.size() == 1) return std::vector<double>(k, in[0]);
  if (in.size() != k) {
    throw LengthMismatch("cgl lambdas", in.size(), k);
  }
  return in;
}

CglFit run_cgl_with_partition(const SymmetricMatrix& s,
                              const Partition& partition,
                              const std::vector<double>& lambdas,
                              const GlassoConfig& glasso_cfg) {
  const int p = s.dim();
  if (partition.p() != p) {
    throw DimensionMismatch("run_cgl partition", p, partition.p());
  }
  auto lam = broadcast_lambdas(lambdas, partition.clusters().size());

  Matrix theta = Matrix::Zero(p, p);
  std::vector<GlassoFit> fits;
  fits.reserve(partition.clusters().size());
  for (int c = 0; c < partition.size(); ++c) {
    const auto& idx = partition.cluster(c);
    try {
      GlassoFit fit = solve(s.submatrix(idx), PenaltyWeights::scalar(lam[c]),
                            glasso_cfg);
      const int m = static_cast<int>(idx.size());
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          theta(idx[a], idx[b]) = fit.theta(a, b);
        }
      }
      fits.push_back(std::move(fit));
    } catch (const Error& e) {
      throw ClusterSolveError(c, e.what());
    }
  }
  return CglFit{partition, std::move(fits), SymmetricMatrix(std::move(theta)),
                std::move(lam)};
}

CglFit run_cgl(const SymmetricMatrix& s, const SimilarityMatrix& sim,
               const CglConfig& cfg) {
  if (s.dim() != sim.dim()) {
    throw DimensionMismatch("run_cgl", s.dim(), sim.dim());
  }
  if (cfg.k < 1 || cfg.k > s.dim()) throw InvalidK(cfg.k, s.dim());
  Partition partition = cut_k(agglomerate(sim, cfg.linkage), cfg.k);
  return run_cgl_with_partition(s, partition, cfg.lambdas, cfg.glasso_cfg);
}

}  // namespace cglasso
