#include "cglasso/glasso.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <unordered_map>

namespace cglasso {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double soft_threshold(double z, double gamma) {
  if (std::isinf(gamma)) return 0.0;
  if (z > gamma) return z - gamma;
  if (z < -gamma) return z + gamma;
  return 0.0;
}

double log_det_spd(const Matrix& m, const char* where) {
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite(where);
  }
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Partition components_from_adjacency(
    int p, const std::function<bool(int, int)>& adjacent) {
  UnionFind uf(p);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (adjacent(i, j)) uf.unite(i, j);
    }
  }
  std::unordered_map<int, int> root_to_label;
  std::vector<int> labels(p);
  for (int i = 0; i < p; ++i) {
    auto [it, inserted] = root_to_label.emplace(
        uf.find(i), static_cast<int>(root_to_label.size()));
    labels[i] = it->second;
  }
  return Partition::from_labels(labels);
}

struct BlockResult {
  Matrix theta;
  Matrix w;
  std::vector<double> objective_trace;
  int sweeps = 0;
  bool converged = false;
};

double block_objective(const Matrix& theta, const Matrix& s,
                       const Matrix& weights) {
  double pen = 0.0;
  const int m = static_cast<int>(theta.rows());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && theta(i, j) != 0.0) pen += weights(i, j) * std::abs(theta(i, j));
    }
  }
  return -log_det_spd(theta, "glasso sweep") +
         s.cwiseProduct(theta).sum() + pen;
}

// Primal column-wise coordinate descent on one irreducible block.
// Partitioning theta = [[Theta11, t12], [t12^T, t22]] and profiling out t22
// gives, per column, the l1 problem
//   min_u  (s22/2) u^T M u + s12^T u + sum_i w_i |u_i|,   M = Theta11^{-1},
// with the closed-form t22 = 1/s22 + u^T M u.  M is read off the maintained
// inverse W via the Schur complement, and W is refreshed exactly by the
// block-inverse formulas after each column, so W == theta^{-1} throughout
// and the objective decreases at every column update.
BlockResult solve_block(const Matrix& s, const Matrix& weights,
                        const GlassoConfig& cfg) {
  const int m = static_cast<int>(s.rows());
  BlockResult res;
  if (m == 1) {
    res.theta = Matrix::Constant(1, 1, 1.0 / s(0, 0));
    res.w = Matrix::Constant(1, 1, s(0, 0));
    res.converged = true;
    res.objective_trace.push_back(1.0 + std::log(s(0, 0)));
    return res;
  }

  Matrix theta = Matrix::Zero(m, m);
  Matrix w = Matrix::Zero(m, m);
  theta.diagonal() = s.diagonal().cwiseInverse();
  w.diagonal() = s.diagonal();

  res.objective_trace.push_back(block_objective(theta, s, weights));

  double norm = 0.0;
  {
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j) sum += std::abs(s(i, j));
      }
    }
    norm = sum / (static_cast<double>(m) * (m - 1));
    if (norm == 0.0) norm = 1.0;
  }
  const double norm_diag = s.diagonal().cwiseAbs().mean();

  Matrix sub(m - 1, m - 1);  // M = Theta11^{-1} workspace
  Vector u(m - 1), s12(m - 1), wcol(m - 1), q(m - 1), v(m - 1);

  for (int sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
    Matrix w_prev = w;
    for (int j = 0; j < m; ++j) {
      const double s22 = s(j, j);
      const double w22 = w(j, j);
      // Gather the j-deleted views.
      for (int a = 0, i = 0; i < m; ++i) {
        if (i == j) continue;
        s12(a) = s(i, j);
        wcol(a) = weights(i, j);
        u(a) = theta(i, j);
        for (int b = 0, k = 0; k < m; ++k) {
          if (k == j) continue;
          sub(a, b) = w(i, k);
          ++b;
        }
        ++a;
      }
      // Schur complement: M = W11 - w12 w12^T / w22.
      Vector w12(m - 1);
      for (int a = 0, i = 0; i < m; ++i) {
        if (i == j) continue;
        w12(a++) = w(i, j);
      }
      sub.noalias() -= (w12 * w12.transpose()) / w22;

      q.noalias() = sub * u;
      for (int it = 0; it < cfg.inner_max_iter; ++it) {
        double max_delta = 0.0;
        for (int i = 0; i < m - 1; ++i) {
          const double r = q(i) - sub(i, i) * u(i);
          const double z = -s12(i) - s22 * r;
          const double unew = soft_threshold(z, wcol(i)) / (s22 * sub(i, i));
          const double delta = unew - u(i);
          if (delta != 0.0) {
            q.noalias() += delta * sub.col(i);
            u(i) = unew;
            max_delta = std::max(max_delta, std::abs(delta));
          }
        }
        if (max_delta <= cfg.inner_tol) break;
      }

      // Exact refresh of v = M u guards against drift accumulated in q.
      v.noalias() = sub * u;
      const double t22 = 1.0 / s22 + u.dot(v);

      for (int a = 0, i = 0; i < m; ++i) {
        if (i == j) continue;
        theta(i, j) = theta(j, i) = u(a);
        ++a;
      }
      theta(j, j) = t22;

      // W = theta^{-1} via the block-inverse formulas (Schur t = 1/s22).
      w(j, j) = s22;
      for (int a = 0, i = 0; i < m; ++i) {
        if (i == j) continue;
        w(i, j) = w(j, i) = -v(a) * s22;
        ++a;
      }
      for (int a = 0, i = 0; i < m; ++i) {
        if (i == j) continue;
        for (int b = 0, k = 0; k < m; ++k) {
          if (k == j) continue;
          // s22 * (v(a) v(b)) keeps the update bitwise symmetric.
          w(i, k) = sub(a, b) + s22 * (v(a) * v(b));
          ++b;
        }
        ++a;
      }
    }

    res.sweeps = sweep;
    res.objective_trace.push_back(block_objective(theta, s, weights));

    // Off-diagonal change criterion, plus the same test on the diagonal:
    // in this primal scheme the off-diagonal of W can pin to its
    // soft-threshold value exactly while theta is still moving, and that
    // residual motion shows up on the diagonal of W.
    double change = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        if (i != k) change += std::abs(w(i, k) - w_prev(i, k));
      }
    }
    change /= static_cast<double>(m) * (m - 1);
    const double change_diag =
        (w.diagonal() - w_prev.diagonal()).cwiseAbs().mean();
    if (change <= cfg.tol * norm && change_diag <= cfg.tol * norm_diag) {
      res.converged = true;
      break;
    }
  }

  res.theta = std::move(theta);
  res.w = std::move(w);
  return res;
}

}  // namespace

PenaltyWeights PenaltyWeights::scalar(double lambda) {
  if (!(lambda >= 0.0)) {
    throw InvalidArgument("scalar penalty must be >= 0");
  }
  PenaltyWeights w;
  w.is_scalar_ = true;
  w.lambda_ = lambda;
  return w;
}

PenaltyWeights PenaltyWeights::entrywise(Matrix m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("PenaltyWeights", m.rows(), m.cols());
  }
  const int p = static_cast<int>(m.rows());
  for (int i = 0; i < p; ++i) {
    if (m(i, i) != 0.0) {
      throw InvalidArgument("penalty diagonal must be 0 (unpenalized)");
    }
    for (int j = 0; j < p; ++j) {
      double v = m(i, j);
      if (std::isnan(v) || v < 0.0) {
        throw InvalidArgument("penalty weights must be >= 0");
      }
      if (m(i, j) != m(j, i)) {
        throw NotSymmetric(std::abs(m(i, j) - m(j, i)));
      }
    }
  }
  PenaltyWeights w;
  w.is_scalar_ = false;
  w.w_ = std::move(m);
  return w;
}

Partition threshold_components(const SymmetricMatrix& s, double lambda) {
  return components_from_adjacency(s.dim(), [&](int i, int j) {
    return std::abs(s(i, j)) > lambda;
  });
}

Partition threshold_components(const SymmetricMatrix& s,
                               const PenaltyWeights& w) {
  if (!w.is_scalar() && w.dim() != s.dim()) {
    throw DimensionMismatch("threshold_components", s.dim(), w.dim());
  }
  return components_from_adjacency(s.dim(), [&](int i, int j) {
    return std::abs(s(i, j)) > w.at(i, j);
  });
}

double objective(const SymmetricMatrix& theta, const SymmetricMatrix& s,
                 const PenaltyWeights& w) {
  const int p = theta.dim();
  if (s.dim() != p) throw DimensionMismatch("objective", p, s.dim());
  if (!w.is_scalar() && w.dim() != p) {
    throw DimensionMismatch("objective weights", p, w.dim());
  }
  double pen = 0.0;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i == j || theta(i, j) == 0.0) continue;
      double wij = w.at(i, j);
      if (std::isinf(wij)) return kInf;
      pen += wij * std::abs(theta(i, j));
    }
  }
  return -log_det_spd(theta.mat(), "objective") +
         s.mat().cwiseProduct(theta.mat()).sum() + pen;
}

GlassoFit solve(const SymmetricMatrix& s, const PenaltyWeights& w,
                const GlassoConfig& cfg) {
  const int p = s.dim();
  if (!w.is_scalar() && w.dim() != p) {
    throw DimensionMismatch("solve weights", p, w.dim());
  }
  for (int j = 0; j < p; ++j) {
    if (!(s(j, j) > 0.0)) throw NonPositiveDiagonal(j);
  }

  // Screening: with it on, the threshold rule |s_ij| > w_ij; with it off,
  // only infinite weights split the problem.
  Partition blocks =
      cfg.screening
          ? threshold_components(s, w)
          : components_from_adjacency(
                p, [&](int i, int j) { return !std::isinf(w.at(i, j)); });

  Matrix theta = Matrix::Zero(p, p);
  Matrix sigma = Matrix::Zero(p, p);
  std::vector<std::vector<double>> traces;
  int sweeps = 0;
  bool converged = true;

  for (const auto& idx : blocks.clusters()) {
    const int m = static_cast<int>(idx.size());
    Matrix sb(m, m), wb(m, m);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        sb(a, b) = s(idx[a], idx[b]);
        wb(a, b) = w.at(idx[a], idx[b]);
      }
    }
    BlockResult r = solve_block(sb, wb, cfg);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        theta(idx[a], idx[b]) = r.theta(a, b);
        sigma(idx[a], idx[b]) = r.w(a, b);
      }
    }
    traces.push_back(std::move(r.objective_trace));
    sweeps = std::max(sweeps, r.sweeps);
    converged = converged && r.converged;
  }

  // Assembled per-sweep trace; shorter block traces are padded with their
  // final value.
  std::size_t len = 0;
  for (const auto& t : traces) len = std::max(len, t.size());
  std::vector<double> trace(len, 0.0);
  for (const auto& t : traces) {
    for (std::size_t i = 0; i < len; ++i) {
      trace[i] += t[std::min(i, t.size() - 1)];
    }
  }

  GlassoFit fit{SymmetricMatrix(std::move(theta)),
                SymmetricMatrix(std::move(sigma)),
                0.0,
                0.0,
                sweeps,
                converged,
                std::move(trace)};
  fit.objective = fit.objective_trace.empty() ? 0.0 : fit.objective_trace.back();

  // KKT certificate on the assembled estimate.
  double kkt = 0.0;
  for (int i = 0; i < p; ++i) {
    kkt = std::max(kkt, std::abs(fit.sigma_hat(i, i) - s(i, i)));
    for (int j = i + 1; j < p; ++j) {
      const double wij = w.at(i, j);
      const double tij = fit.theta(i, j);
      const double grad = fit.sigma_hat(i, j) - s(i, j);
      double viol;
      if (tij != 0.0) {
        viol = std::abs(grad - wij * (tij > 0.0 ? 1.0 : -1.0));
      } else {
        viol = std::isinf(wij) ? 0.0 : std::max(0.0, std::abs(grad) - wij);
      }
      kkt = std::max(kkt, viol);
    }
  }
  fit.kkt_residual = kkt;
  return fit;
}

}  // namespace cglasso
