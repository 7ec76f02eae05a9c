#include "cglasso/simgen.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>

#include "cglasso/rng.hpp"

namespace cglasso {

namespace {

long round_half_even(double x) {
  const double f = std::floor(x);
  const double frac = x - f;
  long r = static_cast<long>(f);
  if (frac > 0.5) return r + 1;
  if (frac < 0.5) return r;
  return (r % 2 == 0) ? r : r + 1;
}

// Finishes a truth bundle from the pre-fix off-diagonal matrix: applies the
// diagonal rule, inverts for Sigma, and derives the support fields.
SimulationTruth finalize(Matrix raw, Partition partition, double s,
                         double off_block_fraction, std::uint64_t seed) {
  const int p = static_cast<int>(raw.rows());
  Eigen::SelfAdjointEigenSolver<Matrix> es(raw,
                                           Eigen::EigenvaluesOnly);
  const double e_min = es.eigenvalues().minCoeff();
  Matrix theta = raw;
  theta.diagonal().setConstant(std::max(-e_min, 0.0) + 0.1);

  Eigen::LLT<Matrix> llt(theta);
  if (llt.info() != Eigen::Success) {
    throw FactorizationFailed("generate_precision");
  }
  Matrix sigma = llt.solve(Matrix::Identity(p, p));

  std::set<std::pair<int, int>> edges;
  double theta_min = 0.0;
  bool first = true;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (theta(i, j) != 0.0) {
        edges.emplace(i, j);
        const double a = std::abs(theta(i, j));
        theta_min = first ? a : std::min(theta_min, a);
        first = false;
      }
    }
  }

  return SimulationTruth{SymmetricMatrix(std::move(theta)),
                         SymmetricMatrix(std::move(sigma), 1e-9),
                         std::move(partition),
                         std::move(edges),
                         theta_min,
                         s,
                         off_block_fraction,
                         seed,
                         std::move(raw)};
}

}  // namespace

SimulationTruth generate_precision(const std::vector<int>& block_sizes,
                                   double s, std::uint64_t rng_seed) {
  if (block_sizes.empty()) {
    throw InvalidArgument("generate_precision requires at least one block");
  }
  for (int b : block_sizes) {
    if (b < 1) throw InvalidArgument("block sizes must be positive");
  }
  if (!(s >= 0.0 && s <= 1.0)) {
    throw InvalidArgument("sparsity s must be in [0, 1]");
  }
  const int p = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);

  Matrix raw = Matrix::Zero(p, p);
  std::vector<int> labels(p);
  int offset = 0;
  for (std::size_t k = 0; k < block_sizes.size(); ++k) {
    Rng rng = Rng::stream(rng_seed, "precision-block", k);
    const int m = block_sizes[k];
    for (int j = 0; j < m; ++j) labels[offset + j] = static_cast<int>(k);
    for (int j = 0; j < m; ++j) {
      for (int j2 = j + 1; j2 < m; ++j2) {
        const double u = rng.uniform();
        double v = 0.0;
        if (u < (1.0 - s) * 0.75) {
          v = rng.uniform(0.25, 0.75);
        } else if (u < 1.0 - s) {
          v = rng.uniform(-0.75, -0.25);
        }
        raw(offset + j, offset + j2) = raw(offset + j2, offset + j) = v;
      }
    }
    offset += m;
  }

  return finalize(std::move(raw), Partition::from_labels(labels), s, 0.0,
                  rng_seed);
}

SimulationTruth perturb_off_block(const SimulationTruth& truth,
                                  double fraction, std::uint64_t rng_seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw InvalidArgument("off-block fraction must be in [0, 1]");
  }
  const int p = truth.partition_true.p();
  std::vector<std::pair<int, int>> off_block;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (truth.partition_true.label_of(i) !=
          truth.partition_true.label_of(j)) {
        off_block.emplace_back(i, j);
      }
    }
  }
  const long count = round_half_even(fraction * off_block.size());

  Matrix raw = truth.raw_off_diagonal;
  Rng rng = Rng::stream(rng_seed, "perturb");
  for (long t = 0; t < count; ++t) {
    const long r = t + static_cast<long>(rng.below(off_block.size() - t));
    std::swap(off_block[t], off_block[r]);
    const auto& [i, j] = off_block[t];
    const double v = rng.uniform(-0.5, 0.5);
    raw(i, j) = raw(j, i) = v;
  }

  return finalize(std::move(raw), truth.partition_true, truth.sparsity_s,
                  fraction, rng_seed);
}

DataMatrix sample_mvn(const SimulationTruth& truth, long n,
                      std::uint64_t rng_seed) {
  if (n < 1) throw InvalidArgument("sample_mvn requires n >= 1");
  const int p = truth.theta_true.dim();
  Eigen::LLT<Matrix> llt(truth.sigma_true.mat());
  if (llt.info() != Eigen::Success) {
    throw FactorizationFailed("sample_mvn");
  }
  Matrix l = llt.matrixL();
  Rng rng = Rng::stream(rng_seed, "sample");
  Matrix x(n, p);
  Vector z(p);
  for (long r = 0; r < n; ++r) {
    for (int j = 0; j < p; ++j) z(j) = rng.normal();
    x.row(r) = (l * z).transpose();
  }
  return DataMatrix(std::move(x));
}

}  // namespace cglasso
