#include "cglasso/types.hpp"

#include <algorithm>
#include <cmath>

namespace cglasso {

SymmetricMatrix::SymmetricMatrix(Matrix m, double sym_tol) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("SymmetricMatrix", m.rows(), m.cols());
  }
  if (m.rows() < 1) {
    throw InvalidArgument("SymmetricMatrix requires dim >= 1");
  }
  if (!m.allFinite()) {
    throw NonFinite("SymmetricMatrix");
  }
  double dev = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (dev > sym_tol) {
    throw NotSymmetric(dev);
  }
  m_ = 0.5 * (m + m.transpose().eval());
}

SymmetricMatrix SymmetricMatrix::submatrix(
    const std::vector<int>& indices) const {
  const int q = static_cast<int>(indices.size());
  Matrix out(q, q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      out(a, b) = m_(indices[a], indices[b]);
    }
  }
  return SymmetricMatrix(std::move(out));
}

double SymmetricMatrix::max_abs_off_diagonal() const {
  const int p = dim();
  double v = 0.0;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      v = std::max(v, std::abs(m_(i, j)));
    }
  }
  return v;
}

double SymmetricMatrix::mean_abs_off_diagonal() const {
  const int p = dim();
  if (p < 2) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i != j) sum += std::abs(m_(i, j));
    }
  }
  return sum / (static_cast<double>(p) * (p - 1));
}

SimilarityMatrix::SimilarityMatrix(SymmetricMatrix base)
    : base_(std::move(base)) {
  if (base_.mat().minCoeff() < 0.0) {
    throw InvalidArgument("similarity matrix has a negative entry");
  }
}

DataMatrix::DataMatrix(Matrix v,
                       std::optional<std::vector<std::string>> names)
    : values(std::move(v)), feature_names(std::move(names)) {
  if (values.rows() < 1 || values.cols() < 1) {
    throw InvalidArgument("DataMatrix requires n >= 1 and p >= 1");
  }
  if (!values.allFinite()) {
    throw NonFinite("DataMatrix");
  }
  if (feature_names &&
      static_cast<long>(feature_names->size()) != values.cols()) {
    throw LengthMismatch("feature_names", feature_names->size(),
                         static_cast<std::size_t>(values.cols()));
  }
}

Partition::Partition(int p, std::vector<std::vector<int>> clusters)
    : p_(p), clusters_(std::move(clusters)), labels_(p, -1) {
  if (p < 1) throw InvalidArgument("Partition requires p >= 1");
  for (auto& c : clusters_) {
    if (c.empty()) throw InvalidArgument("Partition has an empty cluster");
    std::sort(c.begin(), c.end());
  }
  std::sort(clusters_.begin(), clusters_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  int covered = 0;
  for (int k = 0; k < static_cast<int>(clusters_.size()); ++k) {
    for (int j : clusters_[k]) {
      if (j < 0 || j >= p) {
        throw InvalidArgument("Partition index out of range");
      }
      if (labels_[j] != -1) {
        throw InvalidArgument("Partition clusters are not disjoint");
      }
      labels_[j] = k;
      ++covered;
    }
  }
  if (covered != p) {
    throw InvalidArgument("Partition clusters do not cover all features");
  }
}

Partition Partition::from_labels(const std::vector<int>& labels) {
  const int p = static_cast<int>(labels.size());
  int k_max = -1;
  for (int l : labels) k_max = std::max(k_max, l);
  std::vector<std::vector<int>> clusters(k_max + 1);
  for (int j = 0; j < p; ++j) {
    if (labels[j] < 0) throw InvalidArgument("negative cluster label");
    clusters[labels[j]].push_back(j);
  }
  // Labels need not be contiguous; drop unused slots.
  std::erase_if(clusters, [](const auto& c) { return c.empty(); });
  return Partition(p, std::move(clusters));
}

}  // namespace cglasso
