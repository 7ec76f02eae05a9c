#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cglasso/errors.hpp"

namespace cglasso {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Dense p x p symmetric matrix.  Stored canonically: the constructor checks
// max |M - M^T| against sym_tol and then averages the two triangles, so
// entries(i,j) == entries(j,i) holds exactly afterwards.  All entries must
// be finite.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Matrix m, double sym_tol = 0.0);

  int dim() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Matrix& mat() const { return m_; }

  // Principal submatrix on the given (ascending) index set.
  SymmetricMatrix submatrix(const std::vector<int>& indices) const;

  double max_abs_off_diagonal() const;
  double mean_abs_off_diagonal() const;

 private:
  Matrix m_;
};

// Symmetric matrix with nonnegative entries; the similarity |S|.
class SimilarityMatrix {
 public:
  explicit SimilarityMatrix(SymmetricMatrix base);

  int dim() const { return base_.dim(); }
  double operator()(int i, int j) const { return base_(i, j); }
  const SymmetricMatrix& base() const { return base_; }
  const Matrix& mat() const { return base_.mat(); }

  SimilarityMatrix submatrix(const std::vector<int>& indices) const {
    return SimilarityMatrix(base_.submatrix(indices));
  }

 private:
  SymmetricMatrix base_;
};

// n x p observation matrix, rows are observations.
struct DataMatrix {
  Matrix values;
  std::optional<std::vector<std::string>> feature_names;

  DataMatrix(Matrix v,
             std::optional<std::vector<std::string>> names = std::nullopt);

  long n() const { return values.rows(); }
  int p() const { return static_cast<int>(values.cols()); }
};

// Disjoint, nonempty clusters covering {0, ..., p-1}.  Canonical form:
// indices ascending within each cluster, clusters ordered by smallest
// member.  Construction validates and canonicalizes.
class Partition {
 public:
  Partition(int p, std::vector<std::vector<int>> clusters);

  // Builds the partition from per-feature cluster labels.
  static Partition from_labels(const std::vector<int>& labels);

  int p() const { return p_; }
  int size() const { return static_cast<int>(clusters_.size()); }
  const std::vector<std::vector<int>>& clusters() const { return clusters_; }
  const std::vector<int>& cluster(int k) const { return clusters_[k]; }

  // Cluster index of feature j.
  int label_of(int j) const { return labels_[j]; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.p_ == b.p_ && a.clusters_ == b.clusters_;
  }

 private:
  int p_;
  std::vector<std::vector<int>> clusters_;
  std::vector<int> labels_;
};

}  // namespace cglasso
