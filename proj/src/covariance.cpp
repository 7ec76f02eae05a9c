#include "cglasso/covariance.hpp"

#include <cmath>

namespace cglasso {

DataMatrix standardize(const DataMatrix& x) {
  const long n = x.n();
  const int p = x.p();
  if (n < 2) {
    throw InvalidArgument("standardize requires n >= 2");
  }
  Matrix out = x.values;
  for (int j = 0; j < p; ++j) {
    double mean = out.col(j).mean();
    out.col(j).array() -= mean;
    double ms = out.col(j).squaredNorm() / static_cast<double>(n);
    if (ms == 0.0) {
      throw ConstantColumn(j);
    }
    out.col(j) /= std::sqrt(ms);
  }
  return DataMatrix(std::move(out), x.feature_names);
}

SymmetricMatrix empirical_covariance(const DataMatrix& x) {
  Matrix s = (x.values.transpose() * x.values) / static_cast<double>(x.n());
  // X^T X is symmetric up to rounding only; let the constructor canonicalize.
  return SymmetricMatrix(std::move(s), 1e-12);
}

SimilarityMatrix similarity_matrix(const SymmetricMatrix& s) {
  return SimilarityMatrix(SymmetricMatrix(s.mat().cwiseAbs()));
}

}  // namespace cglasso
