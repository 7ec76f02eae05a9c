#pragma once

#include "cglasso/types.hpp"

namespace cglasso {

// Centers each column to mean zero and scales to mean square one (1/n
// convention), so that empirical_covariance() of the result has unit
// diagonal.  Throws ConstantColumn if a column has zero variance.
DataMatrix standardize(const DataMatrix& x);

// S = X^T X / n.  No centering is performed here; standardize first to get
// the unit-diagonal pipeline.
SymmetricMatrix empirical_covariance(const DataMatrix& x);

// Elementwise absolute value of s.
SimilarityMatrix similarity_matrix(const SymmetricMatrix& s);

}  // namespace cglasso
