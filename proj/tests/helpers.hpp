#pragma once

#include <vector>

#include "cglasso/covariance.hpp"
#include "cglasso/rng.hpp"
#include "cglasso/types.hpp"

namespace helpers {

using cglasso::Matrix;

// The worked 4x4 similarity example used across the golden tests.
inline cglasso::SymmetricMatrix worked_example() {
  Matrix m(4, 4);
  m << 1.0, 0.8, 0.6, 0.3,
       0.8, 1.0, 0.5, 0.2,
       0.6, 0.5, 1.0, 0.1,
       0.3, 0.2, 0.1, 1.0;
  return cglasso::SymmetricMatrix(m);
}

inline cglasso::DataMatrix random_data(int n, int p, cglasso::Rng& rng) {
  Matrix x(n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) x(i, j) = rng.normal();
  }
  return cglasso::DataMatrix(std::move(x));
}

// Standardized empirical covariance of random Gaussian data.
inline cglasso::SymmetricMatrix random_covariance(int n, int p,
                                                  cglasso::Rng& rng) {
  return cglasso::empirical_covariance(
      cglasso::standardize(random_data(n, p, rng)));
}

// Random symmetric positive definite matrix A A^T / p + 0.5 I.
inline cglasso::SymmetricMatrix random_spd(int p, cglasso::Rng& rng) {
  Matrix a(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) a(i, j) = rng.normal();
  }
  Matrix s = a * a.transpose() / static_cast<double>(p) +
             0.5 * Matrix::Identity(p, p);
  return cglasso::SymmetricMatrix(std::move(s), 1e-12);
}

// A lambda that stays away from every |s_ij| so strict-vs-nonstrict
// thresholding cannot matter.
inline double lambda_off_ties(const cglasso::SymmetricMatrix& s,
                              cglasso::Rng& rng, double margin = 1e-6) {
  for (;;) {
    const double lam = rng.uniform(0.01, 0.99);
    bool ok = true;
    for (int i = 0; i < s.dim() && ok; ++i) {
      for (int j = i + 1; j < s.dim(); ++j) {
        if (std::abs(std::abs(s(i, j)) - lam) < margin) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return lam;
  }
}

}  // namespace helpers
