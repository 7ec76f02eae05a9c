#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <limits>

#include "cglasso/covariance.hpp"
#include "cglasso/glasso.hpp"
#include "cglasso/rng.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cglasso;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("threshold components on the worked example") {
  SymmetricMatrix s = helpers::worked_example();
  CHECK(threshold_components(s, 0.79).clusters() ==
        std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
  CHECK(threshold_components(s, 0.0).size() == 1);
  CHECK(threshold_components(s, 0.8).size() == 4);
}

TEST_CASE("objective closed forms") {
  SymmetricMatrix eye{Matrix::Identity(3, 3)};
  CHECK(objective(eye, eye, PenaltyWeights::scalar(0.0)) ==
        doctest::Approx(3.0));

  SymmetricMatrix eye2{Matrix::Identity(2, 2)};
  CHECK(objective(eye2, eye2, PenaltyWeights::scalar(0.5)) ==
        doctest::Approx(2.0));

  Matrix t(2, 2);
  t << 1.0, 0.2, 0.2, 1.0;
  Matrix w = Matrix::Zero(2, 2);
  w(0, 1) = w(1, 0) = kInf;
  CHECK(objective(SymmetricMatrix(t), eye2, PenaltyWeights::entrywise(w)) ==
        kInf);

  Matrix neg = -Matrix::Identity(2, 2);
  CHECK_THROWS_AS(
      objective(SymmetricMatrix(neg), eye2, PenaltyWeights::scalar(0.0)),
      NotPositiveDefinite);
}

TEST_CASE("penalty weights validate") {
  CHECK_THROWS_AS(PenaltyWeights::scalar(-0.1), InvalidArgument);
  Matrix w = Matrix::Zero(2, 2);
  w(0, 0) = 0.5;
  CHECK_THROWS_AS(PenaltyWeights::entrywise(w), InvalidArgument);
}

TEST_CASE("one-dimensional solve inverts the variance") {
  SymmetricMatrix s{Matrix::Constant(1, 1, 4.0)};
  GlassoFit fit = solve(s, PenaltyWeights::scalar(0.7));
  CHECK(fit.theta(0, 0) == doctest::Approx(0.25));
  CHECK(fit.converged);
  CHECK(fit.kkt_residual == doctest::Approx(0.0));
}

TEST_CASE("unpenalized solve recovers the inverse") {
  Rng rng(31);
  SymmetricMatrix s = helpers::random_spd(5, rng);
  GlassoFit fit = solve(s, PenaltyWeights::scalar(0.0));
  Matrix inv = s.mat().inverse();
  CHECK((fit.theta.mat() - inv).cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("two-dimensional solve matches the hand-solved stationarity") {
  Matrix m(2, 2);
  m << 1.0, 0.6, 0.6, 1.0;
  SymmetricMatrix s(m);
  GlassoFit fit = solve(s, PenaltyWeights::scalar(0.2));
  CHECK(fit.sigma_hat(0, 1) == doctest::Approx(0.4).epsilon(1e-8));
  CHECK(fit.theta(0, 1) == doctest::Approx(-0.4 / 0.84).epsilon(1e-8));
  CHECK(fit.theta(0, 0) == doctest::Approx(1.0 / 0.84).epsilon(1e-8));

  Matrix oracle = oracles::prox_grad_glasso(m, PenaltyWeights::scalar(0.2));
  CHECK((fit.theta.mat() - oracle).cwiseAbs().maxCoeff() <= 1e-4);
}

TEST_CASE("a penalty above every off-diagonal gives a diagonal estimate") {
  Rng rng(37);
  SymmetricMatrix s = helpers::random_spd(6, rng);
  const double lam = s.max_abs_off_diagonal() + 0.01;
  GlassoFit fit = solve(s, PenaltyWeights::scalar(lam));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i == j) {
        CHECK(fit.theta(i, i) == doctest::Approx(1.0 / s(i, i)));
      } else {
        CHECK(fit.theta(i, j) == 0.0);
      }
    }
  }
}

TEST_CASE("solver certificates on random instances") {
  Rng rng(41);
  GlassoConfig cfg;
  for (int rep = 0; rep < 20; ++rep) {
    const int p = 2 + static_cast<int>(rng.below(19));
    SymmetricMatrix s = helpers::random_spd(p, rng);
    const double lam = rng.uniform(0.0, 0.5);
    GlassoFit fit = solve(s, PenaltyWeights::scalar(lam), cfg);
    CHECK(fit.converged);
    CHECK(fit.kkt_residual <= 10.0 * cfg.tol);
    for (std::size_t t = 1; t < fit.objective_trace.size(); ++t) {
      CHECK(fit.objective_trace[t] <=
            fit.objective_trace[t - 1] +
                1e-9 * (1.0 + std::abs(fit.objective_trace[t - 1])));
    }
    // theta and the maintained inverse agree.
    Matrix prod = fit.theta.mat() * fit.sigma_hat.mat();
    CHECK((prod - Matrix::Identity(p, p)).cwiseAbs().maxCoeff() <= 1e-4);
    // theta is positive definite.
    Eigen::SelfAdjointEigenSolver<Matrix> es(fit.theta.mat(),
                                             Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }
}

TEST_CASE("support components equal thresholded components") {
  Rng rng(43);
  int done = 0;
  while (done < 100) {
    const int p = 2 + static_cast<int>(rng.below(11));
    SymmetricMatrix s = helpers::random_covariance(
        20 + static_cast<int>(rng.below(31)), p, rng);
    const double lam = helpers::lambda_off_ties(s, rng);
    GlassoFit fit = solve(s, PenaltyWeights::scalar(lam));
    Partition from_support = threshold_components(fit.theta, 1e-8);
    Partition from_s = threshold_components(s, lam);
    CHECK(from_support == from_s);
    ++done;
  }
}

TEST_CASE("solve matches the proximal-gradient oracle at small p") {
  Rng rng(47);
  for (int rep = 0; rep < 15; ++rep) {
    const int p = 2 + static_cast<int>(rng.below(3));
    SymmetricMatrix s = helpers::random_spd(p, rng);
    const double lam = rng.uniform(0.0, 0.4);
    GlassoFit fit = solve(s, PenaltyWeights::scalar(lam));
    Matrix oracle =
        oracles::prox_grad_glasso(s.mat(), PenaltyWeights::scalar(lam));
    CHECK((fit.theta.mat() - oracle).cwiseAbs().maxCoeff() <= 1e-4);
  }
}

TEST_CASE("matrix weights with an infinite entry match the oracle") {
  Rng rng(53);
  for (int rep = 0; rep < 5; ++rep) {
    SymmetricMatrix s = helpers::random_spd(3, rng);
    Matrix w = Matrix::Constant(3, 3, 0.1);
    w.diagonal().setZero();
    w(0, 2) = w(2, 0) = kInf;
    PenaltyWeights pw = PenaltyWeights::entrywise(w);
    GlassoFit fit = solve(s, pw);
    CHECK(fit.theta(0, 2) == 0.0);
    Matrix oracle = oracles::prox_grad_glasso(s.mat(), pw);
    CHECK((fit.theta.mat() - oracle).cwiseAbs().maxCoeff() <= 1e-4);
  }
}

TEST_CASE("screening does not change the solution") {
  Rng rng(59);
  for (int rep = 0; rep < 10; ++rep) {
    const int p = 4 + static_cast<int>(rng.below(7));
    SymmetricMatrix s = helpers::random_covariance(30, p, rng);
    const double lam = helpers::lambda_off_ties(s, rng);
    GlassoConfig on, off;
    off.screening = false;
    GlassoFit a = solve(s, PenaltyWeights::scalar(lam), on);
    GlassoFit b = solve(s, PenaltyWeights::scalar(lam), off);
    CHECK((a.theta.mat() - b.theta.mat()).cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("solve is permutation equivariant") {
  Rng rng(61);
  for (int rep = 0; rep < 5; ++rep) {
    const int p = 6;
    SymmetricMatrix s = helpers::random_covariance(40, p, rng);
    const double lam = helpers::lambda_off_ties(s, rng);

    std::vector<int> perm(p);
    for (int i = 0; i < p; ++i) perm[i] = i;
    for (int i = p - 1; i > 0; --i) {
      std::swap(perm[i], perm[static_cast<int>(rng.below(i + 1))]);
    }
    Matrix pm = Matrix::Zero(p, p);
    for (int i = 0; i < p; ++i) pm(perm[i], i) = 1.0;

    SymmetricMatrix sp{(pm.transpose() * s.mat() * pm).eval(), 1e-12};
    GlassoFit base = solve(s, PenaltyWeights::scalar(lam));
    GlassoFit permuted = solve(sp, PenaltyWeights::scalar(lam));
    Matrix back = pm * permuted.theta.mat() * pm.transpose();
    CHECK((back - base.theta.mat()).cwiseAbs().maxCoeff() <= 1e-5);
  }
}

TEST_CASE("solve rejects a non-positive diagonal") {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 1) = 0.0;
  CHECK_THROWS_AS(solve(SymmetricMatrix(m), PenaltyWeights::scalar(0.1)),
                  NonPositiveDiagonal);
}
