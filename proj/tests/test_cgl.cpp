#include <doctest.h>

#include <limits>

#include "cglasso/cgl.hpp"
#include "cglasso/covariance.hpp"
#include "cglasso/rng.hpp"
#include "helpers.hpp"

using namespace cglasso;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("weights from a partition") {
  Partition part(3, {{0, 1}, {2}});
  PenaltyWeights w = weights_from_partition(part, {0.3, 0.5});
  CHECK(w.at(0, 1) == 0.3);
  CHECK(w.at(0, 2) == kInf);
  CHECK(w.at(1, 2) == kInf);
  CHECK(w.at(0, 0) == 0.0);
  CHECK(w.at(2, 2) == 0.0);

  Partition whole(3, {{0, 1, 2}});
  PenaltyWeights shared = weights_from_partition(whole, {0.2});
  CHECK(shared.at(0, 2) == 0.2);

  Partition singletons(3, {{0}, {1}, {2}});
  PenaltyWeights iso = weights_from_partition(singletons, {0.1, 0.1, 0.1});
  CHECK(iso.at(0, 1) == kInf);
  CHECK(iso.at(1, 2) == kInf);

  CHECK_THROWS_AS(weights_from_partition(part, {0.3}), LengthMismatch);
}

TEST_CASE("cgl with one cluster is the plain graphical lasso") {
  Rng rng(71);
  SymmetricMatrix s = helpers::random_covariance(40, 6, rng);
  SimilarityMatrix sim = similarity_matrix(s);
  CglConfig cfg;
  cfg.linkage = LinkageMethod::kAverage;
  cfg.k = 1;
  cfg.lambdas = {0.2};
  CglFit cgl = run_cgl(s, sim, cfg);
  GlassoFit plain = solve(s, PenaltyWeights::scalar(0.2));
  CHECK((cgl.theta.mat() - plain.theta.mat()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(cgl.lambdas_used == std::vector<double>{0.2});
}

TEST_CASE("cgl with all singleton clusters is diagonal") {
  Rng rng(73);
  SymmetricMatrix s = helpers::random_covariance(40, 5, rng);
  SimilarityMatrix sim = similarity_matrix(s);
  CglConfig cfg;
  cfg.k = 5;
  cfg.lambdas = {0.3};
  CglFit fit = run_cgl(s, sim, cfg);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (i == j) {
        CHECK(fit.theta(i, i) == doctest::Approx(1.0 / s(i, i)));
      } else {
        CHECK(fit.theta(i, j) == 0.0);
      }
    }
  }
}

TEST_CASE("cgl via single linkage at the cut height reproduces glasso") {
  Rng rng(79);
  for (int rep = 0; rep < 25; ++rep) {
    const int p = 4 + static_cast<int>(rng.below(9));
    SymmetricMatrix s = helpers::random_covariance(
        20 + static_cast<int>(rng.below(31)), p, rng);
    SimilarityMatrix sim = similarity_matrix(s);
    const double lam = helpers::lambda_off_ties(s, rng);

    Partition comps = cut_height(agglomerate(sim, LinkageMethod::kSingle), lam);
    CglConfig cfg;
    cfg.linkage = LinkageMethod::kSingle;
    cfg.k = comps.size();
    cfg.lambdas = {lam};
    CglFit cgl = run_cgl(s, sim, cfg);
    GlassoFit plain = solve(s, PenaltyWeights::scalar(lam));

    CHECK((cgl.theta.mat() - plain.theta.mat()).cwiseAbs().maxCoeff() <= 1e-6);
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) {
        CHECK((cgl.theta(i, j) != 0.0) == (plain.theta(i, j) != 0.0));
      }
    }
  }
}

TEST_CASE("cgl equals glasso under the partition weight matrix") {
  Rng rng(83);
  for (int rep = 0; rep < 10; ++rep) {
    const int p = 5 + static_cast<int>(rng.below(6));
    SymmetricMatrix s = helpers::random_covariance(40, p, rng);
    SimilarityMatrix sim = similarity_matrix(s);
    const int k = 1 + static_cast<int>(rng.below(3));
    CglConfig cfg;
    cfg.k = k;
    cfg.lambdas = {rng.uniform(0.05, 0.4)};
    CglFit cgl = run_cgl(s, sim, cfg);
    GlassoFit viaw = solve(
        s, weights_from_partition(cgl.partition,
                                  std::vector<double>(k, cfg.lambdas[0])));
    CHECK((cgl.theta.mat() - viaw.theta.mat()).cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("cgl block structure invariants") {
  Rng rng(89);
  SymmetricMatrix s = helpers::random_covariance(50, 8, rng);
  SimilarityMatrix sim = similarity_matrix(s);
  CglConfig cfg;
  cfg.k = 3;
  cfg.lambdas = {0.1};
  CglFit fit = run_cgl(s, sim, cfg);

  REQUIRE(fit.partition.size() == 3);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (fit.partition.label_of(i) != fit.partition.label_of(j)) {
        CHECK(fit.theta(i, j) == 0.0);
      }
    }
  }
  for (int c = 0; c < fit.partition.size(); ++c) {
    const auto& idx = fit.partition.cluster(c);
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b < idx.size(); ++b) {
        CHECK(fit.theta(idx[a], idx[b]) ==
              fit.per_cluster[c].theta(static_cast<int>(a),
                                       static_cast<int>(b)));
      }
    }
  }
}

TEST_CASE("a failing cluster reports its index") {
  Matrix m = Matrix::Identity(4, 4);
  m(2, 2) = 0.0;  // cluster {2,3} has a non-positive diagonal
  Partition part(4, {{0, 1}, {2, 3}});
  try {
    run_cgl_with_partition(SymmetricMatrix(m), part, {0.1});
    FAIL("expected ClusterSolveError");
  } catch (const ClusterSolveError& e) {
    CHECK(e.cluster() == 1);
  }
}

TEST_CASE("per-cluster solves ignore entries outside the cluster") {
  Rng rng(97);
  SymmetricMatrix s = helpers::random_covariance(50, 6, rng);
  Partition part(6, {{0, 1, 2}, {3, 4, 5}});
  CglFit base = run_cgl_with_partition(s, part, {0.15});

  Matrix m = s.mat();
  m(3, 4) = m(4, 3) = 0.99;  // inside cluster 1 only
  CglFit bumped = run_cgl_with_partition(SymmetricMatrix(m), part, {0.15});

  CHECK((base.per_cluster[0].theta.mat() -
         bumped.per_cluster[0].theta.mat())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK((base.per_cluster[1].theta.mat() -
         bumped.per_cluster[1].theta.mat())
            .cwiseAbs()
            .maxCoeff() > 0.0);
}
