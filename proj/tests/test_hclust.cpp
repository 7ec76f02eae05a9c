#include <doctest.h>

#include "cglasso/covariance.hpp"
#include "cglasso/hclust.hpp"
#include "cglasso/rng.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cglasso;

namespace {

SimilarityMatrix worked_sim() {
  return SimilarityMatrix(helpers::worked_example());
}

}  // namespace

TEST_CASE("single linkage on the worked example") {
  Dendrogram d = agglomerate(worked_sim(), LinkageMethod::kSingle);
  REQUIRE(d.merges().size() == 3);
  CHECK(d.merges()[0] == Dendrogram::Merge{0, 1, 0.8});
  CHECK(d.merges()[1] == Dendrogram::Merge{2, 4, 0.6});
  CHECK(d.merges()[2] == Dendrogram::Merge{3, 5, 0.3});
}

TEST_CASE("complete linkage on the worked example") {
  Dendrogram d = agglomerate(worked_sim(), LinkageMethod::kComplete);
  REQUIRE(d.merges().size() == 3);
  CHECK(d.merges()[0] == Dendrogram::Merge{0, 1, 0.8});
  CHECK(d.merges()[1] == Dendrogram::Merge{2, 4, 0.5});
  CHECK(d.merges()[2] == Dendrogram::Merge{3, 5, 0.1});
}

TEST_CASE("average linkage on the worked example") {
  Dendrogram d = agglomerate(worked_sim(), LinkageMethod::kAverage);
  REQUIRE(d.merges().size() == 3);
  CHECK(d.merges()[0] == Dendrogram::Merge{0, 1, 0.8});
  CHECK(d.merges()[1].height == doctest::Approx(0.55));
  CHECK(d.merges()[2].height == doctest::Approx(0.2));
}

TEST_CASE("single leaf gives an empty merge list") {
  SimilarityMatrix one{SymmetricMatrix(Matrix::Identity(1, 1))};
  CHECK(agglomerate(one, LinkageMethod::kSingle).merges().empty());
}

TEST_CASE("cutting the worked dendrogram") {
  Dendrogram d = agglomerate(worked_sim(), LinkageMethod::kSingle);

  Partition at_079 = cut_height(d, 0.79);
  CHECK(at_079.clusters() ==
        std::vector<std::vector<int>>{{0, 1}, {2}, {3}});

  // Strict inequality: no merge survives a cut at the top height.
  CHECK(cut_height(d, 0.8).size() == 4);
  CHECK(cut_height(d, 1.0).size() == 4);

  CHECK(cut_height(d, 0.0).clusters() ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("cut_k on the worked dendrogram") {
  Dendrogram d = agglomerate(worked_sim(), LinkageMethod::kSingle);
  CHECK(cut_k(d, 3).clusters() ==
        std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
  CHECK(cut_k(d, 1).size() == 1);
  CHECK(cut_k(d, 4).size() == 4);
  CHECK_THROWS_AS(cut_k(d, 0), InvalidK);
  CHECK_THROWS_AS(cut_k(d, 5), InvalidK);
}

TEST_CASE("lambda_bar is the final merge height") {
  Dendrogram d = agglomerate(worked_sim(), LinkageMethod::kSingle);
  CHECK(lambda_bar(d) == 0.3);

  // Exact block structure with zero cross-block similarity.
  Matrix m = Matrix::Identity(4, 4);
  m(0, 1) = m(1, 0) = 0.9;
  m(2, 3) = m(3, 2) = 0.7;
  Dendrogram blocks = agglomerate(SimilarityMatrix(SymmetricMatrix(m)),
                                  LinkageMethod::kSingle);
  CHECK(lambda_bar(blocks) == 0.0);

  SimilarityMatrix one{SymmetricMatrix(Matrix::Identity(1, 1))};
  CHECK_THROWS_AS(lambda_bar(agglomerate(one, LinkageMethod::kSingle)),
                  SingleLeaf);
}

TEST_CASE("dendrogram construction validates its invariants") {
  CHECK_THROWS_AS(Dendrogram(3, {{0, 1, 0.5}}), LengthMismatch);
  // Increasing heights.
  CHECK_THROWS_AS(Dendrogram(3, {{0, 1, 0.2}, {2, 3, 0.5}}), InvalidArgument);
  // A node merged twice.
  CHECK_THROWS_AS(Dendrogram(3, {{0, 1, 0.5}, {1, 2, 0.4}}), InvalidArgument);
  CHECK_NOTHROW(Dendrogram(3, {{0, 1, 0.5}, {2, 3, 0.4}}));
}

TEST_CASE("merge heights are non-increasing for every linkage") {
  Rng rng(101);
  for (int rep = 0; rep < 25; ++rep) {
    const int p = 2 + static_cast<int>(rng.below(11));
    SimilarityMatrix sim =
        similarity_matrix(helpers::random_covariance(30, p, rng));
    for (auto method : {LinkageMethod::kSingle, LinkageMethod::kAverage,
                        LinkageMethod::kComplete}) {
      Dendrogram d = agglomerate(sim, method);
      for (std::size_t k = 1; k < d.merges().size(); ++k) {
        CHECK(d.merges()[k].height <= d.merges()[k - 1].height);
      }
    }
  }
}

TEST_CASE("single-linkage cut equals thresholded components") {
  Rng rng(202);
  for (int rep = 0; rep < 60; ++rep) {
    const int p = 2 + static_cast<int>(rng.below(11));
    SimilarityMatrix sim =
        similarity_matrix(helpers::random_covariance(25, p, rng));
    Dendrogram d = agglomerate(sim, LinkageMethod::kSingle);
    for (int t = 0; t < 4; ++t) {
      const double lam = helpers::lambda_off_ties(sim.base(), rng);
      CHECK(cut_height(d, lam).clusters() ==
            oracles::bfs_components(sim.mat(), lam));
    }
  }
}

TEST_CASE("cut_k and cut_height agree between merge heights") {
  Rng rng(303);
  for (int rep = 0; rep < 20; ++rep) {
    const int p = 3 + static_cast<int>(rng.below(8));
    SimilarityMatrix sim =
        similarity_matrix(helpers::random_covariance(25, p, rng));
    Dendrogram d = agglomerate(sim, LinkageMethod::kAverage);
    const auto& merges = d.merges();
    for (std::size_t k = 1; k < merges.size(); ++k) {
      const double hi = merges[k - 1].height;
      const double lo = merges[k].height;
      if (hi - lo < 1e-9) continue;  // tied heights have no gap to probe
      const double h = 0.5 * (hi + lo);
      // k merges applied -> p - k clusters.
      CHECK(cut_height(d, h) == cut_k(d, p - static_cast<int>(k)));
    }
  }
}

TEST_CASE("raising the cut never merges separated clusters") {
  Rng rng(404);
  for (int rep = 0; rep < 15; ++rep) {
    const int p = 3 + static_cast<int>(rng.below(9));
    SimilarityMatrix sim =
        similarity_matrix(helpers::random_covariance(25, p, rng));
    Dendrogram d = agglomerate(sim, LinkageMethod::kSingle);
    double lam1 = rng.uniform(0.0, 1.0);
    double lam2 = rng.uniform(0.0, 1.0);
    if (lam1 > lam2) std::swap(lam1, lam2);
    Partition coarse = cut_height(d, lam1);
    Partition fine = cut_height(d, lam2);
    // Every fine cluster must be contained in one coarse cluster.
    for (const auto& c : fine.clusters()) {
      const int label = coarse.label_of(c.front());
      for (int j : c) CHECK(coarse.label_of(j) == label);
    }
  }
}
