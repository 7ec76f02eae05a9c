#pragma once

#include <vector>

#include "cglasso/types.hpp"

namespace cglasso {

// Inter-cluster similarity: max of pairwise entries (single), mean
// (average), or min (complete).
enum class LinkageMethod { kSingle, kAverage, kComplete };

const char* linkage_name(LinkageMethod m);
LinkageMethod linkage_from_name(const std::string& name);

// Agglomerative merge history in similarity space.  Leaves are 0..p-1 and
// merge k creates node id p+k; heights are non-increasing along the merge
// order.  left < right for every merge.
class Dendrogram {
 public:
  struct Merge {
    int left;
    int right;
    double height;
    friend bool operator==(const Merge&, const Merge&) = default;
  };

  Dendrogram(int p, std::vector<Merge> merges);

  int p() const { return p_; }
  const std::vector<Merge>& merges() const { return merges_; }

 private:
  int p_;
  std::vector<Merge> merges_;
};

// Similarity-space agglomeration: repeatedly merges the pair of clusters
// with maximum inter-cluster similarity.  Ties are broken toward the pair
// whose (smaller id, larger id) tuple is lexicographically least.
Dendrogram agglomerate(const SimilarityMatrix& sim, LinkageMethod method);

// Two leaves share a cluster iff connected through merges with height
// strictly greater than lambda.
Partition cut_height(const Dendrogram& d, double lambda);

// Undoes the last k-1 merges; returns exactly k clusters.
Partition cut_k(const Dendrogram& d, int k);

// Height of the final (lowest-similarity) merge: the smallest cut height
// that splits the tree into at least two clusters.
double lambda_bar(const Dendrogram& d);

}  // namespace cglasso
