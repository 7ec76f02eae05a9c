#include "cglasso/hclust.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace cglasso {

const char* linkage_name(LinkageMethod m) {
  switch (m) {
    case LinkageMethod::kSingle: return "slc";
    case LinkageMethod::kAverage: return "alc";
    case LinkageMethod::kComplete: return "clc";
  }
  return "?";
}

LinkageMethod linkage_from_name(const std::string& name) {
  if (name == "slc" || name == "single") return LinkageMethod::kSingle;
  if (name == "alc" || name == "average") return LinkageMethod::kAverage;
  if (name == "clc" || name == "complete") return LinkageMethod::kComplete;
  throw InvalidArgument("unknown linkage '" + name + "'");
}

Dendrogram::Dendrogram(int p, std::vector<Merge> merges)
    : p_(p), merges_(std::move(merges)) {
  if (p < 1) throw InvalidArgument("Dendrogram requires p >= 1");
  if (static_cast<int>(merges_.size()) != p - 1) {
    throw LengthMismatch("Dendrogram merges", merges_.size(),
                         static_cast<std::size_t>(p - 1));
  }
  std::vector<bool> used(p + merges_.size(), false);
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k < static_cast<int>(merges_.size()); ++k) {
    const Merge& m = merges_[k];
    if (m.left < 0 || m.right < 0 || m.left >= p + k || m.right >= p + k ||
        m.left >= m.right) {
      throw InvalidArgument("Dendrogram merge ids are malformed");
    }
    if (used[m.left] || used[m.right]) {
      throw InvalidArgument("Dendrogram reuses a merged node");
    }
    used[m.left] = used[m.right] = true;
    if (!(m.height <= prev)) {
      throw InvalidArgument("Dendrogram heights are not non-increasing");
    }
    prev = m.height;
  }
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Components of the leaves after applying the first `count` merges.
Partition components_after(const Dendrogram& d, int count) {
  const int p = d.p();
  UnionFind uf(p + count);
  for (int k = 0; k < count; ++k) {
    const auto& m = d.merges()[k];
    uf.unite(m.left, m.right);
    uf.unite(p + k, m.left);
  }
  std::unordered_map<int, int> root_to_label;
  std::vector<int> labels(p);
  for (int i = 0; i < p; ++i) {
    int r = uf.find(i);
    auto [it, inserted] =
        root_to_label.emplace(r, static_cast<int>(root_to_label.size()));
    labels[i] = it->second;
  }
  return Partition::from_labels(labels);
}

}  // namespace

Dendrogram agglomerate(const SimilarityMatrix& sim, LinkageMethod method) {
  const int p = sim.dim();
  std::vector<Dendrogram::Merge> merges;
  if (p == 1) return Dendrogram(1, std::move(merges));
  merges.reserve(p - 1);

  Matrix w = sim.mat();                // inter-cluster similarities by slot
  std::vector<int> id(p), size(p, 1);  // per-slot cluster id and size
  std::vector<bool> active(p, true);
  for (int i = 0; i < p; ++i) id[i] = i;

  for (int step = 0; step < p - 1; ++step) {
    // Locate the maximal active pair; break ties on the (lo, hi) id tuple.
    int best_a = -1, best_b = -1;
    double best = -std::numeric_limits<double>::infinity();
    int best_lo = 0, best_hi = 0;
    for (int a = 0; a < p; ++a) {
      if (!active[a]) continue;
      for (int b = a + 1; b < p; ++b) {
        if (!active[b]) continue;
        double v = w(a, b);
        int lo = std::min(id[a], id[b]);
        int hi = std::max(id[a], id[b]);
        if (v > best || (v == best && (lo < best_lo ||
                                       (lo == best_lo && hi < best_hi)))) {
          best = v;
          best_a = a;
          best_b = b;
          best_lo = lo;
          best_hi = hi;
        }
      }
    }

    merges.push_back({best_lo, best_hi, best});

    // Fold slot b into slot a and refresh its cached similarity row.
    const int a = best_a, b = best_b;
    for (int c = 0; c < p; ++c) {
      if (!active[c] || c == a || c == b) continue;
      double va = w(a, c), vb = w(b, c);
      double v = 0.0;
      switch (method) {
        case LinkageMethod::kSingle:
          v = std::max(va, vb);
          break;
        case LinkageMethod::kAverage:
          v = (size[a] * va + size[b] * vb) / (size[a] + size[b]);
          // The mean lies between va and vb; clamp rounding noise.
          v = std::clamp(v, std::min(va, vb), std::max(va, vb));
          break;
        case LinkageMethod::kComplete:
          v = std::min(va, vb);
          break;
      }
      w(a, c) = w(c, a) = v;
    }
    active[b] = false;
    id[a] = p + step;
    size[a] += size[b];
  }
  return Dendrogram(p, std::move(merges));
}

Partition cut_height(const Dendrogram& d, double lambda) {
  // Heights are non-increasing, so merges above the cut form a prefix.
  int count = 0;
  for (const auto& m : d.merges()) {
    if (m.height > lambda) {
      ++count;
    } else {
      break;
    }
  }
  return components_after(d, count);
}

Partition cut_k(const Dendrogram& d, int k) {
  if (k < 1 || k > d.p()) throw InvalidK(k, d.p());
  return components_after(d, d.p() - k);
}

double lambda_bar(const Dendrogram& d) {
  if (d.p() < 2) throw SingleLeaf();
  return d.merges().back().height;
}

}  // namespace cglasso
