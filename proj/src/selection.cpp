#include "cglasso/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cglasso/rng.hpp"
#include "cglasso/student_t.hpp"

namespace cglasso {

namespace {

struct MissingPattern {
  std::vector<std::pair<int, int>> pairs;  // i < j
  std::vector<std::vector<bool>> missing;  // p x p mask, mirrored
};

// Draws m distinct unordered pairs uniformly (partial Fisher-Yates over the
// pair index space).
MissingPattern draw_missing(int p, long m, Rng& rng) {
  std::vector<long> pool(static_cast<std::size_t>(p) * (p - 1) / 2);
  std::iota(pool.begin(), pool.end(), 0L);
  MissingPattern out;
  out.pairs.reserve(m);
  out.missing.assign(p, std::vector<bool>(p, false));
  for (long t = 0; t < m; ++t) {
    const long r = t + static_cast<long>(rng.below(pool.size() - t));
    std::swap(pool[t], pool[r]);
    long idx = pool[t];
    // Decode the (i, j) pair, i < j, from its row-major rank.
    int i = 0;
    long before = 0;
    while (before + (p - 1 - i) <= idx) {
      before += p - 1 - i;
      ++i;
    }
    int j = static_cast<int>(i + 1 + (idx - before));
    out.pairs.emplace_back(i, j);
    out.missing[i][j] = out.missing[j][i] = true;
  }
  return out;
}

}  // namespace

SelectKResult select_k(const SimilarityMatrix& sim, const SelectKConfig& cfg) {
  const int p = sim.dim();
  if (p < 3) throw InvalidArgument("select_k requires p >= 3");
  if (cfg.k_candidates.empty()) {
    throw InvalidArgument("select_k requires at least one candidate k");
  }
  if (!std::is_sorted(cfg.k_candidates.begin(), cfg.k_candidates.end())) {
    throw InvalidArgument("k_candidates must be ascending");
  }
  for (int k : cfg.k_candidates) {
    if (k < 1 || k > p) throw InvalidK(k, p);
  }
  if (cfg.t_repeats < 1) throw InvalidArgument("t_repeats must be >= 1");

  const long pairs_total = static_cast<long>(p) * (p - 1) / 2;
  const long m = pairs_total / cfg.t_repeats;  // floor(p(p-1) / 2T)
  if (m < 1) {
    throw InvalidArgument("t_repeats too large: no pairs to hold out");
  }

  SelectKResult result;
  result.missing_fraction_per_repeat =
      static_cast<double>(m) / static_cast<double>(pairs_total);

  const int nk = static_cast<int>(cfg.k_candidates.size());
  std::vector<std::vector<double>> mse(nk);  // per candidate, per repeat

  for (int rep = 0; rep < cfg.t_repeats; ++rep) {
    MissingPattern pat;
    std::vector<double> row_mean(p);
    bool ok = false;
    for (int attempt = 0; attempt < 10 && !ok; ++attempt) {
      Rng rng = Rng::stream(cfg.seed, "select_k",
                            static_cast<std::uint64_t>(rep) * 16 + attempt);
      pat = draw_missing(p, m, rng);
      ok = true;
      for (int i = 0; i < p && ok; ++i) {
        double sum = 0.0;
        int cnt = 0;
        for (int j = 0; j < p; ++j) {
          if (j == i || pat.missing[i][j]) continue;
          sum += sim(i, j);
          ++cnt;
        }
        if (cnt == 0) {
          ok = false;
          ++result.degenerate_retries;
        } else {
          row_mean[i] = sum / cnt;
        }
      }
    }
    if (!ok) throw DegenerateRepeat();

    // Impute missing entries with the average of row and column means of
    // the observed off-diagonal entries.
    Matrix star = sim.mat();
    for (const auto& [i, j] : pat.pairs) {
      const double v = 0.5 * (row_mean[i] + row_mean[j]);
      star(i, j) = star(j, i) = v;
    }
    SimilarityMatrix sim_star{SymmetricMatrix(std::move(star))};

    for (int ci = 0; ci < nk; ++ci) {
      const int k = cfg.k_candidates[ci];
      Partition part = cut_k(agglomerate(sim_star, cfg.linkage), k);

      // Block-constant reconstruction from the imputed matrix.
      std::vector<double> within(part.size(), 0.0);
      for (int c = 0; c < part.size(); ++c) {
        const auto& idx = part.cluster(c);
        const auto sz = static_cast<long>(idx.size());
        if (sz < 2) continue;
        double sum = 0.0;
        for (int a : idx) {
          for (int b : idx) {
            if (a != b) sum += sim_star(a, b);
          }
        }
        within[c] = sum / (static_cast<double>(sz) * (sz - 1));
      }
      double between = 0.0;
      {
        long denom = static_cast<long>(p) * p;
        double sum = 0.0;
        for (int c = 0; c < part.size(); ++c) {
          const auto sz = static_cast<long>(part.cluster(c).size());
          denom -= sz * sz;
        }
        if (denom > 0) {
          for (int i = 0; i < p; ++i) {
            for (int j = 0; j < p; ++j) {
              if (part.label_of(i) != part.label_of(j)) sum += sim_star(i, j);
            }
          }
          between = sum / static_cast<double>(denom);
        }
      }

      double err = 0.0;
      for (const auto& [i, j] : pat.pairs) {
        const double b = part.label_of(i) == part.label_of(j)
                             ? within[part.label_of(i)]
                             : between;
        const double d = sim(i, j) - b;
        err += d * d;
      }
      // Mirrored set: both orientations carry the same squared error.
      mse[ci].push_back(err / static_cast<double>(m));
    }
  }

  for (int ci = 0; ci < nk; ++ci) {
    const auto& v = mse[ci];
    const double mean =
        std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    double se = 0.0;
    if (v.size() > 1) {
      double ss = 0.0;
      for (double x : v) ss += (x - mean) * (x - mean);
      se = std::sqrt(ss / static_cast<double>(v.size() - 1)) /
           std::sqrt(static_cast<double>(v.size()));
    }
    result.table.push_back({cfg.k_candidates[ci], mean, se});
  }

  // Smallest k with m_k <= m_{k+1} + 1.5 s_{k+1} over consecutive
  // candidates; the largest candidate only enters as the fallback.  The
  // absolute slack keeps exact ties (block-constant inputs reconstruct
  // perfectly at several k) from being broken by summation rounding.
  constexpr double kTieSlack = 1e-12;
  result.chosen_k = cfg.k_candidates.back();
  for (int ci = 0; ci + 1 < nk; ++ci) {
    if (result.table[ci].m_k <= result.table[ci + 1].m_k +
                                    1.5 * result.table[ci + 1].s_k +
                                    kTieSlack) {
      result.chosen_k = cfg.k_candidates[ci];
      break;
    }
  }
  return result;
}

double banerjee_lambda(const SymmetricMatrix& s, long n, double alpha) {
  if (n < 3) throw InsufficientN(n);
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidAlpha(alpha);
  const int p = s.dim();
  if (p < 2) throw InvalidArgument("banerjee_lambda requires p >= 2");
  double max_prod = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      max_prod = std::max(max_prod, s(i, i) * s(j, j));
    }
  }
  const double df = static_cast<double>(n - 2);
  const double q = alpha / (2.0 * static_cast<double>(p) * p);
  const double t = student_t_upper_quantile(df, q);
  return max_prod * t / std::sqrt(df + t * t);
}

std::vector<double> corollary_lambdas(const SimilarityMatrix& s_tilde,
                                      const Partition& partition,
                                      double epsilon) {
  if (s_tilde.dim() != partition.p()) {
    throw DimensionMismatch("corollary_lambdas", s_tilde.dim(), partition.p());
  }
  if (!(epsilon > 0.0)) {
    throw InvalidArgument("corollary_lambdas requires epsilon > 0");
  }
  std::vector<double> out;
  out.reserve(partition.size());
  for (int c = 0; c < partition.size(); ++c) {
    const auto& idx = partition.cluster(c);
    if (idx.size() < 2) {
      out.push_back(0.0);  // singleton: nothing to penalize
      continue;
    }
    const double bar = lambda_bar(
        agglomerate(s_tilde.submatrix(idx), LinkageMethod::kSingle));
    out.push_back(std::max(bar - epsilon, 0.0));
  }
  return out;
}

void TheoryParams::validate() const {
  if (!(alpha_incoherence > 0.0 && alpha_incoherence <= 1.0)) {
    throw InvalidArgument("alpha_incoherence must be in (0, 1]");
  }
  if (!(tau > 3.0)) throw InvalidArgument("tau must be > 3");
  if (!(c2 > 0.0)) throw InvalidArgument("c2 must be > 0");
  if (!(alpha_banerjee > 0.0 && alpha_banerjee < 1.0)) {
    throw InvalidAlpha(alpha_banerjee);
  }
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be > 0");
}

double theorem4_lambda(int p_k, long n, const TheoryParams& params) {
  params.validate();
  if (p_k < 1) throw InvalidArgument("theorem4_lambda requires p_k >= 1");
  if (n < 1) throw InsufficientN(n);
  return (8.0 / params.alpha_incoherence) *
         std::sqrt(params.c2 *
                   (params.tau * std::log(static_cast<double>(p_k)) +
                    std::log(4.0)) /
                   static_cast<double>(n));
}

}  // namespace cglasso
