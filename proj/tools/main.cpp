// Command-line front end: simulate, estimate, select-k, components, bench.
//
// Exit codes: 0 success, 1 runtime/numeric failure, 2 usage error.
// Machine-readable output goes to files only; stdout carries a short
// human-readable summary and stderr the diagnostics.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "cglasso/cgl.hpp"
#include "cglasso/covariance.hpp"
#include "cglasso/glasso.hpp"
#include "cglasso/hclust.hpp"
#include "cglasso/io.hpp"
#include "cglasso/metrics.hpp"
#include "cglasso/rng.hpp"
#include "cglasso/selection.hpp"
#include "cglasso/simgen.hpp"

namespace fs = std::filesystem;
using namespace cglasso;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("invalid integer list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

// "start:stop:count" -> count values linearly spaced over [start, stop].
std::vector<double> parse_grid(const std::string& text) {
  double start = 0.0, stop = 0.0;
  long count = 0;
  char c1 = 0, c2 = 0;
  std::stringstream ss(text);
  if (!(ss >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':' ||
      !(ss >> std::ws).eof()) {
    throw UsageError("invalid grid '" + text + "', expected start:stop:count");
  }
  if (count < 1 || stop < start) {
    throw UsageError("invalid grid '" + text + "'");
  }
  std::vector<double> out;
  if (count == 1) {
    out.push_back(start);
  } else {
    for (long i = 0; i < count; ++i) {
      out.push_back(start + (stop - start) * static_cast<double>(i) /
                                static_cast<double>(count - 1));
    }
  }
  return out;
}

struct CovInput {
  SymmetricMatrix s;
  std::optional<long> n;
  bool unit_diagonal = false;
};

// Shared --input/--cov ingestion: data goes through the standardize
// pipeline, a covariance file is used as-is.
CovInput load_covariance(const std::string& input, const std::string& cov,
                         long n_flag) {
  if (!input.empty() && !cov.empty()) {
    throw UsageError("pass either --input or --cov, not both");
  }
  if (!input.empty()) {
    DataMatrix x = io::read_data_csv(input);
    SymmetricMatrix s = empirical_covariance(standardize(x));
    return CovInput{std::move(s), x.n(), true};
  }
  if (cov.empty()) throw UsageError("one of --input or --cov is required");
  SymmetricMatrix s = io::read_covariance_csv(cov);
  bool unit = true;
  for (int j = 0; j < s.dim(); ++j) {
    if (std::abs(s(j, j) - 1.0) > 1e-8) unit = false;
  }
  std::optional<long> n;
  if (n_flag > 0) n = n_flag;
  return CovInput{std::move(s), n, unit};
}

int cmd_simulate(int p, const std::string& blocks_flag, int k_blocks,
                 double sparsity, long n, std::uint64_t seed,
                 double off_block_frac, const std::string& out_dir) {
  std::vector<int> sizes;
  if (!blocks_flag.empty()) {
    sizes = parse_int_list(blocks_flag);
    int total = 0;
    for (int b : sizes) total += b;
    if (p > 0 && total != p) {
      throw UsageError("--blocks sizes must sum to --p");
    }
  } else {
    if (k_blocks < 1) throw UsageError("--blocks or --k-blocks is required");
    if (p < k_blocks) throw UsageError("--p must be >= --k-blocks");
    const int base = p / k_blocks;
    const int extra = p % k_blocks;
    for (int k = 0; k < k_blocks; ++k) sizes.push_back(base + (k < extra));
  }

  SimulationTruth truth = generate_precision(sizes, sparsity, seed);
  if (off_block_frac > 0.0) {
    truth = perturb_off_block(truth, off_block_frac, seed);
  }
  DataMatrix x = sample_mvn(truth, n, seed);

  const fs::path dir(out_dir);
  io::write_truth_bundle(dir, truth);
  io::write_data_csv(dir / "X.csv", x);
  std::cout << "wrote " << (dir / "X.csv").string() << " and truth bundle ("
            << "p=" << truth.theta_true.dim() << ", blocks=" << sizes.size()
            << ", edges=" << truth.edge_set.size() << ")\n";
  return 0;
}

int cmd_components(const std::string& cov, double lambda,
                   const std::string& out_dir) {
  SymmetricMatrix s = io::read_covariance_csv(cov);
  Partition part = threshold_components(s, lambda);
  fs::create_directories(out_dir);
  io::write_text_file(fs::path(out_dir) / "components.json",
                      io::partition_to_json(part) + "\n");
  std::cout << part.size() << "\n";
  return 0;
}

int cmd_select_k(const std::string& input, const std::string& cov, long n,
                 int k_max, int t_repeats, const std::string& linkage,
                 std::uint64_t seed, const std::string& out_dir) {
  CovInput in = load_covariance(input, cov, n);
  if (k_max < 1 || k_max > in.s.dim()) {
    throw UsageError("--k-max must be in [1, p]");
  }
  SelectKConfig cfg;
  for (int k = 1; k <= k_max; ++k) cfg.k_candidates.push_back(k);
  cfg.t_repeats = t_repeats;
  cfg.linkage = linkage_from_name(linkage);
  cfg.seed = seed;
  SelectKResult res = select_k(similarity_matrix(in.s), cfg);

  fs::create_directories(out_dir);
  std::ofstream out(fs::path(out_dir) / "select_k.csv", std::ios::binary);
  out << "k,m_k,s_k\n";
  for (const auto& row : res.table) {
    out << row.k << "," << io::format_double(row.m_k) << ","
        << io::format_double(row.s_k) << "\n";
  }
  std::cout << res.chosen_k << "\n";
  return 0;
}

struct LambdaRule {
  std::string rule = "fixed";
  double lambda = -1.0;
  TheoryParams params;
};

std::vector<double> resolve_lambdas(const LambdaRule& rule,
                                    const SymmetricMatrix& s,
                                    const SimilarityMatrix& sim,
                                    const Partition& partition,
                                    std::optional<long> n) {
  const auto need_n = [&]() -> long {
    if (!n) throw UsageError("--n is required for this lambda rule");
    return *n;
  };
  if (rule.rule == "fixed") {
    if (rule.lambda < 0.0) throw UsageError("--lambda is required");
    return {rule.lambda};
  }
  if (rule.rule == "banerjee") {
    return {banerjee_lambda(s, need_n(), rule.params.alpha_banerjee)};
  }
  if (rule.rule == "corollary") {
    return corollary_lambdas(sim, partition, rule.params.epsilon);
  }
  if (rule.rule == "theorem4") {
    std::vector<double> out;
    for (const auto& c : partition.clusters()) {
      out.push_back(theorem4_lambda(static_cast<int>(c.size()), need_n(),
                                    rule.params));
    }
    return out;
  }
  throw UsageError("unknown lambda rule '" + rule.rule + "'");
}

int cmd_estimate(const std::string& input, const std::string& cov, long n,
                 const std::string& method, const std::string& linkage,
                 int k, bool select_k_flag, int k_max, int t_repeats,
                 const LambdaRule& rule, std::uint64_t seed,
                 const std::string& out_dir) {
  CovInput in = load_covariance(input, cov, n);
  const SymmetricMatrix& s = in.s;
  SimilarityMatrix sim = similarity_matrix(s);
  const fs::path dir(out_dir);
  fs::create_directories(dir);

  if (method == "glasso") {
    // Scalar lambda; the corollary rule additionally needs a clustering,
    // cut at --k over the requested linkage, and takes the smallest
    // non-singleton per-cluster value.
    double lambda;
    if (rule.rule == "corollary") {
      if (k < 1) {
        throw UsageError("--k is required for --lambda-rule corollary");
      }
      Partition part = cut_k(agglomerate(sim, linkage_from_name(linkage)), k);
      auto per_cluster = resolve_lambdas(rule, s, sim, part, in.n);
      double lo = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < per_cluster.size(); ++c) {
        if (part.cluster(static_cast<int>(c)).size() > 1) {
          lo = std::min(lo, per_cluster[c]);
        }
      }
      lambda = std::isfinite(lo) ? lo : 0.0;
    } else {
      std::vector<int> all(s.dim());
      for (int i = 0; i < s.dim(); ++i) all[i] = i;
      Partition one(s.dim(), {all});
      lambda = resolve_lambdas(rule, s, sim, one, in.n)[0];
    }
    GlassoFit fit = solve(s, PenaltyWeights::scalar(lambda));
    io::write_text_file(dir / "network.json", io::glasso_fit_to_json(fit));
    io::write_edges_csv(dir / "edges.csv", fit.theta);
    EdgeConfusion self = edge_confusion(fit.theta, fit.theta);
    std::cout << "method: glasso\nlambda: " << lambda
              << "\nunit_diagonal_input: " << (in.unit_diagonal ? "yes" : "no")
              << "\ncomponents: "
              << threshold_components(fit.theta, 1e-8).size()
              << "\nedges: " << self.tp << "\nobjective: " << fit.objective
              << "\nkkt_residual: " << fit.kkt_residual
              << "\nconverged: " << (fit.converged ? "yes" : "no") << "\n";
    return fit.converged ? 0 : 1;
  }

  if (method != "cgl") throw UsageError("--method must be glasso or cgl");

  int k_used = k;
  if (select_k_flag) {
    if (k_max < 1) throw UsageError("--select-k requires --k-max");
    SelectKConfig cfg;
    for (int kk = 1; kk <= k_max; ++kk) cfg.k_candidates.push_back(kk);
    cfg.t_repeats = t_repeats;
    cfg.linkage = linkage_from_name(linkage);
    cfg.seed = seed;
    k_used = select_k(sim, cfg).chosen_k;
  }
  if (k_used < 1 || k_used > s.dim()) {
    throw UsageError("--k must be in [1, p] (or pass --select-k)");
  }

  Partition part = cut_k(agglomerate(sim, linkage_from_name(linkage)), k_used);
  std::vector<double> lams = resolve_lambdas(rule, s, sim, part, in.n);
  CglFit fit = run_cgl_with_partition(s, part, lams);

  io::write_text_file(dir / "network.json", io::cgl_fit_to_json(fit));
  io::write_edges_csv(dir / "edges.csv", fit.theta);

  double objective_total = 0.0, kkt = 0.0;
  bool converged = true;
  for (const auto& f : fit.per_cluster) {
    objective_total += f.objective;
    kkt = std::max(kkt, f.kkt_residual);
    converged = converged && f.converged;
  }
  EdgeConfusion self = edge_confusion(fit.theta, fit.theta);
  std::cout << "method: cgl\nlinkage: " << linkage << "\nk: " << k_used
            << "\nlambdas:";
  for (double l : fit.lambdas_used) std::cout << " " << l;
  std::cout << "\nunit_diagonal_input: " << (in.unit_diagonal ? "yes" : "no")
            << "\ncomponents: " << threshold_components(fit.theta, 1e-8).size()
            << "\nedges: " << self.tp << "\nobjective: " << objective_total
            << "\nkkt_residual: " << kkt
            << "\nconverged: " << (converged ? "yes" : "no") << "\n";
  return converged ? 0 : 1;
}

struct BenchRow {
  std::string method;
  std::string linkage;
  int k = 0;
  double lambda = 0.0;
  long nnz = 0;
  double mse = 0.0;
  double tpr = 0.0;
  double fpr = 0.0;
  bool recovered = false;
  std::string marker;  // empty for grid rows
};

struct BenchMethod {
  std::string name;                      // glasso | cgl-slc | cgl-alc | cgl-clc
  std::optional<LinkageMethod> linkage;  // empty for glasso
  int k = 0;                             // 0 for glasso
};

BenchRow evaluate_fit(const BenchMethod& m, double lambda,
                      const SymmetricMatrix& theta,
                      const SimulationTruth& truth) {
  BenchRow row;
  row.method = m.name;
  row.linkage = m.linkage ? linkage_name(*m.linkage) : "-";
  row.k = m.k;
  row.lambda = lambda;
  EdgeConfusion conf = edge_confusion(theta, truth.theta_true);
  row.nnz = conf.tp + conf.fp;
  row.mse = precision_mse(theta, truth.theta_true);
  row.tpr = conf.tpr;
  row.fpr = conf.fpr;
  row.recovered = threshold_components(theta, 1e-8) == truth.partition_true;
  return row;
}

int cmd_bench(const std::string& truth_prefix, long n,
              const std::string& methods_flag, const std::string& grid_flag,
              const std::string& k_flag, int replicates, std::uint64_t seed,
              double alpha, double epsilon, int threads,
              const std::string& out_dir) {
  SimulationTruth truth = io::read_truth_bundle(truth_prefix);
  const std::vector<double> grid = parse_grid(grid_flag);
  const std::vector<int> ks =
      k_flag.empty() ? std::vector<int>{truth.partition_true.size()}
                     : parse_int_list(k_flag);

  std::vector<BenchMethod> methods;
  {
    std::stringstream ss(methods_flag);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "glasso") {
        methods.push_back({tok, std::nullopt, 0});
      } else if (tok == "cgl-slc" || tok == "cgl-alc" || tok == "cgl-clc") {
        for (int k : ks) {
          methods.push_back({tok, linkage_from_name(tok.substr(4)), k});
        }
      } else if (!tok.empty()) {
        throw UsageError("unknown method '" + tok + "'");
      }
    }
  }
  if (methods.empty()) throw UsageError("--methods is empty");
  if (replicates < 1) throw UsageError("--replicates must be >= 1");

  // One task per replicate; rows land in preallocated slots so the output
  // is byte-identical however many threads run.
  std::vector<std::vector<BenchRow>> grid_rows(replicates);
  std::vector<std::vector<BenchRow>> marker_rows(replicates);
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const int rep = next.fetch_add(1);
      if (rep >= replicates) return;
      if (failed.load()) continue;
      try {
        DataMatrix x =
            sample_mvn(truth, n, derive_seed(seed, "bench-rep", rep));
        SymmetricMatrix s = empirical_covariance(standardize(x));
        SimilarityMatrix sim = similarity_matrix(s);
        const double lam_banerjee = banerjee_lambda(s, n, alpha);

        for (const auto& m : methods) {
          std::optional<Partition> part;
          if (m.linkage) {
            part = cut_k(agglomerate(sim, *m.linkage), m.k);
          }
          auto fit_at = [&](double lam) -> SymmetricMatrix {
            if (part) {
              return run_cgl_with_partition(s, *part, {lam}).theta;
            }
            return solve(s, PenaltyWeights::scalar(lam)).theta;
          };
          for (double lam : grid) {
            grid_rows[rep].push_back(evaluate_fit(m, lam, fit_at(lam), truth));
          }

          // Marked points: the just-below-split choice and the
          // probability-alpha choice, both on the shared-lambda curve.
          Partition marker_part =
              part ? *part
                   : cut_k(agglomerate(sim, LinkageMethod::kSingle),
                           truth.partition_true.size());
          auto per_cluster = corollary_lambdas(sim, marker_part, epsilon);
          double lam_cor = std::numeric_limits<double>::infinity();
          for (std::size_t c = 0; c < per_cluster.size(); ++c) {
            if (marker_part.cluster(static_cast<int>(c)).size() > 1) {
              lam_cor = std::min(lam_cor, per_cluster[c]);
            }
          }
          if (!std::isfinite(lam_cor)) lam_cor = 0.0;

          BenchRow cor = evaluate_fit(m, lam_cor, fit_at(lam_cor), truth);
          cor.marker = "corollary";
          marker_rows[rep].push_back(cor);
          BenchRow ban =
              evaluate_fit(m, lam_banerjee, fit_at(lam_banerjee), truth);
          ban.marker = "banerjee";
          marker_rows[rep].push_back(ban);
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) first_error = e.what();
      }
    }
  };

  const int nthreads = std::max(1, std::min(threads, replicates));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) {
    throw Error("bench replicate failed: " + first_error);
  }

  const fs::path dir(out_dir);
  fs::create_directories(dir);
  auto write_rows = [&](const fs::path& path,
                        const std::vector<std::vector<BenchRow>>& rows,
                        bool with_marker) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    out << "method,linkage,k,lambda,nnz_edges,mse,tpr,fpr,components_recovered";
    if (with_marker) out << ",marker";
    out << "\n";
    for (const auto& per_rep : rows) {
      for (const auto& r : per_rep) {
        out << r.method << "," << r.linkage << "," << r.k << ","
            << io::format_double(r.lambda) << "," << r.nnz << ","
            << io::format_double(r.mse) << "," << io::format_double(r.tpr)
            << "," << io::format_double(r.fpr) << "," << (r.recovered ? 1 : 0);
        if (with_marker) out << "," << r.marker;
        out << "\n";
      }
    }
  };
  write_rows(dir / "bench.csv", grid_rows, false);
  write_rows(dir / "markers.csv", marker_rows, true);
  std::cout << "wrote " << (dir / "bench.csv").string() << " ("
            << replicates * grid.size() * methods.size() << " rows) and "
            << (dir / "markers.csv").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse Gaussian graphical model estimation via the graphical "
               "lasso and the cluster graphical lasso"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate",
                                 "Generate a block-diagonal truth and data");
  int sim_p = 0, sim_kblocks = 0;
  std::string sim_blocks, sim_out = ".";
  double sim_sparsity = 0.0, sim_offfrac = 0.0;
  long sim_n = 0;
  std::uint64_t sim_seed = 0;
  sim->add_option("--p", sim_p, "feature count");
  sim->add_option("--blocks", sim_blocks, "comma list of block sizes");
  sim->add_option("--k-blocks", sim_kblocks, "number of equal blocks");
  sim->add_option("--sparsity", sim_sparsity, "within-block zero probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  sim->add_option("--n", sim_n, "observations to sample")
      ->required()
      ->check(CLI::PositiveNumber);
  sim->add_option("--seed", sim_seed, "rng seed")->required();
  sim->add_option("--off-block-frac", sim_offfrac,
                  "fraction of off-block pairs to perturb")
      ->check(CLI::Range(0.0, 1.0));
  sim->add_option("--out-dir", sim_out, "output directory");

  // estimate
  auto* est = app.add_subcommand("estimate", "Fit a network estimate");
  std::string est_input, est_cov, est_method = "glasso", est_linkage = "alc";
  std::string est_rule = "fixed", est_out = ".";
  long est_n = 0;
  int est_k = 0, est_kmax = 0, est_trepeats = 10;
  bool est_selectk = false;
  double est_lambda = -1.0, est_alpha = 0.05, est_eps = 0.01, est_tau = 4.0,
         est_c2 = 1.0;
  std::uint64_t est_seed = 0;
  est->add_option("--input", est_input, "data csv (rows = observations)");
  est->add_option("--cov", est_cov, "covariance csv");
  est->add_option("--n", est_n, "sample size (with --cov)");
  est->add_option("--method", est_method, "glasso|cgl");
  est->add_option("--linkage", est_linkage, "slc|alc|clc");
  est->add_option("--k", est_k, "cluster count for cgl")
      ->check(CLI::PositiveNumber);
  est->add_flag("--select-k", est_selectk, "choose k by held-out imputation");
  est->add_option("--k-max", est_kmax, "largest k candidate for --select-k");
  est->add_option("--t-repeats", est_trepeats, "repeats for --select-k")
      ->check(CLI::PositiveNumber);
  est->add_option("--lambda", est_lambda, "penalty value");
  est->add_option("--lambda-rule", est_rule,
                  "fixed|banerjee|corollary|theorem4");
  est->add_option("--alpha", est_alpha, "alpha for banerjee / theorem4");
  est->add_option("--epsilon", est_eps, "corollary back-off");
  est->add_option("--tau", est_tau, "theorem4 tau (> 3)");
  est->add_option("--c2", est_c2, "theorem4 c2");
  est->add_option("--seed", est_seed, "rng seed (used by --select-k)");
  est->add_option("--out-dir", est_out, "output directory");

  // select-k
  auto* sel = app.add_subcommand("select-k", "Choose the cluster count");
  std::string sel_input, sel_cov, sel_linkage = "alc", sel_out = ".";
  long sel_n = 0;
  int sel_kmax = 0, sel_trepeats = 10;
  std::uint64_t sel_seed = 0;
  sel->add_option("--input", sel_input, "data csv");
  sel->add_option("--cov", sel_cov, "covariance csv");
  sel->add_option("--n", sel_n, "sample size (with --cov)");
  sel->add_option("--k-max", sel_kmax, "largest candidate k")
      ->required()
      ->check(CLI::PositiveNumber);
  sel->add_option("--t-repeats", sel_trepeats, "hold-out repeats")
      ->check(CLI::PositiveNumber);
  sel->add_option("--linkage", sel_linkage, "slc|alc|clc");
  sel->add_option("--seed", sel_seed, "rng seed");
  sel->add_option("--out-dir", sel_out, "output directory");

  // components
  auto* comp = app.add_subcommand("components",
                                  "Thresholded connected components");
  std::string comp_cov, comp_out = ".";
  double comp_lambda = 0.0;
  comp->add_option("--cov", comp_cov, "covariance csv")->required();
  comp->add_option("--lambda", comp_lambda, "threshold")
      ->required()
      ->check(CLI::NonNegativeNumber);
  comp->add_option("--out-dir", comp_out, "output directory");

  // bench
  auto* ben = app.add_subcommand("bench", "Lambda-sweep benchmark");
  std::string ben_truth, ben_methods = "glasso,cgl-alc", ben_grid, ben_k,
      ben_out = ".";
  long ben_n = 0;
  int ben_reps = 0, ben_threads = 1;
  double ben_alpha = 0.05, ben_eps = 0.01;
  std::uint64_t ben_seed = 0;
  ben->add_option("--truth-prefix", ben_truth, "directory written by simulate")
      ->required();
  ben->add_option("--n", ben_n, "observations per replicate")
      ->required()
      ->check(CLI::PositiveNumber);
  ben->add_option("--methods", ben_methods,
                  "comma list: glasso,cgl-slc,cgl-alc,cgl-clc");
  ben->add_option("--lambda-grid", ben_grid, "start:stop:count")->required();
  ben->add_option("--k", ben_k, "comma list of cluster counts for cgl");
  ben->add_option("--replicates", ben_reps, "replicates")
      ->required()
      ->check(CLI::PositiveNumber);
  ben->add_option("--seed", ben_seed, "rng seed")->required();
  ben->add_option("--alpha", ben_alpha, "banerjee marker alpha");
  ben->add_option("--epsilon", ben_eps, "corollary marker back-off");
  ben->add_option("--threads", ben_threads, "worker threads")
      ->check(CLI::PositiveNumber);
  ben->add_option("--out-dir", ben_out, "output directory");

  bool dump_config = false;
  app.add_flag("--dump-config", dump_config,
               "print the resolved configuration as JSON and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (dump_config) {
    nlohmann::json cfg;
    for (const auto* sub : app.get_subcommands()) {
      nlohmann::json flags;
      for (const auto* opt : sub->get_options()) {
        if (!opt->get_name().empty() && opt->count() > 0) {
          flags[opt->get_name()] = opt->results();
        }
      }
      cfg[sub->get_name()] = flags;
    }
    std::cout << cfg.dump(2) << "\n";
    return 0;
  }

  try {
    if (sim->parsed()) {
      return cmd_simulate(sim_p, sim_blocks, sim_kblocks, sim_sparsity, sim_n,
                          sim_seed, sim_offfrac, sim_out);
    }
    if (est->parsed()) {
      LambdaRule rule;
      rule.rule = est_rule;
      rule.lambda = est_lambda;
      rule.params.alpha_banerjee = est_alpha;
      rule.params.epsilon = est_eps;
      rule.params.tau = est_tau;
      rule.params.c2 = est_c2;
      return cmd_estimate(est_input, est_cov, est_n, est_method, est_linkage,
                          est_k, est_selectk, est_kmax, est_trepeats, rule,
                          est_seed, est_out);
    }
    if (sel->parsed()) {
      return cmd_select_k(sel_input, sel_cov, sel_n, sel_kmax, sel_trepeats,
                          sel_linkage, sel_seed, sel_out);
    }
    if (comp->parsed()) {
      return cmd_components(comp_cov, comp_lambda, comp_out);
    }
    if (ben->parsed()) {
      return cmd_bench(ben_truth, ben_n, ben_methods, ben_grid, ben_k,
                       ben_reps, ben_seed, ben_alpha, ben_eps, ben_threads,
                       ben_out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
