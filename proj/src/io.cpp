#include "cglasso/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cglasso/rng.hpp"

namespace cglasso::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

bool parse_double(const std::string& s, double& out) {
  const char* begin = s.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end == ' ' || *end == '\t') ++end;
  return *end == '\0';
}

// Parses a CSV of doubles; a non-numeric first row is returned as a header.
std::pair<Matrix, std::optional<std::vector<std::string>>> read_csv_matrix(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::optional<std::vector<std::string>> header;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    std::vector<double> row(fields.size());
    bool numeric = true;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (!parse_double(fields[i], row[i])) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (!first) {
        throw InvalidArgument("non-numeric row in " + path.string());
      }
      header = std::move(fields);
    } else {
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw InvalidArgument("ragged rows in " + path.string());
      }
      rows.push_back(std::move(row));
    }
    first = false;
  }
  if (rows.empty()) throw InvalidArgument("no data rows in " + path.string());
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
    }
  }
  return {std::move(m), std::move(header)};
}

}  // namespace

DataMatrix read_data_csv(const std::filesystem::path& path) {
  auto [m, header] = read_csv_matrix(path);
  return DataMatrix(std::move(m), std::move(header));
}

SymmetricMatrix read_covariance_csv(const std::filesystem::path& path) {
  auto [m, header] = read_csv_matrix(path);
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("covariance csv", m.rows(), m.cols());
  }
  return SymmetricMatrix(std::move(m), 1e-8);
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  for (long j = 0; j < m.cols(); ++j) {
    out << (j ? "," : "") << "c" << j;
  }
  out << "\n";
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) {
      out << (j ? "," : "") << format_double(m(i, j));
    }
    out << "\n";
  }
}

void write_data_csv(const std::filesystem::path& path, const DataMatrix& x) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  for (int j = 0; j < x.p(); ++j) {
    out << (j ? "," : "");
    if (x.feature_names) {
      out << (*x.feature_names)[j];
    } else {
      out << "x" << j;
    }
  }
  out << "\n";
  for (long i = 0; i < x.n(); ++i) {
    for (int j = 0; j < x.p(); ++j) {
      out << (j ? "," : "") << format_double(x.values(i, j));
    }
    out << "\n";
  }
}

std::string dendrogram_to_json(const Dendrogram& d) {
  json merges = json::array();
  for (const auto& m : d.merges()) {
    merges.push_back({{"left", m.left}, {"right", m.right},
                      {"height", m.height}});
  }
  return json{{"p", d.p()}, {"merges", merges}}.dump();
}

Dendrogram dendrogram_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<Dendrogram::Merge> merges;
  for (const auto& m : j.at("merges")) {
    merges.push_back({m.at("left").get<int>(), m.at("right").get<int>(),
                      m.at("height").get<double>()});
  }
  return Dendrogram(j.at("p").get<int>(), std::move(merges));
}

std::string partition_to_json(const Partition& p) {
  return json(p.clusters()).dump();
}

Partition partition_from_json(const std::string& text) {
  json j = json::parse(text);
  auto clusters = j.get<std::vector<std::vector<int>>>();
  int p = 0;
  for (const auto& c : clusters) p += static_cast<int>(c.size());
  return Partition(p, std::move(clusters));
}

namespace {

json theta_json(const SymmetricMatrix& theta) {
  const int p = theta.dim();
  json flat = json::array();
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) flat.push_back(theta(i, j));
  }
  return flat;
}

json fit_json(const GlassoFit& fit) {
  return json{{"p", fit.theta.dim()},
              {"theta", theta_json(fit.theta)},
              {"objective", fit.objective},
              {"kkt_residual", fit.kkt_residual},
              {"sweeps", fit.sweeps},
              {"converged", fit.converged}};
}

}  // namespace

std::string glasso_fit_to_json(const GlassoFit& fit) {
  return fit_json(fit).dump(2) + "\n";
}

std::string cgl_fit_to_json(const CglFit& fit) {
  json summaries = json::array();
  for (const auto& f : fit.per_cluster) {
    summaries.push_back({{"p", f.theta.dim()},
                         {"objective", f.objective},
                         {"kkt_residual", f.kkt_residual},
                         {"sweeps", f.sweeps},
                         {"converged", f.converged}});
  }
  json j{{"p", fit.theta.dim()},
         {"theta", theta_json(fit.theta)},
         {"partition", fit.partition.clusters()},
         {"lambdas_used", fit.lambdas_used},
         {"per_cluster_summaries", summaries}};
  return j.dump(2) + "\n";
}

void write_edges_csv(const std::filesystem::path& path,
                     const SymmetricMatrix& theta) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << "i,j,theta_ij,partial_correlation\n";
  const int p = theta.dim();
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (theta(i, j) == 0.0) continue;
      const double pc =
          -theta(i, j) / std::sqrt(theta(i, i) * theta(j, j));
      out << i << "," << j << "," << format_double(theta(i, j)) << ","
          << format_double(pc) << "\n";
    }
  }
}

void write_truth_bundle(const std::filesystem::path& dir,
                        const SimulationTruth& truth) {
  std::filesystem::create_directories(dir);
  write_matrix_csv(dir / "theta_true.csv", truth.theta_true.mat());
  write_matrix_csv(dir / "sigma_true.csv", truth.sigma_true.mat());
  write_text_file(dir / "partition_true.json",
                  partition_to_json(truth.partition_true) + "\n");
  std::vector<int> block_sizes;
  for (const auto& c : truth.partition_true.clusters()) {
    block_sizes.push_back(static_cast<int>(c.size()));
  }
  json meta{{"seed", truth.seed},
            {"s", truth.sparsity_s},
            {"block_sizes", block_sizes},
            {"off_block_fraction", truth.off_block_fraction},
            {"theta_min", truth.theta_min},
            {"generator_name", kGeneratorName}};
  write_text_file(dir / "meta.json", meta.dump(2) + "\n");
}

SimulationTruth read_truth_bundle(const std::filesystem::path& dir) {
  SymmetricMatrix theta = read_covariance_csv(dir / "theta_true.csv");
  SymmetricMatrix sigma = read_covariance_csv(dir / "sigma_true.csv");
  Partition part = partition_from_json(slurp(dir / "partition_true.json"));
  json meta = json::parse(slurp(dir / "meta.json"));

  std::set<std::pair<int, int>> edges;
  double theta_min = 0.0;
  bool first = true;
  for (int i = 0; i < theta.dim(); ++i) {
    for (int j = i + 1; j < theta.dim(); ++j) {
      if (theta(i, j) != 0.0) {
        edges.emplace(i, j);
        theta_min = first ? std::abs(theta(i, j))
                          : std::min(theta_min, std::abs(theta(i, j)));
        first = false;
      }
    }
  }
  Matrix raw = theta.mat();
  raw.diagonal().setZero();
  return SimulationTruth{std::move(theta),
                         std::move(sigma),
                         std::move(part),
                         std::move(edges),
                         theta_min,
                         meta.at("s").get<double>(),
                         meta.at("off_block_fraction").get<double>(),
                         meta.at("seed").get<std::uint64_t>(),
                         std::move(raw)};
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << text;
}

}  // namespace cglasso::io
