#pragma once

#include <filesystem>
#include <string>

#include "cglasso/cgl.hpp"
#include "cglasso/glasso.hpp"
#include "cglasso/hclust.hpp"
#include "cglasso/simgen.hpp"
#include "cglasso/types.hpp"

namespace cglasso::io {

// 17 significant digits, enough to round-trip a double exactly.
std::string format_double(double v);

// Comma-separated observations, one row per observation.  A single header
// row is auto-detected (any non-numeric first-row field) and becomes the
// feature names.
DataMatrix read_data_csv(const std::filesystem::path& path);

// p x p matrix; symmetry validated within 1e-8, then symmetrized by
// averaging.
SymmetricMatrix read_covariance_csv(const std::filesystem::path& path);

void write_matrix_csv(const std::filesystem::path& path, const Matrix& m);
void write_data_csv(const std::filesystem::path& path, const DataMatrix& x);

std::string dendrogram_to_json(const Dendrogram& d);
Dendrogram dendrogram_from_json(const std::string& text);

// JSON list of integer lists, 0-based.
std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

std::string glasso_fit_to_json(const GlassoFit& fit);
std::string cgl_fit_to_json(const CglFit& fit);

// Unordered pairs i < j with exactly nonzero theta_ij;
// partial_correlation = -theta_ij / sqrt(theta_ii theta_jj).
void write_edges_csv(const std::filesystem::path& path,
                     const SymmetricMatrix& theta);

void write_truth_bundle(const std::filesystem::path& dir,
                        const SimulationTruth& truth);
SimulationTruth read_truth_bundle(const std::filesystem::path& dir);

void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

}  // namespace cglasso::io
