#pragma once

#include <filesystem>
#include <string>

#include "pspi/graph.hpp"

namespace pspi {

// Edge-list text format: optional "n=<count>" header, then one "u<TAB>v" pair
// per line (0-based, each unordered pair once). '#' starts a comment. Without
// a header, n = max index + 1.

void write_edge_list(const std::filesystem::path& path, const AdjacencyMatrix& g);
AdjacencyMatrix read_edge_list(const std::filesystem::path& path);

void write_perturbation_edges(const std::filesystem::path& path,
                              const GroundTruthPerturbation& z);
GroundTruthPerturbation read_perturbation_edges(const std::filesystem::path& path);

// Dense matrix CSV: n rows of comma-separated reals, 17 significant digits.
void write_matrix_csv(const std::filesystem::path& path, const Matrix& m);
Matrix read_matrix_csv(const std::filesystem::path& path);

void write_permutation_json(const std::filesystem::path& path, const PermutationSpec& p);
PermutationSpec read_permutation_json(const std::filesystem::path& path);

/// Shortest exact decimal form of a double ("%.17g"); round-trips bit-exactly.
std::string format_double(double value);

/// Write a string to a file, replacing existing content.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace pspi
