#include "pspi/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace pspi {

namespace {

struct EdgeListContent {
    int n = -1;  // -1: no header
    std::vector<std::pair<int, int>> edges;
};

[[noreturn]] void fail(const std::filesystem::path& path, int line, const std::string& what) {
    throw IoError(path.string() + ":" + std::to_string(line) + ": " + what);
}

EdgeListContent parse_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("missing file: " + path.string());
    EdgeListContent content;
    std::string line;
    int lineno = 0;
    int max_index = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;  // blank or comment-only line
        if (first.rfind("n=", 0) == 0) {
            if (content.n != -1 || !content.edges.empty()) {
                fail(path, lineno, "header must appear once, before any edge");
            }
            char* end = nullptr;
            const long v = std::strtol(first.c_str() + 2, &end, 10);
            if (end == first.c_str() + 2 || *end != '\0' || v < 1) {
                fail(path, lineno, "malformed header '" + first + "'");
            }
            content.n = static_cast<int>(v);
            std::string rest;
            if (ss >> rest) fail(path, lineno, "unexpected token after header");
            continue;
        }
        int u = 0, v = 0;
        std::istringstream pair_ss(line);
        std::string extra;
        if (!(pair_ss >> u >> v)) fail(path, lineno, "expected 'u<TAB>v' pair");
        if (pair_ss >> extra) fail(path, lineno, "unexpected token '" + extra + "'");
        if (u < 0 || v < 0) fail(path, lineno, "negative node index");
        if (u == v) fail(path, lineno, "self-loop not allowed");
        content.edges.emplace_back(u, v);
        max_index = std::max(max_index, std::max(u, v));
    }
    if (content.n == -1) {
        if (max_index < 0) {
            throw IoError(path.string() + ": empty edge list without an 'n=' header");
        }
        content.n = max_index + 1;
    } else if (max_index >= content.n) {
        throw IoError(path.string() + ": node index " + std::to_string(max_index) +
                      " exceeds declared n=" + std::to_string(content.n));
    }
    return content;
}

std::string render_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    std::string out = "n=" + std::to_string(n) + "\n";
    for (auto [u, v] : edges) {
        out += std::to_string(u);
        out += '\t';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << content;
    if (!out) throw IoError("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("missing file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_edge_list(const std::filesystem::path& path, const AdjacencyMatrix& g) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.size(); ++i) {
        for (int j = i + 1; j < g.size(); ++j) {
            const double w = g(i, j);
            if (w == 0.0) continue;
            if (w != 1.0) {
                throw IoError("edge-list format holds unweighted graphs; entry (" +
                              std::to_string(i) + "," + std::to_string(j) + ") is " +
                              format_double(w));
            }
            edges.emplace_back(i, j);
        }
    }
    write_text_file(path, render_edge_list(g.size(), edges));
}

AdjacencyMatrix read_edge_list(const std::filesystem::path& path) {
    const EdgeListContent content = parse_edge_list(path);
    Matrix a = Matrix::Zero(content.n, content.n);
    for (auto [u, v] : content.edges) {
        if (a(u, v) != 0.0) {
            throw IoError(path.string() + ": pair (" + std::to_string(u) + "," +
                          std::to_string(v) + ") listed twice");
        }
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return AdjacencyMatrix(std::move(a));
}

void write_perturbation_edges(const std::filesystem::path& path,
                              const GroundTruthPerturbation& z) {
    write_text_file(path, render_edge_list(z.size(), z.edges()));
}

GroundTruthPerturbation read_perturbation_edges(const std::filesystem::path& path) {
    const EdgeListContent content = parse_edge_list(path);
    return GroundTruthPerturbation(content.n, content.edges);
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& m) {
    std::string out;
    out.reserve(static_cast<std::size_t>(m.size()) * 8);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ',';
            out += format_double(m(i, j));
        }
        out += '\n';
    }
    write_text_file(path, out);
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("missing file: " + path.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> row;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const std::size_t comma = std::min(line.find(',', pos), line.size());
            const std::string cell = line.substr(pos, comma - pos);
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0') {
                fail(path, lineno, "malformed number '" + cell + "'");
            }
            row.push_back(v);
            pos = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            fail(path, lineno, "ragged row");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IoError(path.string() + ": empty matrix");
    if (rows.size() != rows.front().size()) {
        throw IoError(path.string() + ": matrix is not square (" + std::to_string(rows.size()) +
                      " rows of " + std::to_string(rows.front().size()) + " columns)");
    }
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

void write_permutation_json(const std::filesystem::path& path, const PermutationSpec& p) {
    std::string out = "{\n  \"n\": " + std::to_string(p.size()) + ",\n  \"mapping\": [";
    for (int i = 0; i < p.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(p(i));
    }
    out += "]\n}\n";
    write_text_file(path, out);
}

PermutationSpec read_permutation_json(const std::filesystem::path& path) {
    // Tiny fixed-shape parser; full JSON reading elsewhere uses nlohmann.
    const std::string text = read_text_file(path);
    const auto npos = std::string::npos;
    const auto npos_check = [&](std::size_t v, const char* what) {
        if (v == npos) throw IoError(path.string() + ": missing " + what);
        return v;
    };
    const std::size_t nkey = npos_check(text.find("\"n\""), "\"n\" field");
    const std::size_t ncolon = npos_check(text.find(':', nkey), "':' after \"n\"");
    const int n = std::atoi(text.c_str() + ncolon + 1);
    const std::size_t mkey = npos_check(text.find("\"mapping\""), "\"mapping\" field");
    const std::size_t open = npos_check(text.find('[', mkey), "'['");
    const std::size_t close = npos_check(text.find(']', open), "']'");
    std::vector<int> mapping;
    std::string cell;
    std::istringstream ss(text.substr(open + 1, close - open - 1));
    while (std::getline(ss, cell, ',')) {
        if (cell.find_first_not_of(" \t\r\n") == npos) continue;
        mapping.push_back(std::atoi(cell.c_str()));
    }
    return PermutationSpec(n, std::move(mapping));
}

}  // namespace pspi
