#include "pspi/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "pspi/rng.hpp"

namespace pspi {

namespace {

void require_symmetric_zero_diagonal(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw ParameterError("adjacency matrix must be square");
    }
    if (m.rows() < 1) {
        throw ParameterError("adjacency matrix must have at least one vertex");
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m(i, i) != 0.0) {
            throw ParameterError("adjacency matrix must have a zero diagonal (row " +
                                 std::to_string(i) + ")");
        }
        for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
            if (m(i, j) != m(j, i)) {
                throw ParameterError("adjacency matrix must be symmetric (entry " +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
}

}  // namespace

AdjacencyMatrix::AdjacencyMatrix(Matrix data) : data_(std::move(data)) {
    require_symmetric_zero_diagonal(data_);
}

AdjacencyMatrix AdjacencyMatrix::empty(int n) {
    if (n < 1) throw ParameterError("vertex count must be >= 1");
    return AdjacencyMatrix(Matrix::Zero(n, n));
}

std::int64_t AdjacencyMatrix::edge_count() const {
    std::int64_t count = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (data_(i, j) != 0.0) ++count;
    return count;
}

std::vector<int> AdjacencyMatrix::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(size()), 0);
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (j != i && data_(i, j) != 0.0) ++deg[static_cast<std::size_t>(i)];
    return deg;
}

PermutationSpec::PermutationSpec(int n, std::vector<int> mapping)
    : n_(n), mapping_(std::move(mapping)) {
    if (n_ < 1) throw ParameterError("permutation size must be >= 1");
    if (mapping_.size() != static_cast<std::size_t>(n_)) {
        throw ParameterError("permutation mapping length does not match size");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int v : mapping_) {
        if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)]) {
            throw ParameterError("permutation mapping is not a bijection on [0,n)");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

PermutationSpec PermutationSpec::identity(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return PermutationSpec(n, std::move(m));
}

PermutationSpec PermutationSpec::inverse() const {
    std::vector<int> inv(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) inv[static_cast<std::size_t>(mapping_[static_cast<std::size_t>(i)])] = i;
    return PermutationSpec(n_, std::move(inv));
}

bool PermutationSpec::is_identity() const {
    for (int i = 0; i < n_; ++i)
        if (mapping_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Matrix PermutationSpec::to_matrix() const {
    Matrix p = Matrix::Zero(n_, n_);
    for (int i = 0; i < n_; ++i) p(mapping_[static_cast<std::size_t>(i)], i) = 1.0;
    return p;
}

GroundTruthPerturbation::GroundTruthPerturbation(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw ParameterError("perturbation size must be >= 1");
    for (auto& [u, v] : edges_) {
        if (u == v) throw ParameterError("perturbation edge may not be a self-loop");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_) throw ParameterError("perturbation edge index out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw ParameterError("perturbation edge listed twice");
    }
}

bool GroundTruthPerturbation::contains(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

Matrix GroundTruthPerturbation::to_matrix() const {
    Matrix z = Matrix::Zero(n_, n_);
    for (auto [u, v] : edges_) {
        z(u, v) = 1.0;
        z(v, u) = 1.0;
    }
    return z;
}

AdjacencyMatrix generate_er(int n, double p, std::uint64_t seed) {
    if (n < 1) throw ParameterError("generate_er: vertex count must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterError("generate_er: edge probability must lie in [0,1]");
    }
    Matrix a = Matrix::Zero(n, n);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (next_unit(rng) < p) {
                a(i, j) = 1.0;
                a(j, i) = 1.0;
            }
        }
    }
    return AdjacencyMatrix(std::move(a));
}

AdjacencyMatrix generate_sf(int n, double exponent, std::uint64_t seed) {
    if (n < 2) throw ParameterError("generate_sf: vertex count must be >= 2");
    if (!(exponent > 1.0)) throw ParameterError("generate_sf: exponent must be > 1");

    std::mt19937_64 rng(seed);

    // Discrete power-law weights on {1, ..., n-1}: P(w = k) proportional to k^-exponent.
    const int w_max = n - 1;
    std::vector<double> cdf(static_cast<std::size_t>(w_max));
    double total = 0.0;
    for (int k = 1; k <= w_max; ++k) {
        total += std::pow(static_cast<double>(k), -exponent);
        cdf[static_cast<std::size_t>(k - 1)] = total;
    }
    std::vector<double> weight(static_cast<std::size_t>(n));
    double weight_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = next_unit(rng) * total;
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        const int w = static_cast<int>(it - cdf.begin()) + 1;
        weight[static_cast<std::size_t>(i)] = static_cast<double>(w);
        weight_sum += static_cast<double>(w);
    }

    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double pij = std::min(
                1.0, weight[static_cast<std::size_t>(i)] * weight[static_cast<std::size_t>(j)] / weight_sum);
            if (next_unit(rng) < pij) {
                a(i, j) = 1.0;
                a(j, i) = 1.0;
            }
        }
    }
    return AdjacencyMatrix(std::move(a));
}

std::pair<AdjacencyMatrix, GroundTruthPerturbation> plant_clique_perturbation(
    const AdjacencyMatrix& g, const std::vector<int>& nodes) {
    const int n = g.size();
    std::set<int> unique(nodes.begin(), nodes.end());
    if (unique.size() != nodes.size()) {
        throw ParameterError("plant_clique_perturbation: duplicate node in clique");
    }
    if (nodes.size() < 2) {
        throw ParameterError("plant_clique_perturbation: clique needs at least 2 nodes");
    }
    for (int v : nodes) {
        if (v < 0 || v >= n) {
            throw ParameterError("plant_clique_perturbation: node index out of range");
        }
    }
    std::vector<int> sorted(unique.begin(), unique.end());
    Matrix a = g.data();
    std::vector<std::pair<int, int>> added;
    for (std::size_t x = 0; x < sorted.size(); ++x) {
        for (std::size_t y = x + 1; y < sorted.size(); ++y) {
            const int u = sorted[x], v = sorted[y];
            if (a(u, v) == 0.0) {
                a(u, v) = 1.0;
                a(v, u) = 1.0;
                added.emplace_back(u, v);
            }
        }
    }
    return {AdjacencyMatrix(std::move(a)), GroundTruthPerturbation(n, std::move(added))};
}

AdjacencyMatrix add_noise_edges(const AdjacencyMatrix& g, std::int64_t m, std::uint64_t seed) {
    if (m < 0) throw ParameterError("add_noise_edges: edge count must be >= 0");
    const int n = g.size();
    std::vector<std::pair<int, int>> absent;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j)) absent.emplace_back(i, j);
    if (m > static_cast<std::int64_t>(absent.size())) {
        throw ParameterError("add_noise_edges: requested " + std::to_string(m) +
                             " edges but only " + std::to_string(absent.size()) +
                             " pairs are absent");
    }
    Matrix a = g.data();
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates over the absent pairs: uniform without replacement.
    for (std::int64_t t = 0; t < m; ++t) {
        const std::size_t pick =
            static_cast<std::size_t>(t) +
            static_cast<std::size_t>(next_below(rng, absent.size() - static_cast<std::size_t>(t)));
        std::swap(absent[static_cast<std::size_t>(t)], absent[pick]);
        const auto [u, v] = absent[static_cast<std::size_t>(t)];
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return AdjacencyMatrix(std::move(a));
}

AdjacencyMatrix apply_permutation(const AdjacencyMatrix& g, const PermutationSpec& p) {
    if (g.size() != p.size()) {
        throw ParameterError("apply_permutation: graph and permutation sizes differ");
    }
    const int n = g.size();
    Matrix out = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(p(i), p(j)) = g(i, j);
    return AdjacencyMatrix(std::move(out));
}

PermutationSpec prefix_permutation(int n, int k, std::uint64_t seed) {
    if (n < 1) throw ParameterError("prefix_permutation: size must be >= 1");
    if (k < 0 || k > n) {
        throw ParameterError("prefix_permutation: prefix length must lie in [0,n]");
    }
    std::vector<int> mapping(static_cast<std::size_t>(n));
    std::iota(mapping.begin(), mapping.end(), 0);
    std::mt19937_64 rng(seed);
    for (int i = k - 1; i > 0; --i) {
        const auto j = static_cast<int>(next_below(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(mapping[static_cast<std::size_t>(i)], mapping[static_cast<std::size_t>(j)]);
    }
    return PermutationSpec(n, std::move(mapping));
}

AdjacencyMatrix graph_union(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    if (a.size() != b.size()) throw ParameterError("graph_union: sizes differ");
    return AdjacencyMatrix(a.data().cwiseMax(b.data()));
}

}  // namespace pspi
