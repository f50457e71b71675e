#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pspi/errors.hpp"

namespace pspi {

using Matrix = Eigen::MatrixXd;

/// Dense adjacency matrix of an undirected graph: symmetric, zero diagonal,
/// nonnegative entries (0/1 for generated graphs, arbitrary weights on load).
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(Matrix data);

    static AdjacencyMatrix empty(int n);

    int size() const { return static_cast<int>(data_.rows()); }
    const Matrix& data() const { return data_; }
    double operator()(int i, int j) const { return data_(i, j); }

    bool has_edge(int i, int j) const { return data_(i, j) != 0.0; }
    /// Number of unordered pairs with a nonzero entry.
    std::int64_t edge_count() const;
    /// Per-node count of nonzero neighbours.
    std::vector<int> degrees() const;

    friend bool operator==(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
        return a.data_.rows() == b.data_.rows() && a.data_ == b.data_;
    }

private:
    Matrix data_;
};

/// Bijection on {0,...,n-1}; node i of the source maps to mapping()[i].
class PermutationSpec {
public:
    PermutationSpec(int n, std::vector<int> mapping);

    static PermutationSpec identity(int n);

    int size() const { return n_; }
    const std::vector<int>& mapping() const { return mapping_; }
    int operator()(int i) const { return mapping_[static_cast<std::size_t>(i)]; }

    PermutationSpec inverse() const;
    bool is_identity() const;

    /// Matrix P with P(mapping[i], i) = 1, so that (P X P')(m(i), m(j)) = X(i, j).
    Matrix to_matrix() const;

    friend bool operator==(const PermutationSpec& a, const PermutationSpec& b) {
        return a.n_ == b.n_ && a.mapping_ == b.mapping_;
    }

private:
    int n_;
    std::vector<int> mapping_;
};

/// Ground-truth structured perturbation: the set of edges added to the graph.
/// Only additions are represented; pairs are stored once with u < v.
class GroundTruthPerturbation {
public:
    GroundTruthPerturbation(int n, std::vector<std::pair<int, int>> edges);

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    bool contains(int u, int v) const;

    /// Symmetric 0/1 indicator matrix with zero diagonal.
    Matrix to_matrix() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

/// Erdos-Renyi graph: each unordered pair present independently with probability p.
AdjacencyMatrix generate_er(int n, double p, std::uint64_t seed);

/// Scale-free graph via the Chung-Lu expected-degree model with weights drawn
/// from a discrete power law of the given exponent (> 1).
AdjacencyMatrix generate_sf(int n, double exponent, std::uint64_t seed);

/// Complete the subgraph induced by `nodes`. Returns the perturbed graph and
/// the set of newly added edges (pre-existing clique edges are not recorded).
std::pair<AdjacencyMatrix, GroundTruthPerturbation> plant_clique_perturbation(
    const AdjacencyMatrix& g, const std::vector<int>& nodes);

/// Add exactly m uniformly chosen previously-absent edges.
AdjacencyMatrix add_noise_edges(const AdjacencyMatrix& g, std::int64_t m, std::uint64_t seed);

/// Relabel nodes: out(p(i), p(j)) = g(i, j).
AdjacencyMatrix apply_permutation(const AdjacencyMatrix& g, const PermutationSpec& p);

/// Uniformly random permutation of the first k indices, identity on the rest.
PermutationSpec prefix_permutation(int n, int k, std::uint64_t seed);

/// Entrywise maximum; the union of two graphs on the same vertex set.
AdjacencyMatrix graph_union(const AdjacencyMatrix& a, const AdjacencyMatrix& b);

}  // namespace pspi
