#pragma once

#include "pspi/graph.hpp"
#include "pspi/prox.hpp"

namespace pspi {

/// Minimum-cost linear assignment: the permutation s minimizing
/// sum_i cost(i, s(i)). O(n^3) shortest augmenting paths with potentials;
/// ties resolve to the lowest row-then-column index.
PermutationSpec hungarian(const Matrix& cost);

/// Nearest permutation to a doubly stochastic matrix: maximizes
/// sum_i p(i, s(i)) via hungarian on -p.
PermutationSpec round_to_permutation(const DoublyStochasticMatrix& p);

}  // namespace pspi
