#pragma once

#include "qclif/quadform.hpp"

namespace qclif {

// Exhaustive list of k-dimensional totally isotropic subspaces of q over
// GF(p), each in canonical echelon form, in a fixed deterministic order
// (lexicographic over pivot columns, then over free entries). Complete by
// construction: every echelon basis is visited, pruned row by row.
std::vector<Subspace> enumerate_max_isotropic(const QuadForm& q, int k);

struct ComponentPartition {
    // Indices into the input list, each class sorted ascending, classes
    // ordered by smallest member.
    std::vector<std::vector<int>> classes;
};

// Partitions equidimensional subspaces into intersection-parity classes:
// distinct W, W' share a class iff dim(W cap W') - dim(core) = n_half
// (mod 2), extended transitively, where core is the intersection of all
// inputs (zero for nondegenerate families, the radical for the degenerate
// families produced by enumerate_max_isotropic).
ComponentPartition classify_components(const std::vector<Subspace>& subspaces, int n_half);

} // namespace qclif
