#pragma once

#include "qclif/algebra.hpp"
#include "qclif/isotropic.hpp"
#include "qclif/quadform.hpp"

#include <cstdint>
#include <optional>

namespace qclif {

// Clifford algebra Cl(q) on 2^n subset-indexed basis elements (bitmask
// order, ascending), built from a diagonalization of q. Basis products obey
//   e_S * e_T = sign(S,T) * (prod_{i in S cap T} d_i) * e_{S xor T},
// sign(S,T) counting the transpositions that sort the concatenation. The
// change of basis back to the original coordinates is stored so vectors of
// the input form embed with vw + wv = 2*pairing(v,w).
struct CliffordAlgebra {
    Algebra algebra;
    QuadForm source;
    std::vector<Scalar> diag;
    Matrix basis_change;     // P with P^T S P = diag(d)
    Matrix basis_change_inv; // P^{-1}
    int generators;

    // e_i as an algebra element (i zero-based, mask 1 << i).
    AlgebraElement generator(int i) const;
    // Image of a row vector written in the original coordinates of q.
    AlgebraElement inject(const std::vector<Scalar>& v) const;
};

CliffordAlgebra build_clifford(const QuadForm& q);

// Even part, re-indexed on even-popcount masks (ascending).
struct EvenClifford {
    Algebra algebra;
    std::vector<uint32_t> masks; // even-index -> subset mask
    std::vector<int> position;   // subset mask -> even index, -1 if odd

    // Restriction of a full-Clifford element with even support.
    AlgebraElement restrict_from(const AlgebraElement& full) const;
};

EvenClifford even_subalgebra(const CliffordAlgebra& cl);

// Z/2-graded tensor product with Koszul signs:
// (a@b)(a'@b') = (-1)^{deg(b) deg(a')} aa' @ bb'.
Algebra graded_tensor(const Algebra& a, const Algebra& b);

// The orthogonal-Grassmannian-to-ideals map for a 4-variable form over
// GF(p): each maximal isotropic plane W with echelon basis (w1, w2) goes to
// the left ideal generated by inject(w1)*inject(w2) in the even Clifford
// algebra, tagged with the primitive central idempotent acting as identity
// on it (when one exists).
struct IdealFamilyEntry {
    Subspace plane;
    int ideal_dim = 0;
    Matrix ideal_basis; // RREF rows of even-algebra coordinates
    std::optional<int> idempotent_index;
};

struct IdealFamilyResult {
    CliffordAlgebra clifford;
    EvenClifford even;
    int center_dim = 0;
    bool center_split = false;
    std::vector<AlgebraElement> idempotents;
    std::vector<IdealFamilyEntry> entries;
};

IdealFamilyResult ideal_family_map(const QuadForm& q);

// Dimension of the balanced tensor product of the row module and the column
// module over the n x n matrix algebra, computed as the quotient of the
// n^2-dimensional tensor space by the balancing relations over matrix units.
int morita_tensor_dim(int n);

} // namespace qclif
