#include "qclif/clifford.hpp"

#include "qclif/errors.hpp"

#include <bit>

namespace qclif {

namespace {

std::string subset_name(uint32_t mask) {
    if (mask == 0) return "1";
    std::string name = "e";
    for (int i = 0; i < 32; ++i)
        if (mask & (uint32_t(1) << i)) name += std::to_string(i + 1);
    return name;
}

// Number of transpositions sorting the concatenation of S and T: for each
// generator in T, the generators of S strictly above it.
int reorder_sign_exponent(uint32_t s, uint32_t t) {
    int count = 0;
    for (int j = 0; j < 32; ++j) {
        if (!(t & (uint32_t(1) << j))) continue;
        count += std::popcount(s >> (j + 1));
    }
    return count;
}

} // namespace

AlgebraElement CliffordAlgebra::generator(int i) const {
    if (i < 0 || i >= generators) throw DomainError("generator index out of range");
    return algebra.basis_element(1 << i);
}

AlgebraElement CliffordAlgebra::inject(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != generators) throw DomainError("dimension mismatch");
    // Row coordinates in the diagonal basis: c = v * P^{-T}.
    std::vector<Scalar> c = row_times_matrix(v, basis_change_inv.transposed());
    std::map<int, Scalar> coeffs;
    for (int i = 0; i < generators; ++i)
        if (!c[static_cast<size_t>(i)].is_zero()) coeffs.emplace(1 << i, c[static_cast<size_t>(i)]);
    return algebra.element(std::move(coeffs));
}

CliffordAlgebra build_clifford(const QuadForm& q) {
    int n = q.dim();
    if (n > 20) throw DomainError("form too large for an explicit Clifford algebra");
    const Field& field = q.field();
    Diagonalization d = diagonalize(q);

    uint32_t dim = uint32_t(1) << n;
    std::vector<std::string> names(dim);
    std::vector<int> grades(dim);
    for (uint32_t mask = 0; mask < dim; ++mask) {
        names[mask] = subset_name(mask);
        grades[mask] = std::popcount(mask) & 1;
    }

    std::vector<Algebra::SparseProduct> table(size_t(dim) * dim);
    for (uint32_t s = 0; s < dim; ++s)
        for (uint32_t t = 0; t < dim; ++t) {
            Scalar coeff = Scalar::of(field, 1);
            uint32_t common = s & t;
            bool zero = false;
            for (int i = 0; i < n && !zero; ++i)
                if (common & (uint32_t(1) << i)) {
                    if (d.diag[static_cast<size_t>(i)].is_zero()) zero = true;
                    else coeff *= d.diag[static_cast<size_t>(i)];
                }
            if (zero) continue;
            if (reorder_sign_exponent(s, t) % 2 != 0) coeff = -coeff;
            table[size_t(s) * dim + t].emplace_back(static_cast<int>(s ^ t), coeff);
        }

    Algebra algebra(field, std::move(names), std::move(grades), std::move(table));
    Matrix p_inv = d.basis.inverse();
    return CliffordAlgebra{std::move(algebra), q,       std::move(d.diag),
                           std::move(d.basis), std::move(p_inv), n};
}

AlgebraElement EvenClifford::restrict_from(const AlgebraElement& full) const {
    std::map<int, Scalar> coeffs;
    for (const auto& [i, c] : full.coeffs()) {
        int pos = position[static_cast<size_t>(i)];
        if (pos < 0) throw DomainError("element has odd support");
        coeffs.emplace(pos, c);
    }
    return algebra.element(std::move(coeffs));
}

EvenClifford even_subalgebra(const CliffordAlgebra& cl) {
    uint32_t dim = uint32_t(1) << cl.generators;
    std::vector<uint32_t> masks;
    std::vector<int> position(dim, -1);
    for (uint32_t mask = 0; mask < dim; ++mask)
        if (std::popcount(mask) % 2 == 0) {
            position[mask] = static_cast<int>(masks.size());
            masks.push_back(mask);
        }

    int edim = static_cast<int>(masks.size());
    std::vector<std::string> names(static_cast<size_t>(edim));
    std::vector<int> grades(static_cast<size_t>(edim), 0);
    for (int i = 0; i < edim; ++i) names[static_cast<size_t>(i)] = cl.algebra.basis_name(static_cast<int>(masks[static_cast<size_t>(i)]));

    std::vector<Algebra::SparseProduct> table(size_t(edim) * edim);
    for (int i = 0; i < edim; ++i)
        for (int j = 0; j < edim; ++j) {
            const auto& full = cl.algebra.basis_product(static_cast<int>(masks[static_cast<size_t>(i)]),
                                                        static_cast<int>(masks[static_cast<size_t>(j)]));
            for (const auto& [k, c] : full) {
                int pos = position[static_cast<size_t>(k)];
                if (pos < 0) throw DomainError("even part not closed");
                table[size_t(i) * edim + j].emplace_back(pos, c);
            }
        }

    return EvenClifford{Algebra(cl.algebra.field(), std::move(names), std::move(grades), std::move(table)),
                        std::move(masks), std::move(position)};
}

Algebra graded_tensor(const Algebra& a, const Algebra& b) {
    if (!(a.field() == b.field())) throw DomainError("field mismatch");
    int na = a.dim(), nb = b.dim();
    int dim = na * nb;
    std::vector<std::string> names(static_cast<size_t>(dim));
    std::vector<int> grades(static_cast<size_t>(dim));
    auto index = [nb](int i, int j) { return i * nb + j; };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            names[static_cast<size_t>(index(i, j))] = a.basis_name(i) + "@" + b.basis_name(j);
            grades[static_cast<size_t>(index(i, j))] = (a.grade(i) + b.grade(j)) & 1;
        }

    std::vector<Algebra::SparseProduct> table(size_t(dim) * dim);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2) {
                    bool negate = (b.grade(j) * a.grade(i2)) % 2 != 0;
                    auto& out = table[size_t(index(i, j)) * dim + index(i2, j2)];
                    for (const auto& [ka, ca] : a.basis_product(i, i2))
                        for (const auto& [kb, cb] : b.basis_product(j, j2)) {
                            Scalar c = ca * cb;
                            if (negate) c = -c;
                            out.emplace_back(index(ka, kb), c);
                        }
                }
    return Algebra(a.field(), std::move(names), std::move(grades), std::move(table));
}

IdealFamilyResult ideal_family_map(const QuadForm& q) {
    if (q.dim() != 4) throw DomainError("expected a 4-variable form");
    int r = rank(q);
    if (r < 3) throw DomainError("unsupported degeneracy");

    std::vector<Subspace> planes = enumerate_max_isotropic(q, 2);
    CliffordAlgebra cl = build_clifford(q);
    EvenClifford even = even_subalgebra(cl);

    bool fully_split = false;
    std::vector<AlgebraElement> idempotents =
        primitive_central_idempotents(even.algebra, &fully_split);
    int center_dim = static_cast<int>(center_basis(even.algebra).size());
    bool separating = idempotents.size() >= 2;

    std::vector<IdealFamilyEntry> entries;
    for (const Subspace& w : planes) {
        AlgebraElement f = cl.inject(w.basis().row(0)) * cl.inject(w.basis().row(1));
        AlgebraElement fe = even.restrict_from(f);
        LeftIdeal ideal = left_ideal(even.algebra, fe);
        std::optional<int> support;
        if (separating) {
            for (size_t e = 0; e < idempotents.size(); ++e)
                if (idempotents[e] * fe == fe) {
                    support = static_cast<int>(e);
                    break;
                }
        }
        entries.push_back({w, ideal.dim, ideal.basis, support});
    }

    return IdealFamilyResult{std::move(cl),        std::move(even), center_dim,
                             fully_split,          std::move(idempotents),
                             std::move(entries)};
}

int morita_tensor_dim(int n) {
    if (n < 1) throw DomainError("n must be positive");
    Field field = Field::rationals();
    int dim = n * n;
    // Relations (m E_kl) @ v_j - m @ (E_kl v_j) over basis rows m = u_i and
    // basis columns v_j: delta_{ik} u_l@v_j - delta_{lj} u_i@v_k.
    std::vector<std::vector<Scalar>> rows;
    Scalar zero = Scalar::of(field, 0), one = Scalar::of(field, 1);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                for (int j = 0; j < n; ++j) {
                    std::vector<Scalar> row(static_cast<size_t>(dim), zero);
                    bool nonzero = false;
                    if (i == k) {
                        row[static_cast<size_t>(l * n + j)] += one;
                        nonzero = true;
                    }
                    if (l == j) {
                        row[static_cast<size_t>(i * n + k)] -= one;
                        nonzero = true;
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
    if (rows.empty()) return dim;
    int relation_rank = Matrix::from_rows(rows).rank();
    return dim - relation_rank;
}

} // namespace qclif
