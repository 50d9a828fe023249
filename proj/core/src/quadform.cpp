#include "qclif/quadform.hpp"

#include "qclif/errors.hpp"

namespace qclif {

QuadForm::QuadForm(Matrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols() || gram_.rows() < 1)
        throw DomainError("gram matrix must be square and nonempty");
    if (!gram_.is_symmetric()) throw DomainError("matrix not symmetric");
}

QuadForm QuadForm::diagonal(const std::vector<Scalar>& d) {
    if (d.empty()) throw DomainError("empty diagonal");
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()), d[0].field());
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return QuadForm(std::move(m));
}

QuadForm QuadForm::hyperbolic(const Field& field) {
    Matrix m(2, 2, field);
    m.at(0, 1) = Scalar::of(field, 1);
    m.at(1, 0) = Scalar::of(field, 1);
    return QuadForm(std::move(m));
}

Scalar QuadForm::value(const std::vector<Scalar>& v) const {
    return bilinear(v, gram_, v);
}

Scalar QuadForm::pairing(const std::vector<Scalar>& v, const std::vector<Scalar>& w) const {
    return bilinear(v, gram_, w);
}

Subspace Subspace::span(const Matrix& rows) {
    MatrixEchelon e = rows.rref();
    int r = static_cast<int>(e.pivots.size());
    std::vector<int> keep;
    for (int i = 0; i < r; ++i) keep.push_back(i);
    return Subspace(e.reduced.rows_slice(keep));
}

Subspace Subspace::zero(int ambient, const Field& field) {
    return Subspace(Matrix(0, ambient, field));
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != ambient()) throw DomainError("dimension mismatch");
    Matrix stacked = basis_.stacked_with(Matrix::row_vector(v));
    return stacked.rank() == dim();
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient() != o.ambient()) throw DomainError("dimension mismatch");
    if (dim() == 0 || o.dim() == 0) return Subspace::zero(ambient(), field());
    // x = u*A = w*B; solve [A^T | -B^T] kernel, read off the A-part.
    Matrix at = basis_.transposed();
    Matrix bt = o.basis_.transposed().scaled(-Scalar::of(field(), 1));
    Matrix sys(ambient(), dim() + o.dim(), field());
    for (int i = 0; i < ambient(); ++i) {
        for (int j = 0; j < dim(); ++j) sys.at(i, j) = at.at(i, j);
        for (int j = 0; j < o.dim(); ++j) sys.at(i, dim() + j) = bt.at(i, j);
    }
    Matrix null_basis = sys.kernel();
    if (null_basis.rows() == 0) return Subspace::zero(ambient(), field());
    Matrix vectors(null_basis.rows(), ambient(), field());
    for (int r = 0; r < null_basis.rows(); ++r) {
        std::vector<Scalar> u;
        for (int j = 0; j < dim(); ++j) u.push_back(null_basis.at(r, j));
        std::vector<Scalar> x = row_times_matrix(u, basis_);
        for (int j = 0; j < ambient(); ++j) vectors.at(r, j) = x[j];
    }
    return Subspace::span(vectors);
}

int Subspace::intersection_dim(const Subspace& o) const {
    if (ambient() != o.ambient()) throw DomainError("dimension mismatch");
    int sum_rank = basis_.stacked_with(o.basis_).rank();
    return dim() + o.dim() - sum_rank;
}

int rank(const QuadForm& q) {
    return q.gram().rank();
}

Subspace radical(const QuadForm& q) {
    return Subspace::span(q.gram().kernel());
}

Diagonalization diagonalize(const QuadForm& q) {
    int n = q.dim();
    const Field& field = q.field();
    Matrix a = q.gram();
    Matrix p = Matrix::identity(n, field);

    auto add_col_to = [&](Matrix& m, int dst, int src, const Scalar& factor) {
        for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += factor * m.at(i, src);
    };
    auto add_row_to = [&](Matrix& m, int dst, int src, const Scalar& factor) {
        for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += factor * m.at(src, j);
    };
    auto swap_basis = [&](int i, int j) {
        for (int k = 0; k < n; ++k) std::swap(a.at(i, k), a.at(j, k));
        for (int k = 0; k < n; ++k) std::swap(a.at(k, i), a.at(k, j));
        for (int k = 0; k < n; ++k) std::swap(p.at(k, i), p.at(k, j));
    };

    Scalar one = Scalar::of(field, 1);
    for (int i = 0; i < n; ++i) {
        if (a.at(i, i).is_zero()) {
            int with_pair = -1;
            for (int j = i + 1; j < n; ++j)
                if (!a.at(i, j).is_zero()) {
                    with_pair = j;
                    break;
                }
            if (with_pair < 0) continue; // row already cleared, d_i = 0
            if (!a.at(with_pair, with_pair).is_zero()) {
                swap_basis(i, with_pair);
            } else {
                // v_i += v_j turns the off-diagonal pairing into 2*a(i,j) on
                // the diagonal (characteristic 2 is excluded by Field).
                add_row_to(a, i, with_pair, one);
                add_col_to(a, i, with_pair, one);
                add_col_to(p, i, with_pair, one);
            }
        }
        Scalar inv = a.at(i, i).inverse();
        for (int j = i + 1; j < n; ++j) {
            if (a.at(i, j).is_zero()) continue;
            Scalar factor = -(a.at(i, j) * inv);
            add_row_to(a, j, i, factor);
            add_col_to(a, j, i, factor);
            add_col_to(p, j, i, factor);
        }
    }

    std::vector<Scalar> diag;
    diag.reserve(n);
    for (int i = 0; i < n; ++i) diag.push_back(a.at(i, i));
    return {std::move(diag), std::move(p)};
}

QuadForm direct_sum(const QuadForm& a, const QuadForm& b) {
    if (!(a.field() == b.field())) throw DomainError("field mismatch");
    int n = a.dim(), m = b.dim();
    Matrix g(n + m, n + m, a.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = a.gram().at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.at(n + i, n + j) = b.gram().at(i, j);
    return QuadForm(std::move(g));
}

} // namespace qclif
