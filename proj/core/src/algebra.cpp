#include "qclif/algebra.hpp"

#include "qclif/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qclif {

Algebra::Element::Element(Algebra algebra, std::map<int, Scalar> coeffs)
    : alg_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first < 0 || it->first >= alg_.dim()) throw DomainError("basis index out of range");
        if (it->second.is_zero()) it = coeffs_.erase(it);
        else ++it;
    }
}

Scalar Algebra::Element::coeff(int basis_index) const {
    auto it = coeffs_.find(basis_index);
    if (it == coeffs_.end()) return Scalar::of(alg_.field(), 0);
    return it->second;
}

std::vector<Scalar> Algebra::Element::dense() const {
    std::vector<Scalar> out(alg_.dim(), Scalar::of(alg_.field(), 0));
    for (const auto& [i, c] : coeffs_) out[static_cast<size_t>(i)] = c;
    return out;
}

Algebra::Element Algebra::Element::operator+(const AlgebraElement& o) const {
    if (!(alg_ == o.alg_)) throw DomainError("elements of different algebras");
    std::map<int, Scalar> out = coeffs_;
    for (const auto& [i, c] : o.coeffs_) {
        auto it = out.find(i);
        if (it == out.end()) out.emplace(i, c);
        else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return Element(alg_, std::move(out));
}

Algebra::Element Algebra::Element::operator-(const AlgebraElement& o) const {
    return *this + (-o);
}

Algebra::Element Algebra::Element::operator-() const {
    std::map<int, Scalar> out;
    for (const auto& [i, c] : coeffs_) out.emplace(i, -c);
    return Element(alg_, std::move(out));
}

Algebra::Element Algebra::Element::operator*(const AlgebraElement& o) const {
    if (!(alg_ == o.alg_)) throw DomainError("elements of different algebras");
    std::map<int, Scalar> out;
    for (const auto& [i, ci] : coeffs_)
        for (const auto& [j, cj] : o.coeffs_) {
            Scalar cij = ci * cj;
            if (cij.is_zero()) continue;
            for (const auto& [k, s] : alg_.basis_product(i, j)) {
                auto it = out.find(k);
                if (it == out.end()) out.emplace(k, cij * s);
                else it->second += cij * s;
            }
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return Element(alg_, std::move(out));
}

Algebra::Element Algebra::Element::scaled(const Scalar& c) const {
    std::map<int, Scalar> out;
    if (!c.is_zero())
        for (const auto& [i, x] : coeffs_) out.emplace(i, x * c);
    return Element(alg_, std::move(out));
}

Algebra::Element Algebra::Element::pow(unsigned long long e) const {
    AlgebraElement acc = alg_.one();
    AlgebraElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Algebra::Element::operator==(const AlgebraElement& o) const {
    return alg_ == o.alg_ && coeffs_ == o.coeffs_;
}

std::string Algebra::Element::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : coeffs_) {
        std::string cs = c.to_string();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                out << " - ";
                cs = cs.substr(1);
            } else
                out << " + ";
        }
        first = false;
        const std::string& name = alg_.basis_name(i);
        if (cs == "1") out << name;
        else if (cs == "-1") out << "-" << name;
        else if (name == "1") out << cs;
        else out << cs << "*" << name;
    }
    return out.str();
}

Algebra::Algebra(Field field, std::vector<std::string> names, std::vector<int> grades,
                 std::vector<SparseProduct> table) {
    size_t n = names.size();
    if (grades.size() != n || table.size() != n * n)
        throw DomainError("inconsistent algebra tables");
    data_ = std::make_shared<const Data>(
        Data{field, std::move(names), std::move(grades), std::move(table)});
}

Algebra::Element Algebra::zero() const {
    return Element(*this, {});
}

Algebra::Element Algebra::one() const {
    return basis_element(0);
}

Algebra::Element Algebra::basis_element(int i) const {
    return Element(*this, {{i, Scalar::of(field(), 1)}});
}

Algebra::Element Algebra::element(std::map<int, Scalar> coeffs) const {
    return Element(*this, std::move(coeffs));
}

Algebra::Element Algebra::from_dense(const std::vector<Scalar>& coords) const {
    if (static_cast<int>(coords.size()) != dim()) throw DomainError("dimension mismatch");
    std::map<int, Scalar> out;
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) out.emplace(static_cast<int>(i), coords[i]);
    return Element(*this, std::move(out));
}

Matrix left_multiplication(const AlgebraElement& x) {
    const Algebra& a = x.algebra();
    Matrix m(a.dim(), a.dim(), a.field());
    for (const auto& [i, ci] : x.coeffs())
        for (int j = 0; j < a.dim(); ++j)
            for (const auto& [k, s] : a.basis_product(i, j))
                m.at(k, j) += ci * s;
    return m;
}

std::vector<AlgebraElement> center_basis(const Algebra& a) {
    int n = a.dim();
    // Unknown x = sum x_i b_i; equations [x, b_j] = 0 componentwise.
    Matrix sys(n * n, n, a.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (const auto& [k, s] : a.basis_product(i, j)) sys.at(j * n + k, i) += s;
            for (const auto& [k, s] : a.basis_product(j, i)) sys.at(j * n + k, i) -= s;
        }
    Matrix null_basis = sys.kernel();
    std::vector<AlgebraElement> out;
    for (int r = 0; r < null_basis.rows(); ++r) out.push_back(a.from_dense(null_basis.row(r)));
    return out;
}

Matrix trace_form(const Algebra& a) {
    int n = a.dim();
    std::vector<Matrix> left;
    left.reserve(n);
    for (int i = 0; i < n; ++i) left.push_back(left_multiplication(a.basis_element(i)));
    Matrix t(n, n, a.field());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Scalar acc = Scalar::of(a.field(), 0);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Scalar& x = left[i].at(k, l);
                    if (x.is_zero()) continue;
                    acc += x * left[j].at(l, k);
                }
            t.at(i, j) = acc;
            t.at(j, i) = acc;
        }
    return t;
}

LeftIdeal left_ideal(const Algebra& a, const AlgebraElement& f) {
    if (f.is_zero()) throw DomainError("zero generator");
    Matrix span(a.dim(), a.dim(), a.field());
    for (int i = 0; i < a.dim(); ++i) {
        std::vector<Scalar> prod = (a.basis_element(i) * f).dense();
        for (int j = 0; j < a.dim(); ++j) span.at(i, j) = prod[j];
    }
    MatrixEchelon e = span.rref();
    std::vector<int> keep;
    for (size_t i = 0; i < e.pivots.size(); ++i) keep.push_back(static_cast<int>(i));
    return {static_cast<int>(e.pivots.size()), e.reduced.rows_slice(keep)};
}

namespace {

// Dense polynomial over the algebra's scalar field, ascending coefficients.
struct SPoly {
    Field field;
    std::vector<Scalar> c;

    explicit SPoly(const Field& f) : field(f) {}
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    static SPoly constant(const Field& f, const Scalar& x) {
        SPoly p(f);
        if (!x.is_zero()) p.c.push_back(x);
        return p;
    }
    static SPoly linear(const Field& f, const Scalar& root) {
        // x - root
        SPoly p(f);
        p.c = {-root, Scalar::of(f, 1)};
        return p;
    }
    SPoly mul(const SPoly& o) const {
        SPoly out(field);
        if (is_zero() || o.is_zero()) return out;
        out.c.assign(c.size() + o.c.size() - 1, Scalar::of(field, 0));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
        out.trim();
        return out;
    }
    SPoly monic() const {
        SPoly out = *this;
        if (out.is_zero()) return out;
        Scalar inv = out.c.back().inverse();
        for (auto& x : out.c) x *= inv;
        return out;
    }
    std::pair<SPoly, SPoly> divrem(const SPoly& d) const {
        SPoly q(field), r = *this;
        int dd = d.degree();
        if (r.degree() < dd) return {q, r};
        q.c.assign(static_cast<size_t>(r.degree() - dd + 1), Scalar::of(field, 0));
        Scalar lead_inv = d.c.back().inverse();
        for (int k = r.degree() - dd; k >= 0; --k) {
            Scalar f = r.c[static_cast<size_t>(k + dd)] * lead_inv;
            q.c[static_cast<size_t>(k)] = f;
            if (f.is_zero()) continue;
            for (int i = 0; i <= dd; ++i) r.c[static_cast<size_t>(k + i)] -= f * d.c[static_cast<size_t>(i)];
        }
        r.trim();
        q.trim();
        return {q, r};
    }
    Scalar eval(const Scalar& x) const {
        Scalar acc = Scalar::of(field, 0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
std::tuple<SPoly, SPoly, SPoly> spoly_extgcd(SPoly a, SPoly b) {
    const Field f = a.field;
    SPoly u0 = SPoly::constant(f, Scalar::of(f, 1)), v0(f);
    SPoly u1(f), v1 = SPoly::constant(f, Scalar::of(f, 1));
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        SPoly u2 = u0;
        SPoly qu = q.mul(u1);
        for (size_t i = 0; i < qu.c.size(); ++i) {
            if (i >= u2.c.size()) u2.c.resize(i + 1, Scalar::of(f, 0));
            u2.c[i] -= qu.c[i];
        }
        u2.trim();
        SPoly v2 = v0;
        SPoly qv = q.mul(v1);
        for (size_t i = 0; i < qv.c.size(); ++i) {
            if (i >= v2.c.size()) v2.c.resize(i + 1, Scalar::of(f, 0));
            v2.c[i] -= qv.c[i];
        }
        v2.trim();
        a = b;
        b = r;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    if (!a.is_zero()) {
        Scalar inv = a.c.back().inverse();
        for (auto& x : a.c) x *= inv;
        for (auto& x : u0.c) x *= inv;
        for (auto& x : v0.c) x *= inv;
    }
    return {a, u0, v0};
}

// Roots in the coefficient field: exhaustive over GF(p); root 0, linear and
// quadratic (exact discriminant square root) over Q and Q(s).
std::vector<Scalar> spoly_roots(const SPoly& p) {
    std::vector<Scalar> roots;
    if (p.degree() < 1) return roots;
    const Field& f = p.field;
    if (f.is_finite()) {
        for (uint32_t v = 0; v < f.characteristic(); ++v) {
            Scalar x = Scalar::of(f, static_cast<long>(v));
            if (p.eval(x).is_zero()) roots.push_back(x);
        }
        return roots;
    }
    // Strip x^m.
    size_t first_nonzero = 0;
    while (first_nonzero < p.c.size() && p.c[first_nonzero].is_zero()) ++first_nonzero;
    SPoly stripped(f);
    stripped.c.assign(p.c.begin() + static_cast<long>(first_nonzero), p.c.end());
    if (first_nonzero > 0) roots.push_back(Scalar::of(f, 0));
    if (stripped.degree() == 1) {
        roots.push_back(-(stripped.c[0] / stripped.c[1]));
    } else if (stripped.degree() == 2) {
        Scalar a = stripped.c[2], b = stripped.c[1], cc = stripped.c[0];
        Scalar disc = b * b - Scalar::of(f, 4) * a * cc;
        auto root = disc.sqrt();
        if (root) {
            Scalar two_a_inv = (Scalar::of(f, 2) * a).inverse();
            Scalar r1 = (-b + *root) * two_a_inv;
            Scalar r2 = (-b - *root) * two_a_inv;
            roots.push_back(r1);
            if (r1 != r2) roots.push_back(r2);
        }
    }
    return roots;
}

// Minimal polynomial of z within the unital subalgebra with unit e (powers
// e, z, z^2, ... until linear dependence).
SPoly minimal_polynomial(const AlgebraElement& z, const AlgebraElement& e) {
    const Algebra& a = z.algebra();
    const Field& f = a.field();
    std::vector<AlgebraElement> powers = {e};
    for (;;) {
        // Solve: last power in span of the previous ones.
        int m = static_cast<int>(powers.size());
        AlgebraElement next = powers.back() * z;
        Matrix sys(a.dim(), m + 1, f);
        for (int col = 0; col < m; ++col) {
            std::vector<Scalar> d = powers[static_cast<size_t>(col)].dense();
            for (int r = 0; r < a.dim(); ++r) sys.at(r, col) = d[static_cast<size_t>(r)];
        }
        std::vector<Scalar> nd = next.dense();
        for (int r = 0; r < a.dim(); ++r) sys.at(r, m) = nd[static_cast<size_t>(r)];
        Matrix null_basis = sys.kernel();
        // A kernel row with a nonzero last coordinate expresses next as a
        // combination of earlier powers.
        for (int r = 0; r < null_basis.rows(); ++r) {
            if (null_basis.at(r, m).is_zero()) continue;
            Scalar inv = null_basis.at(r, m).inverse();
            SPoly mu(f);
            mu.c.assign(static_cast<size_t>(m + 1), Scalar::of(f, 0));
            for (int i = 0; i < m; ++i) mu.c[static_cast<size_t>(i)] = null_basis.at(r, i) * inv;
            mu.c[static_cast<size_t>(m)] = Scalar::of(f, 1);
            return mu;
        }
        powers.push_back(next);
        if (static_cast<int>(powers.size()) > a.dim() + 1)
            throw DomainError("minimal polynomial search failed");
    }
}

AlgebraElement eval_at(const SPoly& p, const AlgebraElement& z, const AlgebraElement& e) {
    const Algebra& a = z.algebra();
    AlgebraElement acc = a.zero();
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * z + e.scaled(*it);
    return acc;
}

// Pairwise-coprime factors of mu: (x - root)^multiplicity for every root
// found, plus the rootless cofactor.
std::vector<SPoly> coprime_factors(const SPoly& mu) {
    std::vector<SPoly> factors;
    SPoly rest = mu.monic();
    for (const Scalar& r : spoly_roots(mu)) {
        SPoly lin = SPoly::linear(mu.field, r);
        SPoly power = SPoly::constant(mu.field, Scalar::of(mu.field, 1));
        for (;;) {
            auto [q, rem] = rest.divrem(lin);
            if (!rem.is_zero()) break;
            rest = q;
            power = power.mul(lin);
        }
        if (power.degree() > 0) factors.push_back(power);
    }
    if (rest.degree() > 0) factors.push_back(rest);
    return factors;
}

struct Block {
    AlgebraElement idempotent;
    bool exhausted = false;
};

} // namespace

std::vector<AlgebraElement> primitive_central_idempotents(const Algebra& a, bool* fully_split) {
    std::vector<AlgebraElement> center = center_basis(a);
    std::vector<Block> blocks = {{a.one(), false}};
    bool split_everywhere = true;

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t bi = 0; bi < blocks.size() && !changed; ++bi) {
            if (blocks[bi].exhausted) continue;
            const AlgebraElement e = blocks[bi].idempotent;
            bool found_split = false;
            for (const AlgebraElement& z0 : center) {
                AlgebraElement z = z0 * e;
                SPoly mu = minimal_polynomial(z, e);
                std::vector<SPoly> factors = coprime_factors(mu);
                if (factors.size() < 2) continue;
                std::vector<Block> pieces;
                for (const SPoly& fac : factors) {
                    // CRT projector: h = mu/fac, phi = h * (h^{-1} mod fac).
                    auto [h, rem] = mu.divrem(fac);
                    (void)rem;
                    auto [g, u, v] = spoly_extgcd(h, fac);
                    (void)v;
                    if (g.degree() != 0) throw DomainError("center splitting failed");
                    Scalar ginv = g.c[0].inverse();
                    SPoly phi = u.mul(h);
                    for (auto& x : phi.c) x *= ginv;
                    SPoly reduced = phi.divrem(mu).second;
                    AlgebraElement proj = eval_at(reduced, z, e);
                    if (!proj.is_zero()) pieces.push_back({proj, false});
                }
                if (pieces.size() > 1) {
                    blocks.erase(blocks.begin() + static_cast<long>(bi));
                    for (auto& piece : pieces) blocks.push_back(std::move(piece));
                    changed = true;
                    found_split = true;
                    break;
                }
            }
            if (!found_split) blocks[bi].exhausted = true;
        }
    }

    // A block is fully split when its center slice is one-dimensional.
    std::vector<AlgebraElement> out;
    for (const auto& b : blocks) {
        Matrix slice(static_cast<int>(center.size()), a.dim(), a.field());
        for (size_t i = 0; i < center.size(); ++i) {
            std::vector<Scalar> d = (center[i] * b.idempotent).dense();
            for (int j = 0; j < a.dim(); ++j) slice.at(static_cast<int>(i), j) = d[static_cast<size_t>(j)];
        }
        if (slice.rank() > 1) split_everywhere = false;
        out.push_back(b.idempotent);
    }
    std::sort(out.begin(), out.end(), [](const AlgebraElement& x, const AlgebraElement& y) {
        std::string sx = x.to_string(), sy = y.to_string();
        if (sx.size() != sy.size()) return sx.size() < sy.size();
        return sx < sy;
    });
    if (fully_split) *fully_split = split_everywhere;
    return out;
}

SubAlgebraReport semisimplicity_report(const Algebra& a) {
    SubAlgebraReport report;
    report.dimension = a.dim();
    std::vector<AlgebraElement> center = center_basis(a);
    report.center_dimension = static_cast<int>(center.size());
    report.trace_form_rank = trace_form(a).rank();

    bool fully_split = false;
    std::vector<AlgebraElement> idempotents = primitive_central_idempotents(a, &fully_split);

    // Nilpotent central witness: within a block, an element whose minimal
    // polynomial is (x - r)^m with m >= 2 yields z - r*e.
    for (const AlgebraElement& e : idempotents) {
        for (const AlgebraElement& z0 : center) {
            AlgebraElement z = z0 * e;
            SPoly mu = minimal_polynomial(z, e);
            if (mu.degree() < 2) continue;
            std::vector<Scalar> roots = spoly_roots(mu);
            if (roots.size() != 1) continue;
            SPoly lin = SPoly::linear(a.field(), roots[0]);
            SPoly power = lin;
            for (int i = 1; i < mu.degree(); ++i) power = power.mul(lin);
            bool pure_power = true;
            if (static_cast<int>(power.c.size()) == static_cast<int>(mu.c.size())) {
                for (size_t i = 0; i < mu.c.size(); ++i)
                    if (power.c[i] != mu.c[i]) {
                        pure_power = false;
                        break;
                    }
            } else {
                pure_power = false;
            }
            if (pure_power) {
                report.nilpotent_center_witness = z - e.scaled(roots[0]);
                break;
            }
        }
        if (report.nilpotent_center_witness) break;
    }

    if (report.trace_form_rank == report.dimension) {
        report.semisimple = true;
    } else {
        uint32_t p = a.field().characteristic();
        if (p == 0 || static_cast<int>(p) > a.dim()) {
            report.semisimple = false;
        } else if (report.nilpotent_center_witness) {
            report.semisimple = false;
        } else {
            throw DomainError("trace criterion unreliable");
        }
    }

    report.central_idempotents = idempotents;
    report.center_split = fully_split;
    if (report.semisimple && report.center_split) {
        for (const AlgebraElement& e : idempotents)
            report.simple_factor_dims.push_back(left_ideal(a, e).dim);
    }
    return report;
}

} // namespace qclif
