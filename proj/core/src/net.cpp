#include "qclif/net.hpp"

#include "qclif/errors.hpp"

#include <random>
#include <sstream>

namespace qclif {

NetOfQuadrics::NetOfQuadrics(Entries entries)
    : field_(entries[0][0][0].field()), entries_(std::move(entries)) {
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int m = 0; m < 3; ++m) {
                if (!(entries_[i][j][m].field() == field_)) throw DomainError("field mismatch");
                if (entries_[i][j][m] != entries_[j][i][m])
                    throw DomainError("matrix not symmetric");
            }
}

NetOfQuadrics NetOfQuadrics::from_coefficient_matrices(const Matrix& s0, const Matrix& s1,
                                                       const Matrix& s2) {
    const Matrix* ms[3] = {&s0, &s1, &s2};
    for (const Matrix* m : ms)
        if (m->rows() != 6 || m->cols() != 6) throw DomainError("matrix dimension mismatch");
    Entries e{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int m = 0; m < 3; ++m) e[i][j][m] = ms[m]->at(i, j);
    return NetOfQuadrics(std::move(e));
}

Matrix NetOfQuadrics::coefficient_matrix(int m) const {
    Matrix out(6, 6, field_);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out.at(i, j) = entries_[i][j][m];
    return out;
}

Matrix NetOfQuadrics::gram_at(const std::array<Scalar, 3>& a) const {
    Matrix out(6, 6, field_);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int m = 0; m < 3; ++m) out.at(i, j) += entries_[i][j][m] * a[m];
    return out;
}

MultiPoly NetOfQuadrics::entry_poly(int i, int j) const {
    return MultiPoly::linear_form(entries_[i][j]);
}

bool NetOfQuadrics::operator==(const NetOfQuadrics& o) const {
    if (!(field_ == o.field_)) return false;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int m = 0; m < 3; ++m)
                if (entries_[i][j][m] != o.entries_[i][j][m]) return false;
    return true;
}

BasePoint::BasePoint(std::vector<Scalar> coords) : coords_(std::move(coords)), leading_(-1) {
    if (coords_.size() != 6) throw DomainError("dimension mismatch");
    for (size_t i = 0; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) {
            leading_ = static_cast<int>(i);
            break;
        }
    if (leading_ < 0) throw DomainError("zero point");
    Scalar inv = coords_[static_cast<size_t>(leading_)].inverse();
    for (auto& c : coords_) c *= inv;
}

MultiPoly discriminant(const NetOfQuadrics& net) {
    std::vector<std::vector<MultiPoly>> m(6, std::vector<MultiPoly>(6, MultiPoly::zero(net.field())));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m[i][j] = net.entry_poly(i, j);
    return det_linear_matrix(m);
}

QuadForm fiber_form(const NetOfQuadrics& net, const std::array<Scalar, 3>& a) {
    if (a[0].is_zero() && a[1].is_zero() && a[2].is_zero()) throw DomainError("zero point");
    return QuadForm(net.gram_at(a));
}

std::vector<BasePoint> find_base_points(const NetOfQuadrics& net) {
    if (!net.field().is_finite()) throw DomainError("enumeration requires finite field");
    uint32_t p = net.field().characteristic();
    uint32_t s[3][6][6];
    for (int m = 0; m < 3; ++m) {
        Matrix sm = net.coefficient_matrix(m);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) s[m][i][j] = sm.at(i, j).as_fp().value;
    }

    auto quad_value = [&](const uint32_t x[6], int m) -> uint32_t {
        uint64_t acc = 0;
        for (int i = 0; i < 6; ++i) {
            if (x[i] == 0) continue;
            uint64_t partial = 0;
            for (int j = 0; j < 6; ++j) partial += uint64_t(s[m][i][j]) * x[j];
            acc += uint64_t(x[i]) * (partial % p);
        }
        return static_cast<uint32_t>(acc % p);
    };

    std::vector<BasePoint> out;
    uint32_t x[6];
    for (int lead = 0; lead < 6; ++lead) {
        for (int i = 0; i < 6; ++i) x[i] = 0;
        x[lead] = 1;
        int free_count = 5 - lead;
        uint64_t total = 1;
        for (int i = 0; i < free_count; ++i) total *= p;
        for (uint64_t code = 0; code < total; ++code) {
            uint64_t c = code;
            for (int i = lead + 1; i < 6; ++i) {
                x[i] = static_cast<uint32_t>(c % p);
                c /= p;
            }
            if (quad_value(x, 0) == 0 && quad_value(x, 1) == 0 && quad_value(x, 2) == 0) {
                std::vector<Scalar> coords;
                coords.reserve(6);
                for (int i = 0; i < 6; ++i)
                    coords.push_back(Scalar::of(net.field(), static_cast<long>(x[i])));
                out.emplace_back(std::move(coords));
            }
        }
    }
    return out;
}

namespace {

// Tangent-hyperplane data shared by the reduction variants. Throws the
// domain errors for off-locus x and vertex fibers.
struct ReductionFrame {
    Matrix gram;        // S(a)
    Matrix tangent;     // RREF basis of T = {u : (x S(a)) . u = 0}
    std::vector<int> pivots;
};

ReductionFrame reduction_frame(const NetOfQuadrics& net, const BasePoint& x,
                               const std::array<Scalar, 3>& a) {
    for (int m = 0; m < 3; ++m)
        if (!bilinear(x.coords(), net.coefficient_matrix(m), x.coords()).is_zero())
            throw DomainError("not on base locus");
    QuadForm fiber = fiber_form(net, a);
    std::vector<Scalar> v = row_times_matrix(x.coords(), fiber.gram());
    bool all_zero = true;
    for (const auto& c : v)
        if (!c.is_zero()) {
            all_zero = false;
            break;
        }
    if (all_zero) throw DomainError("x is a vertex of this fiber");
    Matrix t = Matrix::row_vector(v).kernel();
    std::vector<int> pivots;
    for (int r = 0; r < t.rows(); ++r)
        for (int c = 0; c < t.cols(); ++c)
            if (!t.at(r, c).is_zero()) {
                pivots.push_back(c);
                break;
            }
    return {fiber.gram(), std::move(t), std::move(pivots)};
}

QuadForm restrict_gram(const Matrix& gram, const Matrix& basis) {
    int k = basis.rows();
    Matrix out(k, k, gram.field());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out.at(i, j) = bilinear(basis.row(i), gram, basis.row(j));
    return QuadForm(std::move(out));
}

} // namespace

QuadForm reduce_at_point(const NetOfQuadrics& net, const BasePoint& x,
                         const std::array<Scalar, 3>& a) {
    ReductionFrame frame = reduction_frame(net, x, a);
    std::vector<int> keep;
    for (int r = 0; r < frame.tangent.rows(); ++r)
        if (frame.pivots[static_cast<size_t>(r)] != x.leading_index()) keep.push_back(r);
    if (static_cast<int>(keep.size()) != frame.tangent.rows() - 1)
        throw DomainError("not on base locus"); // x outside its own tangent space
    Matrix complement = frame.tangent.rows_slice(keep);
    return restrict_gram(frame.gram, complement);
}

QuadForm reduce_at_point_randomized(const NetOfQuadrics& net, const BasePoint& x,
                                    const std::array<Scalar, 3>& a, uint64_t seed) {
    ReductionFrame frame = reduction_frame(net, x, a);
    std::vector<int> keep;
    for (int r = 0; r < frame.tangent.rows(); ++r)
        if (frame.pivots[static_cast<size_t>(r)] != x.leading_index()) keep.push_back(r);
    Matrix f = frame.tangent.rows_slice(keep);

    const Field& field = net.field();
    std::mt19937_64 rng(seed);
    auto random_scalar = [&]() {
        if (field.is_finite())
            return Scalar::of(field, static_cast<long>(rng() % field.characteristic()));
        return Scalar::of(field, static_cast<long>(rng() % 19) - 9);
    };

    int k = f.rows();
    for (;;) {
        Matrix mix(k, k, field);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) mix.at(i, j) = random_scalar();
        if (mix.rank() != k) continue;
        Matrix basis = mix * f;
        // Shift rows by random multiples of x: still inside T, still a
        // complement of span(x).
        for (int i = 0; i < k; ++i) {
            Scalar u = random_scalar();
            for (int j = 0; j < basis.cols(); ++j)
                basis.at(i, j) += u * x.coords()[static_cast<size_t>(j)];
        }
        return restrict_gram(frame.gram, basis);
    }
}

RankProfile rank_profile(const NetOfQuadrics& net, const BasePoint& x) {
    if (!net.field().is_finite()) throw DomainError("enumeration requires finite field");
    uint32_t p = net.field().characteristic();
    const Field& field = net.field();

    RankProfile profile;
    auto visit = [&](uint32_t a0, uint32_t a1, uint32_t a2) {
        std::array<Scalar, 3> a = {Scalar::of(field, static_cast<long>(a0)),
                                   Scalar::of(field, static_cast<long>(a1)),
                                   Scalar::of(field, static_cast<long>(a2))};
        RankProfileRow row;
        row.point = a;
        Matrix gram = net.gram_at(a);
        row.fiber_rank = gram.rank();
        row.on_curve = row.fiber_rank < 6;
        std::vector<Scalar> v = row_times_matrix(x.coords(), gram);
        bool vertex = true;
        for (const auto& c : v)
            if (!c.is_zero()) {
                vertex = false;
                break;
            }
        row.vertex = vertex;
        if (!vertex) {
            QuadForm reduced = reduce_at_point(net, x, a);
            row.reduced_rank = rank(reduced);
        }
        if (row.on_curve) ++profile.on_curve_points;
        else ++profile.off_curve_points;
        if (row.vertex) ++profile.vertex_fibers;
        ++profile.histogram[{row.on_curve, row.fiber_rank, row.reduced_rank.value_or(-1)}];
        profile.rows.push_back(std::move(row));
    };

    for (uint32_t a1 = 0; a1 < p; ++a1)
        for (uint32_t a2 = 0; a2 < p; ++a2) visit(1, a1, a2);
    for (uint32_t a2 = 0; a2 < p; ++a2) visit(0, 1, a2);
    visit(0, 0, 1);
    return profile;
}

namespace {

// Quadratic extension GF(p^2) = GF(p)[w], w^2 = nr (a fixed nonresidue).
struct Fq2 {
    uint32_t a, b;
};

struct Fq2Ctx {
    uint32_t p, nr;
    Fq2 mul(Fq2 x, Fq2 y) const {
        uint64_t aa = uint64_t(x.a) * y.a, bb = uint64_t(x.b) * y.b;
        uint64_t ab = uint64_t(x.a) * y.b + uint64_t(x.b) * y.a;
        return {static_cast<uint32_t>((aa + bb % p * nr) % p), static_cast<uint32_t>(ab % p)};
    }
    Fq2 add(Fq2 x, Fq2 y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
    Fq2 scale(uint32_t c, Fq2 x) const {
        return {static_cast<uint32_t>(uint64_t(c) * x.a % p), static_cast<uint32_t>(uint64_t(c) * x.b % p)};
    }
    bool is_zero(Fq2 x) const { return x.a == 0 && x.b == 0; }
    std::string str(Fq2 x) const {
        if (x.b == 0) return std::to_string(x.a);
        std::string out = x.a ? std::to_string(x.a) + "+" : "";
        if (x.b != 1) out += std::to_string(x.b) + "*";
        return out + "w";
    }
};

struct IntTerm {
    int e[3];
    uint32_t c;
};

std::vector<IntTerm> int_terms(const MultiPoly& poly) {
    std::vector<IntTerm> out;
    for (const auto& [e, c] : poly.terms())
        out.push_back({{e[0], e[1], e[2]}, c.as_fp().value});
    return out;
}

Fq2 eval_terms(const Fq2Ctx& ctx, const std::vector<IntTerm>& terms, const Fq2 pow[3][7]) {
    Fq2 acc{0, 0};
    for (const auto& t : terms) {
        Fq2 v = ctx.mul(pow[0][t.e[0]], ctx.mul(pow[1][t.e[1]], pow[2][t.e[2]]));
        acc = ctx.add(acc, ctx.scale(t.c, v));
    }
    return acc;
}

} // namespace

std::string SmoothnessVerdict::disclaimer() const {
    return "finite-field probe: evidence over the tested fields only, not a "
           "smoothness certificate over the algebraic closure";
}

SmoothnessVerdict smoothness_probe(const MultiPoly& sextic) {
    if (sextic.is_zero() || sextic.degree() != 6 || !sextic.is_homogeneous(6))
        throw DomainError("expected sextic");
    if (!sextic.field().is_finite()) throw DomainError("enumeration requires finite field");
    uint32_t p = sextic.field().characteristic();

    std::vector<IntTerm> f = int_terms(sextic);
    std::vector<IntTerm> grad[3];
    for (int v = 0; v < 3; ++v) grad[v] = int_terms(sextic.derivative(v));

    uint32_t nr = 0;
    for (uint32_t c = 2; c < p; ++c) {
        bool square = false;
        for (uint32_t r = 0; r <= p / 2 && !square; ++r) square = (uint64_t(r) * r % p == c);
        if (!square) {
            nr = c;
            break;
        }
    }
    Fq2Ctx ctx{p, nr};

    SmoothnessVerdict verdict;
    verdict.fields_tested = "GF(" + std::to_string(p) + "), GF(" + std::to_string(p) +
                            "^2) with w^2 = " + std::to_string(nr);

    auto test_point = [&](Fq2 x0, Fq2 x1, Fq2 x2, bool extension) {
        Fq2 pts[3] = {x0, x1, x2};
        Fq2 pow[3][7];
        for (int v = 0; v < 3; ++v) {
            pow[v][0] = {1, 0};
            for (int e = 1; e <= 6; ++e) pow[v][e] = ctx.mul(pow[v][e - 1], pts[v]);
        }
        if (!ctx.is_zero(eval_terms(ctx, f, pow))) return false;
        for (int v = 0; v < 3; ++v)
            if (!ctx.is_zero(eval_terms(ctx, grad[v], pow))) return false;
        verdict.singular_point_found = true;
        verdict.witness = "(" + ctx.str(x0) + " : " + ctx.str(x1) + " : " + ctx.str(x2) + ")";
        verdict.witness_field = extension ? "GF(" + std::to_string(p) + "^2)"
                                          : "GF(" + std::to_string(p) + ")";
        return true;
    };

    // GF(p) first so a rational witness is reported when one exists.
    for (uint32_t a1 = 0; a1 < p; ++a1)
        for (uint32_t a2 = 0; a2 < p; ++a2)
            if (test_point({1, 0}, {a1, 0}, {a2, 0}, false)) return verdict;
    for (uint32_t a2 = 0; a2 < p; ++a2)
        if (test_point({0, 0}, {1, 0}, {a2, 0}, false)) return verdict;
    if (test_point({0, 0}, {0, 0}, {1, 0}, false)) return verdict;

    uint32_t q = p * p;
    auto decode = [&](uint32_t code) -> Fq2 { return {code % p, code / p}; };
    for (uint32_t c1 = 0; c1 < q; ++c1)
        for (uint32_t c2 = 0; c2 < q; ++c2)
            if (test_point({1, 0}, decode(c1), decode(c2), true)) return verdict;
    for (uint32_t c2 = 0; c2 < q; ++c2)
        if (test_point({0, 0}, {1, 0}, decode(c2), true)) return verdict;
    test_point({0, 0}, {0, 0}, {1, 0}, true);
    return verdict;
}

mpz_class even_theta_count(int g) {
    if (g < 0) throw DomainError("genus must be nonnegative");
    if (g == 0) return 1; // (1/2) * (2^0 + 1) = 1 via the rational intermediate
    mpz_class half;
    mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(g - 1));
    mpz_class full;
    mpz_ui_pow_ui(full.get_mpz_t(), 2, static_cast<unsigned long>(g));
    return half * (full + 1);
}

mpz_class odd_theta_count(int g) {
    if (g < 0) throw DomainError("genus must be nonnegative");
    if (g == 0) return 0;
    mpz_class half;
    mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(g - 1));
    mpz_class full;
    mpz_ui_pow_ui(full.get_mpz_t(), 2, static_cast<unsigned long>(g));
    return half * (full - 1);
}

long plane_curve_genus(long d) {
    if (d < 1) throw DomainError("degree must be positive");
    return (d - 1) * (d - 2) / 2;
}

NetOfQuadrics reduce_net_mod_p(const NetOfQuadrics& net, uint32_t p) {
    if (!(net.field() == Field::rationals()))
        throw DomainError("reduction mod p expects a net over Q");
    Field fp = Field::prime(p);
    NetOfQuadrics::Entries e{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int m = 0; m < 3; ++m)
                e[i][j][m] = Scalar::of(fp, net.entry(i, j)[m].as_rational());
    return NetOfQuadrics(std::move(e));
}

} // namespace qclif
