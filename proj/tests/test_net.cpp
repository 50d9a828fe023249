#include "qclif/net.hpp"

#include "qclif/errors.hpp"
#include "qclif/net_io.hpp"

#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace qclif;
using qclif::testing::Rng;

namespace {

// Three antidiagonal blocks [[0, a_b], [a_b, 0]].
NetOfQuadrics block_net_b3(const Field& f) {
    NetOfQuadrics::Entries e{};
    Scalar zero = Scalar::of(f, 0), one = Scalar::of(f, 1);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int m = 0; m < 3; ++m) e[i][j][m] = zero;
    for (int b = 0; b < 3; ++b) {
        e[2 * b][2 * b + 1][b] = one;
        e[2 * b + 1][2 * b][b] = one;
    }
    return NetOfQuadrics(std::move(e));
}

NetOfQuadrics diagonal_net(const Field& f) {
    NetOfQuadrics::Entries e{};
    Scalar zero = Scalar::of(f, 0), one = Scalar::of(f, 1);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int m = 0; m < 3; ++m) e[i][j][m] = zero;
    for (int i = 0; i < 6; ++i) e[i][i][i / 2] = one;
    return NetOfQuadrics(std::move(e));
}

NetOfQuadrics random_net(Rng& rng, const Field& f) {
    NetOfQuadrics::Entries e{};
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j)
            for (int m = 0; m < 3; ++m) {
                Scalar c = rng.scalar(f);
                e[i][j][m] = c;
                e[j][i][m] = c;
            }
    return NetOfQuadrics(std::move(e));
}

std::array<Scalar, 3> pt(const Field& f, long a0, long a1, long a2) {
    return {Scalar::of(f, a0), Scalar::of(f, a1), Scalar::of(f, a2)};
}

BasePoint e1(const Field& f) {
    std::vector<Scalar> c(6, Scalar::of(f, 0));
    c[0] = Scalar::of(f, 1);
    return BasePoint(std::move(c));
}

} // namespace

TEST_CASE("discriminants of the model nets") {
    Field q = Field::rationals();
    MultiPoly disc_b3 = discriminant(block_net_b3(q));
    CHECK(disc_b3.to_string() == "-a0^2*a1^2*a2^2");
    MultiPoly disc_diag = discriminant(diagonal_net(q));
    CHECK(disc_diag.to_string() == "a0^2*a1^2*a2^2");
}

TEST_CASE("discriminant commutes with fiber evaluation") {
    Field f = Field::prime(11);
    Rng rng(19);
    NetOfQuadrics net = random_net(rng, f);
    MultiPoly disc = discriminant(net);
    for (int trial = 0; trial < 20; ++trial) {
        std::array<Scalar, 3> a = {rng.scalar(f), rng.scalar(f), rng.scalar(f)};
        if (a[0].is_zero() && a[1].is_zero() && a[2].is_zero()) continue;
        CHECK(evaluate_poly(disc, a) == fiber_form(net, a).gram().det());
    }
}

TEST_CASE("fiber forms of the block net") {
    Field q = Field::rationals();
    NetOfQuadrics net = block_net_b3(q);
    CHECK(rank(fiber_form(net, pt(q, 1, 1, 1))) == 6);
    CHECK(rank(fiber_form(net, pt(q, 0, 1, 1))) == 4);
    CHECK_THROWS_WITH_AS(fiber_form(net, pt(q, 0, 0, 0)), "zero point", DomainError);

    // Scaling: fiber at lambda*a is lambda times the fiber at a.
    std::array<Scalar, 3> a = pt(q, 2, -1, 3);
    Scalar lambda = Scalar::of(q, 5);
    std::array<Scalar, 3> la = {a[0] * lambda, a[1] * lambda, a[2] * lambda};
    CHECK(fiber_form(net, la).gram() == fiber_form(net, a).gram().scaled(lambda));
    CHECK(rank(fiber_form(net, la)) == rank(fiber_form(net, a)));
}

TEST_CASE("base points of the block net over GF(3)") {
    Field f = Field::prime(3);
    NetOfQuadrics net = block_net_b3(f);
    std::vector<BasePoint> points = find_base_points(net);
    CHECK_FALSE(points.empty());
    CHECK(std::find(points.begin(), points.end(), e1(f)) != points.end());
    // Re-verification pass: every returned point kills all three quadrics.
    for (const BasePoint& x : points)
        for (int m = 0; m < 3; ++m)
            CHECK(bilinear(x.coords(), net.coefficient_matrix(m), x.coords()).is_zero());
}

TEST_CASE("an empty base locus is a legal outcome") {
    // Over GF(3) with diagonal quadrics d0 = (1,1,1,1,1,1),
    // d1 = (1,1,1,2,2,2), d2 = (1,1,2,1,1,2): a common zero needs a support
    // of size 0 or 3 or 6 with all three weighted sums zero mod 3, and no
    // such support exists.
    Field f = Field::prime(3);
    NetOfQuadrics::Entries e{};
    Scalar zero = Scalar::of(f, 0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int m = 0; m < 3; ++m) e[i][j][m] = zero;
    long d1[6] = {1, 1, 1, 2, 2, 2}, d2[6] = {1, 1, 2, 1, 1, 2};
    for (int i = 0; i < 6; ++i) {
        e[i][i][0] = Scalar::of(f, 1);
        e[i][i][1] = Scalar::of(f, d1[i]);
        e[i][i][2] = Scalar::of(f, d2[i]);
    }
    CHECK(find_base_points(NetOfQuadrics(std::move(e))).empty());
}

TEST_CASE("base point search needs a finite field") {
    CHECK_THROWS_WITH_AS(find_base_points(block_net_b3(Field::rationals())),
                         "enumeration requires finite field", DomainError);
}

TEST_CASE("reduction at a base point") {
    Field q = Field::rationals();
    NetOfQuadrics net = block_net_b3(q);
    BasePoint x = e1(q);

    QuadForm reduced = reduce_at_point(net, x, pt(q, 1, 1, 1));
    CHECK(reduced.dim() == 4);
    CHECK(rank(reduced) == 4);

    CHECK_THROWS_WITH_AS(reduce_at_point(net, x, pt(q, 0, 1, 1)), "x is a vertex of this fiber",
                         DomainError);

    // Non-generic fiber: the reduction drops to rank 2 and is flagged by the
    // rank, not by an error.
    CHECK(rank(reduce_at_point(net, x, pt(q, 1, 0, 1))) == 2);

    std::vector<Scalar> not_base(6, Scalar::of(q, 1));
    CHECK_THROWS_WITH_AS(reduce_at_point(net, BasePoint(std::move(not_base)), pt(q, 1, 1, 1)),
                         "not on base locus", DomainError);
}

TEST_CASE("reduction rank is independent of the complement choice") {
    Field f = Field::prime(7);
    Rng rng(42);
    int checked = 0;
    for (int attempt = 0; attempt < 50 && checked < 3; ++attempt) {
        NetOfQuadrics net = random_net(rng, f);
        std::vector<BasePoint> points = find_base_points(net);
        if (points.empty()) continue;
        const BasePoint& x = points.front();
        for (long a0 = 1; a0 <= 2; ++a0) {
            std::array<Scalar, 3> a = pt(f, a0, 1, 2);
            try {
                QuadForm det_reduced = reduce_at_point(net, x, a);
                for (uint64_t seed = 1; seed <= 4; ++seed) {
                    QuadForm rand_reduced = reduce_at_point_randomized(net, x, a, seed);
                    CHECK(rank(rand_reduced) == rank(det_reduced));
                }
                ++checked;
            } catch (const DomainError&) {
                // vertex fibers are legal here
            }
        }
    }
    CHECK(checked >= 3);
}

TEST_CASE("rank profile of the block net shows its non-genericity") {
    Field f = Field::prime(3);
    NetOfQuadrics net = block_net_b3(f);
    RankProfile profile = rank_profile(net, e1(f));
    CHECK(profile.rows.size() == 13); // 3^2 + 3 + 1 plane points
    CHECK(profile.on_curve_points + profile.off_curve_points == 13);

    // Ranks below 5 on the curve witness a non-generic net.
    bool low_rank_on_curve = false;
    for (const auto& [key, count] : profile.histogram) {
        auto [on_curve, fiber_rank, reduced_rank] = key;
        if (on_curve && fiber_rank < 5) low_rank_on_curve = true;
    }
    CHECK(low_rank_on_curve);
    CHECK(profile.histogram.count({true, 4, 2}) == 1); // the (1,0,1)-type fibers

    // One isotropic reduction step always removes rank exactly 2.
    for (const auto& row : profile.rows)
        if (!row.vertex) CHECK(row.fiber_rank - *row.reduced_rank == 2);
}

TEST_CASE("all-rank-6 fiber column when the discriminant has no rational zeros") {
    // Norm-form net: S(a) = [[0, M(a)], [M(a)^T, 0]] where M(a) is
    // multiplication by a0 + a1 x + a2 x^2 in GF(27) = GF(3)[x]/(x^3 - x - 1).
    // Every nonzero fiber is invertible, so the discriminant (a norm squared)
    // has no GF(3)-rational zeros, and (0, v) is a base point for every v.
    Field f = Field::prime(3);
    long m1[3][3] = {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};
    long m2[3][3] = {{0, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    NetOfQuadrics::Entries e{};
    Scalar zero = Scalar::of(f, 0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int m = 0; m < 3; ++m) e[i][j][m] = zero;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            long mm[3] = {i == j ? 1 : 0, m1[i][j], m2[i][j]};
            for (int m = 0; m < 3; ++m) {
                e[i][3 + j][m] = Scalar::of(f, mm[m]);
                e[3 + j][i][m] = Scalar::of(f, mm[m]);
            }
        }
    NetOfQuadrics net(std::move(e));

    std::vector<BasePoint> pts = find_base_points(net);
    REQUIRE_FALSE(pts.empty());
    RankProfile profile = rank_profile(net, pts.front());
    CHECK(profile.on_curve_points == 0);
    for (const auto& row : profile.rows) {
        CHECK(row.fiber_rank == 6);
        CHECK_FALSE(row.vertex);
        CHECK(*row.reduced_rank == 4);
    }
}

TEST_CASE("smoothness probe finds the singular point of the diagonal-net sextic") {
    Field f = Field::prime(7);
    MultiPoly sextic = discriminant(diagonal_net(f)); // a0^2 a1^2 a2^2
    SmoothnessVerdict verdict = smoothness_probe(sextic);
    CHECK(verdict.singular_point_found);
    CHECK(verdict.witness == "(1 : 0 : 0)");
    CHECK(verdict.witness_field == "GF(7)");
}

TEST_CASE("smoothness probe clears the Fermat sextic over GF(7) and GF(49)") {
    Field f = Field::prime(7);
    MultiPoly fermat = MultiPoly::monomial(Scalar::of(f, 1), {6, 0, 0}) +
                       MultiPoly::monomial(Scalar::of(f, 1), {0, 6, 0}) +
                       MultiPoly::monomial(Scalar::of(f, 1), {0, 0, 6});
    SmoothnessVerdict verdict = smoothness_probe(fermat);
    CHECK_FALSE(verdict.singular_point_found);
    CHECK(verdict.fields_tested.find("GF(7)") != std::string::npos);
    CHECK_FALSE(verdict.disclaimer().empty());

    // Scale invariance of the verdict.
    SmoothnessVerdict scaled = smoothness_probe(fermat.scaled(Scalar::of(f, 3)));
    CHECK(scaled.singular_point_found == verdict.singular_point_found);
}

TEST_CASE("smoothness probe rejects non-sextics") {
    Field f = Field::prime(7);
    MultiPoly quartic = MultiPoly::monomial(Scalar::of(f, 1), {4, 0, 0});
    CHECK_THROWS_WITH_AS(smoothness_probe(quartic), "expected sextic", DomainError);
    MultiPoly mixed = MultiPoly::monomial(Scalar::of(f, 1), {6, 0, 0}) +
                      MultiPoly::monomial(Scalar::of(f, 1), {1, 0, 0});
    CHECK_THROWS_WITH_AS(smoothness_probe(mixed), "expected sextic", DomainError);
}

TEST_CASE("theta characteristic counts") {
    CHECK(even_theta_count(10) == 524800);
    CHECK(even_theta_count(1) == 3);
    CHECK(even_theta_count(0) == 1);
    CHECK(odd_theta_count(10) == 523776);
    // even + odd = 2^(2g)
    for (int g = 0; g <= 12; ++g) {
        mpz_class total;
        mpz_ui_pow_ui(total.get_mpz_t(), 2, static_cast<unsigned long>(2 * g));
        CHECK(even_theta_count(g) + odd_theta_count(g) == total);
    }
}

TEST_CASE("plane curve genus") {
    CHECK(plane_curve_genus(6) == 10);
    CHECK(plane_curve_genus(1) == 0);
    CHECK(plane_curve_genus(2) == 0);
    CHECK_THROWS_AS(plane_curve_genus(0), DomainError);
}

TEST_CASE("net files round-trip") {
    Field q = Field::rationals();
    NetOfQuadrics net = block_net_b3(q);
    std::string doc = net_to_document(net);
    NetOfQuadrics back = parse_net_document(doc);
    CHECK(back == net);

    // A document with the net under "inputs" (structured CLI output) parses
    // to the same net.
    std::string wrapped = std::string("{\"command\":\"net analyze\",\"inputs\":") + doc + "}";
    CHECK(parse_net_document(wrapped) == net);
}

TEST_CASE("net files validate") {
    CHECK_THROWS_AS(parse_net_document("not json"), InputError);
    CHECK_THROWS_AS(parse_net_document("{\"field\":\"Q\"}"), InputError);
    CHECK_THROWS_AS(parse_net_document("{\"field\":\"GF(4)\",\"net\":[]}"), InputError);

    // Symmetry violation is an input error.
    Field q = Field::rationals();
    std::string doc = net_to_document(block_net_b3(q));
    size_t pos = doc.find("1");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, 1, "2");
    CHECK_THROWS_AS(parse_net_document(doc), InputError);
}

TEST_CASE("mod-p reduction of rational nets") {
    Field q = Field::rationals();
    NetOfQuadrics::Entries e{};
    Scalar zero = Scalar::of(q, 0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int m = 0; m < 3; ++m) e[i][j][m] = zero;
    for (int i = 0; i < 6; ++i) e[i][i][0] = Scalar::rational(mpq_class(1, 3)); // 1/3 * a0
    NetOfQuadrics net(std::move(e));

    NetOfQuadrics mod5 = reduce_net_mod_p(net, 5);
    CHECK(mod5.field() == Field::prime(5));
    CHECK(mod5.entry(0, 0)[0].as_fp().value == 2); // 3^{-1} = 2 mod 5

    CHECK_THROWS_WITH_AS(reduce_net_mod_p(net, 3), "denominator not coprime to p", DomainError);
}
