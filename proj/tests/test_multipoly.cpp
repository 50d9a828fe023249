#include "qclif/multipoly.hpp"

#include "qclif/errors.hpp"

#include <doctest.h>

#include "support.hpp"

using namespace qclif;
using qclif::testing::Rng;

namespace {

MultiPoly var(const Field& f, int v) {
    MultiPoly::Exponents e{0, 0, 0};
    e[static_cast<size_t>(v)] = 1;
    return MultiPoly::monomial(Scalar::of(f, 1), e);
}

// diag(a0, a0, a1, a1, a2, a2)
std::vector<std::vector<MultiPoly>> diagonal_net(const Field& f) {
    std::vector<std::vector<MultiPoly>> m(6, std::vector<MultiPoly>(6, MultiPoly::zero(f)));
    for (int i = 0; i < 6; ++i) m[i][i] = var(f, i / 2);
    return m;
}

// Three antidiagonal blocks [[0, a_i], [a_i, 0]].
std::vector<std::vector<MultiPoly>> block_net_b3(const Field& f) {
    std::vector<std::vector<MultiPoly>> m(6, std::vector<MultiPoly>(6, MultiPoly::zero(f)));
    for (int b = 0; b < 3; ++b) {
        m[2 * b][2 * b + 1] = var(f, b);
        m[2 * b + 1][2 * b] = var(f, b);
    }
    return m;
}

} // namespace

TEST_CASE("determinant of the diagonal net") {
    Field f = Field::rationals();
    MultiPoly d = det_linear_matrix(diagonal_net(f));
    MultiPoly expected = MultiPoly::monomial(Scalar::of(f, 1), {2, 2, 2});
    CHECK(d == expected);
    CHECK(d.is_homogeneous(6));
}

TEST_CASE("determinant of the block antidiagonal net") {
    Field f = Field::rationals();
    MultiPoly d = det_linear_matrix(block_net_b3(f));
    MultiPoly expected = MultiPoly::monomial(Scalar::of(f, -1), {2, 2, 2});
    CHECK(d == expected);
}

TEST_CASE("determinant rejects bad inputs") {
    Field f = Field::rationals();
    auto m = diagonal_net(f);
    m[0][1] = var(f, 0); // symmetry broken
    CHECK_THROWS_WITH_AS(det_linear_matrix(m), "matrix not symmetric", DomainError);

    auto quad = diagonal_net(f);
    quad[0][0] = var(f, 0) * var(f, 0);
    CHECK_THROWS_WITH_AS(det_linear_matrix(quad), "entry degree", DomainError);
}

TEST_CASE("determinant commutes with evaluation (oracle over GF(7))") {
    Field f = Field::prime(7);
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        // Random symmetric matrix of linear forms.
        std::vector<std::vector<MultiPoly>> m(6, std::vector<MultiPoly>(6, MultiPoly::zero(f)));
        for (int i = 0; i < 6; ++i)
            for (int j = i; j < 6; ++j) {
                MultiPoly form = MultiPoly::linear_form(
                    {rng.scalar(f), rng.scalar(f), rng.scalar(f)});
                m[i][j] = form;
                m[j][i] = form;
            }
        MultiPoly d = det_linear_matrix(m);
        CHECK((d.is_zero() || d.is_homogeneous(6)));
        for (int point = 0; point < 10; ++point) {
            std::array<Scalar, 3> a = {rng.scalar(f), rng.scalar(f), rng.scalar(f)};
            // Independent path: evaluate entries first, then Gaussian
            // elimination on the scalar matrix.
            Matrix evaluated(6, 6, f);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) evaluated.at(i, j) = evaluate_poly(m[i][j], a);
            CHECK(evaluate_poly(d, a) == evaluated.det());
        }
    }
}

TEST_CASE("evaluate_poly basics") {
    Field f = Field::rationals();
    MultiPoly p = MultiPoly::monomial(Scalar::of(f, 1), {2, 2, 2});
    Scalar one = Scalar::of(f, 1), zero = Scalar::of(f, 0);
    CHECK(evaluate_poly(p, {one, one, one}) == one);
    CHECK(evaluate_poly(p, {zero, one, one}) == zero);

    Scalar fp = Scalar::of(Field::prime(5), 1);
    CHECK_THROWS_WITH_AS(evaluate_poly(p, {fp, fp, fp}), "field mismatch", DomainError);
}

TEST_CASE("evaluation is linear in the coefficients (oracle over GF(11))") {
    Field f = Field::prime(11);
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly p = MultiPoly::zero(f), q = MultiPoly::zero(f);
        for (int term = 0; term < 6; ++term) {
            MultiPoly::Exponents e = {static_cast<int>(rng.below(4)), static_cast<int>(rng.below(4)),
                                      static_cast<int>(rng.below(4))};
            p = p + MultiPoly::monomial(rng.scalar(f), e);
            q = q + MultiPoly::monomial(rng.scalar(f), e);
        }
        std::array<Scalar, 3> a = {rng.scalar(f), rng.scalar(f), rng.scalar(f)};
        Scalar lambda = rng.scalar(f);
        CHECK(evaluate_poly(p + q, a) == evaluate_poly(p, a) + evaluate_poly(q, a));
        CHECK(evaluate_poly(p.scaled(lambda), a) == lambda * evaluate_poly(p, a));
    }
}

TEST_CASE("polynomial printing is deterministic") {
    Field f = Field::rationals();
    MultiPoly d = det_linear_matrix(block_net_b3(f));
    CHECK(d.to_string() == "-a0^2*a1^2*a2^2");
}
