#pragma once

#include "qclif/multipoly.hpp"
#include "qclif/quadform.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace qclif {

// Net of quadrics on the plane: a 6x6 symmetric matrix of linear forms in
// a0, a1, a2, equivalently three symmetric coefficient matrices S0, S1, S2
// with S(a) = a0 S0 + a1 S1 + a2 S2.
class NetOfQuadrics {
public:
    // entries[i][j][m] = coefficient of a_m in the (i, j) entry.
    using Entries = std::array<std::array<std::array<Scalar, 3>, 6>, 6>;

    explicit NetOfQuadrics(Entries entries);
    static NetOfQuadrics from_coefficient_matrices(const Matrix& s0, const Matrix& s1,
                                                   const Matrix& s2);

    const Field& field() const { return field_; }
    const std::array<Scalar, 3>& entry(int i, int j) const { return entries_[i][j]; }
    Matrix coefficient_matrix(int m) const; // S_m
    Matrix gram_at(const std::array<Scalar, 3>& a) const;
    MultiPoly entry_poly(int i, int j) const;

    bool operator==(const NetOfQuadrics& o) const;

private:
    Field field_;
    Entries entries_;
};

// Point of the base locus: a nonzero 6-vector annihilating all three basis
// quadrics, stored with its first nonzero coordinate scaled to 1.
class BasePoint {
public:
    explicit BasePoint(std::vector<Scalar> coords); // normalizes
    const std::vector<Scalar>& coords() const { return coords_; }
    int leading_index() const { return leading_; }
    bool operator==(const BasePoint& o) const { return coords_ == o.coords_; }

private:
    std::vector<Scalar> coords_;
    int leading_;
};

// Degree-6 discriminant det S(a) (zero for everywhere-degenerate nets).
MultiPoly discriminant(const NetOfQuadrics& net);

// The quadratic form of the fiber over a plane point a != 0.
QuadForm fiber_form(const NetOfQuadrics& net, const std::array<Scalar, 3>& a);

// Exhaustive scan of P^5 over GF(p) for common zeros of the three basis
// quadrics; deterministic order (leading index, then coordinates).
std::vector<BasePoint> find_base_points(const NetOfQuadrics& net);

// Projection away from x inside the fiber over a: restricts the fiber form
// to a 4-dimensional complement of x inside the tangent hyperplane
// T = {u : (x S(a)) . u = 0}. The deterministic complement drops the
// echelon-basis row of T whose pivot is x's leading coordinate.
QuadForm reduce_at_point(const NetOfQuadrics& net, const BasePoint& x,
                         const std::array<Scalar, 3>& a);

// Same construction with a seeded random complement inside T avoiding x;
// the rank is invariantly the same, the Gram matrix generally is not.
QuadForm reduce_at_point_randomized(const NetOfQuadrics& net, const BasePoint& x,
                                    const std::array<Scalar, 3>& a, uint64_t seed);

struct RankProfileRow {
    std::array<Scalar, 3> point;
    bool on_curve = false;
    int fiber_rank = 0;
    bool vertex = false;              // x S(a) = 0, reduction undefined
    std::optional<int> reduced_rank;  // absent for vertex fibers
};

struct RankProfile {
    std::vector<RankProfileRow> rows;
    int off_curve_points = 0;
    int on_curve_points = 0;
    int vertex_fibers = 0;
    // histogram[(on_curve, fiber_rank, reduced_rank or -1)] -> count
    std::map<std::tuple<bool, int, int>, int> histogram;
};

// Exhaustive tabulation over all plane points of GF(p).
RankProfile rank_profile(const NetOfQuadrics& net, const BasePoint& x);

struct SmoothnessVerdict {
    bool singular_point_found = false;
    std::string witness;       // projective point over GF(p) or GF(p^2)
    std::string witness_field; // "GF(p)" or "GF(p^2)"
    std::string fields_tested; // always "GF(p), GF(p^2)"
    // Finite-field evidence only, not a proof of smoothness over the
    // algebraic closure.
    std::string disclaimer() const;
};

// Checks the sextic and its three partials for a common projective zero over
// GF(p) and GF(p^2).
SmoothnessVerdict smoothness_probe(const MultiPoly& sextic);

// 2^(g-1) (2^g + 1), exact (g = 0 via the rational intermediate).
mpz_class even_theta_count(int g);
// 2^(g-1) (2^g - 1).
mpz_class odd_theta_count(int g);

// (d - 1)(d - 2) / 2.
long plane_curve_genus(long d);

// Mod-p image of a net over Q; every denominator must be coprime to p.
NetOfQuadrics reduce_net_mod_p(const NetOfQuadrics& net, uint32_t p);

} // namespace qclif
