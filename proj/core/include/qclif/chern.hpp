#pragma once

#include "qclif/power_series.hpp"

#include <array>
#include <string>
#include <vector>

namespace qclif {

// Fixed numerical constants of a K3 surface; single source of truth for the
// Todd-class coefficient used in every Euler characteristic here.
struct K3Constants {
    static constexpr long chi_top = 24;
    static constexpr long chi_structure_sheaf = 2;
    static constexpr long todd_degree2 = 2; // td = 1 + 2t^2
};

// Chern data of a sheaf on a polarized K3: rank rho (= r^2 for a degree-r
// Azumaya algebra), c1 = m*h, c2, and d = h^2 (even and positive).
struct K3ChernData {
    long rho = 1;
    long m = 0;
    long c2 = 0;
    long d = 2;
    bool azumaya = true; // enforces m = 0 (A = A* kills c1)
};

void validate(const K3ChernData& data);

// chi(A(n)) = 2*rho + rho*n^2*d/2 - c2 for Azumaya data (m = 0).
long chi_twisted_k3(const K3ChernData& data, long n);

// Inverts the above from an observed quadratic polynomial in n (coefficient
// i of `observed` multiplies n^i): c2 = 2*rho - constant term. The leading
// coefficient must equal rho*d/2.
long solve_c2_from_hilbert(long rho, long d, const PowerSeries& observed);

// 2r^2 - 2, the floor for c2 of a simple degree-r Azumaya algebra.
long simple_c2_lower_bound(long r);

// Chern data on the plane: rank, c1 = c1*H, ch2 = ch2*H^2 (exact rational).
struct P2ChernData {
    long rank = 0;
    long c1 = 0;
    mpq_class ch2 = 0;
};

// chi = ch2 + (3/2) c1 + rank; must come out an integer.
long chi_bundle_p2(const P2ChernData& data);
mpq_class chi_bundle_p2_exact(const P2ChernData& data);

// Euler characteristic of the even Clifford sheaf O + L^2 V(-1) + L^4 V(-2)
// for V = Omega^1(1) + O^2, component by component.
struct EvenCliffordChi {
    struct Component {
        std::string name;
        long rank = 0;
        long chi = 0;
    };
    std::vector<Component> components;
    long rank_total = 0;
    long chi_total = 0;
    long derived_c2 = 0; // 2*rho - chi with rho = 4
};

EvenCliffordChi chi_even_clifford_p2();

// Ranks and degrees of V, F, Q = V/F on the curve, plus C^2.
struct ElemTransformData {
    long f0 = 1, f1 = 0;
    long q0 = 1, q1 = 0;
    long csq = 0;
    long r() const { return f0 + q0; }
    long v1() const { return f1 + q1; }
};

void validate(const ElemTransformData& data);

// c2(A') - c2(A) = -f0*q0*C^2 + 2*(f0*q1 - f1*q0), as printed in the source
// material (which itself flags a minor error in the printed form); when
// f0 = 1 the independently-stated expansion -(r-1)C^2 + 2(v1 - f1*r) is
// cross-checked against it.
long delta_c2_elementary_transform(const ElemTransformData& data);

// The f0 = 1 expansion -(r-1)C^2 + 2(v1 - f1 r); only defined when f0 = 1.
long delta_c2_f0_one_form(const ElemTransformData& data);

// True iff 2r divides c2_a - c2_b (necessary for two degree-r Azumaya
// algebras to share Morita class and underlying gerbe).
bool gerbe_divisibility_check(long r, long c2_a, long c2_b);

// True iff c2 < lower_bound + 2r, which pins c2 as minimal given the bound.
bool minimality_check(long r, long c2, long lower_bound);

struct BrauerSeveriInvariants {
    long chi_top = 0;        // 2 * chi_top(M)
    long chi_structure = 0;  // chi(O_M)
    long canonical_cube = 0; // K^3 = c2
};

BrauerSeveriInvariants brauer_severi_invariants(long chi_top_m, long chi_o_m, long c2);

} // namespace qclif
