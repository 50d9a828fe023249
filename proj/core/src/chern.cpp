#include "qclif/chern.hpp"

#include "qclif/errors.hpp"
#include "qclif/rational.hpp"

namespace qclif {

void validate(const K3ChernData& data) {
    if (data.rho < 1) throw DomainError("inconsistent polarization data");
    if (data.d <= 0 || data.d % 2 != 0) throw DomainError("polarization self-intersection must be even and positive");
    if (data.azumaya && data.m != 0) throw DomainError("azumaya data requires c1 = 0");
}

long chi_twisted_k3(const K3ChernData& data, long n) {
    validate(data);
    if (!data.azumaya) throw DomainError("azumaya data required");
    long quadratic = data.rho * n * n * (data.d / 2);
    return 2 * data.rho + quadratic - data.c2;
}

long solve_c2_from_hilbert(long rho, long d, const PowerSeries& observed) {
    if (rho < 1 || d <= 0 || d % 2 != 0) throw DomainError("inconsistent polarization data");
    int degree = -1;
    for (int i = 0; i < observed.order(); ++i)
        if (observed.coeff(i) != 0) degree = i;
    if (degree != 2) throw DomainError("inconsistent polarization data");
    if (observed.coeff(2) != mpq_class(rho) * d / 2)
        throw DomainError("inconsistent polarization data");
    mpq_class c2 = 2 * mpq_class(rho) - observed.coeff(0);
    if (!is_integer(c2)) throw DomainError("inconsistent polarization data");
    return c2.get_num().get_si();
}

long simple_c2_lower_bound(long r) {
    if (r < 1) throw DomainError("degree must be positive");
    return 2 * r * r - 2;
}

mpq_class chi_bundle_p2_exact(const P2ChernData& data) {
    return data.ch2 + mpq_class(3 * data.c1, 2) + data.rank;
}

long chi_bundle_p2(const P2ChernData& data) {
    mpq_class chi = chi_bundle_p2_exact(data);
    if (!is_integer(chi)) throw DomainError("inconsistent Chern data");
    return chi.get_num().get_si();
}

EvenCliffordChi chi_even_clifford_p2() {
    // V = Omega^1(1) + O^2; write A = Omega^1(1), with ch(A) determined by
    // the Euler sequence: rank 2, c1 = -1, ch2 = -1/2.
    //
    // Lambda^2 V = Lambda^2 A + A tensor O^2 + Lambda^2 O^2
    //            = O(-1) + A + A + O,
    // Lambda^4 V = det A tensor det O^2 = O(-1).
    auto chi_line = [](long k) {
        return chi_bundle_p2({1, k, mpq_class(k * k, 2)});
    };
    // A(-1) = Omega^1: rank 2, c1 = -3, ch2 = 3/2.
    long chi_omega = chi_bundle_p2({2, -3, mpq_class(3, 2)});

    EvenCliffordChi out;
    out.components.push_back({"O", 1, chi_line(0)});
    // Lambda^2 V (-1) = O(-2) + Omega^1 + Omega^1 + O(-1).
    long chi_middle = chi_line(-2) + 2 * chi_omega + chi_line(-1);
    out.components.push_back({"L2V(-1)", 6, chi_middle});
    // Lambda^4 V (-2) = O(-3).
    out.components.push_back({"L4V(-2)", 1, chi_line(-3)});

    for (const auto& c : out.components) {
        out.rank_total += c.rank;
        out.chi_total += c.chi;
    }
    out.derived_c2 = 2 * 4 - out.chi_total;
    return out;
}

void validate(const ElemTransformData& data) {
    if (data.f0 < 1 || data.q0 < 1) throw DomainError("inconsistent transform data");
}

long delta_c2_elementary_transform(const ElemTransformData& data) {
    validate(data);
    long delta = -data.f0 * data.q0 * data.csq + 2 * (data.f0 * data.q1 - data.f1 * data.q0);
    if (data.f0 == 1 && delta_c2_f0_one_form(data) != delta)
        throw DomainError("inconsistent transform data");
    return delta;
}

long delta_c2_f0_one_form(const ElemTransformData& data) {
    validate(data);
    if (data.f0 != 1) throw DomainError("inconsistent transform data");
    return -(data.r() - 1) * data.csq + 2 * (data.v1() - data.f1 * data.r());
}

bool gerbe_divisibility_check(long r, long c2_a, long c2_b) {
    if (r < 1) throw DomainError("degree must be positive");
    return (c2_a - c2_b) % (2 * r) == 0;
}

bool minimality_check(long r, long c2, long lower_bound) {
    if (r < 1) throw DomainError("degree must be positive");
    if (c2 < lower_bound) throw DomainError("below proven bound: inconsistent input");
    return c2 < lower_bound + 2 * r;
}

BrauerSeveriInvariants brauer_severi_invariants(long chi_top_m, long chi_o_m, long c2) {
    return {2 * chi_top_m, chi_o_m, c2};
}

} // namespace qclif
