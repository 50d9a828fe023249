#include "support.hpp"

namespace qclif::testing {

std::vector<Subspace> all_subspaces_brute_force(const Field& field, int n, int k) {
    uint32_t p = field.characteristic();
    std::vector<Subspace> out;

    std::vector<int> pivots(static_cast<size_t>(k));
    std::function<void(int, int)> choose = [&](int idx, int start) {
        if (idx == k) {
            // Free positions: (row, col) with col > pivots[row], col not a pivot.
            std::vector<std::pair<int, int>> free_pos;
            for (int r = 0; r < k; ++r)
                for (int c = pivots[static_cast<size_t>(r)] + 1; c < n; ++c) {
                    bool is_pivot = false;
                    for (int pc : pivots)
                        if (pc == c) is_pivot = true;
                    if (!is_pivot) free_pos.emplace_back(r, c);
                }
            uint64_t total = 1;
            for (size_t i = 0; i < free_pos.size(); ++i) total *= p;
            for (uint64_t code = 0; code < total; ++code) {
                Matrix m(k, n, field);
                for (int r = 0; r < k; ++r)
                    m.at(r, pivots[static_cast<size_t>(r)]) = Scalar::of(field, 1);
                uint64_t c = code;
                for (const auto& [r, col] : free_pos) {
                    m.at(r, col) = Scalar::of(field, static_cast<long>(c % p));
                    c /= p;
                }
                out.push_back(Subspace::span(m));
            }
            return;
        }
        for (int c = start; c < n; ++c) {
            pivots[static_cast<size_t>(idx)] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);
    return out;
}

std::vector<Subspace> isotropic_subspaces_oracle(const QuadForm& q, int k) {
    std::vector<Subspace> out;
    for (const Subspace& w : all_subspaces_brute_force(q.field(), q.dim(), k)) {
        bool isotropic = true;
        for (int i = 0; i < k && isotropic; ++i)
            for (int j = i; j < k && isotropic; ++j)
                if (!q.pairing(w.basis().row(i), w.basis().row(j)).is_zero()) isotropic = false;
        if (isotropic) out.push_back(w);
    }
    return out;
}

} // namespace qclif::testing
