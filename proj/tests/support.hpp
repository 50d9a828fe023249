#pragma once

#include "qclif/isotropic.hpp"
#include "qclif/matrix.hpp"
#include "qclif/quadform.hpp"

#include <random>
#include <vector>

namespace qclif::testing {

// Deterministic RNG wrapper; distributions are hand-rolled so sequences are
// identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}
    uint64_t next() { return gen_(); }
    long below(long n) { return static_cast<long>(gen_() % static_cast<uint64_t>(n)); }
    long in_range(long lo, long hi) { return lo + below(hi - lo + 1); }
    Scalar scalar(const Field& field, long spread = 9) {
        if (field.is_finite()) return Scalar::of(field, below(field.characteristic()));
        return Scalar::of(field, in_range(-spread, spread));
    }

private:
    std::mt19937_64 gen_;
};

inline Matrix random_matrix(Rng& rng, int rows, int cols, const Field& field) {
    Matrix m(rows, cols, field);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.scalar(field);
    return m;
}

inline Matrix random_invertible(Rng& rng, int n, const Field& field) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n, field);
        if (m.rank() == n) return m;
    }
}

inline QuadForm random_quadform(Rng& rng, int n, const Field& field) {
    Matrix m(n, n, field);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Scalar c = rng.scalar(field);
            m.at(i, j) = c;
            m.at(j, i) = c;
        }
    return QuadForm(std::move(m));
}

// Independent oracle: enumerate ALL k-dimensional subspaces of GF(p)^n by
// walking every echelon shape and every free entry, with no pruning, then
// filter by total isotropy through the public QuadForm pairing. Slow and
// simple on purpose.
std::vector<Subspace> all_subspaces_brute_force(const Field& field, int n, int k);
std::vector<Subspace> isotropic_subspaces_oracle(const QuadForm& q, int k);

} // namespace qclif::testing
