#include "qclif/isotropic.hpp"

#include "qclif/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qclif {

namespace {

// Small mod-p working set for the enumeration hot path.
struct FpEnum {
    uint32_t p;
    int n, k;
    std::vector<std::vector<uint32_t>> s;    // Gram matrix mod p
    std::vector<std::vector<uint32_t>> rows; // partial echelon basis
    std::vector<int> pivots;                 // chosen pivot columns
    std::vector<std::vector<uint32_t>> found;

    uint32_t pair(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v) const {
        uint64_t acc = 0;
        for (int i = 0; i < n; ++i) {
            if (u[i] == 0) continue;
            uint64_t partial = 0;
            for (int j = 0; j < n; ++j) partial += uint64_t(s[i][j]) * v[j];
            acc += uint64_t(u[i]) * (partial % p);
        }
        return static_cast<uint32_t>(acc % p);
    }

    bool row_ok(int r) const {
        for (int i = 0; i <= r; ++i)
            if (pair(rows[i], rows[r]) != 0) return false;
        return true;
    }

    void fill_row(int r, int col) {
        if (col == n) {
            if (!row_ok(r)) return;
            if (r + 1 == k) {
                std::vector<uint32_t> flat;
                for (const auto& row : rows)
                    flat.insert(flat.end(), row.begin(), row.end());
                found.push_back(std::move(flat));
            } else {
                fill_row(r + 1, pivots[r + 1] + 1);
            }
            return;
        }
        bool is_pivot_col = std::find(pivots.begin(), pivots.end(), col) != pivots.end();
        if (is_pivot_col) {
            rows[r][col] = 0;
            fill_row(r, col + 1);
            return;
        }
        for (uint32_t v = 0; v < p; ++v) {
            rows[r][col] = v;
            fill_row(r, col + 1);
        }
        rows[r][col] = 0;
    }

    void run_pivots(std::vector<int>& chosen, int start) {
        if (static_cast<int>(chosen.size()) == k) {
            pivots = chosen;
            rows.assign(k, std::vector<uint32_t>(n, 0));
            for (int r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
            fill_row(0, pivots[0] + 1);
            return;
        }
        for (int c = start; c < n; ++c) {
            chosen.push_back(c);
            run_pivots(chosen, c + 1);
            chosen.pop_back();
        }
    }
};

} // namespace

std::vector<Subspace> enumerate_max_isotropic(const QuadForm& q, int k) {
    if (!q.field().is_finite()) throw DomainError("enumeration requires finite field");
    if (k < 1 || k > q.dim()) throw DomainError("dimension mismatch");

    FpEnum ctx;
    ctx.p = q.field().characteristic();
    ctx.n = q.dim();
    ctx.k = k;
    ctx.s.assign(ctx.n, std::vector<uint32_t>(ctx.n, 0));
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j)
            ctx.s[i][j] = q.gram().at(i, j).as_fp().value;

    std::vector<int> chosen;
    ctx.run_pivots(chosen, 0);

    Field field = q.field();
    std::vector<Subspace> out;
    out.reserve(ctx.found.size());
    for (const auto& flat : ctx.found) {
        Matrix m(k, ctx.n, field);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < ctx.n; ++c)
                m.at(r, c) = Scalar::of(field, static_cast<long>(flat[size_t(r) * ctx.n + c]));
        out.push_back(Subspace::span(m));
    }
    return out;
}

ComponentPartition classify_components(const std::vector<Subspace>& subspaces, int n_half) {
    if (subspaces.empty()) return {};
    for (const auto& w : subspaces)
        if (w.dim() != n_half || w.ambient() != subspaces[0].ambient())
            throw DomainError("dimension mismatch");

    // Common core of the whole family (the radical, for degenerate forms).
    Subspace core = subspaces[0];
    for (size_t i = 1; i < subspaces.size() && core.dim() > 0; ++i)
        core = core.intersect(subspaces[i]);
    int core_dim = subspaces.size() > 1 ? core.dim() : 0;

    int m = static_cast<int>(subspaces.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int d = subspaces[i].intersection_dim(subspaces[j]);
            if (((d - core_dim) - n_half) % 2 == 0) {
                int ri = find(i), rj = find(j);
                if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            }
        }

    std::vector<std::vector<int>> classes;
    std::vector<int> class_of_root(m, -1);
    for (int i = 0; i < m; ++i) {
        int r = find(i);
        if (class_of_root[r] < 0) {
            class_of_root[r] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[class_of_root[r]].push_back(i);
    }
    return {std::move(classes)};
}

} // namespace qclif
