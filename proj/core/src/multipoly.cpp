#include "qclif/multipoly.hpp"

#include "qclif/errors.hpp"

#include <bit>
#include <sstream>

namespace qclif {

MultiPoly MultiPoly::constant(const Scalar& c) {
    return monomial(c, {0, 0, 0});
}

MultiPoly MultiPoly::monomial(const Scalar& c, const Exponents& e) {
    MultiPoly p(c.field());
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::linear_form(const std::array<Scalar, 3>& c) {
    MultiPoly p(c[0].field());
    p.add_term({1, 0, 0}, c[0]);
    p.add_term({0, 1, 0}, c[1]);
    p.add_term({0, 0, 1}, c[2]);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    if (!(c.field() == field_)) throw DomainError("field mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

bool MultiPoly::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_)
        if (e[0] + e[1] + e[2] != degree) return false;
    return true;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(field_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (!(field_ == o.field_)) throw DomainError("field mismatch");
    MultiPoly out(field_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return out;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly out(field_);
    if (c.is_zero()) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly out(field_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        out.add_term(d, c * Scalar::of(field_, e[var]));
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"a0", "a1", "a2"};
    std::ostringstream out;
    bool first = true;
    // Iterate in reverse lexicographic exponent order so a0-heavy terms lead.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                out << " - ";
                cs = cs.substr(1);
            } else {
                out << " + ";
            }
        }
        first = false;
        bool has_vars = e[0] + e[1] + e[2] > 0;
        if (!has_vars || cs != "1") {
            if (cs == "-1" && has_vars) out << "-";
            else out << cs;
            if (has_vars && cs != "-1") out << "*";
        }
        bool leading = true;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!leading) out << "*";
            leading = false;
            out << names[v];
            if (e[v] > 1) out << "^" << e[v];
        }
    }
    return out.str();
}

Scalar evaluate_poly(const MultiPoly& p, const std::array<Scalar, 3>& point) {
    for (const auto& c : point)
        if (!(c.field() == p.field())) throw DomainError("field mismatch");
    Scalar acc = Scalar::of(p.field(), 0);
    for (const auto& [e, c] : p.terms()) {
        Scalar term = c;
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < e[v]; ++k) term *= point[v];
        acc += term;
    }
    return acc;
}

MultiPoly det_linear_matrix(const std::vector<std::vector<MultiPoly>>& m) {
    size_t n = m.size();
    if (n == 0) throw DomainError("empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("matrix not square");
    Field field = m[0][0].field();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!(m[i][j] == m[j][i])) throw DomainError("matrix not symmetric");
            if (!m[i][j].is_zero() && !m[i][j].is_homogeneous(1))
                throw DomainError("entry degree");
        }

    // Laplace expansion with minors memoized by column mask; the minor of a
    // mask uses the first popcount(mask) rows.
    std::vector<MultiPoly> minor(size_t(1) << n, MultiPoly::zero(field));
    minor[0] = MultiPoly::constant(Scalar::of(field, 1));
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        int k = std::popcount(mask) - 1; // expand along row k
        MultiPoly acc(field);
        int position = 0;
        for (uint32_t j = 0; j < n; ++j) {
            if (!(mask & (uint32_t(1) << j))) continue;
            const MultiPoly& entry = m[k][j];
            if (!entry.is_zero()) {
                MultiPoly sub = minor[mask & ~(uint32_t(1) << j)] * entry;
                if ((k + position) % 2 == 0) acc = acc + sub;
                else acc = acc - sub;
            }
            ++position;
        }
        minor[mask] = std::move(acc);
    }
    return minor[(size_t(1) << n) - 1];
}

} // namespace qclif
