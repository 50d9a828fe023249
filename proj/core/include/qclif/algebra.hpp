#pragma once

#include "qclif/matrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qclif {

class Algebra;

// Finite-dimensional unital associative algebra given by structure constants
// on an ordered basis; basis element 0 is the unit. The table is shared and
// immutable, so Algebra is a cheap value and elements stay valid across
// copies and moves.
class Algebra {
public:
    using SparseProduct = std::vector<std::pair<int, Scalar>>;

    Algebra(Field field, std::vector<std::string> names, std::vector<int> grades,
            std::vector<SparseProduct> table);

    int dim() const { return static_cast<int>(data_->names.size()); }
    const Field& field() const { return data_->field; }
    int grade(int i) const { return data_->grades[static_cast<size_t>(i)]; }
    const std::string& basis_name(int i) const { return data_->names[static_cast<size_t>(i)]; }
    const SparseProduct& basis_product(int i, int j) const {
        return data_->table[static_cast<size_t>(i) * dim() + j];
    }

    class Element;
    Element zero() const;
    Element one() const;
    Element basis_element(int i) const;
    Element element(std::map<int, Scalar> coeffs) const;
    Element from_dense(const std::vector<Scalar>& coords) const;

    // Identity of the underlying table: elements only combine within one
    // algebra instance (or its copies).
    bool operator==(const Algebra& o) const { return data_ == o.data_; }

private:
    struct Data {
        Field field;
        std::vector<std::string> names;
        std::vector<int> grades;
        std::vector<SparseProduct> table;
    };
    std::shared_ptr<const Data> data_;
};

// Element of a structure-constant algebra, sparse over the basis. Zero
// coefficients are never stored.
class Algebra::Element {
public:
    Element(Algebra algebra, std::map<int, Scalar> coeffs);

    const Algebra& algebra() const { return alg_; }
    const std::map<int, Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Scalar coeff(int basis_index) const;
    std::vector<Scalar> dense() const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const; // algebra product
    Element scaled(const Scalar& c) const;
    Element pow(unsigned long long e) const;

    bool operator==(const Element& o) const;

    std::string to_string() const;

private:
    Algebra alg_;
    std::map<int, Scalar> coeffs_;
};

using AlgebraElement = Algebra::Element;

// Matrix of left multiplication by x: column j holds x * b_j.
Matrix left_multiplication(const AlgebraElement& x);

// Basis of {x : xy = yx for all y}, deterministic (RREF of the solution
// space, one element per row).
std::vector<AlgebraElement> center_basis(const Algebra& a);

// T(x, y) = trace(L_x L_y) on the basis.
Matrix trace_form(const Algebra& a);

struct LeftIdeal {
    int dim;
    Matrix basis; // RREF rows of coordinates
};
LeftIdeal left_ideal(const Algebra& a, const AlgebraElement& f);

// Primitive central idempotents, found by iteratively splitting the center
// with coprime factors of minimal polynomials. Root finding is exhaustive
// over GF(p) and closed-form (degree <= 2, exact square roots) over Q and
// Q(s); if some center factor resists splitting, `fully_split` reports false
// and the idempotents returned are the blocks reached.
std::vector<AlgebraElement> primitive_central_idempotents(const Algebra& a, bool* fully_split = nullptr);

struct SubAlgebraReport {
    int dimension = 0;
    int center_dimension = 0;
    int trace_form_rank = 0;
    bool semisimple = false;
    bool center_split = false;
    std::vector<AlgebraElement> central_idempotents;
    std::vector<int> simple_factor_dims; // filled when semisimple and center_split
    std::optional<AlgebraElement> nilpotent_center_witness;
};

// Trace-form semisimplicity analysis. A full-rank trace form certifies
// semisimplicity in any characteristic; a degenerate one certifies the
// converse only in characteristic 0 or p > dim. In the remaining range the
// routine accepts a nilpotent central element as an independent certificate
// and otherwise throws DomainError("trace criterion unreliable").
SubAlgebraReport semisimplicity_report(const Algebra& a);

} // namespace qclif
