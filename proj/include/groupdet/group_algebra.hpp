#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "groupdet/finite_group.hpp"
#include "groupdet/multipoly.hpp"
#include "groupdet/square_matrix.hpp"

namespace groupdet {

/// An element sum_g A_g g of RG with R = Q(zeta)[x_g, X].
///
/// Coefficients are stored densely by element index; an absent coefficient is
/// the zero polynomial. Elements of RH are ordinary elements whose support
/// lies in H (see supported_on / restrict).
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(GroupPtr group);  // zero
    AlgebraElement(GroupPtr group, Element g, MultiPoly coeff = MultiPoly(1));
    // c * e
    static AlgebraElement scalar(GroupPtr group, MultiPoly c);

    const GroupPtr& group() const { return group_; }
    const MultiPoly& coeff(Element g) const { return coeffs_[g]; }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
    void set_coeff(Element g, MultiPoly c) { coeffs_[g] = std::move(c); }
    void add_to_coeff(Element g, const MultiPoly& c) { coeffs_[g] += c; }

    bool is_zero() const;
    std::vector<Element> support() const;
    // True when every coefficient is a constant (no x_g, no X).
    bool is_numeric() const;

    // Zero and identity of the same algebra.
    AlgebraElement zero() const { return AlgebraElement(group_); }
    AlgebraElement one() const { return AlgebraElement(group_, group_->identity()); }

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(const AlgebraElement& rhs) { return *this = *this * rhs; }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    // Convolution: (ab)_g = sum over uv = g of a_u b_v. Throws GroupMismatch.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const MultiPoly& c, AlgebraElement a);
    AlgebraElement operator-() const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

    // "(x_0^2 + x_1^2)*e + 2*x_0*x_1*r" in element-index order; "0" if zero.
    std::string to_string() const;
    std::string to_latex() const;

private:
    GroupPtr group_;
    std::vector<MultiPoly> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a);

// sum_g x_{offset+g} g; a nonzero offset gives a second independent generic element.
AlgebraElement generic_element(const GroupPtr& g, Var offset = 0);
inline AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }
inline AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

// Sum of coefficients: the R-algebra map RG -> R with g -> 1.
MultiPoly augmentation(const AlgebraElement& a);

// Commutes with every group element.
bool is_central(const AlgebraElement& a);
// Coefficients constant on conjugacy classes; agrees with is_central.
bool is_class_function(const AlgebraElement& a);

// g^-1 a g
AlgebraElement conjugate_by(const AlgebraElement& a, Element g);
bool supported_on(const AlgebraElement& a, const SubgroupHandle& h);
// Checked view of a as an element of RH; throws NotSupportedOnSubgroup.
AlgebraElement restrict_to(const AlgebraElement& a, const SubgroupHandle& h);

// Apply f to every coefficient.
template <class Fn>
AlgebraElement map_coefficients(const AlgebraElement& a, Fn&& f) {
    AlgebraElement out(a.group());
    for (Element g = 0; g < a.coeffs().size(); ++g) {
        if (!a.coeff(g).is_zero()) out.set_coeff(g, f(a.coeff(g)));
    }
    return out;
}

/// Square matrix over RG; every entry belongs to the same group algebra.
class AlgebraMatrix {
public:
    AlgebraMatrix() = default;
    AlgebraMatrix(GroupPtr group, std::size_t m);  // zero matrix
    AlgebraMatrix(GroupPtr group, SquareMatrix<AlgebraElement> entries);

    static AlgebraMatrix identity(GroupPtr group, std::size_t m);
    // diag(a, ..., a)
    static AlgebraMatrix scalar(const AlgebraElement& a, std::size_t m);

    const GroupPtr& group() const { return group_; }
    std::size_t size() const { return entries_.size(); }
    AlgebraElement& operator()(std::size_t i, std::size_t j) { return entries_(i, j); }
    const AlgebraElement& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const SquareMatrix<AlgebraElement>& entries() const { return entries_; }

    bool is_zero() const;
    bool is_numeric() const;
    bool supported_on(const SubgroupHandle& h) const;

    // Block (bi, bj) of size `block` (0-based block indices).
    AlgebraMatrix block(std::size_t bi, std::size_t bj, std::size_t block) const;
    void set_block(std::size_t bi, std::size_t bj, const AlgebraMatrix& b);

    AlgebraMatrix& operator+=(const AlgebraMatrix& rhs);
    AlgebraMatrix& operator-=(const AlgebraMatrix& rhs);
    friend AlgebraMatrix operator+(AlgebraMatrix a, const AlgebraMatrix& b) { return a += b; }
    friend AlgebraMatrix operator-(AlgebraMatrix a, const AlgebraMatrix& b) { return a -= b; }
    friend AlgebraMatrix operator*(const AlgebraMatrix& a, const AlgebraMatrix& b);
    // Entrywise left / right multiplication by an algebra element.
    friend AlgebraMatrix operator*(const AlgebraElement& a, const AlgebraMatrix& m);
    friend AlgebraMatrix operator*(const AlgebraMatrix& m, const AlgebraElement& a);
    friend bool operator==(const AlgebraMatrix& a, const AlgebraMatrix& b);

    std::string to_string() const;

private:
    GroupPtr group_;
    SquareMatrix<AlgebraElement> entries_;
};

inline AlgebraMatrix mat_add(const AlgebraMatrix& a, const AlgebraMatrix& b) { return a + b; }
inline AlgebraMatrix mat_mul(const AlgebraMatrix& a, const AlgebraMatrix& b) { return a * b; }
inline AlgebraMatrix identity_matrix(std::size_t m, const GroupPtr& g) { return AlgebraMatrix::identity(g, m); }

AlgebraMatrix conjugate_by(const AlgebraMatrix& a, Element g);
AlgebraMatrix matrix_power(const AlgebraMatrix& a, unsigned k);
// The scalar matrix over R (integers) tensored with an RG matrix.
AlgebraMatrix kronecker(const SquareMatrix<int>& scalar, const AlgebraMatrix& m);

}  // namespace groupdet
