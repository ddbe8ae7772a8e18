#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "groupdet/cyclotomic.hpp"

namespace groupdet {

// Variable x_g carries the element index g; the characteristic-polynomial
// variable X uses a reserved index that sorts after every x_g.
using Var = std::uint32_t;
inline constexpr Var kVarX = 0x00FFFFFFu;

std::string variable_name(Var v);

class Monomial {
public:
    using Factor = std::pair<Var, std::uint32_t>;  // (variable, exponent > 0)

    Monomial() = default;
    static Monomial variable(Var v, std::uint32_t exponent = 1);

    unsigned degree() const { return degree_; }
    std::uint32_t exponent(Var v) const;
    std::span<const Factor> factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    Monomial operator*(const Monomial& rhs) const;
    // Drop the variable entirely.
    Monomial without(Var v) const;
    Monomial with_renamed(const std::function<Var(Var)>& rename) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const;

private:
    std::vector<Factor> factors_;  // sorted by variable
    unsigned degree_ = 0;
};

// Graded lexicographic order with x_0 > x_1 > ... > X.
bool graded_lex_less(const Monomial& a, const Monomial& b);

struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex_less(b, a); }
};

/// Sparse multivariate polynomial with cyclotomic coefficients.
///
/// Terms are kept in a map ordered by descending graded-lex order and never
/// hold a zero coefficient, so two polynomials are equal exactly when their
/// term maps are equal.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Cyclotomic, GradedLexGreater>;

    MultiPoly() = default;
    MultiPoly(long c);  // NOLINT(google-explicit-constructor)
    MultiPoly(const Cyclotomic& c);  // NOLINT(google-explicit-constructor)
    MultiPoly(const Monomial& m, const Cyclotomic& c);

    static MultiPoly variable(Var v) { return MultiPoly(Monomial::variable(v), Cyclotomic(1)); }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero if absent).
    Cyclotomic constant_term() const;
    Cyclotomic coefficient(const Monomial& m) const;

    // Throws ZeroPolynomial for the zero polynomial.
    unsigned total_degree() const;
    bool is_homogeneous(unsigned d) const;
    unsigned degree_in(Var v) const;

    // Coefficient of v^power, as a polynomial in the remaining variables.
    MultiPoly coefficient_of(Var v, unsigned power) const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Cyclotomic& rhs);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Cyclotomic& c) { return a *= c; }
    friend MultiPoly operator*(const Cyclotomic& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    // Adds c*m to this polynomial.
    void add_term(const Monomial& m, const Cyclotomic& c);

    MultiPoly with_renamed(const std::function<Var(Var)>& rename) const;

    // "x_0^2 - 3*x_0*x_1 + (1 + z4)*X"; "0" for the zero polynomial.
    std::string to_string() const;
    std::string to_latex() const;

private:
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

inline MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
inline MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
inline MultiPoly poly_scale(const MultiPoly& a, const Cyclotomic& c) { return a * c; }

// Full substitution; every variable of p must be assigned.
Cyclotomic poly_eval(const MultiPoly& p, const std::map<Var, Cyclotomic>& assignment);
// Partial substitution; unassigned variables stay symbolic.
MultiPoly poly_substitute(const MultiPoly& p, const std::map<Var, Cyclotomic>& assignment);

inline unsigned total_degree(const MultiPoly& p) { return p.total_degree(); }
inline bool is_homogeneous(const MultiPoly& p, unsigned d) { return p.is_homogeneous(d); }

}  // namespace groupdet
