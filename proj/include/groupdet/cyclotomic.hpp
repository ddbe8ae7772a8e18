#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace groupdet {

using BigInteger = mpz_class;
using BigRational = mpq_class;

std::string to_string(const BigRational& q);

// Dense univariate polynomial, coefficient of x^i at index i.
using IntPolynomial = std::vector<BigInteger>;

// Phi_N, obtained by exactly dividing x^N - 1 by Phi_d for every proper divisor d.
// Results are cached process-wide; the cache is guarded and safe to call concurrently.
const IntPolynomial& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

/// An exact element of Q(zeta_N), stored as its residue modulo Phi_N in the
/// power basis 1, zeta, ..., zeta^(phi(N)-1).
///
/// Elements whose value is rational are always stored with conductor 1, so
/// rational constants never drag a larger conductor around. Binary operations
/// on different conductors lift both operands to the lcm conductor first.
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
    Cyclotomic(BigRational value);  // NOLINT(google-explicit-constructor)

    // zeta_N^k for any integer k (reduced mod N).
    static Cyclotomic root_of_unity(unsigned n, long k);

    // Build from power-basis coefficients; reduces modulo Phi_N.
    static Cyclotomic from_coefficients(unsigned n, std::vector<BigRational> coeffs);

    unsigned conductor() const { return conductor_; }
    std::span<const BigRational> coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return conductor_ == 1; }
    const BigRational& rational_part() const { return coeffs_.front(); }

    // Re-express in Q(zeta_M); M must be a multiple of the conductor.
    Cyclotomic lifted_to(unsigned m) const;

    // Throws DivisionByZero on zero.
    Cyclotomic inverse() const;

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);

    friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
    friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
    friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }
    friend Cyclotomic operator/(const Cyclotomic& lhs, const Cyclotomic& rhs) { return lhs * rhs.inverse(); }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);

    // "3/2", "z4", "(1 - 2*z3)"; the outer parentheses only appear when more
    // than one power-basis term is present and `parenthesize` is set.
    std::string to_string(bool parenthesize = false) const;

private:
    Cyclotomic(unsigned n, std::vector<BigRational> coeffs);
    void normalize();

    unsigned conductor_ = 1;
    std::vector<BigRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

inline Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
inline Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
inline Cyclotomic cyc_neg(const Cyclotomic& a) { return -a; }
inline Cyclotomic cyc_inv(const Cyclotomic& a) { return a.inverse(); }

}  // namespace groupdet
