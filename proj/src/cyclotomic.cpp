#include "groupdet/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "groupdet/errors.hpp"

namespace groupdet {

std::string to_string(const BigRational& q) { return q.get_str(); }

namespace {

using RatPoly = std::vector<BigRational>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of num / den over Q; den must be nonzero after trim.
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) return {RatPoly{}, num};
    RatPoly quot(num.size() - dd, 0);
    const BigRational lead = den.back();
    for (std::size_t i = num.size(); i-- > dd;) {
        if (num[i] == 0) continue;
        BigRational c = num[i] / lead;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num.resize(dd);
    trim(num);
    trim(quot);
    return {quot, num};
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
    // a - q*b
    RatPoly out = a;
    if (!q.empty() && !b.empty()) {
        if (out.size() < q.size() + b.size() - 1) out.resize(q.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
        }
    }
    trim(out);
    return out;
}

// In-place reduction of an arbitrary-length coefficient vector modulo Phi_N.
void reduce_mod(std::vector<BigRational>& r, const IntPolynomial& phi) {
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = r.size(); i-- > d;) {
        if (r[i] == 0) continue;
        const BigRational c = r[i];
        for (std::size_t j = 0; j < d; ++j) {
            if (phi[j] != 0) r[i - d + j] -= c * BigRational(phi[j]);
        }
        r[i] = 0;
    }
    r.resize(d, 0);
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const IntPolynomial& cyclotomic_polynomial(unsigned n) {
    static std::mutex mutex;
    static std::map<unsigned, IntPolynomial> cache;
    if (n == 0) throw Error("cyclotomic_polynomial: conductor must be positive");
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPolynomial poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const IntPolynomial& div = cyclotomic_polynomial(d);
        const std::size_t dd = div.size() - 1;
        IntPolynomial quot(poly.size() - dd, 0);
        for (std::size_t i = poly.size(); i-- > dd;) {
            // div is monic
            const BigInteger c = poly[i];
            quot[i - dd] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
        }
        poly = std::move(quot);
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic() : coeffs_{BigRational(0)} {}

Cyclotomic::Cyclotomic(long value) : coeffs_{BigRational(value)} {}

Cyclotomic::Cyclotomic(BigRational value) : coeffs_{std::move(value)} {}

Cyclotomic::Cyclotomic(unsigned n, std::vector<BigRational> coeffs) : conductor_(n), coeffs_(std::move(coeffs)) {
    normalize();
}

Cyclotomic Cyclotomic::from_coefficients(unsigned n, std::vector<BigRational> coeffs) {
    if (n == 0) throw Error("Cyclotomic: conductor must be positive");
    if (coeffs.empty()) coeffs.emplace_back(0);
    reduce_mod(coeffs, cyclotomic_polynomial(n));
    return Cyclotomic(n, std::move(coeffs));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long k) {
    if (n == 0) throw Error("root_of_unity: conductor must be positive");
    const long nn = static_cast<long>(n);
    const auto e = static_cast<std::size_t>(((k % nn) + nn) % nn);
    std::vector<BigRational> coeffs(e + 1, 0);
    coeffs[e] = 1;
    return from_coefficients(n, std::move(coeffs));
}

void Cyclotomic::normalize() {
    if (conductor_ == 1) return;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return;
    }
    conductor_ = 1;
    coeffs_.resize(1);
}

bool Cyclotomic::is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }

bool Cyclotomic::is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }

Cyclotomic Cyclotomic::lifted_to(unsigned m) const {
    if (m % conductor_ != 0) throw Error("Cyclotomic::lifted_to: target is not a multiple of the conductor");
    if (m == conductor_) return *this;
    if (conductor_ == 1) {
        // Stored at conductor 1 regardless; callers only need a value in Q(zeta_m).
        return *this;
    }
    const std::size_t step = m / conductor_;
    std::vector<BigRational> big((coeffs_.size() - 1) * step + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) big[i * step] = coeffs_[i];
    reduce_mod(big, cyclotomic_polynomial(m));
    Cyclotomic out;
    out.conductor_ = m;
    out.coeffs_ = std::move(big);
    return out;
}

namespace {

// Bring both operands to a common conductor; returns it.
unsigned unify(Cyclotomic& a, Cyclotomic& b) {
    if (a.conductor() == b.conductor()) return a.conductor();
    if (a.is_rational()) return b.conductor();
    if (b.is_rational()) return a.conductor();
    const unsigned l = std::lcm(a.conductor(), b.conductor());
    a = a.lifted_to(l);
    b = b.lifted_to(l);
    return l;
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (rhs.is_rational()) {
        coeffs_[0] += rhs.coeffs_[0];
        normalize();
        return *this;
    }
    if (is_rational()) {
        Cyclotomic out = rhs;
        out.coeffs_[0] += coeffs_[0];
        return *this = std::move(out);
    }
    Cyclotomic other = rhs;
    const unsigned n = unify(*this, other);
    conductor_ = n;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    if (rhs.is_rational()) {
        if (rhs.coeffs_[0] == 0) return *this = Cyclotomic();
        for (auto& c : coeffs_) c *= rhs.coeffs_[0];
        return *this;
    }
    if (is_rational()) {
        const BigRational s = coeffs_[0];
        *this = rhs;
        if (s == 0) return *this = Cyclotomic();
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    Cyclotomic other = rhs;
    const unsigned n = unify(*this, other);
    std::vector<BigRational> prod(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            if (other.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    reduce_mod(prod, cyclotomic_polynomial(n));
    conductor_ = n;
    coeffs_ = std::move(prod);
    normalize();
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("Cyclotomic::inverse of zero");
    if (is_rational()) return Cyclotomic(BigRational(1) / coeffs_[0]);
    const IntPolynomial& phi = cyclotomic_polynomial(conductor_);
    RatPoly r0(phi.begin(), phi.end());
    RatPoly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    RatPoly s0;
    RatPoly s1{BigRational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_N is irreducible, so the gcd is a nonzero constant.
    const BigRational g = r0.front();
    for (auto& c : s0) c /= g;
    return from_coefficients(conductor_, std::move(s0));
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
    if (lhs.conductor_ == rhs.conductor_) return lhs.coeffs_ == rhs.coeffs_;
    // The power basis of Q(zeta_N) is a basis, so a rational value never has
    // non-constant terms.
    if (lhs.is_rational() || rhs.is_rational()) return false;
    Cyclotomic a = lhs;
    Cyclotomic b = rhs;
    unify(a, b);
    return a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::to_string(bool parenthesize) const {
    if (is_rational()) return coeffs_[0].get_str();
    std::ostringstream os;
    int terms = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigRational& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigRational mag = negative ? BigRational(-c) : c;
        if (terms == 0) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "z" << conductor_;
            if (i > 1) os << "^" << i;
        }
        ++terms;
    }
    if (parenthesize && terms > 1) return "(" + os.str() + ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

}  // namespace groupdet
