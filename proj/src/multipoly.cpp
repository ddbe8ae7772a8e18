#include "groupdet/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "groupdet/errors.hpp"

namespace groupdet {

std::string variable_name(Var v) {
    if (v == kVarX) return "X";
    return "x_" + std::to_string(v);
}

Monomial Monomial::variable(Var v, std::uint32_t exponent) {
    Monomial m;
    if (exponent == 0) return m;
    m.factors_.emplace_back(v, exponent);
    m.degree_ = exponent;
    return m;
}

std::uint32_t Monomial::exponent(Var v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, Var key) { return f.first < key; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + rhs.factors_.size());
    auto a = factors_.begin();
    auto b = rhs.factors_.begin();
    while (a != factors_.end() || b != rhs.factors_.end()) {
        if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.degree_ = degree_ + rhs.degree_;
    return out;
}

Monomial Monomial::without(Var v) const {
    Monomial out;
    for (const auto& f : factors_) {
        if (f.first == v) continue;
        out.factors_.push_back(f);
        out.degree_ += f.second;
    }
    return out;
}

Monomial Monomial::with_renamed(const std::function<Var(Var)>& rename) const {
    Monomial out;
    for (const auto& [v, e] : factors_) out = out * Monomial::variable(rename(v), e);
    return out;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += "*";
        s += variable_name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    auto fa = a.factors();
    auto fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first) {
            // The monomial holding the smaller variable index is larger.
            return fa[i].first > fb[i].first;
        }
        if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
    }
    // Equal degrees force both to be exhausted together once all prefixes agree.
    return fa.size() < fb.size();
}

MultiPoly::MultiPoly(long c) {
    if (c != 0) terms_.emplace(Monomial(), Cyclotomic(c));
}

MultiPoly::MultiPoly(const Cyclotomic& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

MultiPoly::MultiPoly(const Monomial& m, const Cyclotomic& c) {
    if (!c.is_zero()) terms_.emplace(m, c);
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Cyclotomic MultiPoly::constant_term() const { return coefficient(Monomial()); }

Cyclotomic MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyclotomic() : it->second;
}

unsigned MultiPoly::total_degree() const {
    if (terms_.empty()) throw ZeroPolynomial("total_degree of the zero polynomial");
    // Descending graded order: the first term has maximal degree.
    return terms_.begin()->first.degree();
}

bool MultiPoly::is_homogeneous(unsigned d) const {
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

unsigned MultiPoly::degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m.exponent(v));
    return d;
}

MultiPoly MultiPoly::coefficient_of(Var v, unsigned power) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.exponent(v) == power) out.add_term(m.without(v), c);
    }
    return out;
}

void MultiPoly::add_term(const Monomial& m, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Cyclotomic& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= rhs;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly MultiPoly::with_renamed(const std::function<Var(Var)>& rename) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.add_term(m.with_renamed(rename), c);
    return out;
}

namespace {

template <class CoeffFmt, class MonoFmt>
std::string render(const MultiPoly::TermMap& terms, CoeffFmt coeff_fmt, MonoFmt mono_fmt, const char* times) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        // Single-term coefficients such as -3 or -z4 carry their sign outside.
        const bool negative = c.to_string(true).front() == '-';
        const Cyclotomic mag = negative ? -c : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << coeff_fmt(mag);
        } else {
            if (!mag.is_one()) os << coeff_fmt(mag) << times;
            os << mono_fmt(m);
        }
    }
    return os.str();
}

}  // namespace

std::string MultiPoly::to_string() const {
    return render(
        terms_, [](const Cyclotomic& c) { return c.to_string(true); },
        [](const Monomial& m) { return m.to_string(); }, "*");
}

std::string MultiPoly::to_latex() const {
    auto coeff = [](const Cyclotomic& c) {
        std::string s = c.to_string(true);
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 'z') {
                std::size_t j = i + 1;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                out += "\\zeta_{" + s.substr(i + 1, j - i - 1) + "}";
                i = j - 1;
            } else if (s[i] == '*') {
                out += " ";
            } else {
                out += s[i];
            }
        }
        return out;
    };
    auto mono = [](const Monomial& m) {
        std::string s;
        for (const auto& [v, e] : m.factors()) {
            s += v == kVarX ? std::string("X") : "x_{" + std::to_string(v) + "}";
            if (e > 1) s += "^{" + std::to_string(e) + "}";
        }
        return s;
    };
    return render(terms_, coeff, mono, " ");
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

namespace {

Cyclotomic power(const Cyclotomic& base, std::uint32_t e) {
    Cyclotomic out(1);
    for (std::uint32_t i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

Cyclotomic poly_eval(const MultiPoly& p, const std::map<Var, Cyclotomic>& assignment) {
    Cyclotomic total;
    for (const auto& [m, c] : p.terms()) {
        Cyclotomic term = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) throw Error("poly_eval: no value for " + variable_name(v));
            term *= power(it->second, e);
        }
        total += term;
    }
    return total;
}

MultiPoly poly_substitute(const MultiPoly& p, const std::map<Var, Cyclotomic>& assignment) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        Cyclotomic coeff = c;
        Monomial rest;
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                rest = rest * Monomial::variable(v, e);
            } else {
                coeff *= power(it->second, e);
            }
        }
        out.add_term(rest, coeff);
    }
    return out;
}

}  // namespace groupdet
