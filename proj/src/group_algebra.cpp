#include "groupdet/group_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "groupdet/errors.hpp"

namespace groupdet {

namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
    if (!a || a != b) throw GroupMismatch("operands belong to different group algebras");
}

}  // namespace

AlgebraElement::AlgebraElement(GroupPtr group) : group_(std::move(group)), coeffs_(group_->order()) {}

AlgebraElement::AlgebraElement(GroupPtr group, Element g, MultiPoly coeff) : AlgebraElement(std::move(group)) {
    coeffs_.at(g) = std::move(coeff);
}

AlgebraElement AlgebraElement::scalar(GroupPtr group, MultiPoly c) {
    const Element e = group->identity();
    return AlgebraElement(std::move(group), e, std::move(c));
}

bool AlgebraElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

std::vector<Element> AlgebraElement::support() const {
    std::vector<Element> out;
    for (Element g = 0; g < coeffs_.size(); ++g) {
        if (!coeffs_[g].is_zero()) out.push_back(g);
    }
    return out;
}

bool AlgebraElement::is_numeric() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MultiPoly& p) { return p.is_constant(); });
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    require_same_group(group_, rhs.group_);
    for (std::size_t g = 0; g < coeffs_.size(); ++g) {
        if (!rhs.coeffs_[g].is_zero()) coeffs_[g] += rhs.coeffs_[g];
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    require_same_group(group_, rhs.group_);
    for (std::size_t g = 0; g < coeffs_.size(); ++g) {
        if (!rhs.coeffs_[g].is_zero()) coeffs_[g] -= rhs.coeffs_[g];
    }
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_group(a.group_, b.group_);
    const FiniteGroup& g = *a.group_;
    AlgebraElement out(a.group_);
    const std::vector<Element> sb = b.support();
    for (Element u = 0; u < a.coeffs_.size(); ++u) {
        if (a.coeffs_[u].is_zero()) continue;
        for (Element v : sb) out.coeffs_[g.mul(u, v)] += a.coeffs_[u] * b.coeffs_[v];
    }
    return out;
}

AlgebraElement operator*(const MultiPoly& c, AlgebraElement a) {
    for (auto& p : a.coeffs_) {
        if (!p.is_zero()) p = c * p;
    }
    return a;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out = *this;
    for (auto& p : out.coeffs_) p = -p;
    return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
}

namespace {

template <class PolyFmt, class NameFmt>
std::string render_element(const AlgebraElement& a, PolyFmt poly_fmt, NameFmt name_fmt, const char* times) {
    std::string out;
    for (Element g : a.support()) {
        const MultiPoly& p = a.coeff(g);
        std::string term;
        bool negative = false;
        // Residue names such as "0" would read as integers, so keep the unit coefficient.
        const std::string& raw = a.group()->name(g);
        const bool numeric_name = !raw.empty() && std::isdigit(static_cast<unsigned char>(raw.front()));
        if (p == MultiPoly(1) && !numeric_name) {
            term = name_fmt(g);
        } else if (p == MultiPoly(-1) && !numeric_name) {
            negative = true;
            term = name_fmt(g);
        } else if (p.size() == 1) {
            std::string s = poly_fmt(p);
            if (s.front() == '-') {
                negative = true;
                s.erase(0, 1);
            }
            term = s + times + name_fmt(g);
        } else {
            term = "(" + poly_fmt(p) + ")" + times + name_fmt(g);
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string AlgebraElement::to_string() const {
    if (!group_) return "0";
    return render_element(
        *this, [](const MultiPoly& p) { return p.to_string(); },
        [this](Element g) { return group_->name(g); }, "*");
}

std::string AlgebraElement::to_latex() const {
    if (!group_) return "0";
    return render_element(
        *this, [](const MultiPoly& p) { return p.to_latex(); },
        [this](Element g) { return "\\mathrm{" + group_->name(g) + "}"; }, " ");
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a) { return os << a.to_string(); }

AlgebraElement generic_element(const GroupPtr& g, Var offset) {
    AlgebraElement out(g);
    for (Element x = 0; x < g->order(); ++x) out.set_coeff(x, MultiPoly::variable(offset + x));
    return out;
}

MultiPoly augmentation(const AlgebraElement& a) {
    MultiPoly out;
    for (const auto& p : a.coeffs()) out += p;
    return out;
}

bool is_central(const AlgebraElement& a) {
    for (Element g = 0; g < a.group()->order(); ++g) {
        const AlgebraElement basis(a.group(), g);
        if (!(a * basis == basis * a)) return false;
    }
    return true;
}

bool is_class_function(const AlgebraElement& a) {
    for (const auto& cls : conjugacy_classes(a.group())) {
        for (Element g : cls) {
            if (!(a.coeff(g) == a.coeff(cls.front()))) return false;
        }
    }
    return true;
}

AlgebraElement conjugate_by(const AlgebraElement& a, Element g) {
    const FiniteGroup& grp = *a.group();
    AlgebraElement out(a.group());
    for (Element u : a.support()) out.set_coeff(grp.conjugate(u, g), a.coeff(u));
    return out;
}

bool supported_on(const AlgebraElement& a, const SubgroupHandle& h) {
    if (a.group() != h.parent()) throw GroupMismatch("subgroup of a different group");
    const auto s = a.support();
    return std::all_of(s.begin(), s.end(), [&](Element g) { return h.contains(g); });
}

AlgebraElement restrict_to(const AlgebraElement& a, const SubgroupHandle& h) {
    if (!supported_on(a, h)) throw NotSupportedOnSubgroup("element is not supported on the subgroup");
    return a;
}

// --- matrices --------------------------------------------------------------------

AlgebraMatrix::AlgebraMatrix(GroupPtr group, std::size_t m)
    : group_(group), entries_(m, AlgebraElement(std::move(group))) {}

AlgebraMatrix::AlgebraMatrix(GroupPtr group, SquareMatrix<AlgebraElement> entries)
    : group_(std::move(group)), entries_(std::move(entries)) {
    for (const auto& e : entries_.data()) require_same_group(group_, e.group());
}

AlgebraMatrix AlgebraMatrix::identity(GroupPtr group, std::size_t m) {
    AlgebraMatrix out(group, m);
    for (std::size_t i = 0; i < m; ++i) out(i, i) = AlgebraElement(group, group->identity());
    return out;
}

AlgebraMatrix AlgebraMatrix::scalar(const AlgebraElement& a, std::size_t m) {
    AlgebraMatrix out(a.group(), m);
    for (std::size_t i = 0; i < m; ++i) out(i, i) = a;
    return out;
}

bool AlgebraMatrix::is_zero() const {
    return std::all_of(entries_.data().begin(), entries_.data().end(), [](const auto& e) { return e.is_zero(); });
}

bool AlgebraMatrix::is_numeric() const {
    return std::all_of(entries_.data().begin(), entries_.data().end(), [](const auto& e) { return e.is_numeric(); });
}

bool AlgebraMatrix::supported_on(const SubgroupHandle& h) const {
    return std::all_of(entries_.data().begin(), entries_.data().end(),
                       [&](const auto& e) { return groupdet::supported_on(e, h); });
}

AlgebraMatrix AlgebraMatrix::block(std::size_t bi, std::size_t bj, std::size_t block) const {
    AlgebraMatrix out(group_, block);
    for (std::size_t i = 0; i < block; ++i) {
        for (std::size_t j = 0; j < block; ++j) out(i, j) = (*this)(bi * block + i, bj * block + j);
    }
    return out;
}

void AlgebraMatrix::set_block(std::size_t bi, std::size_t bj, const AlgebraMatrix& b) {
    require_same_group(group_, b.group_);
    const std::size_t m = b.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) (*this)(bi * m + i, bj * m + j) = b(i, j);
    }
}

AlgebraMatrix& AlgebraMatrix::operator+=(const AlgebraMatrix& rhs) {
    require_same_group(group_, rhs.group_);
    if (size() != rhs.size()) throw SizeMismatch("matrix sum of different sizes");
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) (*this)(i, j) += rhs(i, j);
    }
    return *this;
}

AlgebraMatrix& AlgebraMatrix::operator-=(const AlgebraMatrix& rhs) {
    require_same_group(group_, rhs.group_);
    if (size() != rhs.size()) throw SizeMismatch("matrix difference of different sizes");
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) (*this)(i, j) -= rhs(i, j);
    }
    return *this;
}

AlgebraMatrix operator*(const AlgebraMatrix& a, const AlgebraMatrix& b) {
    require_same_group(a.group_, b.group_);
    if (a.size() != b.size()) throw SizeMismatch("matrix product of different sizes");
    const std::size_t n = a.size();
    AlgebraMatrix out(a.group_, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

AlgebraMatrix operator*(const AlgebraElement& a, const AlgebraMatrix& m) {
    require_same_group(a.group(), m.group_);
    AlgebraMatrix out = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = a * m(i, j);
    }
    return out;
}

AlgebraMatrix operator*(const AlgebraMatrix& m, const AlgebraElement& a) {
    require_same_group(a.group(), m.group_);
    AlgebraMatrix out = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j) * a;
    }
    return out;
}

bool operator==(const AlgebraMatrix& a, const AlgebraMatrix& b) {
    return a.group_ == b.group_ && a.entries_ == b.entries_;
}

std::string AlgebraMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < size(); ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

AlgebraMatrix conjugate_by(const AlgebraMatrix& a, Element g) {
    AlgebraMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = conjugate_by(a(i, j), g);
    }
    return out;
}

AlgebraMatrix matrix_power(const AlgebraMatrix& a, unsigned k) {
    AlgebraMatrix out = AlgebraMatrix::identity(a.group(), a.size());
    for (unsigned i = 0; i < k; ++i) out = out * a;
    return out;
}

AlgebraMatrix kronecker(const SquareMatrix<int>& scalar, const AlgebraMatrix& m) {
    const std::size_t r = scalar.size();
    const std::size_t b = m.size();
    AlgebraMatrix out(m.group(), r * b);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            const int s = scalar(i, j);
            if (s == 0) continue;
            for (std::size_t k = 0; k < b; ++k) {
                for (std::size_t l = 0; l < b; ++l) {
                    out(i * b + k, j * b + l) = MultiPoly(static_cast<long>(s)) * m(k, l);
                }
            }
        }
    }
    return out;
}

}  // namespace groupdet
