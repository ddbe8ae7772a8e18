#include "groupdet/noncomm_det.hpp"

#include <sstream>

#include "groupdet/errors.hpp"
#include "groupdet/parallel.hpp"

namespace groupdet {

DetStrategy parse_det_strategy(std::string_view name) {
    if (name == "leibniz") return DetStrategy::leibniz;
    if (name == "minor" || name == "minor-expansion") return DetStrategy::minor_expansion;
    if (name == "dft" || name == "character-dft") return DetStrategy::character_dft;
    if (name == "cross-check") return DetStrategy::cross_check;
    throw Error("unknown determinant strategy '" + std::string(name) + "'");
}

std::string to_string(DetStrategy s) {
    switch (s) {
        case DetStrategy::leibniz: return "leibniz";
        case DetStrategy::minor_expansion: return "minor-expansion";
        case DetStrategy::character_dft: return "character-dft";
        case DetStrategy::cross_check: return "cross-check";
    }
    return "?";
}

MultiPoly evaluate_character(const AlgebraElement& a, const Character& chi) {
    MultiPoly out;
    for (Element g : a.support()) {
        if (!chi.domain().contains(g)) throw NotSupportedOnSubgroup("element is not supported on the character's domain");
        out += a.coeff(g) * chi.value(g);
    }
    return out;
}

AlgebraElement fourier_inverse(const SubgroupHandle& h, const std::vector<MultiPoly>& values) {
    const std::vector<Character> chars = characters(h);
    if (values.size() != chars.size()) throw SizeMismatch("one value per character is required");
    const FiniteGroup& g = h.group();
    const Cyclotomic scale = Cyclotomic(BigRational(1, static_cast<unsigned long>(h.order())));
    AlgebraElement out(h.parent());
    for (Element x : h.elements()) {
        MultiPoly c;
        for (std::size_t k = 0; k < chars.size(); ++k) {
            if (!values[k].is_zero()) c += values[k] * chars[k].value(g.inverse(x));
        }
        if (!c.is_zero()) out.set_coeff(x, c * scale);
    }
    return out;
}

namespace {

void require_commutative_view(const AlgebraMatrix& m, const SubgroupHandle& h) {
    if (m.group() != h.parent()) throw GroupMismatch("subgroup of a different group");
    if (!is_abelian(h)) throw NotAbelian("determinants need an abelian subgroup");
    if (!m.supported_on(h)) throw NotSupportedOnSubgroup("matrix entries are not supported on the subgroup");
}

AlgebraElement det_by_dft(const AlgebraMatrix& m, const SubgroupHandle& h) {
    const std::vector<Character> chars = characters(h);
    const std::vector<MultiPoly> values = parallel_map(chars.size(), [&](std::size_t k) {
        const SquareMatrix<MultiPoly> scalar =
            map_entries(m.entries(), [&](const AlgebraElement& e) { return evaluate_character(e, chars[k]); });
        return determinant_minor_expansion(scalar, MultiPoly(), MultiPoly(1));
    });
    return fourier_inverse(h, values);
}

}  // namespace

AlgebraElement det_commutative(const AlgebraMatrix& m, const SubgroupHandle& h, DetStrategy strategy) {
    require_commutative_view(m, h);
    const AlgebraElement zero(m.group());
    const AlgebraElement one(m.group(), m.group()->identity());
    if (m.size() == 0) return one;
    switch (strategy) {
        case DetStrategy::leibniz:
            if (m.size() > kLeibnizCap) {
                throw OrderCapExceeded("the Leibniz strategy is limited to " + std::to_string(kLeibnizCap) + "x" +
                                       std::to_string(kLeibnizCap) + " matrices");
            }
            return determinant_leibniz(m.entries(), zero, one);
        case DetStrategy::minor_expansion:
            return determinant_minor_expansion(m.entries(), zero, one);
        case DetStrategy::character_dft:
            return det_by_dft(m, h);
        case DetStrategy::cross_check: {
            const AlgebraElement dft = det_by_dft(m, h);
            const AlgebraElement minor = determinant_minor_expansion(m.entries(), zero, one);
            if (!(dft == minor)) {
                throw StrategyMismatch("character-dft and minor-expansion disagree: " + dft.to_string() + " vs " +
                                       minor.to_string());
            }
            if (m.size() <= kLeibnizCap) {
                const AlgebraElement leib = determinant_leibniz(m.entries(), zero, one);
                if (!(leib == dft)) {
                    throw StrategyMismatch("leibniz and character-dft disagree: " + leib.to_string() + " vs " +
                                           dft.to_string());
                }
            }
            return dft;
        }
    }
    throw Error("unknown determinant strategy");
}

AlgebraElement ncdet(const RegularRepContext& ctx, const AlgebraMatrix& a, DetStrategy strategy) {
    if (!is_abelian(ctx.subgroup())) throw NotAbelian("Det needs an abelian subgroup");
    return det_commutative(lift(ctx, a), ctx.subgroup(), strategy);
}

namespace {

std::vector<Cyclotomic> numeric_character_values(const AlgebraElement& a, const SubgroupHandle& h) {
    if (!a.is_numeric()) throw SymbolicCoefficientsUnsupported("inversion needs numeric coefficients");
    if (!supported_on(a, h)) throw NotSupportedOnSubgroup("element is not supported on the subgroup");
    std::vector<Cyclotomic> out;
    for (const Character& chi : characters(h)) out.push_back(evaluate_character(a, chi).constant_term());
    return out;
}

}  // namespace

bool is_unit_in_subgroup_algebra(const AlgebraElement& a, const SubgroupHandle& h) {
    for (const Cyclotomic& v : numeric_character_values(a, h)) {
        if (v.is_zero()) return false;
    }
    return true;
}

AlgebraElement invert_in_subgroup_algebra(const AlgebraElement& a, const SubgroupHandle& h) {
    if (!is_abelian(h)) throw NotAbelian("character inversion needs an abelian subgroup");
    std::vector<MultiPoly> inv;
    for (const Cyclotomic& v : numeric_character_values(a, h)) {
        if (v.is_zero()) throw SingularElement("a character value vanishes: " + a.to_string() + " is not a unit");
        inv.emplace_back(v.inverse());
    }
    return fourier_inverse(h, inv);
}

bool is_invertible(const RegularRepContext& ctx, const AlgebraMatrix& a) {
    if (!a.is_numeric()) throw SymbolicCoefficientsUnsupported("invertibility test needs numeric coefficients");
    return is_unit_in_subgroup_algebra(ncdet(ctx, a), ctx.subgroup());
}

AlgebraMatrix invert_numeric(const RegularRepContext& ctx, const AlgebraMatrix& a) {
    if (!a.is_numeric()) throw SymbolicCoefficientsUnsupported("invert_numeric needs numeric coefficients");
    const SubgroupHandle& h = ctx.subgroup();
    const AlgebraMatrix l = lift(ctx, a);
    const AlgebraElement det = det_commutative(l, h);
    const AlgebraElement det_inv = invert_in_subgroup_algebra(det, h);
    const std::size_t n = l.size();
    AlgebraMatrix inv(ctx.group(), n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            AlgebraElement cof = det_commutative(AlgebraMatrix(ctx.group(), minor_matrix(l.entries(), j, i)), h);
            if ((i + j) % 2) cof = -cof;
            inv(i, j) = det_inv * cof;
        }
    }
    return recover_preimage(ctx, inv);
}

bool CharPoly::is_monic() const {
    if (coefficients.empty()) return false;
    const AlgebraElement& lead = coefficients.back();
    return lead == lead.one();
}

std::string CharPoly::to_string() const {
    std::string out;
    for (std::size_t i = coefficients.size(); i-- > 0;) {
        if (coefficients[i].is_zero()) continue;
        std::string term = "(" + coefficients[i].to_string() + ")";
        if (i == 1) term += "*X";
        if (i > 1) term += "*X^" + std::to_string(i);
        out += (out.empty() ? "" : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

CharPoly char_poly(const RegularRepContext& ctx, const AlgebraMatrix& a, DetStrategy strategy) {
    if (!is_abelian(ctx.subgroup())) throw NotAbelian("characteristic polynomials need an abelian subgroup");
    const std::size_t n = ctx.lifted_size();
    const AlgebraElement x_e = AlgebraElement::scalar(ctx.group(), MultiPoly::variable(kVarX));
    const AlgebraMatrix shifted = AlgebraMatrix::scalar(x_e, n) - lift(ctx, a);
    const AlgebraElement d = det_commutative(shifted, ctx.subgroup(), strategy);
    CharPoly phi;
    for (std::size_t i = 0; i <= n; ++i) {
        phi.coefficients.push_back(
            map_coefficients(d, [&](const MultiPoly& p) { return p.coefficient_of(kVarX, static_cast<unsigned>(i)); }));
    }
    return phi;
}

AlgebraMatrix cayley_hamilton_residual(const CharPoly& phi, const AlgebraMatrix& a) {
    AlgebraMatrix residual(a.group(), a.size());
    AlgebraMatrix power = AlgebraMatrix::identity(a.group(), a.size());
    for (std::size_t i = 0; i < phi.coefficients.size(); ++i) {
        if (i > 0) power = power * a;
        if (!phi.coefficients[i].is_zero()) residual += phi.coefficients[i] * power;
    }
    return residual;
}

AlgebraMatrix cayley_hamilton_residual(const RegularRepContext& ctx, const AlgebraMatrix& a) {
    return cayley_hamilton_residual(char_poly(ctx, a), a);
}

bool char_poly_conjugation_check(const RegularRepContext& ctx, const AlgebraMatrix& a, Element g) {
    if (!is_normal(ctx.ambient(), ctx.subgroup())) throw NotNormal("conjugation invariance needs a normal subgroup");
    return char_poly(ctx, conjugate_by(a, g)) == char_poly(ctx, a);
}

CentralityReport coefficient_centrality_check(const RegularRepContext& ctx, const AlgebraMatrix& a) {
    if (!is_normal(ctx.ambient(), ctx.subgroup())) throw NotNormal("coefficient centrality needs a normal subgroup");
    const CharPoly phi = char_poly(ctx, a);
    CentralityReport report;
    for (std::size_t i = 0; i < phi.coefficients.size(); ++i) {
        const AlgebraElement& c = phi.coefficients[i];
        CoefficientReport r{i, is_central(c), supported_on(c, ctx.subgroup())};
        report.all_central = report.all_central && r.central && r.supported_on_subgroup;
        report.coefficients.push_back(r);
    }
    const std::size_t n = ctx.lifted_size();
    const AlgebraMatrix l = lift(ctx, a);
    AlgebraElement trace(ctx.group());
    for (std::size_t i = 0; i < n; ++i) trace += l(i, i);
    const AlgebraElement det = det_commutative(l, ctx.subgroup());
    const AlgebraElement signed_det = n % 2 ? -det : det;
    report.constant_term_matches_signed_det = phi.coefficients[0] == signed_det;
    report.trace_coefficient_matches_signed_trace = phi.coefficients[n - 1] == -trace;
    report.constant_term_matches_unsigned_det = phi.coefficients[0] == det;
    report.trace_coefficient_matches_unsigned_trace = phi.coefficients[n - 1] == trace;
    return report;
}

AlgebraMatrix character_twist(const Character& chi, const AlgebraMatrix& a) {
    if (!is_abelian(chi.domain())) throw NotAbelian("twisting needs an abelian group");
    if (a.group() != chi.domain().parent()) throw GroupMismatch("character of a different group");
    AlgebraMatrix out(a.group(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            for (Element g : a(i, j).support()) {
                if (!chi.domain().contains(g)) throw NotSupportedOnSubgroup("entry leaves the character's domain");
                out(i, j).set_coeff(g, a(i, j).coeff(g) * chi.value(g));
            }
        }
    }
    return out;
}

AlgebraElement coset_character_product(const RegularRepContext& ctx, const AlgebraMatrix& a) {
    if (!is_abelian(ctx.ambient())) throw NotAbelian("the coset character product needs an abelian group");
    const QuotientGroup q = quotient_group(ctx.ambient(), ctx.subgroup());
    AlgebraElement product(ctx.group(), ctx.group()->identity());
    for (const Character& chi : characters(whole_group(q.group))) {
        const Character lifted = pull_back(chi, q, ctx.ambient());
        product *= det_commutative(character_twist(lifted, a), ctx.ambient());
    }
    return product;
}

}  // namespace groupdet
