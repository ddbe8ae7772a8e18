#include "groupdet/index2.hpp"

#include "groupdet/errors.hpp"
#include "groupdet/noncomm_det.hpp"

namespace groupdet {

namespace {

Element greedy_t(const SubgroupHandle& h) {
    const Transversal t = left_transversal(h.parent(), h);
    if (t.size() != 2) throw NotIndexTwo("the subgroup has index " + std::to_string(t.size()) + ", not 2");
    return t[1];
}

}  // namespace

Index2Context::Index2Context(const SubgroupHandle& h) : Index2Context(h, greedy_t(h)) {}

Index2Context::Index2Context(const SubgroupHandle& h, Element t) : h_(h), t_(t) {
    const FiniteGroup& g = h.group();
    if (h.order() * 2 != g.order()) throw NotIndexTwo("the subgroup does not have index 2");
    if (!is_abelian(h)) throw NotAbelian("the index-two subgroup must be abelian");
    if (h.contains(t)) throw InvalidTransversal("t must lie outside the subgroup");
}

RegularRepContext Index2Context::rep_context(std::size_t m) const {
    return RegularRepContext(Transversal::make(whole_group(group()), h_, {group()->identity(), t_}), m);
}

Decomposition decompose(const Index2Context& ctx, const AlgebraElement& a) {
    const FiniteGroup& g = *ctx.group();
    const Element t_inv = g.inverse(ctx.t());
    Decomposition d{AlgebraElement(ctx.group()), AlgebraElement(ctx.group())};
    for (Element x : a.support()) {
        if (ctx.subgroup().contains(x)) {
            d.alpha.set_coeff(x, a.coeff(x));
        } else {
            d.beta.set_coeff(g.mul(t_inv, x), a.coeff(x));
        }
    }
    return d;
}

AlgebraElement conjugate(const Index2Context& ctx, const AlgebraElement& a) {
    const Decomposition d = decompose(ctx, a);
    const AlgebraElement t(ctx.group(), ctx.t());
    return conjugate_by(d.alpha, ctx.t()) - t * d.beta;
}

ConjugationLawsReport conjugation_laws_check(const Index2Context& ctx, const AlgebraElement& a,
                                             const AlgebraElement& b) {
    ConjugationLawsReport r;
    const AlgebraElement a_bar = conjugate(ctx, a);
    const AlgebraElement b_bar = conjugate(ctx, b);
    r.involution = conjugate(ctx, a_bar) == a;
    r.sum_central = is_central(a + a_bar);
    const AlgebraElement norm = a * a_bar;
    r.norm_commutes = norm == a_bar * a;
    r.norm_central = is_central(norm);
    r.antihomomorphism = conjugate(ctx, a * b) == b_bar * a_bar;

    const bool central = is_central(a);
    const bool fixed = a == a_bar;
    r.central_implies_fixed = !central || fixed;
    r.fixed_implies_central = !fixed || central;
    r.fixed_iff_central_in_subgroup = fixed == (central && supported_on(a, ctx.subgroup()));

    const AlgebraElement x = AlgebraElement::scalar(ctx.group(), MultiPoly::variable(kVarX));
    const AlgebraElement product = (x - a) * (x - a_bar);
    const CharPoly phi = char_poly(ctx.rep_context(1), AlgebraMatrix::scalar(a, 1));
    AlgebraElement phi_poly(ctx.group());
    for (std::size_t i = 0; i < phi.coefficients.size(); ++i) {
        phi_poly += MultiPoly(Monomial::variable(kVarX, static_cast<std::uint32_t>(i)), Cyclotomic(1)) * phi.coefficients[i];
    }
    r.char_poly_product = product == phi_poly;
    const AlgebraElement constant = map_coefficients(product, [](const MultiPoly& p) { return p.coefficient_of(kVarX, 0); });
    r.norm_identity = norm == constant && norm == phi.coefficients[0];
    return r;
}

std::optional<AlgebraElement> fixed_point_counterexample(const Index2Context& ctx) {
    for (const auto& cls : conjugacy_classes(ctx.group())) {
        if (ctx.subgroup().contains(cls.front())) continue;
        AlgebraElement sum(ctx.group());
        for (Element g : cls) sum.set_coeff(g, MultiPoly(1));
        if (is_central(sum) && !(conjugate(ctx, sum) == sum)) return sum;
    }
    return std::nullopt;
}

Inverse2x2 inverse_2x2(const Index2Context& ctx, const AlgebraMatrix& m) {
    if (m.size() != 2) throw SizeMismatch("inverse_2x2 needs a 2x2 matrix");
    if (m.group() != ctx.group()) throw GroupMismatch("matrix over a different group algebra");
    if (!m.is_numeric()) throw SymbolicCoefficientsUnsupported("inverse_2x2 needs numeric coefficients");
    const AlgebraElement& a = m(0, 0);
    const AlgebraElement& b = m(0, 1);
    const AlgebraElement& c = m(1, 0);
    const AlgebraElement& d = m(1, 1);
    const AlgebraElement a_bar = conjugate(ctx, a), b_bar = conjugate(ctx, b);
    const AlgebraElement c_bar = conjugate(ctx, c), d_bar = conjugate(ctx, d);

    Inverse2x2 out;
    out.multiplier = AlgebraMatrix(ctx.group(), 2);
    out.multiplier(0, 0) = d_bar;
    out.multiplier(0, 1) = b_bar;
    out.multiplier(1, 0) = c_bar;
    out.multiplier(1, 1) = a_bar;
    out.product = m * out.multiplier;

    out.alpha = a * d_bar + b * c_bar;
    out.beta = a * b_bar + b * a_bar;
    out.gamma = c * d_bar + d * c_bar;
    out.alpha_bar = d * a_bar + c * b_bar;

    AlgebraMatrix printed = out.multiplier;
    printed(1, 1) = d_bar;
    const AlgebraMatrix printed_product = m * printed;
    out.printed_multiplier_reproduces_entries = printed_product(0, 0) == out.alpha && printed_product(0, 1) == out.beta &&
                                                printed_product(1, 0) == out.gamma &&
                                                printed_product(1, 1) == out.alpha_bar;

    out.norm = out.alpha * out.alpha_bar - out.beta * out.gamma;
    const RegularRepContext rep = ctx.rep_context(1);
    const AlgebraMatrix norm_matrix = AlgebraMatrix::scalar(out.norm, 1);
    if (!is_invertible(rep, norm_matrix)) {
        throw SingularMatrix("alpha conj(alpha) - beta gamma = " + out.norm.to_string() + " is not invertible");
    }
    const AlgebraElement norm_inv = invert_numeric(rep, norm_matrix)(0, 0);

    AlgebraMatrix adj(ctx.group(), 2);
    adj(0, 0) = out.alpha_bar;
    adj(0, 1) = -out.beta;
    adj(1, 0) = -out.gamma;
    adj(1, 1) = out.alpha;
    out.inverse = out.multiplier * norm_inv * adj;
    return out;
}

}  // namespace groupdet
