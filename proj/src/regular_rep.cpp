#include "groupdet/regular_rep.hpp"

#include "groupdet/errors.hpp"

namespace groupdet {

namespace {

void require_shape(const RegularRepContext& ctx, const AlgebraMatrix& a, std::size_t size) {
    if (a.group() != ctx.group()) throw GroupMismatch("matrix is over a different group algebra");
    if (a.size() != size) {
        throw SizeMismatch("expected a " + std::to_string(size) + "x" + std::to_string(size) + " matrix, got " +
                           std::to_string(a.size()));
    }
}

void require_normal_abelian_quotient(const RegularRepContext& ctx) {
    if (!is_normal(ctx.ambient(), ctx.subgroup())) throw NotNormal("the subgroup is not normal");
    const QuotientGroup q = quotient_group(ctx.ambient(), ctx.subgroup());
    if (!is_abelian(q.group)) throw QuotientNotAbelian("the quotient group is not abelian");
}

}  // namespace

RegularRepContext::RegularRepContext(const SubgroupHandle& h, std::size_t m)
    : RegularRepContext(left_transversal(h.parent(), h), m) {}

RegularRepContext::RegularRepContext(Transversal t, std::size_t m) : transversal_(std::move(t)), m_(m) {
    if (m_ == 0) throw SizeMismatch("block size must be positive");
}

AlgebraMatrix lift(const RegularRepContext& ctx, const AlgebraMatrix& a) {
    require_shape(ctx, a, ctx.block_size());
    if (!a.supported_on(ctx.ambient())) throw NotSupportedOnSubgroup("matrix entries leave the ambient subgroup");
    const FiniteGroup& g = *ctx.group();
    const SubgroupHandle& h = ctx.subgroup();
    const Transversal& t = ctx.transversal();
    const std::size_t m = ctx.block_size();
    AlgebraMatrix out(ctx.group(), ctx.lifted_size());
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
            const AlgebraElement& entry = a(k, l);
            for (Element x : entry.support()) {
                for (std::size_t j = 0; j < t.size(); ++j) {
                    const Element xt = g.mul(x, t[j]);
                    const std::size_t i = t.coset_of(xt);
                    const Element y = g.mul(g.inverse(t[i]), xt);
                    out(i * m + k, j * m + l).add_to_coeff(y, entry.coeff(x));
                }
            }
        }
    }
    if (!out.supported_on(h)) throw InvalidTransversal("lifted entries leave the subgroup");
    return out;
}

std::vector<AlgebraMatrix> coset_decompose(const RegularRepContext& ctx, const AlgebraMatrix& a) {
    require_shape(ctx, a, ctx.block_size());
    const FiniteGroup& g = *ctx.group();
    const Transversal& t = ctx.transversal();
    const std::size_t m = ctx.block_size();
    std::vector<AlgebraMatrix> parts(t.size(), AlgebraMatrix(ctx.group(), m));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
            for (Element x : a(k, l).support()) {
                if (!ctx.ambient().contains(x)) throw NotSupportedOnSubgroup("entry leaves the ambient subgroup");
                const std::size_t i = t.coset_of(x);
                parts[i](k, l).add_to_coeff(g.mul(g.inverse(t[i]), x), a(k, l).coeff(x));
            }
        }
    }
    return parts;
}

AlgebraMatrix lift_by_coset_formula(const RegularRepContext& ctx, const AlgebraMatrix& a) {
    const FiniteGroup& g = *ctx.group();
    const Transversal& t = ctx.transversal();
    const std::vector<AlgebraMatrix> parts = coset_decompose(ctx, a);
    const std::size_t r = t.size();
    AlgebraMatrix out(ctx.group(), ctx.lifted_size());
    for (std::size_t i = 0; i < r; ++i) {
        const AlgebraElement left_inv(ctx.group(), g.inverse(t[i]));
        for (std::size_t j = 0; j < r; ++j) {
            const AlgebraElement right(ctx.group(), t[j]);
            AlgebraMatrix block(ctx.group(), ctx.block_size());
            for (std::size_t p = 0; p < r; ++p) {
                if (!ctx.subgroup().contains(g.mul(g.mul(g.inverse(t[i]), t[p]), t[j]))) continue;
                block += (left_inv * AlgebraElement(ctx.group(), t[p])) * parts[p] * right;
            }
            out.set_block(i, j, block);
        }
    }
    return out;
}

bool defining_identity_holds(const RegularRepContext& ctx, const AlgebraMatrix& a) {
    const AlgebraMatrix l = lift(ctx, a);
    const Transversal& t = ctx.transversal();
    const std::size_t m = ctx.block_size();
    for (std::size_t j = 0; j < t.size(); ++j) {
        const AlgebraMatrix lhs = a * AlgebraElement(ctx.group(), t[j]);
        AlgebraMatrix rhs(ctx.group(), m);
        for (std::size_t i = 0; i < t.size(); ++i) rhs += AlgebraElement(ctx.group(), t[i]) * l.block(i, j, m);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

AlgebraMatrix transversal_diagonal(const RegularRepContext& ctx, bool inverse) {
    const FiniteGroup& g = *ctx.group();
    const std::size_t m = ctx.block_size();
    AlgebraMatrix p(ctx.group(), ctx.lifted_size());
    for (std::size_t i = 0; i < ctx.index(); ++i) {
        const Element ti = ctx.transversal()[i];
        for (std::size_t k = 0; k < m; ++k) p(i * m + k, i * m + k) = AlgebraElement(ctx.group(), inverse ? g.inverse(ti) : ti);
    }
    return p;
}

SquareMatrix<int> quotient_regular_matrix(const RegularRepContext& ctx, Element t) {
    const QuotientGroup q = quotient_group(ctx.ambient(), ctx.subgroup());
    const Transversal& tr = ctx.transversal();
    const std::size_t r = tr.size();
    if (q.projection.at(t) == kNoElement) throw NotSupportedOnSubgroup("element outside the ambient subgroup");
    // Cosets are labelled by their position in ctx's transversal, which may
    // differ from the quotient group's own element order.
    std::vector<Element> label(r);
    for (std::size_t i = 0; i < r; ++i) label[i] = q.projection[tr[i]];
    const Element tc = q.projection[t];
    SquareMatrix<int> out(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
        const Element target = q.group->mul(tc, label[j]);
        for (std::size_t i = 0; i < r; ++i) {
            if (label[i] == target) out(i, j) = 1;
        }
    }
    return out;
}

AlgebraMatrix kronecker_form(const RegularRepContext& ctx, const AlgebraMatrix& a) {
    if (!is_normal(ctx.ambient(), ctx.subgroup())) throw NotNormal("the Kronecker form needs a normal subgroup");
    const std::vector<AlgebraMatrix> parts = coset_decompose(ctx, a);
    const Transversal& t = ctx.transversal();
    AlgebraMatrix sum(ctx.group(), ctx.lifted_size());
    for (std::size_t p = 0; p < t.size(); ++p) {
        sum += kronecker(quotient_regular_matrix(ctx, t[p]), AlgebraElement(ctx.group(), t[p]) * parts[p]);
    }
    return transversal_diagonal(ctx, true) * sum * transversal_diagonal(ctx, false);
}

Transversal composed_transversal(const Transversal& t, const Transversal& u) {
    if (!(u.ambient() == t.subgroup())) {
        throw NotASubgroupChain("the inner transversal must live in the outer transversal's subgroup");
    }
    const FiniteGroup& g = t.ambient().group();
    std::vector<Element> v;
    v.reserve(t.size() * u.size());
    for (std::size_t q = 0; q < u.size(); ++q) {
        for (std::size_t p = 0; p < t.size(); ++p) v.push_back(g.mul(t[p], u[q]));
    }
    return Transversal::make(t.ambient(), u.subgroup(), std::move(v));
}

bool compose_check(const Transversal& t, const Transversal& u, const AlgebraMatrix& a) {
    const Transversal v = composed_transversal(t, u);
    const RegularRepContext ct(t, a.size());
    const RegularRepContext cu(u, a.size() * t.size());
    const RegularRepContext cv(v, a.size());
    return lift(cu, lift(ct, a)) == lift(cv, a);
}

AlgebraMatrix j_matrix(const RegularRepContext& ctx, Element t) {
    require_normal_abelian_quotient(ctx);
    const AlgebraMatrix id = AlgebraMatrix::identity(ctx.group(), ctx.block_size());
    return transversal_diagonal(ctx, true) * kronecker(quotient_regular_matrix(ctx, t), id) *
           transversal_diagonal(ctx, false);
}

bool commutes_with_all_j(const RegularRepContext& ctx, const AlgebraMatrix& b) {
    require_shape(ctx, b, ctx.lifted_size());
    for (Element t : ctx.transversal().reps()) {
        const AlgebraMatrix j = j_matrix(ctx, t);
        if (!(j * b == b * j)) return false;
    }
    return true;
}

AlgebraMatrix recover_preimage(const RegularRepContext& ctx, const AlgebraMatrix& b) {
    require_shape(ctx, b, ctx.lifted_size());
    const FiniteGroup& g = *ctx.group();
    const Transversal& t = ctx.transversal();
    const std::size_t m = ctx.block_size();
    const AlgebraElement t1_inv(ctx.group(), g.inverse(t[0]));
    AlgebraMatrix a(ctx.group(), m);
    for (std::size_t p = 0; p < t.size(); ++p) {
        a += AlgebraElement(ctx.group(), t[p]) * b.block(p, 0, m) * t1_inv;
    }
    return a;
}

}  // namespace groupdet
