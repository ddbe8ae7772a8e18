#include "groupdet/factorization.hpp"

#include <algorithm>
#include <set>

#include "groupdet/errors.hpp"
#include "groupdet/parallel.hpp"

namespace groupdet {

SquareMatrix<MultiPoly> group_matrix(const FiniteGroup& g) {
    const std::size_t n = g.order();
    SquareMatrix<MultiPoly> m(n, MultiPoly());
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) m(a, b) = MultiPoly::variable(g.mul(a, g.inverse(b)));
    }
    return m;
}

MultiPoly group_determinant_via_trivial_subgroup(const GroupPtr& g, DetStrategy strategy) {
    const RegularRepContext ctx(trivial_subgroup(g), 1);
    const AlgebraMatrix alpha = AlgebraMatrix::scalar(generic_element(g), 1);
    return ncdet(ctx, alpha, strategy).coeff(g->identity());
}

MultiPoly group_determinant(const GroupPtr& g, const ThetaOptions& options) {
    const std::size_t n = g->order();
    if (n > options.order_cap) {
        throw OrderCapExceeded("group order " + std::to_string(n) + " exceeds the cap of " +
                               std::to_string(options.order_cap));
    }
    if (n > options.direct_cap) return group_determinant_via_trivial_subgroup(g, DetStrategy::minor_expansion);
    const SquareMatrix<MultiPoly> m = group_matrix(*g);
    switch (options.strategy) {
        case DetStrategy::leibniz:
            if (n > kLeibnizCap) throw OrderCapExceeded("the Leibniz strategy is limited to order 8");
            return determinant_leibniz(m, MultiPoly(), MultiPoly(1));
        case DetStrategy::cross_check: {
            const MultiPoly minor = determinant_minor_expansion(m, MultiPoly(), MultiPoly(1));
            const MultiPoly other = n <= kLeibnizCap ? determinant_leibniz(m, MultiPoly(), MultiPoly(1))
                                                     : group_determinant_via_trivial_subgroup(g);
            if (!(minor == other)) throw StrategyMismatch("group determinant routes disagree: " + first_mismatch(minor, other));
            return minor;
        }
        default:
            return determinant_minor_expansion(m, MultiPoly(), MultiPoly(1));
    }
}

AlgebraElement theta_relative(const Transversal& t, DetStrategy strategy) {
    const RegularRepContext ctx(t, 1);
    const GroupPtr& g = ctx.group();
    if (!(t.ambient() == whole_group(g))) throw NotASubgroupChain("Theta(G:H) needs a transversal of H in G");
    return ncdet(ctx, AlgebraMatrix::scalar(generic_element(g), 1), strategy);
}

AlgebraElement theta_relative(const SubgroupHandle& h, DetStrategy strategy) {
    return theta_relative(left_transversal(h.parent(), h), strategy);
}

FactorizationResult dedekind_factorization(const Transversal& t, const ThetaOptions& options) {
    const SubgroupHandle& h = t.subgroup();
    if (!is_abelian(h)) throw NotAbelian("the factorization needs an abelian subgroup");
    FactorizationResult r;
    r.group = h.parent();
    r.subgroup = h;
    r.transversal = t;
    const AlgebraElement rel = theta_relative(t, options.relative_strategy);
    for (Element x : h.elements()) r.coefficients[x] = rel.coeff(x);
    r.characters = characters(h);
    r.factors_algebra = parallel_map(r.characters.size(), [&](std::size_t k) {
        AlgebraElement f(r.group);
        for (Element x : h.elements()) f.set_coeff(x, rel.coeff(x) * r.characters[k].value(x));
        return f;
    });
    for (const AlgebraElement& f : r.factors_algebra) r.factors_scalar.push_back(augmentation(f));
    r.theta = group_determinant(r.group, options);
    return r;
}

FactorizationResult dedekind_factorization(const SubgroupHandle& h, const ThetaOptions& options) {
    return dedekind_factorization(left_transversal(h.parent(), h), options);
}

std::string first_mismatch(const MultiPoly& lhs, const MultiPoly& rhs) {
    auto describe = [](const Monomial& m, const Cyclotomic& a, const Cyclotomic& b) {
        return "monomial " + m.to_string() + ": " + a.to_string() + " vs " + b.to_string();
    };
    // Walk both term maps in order and report the first monomial that differs.
    auto i = lhs.terms().begin();
    auto j = rhs.terms().begin();
    const GradedLexGreater before;
    while (i != lhs.terms().end() || j != rhs.terms().end()) {
        if (j == rhs.terms().end() || (i != lhs.terms().end() && before(i->first, j->first))) {
            return describe(i->first, i->second, Cyclotomic(0));
        }
        if (i == lhs.terms().end() || before(j->first, i->first)) return describe(j->first, Cyclotomic(0), j->second);
        if (!(i->second == j->second)) return describe(i->first, i->second, j->second);
        ++i;
        ++j;
    }
    return {};
}

std::string first_mismatch(const AlgebraElement& lhs, const AlgebraElement& rhs) {
    if (lhs.group() != rhs.group()) return "elements of different group algebras";
    for (Element g = 0; g < lhs.coeffs().size(); ++g) {
        const std::string m = first_mismatch(lhs.coeff(g), rhs.coeff(g));
        if (!m.empty()) return "element " + lhs.group()->name(g) + ", " + m;
    }
    return {};
}

FactorizationReport verify_factorization(const FactorizationResult& r) {
    FactorizationReport report;
    const GroupPtr& g = r.group;
    const std::size_t index = g->order() / r.subgroup.order();

    AlgebraElement prod(g, g->identity());
    for (const AlgebraElement& f : r.factors_algebra) prod *= f;
    const AlgebraElement expected = AlgebraElement::scalar(g, r.theta);
    report.algebra_product = prod == expected;
    if (!report.algebra_product) report.mismatches.push_back("algebra product: " + first_mismatch(prod, expected));

    MultiPoly scalar(1);
    for (const MultiPoly& f : r.factors_scalar) scalar *= f;
    report.scalar_product = scalar == r.theta;
    if (!report.scalar_product) report.mismatches.push_back("scalar product: " + first_mismatch(scalar, r.theta));

    report.homogeneous = true;
    for (const auto& [x, a] : r.coefficients) {
        if (!a.is_homogeneous(static_cast<unsigned>(index))) {
            report.homogeneous = false;
            report.mismatches.push_back("a_" + g->name(x) + " is not homogeneous of degree " + std::to_string(index));
            break;
        }
    }

    if (is_normal(g, r.subgroup)) {
        bool invariant = true;
        for (const auto& [x, a] : r.coefficients) {
            for (Element y = 0; y < g->order() && invariant; ++y) {
                const Element c = g->conjugate(x, y);
                if (!(r.coefficients.at(c) == a)) {
                    invariant = false;
                    report.mismatches.push_back("a_" + g->name(x) + " vs a_" + g->name(c) + ": " +
                                                first_mismatch(a, r.coefficients.at(c)));
                }
            }
            if (!invariant) break;
        }
        report.conjugacy_invariant = invariant;
    }

    const MultiPoly other = group_determinant_via_trivial_subgroup(g);
    report.theta_routes_agree = other == r.theta;
    if (!report.theta_routes_agree) report.mismatches.push_back("theta routes: " + first_mismatch(r.theta, other));
    return report;
}

AlgebraElement numeric_element(const GroupPtr& g, const std::vector<Cyclotomic>& assignment) {
    if (assignment.size() != g->order()) throw SizeMismatch("one value per group element is required");
    AlgebraElement a(g);
    for (Element x = 0; x < g->order(); ++x) {
        if (!assignment[x].is_zero()) a.set_coeff(x, MultiPoly(assignment[x]));
    }
    return a;
}

InvertibilityResult invertibility_criterion(const GroupPtr& g, const std::vector<Cyclotomic>& assignment,
                                            const SubgroupHandle& h, const MultiPoly& theta) {
    if (assignment.size() != g->order()) throw SizeMismatch("one value per group element is required");
    InvertibilityResult r;
    std::map<Var, Cyclotomic> values;
    for (Element x = 0; x < g->order(); ++x) values[x] = assignment.at(x);
    r.theta_value = poly_eval(theta, values);
    r.theta_nonzero = !r.theta_value.is_zero();
    const AlgebraElement alpha = numeric_element(g, assignment);
    const RegularRepContext ctx(h, 1);
    try {
        const AlgebraMatrix inv = invert_numeric(ctx, AlgebraMatrix::scalar(alpha, 1));
        r.inversion_succeeded = true;
        const AlgebraElement& beta = inv(0, 0);
        r.inverse_verified = alpha * beta == alpha.one() && beta * alpha == alpha.one();
    } catch (const SingularElement&) {
        r.inversion_succeeded = false;
    }
    return r;
}

InvertibilityResult invertibility_criterion(const GroupPtr& g, const std::vector<Cyclotomic>& assignment) {
    return invertibility_criterion(g, assignment, trivial_subgroup(g), group_determinant(g));
}

std::vector<SubgroupHandle> abelian_subgroups(const GroupPtr& g) {
    const std::size_t n = g->order();
    if (n > kAbelianSearchCap) {
        throw OrderCapExceeded("abelian subgroup enumeration is limited to order " + std::to_string(kAbelianSearchCap));
    }
    // Grow each abelian subgroup by one commuting element at a time.
    std::set<std::vector<Element>> seen;
    std::vector<SubgroupHandle> out{trivial_subgroup(g)};
    seen.insert(out.front().elements());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const SubgroupHandle h = out[i];
        for (Element x = 0; x < n; ++x) {
            if (h.contains(x)) continue;
            const auto& el = h.elements();
            const bool commutes = std::all_of(el.begin(), el.end(), [&](Element y) { return g->mul(x, y) == g->mul(y, x); });
            if (!commutes) continue;
            std::vector<Element> gens = el;
            gens.push_back(x);
            SubgroupHandle next = subgroup_generated(g, gens);
            if (seen.insert(next.elements()).second) out.push_back(std::move(next));
        }
    }
    std::sort(out.begin(), out.end(), [](const SubgroupHandle& a, const SubgroupHandle& b) {
        return a.order() != b.order() ? a.order() < b.order() : a.elements() < b.elements();
    });
    return out;
}

std::vector<unsigned> irrep_degree_fixture(const GroupPtr& g) {
    const std::size_t n = g->order();
    if (is_abelian(g)) return std::vector<unsigned>(n, 1);
    const std::string& label = g->label();
    if (label == "sym:3") return {1, 1, 2};
    if (label == "sym:4") return {1, 1, 2, 3, 3};
    if (label == "quaternion8") return {1, 1, 1, 1, 2};
    if (label.rfind("dihedral:", 0) == 0) {
        const unsigned k = static_cast<unsigned>(n / 2);
        std::vector<unsigned> d(k % 2 ? 2 : 4, 1);
        d.insert(d.end(), k % 2 ? (k - 1) / 2 : k / 2 - 1, 2);
        return d;
    }
    throw FixtureMissing("no irreducible degree data for '" + label + "'");
}

DegreeBoundReport degree_bound_report(const GroupPtr& g, const std::vector<unsigned>& degrees) {
    DegreeBoundReport r;
    r.degrees = degrees;
    r.max_degree = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    for (unsigned d : degrees) r.sum_of_squares += std::size_t{d} * d;
    const std::vector<SubgroupHandle> subs = abelian_subgroups(g);
    r.abelian_subgroup_count = subs.size();
    r.min_index = g->order();
    r.witness = trivial_subgroup(g);
    for (const SubgroupHandle& h : subs) {
        const std::size_t idx = g->order() / h.order();
        if (idx < r.min_index) {
            r.min_index = idx;
            r.witness = h;
        }
    }
    r.bound_holds = r.max_degree <= r.min_index;
    r.sum_matches_order = r.sum_of_squares == g->order();
    return r;
}

DegreeBoundReport degree_bound_report(const GroupPtr& g) { return degree_bound_report(g, irrep_degree_fixture(g)); }

}  // namespace groupdet
