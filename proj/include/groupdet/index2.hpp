#pragma once

#include <optional>
#include <string>

#include "groupdet/group_algebra.hpp"
#include "groupdet/regular_rep.hpp"

namespace groupdet {

/// An abelian subgroup H of index two with transversal {e, t}.
class Index2Context {
public:
    // Uses the greedy transversal. Throws NotAbelian / NotIndexTwo.
    explicit Index2Context(const SubgroupHandle& h);
    Index2Context(const SubgroupHandle& h, Element t);

    const GroupPtr& group() const { return h_.parent(); }
    const SubgroupHandle& subgroup() const { return h_; }
    Element t() const { return t_; }
    // The 1x1 regular representation context for {e, t}.
    RegularRepContext rep_context(std::size_t m = 1) const;

private:
    SubgroupHandle h_;
    Element t_;
};

struct Decomposition {
    AlgebraElement alpha;
    AlgebraElement beta;
};

// A = alpha + t beta with alpha, beta supported on H.
Decomposition decompose(const Index2Context& ctx, const AlgebraElement& a);

// conj(A) = t^-1 alpha t - t beta.
AlgebraElement conjugate(const Index2Context& ctx, const AlgebraElement& a);

struct ConjugationLawsReport {
    bool involution = false;        // conj(conj(A)) = A
    bool sum_central = false;       // A + conj(A) central
    bool norm_commutes = false;     // A conj(A) = conj(A) A
    bool norm_central = false;      // A conj(A) central
    bool antihomomorphism = false;  // conj(AB) = conj(B) conj(A)
    // Fixed points against the centre, as stated: A central => A = conj(A), and
    // A = conj(A) => A central.
    bool central_implies_fixed = false;
    bool fixed_implies_central = false;
    // A = conj(A) iff A is central and supported on H.
    bool fixed_iff_central_in_subgroup = false;
    // (X - A)(X - conj(A)) equals Phi_A(X), and A conj(A) equals its constant term.
    bool char_poly_product = false;
    bool norm_identity = false;

    bool fixed_point_law() const { return central_implies_fixed && fixed_implies_central; }
    bool ok() const {
        return involution && sum_central && norm_commutes && norm_central && antihomomorphism && fixed_point_law() &&
               char_poly_product && norm_identity;
    }
};

ConjugationLawsReport conjugation_laws_check(const Index2Context& ctx, const AlgebraElement& a,
                                             const AlgebraElement& b);

// A central element that conj does not fix, if one exists: the sum of a
// conjugacy class lying outside H.
std::optional<AlgebraElement> fixed_point_counterexample(const Index2Context& ctx);

struct Inverse2x2 {
    AlgebraMatrix inverse;
    // The right multiplier [[conj D, conj B], [conj C, conj A]] and M times it.
    AlgebraMatrix multiplier;
    AlgebraMatrix product;
    AlgebraElement alpha, beta, gamma, alpha_bar;
    AlgebraElement norm;  // alpha conj(alpha) - beta gamma
    // M times the multiplier with conj(D) in the lower-right corner reproduces
    // the entries alpha, beta, gamma, conj(alpha).
    bool printed_multiplier_reproduces_entries = false;
};

// M^-1 = N (alpha conj(alpha) - beta gamma)^-1 [[conj(alpha), -beta], [-gamma, alpha]].
// Numeric entries only. Throws SingularMatrix.
Inverse2x2 inverse_2x2(const Index2Context& ctx, const AlgebraMatrix& m);

}  // namespace groupdet
