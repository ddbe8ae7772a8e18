#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groupdet/noncomm_det.hpp"

namespace groupdet {

struct ThetaOptions {
    // Orders up to direct_cap expand the |G| x |G| matrix (x_{gh^-1}) directly.
    std::size_t direct_cap = 10;
    // Larger orders go through the {e}-subgroup view; beyond this, refuse.
    std::size_t order_cap = 12;
    DetStrategy strategy = DetStrategy::minor_expansion;
    // Strategy for Det of the generic element over H.
    DetStrategy relative_strategy = DetStrategy::character_dft;
};

// The |G| x |G| matrix with (g,h) entry x_{gh^-1}.
SquareMatrix<MultiPoly> group_matrix(const FiniteGroup& g);

// Theta(G) = det(x_{gh^-1}). Throws OrderCapExceeded.
MultiPoly group_determinant(const GroupPtr& g, const ThetaOptions& options = {});

// Theta(G) as the e-coefficient of Det(generic element) over the trivial subgroup.
MultiPoly group_determinant_via_trivial_subgroup(const GroupPtr& g, DetStrategy strategy = DetStrategy::minor_expansion);

// Theta(G:H) = Det(sum_g x_g g) for the 1x1 context of t. Throws NotAbelian.
AlgebraElement theta_relative(const Transversal& t, DetStrategy strategy = DetStrategy::character_dft);
AlgebraElement theta_relative(const SubgroupHandle& h, DetStrategy strategy = DetStrategy::character_dft);

struct FactorizationResult {
    GroupPtr group;
    SubgroupHandle subgroup;
    Transversal transversal;
    // a_h for every h in H, in element order.
    std::map<Element, MultiPoly> coefficients;
    std::vector<Character> characters;
    // sum_h chi(h) a_h h, one per character in the order of `characters`.
    std::vector<AlgebraElement> factors_algebra;
    // Augmentations of the algebra factors: sum_h chi(h) a_h.
    std::vector<MultiPoly> factors_scalar;
    MultiPoly theta;
};

FactorizationResult dedekind_factorization(const Transversal& t, const ThetaOptions& options = {});
FactorizationResult dedekind_factorization(const SubgroupHandle& h, const ThetaOptions& options = {});

struct FactorizationReport {
    bool algebra_product = false;    // prod factors_algebra == Theta(G) e
    bool scalar_product = false;     // prod factors_scalar == Theta(G)
    bool homogeneous = false;        // every a_h homogeneous of degree [G:H]
    std::optional<bool> conjugacy_invariant;  // H normal only
    bool theta_routes_agree = false;
    std::vector<std::string> mismatches;  // first mismatch per failed check

    bool ok() const {
        return algebra_product && scalar_product && homogeneous && conjugacy_invariant.value_or(true) &&
               theta_routes_agree;
    }
};

FactorizationReport verify_factorization(const FactorizationResult& result);

// "element h, monomial m: lhs vs rhs" for the first differing coefficient, or
// empty when equal.
std::string first_mismatch(const MultiPoly& lhs, const MultiPoly& rhs);
std::string first_mismatch(const AlgebraElement& lhs, const AlgebraElement& rhs);

struct InvertibilityResult {
    Cyclotomic theta_value;
    bool theta_nonzero = false;
    bool inversion_succeeded = false;
    // When inversion succeeded: alpha * beta == beta * alpha == e.
    bool inverse_verified = false;

    bool agree() const { return theta_nonzero == inversion_succeeded && (!inversion_succeeded || inverse_verified); }
};

// assignment[g] is the value of x_g. The explicit inversion runs in the
// 1x1 context of h's greedy transversal.
InvertibilityResult invertibility_criterion(const GroupPtr& g, const std::vector<Cyclotomic>& assignment,
                                            const SubgroupHandle& h, const MultiPoly& theta);
InvertibilityResult invertibility_criterion(const GroupPtr& g, const std::vector<Cyclotomic>& assignment);

// sum_g assignment[g] g
AlgebraElement numeric_element(const GroupPtr& g, const std::vector<Cyclotomic>& assignment);

inline constexpr std::size_t kAbelianSearchCap = 64;

// Every abelian subgroup, ordered by size then elements. Throws
// OrderCapExceeded above kAbelianSearchCap.
std::vector<SubgroupHandle> abelian_subgroups(const GroupPtr& g);

// Irreducible degrees for abelian groups and the catalogued nonabelian
// families; throws FixtureMissing otherwise.
std::vector<unsigned> irrep_degree_fixture(const GroupPtr& g);

struct DegreeBoundReport {
    std::vector<unsigned> degrees;
    unsigned max_degree = 0;
    std::size_t min_index = 0;
    SubgroupHandle witness;  // an abelian subgroup of minimal index
    std::size_t abelian_subgroup_count = 0;
    std::size_t sum_of_squares = 0;
    bool bound_holds = false;
    bool sum_matches_order = false;

    bool ok() const { return bound_holds && sum_matches_order; }
};

DegreeBoundReport degree_bound_report(const GroupPtr& g, const std::vector<unsigned>& degrees);
DegreeBoundReport degree_bound_report(const GroupPtr& g);

}  // namespace groupdet
