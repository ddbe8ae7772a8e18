#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupdet/group_algebra.hpp"
#include "groupdet/regular_rep.hpp"

namespace groupdet {

enum class DetStrategy { leibniz, minor_expansion, character_dft, cross_check };

// "leibniz", "minor" / "minor-expansion", "dft" / "character-dft", "cross-check".
DetStrategy parse_det_strategy(std::string_view name);
std::string to_string(DetStrategy s);

// Matrices larger than this are refused by the Leibniz strategy.
inline constexpr std::size_t kLeibnizCap = 8;

/// Determinant over the commutative ring RH. Entries must be supported on
/// the abelian subgroup h. cross_check runs every applicable strategy and
/// throws StrategyMismatch if any two disagree.
AlgebraElement det_commutative(const AlgebraMatrix& m, const SubgroupHandle& h,
                               DetStrategy strategy = DetStrategy::character_dft);

// sum_h chi(h) a_h for a supported on chi's domain.
MultiPoly evaluate_character(const AlgebraElement& a, const Character& chi);
// The element sum_h c_h h with c_h = |H|^-1 sum_chi chi(h^-1) values[chi], in the
// order of characters(h).
AlgebraElement fourier_inverse(const SubgroupHandle& h, const std::vector<MultiPoly>& values);

// Det = det o L.
AlgebraElement ncdet(const RegularRepContext& ctx, const AlgebraMatrix& a,
                     DetStrategy strategy = DetStrategy::character_dft);

// Inverse of a numeric element of RH through its character values; throws
// SingularElement when some chi(a) vanishes.
AlgebraElement invert_in_subgroup_algebra(const AlgebraElement& a, const SubgroupHandle& h);
bool is_unit_in_subgroup_algebra(const AlgebraElement& a, const SubgroupHandle& h);

// Numeric coefficients only (SymbolicCoefficientsUnsupported otherwise).
bool is_invertible(const RegularRepContext& ctx, const AlgebraMatrix& a);
// B with AB = BA = I, from the adjugate of L(A), Det(A)^-1 and recover_preimage.
// Throws SingularElement.
AlgebraMatrix invert_numeric(const RegularRepContext& ctx, const AlgebraMatrix& a);

/// Phi_A(X) = Det(X I - A); coefficients[i] is the H-supported coefficient of X^i.
struct CharPoly {
    std::vector<AlgebraElement> coefficients;

    std::size_t degree() const { return coefficients.size() - 1; }
    bool is_monic() const;
    friend bool operator==(const CharPoly&, const CharPoly&) = default;
    std::string to_string() const;
};

CharPoly char_poly(const RegularRepContext& ctx, const AlgebraMatrix& a,
                   DetStrategy strategy = DetStrategy::character_dft);

// sum_i a_i A^i, coefficients multiplied on the left.
AlgebraMatrix cayley_hamilton_residual(const RegularRepContext& ctx, const AlgebraMatrix& a);
AlgebraMatrix cayley_hamilton_residual(const CharPoly& phi, const AlgebraMatrix& a);

// Phi_{g^-1 A g} == Phi_A. Throws NotNormal.
bool char_poly_conjugation_check(const RegularRepContext& ctx, const AlgebraMatrix& a, Element g);

struct CoefficientReport {
    std::size_t power;
    bool central;
    bool supported_on_subgroup;
};

struct CentralityReport {
    std::vector<CoefficientReport> coefficients;
    bool all_central = true;
    // a_0 = (-1)^(m r) Det(A) and the X^(mr-1) coefficient = -Tr(L(A)).
    bool constant_term_matches_signed_det = false;
    bool trace_coefficient_matches_signed_trace = false;
    // The same statements without signs; these only hold when the signs are +1.
    bool constant_term_matches_unsigned_det = false;
    bool trace_coefficient_matches_unsigned_trace = false;

    bool ok() const { return all_central && constant_term_matches_signed_det && trace_coefficient_matches_signed_trace; }
};

// Throws NotNormal.
CentralityReport coefficient_centrality_check(const RegularRepContext& ctx, const AlgebraMatrix& a);

// Multiplies the coefficient of g in every entry by chi(g). Entries must be
// supported on chi's (abelian) domain.
AlgebraMatrix character_twist(const Character& chi, const AlgebraMatrix& a);

// prod over chi in (G/H)^ of det(sum_t chi(tH) t A_t), for abelian G; this
// equals det(L(A)).
AlgebraElement coset_character_product(const RegularRepContext& ctx, const AlgebraMatrix& a);

}  // namespace groupdet
