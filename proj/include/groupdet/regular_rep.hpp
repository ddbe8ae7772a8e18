#pragma once

#include <vector>

#include "groupdet/finite_group.hpp"
#include "groupdet/group_algebra.hpp"

namespace groupdet {

/// Data for the left regular representation L_T : Mat(m, RK) -> Mat(m r, RH),
/// where K is the ambient subgroup of the transversal (usually all of G) and
/// r = [K:H].
class RegularRepContext {
public:
    // Greedy transversal of h in the whole group.
    RegularRepContext(const SubgroupHandle& h, std::size_t m = 1);
    RegularRepContext(Transversal t, std::size_t m = 1);

    const GroupPtr& group() const { return transversal_.subgroup().parent(); }
    const SubgroupHandle& ambient() const { return transversal_.ambient(); }
    const SubgroupHandle& subgroup() const { return transversal_.subgroup(); }
    const Transversal& transversal() const { return transversal_; }
    std::size_t block_size() const { return m_; }
    std::size_t index() const { return transversal_.size(); }
    std::size_t lifted_size() const { return m_ * transversal_.size(); }

private:
    Transversal transversal_;
    std::size_t m_;
};

// Block (i,j) entry (k,l) is the H-part of t_i^-1 A_kl t_j, i.e.
// sum over g of a_g [t_i^-1 g t_j in H] t_i^-1 g t_j.
AlgebraMatrix lift(const RegularRepContext& ctx, const AlgebraMatrix& a);

// A = sum_i t_i A_i with each A_i supported on H; indexed like the transversal.
std::vector<AlgebraMatrix> coset_decompose(const RegularRepContext& ctx, const AlgebraMatrix& a);

// Block (i,j) = sum_t [t_i^-1 t t_j in H] t_i^-1 t A_t t_j, evaluated literally.
// Agrees with lift() when H is normal; for other subgroups the entries need not
// lie in RH.
AlgebraMatrix lift_by_coset_formula(const RegularRepContext& ctx, const AlgebraMatrix& a);

// A (t_1 I ... t_r I) == (t_1 I ... t_r I) lift(A), block column by block column.
bool defining_identity_holds(const RegularRepContext& ctx, const AlgebraMatrix& a);

// P^-1 (sum_t L_{G/H}(tH) (x) t A_t) P with P = diag(t_1 I_m, ..., t_r I_m).
// Throws NotNormal.
AlgebraMatrix kronecker_form(const RegularRepContext& ctx, const AlgebraMatrix& a);

// diag(t_1 I_m, ..., t_r I_m) and its inverse.
AlgebraMatrix transversal_diagonal(const RegularRepContext& ctx, bool inverse = false);

// Regular representation of the quotient K/H on the cosets t_1 H, ..., t_r H.
SquareMatrix<int> quotient_regular_matrix(const RegularRepContext& ctx, Element t);

// L_U(L_T(A)) == L_V(A) where V = {t_p u_q} ordered q-major, p-minor.
// Throws NotASubgroupChain unless U is a transversal inside T's subgroup.
bool compose_check(const Transversal& t, const Transversal& u, const AlgebraMatrix& a);
Transversal composed_transversal(const Transversal& t, const Transversal& u);

// J_t = P^-1 (L_{G/H}(tH) (x) I_m) P. Throws NotNormal / QuotientNotAbelian.
AlgebraMatrix j_matrix(const RegularRepContext& ctx, Element t);
bool commutes_with_all_j(const RegularRepContext& ctx, const AlgebraMatrix& b);

// A = sum_p t_p B_(p,1) t_1^-1, read off the first block column.
AlgebraMatrix recover_preimage(const RegularRepContext& ctx, const AlgebraMatrix& b);

}  // namespace groupdet
