#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupdet/errors.hpp"
#include "groupdet/random.hpp"
#include "groupdet/regular_rep.hpp"
#include "oracles.hpp"

using namespace groupdet;

namespace {

// Entry by entry from the definition: the H-part of t_i^-1 A_kl t_j.
AlgebraMatrix lift_by_definition(const RegularRepContext& ctx, const AlgebraMatrix& a) {
    const FiniteGroup& g = *ctx.group();
    const Transversal& t = ctx.transversal();
    const std::size_t m = a.size(), r = t.size();
    AlgebraMatrix out(ctx.group(), m * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                for (std::size_t l = 0; l < m; ++l) {
                    for (Element x = 0; x < g.order(); ++x) {
                        const Element y = g.mul(g.mul(g.inverse(t[i]), x), t[j]);
                        if (ctx.subgroup().contains(y)) out(i * m + k, j * m + l).add_to_coeff(y, a(k, l).coeff(x));
                    }
                }
            }
        }
    }
    return out;
}

AlgebraMatrix generic_matrix(const GroupPtr& g, std::size_t m, Var base = 0) {
    AlgebraMatrix a(g, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) a(i, j) = generic_element(g, static_cast<Var>(base + (i * m + j) * g->order()));
    }
    return a;
}

}  // namespace

TEST_CASE("Z/2 over the trivial subgroup") {
    const GroupPtr g = builtin_group("cyclic:2");
    const RegularRepContext ctx(trivial_subgroup(g));
    const AlgebraMatrix l = lift(ctx, AlgebraMatrix::scalar(generic_element(g), 1));
    const MultiPoly x0 = MultiPoly::variable(0), x1 = MultiPoly::variable(1);
    CHECK(l.size() == 2);
    CHECK(l(0, 0) == AlgebraElement(g, 0, x0));
    CHECK(l(0, 1) == AlgebraElement(g, 0, x1));
    CHECK(l(1, 0) == AlgebraElement(g, 0, x1));
    CHECK(l(1, 1) == AlgebraElement(g, 0, x0));
}

TEST_CASE("lift matches the definition") {
    for (const auto& [key, sub] : {std::pair{"s3", "2"}, {"s3", "derived"}, {"d4", "center"}, {"q8", "2"}}) {
        const GroupPtr g = builtin_group(key);
        const SubgroupHandle h = parse_subgroup(g, sub);
        for (std::size_t m : {1u, 2u}) {
            const RegularRepContext ctx(h, m);
            const AlgebraMatrix a = generic_matrix(g, m);
            const AlgebraMatrix l = lift(ctx, a);
            CHECK(l == lift_by_definition(ctx, a));
            CHECK(l.supported_on(h));
            CHECK(l.size() == ctx.lifted_size());
        }
    }
}

TEST_CASE("defining identity and homomorphism") {
    const GroupPtr g = builtin_group("s3");
    const RegularRepContext ctx(parse_subgroup(g, "2"), 2);
    const AlgebraMatrix a = generic_matrix(g, 2), b = generic_matrix(g, 2, 24);
    CHECK(defining_identity_holds(ctx, a));
    CHECK(lift(ctx, a * b) == lift(ctx, a) * lift(ctx, b));
    CHECK(lift(ctx, a + b) == lift(ctx, a) + lift(ctx, b));
    CHECK(lift(ctx, AlgebraMatrix::identity(g, 2)) == AlgebraMatrix::identity(g, 6));
}

TEST_CASE("coset decomposition reassembles A") {
    const GroupPtr g = builtin_group("d4");
    const RegularRepContext ctx(parse_subgroup(g, "1"), 2);
    const AlgebraMatrix a = generic_matrix(g, 2);
    const auto parts = coset_decompose(ctx, a);
    AlgebraMatrix sum(g, 2);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        CHECK(parts[i].supported_on(ctx.subgroup()));
        sum += AlgebraElement(g, ctx.transversal()[i]) * parts[i];
    }
    CHECK(sum == a);
}

TEST_CASE("coset formula needs a normal subgroup") {
    const GroupPtr g = builtin_group("s3");
    const AlgebraMatrix a = AlgebraMatrix::scalar(generic_element(g), 1);
    const RegularRepContext normal(parse_subgroup(g, "derived"));
    CHECK(lift_by_coset_formula(normal, a) == lift(normal, a));
    const RegularRepContext other(parse_subgroup(g, "2"));
    const AlgebraMatrix literal = lift_by_coset_formula(other, a);
    CHECK_FALSE(literal == lift(other, a));
    CHECK_FALSE(literal.supported_on(other.subgroup()));
}

TEST_CASE("Kronecker form for normal subgroups") {
    for (const auto& [key, sub] : {std::pair{"s3", "derived"}, {"d4", "1"}, {"d4", "center"}, {"q8", "center"}}) {
        const GroupPtr g = builtin_group(key);
        const RegularRepContext ctx(parse_subgroup(g, sub), 1);
        const AlgebraMatrix a = generic_matrix(g, 1);
        CHECK(kronecker_form(ctx, a) == lift(ctx, a));
        CHECK(transversal_diagonal(ctx) * transversal_diagonal(ctx, true) == AlgebraMatrix::identity(g, ctx.lifted_size()));
    }
    const GroupPtr g = builtin_group("s3");
    CHECK_THROWS_AS(kronecker_form(RegularRepContext(parse_subgroup(g, "2")), generic_matrix(g, 1)), NotNormal);
}

TEST_CASE("quotient regular matrices are permutations") {
    const GroupPtr g = builtin_group("d4");
    const RegularRepContext ctx(center(g));
    for (Element t = 0; t < g->order(); ++t) {
        const SquareMatrix<int> q = quotient_regular_matrix(ctx, t);
        for (std::size_t i = 0; i < q.size(); ++i) {
            int row = 0;
            for (std::size_t j = 0; j < q.size(); ++j) row += q(i, j);
            CHECK(row == 1);
        }
    }
}

TEST_CASE("composition along G > H > K") {
    const GroupPtr g = builtin_group("d4");
    const SubgroupHandle h = parse_subgroup(g, "1");
    const SubgroupHandle k = center(g);
    const Transversal t = left_transversal(g, h);
    const Transversal u = left_transversal(h, k);
    const AlgebraMatrix a = generic_matrix(g, 1);
    CHECK(compose_check(t, u, a));
    CHECK(compose_check(t, left_transversal(h, trivial_subgroup(g)), a));
    const Transversal v = composed_transversal(t, u);
    CHECK(v.size() == 4);
    CHECK(v[1] == g->mul(t[1], u[0]));
    CHECK_THROWS_AS(composed_transversal(u, t), NotASubgroupChain);
}

TEST_CASE("commutant of the J matrices") {
    Rng rng(5);
    const GroupPtr g = builtin_group("q8");
    const RegularRepContext ctx(center(g), 2);
    for (int s = 0; s < 5; ++s) {
        const AlgebraMatrix a = random_numeric_matrix(whole_group(g), 2, rng);
        const AlgebraMatrix l = lift(ctx, a);
        CHECK(commutes_with_all_j(ctx, l));
        CHECK(recover_preimage(ctx, l) == a);
        AlgebraMatrix bad = l;
        bad(1, 3).add_to_coeff(g->identity(), MultiPoly(1));
        CHECK_FALSE(commutes_with_all_j(ctx, bad));
    }
    const GroupPtr s3 = builtin_group("s3");
    CHECK_THROWS_AS(j_matrix(RegularRepContext(parse_subgroup(s3, "2")), 1), NotNormal);
    CHECK_THROWS_AS(j_matrix(RegularRepContext(trivial_subgroup(s3)), 1), QuotientNotAbelian);
}

TEST_CASE("lift preserves the Q-determinant of left multiplication") {
    Rng rng(9);
    const GroupPtr g = builtin_group("s3");
    const RegularRepContext ctx(parse_subgroup(g, "derived"), 2);
    const AlgebraMatrix a = random_numeric_matrix(whole_group(g), 2, rng);
    const AlgebraMatrix l = lift(ctx, a);
    // Block-diagonal of blocks over QH: its Q-matrix has the same determinant.
    oracle::Matrix big(12, std::vector<Cyclotomic>(12));
    const auto& el = ctx.subgroup().elements();
    for (std::size_t i = 0; i < l.size(); ++i) {
        for (std::size_t j = 0; j < l.size(); ++j) {
            const oracle::Matrix b = oracle::subgroup_mult_matrix(l(i, j), ctx.subgroup());
            for (std::size_t p = 0; p < el.size(); ++p) {
                for (std::size_t q = 0; q < el.size(); ++q) big[i * 3 + p][j * 3 + q] = b[p][q];
            }
        }
    }
    CHECK(oracle::det_field(big) == oracle::det_field(oracle::left_mult_matrix(a)));
}
