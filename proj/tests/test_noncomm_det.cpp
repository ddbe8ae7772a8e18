#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupdet/errors.hpp"
#include "groupdet/noncomm_det.hpp"
#include "groupdet/random.hpp"
#include "oracles.hpp"

using namespace groupdet;

namespace {

AlgebraMatrix one_by_one(const AlgebraElement& a) { return AlgebraMatrix::scalar(a, 1); }

}  // namespace

TEST_CASE("strategy names") {
    CHECK(parse_det_strategy("leibniz") == DetStrategy::leibniz);
    CHECK(parse_det_strategy("minor") == DetStrategy::minor_expansion);
    CHECK(parse_det_strategy("dft") == DetStrategy::character_dft);
    CHECK(parse_det_strategy("cross-check") == DetStrategy::cross_check);
    CHECK(to_string(DetStrategy::character_dft) == "character-dft");
    CHECK_THROWS(parse_det_strategy("gauss"));
}

TEST_CASE("Det over the trivial subgroup of Z/2") {
    const GroupPtr g = builtin_group("cyclic:2");
    const RegularRepContext ctx(trivial_subgroup(g));
    const AlgebraElement d = ncdet(ctx, one_by_one(generic_element(g)));
    const MultiPoly x0 = MultiPoly::variable(0), x1 = MultiPoly::variable(1);
    CHECK(d == AlgebraElement::scalar(g, x0 * x0 - x1 * x1));
}

TEST_CASE("strategies agree on symbolic lifts") {
    for (const auto& [key, sub] : {std::pair{"s3", "derived"}, {"cyclic:4", "2"}, {"s3", "2"}, {"d4", "center"}}) {
        const GroupPtr g = builtin_group(key);
        const RegularRepContext ctx(parse_subgroup(g, sub));
        const AlgebraMatrix a = one_by_one(generic_element(g));
        const AlgebraElement dft = ncdet(ctx, a, DetStrategy::character_dft);
        CHECK(ncdet(ctx, a, DetStrategy::minor_expansion) == dft);
        CHECK(ncdet(ctx, a, DetStrategy::leibniz) == dft);
        CHECK(ncdet(ctx, a, DetStrategy::cross_check) == dft);
        CHECK(supported_on(dft, ctx.subgroup()));
    }
}

TEST_CASE("det_commutative rejects entries outside the subgroup") {
    const GroupPtr g = builtin_group("s3");
    const SubgroupHandle a3 = parse_subgroup(g, "derived");
    CHECK_THROWS_AS(det_commutative(one_by_one(AlgebraElement(g, 1)), a3), NotSupportedOnSubgroup);
}

TEST_CASE("Det is multiplicative on generic elements") {
    const GroupPtr g = builtin_group("s3");
    const RegularRepContext ctx(parse_subgroup(g, "derived"));
    const AlgebraMatrix a = one_by_one(generic_element(g)), b = one_by_one(generic_element(g, 6));
    CHECK(ncdet(ctx, a * b) == ncdet(ctx, a) * ncdet(ctx, b));
}

TEST_CASE("norm of Det against elimination") {
    Rng rng(21);
    for (const auto& [key, sub] : {std::pair{"q8", "2"}, {"d4", "1"}, {"s3", "2"}}) {
        const GroupPtr g = builtin_group(key);
        const RegularRepContext ctx(parse_subgroup(g, sub), 2);
        for (int s = 0; s < 5; ++s) {
            const AlgebraMatrix a = random_numeric_matrix(whole_group(g), 2, rng);
            CHECK(oracle::det_field(oracle::subgroup_mult_matrix(ncdet(ctx, a), ctx.subgroup())) ==
                  oracle::det_field(oracle::left_mult_matrix(a)));
        }
    }
}

TEST_CASE("character values and Fourier inversion") {
    Rng rng(4);
    const GroupPtr g = builtin_group("cyclic:6");
    const SubgroupHandle all = whole_group(g);
    const AlgebraElement a = random_numeric_element(all, rng);
    std::vector<MultiPoly> values;
    for (const auto& chi : characters(all)) {
        Cyclotomic expect(0);
        for (Element k = 0; k < 6; ++k) expect += chi.value(k) * a.coeff(k).constant_term();
        CHECK(evaluate_character(a, chi) == MultiPoly(expect));
        values.push_back(evaluate_character(a, chi));
    }
    CHECK(fourier_inverse(all, values) == a);
}

TEST_CASE("inversion in the subgroup algebra") {
    const GroupPtr g = builtin_group("cyclic:4");
    const SubgroupHandle all = whole_group(g);
    AlgebraElement a(g);
    a.set_coeff(0, MultiPoly(2));
    a.set_coeff(1, MultiPoly(1));
    const AlgebraElement inv = invert_in_subgroup_algebra(a, all);
    CHECK(a * inv == a.one());
    AlgebraElement b(g);
    b.set_coeff(0, MultiPoly(1));
    b.set_coeff(2, MultiPoly(1));
    CHECK_FALSE(is_unit_in_subgroup_algebra(b, all));
    CHECK_THROWS_AS(invert_in_subgroup_algebra(b, all), SingularElement);
}

TEST_CASE("numeric inverses are two-sided") {
    Rng rng(31);
    const GroupPtr g = builtin_group("d4");
    const RegularRepContext ctx(parse_subgroup(g, "1"), 2);
    int inverted = 0;
    for (int s = 0; s < 10; ++s) {
        const AlgebraMatrix a = random_numeric_matrix(whole_group(g), 2, rng);
        if (!is_invertible(ctx, a)) {
            CHECK_THROWS_AS(invert_numeric(ctx, a), SingularElement);
            continue;
        }
        const AlgebraMatrix b = invert_numeric(ctx, a);
        CHECK(a * b == AlgebraMatrix::identity(g, 2));
        CHECK(b * a == AlgebraMatrix::identity(g, 2));
        ++inverted;
    }
    CHECK(inverted > 0);
    CHECK_THROWS_AS(is_invertible(ctx, AlgebraMatrix::scalar(generic_element(g), 2)), SymbolicCoefficientsUnsupported);
}

TEST_CASE("characteristic polynomial") {
    const GroupPtr g = builtin_group("s3");
    const RegularRepContext ctx(parse_subgroup(g, "derived"));
    const AlgebraMatrix a = one_by_one(generic_element(g));
    const CharPoly phi = char_poly(ctx, a);
    CHECK(phi.degree() == 2);
    CHECK(phi.is_monic());
    // mr = 2, so the constant term is Det(A) and the X coefficient is -Tr(L(A)).
    CHECK(phi.coefficients[0] == ncdet(ctx, a));
    const AlgebraMatrix l = lift(ctx, a);
    CHECK(phi.coefficients[1] == -(l(0, 0) + l(1, 1)));
    CHECK(cayley_hamilton_residual(phi, a).is_zero());
    for (Element x = 0; x < g->order(); ++x) CHECK(char_poly_conjugation_check(ctx, a, x));
    const CentralityReport r = coefficient_centrality_check(ctx, a);
    CHECK(r.ok());
    CHECK(r.all_central);
}

TEST_CASE("constant term sign for odd lifted size") {
    const GroupPtr g = builtin_group("cyclic:3");
    const RegularRepContext ctx(trivial_subgroup(g));
    const AlgebraMatrix a = one_by_one(generic_element(g));
    const CharPoly phi = char_poly(ctx, a);
    CHECK(phi.coefficients[0] == -ncdet(ctx, a));
    const CentralityReport r = coefficient_centrality_check(ctx, a);
    CHECK(r.constant_term_matches_signed_det);
    CHECK_FALSE(r.constant_term_matches_unsigned_det);
}

TEST_CASE("Cayley-Hamilton for 2x2 numeric matrices") {
    Rng rng(41);
    const GroupPtr g = builtin_group("cyclic:4");
    const RegularRepContext ctx(parse_subgroup(g, "2"), 2);
    for (int s = 0; s < 5; ++s) CHECK(cayley_hamilton_residual(ctx, random_numeric_matrix(whole_group(g), 2, rng)).is_zero());
}

TEST_CASE("character product over the quotient") {
    Rng rng(51);
    const GroupPtr g = builtin_group("product:2x4");
    const RegularRepContext ctx(parse_subgroup(g, "2"), 2);
    for (int s = 0; s < 3; ++s) {
        const AlgebraMatrix a = random_numeric_matrix(whole_group(g), 2, rng);
        CHECK(coset_character_product(ctx, a) == ncdet(ctx, a));
    }
    const RegularRepContext ctx1(parse_subgroup(g, "2"));
    const AlgebraMatrix x = one_by_one(generic_element(g));
    CHECK(coset_character_product(ctx1, x) == ncdet(ctx1, x));
}
