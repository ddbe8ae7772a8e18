// Acceptance run: one PASS/FAIL line per criterion, all comparisons exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "groupdet/errors.hpp"
#include "groupdet/factorization.hpp"
#include "groupdet/index2.hpp"
#include "groupdet/noncomm_det.hpp"
#include "groupdet/random.hpp"
#include "groupdet/regular_rep.hpp"
#include "oracles.hpp"

using namespace groupdet;

namespace {

struct Pair {
    std::string label;
    GroupPtr group;
    SubgroupHandle subgroup;
};

Pair make_pair(const std::string& key, const std::string& sub) {
    GroupPtr g = builtin_group(key);
    return {key + " H=<" + sub + ">", g, parse_subgroup(g, sub)};
}

std::vector<Pair> test_matrix() {
    return {make_pair("cyclic:4", "2"),      make_pair("product:2x2", "2"), make_pair("cyclic:6", "2"),
            make_pair("s3", "derived"),      make_pair("s3", "2"),          make_pair("d4", "1"),
            make_pair("d4", "center"),       make_pair("q8", "2"),          make_pair("q8", "center")};
}

std::vector<Pair> index_two_pairs() {
    return {make_pair("cyclic:4", "2"), make_pair("product:2x2", "2"), make_pair("s3", "derived"), make_pair("d4", "1"),
            make_pair("q8", "2")};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Cyclotomic> random_point(std::size_t n, Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    std::vector<Cyclotomic> x;
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(d(rng));
    return x;
}

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << '\n';
    if (!ok) ++failures;
}

void run(int id, const std::string& title, const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
        ok = false;
    }
    report(id, title, ok, detail.str());
}

// Criterion 1
bool classical_dedekind(std::ostringstream& d) {
    Rng rng(101);
    double worst = 0;
    for (unsigned n = 2; n <= 6; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const GroupPtr g = builtin_group("cyclic:" + std::to_string(n));
        MultiPoly product(1);
        for (unsigned j = 0; j < n; ++j) {
            MultiPoly factor;
            for (unsigned k = 0; k < n; ++k) factor += MultiPoly::variable(k) * oracle::cyclic_character(n, j, k);
            product *= factor;
        }
        const MultiPoly theta = group_determinant(g);
        if (!(product == theta)) {
            d << "Z/" << n << ": " << first_mismatch(product, theta);
            return false;
        }
        for (int s = 0; s < 3; ++s) {
            const auto x = random_point(n, rng, -4, 4);
            if (!(poly_eval(theta, oracle::point(x)) == oracle::theta_at(*g, x))) {
                d << "Z/" << n << ": numeric determinant disagrees";
                return false;
            }
        }
        const double t = seconds_since(start);
        worst = std::max(worst, t);
        if (t >= 1.0) {
            d << "Z/" << n << " took " << t << " s";
            return false;
        }
    }
    d << "n=2..6, slowest " << worst << " s";
    return true;
}

std::vector<FactorizationResult> factorizations;
std::vector<double> factorization_seconds;

void compute_factorizations() {
    if (!factorizations.empty()) return;
    for (const Pair& p : test_matrix()) {
        const auto start = std::chrono::steady_clock::now();
        factorizations.push_back(dedekind_factorization(p.subgroup));
        factorization_seconds.push_back(seconds_since(start));
    }
}

// Criterion 2
bool further_extension(std::ostringstream& d) {
    compute_factorizations();
    const auto pairs = test_matrix();
    double worst = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const FactorizationResult& r = factorizations[i];
        AlgebraElement prod = AlgebraElement::scalar(r.group, MultiPoly(1));
        for (const auto& f : r.factors_algebra) prod *= f;
        const AlgebraElement expected = AlgebraElement::scalar(r.group, r.theta);
        if (!(prod == expected)) {
            d << pairs[i].label << ": " << first_mismatch(prod, expected);
            return false;
        }
        const unsigned index = static_cast<unsigned>(r.group->order() / r.subgroup.order());
        for (const auto& [x, a] : r.coefficients) {
            if (!a.is_homogeneous(index)) {
                d << pairs[i].label << ": a_" << r.group->name(x) << " not homogeneous of degree " << index;
                return false;
            }
        }
        // Independent check of Theta(G) at a numeric point.
        Rng rng(7 + i);
        const auto x = random_point(r.group->order(), rng, -2, 2);
        if (!(poly_eval(r.theta, oracle::point(x)) == oracle::theta_at(*r.group, x))) {
            d << pairs[i].label << ": Theta(G) disagrees with elimination";
            return false;
        }
        worst = std::max(worst, factorization_seconds[i]);
        if (factorization_seconds[i] >= 60.0) {
            d << pairs[i].label << " took " << factorization_seconds[i] << " s";
            return false;
        }
    }
    d << pairs.size() << " pairs, slowest " << worst << " s";
    return true;
}

// Criterion 3
bool further_generalization(std::ostringstream& d) {
    compute_factorizations();
    const auto pairs = test_matrix();
    std::vector<MultiPoly> scalars;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        MultiPoly s(1);
        for (const auto& f : factorizations[i].factors_scalar) s *= f;
        if (!(s == factorizations[i].theta)) {
            d << pairs[i].label << ": " << first_mismatch(s, factorizations[i].theta);
            return false;
        }
        scalars.push_back(s);
    }
    // Same group, different abelian subgroups: s3 (3,4), d4 (5,6), q8 (7,8).
    const std::pair<std::size_t, std::size_t> same[] = {{3, 4}, {5, 6}, {7, 8}};
    for (auto [a, b] : same) {
        if (!(scalars[a] == scalars[b])) {
            d << pairs[a].label << " vs " << pairs[b].label << ": " << first_mismatch(scalars[a], scalars[b]);
            return false;
        }
    }
    d << "9 pairs; s3, d4, q8 agree across two subgroups each";
    return true;
}

// Criterion 4
bool conjugacy_invariance(std::ostringstream& d) {
    compute_factorizations();
    const auto pairs = test_matrix();
    int compared = 0;
    for (std::size_t i : {3u, 5u, 7u}) {
        const FactorizationResult& r = factorizations[i];
        const FiniteGroup& g = *r.group;
        for (const auto& [x, a] : r.coefficients) {
            for (Element y = 0; y < g.order(); ++y) {
                const Element c = g.conjugate(x, y);
                if (!(r.coefficients.at(c) == a)) {
                    d << pairs[i].label << ": a_" << g.name(x) << " != a_" << g.name(c);
                    return false;
                }
                ++compared;
            }
        }
    }
    d << compared << " conjugate pairs compared";
    return true;
}

// Criterion 5
bool regular_rep_laws(std::ostringstream& d) {
    int checks = 0;
    for (const Pair& p : test_matrix()) {
        for (std::size_t m : {1u, 2u}) {
            if (m == 2 && p.group->order() > 6) continue;
            const RegularRepContext ctx(p.subgroup, m);
            const std::size_t n = p.group->order();
            AlgebraMatrix a(p.group, m), b(p.group, m);
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) {
                    a(i, j) = generic_element(p.group, static_cast<Var>((i * m + j) * n));
                    b(i, j) = generic_element(p.group, static_cast<Var>((m * m + i * m + j) * n));
                }
            }
            if (!defining_identity_holds(ctx, a)) {
                d << p.label << " m=" << m << ": defining identity";
                return false;
            }
            if (!(lift(ctx, a * b) == lift(ctx, a) * lift(ctx, b))) {
                d << p.label << " m=" << m << ": homomorphism";
                return false;
            }
            if (is_normal(p.group, p.subgroup) && !(kronecker_form(ctx, a) == lift(ctx, a))) {
                d << p.label << " m=" << m << ": Kronecker form";
                return false;
            }
            const Transversal t = ctx.transversal();
            const Transversal u = left_transversal(p.subgroup, trivial_subgroup(p.group));
            if (!compose_check(t, u, a)) {
                d << p.label << " m=" << m << ": composition through {e}";
                return false;
            }
            checks += 4;
        }
    }
    d << checks << " symbolic identities";
    return true;
}

// Criterion 6
bool commutant(std::ostringstream& d) {
    Rng rng(606);
    int pairs = 0;
    for (const Pair& p : test_matrix()) {
        if (!is_normal(p.group, p.subgroup)) continue;
        if (!is_abelian(quotient_group(p.group, p.subgroup).group)) continue;
        ++pairs;
        for (std::size_t m : {1u, 2u}) {
            const RegularRepContext ctx(p.subgroup, m);
            for (int s = 0; s < 20; ++s) {
                const AlgebraMatrix a = random_numeric_matrix(whole_group(p.group), m, rng);
                const AlgebraMatrix la = lift(ctx, a);
                if (!commutes_with_all_j(ctx, la)) {
                    d << p.label << " m=" << m << ": an image fails to commute with J";
                    return false;
                }
                if (!(recover_preimage(ctx, la) == a)) {
                    d << p.label << " m=" << m << ": round trip";
                    return false;
                }
                AlgebraMatrix perturbed = la;
                perturbed(0, m).add_to_coeff(p.group->identity(), MultiPoly(1));
                if (commutes_with_all_j(ctx, perturbed)) {
                    d << p.label << " m=" << m << ": perturbed non-image accepted";
                    return false;
                }
            }
        }
    }
    d << pairs << " pairs, 20 samples each at m=1 and m=2";
    return true;
}

// Criterion 7
bool determinant_laws(std::ostringstream& d) {
    int samples = 0, cross_checked = 0, inverted = 0;
    unsigned seed = 700;
    for (const Pair& p : test_matrix()) {
        for (std::size_t m : {1u, 2u}) {
            const RegularRepContext ctx(p.subgroup, m);
            Rng rng(seed++);
            const SubgroupHandle all = whole_group(p.group);
            for (int s = 0; s < 50; ++s) {
                const AlgebraMatrix a = random_numeric_matrix(all, m, rng, -2, 2);
                const AlgebraMatrix b = random_numeric_matrix(all, m, rng, -2, 2);
                const AlgebraElement det_a = ncdet(ctx, a);
                const AlgebraElement det_b = ncdet(ctx, b);
                if (!(ncdet(ctx, a * b) == det_a * det_b)) {
                    d << p.label << " m=" << m << ": Det(AB) != Det(A) Det(B)";
                    return false;
                }
                // Norm of Det(A) against the Q-determinant of left multiplication.
                if (!(oracle::det_field(oracle::left_mult_matrix(a)) ==
                      oracle::det_field(oracle::subgroup_mult_matrix(det_a, p.subgroup)))) {
                    d << p.label << " m=" << m << ": norm of Det(A) disagrees with elimination";
                    return false;
                }
                if (ctx.lifted_size() <= 6) {
                    ncdet(ctx, a, DetStrategy::cross_check);
                    ++cross_checked;
                }
                if (is_invertible(ctx, a)) {
                    const AlgebraMatrix inv = invert_numeric(ctx, a);
                    const AlgebraMatrix id = AlgebraMatrix::identity(p.group, m);
                    if (!(a * inv == id) || !(inv * a == id)) {
                        d << p.label << " m=" << m << ": inverse is not two-sided";
                        return false;
                    }
                    ++inverted;
                }
                ++samples;
            }
        }
    }
    d << samples << " samples, " << inverted << " inverted, " << cross_checked << " strategy cross-checks";
    return true;
}

// Criterion 8
bool cayley_hamilton(std::ostringstream& d) {
    Rng rng(808);
    int checks = 0;
    for (const Pair& p : {make_pair("cyclic:4", "2"), make_pair("s3", "derived")}) {
        const RegularRepContext ctx1(p.subgroup, 1);
        const AlgebraMatrix a = AlgebraMatrix::scalar(generic_element(p.group), 1);
        if (!cayley_hamilton_residual(ctx1, a).is_zero()) {
            d << p.label << ": symbolic residual is nonzero";
            return false;
        }
        for (Element g = 0; g < p.group->order(); ++g) {
            if (!char_poly_conjugation_check(ctx1, a, g)) {
                d << p.label << ": symbolic Phi changes under conjugation by " << p.group->name(g);
                return false;
            }
        }
        checks += 1 + static_cast<int>(p.group->order());
        const RegularRepContext ctx2(p.subgroup, 2);
        for (int s = 0; s < 10; ++s) {
            const AlgebraMatrix b = random_numeric_matrix(whole_group(p.group), 2, rng);
            if (!cayley_hamilton_residual(ctx2, b).is_zero()) {
                d << p.label << ": numeric m=2 residual is nonzero";
                return false;
            }
            for (Element g = 0; g < p.group->order(); ++g) {
                if (!char_poly_conjugation_check(ctx2, b, g)) {
                    d << p.label << ": numeric Phi changes under conjugation";
                    return false;
                }
            }
            checks += 1 + static_cast<int>(p.group->order());
        }
    }
    d << checks << " exact checks";
    return true;
}

// Criterion 9
bool invertibility(std::ostringstream& d) {
    Rng rng(909);
    int singular = 0, regular = 0;
    for (const std::string key : {"cyclic:4", "product:2x2", "cyclic:6", "s3", "d4", "q8"}) {
        const GroupPtr g = builtin_group(key);
        const MultiPoly theta = group_determinant(g);
        const SubgroupHandle h = abelian_subgroups(g).back();
        for (int s = 0; s < 100; ++s) {
            // Every fourth draw uses only {0, 1}, which makes Theta vanish often.
            const auto x = s % 4 == 0 ? random_point(g->order(), rng, 0, 1) : random_point(g->order(), rng, -2, 2);
            const InvertibilityResult r = invertibility_criterion(g, x, h, theta);
            if (!r.agree()) {
                d << key << " sample " << s << ": Theta=" << r.theta_value << " but inversion "
                  << (r.inversion_succeeded ? "succeeded" : "failed");
                return false;
            }
            if (!(r.theta_value == oracle::theta_at(*g, x))) {
                d << key << " sample " << s << ": Theta disagrees with elimination";
                return false;
            }
            (r.theta_nonzero ? regular : singular) += 1;
        }
    }
    d << regular << " invertible, " << singular << " singular";
    return singular > 0 && regular > 0;
}

// Criterion 10
bool degree_bound(std::ostringstream& d) {
    const std::pair<const char*, std::vector<unsigned>> cases[] = {
        {"s3", {1, 1, 2}}, {"d4", {1, 1, 1, 1, 2}}, {"q8", {1, 1, 1, 1, 2}}};
    for (const auto& [key, degrees] : cases) {
        const DegreeBoundReport r = degree_bound_report(builtin_group(key), degrees);
        if (key != cases[0].first) d << "; ";
        d << key << ": max " << r.max_degree << " <= index " << r.min_index << ", sum " << r.sum_of_squares;
        if (!r.ok()) return false;
    }
    return true;
}

// Criterion 11
bool conjugation(std::ostringstream& d) {
    bool ok = true;
    int inverses = 0;
    unsigned seed = 1100;
    for (const Pair& p : index_two_pairs()) {
        const Index2Context ctx(p.subgroup);
        const std::size_t n = p.group->order();
        const AlgebraElement a = generic_element(p.group);
        const AlgebraElement b = generic_element(p.group, static_cast<Var>(n));
        const ConjugationLawsReport r = conjugation_laws_check(ctx, a, b);
        std::vector<std::string> failed;
        if (!r.involution) failed.push_back("involution");
        if (!r.sum_central) failed.push_back("A+conj(A) central");
        if (!r.norm_commutes) failed.push_back("A conj(A) = conj(A) A");
        if (!r.norm_central) failed.push_back("A conj(A) central");
        if (!r.antihomomorphism) failed.push_back("conj(AB) = conj(B) conj(A)");
        if (!r.central_implies_fixed) failed.push_back("A central => A = conj(A)");
        if (!r.fixed_implies_central) failed.push_back("A = conj(A) => A central");
        if (!r.char_poly_product) failed.push_back("(X-A)(X-conj(A)) = Phi_A");
        if (!r.norm_identity) failed.push_back("A conj(A) = Phi_A(0)");
        if (!failed.empty()) {
            ok = false;
            d << p.label << " fails";
            for (const auto& f : failed) d << " [" << f << "]";
            if (auto c = fixed_point_counterexample(ctx)) {
                d << ", e.g. central " << c->to_string() << " has conj " << conjugate(ctx, *c).to_string();
            } else if (!r.central_implies_fixed) {
                const AlgebraElement one = a.one();
                d << ", e.g. conj(" << (AlgebraElement(p.group, ctx.t())).to_string() << ") = "
                  << conjugate(ctx, AlgebraElement(p.group, ctx.t())).to_string() << " and conj(e) = "
                  << conjugate(ctx, one).to_string();
            }
            d << "; ";
        }

        Rng rng(seed++);
        const RegularRepContext rep = ctx.rep_context(2);
        const AlgebraMatrix id = AlgebraMatrix::identity(p.group, 2);
        for (int s = 0; s < 50; ++s) {
            const AlgebraMatrix m = random_numeric_matrix(whole_group(p.group), 2, rng, -2, 2);
            const bool invertible = is_invertible(rep, m);
            try {
                const Inverse2x2 inv = inverse_2x2(ctx, m);
                if (!invertible || !(m * inv.inverse == id) || !(inv.inverse * m == id) ||
                    !(inv.inverse == invert_numeric(rep, m))) {
                    ok = false;
                    d << p.label << " sample " << s << ": corrected 2x2 inverse wrong; ";
                    break;
                }
                ++inverses;
            } catch (const SingularMatrix&) {
                if (invertible) {
                    ok = false;
                    d << p.label << " sample " << s << ": 2x2 route calls an invertible matrix singular; ";
                    break;
                }
            }
        }
    }
    d << inverses << " corrected 2x2 inverses verified";
    return ok;
}

}  // namespace

int main() {
    run(1, "classical Dedekind factorization over Z/n", classical_dedekind);
    run(2, "algebra factorization over an abelian subgroup", further_extension);
    run(3, "augmented scalar factorization", further_generalization);
    run(4, "conjugacy invariance of a_h for normal H", conjugacy_invariance);
    run(5, "regular representation laws", regular_rep_laws);
    run(6, "commutant and preimage recovery", commutant);
    run(7, "determinant multiplicativity, inverses, strategy agreement", determinant_laws);
    run(8, "Cayley-Hamilton and char-poly conjugation invariance", cayley_hamilton);
    run(9, "invertibility criterion", invertibility);
    run(10, "irreducible degree bound", degree_bound);
    run(11, "index-two conjugation laws and 2x2 inverse", conjugation);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
