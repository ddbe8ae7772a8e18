#include "groupdet/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "groupdet/errors.hpp"
#include "groupdet/factorization.hpp"
#include "groupdet/index2.hpp"
#include "groupdet/parallel.hpp"
#include "groupdet/random.hpp"

namespace groupdet::cli {

using nlohmann::json;

namespace {

struct RunConfig {
    std::string command;
    std::string group = "";
    std::string subgroup = "";
    std::string element = "";
    std::string strategy = "dft";
    std::string format = "text";
    std::uint64_t seed = 42;
    unsigned jobs = 1;
    std::size_t order_cap = 12;
    std::size_t count = 50;
    bool all = false;
    bool laws = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string subgroup_string(const SubgroupHandle& h) {
    std::string s = "{";
    for (std::size_t i = 0; i < h.order(); ++i) s += (i ? ", " : "") + h.group().name(h.elements()[i]);
    return s + "}";
}

json names_of(const FiniteGroup& g, const std::vector<Element>& elems) {
    json out = json::array();
    for (Element x : elems) out.push_back(g.name(x));
    return out;
}

GroupPtr require_group(const RunConfig& cfg) {
    if (cfg.group.empty()) throw UsageError("--group is required");
    return load_group(cfg.group);
}

SubgroupHandle require_subgroup(const RunConfig& cfg, const GroupPtr& g) {
    if (cfg.subgroup.empty()) throw UsageError("--subgroup is required");
    return parse_subgroup(g, cfg.subgroup);
}

ThetaOptions theta_options(const RunConfig& cfg) {
    ThetaOptions o;
    o.order_cap = cfg.order_cap;
    const DetStrategy s = parse_det_strategy(cfg.strategy);
    if (s == DetStrategy::leibniz || s == DetStrategy::cross_check) o.strategy = s;
    o.relative_strategy = s;
    return o;
}

BigRational parse_rational(const json& v) {
    if (v.is_number_integer()) return BigRational(v.get<long>());
    if (v.is_string()) {
        BigRational q(v.get<std::string>());
        q.canonicalize();
        return q;
    }
    throw UsageError("element coefficients must be integers or rational strings like \"3/2\"");
}

// A JSON object {name-or-index: coefficient}; empty text gives the generic element.
AlgebraElement parse_element(const std::string& text, const GroupPtr& g) {
    if (text.empty()) return generic_element(g);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("--element is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("--element must be a JSON object");
    AlgebraElement a(g);
    for (const auto& [key, value] : j.items()) {
        std::optional<Element> x = g->find_by_name(key);
        if (!x && !key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
            const unsigned long v = std::stoul(key);
            if (v < g->order()) x = static_cast<Element>(v);
        }
        if (!x) throw UsageError("unknown group element '" + key + "'");
        a.add_to_coeff(*x, MultiPoly(Cyclotomic(parse_rational(value))));
    }
    return a;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// --- commands ------------------------------------------------------------------

int cmd_groups(const RunConfig& cfg, std::ostream& out) {
    const std::vector<std::pair<std::string, std::string>> rows = {
        {"cyclic:n", "cyclic group Z/n, element i is the residue i"},
        {"product:AxB", "direct product of cyclic groups, elements named (a,b)"},
        {"dihedral:n", "dihedral group of order 2n; r rotation, s reflection"},
        {"sym:3", "symmetric group S3 (alias s3)"},
        {"sym:4", "symmetric group S4"},
        {"quaternion8", "quaternion group Q8 (alias q8)"},
    };
    if (cfg.format == "json") {
        json j{{"schema", "1"}, {"groups", json::array()}};
        for (const auto& [key, desc] : rows) j["groups"].push_back({{"key", key}, {"description", desc}});
        emit(out, j);
    } else {
        for (const auto& [key, desc] : rows) out << key << "\t" << desc << "\n";
    }
    return kOk;
}

int cmd_theta(const RunConfig& cfg, std::ostream& out) {
    const GroupPtr g = require_group(cfg);
    const MultiPoly theta = group_determinant(g, theta_options(cfg));
    if (cfg.format == "json") {
        emit(out, {{"schema", "1"}, {"group", g->label()}, {"order", g->order()}, {"theta", theta.to_string()}});
    } else if (cfg.format == "latex") {
        out << "\\Theta(G) = " << theta.to_latex() << "\n";
    } else {
        out << theta.to_string() << "\n";
    }
    return kOk;
}

std::string character_string(const Character& chi) {
    const SubgroupHandle& h = chi.domain();
    std::string s;
    for (std::size_t i = 0; i < h.order(); ++i) {
        s += (i ? ", " : "") + h.group().name(h.elements()[i]) + " -> " + chi.value(h.elements()[i]).to_string();
    }
    return s;
}

json checks_json(const FactorizationReport& rep) {
    json checks{{"algebra_product", rep.algebra_product},
                {"scalar_product", rep.scalar_product},
                {"homogeneous", rep.homogeneous},
                {"theta_routes_agree", rep.theta_routes_agree}};
    checks["conjugacy_invariant"] = rep.conjugacy_invariant ? json(*rep.conjugacy_invariant) : json(nullptr);
    return checks;
}

int cmd_factorize(const RunConfig& cfg, std::ostream& out) {
    const GroupPtr g = require_group(cfg);
    const SubgroupHandle h = require_subgroup(cfg, g);
    const FactorizationResult r = dedekind_factorization(h, theta_options(cfg));
    const FactorizationReport rep = verify_factorization(r);
    if (cfg.format == "json") {
        json j{{"schema", "1"},
               {"group", g->label()},
               {"order", g->order()},
               {"subgroup", names_of(*g, h.elements())},
               {"transversal", names_of(*g, r.transversal.reps())},
               {"theta", r.theta.to_string()}};
        j["coefficients"] = json::object();
        for (const auto& [x, a] : r.coefficients) j["coefficients"][g->name(x)] = a.to_string();
        j["factors"] = json::array();
        for (std::size_t k = 0; k < r.characters.size(); ++k) {
            json values = json::object();
            for (Element x : h.elements()) values[g->name(x)] = r.characters[k].value(x).to_string();
            j["factors"].push_back({{"character", values},
                                    {"algebra", r.factors_algebra[k].to_string()},
                                    {"scalar", r.factors_scalar[k].to_string()}});
        }
        j["checks"] = checks_json(rep);
        j["mismatches"] = rep.mismatches;
        j["passed"] = rep.ok();
        emit(out, j);
    } else if (cfg.format == "latex") {
        out << "\\Theta(G) = " << r.theta.to_latex() << "\n";
        for (const auto& [x, a] : r.coefficients) out << "a_{" << g->name(x) << "} = " << a.to_latex() << "\n";
        out << "\\Theta(G) =";
        for (const MultiPoly& f : r.factors_scalar) out << " \\left(" << f.to_latex() << "\\right)";
        out << "\n";
    } else {
        out << "group: " << g->label() << " (order " << g->order() << ")\n";
        out << "subgroup: " << subgroup_string(h) << "\n";
        out << "transversal:";
        for (Element t : r.transversal.reps()) out << " " << g->name(t);
        out << "\ntheta: " << r.theta.to_string() << "\n";
        for (const auto& [x, a] : r.coefficients) out << "a_" << g->name(x) << " = " << a.to_string() << "\n";
        for (std::size_t k = 0; k < r.characters.size(); ++k) {
            out << "factor " << k << " [" << character_string(r.characters[k]) << "]\n";
            out << "  algebra: " << r.factors_algebra[k].to_string() << "\n";
            out << "  scalar:  " << r.factors_scalar[k].to_string() << "\n";
        }
        const json checks = checks_json(rep);
        for (const auto& [name, value] : checks.items()) {
            out << "check " << name << ": " << (value.is_null() ? "skipped" : (value.get<bool>() ? "PASS" : "FAIL"))
                << "\n";
        }
        for (const std::string& m : rep.mismatches) out << "mismatch: " << m << "\n";
    }
    return rep.ok() ? kOk : kVerificationFailed;
}

struct VerifyLine {
    std::string group;
    std::string subgroup;
    std::string check;
    bool pass;
    std::string detail;
};

std::vector<VerifyLine> verify_pair(const GroupPtr& g, const SubgroupHandle& h, const RunConfig& cfg, Rng& rng) {
    std::vector<VerifyLine> lines;
    const std::string sub = subgroup_string(h);
    auto add = [&](std::string check, bool pass, std::string detail = {}) {
        lines.push_back({g->label(), sub, std::move(check), pass, std::move(detail)});
    };

    const FactorizationReport rep = verify_factorization(dedekind_factorization(h, theta_options(cfg)));
    std::string detail = rep.mismatches.empty() ? "" : rep.mismatches.front();
    add("algebra-product", rep.algebra_product, detail);
    add("scalar-product", rep.scalar_product, detail);
    add("homogeneous", rep.homogeneous, detail);
    if (rep.conjugacy_invariant) add("conjugacy-invariant", *rep.conjugacy_invariant, detail);
    add("theta-routes", rep.theta_routes_agree, detail);

    const RegularRepContext ctx(h, 1);
    const AlgebraMatrix generic = AlgebraMatrix::scalar(generic_element(g), 1);
    add("defining-identity", defining_identity_holds(ctx, generic));
    const bool normal = is_normal(g, h);
    if (normal) add("kronecker-form", kronecker_form(ctx, generic) == lift(ctx, generic));
    add("composition", compose_check(left_transversal(g, h), left_transversal(h, trivial_subgroup(g)), generic));

    const SubgroupHandle all = whole_group(g);
    bool hom = true, mult = true, inverse = true, round_trip = true, ch = true;
    const bool commutant = normal && is_abelian(quotient_group(g, h).group);
    const RegularRepContext ctx2(h, 2);
    for (int k = 0; k < 3; ++k) {
        const AlgebraMatrix a = random_numeric_matrix(all, 2, rng);
        const AlgebraMatrix b = random_numeric_matrix(all, 2, rng);
        hom = hom && lift(ctx2, a * b) == lift(ctx2, a) * lift(ctx2, b) && lift(ctx2, a + b) == lift(ctx2, a) + lift(ctx2, b);
        mult = mult && ncdet(ctx2, a * b) == ncdet(ctx2, a) * ncdet(ctx2, b);
        if (is_invertible(ctx2, a)) {
            const AlgebraMatrix inv = invert_numeric(ctx2, a);
            const AlgebraMatrix id = AlgebraMatrix::identity(g, 2);
            inverse = inverse && a * inv == id && inv * a == id;
        }
        if (commutant) {
            const AlgebraMatrix l = lift(ctx2, a);
            round_trip = round_trip && commutes_with_all_j(ctx2, l) && recover_preimage(ctx2, l) == a;
        }
        if (normal) ch = ch && cayley_hamilton_residual(ctx2, a).is_zero();
    }
    add("lift-homomorphism", hom);
    add("det-multiplicative", mult);
    add("two-sided-inverse", inverse);
    if (commutant) add("commutant-round-trip", round_trip);
    if (normal) add("cayley-hamilton", ch);
    return lines;
}

const std::vector<std::pair<std::string, std::string>>& verify_matrix() {
    static const std::vector<std::pair<std::string, std::string>> pairs = {
        {"cyclic:2", "trivial"}, {"cyclic:4", "2"},       {"product:2x2", "(1,0)"}, {"cyclic:6", "2"},
        {"sym:3", "a3"},         {"sym:3", "(1 2)"},      {"dihedral:4", "r"},      {"dihedral:4", "center"},
        {"quaternion8", "i"},    {"quaternion8", "center"},
    };
    return pairs;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    std::vector<std::pair<GroupPtr, SubgroupHandle>> jobs;
    if (cfg.all) {
        for (const auto& [key, sub] : verify_matrix()) {
            const GroupPtr g = load_group(key);
            jobs.emplace_back(g, parse_subgroup(g, sub));
        }
    } else {
        const GroupPtr g = require_group(cfg);
        jobs.emplace_back(g, require_subgroup(cfg, g));
    }
    // One generator per pair, seeded in order, so the report does not depend on --jobs.
    std::vector<Rng> rngs;
    Rng seeder(cfg.seed);
    for (std::size_t i = 0; i < jobs.size(); ++i) rngs.emplace_back(seeder());
    const auto results = parallel_map(jobs.size(), [&](std::size_t i) {
        return verify_pair(jobs[i].first, jobs[i].second, cfg, rngs[i]);
    });
    bool all_pass = true;
    json j{{"schema", "1"}, {"seed", cfg.seed}, {"results", json::array()}};
    for (const auto& lines : results) {
        for (const VerifyLine& l : lines) {
            all_pass = all_pass && l.pass;
            if (cfg.format == "json") {
                j["results"].push_back({{"group", l.group},
                                        {"subgroup", l.subgroup},
                                        {"check", l.check},
                                        {"pass", l.pass},
                                        {"detail", l.detail}});
            } else {
                out << (l.pass ? "PASS " : "FAIL ") << l.group << " H=" << l.subgroup << " " << l.check;
                if (!l.pass && !l.detail.empty()) out << " (" << l.detail << ")";
                out << "\n";
            }
        }
    }
    if (cfg.format == "json") {
        j["passed"] = all_pass;
        emit(out, j);
    } else {
        out << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all_pass ? kOk : kVerificationFailed;
}

int cmd_conjugate(const RunConfig& cfg, std::ostream& out) {
    const GroupPtr g = require_group(cfg);
    const Index2Context ctx(require_subgroup(cfg, g));
    const AlgebraElement a = parse_element(cfg.element, g);
    const Decomposition d = decompose(ctx, a);
    const AlgebraElement a_bar = conjugate(ctx, a);
    json j{{"schema", "1"},
           {"group", g->label()},
           {"subgroup", names_of(*g, ctx.subgroup().elements())},
           {"t", g->name(ctx.t())},
           {"element", a.to_string()},
           {"alpha", d.alpha.to_string()},
           {"beta", d.beta.to_string()},
           {"conjugate", a_bar.to_string()}};
    bool ok = true;
    if (cfg.laws) {
        const ConjugationLawsReport r = conjugation_laws_check(ctx, a, generic_element(g, static_cast<Var>(g->order())));
        json laws{{"involution", r.involution},
                  {"sum_central", r.sum_central},
                  {"norm_commutes", r.norm_commutes},
                  {"norm_central", r.norm_central},
                  {"antihomomorphism", r.antihomomorphism},
                  {"central_implies_fixed", r.central_implies_fixed},
                  {"fixed_implies_central", r.fixed_implies_central},
                  {"fixed_iff_central_in_subgroup", r.fixed_iff_central_in_subgroup},
                  {"char_poly_product", r.char_poly_product},
                  {"norm_identity", r.norm_identity}};
        j["laws"] = laws;
        if (auto c = fixed_point_counterexample(ctx)) j["central_not_fixed"] = c->to_string();
        ok = r.ok();
    }
    if (cfg.format == "json") {
        j["passed"] = ok;
        emit(out, j);
        return ok ? kOk : kVerificationFailed;
    }
    const bool latex = cfg.format == "latex";
    auto show = [&](const AlgebraElement& x) { return latex ? x.to_latex() : x.to_string(); };
    out << "t = " << g->name(ctx.t()) << "\n";
    out << "A = " << show(a) << "\n";
    out << "alpha = " << show(d.alpha) << "\n";
    out << "beta = " << show(d.beta) << "\n";
    out << "conj(A) = " << show(a_bar) << "\n";
    if (cfg.laws) {
        for (const auto& [name, value] : j["laws"].items()) out << "law " << name << ": " << (value.get<bool>() ? "PASS" : "FAIL") << "\n";
        if (j.contains("central_not_fixed")) {
            out << "central element not fixed by conj: " << j["central_not_fixed"].get<std::string>() << "\n";
        }
    }
    return ok ? kOk : kVerificationFailed;
}

SubgroupHandle default_index2_subgroup(const GroupPtr& g) {
    for (const SubgroupHandle& h : abelian_subgroups(g)) {
        if (2 * h.order() == g->order()) return h;
    }
    throw NotIndexTwo("the group has no abelian subgroup of index 2");
}

int cmd_invert2(const RunConfig& cfg, std::ostream& out) {
    const GroupPtr g = require_group(cfg);
    const SubgroupHandle h = cfg.subgroup.empty() ? default_index2_subgroup(g) : parse_subgroup(g, cfg.subgroup);
    const Index2Context ctx(h);
    const RegularRepContext rep = ctx.rep_context(2);
    const AlgebraMatrix id = AlgebraMatrix::identity(g, 2);
    Rng rng(cfg.seed);
    std::size_t inverted = 0, singular = 0, failures = 0, printed_ok = 0;
    for (std::size_t k = 0; k < cfg.count; ++k) {
        const AlgebraMatrix m = random_numeric_matrix(whole_group(g), 2, rng, -2, 2);
        try {
            const Inverse2x2 r = inverse_2x2(ctx, m);
            ++inverted;
            printed_ok += r.printed_multiplier_reproduces_entries;
            const bool good = m * r.inverse == id && r.inverse * m == id && invert_numeric(rep, m) == r.inverse;
            failures += !good;
        } catch (const SingularMatrix&) {
            ++singular;
            // The generic route must agree that M is singular.
            failures += is_invertible(rep, m);
        }
    }
    const bool ok = failures == 0;
    if (cfg.format == "json") {
        emit(out, {{"schema", "1"},
                   {"group", g->label()},
                   {"subgroup", names_of(*g, h.elements())},
                   {"seed", cfg.seed},
                   {"samples", cfg.count},
                   {"inverted", inverted},
                   {"singular", singular},
                   {"failures", failures},
                   {"printed_multiplier_reproduces_entries", printed_ok},
                   {"passed", ok}});
    } else {
        out << "group " << g->label() << ", H = " << subgroup_string(h) << ", t = " << g->name(ctx.t()) << "\n";
        out << "samples " << cfg.count << ": inverted " << inverted << ", singular " << singular << ", failures "
            << failures << "\n";
        out << "printed multiplier reproduces the product entries in " << printed_ok << " of " << inverted
            << " samples\n";
        out << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_lift(const RunConfig& cfg, std::ostream& out) {
    const GroupPtr g = require_group(cfg);
    const SubgroupHandle h = require_subgroup(cfg, g);
    const RegularRepContext ctx(h, 1);
    const AlgebraElement a = parse_element(cfg.element, g);
    const AlgebraMatrix l = lift(ctx, AlgebraMatrix::scalar(a, 1));
    if (cfg.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < l.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < l.size(); ++j) row.push_back(l(i, j).to_string());
            rows.push_back(row);
        }
        emit(out, {{"schema", "1"},
                   {"group", g->label()},
                   {"subgroup", names_of(*g, h.elements())},
                   {"transversal", names_of(*g, ctx.transversal().reps())},
                   {"element", a.to_string()},
                   {"matrix", rows}});
        return kOk;
    }
    out << "transversal:";
    for (Element t : ctx.transversal().reps()) out << " " << g->name(t);
    out << "\n";
    for (std::size_t i = 0; i < l.size(); ++i) {
        out << "[";
        for (std::size_t j = 0; j < l.size(); ++j) {
            out << (j ? " | " : " ") << (cfg.format == "latex" ? l(i, j).to_latex() : l(i, j).to_string());
        }
        out << " ]\n";
    }
    return kOk;
}

}  // namespace

GroupPtr group_from_json(const std::string& text) {
    const json j = json::parse(text);
    const auto table = j.at("table").get<CayleyTable>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) {
        throw NotAGroup("\"order\" does not match the table size");
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return make_group_from_table(table, names);
}

GroupPtr load_group(const std::string& source) {
    if (std::filesystem::is_regular_file(source)) {
        std::ifstream in(source);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            return group_from_json(buf.str());
        } catch (const json::exception& e) {
            throw UsageError("cannot read group table " + source + ": " + e.what());
        }
    }
    return builtin_group(source);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Group determinants and their factorizations over abelian subgroups"};
    app.require_subcommand(1);
    RunConfig cfg;
    const std::vector<std::string> strategies{"leibniz", "minor", "dft", "cross-check"};
    const std::vector<std::string> formats{"text", "json", "latex"};

    auto common = [&](CLI::App* sub, bool needs_subgroup) {
        sub->add_option("--group", cfg.group, "catalog key or Cayley-table JSON file");
        if (needs_subgroup) sub->add_option("--subgroup", cfg.subgroup, "generators by name or index, or trivial/whole/center/derived");
        sub->add_option("--det-strategy", cfg.strategy, "determinant strategy")->check(CLI::IsMember(strategies));
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
        sub->add_option("--order-cap", cfg.order_cap, "largest group order for the group determinant");
    };

    auto* groups = app.add_subcommand("groups", "list catalog groups");
    groups->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
    common(app.add_subcommand("theta", "group determinant Theta(G)"), false);
    common(app.add_subcommand("factorize", "factorization over an abelian subgroup"), true);
    auto* verify = app.add_subcommand("verify", "run exact verification checks");
    common(verify, true);
    verify->add_flag("--all", cfg.all, "run the full test matrix");
    auto* conj = app.add_subcommand("conjugate", "index-two conjugation of an element");
    common(conj, true);
    conj->add_option("--element", cfg.element, "JSON object {element: coefficient}; default generic element");
    conj->add_flag("--laws", cfg.laws, "check the conjugation laws against a second generic element");
    auto* inv2 = app.add_subcommand("invert2", "randomized check of the 2x2 inverse formula");
    common(inv2, true);
    inv2->add_option("--count", cfg.count, "number of random matrices");
    auto* lift_cmd = app.add_subcommand("lift", "left regular representation of an element");
    common(lift_cmd, true);
    lift_cmd->add_option("--element", cfg.element, "JSON object {element: coefficient}; default generic element");

    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    set_default_jobs(cfg.jobs);

    try {
        if (cfg.command == "groups") return cmd_groups(cfg, out);
        if (cfg.command == "theta") return cmd_theta(cfg, out);
        if (cfg.command == "factorize") return cmd_factorize(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        if (cfg.command == "conjugate") return cmd_conjugate(cfg, out);
        if (cfg.command == "invert2") return cmd_invert2(cfg, out);
        if (cfg.command == "lift") return cmd_lift(cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownCatalogKey& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kLibraryError;
    }
    err << "usage error: unknown command\n";
    return kUsage;
}

}  // namespace groupdet::cli
