#include "groupdet/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "groupdet/errors.hpp"

namespace groupdet {

GroupPtr FiniteGroup::make(CayleyTable table, std::vector<std::string> names, std::string label,
                           bool skip_associativity_check) {
    const std::size_t n = table.size();
    if (n == 0) throw NotAGroup("empty Cayley table");
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw NotAGroup("Cayley table is not square (row " + std::to_string(i) + ")");
        for (Element v : table[i]) {
            if (v >= n) throw NotAGroup("entry " + std::to_string(v) + " out of range in row " + std::to_string(i));
        }
    }
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[table[i][j]]++) throw NotAGroup("row " + std::to_string(i) + " is not a permutation");
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[table[j][i]]++) throw NotAGroup("column " + std::to_string(i) + " is not a permutation");
        }
    }

    std::optional<Element> identity;
    for (Element e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (Element j = 0; j < n && ok; ++j) ok = table[e][j] == j && table[j][e] == j;
        if (ok) identity = e;
    }
    if (!identity) throw NotAGroup("no identity element");

    std::vector<Element> inverses(n);
    for (Element i = 0; i < n; ++i) {
        auto it = std::find(table[i].begin(), table[i].end(), *identity);
        const auto j = static_cast<Element>(it - table[i].begin());
        if (table[j][i] != *identity) {
            throw NotAGroup("element " + std::to_string(i) + " has a right inverse that is not a left inverse");
        }
        inverses[i] = j;
    }

    if (!skip_associativity_check && n <= kAssociativityCheckCap) {
        for (Element a = 0; a < n; ++a) {
            for (Element b = 0; b < n; ++b) {
                const Element ab = table[a][b];
                for (Element c = 0; c < n; ++c) {
                    if (table[ab][c] != table[a][table[b][c]]) {
                        std::ostringstream os;
                        os << "associativity fails for the triple (" << a << ", " << b << ", " << c << ")";
                        throw NotAGroup(os.str());
                    }
                }
            }
        }
    }

    if (names.empty()) {
        for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    } else if (names.size() != n) {
        throw NotAGroup("names has " + std::to_string(names.size()) + " entries for order " + std::to_string(n));
    }

    auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    group->table_ = std::move(table);
    group->identity_ = *identity;
    group->inverses_ = std::move(inverses);
    group->names_ = std::move(names);
    group->label_ = std::move(label);
    return group;
}

Element FiniteGroup::power(Element a, long k) const {
    Element base = k < 0 ? inverse(a) : a;
    Element out = identity_;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) out = mul(out, base);
    return out;
}

std::size_t FiniteGroup::element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

std::optional<Element> FiniteGroup::find_by_name(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<Element>(i);
    }
    return std::nullopt;
}

GroupPtr make_group_from_table(CayleyTable table, std::vector<std::string> names) {
    return FiniteGroup::make(std::move(table), std::move(names));
}

// --- subgroups ---------------------------------------------------------------

SubgroupHandle SubgroupHandle::from_elements(GroupPtr parent, std::vector<Element> elements) {
    const FiniteGroup& g = *parent;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    SubgroupHandle h;
    h.member_.assign(g.order(), 0);
    for (Element e : elements) {
        if (e >= g.order()) throw Error("subgroup element " + std::to_string(e) + " out of range");
        h.member_[e] = 1;
    }
    if (elements.empty() || !h.member_[g.identity()]) throw Error("subgroup must contain the identity");
    for (Element a : elements) {
        for (Element b : elements) {
            if (!h.member_[g.mul(a, b)]) throw Error("element set is not closed under the product");
        }
    }
    h.parent_ = std::move(parent);
    h.elements_ = std::move(elements);
    return h;
}

std::size_t SubgroupHandle::position(Element g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || *it != g) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - elements_.begin());
}

bool SubgroupHandle::is_subset_of(const SubgroupHandle& other) const {
    if (parent_ != other.parent_) return false;
    return std::all_of(elements_.begin(), elements_.end(), [&](Element e) { return other.contains(e); });
}

SubgroupHandle whole_group(const GroupPtr& g) {
    std::vector<Element> all(g->order());
    std::iota(all.begin(), all.end(), Element{0});
    return SubgroupHandle::from_elements(g, std::move(all));
}

SubgroupHandle trivial_subgroup(const GroupPtr& g) { return SubgroupHandle::from_elements(g, {g->identity()}); }

SubgroupHandle subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens) {
    std::vector<char> in(g->order(), 0);
    std::vector<Element> found{g->identity()};
    in[g->identity()] = 1;
    std::deque<Element> queue{g->identity()};
    while (!queue.empty()) {
        const Element x = queue.front();
        queue.pop_front();
        for (Element s : gens) {
            const Element y = g->mul(x, s);
            if (!in[y]) {
                in[y] = 1;
                found.push_back(y);
                queue.push_back(y);
            }
        }
    }
    return SubgroupHandle::from_elements(g, std::move(found));
}

SubgroupHandle center(const GroupPtr& g) {
    std::vector<Element> z;
    for (Element a = 0; a < g->order(); ++a) {
        bool central = true;
        for (Element b = 0; b < g->order() && central; ++b) central = g->mul(a, b) == g->mul(b, a);
        if (central) z.push_back(a);
    }
    return SubgroupHandle::from_elements(g, std::move(z));
}

SubgroupHandle derived_subgroup(const GroupPtr& g) {
    std::set<Element> commutators;
    for (Element a = 0; a < g->order(); ++a) {
        for (Element b = 0; b < g->order(); ++b) {
            commutators.insert(g->mul(g->mul(g->inverse(a), g->inverse(b)), g->mul(a, b)));
        }
    }
    return subgroup_generated(g, {commutators.begin(), commutators.end()});
}

SubgroupHandle parse_subgroup(const GroupPtr& g, std::string_view sub) {
    if (sub == "trivial" || sub == "e") return trivial_subgroup(g);
    if (sub == "whole" || sub == "all") return whole_group(g);
    if (sub == "center") return center(g);
    if (sub == "derived" || sub == "alt" || sub == "a3" || sub == "a4") return derived_subgroup(g);
    // Split on commas outside parentheses so names like "(0,1)" survive.
    std::vector<std::string> tokens(1);
    int depth = 0;
    for (char c : sub) {
        if (c == ',' && depth == 0) {
            tokens.emplace_back();
            continue;
        }
        depth += c == '(' ? 1 : (c == ')' ? -1 : 0);
        tokens.back() += c;
    }
    std::vector<Element> gens;
    for (std::string token : tokens) {
        token.erase(0, token.find_first_not_of(' '));
        token.erase(token.find_last_not_of(' ') + 1);
        if (token.empty()) continue;
        if (auto named = g->find_by_name(token)) {
            gens.push_back(*named);
            continue;
        }
        if (token.find_first_not_of("0123456789") == std::string::npos) {
            const unsigned long v = std::stoul(token);
            if (v >= g->order()) throw Error("generator index " + token + " out of range");
            gens.push_back(static_cast<Element>(v));
            continue;
        }
        throw Error("unknown subgroup generator '" + token + "'");
    }
    return subgroup_generated(g, gens);
}

// --- transversals ------------------------------------------------------------

Transversal Transversal::make(SubgroupHandle ambient, SubgroupHandle subgroup, std::vector<Element> reps) {
    const FiniteGroup& g = ambient.group();
    if (!subgroup.is_subset_of(ambient)) throw InvalidTransversal("subgroup is not contained in the ambient group");
    if (reps.empty() || reps.front() != g.identity()) {
        throw InvalidTransversal("transversal must start with the identity");
    }
    if (reps.size() * subgroup.order() != ambient.order()) {
        throw InvalidTransversal("transversal has the wrong number of representatives");
    }
    std::vector<std::size_t> coset(g.order(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!ambient.contains(reps[i])) throw InvalidTransversal("representative outside the ambient group");
        for (Element h : subgroup.elements()) {
            const Element x = g.mul(reps[i], h);
            if (coset[x] != static_cast<std::size_t>(-1)) {
                throw InvalidTransversal("cosets of representatives " + std::to_string(reps[coset[x]]) + " and " +
                                         std::to_string(reps[i]) + " overlap");
            }
            coset[x] = i;
        }
    }
    Transversal t;
    t.ambient_ = std::move(ambient);
    t.subgroup_ = std::move(subgroup);
    t.reps_ = std::move(reps);
    t.coset_ = std::move(coset);
    return t;
}

Transversal left_transversal(const SubgroupHandle& ambient, const SubgroupHandle& h) {
    const FiniteGroup& g = ambient.group();
    if (!h.is_subset_of(ambient)) throw NotASubgroupChain("subgroup is not contained in the ambient group");
    std::vector<char> covered(g.order(), 0);
    std::vector<Element> reps;
    auto take = [&](Element r) {
        reps.push_back(r);
        for (Element x : h.elements()) covered[g.mul(r, x)] = 1;
    };
    take(g.identity());
    for (Element x : ambient.elements()) {
        if (!covered[x]) take(x);
    }
    return Transversal::make(ambient, h, std::move(reps));
}

Transversal left_transversal(const GroupPtr& g, const SubgroupHandle& h) { return left_transversal(whole_group(g), h); }

// --- structure queries ---------------------------------------------------------

bool is_abelian(const SubgroupHandle& h) {
    const FiniteGroup& g = h.group();
    for (Element a : h.elements()) {
        for (Element b : h.elements()) {
            if (g.mul(a, b) != g.mul(b, a)) return false;
        }
    }
    return true;
}

bool is_abelian(const GroupPtr& g) { return is_abelian(whole_group(g)); }

bool is_normal(const SubgroupHandle& ambient, const SubgroupHandle& h) {
    if (!h.is_subset_of(ambient)) return false;
    const FiniteGroup& g = ambient.group();
    for (Element x : ambient.elements()) {
        for (Element y : h.elements()) {
            if (!h.contains(g.conjugate(y, x))) return false;
        }
    }
    return true;
}

bool is_normal(const GroupPtr& g, const SubgroupHandle& h) { return is_normal(whole_group(g), h); }

std::vector<std::vector<Element>> conjugacy_classes(const GroupPtr& g) {
    std::vector<char> assigned(g->order(), 0);
    std::vector<std::vector<Element>> classes;
    for (Element a = 0; a < g->order(); ++a) {
        if (assigned[a]) continue;
        std::set<Element> cls;
        for (Element x = 0; x < g->order(); ++x) cls.insert(g->conjugate(a, x));
        for (Element c : cls) assigned[c] = 1;
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

unsigned group_exponent(const SubgroupHandle& h) {
    unsigned e = 1;
    for (Element x : h.elements()) e = std::lcm(e, static_cast<unsigned>(h.group().element_order(x)));
    return e;
}

QuotientGroup quotient_group(const SubgroupHandle& ambient, const SubgroupHandle& h) {
    if (!is_normal(ambient, h)) throw NotNormal("quotient requires a normal subgroup");
    const FiniteGroup& g = ambient.group();
    const Transversal t = left_transversal(ambient, h);
    const std::size_t r = t.size();
    CayleyTable table(r, std::vector<Element>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) table[i][j] = static_cast<Element>(t.coset_of(g.mul(t[i], t[j])));
    }
    std::vector<std::string> names;
    for (Element rep : t.reps()) names.push_back(g.name(rep) + "H");
    QuotientGroup q;
    q.group = FiniteGroup::make(std::move(table), std::move(names), g.label() + "/H");
    q.projection.assign(g.order(), kNoElement);
    for (Element x : ambient.elements()) q.projection[x] = static_cast<Element>(t.coset_of(x));
    return q;
}

QuotientGroup quotient_group(const GroupPtr& g, const SubgroupHandle& h) { return quotient_group(whole_group(g), h); }

// --- abelian structure and characters ------------------------------------------

namespace {

// Odometer over the box prod [0, radix[i]), last coordinate fastest.
bool next_tuple(std::vector<unsigned>& e, const std::vector<unsigned>& radix) {
    for (std::size_t i = e.size(); i-- > 0;) {
        if (++e[i] < radix[i]) return true;
        e[i] = 0;
    }
    return false;
}

std::vector<Element> closure(const FiniteGroup& g, const std::vector<Element>& gens) {
    std::vector<char> in(g.order(), 0);
    std::vector<Element> found{g.identity()};
    in[g.identity()] = 1;
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (Element s : gens) {
            const Element y = g.mul(found[i], s);
            if (!in[y]) {
                in[y] = 1;
                found.push_back(y);
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

void decompose_into(const FiniteGroup& g, const std::vector<Element>& elems, AbelianDecomposition& out) {
    if (elems.size() <= 1) return;
    Element best = elems.front();
    std::size_t best_order = 0;
    for (Element x : elems) {
        const std::size_t o = g.element_order(x);
        if (o > best_order) {
            best_order = o;
            best = x;
        }
    }
    out.generators.push_back(best);
    out.orders.push_back(static_cast<unsigned>(best_order));
    if (best_order == elems.size()) return;

    const std::vector<Element> cyclic = closure(g, {best});
    std::vector<char> in_cyclic(g.order(), 0);
    for (Element x : cyclic) in_cyclic[x] = 1;
    const std::size_t target = elems.size() / best_order;

    // Depth-first search over subgroups meeting <best> trivially, until one has
    // the complementary order.
    std::set<std::vector<Element>> visited;
    std::vector<std::vector<Element>> stack{{g.identity()}};
    while (!stack.empty()) {
        std::vector<Element> k = std::move(stack.back());
        stack.pop_back();
        if (k.size() == target) {
            decompose_into(g, k, out);
            return;
        }
        for (Element x : elems) {
            if (std::binary_search(k.begin(), k.end(), x)) continue;
            std::vector<Element> gens = k;
            gens.push_back(x);
            std::vector<Element> next = closure(g, gens);
            if (next.size() > target) continue;
            const bool trivial_meet =
                std::none_of(next.begin(), next.end(), [&](Element y) { return y != g.identity() && in_cyclic[y]; });
            if (!trivial_meet || !visited.insert(next).second) continue;
            stack.push_back(std::move(next));
        }
    }
    throw Error("abelian_decomposition: no complement found");
}

}  // namespace

AbelianDecomposition abelian_decomposition(const SubgroupHandle& h) {
    if (!is_abelian(h)) throw NotAbelian("abelian_decomposition requires an abelian subgroup");
    const FiniteGroup& g = h.group();
    AbelianDecomposition d;
    decompose_into(g, h.elements(), d);

    d.coordinates.assign(h.order(), {});
    std::vector<unsigned> e(d.orders.size(), 0);
    do {
        Element x = g.identity();
        for (std::size_t i = 0; i < e.size(); ++i) x = g.mul(x, g.power(d.generators[i], e[i]));
        const std::size_t pos = h.position(x);
        if (pos == static_cast<std::size_t>(-1) || (!d.coordinates[pos].empty() || (h.order() > 1 && e.empty()))) {
            throw Error("abelian_decomposition: coordinate map is not bijective");
        }
        d.coordinates[pos] = e;
    } while (next_tuple(e, d.orders));
    return d;
}

Character::Character(SubgroupHandle domain, unsigned conductor, std::vector<unsigned> exponents)
    : domain_(std::move(domain)), conductor_(conductor), exponents_(std::move(exponents)) {
    if (exponents_.size() != domain_.order()) throw Error("Character: exponent table has the wrong size");
}

unsigned Character::exponent_at(Element g) const {
    const std::size_t pos = domain_.position(g);
    if (pos == static_cast<std::size_t>(-1)) throw NotSupportedOnSubgroup("character evaluated outside its domain");
    return exponents_[pos];
}

Cyclotomic Character::value(Element g) const { return Cyclotomic::root_of_unity(conductor_, exponent_at(g)); }

bool Character::is_trivial() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](unsigned k) { return k == 0; });
}

std::vector<Character> characters(const SubgroupHandle& h) {
    const AbelianDecomposition d = abelian_decomposition(h);
    const unsigned n = d.orders.empty() ? 1 : d.orders.front();
    std::vector<Character> out;
    std::vector<unsigned> label(d.orders.size(), 0);
    do {
        std::vector<unsigned> exps(h.order(), 0);
        for (std::size_t pos = 0; pos < h.order(); ++pos) {
            unsigned long k = 0;
            for (std::size_t i = 0; i < label.size(); ++i) {
                k += static_cast<unsigned long>(label[i]) * d.coordinates[pos][i] * (n / d.orders[i]);
            }
            exps[pos] = static_cast<unsigned>(k % n);
        }
        out.emplace_back(h, n, std::move(exps));
    } while (next_tuple(label, d.orders));
    return out;
}

Character pull_back(const Character& chi, const QuotientGroup& q, const SubgroupHandle& ambient) {
    std::vector<unsigned> exps(ambient.order());
    for (std::size_t pos = 0; pos < ambient.order(); ++pos) {
        exps[pos] = chi.exponent_at(q.projection[ambient.elements()[pos]]);
    }
    return Character(ambient, chi.conductor(), std::move(exps));
}

}  // namespace groupdet
