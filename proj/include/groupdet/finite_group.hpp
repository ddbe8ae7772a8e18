#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupdet/cyclotomic.hpp"

namespace groupdet {

using Element = std::uint32_t;
inline constexpr Element kNoElement = ~Element{0};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

using CayleyTable = std::vector<std::vector<Element>>;

/// A finite group given by its Cayley table: table[i][j] is the index of g_i * g_j.
///
/// Construction validates the Latin-square property, the identity and
/// inverses, and associativity (for order <= kAssociativityCheckCap unless
/// explicitly skipped). Instances are immutable and shared through GroupPtr.
class FiniteGroup {
public:
    static constexpr std::size_t kAssociativityCheckCap = 64;

    static GroupPtr make(CayleyTable table, std::vector<std::string> names = {}, std::string label = {},
                         bool skip_associativity_check = false);

    std::size_t order() const { return table_.size(); }
    Element identity() const { return identity_; }
    Element mul(Element a, Element b) const { return table_[a][b]; }
    Element inverse(Element a) const { return inverses_[a]; }
    // a^-1 * b * a
    Element conjugate(Element b, Element a) const { return mul(mul(inverse(a), b), a); }
    Element power(Element a, long k) const;
    std::size_t element_order(Element a) const;

    const CayleyTable& table() const { return table_; }
    const std::string& name(Element a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& label() const { return label_; }
    std::optional<Element> find_by_name(std::string_view name) const;

private:
    FiniteGroup() = default;

    CayleyTable table_;
    Element identity_ = 0;
    std::vector<Element> inverses_;
    std::vector<std::string> names_;
    std::string label_;
};

GroupPtr make_group_from_table(CayleyTable table, std::vector<std::string> names = {});

// Catalog keys: "cyclic:n", "product:AxBx...", "dihedral:n" (order 2n),
// "sym:n" (n <= 4), "quaternion8" (alias "q8"). Aliases "s3", "d4", "z2xz2".
//
// Element orderings:
//   cyclic:n        i is the residue i.
//   product:d1x..   mixed radix, first coordinate most significant.
//   dihedral:n      index f*n + k is s^f r^k (rotations come first).
//   sym:n           permutations in lexicographic one-line order, (p*q)(i) = p(q(i)).
//   quaternion8     1, -1, i, -i, j, -j, k, -k.
GroupPtr builtin_group(std::string_view key);
std::vector<std::string> catalog_examples();

/// A subgroup of a parent group, as the sorted list of its element indices.
class SubgroupHandle {
public:
    // Validates closure; throws Error if the set is not a subgroup.
    static SubgroupHandle from_elements(GroupPtr parent, std::vector<Element> elements);

    const GroupPtr& parent() const { return parent_; }
    const FiniteGroup& group() const { return *parent_; }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(Element g) const { return member_[g] != 0; }
    // Position of g within elements(), or npos.
    std::size_t position(Element g) const;
    bool is_subset_of(const SubgroupHandle& other) const;

    friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
        return a.parent_ == b.parent_ && a.elements_ == b.elements_;
    }

private:
    GroupPtr parent_;
    std::vector<Element> elements_;
    std::vector<char> member_;
};

SubgroupHandle whole_group(const GroupPtr& g);
SubgroupHandle trivial_subgroup(const GroupPtr& g);
SubgroupHandle subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens);
SubgroupHandle center(const GroupPtr& g);
SubgroupHandle derived_subgroup(const GroupPtr& g);

// "trivial", "whole", "center", "derived" ("alt", "a3", "a4" are aliases of
// "derived"), or a comma-separated list of generators given by index or name.
SubgroupHandle parse_subgroup(const GroupPtr& g, std::string_view sub);

/// Left coset representatives of `subgroup` inside `ambient`.
class Transversal {
public:
    // Validates that reps[i]*H tile the ambient set and reps[0] = identity.
    static Transversal make(SubgroupHandle ambient, SubgroupHandle subgroup, std::vector<Element> reps);

    const SubgroupHandle& ambient() const { return ambient_; }
    const SubgroupHandle& subgroup() const { return subgroup_; }
    const std::vector<Element>& reps() const { return reps_; }
    std::size_t size() const { return reps_.size(); }
    Element operator[](std::size_t i) const { return reps_[i]; }
    // Index i with g in reps[i]*H; g must lie in the ambient set.
    std::size_t coset_of(Element g) const { return coset_[g]; }

private:
    SubgroupHandle ambient_;
    SubgroupHandle subgroup_;
    std::vector<Element> reps_;
    std::vector<std::size_t> coset_;
};

// Greedy: identity first, then ascending element index among uncovered elements.
Transversal left_transversal(const SubgroupHandle& ambient, const SubgroupHandle& h);
Transversal left_transversal(const GroupPtr& g, const SubgroupHandle& h);

bool is_abelian(const SubgroupHandle& h);
bool is_abelian(const GroupPtr& g);
bool is_normal(const SubgroupHandle& ambient, const SubgroupHandle& h);
bool is_normal(const GroupPtr& g, const SubgroupHandle& h);
std::vector<std::vector<Element>> conjugacy_classes(const GroupPtr& g);
unsigned group_exponent(const SubgroupHandle& h);

struct QuotientGroup {
    GroupPtr group;
    // projection[g] = index of the coset gH, ordered as left_transversal(ambient, H);
    // kNoElement for g outside the ambient subgroup.
    std::vector<Element> projection;
};

QuotientGroup quotient_group(const SubgroupHandle& ambient, const SubgroupHandle& h);
QuotientGroup quotient_group(const GroupPtr& g, const SubgroupHandle& h);

struct AbelianDecomposition {
    std::vector<Element> generators;
    std::vector<unsigned> orders;  // invariant-factor order: each divides the previous
    // coordinates[i] = exponent vector of subgroup element elements()[i]
    std::vector<std::vector<unsigned>> coordinates;
};

AbelianDecomposition abelian_decomposition(const SubgroupHandle& h);

/// A linear character chi(g) = zeta_N^k(g) of a subgroup (or of a whole group).
class Character {
public:
    Character(SubgroupHandle domain, unsigned conductor, std::vector<unsigned> exponents);

    const SubgroupHandle& domain() const { return domain_; }
    unsigned conductor() const { return conductor_; }
    // k(g) for g in the domain.
    unsigned exponent_at(Element g) const;
    Cyclotomic value(Element g) const;
    bool is_trivial() const;

    friend bool operator==(const Character& a, const Character& b) {
        return a.domain_ == b.domain_ && a.conductor_ == b.conductor_ && a.exponents_ == b.exponents_;
    }

private:
    SubgroupHandle domain_;
    unsigned conductor_;
    std::vector<unsigned> exponents_;  // by position in domain.elements()
};

// All |H| characters in lexicographic order of their labels (c_1, ..., c_k).
std::vector<Character> characters(const SubgroupHandle& h);

// chi o projection, as a character on the ambient subgroup of the quotient.
Character pull_back(const Character& chi, const QuotientGroup& q, const SubgroupHandle& ambient);

}  // namespace groupdet
