#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

#include "groupdet/errors.hpp"
#include "groupdet/finite_group.hpp"

namespace groupdet {

namespace {

unsigned parse_positive(std::string_view text, std::string_view key) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos) {
        throw UnknownCatalogKey("malformed parameter in catalog key '" + std::string(key) + "'");
    }
    const unsigned long v = std::stoul(std::string(text));
    if (v == 0 || v > 4096) throw UnknownCatalogKey("parameter out of range in '" + std::string(key) + "'");
    return static_cast<unsigned>(v);
}

GroupPtr cyclic(unsigned n, std::string label) {
    CayleyTable t(n, std::vector<Element>(n));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    return FiniteGroup::make(std::move(t), {}, std::move(label));
}

GroupPtr product(const std::vector<unsigned>& dims, std::string label) {
    std::size_t n = 1;
    for (unsigned d : dims) n *= d;
    auto coords = [&](std::size_t idx) {
        std::vector<unsigned> c(dims.size());
        for (std::size_t i = dims.size(); i-- > 0;) {
            c[i] = static_cast<unsigned>(idx % dims[i]);
            idx /= dims[i];
        }
        return c;
    };
    auto index = [&](const std::vector<unsigned>& c) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + c[i];
        return static_cast<Element>(idx);
    };
    CayleyTable t(n, std::vector<Element>(n));
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto ca = coords(a);
        std::string name = "(";
        for (std::size_t i = 0; i < ca.size(); ++i) name += (i ? "," : "") + std::to_string(ca[i]);
        names[a] = name + ")";
        for (std::size_t b = 0; b < n; ++b) {
            auto cb = coords(b);
            for (std::size_t i = 0; i < dims.size(); ++i) cb[i] = (ca[i] + cb[i]) % dims[i];
            t[a][b] = index(cb);
        }
    }
    return FiniteGroup::make(std::move(t), std::move(names), std::move(label));
}

GroupPtr dihedral(unsigned n, std::string label) {
    const unsigned order = 2 * n;
    CayleyTable t(order, std::vector<Element>(order));
    std::vector<std::string> names(order);
    for (unsigned a = 0; a < order; ++a) {
        const unsigned f = a / n, k = a % n;
        std::string rot = k == 0 ? "" : (k == 1 ? "r" : "r^" + std::to_string(k));
        names[a] = f == 0 ? (k == 0 ? "e" : rot) : (k == 0 ? "s" : "s*" + rot);
        for (unsigned b = 0; b < order; ++b) {
            const unsigned g = b / n, l = b % n;
            // s^f r^k s^g r^l = s^(f+g) r^((-1)^g k + l)
            const unsigned kk = g == 0 ? k : (n - k) % n;
            t[a][b] = ((f + g) % 2) * n + (kk + l) % n;
        }
    }
    return FiniteGroup::make(std::move(t), std::move(names), std::move(label));
}

std::string cycle_notation(const std::vector<unsigned>& p) {
    std::vector<char> seen(p.size(), 0);
    std::string out;
    for (unsigned i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) continue;
        out += "(";
        for (unsigned j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            out += (out.back() == '(' ? "" : " ") + std::to_string(j + 1);
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

GroupPtr symmetric(unsigned n, std::string label) {
    if (n > 4) throw UnknownCatalogKey("sym:n is only catalogued for n <= 4");
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> p(n);
    for (unsigned i = 0; i < n; ++i) p[i] = i;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<unsigned>, Element> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);
    CayleyTable t(perms.size(), std::vector<Element>(perms.size()));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < perms.size(); ++a) {
        names.push_back(cycle_notation(perms[a]));
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<unsigned> c(n);
            for (unsigned i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index.at(c);
        }
    }
    return FiniteGroup::make(std::move(t), std::move(names), std::move(label));
}

GroupPtr quaternion8(std::string label) {
    // Units 1, i, j, k as 0..3; element index = 2*unit + (negative ? 1 : 0).
    constexpr std::array<std::array<int, 4>, 4> unit_sign{{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}}};
    constexpr std::array<std::array<int, 4>, 4> unit_prod{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    CayleyTable t(8, std::vector<Element>(8));
    const std::array<const char*, 4> unit_names{"1", "i", "j", "k"};
    std::vector<std::string> names(8);
    for (unsigned a = 0; a < 8; ++a) {
        const unsigned ua = a / 2;
        const int sa = (a % 2) ? -1 : 1;
        names[a] = std::string(sa < 0 ? "-" : "") + unit_names[ua];
        for (unsigned b = 0; b < 8; ++b) {
            const unsigned ub = b / 2;
            const int sb = (b % 2) ? -1 : 1;
            const int s = sa * sb * unit_sign[ua][ub];
            t[a][b] = 2 * unit_prod[ua][ub] + (s < 0 ? 1 : 0);
        }
    }
    return FiniteGroup::make(std::move(t), std::move(names), std::move(label));
}

}  // namespace

GroupPtr builtin_group(std::string_view key) {
    std::string k(key);
    std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return std::tolower(c); });
    if (k == "q8" || k == "quaternion8") return quaternion8("quaternion8");
    if (k == "s3") return symmetric(3, "sym:3");
    if (k == "d4") return dihedral(4, "dihedral:4");
    if (k == "z2xz2") return product({2, 2}, "product:2x2");

    const auto colon = k.find(':');
    if (colon == std::string::npos) throw UnknownCatalogKey("unknown catalog key '" + k + "'");
    const std::string family = k.substr(0, colon);
    const std::string param = k.substr(colon + 1);
    if (family == "cyclic") return cyclic(parse_positive(param, k), k);
    if (family == "dihedral") {
        const unsigned n = parse_positive(param, k);
        if (n < 2) throw UnknownCatalogKey("dihedral:n requires n >= 2");
        return dihedral(n, k);
    }
    if (family == "sym" || family == "symmetric") return symmetric(parse_positive(param, k), "sym:" + param);
    if (family == "product") {
        std::vector<unsigned> dims;
        std::istringstream is(param);
        std::string part;
        while (std::getline(is, part, 'x')) dims.push_back(parse_positive(part, k));
        if (dims.empty()) throw UnknownCatalogKey("product needs at least one factor");
        return product(dims, k);
    }
    throw UnknownCatalogKey("unknown catalog key '" + k + "'");
}

std::vector<std::string> catalog_examples() {
    return {"cyclic:n", "product:2x2", "dihedral:n", "sym:3", "sym:4", "quaternion8"};
}

}  // namespace groupdet
