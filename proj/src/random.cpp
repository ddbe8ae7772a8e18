#include "groupdet/random.hpp"

namespace groupdet {

AlgebraElement random_numeric_element(const SubgroupHandle& support, Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    AlgebraElement a(support.parent());
    for (Element g : support.elements()) {
        const long c = dist(rng);
        if (c != 0) a.set_coeff(g, MultiPoly(c));
    }
    return a;
}

AlgebraMatrix random_numeric_matrix(const SubgroupHandle& support, std::size_t m, Rng& rng, long lo, long hi) {
    AlgebraMatrix out(support.parent(), m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) out(i, j) = random_numeric_element(support, rng, lo, hi);
    }
    return out;
}

}  // namespace groupdet
