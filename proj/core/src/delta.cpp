#include "pdtrank/delta.hpp"

#include <cassert>
#include <set>

namespace pdtrank {

S2Triple delta(const OverlinePartition& lambda) {
    Partition::Multiplicities alpha;
    Partition::Multiplicities beta;
    for (const auto& [size, count] : lambda.parts().multiplicities()) {
        const int g = lambda.position(size);
        const bool keeps_designated = size == lambda.tag() || g >= 2;
        [[maybe_unused]] const bool spills_all = size != lambda.tag() && g == 1;
        assert(keeps_designated != spills_all);
        if (keeps_designated) {
            alpha[size] = g;
            beta[size] = count - g;
        } else {
            beta[size] = count;
        }
    }
    return S2Triple(Partition(std::move(alpha)), Partition(std::move(beta)), lambda.tag());
}

OverlinePartition delta_inverse(const S2Triple& triple) {
    std::set<int> sizes;
    for (const auto& [size, count] : triple.alpha().multiplicities()) sizes.insert(size);
    for (const auto& [size, count] : triple.beta().multiplicities()) sizes.insert(size);

    Partition::Multiplicities f;
    OverlinePartition::Positions g;
    for (int size : sizes) {
        const int x = triple.alpha().multiplicity(size);
        const int y = triple.beta().multiplicity(size);
        const bool from_alpha = size == triple.tag() || x >= 2;
        [[maybe_unused]] const bool from_beta = x == 0 && y >= 1;
        assert(from_alpha != from_beta);
        f[size] = x + y;
        g[size] = from_alpha ? x : 1;
    }
    return OverlinePartition(Partition(std::move(f)), std::move(g), triple.tag());
}

}  // namespace pdtrank
