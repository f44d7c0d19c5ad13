#pragma once

#include <random>
#include <vector>

#include "legaug/diagram.hpp"

namespace legaug::testing {

// Random single-component plat fronts, m <= max_m, word length <= max_n.
inline std::vector<FrontDiagram> random_fronts(int count, int max_m, int max_n, uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<FrontDiagram> out;
    while ((int)out.size() < count) {
        FrontDiagram d;
        d.m = 1 + rng() % max_m;
        int n = rng() % (max_n + 1);
        for (int i = 0; i < n; ++i) d.word.push_back(1 + rng() % (2 * d.m - 1));
        if (is_single_component(d)) {
            d.name = "rand" + std::to_string(out.size());
            out.push_back(std::move(d));
        }
    }
    return out;
}

} // namespace legaug::testing
