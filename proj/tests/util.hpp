#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "apery/semigroup.hpp"

namespace testutil {

// random numerical semigroup with nu in [2, max_nu], generators <= max_gen
inline apery::NumericalSemigroup random_semigroup(std::mt19937& rng, int max_nu = 5,
                                                  apery::Int max_gen = 40) {
    std::uniform_int_distribution<int> nu_dist(2, max_nu);
    std::uniform_int_distribution<apery::Int> gen_dist(2, max_gen);
    while (true) {
        const int nu = nu_dist(rng);
        std::vector<apery::Int> gens;
        for (int i = 0; i < nu; ++i) gens.push_back(gen_dist(rng));
        apery::Int g = 0;
        for (apery::Int v : gens) g = std::gcd(g, v);
        if (g != 1) continue;
        return apery::NumericalSemigroup::from_generators(gens);
    }
}

// random member of S below the bound
inline apery::Int random_member(std::mt19937& rng, const apery::NumericalSemigroup& s,
                                apery::Int bound) {
    std::uniform_int_distribution<apery::Int> dist(0, bound);
    while (true) {
        const apery::Int x = dist(rng);
        if (s.contains(x)) return x;
    }
}

}  // namespace testutil
