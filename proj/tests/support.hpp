#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <cellforge.hpp>

namespace cftest {

inline std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Fresh ids at every rank; isomorphic to the input by construction.
inline cellforge::Complex shuffled(const cellforge::Complex& cx, std::mt19937& rng) {
    std::vector<std::vector<int>> perms(cx.dim + 1);
    for (int k = 0; k <= cx.dim; ++k) perms[k] = random_perm(cx.count(k), rng);
    return cellforge::relabel(cx, perms);
}

inline std::map<std::string, long long> census_map(const cellforge::Complex& cx) {
    std::map<std::string, long long> m;
    for (const auto& e : cellforge::census_cells(cx).entries) m[e.name] = e.count;
    return m;
}

}  // namespace cftest
