#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "polsyz/graph.hpp"

// Input families shared by the property tests and the acceptance run.
namespace sweep {

using polsyz::MonomialSet;

// slot k < n is the loop at k, the rest are the proper edges in lex order
inline std::vector<std::pair<int, int>> slots(int n) {
    std::vector<std::pair<int, int>> s;
    for (int v = 0; v < n; ++v) s.emplace_back(v, v);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) s.emplace_back(a, b);
    return s;
}

inline bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> covered(n, false);
    for (auto [a, b] : edges) {
        covered[a] = covered[b] = true;
        parent[find(a)] = find(b);
    }
    for (int v = 0; v < n; ++v)
        if (!covered[v] || find(v) != find(0)) return false;
    return true;
}

inline MonomialSet from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    MonomialSet f;
    f.n = n;
    for (auto [a, b] : pairs) f.gens.push_back({a, b});
    return f;
}

// every connected graph with loops on exactly n vertices, one per isomorphism class
inline std::vector<MonomialSet> connected_loop_graphs(int n) {
    auto s = slots(n);
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::vector<int> slot_of(n * n);
    for (std::size_t k = 0; k < s.size(); ++k) {
        slot_of[s[k].first * n + s[k].second] = static_cast<int>(k);
        slot_of[s[k].second * n + s[k].first] = static_cast<int>(k);
    }
    std::set<std::uint32_t> seen;
    std::vector<MonomialSet> out;
    for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < s.size(); ++k)
            if (mask >> k & 1) edges.push_back(s[k]);
        if (!connected(n, edges)) continue;
        std::uint32_t best = mask;
        for (const auto& q : perms) {
            std::uint32_t img = 0;
            for (auto [a, b] : edges) img |= 1u << slot_of[q[a] * n + q[b]];
            best = std::min(best, img);
        }
        if (!seen.insert(best).second) continue;
        out.push_back(from_pairs(n, edges));
    }
    return out;
}

inline std::vector<MonomialSet> exhaustive(int max_n) {
    std::vector<MonomialSet> out;
    for (int n = 1; n <= max_n; ++n) {
        auto part = connected_loop_graphs(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// connected graph on n vertices: random spanning tree plus extra edges and loops
inline MonomialSet random_cohesive(std::mt19937& rng, int n, double edge_p = 0.3, double loop_p = 0.25) {
    std::bernoulli_distribution edge(edge_p), loop(loop_p);
    std::set<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v) {
        int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        pairs.emplace(u, v);
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (edge(rng)) pairs.emplace(a, b);
    for (int v = 0; v < n; ++v)
        if (loop(rng)) pairs.emplace(v, v);
    if (n == 1) pairs.emplace(0, 0);
    // shuffle the vertex names so the tree is not always rooted at x1
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : pairs) out.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
    return from_pairs(n, out);
}

inline std::vector<MonomialSet> random_family(std::uint32_t seed, int count, int min_n, int max_n) {
    std::mt19937 rng(seed);
    std::vector<MonomialSet> out;
    for (int k = 0; k < count; ++k) {
        int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
        out.push_back(random_cohesive(rng, n));
    }
    return out;
}

// the exhaustive family on n <= 5 followed by 100 random cohesive graphs with n <= 7
inline std::vector<MonomialSet> acceptance_family() {
    auto out = exhaustive(5);
    auto extra = random_family(20261016u, 100, 3, 7);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

}  // namespace sweep
