#include <algorithm>
#include <map>

#include "polsyz/walks.hpp"

namespace polsyz {
namespace {

// nonempty, even size, connected, every vertex of even degree (a loop counts twice)
bool closes_up(const std::vector<int>& edges, const LoopGraph& g) {
    if (edges.empty() || edges.size() % 2 != 0) return false;
    std::map<int, int> deg;
    std::map<int, int> parent;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e : edges) {
        const auto& m = g.gen(e);
        deg[m.lo]++;
        deg[m.hi]++;
        if (!parent.count(m.lo)) parent[m.lo] = m.lo;
        if (!parent.count(m.hi)) parent[m.hi] = m.hi;
        parent[find(m.lo)] = find(m.hi);
    }
    int root = find(parent.begin()->first);
    for (auto& [v, d] : deg) {
        if (d % 2 != 0) return false;
        if (find(v) != root) return false;
    }
    return true;
}

bool contains(const std::map<int, int>& big, const std::map<int, int>& small) {
    for (auto& [e, c] : small) {
        auto it = big.find(e);
        if (it == big.end() || it->second < c) return false;
    }
    return true;
}

}  // namespace

std::optional<Decomposition> is_decomposable(const Walk& w, const LoopGraph& g, int max_set) {
    if (split_decomposition(w)) throw WalkError("decomposability is defined for non-split walks");
    std::map<int, int> whole;
    for (int e : w.edges) whole[e]++;
    std::vector<int> distinct, mult;
    for (auto& [e, c] : whole) {
        distinct.push_back(e);
        mult.push_back(c);
    }
    std::vector<bool> on_walk(g.n(), false);
    for (int v : w.vertices) on_walk[v] = true;
    std::vector<int> cand;
    for (int j = 0; j < g.m(); ++j) {
        const auto& m = g.gen(j);
        if (m.squarefree() && on_walk[m.lo] && on_walk[m.hi]) cand.push_back(j);
    }

    std::vector<int> h;
    std::optional<Decomposition> found;
    auto try_set = [&]() {
        std::vector<int> choice(distinct.size(), 0);
        while (true) {
            std::vector<int> a = h, b = h;
            std::map<int, int> ma, mb;
            for (std::size_t i = 0; i < distinct.size(); ++i) {
                for (int c = 0; c < choice[i]; ++c) a.push_back(distinct[i]);
                for (int c = choice[i]; c < mult[i]; ++c) b.push_back(distinct[i]);
            }
            for (int e : a) ma[e]++;
            for (int e : b) mb[e]++;
            if (closes_up(a, g) && closes_up(b, g) && !contains(ma, whole) && !contains(mb, whole)) {
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                found = Decomposition{h, a, b};
                return true;
            }
            std::size_t i = 0;
            while (i < choice.size() && choice[i] == mult[i]) choice[i++] = 0;
            if (i == choice.size()) return false;
            ++choice[i];
        }
    };
    auto pick = [&](auto&& self, std::size_t from, int size) -> bool {
        if (static_cast<int>(h.size()) == size) return try_set();
        for (std::size_t i = from; i < cand.size(); ++i) {
            h.push_back(cand[i]);
            if (self(self, i + 1, size)) return true;
            h.pop_back();
        }
        return false;
    };
    for (int size = 1; size <= max_set; ++size) {
        h.clear();
        if (pick(pick, 0, size)) return found;
    }
    return std::nullopt;
}

}  // namespace polsyz
