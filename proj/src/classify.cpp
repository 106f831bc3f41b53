#include <algorithm>
#include <map>
#include <set>

#include "polsyz/walks.hpp"

namespace polsyz {

std::string kind_name(WalkKind k) {
    switch (k) {
        case WalkKind::EvenCycle: return "cycle";
        case WalkKind::CycleArrangement: return "arrangement";
        case WalkKind::Molecule: return "molecule";
    }
    return "?";
}

namespace {

// positions of a closed sub-walk of w, in traversal order
using Segment = std::vector<int>;

struct Peeler {
    const Walk& w;
    int len;
    WalkClass out;

    explicit Peeler(const Walk& walk) : w(walk), len(walk.length()) {}

    int start(int p) const { return w.vertices[p]; }
    int end(int p) const { return w.vertices[(p + 1) % len]; }
    int edge(int p) const { return w.edges[p]; }

    // stack decomposition of a closed segment into simple cycles
    std::optional<std::vector<Cycle>> cycles_from(const Segment& seg) const {
        std::vector<int> vstack{start(seg[0])};
        std::vector<int> estack;
        std::vector<Cycle> cycles;
        for (int p : seg) {
            if (start(p) != vstack.back()) return std::nullopt;
            estack.push_back(edge(p));
            int u = end(p);
            auto it = std::find(vstack.begin(), vstack.end(), u);
            if (it == vstack.end()) {
                vstack.push_back(u);
                continue;
            }
            std::size_t d = it - vstack.begin();
            Cycle c;
            c.vertices.assign(vstack.begin() + d, vstack.end());
            c.edges.assign(estack.begin() + d, estack.end());
            vstack.resize(d + 1);
            estack.resize(d);
            cycles.push_back(std::move(c));
        }
        if (vstack.size() != 1 || !estack.empty()) return std::nullopt;
        return cycles;
    }

    std::optional<std::vector<Cycle>> arrangement_from(const Segment& seg) const {
        int k = static_cast<int>(seg.size());
        for (int s = 0; s < k; ++s) {
            Segment rot(k);
            for (int t = 0; t < k; ++t) rot[t] = seg[(s + t) % k];
            auto cs = cycles_from(rot);
            if (cs && satisfies_cycle_arrangement(*cs)) return cs;
        }
        return std::nullopt;
    }

    bool add_arrangement(const Segment& seg) {
        auto cs = arrangement_from(seg);
        if (!cs) return false;
        std::vector<int> ids;
        for (auto& c : *cs) {
            ids.push_back(static_cast<int>(out.cycles.size()));
            out.cycles.push_back(std::move(c));
        }
        out.arrangements.push_back(ids);
        return true;
    }

    bool peel(Segment s) {
        int k = static_cast<int>(s.size());
        std::map<int, std::vector<int>> where;
        for (int i = 0; i < k; ++i) where[edge(s[i])].push_back(i);
        std::vector<bool> repeated(k, false);
        for (auto& [e, idx] : where) {
            if (idx.size() > 2) return false;
            if (idx.size() == 2) repeated[idx[0]] = repeated[idx[1]] = true;
        }
        if (std::none_of(repeated.begin(), repeated.end(), [](bool b) { return b; })) return add_arrangement(s);

        // a leaf: a repeated pair enclosing no repeated edge on one side
        int best_at = -1, best_gap = k + 1;
        for (auto& [e, idx] : where) {
            if (idx.size() != 2) continue;
            for (int side = 0; side < 2; ++side) {
                int a = side ? idx[1] : idx[0];
                int gap = ((side ? idx[0] - idx[1] : idx[1] - idx[0]) + k) % k;
                bool clean = gap > 1;
                for (int t = 1; t < gap && clean; ++t)
                    if (repeated[(a + t) % k]) clean = false;
                if (clean && gap < best_gap) {
                    best_gap = gap;
                    best_at = a;
                }
            }
        }
        if (best_at < 0) return false;
        Segment t(k);
        for (int i = 0; i < k; ++i) t[i] = s[(best_at + i) % k];
        int l = best_gap;
        if (end(t[0]) != start(t[l]) || start(t[0]) != end(t[l])) return false;

        Segment leaf(t.begin() + 1, t.begin() + l);
        std::vector<int> path{edge(t[0])};
        std::vector<int> pv{end(t[0]), start(t[0])};
        int kk = 0;
        while (l + 1 + kk < k - 1 - kk && edge(t[l + 1 + kk]) == edge(t[k - 1 - kk])) {
            if (start(t[k - 1 - kk]) != end(t[l + 1 + kk])) return false;
            path.push_back(edge(t[l + 1 + kk]));
            pv.push_back(end(t[l + 1 + kk]));
            ++kk;
        }
        Segment rest(t.begin() + l + 1 + kk, t.begin() + (k - kk));
        if (rest.empty()) return false;
        if (!add_arrangement(leaf)) return false;
        out.paths.push_back(path);
        out.path_vertices.push_back(pv);
        return peel(rest);
    }
};

std::set<int> vertex_set(const Cycle& c) { return {c.vertices.begin(), c.vertices.end()}; }

bool meets(const std::set<int>& a, const std::set<int>& b) {
    for (int x : a)
        if (b.count(x)) return true;
    return false;
}

}  // namespace

bool satisfies_cycle_arrangement(const std::vector<Cycle>& cycles) {
    std::map<int, int> in_cycles;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        auto vi = vertex_set(cycles[i]);
        if (vi.size() != cycles[i].vertices.size()) return false;
        for (int v : vi) in_cycles[v]++;
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            for (int e : cycles[i].edges)
                if (std::count(cycles[j].edges.begin(), cycles[j].edges.end(), e)) return false;  // C1
            int common = 0;
            for (int v : cycles[j].vertices) common += static_cast<int>(vi.count(v));
            if (common > 1) return false;  // C2
        }
    }
    for (auto& [v, c] : in_cycles)
        if (c > 2) return false;  // C3
    return true;
}

bool satisfies_molecule(const WalkClass& c) {
    int r = static_cast<int>(c.arrangements.size());
    if (r < 2 || static_cast<int>(c.paths.size()) != r - 1) return false;
    std::vector<std::set<int>> av(r);
    std::vector<std::map<int, int>> mult(r);  // vertex -> number of cycles of that arrangement
    std::vector<std::set<int>> aedges(r);
    for (int a = 0; a < r; ++a) {
        std::vector<Cycle> cs;
        for (int id : c.arrangements[a]) {
            cs.push_back(c.cycles[id]);
            for (int v : c.cycles[id].vertices) {
                av[a].insert(v);
                mult[a][v]++;
            }
            for (int e : c.cycles[id].edges) aedges[a].insert(e);
        }
        if (!satisfies_cycle_arrangement(cs)) return false;
    }
    std::vector<std::set<int>> pv;
    for (const auto& p : c.path_vertices) {
        std::set<int> s(p.begin(), p.end());
        if (s.size() != p.size() || p.size() < 2) return false;
        pv.push_back(s);
    }
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int e : aedges[a])
                if (aedges[b].count(e)) return false;  // M1
    for (std::size_t p = 0; p < pv.size(); ++p)
        for (std::size_t q = p + 1; q < pv.size(); ++q)
            if (meets(pv[p], pv[q])) return false;  // M2
    std::vector<int> paths_met(r, 0);
    for (std::size_t p = 0; p < pv.size(); ++p) {
        int met = 0;
        for (int a = 0; a < r; ++a) {
            int common = 0;
            for (int v : pv[p])
                if (av[a].count(v)) {
                    ++common;
                    // M6, arrangement and path
                    if (mult[a][v] != 1) return false;
                    if (v != c.path_vertices[p].front() && v != c.path_vertices[p].back()) return false;
                }
            if (common > 1) return false;  // M3
            if (common == 1) {
                ++met;
                ++paths_met[a];
            }
        }
        if (met != 2) return false;  // M4
    }
    for (int a = 0; a < r; ++a)
        if (paths_met[a] == 0) return false;  // M4
    std::map<int, int> in_arr;
    for (int a = 0; a < r; ++a)
        for (int v : av[a]) in_arr[v]++;
    for (auto& [v, k] : in_arr) {
        if (k > 2) return false;  // M5
        if (k == 2)
            for (int a = 0; a < r; ++a)
                if (av[a].count(v) && mult[a][v] != 1) return false;  // M6
    }
    return true;
}

std::optional<WalkClass> classify_configuration(const Walk& w) {
    Peeler p(w);
    Segment all(w.length());
    for (int i = 0; i < w.length(); ++i) all[i] = i;
    if (!p.peel(all)) return std::nullopt;
    WalkClass c = std::move(p.out);
    if (c.paths.empty()) {
        c.kind = c.cycles.size() == 1 ? WalkKind::EvenCycle : WalkKind::CycleArrangement;
        if (c.kind == WalkKind::EvenCycle && c.cycles[0].odd()) return std::nullopt;
    } else {
        c.kind = WalkKind::Molecule;
        if (!satisfies_molecule(c)) return std::nullopt;
    }
    int total = 0;
    for (const auto& cy : c.cycles) total += cy.length();
    for (const auto& p : c.paths) total += 2 * static_cast<int>(p.size());
    if (total != w.length()) return std::nullopt;
    return c;
}

WalkClass classify_non_split(const Walk& w) {
    if (split_decomposition(w)) throw WalkError("walk splits");
    auto c = classify_configuration(w);
    if (!c) throw UnclassifiableWalk("non-split walk is neither a cycle arrangement nor a molecule");
    return *c;
}

bool only_constituent_cycles(const WalkClass& c, const LoopGraph& g) {
    std::vector<int> edges;
    for (const auto& cy : c.cycles) edges.insert(edges.end(), cy.edges.begin(), cy.edges.end());
    for (const auto& p : c.paths) edges.insert(edges.end(), p.begin(), p.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    MonomialSet sub;
    sub.n = g.n();
    for (int e : edges) sub.gens.push_back(g.gen(e));
    LoopGraph h(sub);
    std::set<std::vector<int>> constituent;
    for (const auto& cy : c.cycles) constituent.insert(cy.key());
    for (const auto& cy : enumerate_simple_cycles(h, h.n(), true)) {
        std::vector<int> mapped;
        for (int e : cy.edges) mapped.push_back(edges[e]);
        if (!constituent.count(canonical_form(mapped))) return false;
    }
    return true;
}

int Skeleton::black_count() const {
    int b = 0;
    for (const auto& x : nodes) b += x.black;
    return b;
}

Skeleton build_skeleton(const WalkClass& c) {
    Skeleton s;
    std::vector<std::set<int>> vs;
    for (std::size_t i = 0; i < c.cycles.size(); ++i) {
        s.nodes.push_back({c.cycles[i].odd(), static_cast<int>(i), -1, -1});
        vs.push_back(vertex_set(c.cycles[i]));
    }
    for (std::size_t p = 0; p < c.paths.size(); ++p)
        for (std::size_t k = 0; k < c.paths[p].size(); ++k) {
            s.nodes.push_back({false, -1, static_cast<int>(p), static_cast<int>(k)});
            vs.push_back({c.path_vertices[p][k], c.path_vertices[p][k + 1]});
        }
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (meets(vs[a], vs[b])) s.links.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return s;
}

bool skeleton_non_split(const Skeleton& s) {
    int k = static_cast<int>(s.nodes.size());
    if (static_cast<int>(s.links.size()) != k - 1) return false;
    // black count on the side of a, with link `skip` removed; -1 if b is reachable too
    auto side_black = [&](int skip, int from) {
        std::vector<bool> seen(k, false);
        std::vector<int> stack{from};
        seen[from] = true;
        int black = 0, count = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++count;
            black += s.nodes[x].black;
            for (int i = 0; i < static_cast<int>(s.links.size()); ++i) {
                if (i == skip) continue;
                auto [a, b] = s.links[i];
                int y = a == x ? b : (b == x ? a : -1);
                if (y >= 0 && !seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        return std::make_pair(black, count);
    };
    if (k == 0 || side_black(-1, 0).second != k) return false;
    for (int i = 0; i < static_cast<int>(s.links.size()); ++i) {
        auto [a, b] = s.links[i];
        auto [ba, ca] = side_black(i, a);
        auto [bb, cb] = side_black(i, b);
        if (ca + cb != k) return false;
        if (ba % 2 == 0 || bb % 2 == 0) return false;
    }
    return true;
}

}  // namespace polsyz
