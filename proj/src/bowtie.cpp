#include "polsyz/bowtie.hpp"

#include <algorithm>
#include <set>

namespace polsyz {

std::vector<int> BowTie::vertices() const {
    std::set<int> s(cycle1.vertices.begin(), cycle1.vertices.end());
    s.insert(cycle2.vertices.begin(), cycle2.vertices.end());
    s.insert(path_vertices.begin(), path_vertices.end());
    return {s.begin(), s.end()};
}

std::vector<int> BowTie::key() const {
    std::vector<int> seq;
    auto put = [&](const Cycle& c, int at) {
        int k = c.length();
        int s = static_cast<int>(std::find(c.vertices.begin(), c.vertices.end(), at) - c.vertices.begin());
        for (int t = 0; t < k; ++t) seq.push_back(c.edges[(s + t) % k]);
    };
    put(cycle1, path_vertices.front());
    seq.insert(seq.end(), path.begin(), path.end());
    put(cycle2, path_vertices.back());
    seq.insert(seq.end(), path.rbegin(), path.rend());
    return canonical_form(seq);
}

int BowTie::degree() const {
    return static_cast<int>(vertices().size()) + cycle1.is_loop() + cycle2.is_loop();
}

const char* bowtie_kind_name(BowTieKind k) {
    switch (k) {
        case BowTieKind::General: return "general";
        case BowTieKind::Monedge: return "monedge";
        case BowTieKind::PathDegenerate: return "path_degenerate";
    }
    return "?";
}

BowTieClass classify_bowtie(const BowTie& b) {
    BowTieClass c;
    c.kind = b.path.empty() ? BowTieKind::PathDegenerate : (b.path.size() == 1 ? BowTieKind::Monedge : BowTieKind::General);
    c.loops = b.cycle1.is_loop() + b.cycle2.is_loop();
    return c;
}

Walk bowtie_walk(const BowTie& b, const MonomialSet& f) { return make_walk(f, b.key()); }

bool polar_allowed(const BowTieClass& c) {
    return (c.kind == BowTieKind::Monedge && c.loops == 2) || (c.kind == BowTieKind::PathDegenerate && c.loops == 1);
}

bool normal_allowed(const BowTieClass& c) { return c.kind != BowTieKind::General; }

namespace {

bool chordless(const Cycle& c, const LoopGraph& g) {
    int k = c.length();
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if (g.adjacent(c.vertices[i], c.vertices[j])) return false;
        }
    return true;
}

std::vector<BowTie> bowties(const LoopGraph& g, bool induced, int max_cycle_len) {
    auto odd = enumerate_odd_cycles(g, induced, max_cycle_len);
    int n = g.n();
    std::vector<BowTie> out;
    std::set<std::vector<int>> seen;
    auto emit = [&](BowTie b) {
        if (induced && !is_induced_bowtie(b, g)) return;
        auto k = b.key();
        if (seen.insert(k).second) out.push_back(std::move(b));
    };
    for (std::size_t i = 0; i < odd.size(); ++i)
        for (std::size_t j = i + 1; j < odd.size(); ++j) {
            const Cycle &c1 = odd[i], &c2 = odd[j];
            bool disjoint_edges = true;
            for (int e : c1.edges)
                if (std::count(c2.edges.begin(), c2.edges.end(), e)) disjoint_edges = false;
            if (!disjoint_edges) continue;
            std::vector<int> side(n, 0);  // 1 on cycle1, 2 on cycle2, 3 on both
            for (int v : c1.vertices) side[v] |= 1;
            for (int v : c2.vertices) side[v] |= 2;
            std::vector<int> common;
            for (int v = 0; v < n; ++v)
                if (side[v] == 3) common.push_back(v);
            if (common.size() == 1) {
                emit({c1, c2, {common[0]}, {}});
                continue;
            }
            if (!common.empty()) continue;
            if (induced) {
                // an induced bow tie has no edge between its two cycles besides a one-edge path
                int cross = 0;
                for (int a : c1.vertices)
                    for (int b : c2.vertices) cross += g.adjacent(a, b);
                if (cross > 1) continue;
            }
            std::vector<int> pv;
            std::vector<bool> on(n, false);
            auto dfs = [&](auto&& self, int v) -> void {
                for (int u : g.neighbors(v)) {
                    if (u == v || on[u] || side[u] == 1) continue;
                    if (induced && side[u] == 0) {
                        // u must not touch cycle1 except through the start, nor earlier path vertices
                        bool bad = false;
                        for (int w : g.neighbors(u)) {
                            if (w == u || w == v) continue;
                            if (side[w] == 1 || (on[w] && w != v)) bad = true;
                        }
                        if (bad) continue;
                    }
                    pv.push_back(u);
                    if (side[u] == 2) {
                        BowTie b{c1, c2, pv, {}};
                        for (std::size_t k = 0; k + 1 < pv.size(); ++k) b.path.push_back(g.edge_index(pv[k], pv[k + 1]));
                        emit(std::move(b));
                    } else {
                        on[u] = true;
                        self(self, u);
                        on[u] = false;
                    }
                    pv.pop_back();
                }
            };
            for (int a : c1.vertices) {
                pv = {a};
                on[a] = true;
                dfs(dfs, a);
                on[a] = false;
            }
        }
    std::sort(out.begin(), out.end(), [](const BowTie& a, const BowTie& b) { return a.key() < b.key(); });
    return out;
}

}  // namespace

std::vector<Cycle> enumerate_odd_cycles(const LoopGraph& g, bool chordless_only, int max_len) {
    std::vector<Cycle> out;
    for (auto& c : enumerate_simple_cycles(g, max_len > 0 ? max_len : g.n(), true))
        if (c.odd() && (!chordless_only || chordless(c, g))) out.push_back(std::move(c));
    return out;
}

std::vector<BowTie> enumerate_bowties(const LoopGraph& g, int max_cycle_len) { return bowties(g, false, max_cycle_len); }
std::vector<BowTie> enumerate_induced_bowties(const LoopGraph& g) { return bowties(g, true, 0); }

bool is_induced_bowtie(const BowTie& b, const LoopGraph& g) {
    std::set<int> own(b.cycle1.edges.begin(), b.cycle1.edges.end());
    own.insert(b.cycle2.edges.begin(), b.cycle2.edges.end());
    own.insert(b.path.begin(), b.path.end());
    auto vs = b.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            int e = g.edge_index(vs[i], vs[j]);
            if (e >= 0 && !own.count(e)) return false;
        }
    return true;
}

OddCycleCheck odd_cycle_condition(const LoopGraph& g) {
    auto c = is_cohesive(g);
    if (!c.cohesive) throw IncohesiveError(c);
    OddCycleCheck out;
    auto odd = enumerate_odd_cycles(g, true);
    for (std::size_t i = 0; i < odd.size(); ++i)
        for (std::size_t j = i + 1; j < odd.size(); ++j) {
            std::set<int> a(odd[i].vertices.begin(), odd[i].vertices.end());
            bool disjoint = true, joined = false;
            for (int v : odd[j].vertices) {
                if (a.count(v)) disjoint = false;
                for (int u : a) joined = joined || g.adjacent(u, v);
            }
            if (disjoint && !joined) {
                out.holds = false;
                out.violation = std::make_pair(odd[i], odd[j]);
                return out;
            }
        }
    return out;
}

bool PolarReport::polarizable_up_to(int d) const {
    for (const auto& b : witnesses)
        if (b.degree() <= d) return false;
    return true;
}

PolarReport is_polarizable(const MonomialSet& f) {
    LoopGraph g(f);
    require_cohesive(g);
    PolarReport r;
    for (auto& b : enumerate_induced_bowties(g)) {
        auto c = classify_bowtie(b);
        if (!normal_allowed(c)) r.normality_witnesses.push_back(b);
        if (!polar_allowed(c)) r.witnesses.push_back(std::move(b));
    }
    r.polarizable = r.witnesses.empty();
    r.normal_by_bowties = r.normality_witnesses.empty();
    auto occ = odd_cycle_condition(g);
    r.odd_cycle_condition = occ.holds;
    r.normal = occ.holds;
    r.odd_cycle_violation = occ.violation;
    return r;
}

bool is_normal(const MonomialSet& f) { return is_polarizable(f).normal; }

}  // namespace polsyz
