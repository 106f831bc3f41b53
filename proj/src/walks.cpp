#include "polsyz/walks.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polsyz {

std::vector<int> canonical_form(const std::vector<int>& edges, int* orientation) {
    int len = static_cast<int>(edges.size());
    std::vector<int> best = edges, cand(len);
    int best_shift = 0;
    for (int rev = 0; rev < 2; ++rev)
        for (int s = 0; s < len; ++s) {
            for (int k = 0; k < len; ++k) cand[k] = rev ? edges[((s - k) % len + len) % len] : edges[(s + k) % len];
            if (cand < best || (cand == best && (s % 2 == 0) && (best_shift % 2 == 1))) {
                best = cand;
                best_shift = s;
            }
        }
    if (orientation) *orientation = (best_shift % 2 == 0) ? 1 : -1;
    return best;
}

namespace {

// the variable shared by two distinct generators, -1 if none
int shared_vertex(const Monomial2& a, const Monomial2& b) {
    if (b.has(a.lo)) return a.lo;
    if (b.has(a.hi)) return a.hi;
    return -1;
}

}  // namespace

std::optional<std::vector<int>> vertex_sequence(const MonomialSet& f, const std::vector<int>& edges) {
    int len = static_cast<int>(edges.size());
    if (len < 2) return std::nullopt;
    std::vector<int> v(len);
    for (int j = 0; j < len; ++j) {
        int prev = edges[(j + len - 1) % len];
        if (prev == edges[j]) return std::nullopt;
        v[j] = shared_vertex(f.gens[prev], f.gens[edges[j]]);
        if (v[j] < 0) return std::nullopt;
    }
    for (int j = 0; j < len; ++j) {
        const auto& g = f.gens[edges[j]];
        int a = v[j], b = v[(j + 1) % len];
        if (!(g.lo == std::min(a, b) && g.hi == std::max(a, b))) return std::nullopt;
    }
    return v;
}

Walk make_walk(const MonomialSet& f, const std::vector<int>& edges) {
    int len = static_cast<int>(edges.size());
    if (len % 2 != 0) throw WalkError("walk length must be even");
    if (len < 4) throw WalkError("walk length must be at least 4");
    for (int e : edges)
        if (e < 0 || e >= f.m()) throw WalkError("generator index out of range");
    for (int j = 0; j < len; ++j) {
        int a = edges[j], b = edges[(j + 1) % len];
        if (a == b) throw WalkError("immediate repetition of f" + std::to_string(a + 1));
        if (shared_vertex(f.gens[a], f.gens[b]) < 0)
            throw WalkError("f" + std::to_string(a + 1) + " and f" + std::to_string(b + 1) + " share no variable");
    }
    auto v = vertex_sequence(f, edges);
    if (!v) throw WalkError("edge sequence does not trace a closed walk");
    Walk w;
    w.edges = edges;
    w.vertices = *v;
    w.canonical = canonical_form(edges, &w.orientation);
    return w;
}

std::optional<Split> split_decomposition(const Walk& w) {
    int len = w.length(), r = len / 2;
    const auto& e = w.edges;
    const auto& v = w.vertices;
    auto at = [&](int k) { return ((k % len) + len) % len; };
    for (int a = 0; a < len; ++a)
        for (int k = 1; k < r; ++k)
            if (v[a] == v[at(a + 2 * k)]) {
                Split s;
                s.vertex = v[a];
                for (int t = 0; t < 2 * k; ++t) s.first.push_back(e[at(a + t)]);
                for (int t = 2 * k; t < len; ++t) s.second.push_back(e[at(a + t)]);
                return s;
            }
    for (int j = 0; j < len; ++j)
        for (int l = j + 1; l < len; ++l) {
            if (e[j] != e[l] || v[j] != v[l] || (l - j) % 2 == 0) continue;
            Split s;
            s.kind = SplitKind::SenseRepetition;
            s.vertex = v[j];
            for (int t = j + 1; t < l; ++t) s.first.push_back(e[t]);
            for (int t = j + len - 1; t > l; --t) s.first.push_back(e[at(t)]);
            s.second = {e[j], e[j]};
            return s;
        }
    return std::nullopt;
}

bool RecurrenceReport::all_hold() const {
    for (const auto& x : vertices)
        if (!x.exactly_twice || !x.opposite_parity) return false;
    for (const auto& x : edges)
        if (!x.exactly_twice || !x.even_gap || !x.sense_reversing) return false;
    return true;
}

RecurrenceReport recurrence_report(const Walk& w) {
    int len = w.length();
    RecurrenceReport rep;
    std::map<int, std::vector<int>> vpos, epos;
    for (int j = 0; j < len; ++j) {
        vpos[w.vertices[j]].push_back(j);
        epos[w.edges[j]].push_back(j);
    }
    for (auto& [x, ps] : vpos) {
        if (ps.size() < 2) continue;
        VertexRecurrence r{x, ps, ps.size() == 2, true};
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = a + 1; b < ps.size(); ++b)
                if ((ps[b] - ps[a]) % 2 == 0) r.opposite_parity = false;
        rep.vertices.push_back(r);
    }
    for (auto& [x, ps] : epos) {
        if (ps.size() < 2) continue;
        EdgeRecurrence r{x, ps, ps.size() == 2, true, true};
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = a + 1; b < ps.size(); ++b) {
                int j = ps[a], l = ps[b];
                if ((l - j) % 2 != 0) r.even_gap = false;
                bool reversed = w.vertices[j] == w.vertices[(l + 1) % len] && w.vertices[(j + 1) % len] == w.vertices[l] &&
                                w.vertices[j] != w.vertices[l];
                if (!reversed) r.sense_reversing = false;
            }
        rep.edges.push_back(r);
    }
    return rep;
}

std::vector<Cycle> enumerate_simple_cycles(const LoopGraph& g, int max_len, bool with_loops) {
    std::vector<Cycle> out;
    int n = g.n();
    if (with_loops)
        for (int v = 0; v < n; ++v)
            if (g.has_loop(v)) out.push_back({{v}, {g.edge_index(v, v)}});
    std::vector<int> path;
    std::vector<bool> on(n, false);
    // cycles through their smallest vertex s, second vertex smaller than the last
    auto dfs = [&](auto&& self, int s, int v) -> void {
        for (int u : g.neighbors(v)) {
            if (u == v) continue;
            if (u == s && path.size() >= 3 && path[1] < path.back()) {
                Cycle c;
                c.vertices = path;
                for (std::size_t k = 0; k < path.size(); ++k)
                    c.edges.push_back(g.edge_index(path[k], path[(k + 1) % path.size()]));
                out.push_back(std::move(c));
            }
            if (u <= s || on[u] || static_cast<int>(path.size()) >= max_len) continue;
            on[u] = true;
            path.push_back(u);
            self(self, s, u);
            path.pop_back();
            on[u] = false;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on[s] = true;
        dfs(dfs, s, s);
        on[s] = false;
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.key() < b.key();
    });
    return out;
}

std::vector<Walk> enumerate_even_cycles(const LoopGraph& g, int max_len) {
    std::vector<Walk> out;
    for (const auto& c : enumerate_simple_cycles(g, max_len, false))
        if (c.length() % 2 == 0) out.push_back(make_walk(g.gens(), c.key()));
    return out;
}

namespace {

bool walk_less(const Walk& a, const Walk& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.canonical < b.canonical;
}

struct WalkDfs {
    const LoopGraph& g;
    const WalkSearch& opts;
    std::vector<int> verts, edges, ecount;
    std::vector<std::vector<int>> vocc;
    std::set<std::vector<int>> seen;
    std::vector<Walk> found;
    int start_edge = 0;

    WalkDfs(const LoopGraph& graph, const WalkSearch& o) : g(graph), opts(o), ecount(graph.m(), 0), vocc(graph.n()) {}

    bool allowed(int e) const { return opts.allowed_edges.empty() || opts.allowed_edges[e]; }
    int cap(int v) const { return opts.vertex_caps.empty() ? 1 << 20 : opts.vertex_caps[v]; }

    void try_close() {
        Walk w;
        w.edges = edges;
        w.vertices = verts;
        w.vertices.pop_back();
        w.canonical = canonical_form(w.edges, &w.orientation);
        if (seen.count(w.canonical)) return;
        if (opts.non_split_only && !recurrence_report(w).all_hold()) return;
        seen.insert(w.canonical);
        // store the canonical representative itself
        auto v = vertex_sequence(g.gens(), w.canonical);
        Walk c;
        c.edges = w.canonical;
        c.vertices = *v;
        c.canonical = w.canonical;
        c.orientation = 1;
        found.push_back(std::move(c));
    }

    void step() {
        int p = static_cast<int>(edges.size());
        int c = verts.back();
        int last = edges.back();
        for (int e : g.incident(c)) {
            if (e == last || e < start_edge || !allowed(e) || ecount[e] >= 2) continue;
            int u = g.gen(e).other(c);
            if (opts.non_split_only && ecount[e] == 1) {
                int q = static_cast<int>(std::find(edges.begin(), edges.end(), e) - edges.begin());
                if ((p - q) % 2 != 0 || verts[q] != u || verts[q + 1] != c || u == c) continue;
            }
            ecount[e]++;
            edges.push_back(e);
            verts.push_back(u);
            int len = p + 1;
            if (u == verts[0] && len % 2 == 0 && len >= 4 && e != edges[0]) try_close();
            if (len < opts.max_len) {
                auto& occ = vocc[u];
                bool ok = static_cast<int>(occ.size()) < cap(u);
                if (opts.non_split_only) {
                    if (occ.size() >= 2) ok = false;
                    if (occ.size() == 1 && (len - occ[0]) % 2 == 0) ok = false;
                }
                if (ok) {
                    occ.push_back(len);
                    step();
                    occ.pop_back();
                }
            }
            verts.pop_back();
            edges.pop_back();
            ecount[e]--;
        }
    }

    void run() {
        for (int s = 0; s < g.m(); ++s) {
            if (!allowed(s)) continue;
            start_edge = s;
            const auto& gs = g.gen(s);
            std::vector<std::pair<int, int>> dirs{{gs.lo, gs.hi}};
            if (!gs.loop()) dirs.push_back({gs.hi, gs.lo});
            for (auto [a, b] : dirs) {
                if (cap(a) < 1 || cap(b) < (a == b ? 2 : 1)) continue;
                verts = {a, b};
                edges = {s};
                ecount[s] = 1;
                vocc[a].push_back(0);
                vocc[b].push_back(1);
                step();
                vocc[b].pop_back();
                vocc[a].pop_back();
                ecount[s] = 0;
            }
        }
        std::sort(found.begin(), found.end(), walk_less);
    }
};

}  // namespace

std::vector<Walk> enumerate_walks(const LoopGraph& g, const WalkSearch& opts) {
    WalkDfs dfs(g, opts);
    dfs.run();
    return std::move(dfs.found);
}

std::vector<Walk> enumerate_non_split_walks(const LoopGraph& g, int max_len, const std::vector<bool>& allowed_edges) {
    WalkSearch opts;
    opts.max_len = max_len;
    opts.allowed_edges = allowed_edges;
    return enumerate_walks(g, opts);
}

}  // namespace polsyz
