#include "polsyz/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <optional>

namespace polsyz {

std::vector<int> Monomial2::exponents(int n) const {
    std::vector<int> e(n, 0);
    ++e[lo];
    ++e[hi];
    return e;
}

std::vector<int> MonomialSet::unused_vars() const {
    std::vector<bool> used(n, false);
    for (const auto& g : gens) used[g.lo] = used[g.hi] = true;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (!used[v]) out.push_back(v);
    return out;
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<long> to_int(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// x<i>*x<j>, x<i>^2 and longer products; returns variable -> exponent
std::map<long, long> parse_product(std::string_view s, int line) {
    std::map<long, long> exps;
    std::size_t start = 0;
    while (true) {
        std::size_t star = s.find('*', start);
        std::string_view factor = trim(s.substr(start, star == std::string_view::npos ? s.npos : star - start));
        if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'X'))
            throw ParseError(line, "malformed token '" + std::string(factor) + "'");
        factor.remove_prefix(1);
        long power = 1;
        std::size_t caret = factor.find('^');
        if (caret != std::string_view::npos) {
            auto pw = to_int(factor.substr(caret + 1));
            if (!pw || *pw < 0) throw ParseError(line, "malformed exponent in '" + std::string(s) + "'");
            power = *pw;
            factor = factor.substr(0, caret);
        }
        auto idx = to_int(factor);
        if (!idx) throw ParseError(line, "malformed token '" + std::string(s) + "'");
        if (*idx < 1) throw ParseError(line, "variable index must be at least 1");
        exps[*idx] += power;
        if (star == std::string_view::npos) break;
        start = star + 1;
    }
    return exps;
}

}  // namespace

MonomialSet parse_monomial_set(std::string_view text) {
    std::optional<long> declared;
    std::vector<std::pair<long, long>> pairs;
    std::vector<int> lines;
    int line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string_view s = trim(raw);
        if (s.empty()) continue;

        if (s.substr(0, 4) == "vars" && (s.size() == 4 || std::isspace(static_cast<unsigned char>(s[4])))) {
            if (declared) throw ParseError(line, "repeated vars header");
            auto v = to_int(s.substr(4));
            if (!v || *v < 1) throw ParseError(line, "malformed vars header");
            declared = *v;
            continue;
        }

        long a = 0, b = 0;
        if (s[0] == 'x' || s[0] == 'X') {
            auto exps = parse_product(s, line);
            long degree = 0;
            for (auto [v, e] : exps) degree += e;
            if (degree != 2) throw ParseError(line, "degree " + std::to_string(degree) + " monomial, expected 2");
            a = exps.begin()->first;
            b = exps.rbegin()->first;
        } else {
            auto toks = split_ws(s);
            if (toks.size() != 2) throw ParseError(line, "malformed line '" + std::string(s) + "'");
            auto x = to_int(toks[0]), y = to_int(toks[1]);
            if (!x || !y) throw ParseError(line, "malformed line '" + std::string(s) + "'");
            if (*x < 1 || *y < 1) throw ParseError(line, "variable index must be at least 1");
            a = std::min(*x, *y);
            b = std::max(*x, *y);
        }
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k] == std::make_pair(a, b))
                throw ParseError(line, "duplicate monomial (first seen on line " + std::to_string(lines[k]) + ")");
        pairs.emplace_back(a, b);
        lines.push_back(line);
    }

    long n = declared.value_or(0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (declared && pairs[k].second > *declared)
            throw ParseError(lines[k], "variable index exceeds declared vars");
        n = std::max(n, pairs[k].second);
    }
    MonomialSet f;
    f.n = static_cast<int>(n);
    for (auto [a, b] : pairs) f.gens.push_back({static_cast<int>(a - 1), static_cast<int>(b - 1)});
    return f;
}

MonomialSet read_monomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_monomial_set(ss.str());
}

MonomialSet make_monomial_set(int n, const std::vector<std::pair<int, int>>& pairs) {
    MonomialSet f;
    f.n = n;
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("variable index out of range");
        Monomial2 g{std::min(a, b), std::max(a, b)};
        if (std::find(f.gens.begin(), f.gens.end(), g) != f.gens.end())
            throw std::invalid_argument("duplicate monomial " + monomial_name(g));
        f.gens.push_back(g);
    }
    return f;
}

std::string monomial_name(const Monomial2& g) {
    if (g.loop()) return "x" + std::to_string(g.lo + 1) + "^2";
    return "x" + std::to_string(g.lo + 1) + "*x" + std::to_string(g.hi + 1);
}

std::string to_mon(const MonomialSet& f) {
    std::string out = "vars " + std::to_string(f.n) + "\n";
    for (const auto& g : f.gens) out += monomial_name(g) + "\n";
    return out;
}

LoopGraph::LoopGraph(MonomialSet f)
    : f_(std::move(f)), adj_(f_.n), inc_(f_.n), index_(static_cast<std::size_t>(f_.n) * f_.n, -1) {
    for (int j = 0; j < f_.m(); ++j) {
        const auto& g = f_.gens[j];
        index_[g.lo * f_.n + g.hi] = index_[g.hi * f_.n + g.lo] = j;
        inc_[g.lo].push_back(j);
        if (g.loop()) {
            adj_[g.lo].push_back(g.lo);
        } else {
            inc_[g.hi].push_back(j);
            adj_[g.lo].push_back(g.hi);
            adj_[g.hi].push_back(g.lo);
        }
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Cohesion is_cohesive(const LoopGraph& g) {
    Cohesion c;
    int n = g.n();
    std::vector<int> comp(n, -1);
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (!g.covered(v)) c.isolated.push_back(v);
        else if (start < 0) start = v;
    }
    if (start < 0) return c;
    std::deque<int> q{start};
    comp[start] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : g.neighbors(v))
            if (comp[u] < 0) {
                comp[u] = 0;
                q.push_back(u);
            }
    }
    for (int v = 0; v < n; ++v) {
        if (!g.covered(v)) continue;
        (comp[v] == 0 ? c.side_a : c.side_b).push_back(v);
    }
    c.cohesive = c.side_b.empty();
    if (c.cohesive) c.side_a.clear();
    return c;
}

namespace {
std::string describe(const Cohesion& c) {
    std::string s = "generators are not cohesive: {";
    for (std::size_t k = 0; k < c.side_a.size(); ++k) s += (k ? "," : "") + std::string("x") + std::to_string(c.side_a[k] + 1);
    s += "} | {";
    for (std::size_t k = 0; k < c.side_b.size(); ++k) s += (k ? "," : "") + std::string("x") + std::to_string(c.side_b[k] + 1);
    return s + "}";
}
}  // namespace

IncohesiveError::IncohesiveError(Cohesion witness) : std::runtime_error(describe(witness)), witness_(std::move(witness)) {}

void require_cohesive(const LoopGraph& g) {
    if (g.m() == 0) throw std::invalid_argument("empty generator set");
    auto c = is_cohesive(g);
    if (!c.cohesive) throw IncohesiveError(c);
}

int SimpleGraph::edge_count() const {
    int e = 0;
    for (const auto& a : adj) e += static_cast<int>(a.size());
    return e / 2;
}

SimpleGraph edge_graph(const LoopGraph& g) {
    SimpleGraph l;
    l.n = g.m();
    l.adj.resize(l.n);
    for (int i = 0; i < l.n; ++i)
        for (int j = i + 1; j < l.n; ++j) {
            const auto &a = g.gen(i), &b = g.gen(j);
            if (a.has(b.lo) || a.has(b.hi)) {
                l.adj[i].push_back(j);
                l.adj[j].push_back(i);
            }
        }
    return l;
}

std::optional<int> graph_diameter(const SimpleGraph& g) {
    int best = 0;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.adj[v])
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
        }
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

bool is_linearly_presented(const MonomialSet& f) {
    LoopGraph g(f);
    require_cohesive(g);
    auto d = graph_diameter(edge_graph(g));
    return d && *d <= 2;
}

Bipartition is_bipartite(const LoopGraph& g) {
    Bipartition out;
    for (int v = 0; v < g.n(); ++v)
        if (g.has_loop(v)) {
            out.bipartite = false;
            out.odd_cycle = {v};
            return out;
        }
    int n = g.n();
    out.color.assign(n, -1);
    std::vector<int> parent(n, -1), depth(n, 0);
    for (int s = 0; s < n; ++s) {
        if (out.color[s] >= 0) continue;
        out.color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.neighbors(v)) {
                if (out.color[u] < 0) {
                    out.color[u] = 1 - out.color[v];
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    q.push_back(u);
                } else if (out.color[u] == out.color[v]) {
                    // climb both tree paths to the common ancestor
                    std::vector<int> left{v}, right{u};
                    int a = v, b = u;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            a = parent[a];
                            left.push_back(a);
                        } else {
                            b = parent[b];
                            right.push_back(b);
                        }
                    }
                    if (right.back() == a) right.pop_back();
                    if (left.back() != a) left.push_back(a);
                    out.odd_cycle = left;
                    out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
                    out.bipartite = false;
                    out.color.clear();
                    return out;
                }
            }
        }
    }
    return out;
}

bool complement_has_induced_c4(const LoopGraph& g) {
    int n = g.n();
    for (int v = 0; v < n; ++v)
        if (g.has_loop(v)) throw std::invalid_argument("complement test needs a graph without loops");
    auto in_comp = [&](int a, int b) { return !g.adjacent(a, b); };
    // an induced 4-cycle a-b-c-d in the complement is a 2K2 {ac, bd} in g
    std::vector<int> s(4);
    for (s[0] = 0; s[0] < n; ++s[0])
        for (s[1] = s[0] + 1; s[1] < n; ++s[1])
            for (s[2] = s[1] + 1; s[2] < n; ++s[2])
                for (s[3] = s[2] + 1; s[3] < n; ++s[3]) {
                    int e = 0;
                    int deg[4] = {0, 0, 0, 0};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (in_comp(s[i], s[j])) {
                                ++e;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (e == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2) return true;
                }
    return false;
}

IntMatrix log_matrix(const MonomialSet& f) {
    IntMatrix a;
    for (const auto& g : f.gens) {
        IntVec row(f.n, 0);
        ++row[g.lo];
        ++row[g.hi];
        a.push_back(row);
    }
    return a;
}

int algebra_dimension(const MonomialSet& f) { return static_cast<int>(rank(log_matrix(f))); }

PinchResult pinch(const MonomialSet& f, int i, int j) {
    LoopGraph g(f);
    if (i < 0 || j < 0 || i >= f.n || j >= f.n || i == j || !g.adjacent(i, j))
        throw std::invalid_argument("pinch needs a proper edge");
    auto relabel = [&](int v) {
        if (v == j) v = i;
        return v > j ? v - 1 : v;
    };
    PinchResult out;
    out.set.n = f.n - 1;
    for (int k = 0; k < f.m(); ++k) {
        int a = relabel(f.gens[k].lo), b = relabel(f.gens[k].hi);
        Monomial2 h{std::min(a, b), std::max(a, b)};
        auto it = std::find(out.set.gens.begin(), out.set.gens.end(), h);
        if (it == out.set.gens.end()) {
            out.image.push_back(out.set.m());
            out.set.gens.push_back(h);
        } else {
            int target = static_cast<int>(it - out.set.gens.begin());
            for (int prev = 0; prev < k; ++prev)
                if (out.image[prev] == target) {
                    out.collapsed.emplace_back(prev, k);
                    break;
                }
            out.image.push_back(target);
        }
    }
    return out;
}

std::string to_dot(const LoopGraph& g) {
    std::string s = "graph G {\n";
    for (int v = 0; v < g.n(); ++v) s += "  x" + std::to_string(v + 1) + ";\n";
    for (int j = 0; j < g.m(); ++j) {
        const auto& e = g.gen(j);
        s += "  x" + std::to_string(e.lo + 1) + " -- x" + std::to_string(e.hi + 1) + " [label=\"f" +
             std::to_string(j + 1) + "\"];\n";
    }
    return s + "}\n";
}

std::string to_dot(const SimpleGraph& l, const MonomialSet& f) {
    std::string s = "graph L {\n";
    for (int j = 0; j < l.n; ++j)
        s += "  f" + std::to_string(j + 1) + " [label=\"" + monomial_name(f.gens[j]) + "\"];\n";
    for (int j = 0; j < l.n; ++j)
        for (int k : l.adj[j])
            if (j < k) s += "  f" + std::to_string(j + 1) + " -- f" + std::to_string(k + 1) + ";\n";
    return s + "}\n";
}

}  // namespace polsyz
