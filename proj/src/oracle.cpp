#include "polsyz/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polsyz {

int total_degree(const Degree& b) {
    int s = 0;
    for (int x : b) s += x;
    return s;
}

bool divides(const Degree& a, const Degree& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<int> divisors(const MonomialSet& f, const Degree& b) {
    std::vector<int> d;
    for (int j = 0; j < f.m(); ++j)
        if (divides(f.gens[j].exponents(f.n), b)) d.push_back(j);
    return d;
}

std::vector<Degree> lcm_closed_degrees(const MonomialSet& f, int bound) {
    std::set<Degree> seen;
    std::vector<Degree> frontier{Degree(f.n, 0)};
    while (!frontier.empty()) {
        std::vector<Degree> next;
        for (const auto& b : frontier)
            for (const auto& g : f.gens) {
                Degree c = b;
                c[g.lo] = std::max(c[g.lo], g.loop() ? 2 : 1);
                c[g.hi] = std::max(c[g.hi], g.loop() ? 2 : 1);
                if (total_degree(c) > bound) continue;
                if (seen.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    std::vector<Degree> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Degree& a, const Degree& b) {
        int da = total_degree(a), db = total_degree(b);
        return da != db ? da < db : a < b;
    });
    return out;
}

namespace {

bool exceeds_bound(const MonomialSet& f, int bound) {
    Degree all(f.n, 0);
    for (const auto& g : f.gens) {
        all[g.lo] = std::max(all[g.lo], g.loop() ? 2 : 1);
        all[g.hi] = std::max(all[g.hi], g.loop() ? 2 : 1);
    }
    return total_degree(all) > bound;
}

IntMatrix kernel_on(const MonomialSet& f, const std::vector<int>& d) {
    if (d.empty()) return {};
    IntMatrix a(f.n, IntVec(d.size(), 0));
    for (std::size_t c = 0; c < d.size(); ++c) {
        auto x = f.gens[d[c]].exponents(f.n);
        for (int i = 0; i < f.n; ++i) a[i][c] = x[i];
    }
    IntMatrix out;
    for (const auto& v : nullspace(a, d.size())) {
        IntVec full(f.m(), 0);
        for (std::size_t c = 0; c < d.size(); ++c) full[d[c]] = v[c];
        out.push_back(std::move(full));
    }
    return out;
}

IntVec coefficient_row(const SyzygyVector& v) {
    IntVec r;
    for (const auto& e : v.entries) r.push_back(e.coeff);
    return r;
}

// each vertex may be visited as often as the largest lcm-closed degree allows
std::vector<int> visit_caps(const MonomialSet& f) {
    std::vector<int> caps(f.n, 0);
    for (const auto& g : f.gens) {
        caps[g.lo] = std::max(caps[g.lo], g.loop() ? 2 : 1);
        caps[g.hi] = std::max(caps[g.hi], g.loop() ? 2 : 1);
    }
    return caps;
}

struct PolarPiece {
    Degree c;  // multidegree of t_w, the vertex visit counts of w
    IntVec alpha;
};

std::vector<PolarPiece> polar_pieces(const MonomialSet& f, const std::vector<int>& caps, int max_len,
                                     const std::vector<bool>& allowed) {
    LoopGraph g(f);
    WalkSearch opts;
    opts.max_len = max_len;
    opts.vertex_caps = caps;
    opts.allowed_edges = allowed;
    std::vector<PolarPiece> out;
    for (const auto& w : enumerate_walks(g, opts)) {
        auto t = t_vector(w, f);
        out.push_back({t.multidegree, coefficient_row(t)});
    }
    return out;
}

int p_dim_from(const std::vector<PolarPiece>& pieces, const Degree& b) {
    IntMatrix rows;
    for (const auto& p : pieces)
        if (divides(p.c, b)) rows.push_back(p.alpha);
    return static_cast<int>(rank(rows));
}

}  // namespace

IntMatrix z_slice_basis(const MonomialSet& f, const Degree& b) { return kernel_on(f, divisors(f, b)); }

int z_slice_dim(const MonomialSet& f, const Degree& b) {
    auto d = divisors(f, b);
    if (d.size() < 2) return 0;
    IntMatrix rows;
    for (int j : d) {
        auto x = f.gens[j].exponents(f.n);
        rows.emplace_back(x.begin(), x.end());
    }
    return static_cast<int>(d.size() - rank(rows));
}

int span_slice_dim(const std::vector<SyzygyVector>& gens, const Degree& b) {
    IntMatrix rows;
    for (const auto& v : gens)
        if (divides(v.multidegree, b)) rows.push_back(coefficient_row(v));
    return static_cast<int>(rank(rows));
}

int p_slice_dim(const MonomialSet& f, const Degree& b) {
    auto d = divisors(f, b);
    std::vector<bool> allowed(f.m(), false);
    for (int j : d) allowed[j] = true;
    return p_dim_from(polar_pieces(f, b, total_degree(b), allowed), b);
}

int p_slice_dim_toric(const MonomialSet& f, const Degree& b) {
    auto d = divisors(f, b);
    std::map<Degree, std::vector<IntVec>> fibers;
    IntVec u(f.m(), 0);
    Degree image(f.n, 0);
    auto rec = [&](auto&& self, std::size_t from) -> void {
        fibers[image].push_back(u);
        for (std::size_t k = from; k < d.size(); ++k) {
            const auto& g = f.gens[d[k]];
            image[g.lo]++;
            image[g.hi]++;
            if (divides(image, b)) {
                u[d[k]]++;
                self(self, k);
                u[d[k]]--;
            }
            image[g.lo]--;
            image[g.hi]--;
        }
    };
    rec(rec, 0);
    IntMatrix rows;
    for (auto& [c, members] : fibers)
        for (std::size_t k = 1; k < members.size(); ++k) {
            IntVec diff(f.m());
            for (int j = 0; j < f.m(); ++j) diff[j] = members[k][j] - members[0][j];
            rows.push_back(std::move(diff));
        }
    return static_cast<int>(rank(rows));
}

namespace {

// Z_b together with the part generated from the slices one degree below
struct MuTable {
    const MonomialSet& f;
    std::map<std::vector<int>, IntMatrix> cache;

    const IntMatrix& kernel(const std::vector<int>& d) {
        auto it = cache.find(d);
        if (it == cache.end()) it = cache.emplace(d, kernel_on(f, d)).first;
        return it->second;
    }

    std::pair<int, int> dims(const Degree& b) {
        int dim = static_cast<int>(kernel(divisors(f, b)).size());
        IntMatrix lower;
        for (int i = 0; i < f.n; ++i) {
            if (b[i] == 0) continue;
            Degree c = b;
            --c[i];
            const auto& k = kernel(divisors(f, c));
            lower.insert(lower.end(), k.begin(), k.end());
        }
        return {dim, static_cast<int>(rank(lower))};
    }
};

}  // namespace

std::vector<GradedSliceReport> slice_reports(const MonomialSet& f, int bound) {
    LoopGraph g(f);
    require_cohesive(g);
    auto zgens = generators_Z(f);
    auto pieces = polar_pieces(f, visit_caps(f), bound, {});
    MuTable table{f, {}};
    std::vector<GradedSliceReport> out;
    for (const auto& b : lcm_closed_degrees(f, bound)) {
        GradedSliceReport r;
        r.b = b;
        r.divisors = static_cast<int>(divisors(f, b).size());
        if (r.divisors < 2) continue;
        auto [dim, lower] = table.dims(b);
        r.dim_Z = dim;
        r.new_min_gens = dim - lower;
        r.dim_span_Z_gens = span_slice_dim(zgens, b);
        r.dim_P = p_dim_from(pieces, b);
        out.push_back(r);
    }
    return out;
}

MuZ mu_Z(const MonomialSet& f, int bound) {
    LoopGraph g(f);
    require_cohesive(g);
    MuTable table{f, {}};
    MuZ out;
    out.truncated = exceeds_bound(f, bound);
    for (const auto& b : lcm_closed_degrees(f, bound)) {
        auto [dim, lower] = table.dims(b);
        if (dim > lower) {
            out.mu += dim - lower;
            out.generators.emplace_back(b, dim - lower);
        }
    }
    return out;
}

OracleVerdict polarizable_oracle(const MonomialSet& f, int bound) {
    LoopGraph g(f);
    require_cohesive(g);
    OracleVerdict v;
    v.truncated = exceeds_bound(f, bound);
    auto pieces = polar_pieces(f, visit_caps(f), bound, {});
    for (const auto& b : lcm_closed_degrees(f, bound)) {
        if (p_dim_from(pieces, b) != z_slice_dim(f, b)) {
            v.holds = false;
            v.first_failure = b;
            return v;
        }
    }
    return v;
}

OracleVerdict generation_check(const std::vector<SyzygyVector>& gens, const MonomialSet& f, int bound) {
    for (const auto& v : gens)
        if (!is_homogeneous(v, f)) throw std::invalid_argument("generator is not homogeneous");
    OracleVerdict v;
    v.truncated = exceeds_bound(f, bound);
    for (const auto& b : lcm_closed_degrees(f, bound)) {
        if (span_slice_dim(gens, b) != z_slice_dim(f, b)) {
            v.holds = false;
            v.first_failure = b;
            return v;
        }
    }
    return v;
}

OracleVerdict linear_presentation_oracle(const MonomialSet& f, int bound) {
    LoopGraph g(f);
    require_cohesive(g);
    OracleVerdict v;
    v.truncated = exceeds_bound(f, bound);
    for (const auto& b : lcm_closed_degrees(f, bound)) {
        auto d = divisors(f, b);
        if (d.size() < 2) continue;
        // linear syzygies e_j - e_k live where lcm(f_j, f_k) has degree 3
        IntMatrix rows;
        for (std::size_t x = 0; x < d.size(); ++x)
            for (std::size_t y = x + 1; y < d.size(); ++y) {
                const auto &a = f.gens[d[x]], &c = f.gens[d[y]];
                Degree l(f.n, 0);
                auto ea = a.exponents(f.n), ec = c.exponents(f.n);
                for (int i = 0; i < f.n; ++i) l[i] = std::max(ea[i], ec[i]);
                if (total_degree(l) != 3) continue;
                IntVec r(d.size(), 0);
                r[x] = 1;
                r[y] = -1;
                rows.push_back(std::move(r));
            }
        if (static_cast<int>(rank(rows)) != static_cast<int>(d.size()) - 1) {
            v.holds = false;
            v.first_failure = b;
            return v;
        }
    }
    return v;
}

namespace {

struct SemigroupTest {
    const MonomialSet& f;
    LoopGraph g;
    std::map<Degree, bool> memo;

    bool operator()(Degree& u) {
        int v = 0;
        while (v < f.n && u[v] == 0) ++v;
        if (v == f.n) return true;
        auto it = memo.find(u);
        if (it != memo.end()) return it->second;
        bool found = false;
        for (int e : g.incident(v)) {
            const auto& x = f.gens[e];
            int w = x.other(v);
            if (x.loop() ? u[v] < 2 : u[w] < 1) continue;
            --u[v];
            --u[w];
            found = (*this)(u);
            ++u[v];
            ++u[w];
            if (found) break;
        }
        memo.emplace(u, found);
        return found;
    }
};

}  // namespace

bool in_semigroup(const MonomialSet& f, const Degree& u) {
    SemigroupTest t{f, LoopGraph(f), {}};
    Degree c = u;
    return t(c);
}

OracleVerdict normality_oracle(const MonomialSet& f, int bound) {
    LoopGraph g(f);
    require_cohesive(g);
    OracleVerdict v;
    v.truncated = f.n > bound;
    SemigroupTest test{f, g, {}};
    std::vector<Degree> found;
    Degree u(f.n, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == f.n) {
            int d = bound - left;
            if (d == 0 || d % 2) return;
            Degree twice = u;
            for (int& x : twice) x *= 2;
            if (test(twice) && !test(u)) found.push_back(u);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            u[i] = k;
            self(self, i + 1, left - k);
        }
        u[i] = 0;
    };
    rec(rec, 0, bound);
    if (!found.empty()) {
        std::sort(found.begin(), found.end(), [](const Degree& a, const Degree& b) {
            int da = total_degree(a), db = total_degree(b);
            return da != db ? da < db : a < b;
        });
        v.holds = false;
        v.first_failure = found.front();
    }
    return v;
}

}  // namespace polsyz
