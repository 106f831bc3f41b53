#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polsyz/linalg.hpp"

// Variables and generators are 0-based in memory. Every textual surface
// (.mon files, JSON, DOT, the python module) shows them 1-based.
namespace polsyz {

struct Monomial2 {
    int lo = 0;
    int hi = 0;

    bool loop() const { return lo == hi; }
    bool squarefree() const { return lo < hi; }
    bool has(int v) const { return lo == v || hi == v; }
    int other(int v) const { return lo == v ? hi : lo; }
    std::vector<int> exponents(int n) const;

    friend bool operator==(const Monomial2&, const Monomial2&) = default;
    friend auto operator<=>(const Monomial2&, const Monomial2&) = default;
};

struct MonomialSet {
    int n = 0;
    std::vector<Monomial2> gens;

    int m() const { return static_cast<int>(gens.size()); }
    std::vector<int> unused_vars() const;

    friend bool operator==(const MonomialSet&, const MonomialSet&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

MonomialSet parse_monomial_set(std::string_view text);
MonomialSet read_monomial_file(const std::string& path);
// pairs are 0-based; throws std::invalid_argument on bad input
MonomialSet make_monomial_set(int n, const std::vector<std::pair<int, int>>& pairs);
std::string to_mon(const MonomialSet& f);
std::string monomial_name(const Monomial2& g);

class LoopGraph {
public:
    explicit LoopGraph(MonomialSet f);

    int n() const { return f_.n; }
    int m() const { return f_.m(); }
    const MonomialSet& gens() const { return f_; }
    const Monomial2& gen(int j) const { return f_.gens[j]; }
    // neighbours of v; v itself appears once when v carries a loop
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    // generators containing v, loop included
    const std::vector<int>& incident(int v) const { return inc_[v]; }
    // generator index of x_u x_v or -1
    int edge_index(int u, int v) const { return index_[u * f_.n + v]; }
    bool has_loop(int v) const { return edge_index(v, v) >= 0; }
    bool adjacent(int u, int v) const { return u != v && edge_index(u, v) >= 0; }
    bool covered(int v) const { return !inc_[v].empty(); }

private:
    MonomialSet f_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
    std::vector<int> index_;
};

struct Cohesion {
    bool cohesive = true;
    std::vector<int> side_a, side_b;  // partition witness when not cohesive
    std::vector<int> isolated;        // declared variables without generators
};

Cohesion is_cohesive(const LoopGraph& g);

class IncohesiveError : public std::runtime_error {
public:
    explicit IncohesiveError(Cohesion witness);
    const Cohesion& witness() const { return witness_; }

private:
    Cohesion witness_;
};

void require_cohesive(const LoopGraph& g);

struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int edge_count() const;
};

SimpleGraph edge_graph(const LoopGraph& g);
// nullopt stands for infinity
std::optional<int> graph_diameter(const SimpleGraph& g);
bool is_linearly_presented(const MonomialSet& f);

struct Bipartition {
    bool bipartite = true;
    std::vector<int> color;      // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle;  // vertex sequence of an odd cycle otherwise
};

Bipartition is_bipartite(const LoopGraph& g);
bool complement_has_induced_c4(const LoopGraph& g);

IntMatrix log_matrix(const MonomialSet& f);
int algebra_dimension(const MonomialSet& f);

struct PinchResult {
    MonomialSet set;
    std::vector<int> image;                      // old generator -> new generator
    std::vector<std::pair<int, int>> collapsed;  // old generator pairs with equal images
};

PinchResult pinch(const MonomialSet& f, int i, int j);

std::string to_dot(const LoopGraph& g);
std::string to_dot(const SimpleGraph& g, const MonomialSet& f);

}  // namespace polsyz
