#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polsyz/graph.hpp"
#include "polsyz/walks.hpp"

namespace polsyz {

// Two edge-disjoint odd cycles (loops allowed) joined by a path. The path
// runs from a vertex of cycle1 to a vertex of cycle2; for a path-degenerate
// bow tie path_vertices holds only the shared vertex.
struct BowTie {
    Cycle cycle1, cycle2;
    std::vector<int> path_vertices;
    std::vector<int> path;

    std::vector<int> vertices() const;
    std::vector<int> key() const;
    // total degree of the lcm of its edges: vertices plus loops
    int degree() const;
};

enum class BowTieKind { General, Monedge, PathDegenerate };
const char* bowtie_kind_name(BowTieKind k);

struct BowTieClass {
    BowTieKind kind;
    int loops;
};

BowTieClass classify_bowtie(const BowTie& b);
Walk bowtie_walk(const BowTie& b, const MonomialSet& f);

// loops first, then odd cycles by length; max_len 0 means no cap
std::vector<Cycle> enumerate_odd_cycles(const LoopGraph& g, bool chordless_only, int max_len = 0);
std::vector<BowTie> enumerate_bowties(const LoopGraph& g, int max_cycle_len = 0);
std::vector<BowTie> enumerate_induced_bowties(const LoopGraph& g);
bool is_induced_bowtie(const BowTie& b, const LoopGraph& g);

// bow tie shapes compatible with polarizability / normality
bool polar_allowed(const BowTieClass& c);
bool normal_allowed(const BowTieClass& c);

struct OddCycleCheck {
    bool holds = true;
    std::optional<std::pair<Cycle, Cycle>> violation;
};

OddCycleCheck odd_cycle_condition(const LoopGraph& g);

struct PolarReport {
    bool polarizable = true;
    bool normal = true;  // decided by the odd cycle condition
    bool odd_cycle_condition = true;
    // no induced bow tie with a path of length >= 2; misses some non-normal
    // graphs, e.g. x1x2,x1x3,x2x3,x2x4,x3x4,x1x5,x5^2
    bool normal_by_bowties = true;
    std::vector<BowTie> witnesses;           // induced bow ties blocking polarizability
    std::vector<BowTie> normality_witnesses; // induced bow ties with a path of length >= 2
    std::optional<std::pair<Cycle, Cycle>> odd_cycle_violation;

    // verdict when only bow ties of degree <= d are taken into account
    bool polarizable_up_to(int d) const;
};

PolarReport is_polarizable(const MonomialSet& f);
bool is_normal(const MonomialSet& f);

}  // namespace polsyz
