#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polsyz/graph.hpp"

namespace polsyz {

class WalkError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Even closed walk. vertices[j] is where edges[j] starts, so edges[j] joins
// vertices[j] and vertices[j+1] cyclically.
struct Walk {
    std::vector<int> edges;
    std::vector<int> vertices;
    std::vector<int> canonical;
    // sign of position 0 once the canonical representative has +1 at its first position
    int orientation = 1;

    int length() const { return static_cast<int>(edges.size()); }
    int sign_at(int pos) const { return (pos % 2 == 0) ? orientation : -orientation; }
};

// smallest rotation/reversal of a cyclic sequence; parity of the offset goes to *orientation
std::vector<int> canonical_form(const std::vector<int>& edges, int* orientation = nullptr);
// vertex sequence of a cyclic edge sequence without immediate repetitions
std::optional<std::vector<int>> vertex_sequence(const MonomialSet& f, const std::vector<int>& edges);
Walk make_walk(const MonomialSet& f, const std::vector<int>& edges);

enum class SplitKind { Rotation, SenseRepetition };

// Parts are raw edge sequences. A rotation split cuts the walk at a vertex
// met again after an even number of steps. A sense repetition (an edge met
// twice in the same direction an odd number of steps apart) is reordered into
// a walk two steps shorter plus the back-and-forth pair on that edge.
struct Split {
    std::vector<int> first, second;
    int vertex = -1;
    SplitKind kind = SplitKind::Rotation;
};

std::optional<Split> split_decomposition(const Walk& w);

struct VertexRecurrence {
    int vertex;
    std::vector<int> positions;
    bool exactly_twice;
    bool opposite_parity;
};

struct EdgeRecurrence {
    int edge;
    std::vector<int> positions;
    bool exactly_twice;
    bool even_gap;
    bool sense_reversing;
};

struct RecurrenceReport {
    std::vector<VertexRecurrence> vertices;
    std::vector<EdgeRecurrence> edges;

    bool all_hold() const;
};

RecurrenceReport recurrence_report(const Walk& w);

// simple cycle; a loop is the one-vertex cycle. edges[k] joins vertices[k] and vertices[k+1]
struct Cycle {
    std::vector<int> vertices;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool odd() const { return edges.size() % 2 == 1; }
    bool is_loop() const { return edges.size() == 1; }
    std::vector<int> key() const { return canonical_form(edges); }
};

enum class WalkKind { EvenCycle, CycleArrangement, Molecule };
std::string kind_name(WalkKind k);

struct WalkClass {
    WalkKind kind = WalkKind::EvenCycle;
    std::vector<Cycle> cycles;
    std::vector<std::vector<int>> arrangements;  // cycle indices of each structural cycle arrangement
    std::vector<std::vector<int>> paths;         // structural paths as edge lists
    std::vector<std::vector<int>> path_vertices;
};

// non-split walk whose support is neither a cycle arrangement nor a molecule,
// e.g. x1x2,x1x3,x2x3,x2x4,x3x4,x1x4 traversed as 2,1,3,2,4,3,1,4
class UnclassifiableWalk : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Cycle decomposition of any walk whose support is a cycle arrangement or a
// molecule, split or not; nullopt when the peeling does not produce one.
std::optional<WalkClass> classify_configuration(const Walk& w);
// throws WalkError on split input, UnclassifiableWalk when peeling fails
WalkClass classify_non_split(const Walk& w);

bool satisfies_cycle_arrangement(const std::vector<Cycle>& cycles);
bool satisfies_molecule(const WalkClass& c);
// no simple cycle of the support other than the constituent ones
bool only_constituent_cycles(const WalkClass& c, const LoopGraph& g);

struct SkeletonNode {
    bool black = false;
    int cycle = -1;  // index into WalkClass::cycles
    int path = -1;   // structural path and edge position for path-edge nodes
    int path_edge = -1;
};

struct Skeleton {
    std::vector<SkeletonNode> nodes;
    std::vector<std::pair<int, int>> links;

    int black_count() const;
};

Skeleton build_skeleton(const WalkClass& c);
bool skeleton_non_split(const Skeleton& s);

std::vector<Cycle> enumerate_simple_cycles(const LoopGraph& g, int max_len, bool with_loops);
std::vector<Walk> enumerate_even_cycles(const LoopGraph& g, int max_len);

struct WalkSearch {
    int max_len = 8;
    bool non_split_only = true;
    std::vector<int> vertex_caps;     // per-vertex occurrence cap, empty = none
    std::vector<bool> allowed_edges;  // empty = all generators
};

// closed even walks, each generator used at most twice, no immediate
// repetition; deduplicated by canonical key and sorted by (length, key)
std::vector<Walk> enumerate_walks(const LoopGraph& g, const WalkSearch& opts);
std::vector<Walk> enumerate_non_split_walks(const LoopGraph& g, int max_len,
                                            const std::vector<bool>& allowed_edges = {});

struct Decomposition {
    std::vector<int> h;              // decomposing generators
    std::vector<int> first, second;  // edge multisets of the two parts, sorted
};

// throws WalkError on split input
std::optional<Decomposition> is_decomposable(const Walk& w, const LoopGraph& g, int max_set = 3);

}  // namespace polsyz
