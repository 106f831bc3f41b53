#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "polsyz/bowtie.hpp"
#include "polsyz/graph.hpp"
#include "polsyz/oracle.hpp"
#include "polsyz/syzygy.hpp"
#include "polsyz/walks.hpp"

// JSON documents behind the command line tool and the python module.
// All indices are shifted to 1-based here.
namespace polsyz {

using Json = nlohmann::ordered_json;

struct RunConfig {
    int max_walk_len = 8;
    int degree_bound = 8;
    int max_cycle_len = 0;  // bowties only, 0 = no cap
    std::uint64_t seed = 0;
    char module = 'Z';  // syzygies: Z or P
};

std::string monomial_string(const std::vector<int>& exponents);

Json set_json(const MonomialSet& f);
Json cycle_json(const Cycle& c);
Json walk_json(const Walk& w, const LoopGraph& g, bool with_decomposition);
Json bowtie_json(const BowTie& b, const LoopGraph& g);
Json syzygy_json(const SyzygyVector& v);
Json binomial_json(const Binomial& p);
Json slice_json(const GradedSliceReport& r);

Json analyze_doc(const MonomialSet& f, const RunConfig& cfg);
Json walks_doc(const MonomialSet& f, const RunConfig& cfg);
Json bowties_doc(const MonomialSet& f, const RunConfig& cfg);
Json syzygies_doc(const MonomialSet& f, const RunConfig& cfg);
Json oracle_doc(const MonomialSet& f, const RunConfig& cfg);
Json pinch_doc(const MonomialSet& f, int i, int j);
Json incohesive_doc(const Cohesion& c);

std::string walks_dot(const MonomialSet& f, const RunConfig& cfg);
std::string render_text(const Json& doc);

}  // namespace polsyz
