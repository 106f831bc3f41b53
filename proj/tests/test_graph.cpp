#include <doctest.h>

#include <random>

#include "polsyz/graph.hpp"
#include "sweep.hpp"

using namespace polsyz;

namespace {

MonomialSet villa() { return make_monomial_set(3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}}); }

}  // namespace

TEST_CASE("parse accepts monomials and index pairs") {
    auto f = parse_monomial_set("# villa\nx1^2\nx1*x2\n2 2   # loop\nx2*x3\nx3^2\n");
    CHECK(f == villa());
    auto g = parse_monomial_set("vars 5\nx1*x2\n");
    CHECK(g.n == 5);
    CHECK(g.unused_vars() == std::vector<int>{2, 3, 4});
    CHECK(parse_monomial_set("x2*x1\n").gens[0] == Monomial2{0, 1});
}

TEST_CASE("parse errors carry the line number") {
    auto line_of = [](const char* text) {
        try {
            parse_monomial_set(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("x1*x2\n\nx1*x2*x3\n") == 3);
    CHECK(line_of("x1*x2\nx2*x1\n") == 2);
    CHECK(line_of("vars 2\nx1*x3\n") == 2);
    CHECK(line_of("x1*x2\nbanana\n") == 2);
    CHECK(line_of("0 1\n") == 1);
    CHECK(line_of("x1\n") == 1);
}

TEST_CASE("to_mon round trip") {
    std::mt19937 rng(11);
    for (int k = 0; k < 50; ++k) {
        auto f = sweep::random_cohesive(rng, 1 + k % 7);
        CHECK(parse_monomial_set(to_mon(f)) == f);
    }
    MonomialSet h{6, {{0, 1}}};
    CHECK(parse_monomial_set(to_mon(h)) == h);
}

TEST_CASE("cohesion") {
    auto f = make_monomial_set(4, {{0, 1}, {2, 3}});
    auto c = is_cohesive(LoopGraph(f));
    CHECK_FALSE(c.cohesive);
    CHECK(c.side_a == std::vector<int>{0, 1});
    CHECK(c.side_b == std::vector<int>{2, 3});
    CHECK_THROWS_AS(require_cohesive(LoopGraph(f)), IncohesiveError);
    CHECK(is_cohesive(LoopGraph(villa())).cohesive);
    // a declared variable without generators does not break cohesion
    auto g = make_monomial_set(3, {{0, 1}});
    auto cg = is_cohesive(LoopGraph(g));
    CHECK(cg.cohesive);
    CHECK(cg.isolated == std::vector<int>{2});
}

TEST_CASE("bipartite with odd cycle certificate") {
    std::mt19937 rng(5);
    for (int k = 0; k < 200; ++k) {
        auto f = sweep::random_cohesive(rng, 2 + k % 7, 0.35, k % 3 == 0 ? 0.2 : 0.0);
        LoopGraph g(f);
        auto b = is_bipartite(g);
        if (b.bipartite) {
            for (const auto& e : f.gens) CHECK(b.color[e.lo] != b.color[e.hi]);
        } else {
            const auto& c = b.odd_cycle;
            REQUIRE(c.size() % 2 == 1);
            for (std::size_t i = 0; i < c.size(); ++i) CHECK(g.edge_index(c[i], c[(i + 1) % c.size()]) >= 0);
        }
        CHECK(algebra_dimension(f) == (b.bipartite ? f.n - 1 : f.n));
    }
}

TEST_CASE("edge graph diameter") {
    LoopGraph v(villa());
    auto d = graph_diameter(edge_graph(v));
    REQUIRE(d);
    CHECK(*d == 3);
    CHECK_FALSE(is_linearly_presented(villa()));
    auto bounding = make_monomial_set(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}});
    CHECK(is_linearly_presented(bounding));
    auto star = make_monomial_set(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(*graph_diameter(edge_graph(LoopGraph(star))) == 1);
}

TEST_CASE("loopless: edge graph diameter <= 2 iff complement has no induced 4-cycle") {
    std::mt19937 rng(21);
    for (int k = 0; k < 300; ++k) {
        auto f = sweep::random_cohesive(rng, 2 + k % 7, 0.4, 0.0);
        LoopGraph g(f);
        CHECK(is_linearly_presented(f) == !complement_has_induced_c4(g));
    }
    CHECK_THROWS(complement_has_induced_c4(LoopGraph(villa())));
}

TEST_CASE("pinch") {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < 7; ++i) p.emplace_back(i, i + 1);
    p.emplace_back(0, 7);
    p.emplace_back(0, 3);
    auto f = make_monomial_set(8, p);
    auto r = pinch(f, 0, 3);
    CHECK(r.set.n == 7);
    CHECK(r.set.m() == 9);
    CHECK(r.collapsed.empty());
    CHECK(r.set.gens[r.image[8]] == Monomial2{0, 0});
    // triangle: pinching one side collapses the other two
    auto t = pinch(make_monomial_set(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 1);
    CHECK(t.set.m() == 2);
    CHECK(t.collapsed == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK_THROWS(pinch(villa(), 0, 0));
    CHECK_THROWS(pinch(villa(), 0, 2));
}

TEST_CASE("dot export lists every generator") {
    auto s = to_dot(LoopGraph(villa()));
    CHECK(s.rfind("graph", 0) == 0);
    CHECK(s.find("x1 -- x1") != std::string::npos);
    CHECK(s.find("x2 -- x3") != std::string::npos);
    CHECK(s.back() == '\n');
}

TEST_CASE("exhaustive family sizes") {
    // isomorphism classes of connected graphs with loops, counted separately with networkx
    std::vector<std::size_t> expect{1, 3, 10, 50, 354};
    for (int n = 1; n <= 5; ++n) CHECK(sweep::connected_loop_graphs(n).size() == expect[n - 1]);
}
