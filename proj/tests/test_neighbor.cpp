#include <algorithm>
#include <set>

#include "doctest.h"
#include "fracsq/neighbor.hpp"
#include "support/catalog.hpp"

using namespace fracsq;

namespace {

std::set<std::pair<int, int>> offset_set(const DigitSet& d) {
    auto v = surviving_offsets(d).offsets();
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("surviving offsets of the reference shapes") {
    // The tee touches neighbors along sides only.
    CHECK(offset_set(testsupport::five_cell(5)) ==
          std::set<std::pair<int, int>>{{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}});
    // Left-column comb adds one corner-contact pair.
    CHECK(offset_set(testsupport::five_cell(6)) ==
          std::set<std::pair<int, int>>{
              {-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}, {1, -1}, {-1, 1}});
    // Corner-contact comb touches across the other diagonal.
    CHECK(offset_set(testsupport::five_cell(7)) ==
          std::set<std::pair<int, int>>{
              {-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}, {-1, -1}});
    // The quincunx meets all eight translates: every axis offset has the
    // self-loop pair (2,y)->(0,y), every diagonal the opposite-corner pair.
    {
        std::set<std::pair<int, int>> all;
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) all.insert({dx, dy});
        CHECK(offset_set(testsupport::five_cell(8)) == all);
    }
    // A single digit keeps only the zero offset.
    CHECK(offset_set(DigitSet(3, {{0, 0}})) == std::set<std::pair<int, int>>{{0, 0}});
    // Side-adjacent digits whose pieces still miss each other.
    CHECK(offset_set(DigitSet(3, {{0, 0}, {1, 0}})) ==
          std::set<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("surviving offsets: origin always survives and the set is symmetric") {
    for (int idx = 0; idx < 21; ++idx) {
        OffsetSurvivors s = surviving_offsets(testsupport::five_cell(idx));
        CHECK(s.survives(0, 0));
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) CHECK(s.survives(dx, dy) == s.survives(-dx, -dy));
    }
}

TEST_CASE("piece intersection queries") {
    DigitSet quincunx = testsupport::five_cell(8);
    CHECK(pieces_intersect(quincunx, 1, {0, 0}, {1, 1}));
    CHECK(pieces_intersect(quincunx, 1, {0, 0}, {0, 0}));
    CHECK_FALSE(pieces_intersect(quincunx, 1, {0, 0}, {2, 0}));
    CHECK_THROWS_AS(pieces_intersect(quincunx, 1, {0, 0}, {1, 0}), std::invalid_argument);
}

TEST_CASE("digit contact graph decides connectivity") {
    CHECK(hata_connected(testsupport::five_cell(9)));    // plus
    CHECK(hata_connected(testsupport::five_cell(8)));    // quincunx
    CHECK_FALSE(hata_connected(testsupport::five_cell(11)));
    CHECK(hata_connected(DigitSet(3, {{1, 1}})));
    for (int idx : {5, 6, 7, 8, 9, 10}) {
        DigitSet d = testsupport::five_cell(idx);
        CHECK(hata_connected(d));
        auto tree = hata_spanning_tree(d);
        CHECK(tree.size() == 4);
        auto edges = hata_edges(d);
        for (auto e : tree) CHECK(std::find(edges.begin(), edges.end(), e) != edges.end());
    }
    for (int idx : {0, 1, 2, 3, 4})
        CHECK_FALSE(hata_connected(testsupport::five_cell(idx)));
}

TEST_CASE("cell graphs") {
    CellGraph tee1 = exact_cell_graph(testsupport::five_cell(5), 1);
    CHECK(tee1.vertices.size() == 5);
    CHECK(tee1.edges.size() == 4);
    for (const CellGraph::Edge& e : tee1.edges) CHECK(e.kind == EdgeKind::FullEdge);
    CHECK(tee1.component_count() == 1);

    // The quincunx level-1 graph is a 4-star of corner contacts.
    CellGraph q1 = exact_cell_graph(testsupport::five_cell(8), 1);
    CHECK(q1.vertices.size() == 5);
    CHECK(q1.edges.size() == 4);
    for (const CellGraph::Edge& e : q1.edges) CHECK(e.kind == EdgeKind::PointOrPartial);
    CHECK(q1.component_count() == 1);
    CHECK(q1.component_count(true) == 5);  // no full edges at level 1

    // Left-column comb picks up a cycle by level 2.
    CellGraph c2 = exact_cell_graph(testsupport::five_cell(6), 2);
    CHECK(c2.vertices.size() == 25);
    CHECK(c2.component_count() == 1);
    CHECK(c2.edges.size() >= c2.vertices.size());  // connected with a cycle

    // Full-edge subgraph is always a subgraph of the general one, and level-1
    // edges mirror the digit contact graph.
    for (int idx = 0; idx < 21; ++idx) {
        DigitSet d = testsupport::five_cell(idx);
        CellGraph g = exact_cell_graph(d, 1);
        auto hata = hata_edges(d);
        std::vector<std::pair<int, int>> general;
        for (const CellGraph::Edge& e : g.edges) general.emplace_back(e.a, e.b);
        CHECK(general == hata);
    }
}

TEST_CASE("bitmap connectivity approximation") {
    CHECK(approx_connected(testsupport::five_cell(0), 1));
    CHECK_FALSE(approx_connected(testsupport::five_cell(0), 3));
    for (int k = 1; k <= 6; ++k) CHECK(approx_connected(testsupport::five_cell(9), k));
    // Disconnection is monotone in the level.
    for (int idx = 0; idx < 21; ++idx) {
        bool connected = true;
        for (int k = 1; k <= 4; ++k) {
            bool now = approx_connected(testsupport::five_cell(idx), k);
            CHECK((connected || !now));
            connected = now;
        }
    }
}

TEST_CASE("offset automaton matches the closed-approximation oracle") {
    for (int idx = 0; idx < 21; ++idx) {
        DigitSet d = testsupport::five_cell(idx);
        OffsetSurvivors s = surviving_offsets(d);
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                CHECK(s.survives(dx, dy) == testsupport::oracle_translates_meet(d, 8, dx, dy));
                CHECK(testsupport::oracle_translates_meet(d, 3, dx, dy) ==
                      testsupport::oracle_translates_meet_fullscan(d, 3, dx, dy));
            }
    }
}
