#pragma once

#include <utility>
#include <vector>

#include "fracsq/grid.hpp"

namespace fracsq {

// Surviving translation offsets delta in {-1,0,1}^2: those with
// F and F + delta intersecting. Computed as the greatest fixed point of the
// offset automaton delta -> n*delta + d_j - d_i.
struct OffsetSurvivors {
    std::array<bool, 9> alive{};  // index (dy+1)*3 + (dx+1)

    bool survives(int dx, int dy) const {
        if (dx < -1 || dx > 1 || dy < -1 || dy > 1) return false;
        return alive[(dy + 1) * 3 + (dx + 1)];
    }
    std::vector<std::pair<int, int>> offsets() const;
};

OffsetSurvivors surviving_offsets(const DigitSet& d);

// Do the level-k pieces indexed by kept cells u and v intersect? Requires
// both cells kept at level k.
bool pieces_intersect(const DigitSet& d, int k, Cell u, Cell v);
bool pieces_intersect(const OffsetSurvivors& s, Cell u, Cell v);

// Hata graph on the digits themselves (level-1 pieces); its connectivity
// decides connectivity of the attractor.
std::vector<std::pair<int, int>> hata_edges(const DigitSet& d);  // 0-based digit index pairs, a < b
bool hata_connected(const DigitSet& d);
// BFS tree edges over the hata graph, rooted at digit 0. Covers every digit
// exactly when the graph is connected.
std::vector<std::pair<int, int>> hata_spanning_tree(const DigitSet& d);

enum class EdgeKind {
    FullEdge,        // cells share a whole side and the pieces meet
    PointOrPartial,  // pieces meet but only at a corner or a partial contact
};

struct CellGraph {
    struct Edge {
        int a = 0, b = 0;  // vertex indices, a < b
        EdgeKind kind = EdgeKind::PointOrPartial;
    };

    int level = 0;
    std::vector<Cell> vertices;  // kept cells sorted by (y, x)
    std::vector<Edge> edges;

    std::vector<std::vector<int>> adjacency(bool full_edges_only = false) const;
    int component_count(bool full_edges_only = false) const;
};

CellGraph exact_cell_graph(const DigitSet& d, int k, std::uint64_t max_cells = kDefaultCellCap);

// 8-adjacency connectivity of the level-k bitmap (the cheap approximation;
// agrees with piece connectivity when corner contacts are real).
bool approx_connected(const DigitSet& d, int k, std::uint64_t max_cells = kDefaultCellCap);

}  // namespace fracsq
