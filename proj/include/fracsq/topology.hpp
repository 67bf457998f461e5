#pragma once

#include <optional>
#include <vector>

#include "fracsq/grid.hpp"
#include "fracsq/neighbor.hpp"
#include "fracsq/rational.hpp"

namespace fracsq {

// Is the level-k full-edge graph (side-sharing kept cells with intersecting
// pieces) a spanning tree of the kept cells?
bool full_edge_tree(const DigitSet& d, int k, std::uint64_t max_cells = kDefaultCellCap);

// Least level whose cell graph contains a chordless cycle of length >= 4
// (corner-contact triangles are ubiquitous and do not count), or nullopt if
// none shows up through kmax. Chordality via maximum-cardinality search.
std::optional<int> first_cycle_level(const DigitSet& d, int kmax,
                                     std::uint64_t max_cells = kDefaultCellCap);

// Components of the level-k cell graph after deleting the cylinder selected
// by the coding prefix. Requires k >= |prefix| + 1.
int delete_cylinder_components(const DigitSet& d, const std::vector<int>& prefix, int k,
                               DigitOrder order = DigitOrder::BottomUp,
                               std::uint64_t max_cells = kDefaultCellCap);

// Eventually periodic coding: pre . per . per . per ... with 1-based symbols.
struct Coding {
    std::vector<int> pre;
    std::vector<int> per;
};

struct CodingAnalysis {
    Vec2 point;                       // exact address of the coded point
    std::uint64_t multiplicity = 0;   // number of codings of that point
    std::vector<int> tail_symbols;    // symbols s with the pure-tail state d_s/(n-1) reachable
    std::vector<std::uint64_t> prefix_counts;  // distinct k-prefixes, k = 1..depth
};

Vec2 coding_point(const DigitSet& d, const Coding& coding,
                  DigitOrder order = DigitOrder::BottomUp);
CodingAnalysis analyze_coding(const DigitSet& d, const Coding& coding,
                              DigitOrder order = DigitOrder::BottomUp, int prefix_depth = 0);

// The two reference shapes for local branching: the tee (bottom row plus
// middle column) with bottom-up digit order, and the quincunx (four corners
// plus center) with corners-then-center order.
DigitSet tee_digit_set();
DigitSet quincunx_digit_set();

// Local branch degree of the coded point.
int branch_degree_tee(const Coding& coding);
int branch_degree_quincunx(const Coding& coding);

struct BranchSample {
    std::vector<int> prefix;
    int level = 0;
    int components = 0;
};

struct Fingerprint {
    bool connected = false;
    int full_edge_tree_up_to = 0;  // largest level <= depth that is a full-edge tree
    std::optional<int> first_cycle_level;
    DigitOrder order = DigitOrder::BottomUp;
    std::vector<BranchSample> branch_samples;  // single-symbol deletions at level 2
};

Fingerprint fingerprint(const DigitSet& d, int depth = 4,
                        DigitOrder order = DigitOrder::BottomUp,
                        std::uint64_t max_cells = kDefaultCellCap);

}  // namespace fracsq
