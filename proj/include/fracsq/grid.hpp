#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracsq {

// Thrown when a requested approximation level would exceed the cell budget.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultCellCap = std::uint64_t{1} << 26;

struct Cell {
    int x = 0;
    int y = 0;

    friend bool operator==(const Cell& a, const Cell& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
    // Row-major from the bottom: sort by y first, then x.
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }
};

// A proper digit set D in {0..n-1}^2, 1 <= |D| <= n^2-1. Cells are kept
// sorted by (y, x); the sorted position is the 1-based digit symbol used in
// codings.
class DigitSet {
public:
    DigitSet(int n, std::vector<Cell> cells);

    // Rows are listed top first: entry (i, j) of the matrix is '1' exactly
    // when cell (j, n-1-i) belongs to D (0-based i, j).
    static DigitSet from_label_matrix(const std::vector<std::string>& rows);
    std::vector<std::string> to_label_matrix() const;

    int n() const { return n_; }
    int size() const { return static_cast<int>(cells_.size()); }
    const std::vector<Cell>& cells() const { return cells_; }
    bool contains(Cell c) const;
    // 1-based symbol of a cell in (y, x) order, 0 if absent.
    int symbol_of(Cell c) const;

    friend bool operator==(const DigitSet& a, const DigitSet& b) {
        return a.n_ == b.n_ && a.cells_ == b.cells_;
    }

private:
    int n_;
    std::vector<Cell> cells_;
};

// Square bitmap with side n^k, bit (x, y) set when the level-k cell is kept.
class Bitmap {
public:
    explicit Bitmap(std::int64_t side);

    std::int64_t side() const { return side_; }
    bool get(std::int64_t x, std::int64_t y) const {
        std::uint64_t i = index(x, y);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(std::int64_t x, std::int64_t y) {
        std::uint64_t i = index(x, y);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    std::uint64_t count() const;

private:
    std::uint64_t index(std::int64_t x, std::int64_t y) const {
        return static_cast<std::uint64_t>(y) * static_cast<std::uint64_t>(side_) +
               static_cast<std::uint64_t>(x);
    }

    std::int64_t side_;
    std::vector<std::uint64_t> words_;
};

struct Approximation {
    int k = 0;
    Bitmap kept;
};

// n^k with an overflow/budget guard.
std::int64_t level_side(int n, int k, std::uint64_t max_cells = kDefaultCellCap);

// Level-k cells via the refinement D_{k+1} = D + n * D_k, sorted by (y, x).
std::vector<Cell> approximation_cells(const DigitSet& d, int k,
                                      std::uint64_t max_cells = kDefaultCellCap);
Approximation approximation(const DigitSet& d, int k,
                            std::uint64_t max_cells = kDefaultCellCap);

// Digit-wise membership test: kept iff every base-n digit pair of (x, y) is in D.
bool cell_kept(const DigitSet& d, int k, std::int64_t x, std::int64_t y);

enum class DigitOrder {
    BottomUp,           // cells sorted by (y, x); symbol i = i-th cell
    CornersThenCenter,  // corner cells first (sorted by (y, x)), then the rest
};

DigitOrder parse_digit_order(const std::string& name);  // "yx" | "cc"
std::vector<Cell> ordered_digits(const DigitSet& d, DigitOrder order);

// Level-k cells of the cylinder selected by a coding prefix (1-based symbols
// in the given digit order). Requires 0 <= |prefix| <= k.
std::vector<Cell> cylinder_cells(const DigitSet& d, const std::vector<int>& prefix, int k,
                                 DigitOrder order = DigitOrder::BottomUp,
                                 std::uint64_t max_cells = kDefaultCellCap);

// Which corners of the unit square belong to the attractor, in the order
// (0,0), (1,0), (0,1), (1,1). Corner c is in F iff the matching corner cell
// of the grid is in D.
std::array<bool, 4> corner_membership(const DigitSet& d);

}  // namespace fracsq
