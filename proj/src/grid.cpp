#include "fracsq/grid.hpp"

#include <algorithm>
#include <bit>

namespace fracsq {

DigitSet::DigitSet(int n, std::vector<Cell> cells) : n_(n), cells_(std::move(cells)) {
    if (n_ < 2) throw std::invalid_argument("digit set: base must be at least 2");
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    for (const Cell& c : cells_)
        if (c.x < 0 || c.x >= n_ || c.y < 0 || c.y >= n_)
            throw std::invalid_argument("digit set: cell out of range");
    if (cells_.empty()) throw std::invalid_argument("digit set: empty");
    if (static_cast<int>(cells_.size()) == n_ * n_)
        throw std::invalid_argument("digit set: must be a proper subset of the grid");
}

DigitSet DigitSet::from_label_matrix(const std::vector<std::string>& rows) {
    int n = static_cast<int>(rows.size());
    if (n < 2) throw std::invalid_argument("label matrix: need at least 2 rows");
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("label matrix: not square");
        for (int j = 0; j < n; ++j) {
            char ch = rows[i][j];
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("label matrix: entries must be 0 or 1");
            if (ch == '1') cells.push_back({j, n - 1 - i});
        }
    }
    return DigitSet(n, std::move(cells));
}

std::vector<std::string> DigitSet::to_label_matrix() const {
    std::vector<std::string> rows(n_, std::string(n_, '0'));
    for (const Cell& c : cells_) rows[n_ - 1 - c.y][c.x] = '1';
    return rows;
}

bool DigitSet::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

int DigitSet::symbol_of(Cell c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) return 0;
    return static_cast<int>(it - cells_.begin()) + 1;
}

Bitmap::Bitmap(std::int64_t side) : side_(side) {
    std::uint64_t bits = static_cast<std::uint64_t>(side) * static_cast<std::uint64_t>(side);
    words_.assign((bits + 63) / 64, 0);
}

std::uint64_t Bitmap::count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::int64_t level_side(int n, int k, std::uint64_t max_cells) {
    if (k < 0) throw std::invalid_argument("level must be non-negative");
    std::int64_t side = 1;
    for (int i = 0; i < k; ++i) {
        if (side > (std::int64_t{1} << 31)) throw CapExceeded("grid side overflows the cell budget");
        side *= n;
    }
    std::uint64_t cells = static_cast<std::uint64_t>(side) * static_cast<std::uint64_t>(side);
    if (side > 1 && cells / static_cast<std::uint64_t>(side) != static_cast<std::uint64_t>(side))
        throw CapExceeded("grid size overflows the cell budget");
    if (cells > max_cells)
        throw CapExceeded("level " + std::to_string(k) + " needs " + std::to_string(cells) +
                          " cells, budget is " + std::to_string(max_cells));
    return side;
}

std::vector<Cell> approximation_cells(const DigitSet& d, int k, std::uint64_t max_cells) {
    level_side(d.n(), k, max_cells);
    std::vector<Cell> cur = {{0, 0}};
    int n = d.n();
    for (int i = 0; i < k; ++i) {
        std::vector<Cell> next;
        next.reserve(cur.size() * d.cells().size());
        for (const Cell& base : d.cells())
            for (const Cell& c : cur) next.push_back({base.x + n * c.x, base.y + n * c.y});
        std::sort(next.begin(), next.end());
        cur = std::move(next);
    }
    return cur;
}

Approximation approximation(const DigitSet& d, int k, std::uint64_t max_cells) {
    std::int64_t side = level_side(d.n(), k, max_cells);
    Approximation out{k, Bitmap(side)};
    for (const Cell& c : approximation_cells(d, k, max_cells)) out.kept.set(c.x, c.y);
    return out;
}

bool cell_kept(const DigitSet& d, int k, std::int64_t x, std::int64_t y) {
    if (k < 0) throw std::invalid_argument("level must be non-negative");
    std::int64_t side = 1;
    for (int i = 0; i < k; ++i) side *= d.n();
    if (x < 0 || y < 0 || x >= side || y >= side) return false;
    for (int i = 0; i < k; ++i) {
        Cell digit{static_cast<int>(x % d.n()), static_cast<int>(y % d.n())};
        if (!d.contains(digit)) return false;
        x /= d.n();
        y /= d.n();
    }
    return true;
}

DigitOrder parse_digit_order(const std::string& name) {
    if (name == "yx") return DigitOrder::BottomUp;
    if (name == "cc") return DigitOrder::CornersThenCenter;
    throw std::invalid_argument("unknown digit order '" + name + "' (want yx or cc)");
}

std::vector<Cell> ordered_digits(const DigitSet& d, DigitOrder order) {
    if (order == DigitOrder::BottomUp) return d.cells();
    int top = d.n() - 1;
    std::vector<Cell> corners, rest;
    for (const Cell& c : d.cells()) {
        bool corner = (c.x == 0 || c.x == top) && (c.y == 0 || c.y == top);
        (corner ? corners : rest).push_back(c);
    }
    corners.insert(corners.end(), rest.begin(), rest.end());
    return corners;
}

std::vector<Cell> cylinder_cells(const DigitSet& d, const std::vector<int>& prefix, int k,
                                 DigitOrder order, std::uint64_t max_cells) {
    if (k < static_cast<int>(prefix.size()))
        throw std::invalid_argument("cylinder: level shorter than the prefix");
    std::vector<Cell> digits = ordered_digits(d, order);
    std::int64_t side = level_side(d.n(), k, max_cells);
    // Offset of the cylinder block: the first symbol is the most significant digit.
    std::int64_t ox = 0, oy = 0;
    for (int s : prefix) {
        if (s < 1 || s > d.size())
            throw std::invalid_argument("cylinder: symbol out of range");
        const Cell& digit = digits[s - 1];
        ox = ox * d.n() + digit.x;
        oy = oy * d.n() + digit.y;
    }
    int rest = k - static_cast<int>(prefix.size());
    std::int64_t block = side;
    for (int i = 0; i < static_cast<int>(prefix.size()); ++i) block /= d.n();
    std::vector<Cell> out;
    for (const Cell& c : approximation_cells(d, rest, max_cells))
        out.push_back({static_cast<int>(ox * block + c.x), static_cast<int>(oy * block + c.y)});
    std::sort(out.begin(), out.end());
    return out;
}

std::array<bool, 4> corner_membership(const DigitSet& d) {
    int top = d.n() - 1;
    return {d.contains({0, 0}), d.contains({top, 0}), d.contains({0, top}),
            d.contains({top, top})};
}

}  // namespace fracsq
