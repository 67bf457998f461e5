#include <algorithm>

#include "doctest.h"
#include "fracsq/grid.hpp"
#include "support/catalog.hpp"

using namespace fracsq;

TEST_CASE("label matrix transform and round trip") {
    DigitSet tee = DigitSet::from_label_matrix({"010", "010", "111"});
    CHECK(tee.n() == 3);
    CHECK(tee.cells() == std::vector<Cell>{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {1, 2}});
    CHECK(tee.to_label_matrix() == std::vector<std::string>{"010", "010", "111"});

    // Row i, column j (0-based, top row first) marks cell (j, n-1-i).
    DigitSet tiny = DigitSet::from_label_matrix({"10", "01"});
    CHECK(tiny.cells() == std::vector<Cell>{{1, 0}, {0, 1}});

    for (int idx = 0; idx < 21; ++idx)
        CHECK(testsupport::five_cell(idx).to_label_matrix() == testsupport::kFiveCell[idx]);
}

TEST_CASE("digit set validation") {
    CHECK_THROWS_AS(DigitSet(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(DigitSet(3, {{0, 0}, {3, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(DigitSet(3, {{0, 0}, {-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(DigitSet(1, {{0, 0}}), std::invalid_argument);
    std::vector<Cell> full;
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x) full.push_back({x, y});
    CHECK_THROWS_AS(DigitSet(3, full), std::invalid_argument);
    CHECK_THROWS_AS(DigitSet::from_label_matrix({"10", "0"}), std::invalid_argument);
    CHECK_THROWS_AS(DigitSet::from_label_matrix({"10", "02"}), std::invalid_argument);
    CHECK_THROWS_AS(DigitSet::from_label_matrix({"00", "00"}), std::invalid_argument);
    // Duplicates collapse.
    CHECK(DigitSet(3, {{1, 1}, {1, 1}, {0, 0}}).size() == 2);
}

TEST_CASE("symbols follow the bottom-up cell order") {
    DigitSet tee = testsupport::five_cell(5);
    CHECK(tee.symbol_of({0, 0}) == 1);
    CHECK(tee.symbol_of({1, 0}) == 2);
    CHECK(tee.symbol_of({2, 0}) == 3);
    CHECK(tee.symbol_of({1, 1}) == 4);
    CHECK(tee.symbol_of({1, 2}) == 5);
    CHECK(tee.symbol_of({2, 2}) == 0);
    CHECK(tee.contains({1, 2}));
    CHECK_FALSE(tee.contains({2, 1}));
}

TEST_CASE("approximation follows the refinement recurrence") {
    DigitSet tee = testsupport::five_cell(5);
    std::uint64_t expected = 1;
    for (int k = 0; k <= 4; ++k) {
        Approximation a = approximation(tee, k);
        CHECK(a.kept.count() == expected);
        expected *= 5;
    }
    // Every level-(k+1) cell sits inside a kept level-k cell.
    Approximation a2 = approximation(tee, 2);
    Approximation a3 = approximation(tee, 3);
    for (const Cell& c : approximation_cells(tee, 3)) {
        CHECK(a3.kept.get(c.x, c.y));
        CHECK(a2.kept.get(c.x / 3, c.y / 3));
    }
    // Digit-wise membership agrees with the recurrence.
    for (int idx : {0, 5, 8, 18}) {
        DigitSet d = testsupport::five_cell(idx);
        auto cells = approximation_cells(d, 3);
        std::size_t count = 0;
        for (int x = 0; x < 27; ++x)
            for (int y = 0; y < 27; ++y)
                if (cell_kept(d, 3, x, y)) ++count;
        CHECK(count == cells.size());
        for (const Cell& c : cells) CHECK(cell_kept(d, 3, c.x, c.y));
    }
    auto sorted_cells = approximation_cells(tee, 2);
    CHECK(std::is_sorted(sorted_cells.begin(), sorted_cells.end()));
}

TEST_CASE("cell budget is enforced") {
    DigitSet tee = testsupport::five_cell(5);
    CHECK_THROWS_AS(approximation(tee, 4, 1000), CapExceeded);
    CHECK_THROWS_AS(level_side(3, 64), CapExceeded);
    CHECK(level_side(3, 3) == 27);
}

TEST_CASE("cylinder cells") {
    DigitSet tee = testsupport::five_cell(5);
    CHECK(cylinder_cells(tee, {2}, 2) ==
          std::vector<Cell>{{3, 0}, {4, 0}, {5, 0}, {4, 1}, {4, 2}});
    CHECK(cylinder_cells(tee, {}, 1) == approximation_cells(tee, 1));
    CHECK(cylinder_cells(tee, {5}, 1) == std::vector<Cell>{{1, 2}});

    DigitSet quincunx = testsupport::five_cell(8);
    CHECK(cylinder_cells(quincunx, {5, 5}, 3, DigitOrder::CornersThenCenter) ==
          std::vector<Cell>{{12, 12}, {14, 12}, {13, 13}, {12, 14}, {14, 14}});

    CHECK_THROWS_AS(cylinder_cells(tee, {6}, 2), std::invalid_argument);
    CHECK_THROWS_AS(cylinder_cells(tee, {1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("digit orders") {
    DigitSet quincunx = testsupport::five_cell(8);
    CHECK(ordered_digits(quincunx, DigitOrder::BottomUp) ==
          std::vector<Cell>{{0, 0}, {2, 0}, {1, 1}, {0, 2}, {2, 2}});
    CHECK(ordered_digits(quincunx, DigitOrder::CornersThenCenter) ==
          std::vector<Cell>{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
    CHECK(parse_digit_order("yx") == DigitOrder::BottomUp);
    CHECK(parse_digit_order("cc") == DigitOrder::CornersThenCenter);
    CHECK_THROWS_AS(parse_digit_order("xy"), std::invalid_argument);
}

TEST_CASE("corner membership") {
    CHECK(corner_membership(testsupport::five_cell(8)) ==
          std::array<bool, 4>{true, true, true, true});
    CHECK(corner_membership(testsupport::five_cell(5)) ==
          std::array<bool, 4>{true, true, false, false});
    CHECK(corner_membership(DigitSet(3, {{1, 1}})) ==
          std::array<bool, 4>{false, false, false, false});
}
