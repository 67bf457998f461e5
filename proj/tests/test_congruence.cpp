#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fracsq/congruence.hpp"
#include "support/catalog.hpp"

using namespace fracsq;

TEST_CASE("symmetry images") {
    auto imgs = d4_images(testsupport::five_cell(6));
    // Horizontal flip of the left-column comb moves the column to the right.
    CHECK(imgs[4].cells() == std::vector<Cell>{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}});
    CHECK(imgs[0].cells() == testsupport::five_cell(6).cells());

    auto quin = d4_images(testsupport::five_cell(8));
    for (const DigitSet& im : quin) CHECK(im.cells() == testsupport::five_cell(8).cells());
}

TEST_CASE("canonical key is a symmetry and translation invariant") {
    for (int idx = 0; idx < 21; ++idx) {
        DigitSet d = testsupport::five_cell(idx);
        CanonicalKey key = canonical_form(d);
        CHECK(key.hex().size() == 4);  // ceil(9/8) = 2 bytes
        for (const DigitSet& im : d4_images(d)) CHECK(canonical_form(im) == key);
        DigitSet rep = canonical_representative(d);
        CHECK(canonical_form(rep) == key);
        // Shifting within the grid must not change the key either.
        int max_x = 0, max_y = 0;
        for (const Cell& c : d.cells()) {
            max_x = std::max(max_x, c.x);
            max_y = std::max(max_y, c.y);
        }
        for (int sx = 0; sx + max_x < d.n(); ++sx)
            for (int sy = 0; sy + max_y < d.n(); ++sy) {
                std::vector<Cell> moved;
                for (const Cell& c : d.cells()) moved.push_back({c.x + sx, c.y + sy});
                CHECK(canonical_form(DigitSet(d.n(), moved)) == key);
            }
    }
}

TEST_CASE("the catalog lists pairwise incongruent sets") {
    std::set<CanonicalKey> keys;
    for (int idx = 0; idx < 21; ++idx) keys.insert(canonical_form(testsupport::five_cell(idx)));
    CHECK(keys.size() == 21);
}

TEST_CASE("class enumeration counts on the 3x3 grid") {
    CHECK(enumerate_classes(3, 5).size() == 21);
    CHECK(enumerate_classes(3, 6).size() == 16);
    CHECK(enumerate_classes(3, 7).size() == 8);
    CHECK(enumerate_classes(3, 8).size() == 3);

    std::set<CanonicalKey> from_enum, from_catalog;
    for (const DigitSet& d : enumerate_classes(3, 5)) {
        CHECK(d.size() == 5);
        from_enum.insert(canonical_form(d));
    }
    for (int idx = 0; idx < 21; ++idx) from_catalog.insert(canonical_form(testsupport::five_cell(idx)));
    CHECK(from_enum == from_catalog);

    // Representatives come back sorted by key.
    std::vector<DigitSet> reps = enumerate_classes(3, 5);
    for (size_t i = 1; i < reps.size(); ++i)
        CHECK(canonical_form(reps[i - 1]) < canonical_form(reps[i]));
}

TEST_CASE("orbit counting lemma agrees with explicit orbit enumeration") {
    for (int m = 1; m <= 8; ++m)
        CHECK(burnside_count_dihedral(3, m) == testsupport::oracle_dihedral_orbits(3, m));
    CHECK(burnside_count_dihedral(3, 5) == 23);
    CHECK(burnside_count_dihedral(3, 1) == 3);
}

TEST_CASE("congruence classes partition the five-cell subsets") {
    std::map<CanonicalKey, std::uint64_t> orbit_sizes;
    std::vector<Cell> all;
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x) all.push_back({x, y});
    std::uint64_t total = 0;
    for (std::uint32_t mask = 1; mask < (1u << 9); ++mask) {
        if (__builtin_popcount(mask) != 5) continue;
        std::vector<Cell> cells;
        for (int i = 0; i < 9; ++i)
            if (mask & (1u << i)) cells.push_back(all[i]);
        ++orbit_sizes[canonical_form(DigitSet(3, cells))];
        ++total;
    }
    CHECK(total == 126);  // C(9,5)
    CHECK(orbit_sizes.size() == 21);
    std::uint64_t sum = 0;
    for (const auto& [key, size] : orbit_sizes) sum += size;
    CHECK(sum == 126);
}
