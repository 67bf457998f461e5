#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fracsq/grid.hpp"

namespace fracsq {

// Canonical label under the dihedral group of the square plus grid
// translations: every symmetry image is anchored at the origin of its
// bounding box, encoded as an n^2-bit row-major mask, and the
// lexicographically smallest encoding wins.
struct CanonicalKey {
    int n = 0;
    std::vector<std::uint8_t> bytes;

    std::string hex() const;

    friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) {
        return a.n == b.n && a.bytes == b.bytes;
    }
    friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
        return a.n != b.n ? a.n < b.n : a.bytes < b.bytes;
    }
};

// The eight symmetry images in a fixed order: identity, rotations by 90, 180,
// 270 degrees, horizontal flip, vertical flip, transpose, anti-transpose.
std::array<DigitSet, 8> d4_images(const DigitSet& d);

CanonicalKey canonical_form(const DigitSet& d);
// The anchored symmetry image realizing the canonical key.
DigitSet canonical_representative(const DigitSet& d);

// One representative per congruence class of m-cell digit sets, sorted by key.
std::vector<DigitSet> enumerate_classes(int n, int m);

// Orbit count under the dihedral group alone (no translations), via the
// orbit-counting lemma with a per-element cycle knapsack.
std::uint64_t burnside_count_dihedral(int n, int m);

}  // namespace fracsq
