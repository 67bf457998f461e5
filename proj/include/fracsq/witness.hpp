#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracsq/congruence.hpp"
#include "fracsq/grid.hpp"
#include "fracsq/rational.hpp"

namespace fracsq {

// Invertible affine map g(x) = Ax + v carrying one attractor onto another.
// On digit sets the defining identity is {A d + (n-1) v : d in D} = D'.
struct AffineWitness {
    Mat2 A;
    Vec2 v;
};

enum class WitnessCheck { Ok, Singular, Mismatch };

WitnessCheck verify_witness(const Mat2& A, const Vec2& v, const DigitSet& from,
                            const DigitSet& to);

struct WitnessBounds {
    long long numerator_range = 2;            // candidate entries p/q with |p| <= range
    std::vector<long long> denominators = {1, 2};
};

// Entry candidates in deterministic search order (small denominators first,
// small magnitudes first, positive before negative).
std::vector<Rat> witness_entry_candidates(const WitnessBounds& bounds);

// Scan matrices in lexicographic candidate order; the translation is forced
// by the digit-set centroids, never searched.
std::optional<AffineWitness> search_witness(const DigitSet& from, const DigitSet& to,
                                            const WitnessBounds& bounds = {});

AffineWitness compose_witness(const AffineWitness& first, const AffineWitness& second);
AffineWitness invert_witness(const AffineWitness& w);

struct MergeRecord {
    enum class Kind { TotallyDisconnected, Witness };
    std::string a, b;  // canonical keys, a < b
    Kind kind = Kind::Witness;
    std::optional<AffineWitness> witness;
};

struct EquivalencePartition {
    std::vector<std::vector<std::string>> classes;  // sorted keys, classes by first key
    std::vector<MergeRecord> provenance;
    std::map<std::string, int> class_of;
};

struct EquivConfig {
    int kmax = 6;
    WitnessBounds bounds;
    std::uint64_t max_cells = kDefaultCellCap;
};

// Merge congruence classes that are provably bi-Lipschitz equivalent: all
// certified totally disconnected classes coincide, and affine witnesses merge
// further pairs. The result is an upper bound on the true class count.
EquivalencePartition equivalence_classes(const std::vector<DigitSet>& reps,
                                         const EquivConfig& cfg = {});
EquivalencePartition equivalence_classes(int n, int m, const EquivConfig& cfg = {});

}  // namespace fracsq
