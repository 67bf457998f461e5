#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fracsq/grid.hpp"
#include "fracsq/neighbor.hpp"

namespace fracsq {

enum class PathKind { Vertical, Horizontal, Cross, Lambda };

// A 4-connected chain of removed cells witnessing a crossing of the
// complement. Vertical chains start at (anchor, 0) and end at
// (anchor, side-1); horizontal ones are the transpose. Lambda chains are
// connected and touch at least three corner cells.
struct PathCertificate {
    PathKind kind = PathKind::Vertical;
    int level = 0;
    int anchor = -1;  // column (vertical) or row (horizontal); -1 for lambda
    std::vector<Cell> chain;
};

std::optional<PathCertificate> complement_path(const DigitSet& d, PathKind kind, int kmax,
                                               std::uint64_t max_cells = kDefaultCellCap);
std::optional<std::pair<PathCertificate, PathCertificate>> cross_path(
    const DigitSet& d, int kmax, std::uint64_t max_cells = kDefaultCellCap);
std::optional<PathCertificate> lambda_path(const DigitSet& d, int kmax,
                                           std::uint64_t max_cells = kDefaultCellCap);
bool validate_certificate(const DigitSet& d, const PathCertificate& cert,
                          std::uint64_t max_cells = kDefaultCellCap);

// Full grid lines inside D; each one yields a straight segment in the
// attractor (column c -> x = c/(n-1), main diagonal -> y = x, ...).
struct LineCertificate {
    enum class Kind { Column, Row, MainDiag, AntiDiag };
    Kind kind = Kind::Column;
    int index = 0;  // column/row index; 0 for diagonals
};

std::vector<LineCertificate> full_lines(const DigitSet& d);

// Subset automaton deciding whether a grid line on the unit-square boundary
// pattern can stay covered by pieces from the given side(s) forever. For the
// vertical orientation "left"/"right" are the pieces west/east of the line;
// for the horizontal orientation they are the pieces below/above.
struct BoundaryCover {
    bool left = false;
    bool right = false;
    bool both = false;
};

BoundaryCover boundary_line_cover(const DigitSet& d, bool vertical);

enum class FsType { TotallyDisconnected, Connected, ParallelSegments, Unknown };

const char* type_label(FsType t);  // "I", "II", "III", "UNKNOWN"

struct TypeDecision {
    FsType type = FsType::Unknown;
    bool connected = false;
    bool presumed = false;  // parallel-segments verdict without a path certificate
    int scan_depth = 0;
    std::optional<PathCertificate> vpath, hpath, lambda;
    std::vector<LineCertificate> lines;
    std::vector<std::pair<int, int>> hata_tree;   // spanning tree when connected
    std::optional<LineCertificate> orientation;   // segment direction for type III
};

// Decide the topological type: connected attractors (with more than one
// digit) are type II; otherwise scan levels 1..kmax for complement-path
// certificates, falling back to a presumed segment verdict when full lines
// exist but no path was found.
TypeDecision classify_type(const DigitSet& d, int kmax = 6,
                           std::uint64_t max_cells = kDefaultCellCap);

// Digit set with the diagonal partially removed and the anti-diagonal fully
// removed; the attractor is totally disconnected with m = n^2 - n - n/2.
DigitSet construct_td_digitset(int n);

}  // namespace fracsq
