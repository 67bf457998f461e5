#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fracsq/congruence.hpp"
#include "fracsq/grid.hpp"
#include "fracsq/paths.hpp"
#include "fracsq/topology.hpp"
#include "fracsq/witness.hpp"

namespace fracsq {

using Json = nlohmann::ordered_json;

struct ClassificationRecord {
    DigitSet d;
    CanonicalKey key;
    TypeDecision decision;
    BoundaryCover vertical_cover, horizontal_cover;
    std::optional<int> equiv_class;
};

ClassificationRecord classify_record(const DigitSet& d, int kmax = 6,
                                     std::uint64_t max_cells = kDefaultCellCap);

std::string line_token(const LineCertificate& line);  // col<c>, row<r>, diag, adiag
const char* order_name(DigitOrder order);             // "yx", "cc"

Json record_json(const ClassificationRecord& rec);
Json witness_json(const AffineWitness& w);
Json partition_json(const EquivalencePartition& partition);
Json fingerprint_json(const Fingerprint& fp);

std::string record_csv_header();
std::string record_csv_row(const ClassificationRecord& rec);
std::string record_text(const ClassificationRecord& rec);

// Bitmap renderers at level k; PBM is plain P1 with the top row first.
std::string render_pbm(const DigitSet& d, int k, std::uint64_t max_cells = kDefaultCellCap);
std::string render_svg(const DigitSet& d, int k, std::uint64_t max_cells = kDefaultCellCap);

struct ScanResult {
    int n = 0, m = 0;
    std::vector<ClassificationRecord> records;  // key order
    EquivalencePartition partition;
    std::uint64_t burnside_dihedral = 0;
};

ScanResult run_scan(int n, int m, int kmax = 6, const WitnessBounds& bounds = {},
                    std::uint64_t max_cells = kDefaultCellCap);
Json scan_json(const ScanResult& scan);
std::string scan_csv(const ScanResult& scan);
std::string scan_text(const ScanResult& scan);

struct AtlasResult {
    std::map<std::string, int> counts;   // per type label
    std::vector<std::string> files;      // panel file names in key order
    std::string index_file;
};

AtlasResult write_atlas(int n, int m, int render_level, const std::string& out_dir,
                        const std::string& format = "pbm", int kmax = 6,
                        std::uint64_t max_cells = kDefaultCellCap);

}  // namespace fracsq
