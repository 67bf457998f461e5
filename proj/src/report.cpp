#include "fracsq/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fracsq {

ClassificationRecord classify_record(const DigitSet& d, int kmax, std::uint64_t max_cells) {
    ClassificationRecord rec{d,
                             canonical_form(d),
                             classify_type(d, kmax, max_cells),
                             boundary_line_cover(d, true),
                             boundary_line_cover(d, false),
                             std::nullopt};
    return rec;
}

std::string line_token(const LineCertificate& line) {
    switch (line.kind) {
        case LineCertificate::Kind::Column: return "col" + std::to_string(line.index);
        case LineCertificate::Kind::Row: return "row" + std::to_string(line.index);
        case LineCertificate::Kind::MainDiag: return "diag";
        case LineCertificate::Kind::AntiDiag: return "adiag";
    }
    return "?";
}

const char* order_name(DigitOrder order) {
    return order == DigitOrder::BottomUp ? "yx" : "cc";
}

namespace {

Json chain_json(const std::vector<Cell>& chain) {
    Json out = Json::array();
    for (const Cell& c : chain) out.push_back(Json::array({c.x, c.y}));
    return out;
}

Json cover_json(const BoundaryCover& cover) {
    return Json{{"left", cover.left}, {"right", cover.right}, {"both", cover.both}};
}

}  // namespace

Json record_json(const ClassificationRecord& rec) {
    const TypeDecision& dec = rec.decision;
    Json certs;
    certs["vpath_level"] = dec.vpath ? Json(dec.vpath->level) : Json(nullptr);
    certs["hpath_level"] = dec.hpath ? Json(dec.hpath->level) : Json(nullptr);
    certs["lambda_level"] = dec.lambda ? Json(dec.lambda->level) : Json(nullptr);
    if (dec.vpath) certs["vpath_chain"] = chain_json(dec.vpath->chain);
    if (dec.hpath) certs["hpath_chain"] = chain_json(dec.hpath->chain);
    if (dec.lambda) certs["lambda_chain"] = chain_json(dec.lambda->chain);
    Json lines = Json::array();
    for (const LineCertificate& line : dec.lines) lines.push_back(line_token(line));
    certs["lines"] = lines;
    certs["orientation"] = dec.orientation ? Json(line_token(*dec.orientation)) : Json(nullptr);
    if (!dec.hata_tree.empty() || (dec.connected && rec.d.size() == 1)) {
        Json tree = Json::array();
        for (auto [a, b] : dec.hata_tree) tree.push_back(Json::array({a, b}));
        certs["hata_tree"] = tree;
    }

    Json out;
    out["n"] = rec.d.n();
    out["m"] = rec.d.size();
    out["canonical_key"] = rec.key.hex();
    out["matrix"] = rec.d.to_label_matrix();
    out["type"] = type_label(dec.type);
    out["connected"] = dec.connected;
    out["presumed"] = dec.presumed;
    out["scan_depth"] = dec.scan_depth;
    out["certificates"] = certs;
    out["boundary_cover"] =
        Json{{"vertical", cover_json(rec.vertical_cover)},
             {"horizontal", cover_json(rec.horizontal_cover)}};
    out["equiv_class"] = rec.equiv_class ? Json(*rec.equiv_class) : Json(nullptr);
    return out;
}

Json witness_json(const AffineWitness& w) {
    Json out;
    out["A"] = Json::array({Json::array({rat_to_string(w.A.a), rat_to_string(w.A.b)}),
                            Json::array({rat_to_string(w.A.c), rat_to_string(w.A.d)})});
    out["v"] = Json::array({rat_to_string(w.v.x), rat_to_string(w.v.y)});
    return out;
}

Json partition_json(const EquivalencePartition& partition) {
    Json classes = Json::array();
    for (const auto& members : partition.classes) classes.push_back(members);
    Json provenance = Json::array();
    for (const MergeRecord& merge : partition.provenance) {
        Json item;
        item["a"] = merge.a;
        item["b"] = merge.b;
        item["kind"] = merge.kind == MergeRecord::Kind::TotallyDisconnected
                           ? "totally-disconnected"
                           : "witness";
        if (merge.witness) item["witness"] = witness_json(*merge.witness);
        provenance.push_back(item);
    }
    return Json{{"classes", classes}, {"provenance", provenance}};
}

Json fingerprint_json(const Fingerprint& fp) {
    Json samples = Json::array();
    for (const BranchSample& s : fp.branch_samples)
        samples.push_back(Json{{"prefix", s.prefix}, {"level", s.level},
                               {"components", s.components}});
    Json out;
    out["connected"] = fp.connected;
    out["full_edge_tree_up_to"] = fp.full_edge_tree_up_to;
    out["first_cycle_level"] =
        fp.first_cycle_level ? Json(*fp.first_cycle_level) : Json(nullptr);
    out["digit_order"] = order_name(fp.order);
    out["branch_samples"] = samples;
    return out;
}

std::string record_csv_header() {
    return "canonical_key,m,type,connected,vpath_level,hpath_level,lambda_level,lines,"
           "equiv_class";
}

std::string record_csv_row(const ClassificationRecord& rec) {
    const TypeDecision& dec = rec.decision;
    auto level = [](const std::optional<PathCertificate>& cert) {
        return cert ? std::to_string(cert->level) : std::string();
    };
    std::string lines;
    for (const LineCertificate& line : dec.lines) {
        if (!lines.empty()) lines += "|";
        lines += line_token(line);
    }
    std::ostringstream out;
    out << rec.key.hex() << ',' << rec.d.size() << ',' << type_label(dec.type) << ','
        << (dec.connected ? "true" : "false") << ',' << level(dec.vpath) << ','
        << level(dec.hpath) << ',' << level(dec.lambda) << ',' << lines << ','
        << (rec.equiv_class ? std::to_string(*rec.equiv_class) : std::string());
    return out.str();
}

std::string record_text(const ClassificationRecord& rec) {
    const TypeDecision& dec = rec.decision;
    std::ostringstream out;
    out << "key " << rec.key.hex() << "  n=" << rec.d.n() << " m=" << rec.d.size()
        << "  type " << type_label(dec.type) << (dec.presumed ? " (presumed)" : "")
        << "  connected=" << (dec.connected ? "yes" : "no") << "\n";
    for (const std::string& row : rec.d.to_label_matrix()) out << "  " << row << "\n";
    if (!dec.lines.empty()) {
        out << "  lines:";
        for (const LineCertificate& line : dec.lines) out << ' ' << line_token(line);
        out << "\n";
    }
    if (dec.vpath)
        out << "  vertical complement path at level " << dec.vpath->level << " (column "
            << dec.vpath->anchor << ")\n";
    if (dec.hpath)
        out << "  horizontal complement path at level " << dec.hpath->level << " (row "
            << dec.hpath->anchor << ")\n";
    if (dec.lambda) out << "  corner component path at level " << dec.lambda->level << "\n";
    if (!dec.hata_tree.empty())
        out << "  spanning tree over " << rec.d.size() << " pieces (" << dec.hata_tree.size()
            << " contacts)\n";
    if (rec.equiv_class) out << "  equivalence class " << *rec.equiv_class << "\n";
    return out.str();
}

std::string render_pbm(const DigitSet& d, int k, std::uint64_t max_cells) {
    Approximation a = approximation(d, k, max_cells);
    std::int64_t side = a.kept.side();
    std::ostringstream out;
    out << "P1\n" << side << ' ' << side << '\n';
    for (std::int64_t y = side - 1; y >= 0; --y) {
        for (std::int64_t x = 0; x < side; ++x) {
            if (x) out << ' ';
            out << (a.kept.get(x, y) ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

std::string render_svg(const DigitSet& d, int k, std::uint64_t max_cells) {
    std::int64_t side = level_side(d.n(), k, max_cells);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << side << ' ' << side
        << "\" shape-rendering=\"crispEdges\">\n";
    out << "<rect width=\"" << side << "\" height=\"" << side << "\" fill=\"#ffffff\"/>\n";
    for (const Cell& c : approximation_cells(d, k, max_cells))
        out << "<rect x=\"" << c.x << "\" y=\"" << side - 1 - c.y
            << "\" width=\"1\" height=\"1\" fill=\"#000000\"/>\n";
    out << "</svg>\n";
    return out.str();
}

ScanResult run_scan(int n, int m, int kmax, const WitnessBounds& bounds,
                    std::uint64_t max_cells) {
    ScanResult out;
    out.n = n;
    out.m = m;
    std::vector<DigitSet> reps = enumerate_classes(n, m);
    EquivConfig cfg;
    cfg.kmax = kmax;
    cfg.bounds = bounds;
    cfg.max_cells = max_cells;
    out.partition = equivalence_classes(reps, cfg);
    for (const DigitSet& rep : reps) {
        ClassificationRecord rec = classify_record(rep, kmax, max_cells);
        rec.equiv_class = out.partition.class_of.at(rec.key.hex());
        out.records.push_back(std::move(rec));
    }
    out.burnside_dihedral = burnside_count_dihedral(n, m);
    return out;
}

namespace {

std::map<std::string, int> type_counts(const std::vector<ClassificationRecord>& records) {
    std::map<std::string, int> counts{{"I", 0}, {"II", 0}, {"III", 0}, {"UNKNOWN", 0}};
    for (const ClassificationRecord& rec : records) ++counts[type_label(rec.decision.type)];
    return counts;
}

}  // namespace

Json scan_json(const ScanResult& scan) {
    Json records = Json::array();
    for (const ClassificationRecord& rec : scan.records) records.push_back(record_json(rec));
    Json by_type;
    for (const auto& [label, count] : type_counts(scan.records)) by_type[label] = count;
    Json out;
    out["n"] = scan.n;
    out["m"] = scan.m;
    out["summary"] = Json{{"congruence_classes", scan.records.size()},
                          {"by_type", by_type},
                          {"equiv_classes_upper_bound", scan.partition.classes.size()},
                          {"burnside_dihedral", scan.burnside_dihedral}};
    out["classes"] = records;
    out["equivalence"] = partition_json(scan.partition);
    return out;
}

std::string scan_csv(const ScanResult& scan) {
    std::ostringstream out;
    out << record_csv_header() << '\n';
    for (const ClassificationRecord& rec : scan.records) out << record_csv_row(rec) << '\n';
    return out.str();
}

std::string scan_text(const ScanResult& scan) {
    std::ostringstream out;
    out << "n=" << scan.n << " m=" << scan.m << ": " << scan.records.size()
        << " congruence classes, " << scan.partition.classes.size()
        << " equivalence classes (upper bound), burnside dihedral count "
        << scan.burnside_dihedral << "\n";
    for (const auto& [label, count] : type_counts(scan.records))
        if (count) out << "  type " << label << ": " << count << "\n";
    out << "\n";
    for (const ClassificationRecord& rec : scan.records) out << record_text(rec) << "\n";
    return out.str();
}

AtlasResult write_atlas(int n, int m, int render_level, const std::string& out_dir,
                        const std::string& format, int kmax, std::uint64_t max_cells) {
    if (format != "pbm" && format != "svg")
        throw std::invalid_argument("atlas: format must be pbm or svg");
    std::filesystem::create_directories(out_dir);
    AtlasResult result;
    result.counts = {{"I", 0}, {"II", 0}, {"III", 0}, {"UNKNOWN", 0}};
    Json panels = Json::array();
    for (const DigitSet& rep : enumerate_classes(n, m)) {
        ClassificationRecord rec = classify_record(rep, kmax, max_cells);
        std::string label = type_label(rec.decision.type);
        int idx = result.counts[label]++;
        std::ostringstream name;
        name << label << '_' << (idx < 10 ? "0" : "") << idx << '_' << rec.key.hex() << '.'
             << format;
        std::string body = format == "pbm" ? render_pbm(rep, render_level, max_cells)
                                           : render_svg(rep, render_level, max_cells);
        std::ofstream file(std::filesystem::path(out_dir) / name.str(), std::ios::binary);
        file << body;
        if (!file) throw std::runtime_error("atlas: failed to write " + name.str());
        result.files.push_back(name.str());
        panels.push_back(Json{{"file", name.str()},
                              {"canonical_key", rec.key.hex()},
                              {"type", label},
                              {"connected", rec.decision.connected},
                              {"presumed", rec.decision.presumed}});
    }
    Json index;
    index["n"] = n;
    index["m"] = m;
    index["level"] = render_level;
    index["format"] = format;
    Json counts;
    for (const auto& [label, count] : result.counts) counts[label] = count;
    index["counts"] = counts;
    index["panels"] = panels;
    std::ofstream file(std::filesystem::path(out_dir) / "index.json", std::ios::binary);
    file << index.dump(2) << '\n';
    if (!file) throw std::runtime_error("atlas: failed to write index.json");
    result.index_file = "index.json";
    return result;
}

}  // namespace fracsq
