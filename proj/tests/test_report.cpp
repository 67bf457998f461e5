#include <algorithm>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fracsq/report.hpp"
#include "support/catalog.hpp"

using namespace fracsq;

TEST_CASE("token helpers") {
    CHECK(line_token({LineCertificate::Kind::Column, 1}) == "col1");
    CHECK(line_token({LineCertificate::Kind::Row, 0}) == "row0");
    CHECK(line_token({LineCertificate::Kind::MainDiag, 0}) == "diag");
    CHECK(line_token({LineCertificate::Kind::AntiDiag, 0}) == "adiag");
    CHECK(order_name(DigitOrder::BottomUp) == std::string("yx"));
    CHECK(order_name(DigitOrder::CornersThenCenter) == std::string("cc"));
}

TEST_CASE("plain bitmap rendering") {
    CHECK(render_pbm(tee_digit_set(), 1) == "P1\n3 3\n0 1 0\n0 1 0\n1 1 1\n");
    CHECK(render_pbm(quincunx_digit_set(), 1) == "P1\n3 3\n1 0 1\n0 1 0\n1 0 1\n");
    std::string pbm2 = render_pbm(tee_digit_set(), 2);
    CHECK(pbm2.substr(0, 7) == "P1\n9 9\n");
    // Skip the "P1\n9 9\n" header so the magic number's '1' is not counted.
    CHECK(std::count(pbm2.begin() + 7, pbm2.end(), '1') == 25);
}

TEST_CASE("svg rendering") {
    std::string svg = render_svg(tee_digit_set(), 1);
    CHECK(svg.find("viewBox=\"0 0 3 3\"") != std::string::npos);
    CHECK(svg.find("shape-rendering=\"crispEdges\"") != std::string::npos);
    // The stem tip (1,2) lands in the top SVG row after the y flip.
    CHECK(svg.find("<rect x=\"1\" y=\"0\" width=\"1\" height=\"1\" fill=\"#000000\"/>") !=
          std::string::npos);
    std::size_t cells = 0;
    for (std::size_t pos = svg.find("#000000"); pos != std::string::npos;
         pos = svg.find("#000000", pos + 1))
        ++cells;
    CHECK(cells == 5);
}

TEST_CASE("classification record serialization") {
    ClassificationRecord tee = classify_record(tee_digit_set());
    Json j = record_json(tee);
    CHECK(j["n"] == 3);
    CHECK(j["m"] == 5);
    CHECK(j["type"] == "II");
    CHECK(j["connected"] == true);
    CHECK(j["presumed"] == false);
    CHECK(j["certificates"]["vpath_level"].is_null());
    CHECK(j["certificates"]["lines"] == Json::array({"col1", "row0"}));
    CHECK(j["certificates"]["hata_tree"].size() == 4);
    CHECK(j["equiv_class"].is_null());
    CHECK(j["matrix"] == Json(std::vector<std::string>{"010", "010", "111"}));
    // Byte-stable round trip.
    std::string dumped = j.dump(2);
    CHECK(Json::parse(dumped).dump(2) == dumped);

    ClassificationRecord flat = classify_record(testsupport::five_cell(11));
    Json f = record_json(flat);
    CHECK(f["type"] == "III");
    CHECK(f["certificates"]["hpath_level"] == 1);
    CHECK(f["certificates"]["orientation"] == "row0");
    CHECK(f["boundary_cover"]["vertical"].contains("left"));
}

TEST_CASE("csv rows") {
    CHECK(record_csv_header() ==
          "canonical_key,m,type,connected,vpath_level,hpath_level,lambda_level,lines,equiv_class");
    ClassificationRecord flat = classify_record(testsupport::five_cell(11));
    CHECK(record_csv_row(flat) == flat.key.hex() + ",5,III,false,,1,,row0,");
    ClassificationRecord tee = classify_record(tee_digit_set());
    CHECK(record_csv_row(tee) == tee.key.hex() + ",5,II,true,,,,col1|row0,");
}

TEST_CASE("witness and partition serialization") {
    auto w = search_witness(testsupport::five_cell(18), testsupport::five_cell(19));
    REQUIRE(w.has_value());
    Json wj = witness_json(*w);
    CHECK(wj["A"] == Json::array({Json::array({"1", "-1"}), Json::array({"1", "0"})}));
    CHECK(wj["v"] == Json::array({"1/2", "0"}));

    Json pj = partition_json(equivalence_classes(3, 4));
    CHECK(pj["classes"].size() == 2);
    bool saw_td = false, saw_witness = false;
    for (const Json& item : pj["provenance"]) {
        CHECK(item.contains("a"));
        CHECK(item.contains("b"));
        if (item["kind"] == "totally-disconnected") saw_td = true;
        if (item["kind"] == "witness") {
            saw_witness = true;
            CHECK(item.contains("witness"));
        }
    }
    CHECK(saw_td);
    CHECK(saw_witness);
}

TEST_CASE("fingerprint serialization") {
    Json fp = fingerprint_json(fingerprint(quincunx_digit_set(), 4, DigitOrder::CornersThenCenter));
    CHECK(fp["connected"] == true);
    CHECK(fp["digit_order"] == "cc");
    CHECK(fp["full_edge_tree_up_to"] == 0);
    CHECK(fp["first_cycle_level"].is_null());
    REQUIRE(fp["branch_samples"].size() == 5);
    CHECK(fp["branch_samples"][4]["components"] == 4);
    CHECK(fp["branch_samples"][4]["prefix"] == Json::array({5}));
}

TEST_CASE("scans over a whole family") {
    ScanResult scan = run_scan(3, 8);
    REQUIRE(scan.records.size() == 3);
    for (const ClassificationRecord& rec : scan.records) {
        CHECK(rec.decision.type == FsType::Connected);
        REQUIRE(rec.equiv_class.has_value());
        CHECK(scan.partition.class_of.at(rec.key.hex()) == *rec.equiv_class);
    }
    // Removing a corner, an edge midpoint, or the center leaves configurations
    // with different numbers of full grid lines, so no witness can merge them.
    CHECK(scan.partition.classes.size() == 3);
    CHECK(scan.partition.provenance.empty());
    CHECK(scan.burnside_dihedral == 3);

    Json sj = scan_json(scan);
    CHECK(sj["summary"]["congruence_classes"] == 3);
    CHECK(sj["summary"]["by_type"]["II"] == 3);
    CHECK(sj["summary"]["equiv_classes_upper_bound"] == 3);
    CHECK(sj["classes"].size() == 3);

    std::string csv = scan_csv(scan);
    CHECK(csv.rfind(record_csv_header() + "\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

    std::string text = scan_text(scan);
    CHECK(text.find("type II: 3") != std::string::npos);
}

TEST_CASE("atlas output") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "fracsq_atlas_test";
    fs::remove_all(dir);
    AtlasResult atlas = write_atlas(3, 8, 2, dir.string(), "pbm");
    CHECK(atlas.counts.at("II") == 3);
    CHECK(atlas.counts.at("I") == 0);
    REQUIRE(atlas.files.size() == 3);
    for (const std::string& name : atlas.files) {
        CHECK(name.rfind("II_0", 0) == 0);
        CHECK(name.size() > 4);
        CHECK(name.substr(name.size() - 4) == ".pbm");
        CHECK(fs::exists(dir / name));
    }
    std::ifstream index(dir / atlas.index_file);
    REQUIRE(index.good());
    Json parsed = Json::parse(index);
    CHECK(parsed["counts"]["II"] == 3);
    CHECK(parsed["panels"].size() == 3);
    CHECK(parsed["format"] == "pbm");
    CHECK_THROWS_AS(write_atlas(3, 8, 1, dir.string(), "png"), std::invalid_argument);
    fs::remove_all(dir);
}
