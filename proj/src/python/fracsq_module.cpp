// Thin string/JSON bindings over the core library. Structured results cross
// the boundary as JSON text so the Python side stays decoupled from the C++
// struct layout; fracsq/__init__.py parses them back into dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "fracsq/report.hpp"

namespace py = pybind11;
using namespace fracsq;

namespace {

DigitSet set_from_rows(const std::vector<std::string>& rows) {
    return DigitSet::from_label_matrix(rows);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact modelling and classification of fractal squares";

    mod.def(
        "classify",
        [](const std::vector<std::string>& rows, int kmax) {
            return record_json(classify_record(set_from_rows(rows), kmax)).dump();
        },
        py::arg("rows"), py::arg("kmax") = 6,
        "Classification record for a label matrix (rows top first), as JSON text.");

    mod.def(
        "fingerprint",
        [](const std::vector<std::string>& rows, int depth, const std::string& order) {
            DigitSet d = set_from_rows(rows);
            return fingerprint_json(fingerprint(d, depth, parse_digit_order(order))).dump();
        },
        py::arg("rows"), py::arg("depth") = 4, py::arg("order") = "yx",
        "Topological fingerprint (trees, cycles, deletion samples), as JSON text.");

    mod.def(
        "equivalence",
        [](int n, int m) { return partition_json(equivalence_classes(n, m)).dump(); },
        py::arg("n"), py::arg("m"),
        "Equivalence partition of the (n, m) congruence classes, as JSON text.");

    mod.def(
        "search_witness",
        [](const std::vector<std::string>& rows_from,
           const std::vector<std::string>& rows_to) -> py::object {
            auto w = search_witness(set_from_rows(rows_from), set_from_rows(rows_to));
            if (!w) return py::none();
            return py::str(witness_json(*w).dump());
        },
        py::arg("rows_from"), py::arg("rows_to"),
        "Affine map carrying one attractor onto the other (JSON text), or None.");

    mod.def(
        "enumerate_keys",
        [](int n, int m) {
            std::vector<std::string> out;
            for (const DigitSet& d : enumerate_classes(n, m))
                out.push_back(canonical_form(d).hex());
            return out;
        },
        py::arg("n"), py::arg("m"), "Canonical keys of all (n, m) congruence classes.");

    mod.def(
        "burnside", [](int n, int m) { return burnside_count_dihedral(n, m); }, py::arg("n"),
        py::arg("m"), "Orbit count of m-cell digit sets under the square symmetries alone.");

    mod.def(
        "render_pbm",
        [](const std::vector<std::string>& rows, int k) {
            return render_pbm(set_from_rows(rows), k);
        },
        py::arg("rows"), py::arg("k"), "Plain PBM bitmap of the level-k approximation.");

    mod.def(
        "render_svg",
        [](const std::vector<std::string>& rows, int k) {
            return render_svg(set_from_rows(rows), k);
        },
        py::arg("rows"), py::arg("k"), "SVG drawing of the level-k approximation.");

    mod.def(
        "scan_csv", [](int n, int m, int kmax) { return scan_csv(run_scan(n, m, kmax)); },
        py::arg("n"), py::arg("m"), py::arg("kmax") = 6,
        "CSV census of all (n, m) congruence classes.");
}
