#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "fracsq/report.hpp"

namespace {

using namespace fracsq;

std::vector<std::string> split_tokens(const std::string& text, char extra = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == extra || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

DigitSet parse_matrix_arg(const std::string& matrix, int n_hint) {
    DigitSet d = DigitSet::from_label_matrix(split_tokens(matrix));
    if (n_hint > 0 && n_hint != d.n())
        throw std::invalid_argument("--n disagrees with the matrix size");
    return d;
}

std::uint64_t cell_cap_from_env() {
    const char* env = std::getenv("FRACSQ_MAX_CELLS");
    if (!env || !*env) return kDefaultCellCap;
    char* end = nullptr;
    unsigned long long cap = std::strtoull(env, &end, 10);
    if (!end || *end || cap == 0)
        throw std::invalid_argument("FRACSQ_MAX_CELLS must be a positive integer");
    return cap;
}

WitnessBounds parse_bounds(long long range, const std::string& denoms) {
    WitnessBounds bounds;
    bounds.numerator_range = range;
    bounds.denominators.clear();
    for (const std::string& tok : split_tokens(denoms))
        bounds.denominators.push_back(std::stoll(tok));
    if (bounds.denominators.empty())
        throw std::invalid_argument("--witness-denoms needs at least one entry");
    return bounds;
}

void emit(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    file << body;
    if (!file) throw std::runtime_error("failed to write " + out_path);
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* ok : allowed)
        if (format == ok) return;
    std::string msg = "--format must be one of:";
    for (const char* ok : allowed) msg += std::string(" ") + ok;
    throw std::invalid_argument(msg);
}

std::string fingerprint_text(const Fingerprint& fp) {
    std::ostringstream out;
    out << "connected=" << (fp.connected ? "yes" : "no") << " full_edge_tree_up_to="
        << fp.full_edge_tree_up_to << " first_cycle_level="
        << (fp.first_cycle_level ? std::to_string(*fp.first_cycle_level) : "none")
        << " digit_order=" << order_name(fp.order) << "\n";
    for (const BranchSample& s : fp.branch_samples) {
        out << "  delete prefix";
        for (int sym : s.prefix) out << ' ' << sym;
        out << " at level " << s.level << ": " << s.components << " components\n";
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modeling and classification of fractal squares"};
    app.require_subcommand(1);

    int n = 0, m = 0, max_depth = 6, level = 3;
    long long witness_range = 2;
    std::string matrix, format, out_path, digit_order = "yx", witness_denoms = "1,2";

    auto add_common = [&](CLI::App* cmd, const char* default_format) {
        cmd->add_option("--max-depth", max_depth, "search depth limit")->capture_default_str();
        cmd->add_option("--format", format)->default_val(default_format);
        cmd->add_option("--out", out_path, "output file (stdout if omitted)");
    };

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "congruence classes of digit sets");
    enumerate_cmd->add_option("--n", n)->required();
    enumerate_cmd->add_option("--m", m)->required();
    add_common(enumerate_cmd, "json");

    CLI::App* classify_cmd = app.add_subcommand("classify", "topological type of one digit set");
    classify_cmd->add_option("--n", n);
    classify_cmd->add_option("--matrix", matrix, "label matrix rows, top row first")->required();
    add_common(classify_cmd, "json");

    CLI::App* equiv_cmd = app.add_subcommand("equiv", "bi-Lipschitz equivalence upper bound");
    equiv_cmd->add_option("--n", n)->required();
    equiv_cmd->add_option("--m", m)->required();
    equiv_cmd->add_option("--witness-range", witness_range)->capture_default_str();
    equiv_cmd->add_option("--witness-denoms", witness_denoms)->capture_default_str();
    add_common(equiv_cmd, "json");

    CLI::App* fingerprint_cmd = app.add_subcommand("fingerprint", "topological fingerprint");
    fingerprint_cmd->add_option("--n", n);
    fingerprint_cmd->add_option("--matrix", matrix)->required();
    fingerprint_cmd->add_option("--digit-order", digit_order)->capture_default_str();
    add_common(fingerprint_cmd, "json");

    CLI::App* paths_cmd = app.add_subcommand("paths", "complement path certificates");
    paths_cmd->add_option("--n", n);
    paths_cmd->add_option("--matrix", matrix)->required();
    add_common(paths_cmd, "json");

    CLI::App* render_cmd = app.add_subcommand("render", "bitmap of a finite approximation");
    render_cmd->add_option("--n", n);
    render_cmd->add_option("--matrix", matrix)->required();
    render_cmd->add_option("--level", level, "approximation level")->capture_default_str();
    add_common(render_cmd, "pbm");

    CLI::App* atlas_cmd = app.add_subcommand("atlas", "panel images for every class");
    atlas_cmd->add_option("--n", n)->required();
    atlas_cmd->add_option("--m", m)->required();
    atlas_cmd->add_option("--level", level, "panel approximation level")->capture_default_str();
    atlas_cmd->add_option("--out", out_path, "output directory")->required();
    atlas_cmd->add_option("--max-depth", max_depth)->capture_default_str();
    atlas_cmd->add_option("--format", format)->default_val("pbm");

    CLI::App* scan_cmd = app.add_subcommand("scan", "classify and partition a whole family");
    scan_cmd->add_option("--n", n)->required();
    scan_cmd->add_option("--m", m)->required();
    scan_cmd->add_option("--witness-range", witness_range)->capture_default_str();
    scan_cmd->add_option("--witness-denoms", witness_denoms)->capture_default_str();
    add_common(scan_cmd, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    // --format is bound to one variable across subcommands, so default_val on
    // a later subcommand overwrites it; restore the parsed subcommand's own
    // default when the flag was not given.
    for (CLI::App* sub : app.get_subcommands()) {
        CLI::Option* fmt = sub->get_option_no_throw("--format");
        if (fmt != nullptr && fmt->count() == 0) format = fmt->get_default_str();
    }

    try {
        std::uint64_t cap = cell_cap_from_env();

        if (enumerate_cmd->parsed()) {
            check_format(format, {"json", "csv", "text"});
            std::vector<DigitSet> reps = enumerate_classes(n, m);
            if (format == "json") {
                Json classes = Json::array();
                for (const DigitSet& rep : reps)
                    classes.push_back(Json{{"canonical_key", canonical_form(rep).hex()},
                                           {"matrix", rep.to_label_matrix()}});
                Json out;
                out["n"] = n;
                out["m"] = m;
                out["count"] = reps.size();
                out["burnside_dihedral"] = burnside_count_dihedral(n, m);
                out["classes"] = classes;
                emit(out.dump(2) + "\n", out_path);
            } else {
                std::ostringstream body;
                if (format == "csv") {
                    body << "canonical_key,matrix\n";
                    for (const DigitSet& rep : reps) {
                        body << canonical_form(rep).hex() << ',';
                        const auto rows = rep.to_label_matrix();
                        for (std::size_t i = 0; i < rows.size(); ++i)
                            body << (i ? "|" : "") << rows[i];
                        body << '\n';
                    }
                } else {
                    body << reps.size() << " classes, burnside dihedral count "
                         << burnside_count_dihedral(n, m) << "\n";
                    for (const DigitSet& rep : reps) {
                        body << canonical_form(rep).hex() << "\n";
                        for (const std::string& row : rep.to_label_matrix())
                            body << "  " << row << "\n";
                    }
                }
                emit(body.str(), out_path);
            }
        } else if (classify_cmd->parsed()) {
            check_format(format, {"json", "csv", "text"});
            DigitSet d = parse_matrix_arg(matrix, n);
            ClassificationRecord rec = classify_record(d, max_depth, cap);
            if (format == "json")
                emit(record_json(rec).dump(2) + "\n", out_path);
            else if (format == "csv")
                emit(record_csv_header() + "\n" + record_csv_row(rec) + "\n", out_path);
            else
                emit(record_text(rec), out_path);
        } else if (equiv_cmd->parsed()) {
            check_format(format, {"json", "csv", "text"});
            EquivConfig cfg;
            cfg.kmax = max_depth;
            cfg.bounds = parse_bounds(witness_range, witness_denoms);
            cfg.max_cells = cap;
            EquivalencePartition partition = equivalence_classes(n, m, cfg);
            if (format == "json") {
                Json out = partition_json(partition);
                emit(out.dump(2) + "\n", out_path);
            } else if (format == "csv") {
                std::ostringstream body;
                body << "equiv_class,canonical_key\n";
                for (std::size_t i = 0; i < partition.classes.size(); ++i)
                    for (const std::string& key : partition.classes[i])
                        body << i << ',' << key << '\n';
                emit(body.str(), out_path);
            } else {
                std::ostringstream body;
                body << partition.classes.size() << " equivalence classes (upper bound)\n";
                for (std::size_t i = 0; i < partition.classes.size(); ++i) {
                    body << "class " << i << ":";
                    for (const std::string& key : partition.classes[i]) body << ' ' << key;
                    body << '\n';
                }
                emit(body.str(), out_path);
            }
        } else if (fingerprint_cmd->parsed()) {
            check_format(format, {"json", "text"});
            DigitSet d = parse_matrix_arg(matrix, n);
            Fingerprint fp = fingerprint(d, max_depth, parse_digit_order(digit_order), cap);
            if (format == "json")
                emit(fingerprint_json(fp).dump(2) + "\n", out_path);
            else
                emit(fingerprint_text(fp), out_path);
        } else if (paths_cmd->parsed()) {
            check_format(format, {"json", "text"});
            DigitSet d = parse_matrix_arg(matrix, n);
            auto v = complement_path(d, PathKind::Vertical, max_depth, cap);
            auto h = complement_path(d, PathKind::Horizontal, max_depth, cap);
            auto lam = lambda_path(d, max_depth, cap);
            if (format == "json") {
                auto cert_json = [](const std::optional<PathCertificate>& cert) {
                    if (!cert) return Json(nullptr);
                    Json chain = Json::array();
                    for (const Cell& c : cert->chain) chain.push_back(Json::array({c.x, c.y}));
                    return Json{{"level", cert->level}, {"anchor", cert->anchor},
                                {"chain", chain}};
                };
                Json out;
                out["max_depth"] = max_depth;
                out["vertical"] = cert_json(v);
                out["horizontal"] = cert_json(h);
                out["lambda"] = cert_json(lam);
                emit(out.dump(2) + "\n", out_path);
            } else {
                std::ostringstream body;
                auto describe = [&](const char* name, const std::optional<PathCertificate>& cert) {
                    body << name << ": ";
                    if (cert)
                        body << "level " << cert->level
                             << (cert->anchor >= 0 ? " anchor " + std::to_string(cert->anchor)
                                                   : std::string())
                             << " (" << cert->chain.size() << " cells)\n";
                    else
                        body << "none up to depth " << max_depth << "\n";
                };
                describe("vertical", v);
                describe("horizontal", h);
                describe("lambda", lam);
                emit(body.str(), out_path);
            }
        } else if (render_cmd->parsed()) {
            check_format(format, {"pbm", "svg"});
            DigitSet d = parse_matrix_arg(matrix, n);
            emit(format == "pbm" ? render_pbm(d, level, cap) : render_svg(d, level, cap),
                 out_path);
        } else if (atlas_cmd->parsed()) {
            AtlasResult result = write_atlas(n, m, level, out_path, format, max_depth, cap);
            std::cout << "wrote " << result.files.size() << " panels + index.json to "
                      << out_path << "\n";
        } else if (scan_cmd->parsed()) {
            check_format(format, {"json", "csv", "text"});
            ScanResult scan = run_scan(n, m, max_depth, parse_bounds(witness_range, witness_denoms), cap);
            if (format == "json")
                emit(scan_json(scan).dump(2) + "\n", out_path);
            else if (format == "csv")
                emit(scan_csv(scan), out_path);
            else
                emit(scan_text(scan), out_path);
        }
        return 0;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
