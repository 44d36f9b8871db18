// skylattice: skylines, skycubes and their partial materialization from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or data error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "skylattice/dominance.hpp"
#include "skylattice/errors.hpp"
#include "skylattice/lattice.hpp"
#include "skylattice/relation.hpp"
#include "skylattice/serialize.hpp"
#include "skylattice/skycube.hpp"

namespace {

using namespace skylattice;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
    std::string input;
    std::vector<std::string> criteria;
    std::vector<std::string> maximize;
    std::optional<std::string> on;
    std::string format = "table";
    std::string out;
    std::string kind = "skyline";
    bool presort = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::size_t worker_count() {
    const char* env = std::getenv("SKYLATTICE_THREADS");
    std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    if (!env || !*env) return hw;
    try {
        auto cap = static_cast<std::size_t>(std::stoul(env));
        return std::clamp<std::size_t>(cap, 1, hw);
    } catch (const std::exception&) {
        throw UsageError(std::string("SKYLATTICE_THREADS must be a positive integer, got '") + env + "'");
    }
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (cfg.format == a) return;
    throw UsageError("unsupported --format '" + cfg.format + "' for this command");
}

Relation load(const RunConfig& cfg) {
    if (cfg.criteria.empty()) throw UsageError("--criteria is required");
    return load_csv(cfg.input, cfg.criteria, cfg.maximize);
}

CriterionSet subset_of(const RunConfig& cfg, const CriterionNames& names) {
    if (!cfg.on) return CriterionSet::full(names.size());
    return names.parse(*cfg.on);
}

std::string rows_text(const std::vector<RowId>& rows) {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(rows[i].value);
    }
    return out;
}

std::string rows_line(const std::vector<RowId>& rows) { return rows_text(rows) + "\n"; }

std::string render_result(const RunConfig& cfg, const SkylineResult& res, const CriterionNames& names) {
    require_format(cfg, {"table", "json"});
    if (cfg.format == "json") return to_json(res, names).dump() + "\n";
    return rows_line(res.rows);
}

int cmd_skyline(const RunConfig& cfg) {
    auto r = load(cfg);
    auto c = subset_of(cfg, r.criteria());
    emit(cfg, render_result(cfg, skyline(r, c, SkylineOptions{cfg.presort}), r.criteria()));
    return kOk;
}

int cmd_skycube(const RunConfig& cfg) {
    require_format(cfg, {"table", "json"});
    auto r = load(cfg);
    auto cube = build_skycube(r, worker_count(), SkylineOptions{cfg.presort});
    if (cfg.format == "json") {
        emit(cfg, to_json(cube).dump(2) + "\n");
        return kOk;
    }
    std::string text;
    for (const auto& c : cube.cuboids()) text += r.criteria().render(c.criteria) + ": " + rows_line(c.rows);
    emit(cfg, text);
    return kOk;
}

int cmd_materialize(const RunConfig& cfg) {
    require_format(cfg, {"table", "json"});
    auto r = load(cfg);
    emit(cfg, to_json(materialize_partial(r)).dump(2) + "\n");
    return kOk;
}

PartialSkycube load_store(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw UsageError(path + " is not a materialized store; run 'skylattice materialize' first");
    try {
        return partial_from_json(j);
    } catch (const SchemaError& e) {
        throw UsageError(path + ": " + e.what() + "; run 'skylattice materialize' first");
    }
}

int cmd_query(const RunConfig& cfg) {
    auto store = load_store(cfg.input);
    const auto& names = store.relation().criteria();
    auto c = subset_of(cfg, names);
    emit(cfg, render_result(cfg, reconstruct_cuboid(store, c), names));
    return kOk;
}

template <class Lattice>
std::string render_lattice(const RunConfig& cfg, const Lattice& l, const CriterionNames& names) {
    if (cfg.format == "dot") return export_dot(l, names);
    if (cfg.format == "json") return to_json(l, names).dump(2) + "\n";
    std::string text;
    for (const auto& c : l.concepts) text += concept_label(c, names) + "\n";
    for (auto [lo, hi] : l.edges)
        text += names.render(l.concepts[lo].intension) + " -> " + names.render(l.concepts[hi].intension) + "\n";
    return text;
}

int cmd_lattice(const RunConfig& cfg) {
    require_format(cfg, {"table", "json", "dot"});
    auto r = load(cfg);
    if (cfg.kind == "agree") {
        emit(cfg, render_lattice(cfg, build_agree_lattice(r), r.criteria()));
    } else if (cfg.kind == "skyline") {
        emit(cfg, render_lattice(cfg, build_skyline_lattice(r), r.criteria()));
    } else {
        throw UsageError("--kind must be 'agree' or 'skyline'");
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg) {
    auto r = load(cfg);
    auto full = build_skycube(r, worker_count(), SkylineOptions{cfg.presort});
    auto report = verify_equivalence(materialize_partial(r), full);
    std::ostringstream out;
    out << report.equal << "/" << report.checked << " cuboids equal\n";
    for (const auto& m : report.mismatches) {
        out << "mismatch " << r.criteria().render(m.criteria) << ": expected {" << rows_text(m.expected)
            << "} got {" << rows_text(m.actual) << "}\n";
    }
    emit(cfg, out.str());
    return report.ok() ? kOk : kVerifyFailed;
}

int cmd_stats(const RunConfig& cfg) {
    auto r = load(cfg);
    auto full = build_skycube(r, worker_count(), SkylineOptions{cfg.presort});
    auto s = stats(materialize_partial(r), full);
    std::ostringstream out;
    out << "concepts=" << s.concepts << " cuboids=" << s.cuboids << "\n"
        << "closed_cuboids=" << s.closed_cuboids << " reconstructed=" << s.reconstructed << "\n"
        << "stored_rows_partial=" << s.stored_rows_partial << " stored_rows_full=" << s.stored_rows_full << "\n"
        << "representatives=" << s.representatives << " tuples_full_scan=" << s.tuples_full_scan << "\n"
        << "comparisons_reconstruct=" << s.comparisons_reconstruct
        << " comparisons_full_scan=" << s.comparisons_full_scan << "\n";
    emit(cfg, out.str());
    return kOk;
}

void add_relation_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("input", cfg.input, "CSV file with a header row")->required();
    sub->add_option("--criteria", cfg.criteria, "criterion columns, in declaration order")->delimiter(',');
    sub->add_option("--maximize", cfg.maximize, "criteria to maximize instead of minimize")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skylines, skycubes and skyline-concept lattices"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "table | json | dot");
        sub->add_option("--out", cfg.out, "write output to a file instead of stdout");
    };
    auto add_on = [&](CLI::App* sub) {
        sub->add_option_function<std::string>("--on", [&](const std::string& v) { cfg.on = v; },
                                              "criterion subset, e.g. P,E (default: all criteria)")
            ->expected(0, 1)
            ->default_str("");
    };

    auto* sky = app.add_subcommand("skyline", "skyline of one criterion subset");
    add_relation_options(sky, cfg);
    add_on(sky);
    add_common(sky);
    sky->add_flag("--presort", cfg.presort, "visit tuples in sum order (same output)");

    auto* cube = app.add_subcommand("skycube", "every non-empty cuboid");
    add_relation_options(cube, cfg);
    add_common(cube);
    cube->add_flag("--presort", cfg.presort, "visit tuples in sum order (same output)");

    auto* mat = app.add_subcommand("materialize", "store the skyline-concept lattice as JSON");
    add_relation_options(mat, cfg);
    add_common(mat);

    auto* query = app.add_subcommand("query", "answer a cuboid from a materialized store");
    query->add_option("store", cfg.input, "store written by 'materialize'")->required();
    add_on(query);
    add_common(query);

    auto* lat = app.add_subcommand("lattice", "agree or skyline concept lattice");
    add_relation_options(lat, cfg);
    add_common(lat);
    lat->add_option("--kind", cfg.kind, "agree | skyline");

    auto* ver = app.add_subcommand("verify", "check reconstruction against the full skycube");
    add_relation_options(ver, cfg);
    add_common(ver);

    auto* st = app.add_subcommand("stats", "stored concepts versus cuboids");
    add_relation_options(st, cfg);
    add_common(st);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*sky) return cmd_skyline(cfg);
        if (*cube) return cmd_skycube(cfg);
        if (*mat) return cmd_materialize(cfg);
        if (*query) return cmd_query(cfg);
        if (*lat) return cmd_lattice(cfg);
        if (*ver) return cmd_verify(cfg);
        if (*st) return cmd_stats(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValueError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
