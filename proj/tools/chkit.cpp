// Copyright 2026 The chkit Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// chkit command-line front end. Reports go to stdout (text, or JSON when
// CHKIT_OUTPUT=json), diagnostics to stderr. Exit codes: 0 success,
// 1 input or validation error, 2 --expect mismatch.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "chkit/error.hpp"
#include "chkit/frameworks.hpp"
#include "chkit/io.hpp"
#include "chkit/nogo.hpp"
#include "float_import.hpp"
#include "report.hpp"

namespace chkit::cli {

namespace {

constexpr std::size_t kListEventsUpTo = 8;

bool json_output()
{
    const char *mode = std::getenv("CHKIT_OUTPUT");
    return mode != nullptr && std::string_view(mode) == "json";
}

Json cells_1based(const std::vector<std::size_t> &cells)
{
    Json out = Json::array();
    for (const auto c : cells) {
        out.push_back(c + 1);
    }
    return out;
}

std::size_t cell_index(long long one_based, std::size_t n_cells)
{
    if (one_based < 1 || static_cast<std::size_t>(one_based) > n_cells) {
        throw Error(ErrorCode::NotInFramework, "cell " + std::to_string(one_based) +
                                                   " is outside 1.." + std::to_string(n_cells));
    }
    return static_cast<std::size_t>(one_based - 1);
}

RaySet load_rayset(const std::string &path, double snap_tol)
{
    const Json doc = io::read_json_file(path);
    return io::rayset_from_json(has_float_scalars(doc) ? snap_rayset(doc, snap_tol) : doc);
}

Report cmd_validate(const std::string &path, double snap_tol)
{
    const Json doc = io::read_json_file(path);
    Json body{{"command", "validate"}, {"valid", true}};
    if (!doc.is_object()) {
        throw Error(ErrorCode::ParseError, "top-level value must be an object");
    }
    if (doc.contains("frameworks")) {
        const auto set = io::framework_set_from_json(doc);
        body["kind"] = "framework-set";
        body["dim"] = set.dim();
        Json list = Json::array();
        for (const auto &f : set.frameworks()) {
            Json ranks = Json::array();
            for (const auto &cell : f.decomposition().cells()) {
                ranks.push_back(cell.rank());
            }
            list.push_back(Json{{"label", f.label()}, {"cells", f.size()}, {"ranks", ranks}});
        }
        body["frameworks"] = list;
    } else if (doc.contains("rays")) {
        const auto rays = io::rayset_from_json(has_float_scalars(doc) ? snap_rayset(doc, snap_tol)
                                                                      : doc);
        body["kind"] = "ray-set";
        body["dim"] = rays.dim();
        body["rays"] = rays.size();
        body["contexts"] = rays.contexts().size();
        body["orthogonal_pairs"] = orthogonality_graph(rays).edge_count();
    } else if (doc.contains("points")) {
        const auto loaded = io::partition_from_json(doc);
        body["kind"] = "partition";
        body["points"] = loaded.space.size();
        Json sizes = Json::array();
        for (std::size_t k = 0; k < loaded.graining.size(); ++k) {
            sizes.push_back(loaded.graining.cell(k).size());
        }
        body["cells"] = loaded.graining.size();
        body["cell_sizes"] = sizes;
    } else if (doc.contains("assignments")) {
        const auto family = io::family_from_json(doc);
        body["kind"] = "family";
        body["frameworks"] = family.selected.size();
    } else if (doc.contains("cells")) {
        const auto d = io::decomposition_from_json(doc);
        body["kind"] = "decomposition";
        body["dim"] = d.dim();
        Json ranks = Json::array();
        for (const auto &cell : d.cells()) {
            ranks.push_back(cell.rank());
        }
        body["cells"] = d.size();
        body["ranks"] = ranks;
    } else {
        throw Error(ErrorCode::ParseError, "unrecognized document: expected a decomposition, "
                                           "framework set, family, partition, or ray set");
    }
    return {body, std::nullopt};
}

Report cmd_algebra(const std::string &path, std::optional<long long> cell,
                   const std::optional<std::string> &event)
{
    auto d = std::make_shared<const DecompositionOfIdentity>(
        io::decomposition_from_json(io::read_json_file(path)));
    const EventAlgebra algebra = EventAlgebra::quantum(d);
    Json body{{"command", "algebra"}, {"dim", d->dim()}, {"cells", d->size()}};
    if (d->size() < 63) {
        body["event_count"] = std::uint64_t{1} << d->size();
    }
    if (cell) {
        const auto k = cell_index(*cell, d->size());
        body["cell"] = Json{{"index", k + 1},
                            {"rank", d->cell(k).rank()},
                            {"matrix", io::matrix_to_json(d->cell(k).matrix())}};
    }
    if (event) {
        const Event e = algebra.parse(*event);
        const Projector p = algebra.realize_projector(e);
        body["event"] = Json{{"literal", e.to_string()},
                             {"rank", p.rank()},
                             {"matrix", io::matrix_to_json(p.matrix())}};
    }
    if (!cell && !event && d->size() <= kListEventsUpTo) {
        Json events = Json::array();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d->size()); ++bits) {
            const Event e = algebra.from_bits(bits);
            events.push_back(Json{{"event", e.to_string()},
                                  {"rank", algebra.realize_projector(e).rank()}});
        }
        body["events"] = events;
    }
    return {body, std::nullopt};
}

Report cmd_compat(const std::string &path, const std::string &first, const std::string &second)
{
    const auto set = io::framework_set_from_json(io::read_json_file(path));
    const bool ok = is_compatible(set.find(first), set.find(second));
    return {Json{{"command", "compat"},
                 {"first", first},
                 {"second", second},
                 {"compatible", ok},
                 {"verdict", ok ? "compatible" : "incompatible"}},
            std::nullopt};
}

Report cmd_refine(const std::string &path, const std::string &fine, const std::string &coarse)
{
    const auto set = io::framework_set_from_json(io::read_json_file(path));
    const Framework &f = set.find(fine);
    const Framework &c = set.find(coarse);
    const bool ok = is_refinement(f, c);
    Json body{{"command", "refine"},
              {"fine", fine},
              {"coarse", coarse},
              {"refinement", ok},
              {"verdict", ok ? "refinement" : "not a refinement"}};
    if (ok) {
        Json map = Json::array();
        for (std::size_t k = 0; k < c.size(); ++k) {
            map.push_back(Json{{"coarse_cell", k + 1},
                               {"fine_cells", cells_1based(f.membership(c.cell(k))->cells())}});
        }
        body["cell_map"] = map;
    }
    return {body, std::nullopt};
}

Report cmd_truth(const std::string &path, const std::string &label, long long cell,
                 const std::optional<std::string> &query)
{
    const auto set = io::framework_set_from_json(io::read_json_file(path));
    const Framework &f = set.find(label);
    const TruthFunctional t(f.algebra(), cell_index(cell, f.size()));
    Json body{{"command", "truth"}, {"framework", label}, {"cell", cell}};
    if (query) {
        const Event e = f.algebra().parse(*query);
        body["query"] = e.to_string();
        body["value"] = eval_truth(t, e);
    } else if (f.size() <= kListEventsUpTo) {
        Json table = Json::array();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.size()); ++bits) {
            const Event e = f.algebra().from_bits(bits);
            table.push_back(Json{{"event", e.to_string()}, {"value", eval_truth(t, e)}});
        }
        body["table"] = table;
    }
    return {body, std::nullopt};
}

Report cmd_efp(const std::string &frameworks_path, const std::string &family_path)
{
    const auto set = io::framework_set_from_json(io::read_json_file(frameworks_path));
    const auto family = io::family_from_json(io::read_json_file(family_path));
    Json body{{"command", "efp"}};
    if (const auto v = check_every_framework_principle(family, set)) {
        body["consistent"] = false;
        body["verdict"] = "violation";
        body["violation"] = Json{{"first", v->first},
                                 {"first_event", set.find(v->first).membership(v->projector)->to_string()},
                                 {"first_value", v->first_value},
                                 {"second", v->second},
                                 {"second_event", set.find(v->second).membership(v->projector)->to_string()},
                                 {"second_value", v->second_value},
                                 {"rank", v->projector.rank()}};
        return {body, std::nullopt};
    }
    body["consistent"] = true;
    body["verdict"] = "consistent";
    const auto candidate = build_universal_candidate(family, set);
    const auto ref = [&](std::size_t i) {
        const auto &entry = candidate.entries[i];
        return Json{{"frameworks", entry.labels},
                    {"event", set.find(entry.labels.front()).membership(entry.projector)->to_string()},
                    {"value", entry.value}};
    };
    Json conflicts = Json::array();
    for (const auto &c : candidate.conflicts) {
        Json item{{"kind", std::string(to_string(c.kind))}, {"first", ref(c.first)}};
        if (c.kind == ConflictKind::Product || c.kind == ConflictKind::NonCommutingTrue) {
            item["second"] = ref(c.second);
        }
        conflicts.push_back(item);
    }
    body["universal_candidate"] = Json{{"projectors", candidate.entries.size()},
                                       {"conflicts", conflicts}};
    return {body, std::nullopt};
}

Json export_document(const std::string &name)
{
    if (name == "s0s1s2") {
        return io::framework_set_to_json(s0s1s2_frameworks());
    }
    if (name == "s0s1s2-family") {
        TruthAssignmentFamily family;
        family.selected = {{"S0", 1}, {"S1", 1}, {"S2", 1}};
        return io::family_to_json(family);
    }
    return io::rayset_to_json(builtin_dataset(name));
}

int emit(const Report &report)
{
    if (json_output()) {
        std::cout << report.body.dump(2) << '\n';
    } else {
        std::cout << render_text(report.body);
    }
    if (report.expectation_met && !*report.expectation_met) {
        std::cerr << "expectation not met\n";
        return 2;
    }
    return 0;
}

int emit_error(const std::string &command, const Error &e)
{
    const std::string code(to_string(e.code()));
    std::string message = e.what();
    if (message.starts_with(code + ": ")) {
        message.erase(0, code.size() + 2);
    }
    std::cerr << "error: " << code << ": " << message << '\n';
    if (json_output()) {
        const Json body{{"command", command}, {"error", Json{{"code", code}, {"message", message}}}};
        std::cout << body.dump(2) << '\n';
    }
    return 1;
}

} // namespace

int run(int argc, char **argv)
{
    CLI::App app{"chkit: exact projector, framework, and contextuality checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "chkit 1.0.0");

    std::string file, file2, label1, label2, dataset, expect, demo_name, export_name;
    std::optional<long long> cell;
    long long truth_cell = 0;
    std::optional<std::string> event;
    std::optional<std::string> query;
    bool enumerate = false;
    bool certificate = false;
    int parallel = 1;
    double snap_tol = kDefaultSnapTolerance;
    OscillatorOptions osc;

    auto *validate = app.add_subcommand("validate", "Parse and validate any input file");
    validate->add_option("file", file, "JSON document")->required();
    validate->add_option("--snap-tol", snap_tol, "Tolerance for float ray import");

    auto *algebra = app.add_subcommand("algebra", "Event algebra of a decomposition");
    algebra->add_option("file", file, "Decomposition JSON")->required();
    algebra->add_option("--cell", cell, "Print cell k (1-based)");
    algebra->add_option("--event", event, "Realize an event such as \"1,3\", \"I\" or \"0\"");

    auto *compat = app.add_subcommand("compat", "Compatibility of two frameworks");
    compat->add_option("file", file, "FrameworkSet JSON")->required();
    compat->add_option("first", label1)->required();
    compat->add_option("second", label2)->required();

    auto *refine = app.add_subcommand("refine", "Is FINE a refinement of COARSE");
    refine->add_option("file", file, "FrameworkSet JSON")->required();
    refine->add_option("fine", label1)->required();
    refine->add_option("coarse", label2)->required();

    auto *truth = app.add_subcommand("truth", "Evaluate the truth functional selecting one cell");
    truth->add_option("file", file, "FrameworkSet JSON")->required();
    truth->add_option("label", label1)->required();
    truth->add_option("cell", truth_cell, "Selected cell (1-based)")->required();
    truth->add_option("--query", query, "Event literal");

    auto *efp = app.add_subcommand("efp", "Every-framework check of a truth-assignment family");
    efp->add_option("frameworks", file, "FrameworkSet JSON")->required();
    efp->add_option("family", file2, "Family JSON")->required();

    auto *ks = app.add_subcommand("ks", "Search for a noncontextual {0,1} assignment");
    ks->add_option("file", file, "RaySet JSON");
    ks->add_option("--dataset", dataset, "Built-in dataset");
    ks->add_flag("--enumerate", enumerate, "Count every assignment");
    ks->add_flag("--certificate", certificate, "Include the parity certificate");
    ks->add_option("--expect", expect, "Expected outcome")->check(CLI::IsMember({"exists", "none"}));
    ks->add_option("--parallel", parallel, "Worker threads")->check(CLI::PositiveNumber);
    ks->add_option("--snap-tol", snap_tol, "Tolerance for float ray import");

    auto *demo = app.add_subcommand("demo", "Run a worked example");
    demo->add_option("name", demo_name,
                     "spin-half | s0s1s2 | classical-oscillator | cabello18 | peres24")
        ->required();
    demo->add_option("--steps", osc.steps, "Grid steps per axis (oscillator)");
    demo->add_option("--lo", osc.lo, "Lower grid bound, rational (oscillator)");
    demo->add_option("--hi", osc.hi, "Upper grid bound, rational (oscillator)");
    demo->add_option("--e0", osc.e0, "Energy threshold, rational (oscillator)");
    demo->add_option("--point", osc.point, "Grid point id \"i,j\" (oscillator)");

    auto *exporter = app.add_subcommand("export", "Write a built-in dataset as an input file");
    exporter->add_option("name", export_name,
                         "cabello18 | peres24 | spin-dirs(n) | s1s2-dim3 | s0s1s2 | s0s1s2-family")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "validate") {
            return emit(cmd_validate(file, snap_tol));
        }
        if (command == "algebra") {
            return emit(cmd_algebra(file, cell, event));
        }
        if (command == "compat") {
            return emit(cmd_compat(file, label1, label2));
        }
        if (command == "refine") {
            return emit(cmd_refine(file, label1, label2));
        }
        if (command == "truth") {
            return emit(cmd_truth(file, label1, truth_cell, query));
        }
        if (command == "efp") {
            return emit(cmd_efp(file, file2));
        }
        if (command == "ks") {
            if (file.empty() == dataset.empty()) {
                throw Error(ErrorCode::ParseError, "give exactly one of FILE or --dataset");
            }
            const RaySet rays = dataset.empty() ? load_rayset(file, snap_tol) : builtin_dataset(dataset);
            Report report = ks_report(rays, dataset.empty() ? file : dataset, enumerate, certificate,
                                      parallel);
            if (!expect.empty()) {
                const bool exists = report.body["result"] == "Exists";
                report.expectation_met = exists == (expect == "exists");
            }
            return emit(report);
        }
        if (command == "demo") {
            if (demo_name == "spin-half") {
                return emit(demo_spin_half());
            }
            if (demo_name == "s0s1s2") {
                return emit(demo_s0s1s2());
            }
            if (demo_name == "classical-oscillator") {
                return emit(demo_classical_oscillator(osc));
            }
            if (demo_name == "cabello18" || demo_name == "peres24") {
                Report report = ks_report(builtin_dataset(demo_name), demo_name, false, true, 1);
                report.body["command"] = "demo";
                report.body["demo"] = demo_name;
                return emit(report);
            }
            throw Error(ErrorCode::UnknownDemo, "unknown demo '" + demo_name + "'");
        }
        if (command == "export") {
            std::cout << export_document(export_name).dump(2) << '\n';
            return 0;
        }
    } catch (const Error &e) {
        return emit_error(command, e);
    }
    return 1;
}

} // namespace chkit::cli

int main(int argc, char **argv)
{
    return chkit::cli::run(argc, argv);
}
