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

#include <algorithm>

#include "chkit/error.hpp"
#include "chkit/frameworks.hpp"
#include "report.hpp"

namespace chkit::cli {

namespace {

std::string conjunction_text(const Conjunction &c)
{
    if (std::holds_alternative<Meaningless>(c)) {
        return "MEANINGLESS";
    }
    return std::get<Projector>(c).is_zero() ? "ZERO" : "PROJECTOR";
}

/// "S1:2" style name of a projector: first framework containing it plus the event there.
Json entry_ref(const UniversalCandidate &candidate, std::size_t index, const FrameworkSet &set)
{
    const auto &entry = candidate.entries.at(index);
    const auto &first = set.find(entry.labels.front());
    return Json{{"frameworks", entry.labels},
                {"event", first.membership(entry.projector)->to_string()},
                {"rank", entry.projector.rank()},
                {"value", entry.value}};
}

} // namespace

Report demo_spin_half()
{
    const Projector z_up = projector_from_ray(Vector{1, 0});
    const Projector z_down = projector_from_ray(Vector{0, 1});
    const Projector x_up = projector_from_ray(Vector{1, 1});
    const Projector x_down = projector_from_ray(Vector{1, -1});
    Framework sz("S_z", validate_decomposition(std::vector<Projector>{z_up, z_down}));
    Framework sx("S_x", validate_decomposition(std::vector<Projector>{x_up, x_down}));

    Json body{{"command", "demo"}, {"demo", "spin-half"}};
    body["projectors"] = Json{{"S_z=+1/2", io::matrix_to_json(z_up.matrix())},
                              {"S_x=+1/2", io::matrix_to_json(x_up.matrix())}};
    body["commute"] = commutes(x_up, z_up);
    body["frameworks_compatible"] = is_compatible(sx, sz);
    body["conjunction"] = conjunction_text(conjunction(x_up, z_up));
    body["conjunction_left"] = "S_x=+1/2";
    body["conjunction_right"] = "S_z=+1/2";
    body["same_framework_conjunction"] = Json{{"left", "S_z=+1/2"},
                                              {"right", "S_z=-1/2"},
                                              {"result", conjunction_text(conjunction(z_up, z_down))}};

    auto session = ReasoningSession::open(sz);
    session.assert_cell(0);
    Json queries = Json::array();
    const std::pair<const char *, const Projector *> probes[] = {
        {"S_z=+1/2", &z_up}, {"S_z=-1/2", &z_down}, {"S_x=+1/2", &x_up}, {"S_x=-1/2", &x_down}};
    for (const auto &[name, p] : probes) {
        queries.push_back(Json{{"property", name}, {"answer", to_string(session.query(*p))}});
    }
    body["session"] = Json{{"framework", "S_z"}, {"asserted", "S_z=+1/2"}, {"queries", queries}};
    return {body, std::nullopt};
}

Report demo_s0s1s2()
{
    const FrameworkSet set = s0s1s2_frameworks();
    const std::map<std::string, std::vector<std::string>> names = {
        {"S0", {"A", "I-A"}}, {"S1", {"A", "B", "C"}}, {"S2", {"A", "D", "E"}}};
    Json body{{"command", "demo"}, {"demo", "s0s1s2"}};

    Json cells = Json::object();
    for (const auto &f : set.frameworks()) {
        cells[f.label()] = names.at(f.label());
    }
    body["frameworks"] = cells;

    Json matrix = Json::array();
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            matrix.push_back(Json{{"pair", set.at(i).label() + "-" + set.at(j).label()},
                                  {"compatible", is_compatible(set.at(i), set.at(j))}});
        }
    }
    body["compatibility"] = matrix;

    const auto attempt = [&](const std::string &a, const std::string &b) -> Json {
        const std::vector<Framework> pair{set.find(a), set.find(b)};
        try {
            const Framework joint = common_refinement(pair);
            return Json{{"frameworks", a + "," + b}, {"result", "refinement"}, {"cells", joint.size()}};
        } catch (const Error &e) {
            return Json{{"frameworks", a + "," + b}, {"result", std::string(to_string(e.code()))}};
        }
    };
    body["common_refinement"] = Json::array({attempt("S0", "S1"), attempt("S1", "S2")});

    Json propagation = Json::array();
    for (const std::string fine : {"S1", "S2"}) {
        for (std::size_t cell = 0; cell < 2; ++cell) {
            const TruthFunctional t(set.find("S0").algebra(), cell);
            const auto refined = refine_truth(t, set.find(fine));
            Json row{{"true_in_S0", names.at("S0")[cell]}, {"refined_to", fine}};
            if (const auto *unique = std::get_if<UniqueTruth>(&refined)) {
                row["result"] = "UniqueTruth";
                row["cells"] = Json::array({names.at(fine)[unique->theta.selected_cell()]});
            } else {
                row["result"] = "Candidates";
                Json list = Json::array();
                for (const auto c : std::get<Candidates>(refined).cells) {
                    list.push_back(names.at(fine)[c]);
                }
                row["cells"] = list;
            }
            propagation.push_back(row);
        }
    }
    body["refinement"] = propagation;

    // A true in S1 but D true in S2: the two algebras share A and disagree on it.
    TruthAssignmentFamily clash;
    clash.selected = {{"S0", 0}, {"S1", 0}, {"S2", 1}};
    Json efp{{"family", Json{{"S0", "A"}, {"S1", "A"}, {"S2", "D"}}}};
    if (const auto v = check_every_framework_principle(clash, set)) {
        efp["violation"] = Json{{"projector", "A"},
                                {"first", v->first},
                                {"first_value", v->first_value},
                                {"second", v->second},
                                {"second_value", v->second_value}};
    } else {
        efp["violation"] = nullptr;
    }
    body["every_framework"] = efp;

    // I-A, B and D: consistent on shared elements, yet both true and non-commuting.
    TruthAssignmentFamily family;
    family.selected = {{"S0", 1}, {"S1", 1}, {"S2", 1}};
    const auto candidate = build_universal_candidate(family, set);
    Json conflicts = Json::array();
    for (const auto &c : candidate.conflicts) {
        conflicts.push_back(Json{{"kind", std::string(to_string(c.kind))},
                                 {"first", entry_ref(candidate, c.first, set)},
                                 {"second", entry_ref(candidate, c.second, set)}});
    }
    body["universal_candidate"] = Json{{"family", Json{{"S0", "I-A"}, {"S1", "B"}, {"S2", "D"}}},
                                       {"entries", candidate.entries.size()},
                                       {"conflicts", conflicts}};
    return {body, std::nullopt};
}

Report demo_classical_oscillator(const OscillatorOptions &options)
{
    if (options.steps == 0) {
        throw Error(ErrorCode::ParseError, "--steps must be positive");
    }
    const Rational lo = parse_rational(options.lo);
    const Rational hi = parse_rational(options.hi);
    const Rational e0 = parse_rational(options.e0);
    if (!(lo < hi) || e0 <= 0) {
        throw Error(ErrorCode::ParseError, "need lo < hi and a positive energy threshold");
    }
    const PhaseSpace space = PhaseSpace::grid(options.steps, lo, hi);
    const std::string point = options.point.empty()
                                  ? std::to_string(options.steps / 2) + "," +
                                        std::to_string(options.steps / 2)
                                  : options.point;
    const std::size_t q = space.index_of(point);
    const Indicator below = energy_below(space, e0);

    // Three grainings of the same space: energy band, half plane, finer bands.
    const auto labels = [&](auto &&label_of) {
        std::vector<std::size_t> out;
        for (const auto &pt : space.points()) {
            out.push_back(label_of(pt));
        }
        return out;
    };
    const Rational half = e0 / 2;
    std::vector<std::pair<std::string, CoarseGraining>> grainings;
    grainings.emplace_back("energy", CoarseGraining::from_labels(labels([&](const PhasePoint &pt) {
                               return oscillator_energy(pt) < e0 ? 0u : 1u;
                           })));
    grainings.emplace_back("half-plane", CoarseGraining::from_labels(labels([&](const PhasePoint &pt) {
                               return *pt.x < 0 ? 0u : 1u;
                           })));
    grainings.emplace_back("bands", CoarseGraining::from_labels(labels([&](const PhasePoint &pt) {
                               const Rational e = oscillator_energy(pt);
                               return e < half ? 0u : (e < e0 ? 1u : 2u);
                           })));
    std::vector<CoarseGraining> gs;
    for (const auto &[name, g] : grainings) {
        gs.push_back(g);
    }
    grainings.emplace_back("common-refinement", common_refinement_classical(gs));
    gs.push_back(grainings.back().second);

    Json body{{"command", "demo"}, {"demo", "classical-oscillator"}};
    body["grid"] = Json{{"points", space.size()},
                        {"steps", options.steps},
                        {"lo", format_rational(lo)},
                        {"hi", format_rational(hi)}};
    body["property"] = Json{{"energy_below", format_rational(e0)}, {"points", below.count()}};
    const auto &pq = space.point(q);
    body["chosen_point"] = Json{{"id", pq.id},
                                {"x", format_rational(*pq.x)},
                                {"p", format_rational(*pq.p)},
                                {"energy", format_rational(oscillator_energy(pq))},
                                {"value", universal_truth(q, below)}};

    Json table = Json::array();
    std::vector<std::size_t> selected;
    for (const auto &[name, g] : grainings) {
        const TruthFunctional t = restrict_universal(q, g);
        selected.push_back(t.selected_cell());
        Json values = Json::array();
        Json sizes = Json::array();
        for (std::size_t k = 0; k < g.size(); ++k) {
            values.push_back(eval_truth(t, g.algebra().cell(k)));
            sizes.push_back(g.cell(k).size());
        }
        Json row{{"graining", name},
                 {"cells", g.size()},
                 {"cell_sizes", sizes},
                 {"true_cell", t.selected_cell() + 1},
                 {"cell_values", values}};
        row["refines_all"] = std::all_of(gs.begin(), gs.end() - 1, [&](const CoarseGraining &c) {
            return is_refinement_classical(g, c);
        });
        table.push_back(row);
    }
    body["restrictions"] = table;
    const auto violation = check_every_framework_classical(gs, selected);
    body["every_framework_violations"] = violation ? 1 : 0;
    return {body, std::nullopt};
}

Report ks_report(const RaySet &rays, const std::string &source, bool enumerate, bool certificate,
                 int threads)
{
    const auto graph = orthogonality_graph(rays);
    std::size_t min_degree = rays.size() ? graph.degree(0) : 0;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        min_degree = std::min(min_degree, graph.degree(v));
    }
    SearchOptions options;
    options.threads = threads;
    options.enumerate_all = enumerate;
    const SearchResult result = search_assignment(rays, options);

    Json body{{"command", "ks"}, {"source", source}};
    body["dim"] = rays.dim();
    body["rays"] = rays.size();
    body["contexts"] = rays.contexts().size();
    body["orthogonal_pairs"] = graph.edge_count();
    body["min_degree"] = min_degree;
    body["result"] = result.exists ? "Exists" : "Nonexistent";
    body["nodes_explored"] = result.nodes_explored;
    if (enumerate) {
        body["witness_count"] = result.witness_count;
    }
    if (result.witness) {
        Json true_rays = Json::array();
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (result.witness->values[i]) {
                true_rays.push_back(rays.id(i));
            }
        }
        body["witness_true_rays"] = true_rays;
        body["witness_verified"] = !verify_assignment(rays, *result.witness).has_value();
    }
    if (certificate) {
        Json cert{{"context_count", rays.contexts().size()}};
        const auto pc = parity_certificate(rays);
        cert["applicable"] = pc.has_value();
        Json table = Json::object();
        for (std::size_t i = 0; i < rays.size(); ++i) {
            table[rays.id(i)] = rays.multiplicity(i);
        }
        cert["multiplicity"] = table;
        body["parity_certificate"] = cert;
    }
    return {body, std::nullopt};
}

} // namespace chkit::cli
