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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Usage: chkit_acceptance [source-dir]. The source directory is
// scanned by the exactness check; it defaults to CHKIT_SOURCE_DIR.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include "chkit/classical.hpp"
#include "chkit/error.hpp"
#include "chkit/events.hpp"
#include "chkit/frameworks.hpp"
#include "chkit/nogo.hpp"
#include "support/models.hpp"

using namespace chkit;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string g_source_dir = CHKIT_SOURCE_DIR;

// 1
Outcome truth_functional_classification()
{
    Outcome out;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto survivors = enumerate_homomorphisms_oracle(n);
        out.require(survivors.size() == n, "N=" + std::to_string(n) + ": " +
                                               std::to_string(survivors.size()) + " survivors");
        const auto algebra = EventAlgebra::abstract(n);
        std::vector<bool> matched(n, false);
        for (const auto &f : survivors) {
            for (const auto &theta : enumerate_truth_functionals(algebra)) {
                if (EventFunction::tabulate(theta).values == f.values) {
                    matched[theta.selected_cell()] = true;
                }
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            out.require(matched[k], "theta_" + std::to_string(k + 1) + " not among survivors");
        }
    }
    out.detail = out.pass ? "N=1,2,3 leave exactly N survivors, one per cell" : out.detail;
    return out;
}

// 2
Outcome homomorphism_suite()
{
    Outcome out;
    testing::Rng rng(20260101);
    std::size_t checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 1 + rng() % 8;
        const std::size_t n = 1 + rng() % std::min<std::size_t>(dim, 6);
        auto d = std::make_shared<DecompositionOfIdentity>(testing::random_decomposition(rng, dim, n));
        const auto algebra = EventAlgebra::quantum(d);
        for (const auto &theta : enumerate_truth_functionals(algebra)) {
            const auto v = verify_homomorphism(EventFunction::tabulate(theta));
            out.require(!v.has_value(), "violation in trial " + std::to_string(trial));
            ++checked;
        }
    }
    out.detail = out.pass ? std::to_string(checked) + " truth functionals, zero violations" : out.detail;
    return out;
}

// 3
Outcome classical_universality()
{
    Outcome out;
    testing::Rng rng(7);
    std::size_t grainings_total = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n_points = 1 + rng() % 10000;
        const std::size_t count = 1 + rng() % 20;
        std::vector<CoarseGraining> grainings;
        for (std::size_t g = 0; g < count; ++g) {
            const std::size_t k = 1 + rng() % std::min<std::size_t>(n_points, 40);
            const auto labels = testing::random_labels(rng, n_points, k);
            grainings.push_back(CoarseGraining::from_labels(labels));
        }
        grainings_total += count;
        const std::size_t q = rng() % n_points;
        std::vector<std::size_t> selected;
        for (const auto &g : grainings) {
            const auto theta = restrict_universal(q, g);
            // theta_q restricted to g agrees with evaluation at q on each cell
            const std::size_t k = theta.selected_cell();
            out.require(g.cell_of(q) == k, "restriction picked the wrong cell");
            selected.push_back(k);
        }
        out.require(!check_every_framework_classical(grainings, selected).has_value(),
                    "every-framework violation in trial " + std::to_string(trial));
        const auto fine = common_refinement_classical(grainings);
        for (const auto &g : grainings) {
            out.require(is_refinement_classical(fine, g), "common refinement misses an input");
        }
    }
    out.detail = out.pass ? "50 spaces, " + std::to_string(grainings_total) +
                                " grainings, zero violations"
                          : out.detail;
    return out;
}

// 4
Outcome cabello()
{
    Outcome out;
    const auto rays = builtin_dataset("cabello18");
    const auto search = search_assignment(rays);
    const auto cert = parity_certificate(rays);
    out.require(!search.exists, "search found an assignment");
    out.require(cert.has_value(), "parity certificate missing");
    out.detail = out.pass ? "Nonexistent after " + std::to_string(search.nodes_explored) +
                                " nodes; parity certificate agrees (9 contexts, every ray twice)"
                          : out.detail;
    return out;
}

// 5
Outcome peres()
{
    Outcome out;
    const auto search = search_assignment(builtin_dataset("peres24"));
    out.require(!search.exists, "search found an assignment");
    out.detail = out.pass ? "Nonexistent after " + std::to_string(search.nodes_explored) + " nodes"
                          : out.detail;
    return out;
}

// 6
Outcome dimension_two()
{
    Outcome out;
    testing::Rng rng(99);
    std::size_t rays_total = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 100;
        const auto rs = testing::random_spin_bases(rng, n);
        rays_total += rs.size();
        const auto r = search_assignment(rs);
        out.require(r.exists && r.witness.has_value(), "no witness for n=" + std::to_string(n));
        if (r.witness) {
            const auto problem = verify_assignment(rs, *r.witness);
            out.require(!problem.has_value(), problem.value_or(""));
        }
    }
    out.detail = out.pass ? "100 datasets (" + std::to_string(rays_total) +
                                " rays), every witness re-verified"
                          : out.detail;
    return out;
}

// 7
Outcome s0s1s2()
{
    Outcome out;
    const auto set = s0s1s2_frameworks();
    const auto &s0 = set.find("S0");
    const auto &s1 = set.find("S1");
    const auto &s2 = set.find("S2");
    out.require(is_compatible(s0, s1), "S0-S1 should be compatible");
    out.require(is_compatible(s0, s2), "S0-S2 should be compatible");
    out.require(!is_compatible(s1, s2), "S1-S2 should be incompatible");

    const Projector a = s1.cell(0);
    const auto unique = refine_truth(TruthFunctional(s0.algebra(), 0), s1);
    out.require(std::holds_alternative<UniqueTruth>(unique) &&
                    s1.realize(s1.algebra().cell(std::get<UniqueTruth>(unique).theta.selected_cell())) == a,
                "A true in S0 should refine to A");
    const auto cands = refine_truth(TruthFunctional(s0.algebra(), 1), s1);
    out.require(std::holds_alternative<Candidates>(cands) &&
                    std::get<Candidates>(cands).cells == std::vector<std::size_t>{1, 2},
                "not-A should refine to candidates {B, C}");

    const FrameworkSet pair({s1, s2});
    TruthAssignmentFamily family;
    family.selected = {{"S1", 1}, {"S2", 1}};
    const auto u = build_universal_candidate(family, pair);
    bool found = false;
    for (const auto &c : u.conflicts) {
        found = found || (c.kind == ConflictKind::NonCommutingTrue &&
                          u.entries[c.first].projector == s1.cell(1) &&
                          u.entries[c.second].projector == s2.cell(1));
    }
    out.require(found, "no conflict on the non-commuting pair (B, D)");
    out.detail = out.pass ? "compatibility matrix, refinements and (B, D) conflict as expected" : out.detail;
    return out;
}

// 8
Outcome meaningless()
{
    Outcome out;
    const Projector pz = projector_from_ray(Vector{1, 0});
    const Projector px = projector_from_ray(Vector{1, 1});
    out.require(std::holds_alternative<Meaningless>(conjunction(px, pz)), "P_x P_z should be meaningless");

    const Framework sz("Sz", validate_decomposition(std::vector<Projector>{pz, complement(pz)}));
    auto session = ReasoningSession::open(sz);
    session.assert_cell(0);
    out.require(session.query(px) == QueryAnswer::MeaninglessInThisFramework, "P_x got a truth value");

    // The algebra of Sz, listed independently of the library's membership test.
    const std::vector<Projector> algebra{Projector::zero(2), pz, complement(pz), Projector::identity(2)};
    testing::Rng rng(8);
    std::size_t outside = 0;
    for (int probe = 0; probe < 1000; ++probe) {
        const Projector p = rng() % 5 == 0 ? algebra[rng() % 4] : testing::random_ray_projector(rng, 2);
        const bool inside = std::find(algebra.begin(), algebra.end(), p) != algebra.end();
        const QueryAnswer answer = session.query(p);
        if (inside) {
            out.require(answer != QueryAnswer::MeaninglessInThisFramework, "member answered meaningless");
        } else {
            ++outside;
            out.require(answer == QueryAnswer::MeaninglessInThisFramework,
                        "truth value for a projector outside the algebra");
        }
    }
    out.detail = out.pass ? "1000 probes (" + std::to_string(outside) +
                                " outside the algebra), none given a truth value"
                          : out.detail;
    return out;
}

// 9
Outcome refinement_soundness()
{
    Outcome out;
    testing::Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 2 + rng() % 7;
        const std::size_t n = 2 + rng() % (dim - 1);
        const auto fine = testing::random_decomposition(rng, dim, n);
        const Framework f1("F1", testing::coarsen(fine, testing::random_grouping(rng, n, 1 + rng() % n)));
        const Framework f2("F2", testing::coarsen(fine, testing::random_grouping(rng, n, 1 + rng() % n)));
        const std::vector<Framework> pair{f1, f2};
        const Framework joint = common_refinement(pair);
        std::vector<Matrix> cells;
        for (const auto &cell : joint.decomposition().cells()) {
            cells.push_back(cell.matrix());
        }
        bool valid = true;
        try {
            (void)validate_decomposition(std::move(cells));
        } catch (const Error &) {
            valid = false;
        }
        out.require(valid, "common refinement is not a decomposition");
        out.require(is_refinement(joint, f1) && is_refinement(joint, f2), "common refinement misses an input");
    }
    const auto set = s0s1s2_frameworks();
    const std::vector<Framework> incompatible{set.find("S1"), set.find("S2")};
    bool raised = false;
    try {
        (void)common_refinement(incompatible);
    } catch (const Error &e) {
        raised = e.code() == ErrorCode::Incompatible;
    }
    out.require(raised, "S1, S2 should raise Incompatible");
    out.detail = out.pass ? "100 compatible pairs refined; S1, S2 raise Incompatible" : out.detail;
    return out;
}

// 10
Outcome exactness()
{
    Outcome out;
    const std::regex floating(R"(\b(float|double|epsilon|tolerance|std::(sqrt|pow|exp|log|abs|fabs))\b)");
    std::size_t files = 0;
    for (const char *sub : {"src", "include"}) {
        const fs::path root = fs::path(g_source_dir) / sub;
        if (!fs::exists(root)) {
            out.require(false, root.string() + " not found");
            continue;
        }
        for (const auto &entry : fs::recursive_directory_iterator(root)) {
            if (!entry.is_regular_file()) {
                continue;
            }
            ++files;
            std::ifstream in(entry.path());
            std::string line;
            for (std::size_t number = 1; std::getline(in, line); ++number) {
                if (std::regex_search(line, floating)) {
                    out.require(false, entry.path().string() + ":" + std::to_string(number) + ": " + line);
                }
            }
        }
    }
    out.require(files > 0, "no core sources scanned");
    out.detail = out.pass ? std::to_string(files) + " core files, no floating-point types or tolerances"
                          : out.detail;
    return out;
}

struct Criterion {
    int id;
    const char *name;
    double limit_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char **argv)
{
    if (argc > 1) {
        g_source_dir = argv[1];
    }
    const std::vector<Criterion> criteria{
        {1, "truth-functional classification", 1.0, truth_functional_classification},
        {2, "homomorphism suite", 10.0, homomorphism_suite},
        {3, "classical universality", 10.0, classical_universality},
        {4, "cabello18 nonexistence", 1.0, cabello},
        {5, "peres24 nonexistence", 5.0, peres},
        {6, "dimension-2 existence", 5.0, dimension_two},
        {7, "S0/S1/S2 demo", 1.0, s0s1s2},
        {8, "meaningless conjunction", 1.0, meaningless},
        {9, "common-refinement soundness", 10.0, refinement_soundness},
        {10, "exactness", 0.0, exactness},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception &e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds && outcome.pass) {
            outcome.pass = false;
            outcome.detail = "too slow";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (outcome.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << seconds << " s";
        if (c.limit_seconds > 0) {
            line << " < " << c.limit_seconds << " s";
        }
        line << "): " << outcome.detail;
        std::cout << line.str() << '\n';
        failures += outcome.pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
