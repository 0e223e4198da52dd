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

#include "chkit/io.hpp"

#include <fstream>

#include "chkit/error.hpp"

namespace chkit::io {

namespace {

[[noreturn]] void fail(const std::string &message)
{
    throw Error(ErrorCode::ParseError, message);
}

const Json &member(const Json &j, const char *key, const std::string &where)
{
    if (!j.is_object()) {
        fail(where + ": expected an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        fail(where + ": missing \"" + key + "\"");
    }
    return *it;
}

const Json &array_member(const Json &j, const char *key, const std::string &where)
{
    const Json &value = member(j, key, where);
    if (!value.is_array()) {
        fail(where + ": \"" + key + "\" must be an array");
    }
    return value;
}

std::size_t positive_size(const Json &j, const std::string &where)
{
    if (!j.is_number_integer() || j.get<long long>() <= 0) {
        fail(where + " must be a positive integer");
    }
    return j.get<std::size_t>();
}

std::string string_value(const Json &j, const std::string &where)
{
    if (!j.is_string()) {
        fail(where + " must be a string");
    }
    return j.get<std::string>();
}

Json matrices_to_json(std::span<const Projector> cells)
{
    Json out = Json::array();
    for (const auto &cell : cells) {
        out.push_back(matrix_to_json(cell.matrix()));
    }
    return out;
}

DecompositionOfIdentity cells_from_json(const Json &cells, std::size_t dim,
                                        const std::string &where)
{
    std::vector<Matrix> matrices;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const Json &entry = cells[k];
        const Json &raw = entry.is_object() ? member(entry, "matrix", where) : entry;
        Matrix m = matrix_from_json(raw);
        if (m.dim() != dim) {
            throw Error(ErrorCode::DimMismatch, where + ": cell " + std::to_string(k + 1) +
                                                    " has dimension " + std::to_string(m.dim()));
        }
        matrices.push_back(std::move(m));
    }
    DecompositionOfIdentity d = validate_decomposition(std::move(matrices));
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (cells[k].is_object() && cells[k].contains("rank") &&
            positive_size(cells[k]["rank"], where + ": rank") != d.cell(k).rank()) {
            fail(where + ": cell " + std::to_string(k + 1) + " declares rank " +
                 cells[k]["rank"].dump() + " but has rank " + std::to_string(d.cell(k).rank()));
        }
    }
    return d;
}

} // namespace

Json scalar_to_json(const Scalar &s)
{
    const auto parts = s.encode();
    return Json::array({parts[0], parts[1], parts[2], parts[3]});
}

Scalar scalar_from_json(const Json &j)
{
    if (!j.is_array() || j.size() != 4) {
        fail("scalar must be an array of 4 rational strings, got " + j.dump());
    }
    std::array<std::string, 4> parts;
    for (std::size_t i = 0; i < 4; ++i) {
        parts[i] = string_value(j[i], "scalar component");
    }
    return Scalar::decode(parts);
}

Json vector_to_json(const Vector &v)
{
    Json out = Json::array();
    for (const auto &entry : v.entries()) {
        out.push_back(scalar_to_json(entry));
    }
    return out;
}

Vector vector_from_json(const Json &j)
{
    if (!j.is_array() || j.empty()) {
        fail("vector must be a non-empty array of scalars");
    }
    std::vector<Scalar> entries;
    for (const auto &entry : j) {
        entries.push_back(scalar_from_json(entry));
    }
    return Vector(std::move(entries));
}

Json matrix_to_json(const Matrix &m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row.push_back(scalar_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json &j)
{
    if (!j.is_array() || j.empty()) {
        fail("matrix must be a non-empty array of rows");
    }
    const std::size_t dim = j.size();
    std::vector<Scalar> entries;
    entries.reserve(dim * dim);
    for (const auto &row : j) {
        if (!row.is_array() || row.size() != dim) {
            fail("matrix must be square with " + std::to_string(dim) + " entries per row");
        }
        for (const auto &entry : row) {
            entries.push_back(scalar_from_json(entry));
        }
    }
    return Matrix(dim, std::move(entries));
}

Json decomposition_to_json(const DecompositionOfIdentity &d)
{
    Json cells = Json::array();
    for (const auto &cell : d.cells()) {
        cells.push_back(Json{{"rank", cell.rank()}, {"matrix", matrix_to_json(cell.matrix())}});
    }
    return Json{{"dim", d.dim()}, {"cells", std::move(cells)}};
}

DecompositionOfIdentity decomposition_from_json(const Json &j)
{
    const std::size_t dim = positive_size(member(j, "dim", "decomposition"), "dim");
    return cells_from_json(array_member(j, "cells", "decomposition"), dim, "decomposition");
}

Json framework_set_to_json(const FrameworkSet &set)
{
    Json frameworks = Json::array();
    for (const auto &f : set.frameworks()) {
        frameworks.push_back(
            Json{{"label", f.label()}, {"cells", matrices_to_json(f.decomposition().cells())}});
    }
    return Json{{"dim", set.dim()}, {"frameworks", std::move(frameworks)}};
}

FrameworkSet framework_set_from_json(const Json &j)
{
    const std::size_t dim = positive_size(member(j, "dim", "framework set"), "dim");
    std::vector<Framework> frameworks;
    for (const auto &entry : array_member(j, "frameworks", "framework set")) {
        std::string label = string_value(member(entry, "label", "framework"), "label");
        const std::string where = "framework '" + label + "'";
        auto d = cells_from_json(array_member(entry, "cells", where), dim, where);
        frameworks.emplace_back(std::move(label), std::move(d));
    }
    return FrameworkSet(std::move(frameworks));
}

Json family_to_json(const TruthAssignmentFamily &family)
{
    Json assignments = Json::object();
    for (const auto &[label, cell] : family.selected) {
        assignments[label] = cell + 1;
    }
    return Json{{"assignments", std::move(assignments)}};
}

TruthAssignmentFamily family_from_json(const Json &j)
{
    const Json &assignments = member(j, "assignments", "family");
    if (!assignments.is_object()) {
        fail("family: \"assignments\" must be an object");
    }
    TruthAssignmentFamily family;
    for (const auto &[label, cell] : assignments.items()) {
        family.selected.emplace(label, positive_size(cell, "cell for '" + label + "'") - 1);
    }
    return family;
}

Json partition_to_json(const PhaseSpace &space, const CoarseGraining &graining)
{
    Json points = Json::array();
    for (const auto &point : space.points()) {
        points.push_back(point.id);
    }
    Json cells = Json::array();
    for (std::size_t k = 0; k < graining.size(); ++k) {
        Json cell = Json::array();
        for (const auto i : graining.cell(k)) {
            cell.push_back(space.point(i).id);
        }
        cells.push_back(std::move(cell));
    }
    return Json{{"points", std::move(points)}, {"cells", std::move(cells)}};
}

LoadedPartition partition_from_json(const Json &j)
{
    std::vector<std::string> ids;
    for (const auto &id : array_member(j, "points", "partition")) {
        ids.push_back(string_value(id, "point id"));
    }
    PhaseSpace space = PhaseSpace::from_ids(ids);
    std::vector<std::vector<std::size_t>> cells;
    for (const auto &cell : array_member(j, "cells", "partition")) {
        if (!cell.is_array()) {
            fail("partition: every cell must be an array of point ids");
        }
        std::vector<std::size_t> members;
        for (const auto &id : cell) {
            members.push_back(space.index_of(string_value(id, "point id")));
        }
        cells.push_back(std::move(members));
    }
    CoarseGraining graining(space.size(), std::move(cells));
    return {std::move(space), std::move(graining)};
}

Json rayset_to_json(const RaySet &rays)
{
    Json out_rays = Json::array();
    for (std::size_t i = 0; i < rays.size(); ++i) {
        out_rays.push_back(Json{{"id", rays.id(i)}, {"vector", vector_to_json(rays.ray(i))}});
    }
    Json contexts = Json::array();
    for (const auto &context : rays.contexts()) {
        Json names = Json::array();
        for (const auto i : context) {
            names.push_back(rays.id(i));
        }
        contexts.push_back(std::move(names));
    }
    return Json{{"dim", rays.dim()}, {"rays", std::move(out_rays)}, {"contexts", std::move(contexts)}};
}

RawRaySet raw_rayset_from_json(const Json &j)
{
    RawRaySet raw;
    raw.dim = positive_size(member(j, "dim", "ray set"), "dim");
    for (const auto &entry : array_member(j, "rays", "ray set")) {
        raw.rays.push_back({string_value(member(entry, "id", "ray"), "ray id"),
                            vector_from_json(member(entry, "vector", "ray"))});
    }
    for (const auto &context : array_member(j, "contexts", "ray set")) {
        if (!context.is_array()) {
            fail("ray set: every context must be an array of ray ids");
        }
        std::vector<std::string> names;
        for (const auto &id : context) {
            names.push_back(string_value(id, "ray id"));
        }
        raw.contexts.push_back(std::move(names));
    }
    return raw;
}

RaySet rayset_from_json(const Json &j)
{
    return validate_rayset(raw_rayset_from_json(j));
}

Json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        fail("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        fail("'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace chkit::io
