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

#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "chkit/error.hpp"

namespace chkit::cli {

namespace {

bool is_scalar(const Json &j)
{
    if (!j.is_array() || j.size() != 4) {
        return false;
    }
    for (const auto &part : j) {
        if (!part.is_string()) {
            return false;
        }
    }
    try {
        (void)io::scalar_from_json(j);
        return true;
    } catch (const Error &) {
        return false;
    }
}

bool is_inline(const Json &j)
{
    if (j.is_primitive() || is_scalar(j)) {
        return true;
    }
    if (!j.is_array()) {
        return false;
    }
    for (const auto &item : j) {
        if (!(item.is_primitive() || is_scalar(item))) {
            return false;
        }
    }
    return true;
}

std::string inline_text(const Json &j)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (is_scalar(j)) {
        return io::scalar_from_json(j).to_string();
    }
    if (j.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += (i ? ", " : "") + inline_text(j[i]);
        }
        return out + "]";
    }
    return j.dump();
}

void render(const Json &j, int indent, std::ostringstream &out)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto &[key, value] : j.items()) {
            if (is_inline(value)) {
                out << pad << key << ": " << inline_text(value) << '\n';
            } else {
                out << pad << key << ":\n";
                render(value, indent + 2, out);
            }
        }
        return;
    }
    if (j.is_array()) {
        for (const auto &item : j) {
            if (is_inline(item)) {
                out << pad << "- " << inline_text(item) << '\n';
            } else {
                // First line of the nested block shares the "- " marker.
                std::ostringstream nested;
                render(item, indent + 2, nested);
                std::string text = nested.str();
                text.replace(0, std::min(text.size(), pad.size() + 2), pad + "- ");
                out << text;
            }
        }
        return;
    }
    out << pad << inline_text(j) << '\n';
}

} // namespace

std::string render_text(const Json &report)
{
    std::ostringstream out;
    render(report, 0, out);
    return out.str();
}

} // namespace chkit::cli
