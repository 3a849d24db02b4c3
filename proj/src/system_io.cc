// Copyright 2026 The qbool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbool/system_io.h"

#include <fstream>
#include <sstream>

#include "qbool/error.h"

namespace qbool {

nlohmann::json system_to_json(const BqeSystem &system) {
    nlohmann::json equations = nlohmann::json::array();
    for (const auto &f : system.equations) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto &t : f.terms()) {
            terms.push_back(t.vars());
        }
        equations.push_back(std::move(terms));
    }
    return {{"n", system.n}, {"equations", std::move(equations)}};
}

BqeSystem system_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("equations")) {
        throw InputError("system JSON needs \"n\" and \"equations\"");
    }
    if (!j["n"].is_number_unsigned()) {
        throw InputError("\"n\" must be a non-negative integer");
    }
    BqeSystem system;
    system.n = j["n"].get<uint32_t>();
    if (!j["equations"].is_array()) {
        throw InputError("\"equations\" must be an array");
    }
    for (const auto &eq : j["equations"]) {
        if (!eq.is_array()) {
            throw InputError("each equation must be an array of terms");
        }
        AnfPoly f;
        for (const auto &term : eq) {
            if (!term.is_array()) {
                throw InputError("each term must be an array of variable indices");
            }
            std::vector<uint32_t> vars;
            for (const auto &v : term) {
                if (!v.is_number_unsigned()) {
                    throw InputError("variable indices must be non-negative integers");
                }
                vars.push_back(v.get<uint32_t>());
            }
            f.toggle(Term(std::move(vars)));
        }
        system.equations.push_back(std::move(f));
    }
    system.validate();
    return system;
}

BqeSystem read_system_file(const std::filesystem::path &path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(path.string() + ": " + e.what());
    }
    return system_from_json(j);
}

std::string dump_json(const nlohmann::json &j) {
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path &path, const std::string &contents) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write " + path.string());
    }
    out << contents;
}

}  // namespace qbool
