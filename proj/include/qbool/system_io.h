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

#ifndef QBOOL_SYSTEM_IO_H
#define QBOOL_SYSTEM_IO_H

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qbool/anf.h"

namespace qbool {

/// {"n": int, "equations": [[[int, ...], ...], ...]}; [] is the constant term.
/// Terms are written in canonical (size, indices) order.
nlohmann::json system_to_json(const BqeSystem &system);
/// Ignores unknown keys. Throws InputError on malformed input.
BqeSystem system_from_json(const nlohmann::json &j);

BqeSystem read_system_file(const std::filesystem::path &path);

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump_json(const nlohmann::json &j);
std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &contents);

}  // namespace qbool

#endif
