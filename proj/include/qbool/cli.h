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

#ifndef QBOOL_CLI_H
#define QBOOL_CLI_H

#include <ostream>

namespace qbool {

/// Entry point of the `qbool` tool. Results go to --out when given, else to
/// `out`; diagnostics go to `err`. Returns 0 on success, 2 on bad input or a
/// capacity violation, 3 when a resource guard trips, 1 otherwise.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run_cli(int argc, const char *const *argv);

}  // namespace qbool

#endif
