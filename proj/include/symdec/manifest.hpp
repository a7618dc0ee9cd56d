// Copyright 2026 The symdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMDEC_MANIFEST_HPP
#define SYMDEC_MANIFEST_HPP

#include <map>
#include <string>
#include <vector>

namespace symdec {

// Sidecar record of how an output file was produced: the subcommand, its
// resolved configuration, and every file the run wrote. Written next to the
// primary output as "<output>.manifest" so results stay auditable.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::string version;
  std::string timestamp;  // UTC, ISO 8601
  std::map<std::string, std::string> config;
  std::vector<std::string> outputs;
};

std::string utc_timestamp();

void write_manifest(const std::string& primary_output, const RunManifest& m);
RunManifest read_manifest(const std::string& manifest_path);

}  // namespace symdec

#endif
