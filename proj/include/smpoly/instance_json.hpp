// Copyright 2026 The smpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "smpoly/instance.hpp"

namespace smpoly {

/// Malformed input document (not valid JSON, or missing required fields).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads {"a": [...], "b": [...], "prefs": {name: [names, best first]}}.
/// Name-level problems (unknown or duplicate names) and instance invariant
/// violations are all raised together as InvalidInstance.
Instance instance_from_json(const nlohmann::json& doc);
Instance load_instance(const std::filesystem::path& path);

nlohmann::ordered_json instance_to_json(const Instance& inst);

}  // namespace smpoly
