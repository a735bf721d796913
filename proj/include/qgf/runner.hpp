// Copyright 2026 The qgroup-frt Authors
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

#ifndef QGF_RUNNER_HPP
#define QGF_RUNNER_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgf/params.hpp"

namespace qgf {

/// Section names accepted by the checks list, in run order after "params".
const std::vector<std::string>& check_names();

struct RunConfig {
  int n = 0;
  int m = 0;
  ParamValue r;
  std::map<IndexPair, ParamValue> p;
  std::set<std::string> checks;  // empty means all
  int max_degree = 3;
  std::uint64_t seed = 0;
  bool dump_r = false;
  /// Fault injection: perturb one off-diagonal entry of R before the checks.
  bool corrupt_r = false;
  std::string output_path;
};

/// Throws Error(ParseError) on malformed JSON and Error(ValidationError)
/// with the offending key in the message otherwise.
RunConfig parse_config(const std::string& text);

/// "t", "t^k", "z^a", "z^a t^k", "0" or an integer exponent of z.
ParamValue parse_param_value(const nlohmann::json& v, const std::string& key);

/// Comma separated; "all" selects every section.
std::set<std::string> parse_checks(const std::string& csv);

struct Report {
  nlohmann::json json;
  bool passed = false;
  std::string summary;
};

/// Module errors end up as a failed section, never as an exception.
Report run(const RunConfig& cfg);

/// The report without timing fields; equal for equal config and seed.
nlohmann::json strip_timing(nlohmann::json j);

nlohmann::json scalar_json(const Scalar& s);

}  // namespace qgf

#endif
