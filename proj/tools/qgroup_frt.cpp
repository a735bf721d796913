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

// qgroup-frt check <config.json> [--checks ...] [--max-degree D] [--seed S]
//                  [--out report.json] [--dump-r]

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qgf/qgf.h"

namespace {

int die(const std::string& msg) {
  std::cerr << "qgroup-frt: " << msg << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for multiparameter FRT quantum groups"};
  app.require_subcommand(1);
  CLI::App* check = app.add_subcommand("check", "Run verification suites on a parameter set");
  std::string config_path, checks, out_path;
  int max_degree = 0;
  std::uint64_t seed = 0;
  bool dump_r = false, corrupt_r = false;
  check->add_option("config", config_path, "JSON parameter file")->required();
  check->add_option("--checks", checks, "ybe,relations,cartan,group,pairing or all");
  check->add_option("--max-degree", max_degree, "Word length cutoff (default 3)")->check(CLI::PositiveNumber);
  auto* seed_opt = check->add_option("--seed", seed, "Seed for sampled checks");
  check->add_option("--out", out_path, "Write the JSON report here");
  check->add_flag("--dump-r", dump_r, "Include R in the report");
  check->add_flag("--debug-corrupt-r", corrupt_r, "Perturb R before checking (fault injection)");
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(config_path);
  if (!in) return die("cannot read " + config_path);
  std::stringstream buf;
  buf << in.rdbuf();

  qgf_config* cfg = nullptr;
  if (qgf_config_parse(buf.str().c_str(), &cfg) != QGF_OK) return die(qgf_last_error());
  bool ok = true;
  if (!checks.empty()) ok = ok && qgf_config_set_checks(cfg, checks.c_str()) == QGF_OK;
  if (max_degree > 0) ok = ok && qgf_config_set_max_degree(cfg, max_degree) == QGF_OK;
  if (*seed_opt) ok = ok && qgf_config_set_seed(cfg, seed) == QGF_OK;
  if (dump_r) ok = ok && qgf_config_set_dump_r(cfg, 1) == QGF_OK;
  if (corrupt_r) ok = ok && qgf_config_set_corrupt_r(cfg, 1) == QGF_OK;
  if (!ok) {
    qgf_config_free(cfg);
    return die(qgf_last_error());
  }

  qgf_report* rep = nullptr;
  const qgf_status st = qgf_run(cfg, &rep);
  qgf_config_free(cfg);
  if (st != QGF_OK) return die(qgf_last_error());

  std::cout << qgf_report_summary(rep);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      qgf_report_free(rep);
      return die("cannot write " + out_path);
    }
    out << qgf_report_json(rep, 2) << "\n";
  }
  const int code = qgf_report_passed(rep) ? 0 : 1;
  qgf_report_free(rep);
  return code;
}
