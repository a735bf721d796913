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

#include "qgf/qgf.h"

#include <string>

#include "qgf/runner.hpp"

struct qgf_config {
  qgf::RunConfig cfg;
};

struct qgf_report {
  qgf::Report rep;
  std::string text;
};

namespace {

thread_local std::string last_error;

qgf_status fail(qgf_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
qgf_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const qgf::Error& e) {
    const qgf_status s = e.code() == qgf::ErrorCode::ParseError ? QGF_ERR_PARSE : QGF_ERR_VALIDATION;
    return fail(s, std::string(qgf::error_code_name(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    return fail(QGF_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* qgf_version(void) { return "0.1.0"; }

const char* qgf_last_error(void) { return last_error.c_str(); }

qgf_status qgf_config_parse(const char* json_text, qgf_config** out) {
  if (!json_text || !out) return fail(QGF_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new qgf_config{qgf::parse_config(json_text)};
    return QGF_OK;
  });
}

qgf_status qgf_config_set_checks(qgf_config* cfg, const char* checks) {
  if (!cfg || !checks) return fail(QGF_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    cfg->cfg.checks = qgf::parse_checks(checks);
    return QGF_OK;
  });
}

qgf_status qgf_config_set_max_degree(qgf_config* cfg, int degree) {
  if (!cfg) return fail(QGF_ERR_ARGUMENT, "null argument");
  if (degree < 1) return fail(QGF_ERR_ARGUMENT, "max degree must be positive");
  cfg->cfg.max_degree = degree;
  return QGF_OK;
}

qgf_status qgf_config_set_seed(qgf_config* cfg, uint64_t seed) {
  if (!cfg) return fail(QGF_ERR_ARGUMENT, "null argument");
  cfg->cfg.seed = seed;
  return QGF_OK;
}

qgf_status qgf_config_set_dump_r(qgf_config* cfg, int on) {
  if (!cfg) return fail(QGF_ERR_ARGUMENT, "null argument");
  cfg->cfg.dump_r = on != 0;
  return QGF_OK;
}

qgf_status qgf_config_set_corrupt_r(qgf_config* cfg, int on) {
  if (!cfg) return fail(QGF_ERR_ARGUMENT, "null argument");
  cfg->cfg.corrupt_r = on != 0;
  return QGF_OK;
}

void qgf_config_free(qgf_config* cfg) { delete cfg; }

qgf_status qgf_run(const qgf_config* cfg, qgf_report** out) {
  if (!cfg || !out) return fail(QGF_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new qgf_report{qgf::run(cfg->cfg), {}};
    return QGF_OK;
  });
}

int qgf_report_passed(const qgf_report* rep) { return rep && rep->rep.passed ? 1 : 0; }

const char* qgf_report_json(qgf_report* rep, int indent) {
  if (!rep) return "";
  rep->text = rep->rep.json.dump(indent < 0 ? -1 : indent);
  return rep->text.c_str();
}

const char* qgf_report_summary(const qgf_report* rep) { return rep ? rep->rep.summary.c_str() : ""; }

void qgf_report_free(qgf_report* rep) { delete rep; }

}  // extern "C"
