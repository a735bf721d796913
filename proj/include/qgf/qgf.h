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

#ifndef QGF_QGF_H
#define QGF_QGF_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qgf_config qgf_config;
typedef struct qgf_report qgf_report;

typedef enum {
  QGF_OK = 0,
  QGF_ERR_PARSE = 1,
  QGF_ERR_VALIDATION = 2,
  QGF_ERR_ARGUMENT = 3,
  QGF_ERR_INTERNAL = 4
} qgf_status;

const char* qgf_version(void);
/* Message of the last failed call on this thread; "" if none. */
const char* qgf_last_error(void);

qgf_status qgf_config_parse(const char* json_text, qgf_config** out);
/* Comma separated section names, or "all". */
qgf_status qgf_config_set_checks(qgf_config* cfg, const char* checks);
qgf_status qgf_config_set_max_degree(qgf_config* cfg, int degree);
qgf_status qgf_config_set_seed(qgf_config* cfg, uint64_t seed);
qgf_status qgf_config_set_dump_r(qgf_config* cfg, int on);
/* Debug: perturb R before the Yang-Baxter check. */
qgf_status qgf_config_set_corrupt_r(qgf_config* cfg, int on);
void qgf_config_free(qgf_config* cfg);

qgf_status qgf_run(const qgf_config* cfg, qgf_report** out);
/* 1 if every requested section passed or was not applicable. */
int qgf_report_passed(const qgf_report* rep);
/* Owned by the report. indent < 0 gives compact output. */
const char* qgf_report_json(qgf_report* rep, int indent);
const char* qgf_report_summary(const qgf_report* rep);
void qgf_report_free(qgf_report* rep);

#ifdef __cplusplus
}
#endif

#endif
