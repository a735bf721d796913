/* Copyright 2026 The qgroup-frt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <string.h>

#include "qgf/qgf.h"

static int failures = 0;

#define EXPECT(cond)                                          \
  do {                                                        \
    if (!(cond)) {                                            \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                             \
    }                                                         \
  } while (0)

int main(void) {
  qgf_config* cfg = NULL;
  qgf_report* rep = NULL;

  EXPECT(qgf_config_parse("{\"n\":2,", &cfg) == QGF_ERR_PARSE);
  EXPECT(strlen(qgf_last_error()) > 0);
  EXPECT(qgf_config_parse("{\"r\":0}", &cfg) == QGF_ERR_VALIDATION);
  EXPECT(strstr(qgf_last_error(), "REqualsOne") != NULL);
  EXPECT(qgf_config_parse(NULL, &cfg) == QGF_ERR_ARGUMENT);

  EXPECT(qgf_config_parse("{\"n\":3,\"m\":7,\"r\":1,\"p\":{\"1,2\":2,\"2,3\":2,\"1,3\":-1}}", &cfg) == QGF_OK);
  EXPECT(strlen(qgf_last_error()) == 0);
  EXPECT(qgf_config_set_checks(cfg, "ybe,cartan") == QGF_OK);
  EXPECT(qgf_config_set_checks(cfg, "ybe,bogus") == QGF_ERR_VALIDATION);
  EXPECT(qgf_config_set_max_degree(cfg, 0) == QGF_ERR_ARGUMENT);
  EXPECT(qgf_config_set_max_degree(cfg, 2) == QGF_OK);
  EXPECT(qgf_config_set_seed(cfg, 5) == QGF_OK);

  EXPECT(qgf_run(cfg, &rep) == QGF_OK);
  EXPECT(qgf_report_passed(rep) == 1);
  EXPECT(strstr(qgf_report_json(rep, -1), "\"cartan\"") != NULL);
  EXPECT(strstr(qgf_report_summary(rep), "overall: PASS") != NULL);
  qgf_report_free(rep);

  EXPECT(qgf_config_set_corrupt_r(cfg, 1) == QGF_OK);
  EXPECT(qgf_run(cfg, &rep) == QGF_OK);
  EXPECT(qgf_report_passed(rep) == 0);
  qgf_report_free(rep);
  qgf_config_free(cfg);

  EXPECT(qgf_report_passed(NULL) == 0);
  qgf_config_free(NULL);
  qgf_report_free(NULL);

  if (failures) return 1;
  printf("capi: ok (%s)\n", qgf_version());
  return 0;
}
