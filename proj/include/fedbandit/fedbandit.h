/* Copyright 2026 The fedbandit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the fedbandit simulator.
 *
 * All handles are opaque and owned by the caller once returned; release them
 * with the matching *_free function. Every fallible call returns an
 * fb_status; on failure a description of the last error on the calling
 * thread is available from fb_last_error(). Strings returned through char**
 * out-parameters must be released with fb_string_free().
 */

#ifndef FEDBANDIT_FEDBANDIT_H_
#define FEDBANDIT_FEDBANDIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FEDBANDIT_BUILDING)
#define FB_API __declspec(dllexport)
#else
#define FB_API __declspec(dllimport)
#endif
#else
#define FB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fb_status {
  FB_OK = 0,
  FB_PARSE_ERROR = 1,
  FB_VALIDATION_ERROR = 2,
  FB_DISCONNECTED_GRAPH = 3,
  FB_SELF_LOOP = 4,
  FB_DUPLICATE_EDGE = 5,
  FB_TOO_FEW_AGENTS = 6,
  FB_NUMERICAL_FAILURE = 7,
  FB_INVALID_EPSILON = 8,
  FB_INVALID_SCALE = 9,
  FB_EMPTY_HISTORY = 10,
  FB_REWARD_OUT_OF_RANGE = 11,
  FB_MONITOR_VIOLATION = 12,
  FB_GAP_TOO_SMALL = 13,
  FB_OVERFLOW = 14,
  FB_SCHEMA_ERROR = 15,
  FB_EMPTY_ARM = 16,
  FB_IO_ERROR = 17,
  FB_INVALID_ARGUMENT = 18,
  FB_INTERNAL = 19
} fb_status;

typedef enum fb_series {
  FB_SERIES_MEAN = 0,
  FB_SERIES_MIN = 1,
  FB_SERIES_MAX = 2
} fb_series;

typedef struct fb_config fb_config;
typedef struct fb_result fb_result;
typedef struct fb_dataset fb_dataset;

FB_API const char* fb_version(void);
FB_API const char* fb_status_name(fb_status status);
/* Message of the most recent failure on this thread; "" if none. */
FB_API const char* fb_last_error(void);
FB_API void fb_string_free(char* s);

/* ---- configuration ---- */

FB_API fb_status fb_config_load(const char* path, fb_config** out);
FB_API fb_status fb_config_parse(const char* text, fb_config** out);
/* Applies one `key = value` setting and re-validates the whole config. On
 * failure the config is left unchanged. */
FB_API fb_status fb_config_set(fb_config* config, const char* key,
                               const char* value);
FB_API fb_status fb_config_serialize(const fb_config* config, char** out);
FB_API void fb_config_free(fb_config* config);

/* ---- experiments ---- */

FB_API fb_status fb_run(const fb_config* config, fb_result** out);
FB_API void fb_result_free(fb_result* result);

FB_API size_t fb_result_num_checkpoints(const fb_result* result);
FB_API size_t fb_result_num_trials(const fb_result* result);
/* Copies up to `capacity` values; returns the number available. */
FB_API size_t fb_result_checkpoints(const fb_result* result, int64_t* out,
                                    size_t capacity);
FB_API size_t fb_result_series(const fb_result* result, fb_series which,
                               double* out, size_t capacity);
FB_API double fb_result_lambda2(const fb_result* result);
/* 1 when every enabled monitor passed in every trial. */
FB_API int fb_result_monitors_passed(const fb_result* result);
/* Cumulative regret of one agent (0-based) at the final checkpoint. */
FB_API fb_status fb_result_final_regret(const fb_result* result, size_t trial,
                                        size_t agent, double* out);
/* Pulls of `arm` by `agent` over the trial, including initialization. */
FB_API fb_status fb_result_pulls(const fb_result* result, size_t trial,
                                 size_t agent, size_t arm, int64_t* out);
/* Writes <dir>/traces.csv and <dir>/summary.json, creating dir if needed. */
FB_API fb_status fb_result_write(const fb_result* result, const char* dir);
FB_API fb_status fb_result_traces_csv(const fb_result* result, char** out);

/* ---- theory ---- */

/* Bound curves at the config's checkpoints, as CSV text. */
FB_API fb_status fb_analyze_csv(const fb_config* config, char** out);
FB_API fb_status fb_compute_L(double lambda2, int num_agents, int64_t* out);

/* ---- dataset ---- */

/* split_sequential = 0 shuffles records with split_seed first. */
FB_API fb_status fb_dataset_load(const char* csv_path, int num_agents,
                                 int split_sequential, uint64_t split_seed,
                                 fb_dataset** out);
FB_API fb_status fb_dataset_report_json(const fb_dataset* dataset, char** out);
FB_API fb_status fb_dataset_report_table(const fb_dataset* dataset,
                                         char** out);
FB_API void fb_dataset_free(fb_dataset* dataset);

#ifdef __cplusplus
}
#endif

#endif /* FEDBANDIT_FEDBANDIT_H_ */
