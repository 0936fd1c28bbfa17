/* C interface to the STBAM topic-network extraction engine.
 *
 * All functions returning char* allocate with malloc-compatible storage;
 * release with stbam_string_free. Functions returning pointers return NULL
 * on failure; functions returning int return STBAM_OK (0) on success.
 * After any failure, stbam_last_error() describes it and
 * stbam_last_status() classifies it. Both are thread-local.
 */

#ifndef STBAM_H
#define STBAM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    STBAM_OK = 0,
    STBAM_ERR_INVALID = 1,    /* bad arguments / usage */
    STBAM_ERR_IO = 2,         /* file could not be read or written */
    STBAM_ERR_BACKEND = 3,    /* backend transport or replay failure */
    STBAM_ERR_VALIDATION = 4, /* data failed a structural invariant */
};

typedef struct stbam_backend stbam_backend;
typedef struct stbam_result stbam_result;

const char* stbam_last_error(void);
int stbam_last_status(void);

void stbam_string_free(char* s);

/* Backends. prompt_file may be NULL to use the built-in prompt set. */
stbam_backend* stbam_backend_open_scripted(void);
/* fallback_to_rules != 0: a missing replay entry is answered by the
 * scripted rules instead of failing. */
stbam_backend* stbam_backend_open_replay(const char* replay_path,
                                         int fallback_to_rules);
stbam_backend* stbam_backend_open_live(const char* endpoint,
                                       const char* model_name,
                                       double temperature, int timeout_ms);
void stbam_backend_close(stbam_backend* backend);

/* Pipeline. strict != 0 halts the document on the first stage error. */
stbam_result* stbam_process_document(stbam_backend* backend, const char* text,
                                     const char* topic, int strict,
                                     int max_retries, const char* prompt_file);
void stbam_result_close(stbam_result* result);

int stbam_result_halted_early(const stbam_result* result);
int stbam_result_error_count(const stbam_result* result);
char* stbam_result_model_json(const stbam_result* result);
char* stbam_result_transcript_jsonl(const stbam_result* result);
char* stbam_result_summary(const stbam_result* result);

/* Renders a serialized model as prose. */
char* stbam_model_prose(const char* model_json);

/* Scores each model against its gold annotation (matched by test_id) and
 * returns the metrics table plus aggregate rates. */
int stbam_eval(const char* const* model_jsons, const char* const* test_ids,
               size_t n, const char* gold_json, char** csv_out,
               char** aggregate_json_out);

/* Aggregate rates over an existing metrics table. */
int stbam_table_aggregate(const char* csv_text, char** aggregate_json_out);

/* One line per differing cell between two metrics tables (matched by the
 * Example column). Empty string when the tables agree. */
int stbam_table_divergences(const char* computed_csv, const char* expected_csv,
                            char** notes_out);

#ifdef __cplusplus
}
#endif

#endif /* STBAM_H */
