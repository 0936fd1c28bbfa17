#include "stbam.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "backend.hpp"
#include "eval.hpp"
#include "pipeline.hpp"
#include "prompt_catalog.hpp"
#include "topic_network.hpp"

namespace {

thread_local std::string g_last_error;
thread_local int g_last_status = STBAM_OK;

void set_error(int status, const std::string& message) {
    g_last_status = status;
    g_last_error = message;
}

void clear_error() {
    g_last_status = STBAM_OK;
    g_last_error.clear();
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int classify(const std::exception& e) {
    // std::invalid_argument -> usage; std::runtime_error -> validation/io.
    if (dynamic_cast<const std::invalid_argument*>(&e))
        return STBAM_ERR_INVALID;
    return STBAM_ERR_VALIDATION;
}

}  // namespace

struct stbam_backend {
    std::unique_ptr<stbam::Backend> impl;
};

struct stbam_result {
    stbam::DocumentResult doc;
};

extern "C" {

const char* stbam_last_error(void) { return g_last_error.c_str(); }

int stbam_last_status(void) { return g_last_status; }

void stbam_string_free(char* s) { std::free(s); }

stbam_backend* stbam_backend_open_scripted(void) {
    clear_error();
    return new stbam_backend{std::make_unique<stbam::ScriptedBackend>()};
}

stbam_backend* stbam_backend_open_replay(const char* replay_path,
                                         int fallback_to_rules) {
    clear_error();
    if (!replay_path) {
        set_error(STBAM_ERR_INVALID, "replay_path is null");
        return nullptr;
    }
    try {
        auto impl = std::make_unique<stbam::ReplayBackend>(
            replay_path, fallback_to_rules
                             ? stbam::MissingPolicy::fallback_rule
                             : stbam::MissingPolicy::error);
        return new stbam_backend{std::move(impl)};
    } catch (const std::exception& e) {
        set_error(STBAM_ERR_IO, e.what());
        return nullptr;
    }
}

stbam_backend* stbam_backend_open_live(const char* endpoint,
                                       const char* model_name,
                                       double temperature, int timeout_ms) {
    clear_error();
    if (!endpoint || !*endpoint || !model_name || !*model_name) {
        set_error(STBAM_ERR_INVALID, "endpoint and model_name are required");
        return nullptr;
    }
    stbam::LiveConfig config;
    config.endpoint = endpoint;
    config.model_name = model_name;
    config.temperature = temperature;
    if (timeout_ms > 0) config.timeout_ms = timeout_ms;
    return new stbam_backend{std::make_unique<stbam::LiveBackend>(config)};
}

void stbam_backend_close(stbam_backend* backend) { delete backend; }

stbam_result* stbam_process_document(stbam_backend* backend, const char* text,
                                     const char* topic, int strict,
                                     int max_retries,
                                     const char* prompt_file) {
    clear_error();
    if (!backend || !text || !topic) {
        set_error(STBAM_ERR_INVALID, "backend, text and topic are required");
        return nullptr;
    }
    try {
        stbam::PromptCatalog catalog =
            prompt_file ? stbam::PromptCatalog::from_file(prompt_file)
                        : stbam::PromptCatalog::builtin();
        stbam::PipelineOptions options;
        options.mode = strict ? stbam::Mode::strict : stbam::Mode::lenient;
        if (max_retries >= 0) options.max_retries = max_retries;
        stbam::DocumentResult doc = stbam::process_document(
            text, topic, *backend->impl, catalog, options);
        return new stbam_result{std::move(doc)};
    } catch (const std::invalid_argument& e) {
        set_error(STBAM_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        set_error(STBAM_ERR_VALIDATION, e.what());
    }
    return nullptr;
}

void stbam_result_close(stbam_result* result) { delete result; }

int stbam_result_halted_early(const stbam_result* result) {
    return result && result->doc.halted_early ? 1 : 0;
}

int stbam_result_error_count(const stbam_result* result) {
    return result ? static_cast<int>(result->doc.errors.size()) : 0;
}

char* stbam_result_model_json(const stbam_result* result) {
    clear_error();
    if (!result) {
        set_error(STBAM_ERR_INVALID, "result is null");
        return nullptr;
    }
    return dup_string(
        stbam::serialize_model(result->doc.network, result->doc.errors));
}

char* stbam_result_transcript_jsonl(const stbam_result* result) {
    clear_error();
    if (!result) {
        set_error(STBAM_ERR_INVALID, "result is null");
        return nullptr;
    }
    return dup_string(stbam::transcript_to_jsonl(result->doc.transcript));
}

char* stbam_result_summary(const stbam_result* result) {
    clear_error();
    if (!result) {
        set_error(STBAM_ERR_INVALID, "result is null");
        return nullptr;
    }
    return dup_string(result->doc.network.summary());
}

char* stbam_model_prose(const char* model_json) {
    clear_error();
    if (!model_json) {
        set_error(STBAM_ERR_INVALID, "model_json is null");
        return nullptr;
    }
    try {
        stbam::ParsedModel model = stbam::deserialize_model(model_json);
        return dup_string(model.network.to_prose());
    } catch (const std::exception& e) {
        set_error(classify(e), e.what());
        return nullptr;
    }
}

int stbam_eval(const char* const* model_jsons, const char* const* test_ids,
               size_t n, const char* gold_json, char** csv_out,
               char** aggregate_json_out) {
    clear_error();
    if (!model_jsons || !test_ids || n == 0 || !gold_json || !csv_out) {
        set_error(STBAM_ERR_INVALID, "stbam_eval: missing arguments");
        return STBAM_ERR_INVALID;
    }
    try {
        auto gold = stbam::parse_gold(gold_json);
        std::vector<stbam::MetricsRow> rows;
        for (size_t i = 0; i < n; ++i) {
            stbam::ParsedModel model =
                stbam::deserialize_model(model_jsons[i]);
            const stbam::GoldAnnotation* annotation = nullptr;
            for (const auto& g : gold) {
                if (g.test_id == test_ids[i]) {
                    annotation = &g;
                    break;
                }
            }
            if (!annotation) {
                set_error(STBAM_ERR_VALIDATION,
                          std::string("no gold annotation for test_id: ") +
                              test_ids[i]);
                return STBAM_ERR_VALIDATION;
            }
            rows.push_back(stbam::compute_metrics(model.network, model.errors,
                                                  *annotation));
        }
        *csv_out = dup_string(stbam::emit_table(rows));
        if (aggregate_json_out) {
            *aggregate_json_out =
                dup_string(stbam::aggregate_to_json(stbam::aggregate(rows)));
        }
        return STBAM_OK;
    } catch (const std::exception& e) {
        set_error(classify(e), e.what());
        return g_last_status;
    }
}

int stbam_table_aggregate(const char* csv_text, char** aggregate_json_out) {
    clear_error();
    if (!csv_text || !aggregate_json_out) {
        set_error(STBAM_ERR_INVALID, "stbam_table_aggregate: missing arguments");
        return STBAM_ERR_INVALID;
    }
    try {
        auto rows = stbam::parse_table(csv_text);
        *aggregate_json_out =
            dup_string(stbam::aggregate_to_json(stbam::aggregate(rows)));
        return STBAM_OK;
    } catch (const std::exception& e) {
        set_error(classify(e), e.what());
        return g_last_status;
    }
}

int stbam_table_divergences(const char* computed_csv, const char* expected_csv,
                            char** notes_out) {
    clear_error();
    if (!computed_csv || !expected_csv || !notes_out) {
        set_error(STBAM_ERR_INVALID,
                  "stbam_table_divergences: missing arguments");
        return STBAM_ERR_INVALID;
    }
    try {
        auto computed = stbam::parse_table(computed_csv);
        auto expected = stbam::parse_table(expected_csv);
        auto divergences = stbam::compare_tables(computed, expected);
        std::string out;
        for (const auto& d : divergences) {
            for (const auto& note : d.notes) {
                out += d.label + ": " + note + "\n";
            }
        }
        *notes_out = dup_string(out);
        return STBAM_OK;
    } catch (const std::exception& e) {
        set_error(classify(e), e.what());
        return g_last_status;
    }
}

}  // extern "C"
