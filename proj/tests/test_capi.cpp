#include <doctest.h>

#include <string>

#include <json.hpp>

#include "stbam.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    stbam_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("scripted extraction through the C API") {
    stbam_backend* backend = stbam_backend_open_scripted();
    REQUIRE(backend);
    stbam_result* result = stbam_process_document(
        backend, "Tom bought a bike.", "purchase", 0, 2, nullptr);
    REQUIRE(result);
    CHECK(stbam_result_halted_early(result) == 0);
    CHECK(stbam_result_error_count(result) == 0);

    auto model = nlohmann::json::parse(take(stbam_result_model_json(result)));
    CHECK(model["topic"] == "purchase");
    CHECK(model["containers"].size() == 2);
    CHECK(model["links"].size() == 1);
    CHECK(model["errors"].empty());

    std::string transcript = take(stbam_result_transcript_jsonl(result));
    CHECK(transcript.find("\"seq\":1") != std::string::npos);

    std::string summary = take(stbam_result_summary(result));
    CHECK(summary.find("Actions: [1, bought, Tom, bike]") !=
          std::string::npos);

    stbam_result_close(result);
    stbam_backend_close(backend);
}

TEST_CASE("null arguments yield STBAM_ERR_INVALID") {
    CHECK(stbam_process_document(nullptr, "x", "y", 0, 2, nullptr) == nullptr);
    CHECK(stbam_last_status() == STBAM_ERR_INVALID);
    CHECK(std::string(stbam_last_error()).size() > 0);

    CHECK(stbam_backend_open_replay(nullptr, 0) == nullptr);
    CHECK(stbam_last_status() == STBAM_ERR_INVALID);

    CHECK(stbam_backend_open_live("", "", 0.0, 0) == nullptr);
    CHECK(stbam_last_status() == STBAM_ERR_INVALID);
}

TEST_CASE("missing replay file yields STBAM_ERR_IO") {
    CHECK(stbam_backend_open_replay("/nonexistent/replay.jsonl", 0) == nullptr);
    CHECK(stbam_last_status() == STBAM_ERR_IO);
}

TEST_CASE("empty topic yields STBAM_ERR_INVALID") {
    stbam_backend* backend = stbam_backend_open_scripted();
    REQUIRE(backend);
    CHECK(stbam_process_document(backend, "Tom bought a bike.", "", 0, 2,
                                 nullptr) == nullptr);
    CHECK(stbam_last_status() == STBAM_ERR_INVALID);
    stbam_backend_close(backend);
}

TEST_CASE("model prose through the C API") {
    const char* model = R"({
      "topic": "purchase",
      "containers": [
        {"id": 1, "label": "Tom", "roles": ["subject"]},
        {"id": 2, "label": "bike", "roles": ["object"]}
      ],
      "links": [{"id": 1, "action": "bought", "subject_id": 1, "object_id": 2}],
      "errors": []
    })";
    std::string prose = take(stbam_model_prose(model));
    CHECK(prose.find("Tom bought bike.") != std::string::npos);

    CHECK(stbam_model_prose("not json") == nullptr);
    CHECK(stbam_last_status() == STBAM_ERR_VALIDATION);
}

TEST_CASE("evaluation through the C API") {
    const char* model = R"({
      "topic": "purchase",
      "containers": [
        {"id": 1, "label": "Tom", "roles": ["subject"]},
        {"id": 2, "label": "bike", "roles": ["object"]}
      ],
      "links": [{"id": 1, "action": "bought", "subject_id": 1, "object_id": 2}],
      "errors": []
    })";
    const char* gold = R"json([{
      "test_id": "t1", "label": "Test 1 (A1)", "topic": "purchase",
      "qualifying_actions": ["bought"], "notes": ""
    }])json";
    const char* models[] = {model};
    const char* ids[] = {"t1"};
    char* csv = nullptr;
    char* agg = nullptr;
    REQUIRE(stbam_eval(models, ids, 1, gold, &csv, &agg) == STBAM_OK);
    std::string table = take(csv);
    CHECK(table.find("Test 1 (A1),Yes,No,1,1,1,1,1") != std::string::npos);
    auto summary = nlohmann::json::parse(take(agg));
    CHECK(summary["n_tests"] == 1);
    CHECK(summary["full_success_rate"] == 1.0);

    char* agg2 = nullptr;
    REQUIRE(stbam_table_aggregate(table.c_str(), &agg2) == STBAM_OK);
    take(agg2);

    const char* bad_ids[] = {"missing"};
    char* out = nullptr;
    CHECK(stbam_eval(models, bad_ids, 1, gold, &out, nullptr) ==
          STBAM_ERR_VALIDATION);
}

TEST_CASE("table divergences through the C API") {
    const char* header =
        "Example,Got Expected Results,Errors Thrown,# of Subjects Found,"
        "# of Objects Found,# of Subjects Used in Actions,"
        "# of Objects used in Actions,# of Actions\n";
    std::string computed = std::string(header) + "Test 1 (A1),Yes,No,1,1,1,1,1\n";
    std::string expected = std::string(header) + "Test 1 (A1),No,No,1,1,1,1,1\n";
    char* notes = nullptr;
    REQUIRE(stbam_table_divergences(computed.c_str(), expected.c_str(),
                                    &notes) == STBAM_OK);
    std::string text = take(notes);
    CHECK(text.find("Test 1 (A1)") != std::string::npos);
    CHECK(text.find("Got Expected Results") != std::string::npos);

    char* none = nullptr;
    REQUIRE(stbam_table_divergences(computed.c_str(), computed.c_str(),
                                    &none) == STBAM_OK);
    CHECK(take(none).empty());
}
