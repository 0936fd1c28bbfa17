#include <doctest.h>

#include <stdexcept>

#include "pipeline.hpp"

using namespace stbam;

namespace {

const PromptCatalog& catalog() {
    static PromptCatalog c = PromptCatalog::builtin();
    return c;
}

// Backend stub that answers from a fixed playlist, one entry per request.
class PlaylistBackend : public Backend {
public:
    explicit PlaylistBackend(std::vector<std::string> responses)
        : responses_(std::move(responses)) {}

    std::variant<std::string, ChatError> send(const ChatRequest&) override {
        if (next_ >= responses_.size())
            return ChatError{ChatErrorKind::backend_failure,
                             "playlist exhausted"};
        return responses_[next_++];
    }

private:
    std::vector<std::string> responses_;
    size_t next_ = 0;
};

}  // namespace

TEST_CASE("single simple sentence produces one triple and one link") {
    ScriptedBackend backend;
    auto result = process_document("Tom bought a bike.", "purchase", backend,
                                   catalog());
    CHECK_FALSE(result.halted_early);
    CHECK(result.errors.empty());
    REQUIRE(result.triples.size() == 1);
    CHECK(result.triples[0].action == "bought");
    REQUIRE(result.network.containers().size() == 2);
    CHECK(result.network.containers()[0].label == "Tom");
    CHECK(result.network.containers()[0].is_subject);
    CHECK(result.network.containers()[1].is_object);
    REQUIRE(result.network.links().size() == 1);
    CHECK(result.network.links()[0].action == "bought");
    CHECK(result.network.links()[0].subject_id == 1);
    CHECK(result.network.links()[0].object_id == 2);
}

TEST_CASE("off-topic sentences are dropped without errors") {
    ScriptedBackend backend;
    auto result = process_document("The sky is blue. Tom bought a bike.",
                                   "purchase", backend, catalog());
    CHECK(result.errors.empty());
    CHECK(result.triples.size() == 1);
    CHECK(result.network.links().size() == 1);
}

TEST_CASE("complex sentences are split once and expanded units are simple") {
    ScriptedBackend backend;
    auto result = process_document("Joe and John bought pencils and markers.",
                                   "purchase", backend, catalog());
    CHECK(result.errors.empty());
    CHECK(result.triples.size() == 4);
    CHECK(result.network.links().size() == 4);
    // Two subjects, two objects, each pair linked by "bought".
    int subjects = 0, objects = 0;
    for (const auto& c : result.network.containers()) {
        if (c.is_subject) ++subjects;
        if (c.is_object) ++objects;
    }
    CHECK(subjects == 2);
    CHECK(objects == 2);
    // Expanded units never see the complexity check again: exactly one
    // complexity exchange should appear in the transcript.
    int complexity_checks = 0;
    for (const auto& e : result.transcript) {
        if (e.request.system_prompt.find("multiple subjects or objects") !=
            std::string::npos)
            ++complexity_checks;
    }
    CHECK(complexity_checks == 1);
}

TEST_CASE("strict mode halts on a non-enumerable object") {
    ScriptedBackend backend;
    PipelineOptions options;
    options.mode = Mode::strict;
    auto result =
        process_document("Grandma sold the entire set.", "purchase", backend,
                         catalog(), options);
    CHECK(result.halted_early);
    REQUIRE(result.errors.size() == 1);
    CHECK(result.errors[0].stage == Stage::object_parse);
    CHECK(result.errors[0].cause == Cause::non_enumerable_element);
    // The whole triple rolls back: nothing committed.
    CHECK(result.network.containers().empty());
    CHECK(result.network.links().empty());
    CHECK(result.triples.empty());
}

TEST_CASE("lenient mode records the error and continues") {
    ScriptedBackend backend;
    auto result = process_document(
        "Grandma sold the entire set. Tom bought a bike.", "purchase",
        backend, catalog());
    CHECK_FALSE(result.halted_early);
    REQUIRE(result.errors.size() == 1);
    CHECK(result.errors[0].cause == Cause::non_enumerable_element);
    CHECK(result.triples.size() == 1);  // the second sentence still lands
    CHECK(result.network.links().size() == 1);
}

TEST_CASE("malformed responses are retried and the retries are transcribed") {
    PlaylistBackend backend({
        "garbage",                  // multi-clause, attempt 1
        "{ \"response\": \"No\" }", // multi-clause, attempt 2
        "{ \"response\": \"No\" }", // complexity
        "{ \"response\": \"No\" }", // topic: not relevant, stop here
    });
    auto result =
        process_document("Tom bought a bike.", "purchase", backend, catalog());
    CHECK(result.errors.empty());
    REQUIRE(result.transcript.size() == 4);
    CHECK(result.transcript[0].parse_outcome == ParseOutcome::malformed);
    CHECK(result.transcript[1].parse_outcome == ParseOutcome::ok);
    CHECK(result.transcript[0].seq == 1);
    CHECK(result.transcript[3].seq == 4);
}

TEST_CASE("exhausted retries become a stage error with a lenient fallback") {
    // Three malformed answers for multi-clause (1 try + 2 retries), then a
    // clean run treating the text as a single sentence.
    PlaylistBackend backend({
        "x", "y", "z",
        "{ \"response\": \"No\" }",  // complexity
        "{ \"response\": \"No\" }",  // topic
    });
    auto result =
        process_document("Tom bought a bike.", "purchase", backend, catalog());
    CHECK_FALSE(result.halted_early);
    REQUIRE(result.errors.size() == 1);
    CHECK(result.errors[0].stage == Stage::multi_clause);
    CHECK(result.errors[0].cause == Cause::malformed);
}

TEST_CASE("strict mode halts on the first stage error") {
    PlaylistBackend backend({"x", "y", "z"});
    PipelineOptions options;
    options.mode = Mode::strict;
    auto result = process_document("Tom bought a bike.", "purchase", backend,
                                   catalog(), options);
    CHECK(result.halted_early);
    REQUIRE(result.errors.size() == 1);
    CHECK(result.errors[0].stage == Stage::multi_clause);
    CHECK(result.transcript.size() == 3);
}

TEST_CASE("backend failure is recorded without retries") {
    PlaylistBackend backend({});
    auto result =
        process_document("Tom bought a bike.", "purchase", backend, catalog());
    REQUIRE_FALSE(result.errors.empty());
    CHECK(result.errors[0].cause == Cause::backend_failure);
    REQUIRE_FALSE(result.transcript.empty());
    CHECK(result.transcript[0].parse_outcome == ParseOutcome::backend_failure);
}

TEST_CASE("empty SVO fields are rejected as empty_field") {
    PlaylistBackend backend({
        "{ \"response\": \"No\" }",   // multi-clause
        "{ \"response\": \"No\" }",   // complexity
        "{ \"response\": \"Yes\" }",  // topic
        "{ \"subject\": \"Tom\", \"object\": \" \", \"action\": \"bought\" }",
    });
    auto result =
        process_document("Tom bought a bike.", "purchase", backend, catalog());
    REQUIRE(result.errors.size() == 1);
    CHECK(result.errors[0].stage == Stage::svo_extract);
    CHECK(result.errors[0].cause == Cause::empty_field);
    CHECK(result.network.links().empty());
}

TEST_CASE("empty enumeration lists are benign no-ops") {
    PlaylistBackend backend({
        "{ \"response\": \"No\" }",   // multi-clause
        "{ \"response\": \"No\" }",   // complexity
        "{ \"response\": \"Yes\" }",  // topic
        "{ \"subject\": \"I\", \"object\": \"a bike\", \"action\": \"bought\" }",
        "[]",                          // subject enumeration: nothing
        "[\"bike\"]",                  // object enumeration
    });
    auto result =
        process_document("I bought a bike.", "purchase", backend, catalog());
    CHECK(result.errors.empty());
    CHECK(result.triples.size() == 1);
    CHECK(result.network.containers().size() == 1);  // only the object
    CHECK(result.network.links().empty());
}

TEST_CASE("empty inputs are rejected") {
    ScriptedBackend backend;
    CHECK_THROWS_AS(process_document("  ", "purchase", backend, catalog()),
                    std::invalid_argument);
    CHECK_THROWS_AS(process_document("Tom bought a bike.", "", backend,
                                     catalog()),
                    std::invalid_argument);
}
