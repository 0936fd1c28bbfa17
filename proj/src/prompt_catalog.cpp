#include "prompt_catalog.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace stbam {

namespace {

constexpr const char* kTopicSlot = "{** TOPIC **}";

constexpr const char* kMultiClause =
    R"(Is the following input multiple independent clauses? Respond with only a Yes or No. Only respond as a JSON object. For example, "Dillan ate an apple. He thought it tasted good." { "response": "Yes" }.)";

constexpr const char* kParagraphSplit =
    R"(Split this paragraph into distinct sentences. Only respond as a JSON array. For example if given the text "This is one sentence. This is another sentence", respond with ["This is one sentence.", "This is another sentence."].)";

constexpr const char* kComplexityCheck =
    R"(Does this prompt have multiple subjects or objects? If a pronoun relates to a noun in the sentence then it is considered a single subject. Respond with only a Yes or No. Only respond as a JSON object. For example, { "response": "Yes" }.)";

constexpr const char* kComplexSplit =
    R"(Split this complex sentence into separate simple sentences made only of a single independent clause. Only respond as a JSON array. For example, given the prompt "Joe and John bought pencils and markers" it would give ["Joe bought pencils", "Joe bought markers", "John bought pencils", "John bought markers"].)";

constexpr const char* kTopicCheck =
    R"(Does the given prompt imply a {** TOPIC **}, whether it is in the past, present, or future? Respond with a Yes or a No. Only respond as a JSON object. For example, { "response": "Yes" }.)";

constexpr const char* kSvoExtract =
    R"(Analyze the sentence and identify all SVO phrases. Replace any pronouns (e.g. "he" or "she" or "they" or "I" or "you") with proper nouns. Respond with ONLY a JSON object with only three fields: subject, object, and action. For example, if I say "Ben is so happy - he bought a boat and is going sailing", you should reply with { "subject": "Ben", "object": "a boat", "action": "bought" })";

constexpr const char* kSubjectListParse =
    R"(You are given a list of subjects. Identify the subjects. ONLY respond as a JSON array. For example, [ "Bob", "Steve" ])";

constexpr const char* kObjectListParse =
    R"(You are given a list of objects. Identify the objects. ONLY respond as a JSON array. For example, [ "tape measure", "book" ])";

constexpr std::array<const char*, kPromptKindCount> kKindNames = {
    "multi_clause_check", "paragraph_split",    "complexity_check",
    "complex_split",      "topic_check",        "svo_extract",
    "subject_list_parse", "object_list_parse",
};

}  // namespace

const char* prompt_kind_name(PromptKind kind) {
    return kKindNames[static_cast<size_t>(kind)];
}

PromptCatalog PromptCatalog::builtin() {
    PromptCatalog c;
    c.templates_ = {kMultiClause,  kParagraphSplit,   kComplexityCheck,
                    kComplexSplit, kTopicCheck,       kSvoExtract,
                    kSubjectListParse, kObjectListParse};
    return c;
}

PromptCatalog PromptCatalog::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open prompt file: " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw std::runtime_error("prompt file is not a JSON object: " + path);
    PromptCatalog c;
    for (int i = 0; i < kPromptKindCount; ++i) {
        const char* key = kKindNames[i];
        auto it = j.find(key);
        if (it == j.end() || !it->is_string())
            throw std::runtime_error(std::string("prompt file missing key: ") +
                                     key);
        c.templates_[static_cast<size_t>(i)] = it->get<std::string>();
    }
    return c;
}

const std::string& PromptCatalog::template_text(PromptKind kind) const {
    return templates_[static_cast<size_t>(kind)];
}

Schema PromptCatalog::schema_of(PromptKind kind) {
    switch (kind) {
        case PromptKind::multi_clause_check:
        case PromptKind::complexity_check:
        case PromptKind::topic_check:
            return Schema::yes_no_object;
        case PromptKind::paragraph_split:
        case PromptKind::complex_split:
        case PromptKind::subject_list_parse:
        case PromptKind::object_list_parse:
            return Schema::string_array;
        case PromptKind::svo_extract:
            return Schema::svo_object;
    }
    return Schema::yes_no_object;
}

RenderedPrompt PromptCatalog::render(
    PromptKind kind, const std::optional<std::string>& topic) const {
    RenderedPrompt r;
    r.kind = kind;
    r.schema = schema_of(kind);
    r.text = template_text(kind);
    if (kind == PromptKind::topic_check) {
        if (!topic || topic->empty())
            throw std::invalid_argument("topic_check requires a topic");
        r.topic = topic;
        size_t pos = r.text.find(kTopicSlot);
        if (pos == std::string::npos)
            throw std::invalid_argument("topic_check template has no topic slot");
        r.text.replace(pos, std::string(kTopicSlot).size(), *topic);
    } else if (topic) {
        throw std::invalid_argument(
            std::string("prompt takes no topic: ") + prompt_kind_name(kind));
    }
    return r;
}

}  // namespace stbam
