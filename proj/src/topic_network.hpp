#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stbam {

enum class Role { subject, object };

struct Container {
    int id = 0;
    std::string label;             // first-seen surface form, verbatim
    std::string normalized_label;  // dedup key
    bool is_subject = false;
    bool is_object = false;
};

struct Link {
    int id = 0;
    std::string action;
    int subject_id = 0;
    int object_id = 0;
    int triple_index = 0;  // provenance: which extracted triple produced it
};

enum class Stage {
    multi_clause,
    paragraph_split,
    complexity,
    complex_split,
    topic_check,
    svo_extract,
    subject_parse,
    object_parse,
};

enum class Cause {
    malformed,
    schema_mismatch,
    non_enumerable_element,
    backend_failure,
    replay_miss,
    empty_field,
};

const char* stage_name(Stage stage);
const char* cause_name(Cause cause);
Stage stage_from_name(std::string_view name);  // throws std::invalid_argument
Cause cause_from_name(std::string_view name);  // throws std::invalid_argument

struct ErrorRecord {
    Stage stage = Stage::multi_clause;
    std::string sentence;
    Cause cause = Cause::malformed;
};

// Casefold, strip one leading article (a/an/the), collapse whitespace.
std::string normalize_label(std::string_view label);

struct ParsedModel;
ParsedModel deserialize_model(const std::string& json_text);

class TopicNetwork {
public:
    explicit TopicNetwork(std::string topic);

    const std::string& topic() const { return topic_; }
    const std::vector<Container>& containers() const { return containers_; }
    const std::vector<Link>& links() const { return links_; }

    // Returns the container id; creates the container on first mention.
    // Throws std::invalid_argument on an empty/whitespace label.
    int upsert_container(const std::string& label, Role role);

    // Throws std::invalid_argument on unknown ids or empty action.
    int add_link(const std::string& action, int subject_id, int object_id,
                 int triple_index);

    const Container& container(int id) const;  // throws on unknown id

    // Compact inventory block in the "Results:" style.
    std::string summary() const;

    // One declarative sentence per link, with a header naming the topic
    // and the container inventory.
    std::string to_prose() const;

private:
    friend ParsedModel deserialize_model(const std::string& json_text);

    std::string topic_;
    std::vector<Container> containers_;
    std::vector<Link> links_;
};

std::string serialize_model(const TopicNetwork& network,
                            const std::vector<ErrorRecord>& errors);

struct ParsedModel {
    TopicNetwork network;
    std::vector<ErrorRecord> errors;
};

// Validates ids (dense, in order), labels and link endpoints; throws
// std::runtime_error naming the violated invariant and offending id.
ParsedModel deserialize_model(const std::string& json_text);

}  // namespace stbam
