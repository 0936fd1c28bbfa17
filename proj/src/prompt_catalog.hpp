#pragma once

#include <array>
#include <optional>
#include <string>

#include "payload.hpp"

namespace stbam {

enum class PromptKind {
    multi_clause_check,
    paragraph_split,
    complexity_check,
    complex_split,
    topic_check,
    svo_extract,
    subject_list_parse,
    object_list_parse,
};

inline constexpr int kPromptKindCount = 8;

const char* prompt_kind_name(PromptKind kind);

struct RenderedPrompt {
    PromptKind kind = PromptKind::multi_clause_check;
    std::optional<std::string> topic;
    std::string text;
    Schema schema = Schema::yes_no_object;
};

class PromptCatalog {
public:
    static PromptCatalog builtin();
    // Throws std::runtime_error on missing file / missing key / bad JSON.
    static PromptCatalog from_file(const std::string& path);

    // Throws std::invalid_argument when a topic is required but missing,
    // or supplied to a prompt that takes none.
    RenderedPrompt render(PromptKind kind,
                          const std::optional<std::string>& topic =
                              std::nullopt) const;

    const std::string& template_text(PromptKind kind) const;

    static Schema schema_of(PromptKind kind);

private:
    std::array<std::string, kPromptKindCount> templates_;
};

}  // namespace stbam
