#pragma once

#include <string>
#include <vector>

#include "backend.hpp"
#include "prompt_catalog.hpp"
#include "topic_network.hpp"

namespace stbam {

enum class Mode { strict, lenient };

struct SvoTriple {
    std::string sentence;
    std::string subject_phrase;
    std::string object_phrase;
    std::string action;
};

struct DocumentResult {
    TopicNetwork network;
    std::vector<SvoTriple> triples;
    std::vector<ErrorRecord> errors;
    std::vector<ChatExchange> transcript;
    bool halted_early = false;
};

struct PipelineOptions {
    Mode mode = Mode::lenient;
    int max_retries = 2;  // extra attempts after a malformed response
};

// Runs the full decomposition state machine over one document.
// Throws std::invalid_argument on an empty topic or empty document.
DocumentResult process_document(const std::string& text,
                                const std::string& topic, Backend& backend,
                                const PromptCatalog& catalog,
                                const PipelineOptions& options = {});

}  // namespace stbam
