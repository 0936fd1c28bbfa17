#pragma once

#include <deque>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace stbam {

enum class MissingPolicy { error, fallback_rule };

struct ChatRequest {
    std::string system_prompt;
    std::string user_prompt;
};

enum class ParseOutcome { ok, malformed, backend_failure };

const char* parse_outcome_name(ParseOutcome outcome);

struct ChatExchange {
    int seq = 0;
    std::string timestamp;
    ChatRequest request;
    std::string raw_response;
    ParseOutcome parse_outcome = ParseOutcome::ok;
};

enum class ChatErrorKind { backend_failure, replay_miss };

struct ChatError {
    ChatErrorKind kind = ChatErrorKind::backend_failure;
    std::string message;
};

class Backend {
public:
    virtual ~Backend() = default;
    virtual std::variant<std::string, ChatError> send(const ChatRequest& req) = 0;
};

// Deterministic rule-based stand-in for a language model. Good enough to
// drive the pipeline end to end offline; not a linguistic authority.
class ScriptedBackend : public Backend {
public:
    std::variant<std::string, ChatError> send(const ChatRequest& req) override;
};

// Replays a recorded transcript. Lookup key is the exact
// (system_prompt, user_prompt) byte pair. Duplicate keys form a FIFO queue:
// each lookup consumes the next recorded response, and an exhausted queue
// repeats its last entry.
class ReplayBackend : public Backend {
public:
    // Throws std::runtime_error naming the line number on a bad fixture line.
    ReplayBackend(const std::string& path, MissingPolicy policy);

    std::variant<std::string, ChatError> send(const ChatRequest& req) override;

private:
    struct Queue {
        std::vector<std::string> responses;
        size_t cursor = 0;
    };
    std::map<std::pair<std::string, std::string>, Queue> table_;
    MissingPolicy policy_;
    ScriptedBackend fallback_;
};

struct LiveConfig {
    std::string endpoint;  // e.g. http://localhost:8000
    std::string model_name;
    double temperature = 0.0;
    int timeout_ms = 30000;
};

// OpenAI-style chat-completions client over HTTP.
class LiveBackend : public Backend {
public:
    explicit LiveBackend(LiveConfig config);
    std::variant<std::string, ChatError> send(const ChatRequest& req) override;

private:
    LiveConfig config_;
};

class TranscriptRecorder {
public:
    int record(const ChatRequest& req, const std::string& raw_response,
               ParseOutcome outcome);
    const std::vector<ChatExchange>& exchanges() const { return exchanges_; }
    std::vector<ChatExchange> take() { return std::move(exchanges_); }

private:
    std::vector<ChatExchange> exchanges_;
};

std::string transcript_to_jsonl(const std::vector<ChatExchange>& exchanges);

// Throws std::runtime_error on I/O failure.
void save_transcript(const std::vector<ChatExchange>& exchanges,
                     const std::string& path);

}  // namespace stbam
