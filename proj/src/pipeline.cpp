#include "pipeline.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace stbam {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> punctuation_split(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        cur.push_back(c);
        if (c == '.' || c == '!' || c == '?') {
            if (i + 1 < text.size() &&
                (text[i + 1] == '"' || text[i + 1] == '\'')) {
                cur.push_back(text[++i]);
            }
            std::string s = trim(cur);
            if (!s.empty()) out.push_back(s);
            cur.clear();
        }
    }
    std::string tail = trim(cur);
    if (!tail.empty()) out.push_back(tail);
    return out;
}

struct StageFailure {
    Cause cause = Cause::malformed;
};

class Session {
public:
    Session(Backend& backend, const PromptCatalog& catalog, std::string topic,
            int max_retries)
        : backend_(backend),
          catalog_(catalog),
          topic_(std::move(topic)),
          max_retries_(max_retries) {}

    std::variant<Payload, StageFailure> ask(PromptKind kind,
                                            const std::string& user) {
        RenderedPrompt prompt =
            kind == PromptKind::topic_check
                ? catalog_.render(kind, topic_)
                : catalog_.render(kind);
        ChatRequest req{prompt.text, user};
        PayloadError last = PayloadError::malformed;
        for (int attempt = 0; attempt <= max_retries_; ++attempt) {
            auto reply = backend_.send(req);
            if (std::holds_alternative<ChatError>(reply)) {
                const ChatError& err = std::get<ChatError>(reply);
                recorder_.record(req, err.message,
                                 ParseOutcome::backend_failure);
                return StageFailure{err.kind == ChatErrorKind::replay_miss
                                        ? Cause::replay_miss
                                        : Cause::backend_failure};
            }
            const std::string& raw = std::get<std::string>(reply);
            auto parsed = extract_payload(raw, prompt.schema);
            if (std::holds_alternative<Payload>(parsed)) {
                recorder_.record(req, raw, ParseOutcome::ok);
                return std::get<Payload>(parsed);
            }
            last = std::get<PayloadError>(parsed);
            recorder_.record(req, raw, ParseOutcome::malformed);
        }
        return StageFailure{last == PayloadError::schema_mismatch
                                ? Cause::schema_mismatch
                                : Cause::malformed};
    }

    std::vector<ChatExchange> take_transcript() { return recorder_.take(); }

private:
    Backend& backend_;
    const PromptCatalog& catalog_;
    std::string topic_;
    int max_retries_;
    TranscriptRecorder recorder_;
};

Cause enumeration_cause(Cause c) {
    if (c == Cause::malformed || c == Cause::schema_mismatch)
        return Cause::non_enumerable_element;
    return c;
}

}  // namespace

DocumentResult process_document(const std::string& raw_text,
                                const std::string& topic, Backend& backend,
                                const PromptCatalog& catalog,
                                const PipelineOptions& options) {
    std::string text = trim(raw_text);
    if (text.empty()) throw std::invalid_argument("document text is empty");
    if (trim(topic).empty()) throw std::invalid_argument("topic is empty");

    Session session(backend, catalog, topic, options.max_retries);
    DocumentResult result{TopicNetwork(topic), {}, {}, {}, false};
    const bool strict = options.mode == Mode::strict;

    auto fail = [&](Stage stage, const std::string& sentence, Cause cause) {
        result.errors.push_back({stage, sentence, cause});
        if (strict) result.halted_early = true;
    };

    bool multi = false;
    {
        auto r = session.ask(PromptKind::multi_clause_check, text);
        if (std::holds_alternative<Payload>(r)) {
            multi = std::get<Payload>(r).yes;
        } else {
            fail(Stage::multi_clause, text, std::get<StageFailure>(r).cause);
        }
    }

    std::vector<std::string> sentences;
    if (!result.halted_early) {
        if (multi) {
            auto r = session.ask(PromptKind::paragraph_split, text);
            if (std::holds_alternative<Payload>(r)) {
                for (const auto& s : std::get<Payload>(r).items) {
                    std::string t = trim(s);
                    if (!t.empty()) sentences.push_back(t);
                }
            } else {
                fail(Stage::paragraph_split, text,
                     std::get<StageFailure>(r).cause);
                if (!strict) sentences = punctuation_split(text);
            }
        } else {
            sentences.push_back(text);
        }
    }

    for (const auto& sentence : sentences) {
        if (result.halted_early) break;

        // Work list of simple units; entries produced by a complex split
        // are marked and never re-checked for complexity (depth one).
        std::vector<std::pair<std::string, bool>> units{{sentence, false}};
        for (size_t u = 0; u < units.size(); ++u) {
            if (result.halted_early) break;
            const std::string unit = units[u].first;
            const bool from_split = units[u].second;

            if (!from_split) {
                bool complex_sentence = false;
                auto r = session.ask(PromptKind::complexity_check, unit);
                if (std::holds_alternative<Payload>(r)) {
                    complex_sentence = std::get<Payload>(r).yes;
                } else {
                    fail(Stage::complexity, unit,
                         std::get<StageFailure>(r).cause);
                    if (strict) break;
                }
                if (complex_sentence) {
                    auto rs = session.ask(PromptKind::complex_split, unit);
                    if (std::holds_alternative<Payload>(rs)) {
                        bool any = false;
                        for (const auto& part : std::get<Payload>(rs).items) {
                            std::string t = trim(part);
                            if (!t.empty()) {
                                units.emplace_back(t, true);
                                any = true;
                            }
                        }
                        if (any) continue;  // original replaced by its parts
                    } else {
                        fail(Stage::complex_split, unit,
                             std::get<StageFailure>(rs).cause);
                        if (strict) break;
                        // lenient: keep the sentence unsplit
                    }
                }
            }

            auto rt = session.ask(PromptKind::topic_check, unit);
            if (!std::holds_alternative<Payload>(rt)) {
                fail(Stage::topic_check, unit,
                     std::get<StageFailure>(rt).cause);
                continue;
            }
            if (!std::get<Payload>(rt).yes) continue;

            auto rv = session.ask(PromptKind::svo_extract, unit);
            if (!std::holds_alternative<Payload>(rv)) {
                fail(Stage::svo_extract, unit,
                     std::get<StageFailure>(rv).cause);
                continue;
            }
            SvoFields svo = std::get<Payload>(rv).svo;
            if (trim(svo.subject).empty() || trim(svo.object).empty() ||
                trim(svo.action).empty()) {
                fail(Stage::svo_extract, unit, Cause::empty_field);
                continue;
            }

            auto rsub =
                session.ask(PromptKind::subject_list_parse, svo.subject);
            if (!std::holds_alternative<Payload>(rsub)) {
                fail(Stage::subject_parse, unit,
                     enumeration_cause(std::get<StageFailure>(rsub).cause));
                continue;
            }
            auto robj = session.ask(PromptKind::object_list_parse, svo.object);
            if (!std::holds_alternative<Payload>(robj)) {
                fail(Stage::object_parse, unit,
                     enumeration_cause(std::get<StageFailure>(robj).cause));
                continue;
            }

            // Both enumerations succeeded: commit the whole triple at once.
            int triple_index = static_cast<int>(result.triples.size());
            result.triples.push_back(
                {unit, svo.subject, svo.object, trim(svo.action)});
            std::vector<int> subject_ids, object_ids;
            for (const auto& label : std::get<Payload>(rsub).items) {
                if (normalize_label(label).empty()) continue;
                subject_ids.push_back(
                    result.network.upsert_container(trim(label), Role::subject));
            }
            for (const auto& label : std::get<Payload>(robj).items) {
                if (normalize_label(label).empty()) continue;
                object_ids.push_back(
                    result.network.upsert_container(trim(label), Role::object));
            }
            for (int sid : subject_ids) {
                for (int oid : object_ids) {
                    result.network.add_link(trim(svo.action), sid, oid,
                                            triple_index);
                }
            }
        }
    }

    result.transcript = session.take_transcript();
    return result;
}

}  // namespace stbam
