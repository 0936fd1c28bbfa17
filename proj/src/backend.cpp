#include "backend.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <httplib.h>
#include <json.hpp>

#include "prompt_catalog.hpp"

namespace stbam {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

bool contains_ci(const std::string& haystack, const std::string& needle) {
    return lower(haystack).find(lower(needle)) != std::string::npos;
}

std::string now_rfc3339() {
    auto t = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string yes_no(bool yes) {
    return std::string("{ \"response\": \"") + (yes ? "Yes" : "No") + "\" }";
}

std::vector<std::string> split_sentences(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        cur.push_back(c);
        if (c == '.' || c == '!' || c == '?') {
            // Swallow a closing quote so it stays with its sentence.
            if (i + 1 < text.size() && (text[i + 1] == '"' || text[i + 1] == '\'')) {
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

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::string strip_punct(std::string s) {
    while (!s.empty() && std::ispunct(static_cast<unsigned char>(s.back())))
        s.pop_back();
    return s;
}

bool looks_like_verb(const std::string& raw) {
    static const std::vector<std::string> verbs = {
        "bought", "buys",  "buy",   "purchased", "sold",  "sell", "rode",
        "drove",  "saw",   "built", "made",      "found", "ate",  "took",
        "gave",   "is",    "was",   "are",       "were",  "has",  "have",
        "had",    "went",  "felt",  "ran",       "likes", "like", "sailed",
        "soared", "wrote", "reads", "read",      "eats",  "eat",
    };
    std::string w = lower(strip_punct(raw));
    if (std::find(verbs.begin(), verbs.end(), w) != verbs.end()) return true;
    return w.size() > 4 && w.compare(w.size() - 2, 2, "ed") == 0;
}

std::string strip_leading_article(std::string s) {
    std::string l = lower(s);
    for (const char* art : {"the ", "an ", "a "}) {
        size_t n = std::strlen(art);
        if (l.size() > n && l.compare(0, n, art) == 0) return s.substr(n);
    }
    return s;
}

std::vector<std::string> split_list_phrase(const std::string& phrase) {
    std::vector<std::string> parts;
    std::string work = phrase;
    // Commas and " and " both separate items.
    std::string marker = " and ";
    size_t pos;
    while ((pos = work.find(marker)) != std::string::npos)
        work.replace(pos, marker.size(), ",");
    std::istringstream in(work);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(strip_leading_article(trim(strip_punct(item))));
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

std::string json_array(const std::vector<std::string>& items) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : items) j.push_back(s);
    return j.dump();
}

// Scripted answers, one per prompt family.

std::string scripted_multi_clause(const std::string& text) {
    return yes_no(split_sentences(text).size() > 1);
}

std::string scripted_paragraph_split(const std::string& text) {
    return json_array(split_sentences(text));
}

std::string scripted_complexity(const std::string& text) {
    return yes_no(lower(text).find(" and ") != std::string::npos);
}

std::string scripted_complex_split(const std::string& text) {
    // Handles the "<A> and <B> <verb> <rest>" shape; anything else is
    // returned unsplit.
    auto tokens = tokenize(trim(text));
    if (tokens.size() >= 4 && lower(tokens[1]) == "and") {
        std::string a = tokens[0];
        std::string b = tokens[2];
        std::string verb = tokens[3];
        std::string rest;
        for (size_t i = 4; i < tokens.size(); ++i) {
            if (!rest.empty()) rest += ' ';
            rest += tokens[i];
        }
        std::vector<std::string> objects = rest.empty()
                                               ? std::vector<std::string>{""}
                                               : split_list_phrase(rest);
        if (objects.empty()) objects.push_back("");
        std::vector<std::string> out;
        for (const std::string& subj : {a, b}) {
            for (const auto& obj : objects) {
                std::string s = subj + " " + verb;
                if (!obj.empty()) s += " " + obj;
                out.push_back(s);
            }
        }
        return json_array(out);
    }
    return json_array({trim(text)});
}

std::string scripted_topic(const std::string& topic, const std::string& text) {
    std::vector<std::string> cues = {topic};
    std::string t = lower(topic);
    if (t.find("purchase") != std::string::npos) {
        cues.insert(cues.end(), {"purchas", "bought", "buy", "sold", "sell"});
    } else if (t.find("travel") != std::string::npos) {
        cues.insert(cues.end(), {"travel", "trip", "journey", "sailed", "rode",
                                 "drove", "soared", "toured", "flew"});
    }
    for (const auto& cue : cues) {
        if (contains_ci(text, cue)) return yes_no(true);
    }
    return yes_no(false);
}

std::string scripted_svo(const std::string& text) {
    auto tokens = tokenize(trim(text));
    nlohmann::json j;
    if (tokens.size() < 2) {
        j["subject"] = tokens.empty() ? "it" : strip_punct(tokens[0]);
        j["object"] = "it";
        j["action"] = "is";
        return j.dump();
    }
    size_t verb_at = tokens.size();
    for (size_t i = 1; i < tokens.size(); ++i) {
        if (looks_like_verb(tokens[i])) {
            verb_at = i;
            break;
        }
    }
    if (verb_at >= tokens.size()) verb_at = 1;
    std::string subject, object;
    for (size_t i = 0; i < verb_at; ++i) {
        if (!subject.empty()) subject += ' ';
        subject += tokens[i];
    }
    for (size_t i = verb_at + 1; i < tokens.size(); ++i) {
        if (!object.empty()) object += ' ';
        object += tokens[i];
    }
    j["subject"] = trim(strip_punct(subject));
    j["object"] = object.empty() ? "it" : trim(strip_punct(object));
    j["action"] = strip_punct(tokens[verb_at]);
    return j.dump();
}

std::string scripted_enumerate(const std::string& phrase) {
    if (contains_ci(phrase, "the entire set")) {
        return "The provided text does not contain an enumerable list of "
               "items.";
    }
    auto parts = split_list_phrase(phrase);
    if (parts.empty()) parts.push_back(trim(phrase));
    return json_array(parts);
}

}  // namespace

const char* parse_outcome_name(ParseOutcome outcome) {
    switch (outcome) {
        case ParseOutcome::ok: return "ok";
        case ParseOutcome::malformed: return "malformed";
        case ParseOutcome::backend_failure: return "backend_failure";
    }
    return "unknown";
}

std::variant<std::string, ChatError> ScriptedBackend::send(
    const ChatRequest& req) {
    static const PromptCatalog catalog = PromptCatalog::builtin();
    const std::string& sys = req.system_prompt;
    const std::string& user = req.user_prompt;

    if (sys == catalog.template_text(PromptKind::multi_clause_check))
        return scripted_multi_clause(user);
    if (sys == catalog.template_text(PromptKind::paragraph_split))
        return scripted_paragraph_split(user);
    if (sys == catalog.template_text(PromptKind::complexity_check))
        return scripted_complexity(user);
    if (sys == catalog.template_text(PromptKind::complex_split))
        return scripted_complex_split(user);
    if (sys == catalog.template_text(PromptKind::svo_extract))
        return scripted_svo(user);
    if (sys == catalog.template_text(PromptKind::subject_list_parse) ||
        sys == catalog.template_text(PromptKind::object_list_parse))
        return scripted_enumerate(user);

    // Topic check carries the interpolated topic; recover it from the
    // template's fixed prefix and suffix.
    const std::string prefix = "Does the given prompt imply a ";
    const std::string suffix = ", whether it is in the past";
    if (sys.rfind(prefix, 0) == 0) {
        size_t end = sys.find(suffix);
        if (end != std::string::npos) {
            std::string topic = sys.substr(prefix.size(), end - prefix.size());
            return scripted_topic(topic, user);
        }
    }

    return ChatError{ChatErrorKind::backend_failure,
                     "scripted backend does not recognize this system prompt"};
}

ReplayBackend::ReplayBackend(const std::string& path, MissingPolicy policy)
    : policy_(policy) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open replay file: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() ||
            !j.contains("system_prompt") || !j["system_prompt"].is_string() ||
            !j.contains("user_prompt") || !j["user_prompt"].is_string() ||
            !j.contains("raw_response") || !j["raw_response"].is_string()) {
            throw std::runtime_error("bad replay record at " + path + ":" +
                                     std::to_string(line_no));
        }
        auto key = std::make_pair(j["system_prompt"].get<std::string>(),
                                  j["user_prompt"].get<std::string>());
        table_[key].responses.push_back(j["raw_response"].get<std::string>());
    }
}

std::variant<std::string, ChatError> ReplayBackend::send(
    const ChatRequest& req) {
    auto it = table_.find(std::make_pair(req.system_prompt, req.user_prompt));
    if (it == table_.end()) {
        if (policy_ == MissingPolicy::fallback_rule) return fallback_.send(req);
        return ChatError{ChatErrorKind::replay_miss,
                         "no recorded response for request; system prompt: \"" +
                             req.system_prompt + "\"; user prompt: \"" +
                             req.user_prompt + "\""};
    }
    Queue& q = it->second;
    size_t idx = std::min(q.cursor, q.responses.size() - 1);
    if (q.cursor < q.responses.size()) ++q.cursor;
    return q.responses[idx];
}

LiveBackend::LiveBackend(LiveConfig config) : config_(std::move(config)) {}

std::variant<std::string, ChatError> LiveBackend::send(const ChatRequest& req) {
    // Split endpoint into origin and request path.
    std::string origin = config_.endpoint;
    std::string path = "/v1/chat/completions";
    size_t scheme = origin.find("://");
    size_t slash = origin.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    if (slash != std::string::npos) {
        if (slash + 1 < origin.size()) path = origin.substr(slash);
        origin = origin.substr(0, slash);
    }

    httplib::Client client(origin);
    client.set_connection_timeout(0, config_.timeout_ms * 1000);
    client.set_read_timeout(config_.timeout_ms / 1000,
                            (config_.timeout_ms % 1000) * 1000);
    if (const char* key = std::getenv("STBAM_API_KEY")) {
        client.set_default_headers(
            {{"Authorization", std::string("Bearer ") + key}});
    }

    nlohmann::json body = {
        {"model", config_.model_name},
        {"temperature", config_.temperature},
        {"messages",
         {{{"role", "system"}, {"content", req.system_prompt}},
          {{"role", "user"}, {"content", req.user_prompt}}}},
    };

    auto res = client.Post(path, body.dump(), "application/json");
    if (!res) {
        return ChatError{ChatErrorKind::backend_failure,
                         "transport failure contacting " + config_.endpoint};
    }
    if (res->status < 200 || res->status >= 300) {
        return ChatError{ChatErrorKind::backend_failure,
                         "endpoint returned HTTP " +
                             std::to_string(res->status) + ": " + res->body};
    }
    nlohmann::json j = nlohmann::json::parse(res->body, nullptr, false);
    if (j.is_discarded()) {
        return ChatError{ChatErrorKind::backend_failure,
                         "endpoint returned non-JSON body"};
    }
    try {
        return j.at("choices").at(0).at("message").at("content")
            .get<std::string>();
    } catch (const std::exception&) {
        return ChatError{ChatErrorKind::backend_failure,
                         "endpoint response missing choices[0].message.content"};
    }
}

int TranscriptRecorder::record(const ChatRequest& req,
                               const std::string& raw_response,
                               ParseOutcome outcome) {
    ChatExchange e;
    e.seq = static_cast<int>(exchanges_.size()) + 1;
    e.timestamp = now_rfc3339();
    e.request = req;
    e.raw_response = raw_response;
    e.parse_outcome = outcome;
    exchanges_.push_back(std::move(e));
    return exchanges_.back().seq;
}

std::string transcript_to_jsonl(const std::vector<ChatExchange>& exchanges) {
    std::string out;
    for (const auto& e : exchanges) {
        nlohmann::ordered_json j;
        j["seq"] = e.seq;
        j["timestamp"] = e.timestamp;
        j["system_prompt"] = e.request.system_prompt;
        j["user_prompt"] = e.request.user_prompt;
        j["raw_response"] = e.raw_response;
        j["parse_outcome"] = parse_outcome_name(e.parse_outcome);
        out += j.dump();
        out += '\n';
    }
    return out;
}

void save_transcript(const std::vector<ChatExchange>& exchanges,
                     const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write transcript: " + path);
    out << transcript_to_jsonl(exchanges);
    if (!out) throw std::runtime_error("failed writing transcript: " + path);
}

}  // namespace stbam
