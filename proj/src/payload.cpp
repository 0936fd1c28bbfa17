#include "payload.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace stbam {

namespace {

std::string trimmed(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lowered(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

// First balanced {...} or [...] region, string-literal aware.
bool find_balanced_region(std::string_view raw, std::string& out) {
    size_t start = raw.find_first_of("{[");
    while (start != std::string_view::npos) {
        std::vector<char> stack;
        bool in_string = false;
        for (size_t i = start; i < raw.size(); ++i) {
            char c = raw[i];
            if (in_string) {
                if (c == '\\') {
                    ++i;
                } else if (c == '"') {
                    in_string = false;
                }
                continue;
            }
            if (c == '"') {
                in_string = true;
            } else if (c == '{' || c == '[') {
                stack.push_back(c);
            } else if (c == '}' || c == ']') {
                if (stack.empty()) break;
                char open = stack.back();
                if ((c == '}' && open != '{') || (c == ']' && open != '[')) break;
                stack.pop_back();
                if (stack.empty()) {
                    out = std::string(raw.substr(start, i - start + 1));
                    return true;
                }
            }
        }
        start = raw.find_first_of("{[", start + 1);
    }
    return false;
}

std::variant<Payload, PayloadError> parse_yes_no(const nlohmann::json& j) {
    if (j.is_array()) return PayloadError::schema_mismatch;
    if (!j.is_object()) return PayloadError::malformed;
    auto it = j.find("response");
    if (it == j.end() || !it->is_string()) return PayloadError::malformed;
    std::string v = lowered(trimmed(it->get<std::string>()));
    if (v != "yes" && v != "no") return PayloadError::malformed;
    Payload p;
    p.schema = Schema::yes_no_object;
    p.yes = (v == "yes");
    return p;
}

std::variant<Payload, PayloadError> parse_string_array(const nlohmann::json& j) {
    if (j.is_object()) return PayloadError::schema_mismatch;
    if (!j.is_array()) return PayloadError::malformed;
    Payload p;
    p.schema = Schema::string_array;
    for (const auto& e : j) {
        if (!e.is_string()) return PayloadError::malformed;
        p.items.push_back(e.get<std::string>());
    }
    return p;
}

std::variant<Payload, PayloadError> parse_svo(const nlohmann::json& j) {
    if (j.is_array()) return PayloadError::schema_mismatch;
    if (!j.is_object()) return PayloadError::malformed;
    Payload p;
    p.schema = Schema::svo_object;
    for (const char* key : {"subject", "object", "action"}) {
        auto it = j.find(key);
        if (it == j.end() || !it->is_string()) return PayloadError::malformed;
    }
    p.svo.subject = j.at("subject").get<std::string>();
    p.svo.object = j.at("object").get<std::string>();
    p.svo.action = j.at("action").get<std::string>();
    return p;
}

}  // namespace

const char* schema_name(Schema schema) {
    switch (schema) {
        case Schema::yes_no_object: return "yes_no_object";
        case Schema::string_array: return "string_array";
        case Schema::svo_object: return "svo_object";
    }
    return "unknown";
}

std::variant<Payload, PayloadError> extract_payload(std::string_view raw,
                                                    Schema expected) {
    if (expected == Schema::yes_no_object) {
        std::string bare = lowered(trimmed(raw));
        if (!bare.empty() && bare.back() == '.') bare.pop_back();
        if (bare == "yes" || bare == "no") {
            Payload p;
            p.schema = Schema::yes_no_object;
            p.yes = (bare == "yes");
            return p;
        }
    }

    std::string region;
    if (!find_balanced_region(raw, region)) return PayloadError::malformed;

    nlohmann::json j = nlohmann::json::parse(region, nullptr, false);
    if (j.is_discarded()) return PayloadError::malformed;

    switch (expected) {
        case Schema::yes_no_object: return parse_yes_no(j);
        case Schema::string_array: return parse_string_array(j);
        case Schema::svo_object: return parse_svo(j);
    }
    return PayloadError::malformed;
}

}  // namespace stbam
