#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace stbam {

enum class Schema { yes_no_object, string_array, svo_object };

const char* schema_name(Schema schema);

struct SvoFields {
    std::string subject;
    std::string object;
    std::string action;
};

struct Payload {
    Schema schema = Schema::yes_no_object;
    bool yes = false;
    std::vector<std::string> items;
    SvoFields svo;
};

enum class PayloadError { malformed, schema_mismatch };

// Tolerant extraction: finds the first balanced {...} or [...] region in raw
// and parses it, ignoring surrounding prose. For yes_no_object a bare
// "yes"/"no" token (optionally with a trailing period) is also accepted.
std::variant<Payload, PayloadError> extract_payload(std::string_view raw,
                                                    Schema expected);

}  // namespace stbam
