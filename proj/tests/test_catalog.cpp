#include <doctest.h>

#include <stdexcept>

#include <fstream>
#include <map>
#include <sstream>

#include "prompt_catalog.hpp"

using namespace stbam;

namespace {

std::string fixtures_path(const std::string& name) {
    return std::string(STBAM_FIXTURES_DIR) + "/" + name;
}

// The golden file holds "[kind]" headers followed by the prompt text,
// with blank lines between blocks.
std::map<std::string, std::string> load_golden() {
    std::ifstream in(fixtures_path("prompts_golden.txt"));
    REQUIRE(in);
    std::map<std::string, std::string> out;
    std::string line, key, text;
    auto flush = [&] {
        if (!key.empty()) out[key] = text;
        key.clear();
        text.clear();
    };
    while (std::getline(in, line)) {
        if (line.size() > 2 && line.front() == '[' && line.back() == ']') {
            flush();
            key = line.substr(1, line.size() - 2);
        } else if (line.empty()) {
            continue;
        } else {
            if (!text.empty()) text += "\n";
            text += line;
        }
    }
    flush();
    return out;
}

constexpr PromptKind kAllKinds[] = {
    PromptKind::multi_clause_check, PromptKind::paragraph_split,
    PromptKind::complexity_check,   PromptKind::complex_split,
    PromptKind::topic_check,        PromptKind::svo_extract,
    PromptKind::subject_list_parse, PromptKind::object_list_parse,
};

}  // namespace

TEST_CASE("schema map") {
    CHECK(PromptCatalog::schema_of(PromptKind::multi_clause_check) ==
          Schema::yes_no_object);
    CHECK(PromptCatalog::schema_of(PromptKind::complexity_check) ==
          Schema::yes_no_object);
    CHECK(PromptCatalog::schema_of(PromptKind::topic_check) ==
          Schema::yes_no_object);
    CHECK(PromptCatalog::schema_of(PromptKind::paragraph_split) ==
          Schema::string_array);
    CHECK(PromptCatalog::schema_of(PromptKind::complex_split) ==
          Schema::string_array);
    CHECK(PromptCatalog::schema_of(PromptKind::subject_list_parse) ==
          Schema::string_array);
    CHECK(PromptCatalog::schema_of(PromptKind::object_list_parse) ==
          Schema::string_array);
    CHECK(PromptCatalog::schema_of(PromptKind::svo_extract) ==
          Schema::svo_object);
}

TEST_CASE("topic interpolation") {
    auto catalog = PromptCatalog::builtin();
    auto r = catalog.render(PromptKind::topic_check, std::string("purchase"));
    CHECK(r.text.find("imply a purchase,") != std::string::npos);
    CHECK(r.text.find("{** TOPIC **}") == std::string::npos);
    CHECK(r.topic == std::string("purchase"));
}

TEST_CASE("topic handling errors") {
    auto catalog = PromptCatalog::builtin();
    CHECK_THROWS_AS(catalog.render(PromptKind::topic_check),
                    std::invalid_argument);
    CHECK_THROWS_AS(catalog.render(PromptKind::topic_check, std::string("")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        catalog.render(PromptKind::svo_extract, std::string("purchase")),
        std::invalid_argument);
}

TEST_CASE("prompt data file matches the built-in set byte for byte") {
    auto builtin = PromptCatalog::builtin();
    auto from_file = PromptCatalog::from_file(fixtures_path("prompts.json"));
    for (PromptKind kind : kAllKinds) {
        CAPTURE(prompt_kind_name(kind));
        CHECK(builtin.template_text(kind) == from_file.template_text(kind));
    }
}

TEST_CASE("golden prompt file matches rendered prompts byte for byte") {
    auto catalog = PromptCatalog::builtin();
    auto golden = load_golden();
    REQUIRE(golden.size() == 8);
    for (PromptKind kind : kAllKinds) {
        CAPTURE(prompt_kind_name(kind));
        std::string rendered =
            kind == PromptKind::topic_check
                ? catalog.render(kind, std::string("purchase")).text
                : catalog.render(kind).text;
        REQUIRE(golden.count(prompt_kind_name(kind)) == 1);
        CHECK(rendered == golden.at(prompt_kind_name(kind)));
    }
}

TEST_CASE("from_file rejects missing keys") {
    std::string path = "/tmp/stbam_bad_prompts.json";
    {
        std::ofstream out(path);
        out << R"({"multi_clause_check": "x"})";
    }
    CHECK_THROWS_AS(PromptCatalog::from_file(path), std::runtime_error);
    CHECK_THROWS_AS(PromptCatalog::from_file("/nonexistent/prompts.json"),
                    std::runtime_error);
}
