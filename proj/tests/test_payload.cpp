#include <doctest.h>

#include "payload.hpp"

using namespace stbam;

namespace {

Payload ok(std::string_view raw, Schema schema) {
    auto r = extract_payload(raw, schema);
    REQUIRE(std::holds_alternative<Payload>(r));
    return std::get<Payload>(r);
}

PayloadError err(std::string_view raw, Schema schema) {
    auto r = extract_payload(raw, schema);
    REQUIRE(std::holds_alternative<PayloadError>(r));
    return std::get<PayloadError>(r);
}

}  // namespace

TEST_CASE("yes/no object parses") {
    CHECK(ok(R"({ "response": "Yes" })", Schema::yes_no_object).yes);
    CHECK_FALSE(ok(R"({ "response": "No" })", Schema::yes_no_object).yes);
    CHECK(ok(R"({"response":"YES"})", Schema::yes_no_object).yes);
}

TEST_CASE("bare yes/no tokens are accepted") {
    CHECK(ok("Yes", Schema::yes_no_object).yes);
    CHECK(ok("  yes.  ", Schema::yes_no_object).yes);
    CHECK_FALSE(ok("No", Schema::yes_no_object).yes);
    CHECK(err("Maybe", Schema::yes_no_object) == PayloadError::malformed);
}

TEST_CASE("payload embedded in surrounding prose is found") {
    CHECK(ok("Sure! Here you go: { \"response\": \"Yes\" } Hope that helps.",
             Schema::yes_no_object)
              .yes);
    auto p = ok("```json\n[\"a\", \"b\"]\n```", Schema::string_array);
    CHECK(p.items == std::vector<std::string>{"a", "b"});
}

TEST_CASE("string array parses") {
    auto p = ok(R"(["one", "two", "three"])", Schema::string_array);
    CHECK(p.items.size() == 3);
    CHECK(ok("[]", Schema::string_array).items.empty());
}

TEST_CASE("string array with non-string elements is malformed") {
    CHECK(err(R"(["one", 2])", Schema::string_array) ==
          PayloadError::malformed);
}

TEST_CASE("svo object parses") {
    auto p = ok(R"({ "subject": "Ben", "object": "a boat", "action": "bought" })",
                Schema::svo_object);
    CHECK(p.svo.subject == "Ben");
    CHECK(p.svo.object == "a boat");
    CHECK(p.svo.action == "bought");
}

TEST_CASE("svo object missing a field is malformed") {
    CHECK(err(R"({ "subject": "Ben", "action": "bought" })",
              Schema::svo_object) == PayloadError::malformed);
}

TEST_CASE("wrong top-level shape is a schema mismatch") {
    CHECK(err(R"({ "response": "Yes" })", Schema::string_array) ==
          PayloadError::schema_mismatch);
    CHECK(err(R"(["a"])", Schema::yes_no_object) ==
          PayloadError::schema_mismatch);
    CHECK(err(R"(["a"])", Schema::svo_object) ==
          PayloadError::schema_mismatch);
}

TEST_CASE("prose without any JSON region is malformed") {
    CHECK(err("The provided text does not contain an enumerable list of "
              "items.",
              Schema::string_array) == PayloadError::malformed);
    CHECK(err("", Schema::string_array) == PayloadError::malformed);
}

TEST_CASE("braces inside string literals do not break region detection") {
    auto p = ok(R"(["a } b", "c"])", Schema::string_array);
    CHECK(p.items[0] == "a } b");
    auto q = ok("note } stray { \"response\": \"No\" }", Schema::yes_no_object);
    CHECK_FALSE(q.yes);
}

TEST_CASE("unbalanced region is malformed, never a crash") {
    CHECK(err(R"({ "response": "Yes" )", Schema::yes_no_object) ==
          PayloadError::malformed);
    CHECK(err(R"([ "a", "b" )", Schema::string_array) ==
          PayloadError::malformed);
}
