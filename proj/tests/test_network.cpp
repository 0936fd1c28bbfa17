#include <doctest.h>

#include <stdexcept>

#include "topic_network.hpp"

using namespace stbam;

TEST_CASE("normalize_label") {
    CHECK(normalize_label("The Bike") == "bike");
    CHECK(normalize_label("a  Boat ") == "boat");
    CHECK(normalize_label("An Apple") == "apple");
    CHECK(normalize_label("  Tom  ") == "tom");
    CHECK(normalize_label("theater") == "theater");  // no article stripped
    CHECK(normalize_label("the") == "the");          // bare article survives
    CHECK(normalize_label("   ") == "");
    CHECK(normalize_label("Coral  Reef") == "coral reef");
}

TEST_CASE("upsert deduplicates by normalized label and merges roles") {
    TopicNetwork net("purchase");
    int a = net.upsert_container("Tom", Role::subject);
    int b = net.upsert_container("the bike", Role::object);
    CHECK(a == 1);
    CHECK(b == 2);
    CHECK(net.upsert_container("tom", Role::object) == 1);
    CHECK(net.upsert_container("The Bike", Role::subject) == 2);
    REQUIRE(net.containers().size() == 2);
    CHECK(net.containers()[0].label == "Tom");  // first-seen surface form
    CHECK(net.containers()[0].is_subject);
    CHECK(net.containers()[0].is_object);
    CHECK(net.containers()[1].label == "the bike");
    CHECK(net.containers()[1].is_subject);
    CHECK(net.containers()[1].is_object);
}

TEST_CASE("upsert rejects empty labels") {
    TopicNetwork net("purchase");
    CHECK_THROWS_AS(net.upsert_container("", Role::subject),
                    std::invalid_argument);
    CHECK_THROWS_AS(net.upsert_container("  ", Role::object),
                    std::invalid_argument);
}

TEST_CASE("links validate endpoints and keep duplicates") {
    TopicNetwork net("purchase");
    int tom = net.upsert_container("Tom", Role::subject);
    int bike = net.upsert_container("bike", Role::object);
    CHECK(net.add_link("bought", tom, bike, 0) == 1);
    CHECK(net.add_link("bought", tom, bike, 1) == 2);  // distinct provenance
    CHECK(net.links().size() == 2);
    CHECK_THROWS_AS(net.add_link("bought", tom, 99, 0), std::invalid_argument);
    CHECK_THROWS_AS(net.add_link("", tom, bike, 0), std::invalid_argument);
}

TEST_CASE("summary lists subjects, objects and actions") {
    TopicNetwork net("purchase");
    int tom = net.upsert_container("Tom", Role::subject);
    int bike = net.upsert_container("bike", Role::object);
    net.add_link("bought", tom, bike, 0);
    std::string s = net.summary();
    CHECK(s.find("Results:") != std::string::npos);
    CHECK(s.find("Subjects: [1, Tom]") != std::string::npos);
    CHECK(s.find("Objects: [2, bike]") != std::string::npos);
    CHECK(s.find("Actions: [1, bought, Tom, bike]") != std::string::npos);

    TopicNetwork empty("purchase");
    std::string e = empty.summary();
    CHECK(e.find("Subjects: --") != std::string::npos);
    CHECK(e.find("Actions: --") != std::string::npos);
}

TEST_CASE("prose rendering") {
    TopicNetwork net("purchase");
    int tom = net.upsert_container("Tom", Role::subject);
    int bike = net.upsert_container("bike", Role::object);
    net.add_link("bought", tom, bike, 0);
    std::string p = net.to_prose();
    CHECK(p.find("purchase") != std::string::npos);
    CHECK(p.find("Tom bought bike.") != std::string::npos);

    TopicNetwork empty("purchase");
    CHECK(empty.to_prose() == "No topic-related activity was modeled.\n");
}

TEST_CASE("serialize / deserialize round trip") {
    TopicNetwork net("purchase");
    int tom = net.upsert_container("Tom", Role::subject);
    int bike = net.upsert_container("the bike", Role::object);
    net.add_link("bought", tom, bike, 0);
    std::vector<ErrorRecord> errors{
        {Stage::object_parse, "some sentence", Cause::non_enumerable_element}};

    std::string once = serialize_model(net, errors);
    ParsedModel model = deserialize_model(once);
    CHECK(model.network.topic() == "purchase");
    REQUIRE(model.network.containers().size() == 2);
    CHECK(model.network.containers()[1].label == "the bike");
    REQUIRE(model.errors.size() == 1);
    CHECK(model.errors[0].stage == Stage::object_parse);
    CHECK(model.errors[0].cause == Cause::non_enumerable_element);
    CHECK(serialize_model(model.network, model.errors) == once);
}

TEST_CASE("deserialize names the violated invariant") {
    auto expect_reject = [](const std::string& text, const std::string& needle) {
        try {
            deserialize_model(text);
            FAIL("expected rejection for: ", text);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_reject("not json", "JSON object");
    expect_reject(R"({"topic":"t","containers":[],"links":[]})", "errors");
    expect_reject(
        R"({"topic":"t","containers":[{"id":2,"label":"x","roles":["subject"]}],"links":[],"errors":[]})",
        "dense");
    expect_reject(
        R"({"topic":"t","containers":[{"id":1,"label":"x","roles":["subject"]},{"id":2,"label":"X","roles":["object"]}],"links":[],"errors":[]})",
        "duplicates");
    expect_reject(
        R"({"topic":"t","containers":[{"id":1,"label":"x","roles":[]}],"links":[],"errors":[]})",
        "no roles");
    expect_reject(
        R"({"topic":"t","containers":[{"id":1,"label":"x","roles":["subject"]}],"links":[{"id":1,"action":"a","subject_id":1,"object_id":7}],"errors":[]})",
        "unknown container id");
    expect_reject(
        R"({"topic":"t","containers":[],"links":[],"errors":[{"stage":"nope","sentence":"s","cause":"malformed"}]})",
        "unknown stage");
}

TEST_CASE("stage and cause names round trip") {
    for (int i = 0; i < 8; ++i) {
        Stage s = static_cast<Stage>(i);
        CHECK(stage_from_name(stage_name(s)) == s);
    }
    for (int i = 0; i < 6; ++i) {
        Cause c = static_cast<Cause>(i);
        CHECK(cause_from_name(cause_name(c)) == c);
    }
}
