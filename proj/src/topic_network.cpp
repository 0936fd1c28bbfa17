#include "topic_network.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stbam {

namespace {

constexpr std::array<const char*, 8> kStageNames = {
    "multi_clause", "paragraph_split", "complexity",    "complex_split",
    "topic_check",  "svo_extract",     "subject_parse", "object_parse",
};

constexpr std::array<const char*, 6> kCauseNames = {
    "malformed",       "schema_mismatch", "non_enumerable_element",
    "backend_failure", "replay_miss",     "empty_field",
};

}  // namespace

const char* stage_name(Stage stage) {
    return kStageNames[static_cast<size_t>(stage)];
}

const char* cause_name(Cause cause) {
    return kCauseNames[static_cast<size_t>(cause)];
}

Stage stage_from_name(std::string_view name) {
    for (size_t i = 0; i < kStageNames.size(); ++i)
        if (name == kStageNames[i]) return static_cast<Stage>(i);
    throw std::invalid_argument("unknown stage: " + std::string(name));
}

Cause cause_from_name(std::string_view name) {
    for (size_t i = 0; i < kCauseNames.size(); ++i)
        if (name == kCauseNames[i]) return static_cast<Cause>(i);
    throw std::invalid_argument("unknown cause: " + std::string(name));
}

std::string normalize_label(std::string_view label) {
    std::string collapsed;
    bool in_space = true;
    for (char c : label) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!in_space) collapsed.push_back(' ');
            in_space = true;
        } else {
            collapsed.push_back(
                static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            in_space = false;
        }
    }
    while (!collapsed.empty() && collapsed.back() == ' ') collapsed.pop_back();
    for (const char* art : {"the ", "an ", "a "}) {
        size_t n = std::string_view(art).size();
        if (collapsed.size() > n && collapsed.compare(0, n, art) == 0)
            return collapsed.substr(n);
    }
    return collapsed;
}

TopicNetwork::TopicNetwork(std::string topic) : topic_(std::move(topic)) {}

int TopicNetwork::upsert_container(const std::string& label, Role role) {
    std::string norm = normalize_label(label);
    if (norm.empty())
        throw std::invalid_argument("container label is empty: \"" + label +
                                    "\"");
    for (auto& c : containers_) {
        if (c.normalized_label == norm) {
            (role == Role::subject ? c.is_subject : c.is_object) = true;
            return c.id;
        }
    }
    Container c;
    c.id = static_cast<int>(containers_.size()) + 1;
    c.label = label;
    c.normalized_label = std::move(norm);
    (role == Role::subject ? c.is_subject : c.is_object) = true;
    containers_.push_back(std::move(c));
    return containers_.back().id;
}

const Container& TopicNetwork::container(int id) const {
    if (id < 1 || id > static_cast<int>(containers_.size()))
        throw std::invalid_argument("unknown container id: " +
                                    std::to_string(id));
    return containers_[static_cast<size_t>(id) - 1];
}

int TopicNetwork::add_link(const std::string& action, int subject_id,
                           int object_id, int triple_index) {
    if (action.empty()) throw std::invalid_argument("link action is empty");
    container(subject_id);
    container(object_id);
    Link l;
    l.id = static_cast<int>(links_.size()) + 1;
    l.action = action;
    l.subject_id = subject_id;
    l.object_id = object_id;
    l.triple_index = triple_index;
    links_.push_back(std::move(l));
    return links_.back().id;
}

std::string TopicNetwork::summary() const {
    std::ostringstream out;
    out << "Results:\n";
    auto list_role = [&](const char* title, bool Container::*flag) {
        out << title << ": ";
        bool any = false;
        for (const auto& c : containers_) {
            if (!(c.*flag)) continue;
            if (any) out << ", ";
            out << "[" << c.id << ", " << c.label << "]";
            any = true;
        }
        if (!any) out << "--";
        out << "\n";
    };
    list_role("Subjects", &Container::is_subject);
    list_role("Objects", &Container::is_object);
    out << "Actions: ";
    if (links_.empty()) {
        out << "--";
    } else {
        for (size_t i = 0; i < links_.size(); ++i) {
            if (i) out << ", ";
            const Link& l = links_[i];
            out << "[" << l.id << ", " << l.action << ", "
                << container(l.subject_id).label << ", "
                << container(l.object_id).label << "]";
        }
    }
    out << "\n";
    return out.str();
}

std::string TopicNetwork::to_prose() const {
    if (links_.empty() && containers_.empty())
        return "No topic-related activity was modeled.\n";
    std::ostringstream out;
    out << "Topic \"" << topic_ << "\": " << containers_.size()
        << (containers_.size() == 1 ? " container" : " containers") << " (";
    for (size_t i = 0; i < containers_.size(); ++i) {
        if (i) out << ", ";
        out << containers_[i].label;
    }
    out << "), " << links_.size()
        << (links_.size() == 1 ? " link" : " links") << ".\n";
    for (const auto& l : links_) {
        out << container(l.subject_id).label << " " << l.action << " "
            << container(l.object_id).label << ".\n";
    }
    return out.str();
}

std::string serialize_model(const TopicNetwork& network,
                            const std::vector<ErrorRecord>& errors) {
    nlohmann::ordered_json j;
    j["topic"] = network.topic();
    j["containers"] = nlohmann::ordered_json::array();
    for (const auto& c : network.containers()) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["label"] = c.label;
        auto roles = nlohmann::ordered_json::array();
        if (c.is_subject) roles.push_back("subject");
        if (c.is_object) roles.push_back("object");
        jc["roles"] = roles;
        j["containers"].push_back(jc);
    }
    j["links"] = nlohmann::ordered_json::array();
    for (const auto& l : network.links()) {
        nlohmann::ordered_json jl;
        jl["id"] = l.id;
        jl["action"] = l.action;
        jl["subject_id"] = l.subject_id;
        jl["object_id"] = l.object_id;
        j["links"].push_back(jl);
    }
    j["errors"] = nlohmann::ordered_json::array();
    for (const auto& e : errors) {
        nlohmann::ordered_json je;
        je["stage"] = stage_name(e.stage);
        je["sentence"] = e.sentence;
        je["cause"] = cause_name(e.cause);
        j["errors"].push_back(je);
    }
    return j.dump(2) + "\n";
}

ParsedModel deserialize_model(const std::string& json_text) {
    try {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw std::runtime_error("model file is not a JSON object");
    for (const char* key : {"topic", "containers", "links", "errors"}) {
        if (!j.contains(key))
            throw std::runtime_error(std::string("model file missing field: ") +
                                     key);
    }
    if (!j["topic"].is_string())
        throw std::runtime_error("model topic must be a string");

    ParsedModel model{TopicNetwork(j["topic"].get<std::string>()), {}};

    int expected_id = 1;
    for (const auto& jc : j["containers"]) {
        Container c;
        c.id = jc.at("id").get<int>();
        if (c.id != expected_id)
            throw std::runtime_error(
                "container ids must be dense and ordered; expected " +
                std::to_string(expected_id) + ", found " +
                std::to_string(c.id));
        c.label = jc.at("label").get<std::string>();
        c.normalized_label = normalize_label(c.label);
        if (c.normalized_label.empty())
            throw std::runtime_error("container " + std::to_string(c.id) +
                                     " has an empty label");
        for (const auto& prior : model.network.containers_) {
            if (prior.normalized_label == c.normalized_label)
                throw std::runtime_error("container " + std::to_string(c.id) +
                                         " duplicates container " +
                                         std::to_string(prior.id));
        }
        for (const auto& r : jc.at("roles")) {
            std::string role = r.get<std::string>();
            if (role == "subject") c.is_subject = true;
            else if (role == "object") c.is_object = true;
            else
                throw std::runtime_error("container " + std::to_string(c.id) +
                                         " has unknown role: " + role);
        }
        if (!c.is_subject && !c.is_object)
            throw std::runtime_error("container " + std::to_string(c.id) +
                                     " has no roles");
        model.network.containers_.push_back(std::move(c));
        ++expected_id;
    }

    int n_containers = static_cast<int>(model.network.containers_.size());
    expected_id = 1;
    for (const auto& jl : j["links"]) {
        Link l;
        l.id = jl.at("id").get<int>();
        if (l.id != expected_id)
            throw std::runtime_error(
                "link ids must be dense and ordered; expected " +
                std::to_string(expected_id) + ", found " + std::to_string(l.id));
        l.action = jl.at("action").get<std::string>();
        if (l.action.empty())
            throw std::runtime_error("link " + std::to_string(l.id) +
                                     " has an empty action");
        l.subject_id = jl.at("subject_id").get<int>();
        l.object_id = jl.at("object_id").get<int>();
        if (l.subject_id < 1 || l.subject_id > n_containers ||
            l.object_id < 1 || l.object_id > n_containers)
            throw std::runtime_error("link " + std::to_string(l.id) +
                                     " references an unknown container id");
        model.network.links_.push_back(std::move(l));
        ++expected_id;
    }

    for (const auto& je : j["errors"]) {
        ErrorRecord e;
        e.stage = stage_from_name(je.at("stage").get<std::string>());
        e.sentence = je.at("sentence").get<std::string>();
        e.cause = cause_from_name(je.at("cause").get<std::string>());
        model.errors.push_back(std::move(e));
    }
    return model;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("model file malformed: ") +
                                 e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

}  // namespace stbam
