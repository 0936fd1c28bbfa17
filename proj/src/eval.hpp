#pragma once

#include <string>
#include <vector>

#include "topic_network.hpp"

namespace stbam {

struct GoldAnnotation {
    std::string test_id;
    std::string label;
    std::string topic;
    std::vector<std::string> qualifying_actions;
    std::string notes;
};

// Throws std::runtime_error on missing file or bad shape.
std::vector<GoldAnnotation> load_gold(const std::string& path);

// Same as load_gold but over in-memory JSON text.
std::vector<GoldAnnotation> parse_gold(const std::string& json_text);

struct MetricsRow {
    std::string test_id;
    std::string label;
    bool got_expected = false;
    bool errors_thrown = false;
    int subjects_found = 0;
    int objects_found = 0;
    int subjects_in_actions = 0;
    int objects_in_actions = 0;
    int actions = 0;
};

// Casefold then strip one of the suffixes ing/ed/es/s (longest first) when
// enough stem remains.
std::string stem(std::string_view word);

bool judge_expected(const TopicNetwork& network, const GoldAnnotation& gold);

// Throws std::invalid_argument when the network topic differs from the
// gold topic.
MetricsRow compute_metrics(const TopicNetwork& network,
                           const std::vector<ErrorRecord>& errors,
                           const GoldAnnotation& gold);

struct AggregateSummary {
    int n_tests = 0;
    double full_success_rate = 0.0;
    double partial_success_rate = 0.0;
};

// Throws std::invalid_argument on an empty row set.
AggregateSummary aggregate(const std::vector<MetricsRow>& rows);

std::string emit_table(const std::vector<MetricsRow>& rows);

// Parses a table produced by emit_table (or the canonical reference CSV).
// Throws std::runtime_error naming the offending line.
std::vector<MetricsRow> parse_table(const std::string& csv);

struct Divergence {
    std::string label;
    std::vector<std::string> notes;  // one per differing column
};

// Rows matched by label; only rows present in both tables are compared.
std::vector<Divergence> compare_tables(const std::vector<MetricsRow>& computed,
                                       const std::vector<MetricsRow>& expected);

std::string aggregate_to_json(const AggregateSummary& summary);

}  // namespace stbam
