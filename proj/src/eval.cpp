#include "eval.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stbam {

namespace {

const char* kHeader =
    "Example,Got Expected Results,Errors Thrown,# of Subjects Found,"
    "# of Objects Found,# of Subjects Used in Actions,"
    "# of Objects used in Actions,# of Actions";

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

void check_invariants(const MetricsRow& r, const std::string& where) {
    auto bad = [&](const std::string& what) {
        throw std::runtime_error("metrics invariant violated (" + what +
                                 ") in " + where);
    };
    if (r.subjects_found < 0 || r.objects_found < 0 ||
        r.subjects_in_actions < 0 || r.objects_in_actions < 0 || r.actions < 0)
        bad("negative count");
    if (r.subjects_in_actions > r.subjects_found)
        bad("subjects_in_actions > subjects_found");
    if (r.objects_in_actions > r.objects_found)
        bad("objects_in_actions > objects_found");
    if (r.subjects_in_actions > r.actions) bad("subjects_in_actions > actions");
    if (r.objects_in_actions > r.actions) bad("objects_in_actions > actions");
}

}  // namespace

std::string stem(std::string_view word) {
    std::string w = lower(std::string(word));
    for (std::string_view suf : {"ing", "ed", "es", "s"}) {
        if (w.size() > suf.size() + 1 &&
            w.compare(w.size() - suf.size(), suf.size(), suf) == 0) {
            return w.substr(0, w.size() - suf.size());
        }
    }
    return w;
}

std::vector<GoldAnnotation> load_gold(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gold file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gold(buf.str());
}

std::vector<GoldAnnotation> parse_gold(const std::string& json_text) {
    const std::string path = "gold annotations";
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw std::runtime_error("gold file is not a JSON array");
    std::vector<GoldAnnotation> out;
    for (const auto& e : j) {
        GoldAnnotation g;
        try {
            g.test_id = e.at("test_id").get<std::string>();
            g.label = e.at("label").get<std::string>();
            g.topic = e.at("topic").get<std::string>();
            for (const auto& a : e.at("qualifying_actions"))
                g.qualifying_actions.push_back(a.get<std::string>());
            if (e.contains("notes")) g.notes = e["notes"].get<std::string>();
        } catch (const nlohmann::json::exception& ex) {
            throw std::runtime_error("bad gold entry in " + path + ": " +
                                     ex.what());
        }
        out.push_back(std::move(g));
    }
    return out;
}

bool judge_expected(const TopicNetwork& network, const GoldAnnotation& gold) {
    std::set<std::string> gold_stems;
    for (const auto& g : gold.qualifying_actions) gold_stems.insert(stem(g));
    for (const auto& l : network.links()) {
        if (gold_stems.count(stem(l.action))) return true;
    }
    return false;
}

MetricsRow compute_metrics(const TopicNetwork& network,
                           const std::vector<ErrorRecord>& errors,
                           const GoldAnnotation& gold) {
    if (network.topic() != gold.topic)
        throw std::invalid_argument("network topic \"" + network.topic() +
                                    "\" does not match gold topic \"" +
                                    gold.topic + "\"");
    MetricsRow r;
    r.test_id = gold.test_id;
    r.label = gold.label;
    r.errors_thrown = !errors.empty();
    r.got_expected = judge_expected(network, gold);
    for (const auto& c : network.containers()) {
        if (c.is_subject) ++r.subjects_found;
        if (c.is_object) ++r.objects_found;
    }
    std::set<int> used_subjects, used_objects;
    for (const auto& l : network.links()) {
        used_subjects.insert(l.subject_id);
        used_objects.insert(l.object_id);
    }
    r.subjects_in_actions = static_cast<int>(used_subjects.size());
    r.objects_in_actions = static_cast<int>(used_objects.size());
    r.actions = static_cast<int>(network.links().size());
    check_invariants(r, gold.label);
    return r;
}

AggregateSummary aggregate(const std::vector<MetricsRow>& rows) {
    if (rows.empty())
        throw std::invalid_argument("cannot aggregate an empty row set");
    AggregateSummary s;
    s.n_tests = static_cast<int>(rows.size());
    int full = 0, partial = 0;
    // No inequality check here: externally produced reference tables may
    // contain internally inconsistent rows, and aggregation over them must
    // still work. Rows computed from a network are checked at computation.
    for (const auto& r : rows) {
        if (r.got_expected) ++full;
        if (r.got_expected || r.subjects_found > 0 || r.objects_found > 0 ||
            r.subjects_in_actions > 0 || r.objects_in_actions > 0 ||
            r.actions > 0)
            ++partial;
    }
    s.full_success_rate = static_cast<double>(full) / s.n_tests;
    s.partial_success_rate = static_cast<double>(partial) / s.n_tests;
    return s;
}

std::string emit_table(const std::vector<MetricsRow>& rows) {
    std::ostringstream out;
    out << kHeader << "\n";
    for (const auto& r : rows) {
        out << r.label << "," << (r.got_expected ? "Yes" : "No") << ","
            << (r.errors_thrown ? "Yes" : "No") << "," << r.subjects_found
            << "," << r.objects_found << "," << r.subjects_in_actions << ","
            << r.objects_in_actions << "," << r.actions << "\n";
    }
    return out.str();
}

std::vector<MetricsRow> parse_table(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    int line_no = 0;
    std::vector<MetricsRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        if (line_no == 1) {
            if (trim(line) != kHeader)
                throw std::runtime_error("unexpected table header at line 1");
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(trim(cell));
        if (cells.size() != 8)
            throw std::runtime_error("expected 8 columns at line " +
                                     std::to_string(line_no));
        auto yes_no = [&](const std::string& v) {
            std::string l = lower(v);
            if (l == "yes") return true;
            if (l == "no") return false;
            throw std::runtime_error("expected Yes/No at line " +
                                     std::to_string(line_no));
        };
        auto num = [&](const std::string& v) {
            try {
                return std::stoi(v);
            } catch (const std::exception&) {
                throw std::runtime_error("expected a count at line " +
                                         std::to_string(line_no));
            }
        };
        MetricsRow r;
        r.label = cells[0];
        r.test_id = cells[0];
        r.got_expected = yes_no(cells[1]);
        r.errors_thrown = yes_no(cells[2]);
        r.subjects_found = num(cells[3]);
        r.objects_found = num(cells[4]);
        r.subjects_in_actions = num(cells[5]);
        r.objects_in_actions = num(cells[6]);
        r.actions = num(cells[7]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<Divergence> compare_tables(
    const std::vector<MetricsRow>& computed,
    const std::vector<MetricsRow>& expected) {
    std::vector<Divergence> out;
    for (const auto& c : computed) {
        const MetricsRow* e = nullptr;
        for (const auto& row : expected) {
            if (row.label == c.label) {
                e = &row;
                break;
            }
        }
        if (!e) continue;
        Divergence d;
        d.label = c.label;
        auto note_bool = [&](const char* col, bool got, bool want) {
            if (got != want)
                d.notes.push_back(std::string(col) + ": computed " +
                                  (got ? "Yes" : "No") + ", expected " +
                                  (want ? "Yes" : "No"));
        };
        auto note_int = [&](const char* col, int got, int want) {
            if (got != want)
                d.notes.push_back(std::string(col) + ": computed " +
                                  std::to_string(got) + ", expected " +
                                  std::to_string(want));
        };
        note_bool("Got Expected Results", c.got_expected, e->got_expected);
        note_bool("Errors Thrown", c.errors_thrown, e->errors_thrown);
        note_int("# of Subjects Found", c.subjects_found, e->subjects_found);
        note_int("# of Objects Found", c.objects_found, e->objects_found);
        note_int("# of Subjects Used in Actions", c.subjects_in_actions,
                 e->subjects_in_actions);
        note_int("# of Objects used in Actions", c.objects_in_actions,
                 e->objects_in_actions);
        note_int("# of Actions", c.actions, e->actions);
        if (!d.notes.empty()) out.push_back(std::move(d));
    }
    return out;
}

std::string aggregate_to_json(const AggregateSummary& summary) {
    nlohmann::ordered_json j;
    j["n_tests"] = summary.n_tests;
    j["full_success_rate"] = summary.full_success_rate;
    j["partial_success_rate"] = summary.partial_success_rate;
    return j.dump(2) + "\n";
}

}  // namespace stbam
