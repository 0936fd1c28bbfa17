// Command-line front end for the STBAM extraction engine. Talks to the
// engine exclusively through the C API in stbam.h.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stbam.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitBackend = 4;
constexpr int kExitValidation = 5;

int exit_code_for_status(int status) {
    switch (status) {
        case STBAM_OK: return kExitOk;
        case STBAM_ERR_INVALID: return kExitUsage;
        case STBAM_ERR_IO: return kExitIo;
        case STBAM_ERR_BACKEND: return kExitBackend;
        default: return kExitValidation;
    }
}

struct CString {
    char* ptr = nullptr;
    ~CString() { stbam_string_free(ptr); }
    explicit operator bool() const { return ptr != nullptr; }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

struct ExtractOptions {
    std::string topic;
    std::string input;
    std::string backend = "scripted";
    std::string endpoint;
    std::string model_name;
    std::string mode = "lenient";
    std::string replay_file;
    std::string missing_policy = "error";
    std::string out_path;
    std::string transcript_path;
    std::string prompt_file;
    int max_retries = 2;
};

void add_extract_flags(CLI::App* cmd, ExtractOptions& opt, bool replay_only) {
    cmd->add_option("--topic", opt.topic, "Key topic to model")->required();
    cmd->add_option("--input", opt.input, "Input text file")->required();
    if (!replay_only) {
        cmd->add_option("--backend", opt.backend,
                        "Backend: live, replay or scripted")
            ->check(CLI::IsMember({"live", "replay", "scripted"}));
        cmd->add_option("--endpoint", opt.endpoint,
                        "Chat-completions endpoint (live backend)")
            ->envname("STBAM_ENDPOINT");
        cmd->add_option("--model-name", opt.model_name,
                        "Model name (live backend)")
            ->envname("STBAM_MODEL");
    }
    cmd->add_option("--mode", opt.mode, "strict or lenient")
        ->check(CLI::IsMember({"strict", "lenient"}));
    auto* replay_opt = cmd->add_option("--replay-file", opt.replay_file,
                                       "Recorded transcript to replay");
    if (replay_only) replay_opt->required();
    cmd->add_option("--missing-policy", opt.missing_policy,
                    "Replay miss handling: error or fallback")
        ->check(CLI::IsMember({"error", "fallback"}));
    cmd->add_option("--out", opt.out_path, "Write the model JSON here");
    cmd->add_option("--transcript", opt.transcript_path,
                    "Write the exchange transcript (JSONL) here");
    cmd->add_option("--prompts", opt.prompt_file,
                    "Prompt template file overriding the built-in set");
    cmd->add_option("--max-retries", opt.max_retries,
                    "Retries after a malformed response")
        ->check(CLI::NonNegativeNumber);
}

int run_extract(const ExtractOptions& opt) {
    std::string text;
    if (!read_file(opt.input, text)) {
        std::cerr << "error: cannot read input file: " << opt.input << "\n";
        return kExitIo;
    }

    stbam_backend* backend = nullptr;
    if (opt.backend == "replay") {
        if (opt.replay_file.empty()) {
            std::cerr << "error: --replay-file is required with the replay "
                         "backend\n";
            return kExitUsage;
        }
        backend = stbam_backend_open_replay(
            opt.replay_file.c_str(), opt.missing_policy == "fallback" ? 1 : 0);
    } else if (opt.backend == "live") {
        if (opt.endpoint.empty() || opt.model_name.empty()) {
            std::cerr << "error: the live backend needs --endpoint and "
                         "--model-name (or STBAM_ENDPOINT / STBAM_MODEL)\n";
            return kExitUsage;
        }
        backend = stbam_backend_open_live(opt.endpoint.c_str(),
                                          opt.model_name.c_str(), 0.0, 0);
    } else {
        backend = stbam_backend_open_scripted();
    }
    if (!backend) {
        std::cerr << "error: " << stbam_last_error() << "\n";
        return exit_code_for_status(stbam_last_status());
    }
    std::unique_ptr<stbam_backend, decltype(&stbam_backend_close)> backend_guard(
        backend, &stbam_backend_close);

    stbam_result* result = stbam_process_document(
        backend, text.c_str(), opt.topic.c_str(),
        opt.mode == "strict" ? 1 : 0, opt.max_retries,
        opt.prompt_file.empty() ? nullptr : opt.prompt_file.c_str());
    if (!result) {
        std::cerr << "error: " << stbam_last_error() << "\n";
        return exit_code_for_status(stbam_last_status());
    }
    std::unique_ptr<stbam_result, decltype(&stbam_result_close)> result_guard(
        result, &stbam_result_close);

    CString model{stbam_result_model_json(result)};
    CString transcript{stbam_result_transcript_jsonl(result)};
    CString summary{stbam_result_summary(result)};
    if (!model || !transcript || !summary) {
        std::cerr << "error: " << stbam_last_error() << "\n";
        return exit_code_for_status(stbam_last_status());
    }

    if (!opt.out_path.empty() && !write_file(opt.out_path, model.str())) {
        std::cerr << "error: cannot write model file: " << opt.out_path << "\n";
        return kExitIo;
    }
    if (!opt.transcript_path.empty() &&
        !write_file(opt.transcript_path, transcript.str())) {
        std::cerr << "error: cannot write transcript: " << opt.transcript_path
                  << "\n";
        return kExitIo;
    }

    std::cout << summary.str();

    int error_count = stbam_result_error_count(result);
    bool backend_trouble = false;
    if (error_count > 0) {
        nlohmann::json j = nlohmann::json::parse(model.str(), nullptr, false);
        if (j.is_object() && j.contains("errors")) {
            for (const auto& e : j["errors"]) {
                std::string cause = e.value("cause", "");
                std::cerr << "pipeline error: stage=" << e.value("stage", "?")
                          << " cause=" << cause << " sentence=\""
                          << e.value("sentence", "") << "\"\n";
                if (cause == "backend_failure" || cause == "replay_miss")
                    backend_trouble = true;
            }
        }
    }
    if (stbam_result_halted_early(result)) {
        std::cerr << "halted early after " << error_count << " error(s)\n";
        return backend_trouble ? kExitBackend : kExitValidation;
    }
    return kExitOk;
}

int run_eval(const std::string& models_dir, const std::string& gold_path,
             const std::string& table_path, const std::string& expected_path,
             const std::string& csv_out_path) {
    std::string csv_text;

    if (!table_path.empty()) {
        if (!read_file(table_path, csv_text)) {
            std::cerr << "error: cannot read table: " << table_path << "\n";
            return kExitIo;
        }
    } else {
        if (models_dir.empty() || gold_path.empty()) {
            std::cerr << "error: eval needs either --table or both --models "
                         "and --gold\n";
            return kExitUsage;
        }
        std::string gold_json;
        if (!read_file(gold_path, gold_json)) {
            std::cerr << "error: cannot read gold file: " << gold_path << "\n";
            return kExitIo;
        }
        std::vector<std::string> model_texts;
        std::vector<std::string> test_ids;
        std::error_code ec;
        std::vector<std::filesystem::path> paths;
        for (const auto& entry :
             std::filesystem::directory_iterator(models_dir, ec)) {
            if (entry.path().extension() == ".json")
                paths.push_back(entry.path());
        }
        if (ec) {
            std::cerr << "error: cannot read models directory: " << models_dir
                      << "\n";
            return kExitIo;
        }
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths) {
            std::string text;
            if (!read_file(p.string(), text)) {
                std::cerr << "error: cannot read model file: " << p << "\n";
                return kExitIo;
            }
            model_texts.push_back(std::move(text));
            test_ids.push_back(p.stem().string());
        }
        if (model_texts.empty()) {
            std::cerr << "error: no model files (*.json) in " << models_dir
                      << "\n";
            return kExitValidation;
        }
        std::vector<const char*> model_ptrs, id_ptrs;
        for (size_t i = 0; i < model_texts.size(); ++i) {
            model_ptrs.push_back(model_texts[i].c_str());
            id_ptrs.push_back(test_ids[i].c_str());
        }
        CString csv, aggregate;
        int rc = stbam_eval(model_ptrs.data(), id_ptrs.data(),
                            model_ptrs.size(), gold_json.c_str(), &csv.ptr,
                            &aggregate.ptr);
        if (rc != STBAM_OK) {
            std::cerr << "error: " << stbam_last_error() << "\n";
            return exit_code_for_status(rc);
        }
        csv_text = csv.str();
    }

    CString aggregate;
    int rc = stbam_table_aggregate(csv_text.c_str(), &aggregate.ptr);
    if (rc != STBAM_OK) {
        std::cerr << "error: " << stbam_last_error() << "\n";
        return exit_code_for_status(rc);
    }

    if (!csv_out_path.empty() && !write_file(csv_out_path, csv_text)) {
        std::cerr << "error: cannot write CSV: " << csv_out_path << "\n";
        return kExitIo;
    }

    std::cout << aggregate.str();

    if (!expected_path.empty()) {
        std::string expected_csv;
        if (!read_file(expected_path, expected_csv)) {
            std::cerr << "error: cannot read expected table: " << expected_path
                      << "\n";
            return kExitIo;
        }
        CString notes;
        rc = stbam_table_divergences(csv_text.c_str(), expected_csv.c_str(),
                                     &notes.ptr);
        if (rc != STBAM_OK) {
            std::cerr << "error: " << stbam_last_error() << "\n";
            return exit_code_for_status(rc);
        }
        std::istringstream lines(notes.str());
        std::string line;
        while (std::getline(lines, line)) {
            if (!line.empty()) std::cout << "divergence: " << line << "\n";
        }
    }
    return kExitOk;
}

int run_report(const std::string& model_path, const std::string& out_path) {
    std::string model_json;
    if (!read_file(model_path, model_json)) {
        std::cerr << "error: cannot read model file: " << model_path << "\n";
        return kExitIo;
    }
    CString prose{stbam_model_prose(model_json.c_str())};
    if (!prose) {
        std::cerr << "error: " << stbam_last_error() << "\n";
        return exit_code_for_status(stbam_last_status());
    }
    if (!out_path.empty()) {
        if (!write_file(out_path, prose.str())) {
            std::cerr << "error: cannot write report: " << out_path << "\n";
            return kExitIo;
        }
    } else {
        std::cout << prose.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"STBAM topic-network extraction"};
    app.require_subcommand(1);

    ExtractOptions extract_opt;
    CLI::App* extract = app.add_subcommand(
        "extract", "Decompose a document into a topic network");
    add_extract_flags(extract, extract_opt, false);

    ExtractOptions replay_opt;
    replay_opt.backend = "replay";
    CLI::App* replay = app.add_subcommand(
        "replay", "Re-run a document against a recorded transcript");
    add_extract_flags(replay, replay_opt, true);

    std::string models_dir, gold_path, table_path, expected_path, csv_out;
    CLI::App* eval =
        app.add_subcommand("eval", "Score model files against gold "
                                   "annotations, or aggregate a table");
    eval->add_option("--models", models_dir,
                     "Directory of model JSON files (named <test_id>.json)");
    eval->add_option("--gold", gold_path, "Gold annotations (JSON)");
    eval->add_option("--table", table_path,
                     "Aggregate an existing metrics table instead");
    eval->add_option("--expected", expected_path,
                     "Reference table to diff against");
    eval->add_option("--csv", csv_out, "Write the metrics table here");

    std::string report_model, report_out;
    CLI::App* report =
        app.add_subcommand("report", "Render a model file as prose");
    report->add_option("--model", report_model, "Model JSON file")->required();
    report->add_option("--out", report_out, "Write the prose here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (extract->parsed()) return run_extract(extract_opt);
    if (replay->parsed()) return run_extract(replay_opt);
    if (eval->parsed())
        return run_eval(models_dir, gold_path, table_path, expected_path,
                        csv_out);
    if (report->parsed()) return run_report(report_model, report_out);
    return kExitUsage;
}
