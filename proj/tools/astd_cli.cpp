#include "astd/cli/evaluate.hpp"
#include "astd/cli/run.hpp"
#include "astd/cli/synth.hpp"
#include "astd/common/errors.hpp"
#include "astd/pipeline/config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>

namespace {

using namespace astd;

struct PipelineFlags {
    std::string input;
    std::string config;
    std::optional<std::string> activity_filter;
    std::optional<std::string> date_format;
    std::optional<int> window_size;
    std::optional<int> sliding_size;
    std::optional<std::string> window_type;

    void attach(CLI::App* app) {
        app->add_option("--input", input, "logon CSV (id,date,user,pc,activity)")->required();
        app->add_option("--config", config, "pipeline configuration JSON");
        app->add_option("--activity-filter", activity_filter, "keep only rows with this activity");
        app->add_option("--date-format", date_format, "strftime-style date format");
        app->add_option("--window-size", window_size, "override window_parameters.window_size");
        app->add_option("--sliding-size", sliding_size, "override window_parameters.sliding_size");
        app->add_option("--window-type", window_type, "override window_parameters.type (day|week|instance)");
    }

    pipeline::PipelineConfig load() const {
        auto cfg = config.empty() ? pipeline::PipelineConfig{} : pipeline::load_config(config);
        if (activity_filter) {
            cfg.activity_filter = *activity_filter;
        }
        if (date_format) {
            cfg.date_format = *date_format;
        }
        if (window_size) {
            cfg.window.window_size = *window_size;
        }
        if (sliding_size) {
            cfg.window.sliding_size = *sliding_size;
        }
        if (window_type) {
            cfg.window.type = windowing::parse_window_type(*window_type);
        }
        cfg.validate();
        for (const auto& w : cfg.warnings()) {
            std::cerr << "warning: " << w << '\n';
        }
        return cfg;
    }
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    return out;
}

int cmd_run(const PipelineFlags& flags, const std::string& alerts_path, const std::string& scores_path) {
    const auto cfg = flags.load();
    cli::IngestStats ingest;
    const auto records = cli::read_log_file(flags.input, cfg.activity_filter, ingest);
    std::optional<std::ofstream> alerts_file;
    std::optional<std::ofstream> scores_file;
    cli::RunOutputs outputs;
    if (!alerts_path.empty()) {
        alerts_file = open_out(alerts_path);
        outputs.alerts = &*alerts_file;
    } else {
        outputs.alerts = &std::cout;
    }
    if (!scores_path.empty()) {
        scores_file = open_out(scores_path);
        outputs.scores = &*scores_file;
    }
    auto summary = cli::run_records(records, cfg, outputs);
    summary.ingest = ingest;
    if (summary.stats.skipped > 0) {
        std::cerr << "warning: " << summary.stats.skipped << " event(s) skipped (unparseable date)\n";
    }
    (alerts_path.empty() ? std::cerr : std::cout) << cli::summary_json(summary).dump() << '\n';
    return 0;
}

int cmd_evaluate(const std::string& scores_path, const std::string& labels_path, const std::string& field,
                 bool with_roc) {
    const auto rows = cli::read_scores_file(scores_path);
    const auto labels = cli::read_labels_file(labels_path);
    if (!field.empty()) {
        std::cout << cli::report_json(cli::evaluate(rows, labels, field), with_roc).dump(2) << '\n';
        return 0;
    }
    std::set<std::string> fields{cli::kVoteField};
    for (const auto& row : rows) {
        for (const auto& [name, raw] : row.raw) {
            fields.insert(name);
        }
    }
    nlohmann::json out;
    for (const auto& f : fields) {
        out[f] = cli::report_json(cli::evaluate(rows, labels, f), with_roc);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_synth(const cli::SynthParams& params, const std::string& events_path, const std::string& labels_path) {
    const auto synth = cli::synthesize(params);
    if (events_path.empty()) {
        cli::write_log(std::cout, synth.events);
    } else {
        auto out = open_out(events_path);
        cli::write_log(out, synth.events);
    }
    if (!labels_path.empty()) {
        auto out = open_out(labels_path);
        cli::write_labels(out, synth.labels);
    }
    return 0;
}

int cmd_dump_state(const PipelineFlags& flags, std::int64_t limit) {
    const auto cfg = flags.load();
    cli::IngestStats ingest;
    const auto records = cli::read_log_file(flags.input, cfg.activity_filter, ingest);
    pipeline::Runtime runtime(cfg);
    std::int64_t n = 0;
    for (const auto& r : records) {
        if (limit >= 0 && n++ >= limit) {
            break;
        }
        runtime.process_event(cli::to_event(r));
    }
    std::cout << runtime.dump_state();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Streaming time-of-day anomaly detection over logon logs"};
    app.require_subcommand(1);

    PipelineFlags run_flags;
    std::string alerts_out;
    std::string scores_out;
    auto* run = app.add_subcommand("run", "score a logon CSV and emit alerts");
    run_flags.attach(run);
    run->add_option("--alerts-out", alerts_out, "alert JSONL path (default stdout)");
    run->add_option("--scores-out", scores_out, "per-event score JSONL path");

    std::string eval_scores;
    std::string eval_labels;
    std::string eval_field;
    bool with_roc = false;
    auto* evaluate = app.add_subcommand("evaluate", "DR, ROC and AUC of a scores file against labels");
    evaluate->add_option("--input", eval_scores, "scores JSONL written by run")->required();
    evaluate->add_option("--labels", eval_labels, "labels CSV (id,label)")->required();
    evaluate->add_option("--field", eval_field, "votes or a detector name (default: all)");
    evaluate->add_flag("--roc", with_roc, "include ROC points");

    cli::SynthParams synth_params;
    std::string synth_out;
    std::string synth_labels;
    auto* synth = app.add_subcommand("synth", "generate a labeled synthetic logon stream");
    synth->add_option("--users", synth_params.users, "number of users")->capture_default_str();
    synth->add_option("--weeks", synth_params.weeks, "number of weeks")->capture_default_str();
    synth->add_option("--rate", synth_params.anomaly_rate, "anomaly rate")->capture_default_str();
    synth->add_option("--seed", synth_params.seed, "random seed")->capture_default_str();
    synth->add_option("--profile", synth_params.profile, "stable or shifting")->capture_default_str();
    synth->add_option("--output", synth_out, "events CSV path (default stdout)");
    synth->add_option("--labels", synth_labels, "labels CSV path");

    PipelineFlags dump_flags;
    std::int64_t dump_limit = -1;
    auto* dump = app.add_subcommand("dump-state", "print the specification state after a stream");
    dump_flags.attach(dump);
    dump->add_option("--limit", dump_limit, "stop after this many events");

    CLI11_PARSE(app, argc, argv);
    try {
        if (run->parsed()) {
            return cmd_run(run_flags, alerts_out, scores_out);
        }
        if (evaluate->parsed()) {
            return cmd_evaluate(eval_scores, eval_labels, eval_field, with_roc);
        }
        if (synth->parsed()) {
            return cmd_synth(synth_params, synth_out, synth_labels);
        }
        return cmd_dump_state(dump_flags, dump_limit);
    } catch (const astd::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
