#include "astd/cli/evaluate.hpp"

#include "astd/cli/ingest.hpp"
#include "astd/common/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

namespace astd::cli {

namespace {

double parse_raw(const nlohmann::json& j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    const auto text = j.get<std::string>();
    if (text == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (text == "-inf") {
        return -std::numeric_limits<double>::infinity();
    }
    return std::numeric_limits<double>::quiet_NaN();
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    return in;
}

} // namespace

std::vector<ScoredRow> read_scores(std::istream& in) {
    std::vector<ScoredRow> rows;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        try {
            const auto j = nlohmann::json::parse(line);
            ScoredRow row;
            row.event_id = j.at("eventId").get<std::string>();
            row.votes = j.at("votes").get<int>();
            row.cast = j.at("cast").get<int>();
            row.alert = j.at("alert").get<bool>();
            for (const auto& [name, d] : j.at("detectors").items()) {
                row.raw[name] = parse_raw(d.at("raw"));
                row.binary[name] = d.at("binary").get<int>();
            }
            rows.push_back(std::move(row));
        } catch (const nlohmann::json::exception& e) {
            throw InputError("scores line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return rows;
}

std::vector<ScoredRow> read_scores_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_scores(in);
}

std::map<std::string, int> read_labels(std::istream& in) {
    std::map<std::string, int> labels;
    std::string line;
    if (!std::getline(in, line)) {
        return labels;
    }
    std::int64_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 2 || (fields[1] != "0" && fields[1] != "1")) {
            throw InputError("labels line " + std::to_string(line_no) + ": expected id,0|1");
        }
        labels[fields[0]] = fields[1] == "1" ? 1 : 0;
    }
    return labels;
}

std::map<std::string, int> read_labels_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_labels(in);
}

std::vector<RocPoint> roc_curve(std::vector<std::pair<double, int>> scored) {
    std::int64_t pos = 0;
    for (const auto& [s, label] : scored) {
        pos += label;
    }
    const auto neg = static_cast<std::int64_t>(scored.size()) - pos;
    const auto rate = [](std::int64_t hit, std::int64_t total) {
        return total == 0 ? 0.0 : static_cast<double>(hit) / static_cast<double>(total);
    };
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<RocPoint> roc{{0.0, 0.0}};
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    for (std::size_t i = 0; i < scored.size();) {
        const double t = scored[i].first;
        while (i < scored.size() && scored[i].first == t) {
            (scored[i].second == 1 ? tp : fp) += 1;
            ++i;
        }
        roc.push_back({rate(fp, neg), rate(tp, pos)});
    }
    if (roc.back() != RocPoint{1.0, 1.0}) {
        roc.push_back({1.0, 1.0});
    }
    return roc;
}

double trapezoid_auc(const std::vector<RocPoint>& roc) {
    double area = 0.0;
    for (std::size_t i = 1; i < roc.size(); ++i) {
        area += (roc[i].fpr - roc[i - 1].fpr) * (roc[i].tpr + roc[i - 1].tpr) / 2.0;
    }
    return area;
}

double detection_rate(std::int64_t tp, std::int64_t fn) {
    return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
}

EvalReport evaluate(const std::vector<ScoredRow>& rows, const std::map<std::string, int>& labels,
                    const std::string& field) {
    std::vector<std::string> unlabeled;
    for (const auto& row : rows) {
        if (!labels.contains(row.event_id)) {
            unlabeled.push_back(row.event_id);
        }
    }
    if (!unlabeled.empty()) {
        std::string msg = "unlabeled events:";
        for (const auto& id : unlabeled) {
            msg += " " + id;
        }
        throw InputError(msg);
    }

    EvalReport report;
    report.field = field;
    const bool ensemble = field == kVoteField;
    std::vector<std::pair<double, int>> scored;
    for (const auto& row : rows) {
        if (row.cast == 0) {
            ++report.warmup;
            continue;
        }
        const int label = labels.at(row.event_id);
        double score = -std::numeric_limits<double>::infinity();
        bool decision = false;
        if (ensemble) {
            score = row.votes;
            decision = row.alert;
        } else if (const auto it = row.raw.find(field); it != row.raw.end()) {
            score = it->second;
            decision = row.binary.at(field) == 1;
        }
        if (std::isnan(score)) {
            score = -std::numeric_limits<double>::infinity();
        }
        report.alert_count += decision ? 1 : 0;
        (label == 1 ? (decision ? report.tp : report.fn) : (decision ? report.fp : report.tn)) += 1;
        scored.emplace_back(score, label);
    }
    report.evaluated = static_cast<std::int64_t>(scored.size());
    report.dr = detection_rate(report.tp, report.fn);
    report.fpr = report.fp + report.tn == 0
                     ? 0.0
                     : static_cast<double>(report.fp) / static_cast<double>(report.fp + report.tn);
    report.roc = roc_curve(std::move(scored));
    report.auc = trapezoid_auc(report.roc);
    return report;
}

nlohmann::json report_json(const EvalReport& report, bool with_roc) {
    nlohmann::json j{{"field", report.field},
                     {"DR", report.dr},
                     {"FPR", report.fpr},
                     {"auc", report.auc},
                     {"alert_count", report.alert_count},
                     {"TP", report.tp},
                     {"FP", report.fp},
                     {"TN", report.tn},
                     {"FN", report.fn},
                     {"evaluated", report.evaluated},
                     {"warmup", report.warmup}};
    if (with_roc) {
        auto points = nlohmann::json::array();
        for (const auto& p : report.roc) {
            points.push_back({p.fpr, p.tpr});
        }
        j["roc_points"] = std::move(points);
    }
    return j;
}

} // namespace astd::cli
