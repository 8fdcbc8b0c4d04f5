#pragma once

#include <json.hpp>

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace astd::cli {

inline constexpr const char* kVoteField = "votes";

// One line of a scores file.
struct ScoredRow {
    std::string event_id;
    int votes = 0;
    int cast = 0;
    bool alert = false;
    std::map<std::string, double> raw;
    std::map<std::string, int> binary;
};

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;

    friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

struct EvalReport {
    std::string field;
    double dr = 0.0;
    double fpr = 0.0;
    std::vector<RocPoint> roc; // sorted by FPR, (0,0) first, (1,1) last
    double auc = 0.0;
    std::int64_t alert_count = 0; // positive decisions of this field (TP + FP)
    std::int64_t tp = 0, fp = 0, tn = 0, fn = 0;
    std::int64_t evaluated = 0;
    std::int64_t warmup = 0; // rows with no vote cast, left out
};

std::vector<ScoredRow> read_scores(std::istream& in);
std::vector<ScoredRow> read_scores_file(const std::string& path);

// CSV with header id,label; labels are 0 or 1.
std::map<std::string, int> read_labels(std::istream& in);
std::map<std::string, int> read_labels_file(const std::string& path);

// ROC from (score, label) pairs: one point per distinct score used as the
// threshold "score >= t", plus the (0,0) corner.
std::vector<RocPoint> roc_curve(std::vector<std::pair<double, int>> scored);
double trapezoid_auc(const std::vector<RocPoint>& roc);

// Detection rate TP / (TP + FN), 0 when there is no positive.
double detection_rate(std::int64_t tp, std::int64_t fn);

// `field` is "votes" for the ensemble or a detector name. For "votes" the
// decision is the alert flag; for a detector it is that detector's binary
// vote, and rows where it did not vote count as negative with score -inf.
// Rows without any vote cast are left out. Throws InputError listing the
// ids of unlabeled rows.
EvalReport evaluate(const std::vector<ScoredRow>& rows, const std::map<std::string, int>& labels,
                    const std::string& field = kVoteField);

nlohmann::json report_json(const EvalReport& report, bool with_roc);

} // namespace astd::cli
