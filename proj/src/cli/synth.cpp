#include "astd/cli/synth.hpp"

#include "astd/common/errors.hpp"
#include "astd/common/timestamp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <tuple>

namespace astd::cli {

namespace {

using namespace std::chrono;

constexpr double kShiftShare = 0.6;
constexpr int kShiftWeekMin = 10;
constexpr int kShiftWeekMax = 12;
constexpr double kShiftHoursMin = 3.0;
constexpr double kShiftHoursMax = 5.0;
constexpr double kAttendance = 0.95;
constexpr double kLunchBreak = 0.3;
constexpr double kLatestHour = 23.95;
constexpr double kAnomalyEndHour = 5.0;
constexpr int kMinEpisodeWeeks = 2;
constexpr double kMaxEpisodeShare = 0.7;

struct Draft {
    sys_seconds when;
    int user = 0;
    int seq = 0;
    std::string activity;
    int label = 0;
};

struct UserProfile {
    double start = 0.0;
    double length = 0.0;
    int shift_week = -1;
    double shift_hours = 0.0;
    int episode_start = 0;
};

sys_seconds at_hour(sys_days day, double hour) {
    hour = std::clamp(hour, 0.0, kLatestHour);
    return sys_seconds(day) + seconds(static_cast<std::int64_t>(std::llround(hour * 3600.0)));
}

std::string user_name(int u) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "U%03d", u);
    return buf;
}

} // namespace

void SynthParams::validate() const {
    if (users < 1 || weeks < 1) {
        throw ConfigError("synth needs at least one user and one week");
    }
    if (!(anomaly_rate >= 0.0 && anomaly_rate < 1.0)) {
        throw ConfigError("anomaly rate must lie in [0, 1)");
    }
    if (profile != "stable" && profile != "shifting") {
        throw ConfigError("unknown synth profile '" + profile + "'");
    }
}

SynthOutput synthesize(const SynthParams& params) {
    params.validate();
    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> jitter(0.0, 0.5);
    std::normal_distribution<double> small_jitter(0.0, 0.25);

    // Anomalies of a user fall in one episode of `episode_weeks` weeks, where
    // each event is anomalous with probability episode_rate; the expected
    // overall fraction is anomaly_rate.
    const int episode_weeks = std::min(
        params.weeks, std::max(kMinEpisodeWeeks,
                               static_cast<int>(std::ceil(params.anomaly_rate * params.weeks / kMaxEpisodeShare))));
    const double episode_rate = std::min(1.0, params.anomaly_rate * params.weeks / episode_weeks);

    std::vector<UserProfile> profiles(static_cast<std::size_t>(params.users));
    for (auto& p : profiles) {
        p.start = 7.5 + 2.0 * unit(rng);
        p.length = 8.0 + 1.5 * unit(rng);
        if (params.profile == "shifting" && unit(rng) < kShiftShare) {
            p.shift_week = kShiftWeekMin + static_cast<int>(unit(rng) * (kShiftWeekMax - kShiftWeekMin + 1));
            p.shift_hours = kShiftHoursMin + (kShiftHoursMax - kShiftHoursMin) * unit(rng);
        }
        p.episode_start = static_cast<int>(unit(rng) * (params.weeks - episode_weeks + 1));
    }

    const sys_days first_day{year{2010} / January / 4};
    std::vector<Draft> drafts;
    for (int u = 0; u < params.users; ++u) {
        const auto& p = profiles[static_cast<std::size_t>(u)];
        int seq = 0;
        for (int w = 0; w < params.weeks; ++w) {
            const double offset = p.shift_week >= 0 && w >= p.shift_week ? p.shift_hours : 0.0;
            const bool in_episode = w >= p.episode_start && w < p.episode_start + episode_weeks;
            for (int d = 0; d < 5; ++d) {
                if (unit(rng) >= kAttendance) {
                    continue;
                }
                const sys_days day = first_day + days(7 * w + d);
                const double begin = p.start + offset + jitter(rng);
                const double end = p.start + offset + p.length + jitter(rng);
                std::vector<std::pair<double, std::string>> day_events{{begin, "Logon"}};
                if (unit(rng) < kLunchBreak) {
                    const double out = p.start + offset + p.length / 2.0 + small_jitter(rng);
                    day_events.emplace_back(out, "Logoff");
                    day_events.emplace_back(out + 0.75 + small_jitter(rng), "Logon");
                }
                day_events.emplace_back(end, "Logoff");
                for (auto& [hour, activity] : day_events) {
                    Draft draft{at_hour(day, hour), u, seq++, activity, 0};
                    if (in_episode && unit(rng) < episode_rate) {
                        draft.when = at_hour(day, kAnomalyEndHour * unit(rng));
                        draft.activity = "Logon";
                        draft.label = 1;
                    }
                    drafts.push_back(std::move(draft));
                }
            }
        }
    }
    std::sort(drafts.begin(), drafts.end(), [](const Draft& a, const Draft& b) {
        return std::tie(a.when, a.user, a.seq) < std::tie(b.when, b.user, b.seq);
    });

    SynthOutput out;
    out.events.reserve(drafts.size());
    out.labels.reserve(drafts.size());
    for (std::size_t i = 0; i < drafts.size(); ++i) {
        char id[24];
        std::snprintf(id, sizeof id, "E%07zu", i + 1);
        const auto& d = drafts[i];
        out.events.push_back({id, format_timestamp(d.when), user_name(d.user),
                              "PC-" + std::to_string(1000 + d.user), d.activity});
        out.labels.emplace_back(id, d.label);
    }
    return out;
}

void write_labels(std::ostream& out, const std::vector<std::pair<std::string, int>>& labels) {
    out << "id,label\n";
    for (const auto& [id, label] : labels) {
        out << id << ',' << label << '\n';
    }
}

} // namespace astd::cli
