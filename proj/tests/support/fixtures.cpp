#include "fixtures.hpp"

#include "astd/common/timestamp.hpp"

#include <algorithm>
#include <cmath>
#include <chrono>
#include <tuple>

namespace astd::test {

std::string cert_date(int day_offset, int minute_of_day) {
    using namespace std::chrono;
    const sys_days day = sys_days{year{2010} / January / 4} + days(day_offset);
    return format_timestamp(sys_seconds(day) + minutes(minute_of_day));
}

std::vector<cli::LogRecord> nine_to_five(const std::string& user, int weeks, int per_day, std::uint64_t seed,
                                         const std::string& id_prefix) {
    Gen gen(seed);
    std::vector<cli::LogRecord> out;
    int n = 0;
    for (int w = 0; w < weeks; ++w) {
        for (int d = 0; d < 5; ++d) {
            std::vector<int> minutes;
            for (int i = 0; i < per_day; ++i) {
                minutes.push_back(gen.integer(8 * 60, 17 * 60));
            }
            std::sort(minutes.begin(), minutes.end());
            for (int m : minutes) {
                out.push_back({id_prefix + std::to_string(++n), cert_date(7 * w + d, m), user, "PC-1", "Logon"});
            }
        }
    }
    return out;
}

std::vector<cli::LogRecord> random_stream(Gen& gen, int users, int weeks) {
    struct Row {
        int day;
        int minute;
        int user;
    };
    std::vector<Row> rows;
    for (int u = 0; u < users; ++u) {
        const int centre = gen.integer(6 * 60, 20 * 60);
        const int spread = gen.integer(30, 240);
        for (int day = 0; day < 7 * weeks; ++day) {
            const int count = gen.integer(0, 4);
            for (int i = 0; i < count; ++i) {
                int minute = gen.chance(0.1) ? gen.integer(0, 1439) : centre + gen.integer(-spread, spread);
                rows.push_back({day, std::clamp(minute, 0, 1439), u});
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return std::tie(a.day, a.minute) < std::tie(b.day, b.minute); });
    std::vector<cli::LogRecord> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.push_back({"R" + std::to_string(i), cert_date(rows[i].day, rows[i].minute),
                       "u" + std::to_string(rows[i].user), "PC", "Logon"});
    }
    return out;
}

std::vector<pipeline::ScoredEvent> score_all(const std::vector<cli::LogRecord>& records,
                                             const pipeline::PipelineConfig& config) {
    pipeline::Runtime runtime(config);
    std::vector<pipeline::ScoredEvent> out;
    for (const auto& r : records) {
        runtime.process_event(cli::to_event(r));
        out.push_back(*runtime.last_scored());
    }
    return out;
}

pipeline::PipelineConfig quick_config() {
    pipeline::PipelineConfig config;
    config.window = {3, 1, windowing::WindowType::Day};
    config.min_training_instances = 5;
    return config;
}

bool same_scores(const pipeline::ScoredEvent& a, const pipeline::ScoredEvent& b) {
    if (a.event_id != b.event_id || a.positive != b.positive || a.alerted != b.alerted ||
        a.ballots.size() != b.ballots.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.ballots.size(); ++i) {
        const auto& x = a.ballots[i];
        const auto& y = b.ballots[i];
        const bool raw_equal = x.raw == y.raw || (std::isnan(x.raw) && std::isnan(y.raw));
        if (x.detector != y.detector || x.vote != y.vote || !raw_equal) {
            return false;
        }
    }
    return true;
}

} // namespace astd::test
