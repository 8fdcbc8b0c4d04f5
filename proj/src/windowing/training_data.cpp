#include "astd/windowing/training_data.hpp"

#include <algorithm>

namespace astd::windowing {

void TrainingData::drop_front(int period, std::size_t count) {
    auto it = per_period_.find(period);
    if (it == per_period_.end()) {
        return;
    }
    auto& v = it->second;
    v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(count, v.size())));
}

std::size_t TrainingData::size() const {
    std::size_t n = 0;
    for (const auto& [period, minutes] : per_period_) {
        n += minutes.size();
    }
    return n;
}

std::vector<int> training_set(const TrainingData& data) {
    std::vector<int> out;
    out.reserve(data.size());
    for (const auto& [period, minutes] : data.periods()) {
        out.insert(out.end(), minutes.begin(), minutes.end());
    }
    return out;
}

FormatOutcome formatting_data(TrainingData& data, Window& window, Timestamp event_date) {
    FormatOutcome outcome;
    const int minute = minute_of_day(event_date);
    if (window.type() == WindowType::Instance) {
        data.append(0, minute);
        if (window.add_instance(minute)) {
            data.drop_front(0, static_cast<std::size_t>(window.sliding_size()));
            outcome.slid = true;
        }
        return outcome;
    }
    const int period = compute_period(event_date, window.type());
    if (!window.accepts(period)) {
        window.note_late_event();
        outcome.accepted = false;
        return outcome;
    }
    data.append(period, minute);
    outcome.evicted = window.add_period(period);
    for (int p : outcome.evicted) {
        data.erase_period(p);
    }
    return outcome;
}

FormatOutcome formatting_data(TrainingData& data, Window& window, std::string_view event_date,
                              std::string_view date_format) {
    return formatting_data(data, window, parse_timestamp(event_date, date_format));
}

} // namespace astd::windowing
