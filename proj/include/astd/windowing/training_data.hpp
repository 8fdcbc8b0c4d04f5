#pragma once

#include "astd/windowing/window.hpp"

#include <map>
#include <string_view>
#include <vector>

namespace astd::windowing {

// Minute-of-day samples keyed by period; instance windows use key 0.
class TrainingData {
public:
    void append(int period, int minute) { per_period_[period].push_back(minute); }
    void erase_period(int period) { per_period_.erase(period); }
    void drop_front(int period, std::size_t count);

    const std::map<int, std::vector<int>>& periods() const { return per_period_; }
    std::size_t size() const;

    friend bool operator==(const TrainingData&, const TrainingData&) = default;

private:
    std::map<int, std::vector<int>> per_period_;
};

// All samples in ascending period order, stable within a period.
std::vector<int> training_set(const TrainingData& data);

struct FormatOutcome {
    bool accepted = true;         // false when the period was already evicted
    std::vector<int> evicted;     // periods removed from the data
    bool slid = false;            // instance window dropped its oldest elements
};

// Adds one event to the training data and advances the window.
FormatOutcome formatting_data(TrainingData& data, Window& window, Timestamp event_date);
FormatOutcome formatting_data(TrainingData& data, Window& window, std::string_view event_date,
                              std::string_view date_format);

} // namespace astd::windowing
