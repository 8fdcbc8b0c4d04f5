#pragma once

#include "astd/windowing/period.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace astd::windowing {

struct WindowConfig {
    int window_size = 10;
    int sliding_size = 5;
    WindowType type = WindowType::Week;

    // Throws ConfigError unless window_size >= 1, sliding_size >= 0 and
    // sliding_size <= window_size.
    void validate() const;
};

// Sliding window bookkeeping over calendar periods or event counts.
//
// The window slides when it holds window_size + sliding_size units: the
// oldest sliding_size units are dropped. With sliding_size == 0 it never
// slides and keeps growing. `version` increases once when the window first
// holds window_size units and once per slide; models are retrained exactly
// when it moves past the version they were fitted on.
class Window {
public:
    explicit Window(WindowConfig config);

    const WindowConfig& config() const { return config_; }
    WindowType type() const { return config_.type; }
    int sliding_size() const { return config_.sliding_size; }

    // Registers `period` and returns the periods to delete (oldest first).
    std::vector<int> add_period(int period);

    // False for periods older than anything already evicted.
    bool accepts(int period) const;

    // Counts one event; true when the caller must drop the first
    // sliding_size buffered elements.
    bool add_instance(int minute);

    const std::set<int>& active_periods() const { return active_periods_; }
    int instance_count() const { return instance_count_; }
    int version() const { return version_; }

    std::int64_t late_events() const { return late_events_; }
    void note_late_event() { ++late_events_; }

    friend bool operator==(const Window&, const Window&) = default;

private:
    WindowConfig config_;
    std::set<int> active_periods_;
    int instance_count_ = 0;
    int version_ = 0;
    bool filled_ = false;
    bool has_evicted_ = false;
    int evicted_through_ = 0;
    std::int64_t late_events_ = 0;
};

inline bool operator==(const WindowConfig& a, const WindowConfig& b) {
    return a.window_size == b.window_size && a.sliding_size == b.sliding_size && a.type == b.type;
}

} // namespace astd::windowing
