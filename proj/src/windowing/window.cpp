#include "astd/windowing/window.hpp"

#include "astd/common/errors.hpp"

#include <string>

namespace astd::windowing {

void WindowConfig::validate() const {
    if (window_size < 1) {
        throw ConfigError("window_size must be positive, got " + std::to_string(window_size));
    }
    if (sliding_size < 0) {
        throw ConfigError("sliding_size must be non-negative, got " + std::to_string(sliding_size));
    }
    if (sliding_size > window_size) {
        throw ConfigError("sliding_size (" + std::to_string(sliding_size) + ") exceeds window_size (" +
                          std::to_string(window_size) + ")");
    }
}

Window::Window(WindowConfig config) : config_(config) { config_.validate(); }

bool Window::accepts(int period) const { return !has_evicted_ || period > evicted_through_; }

std::vector<int> Window::add_period(int period) {
    if (config_.type == WindowType::Instance) {
        throw Error("add_period called on an instance window");
    }
    std::vector<int> to_delete;
    if (!active_periods_.insert(period).second) {
        return to_delete;
    }
    const auto held = static_cast<int>(active_periods_.size());
    if (!filled_ && held >= config_.window_size) {
        filled_ = true;
        ++version_;
    }
    if (config_.sliding_size > 0 && held == config_.window_size + config_.sliding_size) {
        for (int i = 0; i < config_.sliding_size; ++i) {
            to_delete.push_back(*active_periods_.begin());
            active_periods_.erase(active_periods_.begin());
        }
        has_evicted_ = true;
        evicted_through_ = to_delete.back();
        ++version_;
    }
    return to_delete;
}

bool Window::add_instance(int /*minute*/) {
    if (config_.type != WindowType::Instance) {
        throw Error("add_instance called on a calendar window");
    }
    ++instance_count_;
    if (!filled_ && instance_count_ >= config_.window_size) {
        filled_ = true;
        ++version_;
    }
    if (config_.sliding_size > 0 && instance_count_ == config_.window_size + config_.sliding_size) {
        instance_count_ -= config_.sliding_size;
        ++version_;
        return true;
    }
    return false;
}

} // namespace astd::windowing
