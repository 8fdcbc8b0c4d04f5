#include "astd/pipeline/objects.hpp"

namespace astd::pipeline {

void describe(std::ostream& out, const windowing::Window& w) {
    out << "type=" << windowing::to_string(w.type()) << " ws=" << w.config().window_size
        << " ss=" << w.config().sliding_size << " version=" << w.version();
    if (w.type() == windowing::WindowType::Instance) {
        out << " count=" << w.instance_count();
    } else {
        out << " periods=[";
        bool first = true;
        for (int p : w.active_periods()) {
            out << (first ? "" : ",") << p;
            first = false;
        }
        out << "]";
    }
    if (w.late_events() != 0) {
        out << " late=" << w.late_events();
    }
}

void describe(std::ostream& out, const windowing::TrainingData& d) {
    out << "{";
    bool first = true;
    for (const auto& [period, minutes] : d.periods()) {
        out << (first ? "" : ", ") << period << ":[";
        for (std::size_t i = 0; i < minutes.size(); ++i) {
            out << (i ? "," : "") << minutes[i];
        }
        out << "]";
        first = false;
    }
    out << "}";
}

void describe(std::ostream& out, const AlertList& alerts) {
    out << "[";
    for (std::size_t i = 0; i < alerts.size(); ++i) {
        const auto& a = alerts[i];
        out << (i ? ", " : "") << "(" << a.event_id << "," << a.votes << "," << a.event_date << ")";
    }
    out << "]";
}

void describe(std::ostream& out, const ensemble::ScoreBoard& board) {
    out << "[";
    for (std::size_t i = 0; i < board.size(); ++i) {
        out << (i ? "," : "") << board.ballots()[i].vote;
    }
    out << "]";
}

void describe(std::ostream& out, const DetectorSet& set) {
    out << "{";
    bool first = true;
    for (const auto& [name, model] : set.models) {
        out << (first ? "" : ", ") << name << ": ";
        model->describe(out);
        auto it = set.fits.find(name);
        out << " fits=" << (it == set.fits.end() ? 0 : it->second);
        first = false;
    }
    out << "}";
}

void describe(std::ostream& out, const VoteRecord& record) {
    out << record.event_id << " positive=" << record.positive << " alerted=" << (record.alerted ? 1 : 0) << " [";
    for (std::size_t i = 0; i < record.ballots.size(); ++i) {
        out << (i ? "," : "") << record.ballots[i].detector << "=" << record.ballots[i].vote;
    }
    out << "]";
}

} // namespace astd::pipeline
