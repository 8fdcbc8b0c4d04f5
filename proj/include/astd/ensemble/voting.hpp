#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace astd::ensemble {

struct Ballot {
    std::string detector;
    int vote = 0;     // 0 or 1
    double raw = 0.0; // continuous score, for evaluation only
};

// Votes cast on the current event.
class ScoreBoard {
public:
    void cast(std::string detector, int vote, double raw) { ballots_.push_back({std::move(detector), vote, raw}); }
    void clear() { ballots_.clear(); }

    bool empty() const { return ballots_.empty(); }
    std::size_t size() const { return ballots_.size(); }
    const std::vector<Ballot>& ballots() const { return ballots_; }
    std::vector<int> scores() const;

    friend bool operator==(const ScoreBoard&, const ScoreBoard&) = default;

private:
    std::vector<Ballot> ballots_;
};

struct Alert {
    std::string event_id;
    int votes = 0;
    std::string event_date;
    std::string user_id;

    friend bool operator==(const Alert&, const Alert&) = default;
};

// Decides from 0/1 scores whether an event is alerted; returns the number of
// positive votes to record, or nullopt for no alert.
using VotingStrategy = std::function<std::optional<int>(std::span<const int> scores)>;

// Alert iff the positive count is strictly greater than floor(n / 2).
std::optional<int> strict_majority(std::span<const int> scores);

// Applies `strategy` to a non-empty board, appends an alert when it fires,
// and clears the board. An empty board is left alone. Returns true when an
// alert was added.
bool majority_vote(ScoreBoard& scores, std::vector<Alert>& alerts, const std::string& event_id,
                   const std::string& event_date, const std::string& user_id = {},
                   const VotingStrategy& strategy = strict_majority);

} // namespace astd::ensemble
