#include "astd/ensemble/voting.hpp"

#include <algorithm>

namespace astd::ensemble {

std::vector<int> ScoreBoard::scores() const {
    std::vector<int> out;
    out.reserve(ballots_.size());
    for (const auto& b : ballots_) {
        out.push_back(b.vote);
    }
    return out;
}

std::optional<int> strict_majority(std::span<const int> scores) {
    const auto count = static_cast<int>(std::count(scores.begin(), scores.end(), 1));
    if (count > static_cast<int>(scores.size() / 2)) {
        return count;
    }
    return std::nullopt;
}

bool majority_vote(ScoreBoard& scores, std::vector<Alert>& alerts, const std::string& event_id,
                   const std::string& event_date, const std::string& user_id, const VotingStrategy& strategy) {
    if (scores.empty()) {
        return false;
    }
    const std::vector<int> votes = scores.scores();
    const auto decision = strategy(votes);
    scores.clear();
    if (!decision) {
        return false;
    }
    alerts.push_back({event_id, *decision, event_date, user_id});
    return true;
}

} // namespace astd::ensemble
