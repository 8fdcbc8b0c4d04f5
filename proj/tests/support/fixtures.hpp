#pragma once

#include "astd/cli/ingest.hpp"
#include "astd/pipeline/runtime.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace astd::test {

// Seeded generator helpers for hand-rolled property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(double p) { return real(0.0, 1.0) < p; }
    double hour() { return real(0.0, 24.0); }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// "MM/DD/YYYY HH:MM:SS" for a day counted from Monday 2010-01-04.
std::string cert_date(int day_offset, int minute_of_day);

// One user working 08:00-17:00 on weekdays: `per_day` events per day,
// minutes drawn uniformly inside the working hours.
std::vector<cli::LogRecord> nine_to_five(const std::string& user, int weeks, int per_day, std::uint64_t seed,
                                         const std::string& id_prefix = "X");

// A random multi-user stream, ordered by time.
std::vector<cli::LogRecord> random_stream(Gen& gen, int users, int weeks);

// Scores of every accepted event of a full run, in order.
std::vector<pipeline::ScoredEvent> score_all(const std::vector<cli::LogRecord>& records,
                                             const pipeline::PipelineConfig& config);

// Small configuration that trains after a few days of data.
pipeline::PipelineConfig quick_config();

bool same_scores(const pipeline::ScoredEvent& a, const pipeline::ScoredEvent& b);

} // namespace astd::test
