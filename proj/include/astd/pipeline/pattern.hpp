#pragma once

#include "astd/engine/interpreter.hpp"
#include "astd/pipeline/config.hpp"

namespace astd::pipeline {

// Names used in the specification tree.
namespace names {
inline constexpr const char* kRoot = "combinedModels";
inline constexpr const char* kPerUser = "detectionPerUser";
inline constexpr const char* kCombination = "Combination";
inline constexpr const char* kDetectors = "detectors";
inline constexpr const char* kDetectorInstance = "DetectorInstance";
inline constexpr const char* kTraining = "training";
inline constexpr const char* kDetection = "detection";
inline constexpr const char* kMajorityVote = "majorityVote";
inline constexpr const char* kDataParser = "DataParser";

inline constexpr const char* kUserId = "userId";
inline constexpr const char* kDetector = "d";
inline constexpr const char* kEventDate = "eventDate";
inline constexpr const char* kEventId = "eventId";

inline constexpr const char* kWindow = "window";
inline constexpr const char* kData = "data";
inline constexpr const char* kAlerts = "alerts";
inline constexpr const char* kLastVote = "lastVote";
inline constexpr const char* kScores = "scores";
inline constexpr const char* kMapDetectors = "mapDetectors";

inline constexpr const char* kEvent = "e";
} // namespace names

// combinedModels = |||userId : Unbounded · detectionPerUser
// detectionPerUser = Flow(Combination, DataParser)     [window, data, alerts, lastVote]
// Combination = Flow(detectors, majorityVote)           [scores]
// detectors = QFlow(d : detector names, Call DetectorInstance(d))   [mapDetectors]
// DetectorInstance(d) = Flow(training, detection)
//
// Every leaf is a one-state loop automaton on e(userId, ?eventDate, ?eventId).
engine::SpecLibrary build_spec(const PipelineConfig& config);

// Training guard: enough samples for this detector, a filled window, and a
// window version newer than the detector's last fit.
bool training_guard(const engine::Env& env, const PipelineConfig& config);

// Detection guard: the detector has been fitted at least once.
bool detection_guard(const engine::Env& env);

} // namespace astd::pipeline
