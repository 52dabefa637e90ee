#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evasion/board.hpp"
#include "evasion/hider.hpp"
#include "evasion/properties.hpp"
#include "evasion/seeker.hpp"

namespace evasion {

struct MatchConfig {
    int turns = 2000;
    int window_cap = Board::kDefaultWindowCap;
    bool monitors = true;
    std::optional<Property> property;  // defaults to the hider's own property
    Semantics semantics = Semantics::infinite_tail();
};

struct Violation {
    int turn = 0;
    std::string check;
    std::string witness;
};

struct MatchResult {
    enum class Verdict { AllInvariantsHeld, Violation, SeekerTrap };

    Transcript transcript;
    std::vector<Decision> decisions;  // one per turn when a property is set
    int turns_played = 0;
    int monitor_failures = 0;
    std::optional<struct Violation> first_violation;
    ForcingVerdict seeker_verdict;
    bool antitone_ok = true;
    std::optional<std::string> resource_error;

    Verdict verdict() const;
    bool clean() const { return verdict() == Verdict::AllInvariantsHeld && !resource_error; }
};

/// Plays up to cfg.turns turns, collecting per-turn decisions and monitor
/// results. Resource errors raised by either strategy (window cap, horizon)
/// are recorded, not rethrown. Deterministic given the strategies and cfg.
MatchResult run_match(SeekerStrategy& seeker, HiderStrategy& hider, const MatchConfig& cfg);

/// Reconstructs the final board and validates the move sequence. With a
/// hider id provided, re-runs the strategy against the recorded moves,
/// checking every reply matches, and re-evaluates its monitors.
struct ReplayOutcome {
    Board board;
    bool replies_match = true;
    int monitor_failures = 0;
};
ReplayOutcome replay(const Transcript& t, const std::string& hider_id = "");

}  // namespace evasion
