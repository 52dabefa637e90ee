#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evasion/board.hpp"
#include "evasion/hider.hpp"

namespace evasion {

/// Outcome classification of a forcing Seeker strategy. TrapEntered means
/// Hider stepped into a position the proof certifies as lost for her (the
/// trap id names the argument); Refuted would mean a reply the proof claims
/// forced was refused without the trap's preconditions holding - expected
/// never to occur.
struct ForcingVerdict {
    enum class Kind { OnTrack, TrapEntered, Refuted };
    Kind kind = Kind::OnTrack;
    std::string trap;
    std::string witness;
};

class SeekerStrategy {
public:
    enum class Expect { Free, Red, Green };

    virtual ~SeekerStrategy() = default;
    virtual std::string id() const = 0;
    virtual Edge next(Board& b) = 0;
    virtual void observe(const Board& b, Edge e, Color reply) { (void)b, (void)e, (void)reply; }
    /// The proof's expectation for the edge most recently handed out.
    virtual Expect expectation() const { return Expect::Free; }
    virtual bool finished() const { return false; }
    virtual ForcingVerdict verdict() const { return {}; }
    virtual MonitorReport monitor(const Board& b) { return MonitorReport{b.turn(), {}}; }
};

// Plays every edge except e in canonical order.
std::unique_ptr<SeekerStrategy> make_seeker_one_white(Edge e);

// Uniform white edge inside a slowly growing soft window.
std::unique_ptr<SeekerStrategy> make_seeker_random(std::uint64_t seed);

// Scripted move list; finished() after the last move.
std::unique_ptr<SeekerStrategy> make_seeker_script(std::vector<Edge> moves);

/// Forcing strategy for "contains k independent edges": forces a first
/// green edge, then repeatedly extends the green vertex set while watching
/// the degree trap, the created-matching trap, and the irrelevant-set trap.
/// finished() once the green matching (or the 4k^2 green-count fallback)
/// certifies the win.
class IndepSeeker final : public SeekerStrategy {
public:
    explicit IndepSeeker(int k);
    ~IndepSeeker() override;
    std::string id() const override;
    Edge next(Board& b) override;
    void observe(const Board& b, Edge e, Color reply) override;
    Expect expectation() const override;
    bool finished() const override;
    ForcingVerdict verdict() const override;
    MonitorReport monitor(const Board& b) override;

    bool win_certified() const;
    const std::vector<int>& round_green_counts() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Forcing strategy for "no isolated vertex": builds the growing green star
/// while keeping the reserved vertex untouched; every reply after the
/// opening phase is forced by the observation or the claim.
class NoIsolatedSeeker final : public SeekerStrategy {
public:
    NoIsolatedSeeker();
    ~NoIsolatedSeeker() override;
    std::string id() const override;
    Edge next(Board& b) override;
    void observe(const Board& b, Edge e, Color reply) override;
    Expect expectation() const override;
    ForcingVerdict verdict() const override;
    MonitorReport monitor(const Board& b) override;

    Vertex reserved_vertex() const;  // -1 before it is bound
    Vertex star_center() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Test adversary: plays the forced reply whenever the paired seeker
/// declares one, otherwise a seeded coin with the given green chance.
class CompliantHider final : public HiderStrategy {
public:
    CompliantHider(const SeekerStrategy* seeker, std::uint64_t seed, int green_percent = 33);
    std::string id() const override { return "compliant"; }
    Color respond(Board& b, Edge e) override;

private:
    const SeekerStrategy* seeker_;
    std::uint64_t state_;
    int green_percent_;
};

/// Parses ids like "indep:2", "no-isolated", "one-white:0-1", "random:7".
std::unique_ptr<SeekerStrategy> make_seeker(const std::string& id);

}  // namespace evasion
