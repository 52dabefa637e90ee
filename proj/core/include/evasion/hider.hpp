#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evasion/board.hpp"
#include "evasion/finite_game.hpp"
#include "evasion/properties.hpp"

namespace evasion {

struct Check {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct MonitorReport {
    int turn = 0;
    std::vector<Check> checks;
    bool all_pass() const;
    const Check* first_failure() const;
};

/// Hider policy: replies Green or Red to each queried white edge. respond()
/// sees the board before the move lands (and may grow its window to reserve
/// fresh vertices); monitor() sees it after, and re-derives the proof claims
/// backing the strategy.
class HiderStrategy {
public:
    virtual ~HiderStrategy() = default;
    virtual std::string id() const = 0;
    virtual Color respond(Board& b, Edge e) = 0;
    virtual MonitorReport monitor(const Board& b) {
        return MonitorReport{b.turn(), {}};
    }
    virtual std::optional<Property> default_property() const { return std::nullopt; }
};

// Minimal-edge strategy: per stage, reply green exactly on a reserved path
// closing a green-white k-cycle through the stage's least white edge.
std::unique_ptr<HiderStrategy> make_hider_k_cycle(int k);
std::unique_ptr<HiderStrategy> make_hider_girth(int k);  // same policy, girth monitors

// Reply green iff red would ruin every increasing green-white path from 0.
std::unique_ptr<HiderStrategy> make_hider_connected();

// Stage pivot x_n = least vertex of green degree < d-1; green exactly on
// edges a x_n with the green degree of a below d-1.
std::unique_ptr<HiderStrategy> make_hider_degree(int d);

// Minimal-edge strategy with the reserved z-chain and hub w.
std::unique_ptr<HiderStrategy> make_hider_diameter(int d);

// Green exactly on the witness graph's edges.
std::unique_ptr<HiderStrategy> make_hider_sensitive(std::function<bool(Edge)> witness,
                                                    std::string witness_name);
std::unique_ptr<HiderStrategy> make_hider_sensitive_path();

/// The full bipartiteness strategy: infinite-stage play delegating each
/// stage to a finite subgame G_s* through the aggregation map, with fresh
/// helper vertices bound per stage.
class BipartiteHider final : public HiderStrategy {
public:
    enum class TauSource { Hand, Solved };
    explicit BipartiteHider(TauSource source = TauSource::Hand);
    ~BipartiteHider() override;

    std::string id() const override;
    Color respond(Board& b, Edge e) override;
    MonitorReport monitor(const Board& b) override;
    std::optional<Property> default_property() const override {
        return Property{Property::Kind::Bipartite, 0};
    }

    int stages_completed() const;
    int current_subgame() const;  // s of the active stage, -1 if none

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// adversarial hiders for exercising seeker strategies
std::unique_ptr<HiderStrategy> make_hider_random(std::uint64_t seed);
std::unique_ptr<HiderStrategy> make_hider_always(Color c);

/// Parses ids like "k-cycle:4", "connected", "bipartite", "bipartite:solved",
/// "degree:3", "diameter:2", "sensitive:path", "s0", "random:7", "always-red".
std::unique_ptr<HiderStrategy> make_hider(const std::string& id);

}  // namespace evasion
