#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "evasion/board.hpp"
#include "evasion/properties.hpp"

namespace evasion {

/// A finite 3-color Seeker/Hider game: a fixed edge universe, an initial
/// coloring, a termination predicate and a win predicate over terminal
/// colorings. Positions are colorings of the universe (move order forgotten;
/// the shipped predicates depend only on colors). Terminal is checked after
/// each Hider reply and at the initial position.
struct FiniteGame {
    std::string name;
    int num_vertices = 0;
    std::vector<Edge> universe;
    std::vector<Color> initial;
    std::function<bool(const FiniteGame&, const std::vector<Color>&)> terminal;
    std::function<bool(const FiniteGame&, const std::vector<Color>&)> hider_wins;

    int edge_id(Edge e) const;  // -1 if not in the universe
    std::vector<Edge> colored_edges(const std::vector<Color>& pos, Color c) const;
    int white_count(const std::vector<Color>& pos) const;
    std::uint32_t encode(const std::vector<Color>& pos) const;
};

enum class Winner { Seeker, Hider };

struct GameValue {
    Winner winner = Winner::Seeker;
    long positions_explored = 0;
    // winning policy, defined on positions reachable under it:
    std::unordered_map<std::uint32_t, int> seeker_moves;       // position -> edge id
    std::unordered_map<std::uint64_t, Color> hider_replies;    // position*64+edge -> color
};

/// Exact minimax value. Deterministic: edges explored in universe order,
/// policy tie-break lowest edge id / Green before Red.
/// Throws UniverseTooLarge beyond 15 edges.
GameValue solve(const FiniteGame& g);

/// Winner only, exploring edges in the given order (sanity check that move
/// ordering cannot change the value).
Winner solve_winner(const FiniteGame& g, const std::vector<int>& edge_order);

class FiniteHiderPolicy {
public:
    virtual ~FiniteHiderPolicy() = default;
    virtual Color respond(const FiniteGame& g, const std::vector<Color>& pos, int edge) = 0;
    virtual std::unique_ptr<FiniteHiderPolicy> clone() const = 0;
};

struct PolicyVerification {
    bool pass = true;
    long terminals = 0;
    std::vector<int> counterexample;  // seeker edge ids of a losing line, if any
    std::vector<Color> counterexample_terminal;
};

/// Exhaustively plays every Seeker move sequence against the (possibly
/// stateful) policy; pass iff every reached terminal satisfies hider_wins.
PolicyVerification verify_policy(const FiniteGame& g, const FiniteHiderPolicy& policy);

/// Positional policy extracted from a solved game (Hider side).
class SolvedHiderPolicy final : public FiniteHiderPolicy {
public:
    explicit SolvedHiderPolicy(std::shared_ptr<const GameValue> value) : value_(std::move(value)) {}
    Color respond(const FiniteGame& g, const std::vector<Color>& pos, int edge) override;
    std::unique_ptr<FiniteHiderPolicy> clone() const override;

private:
    std::shared_ptr<const GameValue> value_;
};

/// Replies with a fixed color sequence, then a constant fallback.
class ScriptedFinitePolicy final : public FiniteHiderPolicy {
public:
    ScriptedFinitePolicy(std::vector<Color> replies, Color fallback)
        : replies_(std::move(replies)), fallback_(fallback) {}
    Color respond(const FiniteGame&, const std::vector<Color>&, int) override {
        if (cursor_ < replies_.size()) return replies_[cursor_++];
        return fallback_;
    }
    std::unique_ptr<FiniteHiderPolicy> clone() const override {
        auto p = std::make_unique<ScriptedFinitePolicy>(replies_, fallback_);
        p->cursor_ = cursor_;
        return p;
    }

private:
    std::vector<Color> replies_;
    Color fallback_;
    std::size_t cursor_ = 0;
};

// ---- bipartite subgames -------------------------------------------------

// Subgame vertex layout: G0* on {n,x,y} = {0,1,2}; G1* on {n,k,x,y} =
// {0,1,2,3}; G2* on {n,k,l,x,y} = {0,1,2,3,4}.
FiniteGame make_bipartite_subgame(int s);

// Termination conditions of the subgames, also used by monitors:
//   I   green odd cycle exists
//   II  no green-white odd cycle
//   III green edges form a connected bipartite graph covering n with no
//       white edge between its vertices
bool subgame_cond_I(const FiniteGame& g, const std::vector<Color>& pos);
bool subgame_cond_II(const FiniteGame& g, const std::vector<Color>& pos);
bool subgame_cond_III(const FiniteGame& g, const std::vector<Color>& pos);

/// The weak form of (III): connected bipartite green graph covering n whose
/// internal white edges all join even-green-connected endpoints. Once it
/// holds, replying red to everything wins.
bool blacksquare(const FiniteGame& g, const std::vector<Color>& pos);

/// Hand policy for G0*: first edge green, then red.
std::unique_ptr<FiniteHiderPolicy> make_tau0();
/// Hand policy for G1*, transcribed case by case.
std::unique_ptr<FiniteHiderPolicy> make_tau1();

/// Hand policy for G2* transcribed from the 21-case table, with the
/// symmetry normalization made explicit. Exposes verification counters.
class AppendixPolicy final : public FiniteHiderPolicy {
public:
    AppendixPolicy();
    Color respond(const FiniteGame& g, const std::vector<Color>& pos, int edge) override;
    std::unique_ptr<FiniteHiderPolicy> clone() const override;

    // set when every case-exit checkpoint satisfied blacksquare
    bool checkpoints_blacksquare() const;
    // set when every checkpoint matched a catalogued winning position
    // (up to coloring figure-white edges red, and up to reflection)
    bool checkpoints_matched() const;
    int weakened_matches() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;  // cloned by value on clone()
};

std::unique_ptr<FiniteHiderPolicy> make_appendix_policy();

// ---- classical (finite-board) elusiveness --------------------------------

enum class Elusiveness { Elusive, NotElusive };

struct ClassicalResult {
    Elusiveness verdict = Elusiveness::NotElusive;
    long positions_explored = 0;
};

/// Finite game on K_n: Seeker wins iff she decides p while a white edge
/// remains. Elusive iff Hider has a winning strategy. Throws
/// UniverseTooLarge for n > 6.
ClassicalResult classical_elusiveness(const Property& p, int n);

FiniteGame make_classical_game(const Property& p, int n);

}  // namespace evasion
