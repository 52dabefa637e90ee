#include "evasion/finite_game.hpp"

#include <algorithm>
#include <numeric>

#include "evasion/graphs.hpp"

namespace evasion {

int FiniteGame::edge_id(Edge e) const {
    for (std::size_t i = 0; i < universe.size(); ++i)
        if (universe[i] == e) return static_cast<int>(i);
    return -1;
}

std::vector<Edge> FiniteGame::colored_edges(const std::vector<Color>& pos, Color c) const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < universe.size(); ++i)
        if (pos[i] == c) out.push_back(universe[i]);
    return out;
}

int FiniteGame::white_count(const std::vector<Color>& pos) const {
    return static_cast<int>(std::count(pos.begin(), pos.end(), Color::White));
}

std::uint32_t FiniteGame::encode(const std::vector<Color>& pos) const {
    std::uint32_t code = 0;
    for (std::size_t i = pos.size(); i-- > 0;) code = code * 3 + static_cast<std::uint32_t>(pos[i]);
    return code;
}

namespace {

struct Solver {
    const FiniteGame& g;
    const std::vector<int>& order;
    std::unordered_map<std::uint32_t, std::uint8_t> memo;

    Winner eval(std::vector<Color>& pos) {
        std::uint32_t code = g.encode(pos);
        if (auto it = memo.find(code); it != memo.end())
            return static_cast<Winner>(it->second);
        Winner w;
        if (g.terminal(g, pos)) {
            w = g.hider_wins(g, pos) ? Winner::Hider : Winner::Seeker;
        } else {
            if (g.white_count(pos) == 0)
                throw GameError("non-terminal position with no white edge in " + g.name);
            w = Winner::Hider;
            for (int e : order) {
                if (pos[e] != Color::White) continue;
                pos[e] = Color::Green;
                Winner wg = eval(pos);
                pos[e] = Color::Red;
                Winner wr = eval(pos);
                pos[e] = Color::White;
                if (wg == Winner::Seeker && wr == Winner::Seeker) {
                    w = Winner::Seeker;
                    break;
                }
            }
        }
        memo.emplace(code, static_cast<std::uint8_t>(w));
        return w;
    }
};

}  // namespace

GameValue solve(const FiniteGame& g) {
    if (g.universe.size() > 15)
        throw UniverseTooLarge("universe of " + std::to_string(g.universe.size()) + " edges");
    std::vector<int> order(g.universe.size());
    std::iota(order.begin(), order.end(), 0);
    Solver s{g, order, {}};
    std::vector<Color> pos = g.initial;
    GameValue value;
    value.winner = s.eval(pos);
    value.positions_explored = static_cast<long>(s.memo.size());

    // extract the winner's policy over positions reachable under it
    std::vector<std::vector<Color>> stack{g.initial};
    std::unordered_map<std::uint32_t, bool> seen;
    while (!stack.empty()) {
        std::vector<Color> cur = std::move(stack.back());
        stack.pop_back();
        std::uint32_t code = g.encode(cur);
        if (seen.count(code)) continue;
        seen[code] = true;
        if (g.terminal(g, cur)) continue;
        if (value.winner == Winner::Hider) {
            for (std::size_t e = 0; e < g.universe.size(); ++e) {
                if (cur[e] != Color::White) continue;
                Color reply = Color::Green;
                cur[e] = Color::Green;
                if (s.eval(cur) != Winner::Hider) {
                    cur[e] = Color::Red;
                    if (s.eval(cur) != Winner::Hider)
                        throw GameError("policy extraction: no winning reply");
                    reply = Color::Red;
                }
                value.hider_replies[code * 64 + e] = reply;
                cur[e] = reply;
                stack.push_back(cur);
                cur[e] = Color::White;
            }
        } else {
            int chosen = -1;
            for (std::size_t e = 0; e < g.universe.size() && chosen < 0; ++e) {
                if (cur[e] != Color::White) continue;
                cur[e] = Color::Green;
                Winner wg = s.eval(cur);
                cur[e] = Color::Red;
                Winner wr = s.eval(cur);
                cur[e] = Color::White;
                if (wg == Winner::Seeker && wr == Winner::Seeker) chosen = static_cast<int>(e);
            }
            if (chosen < 0) throw GameError("policy extraction: no winning move");
            value.seeker_moves[code] = chosen;
            for (Color c : {Color::Green, Color::Red}) {
                cur[chosen] = c;
                stack.push_back(cur);
            }
            cur[chosen] = Color::White;
        }
    }
    return value;
}

Winner solve_winner(const FiniteGame& g, const std::vector<int>& edge_order) {
    if (g.universe.size() > 15)
        throw UniverseTooLarge("universe of " + std::to_string(g.universe.size()) + " edges");
    Solver s{g, edge_order, {}};
    std::vector<Color> pos = g.initial;
    return s.eval(pos);
}

namespace {

void verify_rec(const FiniteGame& g, std::vector<Color>& pos, const FiniteHiderPolicy& policy,
                std::vector<int>& line, PolicyVerification& out) {
    if (!out.pass) return;
    if (g.terminal(g, pos)) {
        ++out.terminals;
        if (!g.hider_wins(g, pos)) {
            out.pass = false;
            out.counterexample = line;
            out.counterexample_terminal = pos;
        }
        return;
    }
    bool any_white = false;
    for (std::size_t e = 0; e < g.universe.size(); ++e) {
        if (pos[e] != Color::White) continue;
        any_white = true;
        auto branch = policy.clone();
        Color c = branch->respond(g, pos, static_cast<int>(e));
        if (c == Color::White) throw WhiteForbidden("policy returned white");
        pos[e] = c;
        line.push_back(static_cast<int>(e));
        verify_rec(g, pos, *branch, line, out);
        line.pop_back();
        pos[e] = Color::White;
        if (!out.pass) return;
    }
    if (!any_white) throw GameError("non-terminal leaf with no white edge in " + g.name);
}

}  // namespace

PolicyVerification verify_policy(const FiniteGame& g, const FiniteHiderPolicy& policy) {
    PolicyVerification out;
    std::vector<Color> pos = g.initial;
    std::vector<int> line;
    verify_rec(g, pos, policy, line, out);
    return out;
}

Color SolvedHiderPolicy::respond(const FiniteGame& g, const std::vector<Color>& pos, int edge) {
    auto it = value_->hider_replies.find(g.encode(pos) * 64ull + static_cast<unsigned>(edge));
    if (it == value_->hider_replies.end())
        throw GameError("solved policy has no reply at this position");
    return it->second;
}

std::unique_ptr<FiniteHiderPolicy> SolvedHiderPolicy::clone() const {
    return std::make_unique<SolvedHiderPolicy>(value_);
}

// ---- classical elusiveness ------------------------------------------------

namespace {

Decision decide_coloring(const Property& p, const FiniteGame& g, const std::vector<Color>& pos) {
    auto green = g.colored_edges(pos, Color::Green);
    std::vector<Edge> green_white = green;
    for (std::size_t i = 0; i < g.universe.size(); ++i)
        if (pos[i] == Color::White) green_white.push_back(g.universe[i]);
    if (is_monotone(p)) {
        if (evaluate(p, green, g.num_vertices)) return Decision::DecidedIn;
        if (!evaluate(p, green_white, g.num_vertices)) return Decision::DecidedOut;
        return Decision::Undecided;
    }
    if (evaluate(p, green_white, g.num_vertices)) return Decision::DecidedIn;
    if (!evaluate(p, green, g.num_vertices)) return Decision::DecidedOut;
    return Decision::Undecided;
}

}  // namespace

FiniteGame make_classical_game(const Property& p, int n) {
    if (n > 6) throw UniverseTooLarge("classical solving supports n <= 6");
    if (n < 2) throw GameError("classical game needs at least 2 vertices");
    FiniteGame g;
    g.name = "classical:" + property_name(p) + ":" + std::to_string(n);
    g.num_vertices = n;
    for (EdgeIndex i = 0; i < n * (n - 1) / 2; ++i) g.universe.push_back(edge_at(i));
    g.initial.assign(g.universe.size(), Color::White);
    g.terminal = [p](const FiniteGame& fg, const std::vector<Color>& pos) {
        if (fg.white_count(pos) == 0) return true;
        return decide_coloring(p, fg, pos) != Decision::Undecided;
    };
    // Seeker wins exactly when she decides with a white edge left over.
    g.hider_wins = [](const FiniteGame& fg, const std::vector<Color>& pos) {
        return fg.white_count(pos) == 0;
    };
    return g;
}

ClassicalResult classical_elusiveness(const Property& p, int n) {
    FiniteGame g = make_classical_game(p, n);
    GameValue v = solve(g);
    return {v.winner == Winner::Hider ? Elusiveness::Elusive : Elusiveness::NotElusive,
            v.positions_explored};
}

}  // namespace evasion
