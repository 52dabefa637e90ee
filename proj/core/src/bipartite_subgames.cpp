#include <algorithm>
#include <array>
#include <map>

#include "evasion/finite_game.hpp"
#include "evasion/graphs.hpp"

namespace evasion {

namespace {

std::vector<Vertex> covered_vertices(std::span<const Edge> edges) {
    std::vector<Vertex> out;
    for (const auto& e : edges) {
        out.push_back(e.u);
        out.push_back(e.v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

bool subgame_cond_I(const FiniteGame& g, const std::vector<Color>& pos) {
    return !is_bipartite(g.colored_edges(pos, Color::Green));
}

bool subgame_cond_II(const FiniteGame& g, const std::vector<Color>& pos) {
    auto gw = g.colored_edges(pos, Color::Green);
    for (std::size_t i = 0; i < g.universe.size(); ++i)
        if (pos[i] == Color::White) gw.push_back(g.universe[i]);
    return is_bipartite(gw);
}

bool subgame_cond_III(const FiniteGame& g, const std::vector<Color>& pos) {
    auto green = g.colored_edges(pos, Color::Green);
    if (green.empty()) return false;
    auto cov = covered_vertices(green);
    if (!std::binary_search(cov.begin(), cov.end(), Vertex{0})) return false;
    if (!connected_on(green, cov)) return false;
    if (!is_bipartite(green)) return false;
    for (std::size_t i = 0; i < g.universe.size(); ++i) {
        if (pos[i] != Color::White) continue;
        Edge e = g.universe[i];
        if (std::binary_search(cov.begin(), cov.end(), e.u) &&
            std::binary_search(cov.begin(), cov.end(), e.v))
            return false;
    }
    return true;
}

bool blacksquare(const FiniteGame& g, const std::vector<Color>& pos) {
    auto green = g.colored_edges(pos, Color::Green);
    if (green.empty()) return false;
    auto cov = covered_vertices(green);
    if (!std::binary_search(cov.begin(), cov.end(), Vertex{0})) return false;
    if (!connected_on(green, cov)) return false;
    auto parts = bipartition(green, cov);
    if (!parts) return false;
    std::map<Vertex, int> side;
    for (auto [v, s] : *parts) side[v] = s;
    for (std::size_t i = 0; i < g.universe.size(); ++i) {
        if (pos[i] != Color::White) continue;
        Edge e = g.universe[i];
        auto iu = side.find(e.u), iv = side.find(e.v);
        if (iu == side.end() || iv == side.end()) continue;
        if (iu->second != iv->second) return false;  // odd green distance
    }
    return true;
}

FiniteGame make_bipartite_subgame(int s) {
    if (s < 0 || s > 2) throw GameError("subgame index must be 0, 1, or 2");
    FiniteGame g;
    g.name = "G" + std::to_string(s) + "*";
    g.num_vertices = 3 + s;
    for (EdgeIndex i = 0; i < g.num_vertices * (g.num_vertices - 1) / 2; ++i)
        g.universe.push_back(edge_at(i));
    g.initial.assign(g.universe.size(), Color::White);
    auto set = [&](Vertex a, Vertex b, Color c) { g.initial[g.edge_id(make_edge(a, b))] = c; };
    if (s == 0) {
        // vertices n=0, x=1, y=2; xy green, nx and ny white
        set(1, 2, Color::Green);
    } else if (s == 1) {
        // vertices n=0, k=1, x=2, y=3; xy green, nx red
        set(2, 3, Color::Green);
        set(0, 2, Color::Red);
    } else {
        // vertices n=0, k=1, l=2, x=3, y=4; xy green, nx and ny red
        set(3, 4, Color::Green);
        set(0, 3, Color::Red);
        set(0, 4, Color::Red);
    }
    g.terminal = [](const FiniteGame& fg, const std::vector<Color>& pos) {
        return subgame_cond_I(fg, pos) || subgame_cond_II(fg, pos) || subgame_cond_III(fg, pos);
    };
    g.hider_wins = [](const FiniteGame& fg, const std::vector<Color>& pos) {
        return subgame_cond_III(fg, pos);
    };
    return g;
}

// ---- tau_0 ------------------------------------------------------------

namespace {

class Tau0 final : public FiniteHiderPolicy {
public:
    Color respond(const FiniteGame&, const std::vector<Color>&, int) override {
        if (first_) {
            first_ = false;
            return Color::Green;
        }
        return Color::Red;
    }
    std::unique_ptr<FiniteHiderPolicy> clone() const override {
        auto p = std::make_unique<Tau0>();
        p->first_ = first_;
        return p;
    }

private:
    bool first_ = true;
};

}  // namespace

std::unique_ptr<FiniteHiderPolicy> make_tau0() {
    return std::make_unique<Tau0>();
}

// ---- tau_1 ------------------------------------------------------------

namespace {

// G1* on {n=0,k=1,x=2,y=3}; edge letters A=nk, B=nx, C=ny, D=kx, E=ky, F=xy.
class Tau1 final : public FiniteHiderPolicy {
public:
    Color respond(const FiniteGame& g, const std::vector<Color>& pos, int edge) override {
        Edge q = g.universe[edge];
        auto is = [&](Vertex a, Vertex b) { return q == make_edge(a, b); };
        switch (st_) {
            case St::Top:
                if (is(0, 1)) { st_ = St::CaseA; return Color::Green; }
                if (is(0, 3)) { st_ = St::Win; return Color::Green; }
                if (is(1, 2)) { st_ = St::CaseD; return Color::Red; }
                if (is(1, 3)) { st_ = St::CaseE; return Color::Green; }
                break;
            case St::CaseA:
                // green exactly E and the second-played edge from {C, D}
                if (is(1, 3)) { st_ = St::Win; return Color::Green; }
                if (is(0, 3) || is(1, 2)) {
                    if (!cd_seen_) { cd_seen_ = true; return Color::Red; }
                    st_ = St::Win;
                    return Color::Green;
                }
                break;
            case St::CaseD: {
                // everything green until n and y are green-connected
                auto green = g.colored_edges(pos, Color::Green);
                green.push_back(q);
                auto d = shortest_path_len(green, 0, 3);
                if (d.has_value()) st_ = St::Win;
                return Color::Green;
            }
            case St::CaseE:
                if (is(1, 2)) return Color::Red;
                if (is(0, 1) || is(0, 3)) { st_ = St::Win; return Color::Green; }
                break;
            case St::Win:
                return Color::Red;
        }
        throw GameError("tau1: unexpected query " + edge_str(q));
    }
    std::unique_ptr<FiniteHiderPolicy> clone() const override {
        auto p = std::make_unique<Tau1>();
        p->st_ = st_;
        p->cd_seen_ = cd_seen_;
        return p;
    }

private:
    enum class St { Top, CaseA, CaseD, CaseE, Win };
    St st_ = St::Top;
    bool cd_seen_ = false;
};

}  // namespace

std::unique_ptr<FiniteHiderPolicy> make_tau1() {
    return std::make_unique<Tau1>();
}

// ---- tau_2: the appendix policy ----------------------------------------

namespace {

// Edge letters of G2* on {n=0,k=1,l=2,x=3,y=4}:
// A=kl B=nk C=nl D=kx E=ky F=lx G=ly H=nx I=ny J=xy
enum class Lt : int { A, B, C, D, E, F, G, H, I, J };

constexpr std::array<Edge, 10> kLetterPair = {
    Edge{1, 2}, Edge{0, 1}, Edge{0, 2}, Edge{1, 3}, Edge{1, 4},
    Edge{2, 3}, Edge{2, 4}, Edge{0, 3}, Edge{0, 4}, Edge{3, 4},
};

Lt pair_partner(Lt l) {
    switch (l) {
        case Lt::D: return Lt::G;
        case Lt::G: return Lt::D;
        case Lt::E: return Lt::F;
        case Lt::F: return Lt::E;
        default: throw GameError("no pair partner");
    }
}

// Winning-position catalogue: green edge sets at the case exits. Reds are
// the initial {H, I} plus every non-green edge whose endpoints sit on
// opposite sides of the green tree; the remaining edges are white. Play may
// reach these with extra white edges already red.
const std::vector<std::vector<Lt>> kWinningGreens = {
    {Lt::J, Lt::D, Lt::A, Lt::B}, {Lt::J, Lt::D, Lt::A, Lt::C},
    {Lt::J, Lt::D, Lt::B},        {Lt::J, Lt::D, Lt::C, Lt::B},
    {Lt::J, Lt::D, Lt::C, Lt::F}, {Lt::J, Lt::B, Lt::E},
    {Lt::J, Lt::B, Lt::A, Lt::G}, {Lt::J, Lt::B, Lt::A, Lt::E},
    {Lt::J, Lt::B, Lt::A, Lt::F}, {Lt::J, Lt::B, Lt::E, Lt::G},
    {Lt::J, Lt::B, Lt::C, Lt::G}, {Lt::J, Lt::B, Lt::C, Lt::F},
};

}  // namespace

struct AppendixPolicy::Impl {
    enum class St {
        Top,
        Case1,      // last pair edge (normalized D) green
        Case1_1,    // then A green
        Case1_3,    // then C green
        Case1_32,   // B answered red while F white
        C21,        // case 2, D and E both white
        C22,        // case 2, normalized: D red, E white
        C221,       // 2.2.1: A green
        C222,       // 2.2.2: C red
        C2223,      // 2.2.2.3: green until connected
        C2224,      // 2.2.2.4: G green, red F, green first of {A,E}
        C224,       // 2.2.4: F red
        C2241,      // 2.2.4.1: A green, red C, green first of {E,G}
        C2244,      // 2.2.4.4: green only A or the last of {C,E}
        C225,       // 2.2.5: G green
        C2253,      // 2.2.5.3: E red, red F, green first of {A,C}
        C23,        // case 2, D and E both red
        Case3,      // A played first
        Win,
    };

    struct Stats {
        bool blacksquare_ok = true;
        bool matched = true;
        int weakened = 0;
    };

    St st = St::Top;
    bool swap_kl = false;
    bool swap_xy = false;
    bool got_ac = false, got_fg = false;    // C23
    bool got_bc = false, got_pair = false;  // Case3
    std::shared_ptr<Stats> stats = std::make_shared<Stats>();

    Vertex perm(Vertex v) const {
        if (swap_kl && (v == 1 || v == 2)) v = 3 - v;
        if (swap_xy && (v == 3 || v == 4)) v = 7 - v;
        return v;
    }
    Edge map_pair(Edge e) const { return make_edge(perm(e.u), perm(e.v)); }
    Lt letter_of(Edge real) const {
        Edge canon = map_pair(real);
        for (std::size_t i = 0; i < kLetterPair.size(); ++i)
            if (kLetterPair[i] == canon) return static_cast<Lt>(i);
        throw GameError("not a G2* edge");
    }
    int real_id(const FiniteGame& g, Lt l) const {
        return g.edge_id(map_pair(kLetterPair[static_cast<int>(l)]));  // perm is involutive
    }
    Color col(const FiniteGame& g, const std::vector<Color>& pos, Lt l) const {
        return pos[static_cast<std::size_t>(real_id(g, l))];
    }

    void checkpoint(const FiniteGame& g, std::vector<Color> pos, int edge, Color reply) {
        pos[static_cast<std::size_t>(edge)] = reply;
        if (!blacksquare(g, pos)) stats->blacksquare_ok = false;
        // match against the catalogue, identity or horizontal reflection
        for (int refl = 0; refl < 2; ++refl) {
            auto map_letter = [&](Lt l) {
                if (!refl) return l;
                Edge p = kLetterPair[static_cast<int>(l)];
                auto flip = [](Vertex v) {
                    if (v == 1 || v == 2) return 3 - v;
                    if (v == 3 || v == 4) return 7 - v;
                    return v;
                };
                Edge q = make_edge(flip(p.u), flip(p.v));
                for (std::size_t i = 0; i < kLetterPair.size(); ++i)
                    if (kLetterPair[i] == q) return static_cast<Lt>(i);
                throw GameError("reflection failed");
            };
            for (const auto& greens : kWinningGreens) {
                std::vector<bool> want_green(10, false);
                for (Lt l : greens) want_green[static_cast<int>(map_letter(l))] = true;
                bool green_match = true;
                for (int li = 0; li < 10 && green_match; ++li) {
                    bool is_green = col(g, pos, static_cast<Lt>(li)) == Color::Green;
                    if (is_green != want_green[static_cast<std::size_t>(li)]) green_match = false;
                }
                if (!green_match) continue;
                // figure whites: non-green, non-{H,I}, endpoints not on
                // opposite sides of the green graph
                std::vector<Edge> gedges;
                for (int li = 0; li < 10; ++li)
                    if (want_green[static_cast<std::size_t>(li)])
                        gedges.push_back(map_pair(kLetterPair[li]));
                auto cov = covered_vertices(gedges);
                auto parts = bipartition(gedges, cov);
                bool weakened = false, ok = true;
                for (int li = 0; li < 10 && ok; ++li) {
                    Lt l = static_cast<Lt>(li);
                    if (want_green[static_cast<std::size_t>(li)]) continue;
                    bool figure_white = true;
                    if (l == Lt::H || l == Lt::I) figure_white = false;
                    if (figure_white && parts) {
                        Edge p = map_pair(kLetterPair[li]);
                        int su = -1, sv = -1;
                        for (auto [v, s] : *parts) {
                            if (v == p.u) su = s;
                            if (v == p.v) sv = s;
                        }
                        if (su >= 0 && sv >= 0 && su != sv) figure_white = false;
                    }
                    Color c = col(g, pos, l);
                    if (figure_white) {
                        if (c == Color::Red) weakened = true;  // white -> red weakening
                    } else if (c != Color::Red) {
                        ok = false;
                    }
                }
                if (ok) {
                    if (weakened) ++stats->weakened;
                    return;
                }
            }
        }
        stats->matched = false;
    }

    Color reply(const FiniteGame& g, const std::vector<Color>& pos, int edge) {
        Lt lt = letter_of(g.universe[static_cast<std::size_t>(edge)]);
        auto c = [&](Lt l) { return col(g, pos, l); };
        auto win = [&](Color color) {
            checkpoint(g, pos, edge, color);
            st = St::Win;
            return color;
        };
        switch (st) {
            case St::Top:
                if (lt == Lt::D || lt == Lt::E || lt == Lt::F || lt == Lt::G) {
                    if (c(pair_partner(lt)) == Color::White) return Color::Red;
                    // normalize the completed pair's last edge to D
                    if (lt == Lt::E || lt == Lt::G) swap_xy = !swap_xy;
                    if (lt == Lt::F || lt == Lt::G) swap_kl = !swap_kl;
                    st = St::Case1;
                    return Color::Green;
                }
                if (lt == Lt::A) {
                    st = St::Case3;
                    return Color::Green;
                }
                if (lt == Lt::B || lt == Lt::C) {
                    if (lt == Lt::C) swap_kl = !swap_kl;
                    Color d = c(Lt::D), e = c(Lt::E);
                    if (d == Color::White && e == Color::White) st = St::C21;
                    else if (d == Color::Red && e == Color::Red) st = St::C23;
                    else {
                        if (d == Color::White) swap_xy = !swap_xy;  // now D red, E white
                        st = St::C22;
                    }
                    return Color::Green;
                }
                break;

            case St::Case1:
                if (lt == Lt::E || lt == Lt::F) return Color::Red;
                if (lt == Lt::A) { st = St::Case1_1; return Color::Green; }
                if (lt == Lt::B) return win(Color::Green);
                if (lt == Lt::C) { st = St::Case1_3; return Color::Green; }
                break;
            case St::Case1_1:
                if (lt == Lt::E || lt == Lt::F) return Color::Red;
                if (lt == Lt::B || lt == Lt::C) return win(Color::Green);
                break;
            case St::Case1_3:
                if (lt == Lt::E || lt == Lt::F) return Color::Red;
                if (lt == Lt::A) return win(Color::Green);
                if (lt == Lt::B) {
                    if (c(Lt::F) == Color::Red) return win(Color::Green);
                    st = St::Case1_32;
                    return Color::Red;
                }
                break;
            case St::Case1_32:
                if (lt == Lt::E) return Color::Red;
                if (lt == Lt::A || lt == Lt::F) return win(Color::Green);
                break;

            case St::C21:
                if (lt == Lt::A || lt == Lt::C || lt == Lt::F || lt == Lt::G) return Color::Red;
                if (lt == Lt::D || lt == Lt::E) return win(Color::Green);
                break;

            case St::C22:
                if (lt == Lt::A) { st = St::C221; return Color::Green; }
                if (lt == Lt::C) { st = St::C222; return Color::Red; }
                if (lt == Lt::E) return win(Color::Green);
                if (lt == Lt::F) { st = St::C224; return Color::Red; }
                if (lt == Lt::G) { st = St::C225; return Color::Green; }
                break;
            case St::C221:
                if (lt == Lt::C) return Color::Red;
                if (lt == Lt::E)
                    return c(Lt::F) == Color::White ? Color::Red : win(Color::Green);
                if (lt == Lt::F)
                    return c(Lt::E) == Color::White ? Color::Red : win(Color::Green);
                if (lt == Lt::G) return win(Color::Green);
                break;
            case St::C222:
                if (lt == Lt::A) { st = St::C221; return Color::Green; }
                if (lt == Lt::E) return win(Color::Green);
                if (lt == Lt::F) { st = St::C2223; return Color::Red; }
                if (lt == Lt::G) { st = St::C2224; return Color::Green; }
                break;
            case St::C2223: {
                auto green = g.colored_edges(pos, Color::Green);
                green.push_back(g.universe[static_cast<std::size_t>(edge)]);
                if (connected_on(green, covered_vertices(green))) return win(Color::Green);
                return Color::Green;
            }
            case St::C2224:
                if (lt == Lt::F) return Color::Red;
                if (lt == Lt::A || lt == Lt::E) return win(Color::Green);
                break;
            case St::C224:
                if (lt == Lt::A) { st = St::C2241; return Color::Green; }
                if (lt == Lt::C) { st = St::C2223; return Color::Red; }
                if (lt == Lt::E) return win(Color::Green);
                if (lt == Lt::G) { st = St::C2244; return Color::Green; }
                break;
            case St::C2241:
                if (lt == Lt::C) return Color::Red;
                if (lt == Lt::E || lt == Lt::G) return win(Color::Green);
                break;
            case St::C2244:
                if (lt == Lt::A) return win(Color::Green);
                if (lt == Lt::C)
                    return c(Lt::E) == Color::White ? Color::Red : win(Color::Green);
                if (lt == Lt::E)
                    return c(Lt::C) == Color::White ? Color::Red : win(Color::Green);
                if (lt == Lt::F) return Color::Red;
                break;
            case St::C225:
                if (lt == Lt::A) return win(Color::Green);
                if (lt == Lt::C) { st = St::C2224; return Color::Red; }
                if (lt == Lt::E) { st = St::C2253; return Color::Red; }
                if (lt == Lt::F) { st = St::C2244; return Color::Red; }
                break;
            case St::C2253:
                if (lt == Lt::F) return Color::Red;
                if (lt == Lt::A || lt == Lt::C) return win(Color::Green);
                break;

            case St::C23:
                if (lt == Lt::A || lt == Lt::C) {
                    if (got_ac) return Color::Red;
                    got_ac = true;
                    return got_fg ? win(Color::Green) : Color::Green;
                }
                if (lt == Lt::F || lt == Lt::G) {
                    if (got_fg) return Color::Red;
                    got_fg = true;
                    return got_ac ? win(Color::Green) : Color::Green;
                }
                break;

            case St::Case3:
                if (lt == Lt::B || lt == Lt::C) {
                    if (got_bc) return Color::Red;
                    got_bc = true;
                    return got_pair ? win(Color::Green) : Color::Green;
                }
                if (lt == Lt::D || lt == Lt::E || lt == Lt::F || lt == Lt::G) {
                    if (got_pair || c(pair_partner(lt)) == Color::White) return Color::Red;
                    got_pair = true;
                    return got_bc ? win(Color::Green) : Color::Green;
                }
                break;

            case St::Win:
                return Color::Red;
        }
        throw GameError("appendix policy: unexpected query");
    }
};

AppendixPolicy::AppendixPolicy() : impl_(std::make_shared<Impl>()) {}

Color AppendixPolicy::respond(const FiniteGame& g, const std::vector<Color>& pos, int edge) {
    return impl_->reply(g, pos, edge);
}

std::unique_ptr<FiniteHiderPolicy> AppendixPolicy::clone() const {
    auto p = std::make_unique<AppendixPolicy>();
    *p->impl_ = *impl_;  // copies branch state, shares the stats block
    return p;
}

bool AppendixPolicy::checkpoints_blacksquare() const { return impl_->stats->blacksquare_ok; }
bool AppendixPolicy::checkpoints_matched() const { return impl_->stats->matched; }
int AppendixPolicy::weakened_matches() const { return impl_->stats->weakened; }

std::unique_ptr<FiniteHiderPolicy> make_appendix_policy() {
    return std::make_unique<AppendixPolicy>();
}

}  // namespace evasion
