#include <algorithm>
#include <optional>

#include "evasion/graphs.hpp"
#include "evasion/hider.hpp"

namespace evasion {

namespace {

std::vector<Vertex> green_covered(const Board& b) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < b.window(); ++v)
        if (b.degree(v, Color::Green) > 0) out.push_back(v);
    return out;
}

Vertex least_uncovered(const Board& b) {
    Vertex v = 0;
    while (v < b.window() && b.degree(v, Color::Green) > 0) ++v;
    return v;
}

// incremental green-bipartiteness: union-find with parity
struct ParityForest {
    std::vector<int> parent, rank_, par;
    bool odd_cycle = false;
    int seen_moves = 0;

    std::pair<int, int> find(int x) {
        if (static_cast<std::size_t>(x) >= parent.size()) {
            std::size_t old = parent.size();
            parent.resize(static_cast<std::size_t>(x) + 1);
            rank_.resize(parent.size(), 0);
            par.resize(parent.size(), 0);
            for (std::size_t i = old; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        }
        int p = 0;
        int r = x;
        while (parent[r] != r) {
            p ^= par[r];
            r = parent[r];
        }
        // path compression with parity rewrite
        int cur = x, cp = p;
        while (parent[cur] != cur) {
            int next = parent[cur], np = cp ^ par[cur];
            parent[cur] = r;
            par[cur] = cp;
            cur = next;
            cp = np;
        }
        return {r, p};
    }

    void add_green(Edge e) {
        auto [ru, pu] = find(e.u);
        auto [rv, pv] = find(e.v);
        if (ru == rv) {
            if (pu == pv) odd_cycle = true;
            return;
        }
        if (rank_[ru] < rank_[rv]) {
            std::swap(ru, rv);
            std::swap(pu, pv);
        }
        parent[rv] = ru;
        par[rv] = pu ^ pv ^ 1;
        if (rank_[ru] == rank_[rv]) ++rank_[ru];
    }

    void ingest(const Board& b) {
        const auto& hist = b.history();
        for (; seen_moves < static_cast<int>(hist.size()); ++seen_moves)
            if (hist[seen_moves].c == Color::Green) add_green(hist[seen_moves].e);
    }
};

}  // namespace

struct BipartiteHider::Impl {
    TauSource source;
    bool opened = false;

    struct Stage {
        int n = 0;  // the stage's uncovered pivot n'
        int s = 0;
        std::vector<Vertex> xs, ys;  // parts at stage start; xs fully red-joined when s=1
        Vertex kv = -1, lv = -1;
        FiniteGame game;
        std::vector<Color> pstar;
        std::unique_ptr<FiniteHiderPolicy> tau;
        bool terminal = false;
        bool boundary_reported = false;
    };
    std::optional<Stage> stage;
    int stages_completed = 0;
    std::shared_ptr<const GameValue> solved[3];
    ParityForest parity;

    std::unique_ptr<FiniteHiderPolicy> make_tau(int s) {
        if (source == TauSource::Hand) {
            if (s == 0) return make_tau0();
            if (s == 1) return make_tau1();
            return make_appendix_policy();
        }
        if (!solved[s])
            solved[s] = std::make_shared<GameValue>(solve(make_bipartite_subgame(s)));
        return std::make_unique<SolvedHiderPolicy>(solved[s]);
    }

    void init_stage(Board& b) {
        Stage st;
        auto greens = b.edges_of(Color::Green);
        auto core = green_covered(b);
        auto parts = bipartition(greens, core);
        if (!parts) throw GameError("bipartite hider: green graph lost bipartiteness");
        for (auto [v, side] : *parts)
            (side == 0 ? st.xs : st.ys).push_back(v);
        st.n = least_uncovered(b);
        auto fully_red = [&](const std::vector<Vertex>& part) {
            return std::all_of(part.begin(), part.end(), [&](Vertex v) {
                return b.color(make_edge(st.n, v)) == Color::Red;
            });
        };
        bool xr = fully_red(st.xs), yr = fully_red(st.ys);
        if (!xr && yr) std::swap(st.xs, st.ys), std::swap(xr, yr);
        st.s = (xr ? 1 : 0) + (yr ? 1 : 0);
        std::vector<Vertex> excl{st.n};
        if (st.s >= 1) {
            auto fresh = b.fresh_vertices(st.s == 2 ? 2 : 1, excl);
            st.kv = fresh[0];
            if (st.s == 2) st.lv = fresh[1];
        }
        st.game = make_bipartite_subgame(st.s);
        st.pstar = st.game.initial;
        st.tau = make_tau(st.s);
        stage = std::move(st);
    }

    // subgame vertex ids: s=0 {n,x,y}={0,1,2}; s=1 {n,k,x,y}={0..3};
    // s=2 {n,k,l,x,y}={0..4}
    enum class Agg { None, Direct, Form };
    struct Mapped {
        Agg kind = Agg::None;
        Edge sub{0, 1};               // subgame edge
        std::vector<Edge> form;       // the real edges this form aggregates
    };

    Mapped classify(const Board& b, Edge e) const {
        const Stage& st = *stage;
        auto side_of = [&](Vertex v) -> int {
            if (std::find(st.xs.begin(), st.xs.end(), v) != st.xs.end()) return 0;
            if (std::find(st.ys.begin(), st.ys.end(), v) != st.ys.end()) return 1;
            return -1;
        };
        auto role = [&](Vertex v) -> int {
            // 0=n', 1=k', 2=l', 3=in X, 4=in Y, -1 outside
            if (v == st.n) return 0;
            if (v == st.kv) return 1;
            if (v == st.lv) return 2;
            int s = side_of(v);
            return s < 0 ? -1 : 3 + s;
        };
        int ru = role(e.u), rv = role(e.v);
        if (ru < 0 || rv < 0) return {};
        if (ru > rv) std::swap(ru, rv);
        // subgame vertex numbers per s
        auto sub_vertex = [&](int r) -> int {
            if (st.s == 0) return r == 0 ? 0 : r - 2;        // n,x,y -> 0,1,2
            if (st.s == 1) return r == 0 ? 0 : (r == 1 ? 1 : r - 1);  // n,k,x,y -> 0,1,2,3
            return r;                                         // n,k,l,x,y -> 0..4
        };
        if (ru >= 3 && rv >= 3)
            throw GameError("bipartite hider: white edge inside the settled core");
        Mapped m;
        m.sub = make_edge(sub_vertex(ru), sub_vertex(rv));
        if (rv <= 2) {
            m.kind = Agg::Direct;
            return m;
        }
        // forms join a helper vertex (n'/k'/l') to one side of the core
        m.kind = Agg::Form;
        Vertex helper = (role(e.u) <= 2) ? e.u : e.v;
        const auto& part = (rv == 3) ? st.xs : st.ys;
        for (Vertex w : part) m.form.push_back(make_edge(helper, w));
        return m;
    }

    Color respond(Board& b, Edge e) {
        if (!opened) {
            opened = true;
            return Color::Green;
        }
        if (stage && stage->terminal) {
            ++stages_completed;
            stage.reset();
        }
        if (!stage) init_stage(b);
        Stage& st = *stage;
        Mapped m = classify(b, e);
        if (m.kind == Agg::None) return Color::Red;
        int sub_id = st.game.edge_id(m.sub);
        if (m.kind == Agg::Form) {
            int whites = 0;
            for (const auto& fe : m.form)
                if (b.is_white(fe)) ++whites;
            if (whites > 1) return Color::Red;  // e itself still counts as white
        }
        if (st.pstar[static_cast<std::size_t>(sub_id)] != Color::White)
            throw GameError("bipartite hider: subgame edge already resolved");
        Color reply = st.tau->respond(st.game, st.pstar, sub_id);
        st.pstar[static_cast<std::size_t>(sub_id)] = reply;
        if (st.game.terminal(st.game, st.pstar)) st.terminal = true;
        return reply;
    }

    std::vector<Color> recompute_pstar(const Board& b) const {
        const Stage& st = *stage;
        std::vector<Color> out(st.game.universe.size(), Color::White);
        auto agg = [&](Vertex helper, const std::vector<Vertex>& part) -> Color {
            bool any_green = false, all_red = !part.empty();
            for (Vertex w : part) {
                Color c = b.color(make_edge(helper, w));
                if (c == Color::Green) any_green = true;
                if (c != Color::Red) all_red = false;
            }
            if (any_green) return Color::Green;
            return all_red ? Color::Red : Color::White;
        };
        auto set = [&](int a, int c, Color col) {
            out[static_cast<std::size_t>(st.game.edge_id(make_edge(a, c)))] = col;
        };
        if (st.s == 0) {
            set(1, 2, Color::Green);  // xy: the core itself
            set(0, 1, agg(st.n, st.xs));
            set(0, 2, agg(st.n, st.ys));
        } else if (st.s == 1) {
            set(2, 3, Color::Green);
            set(0, 2, Color::Red);
            set(0, 1, b.color(make_edge(st.n, st.kv)));
            set(0, 3, agg(st.n, st.ys));
            set(1, 2, agg(st.kv, st.xs));
            set(1, 3, agg(st.kv, st.ys));
        } else {
            set(3, 4, Color::Green);
            set(0, 3, Color::Red);
            set(0, 4, Color::Red);
            set(0, 1, b.color(make_edge(st.n, st.kv)));
            set(0, 2, b.color(make_edge(st.n, st.lv)));
            set(1, 2, b.color(make_edge(st.kv, st.lv)));
            set(1, 3, agg(st.kv, st.xs));
            set(1, 4, agg(st.kv, st.ys));
            set(2, 3, agg(st.lv, st.xs));
            set(2, 4, agg(st.lv, st.ys));
        }
        return out;
    }

    MonitorReport monitor(const Board& b) {
        MonitorReport r{b.turn(), {}};
        parity.ingest(b);
        r.checks.push_back({"green-bipartite", !parity.odd_cycle,
                            parity.odd_cycle ? "green odd cycle" : ""});
        if (stage) {
            auto expect = recompute_pstar(b);
            bool ok = expect == stage->pstar;
            r.checks.push_back({"subgame-mirror-consistent", ok,
                                ok ? "" : "tracked position diverged from the board"});
        }
        if (stage && stage->terminal && !stage->boundary_reported) {
            stage->boundary_reported = true;
            bool iii = stage->game.hider_wins(stage->game, stage->pstar);
            r.checks.push_back({"subgame-ended-in-III", iii, ""});
            auto greens = b.edges_of(Color::Green);
            auto core = green_covered(b);
            bool c1 = connected_on(greens, core) && is_bipartite(greens);
            r.checks.push_back({"boundary-core-connected-bipartite", c1, ""});
            bool c2 = true;
            std::string witness;
            for (std::size_t i = 0; i < core.size() && c2; ++i)
                for (std::size_t j = i + 1; j < core.size() && c2; ++j) {
                    Edge ce = make_edge(core[i], core[j]);
                    if (b.is_white(ce)) {
                        c2 = false;
                        witness = edge_str(ce);
                    }
                }
            r.checks.push_back({"boundary-core-fully-colored", c2, witness});
            bool c3 = least_uncovered(b) > stage->n;
            r.checks.push_back({"boundary-pivot-advanced", c3,
                                c3 ? "" : "pivot " + std::to_string(stage->n)});
        }
        return r;
    }
};

BipartiteHider::BipartiteHider(TauSource source) : impl_(std::make_unique<Impl>()) {
    impl_->source = source;
}
BipartiteHider::~BipartiteHider() = default;

std::string BipartiteHider::id() const {
    return impl_->source == TauSource::Hand ? "bipartite" : "bipartite:solved";
}

Color BipartiteHider::respond(Board& b, Edge e) {
    return impl_->respond(b, e);
}

MonitorReport BipartiteHider::monitor(const Board& b) {
    return impl_->monitor(b);
}

int BipartiteHider::stages_completed() const {
    return impl_->stages_completed;
}

int BipartiteHider::current_subgame() const {
    return impl_->stage ? impl_->stage->s : -1;
}

}  // namespace evasion
