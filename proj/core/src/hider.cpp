#include "evasion/hider.hpp"

#include <algorithm>

#include "evasion/graphs.hpp"
#include "evasion/s0.hpp"

namespace evasion {

bool MonitorReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* MonitorReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

namespace {

// increasing green-white reachability from 0, optionally with one extra edge
// treated as red; reach[v] for v <= limit
std::vector<bool> increasing_reachable(const Board& b, Vertex limit,
                                       std::optional<Edge> extra_red) {
    std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
    if (limit < 0) return reach;
    reach[0] = true;
    int count_below = 1;  // reachable among 0..v-1
    for (Vertex v = 1; v <= limit; ++v) {
        int blocked = 0;
        for (const auto& [w, c] : b.colored_at(v))
            if (c == Color::Red && w < v && reach[w]) ++blocked;
        if (extra_red && (extra_red->v == v) && extra_red->u < v && reach[extra_red->u] &&
            b.color(*extra_red) != Color::Red)
            ++blocked;
        reach[v] = count_below > blocked;
        if (reach[v]) ++count_below;
    }
    return reach;
}

class KCycleHider final : public HiderStrategy {
public:
    KCycleHider(int k, bool girth) : k_(k), girth_(girth) {
        if (k < 3) throw GameError("cycle length must be at least 3");
    }

    std::string id() const override {
        return (girth_ ? "girth:" : "k-cycle:") + std::to_string(k_);
    }
    std::optional<Property> default_property() const override {
        return Property{girth_ ? Property::Kind::GirthAtMostK : Property::Kind::ContainsCycleK,
                        k_};
    }

    Color respond(Board& b, Edge e) override {
        ensure_stage(b);
        if (e == guard_) {
            stage_done_ = true;
            return Color::Red;
        }
        bool on_path = std::find(path_.begin(), path_.end(), e) != path_.end();
        return on_path ? Color::Green : Color::Red;
    }

    MonitorReport monitor(const Board& b) override {
        MonitorReport r{b.turn(), {}};
        if (!b.history().empty() && b.history().back().c == Color::Green) {
            auto green = b.edges_of(Color::Green);
            bool bad = girth_ ? cycle_of_length_at_most_exists(green, k_)
                              : cycle_of_length_exists(green, k_);
            r.checks.push_back({girth_ ? "green-girth-gt-k" : "green-ck-free", !bad,
                                bad ? "green cycle of forbidden length" : ""});
        }
        // reserved green-white cycle of the active stage; skipped on the
        // boundary turn where the guard itself was just colored
        if (have_stage_ && !stage_done_) {
            bool clean = b.color(guard_) != Color::Red;
            for (const auto& pe : path_)
                if (b.color(pe) == Color::Red) clean = false;
            r.checks.push_back({"reserved-cycle-no-red", clean, clean ? "" : edge_str(guard_)});
        }
        return r;
    }

private:
    void ensure_stage(Board& b) {
        if (!stage_done_ && have_stage_) return;
        guard_ = b.min_white_edge();
        std::vector<Vertex> excl{guard_.u, guard_.v};
        auto inner = b.fresh_vertices(k_ - 2, excl);
        path_.clear();
        Vertex prev = guard_.u;
        for (Vertex r : inner) {
            path_.push_back(make_edge(prev, r));
            prev = r;
        }
        path_.push_back(make_edge(prev, guard_.v));
        have_stage_ = true;
        stage_done_ = false;
    }

    int k_;
    bool girth_;
    bool have_stage_ = false;
    bool stage_done_ = false;
    Edge guard_{0, 1};
    std::vector<Edge> path_;
};

class ConnectedHider final : public HiderStrategy {
public:
    std::string id() const override { return "connected"; }
    std::optional<Property> default_property() const override {
        return Property{Property::Kind::Connected, 0};
    }

    Color respond(Board& b, Edge e) override {
        auto reach = increasing_reachable(b, e.v, e);
        return reach[static_cast<std::size_t>(e.v)] ? Color::Red : Color::Green;
    }

    MonitorReport monitor(const Board& b) override {
        MonitorReport r{b.turn(), {}};
        // Claim 1: a good path to every m
        auto reach = increasing_reachable(b, b.window() - 1, std::nullopt);
        auto bad = std::find(reach.begin(), reach.end(), false);
        r.checks.push_back({"good-path-to-every-vertex", bad == reach.end(),
                            bad == reach.end() ? ""
                                               : "no good path to " +
                                                     std::to_string(bad - reach.begin())});
        // Claim 2 (restated): every vertex has at most one green edge to a
        // smaller vertex, so the green graph is a forest
        bool down_ok = true;
        std::string down_witness;
        std::vector<int> down(static_cast<std::size_t>(b.window()), 0);
        for (const auto& m : b.history())
            if (m.c == Color::Green && ++down[m.e.v] > 1) {
                down_ok = false;
                down_witness = "vertex " + std::to_string(m.e.v);
            }
        r.checks.push_back({"green-down-degree-le-1", down_ok, down_witness});
        // Claim 3: no white edge inside a green component; only a green move
        // can create a violation
        if (!b.history().empty() && b.history().back().c == Color::Green) {
            auto green = b.edges_of(Color::Green);
            auto comps = components(green, {});
            bool ok = true;
            std::string witness;
            for (const auto& comp : comps) {
                for (std::size_t i = 0; i < comp.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < comp.size() && ok; ++j) {
                        Edge e = make_edge(comp[i], comp[j]);
                        if (b.is_white(e)) {
                            ok = false;
                            witness = edge_str(e);
                        }
                    }
            }
            r.checks.push_back({"no-white-edge-in-green-component", ok, witness});
        }
        return r;
    }
};

class DegreeHider final : public HiderStrategy {
public:
    explicit DegreeHider(int d) : d_(d) {
        if (d < 1) throw GameError("degree bound must be at least 1");
    }
    std::string id() const override { return "degree:" + std::to_string(d_); }
    std::optional<Property> default_property() const override {
        return Property{Property::Kind::MaxDegreeAtLeastD, d_};
    }

    Color respond(Board& b, Edge e) override {
        if (d_ == 1) return Color::Red;
        Vertex pivot = 0;
        while (b.degree(pivot, Color::Green) >= d_ - 1) ++pivot;
        if (e.u != pivot && e.v != pivot) return Color::Red;
        Vertex other = (e.u == pivot) ? e.v : e.u;
        return b.degree(other, Color::Green) < d_ - 1 ? Color::Green : Color::Red;
    }

    MonitorReport monitor(const Board& b) override {
        MonitorReport r{b.turn(), {}};
        bool ok = true;
        std::string witness;
        for (Vertex v = 0; v < b.window(); ++v)
            if (b.degree(v, Color::Green) > d_ - 1) {
                ok = false;
                witness = "vertex " + std::to_string(v);
                break;
            }
        r.checks.push_back({"max-green-degree-le-d-1", ok, witness});
        return r;
    }

private:
    int d_;
};

class DiameterHider final : public HiderStrategy {
public:
    explicit DiameterHider(int d) : d_(d) {
        if (d < 2) throw GameError("diameter bound must be at least 2");
    }
    std::string id() const override { return "diameter:" + std::to_string(d_); }
    std::optional<Property> default_property() const override {
        return Property{Property::Kind::DiameterAtMostD, d_};
    }

    Color respond(Board& b, Edge e) override {
        ensure_stage(b);
        if (e == guard_) {
            stage_done_ = true;
            return Color::Red;
        }
        Vertex x = guard_.u, y = guard_.v;
        auto z_pos = [&](Vertex v) -> int {
            auto it = std::find(zs_.begin(), zs_.end(), v);
            return it == zs_.end() ? -1 : static_cast<int>(it - zs_.begin());
        };
        auto in_A = [&](Vertex v) {
            return v != x && v != y && v != w_ && z_pos(v) < 0;
        };
        int zu = z_pos(e.u), zv = z_pos(e.v);
        // the edge y z0 and the chain z_j z_{j+1}
        if ((e == make_edge(y, zs_[0])) || (zu >= 0 && zv >= 0 && std::abs(zu - zv) == 1))
            return Color::Green;
        // x a and y a with a in A
        if ((e.u == x || e.u == y) && in_A(e.v)) return Color::Green;
        if ((e.v == x || e.v == y) && in_A(e.u)) return Color::Green;
        // b c with both in A + w
        if ((in_A(e.u) || e.u == w_) && (in_A(e.v) || e.v == w_)) return Color::Green;
        // z0 w
        if (e == make_edge(zs_[0], w_)) return Color::Green;
        return Color::Red;
    }

    MonitorReport monitor(const Board& b) override {
        MonitorReport r{b.turn(), {}};
        if (!have_stage_ || stage_done_) return r;  // boundary turn, new stage not yet bound
        // Claim 2: no green path of length <= d between x and the chain end
        auto green = b.edges_of(Color::Green);
        auto dist = shortest_path_len(green, guard_.u, zs_.back());
        bool c2 = !dist.has_value() || *dist > d_;
        r.checks.push_back({"no-short-green-x-to-zend", c2, c2 ? "" : "distance " +
                                std::to_string(*dist)});
        // Claim 1: green-white distance <= d for every window pair; only a
        // red move can break it
        if (!b.history().empty() && b.history().back().c == Color::Red) {
            bool c1 = true;
            std::string witness;
            int w = b.window();
            int words = (w + 63) / 64;
            std::vector<std::uint64_t> nonred(static_cast<std::size_t>(w * words), 0);
            auto set_bit = [&](int row, int col) {
                nonred[static_cast<std::size_t>(row * words + col / 64)] |= 1ull << (col % 64);
            };
            for (int u = 0; u < w; ++u)
                for (int v = 0; v < w; ++v)
                    if (u != v) set_bit(u, v);
            for (const auto& m : b.history())
                if (m.c == Color::Red) {
                    nonred[static_cast<std::size_t>(m.e.u * words + m.e.v / 64)] &=
                        ~(1ull << (m.e.v % 64));
                    nonred[static_cast<std::size_t>(m.e.v * words + m.e.u / 64)] &=
                        ~(1ull << (m.e.u % 64));
                }
            auto adjacent = [&](int u, int v) {
                return nonred[static_cast<std::size_t>(u * words + v / 64)] >> (v % 64) & 1u;
            };
            // distance-2 reach per vertex
            std::vector<std::uint64_t> two(nonred);
            for (int u = 0; u < w; ++u)
                for (int t = 0; t < w; ++t)
                    if (adjacent(u, t))
                        for (int c = 0; c < words; ++c)
                            two[static_cast<std::size_t>(u * words + c)] |=
                                nonred[static_cast<std::size_t>(t * words + c)];
            for (const auto& m : b.history()) {
                if (m.c != Color::Red || !c1) continue;
                int u = m.e.u, v = m.e.v;
                bool ok = false;
                if (d_ >= 2)
                    for (int c = 0; c < words && !ok; ++c)
                        ok = (nonred[static_cast<std::size_t>(u * words + c)] &
                              nonred[static_cast<std::size_t>(v * words + c)]) != 0;
                if (!ok && d_ >= 3)
                    for (int c = 0; c < words && !ok; ++c)
                        ok = (two[static_cast<std::size_t>(u * words + c)] &
                              nonred[static_cast<std::size_t>(v * words + c)]) != 0;
                if (!ok && d_ >= 4) {
                    auto sp = shortest_path_len_nonred(b, u, v);
                    ok = sp.has_value() && *sp <= d_;
                }
                if (!ok) {
                    c1 = false;
                    witness = edge_str(m.e);
                }
            }
            r.checks.push_back({"green-white-diameter-le-d", c1, witness});
        }
        return r;
    }

private:
    static std::optional<int> shortest_path_len_nonred(const Board& b, Vertex a, Vertex t) {
        std::vector<Edge> nonred;
        for (Vertex v = 1; v < b.window(); ++v)
            for (Vertex u = 0; u < v; ++u)
                if (b.color({u, v}) != Color::Red) nonred.push_back({u, v});
        return shortest_path_len(nonred, a, t);
    }

    void ensure_stage(Board& b) {
        if (have_stage_ && !stage_done_) return;
        guard_ = b.min_white_edge();
        std::vector<Vertex> excl{guard_.u, guard_.v};
        auto fresh = b.fresh_vertices(d_, excl);  // z_0..z_{d-2} and w
        zs_.assign(fresh.begin(), fresh.end() - 1);
        w_ = fresh.back();
        have_stage_ = true;
        stage_done_ = false;
    }

    int d_;
    bool have_stage_ = false;
    bool stage_done_ = false;
    Edge guard_{0, 1};
    std::vector<Vertex> zs_;
    Vertex w_ = -1;
};

class SensitiveHider final : public HiderStrategy {
public:
    SensitiveHider(std::function<bool(Edge)> witness, std::string name)
        : witness_(std::move(witness)), name_(std::move(name)) {}
    std::string id() const override { return "sensitive:" + name_; }

    Color respond(Board&, Edge e) override {
        return witness_(e) ? Color::Green : Color::Red;
    }

    MonitorReport monitor(const Board& b) override {
        MonitorReport r{b.turn(), {}};
        const Move& m = b.history().back();
        bool ok = (m.c == Color::Green) == witness_(m.e);
        r.checks.push_back({"green-iff-witness-edge", ok, ok ? "" : edge_str(m.e)});
        return r;
    }

private:
    std::function<bool(Edge)> witness_;
    std::string name_;
};

class CoinHider final : public HiderStrategy {
public:
    explicit CoinHider(std::uint64_t seed) : state_(seed * 2 + 1) {}
    std::string id() const override { return "random"; }
    Color respond(Board&, Edge) override {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        return (z & 1) ? Color::Green : Color::Red;
    }

private:
    std::uint64_t state_;
};

class ConstantHider final : public HiderStrategy {
public:
    explicit ConstantHider(Color c) : c_(c) {}
    std::string id() const override {
        return c_ == Color::Red ? "always-red" : "always-green";
    }
    Color respond(Board&, Edge) override { return c_; }

private:
    Color c_;
};

}  // namespace

std::unique_ptr<HiderStrategy> make_hider_k_cycle(int k) {
    return std::make_unique<KCycleHider>(k, false);
}
std::unique_ptr<HiderStrategy> make_hider_girth(int k) {
    return std::make_unique<KCycleHider>(k, true);
}
std::unique_ptr<HiderStrategy> make_hider_connected() {
    return std::make_unique<ConnectedHider>();
}
std::unique_ptr<HiderStrategy> make_hider_degree(int d) {
    return std::make_unique<DegreeHider>(d);
}
std::unique_ptr<HiderStrategy> make_hider_diameter(int d) {
    return std::make_unique<DiameterHider>(d);
}
std::unique_ptr<HiderStrategy> make_hider_sensitive(std::function<bool(Edge)> witness,
                                                    std::string witness_name) {
    return std::make_unique<SensitiveHider>(std::move(witness), std::move(witness_name));
}
std::unique_ptr<HiderStrategy> make_hider_sensitive_path() {
    return make_hider_sensitive([](Edge e) { return e.v - e.u == 1; }, "path");
}
std::unique_ptr<HiderStrategy> make_hider_random(std::uint64_t seed) {
    return std::make_unique<CoinHider>(seed);
}
std::unique_ptr<HiderStrategy> make_hider_always(Color c) {
    return std::make_unique<ConstantHider>(c);
}

std::unique_ptr<HiderStrategy> make_hider(const std::string& id) {
    auto colon = id.find(':');
    std::string head = id.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : id.substr(colon + 1);
    auto num = [&](int fallback) {
        return arg.empty() ? fallback : std::stoi(arg);
    };
    if (head == "k-cycle") return make_hider_k_cycle(num(3));
    if (head == "girth") return make_hider_girth(num(3));
    if (head == "connected") return make_hider_connected();
    if (head == "bipartite")
        return std::make_unique<BipartiteHider>(arg == "solved" ? BipartiteHider::TauSource::Solved
                                                                : BipartiteHider::TauSource::Hand);
    if (head == "degree") return make_hider_degree(num(2));
    if (head == "diameter") return make_hider_diameter(num(2));
    if (head == "sensitive") {
        if (arg.empty() || arg == "path") return make_hider_sensitive_path();
        throw GameError("unknown sensitivity witness: " + arg);
    }
    if (head == "s0") return s0::make_hider_s0(arg.empty() ? 0 : std::stoull(arg));
    if (head == "random") return make_hider_random(arg.empty() ? 0 : std::stoull(arg));
    if (head == "always-red") return make_hider_always(Color::Red);
    if (head == "always-green") return make_hider_always(Color::Green);
    throw GameError("unknown hider id: " + id);
}

}  // namespace evasion
