#include "evasion/seeker.hpp"

#include <algorithm>
#include <cmath>

#include "evasion/graphs.hpp"

namespace evasion {

namespace {

std::uint64_t mix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class OneWhiteSeeker final : public SeekerStrategy {
public:
    explicit OneWhiteSeeker(Edge keep) : keep_(keep) {}
    std::string id() const override {
        return "one-white:" + std::to_string(keep_.u) + "-" + std::to_string(keep_.v);
    }
    Edge next(Board& b) override {
        for (;; ++cursor_) {
            Edge e = edge_at(cursor_);
            if (e == keep_ || !b.is_white(e)) continue;
            ++cursor_;
            return e;
        }
    }

private:
    Edge keep_;
    EdgeIndex cursor_ = 0;
};

class RandomSeeker final : public SeekerStrategy {
public:
    explicit RandomSeeker(std::uint64_t seed) : state_(seed * 2 + 0x1234567) {}
    std::string id() const override { return "random"; }
    Edge next(Board& b) override {
        int t = b.turn();
        int w = std::max(6, static_cast<int>(std::ceil(std::sqrt(2.0 * (t + 1)))) + 2);
        EdgeIndex total = static_cast<EdgeIndex>(w) * (w - 1) / 2;
        int whites = 0;
        for (EdgeIndex i = 0; i < total; ++i)
            if (b.is_white(edge_at(i))) ++whites;
        std::uint64_t pick = mix64(state_) % static_cast<std::uint64_t>(whites);
        for (EdgeIndex i = 0; i < total; ++i) {
            Edge e = edge_at(i);
            if (!b.is_white(e)) continue;
            if (pick == 0) return e;
            --pick;
        }
        throw GameError("random seeker: no white edge in soft window");
    }

private:
    std::uint64_t state_;
};

class ScriptSeeker final : public SeekerStrategy {
public:
    explicit ScriptSeeker(std::vector<Edge> moves) : moves_(std::move(moves)) {}
    std::string id() const override { return "script"; }
    Edge next(Board& b) override {
        if (cursor_ >= moves_.size()) throw GameError("script exhausted");
        Edge e = moves_[cursor_++];
        if (!b.is_white(e)) throw ScriptEdgeNotWhite("scripted edge " + edge_str(e));
        return e;
    }
    bool finished() const override { return cursor_ >= moves_.size(); }

private:
    std::vector<Edge> moves_;
    std::size_t cursor_ = 0;
};

std::vector<Vertex> green_covered_vertices(const Board& b) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < b.window(); ++v)
        if (b.degree(v, Color::Green) > 0) out.push_back(v);
    return out;
}

}  // namespace

std::unique_ptr<SeekerStrategy> make_seeker_one_white(Edge e) {
    return std::make_unique<OneWhiteSeeker>(e);
}
std::unique_ptr<SeekerStrategy> make_seeker_random(std::uint64_t seed) {
    return std::make_unique<RandomSeeker>(seed);
}
std::unique_ptr<SeekerStrategy> make_seeker_script(std::vector<Edge> moves) {
    return std::make_unique<ScriptSeeker>(std::move(moves));
}

// ---- independent edges ----------------------------------------------------

struct IndepSeeker::Impl {
    int k;
    enum class Phase { ForceFirst, Loop, Claim1Force, Case2, Case2c, Done } phase =
        Phase::ForceFirst;
    Edge withheld{0, 2};                 // e1 stays white while forcing the first green
    Edge claim1_withheld{0, 1};
    EdgeIndex cursor = 0;
    Vertex x = -1, y = -1;               // tracked degree-1 vertex and its green mate
    std::vector<Vertex> core_at_entry;   // green-covered set when a forcing run began
    std::vector<Edge> irrelevant_set;
    SeekerStrategy::Expect expect = SeekerStrategy::Expect::Free;
    ForcingVerdict verdict;
    bool done = false;
    bool win = false;
    std::vector<int> round_greens;       // green count when each extension round opens

    explicit Impl(int kk) : k(kk) {
        if (k < 2) throw GameError("independent-edges seeker needs k >= 2");
    }

    static bool in(const std::vector<Vertex>& set, Vertex v) {
        return std::find(set.begin(), set.end(), v) != set.end();
    }

    void enter_trap(const std::string& trap, const std::string& witness) {
        verdict = {ForcingVerdict::Kind::TrapEntered, trap, witness};
        done = true;
    }

    // loop head: pick the next move given the tracked degree-1 vertex
    Edge loop_move(Board& b) {
        auto core = green_covered_vertices(b);
        // case split: is every x-a edge with a in core minus y red?
        bool case1 = true;
        for (Vertex a : core)
            if (a != x && a != y && b.color(make_edge(x, a)) != Color::Red) case1 = false;
        if (case1) {
            // claim-1 forcing through a white edge covering y
            for (Vertex a = 0;; ++a) {
                if (a == y) continue;
                if (b.is_white(make_edge(y, a))) {
                    claim1_withheld = make_edge(y, a);
                    break;
                }
            }
            core_at_entry = core;
            cursor = 0;
            phase = Phase::Claim1Force;
            expect = SeekerStrategy::Expect::Free;
            return scan(b, claim1_withheld);
        }
        phase = Phase::Case2;
        return case2_move(b);
    }

    // inside whites first, then relevant x-a edges, then the outside sweep
    Edge case2_move(Board& b) {
        auto core = green_covered_vertices(b);
        for (Vertex v : core)
            for (Vertex u : core) {
                if (u >= v || u == x || v == x) continue;
                Edge e = make_edge(u, v);
                if (b.is_white(e)) {
                    expect = SeekerStrategy::Expect::Free;
                    return e;
                }
            }
        auto green = b.edges_of(Color::Green);
        std::vector<Edge> irrelevant;
        for (Vertex a : core) {
            if (a == x || a == y) continue;
            Edge e = make_edge(x, a);
            if (!b.is_white(e)) continue;
            green.push_back(e);
            bool relevant = has_matching_of_size(green, k);
            green.pop_back();
            if (relevant) {
                expect = SeekerStrategy::Expect::Red;
                return e;
            }
            irrelevant.push_back(e);
        }
        if (irrelevant.empty()) {
            // all x-a edges settled red: continue as in case 1
            return loop_move(b);
        }
        irrelevant_set = irrelevant;
        core_at_entry = core;
        cursor = 0;
        phase = Phase::Case2c;
        expect = SeekerStrategy::Expect::Free;
        return outside_scan(b);
    }

    Edge scan(Board& b, Edge skip) {
        for (;; ++cursor) {
            Edge e = edge_at(cursor);
            if (e == skip || !b.is_white(e)) continue;
            ++cursor;
            return e;
        }
    }

    Edge outside_scan(Board& b) {
        for (;; ++cursor) {
            Edge e = edge_at(cursor);
            if (!b.is_white(e)) continue;
            if (in(core_at_entry, e.u) && in(core_at_entry, e.v)) continue;
            ++cursor;
            return e;
        }
    }

    Edge next(Board& b) {
        switch (phase) {
            case Phase::ForceFirst:
                expect = SeekerStrategy::Expect::Free;
                return scan(b, withheld);
            case Phase::Loop:
                return loop_move(b);
            case Phase::Claim1Force:
                expect = SeekerStrategy::Expect::Free;
                return scan(b, claim1_withheld);
            case Phase::Case2:
                return case2_move(b);
            case Phase::Case2c:
                expect = SeekerStrategy::Expect::Free;
                return outside_scan(b);
            case Phase::Done:
                break;
        }
        throw GameError("independent-edges seeker already finished");
    }

    void observe(const Board& b, Edge e, Color reply) {
        if (done) return;
        if (reply == Color::Green) {
            auto green = b.edges_of(Color::Green);
            // degree trap
            for (Vertex v : {e.u, e.v})
                if (b.degree(v, Color::Green) >= 2 * k - 1) {
                    enter_trap("degree", "vertex " + std::to_string(v) + " reached green degree " +
                                             std::to_string(b.degree(v, Color::Green)));
                    return;
                }
            // created matching = the structural win
            if (has_matching_of_size(green, k)) {
                if (expect == SeekerStrategy::Expect::Red) {
                    enter_trap("relevant-edge-greened", edge_str(e));
                } else {
                    enter_trap("green-matching", "k independent green edges exist");
                }
                win = true;
                return;
            }
            if (expect == SeekerStrategy::Expect::Red) {
                // a relevant edge was greened yet no k-matching appeared
                verdict = {ForcingVerdict::Kind::Refuted,
                           "relevance", "green reply on " + edge_str(e) + " made no k-matching"};
                done = true;
                return;
            }
            if (static_cast<int>(green.size()) >= 4 * k * k) {
                // the counting fallback: this many greens under the degree cap
                // must already contain the matching
                verdict = {ForcingVerdict::Kind::Refuted, "matching-lemma",
                           "4k^2 green edges, degree cap held, no k-matching"};
                done = true;
                return;
            }
        }
        switch (phase) {
            case Phase::ForceFirst:
                if (reply == Color::Green) {
                    x = e.u;
                    y = e.v;
                    round_greens.push_back(1);
                    phase = Phase::Loop;
                }
                break;
            case Phase::Claim1Force:
            case Phase::Case2c:
                if (reply == Color::Green && (!in(core_at_entry, e.u) || !in(core_at_entry, e.v))) {
                    x = !in(core_at_entry, e.u) ? e.u : e.v;
                    y = (x == e.u) ? e.v : e.u;
                    round_greens.push_back(static_cast<int>(b.edges_of(Color::Green).size()));
                    phase = Phase::Loop;
                }
                break;
            case Phase::Loop:
            case Phase::Case2:
            case Phase::Done:
                break;
        }
    }

    MonitorReport monitor(const Board& b) {
        MonitorReport r{b.turn(), {}};
        if (verdict.kind == ForcingVerdict::Kind::OnTrack) {
            bool cap_ok = true;
            for (Vertex v = 0; v < b.window(); ++v)
                if (b.degree(v, Color::Green) > 2 * k - 2) cap_ok = false;
            r.checks.push_back({"green-degree-cap", cap_ok, ""});
            bool rounds_ok = true;
            for (std::size_t i = 1; i < round_greens.size(); ++i)
                if (round_greens[i] <= round_greens[i - 1]) rounds_ok = false;
            r.checks.push_back({"green-count-grows-per-round", rounds_ok, ""});
        }
        return r;
    }
};

IndepSeeker::IndepSeeker(int k) : impl_(std::make_unique<Impl>(k)) {}
IndepSeeker::~IndepSeeker() = default;
std::string IndepSeeker::id() const { return "indep:" + std::to_string(impl_->k); }
Edge IndepSeeker::next(Board& b) { return impl_->next(b); }
void IndepSeeker::observe(const Board& b, Edge e, Color reply) { impl_->observe(b, e, reply); }
SeekerStrategy::Expect IndepSeeker::expectation() const { return impl_->expect; }
bool IndepSeeker::finished() const { return impl_->done; }
ForcingVerdict IndepSeeker::verdict() const { return impl_->verdict; }
MonitorReport IndepSeeker::monitor(const Board& b) { return impl_->monitor(b); }
bool IndepSeeker::win_certified() const { return impl_->win; }
const std::vector<int>& IndepSeeker::round_green_counts() const { return impl_->round_greens; }

// ---- no isolated vertex ---------------------------------------------------

struct NoIsolatedSeeker::Impl {
    enum class Phase { Opening, StarRows, GuardRow, Recursive, Done } phase = Phase::Opening;
    int m = -1;                      // other endpoint of the first green edge
    Vertex yv = -1, zv = -1;         // the guard vertex pair; zv stays untouched
    int frontier = 0;                // recursion counter k
    int row_i = 1, row_j = 2;        // star row cursors
    std::size_t queue_pos = 0;
    std::vector<Edge> queue;         // planned moves of the current block
    std::vector<SeekerStrategy::Expect> queue_expect;
    SeekerStrategy::Expect expect = SeekerStrategy::Expect::Free;
    ForcingVerdict verdict;

    // label -> vertex after the post-star relabeling
    Vertex xv(int label) const {
        if (label == 0) return m;
        if (label < m) return label;
        if (label == m) return 0;
        return m + 2 + (label - m);
    }

    void enter_trap(const std::string& trap, const std::string& witness) {
        verdict = {ForcingVerdict::Kind::TrapEntered, trap, witness};
        phase = Phase::Done;
    }

    void plan_star_rows() {
        queue.clear();
        queue_expect.clear();
        for (int i = 1; i < m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                queue.push_back(make_edge(i, j));
                queue_expect.push_back(j == m ? SeekerStrategy::Expect::Green
                                              : SeekerStrategy::Expect::Red);
            }
        queue_pos = 0;
    }

    void plan_guard_row() {
        queue.clear();
        queue_expect.clear();
        queue.push_back(make_edge(yv, zv));
        queue_expect.push_back(SeekerStrategy::Expect::Red);
        queue.push_back(make_edge(yv, xv(0)));
        queue_expect.push_back(SeekerStrategy::Expect::Red);
        for (int j = 1; j < m; ++j) {
            queue.push_back(make_edge(yv, xv(j)));
            queue_expect.push_back(SeekerStrategy::Expect::Red);
        }
        queue_pos = 0;
    }

    void plan_recursive_block() {
        queue.clear();
        queue_expect.clear();
        Vertex nv = xv(m + frontier + 1);
        for (int j = m + frontier; j >= 0; --j) {
            queue.push_back(make_edge(nv, xv(j)));
            queue_expect.push_back(j == 0 ? SeekerStrategy::Expect::Green
                                          : SeekerStrategy::Expect::Red);
        }
        queue.push_back(make_edge(yv, xv(m + frontier)));
        queue_expect.push_back(SeekerStrategy::Expect::Red);
        queue_pos = 0;
    }

    Edge next(Board& b) {
        switch (phase) {
            case Phase::Opening: {
                expect = SeekerStrategy::Expect::Free;
                for (Vertex t = 1;; ++t) {
                    Edge e = make_edge(0, t);
                    if (b.is_white(e)) return e;
                }
            }
            case Phase::StarRows:
            case Phase::GuardRow:
            case Phase::Recursive: {
                if (queue_pos >= queue.size()) {
                    if (phase == Phase::StarRows) {
                        auto fresh = b.fresh_vertices(2);
                        yv = fresh[0];
                        zv = fresh[1];
                        plan_guard_row();
                        phase = Phase::GuardRow;
                    } else if (phase == Phase::GuardRow) {
                        frontier = 0;
                        plan_recursive_block();
                        phase = Phase::Recursive;
                    } else {
                        ++frontier;
                        plan_recursive_block();
                    }
                }
                expect = queue_expect[queue_pos];
                return queue[queue_pos];
            }
            case Phase::Done:
                break;
        }
        throw GameError("no-isolated seeker already finished");
    }

    // observation: a white edge joins two green-covered vertices
    std::optional<Edge> observation_witness(const Board& b) const {
        auto cov = green_covered_vertices(b);
        for (std::size_t i = 0; i < cov.size(); ++i)
            for (std::size_t j = i + 1; j < cov.size(); ++j) {
                Edge e = make_edge(cov[i], cov[j]);
                if (b.is_white(e)) return e;
            }
        return std::nullopt;
    }

    // claim preconditions (A)+(B) for vertex xx
    bool claim_holds(const Board& b, Vertex xx) const {
        auto cov = green_covered_vertices(b);
        if (in(cov, xx)) return false;
        for (Vertex a : cov)
            if (b.color(make_edge(xx, a)) != Color::Red) return false;  // (A)
        for (Vertex v = 0; v < b.window(); ++v) {                       // (B)
            if (v == xx || in(cov, v)) continue;
            bool has_white = false;
            for (Vertex a : cov)
                if (b.is_white(make_edge(v, a))) has_white = true;
            if (!has_white && !cov.empty()) return false;
        }
        return true;
    }

    static bool in(const std::vector<Vertex>& set, Vertex v) {
        return std::find(set.begin(), set.end(), v) != set.end();
    }

    void observe(const Board& b, Edge e, Color reply) {
        if (phase == Phase::Done) return;
        if (phase == Phase::Opening) {
            if (reply == Color::Green) {
                m = e.v;  // red endpoints were 1..m-1, the green one is m
                plan_star_rows();  // empty when m == 1
                phase = Phase::StarRows;
            }
            return;
        }
        SeekerStrategy::Expect exp = queue_expect[queue_pos];
        ++queue_pos;
        bool violated = (exp == SeekerStrategy::Expect::Red && reply == Color::Green) ||
                        (exp == SeekerStrategy::Expect::Green && reply == Color::Red);
        if (!violated) return;
        if (exp == SeekerStrategy::Expect::Red) {
            auto w = observation_witness(b);
            if (w) {
                enter_trap("observation", "white edge " + edge_str(*w) +
                                              " joins two green-covered vertices");
            } else {
                verdict = {ForcingVerdict::Kind::Refuted, "observation",
                           "unforced green on " + edge_str(e)};
                phase = Phase::Done;
            }
        } else {
            // the claim applies to the endpoint still outside the green set
            Vertex xx = b.degree(e.u, Color::Green) == 0 ? e.u : e.v;
            if (claim_holds(b, xx))
                enter_trap("claim", "vertex " + std::to_string(xx) + " is red-locked");
            else {
                verdict = {ForcingVerdict::Kind::Refuted, "claim",
                           "red reply on " + edge_str(e) + " without the claim firing"};
                phase = Phase::Done;
            }
        }
    }

    MonitorReport monitor(const Board& b) {
        MonitorReport r{b.turn(), {}};
        if (zv >= 0) {
            bool untouched = b.colored_degree(zv) == 0;
            r.checks.push_back({"reserved-vertex-untouched", untouched,
                                untouched ? "" : "vertex " + std::to_string(zv)});
        }
        if (verdict.kind == ForcingVerdict::Kind::OnTrack && phase == Phase::Recursive) {
            // green edges form exactly the star at the relabeled center
            bool star_ok = true;
            Vertex center = xv(0);
            for (const auto& mv : b.history()) {
                if (mv.c != Color::Green) continue;
                if (mv.e.u != center && mv.e.v != center) star_ok = false;
            }
            if (yv >= 0 && b.degree(yv, Color::Green) > 0) star_ok = false;
            r.checks.push_back({"green-star-shape", star_ok, ""});
        }
        return r;
    }
};

NoIsolatedSeeker::NoIsolatedSeeker() : impl_(std::make_unique<Impl>()) {}
NoIsolatedSeeker::~NoIsolatedSeeker() = default;
std::string NoIsolatedSeeker::id() const { return "no-isolated"; }
Edge NoIsolatedSeeker::next(Board& b) { return impl_->next(b); }
void NoIsolatedSeeker::observe(const Board& b, Edge e, Color reply) {
    impl_->observe(b, e, reply);
}
SeekerStrategy::Expect NoIsolatedSeeker::expectation() const { return impl_->expect; }
ForcingVerdict NoIsolatedSeeker::verdict() const { return impl_->verdict; }
MonitorReport NoIsolatedSeeker::monitor(const Board& b) { return impl_->monitor(b); }
Vertex NoIsolatedSeeker::reserved_vertex() const { return impl_->zv; }
Vertex NoIsolatedSeeker::star_center() const {
    return impl_->m < 0 ? -1 : impl_->xv(0);
}

// ---- compliant hider -------------------------------------------------------

CompliantHider::CompliantHider(const SeekerStrategy* seeker, std::uint64_t seed, int green_percent)
    : seeker_(seeker), state_(seed * 2 + 99), green_percent_(green_percent) {}

Color CompliantHider::respond(Board&, Edge) {
    switch (seeker_->expectation()) {
        case SeekerStrategy::Expect::Green: return Color::Green;
        case SeekerStrategy::Expect::Red: return Color::Red;
        case SeekerStrategy::Expect::Free: break;
    }
    return (mix64(state_) % 100 < static_cast<std::uint64_t>(green_percent_)) ? Color::Green
                                                                              : Color::Red;
}

std::unique_ptr<SeekerStrategy> make_seeker(const std::string& id) {
    auto colon = id.find(':');
    std::string head = id.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : id.substr(colon + 1);
    if (head == "indep") return std::make_unique<IndepSeeker>(arg.empty() ? 2 : std::stoi(arg));
    if (head == "no-isolated") return std::make_unique<NoIsolatedSeeker>();
    if (head == "one-white") {
        auto dash = arg.find('-');
        if (dash == std::string::npos) throw GameError("one-white needs U-V");
        return make_seeker_one_white(
            make_edge(std::stoi(arg.substr(0, dash)), std::stoi(arg.substr(dash + 1))));
    }
    if (head == "random") return make_seeker_random(arg.empty() ? 0 : std::stoull(arg));
    throw GameError("unknown seeker id: " + id);
}

}  // namespace evasion
