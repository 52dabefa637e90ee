#include "evasion/board.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace evasion {

const char* color_name(Color c) {
    switch (c) {
        case Color::White: return "white";
        case Color::Green: return "green";
        case Color::Red: return "red";
    }
    return "?";
}

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw GameError("edge endpoints must differ: " + std::to_string(a));
    if (a < 0 || b < 0) throw GameError("negative vertex id");
    return a < b ? Edge{a, b} : Edge{b, a};
}

EdgeIndex edge_index(Edge e) {
    return static_cast<EdgeIndex>(e.v) * (e.v - 1) / 2 + e.u;
}

Edge edge_at(EdgeIndex i) {
    // invert v(v-1)/2 + u with 0 <= u < v
    auto v = static_cast<Vertex>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(i))) / 2.0);
    while (static_cast<EdgeIndex>(v) * (v - 1) / 2 > i) --v;
    while (static_cast<EdgeIndex>(v + 1) * v / 2 <= i) ++v;
    auto u = static_cast<Vertex>(i - static_cast<EdgeIndex>(v) * (v - 1) / 2);
    return Edge{u, v};
}

std::string edge_str(Edge e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

Board::Board(int window_cap) : window_cap_(window_cap) {
    if (window_cap < 2) throw GameError("window cap must be at least 2");
}

const Color* Board::find_color(EdgeIndex i) const {
    auto it = std::lower_bound(colors_.begin(), colors_.end(), i,
                               [](const auto& p, EdgeIndex k) { return p.first < k; });
    if (it != colors_.end() && it->first == i) return &it->second;
    return nullptr;
}

Color Board::color(Edge e) const {
    const Color* c = find_color(edge_index(e));
    return c ? *c : Color::White;
}

void Board::grow_to(Vertex v) {
    if (v >= window_cap_)
        throw WindowCapExceeded("vertex " + std::to_string(v) + " beyond window cap " +
                                std::to_string(window_cap_));
    if (v >= window_) {
        window_ = v + 1;
        adj_.resize(window_);
        degs_.resize(window_, {0, 0});
    }
}

void Board::play(Edge e, Color c) {
    if (c == Color::White) throw WhiteForbidden("cannot color an edge white");
    EdgeIndex idx = edge_index(e);
    if (find_color(idx)) throw EdgeAlreadyColored("edge " + edge_str(e) + " already colored");
    grow_to(e.v);
    auto it = std::lower_bound(colors_.begin(), colors_.end(), idx,
                               [](const auto& p, EdgeIndex k) { return p.first < k; });
    colors_.insert(it, {idx, c});
    history_.push_back({turn(), e, c});
    adj_[e.u].emplace_back(e.v, c);
    adj_[e.v].emplace_back(e.u, c);
    auto bump = [&](Vertex x) {
        if (c == Color::Green)
            ++degs_[x].first;
        else
            ++degs_[x].second;
    };
    bump(e.u);
    bump(e.v);
}

int Board::degree(Vertex v, Color c) const {
    if (v < 0 || v >= window_) return 0;
    switch (c) {
        case Color::Green: return degs_[v].first;
        case Color::Red: return degs_[v].second;
        case Color::White: return window_ - 1 - degs_[v].first - degs_[v].second;
    }
    return 0;
}

int Board::colored_degree(Vertex v) const {
    if (v < 0 || v >= window_) return 0;
    return degs_[v].first + degs_[v].second;
}

std::vector<Vertex> Board::fresh_vertices(int n) {
    return fresh_vertices(n, {});
}

std::vector<Vertex> Board::fresh_vertices(int n, std::span<const Vertex> exclude) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (Vertex v = 0; static_cast<int>(out.size()) < n; ++v) {
        if (v >= window_cap_)
            throw WindowCapExceeded("no fresh vertex below cap " + std::to_string(window_cap_));
        if (std::find(exclude.begin(), exclude.end(), v) != exclude.end()) continue;
        if (colored_degree(v) == 0) {
            grow_to(v);
            out.push_back(v);
        }
    }
    return out;
}

Edge Board::min_white_edge() const {
    // colors_ is sorted by index, so scan for the first gap.
    EdgeIndex i = 0;
    for (const auto& [idx, c] : colors_) {
        if (idx != i) break;
        ++i;
    }
    return edge_at(i);
}

const std::vector<std::pair<Vertex, Color>>& Board::colored_at(Vertex v) const {
    static const std::vector<std::pair<Vertex, Color>> empty;
    if (v < 0 || v >= window_) return empty;
    return adj_[v];
}

std::vector<Edge> Board::edges_of(Color c) const {
    std::vector<Edge> out;
    for (const auto& m : history_)
        if (m.c == c) out.push_back(m.e);
    return out;
}

bool Board::operator==(const Board& o) const {
    return window_cap_ == o.window_cap_ && window_ == o.window_ && history_ == o.history_ &&
           colors_ == o.colors_;
}

Transcript to_transcript(const Board& b) {
    return Transcript{b.window_cap(), b.history(), b.window()};
}

Board replay_board(const Transcript& t) {
    Board b(t.window_cap);
    for (const auto& m : t.moves) {
        if (m.turn != b.turn())
            throw MalformedTranscript("turn " + std::to_string(m.turn) + " out of order");
        if (m.c == Color::White) throw MalformedTranscript("white move in transcript");
        if (!b.is_white(m.e))
            throw MalformedTranscript("duplicate edge " + edge_str(m.e) + " in transcript");
        try {
            b.play(m.e, m.c);
        } catch (const GameError& err) {
            throw MalformedTranscript(err.what());
        }
    }
    if (t.final_window < b.window())
        throw MalformedTranscript("final_window smaller than moves require");
    if (t.final_window > 0) b.grow_to(t.final_window - 1);
    return b;
}

std::string transcript_to_json(const Transcript& t) {
    nlohmann::ordered_json j;
    j["window_cap"] = t.window_cap;
    j["moves"] = nlohmann::ordered_json::array();
    for (const auto& m : t.moves) {
        nlohmann::ordered_json jm;
        jm["t"] = m.turn;
        jm["e"] = {m.e.u, m.e.v};
        jm["c"] = color_name(m.c);
        j["moves"].push_back(std::move(jm));
    }
    j["final_window"] = t.final_window;
    return j.dump();
}

Transcript transcript_from_json(const std::string& text) {
    Transcript t;
    try {
        auto j = nlohmann::ordered_json::parse(text);
        t.window_cap = j.at("window_cap").get<int>();
        for (const auto& jm : j.at("moves")) {
            Move m;
            m.turn = jm.at("t").get<int>();
            auto e = jm.at("e");
            m.e = make_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
            std::string c = jm.at("c").get<std::string>();
            if (c == "green")
                m.c = Color::Green;
            else if (c == "red")
                m.c = Color::Red;
            else
                throw MalformedTranscript("bad color: " + c);
            t.moves.push_back(m);
        }
        t.final_window = j.at("final_window").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw MalformedTranscript(std::string("bad transcript json: ") + e.what());
    }
    return t;
}

}  // namespace evasion
