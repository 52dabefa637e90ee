#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace evasion {

using Vertex = int;
using EdgeIndex = long long;

struct GameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EdgeAlreadyColored : GameError { using GameError::GameError; };
struct WhiteForbidden : GameError { using GameError::GameError; };
struct WindowCapExceeded : GameError { using GameError::GameError; };
struct NoWhiteEdge : GameError { using GameError::GameError; };
struct UniverseTooLarge : GameError { using GameError::GameError; };
struct ScriptEdgeNotWhite : GameError { using GameError::GameError; };
struct MalformedTranscript : GameError { using GameError::GameError; };
struct HorizonExhausted : GameError { using GameError::GameError; };
struct UnsupportedSemantics : GameError { using GameError::GameError; };

enum class Color : std::uint8_t { White = 0, Green = 1, Red = 2 };

const char* color_name(Color c);

/// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 1;
    auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Vertex a, Vertex b);

// Enumeration of all pairs in (max,min)-lex order: index {u,v} = v(v-1)/2 + u.
EdgeIndex edge_index(Edge e);
Edge edge_at(EdgeIndex i);

std::string edge_str(Edge e);

struct Move {
    int turn = 0;
    Edge e;
    Color c = Color::Green;
    bool operator==(const Move&) const = default;
};

/// A game position: partial 3-coloring of the complete graph on an initial
/// segment of the naturals. Edges touching vertices at or beyond the current
/// window, and edges never played, are white. The window grows on demand up
/// to a hard cap.
class Board {
public:
    static constexpr int kDefaultWindowCap = 4096;

    explicit Board(int window_cap = kDefaultWindowCap);

    int window() const { return window_; }
    int window_cap() const { return window_cap_; }
    int turn() const { return static_cast<int>(history_.size()); }

    Color color(Edge e) const;
    bool is_white(Edge e) const { return color(e) == Color::White; }

    // Colors a white edge, appending to history. Grows the window to cover
    // both endpoints. Throws EdgeAlreadyColored / WhiteForbidden /
    // WindowCapExceeded.
    void play(Edge e, Color c);

    // For White, counts white edges from v to other window vertices only.
    int degree(Vertex v, Color c) const;
    int colored_degree(Vertex v) const;

    // Ensures window > v.
    void grow_to(Vertex v);

    // The n least-indexed vertices incident to no colored edge; grows the
    // window as needed. Throws WindowCapExceeded.
    std::vector<Vertex> fresh_vertices(int n);
    std::vector<Vertex> fresh_vertices(int n, std::span<const Vertex> exclude);

    // Least-indexed white edge; total because the white tail is infinite.
    Edge min_white_edge() const;

    const std::vector<Move>& history() const { return history_; }
    const std::vector<std::pair<Vertex, Color>>& colored_at(Vertex v) const;
    std::vector<Edge> edges_of(Color c) const;

    bool operator==(const Board& o) const;

private:
    int window_cap_;
    int window_ = 0;
    std::vector<Move> history_;
    std::vector<std::pair<EdgeIndex, Color>> colors_;  // sorted by index
    std::vector<std::vector<std::pair<Vertex, Color>>> adj_;
    std::vector<std::pair<int, int>> degs_;  // (green, red) per vertex

    const Color* find_color(EdgeIndex i) const;
};

struct Transcript {
    int window_cap = Board::kDefaultWindowCap;
    std::vector<Move> moves;
    int final_window = 0;
    bool operator==(const Transcript&) const = default;
};

Transcript to_transcript(const Board& b);
Board replay_board(const Transcript& t);  // throws MalformedTranscript

std::string transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const std::string& text);

}  // namespace evasion
