#include "doctest.h"
#include "evasion/board.hpp"

using namespace evasion;

TEST_CASE("edge enumeration closed form") {
    CHECK(edge_index({0, 1}) == 0);
    CHECK(edge_index({1, 2}) == 2);
    CHECK(edge_index({0, 4}) == 6);
    CHECK(edge_at(0) == Edge{0, 1});
    CHECK(edge_at(5) == Edge{2, 3});
    CHECK(edge_at(6) == Edge{0, 4});
}

TEST_CASE("edge enumeration round trip over a million indices") {
    for (EdgeIndex i = 0; i < 1000000; ++i) {
        Edge e = edge_at(i);
        REQUIRE(e.u < e.v);
        REQUIRE(edge_index(e) == i);
    }
}

TEST_CASE("make_edge canonicalizes and rejects loops") {
    CHECK(make_edge(5, 2) == Edge{2, 5});
    CHECK_THROWS_AS(make_edge(3, 3), GameError);
}

TEST_CASE("play basics and error paths") {
    Board b;
    b.play({0, 1}, Color::Green);
    CHECK(b.turn() == 1);
    CHECK(b.color({0, 1}) == Color::Green);
    CHECK(b.edges_of(Color::Green).size() == 1);
    CHECK_THROWS_AS(b.play({0, 1}, Color::Red), EdgeAlreadyColored);
    CHECK_THROWS_AS(b.play({0, 2}, Color::White), WhiteForbidden);
}

TEST_CASE("degree counts per color") {
    Board b;
    b.play({0, 1}, Color::Green);
    b.play({0, 2}, Color::Green);
    CHECK(b.degree(0, Color::Green) == 2);
    CHECK(b.degree(5, Color::Red) == 0);

    Board c;
    c.play({0, 3}, Color::Red);  // window grows to 4
    CHECK(c.window() == 4);
    CHECK(c.degree(3, Color::White) == 2);
}

TEST_CASE("degree sums to window minus one") {
    Board b;
    b.play({0, 1}, Color::Green);
    b.play({2, 4}, Color::Red);
    b.play({1, 4}, Color::Green);
    for (Vertex v = 0; v < b.window(); ++v)
        CHECK(b.degree(v, Color::Green) + b.degree(v, Color::Red) + b.degree(v, Color::White) ==
              b.window() - 1);
}

TEST_CASE("fresh vertices") {
    Board b;
    CHECK(b.fresh_vertices(2) == std::vector<Vertex>{0, 1});
    Board c;
    c.play({0, 1}, Color::Red);
    CHECK(c.fresh_vertices(1) == std::vector<Vertex>{2});

    Board tiny(4);
    tiny.play({0, 1}, Color::Red);
    tiny.play({2, 3}, Color::Red);
    CHECK_THROWS_AS(tiny.fresh_vertices(1), WindowCapExceeded);
}

TEST_CASE("min white edge") {
    Board b;
    CHECK(b.min_white_edge() == Edge{0, 1});
    b.play({0, 1}, Color::Red);
    CHECK(b.min_white_edge() == Edge{0, 2});
    b.play({0, 2}, Color::Red);
    b.play({1, 2}, Color::Green);
    CHECK(b.min_white_edge() == Edge{0, 3});
}

TEST_CASE("color conservation") {
    Board b;
    b.play({0, 1}, Color::Green);
    b.play({0, 2}, Color::Red);
    b.play({3, 5}, Color::Green);
    CHECK(b.edges_of(Color::Green).size() + b.edges_of(Color::Red).size() == 3);
    CHECK(b.history().size() == 3);
}

TEST_CASE("transcript json round trip is byte stable") {
    Board b(128);
    b.play({0, 1}, Color::Green);
    b.play({2, 3}, Color::Red);
    b.grow_to(9);
    Transcript t = to_transcript(b);
    std::string s1 = transcript_to_json(t);
    std::string s2 = transcript_to_json(transcript_from_json(s1));
    CHECK(s1 == s2);
    CHECK(s1.find("\"e\":[0,1]") != std::string::npos);
    CHECK(s1.find("\"final_window\":10") != std::string::npos);
}

TEST_CASE("replay reproduces the board field by field") {
    Board b(256);
    b.play({0, 1}, Color::Green);
    b.play({1, 2}, Color::Red);
    b.play({0, 5}, Color::Green);
    b.grow_to(11);
    Board r = replay_board(to_transcript(b));
    CHECK(r == b);
}

TEST_CASE("malformed transcripts are rejected") {
    Transcript t;
    t.moves.push_back({0, {0, 1}, Color::Green});
    t.moves.push_back({1, {0, 1}, Color::Red});
    t.final_window = 2;
    CHECK_THROWS_AS(replay_board(t), MalformedTranscript);

    Transcript empty;
    Board b = replay_board(empty);
    CHECK(b.turn() == 0);
}
