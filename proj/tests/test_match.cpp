#include "doctest.h"
#include "evasion/match.hpp"

using namespace evasion;

TEST_CASE("identical configs give byte-identical transcripts") {
    MatchConfig cfg;
    cfg.turns = 300;
    auto s1 = make_seeker_random(1234);
    auto h1 = make_hider_connected();
    auto r1 = run_match(*s1, *h1, cfg);
    auto s2 = make_seeker_random(1234);
    auto h2 = make_hider_connected();
    auto r2 = run_match(*s2, *h2, cfg);
    CHECK(transcript_to_json(r1.transcript) == transcript_to_json(r2.transcript));
}

TEST_CASE("disabling monitors never changes the transcript") {
    MatchConfig with;
    with.turns = 250;
    MatchConfig without = with;
    without.monitors = false;
    auto s1 = make_seeker_random(9);
    auto h1 = make_hider("bipartite");
    auto r1 = run_match(*s1, *h1, with);
    auto s2 = make_seeker_random(9);
    auto h2 = make_hider("bipartite");
    auto r2 = run_match(*s2, *h2, without);
    CHECK(transcript_to_json(r1.transcript) == transcript_to_json(r2.transcript));
}

TEST_CASE("replay reproduces the verdict data") {
    MatchConfig cfg;
    cfg.turns = 400;
    auto s = make_seeker_random(77);
    auto h = make_hider("k-cycle:4");
    auto r = run_match(*s, *h, cfg);
    CHECK(r.clean());
    auto rep = replay(r.transcript, "k-cycle:4");
    CHECK(rep.replies_match);
    CHECK(rep.monitor_failures == 0);
    CHECK(rep.board == replay_board(r.transcript));
}

TEST_CASE("scripted match: one-white never plays the kept edge") {
    auto s = make_seeker_one_white({0, 1});
    auto h = make_hider("k-cycle:3");
    MatchConfig cfg;
    cfg.turns = 500;
    auto r = run_match(*s, *h, cfg);
    for (const auto& m : r.transcript.moves) CHECK(m.e != Edge{0, 1});
}

TEST_CASE("first scripted move against the bipartite hider is green") {
    auto s = make_seeker_script({{0, 1}});
    auto h = make_hider("bipartite");
    MatchConfig cfg;
    cfg.turns = 1;
    auto r = run_match(*s, *h, cfg);
    REQUIRE(r.transcript.moves.size() == 1);
    CHECK(r.transcript.moves[0].c == Color::Green);
}

TEST_CASE("decide antitonicity holds across recorded runs") {
    for (const char* id : {"k-cycle:3", "bipartite", "degree:2"}) {
        auto s = make_seeker_random(50);
        auto h = make_hider(id);
        MatchConfig cfg;
        cfg.turns = 300;
        auto r = run_match(*s, *h, cfg);
        CHECK(r.antitone_ok);
    }
}

TEST_CASE("window cap errors are recorded, not thrown") {
    auto s = make_seeker_random(5);
    auto h = make_hider("k-cycle:6");
    MatchConfig cfg;
    cfg.turns = 500;
    cfg.window_cap = 8;  // the reserved path runs out of fresh vertices
    auto r = run_match(*s, *h, cfg);
    CHECK(r.resource_error.has_value());
}
