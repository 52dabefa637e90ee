#include <cstdint>

#include "doctest.h"
#include "evasion/properties.hpp"

using namespace evasion;

namespace {

std::uint64_t rng_state = 0xabcdef12;
std::uint64_t rnd() {
    rng_state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = rng_state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("decide under the infinite tail") {
    Property c3{Property::Kind::ContainsCycleK, 3};
    Board tri;
    tri.play({0, 1}, Color::Green);
    tri.play({1, 2}, Color::Green);
    tri.play({0, 2}, Color::Green);
    CHECK(decide(c3, tri, Semantics::infinite_tail()) == Decision::DecidedIn);

    Board empty;
    CHECK(decide(c3, empty, Semantics::infinite_tail()) == Decision::Undecided);

    // connectedness can never be decided at a finite position
    Property conn{Property::Kind::Connected, 0};
    Board b;
    b.play({0, 1}, Color::Green);
    b.play({0, 2}, Color::Red);
    b.play({3, 4}, Color::Red);
    CHECK(decide(conn, b, Semantics::infinite_tail()) == Decision::Undecided);

    Property bip{Property::Kind::Bipartite, 0};
    CHECK(decide(bip, tri, Semantics::infinite_tail()) == Decision::DecidedOut);
    CHECK(decide(bip, b, Semantics::infinite_tail()) == Decision::Undecided);

    Property deg{Property::Kind::MaxDegreeAtLeastD, 2};
    Board star;
    star.play({0, 1}, Color::Green);
    star.play({0, 2}, Color::Green);
    CHECK(decide(deg, star, Semantics::infinite_tail()) == Decision::DecidedIn);
    CHECK(decide(deg, empty, Semantics::infinite_tail()) == Decision::Undecided);
}

TEST_CASE("decide on a finite universe") {
    Property c3{Property::Kind::ContainsCycleK, 3};
    Board all_red;
    all_red.play({0, 1}, Color::Red);
    all_red.play({0, 2}, Color::Red);
    all_red.play({1, 2}, Color::Red);
    CHECK(decide(c3, all_red, Semantics::finite(3)) == Decision::DecidedOut);

    Board partial;
    partial.play({0, 1}, Color::Green);
    CHECK(decide(c3, partial, Semantics::finite(3)) == Decision::Undecided);

    Board outside;
    outside.play({0, 5}, Color::Green);
    CHECK_THROWS_AS(decide(c3, outside, Semantics::finite(3)), UnsupportedSemantics);
}

TEST_CASE("monotone rule matches enumeration over completions") {
    std::vector<Property> props = {
        {Property::Kind::Connected, 0},        {Property::Kind::Bipartite, 0},
        {Property::Kind::ContainsCycleK, 3},   {Property::Kind::GirthAtMostK, 4},
        {Property::Kind::DiameterAtMostD, 2},  {Property::Kind::MaxDegreeAtLeastD, 2},
        {Property::Kind::ContainsKIndependentEdges, 2},
        {Property::Kind::NoIsolatedVertex, 0}, {Property::Kind::Nonempty, 0},
        {Property::Kind::Trivial, 0},
    };
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rnd() % 2);
        Board b;
        b.grow_to(n - 1);
        int whites = 0;
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u) {
                std::uint64_t r = rnd() % 3;
                if (r == 0)
                    b.play({u, v}, Color::Green);
                else if (r == 1)
                    b.play({u, v}, Color::Red);
                else
                    ++whites;
            }
        if (whites > 10) continue;
        for (const auto& p : props)
            REQUIRE(decide(p, b, Semantics::finite(n)) == decide_by_enumeration(p, b, n));
    }
}

TEST_CASE("decision is antitone along a run") {
    std::vector<Property> props = {
        {Property::Kind::ContainsCycleK, 3},
        {Property::Kind::Bipartite, 0},
        {Property::Kind::MaxDegreeAtLeastD, 2},
        {Property::Kind::ContainsKIndependentEdges, 2},
        {Property::Kind::Nonempty, 0},
    };
    for (int trial = 0; trial < 50; ++trial) {
        Board b;
        std::vector<Decision> last(props.size(), Decision::Undecided);
        for (int t = 0; t < 60; ++t) {
            Edge e = edge_at(static_cast<EdgeIndex>(rnd() % 60));
            if (!b.is_white(e)) continue;
            b.play(e, rnd() % 2 ? Color::Green : Color::Red);
            for (std::size_t i = 0; i < props.size(); ++i) {
                Decision d = decide(props[i], b, Semantics::infinite_tail());
                if (last[i] != Decision::Undecided) REQUIRE(d == last[i]);
                last[i] = d;
            }
        }
    }
}

TEST_CASE("property names parse back") {
    for (const char* name : {"connected", "bipartite", "cycle:4", "girth:5", "diameter:2",
                             "degree:3", "indep:2", "no-isolated", "nonempty", "trivial"}) {
        auto p = parse_property(name);
        REQUIRE(p.has_value());
        CHECK(property_name(*p) == name);
    }
    CHECK(!parse_property("cycle:2").has_value());
    CHECK(!parse_property("nope").has_value());
}
