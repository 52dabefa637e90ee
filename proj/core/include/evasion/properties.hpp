#pragma once

#include <optional>
#include <string>

#include "evasion/board.hpp"
#include "evasion/graphs.hpp"

namespace evasion {

enum class Decision { DecidedIn, DecidedOut, Undecided };

const char* decision_name(Decision d);

struct Property {
    enum class Kind {
        Connected,
        Bipartite,
        ContainsCycleK,
        GirthAtMostK,
        DiameterAtMostD,
        MaxDegreeAtLeastD,
        ContainsKIndependentEdges,
        NoIsolatedVertex,
        Nonempty,
        Trivial,
    };
    Kind kind = Kind::Trivial;
    int param = 0;

    bool operator==(const Property&) const = default;
};

// Monotone = closed under adding edges. Bipartite is the one shipped
// property closed under removing edges instead.
bool is_monotone(const Property& p);

std::string property_name(const Property& p);
std::optional<Property> parse_property(const std::string& name);

struct Semantics {
    enum class Kind { InfiniteTail, FiniteUniverse };
    Kind kind = Kind::InfiniteTail;
    int vertices = 0;  // FiniteUniverse only

    static Semantics infinite_tail() { return {Kind::InfiniteTail, 0}; }
    static Semantics finite(int n) { return {Kind::FiniteUniverse, n}; }
};

/// Exact evaluation of p on the finite graph (\{0..n-1\}, edges).
bool evaluate(const Property& p, std::span<const Edge> edges, int n);

/// Three-valued decision at a position. Under InfiniteTail every edge outside
/// the window counts as white; the per-property rules are derived by hand
/// from that tail (see decide() in properties.cpp). Under FiniteUniverse the
/// universe is the complete graph on semantics.vertices and every colored
/// edge must lie inside it.
Decision decide(const Property& p, const Board& b, Semantics s);

/// Definitional decision by enumerating all 2^|white| completions; test
/// oracle for decide() on small finite universes.
Decision decide_by_enumeration(const Property& p, const Board& b, int n);

}  // namespace evasion
