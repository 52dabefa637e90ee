#include "evasion/properties.hpp"

#include <algorithm>
#include <numeric>

namespace evasion {

const char* decision_name(Decision d) {
    switch (d) {
        case Decision::DecidedIn: return "decided-in";
        case Decision::DecidedOut: return "decided-out";
        case Decision::Undecided: return "undecided";
    }
    return "?";
}

bool is_monotone(const Property& p) {
    return p.kind != Property::Kind::Bipartite;
}

std::string property_name(const Property& p) {
    using K = Property::Kind;
    switch (p.kind) {
        case K::Connected: return "connected";
        case K::Bipartite: return "bipartite";
        case K::ContainsCycleK: return "cycle:" + std::to_string(p.param);
        case K::GirthAtMostK: return "girth:" + std::to_string(p.param);
        case K::DiameterAtMostD: return "diameter:" + std::to_string(p.param);
        case K::MaxDegreeAtLeastD: return "degree:" + std::to_string(p.param);
        case K::ContainsKIndependentEdges: return "indep:" + std::to_string(p.param);
        case K::NoIsolatedVertex: return "no-isolated";
        case K::Nonempty: return "nonempty";
        case K::Trivial: return "trivial";
    }
    return "?";
}

std::optional<Property> parse_property(const std::string& name) {
    using K = Property::Kind;
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    int param = 0;
    if (colon != std::string::npos) {
        try {
            param = std::stoi(name.substr(colon + 1));
        } catch (...) {
            return std::nullopt;
        }
    }
    if (head == "connected") return Property{K::Connected, 0};
    if (head == "bipartite") return Property{K::Bipartite, 0};
    if (head == "cycle" && param >= 3) return Property{K::ContainsCycleK, param};
    if (head == "girth" && param >= 3) return Property{K::GirthAtMostK, param};
    if (head == "diameter" && param >= 1) return Property{K::DiameterAtMostD, param};
    if (head == "degree" && param >= 1) return Property{K::MaxDegreeAtLeastD, param};
    if (head == "indep" && param >= 1) return Property{K::ContainsKIndependentEdges, param};
    if (head == "no-isolated") return Property{K::NoIsolatedVertex, 0};
    if (head == "nonempty") return Property{K::Nonempty, 0};
    if (head == "trivial") return Property{K::Trivial, 0};
    return std::nullopt;
}

bool evaluate(const Property& p, std::span<const Edge> edges, int n) {
    using K = Property::Kind;
    switch (p.kind) {
        case K::Connected: {
            std::vector<Vertex> support(static_cast<std::size_t>(n));
            std::iota(support.begin(), support.end(), 0);
            return n <= 1 || components(edges, support).size() == 1;
        }
        case K::Bipartite:
            return is_bipartite(edges);
        case K::ContainsCycleK:
            return cycle_of_length_exists(edges, p.param);
        case K::GirthAtMostK:
            return cycle_of_length_at_most_exists(edges, p.param);
        case K::DiameterAtMostD: {
            if (n <= 1) return true;
            std::vector<Vertex> support(static_cast<std::size_t>(n));
            std::iota(support.begin(), support.end(), 0);
            if (components(edges, support).size() != 1) return false;
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = a + 1; b < n; ++b) {
                    auto d = shortest_path_len(edges, a, b);
                    if (!d || *d > p.param) return false;
                }
            return true;
        }
        case K::MaxDegreeAtLeastD: {
            std::vector<int> deg(static_cast<std::size_t>(n), 0);
            for (const auto& e : edges) {
                ++deg[e.u];
                ++deg[e.v];
            }
            return std::any_of(deg.begin(), deg.end(), [&](int d) { return d >= p.param; });
        }
        case K::ContainsKIndependentEdges:
            return has_matching_of_size(edges, p.param);
        case K::NoIsolatedVertex: {
            std::vector<bool> covered(static_cast<std::size_t>(n), false);
            for (const auto& e : edges) covered[e.u] = covered[e.v] = true;
            return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
        }
        case K::Nonempty:
            return !edges.empty();
        case K::Trivial:
            return true;
    }
    return false;
}

namespace {

Decision decide_infinite_tail(const Property& p, const Board& b) {
    using K = Property::Kind;
    auto green = b.edges_of(Color::Green);
    // Monotone properties: decided-in iff the green graph alone already has
    // the property; the decided-out branch needs green+white to fail it,
    // which the all-white tail rules out for every shipped property except
    // diameter <= 1 (where a single red edge decides out). Bipartite is
    // handled by the complement rule: green+white always has odd cycles in
    // the tail, so only decided-out (a green odd cycle) can ever fire.
    switch (p.kind) {
        case K::Connected:
            return Decision::Undecided;
        case K::Bipartite:
            return is_bipartite(green) ? Decision::Undecided : Decision::DecidedOut;
        case K::ContainsCycleK:
            return cycle_of_length_exists(green, p.param) ? Decision::DecidedIn
                                                          : Decision::Undecided;
        case K::GirthAtMostK:
            return cycle_of_length_at_most_exists(green, p.param) ? Decision::DecidedIn
                                                                  : Decision::Undecided;
        case K::DiameterAtMostD:
            if (p.param == 1 && b.turn() > 0 && !b.edges_of(Color::Red).empty())
                return Decision::DecidedOut;
            return Decision::Undecided;
        case K::MaxDegreeAtLeastD:
            for (Vertex v = 0; v < b.window(); ++v)
                if (b.degree(v, Color::Green) >= p.param) return Decision::DecidedIn;
            return Decision::Undecided;
        case K::ContainsKIndependentEdges:
            return has_matching_of_size(green, p.param) ? Decision::DecidedIn
                                                        : Decision::Undecided;
        case K::NoIsolatedVertex:
            return Decision::Undecided;
        case K::Nonempty:
            return green.empty() ? Decision::Undecided : Decision::DecidedIn;
        case K::Trivial:
            return Decision::DecidedIn;
    }
    return Decision::Undecided;
}

Decision decide_finite(const Property& p, const Board& b, int n) {
    std::vector<Edge> green = b.edges_of(Color::Green);
    std::vector<Edge> green_white;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            Edge e{u, v};
            if (b.color(e) != Color::Red) green_white.push_back(e);
        }
    if (is_monotone(p)) {
        if (evaluate(p, green, n)) return Decision::DecidedIn;
        if (!evaluate(p, green_white, n)) return Decision::DecidedOut;
        return Decision::Undecided;
    }
    // complement-monotone (bipartite): closed under removing edges
    if (evaluate(p, green_white, n)) return Decision::DecidedIn;
    if (!evaluate(p, green, n)) return Decision::DecidedOut;
    return Decision::Undecided;
}

}  // namespace

Decision decide(const Property& p, const Board& b, Semantics s) {
    if (s.kind == Semantics::Kind::InfiniteTail) return decide_infinite_tail(p, b);
    if (s.vertices < 1) throw UnsupportedSemantics("finite universe needs >= 1 vertex");
    for (const auto& m : b.history())
        if (m.e.v >= s.vertices)
            throw UnsupportedSemantics("colored edge outside the finite universe");
    return decide_finite(p, b, s.vertices);
}

Decision decide_by_enumeration(const Property& p, const Board& b, int n) {
    std::vector<Edge> base = b.edges_of(Color::Green);
    std::vector<Edge> whites;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            Edge e{u, v};
            if (b.color(e) == Color::White) whites.push_back(e);
        }
    if (whites.size() > 20) throw UniverseTooLarge("too many white edges to enumerate");
    bool any_in = false, any_out = false;
    for (std::uint32_t mask = 0; mask < (1u << whites.size()); ++mask) {
        std::vector<Edge> g = base;
        for (std::size_t i = 0; i < whites.size(); ++i)
            if (mask & (1u << i)) g.push_back(whites[i]);
        if (evaluate(p, g, n))
            any_in = true;
        else
            any_out = true;
        if (any_in && any_out) return Decision::Undecided;
    }
    return any_in ? Decision::DecidedIn : Decision::DecidedOut;
}

}  // namespace evasion
