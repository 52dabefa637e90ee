#include "evasion/s0.hpp"

#include <algorithm>
#include <numeric>

#include "evasion/graphs.hpp"
#include "json.hpp"

namespace evasion::s0 {

Vertex role_to_vertex(RoleVertex r) {
    switch (r.kind) {
        case RoleVertex::Kind::A: return 0;
        case RoleVertex::Kind::P: return 1 + r.index;
        case RoleVertex::Kind::Q: return 7 + r.index;
        case RoleVertex::Kind::X: return 13 + r.index;
    }
    throw GameError("bad role");
}

RoleVertex vertex_to_role(Vertex v) {
    if (v == 0) return RoleVertex::a();
    if (v < 7) return RoleVertex::p(v - 1);
    if (v < 13) return RoleVertex::q(v - 7);
    return RoleVertex::x(v - 13);
}

std::string role_name(RoleVertex r) {
    switch (r.kind) {
        case RoleVertex::Kind::A: return "a";
        case RoleVertex::Kind::P: return "p" + std::to_string(r.index);
        case RoleVertex::Kind::Q: return "q" + std::to_string(r.index);
        case RoleVertex::Kind::X: return "x" + std::to_string(r.index);
    }
    return "?";
}

RoleVertex parse_role(const std::string& name) {
    if (name == "a") return RoleVertex::a();
    if (name.size() >= 2) {
        int idx = std::stoi(name.substr(1));
        if (name[0] == 'p' && idx >= 0 && idx < 6) return RoleVertex::p(idx);
        if (name[0] == 'q' && idx >= 0 && idx < 6) return RoleVertex::q(idx);
        if (name[0] == 'x' && idx >= 0) return RoleVertex::x(idx);
    }
    throw GameError("bad role name: " + name);
}

TemplateColor template_edge(RoleVertex u, RoleVertex v) {
    using K = RoleVertex::Kind;
    if (u == v) throw GameError("template edge needs distinct roles");
    if (u.kind > v.kind) std::swap(u, v);  // A < P < Q < X
    if (u.kind == K::A && v.kind == K::P) return TemplateColor::Green;
    if (u.kind == K::A && v.kind == K::Q) return TemplateColor::Red;
    if (u.kind == K::A && v.kind == K::X) return TemplateColor::Free;
    if (u.kind == K::P && v.kind == K::P) return TemplateColor::Green;
    if (u.kind == K::P && v.kind == K::Q)
        return u.index < v.index ? TemplateColor::Green : TemplateColor::Red;
    if (u.kind == K::P && v.kind == K::X) return TemplateColor::Green;
    if (u.kind == K::Q && v.kind == K::Q)
        return (u.index / 3) == (v.index / 3) ? TemplateColor::Free : TemplateColor::Red;
    if (u.kind == K::Q && v.kind == K::X) return TemplateColor::Red;
    // X–X
    return std::abs(u.index - v.index) == 1 ? TemplateColor::Green : TemplateColor::Red;
}

BitString parse_bits(const std::string& s) {
    BitString out;
    for (char c : s) {
        if (c == '0')
            out.push_back(0);
        else if (c == '1')
            out.push_back(1);
        else
            throw GameError("bit strings use only 0 and 1");
    }
    if (out.empty()) throw GameError("bit string must be nonempty");
    return out;
}

std::string bits_str(const BitString& s) {
    std::string out;
    for (auto b : s) out += b ? '1' : '0';
    return out;
}

BitString alternating_bits(int len) {
    BitString out(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) out[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1 : 0;
    return out;
}

int parity_coloring(const BitString& s) {
    return std::accumulate(s.begin(), s.end(), 0) % 2;
}

Color ColoredGraph::color(Edge e) const {
    auto idx = static_cast<std::size_t>(edge_index(e));
    if (e.v >= vertex_count() || idx >= colors.size())
        throw GameError("edge outside truncation: " + edge_str(e));
    return colors[idx];
}

void ColoredGraph::set(Edge e, Color c) {
    colors[static_cast<std::size_t>(edge_index(e))] = c;
}

std::vector<Edge> ColoredGraph::green_edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == Color::Green) out.push_back(edge_at(static_cast<EdgeIndex>(i)));
    return out;
}

ColoredGraph make_colored_graph(int m) {
    if (m < 1) throw GameError("truncation needs at least one x vertex");
    ColoredGraph g;
    g.m = m;
    int n = g.vertex_count();
    g.colors.assign(static_cast<std::size_t>(n) * (n - 1) / 2, Color::White);
    return g;
}

std::string colored_graph_to_json(const ColoredGraph& g) {
    nlohmann::ordered_json j;
    j["m"] = g.m;
    j["edges"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.colors.size(); ++i) {
        Edge e = edge_at(static_cast<EdgeIndex>(i));
        nlohmann::ordered_json je;
        je["e"] = {e.u, e.v};
        je["c"] = color_name(g.colors[i]);
        j["edges"].push_back(std::move(je));
    }
    return j.dump();
}

ColoredGraph colored_graph_from_json(const std::string& text) {
    try {
        auto j = nlohmann::ordered_json::parse(text);
        ColoredGraph g = make_colored_graph(j.at("m").get<int>());
        for (const auto& je : j.at("edges")) {
            Edge e = make_edge(je.at("e").at(0).get<Vertex>(), je.at("e").at(1).get<Vertex>());
            std::string c = je.at("c").get<std::string>();
            g.set(e, c == "green" ? Color::Green : Color::Red);
            if (c != "green" && c != "red") throw GameError("bad color " + c);
        }
        for (auto c : g.colors)
            if (c == Color::White) throw GameError("coloring must be total on the truncation");
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw GameError(std::string("bad graph json: ") + e.what());
    }
}

TruncationCheck check_truncation(const ColoredGraph& g) {
    return check_truncation(g, (g.m + 2) / 3);
}

TruncationCheck check_truncation(const ColoredGraph& g, int hub_threshold) {
    TruncationCheck out;
    auto fail = [&](const std::string& label) {
        out.pass = false;
        out.failures.push_back(label);
    };
    const int m = g.m;
    const Vertex a = 0;
    auto pv = [](int i) { return role_to_vertex(RoleVertex::p(i)); };
    auto qv = [](int j) { return role_to_vertex(RoleVertex::q(j)); };
    auto xv = [](int i) { return role_to_vertex(RoleVertex::x(i)); };

    // (a)/(i): balanced hub, at least hub_threshold green and red a-x edges
    int green_at_a = 0, red_at_a = 0;
    for (int i = 0; i < m; ++i)
        (g.color(make_edge(a, xv(i))) == Color::Green ? green_at_a : red_at_a)++;
    if (green_at_a < hub_threshold || red_at_a < hub_threshold) fail("a-balanced-hub");

    // (b): red degree ladder at the p's
    for (int i = 0; i < 6; ++i) {
        int red_deg = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (v != pv(i) && g.color(make_edge(pv(i), v)) == Color::Red) ++red_deg;
        if (red_deg != i + 1) {
            fail("p-red-degree-ladder");
            break;
        }
    }
    // (c): a-p and p-p green
    bool c_ok = true;
    for (int i = 0; i < 6; ++i) {
        if (g.color(make_edge(a, pv(i))) != Color::Green) c_ok = false;
        for (int j = i + 1; j < 6; ++j)
            if (g.color(make_edge(pv(i), pv(j))) != Color::Green) c_ok = false;
    }
    if (!c_ok) fail("a-p-and-p-p-green");
    // (d): p_i q_j green iff i < j
    bool d_ok = true;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Color want = i < j ? Color::Green : Color::Red;
            if (g.color(make_edge(pv(i), qv(j))) != want) d_ok = false;
        }
    if (!d_ok) fail("p-q-adjacency-pattern");
    // (e): a-q red and cross-triple q edges red
    bool e_ok = true;
    for (int j = 0; j < 6; ++j)
        if (g.color(make_edge(a, qv(j))) != Color::Red) e_ok = false;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            if (g.color(make_edge(qv(i), qv(j))) != Color::Red) e_ok = false;
    if (!e_ok) fail("a-q-and-cross-triple-red");
    // (f): the x-path
    bool f_ok = true;
    for (int i = 0; i < m && f_ok; ++i)
        for (int j = i + 1; j < m && f_ok; ++j) {
            Color want = (j - i == 1) ? Color::Green : Color::Red;
            if (g.color(make_edge(xv(i), xv(j))) != want) f_ok = false;
        }
    if (!f_ok) fail("x-path");
    // (g): x-p green
    bool g_ok = true;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 6; ++j)
            if (g.color(make_edge(xv(i), pv(j))) != Color::Green) g_ok = false;
    if (!g_ok) fail("x-p-green");
    // (h): x-q red
    bool h_ok = true;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 6; ++j)
            if (g.color(make_edge(xv(i), qv(j))) != Color::Red) h_ok = false;
    if (!h_ok) fail("x-q-red");
    // (j): parity of the a-x bits picks the all-red triple
    BitString bits(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        bits[static_cast<std::size_t>(i)] = g.color(make_edge(a, xv(i))) == Color::Green ? 1 : 0;
    int par = parity_coloring(bits);
    int lo = par == 0 ? 0 : 3;
    bool j_ok = true;
    for (int i = lo; i < lo + 3; ++i)
        for (int j = i + 1; j < lo + 3; ++j)
            if (g.color(make_edge(qv(i), qv(j))) != Color::Red) j_ok = false;
    if (!j_ok) fail("parity-triple-red");
    return out;
}

ColoredGraph reduce(const BitString& s) {
    int m = static_cast<int>(s.size());
    ColoredGraph g = make_colored_graph(m);
    for (Vertex v = 1; v < g.vertex_count(); ++v)
        for (Vertex u = 0; u < v; ++u) {
            Edge e{u, v};
            RoleVertex ru = vertex_to_role(u), rv = vertex_to_role(v);
            TemplateColor t = template_edge(ru, rv);
            if (t == TemplateColor::Green) {
                g.set(e, Color::Green);
            } else if (t == TemplateColor::Red) {
                g.set(e, Color::Red);
            } else if (ru.kind == RoleVertex::Kind::A || rv.kind == RoleVertex::Kind::A) {
                int i = (ru.kind == RoleVertex::Kind::X ? ru : rv).index;
                g.set(e, s[static_cast<std::size_t>(i)] ? Color::Green : Color::Red);
            } else {
                // inside a q-triple: first triple green, second red
                int j = (ru.kind == RoleVertex::Kind::Q ? ru : rv).index;
                g.set(e, j < 3 ? Color::Green : Color::Red);
            }
        }
    return g;
}

namespace {

struct IsoSearch {
    int n;
    std::vector<std::vector<bool>> adj1, adj2;
    std::vector<long> sig1, sig2;
    std::vector<int> map;         // g1 vertex -> g2 vertex, -1 unset
    std::vector<bool> used;
    long count = 0;
    bool stop_at_first = false;
    bool found = false;

    static std::vector<std::vector<bool>> matrix(const std::vector<Edge>& es, int n) {
        std::vector<std::vector<bool>> a(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
        for (const auto& e : es) a[e.u][e.v] = a[e.v][e.u] = true;
        return a;
    }

    // degree refined by sorted neighbor degrees, folded to a hash
    static std::vector<long> signatures(const std::vector<std::vector<bool>>& a) {
        int n = static_cast<int>(a.size());
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (a[u][v]) ++deg[u];
        std::vector<long> sig(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) {
            std::vector<int> nd;
            for (int v = 0; v < n; ++v)
                if (a[u][v]) nd.push_back(deg[v]);
            std::sort(nd.begin(), nd.end());
            long h = deg[u];
            for (int d : nd) h = h * 1315423911L + d + 1;
            sig[u] = h;
        }
        return sig;
    }

    bool compatible(int u, int w) {
        if (sig1[u] != sig2[w]) return false;
        for (int v = 0; v < n; ++v) {
            if (map[v] < 0) continue;
            if (adj1[u][v] != adj2[w][map[v]]) return false;
        }
        return true;
    }

    void dfs(int u) {
        if (found && stop_at_first) return;
        if (u == n) {
            ++count;
            found = true;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || !compatible(u, w)) continue;
            map[u] = w;
            used[w] = true;
            dfs(u + 1);
            used[w] = false;
            map[u] = -1;
            if (found && stop_at_first) return;
        }
    }
};

}  // namespace

bool graph_isomorphic(const std::vector<Edge>& g1, int n1, const std::vector<Edge>& g2, int n2) {
    if (n1 != n2 || g1.size() != g2.size()) return false;
    IsoSearch s;
    s.n = n1;
    s.adj1 = IsoSearch::matrix(g1, n1);
    s.adj2 = IsoSearch::matrix(g2, n2);
    s.sig1 = IsoSearch::signatures(s.adj1);
    s.sig2 = IsoSearch::signatures(s.adj2);
    auto m1 = s.sig1, m2 = s.sig2;
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) return false;
    s.map.assign(static_cast<std::size_t>(s.n), -1);
    s.used.assign(static_cast<std::size_t>(s.n), false);
    s.stop_at_first = true;
    s.dfs(0);
    return s.found;
}

long count_automorphisms(const std::vector<Edge>& g, int n) {
    IsoSearch s;
    s.n = n;
    s.adj1 = IsoSearch::matrix(g, n);
    s.adj2 = s.adj1;
    s.sig1 = IsoSearch::signatures(s.adj1);
    s.sig2 = s.sig1;
    s.map.assign(static_cast<std::size_t>(n), -1);
    s.used.assign(static_cast<std::size_t>(n), false);
    s.dfs(0);
    return s.count;
}

Rigidity rigidity_check(int m, Edge flip) {
    if (m < 8) throw GameError("rigidity check needs truncation size >= 8");
    RoleVertex ru = vertex_to_role(flip.u), rv = vertex_to_role(flip.v);
    if (template_edge(ru, rv) == TemplateColor::Free)
        throw GameError("flip edge must be template-determined: " + edge_str(flip));
    ColoredGraph base = reduce(alternating_bits(m));
    ColoredGraph flipped = base;
    flipped.set(flip, base.color(flip) == Color::Green ? Color::Red : Color::Green);
    bool iso = graph_isomorphic(base.green_edges(), base.vertex_count(), flipped.green_edges(),
                                flipped.vertex_count());
    return iso ? Rigidity::Isomorphic : Rigidity::NonIsomorphic;
}

S0Hider::S0Hider(BitString g, int horizon) : g_(std::move(g)), horizon_(horizon) {
    if (static_cast<int>(g_.size()) < horizon_) {
        // extend periodically so any horizon works with a short seed pattern
        BitString ext;
        for (int i = 0; i < horizon_; ++i) ext.push_back(g_[i % g_.size()]);
        g_ = std::move(ext);
    }
}

Color S0Hider::respond(Board& b, Edge e) {
    RoleVertex ru = vertex_to_role(e.u), rv = vertex_to_role(e.v);
    TemplateColor t = template_edge(ru, rv);
    if (t == TemplateColor::Green) return Color::Green;
    if (t == TemplateColor::Red) return Color::Red;
    if (ru.kind == RoleVertex::Kind::A || rv.kind == RoleVertex::Kind::A) {
        int i = (ru.kind == RoleVertex::Kind::X ? ru : rv).index;
        if (i >= horizon_) throw HorizonExhausted("x-index " + std::to_string(i) + " beyond horizon");
        const BitString& bits = k_ ? h_ : g_;
        return bits[static_cast<std::size_t>(i)] ? Color::Green : Color::Red;
    }
    // inside a q-triple
    if (k_) return Color::Red;
    int j = (ru.kind == RoleVertex::Kind::Q ? ru : rv).index;
    int triple = j / 3;
    int whites = 0;
    for (int i = triple * 3; i < triple * 3 + 3; ++i)
        for (int jj = i + 1; jj < triple * 3 + 3; ++jj) {
            Edge qe = make_edge(role_to_vertex(RoleVertex::q(i)), role_to_vertex(RoleVertex::q(jj)));
            if (b.is_white(qe)) ++whites;
        }
    if (whites > 1) return Color::Red;  // e itself is still white
    // trigger: the last edge inside this triple
    k_ = triple;
    h_ = g_;
    int constrained_top = -1;
    for (int i = 0; i < horizon_; ++i) {
        Edge ax = make_edge(0, role_to_vertex(RoleVertex::x(i)));
        Color c = b.color(ax);
        if (c == Color::Green) h_[static_cast<std::size_t>(i)] = 1;
        else if (c == Color::Red) h_[static_cast<std::size_t>(i)] = 0;
        if (c != Color::White) constrained_top = std::max(constrained_top, i);
    }
    int target = 1 - *k_;
    if (parity_coloring(h_) != target) {
        int slack = -1;
        for (int i = horizon_ - 1; i >= 0; --i) {
            Edge ax = make_edge(0, role_to_vertex(RoleVertex::x(i)));
            if (b.is_white(ax)) {
                slack = i;
                break;
            }
        }
        if (slack < 0) throw HorizonExhausted("no free bit left to fix the parity");
        h_[static_cast<std::size_t>(slack)] ^= 1;
    }
    return Color::Green;
}

MonitorReport S0Hider::monitor(const Board& b) {
    MonitorReport r{b.turn(), {}};
    const Move& mv = b.history().back();
    RoleVertex ru = vertex_to_role(mv.e.u), rv = vertex_to_role(mv.e.v);
    TemplateColor t = template_edge(ru, rv);
    if (t != TemplateColor::Free) {
        bool ok = (t == TemplateColor::Green) == (mv.c == Color::Green);
        r.checks.push_back({"template-reply", ok, ok ? "" : edge_str(mv.e)});
    } else if (k_ && (ru.kind == RoleVertex::Kind::A || rv.kind == RoleVertex::Kind::A)) {
        int i = (ru.kind == RoleVertex::Kind::X ? ru : rv).index;
        bool ok = (mv.c == Color::Green) == (h_[static_cast<std::size_t>(i)] != 0);
        r.checks.push_back({"post-trigger-bits-followed", ok, ok ? "" : edge_str(mv.e)});
    }
    if (k_) {
        bool ok = parity_coloring(h_) == 1 - *k_;
        r.checks.push_back({"reselected-parity", ok, ok ? "" : bits_str(h_)});
    }
    return r;
}

std::unique_ptr<HiderStrategy> make_hider_s0(std::uint64_t seed, int horizon) {
    if (seed == 0) return std::make_unique<S0Hider>(alternating_bits(horizon), horizon);
    BitString g(static_cast<std::size_t>(horizon));
    std::uint64_t state = seed;
    for (int i = 0; i < horizon; ++i) {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        g[static_cast<std::size_t>(i)] = z & 1;
    }
    return std::make_unique<S0Hider>(std::move(g), horizon);
}

}  // namespace evasion::s0
