#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "evasion/board.hpp"
#include "evasion/hider.hpp"

namespace evasion::s0 {

// Vertex roles of the separating property's template: one hub a, six p's,
// six q's split into two triples, and the x-chain. Fixed numbering keeps
// transcripts comparable: a=0, p_i=1+i, q_j=7+j, x_i=13+i.
struct RoleVertex {
    enum class Kind { A, P, Q, X };
    Kind kind = Kind::A;
    int index = 0;

    static RoleVertex a() { return {Kind::A, 0}; }
    static RoleVertex p(int i) { return {Kind::P, i}; }
    static RoleVertex q(int j) { return {Kind::Q, j}; }
    static RoleVertex x(int i) { return {Kind::X, i}; }
    bool operator==(const RoleVertex&) const = default;
};

Vertex role_to_vertex(RoleVertex r);
RoleVertex vertex_to_role(Vertex v);
std::string role_name(RoleVertex r);
// parses "a", "p0".."p5", "q0".."q5", "x<i>"
RoleVertex parse_role(const std::string& name);

enum class TemplateColor { Green, Red, Free };

/// Classification of every role pair; Free exactly on the a–x edges and the
/// edges inside each q-triple.
TemplateColor template_edge(RoleVertex u, RoleVertex v);

using BitString = std::vector<std::uint8_t>;

BitString parse_bits(const std::string& s);  // "1011"
std::string bits_str(const BitString& s);
BitString alternating_bits(int len);         // 1,0,1,0,...

/// Surrogate for the support coloring: flipping any single bit flips it.
int parity_coloring(const BitString& s);

/// Total coloring of all pairs among the 13+m role vertices.
struct ColoredGraph {
    int m = 0;
    std::vector<Color> colors;  // by edge_index over the 13+m vertices

    int vertex_count() const { return 13 + m; }
    Color color(Edge e) const;
    void set(Edge e, Color c);
    std::vector<Edge> green_edges() const;
};

ColoredGraph make_colored_graph(int m);

std::string colored_graph_to_json(const ColoredGraph& g);
ColoredGraph colored_graph_from_json(const std::string& text);

struct TruncationCheck {
    bool pass = true;
    std::vector<std::string> failures;  // property labels (a)..(j) style names
};

/// Truncated membership checks: degree ladder at the p's, p/q adjacency
/// pattern, the x-path, hub balance at a (threshold ceil(m/3) green and red
/// a–x edges by default), and the parity rule tying the q-triples to the
/// a–x bits. hub_threshold = 0 skips the balance surrogate, which has no
/// finite meaning for unbalanced bit strings.
TruncationCheck check_truncation(const ColoredGraph& g, int hub_threshold);
TruncationCheck check_truncation(const ColoredGraph& g);

/// The reduction map at truncation |s|: a–x edges follow s, the first
/// q-triple is all green, the second all red, the rest is the template.
ColoredGraph reduce(const BitString& s);

/// Exact green-graph isomorphism for small truncations (backtracking with
/// degree-signature pruning).
bool graph_isomorphic(const std::vector<Edge>& g1, int n1, const std::vector<Edge>& g2, int n2);

long count_automorphisms(const std::vector<Edge>& g, int n);

enum class Rigidity { NonIsomorphic, Isomorphic };

/// Compares the truncated template green graph (balanced alternating bits)
/// against its single-edge-flipped variant. flip must be a non-Free
/// template edge.
Rigidity rigidity_check(int m, Edge flip);

/// Hider strategy realizing the template: template colors on determined
/// edges, the chosen bits on a–x, red inside the q-triples until one triple
/// is fully queried, then the re-selected bit string with opposite parity.
class S0Hider final : public HiderStrategy {
public:
    S0Hider(BitString g, int horizon);
    std::string id() const override { return "s0"; }
    Color respond(Board& b, Edge e) override;
    MonitorReport monitor(const Board& b) override;

    bool triggered() const { return k_.has_value(); }
    int trigger_triple() const { return k_.value_or(-1); }
    const BitString& current_bits() const { return k_ ? h_ : g_; }

private:
    BitString g_;
    int horizon_;
    std::optional<int> k_;
    BitString h_;
};

std::unique_ptr<HiderStrategy> make_hider_s0(std::uint64_t seed, int horizon = 512);

}  // namespace evasion::s0
