// arena: match runner, finite-game solving, and verification surface for
// the Seeker/Hider edge-query engine. Machine-readable JSON goes to stdout,
// human logs to stderr. Exit codes: 0 all checks pass, 1 violation or
// counterexample, 2 usage/resource error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "evasion/finite_game.hpp"
#include "evasion/match.hpp"
#include "evasion/s0.hpp"

using namespace evasion;
using nlohmann::ordered_json;

namespace {

int subgame_index(const std::string& name) {
    if (name == "g0") return 0;
    if (name == "g1") return 1;
    if (name == "g2") return 2;
    throw GameError("subgame must be g0, g1, or g2");
}

std::vector<Edge> load_script(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GameError("cannot open script file " + path);
    std::vector<Edge> moves;
    Vertex u, v;
    while (in >> u >> v) moves.push_back(make_edge(u, v));
    return moves;
}

std::unique_ptr<SeekerStrategy> build_seeker(const std::string& id) {
    if (id.rfind("script:", 0) == 0) return make_seeker_script(load_script(id.substr(7)));
    return make_seeker(id);
}

int cmd_simulate(const std::string& hider_id, const std::string& seeker_id, int turns,
                 int window_cap, const std::string& monitors, const std::string& property,
                 const std::string& out_path) {
    auto hider = make_hider(hider_id);
    auto seeker = build_seeker(seeker_id);
    MatchConfig cfg;
    cfg.turns = turns;
    cfg.window_cap = window_cap;
    cfg.monitors = monitors != "none";
    if (!property.empty()) {
        auto p = parse_property(property);
        if (!p) throw GameError("unknown property: " + property);
        cfg.property = *p;
    }
    MatchResult r = run_match(*seeker, *hider, cfg);

    ordered_json j;
    j["hider"] = hider->id();
    j["seeker"] = seeker->id();
    j["turns"] = r.turns_played;
    switch (r.verdict()) {
        case MatchResult::Verdict::AllInvariantsHeld: j["verdict"] = "all-invariants-held"; break;
        case MatchResult::Verdict::Violation: j["verdict"] = "violation"; break;
        case MatchResult::Verdict::SeekerTrap: j["verdict"] = "seeker-trap"; break;
    }
    if (r.first_violation) {
        j["violation"] = {{"turn", r.first_violation->turn},
                          {"check", r.first_violation->check},
                          {"witness", r.first_violation->witness}};
    }
    if (r.seeker_verdict.kind != ForcingVerdict::Kind::OnTrack) {
        j["forcing"] = {{"kind", r.seeker_verdict.kind == ForcingVerdict::Kind::TrapEntered
                                     ? "trap-entered"
                                     : "refuted"},
                        {"trap", r.seeker_verdict.trap},
                        {"witness", r.seeker_verdict.witness}};
    }
    j["monitor_failures"] = r.monitor_failures;
    j["antitone_ok"] = r.antitone_ok;
    if (!r.decisions.empty()) {
        int undecided = 0;
        int decided_at = -1;
        for (std::size_t i = 0; i < r.decisions.size(); ++i) {
            if (r.decisions[i] == Decision::Undecided)
                ++undecided;
            else if (decided_at < 0)
                decided_at = static_cast<int>(i);
        }
        j["undecided_turns"] = undecided;
        j["first_decided_turn"] = decided_at;
    }
    if (r.resource_error) j["resource_error"] = *r.resource_error;
    j["final_window"] = r.transcript.final_window;
    std::cout << j.dump() << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << transcript_to_json(r.transcript) << "\n";
        std::cerr << "transcript written to " << out_path << "\n";
    }
    if (r.resource_error) return 2;
    if (r.seeker_verdict.kind == ForcingVerdict::Kind::Refuted) return 1;
    return r.verdict() == MatchResult::Verdict::Violation ? 1 : 0;
}

int cmd_solve(const std::string& subgame) {
    FiniteGame g = make_bipartite_subgame(subgame_index(subgame));
    GameValue v = solve(g);
    ordered_json j;
    j["game"] = g.name;
    j["winner"] = v.winner == Winner::Hider ? "hider" : "seeker";
    j["positions_explored"] = v.positions_explored;
    std::cout << j.dump() << "\n";
    return v.winner == Winner::Hider ? 0 : 1;
}

int cmd_verify_appendix() {
    FiniteGame g2 = make_bipartite_subgame(2);
    AppendixPolicy policy;
    PolicyVerification res = verify_policy(g2, policy);
    ordered_json j;
    j["game"] = g2.name;
    j["pass"] = res.pass;
    j["terminals"] = res.terminals;
    j["counterexamples"] = res.pass ? 0 : 1;
    j["checkpoints_blacksquare"] = policy.checkpoints_blacksquare();
    j["checkpoints_matched"] = policy.checkpoints_matched();
    j["weakened_matches"] = policy.weakened_matches();
    if (!res.pass) {
        ordered_json line = ordered_json::array();
        for (int e : res.counterexample) line.push_back(edge_str(g2.universe[e]));
        j["counterexample"] = line;
    }
    std::cout << j.dump() << "\n";
    if (policy.weakened_matches() > 0)
        std::cerr << "note: " << policy.weakened_matches()
                  << " case exits matched a winning position only after extra reds\n";
    return res.pass ? 0 : 1;
}

int cmd_classical(const std::string& property, int n) {
    auto p = parse_property(property);
    if (!p) throw GameError("unknown property: " + property);
    ClassicalResult res = classical_elusiveness(*p, n);
    ordered_json j;
    j["property"] = property_name(*p);
    j["n"] = n;
    j["verdict"] = res.verdict == Elusiveness::Elusive ? "elusive" : "not-elusive";
    j["positions_explored"] = res.positions_explored;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_replay(const std::string& path, const std::string& hider_id) {
    std::ifstream in(path);
    if (!in) throw GameError("cannot open transcript " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Transcript t = transcript_from_json(buf.str());
    ReplayOutcome out = replay(t, hider_id);
    ordered_json j;
    j["moves"] = static_cast<int>(t.moves.size());
    j["final_window"] = out.board.window();
    j["replies_match"] = out.replies_match;
    j["monitor_failures"] = out.monitor_failures;
    std::cout << j.dump() << "\n";
    return (out.replies_match && out.monitor_failures == 0) ? 0 : 1;
}

int cmd_s0_rigidity(int m, const std::string& flip) {
    auto dash = flip.find_first_of("-");
    std::string a, b;
    if (dash != std::string::npos) {
        a = flip.substr(0, dash);
        b = flip.substr(dash + 1);
    } else {
        // names like x0x1 or p0x3: split before the second role letter
        std::size_t second = flip.find_first_of("apqx", 1);
        while (second != std::string::npos && isdigit(flip[second]) == 0 &&
               second + 1 < flip.size() && isdigit(flip[second + 1]) == 0)
            second = flip.find_first_of("apqx", second + 1);
        if (second == std::string::npos) throw GameError("cannot parse flip edge " + flip);
        a = flip.substr(0, second);
        b = flip.substr(second);
    }
    Edge e = make_edge(s0::role_to_vertex(s0::parse_role(a)),
                       s0::role_to_vertex(s0::parse_role(b)));
    s0::Rigidity r = s0::rigidity_check(m, e);
    ordered_json j;
    j["m"] = m;
    j["flip"] = flip;
    j["result"] = r == s0::Rigidity::NonIsomorphic ? "non-isomorphic" : "isomorphic";
    std::cout << j.dump() << "\n";
    return r == s0::Rigidity::NonIsomorphic ? 0 : 1;
}

int cmd_s0_check(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GameError("cannot open graph file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    s0::ColoredGraph g = s0::colored_graph_from_json(buf.str());
    auto res = s0::check_truncation(g);
    ordered_json j;
    j["m"] = g.m;
    j["pass"] = res.pass;
    j["failures"] = res.failures;
    std::cout << j.dump() << "\n";
    return res.pass ? 0 : 1;
}

int cmd_s0_reduce(const std::string& bits) {
    s0::BitString s = s0::parse_bits(bits);
    s0::ColoredGraph g = s0::reduce(s);
    auto res = s0::check_truncation(g, 0);
    ordered_json j;
    j["bits"] = bits;
    j["parity"] = s0::parity_coloring(s);
    j["consistent"] = res.pass;
    j["graph"] = ordered_json::parse(s0::colored_graph_to_json(g));
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_play(const std::string& side, const std::string& hider_id,
             const std::string& seeker_id) {
    Board b;
    if (side == "seeker") {
        auto hider = make_hider(hider_id);
        std::cerr << "you are Seeker: enter 'u v' to query an edge, 'quit' to stop\n";
        std::string line;
        while (std::cerr << "> ", std::getline(std::cin, line)) {
            if (line == "quit" || line == "q") break;
            std::istringstream iss(line);
            Vertex u, v;
            if (!(iss >> u >> v)) {
                std::cerr << "could not parse, expected two vertex numbers\n";
                continue;
            }
            if (u == v || u < 0 || v < 0) {
                std::cerr << "edge needs two distinct non-negative vertices\n";
                continue;
            }
            Edge e = make_edge(u, v);
            if (!b.is_white(e)) {
                std::cerr << "edge " << edge_str(e) << " is already colored, pick another\n";
                continue;
            }
            Color c = hider->respond(b, e);
            b.play(e, c);
            std::cerr << "hider answers " << color_name(c) << "\n";
        }
    } else {
        auto seeker = build_seeker(seeker_id);
        std::cerr << "you are Hider: answer each query with 'g' or 'r', 'quit' to stop\n";
        std::string line;
        for (;;) {
            if (seeker->finished()) break;
            Edge e = seeker->next(b);
            std::cerr << "seeker plays " << edge_str(e) << " -- green or red? ";
            if (!std::getline(std::cin, line)) break;
            if (line == "quit" || line == "q") break;
            if (line != "g" && line != "r" && line != "green" && line != "red") {
                std::cerr << "answer g or r\n";
                continue;
            }
            Color c = (line[0] == 'g') ? Color::Green : Color::Red;
            b.play(e, c);
            seeker->observe(b, e, c);
        }
    }
    ordered_json j;
    j["turns"] = b.turn();
    j["final_window"] = b.window();
    std::cout << j.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seeker/Hider edge-query game engine"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "run a match with monitors");
    std::string hider_id = "connected", seeker_id = "random:0", monitors = "all";
    std::string property, out_path;
    int turns = 2000, window_cap = Board::kDefaultWindowCap;
    sim->add_option("--hider", hider_id, "hider strategy id");
    sim->add_option("--seeker", seeker_id, "seeker strategy id");
    sim->add_option("--turns", turns, "turn horizon");
    sim->add_option("--cap", window_cap, "window cap");
    sim->add_option("--monitors", monitors, "all|none");
    sim->add_option("--property", property, "property to track (defaults to the hider's)");
    sim->add_option("--out", out_path, "write the transcript JSON here");

    auto* slv = app.add_subcommand("solve", "solve a finite subgame exactly");
    std::string subgame = "g2";
    slv->add_option("--subgame", subgame, "g0|g1|g2");

    auto* va = app.add_subcommand("verify-appendix",
                                  "play the hand policy against every seeker order");

    auto* cls = app.add_subcommand("classical", "finite-board elusiveness");
    std::string cls_property = "nonempty";
    int cls_n = 3;
    cls->add_option("--property", cls_property, "property id");
    cls->add_option("--n", cls_n, "vertex count (<= 6)");

    auto* rep = app.add_subcommand("replay", "replay a transcript file");
    std::string replay_path, replay_hider;
    rep->add_option("file", replay_path, "transcript JSON")->required();
    rep->add_option("--hider", replay_hider, "re-run this hider and its monitors");

    auto* s0cmd = app.add_subcommand("s0", "separating-property lab");
    auto* rig = s0cmd->add_subcommand("rigidity", "single-edge flip isomorphism check");
    int rig_m = 10;
    std::string rig_flip = "x0x1";
    rig->add_option("--m", rig_m, "truncation size");
    rig->add_option("--flip", rig_flip, "edge, e.g. x0x1 or p0-x3");
    auto* chk = s0cmd->add_subcommand("check", "truncated membership checks");
    std::string chk_input;
    chk->add_option("--input", chk_input, "graph JSON file")->required();
    auto* red = s0cmd->add_subcommand("reduce", "build the reduction-map graph");
    std::string red_bits = "1";
    red->add_option("--bits", red_bits, "bit string");
    s0cmd->require_subcommand(1);

    auto* ply = app.add_subcommand("play", "interactive session");
    std::string side = "seeker", play_hider = "connected", play_seeker = "random:0";
    ply->add_option("--side", side, "seeker|hider");
    ply->add_option("--hider", play_hider, "hider id when playing seeker");
    ply->add_option("--seeker", play_seeker, "seeker id when playing hider");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed())
            return cmd_simulate(hider_id, seeker_id, turns, window_cap, monitors, property,
                                out_path);
        if (slv->parsed()) return cmd_solve(subgame);
        if (va->parsed()) return cmd_verify_appendix();
        if (cls->parsed()) return cmd_classical(cls_property, cls_n);
        if (rep->parsed()) return cmd_replay(replay_path, replay_hider);
        if (s0cmd->parsed()) {
            if (rig->parsed()) return cmd_s0_rigidity(rig_m, rig_flip);
            if (chk->parsed()) return cmd_s0_check(chk_input);
            if (red->parsed()) return cmd_s0_reduce(red_bits);
        }
        if (ply->parsed()) return cmd_play(side, play_hider, play_seeker);
    } catch (const UniverseTooLarge& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const WindowCapExceeded& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const GameError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
