#include "evasion/match.hpp"

namespace evasion {

MatchResult::Verdict MatchResult::verdict() const {
    if (first_violation || !antitone_ok) return Verdict::Violation;
    if (seeker_verdict.kind != ForcingVerdict::Kind::OnTrack) return Verdict::SeekerTrap;
    return Verdict::AllInvariantsHeld;
}

MatchResult run_match(SeekerStrategy& seeker, HiderStrategy& hider, const MatchConfig& cfg) {
    MatchResult out;
    Board board(cfg.window_cap);
    std::optional<Property> prop = cfg.property;
    if (!prop) prop = hider.default_property();
    Decision last_decision = Decision::Undecided;

    auto absorb = [&](const MonitorReport& r) {
        for (const auto& c : r.checks) {
            if (c.pass) continue;
            ++out.monitor_failures;
            if (!out.first_violation) out.first_violation = Violation{r.turn, c.name, c.witness};
        }
    };

    for (int t = 0; t < cfg.turns; ++t) {
        if (seeker.finished()) break;
        try {
            Edge e = seeker.next(board);
            if (!board.is_white(e))
                throw GameError("seeker picked a colored edge " + edge_str(e));
            Color c = hider.respond(board, e);
            board.play(e, c);
            seeker.observe(board, e, c);
        } catch (const WindowCapExceeded& err) {
            out.resource_error = err.what();
            break;
        } catch (const HorizonExhausted& err) {
            out.resource_error = err.what();
            break;
        } catch (const ScriptEdgeNotWhite& err) {
            out.resource_error = err.what();
            break;
        }
        ++out.turns_played;
        if (prop) {
            Decision d = decide(*prop, board, cfg.semantics);
            out.decisions.push_back(d);
            if (last_decision != Decision::Undecided && d != last_decision)
                out.antitone_ok = false;
            last_decision = d;
        }
        if (cfg.monitors) {
            absorb(hider.monitor(board));
            absorb(seeker.monitor(board));
        }
        if (seeker.verdict().kind != ForcingVerdict::Kind::OnTrack) break;
    }
    out.seeker_verdict = seeker.verdict();
    out.transcript = to_transcript(board);
    return out;
}

ReplayOutcome replay(const Transcript& t, const std::string& hider_id) {
    ReplayOutcome out{replay_board(t), true, 0};
    if (hider_id.empty()) return out;
    auto hider = make_hider(hider_id);
    Board b(t.window_cap);
    for (const auto& m : t.moves) {
        Color c = hider->respond(b, m.e);
        if (c != m.c) out.replies_match = false;
        b.play(m.e, m.c);
        for (const auto& chk : hider->monitor(b).checks)
            if (!chk.pass) ++out.monitor_failures;
    }
    return out;
}

}  // namespace evasion
