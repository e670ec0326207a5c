#include "pw/derivation.hpp"

#include <algorithm>
#include <sstream>

namespace pw {

DerivationStep DerivationStep::rotate(int k) {
    DerivationStep s;
    s.kind = Kind::Rotate;
    s.amount = k;
    return s;
}

DerivationStep DerivationStep::sum_with(int source, int rotation, bool prepend) {
    DerivationStep s;
    s.kind = Kind::SumWith;
    s.source = source;
    s.rotation = rotation;
    s.prepend = prepend;
    return s;
}

DerivationStep DerivationStep::add_spike(int position, std::vector<Vertex> path) {
    DerivationStep s;
    s.kind = Kind::AddSpike;
    s.position = position;
    s.path = std::move(path);
    return s;
}

DerivationStep DerivationStep::remove_spike(int position) {
    DerivationStep s;
    s.kind = Kind::RemoveSpike;
    s.position = position;
    return s;
}

ClosedWalk apply_step(const ClosedWalk& state, const DerivationStep& step,
                      const std::vector<ClosedWalk>& sources) {
    switch (step.kind) {
        case DerivationStep::Kind::Rotate:
            return state.rotated(step.amount);

        case DerivationStep::Kind::SumWith: {
            if (step.source < 0 || step.source >= static_cast<int>(sources.size()))
                throw Error("sum-with: source index out of range");
            ClosedWalk s = sources[step.source].rotated(step.rotation);
            if (state.is_trivial()) return s;
            if (s.is_trivial()) return state;
            return step.prepend ? sum(s, state) : sum(state, s);
        }

        case DerivationStep::Kind::AddSpike: {
            if (step.path.empty()) throw Error("add-spike: empty path");
            if (state.is_trivial()) {
                // path = anchor followed by the spike vertices
                std::vector<Vertex> seq;
                seq.push_back(step.path[0]);
                for (size_t i = 1; i < step.path.size(); ++i) seq.push_back(step.path[i]);
                for (size_t i = step.path.size() - 1; i >= 2; --i) seq.push_back(step.path[i - 1]);
                seq.push_back(step.path[0]);
                if (seq.size() < 3) throw Error("add-spike on trivial walk needs a nontrivial path");
                return ClosedWalk::from_closed_sequence(seq);
            }
            std::vector<Vertex> cs = state.closed_sequence();
            int l = state.length();
            if (step.position < 0 || step.position > l) throw Error("add-spike: position out of range");
            std::vector<Vertex> out(cs.begin(), cs.begin() + step.position + 1);
            for (Vertex v : step.path) out.push_back(v);
            for (size_t i = step.path.size() - 1; i >= 1; --i) out.push_back(step.path[i - 1]);
            out.push_back(cs[step.position]);
            out.insert(out.end(), cs.begin() + step.position + 1, cs.end());
            return ClosedWalk::from_closed_sequence(out);
        }

        case DerivationStep::Kind::RemoveSpike: {
            int l = state.length();
            if (l < 2) throw Error("remove-spike: walk too short");
            if (step.position < 0 || step.position > l - 2) throw Error("remove-spike: position out of range");
            std::vector<Vertex> cs = state.closed_sequence();
            if (cs[step.position] != cs[step.position + 2]) throw Error("remove-spike: no spike at position");
            cs.erase(cs.begin() + step.position + 1, cs.begin() + step.position + 3);
            if (cs.size() <= 1) return ClosedWalk::trivial();
            return ClosedWalk::from_closed_sequence(cs);
        }
    }
    throw Error("unknown step kind");
}

ReplayResult replay(const Derivation& d) {
    ReplayResult r;
    ClosedWalk state;
    for (size_t i = 0; i < d.steps.size(); ++i) {
        try {
            state = apply_step(state, d.steps[i], d.sources);
        } catch (const Error& e) {
            r.failed_step = static_cast<int>(i);
            r.reason = e.what();
            r.final_state = state;
            return r;
        }
    }
    r.final_state = state;
    if (state == d.target) {
        r.ok = true;
    } else {
        r.reason = "final state does not match the target";
    }
    return r;
}

ClosedWalk reduce_recording(const ClosedWalk& w, std::vector<DerivationStep>& steps) {
    ClosedWalk state = w;
    while (true) {
        if (state.length() < 2) break;
        std::vector<Vertex> cs = state.closed_sequence();
        int found = -1;
        for (int i = 0; i + 2 < static_cast<int>(cs.size()); ++i)
            if (cs[i] == cs[i + 2]) {
                found = i;
                break;
            }
        if (found < 0) break;
        DerivationStep s = DerivationStep::remove_spike(found);
        steps.push_back(s);
        state = apply_step(state, s, {});
    }
    return state;
}

ClosedWalk cyclic_reduce_recording(const ClosedWalk& w, std::vector<DerivationStep>& steps) {
    ClosedWalk state = reduce_recording(w, steps);
    while (state.length() >= 2 && state.vertex(1) == state.vertex(-1)) {
        DerivationStep rot = DerivationStep::rotate(1);
        steps.push_back(rot);
        state = apply_step(state, rot, {});
        state = reduce_recording(state, steps);
    }
    return state;
}

std::vector<DerivationStep> unreduce_steps(const ClosedWalk& w) {
    std::vector<DerivationStep> rec;
    cyclic_reduce_recording(w, rec);

    // invert the recording by replaying it and logging removed vertices
    std::vector<DerivationStep> inv;
    ClosedWalk state = w;
    for (const DerivationStep& s : rec) {
        if (s.kind == DerivationStep::Kind::RemoveSpike) {
            std::vector<Vertex> cs = state.closed_sequence();
            if (state.length() == 2) {
                // removal empties the walk; the inverse acts on the trivial
                // walk, where the path carries the anchor explicitly
                inv.push_back(
                    DerivationStep::add_spike(0, {cs[s.position], cs[s.position + 1]}));
            } else {
                inv.push_back(DerivationStep::add_spike(s.position, {cs[s.position + 1]}));
            }
        } else if (s.kind == DerivationStep::Kind::Rotate) {
            inv.push_back(DerivationStep::rotate(-s.amount));
        }
        state = apply_step(state, s, {});
    }
    std::reverse(inv.begin(), inv.end());
    return inv;
}

namespace {

std::string seq_to_string(const ClosedWalk& w) {
    std::ostringstream os;
    for (Vertex v : w.closed_sequence()) os << ' ' << v;
    return os.str();
}

ClosedWalk walk_from_tokens(std::istringstream& is) {
    std::vector<Vertex> seq;
    Vertex v;
    while (is >> v) seq.push_back(v);
    return ClosedWalk::from_closed_sequence(seq);
}

}  // namespace

std::string serialize(const Derivation& d) {
    std::ostringstream os;
    os << "pw-derivation v1\n";
    os << "sources " << d.sources.size() << '\n';
    for (const ClosedWalk& s : d.sources) os << "source" << seq_to_string(s) << '\n';
    os << "target" << seq_to_string(d.target) << '\n';
    for (const DerivationStep& s : d.steps) {
        switch (s.kind) {
            case DerivationStep::Kind::Rotate:
                os << "step rotate " << s.amount << '\n';
                break;
            case DerivationStep::Kind::SumWith:
                os << "step sum-with " << s.source << ' ' << s.rotation << ' '
                   << (s.prepend ? "pre" : "post") << '\n';
                break;
            case DerivationStep::Kind::AddSpike: {
                os << "step add-spike " << s.position;
                for (Vertex v : s.path) os << ' ' << v;
                os << '\n';
                break;
            }
            case DerivationStep::Kind::RemoveSpike:
                os << "step remove-spike " << s.position << '\n';
                break;
        }
    }
    os << "end\n";
    return os.str();
}

Derivation parse_derivation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "pw-derivation v1") throw Error("bad derivation header");
    Derivation d;
    int nsources = -1;
    bool have_target = false, ended = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string tok;
        is >> tok;
        if (tok == "sources") {
            is >> nsources;
        } else if (tok == "source") {
            d.sources.push_back(walk_from_tokens(is));
        } else if (tok == "target") {
            d.target = walk_from_tokens(is);
            have_target = true;
        } else if (tok == "step") {
            std::string kind;
            is >> kind;
            if (kind == "rotate") {
                int k;
                is >> k;
                d.steps.push_back(DerivationStep::rotate(k));
            } else if (kind == "sum-with") {
                int src, rot;
                std::string pre;
                is >> src >> rot >> pre;
                d.steps.push_back(DerivationStep::sum_with(src, rot, pre == "pre"));
            } else if (kind == "add-spike") {
                int pos;
                is >> pos;
                std::vector<Vertex> path;
                Vertex v;
                while (is >> v) path.push_back(v);
                d.steps.push_back(DerivationStep::add_spike(pos, path));
            } else if (kind == "remove-spike") {
                int pos;
                is >> pos;
                d.steps.push_back(DerivationStep::remove_spike(pos));
            } else {
                throw Error("unknown step kind: " + kind);
            }
        } else if (tok == "end") {
            ended = true;
            break;
        } else {
            throw Error("unexpected token: " + tok);
        }
    }
    if (!ended || !have_target) throw Error("truncated derivation");
    if (nsources >= 0 && nsources != static_cast<int>(d.sources.size()))
        throw Error("source count mismatch");
    return d;
}

}  // namespace pw
