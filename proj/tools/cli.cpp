// planarwalks: command-line front end for the closed-walk pipeline.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 budget/cap exhaustion.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "pw/canonical.hpp"
#include "pw/decomposition.hpp"
#include "pw/derivation.hpp"
#include "pw/group_actions.hpp"
#include "pw/homology.hpp"
#include "pw/io.hpp"
#include "pw/nesting.hpp"
#include "pw/planar_map.hpp"
#include "pw/uncrossing.hpp"
#include "pw/walk_algebra.hpp"

using namespace pw;

namespace {

constexpr int EXIT_VERIFY = 1;
constexpr int EXIT_INPUT = 2;
constexpr int EXIT_BUDGET = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool is_budget_error(const std::string& msg) {
    return msg.find("inconclusive") != std::string::npos ||
           msg.find("budget") != std::string::npos ||
           msg.find("exceeded the cap") != std::string::npos ||
           msg.find("vertex cap") != std::string::npos;
}

struct GraphArgs {
    std::string path;
    bool use_spin = false;  // trust the listed neighbor order as the rotation system
};

void add_graph_input(CLI::App* cmd, GraphArgs& ga) {
    cmd->add_option("input", ga.path, "graph file ('-' for stdin)")->required();
    cmd->add_flag("--use-spin", ga.use_spin,
                  "take the neighbor order of the input lines as the embedding");
}

PlanarMap map_from(const GraphArgs& ga, GraphInput* out_gi = nullptr) {
    GraphInput gi = parse_graph_text(slurp(ga.path));
    std::optional<PlanarMap> m;
    if (ga.use_spin) {
        m.emplace(gi.graph, gi.listed_order);
    } else {
        EmbedResult r = embed(gi.graph);
        if (auto* w = std::get_if<NonPlanarWitness>(&r)) {
            std::ostringstream os;
            os << "graph is not planar; Kuratowski-subdivision edges:";
            for (auto [u, v] : w->edges)
                os << ' ' << gi.graph.label_of(u) << '-' << gi.graph.label_of(v);
            throw Error(os.str());
        }
        m.emplace(std::get<PlanarMap>(std::move(r)));
    }
    if (gi.outer) {
        // re-anchor the outer face to the one whose boundary matches the
        // requested vertex set
        std::set<Vertex> want(gi.outer->begin(), gi.outer->end());
        int match = -1;
        for (int f = 0; f < m->num_faces(); ++f) {
            std::vector<Vertex> bv = m->faces()[f].boundary_vertices();
            if (std::set<Vertex>(bv.begin(), bv.end()) == want) {
                match = f;
                break;
            }
        }
        if (match < 0) throw Error("outer line does not match any traced face");
        m = m->with_outer_face(match);
    }
    if (out_gi) *out_gi = std::move(gi);
    return *std::move(m);
}

ClosedWalk cycle_arg(const Graph& g, const std::vector<std::string>& names) {
    if (names.empty()) throw Error("--cycle requires at least one vertex");
    return walk_from_labels(g, names);
}

std::string labels_of(const Graph& g, const std::vector<Vertex>& vs) {
    std::string s;
    for (Vertex v : vs) {
        if (!s.empty()) s += ' ';
        s += g.label_of(v);
    }
    return s;
}

// ---- subcommand bodies ------------------------------------------------

int cmd_embed(const GraphArgs& ga, bool dot) {
    PlanarMap m = map_from(ga);
    if (dot)
        std::cout << to_dot(m.graph());
    else
        std::cout << serialize_map(m);
    return 0;
}

int cmd_faces(const GraphArgs& ga) {
    PlanarMap m = map_from(ga);
    std::cout << "pw-faces v1\n";
    for (int f = 0; f < m.num_faces(); ++f) {
        std::cout << "face " << f << ':';
        for (Vertex v : m.faces()[f].boundary_vertices()) std::cout << ' ' << m.graph().label_of(v);
        if (f == m.outer_face()) std::cout << " (outer)";
        std::cout << '\n';
    }
    return 0;
}

int cmd_regions(const GraphArgs& ga, const std::vector<std::string>& cyc) {
    PlanarMap m = map_from(ga);
    ClosedWalk c = cycle_arg(m.graph(), cyc);
    RegionPartition rp = cycle_regions(m, c);
    std::cout << "pw-regions v1\n";
    std::cout << "cycle: " << labels_of(m.graph(), c.vertices()) << '\n';
    for (int s = 0; s < 2; ++s) {
        std::cout << "side " << s << " vertices:";
        for (Vertex v : rp.side_vertices[s]) std::cout << ' ' << m.graph().label_of(v);
        std::cout << '\n';
        std::cout << "side " << s << " faces:";
        for (int f : rp.side_faces[s]) std::cout << ' ' << f;
        std::cout << '\n';
    }
    std::cout << "outer side: 1\n";
    return 0;
}

int cmd_canonical(const GraphArgs& ga, const std::string& mode_name, int imax,
                  const Budgets& budgets, bool dot) {
    PlanarMap m = map_from(ga);
    Mode mode = mode_from_string(mode_name);
    std::optional<int> im;
    if (imax > 0) im = imax;
    GeneratingSet gs = build_canonical(m, mode, im, budgets);
    if (dot) {
        std::cout << to_dot(m.graph(), gs.walks());
        return 0;
    }
    std::cout << serialize_genset(gs, m.graph());
    AutomorphismGroup ag = automorphisms(m.graph());
    CanonicalReport rep = verify_canonical(m, gs, ag.generators);
    std::cout << "verify stages " << (rep.stages_ok ? "ok" : "FAIL") << '\n';
    std::cout << "verify nested " << (rep.nested_ok ? "ok" : "FAIL") << '\n';
    std::cout << "verify invariant " << (rep.invariant_ok ? "ok" : "FAIL") << '\n';
    std::cout << "verify generates " << (rep.generates_ok ? "ok" : "FAIL") << '\n';
    if (!rep.ok()) {
        std::cerr << "error: canonical verification failed: " << rep.detail << '\n';
        return EXIT_VERIFY;
    }
    return 0;
}

int cmd_reduce_to_faces(const GraphArgs& ga, const std::vector<std::string>& cyc) {
    PlanarMap m = map_from(ga);
    ClosedWalk c = cycle_arg(m.graph(), cyc);
    Derivation d = face_boundary_reduction(m, c);
    std::cout << serialize(d);
    ReplayResult r = replay(d);
    if (!r.ok) {
        std::cerr << "error: replay failed at step " << r.failed_step << ": " << r.reason << '\n';
        return EXIT_VERIFY;
    }
    std::cout << "replay ok\n";
    return 0;
}

int cmd_tutte(const GraphArgs& ga) {
    GraphInput gi = parse_graph_text(slurp(ga.path));
    TutteTree tt = tutte_decompose(gi.graph);
    std::cout << serialize_tutte(gi.graph, tt);
    TutteCheck ck = check_tutte(gi.graph, tt);
    std::cout << "check " << (ck.ok() ? "ok" : "FAIL") << '\n';
    if (!ck.ok()) {
        std::cerr << "error: decomposition check failed: " << ck.detail << '\n';
        return EXIT_VERIFY;
    }
    return 0;
}

int cmd_blocks(const GraphArgs& ga) {
    GraphInput gi = parse_graph_text(slurp(ga.path));
    BlockTree bt = blocks(gi.graph);
    std::cout << "pw-blocks v1\n";
    for (size_t b = 0; b < bt.blocks.size(); ++b)
        std::cout << "block " << b << ": " << labels_of(gi.graph, bt.blocks[b]) << '\n';
    std::cout << "cutvertices: " << labels_of(gi.graph, bt.cutvertices) << '\n';
    return 0;
}

int cmd_lift(const GraphArgs& ga) {
    GraphInput gi = parse_graph_text(slurp(ga.path));
    const Graph& g = gi.graph;
    TutteTree tt = tutte_decompose(g);
    std::cout << serialize_tutte(g, tt);

    // fundamental cycles of every torso, mapped back to host ids
    std::vector<std::vector<ClosedWalk>> per_part(tt.parts.size());
    for (size_t t = 0; t < tt.parts.size(); ++t) {
        auto [tg, back] = torso(g, tt, static_cast<int>(t));
        for (const ClosedWalk& w : fundamental_cycles(tg)) {
            std::vector<Vertex> seq;
            for (Vertex v : w.closed_sequence()) seq.push_back(back[v]);
            per_part[t].push_back(ClosedWalk::from_closed_sequence(seq));
        }
        std::cout << "torso " << t << " rank " << per_part[t].size() << '\n';
    }
    std::vector<ClosedWalk> lifted = lift_generators(g, tt, per_part);
    std::vector<ChainVector> chains;
    for (const ClosedWalk& w : lifted) chains.push_back(walk_to_chain(g, w));
    int rank = lattice_rank(chains);
    int want = h1_rank(g);
    std::cout << "lifted " << lifted.size() << " walks, rank " << rank << " of " << want << '\n';
    if (rank != want) {
        std::cerr << "error: lifted set does not span the cycle lattice\n";
        return EXIT_VERIFY;
    }
    return 0;
}

int cmd_degseq(const GraphArgs& ga) {
    GraphInput gi = parse_graph_text(slurp(ga.path));
    AutomorphismGroup ag = automorphisms(gi.graph);
    std::cout << "pw-degseq v1\n";
    std::cout << "aut-order " << ag.order << '\n';
    for (const auto& o : ag.orbits) std::cout << "orbit: " << labels_of(gi.graph, o) << '\n';
    std::cout << "sequence:";
    for (int d : degree_sequence(gi.graph, ag.generators)) std::cout << ' ' << d;
    std::cout << '\n';
    return 0;
}

int cmd_cayley_ball(const std::string& path, int radius, int cap, bool dot) {
    CayleyBall ball = cayley_ball(parse_presentation(slurp(path)), radius, cap);
    if (dot) {
        std::cout << to_dot(ball.graph);
        return 0;
    }
    std::cout << "pw-ball v1\n";
    std::cout << "radius " << ball.radius << '\n';
    std::cout << "vertices " << ball.graph.num_vertices() << '\n';
    std::cout << "edges " << ball.graph.num_edges() << '\n';
    for (Vertex v = 0; v < ball.graph.num_vertices(); ++v) {
        std::cout << v << ':';
        for (int gidx = 1; gidx <= ball.ngens; ++gidx)
            for (int sign : {+1, -1}) {
                Vertex w = ball.step(v, sign * gidx);
                if (w >= 0)
                    std::cout << ' ' << (sign > 0 ? "" : "-") << ball.gen_names[gidx - 1] << "->"
                              << w;
            }
        std::cout << " dist=" << ball.distance[v] << (ball.interior[v] ? " interior" : "") << '\n';
    }
    return 0;
}

void print_word(const GroupWord& w) {
    for (size_t i = 0; i < w.size(); ++i) std::cout << (i ? " " : "") << w[i];
    std::cout << '\n';
}

int cmd_genpi(const GraphArgs& ga, const std::string& base_label, const std::string& genset_path) {
    GraphInput gi;
    PlanarMap m = map_from(ga, &gi);
    const Graph& g = m.graph();
    Vertex base = base_label.empty() ? 0 : vertex_by_label(g, base_label);

    std::vector<ClosedWalk> V;
    if (!genset_path.empty()) {
        V = parse_genset(slurp(genset_path), g).walks();
    } else {
        V = build_canonical(m, Mode::HomologyZ).walks();
    }
    Pi1Set ps = genpi(g, V, base);
    ChordCoder coder(g, base);
    std::cout << "pw-pi1 v1\n";
    std::cout << "base " << g.label_of(base) << '\n';
    std::cout << "chords " << coder.num_chords() << '\n';
    for (const Pi1Element& e : ps.elements) {
        std::cout << "word:";
        for (int x : e) std::cout << ' ' << x;
        std::cout << '\n';
    }
    int rank = abelianization_rank(ps.elements, coder.num_chords());
    std::cout << "abelianization-rank " << rank << " of " << h1_rank(g) << '\n';
    if (rank != h1_rank(g)) {
        std::cerr << "error: pi1 generators do not span the abelianization\n";
        return EXIT_VERIFY;
    }
    return 0;
}

int cmd_orbits(const std::string& path, int radius, int len, long budget) {
    CayleyBall ball = cayley_ball(parse_presentation(slurp(path)), radius);
    std::vector<ClosedWalk> cycles;
    for (const WalkClass& c : candidate_indecomposables(ball.graph, len))
        cycles.push_back(c.representative());
    Pi1Set ps = genpi(ball.graph, cycles, ball.base);
    PiOrbits po = orbit_partition_pi(ball, ps.elements, budget);
    std::cout << "pw-orbits v1\n";
    std::cout << "cycles " << cycles.size() << '\n';
    std::cout << "pi1-elements " << ps.elements.size() << '\n';
    // the count stays meaningful at the budget: unexplored moves can only
    // split orbits further, never merge distinct ones
    std::cout << "orbits " << po.orbit_count << (po.budget_hit ? " (budget hit)" : "") << '\n';
    for (size_t i = 0; i < po.labels.size(); ++i)
        std::cout << "label " << i << ' ' << po.labels[i] << '\n';
    return 0;
}

int cmd_verify(const std::string& path, const std::string& graph_path) {
    std::string text = slurp(path);
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    if (header == "pw-derivation v1") {
        Derivation d = parse_derivation(text);
        ReplayResult r = replay(d);
        if (!r.ok) {
            if (r.failed_step >= 0)
                std::cout << "replay FAIL at step " << r.failed_step << '\n';
            else
                std::cout << "replay FAIL: final state mismatch\n";
            std::cerr << "error: " << r.reason << '\n';
            return EXIT_VERIFY;
        }
        std::cout << "replay ok (" << d.steps.size() << " steps)\n";
        return 0;
    }
    if (header == "pw-genset v1") {
        if (graph_path.empty()) throw Error("verifying a generating set requires --graph");
        GraphArgs ga{graph_path, false};
        PlanarMap m = map_from(ga);
        GeneratingSet gs = parse_genset(text, m.graph());
        AutomorphismGroup ag = automorphisms(m.graph());
        CanonicalReport rep = verify_canonical(m, gs, ag.generators);
        std::cout << "verify stages " << (rep.stages_ok ? "ok" : "FAIL") << '\n';
        std::cout << "verify nested " << (rep.nested_ok ? "ok" : "FAIL") << '\n';
        std::cout << "verify invariant " << (rep.invariant_ok ? "ok" : "FAIL") << '\n';
        std::cout << "verify generates " << (rep.generates_ok ? "ok" : "FAIL") << '\n';
        if (!rep.ok()) {
            std::cerr << "error: " << rep.detail << '\n';
            return EXIT_VERIFY;
        }
        return 0;
    }
    throw Error("unrecognized artifact header: " + header);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planarwalks: canonical nested generating sets of planar closed-walk modules"};
    app.require_subcommand(1);

    GraphArgs ga;
    bool dot = false;
    std::vector<std::string> cyc;
    std::string mode_name = "homology-Z";
    int imax = 0;
    Budgets budgets;
    std::string pres_path, base_label, genset_path, graph_path, artifact_path;
    int radius = 2, cap = 200000, len = 4;
    long orbit_budget = 100000;

    auto* c_embed = app.add_subcommand("embed", "compute a combinatorial embedding");
    add_graph_input(c_embed, ga);
    c_embed->add_flag("--dot", dot, "emit graphviz instead");

    auto* c_faces = app.add_subcommand("faces", "list the faces of the embedding");
    add_graph_input(c_faces, ga);

    auto* c_regions = app.add_subcommand("regions", "two-sided region partition of a cycle");
    add_graph_input(c_regions, ga);
    c_regions->add_option("--cycle", cyc, "cycle as a vertex-label list")->required();

    auto* c_canonical = app.add_subcommand("canonical", "build and verify the canonical set");
    add_graph_input(c_canonical, ga);
    c_canonical->add_option("--mode", mode_name, "homology-Z | cyclespace-F2 | walk");
    c_canonical->add_option("--imax", imax, "stop after stage length imax");
    c_canonical->add_option("--node-budget", budgets.node_budget, "walk-mode search states");
    c_canonical->add_option("--coset-cap", budgets.coset_cap, "coset table rows");
    c_canonical->add_option("--connector-cap", budgets.connector_cap, "connector path length");
    c_canonical->add_flag("--dot", dot, "emit graphviz with the set highlighted");

    auto* c_reduce = app.add_subcommand("reduce-to-faces", "derive a cycle from face boundaries");
    add_graph_input(c_reduce, ga);
    c_reduce->add_option("--cycle", cyc, "cycle as a vertex-label list")->required();

    auto* c_tutte = app.add_subcommand("tutte", "Tutte decomposition with invariant checks");
    add_graph_input(c_tutte, ga);

    auto* c_blocks = app.add_subcommand("blocks", "block-cutvertex decomposition");
    add_graph_input(c_blocks, ga);

    auto* c_lift = app.add_subcommand("lift", "lift torso generators through the decomposition");
    add_graph_input(c_lift, ga);

    auto* c_degseq = app.add_subcommand("degseq", "orbit degree sequence under Aut");
    add_graph_input(c_degseq, ga);

    auto* c_ball = app.add_subcommand("cayley-ball", "ball of a Cayley graph");
    c_ball->add_option("presentation", pres_path, "presentation file")->required();
    c_ball->add_option("--radius", radius, "ball radius");
    c_ball->add_option("--cap", cap, "vertex cap");
    c_ball->add_flag("--dot", dot, "emit graphviz instead");

    auto* c_genpi = app.add_subcommand("genpi", "fundamental-group generators from a walk set");
    add_graph_input(c_genpi, ga);
    c_genpi->add_option("--base", base_label, "basepoint label (default: first vertex)");
    c_genpi->add_option("--genset", genset_path,
                        "generating-set file (default: build canonical homology-Z)");

    auto* c_orbits = app.add_subcommand("orbits", "orbit count of pi1 generators on a ball");
    c_orbits->add_option("presentation", pres_path, "presentation file")->required();
    c_orbits->add_option("--radius", radius, "ball radius");
    c_orbits->add_option("--len", len, "cycle length used as generators");
    c_orbits->add_option("--budget", orbit_budget, "orbit exploration budget");

    auto* c_verify = app.add_subcommand("verify", "replay a derivation or generating-set file");
    c_verify->add_option("artifact", artifact_path, "artifact file")->required();
    c_verify->add_option("--graph", graph_path, "graph file (for generating sets)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : EXIT_INPUT;
    }

    try {
        if (c_embed->parsed()) return cmd_embed(ga, dot);
        if (c_faces->parsed()) return cmd_faces(ga);
        if (c_regions->parsed()) return cmd_regions(ga, cyc);
        if (c_canonical->parsed()) return cmd_canonical(ga, mode_name, imax, budgets, dot);
        if (c_reduce->parsed()) return cmd_reduce_to_faces(ga, cyc);
        if (c_tutte->parsed()) return cmd_tutte(ga);
        if (c_blocks->parsed()) return cmd_blocks(ga);
        if (c_lift->parsed()) return cmd_lift(ga);
        if (c_degseq->parsed()) return cmd_degseq(ga);
        if (c_ball->parsed()) return cmd_cayley_ball(pres_path, radius, cap, dot);
        if (c_genpi->parsed()) return cmd_genpi(ga, base_label, genset_path);
        if (c_orbits->parsed()) return cmd_orbits(pres_path, radius, len, orbit_budget);
        if (c_verify->parsed()) return cmd_verify(artifact_path, graph_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_budget_error(e.what()) ? EXIT_BUDGET : EXIT_INPUT;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_INPUT;
    }
    return EXIT_INPUT;
}
