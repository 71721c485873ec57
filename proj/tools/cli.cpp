#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <functional>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <set>
#include <sstream>

#include "homcover/covering.hpp"
#include "homcover/deck.hpp"
#include "homcover/error.hpp"
#include "homcover/families.hpp"
#include "homcover/io.hpp"
#include "homcover/morphism.hpp"
#include "homcover/universal.hpp"
#include "homcover/walk.hpp"

namespace homcover::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Context {
    std::istream& in;
    std::ostream& out;
    bool json = false;
};

// A negative verdict: the report is printed, the exit code is 1.
constexpr int kVerdictFalse = 1;

Graph input_graph(Context& ctx, const std::string& path) {
    if (path.empty() || path == "-") {
        std::string text{std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>()};
        return parse_graph(text, "stdin");
    }
    return load_graph(path);
}

void emit_text(Context& ctx, const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        ctx.out << text;
    else
        write_text(path, text);
}

void emit_json(Context& ctx, const json& j) { ctx.out << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json graph_summary(const Graph& g) { return {{"name", g.name()}, {"order", g.order()}, {"size", g.size()}}; }

json map_json(const Morphism& f) {
    json m = json::object();
    for (Vertex v = 0; v < f.dom().order(); ++v) m[f.dom().label(v)] = f.cod().label(f(v));
    return m;
}

json group_json(const GroupDescription& d) {
    json j{{"name", d.name}, {"order", d.order}, {"abelian", d.abelian}, {"element_orders", d.element_orders}};
    if (!d.table.empty()) j["table"] = d.table;
    return j;
}

json shift_json(const ShiftEvidence& s) {
    json sizes = json::array();
    for (auto [d, n] : s.fibre_sizes) sizes.push_back({d, n});
    return {{"generator", s.generator.str()},
            {"safe_fibre_size", s.safe_fibre_size},
            {"powers", s.powers},
            {"fibre_sizes", sizes}};
}

std::string shift_line(const ShiftEvidence& s) {
    std::string sizes;
    for (auto [d, n] : s.fibre_sizes) sizes += " " + std::to_string(d) + ":" + std::to_string(n);
    return "shift generator: " + s.generator.str() + " (safe fibre " + std::to_string(s.safe_fibre_size) +
           ", fibre sizes by depth" + sizes + ")";
}

// ---- subcommands -------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::vector<int> params;
    std::string output;
};

int cmd_gen(Context& ctx, const GenArgs& a) {
    const auto g = generate({family_from_tag(a.family), a.params});
    const auto text = format_graph(g);
    if (ctx.json) {
        auto j = json{{"command", "gen"}};
        j["graph"] = graph_summary(g);
        if (a.output.empty() || a.output == "-")
            j["text"] = text;
        else
            write_text(a.output, text);
        emit_json(ctx, j);
    } else {
        emit_text(ctx, a.output, text);
    }
    return 0;
}

struct GraphArgs {
    std::string graph;
};

int cmd_info(Context& ctx, const GraphArgs& a) {
    const auto g = input_graph(ctx, a.graph);
    const auto ds = diamonds(g);
    const auto fold = find_fold(g);
    std::vector<std::string> looped;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.looped(v)) looped.push_back(g.label(v));
    if (ctx.json) {
        auto j = json{{"command", "info"}};
        j["graph"] = graph_summary(g);
        j["looped"] = looped;
        j["diamonds"] = json::array();
        for (const auto& d : ds) j["diamonds"].push_back(to_string(g, d));
        j["stiff"] = !fold.has_value();
        j["fold"] = fold ? json::array({g.label(fold->first), g.label(fold->second)}) : json(nullptr);
        emit_json(ctx, j);
        return 0;
    }
    ctx.out << "name " << g.name() << "\norder " << g.order() << "\nsize " << g.size() << "\nlooped "
            << looped.size() << "\ndiamonds " << ds.size() << '\n';
    for (const auto& d : ds) ctx.out << "diamond " << to_string(g, d) << '\n';
    ctx.out << "stiff " << yes_no(!fold) << '\n';
    if (fold) ctx.out << "fold " << g.label(fold->first) << " onto " << g.label(fold->second) << '\n';
    return 0;
}

struct PleatArgs {
    std::string graph;
    std::string output;
    std::string map;
};

int cmd_pleat(Context& ctx, const PleatArgs& a) {
    const auto g = input_graph(ctx, a.graph);
    const auto result = pleat(g);
    const auto text = format_graph(result.pleat);
    if (!a.map.empty())
        write_text(a.map, format_morphism(result.retraction, a.graph == "-" ? "" : a.graph,
                                          a.output == "-" ? "" : a.output));
    if (ctx.json) {
        auto j = json{{"command", "pleat"}};
        j["pleat"] = graph_summary(result.pleat);
        j["folds"] = json::array();
        for (auto [x, y] : result.folds) j["folds"].push_back({g.label(x), g.label(y)});
        j["retraction"] = map_json(result.retraction);
        if (a.output.empty() || a.output == "-")
            j["text"] = text;
        else
            write_text(a.output, text);
        emit_json(ctx, j);
    } else {
        emit_text(ctx, a.output, text);
    }
    return 0;
}

struct MapArgs {
    std::string map;
};

int cmd_check_cover(Context& ctx, const MapArgs& a) {
    const auto f = load_morphism(a.map);
    const auto r = check_cover(f);
    if (ctx.json) {
        auto j = json{{"command", "check-cover"}};
        j["surjective"] = r.is_surjective;
        j["cover"] = r.is_cover;
        j["homotopy_cover"] = r.is_homotopy_cover;
        j["neighborhood_failures"] = json::array();
        for (const auto& nf : r.neighborhood_failures)
            j["neighborhood_failures"].push_back({{"vertex", f.dom().label(nf.vertex)}, {"defect", nf.defect}});
        j["diamond_failures"] = json::array();
        for (const auto& d : r.diamond_failures) j["diamond_failures"].push_back(to_string(f.cod(), d));
        emit_json(ctx, j);
    } else {
        ctx.out << "surjective " << yes_no(r.is_surjective) << '\n';
        for (const auto& nf : r.neighborhood_failures)
            ctx.out << "neighborhood failure at " << f.dom().label(nf.vertex) << ": " << nf.defect << '\n';
        ctx.out << "cover " << yes_no(r.is_cover) << '\n';
        for (const auto& d : r.diamond_failures)
            ctx.out << "diamond " << to_string(f.cod(), d) << " does not lift\n";
        ctx.out << "homotopy cover " << yes_no(r.is_homotopy_cover) << '\n';
    }
    return r.is_homotopy_cover ? 0 : kVerdictFalse;
}

struct LiftWalkArgs {
    std::string map;
    std::string walk;
    std::string start;
};

int cmd_lift_walk(Context& ctx, const LiftWalkArgs& a) {
    const auto f = load_morphism(a.map);
    const auto lifted = lift_walk(f, Walk::parse(f.cod(), a.walk), f.dom().vertex(a.start));
    if (ctx.json)
        emit_json(ctx, {{"command", "lift-walk"}, {"walk", lifted.str()}});
    else
        ctx.out << lifted.str() << '\n';
    return 0;
}

struct LiftHomotopyArgs {
    std::string map;
    std::string chain;
    std::string start_lift;
};

int cmd_lift_homotopy(Context& ctx, const LiftHomotopyArgs& a) {
    const auto f = load_morphism(a.map);
    const auto chain_text = parse_chain_text(read_text(a.chain));
    if (chain_text.dom_ref.empty())
        throw ParseError(a.chain + ": missing 'dom' reference for the test graph");
    const auto k = load_graph(fs::path(a.chain).parent_path() / chain_text.dom_ref);
    std::vector<Morphism> chain;
    for (const auto& m : chain_text.maps) chain.push_back(resolve_morphism(m, k, f.cod()));
    const auto start = load_morphism(a.start_lift, k, f.dom());
    const auto lifted = lift_homotopy(f, chain, start);
    if (ctx.json) {
        auto j = json{{"command", "lift-homotopy"}, {"steps", lifted.size()}};
        j["chain"] = json::array();
        for (const auto& m : lifted) j["chain"].push_back(map_json(m));
        emit_json(ctx, j);
    } else {
        ctx.out << format_chain(lifted);
    }
    return 0;
}

struct HomotopicWalksArgs {
    std::string graph;
    std::string first;
    std::string second;
    std::size_t slack = 2;
    bool oracle = false;
    std::size_t max_len = 0;
    std::size_t max_states = 1'000'000;
};

int cmd_homotopic_walks(Context& ctx, const HomotopicWalksArgs& a) {
    const auto g = input_graph(ctx, a.graph);
    const auto wa = Walk::parse(g, a.first);
    const auto wb = Walk::parse(g, a.second);
    const auto r = homotopic_rel_endpoints(wa, wb, a.slack);
    std::string verdict = r.verdict == DeciderVerdict::Yes  ? "yes"
                          : r.verdict == DeciderVerdict::No ? "no"
                                                            : "unstable";
    std::string method = "lifting";
    std::optional<OracleResult> oracle;
    if (a.oracle && r.verdict == DeciderVerdict::Unstable) {
        oracle = oracle_homotopic_rel_endpoints(wa, wb, {a.max_len, a.max_states});
        if (oracle->verdict == OracleVerdict::Yes) {
            verdict = "yes";
            method = "oracle";
        }
    }
    if (ctx.json) {
        auto j = json{{"command", "homotopic-walks"}, {"verdict", verdict}, {"method", method}};
        j["depths"] = {r.depth_low, r.depth_high};
        if (oracle) j["oracle"] = {{"states", oracle->states_explored}, {"max_len", oracle->max_len}};
        emit_json(ctx, j);
    } else {
        ctx.out << verdict << " (" << method;
        if (method == "lifting") ctx.out << ", depths " << r.depth_low << " and " << r.depth_high;
        if (oracle) ctx.out << ", oracle explored " << oracle->states_explored << " states";
        ctx.out << ")\n";
    }
    return verdict == "yes" ? 0 : kVerdictFalse;
}

struct HomotopicMapsArgs {
    std::string first;
    std::string second;
    std::size_t max_states = 1'000'000;
};

int cmd_homotopic_maps(Context& ctx, const HomotopicMapsArgs& a) {
    const auto f = load_morphism(a.first);
    const auto g = load_morphism(a.second, f.dom(), f.cod());
    const auto r = homotopic(f, g, a.max_states);
    const std::string verdict = r.verdict == HomotopyVerdict::Yes  ? "yes"
                                : r.verdict == HomotopyVerdict::No ? "no"
                                                                   : "inconclusive";
    if (ctx.json) {
        auto j = json{{"command", "homotopic-maps"}, {"verdict", verdict}, {"states", r.states_explored}};
        j["moves"] = json::array();
        for (const auto& m : r.moves)
            j["moves"].push_back({{"vertex", f.dom().label(m.vertex)}, {"image", f.cod().label(m.image)}});
        emit_json(ctx, j);
    } else {
        ctx.out << verdict << '\n';
        for (const auto& m : r.moves)
            ctx.out << "move " << f.dom().label(m.vertex) << " -> " << f.cod().label(m.image) << '\n';
    }
    return r.verdict == HomotopyVerdict::Yes ? 0 : kVerdictFalse;
}

struct CoverArgs {
    std::string graph;
    std::string basepoint;
    std::size_t depth = 8;
};

Vertex basepoint_of(const Graph& g, const std::string& label) {
    return label.empty() ? Vertex{0} : g.vertex(label);
}

struct UniversalArgs : CoverArgs {
    std::string dot;
    std::string output;
};

int cmd_universal(Context& ctx, const UniversalArgs& a) {
    const auto g = input_graph(ctx, a.graph);
    const auto u = build_folded_cover(g, basepoint_of(g, a.basepoint), a.depth);
    if (!a.dot.empty()) emit_text(ctx, a.dot, to_dot(u));
    if (!a.output.empty()) emit_text(ctx, a.output, format_graph(u.graph()));
    if (ctx.json) {
        auto j = json{{"command", "universal-cover"}, {"depth", u.depth()}, {"classes", u.class_count()},
                      {"edges", u.graph().size()}, {"stabilized", u.stabilized()},
                      {"frontier", u.frontier().size()}};
        j["representatives"] = json::array();
        for (ClassId c = 0; c < u.class_count(); ++c) j["representatives"].push_back(u.representative_walk(c).str());
        emit_json(ctx, j);
    } else if (a.dot != "-" && a.output != "-") {
        ctx.out << "depth " << u.depth() << "\nclasses " << u.class_count() << "\nedges " << u.graph().size()
                << "\nstabilized " << yes_no(u.stabilized()) << "\nfrontier " << u.frontier().size() << '\n';
    }
    return 0;
}

struct GroupArgs : CoverArgs {
    std::size_t order_bound = kDefaultOrderBound;
};

int cmd_fundamental_group(Context& ctx, const GroupArgs& a) {
    const auto g = input_graph(ctx, a.graph);
    const auto r = fundamental_group(g, basepoint_of(g, a.basepoint), a.depth, a.order_bound);
    if (ctx.json) {
        auto j = json{{"command", "fundamental-group"}, {"depth", r.depth}, {"stabilized", r.stabilized},
                      {"classes", r.class_count}};
        j["group"] = r.group ? group_json(*r.group) : json(nullptr);
        j["shift"] = r.shift ? shift_json(*r.shift) : json(nullptr);
        emit_json(ctx, j);
    } else if (r.group) {
        ctx.out << (r.group->name.empty() ? "non-abelian group of order " + std::to_string(r.group->order)
                                          : r.group->name)
                << '\n';
    } else {
        ctx.out << "not stabilized at depth " << r.depth << '\n';
        if (r.shift) ctx.out << shift_line(*r.shift) << '\n';
    }
    return r.group || r.shift ? 0 : kVerdictFalse;
}

int cmd_deck_group(Context& ctx, const GroupArgs& a) {
    const auto g = input_graph(ctx, a.graph);
    const auto r = fundamental_group(g, basepoint_of(g, a.basepoint), a.depth, a.order_bound);
    if (!r.stabilized) {
        if (ctx.json)
            emit_json(ctx, {{"command", "deck-group"}, {"stabilized", false}, {"depth", r.depth}});
        else
            ctx.out << "not stabilized at depth " << r.depth << '\n';
        return kVerdictFalse;
    }
    const DeckGroup deck(build_folded_cover(g, basepoint_of(g, a.basepoint), r.depth));
    const auto& u = deck.cover();
    if (ctx.json) {
        auto j = json{{"command", "deck-group"}, {"stabilized", true}, {"depth", r.depth}};
        j["group"] = group_json(*r.group);
        j["elements"] = json::array();
        for (auto c : deck.fibre()) j["elements"].push_back(u.representative_walk(c).str());
        j["table"] = deck.group().table;
        emit_json(ctx, j);
        return 0;
    }
    ctx.out << "order " << deck.order() << "\ngroup "
            << (r.group->name.empty() ? std::string("unnamed") : r.group->name) << '\n';
    for (std::size_t i = 0; i < deck.order(); ++i)
        ctx.out << "element " << i << ": " << u.representative_walk(deck.fibre()[i]).str() << '\n';
    for (const auto& row : deck.group().table) {
        ctx.out << "table";
        for (auto x : row) ctx.out << ' ' << x;
        ctx.out << '\n';
    }
    return 0;
}

struct EnumerateArgs : CoverArgs {
    std::size_t max_index = 4;
    std::string out_dir;
};

int cmd_enumerate(Context& ctx, const EnumerateArgs& a) {
    const auto g = input_graph(ctx, a.graph);
    const auto e = enumerate_covers(g, basepoint_of(g, a.basepoint), a.depth, a.max_index);
    if (!a.out_dir.empty()) {
        fs::create_directories(a.out_dir);
        save_graph(fs::path(a.out_dir) / "base.graph", g);
        for (const auto& c : e.covers) {
            const auto stem = c.graph.name();
            save_graph(fs::path(a.out_dir) / (stem + ".graph"), c.graph);
            write_text(fs::path(a.out_dir) / (stem + ".morph"),
                       format_morphism(c.projection, stem + ".graph", "base.graph"));
        }
    }
    if (ctx.json) {
        auto j = json{{"command", "enumerate-covers"}, {"depth", e.depth}, {"stabilized", e.stabilized}};
        j["shift"] = e.shift ? shift_json(*e.shift) : json(nullptr);
        j["covers"] = json::array();
        for (const auto& c : e.covers)
            j["covers"].push_back({{"name", c.graph.name()}, {"index", c.index}, {"order", c.graph.order()},
                                   {"size", c.graph.size()}, {"subgroup", c.subgroup}});
        j["note"] = e.note;
        emit_json(ctx, j);
    } else {
        if (!e.stabilized) ctx.out << "not stabilized at depth " << e.depth << '\n';
        if (e.shift) ctx.out << shift_line(*e.shift) << '\n';
        for (const auto& c : e.covers)
            ctx.out << c.graph.name() << ": index " << c.index << ", " << c.graph.order() << " vertices, "
                    << c.graph.size() << " edges, subgroup " << c.subgroup << '\n';
        if (!e.note.empty()) ctx.out << e.note << '\n';
    }
    return e.covers.empty() ? kVerdictFalse : 0;
}

struct QuotientArgs : CoverArgs {
    std::vector<std::string> generators;
    std::size_t power = 1;
    std::string output;
    std::string map;
};

int cmd_quotient(Context& ctx, const QuotientArgs& a) {
    const auto g = input_graph(ctx, a.graph);
    const auto v = basepoint_of(g, a.basepoint);
    const auto r = fundamental_group(g, v, a.depth);
    std::optional<QuotientCover> q;
    if (r.stabilized) {
        const DeckGroup deck(build_folded_cover(g, v, r.depth));
        std::vector<std::uint32_t> gens;
        for (const auto& text : a.generators) {
            const auto walk = Walk::parse(g, text);
            const auto c = deck.cover().lift(walk);
            const auto& fibre = deck.fibre();
            const auto it = std::find(fibre.begin(), fibre.end(), c);
            if (it == fibre.end()) throw PreconditionError("generator '" + text + "' is not a closed walk");
            std::uint32_t element = 0;
            for (std::size_t i = 0; i < a.power; ++i)
                element = deck.group().table[element][static_cast<std::uint32_t>(it - fibre.begin())];
            gens.push_back(element);
        }
        // Subgroup generated by the requested elements.
        std::set<std::uint32_t> members{0};
        for (bool grew = true; grew;) {
            grew = false;
            for (auto x : std::vector<std::uint32_t>(members.begin(), members.end()))
                for (auto s : gens) grew = members.insert(deck.group().table[x][s]).second || grew;
        }
        q = quotient(deck, Subgroup{{members.begin(), members.end()}});
    } else {
        if (a.generators.size() != 1)
            throw PreconditionError("cover did not stabilize by depth " + std::to_string(r.depth) +
                                    "; a single --generator is required for a cyclic quotient");
        q = cyclic_quotient(g, v, Walk::parse(g, a.generators.front()), a.power);
    }
    const auto text = format_graph(q->graph);
    if (!a.map.empty())
        write_text(a.map, format_morphism(q->projection, a.output == "-" ? "" : a.output,
                                          a.graph == "-" ? "" : a.graph));
    if (ctx.json) {
        auto j = json{{"command", "quotient"}, {"index", q->index}};
        j["graph"] = graph_summary(q->graph);
        if (a.output.empty() || a.output == "-")
            j["text"] = text;
        else
            write_text(a.output, text);
        emit_json(ctx, j);
    } else {
        emit_text(ctx, a.output, text);
    }
    return 0;
}

struct DotArgs {
    std::string graph;
    std::string output;
};

int cmd_export_dot(Context& ctx, const DotArgs& a) {
    const auto g = input_graph(ctx, a.graph);
    emit_text(ctx, a.output, to_dot(g));
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homotopy covers of finite graphs", "homcover"};
    app.require_subcommand(1);
    bool json_flag = false;
    app.add_flag("--json", json_flag, "Machine-readable report");

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json_flag, "Machine-readable report"); };
    auto add_graph = [](CLI::App* sub, std::string& target) {
        sub->add_option("-g,--graph", target, "Graph file ('-' or omitted: standard input)");
    };
    auto add_cover = [&](CLI::App* sub, CoverArgs& c, std::size_t default_depth) {
        add_graph(sub, c.graph);
        sub->add_option("-v,--vertex", c.basepoint, "Basepoint (default: first vertex)");
        c.depth = default_depth;
        sub->add_option("--depth", c.depth, "Truncation depth")->capture_default_str();
    };

    std::function<int(Context&)> action;

    GenArgs gen;
    auto* s_gen = app.add_subcommand("gen", "Generate a family graph");
    s_gen->add_option("family", gen.family, "path | looped-path | cycle | complete | complete-bipartite | "
                                            "wheel | kneser | paper-g | paper-g-tilde")
        ->required();
    s_gen->add_option("params", gen.params, "Integer parameters");
    s_gen->add_option("-o,--output", gen.output, "Output graph file");
    add_json(s_gen);
    s_gen->callback([&] { action = [&](Context& c) { return cmd_gen(c, gen); }; });

    GraphArgs info;
    auto* s_info = app.add_subcommand("info", "Order, size, diamonds and stiffness");
    add_graph(s_info, info.graph);
    add_json(s_info);
    s_info->callback([&] { action = [&](Context& c) { return cmd_info(c, info); }; });

    PleatArgs pl;
    auto* s_pleat = app.add_subcommand("pleat", "Fold down to the stiff representative");
    add_graph(s_pleat, pl.graph);
    s_pleat->add_option("-o,--output", pl.output, "Output graph file");
    s_pleat->add_option("--map", pl.map, "Write the retraction morphism here");
    add_json(s_pleat);
    s_pleat->callback([&] { action = [&](Context& c) { return cmd_pleat(c, pl); }; });

    MapArgs cc;
    auto* s_cc = app.add_subcommand("check-cover", "Cover and homotopy-cover verdicts");
    s_cc->add_option("--map", cc.map, "Morphism file with dom/cod references")->required();
    add_json(s_cc);
    s_cc->callback([&] { action = [&](Context& c) { return cmd_check_cover(c, cc); }; });

    LiftWalkArgs lw;
    auto* s_lw = app.add_subcommand("lift-walk", "Lift a walk through a cover");
    s_lw->add_option("--map", lw.map, "Covering morphism file")->required();
    s_lw->add_option("--walk", lw.walk, "Walk in the base, e.g. \"a b c\"")->required();
    s_lw->add_option("--start", lw.start, "Start vertex in the cover")->required();
    add_json(s_lw);
    s_lw->callback([&] { action = [&](Context& c) { return cmd_lift_walk(c, lw); }; });

    LiftHomotopyArgs lh;
    auto* s_lh = app.add_subcommand("lift-homotopy", "Lift a homotopy chain through a homotopy cover");
    s_lh->add_option("--map", lh.map, "Covering morphism file")->required();
    s_lh->add_option("--chain", lh.chain, "Chain file of maps K -> base")->required();
    s_lh->add_option("--start-lift", lh.start_lift, "Lift of the first map, K -> cover")->required();
    add_json(s_lh);
    s_lh->callback([&] { action = [&](Context& c) { return cmd_lift_homotopy(c, lh); }; });

    HomotopicWalksArgs hw;
    auto* s_hw = app.add_subcommand("homotopic-walks", "Decide homotopy rel endpoints of two walks");
    add_graph(s_hw, hw.graph);
    s_hw->add_option("-a,--first", hw.first, "First walk")->required();
    s_hw->add_option("-b,--second", hw.second, "Second walk")->required();
    s_hw->add_option("--slack", hw.slack, "Extra truncation depth")->capture_default_str();
    s_hw->add_flag("--oracle", hw.oracle, "Fall back to the rewriting search when lifting is unstable");
    s_hw->add_option("--max-len", hw.max_len, "Oracle walk length bound (0: automatic)");
    s_hw->add_option("--max-states", hw.max_states, "Oracle state bound")->capture_default_str();
    add_json(s_hw);
    s_hw->callback([&] { action = [&](Context& c) { return cmd_homotopic_walks(c, hw); }; });

    HomotopicMapsArgs hm;
    auto* s_hm = app.add_subcommand("homotopic-maps", "Search for a spider-move path between two maps");
    s_hm->add_option("--first", hm.first, "First morphism file")->required();
    s_hm->add_option("--second", hm.second, "Second morphism file (same dom/cod)")->required();
    s_hm->add_option("--max-states", hm.max_states, "State bound")->capture_default_str();
    add_json(s_hm);
    s_hm->callback([&] { action = [&](Context& c) { return cmd_homotopic_maps(c, hm); }; });

    UniversalArgs uc;
    auto* s_uc = app.add_subcommand("universal-cover", "Build the truncated universal cover");
    add_cover(s_uc, uc, 8);
    s_uc->add_option("--dot", uc.dot, "Write DOT here ('-' for standard output)");
    s_uc->add_option("-o,--output", uc.output, "Write the class graph as a graph file");
    add_json(s_uc);
    s_uc->callback([&] { action = [&](Context& c) { return cmd_universal(c, uc); }; });

    GroupArgs fg;
    auto* s_fg = app.add_subcommand("fundamental-group", "Identify the fundamental group");
    add_cover(s_fg, fg, 12);
    s_fg->add_option("--order-bound", fg.order_bound, "Largest group order to identify")->capture_default_str();
    add_json(s_fg);
    s_fg->callback([&] { action = [&](Context& c) { return cmd_fundamental_group(c, fg); }; });

    GroupArgs dg;
    auto* s_dg = app.add_subcommand("deck-group", "Deck transformations and composition table");
    add_cover(s_dg, dg, 12);
    s_dg->add_option("--order-bound", dg.order_bound, "Largest group order to identify")->capture_default_str();
    add_json(s_dg);
    s_dg->callback([&] { action = [&](Context& c) { return cmd_deck_group(c, dg); }; });

    EnumerateArgs en;
    auto* s_en = app.add_subcommand("enumerate-covers", "Enumerate connected homotopy covers");
    add_cover(s_en, en, 12);
    s_en->add_option("--max-index", en.max_index, "Largest cover degree (0: all)")->capture_default_str();
    s_en->add_option("--out-dir", en.out_dir, "Write graph and morphism files here");
    add_json(s_en);
    s_en->callback([&] { action = [&](Context& c) { return cmd_enumerate(c, en); }; });

    QuotientArgs qu;
    auto* s_qu = app.add_subcommand("quotient", "Quotient of the universal cover by a subgroup");
    add_cover(s_qu, qu, 12);
    s_qu->add_option("--generator", qu.generators, "Closed walk at the basepoint (repeatable)");
    s_qu->add_option("--power", qu.power, "Raise each generator to this power")->capture_default_str();
    s_qu->add_option("-o,--output", qu.output, "Output graph file");
    s_qu->add_option("--map", qu.map, "Write the covering morphism here");
    add_json(s_qu);
    s_qu->callback([&] { action = [&](Context& c) { return cmd_quotient(c, qu); }; });

    DotArgs dot;
    auto* s_dot = app.add_subcommand("export-dot", "Graph file to DOT");
    add_graph(s_dot, dot.graph);
    s_dot->add_option("-o,--output", dot.output, "Output DOT file");
    s_dot->callback([&] { action = [&](Context& c) { return cmd_export_dot(c, dot); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    Context ctx{in, out, json_flag};
    try {
        return action(ctx);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"homcover"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace homcover::cli
