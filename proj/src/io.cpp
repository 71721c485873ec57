#include "homcover/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "homcover/error.hpp"

namespace homcover {

namespace {

std::vector<std::string> tokens(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(std::move(t));
    return out;
}

// Splits into lines with comments removed; keeps 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> lines_of(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto t = tokens(line);
        if (!t.empty()) out.emplace_back(number, std::move(t));
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw ParseError("line " + std::to_string(line) + ": " + message);
}

void expect_arity(std::size_t line, const std::vector<std::string>& t, std::size_t n) {
    if (t.size() != n)
        fail(line, "'" + t[0] + "' expects " + std::to_string(n - 1) + " argument(s), got " +
                       std::to_string(t.size() - 1));
}

}  // namespace

Graph parse_graph(std::string_view text, std::string default_name) {
    std::string name = std::move(default_name);
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::size_t> edge_lines;
    bool seen_header = false;
    for (const auto& [line, t] : lines_of(text)) {
        if (t[0] == "graph") {
            expect_arity(line, t, 2);
            if (seen_header || !labels.empty() || !edges.empty())
                fail(line, "'graph' header must come first and only once");
            seen_header = true;
            name = t[1];
        } else if (t[0] == "v") {
            expect_arity(line, t, 2);
            if (std::find(labels.begin(), labels.end(), t[1]) != labels.end())
                fail(line, "duplicate vertex '" + t[1] + "'");
            labels.push_back(t[1]);
        } else if (t[0] == "e") {
            expect_arity(line, t, 3);
            edges.emplace_back(t[1], t[2]);
            edge_lines.push_back(line);
        } else {
            fail(line, "unknown directive '" + t[0] + "'");
        }
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (const auto& id : {edges[i].first, edges[i].second})
            if (std::find(labels.begin(), labels.end(), id) == labels.end())
                fail(edge_lines[i], "edge references undeclared vertex '" + id + "'");
    return Graph::from_labels(std::move(name), std::move(labels), edges);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.name() << '\n';
    for (const auto& label : g.labels()) out << "v " << label << '\n';
    for (const auto& e : g.edges()) out << "e " << g.label(e.first) << ' ' << g.label(e.second) << '\n';
    return out.str();
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << text;
}

Graph load_graph(const std::filesystem::path& path) {
    try {
        return parse_graph(read_text(path), path.stem().string());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save_graph(const std::filesystem::path& path, const Graph& g) { write_text(path, format_graph(g)); }

std::string to_dot(const Graph& g, std::span<const std::string> labels) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream out;
    out << "graph " << quote(g.name()) << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << quote(g.label(v));
        if (!labels.empty()) out << " [label=" << quote(labels[v]) << "]";
        out << ";\n";
    }
    for (const auto& e : g.edges())
        out << "  " << quote(g.label(e.first)) << " -- " << quote(g.label(e.second)) << ";\n";
    out << "}\n";
    return out.str();
}

MorphismText parse_morphism_text(std::string_view text) {
    MorphismText out;
    for (const auto& [line, t] : lines_of(text)) {
        if (t[0] == "dom" || t[0] == "cod") {
            expect_arity(line, t, 2);
            (t[0] == "dom" ? out.dom_ref : out.cod_ref) = t[1];
        } else if (t[0] == "m") {
            expect_arity(line, t, 3);
            out.entries.emplace_back(t[1], t[2]);
        } else {
            fail(line, "unknown directive '" + t[0] + "'");
        }
    }
    return out;
}

Morphism resolve_morphism(const MorphismText& text, const Graph& dom, const Graph& cod) {
    std::vector<std::int64_t> map(dom.order(), -1);
    for (const auto& [x, y] : text.entries) {
        const auto v = dom.find(x);
        if (!v) throw ParseError("morphism maps unknown domain vertex '" + x + "'");
        const auto w = cod.find(y);
        if (!w) throw ParseError("morphism maps to unknown codomain vertex '" + y + "'");
        if (map[*v] >= 0) throw ParseError("domain vertex '" + x + "' mapped twice");
        map[*v] = *w;
    }
    std::vector<Vertex> out(dom.order());
    for (Vertex v = 0; v < dom.order(); ++v) {
        if (map[v] < 0) throw ParseError("domain vertex '" + dom.label(v) + "' is not mapped");
        out[v] = static_cast<Vertex>(map[v]);
    }
    return Morphism(dom, cod, std::move(out));
}

std::string format_morphism(const Morphism& f, std::string_view dom_ref, std::string_view cod_ref) {
    std::ostringstream out;
    if (!dom_ref.empty()) out << "dom " << dom_ref << '\n';
    if (!cod_ref.empty()) out << "cod " << cod_ref << '\n';
    for (Vertex v = 0; v < f.dom().order(); ++v)
        out << "m " << f.dom().label(v) << ' ' << f.cod().label(f(v)) << '\n';
    return out.str();
}

namespace {

std::pair<Graph, Graph> referenced_graphs(const std::filesystem::path& path, const std::string& dom_ref,
                                          const std::string& cod_ref) {
    if (dom_ref.empty() || cod_ref.empty())
        throw ParseError(path.string() + ": missing 'dom' or 'cod' reference");
    const auto dir = path.parent_path();
    return {load_graph(dir / dom_ref), load_graph(dir / cod_ref)};
}

}  // namespace

Morphism load_morphism(const std::filesystem::path& path) {
    const auto text = parse_morphism_text(read_text(path));
    auto [dom, cod] = referenced_graphs(path, text.dom_ref, text.cod_ref);
    return resolve_morphism(text, dom, cod);
}

Morphism load_morphism(const std::filesystem::path& path, const Graph& dom, const Graph& cod) {
    return resolve_morphism(parse_morphism_text(read_text(path)), dom, cod);
}

ChainText parse_chain_text(std::string_view text) {
    ChainText out;
    for (const auto& [line, t] : lines_of(text)) {
        if (t[0] == "dom" || t[0] == "cod") {
            expect_arity(line, t, 2);
            (t[0] == "dom" ? out.dom_ref : out.cod_ref) = t[1];
        } else if (t[0] == "map") {
            expect_arity(line, t, 1);
            out.maps.emplace_back();
        } else if (t[0] == "m") {
            expect_arity(line, t, 3);
            if (out.maps.empty()) fail(line, "'m' line before the first 'map'");
            out.maps.back().entries.emplace_back(t[1], t[2]);
        } else {
            fail(line, "unknown directive '" + t[0] + "'");
        }
    }
    return out;
}

std::vector<Morphism> load_chain(const std::filesystem::path& path, const Graph& dom, const Graph& cod) {
    std::vector<Morphism> chain;
    for (const auto& m : parse_chain_text(read_text(path)).maps)
        chain.push_back(resolve_morphism(m, dom, cod));
    return chain;
}

std::vector<Morphism> load_chain(const std::filesystem::path& path) {
    const auto text = parse_chain_text(read_text(path));
    auto [dom, cod] = referenced_graphs(path, text.dom_ref, text.cod_ref);
    std::vector<Morphism> chain;
    for (const auto& m : text.maps) chain.push_back(resolve_morphism(m, dom, cod));
    return chain;
}

std::string format_chain(const std::vector<Morphism>& chain, std::string_view dom_ref,
                         std::string_view cod_ref) {
    std::ostringstream out;
    if (!dom_ref.empty()) out << "dom " << dom_ref << '\n';
    if (!cod_ref.empty()) out << "cod " << cod_ref << '\n';
    for (const auto& f : chain) out << "map\n" << format_morphism(f);
    return out.str();
}

}  // namespace homcover
