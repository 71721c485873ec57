#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homcover/graph.hpp"
#include "homcover/morphism.hpp"

namespace homcover {

// Graph file: `# comment`, `graph <name>`, `v <id>`, `e <id> <id>`.
Graph parse_graph(std::string_view text, std::string default_name = "G");
// Vertices in graph order, then edges sorted by vertex index; parse_graph inverts it.
std::string format_graph(const Graph& g);
Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);

// `graph { ... }` with one statement per edge. `labels` overrides vertex names.
std::string to_dot(const Graph& g, std::span<const std::string> labels = {});

// Raw contents of a morphism file: optional `dom`/`cod` references plus `m x y` lines.
struct MorphismText {
    std::string dom_ref;
    std::string cod_ref;
    std::vector<std::pair<std::string, std::string>> entries;
};

MorphismText parse_morphism_text(std::string_view text);
// Resolves labels against the given graphs; every domain vertex must be mapped once.
Morphism resolve_morphism(const MorphismText& text, const Graph& dom, const Graph& cod);
std::string format_morphism(const Morphism& f, std::string_view dom_ref = {},
                            std::string_view cod_ref = {});
// Loads the morphism and the graph files it references (relative to its directory).
Morphism load_morphism(const std::filesystem::path& path);
Morphism load_morphism(const std::filesystem::path& path, const Graph& dom, const Graph& cod);

// Chain file: `dom`/`cod` references, then one `map` line opening each morphism's `m` lines.
struct ChainText {
    std::string dom_ref;
    std::string cod_ref;
    std::vector<MorphismText> maps;
};

ChainText parse_chain_text(std::string_view text);
std::vector<Morphism> load_chain(const std::filesystem::path& path);
std::vector<Morphism> load_chain(const std::filesystem::path& path, const Graph& dom, const Graph& cod);
std::string format_chain(const std::vector<Morphism>& chain, std::string_view dom_ref = {},
                         std::string_view cod_ref = {});

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace homcover
