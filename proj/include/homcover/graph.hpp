#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homcover {

using Vertex = std::uint32_t;

// Unordered edge, stored with first <= second in vertex order. first == second is a loop.
struct Edge {
    Vertex first;
    Vertex second;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Validation {
    Full,       // reject disconnected graphs and isolated vertices
    Structure,  // only duplicate edges / unknown endpoints
};

/// Finite undirected graph without multi-edges; loops allowed.
///
/// Graphs are immutable values. Copies share the underlying storage, so passing
/// a Graph by value is cheap and walks/morphisms can hold their graphs directly.
/// Vertices are dense indices 0..order()-1 in declaration order; every vertex
/// carries a whitespace-free label.
class Graph {
public:
    Graph();

    static Graph create(std::string name, std::vector<std::string> labels,
                        std::vector<std::pair<Vertex, Vertex>> edges,
                        Validation validation = Validation::Full);

    static Graph from_labels(std::string name, std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& edges,
                             Validation validation = Validation::Full);

    const std::string& name() const;
    std::size_t order() const;
    std::size_t size() const;

    const std::vector<std::string>& labels() const;
    const std::string& label(Vertex v) const;
    std::optional<Vertex> find(std::string_view label) const;
    // Throws Error naming the label when absent.
    Vertex vertex(std::string_view label) const;

    bool adjacent(Vertex u, Vertex v) const;
    bool looped(Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const;
    // Position of w inside neighbors(v), or -1.
    int neighbor_index(Vertex v, Vertex w) const;

    const std::vector<Edge>& edges() const;

    bool is_connected() const;
    bool has_isolated_vertex() const;

    // True when both handles share storage or have identical labels and edges.
    bool same_as(const Graph& other) const;

    Graph renamed(std::string name) const;

private:
    struct Data;
    explicit Graph(std::shared_ptr<const Data> data);
    std::shared_ptr<const Data> data_;
};

std::vector<Vertex> neighborhood(const Graph& g, Vertex v);

// Canonical diamond (w x y z): w∼x∼y∼z∼w with w≠y and x≠z, stored as the
// lexicographically least of its eight dihedral relabelings.
struct Diamond {
    Vertex w, x, y, z;

    friend bool operator==(const Diamond&, const Diamond&) = default;
    friend auto operator<=>(const Diamond&, const Diamond&) = default;
};

std::vector<Diamond> diamonds(const Graph& g);
std::string to_string(const Graph& g, const Diamond& d);

std::vector<int> bfs_distances(const Graph& g, Vertex source);

}  // namespace homcover
