#include "homcover/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <set>
#include <unordered_map>

#include "homcover/error.hpp"

namespace homcover {

struct Graph::Data {
    std::string name;
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> index;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> adjacency;
    std::vector<std::uint8_t> matrix;  // only for small graphs; see kMatrixLimit
};

namespace {
constexpr std::size_t kMatrixLimit = 2048;
}

Graph::Graph() {
    static const auto empty = std::make_shared<const Data>();
    data_ = empty;
}

Graph::Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Graph Graph::create(std::string name, std::vector<std::string> labels,
                    std::vector<std::pair<Vertex, Vertex>> edges, Validation validation) {
    auto data = std::make_shared<Data>();
    data->name = std::move(name);
    const auto n = labels.size();
    for (Vertex v = 0; v < n; ++v) {
        const auto& label = labels[v];
        if (label.empty() || std::any_of(label.begin(), label.end(),
                                         [](unsigned char c) { return std::isspace(c); }))
            throw Error("invalid vertex label '" + label + "'");
        if (!data->index.emplace(label, v).second)
            throw Error("duplicate vertex '" + label + "'");
    }
    data->labels = std::move(labels);
    data->adjacency.resize(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw Error("edge references unknown vertex index");
        if (u > v) std::swap(u, v);
        data->edges.push_back({u, v});
        data->adjacency[u].push_back(v);
        if (u != v) data->adjacency[v].push_back(u);
    }
    std::sort(data->edges.begin(), data->edges.end());
    if (auto dup = std::adjacent_find(data->edges.begin(), data->edges.end()); dup != data->edges.end())
        throw Error("duplicate edge " + data->labels[dup->first] + " " + data->labels[dup->second]);
    if (n <= kMatrixLimit) {
        data->matrix.assign(n * n, 0);
        for (const auto& e : data->edges) data->matrix[e.first * n + e.second] = data->matrix[e.second * n + e.first] = 1;
    }
    for (auto& row : data->adjacency) std::sort(row.begin(), row.end());

    Graph g(std::move(data));
    if (validation == Validation::Full) {
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) == 0) throw Error("isolated vertex '" + g.label(v) + "'");
        if (n == 0) throw Error("graph has no vertices");
        if (!g.is_connected()) throw Error("graph '" + g.name() + "' is disconnected");
    }
    return g;
}

Graph Graph::from_labels(std::string name, std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& edges,
                         Validation validation) {
    std::unordered_map<std::string, Vertex> index;
    for (Vertex v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
    std::vector<std::pair<Vertex, Vertex>> indexed;
    indexed.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) throw Error("edge references undeclared vertex '" + a + "'");
        if (ib == index.end()) throw Error("edge references undeclared vertex '" + b + "'");
        indexed.emplace_back(ia->second, ib->second);
    }
    return create(std::move(name), std::move(labels), std::move(indexed), validation);
}

const std::string& Graph::name() const { return data_->name; }
std::size_t Graph::order() const { return data_->labels.size(); }
std::size_t Graph::size() const { return data_->edges.size(); }
const std::vector<std::string>& Graph::labels() const { return data_->labels; }

const std::string& Graph::label(Vertex v) const {
    if (v >= order()) throw Error("vertex index out of range");
    return data_->labels[v];
}

std::optional<Vertex> Graph::find(std::string_view label) const {
    auto it = data_->index.find(std::string(label));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

Vertex Graph::vertex(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw Error("unknown vertex '" + std::string(label) + "' in graph '" + name() + "'");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto n = order();
    if (u >= n || v >= n) return false;
    if (!data_->matrix.empty()) return data_->matrix[u * n + v] != 0;
    const auto& row = data_->adjacency[u];
    return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::looped(Vertex v) const { return adjacent(v, v); }

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    if (v >= order()) throw Error("vertex index out of range");
    return data_->adjacency[v];
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

int Graph::neighbor_index(Vertex v, Vertex w) const {
    auto row = neighbors(v);
    auto it = std::lower_bound(row.begin(), row.end(), w);
    if (it == row.end() || *it != w) return -1;
    return static_cast<int>(it - row.begin());
}

const std::vector<Edge>& Graph::edges() const { return data_->edges; }

bool Graph::is_connected() const {
    if (order() == 0) return true;
    auto dist = bfs_distances(*this, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool Graph::has_isolated_vertex() const {
    for (Vertex v = 0; v < order(); ++v)
        if (degree(v) == 0) return true;
    return false;
}

bool Graph::same_as(const Graph& other) const {
    if (data_ == other.data_) return true;
    return data_->labels == other.data_->labels && data_->edges == other.data_->edges;
}

Graph Graph::renamed(std::string name) const {
    auto data = std::make_shared<Data>(*data_);
    data->name = std::move(name);
    return Graph(std::move(data));
}

std::vector<Vertex> neighborhood(const Graph& g, Vertex v) {
    auto row = g.neighbors(v);
    return {row.begin(), row.end()};
}

namespace {

Diamond canonical(Vertex w, Vertex x, Vertex y, Vertex z) {
    const std::array<Vertex, 4> c{w, x, y, z};
    Diamond best{w, x, y, z};
    for (int start = 0; start < 4; ++start) {
        for (int dir : {1, 3}) {
            Diamond d{c[start], c[(start + dir) % 4], c[(start + 2 * dir) % 4],
                      c[(start + 3 * dir) % 4]};
            best = std::min(best, d);
        }
    }
    return best;
}

}  // namespace

std::vector<Diamond> diamonds(const Graph& g) {
    std::set<Diamond> found;
    for (Vertex w = 0; w < g.order(); ++w)
        for (Vertex x : g.neighbors(w))
            for (Vertex y : g.neighbors(x)) {
                if (y == w) continue;
                for (Vertex z : g.neighbors(y))
                    if (z != x && g.adjacent(z, w)) found.insert(canonical(w, x, y, z));
            }
    return {found.begin(), found.end()};
}

std::string to_string(const Graph& g, const Diamond& d) {
    return g.label(d.w) + " " + g.label(d.x) + " " + g.label(d.y) + " " + g.label(d.z);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(g.order(), -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

}  // namespace homcover
