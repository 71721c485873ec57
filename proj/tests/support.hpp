#pragma once

// Independent reference implementations and seeded generators shared by the
// test binaries. Nothing here calls into the library's algorithms beyond the
// Graph/Morphism value types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "homcover/graph.hpp"
#include "homcover/morphism.hpp"

namespace testsupport {

using homcover::Graph;
using homcover::Morphism;
using homcover::Vertex;

inline constexpr std::uint32_t kSeed = 20240611;

// Adjacency matrix built straight from the edge list.
inline std::vector<std::vector<bool>> matrix(const Graph& g) {
    std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
    for (const auto& e : g.edges()) m[e.first][e.second] = m[e.second][e.first] = true;
    return m;
}

inline Graph from_pairs(const std::string& name, std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::pair<Vertex, Vertex>> es;
    for (auto [a, b] : edges) es.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    return Graph::create(name, labels, es);
}

// Random spanning tree plus extra edges and loops; always connected, no isolated vertices.
inline Graph random_graph(std::mt19937& rng, std::size_t n, std::size_t extra, double loop_p = 0.0) {
    std::set<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < n; ++i) {
        int parent = std::uniform_int_distribution<int>(0, static_cast<int>(i) - 1)(rng);
        edges.insert({parent, static_cast<int>(i)});
    }
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    for (std::size_t k = 0; k < extra; ++k) {
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::bernoulli_distribution loop(loop_p);
    for (std::size_t i = 0; i < n; ++i)
        if (loop(rng)) edges.insert({static_cast<int>(i), static_cast<int>(i)});
    return from_pairs("R" + std::to_string(n), n, {edges.begin(), edges.end()});
}

// The same graph with vertex i renamed and moved to position perm[i].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<std::string> labels(g.order());
    for (Vertex v = 0; v < g.order(); ++v) labels[perm[v]] = "r" + g.label(v);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const auto& e : g.edges()) es.emplace_back(perm[e.first], perm[e.second]);
    return Graph::create(g.name() + "-relabeled", labels, es);
}

inline std::vector<Vertex> random_permutation(std::mt19937& rng, std::size_t n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Every geometric 4-cycle w x y z (w != y, x != z) as the sorted set of its
// eight dihedral readings; counts distinct orbits.
inline std::size_t count_diamonds(const Graph& g) {
    const auto m = matrix(g);
    const auto n = g.order();
    std::set<std::array<Vertex, 4>> orbits;
    for (Vertex w = 0; w < n; ++w)
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = 0; y < n; ++y)
                for (Vertex z = 0; z < n; ++z) {
                    if (w == y || x == z) continue;
                    if (!m[w][x] || !m[x][y] || !m[y][z] || !m[z][w]) continue;
                    std::array<Vertex, 4> c{w, x, y, z};
                    std::array<Vertex, 4> best = c;
                    for (int r = 0; r < 4; ++r) {
                        std::array<Vertex, 4> rot{c[r % 4], c[(r + 1) % 4], c[(r + 2) % 4], c[(r + 3) % 4]};
                        std::array<Vertex, 4> rev{rot[0], rot[3], rot[2], rot[1]};
                        best = std::min({best, rot, rev});
                    }
                    orbits.insert(best);
                }
    return orbits.size();
}

// Exhaustive isomorphism test by permutations; fine up to ~9 vertices.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edges().size() != h.edges().size()) return false;
    const auto mg = matrix(g);
    const auto mh = matrix(h);
    std::vector<Vertex> p(g.order());
    std::iota(p.begin(), p.end(), Vertex{0});
    do {
        bool ok = true;
        for (Vertex a = 0; a < g.order() && ok; ++a)
            for (Vertex b = a; b < g.order() && ok; ++b) ok = mg[a][b] == mh[p[a]][p[b]];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Non-backtracking walks from v of length <= depth (no v_i == v_{i+2}).
inline std::size_t count_nonbacktracking(const Graph& g, Vertex v, std::size_t depth) {
    const auto m = matrix(g);
    // state: (previous, current) counts by step.
    std::map<std::pair<int, Vertex>, std::size_t> layer{{{-1, v}, 1}};
    std::size_t total = 1;
    for (std::size_t step = 0; step < depth; ++step) {
        std::map<std::pair<int, Vertex>, std::size_t> next;
        for (auto [state, count] : layer)
            for (Vertex w = 0; w < g.order(); ++w)
                if (m[state.second][w] && static_cast<int>(w) != state.first)
                    next[{static_cast<int>(state.second), w}] += count;
        for (auto [s, c] : next) total += c;
        layer = std::move(next);
    }
    return total;
}

inline std::vector<Vertex> neighbors_by_matrix(const std::vector<std::vector<bool>>& m, Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < m.size(); ++w)
        if (m[v][w]) out.push_back(w);
    return out;
}

// Vertex surjection plus bijective N(u) -> N(f(u)) for every u.
inline bool brute_is_cover(const Morphism& f) {
    const auto md = matrix(f.dom());
    const auto mc = matrix(f.cod());
    std::vector<bool> hit(f.cod().order(), false);
    for (Vertex u = 0; u < f.dom().order(); ++u) hit[f(u)] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
    for (Vertex u = 0; u < f.dom().order(); ++u) {
        std::multiset<Vertex> image;
        for (auto w : neighbors_by_matrix(md, u)) image.insert(f(w));
        const auto target = neighbors_by_matrix(mc, f(u));
        if (image != std::multiset<Vertex>(target.begin(), target.end())) return false;
    }
    return true;
}

// Length-2 walk condition: for each u the image map on 2-walks from u is a
// bijection onto 2-walks from f(u), and two 2-walks from u share an endpoint
// exactly when their images do.
inline bool brute_is_homotopy_cover(const Morphism& f) {
    if (!brute_is_cover(f)) return false;
    const auto md = matrix(f.dom());
    const auto mc = matrix(f.cod());
    for (Vertex u = 0; u < f.dom().order(); ++u) {
        std::vector<std::array<Vertex, 2>> up;
        for (auto x : neighbors_by_matrix(md, u))
            for (auto y : neighbors_by_matrix(md, x)) up.push_back({x, y});
        std::size_t down = 0;
        for (auto x : neighbors_by_matrix(mc, f(u))) down += neighbors_by_matrix(mc, x).size();
        if (up.size() != down) return false;
        for (std::size_t i = 0; i < up.size(); ++i)
            for (std::size_t j = 0; j < up.size(); ++j)
                if ((up[i][1] == up[j][1]) != (f(up[i][1]) == f(up[j][1]))) return false;
    }
    return true;
}

}  // namespace testsupport
