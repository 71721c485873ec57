#include <algorithm>
#include <deque>
#include <map>

#include "homcover/morphism.hpp"

namespace homcover {

namespace {

// Joint 1-dimensional Weisfeiler-Leman refinement; colours are comparable
// across the two graphs because they share one signature dictionary.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& g, const Graph& h) {
    auto initial = [](const Graph& x) {
        std::vector<int> c(x.order());
        for (Vertex v = 0; v < x.order(); ++v)
            c[v] = static_cast<int>(x.degree(v)) * 2 + (x.looped(v) ? 1 : 0);
        return c;
    };
    auto cg = initial(g);
    auto ch = initial(h);
    std::size_t classes = 0;
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> dictionary;
        auto step = [&](const Graph& x, const std::vector<int>& c) {
            std::vector<std::pair<int, std::vector<int>>> sigs(x.order());
            for (Vertex v = 0; v < x.order(); ++v) {
                std::vector<int> around;
                for (auto w : x.neighbors(v)) around.push_back(c[w]);
                std::sort(around.begin(), around.end());
                sigs[v] = {c[v], std::move(around)};
                dictionary.emplace(sigs[v], 0);
            }
            return sigs;
        };
        auto sg = step(g, cg);
        auto sh = step(h, ch);
        int next = 0;
        for (auto& [sig, id] : dictionary) id = next++;
        for (Vertex v = 0; v < g.order(); ++v) cg[v] = dictionary[sg[v]];
        for (Vertex v = 0; v < h.order(); ++v) ch[v] = dictionary[sh[v]];
        if (dictionary.size() == classes) break;
        classes = dictionary.size();
    }
    return {cg, ch};
}

}  // namespace

std::optional<Morphism> are_isomorphic(const Graph& g, const Graph& h) {
    const auto n = g.order();
    if (n != h.order() || g.size() != h.size()) return std::nullopt;
    if (n == 0) return Morphism(g, h, {});
    auto [cg, ch] = refine(g, h);
    {
        auto sg = cg, sh = ch;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }

    // Visit g in BFS order from a vertex of the rarest colour so every new
    // vertex after the first has a mapped neighbour constraining it.
    std::map<int, int> histogram;
    for (auto c : cg) ++histogram[c];
    Vertex start = 0;
    for (Vertex v = 0; v < n; ++v)
        if (histogram[cg[v]] < histogram[cg[start]]) start = v;
    std::vector<Vertex> order;
    std::vector<bool> queued(n, false);
    auto sweep = [&](Vertex seed) {
        if (queued[seed]) return;
        std::deque<Vertex> queue{seed};
        queued[seed] = true;
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (auto w : g.neighbors(u))
                if (!queued[w]) {
                    queued[w] = true;
                    queue.push_back(w);
                }
        }
    };
    sweep(start);
    for (Vertex v = 0; v < n; ++v) sweep(v);

    std::vector<Vertex> map(n, 0);
    std::vector<bool> used(n, false);
    auto consistent = [&](std::size_t depth, Vertex candidate) {
        const auto v = order[depth];
        if (g.looped(v) != h.looped(candidate)) return false;
        for (std::size_t i = 0; i < depth; ++i)
            if (g.adjacent(v, order[i]) != h.adjacent(candidate, map[order[i]])) return false;
        return true;
    };
    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n) return true;
        const auto v = order[depth];
        // Candidates: neighbours of an already-mapped neighbour, else everything.
        std::span<const Vertex> pool;
        std::vector<Vertex> all;
        for (std::size_t i = 0; i < depth && pool.empty(); ++i)
            if (g.adjacent(v, order[i])) pool = h.neighbors(map[order[i]]);
        if (pool.empty()) {
            all.resize(n);
            for (Vertex u = 0; u < n; ++u) all[u] = u;
            pool = all;
        }
        for (auto c : pool) {
            if (used[c] || ch[c] != cg[v] || !consistent(depth, c)) continue;
            used[c] = true;
            map[v] = c;
            if (self(self, depth + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return Morphism(g, h, map);
}

}  // namespace homcover
