#include "homcover/morphism.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "homcover/error.hpp"

namespace homcover {

Morphism::Morphism(Graph dom, Graph cod, std::vector<Vertex> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
    if (map_.size() != dom_.order())
        throw Error("morphism from '" + dom_.name() + "' must map every domain vertex");
    for (auto v : map_)
        if (v >= cod_.order()) throw Error("morphism image out of range");
}

Morphism Morphism::identity(const Graph& g) {
    std::vector<Vertex> map(g.order());
    for (Vertex v = 0; v < g.order(); ++v) map[v] = v;
    return Morphism(g, g, std::move(map));
}

const Morphism& Morphism::require_valid() const {
    auto bad = validate(*this);
    if (!bad.empty())
        throw PreconditionError("not a graph homomorphism: edge " + dom_.label(bad[0].first) + " " +
                                dom_.label(bad[0].second) + " maps to non-edge " +
                                cod_.label(map_[bad[0].first]) + " " +
                                cod_.label(map_[bad[0].second]));
    return *this;
}

std::vector<Vertex> Morphism::fibre(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < map_.size(); ++u)
        if (map_[u] == v) out.push_back(u);
    return out;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
    if (!inner.cod().same_as(outer.dom()))
        throw PreconditionError("compose: codomain of inner map is not the domain of outer map");
    std::vector<Vertex> map(inner.dom().order());
    for (Vertex v = 0; v < map.size(); ++v) map[v] = outer(inner(v));
    return Morphism(inner.dom(), outer.cod(), std::move(map));
}

std::vector<Edge> validate(const Morphism& f) {
    std::vector<Edge> bad;
    for (const auto& e : f.dom().edges())
        if (!f.cod().adjacent(f(e.first), f(e.second))) bad.push_back(e);
    return bad;
}

namespace {

bool move_is_valid(const Graph& dom, const Graph& cod, const std::vector<Vertex>& map, Vertex x,
                   Vertex image) {
    if (image == map[x]) return false;
    for (auto k : dom.neighbors(x)) {
        if (k == x) {
            // Looped vertex: the new image must be looped and adjacent to the old one.
            if (!cod.looped(image) || !cod.adjacent(map[x], image)) return false;
        } else if (!cod.adjacent(image, map[k])) {
            return false;
        }
    }
    return true;
}

template <typename Visit>
void for_each_move(const Graph& dom, const Graph& cod, const std::vector<Vertex>& map,
                   Visit&& visit) {
    for (Vertex x = 0; x < dom.order(); ++x) {
        auto nbrs = dom.neighbors(x);
        Vertex anchor = map[x];
        for (auto k : nbrs)
            if (k != x) {
                anchor = map[k];
                break;
            }
        for (auto image : cod.neighbors(anchor))
            if (move_is_valid(dom, cod, map, x, image)) visit(MorphismSpiderMove{x, image});
    }
}

struct TupleHash {
    std::size_t operator()(const std::vector<Vertex>& s) const noexcept {
        std::size_t h = s.size();
        for (auto v : s) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

std::vector<MorphismSpiderMove> spider_moves_of(const Morphism& f) {
    f.require_valid();
    std::vector<MorphismSpiderMove> out;
    for_each_move(f.dom(), f.cod(), f.map(), [&](MorphismSpiderMove m) { out.push_back(m); });
    return out;
}

Morphism apply(const Morphism& f, const MorphismSpiderMove& move) {
    if (move.vertex >= f.dom().order() || move.image >= f.cod().order())
        throw PreconditionError("spider move out of range");
    if (!move_is_valid(f.dom(), f.cod(), f.map(), move.vertex, move.image))
        throw PreconditionError("invalid spider move at " + f.dom().label(move.vertex));
    auto map = f.map();
    map[move.vertex] = move.image;
    return Morphism(f.dom(), f.cod(), std::move(map));
}

HomotopyResult homotopic(const Morphism& f, const Morphism& g, std::size_t max_states) {
    if (!f.dom().same_as(g.dom()) || !f.cod().same_as(g.cod()))
        throw PreconditionError("homotopic: morphisms must share domain and codomain");
    f.require_valid();
    g.require_valid();
    if (f.map() == g.map()) return {HomotopyVerdict::Yes, {}, 1};

    struct Node {
        std::size_t parent;
        MorphismSpiderMove move;
    };
    std::vector<std::vector<Vertex>> states{f.map()};
    std::vector<Node> nodes{{0, {0, 0}}};
    std::unordered_map<std::vector<Vertex>, std::size_t, TupleHash> seen{{f.map(), 0}};
    std::deque<std::size_t> queue{0};
    std::optional<std::size_t> hit;
    bool truncated = false;

    while (!queue.empty() && !hit) {
        const auto id = queue.front();
        queue.pop_front();
        const auto current = states[id];
        for_each_move(f.dom(), f.cod(), current, [&](MorphismSpiderMove m) {
            if (hit || truncated) return;
            auto next = current;
            next[m.vertex] = m.image;
            if (seen.contains(next)) return;
            if (seen.size() >= max_states) {
                truncated = true;
                return;
            }
            const auto nid = states.size();
            seen.emplace(next, nid);
            states.push_back(next);
            nodes.push_back({id, m});
            if (next == g.map())
                hit = nid;
            else
                queue.push_back(nid);
        });
        if (truncated) break;
    }
    if (hit) {
        std::vector<MorphismSpiderMove> moves;
        for (auto id = *hit; id != 0; id = nodes[id].parent) moves.push_back(nodes[id].move);
        std::reverse(moves.begin(), moves.end());
        return {HomotopyVerdict::Yes, std::move(moves), seen.size()};
    }
    return {truncated ? HomotopyVerdict::Inconclusive : HomotopyVerdict::No, {}, seen.size()};
}

std::optional<std::pair<Vertex, Vertex>> find_fold(const Graph& g) {
    for (Vertex x = 0; x < g.order(); ++x) {
        auto nx = g.neighbors(x);
        for (Vertex y = 0; y < g.order(); ++y) {
            if (x == y) continue;
            auto ny = g.neighbors(y);
            if (std::includes(ny.begin(), ny.end(), nx.begin(), nx.end())) return {{x, y}};
        }
    }
    return std::nullopt;
}

PleatResult pleat(const Graph& g) {
    // current[v] = index in the working graph of original vertex v's image.
    std::vector<Vertex> current(g.order());
    for (Vertex v = 0; v < g.order(); ++v) current[v] = v;
    Graph work = g;
    std::vector<std::pair<Vertex, Vertex>> folds;

    while (auto fold = find_fold(work)) {
        const auto [x, y] = *fold;
        folds.emplace_back(g.vertex(work.label(x)), g.vertex(work.label(y)));
        std::vector<Vertex> renumber(work.order());
        std::vector<std::string> labels;
        for (Vertex v = 0; v < work.order(); ++v) {
            if (v == x) continue;
            renumber[v] = static_cast<Vertex>(labels.size());
            labels.push_back(work.label(v));
        }
        renumber[x] = renumber[y];
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : work.edges())
            if (e.first != x && e.second != x) edges.emplace_back(renumber[e.first], renumber[e.second]);
        work = Graph::create(g.name() + "-pleat", std::move(labels), std::move(edges));
        for (auto& c : current) c = renumber[c];
    }
    Morphism retraction(g, work, current);
    retraction.require_valid();
    return {work, std::move(retraction), std::move(folds)};
}

}  // namespace homcover
