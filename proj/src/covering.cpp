#include "homcover/covering.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "homcover/error.hpp"

namespace homcover {

namespace {

// For a cover, the unique neighbour of `from` over `target`, if any.
std::optional<Vertex> neighbor_over(const Morphism& f, Vertex from, Vertex target) {
    for (auto w : f.dom().neighbors(from))
        if (f(w) == target) return w;
    return std::nullopt;
}

}  // namespace

CoverReport check_cover(const Morphism& f) {
    f.require_valid();
    const auto& dom = f.dom();
    const auto& cod = f.cod();
    CoverReport report;

    std::vector<bool> hit(cod.order(), false);
    for (auto v : f.map()) hit[v] = true;
    report.is_surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

    for (Vertex v = 0; v < dom.order(); ++v) {
        std::map<Vertex, int> seen;
        for (auto w : dom.neighbors(v)) ++seen[f(w)];
        std::string defect;
        for (const auto& [image, count] : seen)
            if (count > 1)
                defect += "two neighbours over " + cod.label(image) + "; ";
        for (auto y : cod.neighbors(f(v)))
            if (!seen.contains(y)) defect += "no neighbour over " + cod.label(y) + "; ";
        if (!defect.empty()) {
            defect.resize(defect.size() - 2);
            report.neighborhood_failures.push_back({v, std::move(defect)});
        }
    }
    report.is_cover = report.is_surjective && report.neighborhood_failures.empty();
    if (!report.is_cover) return report;

    for (const auto& d : diamonds(cod)) {
        bool lifts = true;
        for (auto w : f.fibre(d.w)) {
            auto x = neighbor_over(f, w, d.x);
            auto z = neighbor_over(f, w, d.z);
            auto y1 = neighbor_over(f, *x, d.y);
            auto y2 = neighbor_over(f, *z, d.y);
            if (*y1 != *y2) {
                lifts = false;
                break;
            }
        }
        // The canonical representative only starts at its least vertex; the
        // other corners are covered by the fibres of the rotated diamond.
        if (lifts) {
            for (auto w : f.fibre(d.x)) {
                auto a = neighbor_over(f, *neighbor_over(f, w, d.w), d.z);
                auto b = neighbor_over(f, *neighbor_over(f, w, d.y), d.z);
                if (*a != *b) {
                    lifts = false;
                    break;
                }
            }
        }
        if (!lifts) report.diamond_failures.push_back(d);
    }
    report.is_homotopy_cover = report.diamond_failures.empty();
    return report;
}

bool n2_endpoint_bijective(const Morphism& f) {
    f.require_valid();
    const auto& dom = f.dom();
    const auto& cod = f.cod();
    for (Vertex v = 0; v < dom.order(); ++v) {
        // Map each lifted 2-walk to its image and compare endpoint partitions.
        std::map<std::array<Vertex, 2>, Vertex> image_end;  // (x, y) image -> lifted endpoint
        std::set<std::array<Vertex, 2>> images;
        for (auto x : dom.neighbors(v))
            for (auto y : dom.neighbors(x)) {
                std::array<Vertex, 2> key{f(x), f(y)};
                if (!image_end.emplace(key, y).second) return false;  // not injective
                images.insert(key);
            }
        std::size_t expected = 0;
        for (auto x : cod.neighbors(f(v))) expected += cod.degree(x);
        if (images.size() != expected) return false;  // not surjective
        for (const auto& [a, ea] : image_end)
            for (const auto& [b, eb] : image_end)
                if ((a[1] == b[1]) != (ea == eb)) return false;
    }
    return true;
}

Walk lift_walk(const Morphism& f, const Walk& walk, Vertex start) {
    if (!walk.base().same_as(f.cod())) throw PreconditionError("lift_walk: walk is not in the codomain");
    if (start >= f.dom().order() || f(start) != walk.front())
        throw PreconditionError("lift_walk: start vertex is not over " + f.cod().label(walk.front()));
    if (!check_cover(f).is_cover) throw PreconditionError("lift_walk: map is not a cover");
    std::vector<Vertex> seq{start};
    for (std::size_t i = 1; i < walk.seq().size(); ++i)
        seq.push_back(*neighbor_over(f, seq.back(), walk[i]));
    return Walk(f.dom(), std::move(seq));
}

Vertex least_neighbor(const Graph& k_graph, Vertex k) { return k_graph.neighbors(k).front(); }

bool one_step_homotopic(const Morphism& first, const Morphism& second) {
    const auto& k = first.dom();
    for (Vertex a = 0; a < k.order(); ++a)
        for (auto b : k.neighbors(a))
            if (!first.cod().adjacent(first(a), second(b))) return false;
    return true;
}

HomotopyLifter::HomotopyLifter(Morphism f) : f_(std::move(f)) {
    if (!check_cover(f_).is_homotopy_cover)
        throw PreconditionError("lift_homotopy: map is not a homotopy cover");
}

std::vector<Morphism> HomotopyLifter::lift(const std::vector<Morphism>& chain, const Morphism& start_lift,
                                           const NeighborChoice& choose) const {
    const auto& f = f_;
    if (chain.empty()) throw PreconditionError("lift_homotopy: empty homotopy chain");
    const auto& k_graph = chain.front().dom();
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto& h = chain[i];
        if (!h.dom().same_as(k_graph) || !h.cod().same_as(f.cod()))
            throw PreconditionError("lift_homotopy: chain entries must map K into the base");
        h.require_valid();
        if (i + 1 < chain.size() && !one_step_homotopic(h, chain[i + 1]))
            throw PreconditionError("lift_homotopy: chain entries " + std::to_string(i) + " and " +
                                    std::to_string(i + 1) + " are not one step apart");
    }
    if (!start_lift.dom().same_as(k_graph) || !start_lift.cod().same_as(f.dom()))
        throw PreconditionError("lift_homotopy: start lift must map K into the cover");
    start_lift.require_valid();
    if (compose(f, start_lift).map() != chain.front().map())
        throw PreconditionError("lift_homotopy: start lift does not project to the first map");

    std::vector<Morphism> lifted{start_lift};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto& psi = chain[i + 1];
        const auto& phi_lift = lifted.back();
        std::vector<Vertex> map(k_graph.order());
        for (Vertex k = 0; k < k_graph.order(); ++k) {
            const auto kp = choose(k_graph, k);
            if (!k_graph.adjacent(k, kp)) throw PreconditionError("neighbour choice is not adjacent");
            // Lift (φ(k') ψ(k) φ(k')) from φ̃(k'); its midpoint is ψ̃(k).
            map[k] = *neighbor_over(f, phi_lift(kp), psi(k));
        }
        Morphism next(k_graph, f.dom(), std::move(map));
        next.require_valid();
        if (!one_step_homotopic(phi_lift, next))
            throw Error("lift_homotopy: lifted maps are not one step apart");
        lifted.push_back(std::move(next));
    }
    return lifted;
}

std::vector<Morphism> lift_homotopy(const Morphism& f, const std::vector<Morphism>& chain,
                                    const Morphism& start_lift, const NeighborChoice& choose) {
    return HomotopyLifter(f).lift(chain, start_lift, choose);
}

}  // namespace homcover
