#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcover/graph.hpp"

namespace homcover {

/// Vertex map between two graphs. Construction does not check adjacency;
/// use validate() or require_valid() before relying on the homomorphism property.
class Morphism {
public:
    Morphism(Graph dom, Graph cod, std::vector<Vertex> map);

    static Morphism identity(const Graph& g);

    const Graph& dom() const { return dom_; }
    const Graph& cod() const { return cod_; }
    const std::vector<Vertex>& map() const { return map_; }
    Vertex operator()(Vertex v) const { return map_[v]; }

    // Throws PreconditionError listing the first violated edge.
    const Morphism& require_valid() const;

    // Domain vertices mapping to v.
    std::vector<Vertex> fibre(Vertex v) const;

    friend bool operator==(const Morphism& a, const Morphism& b) {
        return a.map_ == b.map_ && a.dom_.same_as(b.dom_) && a.cod_.same_as(b.cod_);
    }

private:
    Graph dom_;
    Graph cod_;
    std::vector<Vertex> map_;
};

Morphism compose(const Morphism& outer, const Morphism& inner);

// Edges of the domain whose image is not an edge of the codomain. Empty means valid.
std::vector<Edge> validate(const Morphism& f);

struct MorphismSpiderMove {
    Vertex vertex;
    Vertex image;

    friend bool operator==(const MorphismSpiderMove&, const MorphismSpiderMove&) = default;
};

// All spider moves out of f that yield a valid morphism.
std::vector<MorphismSpiderMove> spider_moves_of(const Morphism& f);
Morphism apply(const Morphism& f, const MorphismSpiderMove& move);

enum class HomotopyVerdict { Yes, No, Inconclusive };

struct HomotopyResult {
    HomotopyVerdict verdict;
    std::vector<MorphismSpiderMove> moves;  // f -> g when verdict is Yes
    std::size_t states_explored;
};

/// BFS over the spider-move graph on Hom(dom, cod). No is returned only after the
/// whole component of f has been exhausted.
HomotopyResult homotopic(const Morphism& f, const Morphism& g,
                         std::size_t max_states = 1'000'000);

// Lexicographically least (x, y), x != y, with N(x) ⊆ N(y); nullopt when stiff.
std::optional<std::pair<Vertex, Vertex>> find_fold(const Graph& g);

struct PleatResult {
    Graph pleat;
    Morphism retraction;  // G -> pleat, surjective
    std::vector<std::pair<Vertex, Vertex>> folds;  // in the original labeling
};

PleatResult pleat(const Graph& g);

// Backtracking isomorphism search with colour refinement.
std::optional<Morphism> are_isomorphic(const Graph& g, const Graph& h);

}  // namespace homcover
