#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcover/graph.hpp"
#include "homcover/morphism.hpp"
#include "homcover/walk.hpp"

namespace homcover {

using ClassId = std::uint32_t;

/// Depth-truncated universal homotopy cover: classes of walks out of a basepoint,
/// identified whenever a diamond of the base forces it.
///
/// Class 0 is the root (the trivial walk). Classes are numbered in breadth-first
/// order and each carries its lexicographically least shortest walk as
/// representative. The class graph has an edge c ~ d when d's walks extend c's by
/// one step.
class FoldedCover {
public:
    const Graph& base() const { return base_; }
    Vertex basepoint() const { return basepoint_; }
    std::size_t depth() const { return depth_; }
    // Walks with reduced length up to this bound lift without touching the truncation.
    std::size_t safe_depth() const { return depth_ >= 2 ? depth_ - 2 : 0; }
    bool stabilized() const { return stabilized_; }

    std::size_t class_count() const { return reps_.size(); }
    ClassId root() const { return 0; }
    const std::vector<Vertex>& representative(ClassId c) const { return reps_[c]; }
    Walk representative_walk(ClassId c) const { return Walk(base_, reps_[c]); }
    Vertex projection(ClassId c) const { return proj_[c]; }
    std::optional<ClassId> neighbor(ClassId c, Vertex over) const;
    // Every base neighbour of the projection has a matching class neighbour.
    bool complete(ClassId c) const;

    // Classes whose representative has length == depth.
    std::vector<ClassId> frontier() const;
    std::vector<ClassId> fibre(Vertex v) const;

    // Representative vertices joined with '/', e.g. "a/b/c".
    const std::string& label(ClassId c) const { return graph_.label(c); }
    const Graph& graph() const { return graph_; }
    // Class graph -> base, sending a class to its endpoint.
    const Morphism& projection_map() const { return projection_map_; }

    /// lift_to_cover: follows the reduced form of `walk` from the root. Unless the
    /// cover is stabilized the reduced length must not exceed safe_depth().
    ClassId lift(const Walk& walk) const;
    // Follows a vertex sequence from the root without depth checks.
    std::optional<ClassId> trace(const std::vector<Vertex>& seq) const;

private:
    friend FoldedCover build_folded_cover(const Graph&, Vertex, std::size_t);
    friend FoldedCover build_folded_quotient(const Graph&, Vertex, std::size_t,
                                             const std::vector<Walk>&);
    static FoldedCover assemble(const Graph& base, Vertex basepoint, std::size_t depth,
                                std::vector<std::vector<Vertex>> reps,
                                std::vector<std::vector<std::int64_t>> table);
    FoldedCover(Graph base, Vertex basepoint, std::size_t depth, Graph graph, Morphism map);

    Graph base_;
    Vertex basepoint_;
    std::size_t depth_;
    bool stabilized_ = false;
    std::vector<std::vector<Vertex>> reps_;
    std::vector<Vertex> proj_;
    std::vector<std::vector<std::int64_t>> table_;  // indexed by neighbor_index of the projection
    Graph graph_;
    Morphism projection_map_;
};

/// Builds classes of walks from `basepoint` out to `depth` and folds them under the
/// diamond rule until nothing changes. Stabilized iff every class ends up with a
/// full neighbourhood, in which case the class graph is the universal cover.
FoldedCover build_folded_cover(const Graph& g, Vertex basepoint, std::size_t depth);

/// Same construction with each closed walk in `loops` additionally identified
/// with the trivial walk. When stabilized this is a quotient of the universal
/// cover by the subgroup generated by the loops.
FoldedCover build_folded_quotient(const Graph& g, Vertex basepoint, std::size_t depth,
                                  const std::vector<Walk>& loops);

// DOT text for the class graph, each class labelled by its representative walk.
std::string to_dot(const FoldedCover& u);

enum class DeciderVerdict { Yes, No, Unstable };

struct DeciderResult {
    DeciderVerdict verdict;
    std::size_t depth_low;
    std::size_t depth_high;
};

/// Lifting decider for homotopy rel endpoints of walks from one basepoint.
/// Covers are cached per depth so repeated queries stay cheap.
class WalkDecider {
public:
    WalkDecider(Graph g, Vertex basepoint, std::size_t slack = 2);

    DeciderResult decide(const Walk& a, const Walk& b);
    const FoldedCover& cover(std::size_t depth);
    std::size_t slack() const { return slack_; }

private:
    Graph graph_;
    Vertex basepoint_;
    std::size_t slack_;
    std::map<std::size_t, FoldedCover> cache_;
};

/// Compares lift classes at depths L+slack and L+slack+2, L the larger reduced
/// length. Disagreement between the depths yields Unstable.
DeciderResult homotopic_rel_endpoints(const Walk& a, const Walk& b, std::size_t slack = 2);

/// The factorisation of the cover projection through a homotopy cover f with
/// f(start) = basepoint, computed by lifting class representatives through f.
/// On a stabilized cover the result is also checked to be a homotopy cover.
Morphism verify_universal_property(const FoldedCover& u, const Morphism& f, Vertex start);

}  // namespace homcover
