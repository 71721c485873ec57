#pragma once

#include <functional>
#include <string>
#include <vector>

#include "homcover/graph.hpp"
#include "homcover/morphism.hpp"
#include "homcover/walk.hpp"

namespace homcover {

struct NeighborhoodFailure {
    Vertex vertex;       // in the domain
    std::string defect;  // human-readable description
};

struct CoverReport {
    bool is_surjective = false;
    std::vector<NeighborhoodFailure> neighborhood_failures;
    // Diamonds of the codomain that fail to lift at some fibre point.
    std::vector<Diamond> diamond_failures;
    bool is_cover = false;
    bool is_homotopy_cover = false;
};

/// Cover test (vertex surjection + neighbourhood bijections) followed by the
/// diamond-lifting test, which is run at every fibre point of every diamond.
CoverReport check_cover(const Morphism& f);

/// Direct length-2 walk test: f induces bijections N2(ṽ) -> N2(f(ṽ)) that
/// respect endpoints. Independent of the diamond route; used as a cross-check.
bool n2_endpoint_bijective(const Morphism& f);

/// Unique lift of a codomain walk starting at `start` through a cover.
Walk lift_walk(const Morphism& f, const Walk& walk, Vertex start);

// Chooses, for each domain vertex k of K, a neighbour k' of k.
using NeighborChoice = std::function<Vertex(const Graph& k_graph, Vertex k)>;

// The least neighbour in vertex order.
Vertex least_neighbor(const Graph& k_graph, Vertex k);

// For all k ∼ k' in K: first(k) ∼ second(k').
bool one_step_homotopic(const Morphism& first, const Morphism& second);

/// Lifts homotopy chains through one homotopy cover, verified once up front.
class HomotopyLifter {
public:
    explicit HomotopyLifter(Morphism f);

    const Morphism& cover() const { return f_; }

    /// Lifts H0..Hm (consecutive entries one step apart) starting from a lift of
    /// H0. Each step lifts the 2-walk (φ(k') ψ(k) φ(k')) from φ̃(k') and reads
    /// ψ̃(k) off its midpoint.
    std::vector<Morphism> lift(const std::vector<Morphism>& chain, const Morphism& start_lift,
                               const NeighborChoice& choose = least_neighbor) const;

private:
    Morphism f_;
};

std::vector<Morphism> lift_homotopy(const Morphism& f, const std::vector<Morphism>& chain,
                                    const Morphism& start_lift,
                                    const NeighborChoice& choose = least_neighbor);

}  // namespace homcover
