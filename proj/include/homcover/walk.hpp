#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "homcover/graph.hpp"

namespace homcover {

/// A walk v0 v1 ... vn in a graph: consecutive vertices are adjacent.
/// A single vertex is a valid length-0 walk and acts as an identity arrow.
class Walk {
public:
    // Validates adjacency; throws Error naming the first non-edge.
    Walk(Graph base, std::vector<Vertex> seq);

    static Walk at(Graph base, Vertex v);
    // Whitespace-separated vertex labels, e.g. "c 1 2 3 4 c".
    static Walk parse(Graph base, std::string_view text);

    const Graph& base() const { return base_; }
    const std::vector<Vertex>& seq() const { return seq_; }
    std::size_t length() const { return seq_.size() - 1; }
    Vertex front() const { return seq_.front(); }
    Vertex back() const { return seq_.back(); }
    Vertex operator[](std::size_t i) const { return seq_[i]; }

    std::string str() const;

    friend bool operator==(const Walk& a, const Walk& b) {
        return a.seq_ == b.seq_ && a.base_.same_as(b.base_);
    }

private:
    struct Unchecked {};
    Walk(Graph base, std::vector<Vertex> seq, Unchecked);
    friend Walk concat(const Walk&, const Walk&);
    friend Walk reverse(const Walk&);
    friend Walk prune_once(const Walk&, std::size_t);
    friend Walk prune_normal_form(const Walk&);

    Graph base_;
    std::vector<Vertex> seq_;
};

// All walks (v x y), ordered by x then y in vertex order.
std::vector<Walk> n2_walks(const Graph& g, Vertex v);

Walk concat(const Walk& a, const Walk& b);
Walk reverse(const Walk& a);

bool is_prunable_at(const std::vector<Vertex>& seq, std::size_t i);
Walk prune_once(const Walk& a, std::size_t i);
// Leftmost-first pruning until no v_i = v_{i+2} remains.
Walk prune_normal_form(const Walk& a);
std::vector<Vertex> prune_normal_form(std::vector<Vertex> seq);

struct WalkSpiderMove {
    std::size_t position;
    Vertex replacement;

    friend bool operator==(const WalkSpiderMove&, const WalkSpiderMove&) = default;
};

std::vector<WalkSpiderMove> spider_moves_of(const Walk& a);
Walk apply(const Walk& a, const WalkSpiderMove& move);

enum class OracleVerdict { Yes, NoWithinBounds };

struct OracleBounds {
    std::size_t max_len = 0;  // 0 selects len(a)+len(b)+4
    std::size_t max_states = 1'000'000;
};

struct OracleResult {
    OracleVerdict verdict;
    std::size_t states_explored;
    std::size_t max_len;
};

/// Breadth-first search over {spider move, prune, unprune} restricted to walks of
/// length <= max_len. Yes is a certificate of homotopy rel endpoints; NoWithinBounds
/// is not a proof of inequivalence.
OracleResult oracle_homotopic_rel_endpoints(const Walk& a, const Walk& b,
                                            OracleBounds bounds = {});

/// Batch form of the rewriting oracle: the connected components of the rewriting
/// graph on all walks from `base_vertex` of length <= max_len. Two walks of that
/// length range are oracle-equivalent iff they land in the same component.
class WalkEquivalenceTable {
public:
    WalkEquivalenceTable(const Graph& g, Vertex base_vertex, std::size_t max_len);

    std::size_t walk_count() const { return parent_.size(); }
    std::size_t max_len() const { return max_len_; }
    std::size_t component_count() const;
    // nullopt when the walk is outside the table (wrong start or too long).
    std::optional<std::size_t> component(const Walk& w) const;
    bool equivalent(const Walk& a, const Walk& b) const;

private:
    std::uint64_t encode(const std::vector<Vertex>& seq) const;
    std::uint32_t find(std::uint32_t i) const;
    void unite(std::uint32_t a, std::uint32_t b);

    Graph graph_;
    Vertex base_vertex_;
    std::size_t max_len_;
    unsigned bits_ = 1;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    mutable std::vector<std::uint32_t> parent_;
};

}  // namespace homcover
