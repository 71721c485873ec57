#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcover/graph.hpp"
#include "homcover/morphism.hpp"
#include "homcover/universal.hpp"
#include "homcover/walk.hpp"

namespace homcover {

/// Finite group given by its Cayley table; element 0 is the identity.
struct FiniteGroup {
    std::vector<std::vector<std::uint32_t>> table;  // table[a][b] = a·b

    std::size_t order() const { return table.size(); }
    std::uint32_t inverse(std::uint32_t a) const;
    std::size_t element_order(std::uint32_t a) const;

    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
};

// Throws Error unless the table is a group with identity 0.
void check_group(const FiniteGroup& g);

/// Deck transformations of a stabilized folded cover. Element i corresponds to
/// fibre()[i], the class over the basepoint that it sends the root to, and acts
/// on classes by prepending that class's representative walk.
class DeckGroup {
public:
    explicit DeckGroup(FoldedCover cover);

    const FoldedCover& cover() const { return cover_; }
    std::size_t order() const { return fibre_.size(); }
    const std::vector<ClassId>& fibre() const { return fibre_; }
    const std::vector<ClassId>& permutation(std::size_t element) const { return perms_[element]; }
    const FiniteGroup& group() const { return group_; }

private:
    FoldedCover cover_;
    std::vector<ClassId> fibre_;
    std::vector<std::vector<ClassId>> perms_;
    FiniteGroup group_;
};

struct GroupDescription {
    std::size_t order = 0;
    bool abelian = false;
    std::vector<std::size_t> element_orders;
    // "e", "Z/n" or a product such as "Z/2 x Z/2"; empty for unnamed groups.
    std::string name;
    // Kept for groups without a name.
    std::vector<std::vector<std::uint32_t>> table;
};

inline constexpr std::size_t kDefaultOrderBound = 24;

GroupDescription identify_group(const FiniteGroup& g, std::size_t bound = kDefaultOrderBound);
GroupDescription identify_group(const DeckGroup& d, std::size_t bound = kDefaultOrderBound);

struct Subgroup {
    std::vector<std::uint32_t> elements;  // sorted

    std::size_t order() const { return elements.size(); }
    friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
// All subgroups, sorted by order then elements.
std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t bound = kDefaultOrderBound);
std::vector<Subgroup> subgroups(const DeckGroup& d, std::size_t bound = kDefaultOrderBound);

struct QuotientCover {
    Graph graph;
    Morphism projection;  // graph -> base, a verified homotopy cover
    std::size_t index;    // fibre size
};

/// Orbit graph of the cover under S. Vertices are named <base vertex>_<k>.
QuotientCover quotient(const DeckGroup& deck, const Subgroup& s);

/// Quotient by the cyclic subgroup generated by generator^n, built on truncations
/// of growing depth until it closes up. The result is verified to be a homotopy
/// cover whose basepoint fibre has exactly n points.
QuotientCover cyclic_quotient(const Graph& g, Vertex basepoint, const Walk& generator, std::size_t n,
                              std::size_t max_depth = 64);

struct ShiftEvidence {
    Walk generator;                   // representative of the shift class
    std::size_t safe_fibre_size = 0;  // basepoint classes within safe depth
    std::size_t powers = 0;           // nonzero powers matched against them
    // (depth, safe fibre size) on a few truncations.
    std::vector<std::pair<std::size_t, std::size_t>> fibre_sizes;
};

/// On an unstabilized cover: a basepoint class whose powers, in both directions,
/// are pairwise distinct and exhaust every basepoint class within safe depth.
std::optional<ShiftEvidence> detect_shift(const FoldedCover& u);

struct FundamentalGroupReport {
    std::size_t depth = 0;  // depth of the cover the verdict is read from
    bool stabilized = false;
    std::size_t class_count = 0;
    std::optional<GroupDescription> group;
    std::optional<ShiftEvidence> shift;
};

/// Grows the truncation up to max_depth; identifies the deck group once the
/// cover stabilizes, otherwise looks for shift evidence at max_depth.
FundamentalGroupReport fundamental_group(const Graph& g, Vertex basepoint, std::size_t max_depth,
                                         std::size_t order_bound = kDefaultOrderBound);

struct CoverEntry {
    Graph graph;
    Morphism projection;
    std::size_t index;
    std::string subgroup;  // element list for finite groups, "<g^n>" for shifts
};

struct CoverEnumeration {
    bool stabilized = false;
    std::size_t depth = 0;
    std::optional<ShiftEvidence> shift;
    std::vector<CoverEntry> covers;  // sorted by index
    std::string note;
};

/// One verified cover per subgroup of index <= max_index (0: no limit) when the
/// universal cover stabilizes; cyclic quotients 1..max_index for shift type.
CoverEnumeration enumerate_covers(const Graph& g, Vertex basepoint, std::size_t depth,
                                  std::size_t max_index);

}  // namespace homcover
