#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homcover/graph.hpp"
#include "homcover/morphism.hpp"

namespace homcover {

enum class Family {
    Path,               // P_n: 0..n-1
    LoopedPath,         // I_n: 0..n, every vertex looped
    Cycle,              // C_n: 0..n-1
    Complete,           // K_n: 1..n
    CompleteBipartite,  // K_{n,m}: a1..an, b1..bm
    Wheel,              // W_{n+1}: rim 1..n, hub c
    Kneser,             // K(n,k): k-subsets of 1..n, written {1,3}
    PaperG,             // 5-cycle a b c d e plus b' joined to a and c
    PaperGTilde,        // its 12-vertex double cover
};

struct FamilySpec {
    Family family;
    std::vector<int> params;
};

// Tags as used on the command line: path, looped-path, cycle, complete,
// complete-bipartite, wheel, kneser, paper-g, paper-g-tilde.
Family family_from_tag(std::string_view tag);
std::string family_tag(Family family);
std::size_t family_arity(Family family);

Graph generate(const FamilySpec& spec);

// x_i -> x from paper-g-tilde onto paper-g.
Morphism paper_g_covering();

}  // namespace homcover
