#include <doctest.h>

#include "homcover/error.hpp"
#include "homcover/families.hpp"
#include "homcover/io.hpp"
#include "homcover/morphism.hpp"
#include "support.hpp"

using namespace homcover;
using namespace testsupport;

namespace {

Graph gen(Family f, std::vector<int> p = {}) { return generate({f, std::move(p)}); }

Morphism by_labels(const Graph& dom, const Graph& cod, const std::vector<std::string>& images) {
    std::vector<Vertex> map;
    for (const auto& l : images) map.push_back(cod.vertex(l));
    return Morphism(dom, cod, map);
}

// All homomorphisms dom -> cod by brute force.
std::vector<std::vector<Vertex>> all_homs(const Graph& dom, const Graph& cod) {
    const auto md = matrix(dom);
    const auto mc = matrix(cod);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> map(dom.order(), 0);
    while (true) {
        bool ok = true;
        for (Vertex a = 0; a < dom.order() && ok; ++a)
            for (Vertex b = a; b < dom.order() && ok; ++b)
                if (md[a][b] && !mc[map[a]][map[b]]) ok = false;
        if (ok) out.push_back(map);
        std::size_t i = 0;
        while (i < map.size() && ++map[i] == cod.order()) map[i++] = 0;
        if (i == map.size()) break;
    }
    return out;
}

// Spider-move components of Hom(dom, cod) by union-find on brute-force homs.
bool brute_homotopic(const Graph& dom, const Graph& cod, const std::vector<Vertex>& f, const std::vector<Vertex>& g) {
    auto homs = all_homs(dom, cod);
    const auto mc = matrix(cod);
    std::map<std::vector<Vertex>, std::size_t> index;
    for (std::size_t i = 0; i < homs.size(); ++i) index[homs[i]] = i;
    std::vector<std::size_t> parent(homs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i = 0; i < homs.size(); ++i)
        for (Vertex v = 0; v < dom.order(); ++v)
            for (Vertex w = 0; w < cod.order(); ++w) {
                auto moved = homs[i];
                if (moved[v] == w) continue;
                if (dom.looped(v) && !mc[homs[i][v]][w]) continue;
                moved[v] = w;
                auto it = index.find(moved);
                if (it != index.end()) parent[find(i)] = find(it->second);
            }
    return find(index.at(f)) == find(index.at(g));
}

}  // namespace

TEST_CASE("validate examples") {
    auto c5 = gen(Family::Cycle, {5});
    CHECK(validate(Morphism::identity(c5)).empty());

    auto k2 = parse_graph("v a\nv b\ne a b\n");
    Morphism constant(c5, k2, std::vector<Vertex>(5, 0));
    CHECK(validate(constant).size() == 5);
    CHECK_THROWS_AS(constant.require_valid(), Error);

    auto c8 = load_graph(HOMCOVER_DATA_DIR "/c8.graph");
    auto c4 = load_graph(HOMCOVER_DATA_DIR "/c4.graph");
    std::vector<std::string> images;
    for (const auto& l : c8.labels()) images.push_back(l.substr(0, 1));
    CHECK(validate(by_labels(c8, c4, images)).empty());
}

TEST_CASE("homotopic examples") {
    auto k4 = gen(Family::Complete, {4});
    auto id = Morphism::identity(k4);
    auto same = homotopic(id, id);
    CHECK(same.verdict == HomotopyVerdict::Yes);
    CHECK(same.moves.empty());

    auto k2 = parse_graph("v x\nv y\ne x y\n");
    auto k3 = parse_graph("v a\nv b\nv c\ne a b\ne b c\ne a c\n");
    auto f = by_labels(k2, k3, {"a", "b"});
    auto g = by_labels(k2, k3, {"a", "c"});
    auto r = homotopic(f, g);
    CHECK(r.verdict == HomotopyVerdict::Yes);
    CHECK(r.moves.size() == 1);

    auto c5 = gen(Family::Cycle, {5});
    auto rot = Morphism(c5, c5, {1, 2, 3, 4, 0});
    auto no = homotopic(Morphism::identity(c5), rot);
    CHECK(no.verdict == HomotopyVerdict::No);
    CHECK_FALSE(brute_homotopic(c5, c5, Morphism::identity(c5).map(), rot.map()));

    auto tight = homotopic(f, by_labels(k2, k3, {"c", "b"}), 1);
    CHECK(tight.verdict == HomotopyVerdict::Inconclusive);

    CHECK_THROWS_AS(homotopic(f, Morphism::identity(k3)), Error);
}

TEST_CASE("fold examples") {
    auto w4 = gen(Family::Wheel, {4});
    auto fold = find_fold(w4);
    REQUIRE(fold.has_value());
    CHECK(w4.label(fold->first) == "1");
    CHECK(w4.label(fold->second) == "3");
    CHECK_FALSE(find_fold(gen(Family::Cycle, {5})).has_value());
    for (int n : {5, 6, 7}) CHECK_FALSE(find_fold(gen(Family::Kneser, {n, 2})).has_value());
}

TEST_CASE("pleat examples") {
    auto c3 = gen(Family::Cycle, {3});
    auto k2 = gen(Family::Complete, {2});
    CHECK(are_isomorphic(pleat(gen(Family::Wheel, {4})).pleat, c3));
    CHECK(are_isomorphic(pleat(gen(Family::CompleteBipartite, {3, 4})).pleat, k2));
    auto c5 = gen(Family::Cycle, {5});
    auto p = pleat(c5);
    CHECK(p.folds.empty());
    CHECK(p.pleat.order() == 5);
    CHECK(p.retraction.map() == Morphism::identity(c5).map());
}

TEST_CASE("property: homotopic agrees with brute-force components") {
    std::mt19937 rng(kSeed + 20);
    auto k2 = parse_graph("v x\nv y\ne x y\n");
    auto p3 = gen(Family::Path, {3});
    auto looped = parse_graph("v x\nv y\ne x x\ne x y\n");
    for (auto cod : {gen(Family::Cycle, {5}), gen(Family::Cycle, {4}), gen(Family::PaperG), gen(Family::Wheel, {5}),
                     gen(Family::LoopedPath, {2})}) {
        for (auto dom : {k2, p3, looped}) {
            auto homs = all_homs(dom, cod);
            if (homs.empty()) continue;
            for (int trial = 0; trial < 8; ++trial) {
                auto& a = homs[std::uniform_int_distribution<std::size_t>(0, homs.size() - 1)(rng)];
                auto& b = homs[std::uniform_int_distribution<std::size_t>(0, homs.size() - 1)(rng)];
                Morphism f(dom, cod, a), g(dom, cod, b);
                auto r = homotopic(f, g);
                REQUIRE(r.verdict != HomotopyVerdict::Inconclusive);
                CHECK((r.verdict == HomotopyVerdict::Yes) == brute_homotopic(dom, cod, a, b));
                CHECK((homotopic(g, f).verdict == HomotopyVerdict::Yes) == (r.verdict == HomotopyVerdict::Yes));
                if (r.verdict == HomotopyVerdict::Yes) {
                    auto cur = f;
                    for (const auto& m : r.moves) {
                        cur = apply(cur, m);
                        CHECK(validate(cur).empty());
                    }
                    CHECK(cur.map() == g.map());
                }
            }
        }
    }
}

TEST_CASE("property: pleat is stiff with a surjective retraction") {
    std::mt19937 rng(kSeed + 21);
    std::vector<Graph> graphs{gen(Family::Wheel, {4}), gen(Family::Wheel, {6}), gen(Family::CompleteBipartite, {2, 3}),
                              gen(Family::Path, {5}), gen(Family::PaperG), gen(Family::Cycle, {4})};
    for (int trial = 0; trial < 30; ++trial) graphs.push_back(random_graph(rng, 3 + trial % 6, trial % 8, 0.1));
    for (const auto& g : graphs) {
        auto p = pleat(g);
        CHECK_FALSE(find_fold(p.pleat).has_value());
        CHECK(validate(p.retraction).empty());
        std::set<Vertex> image(p.retraction.map().begin(), p.retraction.map().end());
        CHECK(image.size() == p.pleat.order());
        CHECK(p.pleat.order() + p.folds.size() == g.order());
        for (auto [x, y] : p.folds) {
            CHECK(x != y);
        }
    }
}

TEST_CASE("property: pleat is stable under relabeling") {
    std::mt19937 rng(kSeed + 22);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = random_graph(rng, 3 + trial % 5, trial % 7, 0.1);
        auto h = relabel(g, random_permutation(rng, g.order()));
        CHECK(are_isomorphic(pleat(g).pleat, pleat(h).pleat).has_value());
    }
}

TEST_CASE("property: folds have nested neighborhoods") {
    std::mt19937 rng(kSeed + 23);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng, 3 + trial % 6, trial % 5, 0.1);
        auto fold = find_fold(g);
        const auto m = matrix(g);
        bool any = false;
        for (Vertex x = 0; x < g.order(); ++x)
            for (Vertex y = 0; y < g.order(); ++y) {
                if (x == y) continue;
                bool nested = true;
                for (Vertex w = 0; w < g.order(); ++w)
                    if (m[x][w] && !m[y][w]) nested = false;
                if (nested && !any) {
                    any = true;
                    REQUIRE(fold.has_value());
                    CHECK(fold->first == x);
                    CHECK(fold->second == y);
                }
            }
        CHECK(any == fold.has_value());
    }
}
