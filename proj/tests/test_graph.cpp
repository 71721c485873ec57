#include <doctest.h>

#include "homcover/error.hpp"
#include "homcover/families.hpp"
#include "homcover/graph.hpp"
#include "homcover/io.hpp"
#include "homcover/morphism.hpp"
#include "homcover/walk.hpp"
#include "support.hpp"

using namespace homcover;
using namespace testsupport;

namespace {

Graph gen(Family f, std::vector<int> p = {}) { return generate({f, std::move(p)}); }

std::vector<std::string> labels_of(const Graph& g, const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (auto v : vs) out.push_back(g.label(v));
    return out;
}

}  // namespace

TEST_CASE("parse: smallest graph and a path") {
    auto k2 = parse_graph("v a\nv b\ne a b\n");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(k2.adjacent(0, 1));

    auto path = parse_graph("graph p\nv a\nv b\nv c\nv d\ne a b\ne b c\ne c d\n");
    CHECK(path.name() == "p");
    CHECK(path.size() == 3);
    CHECK(path.is_connected());
}

TEST_CASE("parse: errors name the problem") {
    CHECK_THROWS_WITH_AS(parse_graph("v a\nv b\nv c\nv d\ne a b\ne c d\n"), doctest::Contains("disconnected"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_graph("v a\nv b\nv c\ne a b\n"), doctest::Contains("isolated vertex 'c'"), Error);
    CHECK_THROWS_WITH_AS(parse_graph("v a\nv b\ne a b\ne b a\n"), doctest::Contains("duplicate edge"), Error);
    CHECK_THROWS_WITH_AS(parse_graph("v a\ne a z\n"), doctest::Contains("z"), ParseError);
    CHECK_THROWS_AS(parse_graph("v a\nv a\ne a a\n"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("v a\nq a b\n"), doctest::Contains("line 2"), ParseError);
}

TEST_CASE("parse: forward references resolved by later declarations") {
    auto g = parse_graph("# comment\nv a\ne a b  # trailing\nv b\n");
    CHECK(g.order() == 2);
    CHECK(g.adjacent(g.vertex("a"), g.vertex("b")));
}

TEST_CASE("parse: loops") {
    auto g = parse_graph("v u\nv w\ne u u\ne u w\n");
    auto u = g.vertex("u");
    CHECK(g.looped(u));
    CHECK(labels_of(g, neighborhood(g, u)) == std::vector<std::string>{"u", "w"});
    CHECK(labels_of(g, neighborhood(g, g.vertex("w"))) == std::vector<std::string>{"u"});
}

TEST_CASE("neighborhood examples") {
    auto c5 = gen(Family::Cycle, {5});
    CHECK(labels_of(c5, neighborhood(c5, 0)) == std::vector<std::string>{"1", "4"});
    auto k4 = gen(Family::Complete, {4});
    CHECK(labels_of(k4, neighborhood(k4, k4.vertex("1"))) == std::vector<std::string>{"2", "3", "4"});
    CHECK_THROWS_AS(k4.vertex("9"), Error);
}

TEST_CASE("n2_walks examples") {
    auto k2 = parse_graph("v a\nv b\ne a b\n");
    auto w = n2_walks(k2, 0);
    REQUIRE(w.size() == 1);
    CHECK(w[0].str() == "a b a");

    auto c4 = gen(Family::Cycle, {4});
    std::vector<std::string> got;
    for (const auto& x : n2_walks(c4, 0)) got.push_back(x.str());
    CHECK(got == std::vector<std::string>{"0 1 0", "0 1 2", "0 3 0", "0 3 2"});

    CHECK(n2_walks(gen(Family::Cycle, {5}), 0).size() == 4);
}

TEST_CASE("diamond examples") {
    CHECK(diamonds(gen(Family::Cycle, {5})).empty());
    auto c4 = gen(Family::Cycle, {4});
    REQUIRE(diamonds(c4).size() == 1);
    CHECK(to_string(c4, diamonds(c4)[0]) == "0 1 2 3");
    CHECK(diamonds(gen(Family::Complete, {4})).size() == 3);
}

TEST_CASE("diamond canonical form") {
    std::mt19937 rng(kSeed);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng, 4 + trial % 5, trial % 7, 0.1);
        for (const auto& d : diamonds(g)) {
            const std::array<Vertex, 4> c{d.w, d.x, d.y, d.z};
            CHECK(d.w != d.y);
            CHECK(d.x != d.z);
            for (int r = 0; r < 4; ++r) {
                std::array<Vertex, 4> rot{c[r], c[(r + 1) % 4], c[(r + 2) % 4], c[(r + 3) % 4]};
                std::array<Vertex, 4> rev{rot[0], rot[3], rot[2], rot[1]};
                CHECK(c <= rot);
                CHECK(c <= rev);
            }
        }
    }
}

TEST_CASE("isomorphism examples") {
    auto c5 = gen(Family::Cycle, {5});
    std::mt19937 rng(kSeed);
    auto shuffled = relabel(c5, random_permutation(rng, 5));
    auto iso = are_isomorphic(c5, shuffled);
    REQUIRE(iso.has_value());
    CHECK(validate(*iso).empty());
    CHECK_FALSE(are_isomorphic(c5, gen(Family::Cycle, {6})).has_value());
}

TEST_CASE("property: neighborhood symmetry and n2 count") {
    std::mt19937 rng(kSeed + 1);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(rng, 2 + trial % 9, trial % 11, 0.15);
        const auto m = matrix(g);
        for (Vertex v = 0; v < g.order(); ++v) {
            std::size_t expected = 0;
            for (auto x : neighborhood(g, v)) {
                CHECK(m[x][v]);
                expected += neighborhood(g, x).size();
            }
            CHECK(neighborhood(g, v) == neighbors_by_matrix(m, v));
            CHECK(n2_walks(g, v).size() == expected);
        }
    }
}

TEST_CASE("property: diamond count matches brute force and survives relabeling") {
    std::mt19937 rng(kSeed + 2);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(rng, 3 + trial % 7, trial % 13, 0.1);
        const auto count = diamonds(g).size();
        CHECK(count == count_diamonds(g));
        auto h = relabel(g, random_permutation(rng, g.order()));
        CHECK(diamonds(h).size() == count);
    }
    for (auto g : {gen(Family::Complete, {5}), gen(Family::Wheel, {5}), gen(Family::PaperG),
                   gen(Family::CompleteBipartite, {3, 3}), gen(Family::Kneser, {5, 2})})
        CHECK(diamonds(g).size() == count_diamonds(g));
}

TEST_CASE("property: isomorphism search agrees with permutation search") {
    std::mt19937 rng(kSeed + 3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + trial % 5;
        auto g = random_graph(rng, n, trial % 6);
        auto h = trial % 2 ? relabel(g, random_permutation(rng, n)) : random_graph(rng, n, trial % 6);
        auto found = are_isomorphic(g, h);
        CHECK(found.has_value() == brute_isomorphic(g, h));
        if (found) {
            CHECK(validate(*found).empty());
            auto back = are_isomorphic(h, g);
            REQUIRE(back.has_value());
        }
    }
}

TEST_CASE("property: write then read is the identity") {
    std::mt19937 rng(kSeed + 4);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng, 2 + trial % 8, trial % 9, 0.2);
        auto text = format_graph(g);
        auto back = parse_graph(text);
        CHECK(back.name() == g.name());
        CHECK(back.labels() == g.labels());
        CHECK(back.edges() == g.edges());
        CHECK(format_graph(back) == text);
    }
}

TEST_CASE("dot export") {
    auto g = parse_graph("graph t\nv u\nv w\ne u u\ne u w\n");
    auto dot = to_dot(g);
    CHECK(dot.find("graph \"t\" {") == 0);
    CHECK(dot.find("\"u\" -- \"u\";") != std::string::npos);
    CHECK(dot.find("\"u\" -- \"w\";") != std::string::npos);
}
