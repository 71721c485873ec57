#include <doctest.h>

#include "homcover/covering.hpp"
#include "homcover/deck.hpp"
#include "homcover/error.hpp"
#include "homcover/families.hpp"
#include "homcover/universal.hpp"
#include "homcover/walk.hpp"
#include "support.hpp"

using namespace homcover;
using namespace testsupport;

namespace {

Graph gen(Family f, std::vector<int> p = {}) { return generate({f, std::move(p)}); }

DeckGroup deck_of(const Graph& g, Vertex v = 0, std::size_t depth = 10) {
    return DeckGroup(build_folded_cover(g, v, depth));
}

// Klein four-group as a raw table.
FiniteGroup klein() { return FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)); }

// S3 on {0,1,2}; element i is the i-th permutation in lexicographic order.
FiniteGroup symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    FiniteGroup g;
    g.table.assign(6, std::vector<std::uint32_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            g.table[a][b] = static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return g;
}

// Subgroups by brute force over all subsets (orders up to ~12).
std::size_t brute_subgroup_count(const FiniteGroup& g) {
    const auto n = g.order();
    std::size_t count = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1u)) continue;
        bool closed = true;
        for (std::uint32_t a = 0; a < n && closed; ++a)
            for (std::uint32_t b = 0; b < n && closed; ++b)
                if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> g.table[a][b] & 1u)) closed = false;
        if (closed) ++count;
    }
    return count;
}

std::string name_of(const Graph& g, Vertex v = 0, std::size_t depth = 12) {
    auto r = fundamental_group(g, v, depth);
    return r.group ? r.group->name : std::string("none");
}

}  // namespace

TEST_CASE("deck group examples") {
    CHECK(deck_of(gen(Family::Complete, {4})).order() == 2);
    CHECK(deck_of(gen(Family::Wheel, {5}), gen(Family::Wheel, {5}).vertex("c")).order() == 2);
    auto k33 = gen(Family::CompleteBipartite, {3, 3});
    CHECK(deck_of(pleat(k33).pleat).order() == 1);
    CHECK(deck_of(k33).order() == 1);
    CHECK_THROWS_AS(DeckGroup(build_folded_cover(gen(Family::Cycle, {5}), 0, 6)), PreconditionError);
}

TEST_CASE("identify_group examples") {
    auto z2 = identify_group(FiniteGroup::cyclic(2));
    CHECK(z2.name == "Z/2");
    CHECK(z2.abelian);
    CHECK(identify_group(FiniteGroup::cyclic(1)).name == "e");
    CHECK(identify_group(klein()).name == "Z/2 x Z/2");
    CHECK(identify_group(FiniteGroup::cyclic(6)).name == "Z/6");
    CHECK(identify_group(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3))).name == "Z/6");
    CHECK(identify_group(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4))).name == "Z/2 x Z/4");
    auto s3 = identify_group(symmetric3());
    CHECK_FALSE(s3.abelian);
    CHECK(s3.name.empty());
    CHECK(s3.table.size() == 6);
    CHECK_THROWS_AS(identify_group(FiniteGroup::cyclic(30)), Error);
    CHECK(identify_group(FiniteGroup::cyclic(30), 30).name == "Z/30");

    auto k62 = gen(Family::Kneser, {6, 2});
    CHECK(identify_group(deck_of(k62)).name == "Z/2");
}

TEST_CASE("subgroup examples") {
    CHECK(subgroups(FiniteGroup::cyclic(2)).size() == 2);
    CHECK(subgroups(FiniteGroup::cyclic(1)).size() == 1);
    CHECK(subgroups(FiniteGroup::cyclic(4)).size() == 3);
    auto all = subgroups(FiniteGroup::cyclic(4));
    CHECK(all[0].order() == 1);
    CHECK(all[1].order() == 2);
    CHECK(all[2].order() == 4);
    CHECK(is_subgroup(FiniteGroup::cyclic(4), Subgroup{{0, 2}}));
    CHECK_FALSE(is_subgroup(FiniteGroup::cyclic(4), Subgroup{{0, 1}}));
}

TEST_CASE("check_group rejects non-groups") {
    FiniteGroup bad{{{0, 1}, {1, 1}}};
    CHECK_THROWS_AS(check_group(bad), Error);
    FiniteGroup not_identity{{{1, 0}, {0, 1}}};
    CHECK_THROWS_AS(check_group(not_identity), Error);
}

TEST_CASE("quotient examples") {
    auto k4 = gen(Family::Complete, {4});
    DeckGroup d = deck_of(k4);
    auto whole = quotient(d, Subgroup{{0, 1}});
    CHECK(whole.index == 1);
    CHECK(are_isomorphic(whole.graph, k4).has_value());
    CHECK(check_cover(whole.projection).is_homotopy_cover);

    auto trivial = quotient(d, Subgroup{{0}});
    CHECK(trivial.index == 2);
    CHECK(are_isomorphic(trivial.graph, d.cover().graph()).has_value());

    CHECK_THROWS_AS(quotient(d, Subgroup{{1}}), Error);

    auto g = gen(Family::PaperG);
    auto q = cyclic_quotient(g, g.vertex("a"), Walk::parse(g, "a b c d e a"), 2);
    CHECK(q.index == 2);
    CHECK(are_isomorphic(q.graph, gen(Family::PaperGTilde)).has_value());
    CHECK(check_cover(q.projection).is_homotopy_cover);

    CHECK_THROWS_AS(cyclic_quotient(g, g.vertex("a"), Walk::parse(g, "a b c"), 2), Error);
}

TEST_CASE("enumeration examples") {
    auto k4 = enumerate_covers(gen(Family::Complete, {4}), 0, 10, 0);
    CHECK(k4.stabilized);
    REQUIRE(k4.covers.size() == 2);
    CHECK(k4.covers[0].graph.order() == 4);
    CHECK(k4.covers[1].graph.order() == 8);

    auto c5 = enumerate_covers(gen(Family::Cycle, {5}), 0, 12, 3);
    CHECK_FALSE(c5.stabilized);
    REQUIRE(c5.shift.has_value());
    REQUIRE(c5.covers.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(c5.covers[i].index == i + 1);
        CHECK(are_isomorphic(c5.covers[i].graph, gen(Family::Cycle, {5 * static_cast<int>(i + 1)})).has_value());
    }

    auto w6 = gen(Family::Wheel, {6});
    auto e = enumerate_covers(w6, w6.vertex("c"), 12, 3);
    REQUIRE(e.covers.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(e.covers[i].graph.order() == 7 * (i + 1));

    auto petersen = enumerate_covers(gen(Family::Kneser, {5, 2}), 0, 6, 3);
    CHECK_FALSE(petersen.stabilized);
    CHECK_FALSE(petersen.shift.has_value());
    CHECK(petersen.covers.empty());
    CHECK_FALSE(petersen.note.empty());
}

TEST_CASE("fundamental groups of the families") {
    for (int n : {4, 5, 6}) CHECK(name_of(gen(Family::Complete, {n})) == "Z/2");
    for (int n : {5, 7}) {
        auto w = gen(Family::Wheel, {n});
        CHECK(name_of(w, w.vertex("c")) == "Z/2");
    }
    for (int n : {6, 8}) {
        auto w = gen(Family::Wheel, {n});
        auto r = fundamental_group(w, w.vertex("c"), 12);
        CHECK_FALSE(r.stabilized);
        REQUIRE(r.shift.has_value());
    }
    CHECK(name_of(gen(Family::CompleteBipartite, {2, 3})) == "e");
    CHECK(name_of(gen(Family::CompleteBipartite, {3, 3})) == "e");
    CHECK(name_of(gen(Family::Cycle, {4})) == "e");
    CHECK(name_of(gen(Family::Cycle, {4})) == name_of(pleat(gen(Family::Cycle, {4})).pleat));
    for (int n : {5, 6, 7}) {
        auto r = fundamental_group(gen(Family::Cycle, {n}), 0, 12);
        CHECK_FALSE(r.stabilized);
        REQUIRE(r.shift.has_value());
        CHECK(r.shift->generator.length() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("property: deck elements commute with projection and act freely") {
    for (auto g : {gen(Family::Complete, {4}), gen(Family::Complete, {5}), gen(Family::Wheel, {5}),
                   gen(Family::Kneser, {6, 2}), gen(Family::Wheel, {7}), gen(Family::CompleteBipartite, {2, 3})}) {
        auto r = fundamental_group(g, 0, 12);
        REQUIRE(r.stabilized);
        DeckGroup d(build_folded_cover(g, 0, r.depth));
        const auto& u = d.cover();
        CHECK(d.order() == u.fibre(u.basepoint()).size());
        for (std::size_t i = 0; i < d.order(); ++i) {
            const auto& perm = d.permutation(i);
            std::set<ClassId> image(perm.begin(), perm.end());
            CHECK(image.size() == u.class_count());
            for (ClassId c = 0; c < u.class_count(); ++c) {
                CHECK(u.projection(perm[c]) == u.projection(c));
                if (i != 0) CHECK(perm[c] != c);
                for (auto n : u.graph().neighbors(c)) CHECK(u.graph().adjacent(perm[c], perm[n]));
            }
        }
        // Composition agrees with concatenating fibre representatives.
        for (std::size_t a = 0; a < d.order(); ++a)
            for (std::size_t b = 0; b < d.order(); ++b) {
                auto walk = concat(u.representative_walk(d.fibre()[a]), u.representative_walk(d.fibre()[b]));
                auto product = d.group().table[a][b];
                CHECK(u.lift(walk) == d.fibre()[product]);
            }
        check_group(d.group());
    }
}

TEST_CASE("property: subgroup enumeration matches subset search") {
    for (const auto& g : {FiniteGroup::cyclic(1), FiniteGroup::cyclic(4), FiniteGroup::cyclic(6), klein(),
                          symmetric3(), FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)),
                          FiniteGroup::cyclic(12)}) {
        auto subs = subgroups(g);
        CHECK(subs.size() == brute_subgroup_count(g));
        for (std::size_t i = 0; i < subs.size(); ++i) {
            CHECK(is_subgroup(g, subs[i]));
            CHECK(g.order() % subs[i].order() == 0);
            if (i > 0) CHECK(subs[i - 1].order() <= subs[i].order());
        }
    }
}

TEST_CASE("property: element orders and inverses") {
    for (const auto& g : {FiniteGroup::cyclic(6), klein(), symmetric3(), FiniteGroup::cyclic(9)}) {
        for (std::uint32_t a = 0; a < g.order(); ++a) {
            CHECK(g.table[a][g.inverse(a)] == 0);
            std::uint32_t x = a;
            std::size_t k = 1;
            while (x != 0) {
                x = g.table[x][a];
                ++k;
            }
            CHECK(g.element_order(a) == k);
        }
    }
}

TEST_CASE("property: every quotient is a homotopy cover with fibre equal to the index") {
    for (auto g : {gen(Family::Complete, {4}), gen(Family::Wheel, {5}), gen(Family::Kneser, {6, 2})}) {
        auto e = enumerate_covers(g, 0, 12, 0);
        REQUIRE(e.stabilized);
        for (const auto& c : e.covers) {
            CHECK(check_cover(c.projection).is_homotopy_cover);
            CHECK(brute_is_homotopy_cover(c.projection));
            for (Vertex v = 0; v < g.order(); ++v) CHECK(c.projection.fibre(v).size() == c.index);
        }
        CHECK(are_isomorphic(e.covers.front().graph, g).has_value());
    }
}

TEST_CASE("property: fundamental group order is unchanged by pleating") {
    for (auto g : {gen(Family::CompleteBipartite, {2, 2}), gen(Family::CompleteBipartite, {2, 3}),
                   gen(Family::CompleteBipartite, {3, 3}), gen(Family::CompleteBipartite, {3, 4})}) {
        CHECK(name_of(g) == "e");
        CHECK(name_of(pleat(g).pleat) == "e");
    }
    auto w4 = gen(Family::Wheel, {4});
    auto r = fundamental_group(w4, w4.vertex("c"), 12);
    auto p = pleat(w4).pleat;
    auto rp = fundamental_group(p, 0, 12);
    CHECK_FALSE(r.stabilized);
    CHECK_FALSE(rp.stabilized);
    CHECK(r.shift.has_value());
    CHECK(rp.shift.has_value());
}
