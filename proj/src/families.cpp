#include "homcover/families.hpp"

#include <array>
#include <functional>

#include "homcover/error.hpp"

namespace homcover {

namespace {

struct Entry {
    Family family;
    const char* tag;
    std::size_t arity;
};

constexpr std::array<Entry, 9> kEntries{{
    {Family::Path, "path", 1},
    {Family::LoopedPath, "looped-path", 1},
    {Family::Cycle, "cycle", 1},
    {Family::Complete, "complete", 1},
    {Family::CompleteBipartite, "complete-bipartite", 2},
    {Family::Wheel, "wheel", 1},
    {Family::Kneser, "kneser", 2},
    {Family::PaperG, "paper-g", 0},
    {Family::PaperGTilde, "paper-g-tilde", 0},
}};

const Entry& entry(Family f) {
    for (const auto& e : kEntries)
        if (e.family == f) return e;
    throw Error("unknown family");
}

void require(bool ok, const std::string& message) {
    if (!ok) throw PreconditionError(message);
}

using Edges = std::vector<std::pair<Vertex, Vertex>>;

std::vector<std::string> numbered(int from, int to) {
    std::vector<std::string> out;
    for (int i = from; i <= to; ++i) out.push_back(std::to_string(i));
    return out;
}

Graph kneser(int n, int k) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> current;
    std::function<void(int)> choose = [&](int next) {
        if (static_cast<int>(current.size()) == k) {
            subsets.push_back(current);
            return;
        }
        for (int i = next; i <= n; ++i) {
            current.push_back(i);
            choose(i + 1);
            current.pop_back();
        }
    };
    choose(1);
    std::vector<std::string> labels;
    for (const auto& s : subsets) {
        std::string label = "{";
        for (std::size_t i = 0; i < s.size(); ++i) label += (i ? "," : "") + std::to_string(s[i]);
        labels.push_back(label + "}");
    }
    Edges edges;
    for (Vertex a = 0; a < subsets.size(); ++a)
        for (Vertex b = a + 1; b < subsets.size(); ++b) {
            bool disjoint = true;
            for (int x : subsets[a])
                for (int y : subsets[b]) disjoint = disjoint && x != y;
            if (disjoint) edges.emplace_back(a, b);
        }
    return Graph::create("K(" + std::to_string(n) + "," + std::to_string(k) + ")", std::move(labels),
                         std::move(edges));
}

}  // namespace

Family family_from_tag(std::string_view tag) {
    for (const auto& e : kEntries)
        if (tag == e.tag) return e.family;
    throw PreconditionError("unknown graph family '" + std::string(tag) + "'");
}

std::string family_tag(Family family) { return entry(family).tag; }
std::size_t family_arity(Family family) { return entry(family).arity; }

Graph generate(const FamilySpec& spec) {
    const auto& e = entry(spec.family);
    require(spec.params.size() == e.arity, std::string(e.tag) + " takes " + std::to_string(e.arity) +
                                               " parameter(s)");
    const auto& p = spec.params;
    Edges edges;
    switch (spec.family) {
        case Family::Path: {
            require(p[0] >= 2, "path needs n >= 2");
            for (int i = 0; i + 1 < p[0]; ++i) edges.emplace_back(i, i + 1);
            return Graph::create("P" + std::to_string(p[0]), numbered(0, p[0] - 1), std::move(edges));
        }
        case Family::LoopedPath: {
            require(p[0] >= 0, "looped-path needs n >= 0");
            for (int i = 0; i <= p[0]; ++i) {
                edges.emplace_back(i, i);
                if (i < p[0]) edges.emplace_back(i, i + 1);
            }
            return Graph::create("I" + std::to_string(p[0]), numbered(0, p[0]), std::move(edges));
        }
        case Family::Cycle: {
            require(p[0] >= 3, "cycle needs n >= 3");
            for (int i = 0; i < p[0]; ++i) edges.emplace_back(i, (i + 1) % p[0]);
            return Graph::create("C" + std::to_string(p[0]), numbered(0, p[0] - 1), std::move(edges));
        }
        case Family::Complete: {
            require(p[0] >= 2, "complete needs n >= 2");
            for (int i = 0; i < p[0]; ++i)
                for (int j = i + 1; j < p[0]; ++j) edges.emplace_back(i, j);
            return Graph::create("K" + std::to_string(p[0]), numbered(1, p[0]), std::move(edges));
        }
        case Family::CompleteBipartite: {
            require(p[0] >= 1 && p[1] >= 1, "complete-bipartite needs n, m >= 1");
            std::vector<std::string> labels;
            for (int i = 1; i <= p[0]; ++i) labels.push_back("a" + std::to_string(i));
            for (int j = 1; j <= p[1]; ++j) labels.push_back("b" + std::to_string(j));
            for (int i = 0; i < p[0]; ++i)
                for (int j = 0; j < p[1]; ++j) edges.emplace_back(i, p[0] + j);
            return Graph::create("K" + std::to_string(p[0]) + "," + std::to_string(p[1]),
                                 std::move(labels), std::move(edges));
        }
        case Family::Wheel: {
            require(p[0] >= 3, "wheel needs n >= 3");
            auto labels = numbered(1, p[0]);
            labels.push_back("c");
            const Vertex hub = p[0];
            for (int i = 0; i < p[0]; ++i) {
                edges.emplace_back(i, (i + 1) % p[0]);
                edges.emplace_back(i, hub);
            }
            return Graph::create("W" + std::to_string(p[0]) + "+1", std::move(labels), std::move(edges));
        }
        case Family::Kneser: {
            require(p[1] >= 1 && p[0] >= 2 * p[1] + 1, "kneser needs k >= 1 and n >= 2k+1");
            return kneser(p[0], p[1]);
        }
        case Family::PaperG:
            return Graph::from_labels("paper-g", {"a", "b", "c", "d", "e", "b'"},
                                      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"},
                                       {"b'", "a"}, {"b'", "c"}});
        case Family::PaperGTilde:
            return Graph::from_labels(
                "paper-g-tilde",
                {"a1", "b1", "c1", "d1", "e1", "a2", "b2", "c2", "d2", "e2", "b'1", "b'2"},
                {{"a1", "b1"}, {"b1", "c1"}, {"c1", "d1"}, {"d1", "e1"}, {"e1", "a2"},
                 {"a2", "b2"}, {"b2", "c2"}, {"c2", "d2"}, {"d2", "e2"}, {"e2", "a1"},
                 {"b'1", "a1"}, {"b'1", "c1"}, {"b'2", "a2"}, {"b'2", "c2"}});
    }
    throw Error("unknown family");
}

Morphism paper_g_covering() {
    const auto cover = generate({Family::PaperGTilde, {}});
    const auto base = generate({Family::PaperG, {}});
    std::vector<Vertex> map;
    for (const auto& label : cover.labels()) map.push_back(base.vertex(label.substr(0, label.size() - 1)));
    return Morphism(cover, base, std::move(map));
}

}  // namespace homcover
