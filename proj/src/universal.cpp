#include "homcover/universal.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

#include "homcover/covering.hpp"
#include "homcover/error.hpp"
#include "homcover/io.hpp"

namespace homcover {

namespace {

constexpr std::size_t kClassLimit = 4'000'000;

// Coset-enumeration style folding. Each class keeps one slot per base neighbour
// of its projection; a slot holds the class reached by extending by that
// neighbour. Diamonds act as relators of length four: scanning one from a class
// either closes it (coincidence), fills its single missing slot (deduction), or
// does nothing.
class Folder {
public:
    explicit Folder(const Graph& g) : g_(g), cycles_(g.order()) {
        for (const auto& d : diamonds(g)) {
            const std::array<Vertex, 4> c{d.w, d.x, d.y, d.z};
            for (int r = 0; r < 4; ++r)
                cycles_[c[r]].push_back({c[(r + 1) % 4], c[(r + 2) % 4], c[(r + 3) % 4]});
        }
    }

    std::uint32_t make(Vertex p) {
        if (parent_.size() >= kClassLimit)
            throw Error("folded cover exceeded " + std::to_string(kClassLimit) + " classes");
        const auto id = static_cast<std::uint32_t>(parent_.size());
        parent_.push_back(id);
        proj_.push_back(p);
        table_.emplace_back(g_.degree(p), -1);
        return id;
    }

    std::uint32_t find(std::uint32_t c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    std::int64_t get(std::uint32_t c, Vertex x) {
        c = find(c);
        const int idx = g_.neighbor_index(proj_[c], x);
        if (idx < 0) return -1;
        const auto e = table_[c][idx];
        if (e < 0) return -1;
        return find(static_cast<std::uint32_t>(e));
    }

    void set(std::uint32_t c, Vertex x, std::uint32_t d) {
        c = find(c);
        d = find(d);
        auto& slot = table_[c][g_.neighbor_index(proj_[c], x)];
        if (slot < 0) {
            slot = d;
            changed_ = true;
        } else if (find(static_cast<std::uint32_t>(slot)) != d) {
            coincide(static_cast<std::uint32_t>(slot), d);
        }
    }

    void link(std::uint32_t c, std::uint32_t d) {
        set(c, proj_[find(d)], d);
        set(d, proj_[find(c)], c);
    }

    void coincide(std::uint32_t a, std::uint32_t b) {
        pending_.emplace_back(a, b);
        while (!pending_.empty()) {
            auto [x, y] = pending_.front();
            pending_.pop_front();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (y < x) std::swap(x, y);
            if (proj_[x] != proj_[y]) throw Error("folding merged classes over different vertices");
            parent_[y] = x;
            changed_ = true;
            for (std::size_t i = 0; i < table_[y].size(); ++i) {
                const auto ey = table_[y][i];
                if (ey < 0) continue;
                auto& ex = table_[x][i];
                if (ex < 0)
                    ex = ey;
                else if (find(static_cast<std::uint32_t>(ex)) != find(static_cast<std::uint32_t>(ey)))
                    pending_.emplace_back(static_cast<std::uint32_t>(ex), static_cast<std::uint32_t>(ey));
            }
            table_[y].clear();
            table_[y].shrink_to_fit();
        }
    }

    void scan(std::uint32_t c, const std::array<Vertex, 3>& cycle) {
        const std::array<Vertex, 5> p{proj_[c], cycle[0], cycle[1], cycle[2], proj_[c]};
        std::array<std::int64_t, 5> fwd{c, -1, -1, -1, -1};
        std::array<std::int64_t, 5> bwd{c, -1, -1, -1, -1};
        int a = 0;
        while (a < 4) {
            const auto nx = get(static_cast<std::uint32_t>(fwd[a]), p[a + 1]);
            if (nx < 0) break;
            fwd[++a] = nx;
        }
        int b = 0;  // bwd[j] sits at cycle position 4 - j
        while (b < 4) {
            const auto nx = get(static_cast<std::uint32_t>(bwd[b]), p[3 - b]);
            if (nx < 0) break;
            bwd[++b] = nx;
        }
        if (a + b >= 4) {
            for (int i = 4 - b; i <= a; ++i)
                if (find(static_cast<std::uint32_t>(fwd[i])) != find(static_cast<std::uint32_t>(bwd[4 - i])))
                    coincide(static_cast<std::uint32_t>(fwd[i]), static_cast<std::uint32_t>(bwd[4 - i]));
        } else if (a + b == 3) {
            const auto u = static_cast<std::uint32_t>(fwd[a]);
            const auto w = static_cast<std::uint32_t>(bwd[b]);
            set(u, p[a + 1], w);
            set(w, p[a], u);
        }
    }

    void fixpoint() {
        do {
            changed_ = false;
            for (std::uint32_t c = 0; c < parent_.size(); ++c) {
                if (find(c) != c) continue;
                for (const auto& cycle : cycles_[proj_[c]]) {
                    scan(find(c), cycle);
                    if (find(c) != c) break;
                }
            }
        } while (changed_);
    }

    std::vector<std::int64_t> distances(std::uint32_t root) {
        std::vector<std::int64_t> dist(parent_.size(), -1);
        root = find(root);
        dist[root] = 0;
        std::deque<std::uint32_t> queue{root};
        while (!queue.empty()) {
            const auto c = queue.front();
            queue.pop_front();
            for (auto e : table_[c]) {
                if (e < 0) continue;
                const auto d = find(static_cast<std::uint32_t>(e));
                if (dist[d] < 0) {
                    dist[d] = dist[c] + 1;
                    queue.push_back(d);
                }
            }
        }
        return dist;
    }

    bool has_gap(std::uint32_t c) const {
        return std::any_of(table_[c].begin(), table_[c].end(), [](auto e) { return e < 0; });
    }

    // Extends every class closer than `depth` to the root until none has a gap.
    void grow(std::uint32_t root, std::size_t depth) {
        while (true) {
            const auto dist = distances(root);
            std::vector<std::uint32_t> todo;
            for (std::uint32_t c = 0; c < parent_.size(); ++c)
                if (dist[c] >= 0 && static_cast<std::size_t>(dist[c]) < depth && has_gap(c))
                    todo.push_back(c);
            if (todo.empty()) return;
            std::stable_sort(todo.begin(), todo.end(),
                             [&](auto x, auto y) { return dist[x] < dist[y]; });
            for (auto c : todo) {
                c = find(c);
                for (auto x : g_.neighbors(proj_[c]))
                    if (get(c, x) < 0) link(c, make(x));
            }
            fixpoint();
        }
    }

    // Follows seq from `from`, creating classes where slots are empty.
    std::uint32_t walk_out(std::uint32_t from, const std::vector<Vertex>& seq) {
        auto cur = find(from);
        for (std::size_t i = 1; i < seq.size(); ++i) {
            auto nx = get(cur, seq[i]);
            if (nx < 0) {
                const auto d = make(seq[i]);
                link(cur, d);
                nx = find(d);
            }
            cur = static_cast<std::uint32_t>(nx);
        }
        return cur;
    }

    // Live classes in breadth-first order from the root, with representatives.
    void extract(std::uint32_t root, std::vector<std::vector<Vertex>>& reps,
                 std::vector<std::vector<std::int64_t>>& table) {
        root = find(root);
        std::vector<std::int64_t> renumber(parent_.size(), -1);
        std::vector<std::uint32_t> order{root};
        renumber[root] = 0;
        reps.push_back({proj_[root]});
        for (std::size_t head = 0; head < order.size(); ++head) {
            const auto c = order[head];
            for (auto e : table_[c]) {
                if (e < 0) continue;
                const auto d = find(static_cast<std::uint32_t>(e));
                if (renumber[d] >= 0) continue;
                renumber[d] = static_cast<std::int64_t>(order.size());
                order.push_back(d);
                auto rep = reps[head];
                rep.push_back(proj_[d]);
                reps.push_back(std::move(rep));
            }
        }
        table.resize(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            const auto& slots = table_[order[i]];
            table[i].resize(slots.size());
            for (std::size_t k = 0; k < slots.size(); ++k)
                table[i][k] = slots[k] < 0 ? -1 : renumber[find(static_cast<std::uint32_t>(slots[k]))];
        }
    }

private:
    const Graph& g_;
    std::vector<std::vector<std::array<Vertex, 3>>> cycles_;
    std::vector<std::uint32_t> parent_;
    std::vector<Vertex> proj_;
    std::vector<std::vector<std::int64_t>> table_;
    std::deque<std::pair<std::uint32_t, std::uint32_t>> pending_;
    bool changed_ = false;
};

void check_basepoint(const Graph& g, Vertex v) {
    if (v >= g.order()) throw PreconditionError("basepoint is not a vertex of '" + g.name() + "'");
}

std::optional<Vertex> neighbor_over(const Morphism& f, Vertex from, Vertex target) {
    for (auto w : f.dom().neighbors(from))
        if (f(w) == target) return w;
    return std::nullopt;
}

}  // namespace

FoldedCover::FoldedCover(Graph base, Vertex basepoint, std::size_t depth, Graph graph, Morphism map)
    : base_(std::move(base)),
      basepoint_(basepoint),
      depth_(depth),
      graph_(std::move(graph)),
      projection_map_(std::move(map)) {}

FoldedCover FoldedCover::assemble(const Graph& base, Vertex basepoint, std::size_t depth,
                                  std::vector<std::vector<Vertex>> reps,
                                  std::vector<std::vector<std::int64_t>> table) {
    std::vector<std::string> labels;
    std::vector<Vertex> proj;
    for (const auto& rep : reps) {
        std::string label;
        for (auto v : rep) {
            if (!label.empty()) label += '/';
            label += base.label(v);
        }
        labels.push_back(std::move(label));
        proj.push_back(rep.back());
    }
    std::set<std::pair<Vertex, Vertex>> edges;
    for (Vertex c = 0; c < table.size(); ++c)
        for (auto e : table[c])
            if (e >= 0) edges.emplace(std::min<Vertex>(c, e), std::max<Vertex>(c, e));
    auto graph = Graph::create(base.name() + "-universal", std::move(labels),
                               {edges.begin(), edges.end()}, Validation::Structure);
    Morphism map(graph, base, proj);
    FoldedCover u(base, basepoint, depth, graph, std::move(map));
    u.reps_ = std::move(reps);
    u.proj_ = std::move(proj);
    u.table_ = std::move(table);
    u.stabilized_ = true;
    for (ClassId c = 0; c < u.class_count(); ++c) u.stabilized_ = u.stabilized_ && u.complete(c);
    return u;
}

std::optional<ClassId> FoldedCover::neighbor(ClassId c, Vertex over) const {
    const int idx = base_.neighbor_index(proj_[c], over);
    if (idx < 0 || table_[c][idx] < 0) return std::nullopt;
    return static_cast<ClassId>(table_[c][idx]);
}

bool FoldedCover::complete(ClassId c) const {
    return std::none_of(table_[c].begin(), table_[c].end(), [](auto e) { return e < 0; });
}

std::vector<ClassId> FoldedCover::frontier() const {
    std::vector<ClassId> out;
    for (ClassId c = 0; c < class_count(); ++c)
        if (reps_[c].size() - 1 == depth_) out.push_back(c);
    return out;
}

std::vector<ClassId> FoldedCover::fibre(Vertex v) const {
    std::vector<ClassId> out;
    for (ClassId c = 0; c < class_count(); ++c)
        if (proj_[c] == v) out.push_back(c);
    return out;
}

std::optional<ClassId> FoldedCover::trace(const std::vector<Vertex>& seq) const {
    if (seq.empty() || seq.front() != basepoint_) return std::nullopt;
    ClassId cur = root();
    for (std::size_t i = 1; i < seq.size(); ++i) {
        auto next = neighbor(cur, seq[i]);
        if (!next) return std::nullopt;
        cur = *next;
    }
    return cur;
}

ClassId FoldedCover::lift(const Walk& walk) const {
    if (!walk.base().same_as(base_)) throw PreconditionError("lift: walk is not in the base graph");
    if (walk.front() != basepoint_)
        throw PreconditionError("lift: walk does not start at " + base_.label(basepoint_));
    const auto reduced = prune_normal_form(walk.seq());
    if (!stabilized_ && reduced.size() - 1 > safe_depth())
        throw PreconditionError("lift: reduced length " + std::to_string(reduced.size() - 1) +
                                " exceeds safe depth " + std::to_string(safe_depth()));
    auto c = trace(reduced);
    if (!c) throw Error("lift: walk leaves the constructed classes");
    return *c;
}

FoldedCover build_folded_cover(const Graph& g, Vertex basepoint, std::size_t depth) {
    return build_folded_quotient(g, basepoint, depth, {});
}

FoldedCover build_folded_quotient(const Graph& g, Vertex basepoint, std::size_t depth,
                                  const std::vector<Walk>& loops) {
    check_basepoint(g, basepoint);
    for (const auto& loop : loops)
        if (!loop.base().same_as(g) || loop.front() != basepoint || loop.back() != basepoint)
            throw PreconditionError("quotient loops must be closed walks at the basepoint");
    Folder folder(g);
    const auto root = folder.make(basepoint);
    for (const auto& loop : loops)
        folder.coincide(folder.walk_out(root, prune_normal_form(loop.seq())), root);
    folder.fixpoint();
    folder.grow(root, depth);
    std::vector<std::vector<Vertex>> reps;
    std::vector<std::vector<std::int64_t>> table;
    folder.extract(root, reps, table);
    return FoldedCover::assemble(g, basepoint, depth, std::move(reps), std::move(table));
}

std::string to_dot(const FoldedCover& u) {
    std::vector<std::string> labels;
    for (ClassId c = 0; c < u.class_count(); ++c) labels.push_back(u.representative_walk(c).str());
    return to_dot(u.graph(), labels);
}

WalkDecider::WalkDecider(Graph g, Vertex basepoint, std::size_t slack)
    : graph_(std::move(g)), basepoint_(basepoint), slack_(slack) {
    check_basepoint(graph_, basepoint_);
}

const FoldedCover& WalkDecider::cover(std::size_t depth) {
    auto it = cache_.find(depth);
    if (it == cache_.end()) it = cache_.emplace(depth, build_folded_cover(graph_, basepoint_, depth)).first;
    return it->second;
}

DeciderResult WalkDecider::decide(const Walk& a, const Walk& b) {
    if (!a.base().same_as(graph_) || !b.base().same_as(graph_))
        throw PreconditionError("homotopic-walks: walks are not in the decider's graph");
    if (a.front() != basepoint_ || b.front() != basepoint_)
        throw PreconditionError("homotopic-walks: walks must start at " + graph_.label(basepoint_));
    if (a.back() != b.back()) throw PreconditionError("homotopic-walks: walks end at different vertices");
    const auto ra = prune_normal_form(a.seq());
    const auto rb = prune_normal_form(b.seq());
    const auto reduced = std::max(ra.size(), rb.size()) - 1;
    const auto low = reduced + slack_;
    const auto high = low + 2;
    auto verdict_at = [&](std::size_t depth) -> std::optional<bool> {
        const auto& u = cover(depth);
        auto ca = u.trace(ra);
        auto cb = u.trace(rb);
        if (!ca || !cb) return std::nullopt;
        return *ca == *cb;
    };
    const auto first = verdict_at(low);
    // A stabilized cover is exact; no second depth needed.
    if (first && cover(low).stabilized())
        return {*first ? DeciderVerdict::Yes : DeciderVerdict::No, low, low};
    const auto second = verdict_at(high);
    if (!first || !second || *first != *second) return {DeciderVerdict::Unstable, low, high};
    return {*first ? DeciderVerdict::Yes : DeciderVerdict::No, low, high};
}

DeciderResult homotopic_rel_endpoints(const Walk& a, const Walk& b, std::size_t slack) {
    WalkDecider decider(a.base(), a.front(), slack);
    return decider.decide(a, b);
}

Morphism verify_universal_property(const FoldedCover& u, const Morphism& f, Vertex start) {
    if (!f.cod().same_as(u.base()))
        throw PreconditionError("universal property: map does not cover the base graph");
    if (!check_cover(f).is_homotopy_cover)
        throw PreconditionError("universal property: map is not a homotopy cover");
    if (start >= f.dom().order() || f(start) != u.basepoint())
        throw PreconditionError("universal property: start vertex is not over the basepoint");
    std::vector<Vertex> map(u.class_count());
    for (ClassId c = 0; c < u.class_count(); ++c) {
        const auto& rep = u.representative(c);
        Vertex cur = start;
        for (std::size_t i = 1; i < rep.size(); ++i) cur = *neighbor_over(f, cur, rep[i]);
        map[c] = cur;
    }
    Morphism factor(u.graph(), f.dom(), std::move(map));
    factor.require_valid();
    if (compose(f, factor).map() != u.projection_map().map())
        throw Error("universal property: factorisation does not commute with the projections");
    if (u.stabilized() && !check_cover(factor).is_homotopy_cover)
        throw Error("universal property: factorisation is not a homotopy cover");
    return factor;
}

}  // namespace homcover
