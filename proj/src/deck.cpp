#include "homcover/deck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "homcover/covering.hpp"
#include "homcover/error.hpp"

namespace homcover {

std::uint32_t FiniteGroup::inverse(std::uint32_t a) const {
    for (std::uint32_t b = 0; b < order(); ++b)
        if (table[a][b] == 0) return b;
    throw Error("group element without inverse");
}

std::size_t FiniteGroup::element_order(std::uint32_t a) const {
    std::size_t k = 1;
    for (auto x = a; x != 0; x = table[x][a]) ++k;
    return k;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    FiniteGroup g;
    g.table.assign(n, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.table[a][b] = static_cast<std::uint32_t>((a + b) % n);
    return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    const auto m = b.order();
    FiniteGroup g;
    g.table.assign(a.order() * m, std::vector<std::uint32_t>(a.order() * m));
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t y = 0; y < g.order(); ++y)
            g.table[x][y] = static_cast<std::uint32_t>(a.table[x / m][y / m] * m + b.table[x % m][y % m]);
    return g;
}

void check_group(const FiniteGroup& g) {
    const auto n = g.order();
    if (n == 0) throw Error("empty group table");
    for (std::size_t a = 0; a < n; ++a) {
        if (g.table[a].size() != n) throw Error("group table is not square");
        if (g.table[0][a] != a || g.table[a][0] != a) throw Error("element 0 is not the identity");
        std::vector<bool> row(n, false);
        for (auto x : g.table[a]) {
            if (x >= n || row[x]) throw Error("group table row is not a permutation");
            row[x] = true;
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
                    throw Error("group table is not associative");
}

DeckGroup::DeckGroup(FoldedCover cover) : cover_(std::move(cover)) {
    if (!cover_.stabilized())
        throw PreconditionError("deck group needs a stabilized cover (depth " +
                                std::to_string(cover_.depth()) + " did not stabilize)");
    const auto& u = cover_;
    fibre_ = u.fibre(u.basepoint());
    std::map<ClassId, std::uint32_t> element_of;
    for (std::uint32_t i = 0; i < fibre_.size(); ++i) element_of[fibre_[i]] = i;

    for (auto gamma : fibre_) {
        std::vector<ClassId> perm(u.class_count());
        std::vector<bool> hit(u.class_count(), false);
        for (ClassId c = 0; c < u.class_count(); ++c) {
            auto seq = u.representative(gamma);
            const auto& rep = u.representative(c);
            seq.insert(seq.end(), rep.begin() + 1, rep.end());
            const auto image = u.trace(seq);
            if (!image) throw Error("deck group: concatenated walk left the cover");
            if (u.projection(*image) != u.projection(c))
                throw Error("deck group: transformation does not commute with the projection");
            if (hit[*image]) throw Error("deck group: transformation is not injective");
            hit[*image] = true;
            perm[c] = *image;
        }
        for (const auto& e : u.graph().edges())
            if (!u.graph().adjacent(perm[e.first], perm[e.second]))
                throw Error("deck group: transformation does not preserve edges");
        if (gamma != u.root())
            for (ClassId c = 0; c < u.class_count(); ++c)
                if (perm[c] == c) throw Error("deck group: non-identity element fixes a class");
        perms_.push_back(std::move(perm));
    }

    const auto n = fibre_.size();
    group_.table.assign(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            const auto ab = element_of.at(perms_[a][fibre_[b]]);
            group_.table[a][b] = ab;
            for (ClassId c = 0; c < u.class_count(); ++c)
                if (perms_[a][perms_[b][c]] != perms_[ab][c])
                    throw Error("deck group: composition disagrees with concatenation");
        }
    check_group(group_);
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint32_t power(const FiniteGroup& g, std::uint32_t a, std::size_t k) {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < k; ++i) x = g.table[x][a];
    return x;
}

// Invariant factors of an abelian group from its p-power torsion counts.
std::vector<std::size_t> invariant_factors(const FiniteGroup& g) {
    std::vector<std::vector<std::size_t>> exponents;  // per prime, descending
    std::vector<std::size_t> primes = prime_factors(g.order());
    for (auto p : primes) {
        std::vector<std::size_t> logs{0};  // log_p #{x : x^(p^k) = e}
        for (std::size_t pk = p;; pk *= p) {
            std::size_t count = 0;
            for (std::uint32_t a = 0; a < g.order(); ++a)
                if (power(g, a, pk) == 0) ++count;
            std::size_t lg = 0;
            for (auto c = count; c > 1; c /= p) ++lg;
            if (lg == logs.back()) break;
            logs.push_back(lg);
        }
        std::vector<std::size_t> ex;  // exponent k appears (logs[k]-logs[k-1]) - (logs[k+1]-logs[k]) times
        for (std::size_t k = 1; k < logs.size(); ++k) {
            const auto at_least_k = logs[k] - logs[k - 1];
            const auto at_least_next = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
            for (std::size_t i = 0; i < at_least_k - at_least_next; ++i) ex.push_back(k);
        }
        std::sort(ex.rbegin(), ex.rend());
        exponents.push_back(std::move(ex));
    }
    std::size_t rank = 0;
    for (const auto& ex : exponents) rank = std::max(rank, ex.size());
    std::vector<std::size_t> factors(rank, 1);
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = 0; j < exponents[i].size(); ++j)
            for (std::size_t k = 0; k < exponents[i][j]; ++k) factors[j] *= primes[i];
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace

GroupDescription identify_group(const FiniteGroup& g, std::size_t bound) {
    if (g.order() > bound)
        throw PreconditionError("group of order " + std::to_string(g.order()) + " exceeds bound " +
                                std::to_string(bound));
    check_group(g);
    GroupDescription d;
    d.order = g.order();
    d.abelian = true;
    for (std::uint32_t a = 0; a < g.order(); ++a) {
        d.element_orders.push_back(g.element_order(a));
        for (std::uint32_t b = 0; b < g.order(); ++b)
            d.abelian = d.abelian && g.table[a][b] == g.table[b][a];
    }
    if (d.order == 1) {
        d.name = "e";
    } else if (d.abelian) {
        for (auto f : invariant_factors(g)) {
            if (!d.name.empty()) d.name += " x ";
            d.name += "Z/" + std::to_string(f);
        }
    } else {
        d.table = g.table;
    }
    return d;
}

GroupDescription identify_group(const DeckGroup& d, std::size_t bound) {
    return identify_group(d.group(), bound);
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
    std::set<std::uint32_t> members(s.elements.begin(), s.elements.end());
    if (!members.contains(0)) return false;
    for (auto a : members) {
        if (a >= g.order()) return false;
        if (!members.contains(g.inverse(a))) return false;
        for (auto b : members)
            if (!members.contains(g.table[a][b])) return false;
    }
    return true;
}

std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t bound) {
    if (g.order() > bound)
        throw PreconditionError("group of order " + std::to_string(g.order()) + " exceeds bound " +
                                std::to_string(bound));
    auto closure = [&](std::vector<std::uint32_t> gens) {
        std::vector<bool> in(g.order(), false);
        std::vector<std::uint32_t> members{0};
        in[0] = true;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (auto s : gens) {
                const auto x = g.table[members[head]][s];
                if (!in[x]) {
                    in[x] = true;
                    members.push_back(x);
                }
            }
        std::sort(members.begin(), members.end());
        return members;
    };
    std::set<std::vector<std::uint32_t>> seen{{0}};
    std::vector<std::vector<std::uint32_t>> queue{{0}};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto h = queue[head];
        for (std::uint32_t a = 0; a < g.order(); ++a) {
            if (std::binary_search(h.begin(), h.end(), a)) continue;
            auto gens = h;
            gens.push_back(a);
            auto next = closure(std::move(gens));
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    std::vector<Subgroup> out;
    for (const auto& s : seen) out.push_back({s});
    std::stable_sort(out.begin(), out.end(),
                     [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
    return out;
}

std::vector<Subgroup> subgroups(const DeckGroup& d, std::size_t bound) {
    return subgroups(d.group(), bound);
}

namespace {

// Relabels a finished class graph as <base vertex>_<k> and checks the projection.
QuotientCover finish_quotient(const Graph& base, const std::string& name,
                              const std::vector<Vertex>& proj,
                              const std::set<std::pair<Vertex, Vertex>>& edges, Vertex basepoint,
                              std::size_t expected_index) {
    std::vector<std::string> labels;
    std::map<Vertex, std::size_t> seen;
    for (auto p : proj) labels.push_back(base.label(p) + "_" + std::to_string(seen[p]++));
    auto graph = Graph::create(name, std::move(labels), {edges.begin(), edges.end()});
    Morphism projection(graph, base, proj);
    const auto report = check_cover(projection);
    if (!report.is_homotopy_cover) throw Error("quotient '" + name + "' is not a homotopy cover");
    const auto index = projection.fibre(basepoint).size();
    if (index != expected_index)
        throw Error("quotient '" + name + "' has fibre size " + std::to_string(index) + ", expected " +
                    std::to_string(expected_index));
    return {std::move(graph), std::move(projection), index};
}

}  // namespace

QuotientCover quotient(const DeckGroup& deck, const Subgroup& s) {
    if (!is_subgroup(deck.group(), s)) throw PreconditionError("quotient: not a subgroup of the deck group");
    const auto& u = deck.cover();
    std::vector<std::int64_t> orbit(u.class_count(), -1);
    std::vector<Vertex> proj;
    for (ClassId c = 0; c < u.class_count(); ++c) {
        if (orbit[c] >= 0) continue;
        const auto id = static_cast<std::int64_t>(proj.size());
        proj.push_back(u.projection(c));
        for (auto e : s.elements) orbit[deck.permutation(e)[c]] = id;
    }
    std::set<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : u.graph().edges()) {
        auto a = static_cast<Vertex>(orbit[e.first]);
        auto b = static_cast<Vertex>(orbit[e.second]);
        edges.emplace(std::min(a, b), std::max(a, b));
    }
    const auto index = deck.order() / s.order();
    return finish_quotient(u.base(), u.base().name() + "-cover-" + std::to_string(index), proj, edges,
                           u.basepoint(), index);
}

QuotientCover cyclic_quotient(const Graph& g, Vertex basepoint, const Walk& generator, std::size_t n,
                              std::size_t max_depth) {
    if (n == 0) throw PreconditionError("cyclic quotient needs n >= 1");
    if (!generator.base().same_as(g) || generator.front() != basepoint || generator.back() != basepoint)
        throw PreconditionError("cyclic quotient: generator must be a closed walk at the basepoint");
    auto loop = Walk::at(g, basepoint);
    for (std::size_t i = 0; i < n; ++i) loop = concat(loop, generator);
    loop = prune_normal_form(loop);

    const auto dist = bfs_distances(g, basepoint);
    std::size_t depth = static_cast<std::size_t>(*std::max_element(dist.begin(), dist.end())) + 2;
    for (; depth <= max_depth; depth += 2) {
        auto u = build_folded_quotient(g, basepoint, depth, {loop});
        if (!u.stabilized()) continue;
        std::set<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : u.graph().edges()) edges.emplace(e.first, e.second);
        std::vector<Vertex> proj(u.class_count());
        for (ClassId c = 0; c < u.class_count(); ++c) proj[c] = u.projection(c);
        return finish_quotient(g, g.name() + "-cover-" + std::to_string(n), proj, edges, basepoint, n);
    }
    throw Error("cyclic quotient of index " + std::to_string(n) + " did not close up by depth " +
                std::to_string(max_depth));
}

namespace {

std::size_t safe_fibre_size(const FoldedCover& u) {
    std::size_t count = 0;
    for (auto c : u.fibre(u.basepoint()))
        if (u.representative(c).size() - 1 <= u.safe_depth()) ++count;
    return count;
}

}  // namespace

std::optional<ShiftEvidence> detect_shift(const FoldedCover& u) {
    if (u.stabilized()) return std::nullopt;
    std::set<ClassId> safe;
    for (auto c : u.fibre(u.basepoint()))
        if (u.representative(c).size() - 1 <= u.safe_depth()) safe.insert(c);
    if (safe.size() < 3) return std::nullopt;

    for (auto candidate : safe) {
        if (candidate == u.root()) continue;
        const auto gamma = u.representative_walk(candidate);
        std::set<ClassId> reached{u.root()};
        std::size_t powers = 0;
        bool collision = false;
        for (const auto& step : {gamma, reverse(gamma)}) {
            auto current = Walk::at(u.base(), u.basepoint());
            while (!collision) {
                current = prune_normal_form(concat(current, step));
                if (current.length() > u.safe_depth()) break;
                const auto c = u.trace(current.seq());
                if (!c || !reached.insert(*c).second) collision = true;
                ++powers;
            }
        }
        if (collision || reached != safe) continue;
        ShiftEvidence evidence{gamma, safe.size(), powers, {}};
        for (std::size_t back = 4;; back -= 2) {
            if (u.depth() >= back) {
                const auto d = u.depth() - back;
                evidence.fibre_sizes.emplace_back(
                    d, safe_fibre_size(build_folded_cover(u.base(), u.basepoint(), d)));
            }
            if (back == 2) break;
        }
        evidence.fibre_sizes.emplace_back(u.depth(), safe.size());
        return evidence;
    }
    return std::nullopt;
}

namespace {

// Smallest depth <= max_depth at which the cover stabilizes, else the cover at max_depth.
FoldedCover grow_until_stable(const Graph& g, Vertex basepoint, std::size_t max_depth) {
    for (std::size_t d = 0; d < max_depth; ++d) {
        auto u = build_folded_cover(g, basepoint, d);
        if (u.stabilized()) return u;
    }
    return build_folded_cover(g, basepoint, max_depth);
}

}  // namespace

FundamentalGroupReport fundamental_group(const Graph& g, Vertex basepoint, std::size_t max_depth,
                                         std::size_t order_bound) {
    auto u = grow_until_stable(g, basepoint, max_depth);
    FundamentalGroupReport report;
    report.depth = u.depth();
    report.stabilized = u.stabilized();
    report.class_count = u.class_count();
    if (u.stabilized())
        report.group = identify_group(DeckGroup(std::move(u)), order_bound);
    else
        report.shift = detect_shift(u);
    return report;
}

CoverEnumeration enumerate_covers(const Graph& g, Vertex basepoint, std::size_t depth,
                                  std::size_t max_index) {
    CoverEnumeration out;
    auto u = grow_until_stable(g, basepoint, depth);
    out.depth = u.depth();
    out.stabilized = u.stabilized();
    std::map<std::size_t, std::size_t> per_index;
    auto name_for = [&](std::size_t index) {
        const auto k = per_index[index]++;
        auto name = g.name() + "-cover-" + std::to_string(index);
        return k == 0 ? name : name + "-" + std::to_string(k);
    };

    if (out.stabilized) {
        DeckGroup deck(std::move(u));
        for (const auto& s : subgroups(deck)) {
            const auto index = deck.order() / s.order();
            if (max_index != 0 && index > max_index) continue;
            auto q = quotient(deck, s);
            std::string label = "{";
            for (std::size_t i = 0; i < s.elements.size(); ++i)
                label += (i ? "," : "") + std::to_string(s.elements[i]);
            out.covers.push_back({q.graph, q.projection, q.index, label + "}"});
        }
        std::stable_sort(out.covers.begin(), out.covers.end(),
                         [](const auto& a, const auto& b) { return a.index < b.index; });
        for (auto& c : out.covers) c.graph = c.graph.renamed(name_for(c.index));
        // Rebind projections to the renamed graphs.
        for (auto& c : out.covers) c.projection = Morphism(c.graph, g, c.projection.map());
        return out;
    }

    out.shift = detect_shift(u);
    if (!out.shift) {
        out.note = "not stabilized at depth " + std::to_string(out.depth) + "; no shift generator found";
        return out;
    }
    if (max_index == 0) {
        out.note = "infinite fundamental group: a finite max index is required";
        return out;
    }
    for (std::size_t n = 1; n <= max_index; ++n) {
        auto q = cyclic_quotient(g, basepoint, out.shift->generator, n);
        out.covers.push_back({q.graph.renamed(name_for(n)), q.projection, n, "<g^" + std::to_string(n) + ">"});
        out.covers.back().projection = Morphism(out.covers.back().graph, g, q.projection.map());
    }
    return out;
}

}  // namespace homcover
