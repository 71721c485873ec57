#include "homcover/walk.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "homcover/error.hpp"

namespace homcover {

Walk::Walk(Graph base, std::vector<Vertex> seq) : base_(std::move(base)), seq_(std::move(seq)) {
    if (seq_.empty()) throw Error("a walk needs at least one vertex");
    for (auto v : seq_)
        if (v >= base_.order()) throw Error("walk vertex out of range");
    for (std::size_t i = 0; i + 1 < seq_.size(); ++i)
        if (!base_.adjacent(seq_[i], seq_[i + 1]))
            throw Error("not a walk: " + base_.label(seq_[i]) + " and " +
                        base_.label(seq_[i + 1]) + " are not adjacent");
}

Walk::Walk(Graph base, std::vector<Vertex> seq, Unchecked)
    : base_(std::move(base)), seq_(std::move(seq)) {}

Walk Walk::at(Graph base, Vertex v) { return Walk(std::move(base), std::vector<Vertex>{v}); }

Walk Walk::parse(Graph base, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Vertex> seq;
    std::string token;
    while (in >> token) seq.push_back(base.vertex(token));
    if (seq.empty()) throw ParseError("empty walk");
    return Walk(std::move(base), std::move(seq));
}

std::string Walk::str() const {
    std::string out;
    for (std::size_t i = 0; i < seq_.size(); ++i) {
        if (i) out += ' ';
        out += base_.label(seq_[i]);
    }
    return out;
}

std::vector<Walk> n2_walks(const Graph& g, Vertex v) {
    std::vector<Walk> out;
    for (auto x : g.neighbors(v))
        for (auto y : g.neighbors(x)) out.emplace_back(g, std::vector<Vertex>{v, x, y});
    return out;
}

Walk concat(const Walk& a, const Walk& b) {
    if (!a.base().same_as(b.base())) throw PreconditionError("concat: walks live in different graphs");
    if (a.back() != b.front())
        throw PreconditionError("concat: walk ends at " + a.base().label(a.back()) +
                                " but next walk starts at " + b.base().label(b.front()));
    auto seq = a.seq();
    seq.insert(seq.end(), b.seq().begin() + 1, b.seq().end());
    return Walk(a.base(), std::move(seq), Walk::Unchecked{});
}

Walk reverse(const Walk& a) {
    std::vector<Vertex> seq(a.seq().rbegin(), a.seq().rend());
    return Walk(a.base(), std::move(seq), Walk::Unchecked{});
}

bool is_prunable_at(const std::vector<Vertex>& seq, std::size_t i) {
    return i + 2 < seq.size() && seq[i] == seq[i + 2];
}

Walk prune_once(const Walk& a, std::size_t i) {
    if (!is_prunable_at(a.seq(), i))
        throw PreconditionError("walk '" + a.str() + "' is not prunable at " + std::to_string(i));
    auto seq = a.seq();
    seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(i),
              seq.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    return Walk(a.base(), std::move(seq), Walk::Unchecked{});
}

std::vector<Vertex> prune_normal_form(std::vector<Vertex> seq) {
    // Stack reduction: pushing v onto (.. u x) with u == v cancels the pair.
    // Pruning is confluent, so this agrees with repeated leftmost pruning.
    std::vector<Vertex> out;
    out.reserve(seq.size());
    for (auto v : seq) {
        if (out.size() >= 2 && out[out.size() - 2] == v)
            out.pop_back();
        else
            out.push_back(v);
    }
    return out;
}

Walk prune_normal_form(const Walk& a) {
    return Walk(a.base(), prune_normal_form(a.seq()), Walk::Unchecked{});
}

std::vector<WalkSpiderMove> spider_moves_of(const Walk& a) {
    const auto& g = a.base();
    const auto& s = a.seq();
    std::vector<WalkSpiderMove> moves;
    for (std::size_t i = 1; i + 1 < s.size(); ++i)
        for (auto r : g.neighbors(s[i - 1]))
            if (r != s[i] && g.adjacent(r, s[i + 1])) moves.push_back({i, r});
    return moves;
}

Walk apply(const Walk& a, const WalkSpiderMove& move) {
    const auto& s = a.seq();
    if (move.position == 0 || move.position + 1 >= s.size())
        throw PreconditionError("spider move must act on an interior position");
    auto seq = s;
    seq[move.position] = move.replacement;
    return Walk(a.base(), std::move(seq));
}

namespace {

struct SeqHash {
    std::size_t operator()(const std::vector<Vertex>& s) const noexcept {
        std::size_t h = s.size();
        for (auto v : s) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Every walk one rewriting step away from `s` within the length bound.
template <typename Visit>
void for_each_rewrite(const Graph& g, const std::vector<Vertex>& s, std::size_t max_len,
                      Visit&& visit) {
    std::vector<Vertex> next;
    for (std::size_t i = 1; i + 1 < s.size(); ++i)
        for (auto r : g.neighbors(s[i - 1]))
            if (r != s[i] && g.adjacent(r, s[i + 1])) {
                next = s;
                next[i] = r;
                visit(next);
            }
    for (std::size_t i = 0; i + 2 < s.size(); ++i)
        if (s[i] == s[i + 2]) {
            next = s;
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(i),
                       next.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            visit(next);
        }
    if (s.size() - 1 + 2 <= max_len) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (auto w : g.neighbors(s[i])) {
                next = s;
                next.insert(next.begin() + static_cast<std::ptrdiff_t>(i) + 1, {w, s[i]});
                visit(next);
            }
    }
}

}  // namespace

OracleResult oracle_homotopic_rel_endpoints(const Walk& a, const Walk& b, OracleBounds bounds) {
    if (!a.base().same_as(b.base())) throw PreconditionError("oracle: walks live in different graphs");
    if (a.front() != b.front() || a.back() != b.back())
        throw PreconditionError("oracle: walks '" + a.str() + "' and '" + b.str() +
                                "' do not share endpoints");
    const auto max_len = bounds.max_len ? bounds.max_len : a.length() + b.length() + 4;
    const auto& g = a.base();
    const auto target = b.seq();

    std::unordered_set<std::vector<Vertex>, SeqHash> seen;
    std::deque<std::vector<Vertex>> queue;
    seen.insert(a.seq());
    queue.push_back(a.seq());
    if (a.seq() == target) return {OracleVerdict::Yes, 1, max_len};
    bool found = false;
    while (!queue.empty() && !found && seen.size() < bounds.max_states) {
        auto current = std::move(queue.front());
        queue.pop_front();
        for_each_rewrite(g, current, max_len, [&](const std::vector<Vertex>& next) {
            if (found || seen.size() >= bounds.max_states) return;
            if (!seen.insert(next).second) return;
            if (next == target) {
                found = true;
                return;
            }
            queue.push_back(next);
        });
    }
    return {found ? OracleVerdict::Yes : OracleVerdict::NoWithinBounds, seen.size(), max_len};
}

WalkEquivalenceTable::WalkEquivalenceTable(const Graph& g, Vertex base_vertex, std::size_t max_len)
    : graph_(g), base_vertex_(base_vertex), max_len_(max_len) {
    if (base_vertex >= g.order()) throw Error("walk table: basepoint out of range");
    bits_ = std::max(1u, static_cast<unsigned>(std::bit_width(g.order() - 1)));
    if (max_len > 31 || bits_ * max_len + 5 > 64)
        throw PreconditionError("walk table: max_len too large to encode");

    // Enumerate every walk from the basepoint up to max_len.
    std::vector<Vertex> seq{base_vertex};
    std::function<void()> grow = [&] {
        index_.emplace(encode(seq), static_cast<std::uint32_t>(index_.size()));
        if (seq.size() - 1 == max_len) return;
        for (auto w : g.neighbors(seq.back())) {
            seq.push_back(w);
            grow();
            seq.pop_back();
        }
    };
    grow();
    parent_.resize(index_.size());
    for (std::uint32_t i = 0; i < parent_.size(); ++i) parent_[i] = i;

    // Connect each walk to its spider and prune neighbours; unprunes are the
    // reverse of prunes and so are covered by the symmetric union.
    std::function<void()> link = [&] {
        const auto self = index_.at(encode(seq));
        for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
            const auto old = seq[i];
            for (auto r : g.neighbors(seq[i - 1]))
                if (r != old && g.adjacent(r, seq[i + 1])) {
                    seq[i] = r;
                    unite(self, index_.at(encode(seq)));
                }
            seq[i] = old;
        }
        for (std::size_t i = 0; i + 2 < seq.size(); ++i)
            if (seq[i] == seq[i + 2]) {
                auto pruned = seq;
                pruned.erase(pruned.begin() + static_cast<std::ptrdiff_t>(i),
                             pruned.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                unite(self, index_.at(encode(pruned)));
            }
        if (seq.size() - 1 == max_len) return;
        for (auto w : g.neighbors(seq.back())) {
            seq.push_back(w);
            link();
            seq.pop_back();
        }
    };
    seq = {base_vertex};
    link();
}

std::uint64_t WalkEquivalenceTable::encode(const std::vector<Vertex>& seq) const {
    std::uint64_t code = seq.size() - 1;
    unsigned shift = 5;
    for (std::size_t i = 1; i < seq.size(); ++i, shift += bits_)
        code |= static_cast<std::uint64_t>(seq[i]) << shift;
    return code;
}

std::uint32_t WalkEquivalenceTable::find(std::uint32_t i) const {
    while (parent_[i] != i) {
        parent_[i] = parent_[parent_[i]];
        i = parent_[i];
    }
    return i;
}

void WalkEquivalenceTable::unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
}

std::size_t WalkEquivalenceTable::component_count() const {
    std::size_t count = 0;
    for (std::uint32_t i = 0; i < parent_.size(); ++i)
        if (find(i) == i) ++count;
    return count;
}

std::optional<std::size_t> WalkEquivalenceTable::component(const Walk& w) const {
    if (!w.base().same_as(graph_) || w.front() != base_vertex_ || w.length() > max_len_)
        return std::nullopt;
    auto it = index_.find(encode(w.seq()));
    if (it == index_.end()) return std::nullopt;
    return find(it->second);
}

bool WalkEquivalenceTable::equivalent(const Walk& a, const Walk& b) const {
    auto ca = component(a);
    auto cb = component(b);
    return ca && cb && *ca == *cb;
}

}  // namespace homcover
