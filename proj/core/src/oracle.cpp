// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hyperswitch/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hsw {
namespace {

// ---------------------------------------------------------------------------
// enumerate_regular

struct RegularSearch {
    std::int64_t n, d, k;
    std::int64_t budget;
    std::int64_t nodes = 0;
    std::vector<std::int64_t> deg;
    std::vector<std::vector<std::uint32_t>> edges;  // current partial graph
    EnumerationResult out;

    void run() {
        deg.assign(static_cast<std::size_t>(n), 0);
        // Reserved up front: recursion keeps pointers into this vector.
        edges.reserve(static_cast<std::size_t>(n * d / k));
        extend();
    }

    // Smallest vertex still below degree d, or -1 when the graph is complete.
    std::int64_t lowest_deficient() const {
        for (std::int64_t v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] < d) return v;
        return -1;
    }

    void extend() {
        std::int64_t v = lowest_deficient();
        if (v < 0) {
            SimpleGraph g;
            g.n = n;
            g.k = k;
            g.edges = edges;
            g.canonicalize();
            out.instances.push_back(std::move(g));
            return;
        }
        // Every new edge must contain v. Vertices below v are saturated, so
        // the edge is {v} plus k-1 partners drawn from (v, n) with residual
        // capacity. Consecutive edges for the same v are forced to increase
        // lexicographically, which makes each graph appear exactly once.
        std::vector<std::uint32_t> edge(static_cast<std::size_t>(k));
        edge[0] = static_cast<std::uint32_t>(v);
        const std::vector<std::uint32_t>* floor_edge = nullptr;
        if (!edges.empty() && edges.back()[0] == static_cast<std::uint32_t>(v))
            floor_edge = &edges.back();
        choose_partner(edge, 1, static_cast<std::uint32_t>(v) + 1, floor_edge, floor_edge != nullptr);
    }

    // Picks edge[idx..k) as increasing vertices with residual capacity,
    // staying lexicographically above *floor_edge while `tight` holds.
    void choose_partner(std::vector<std::uint32_t>& edge, std::int64_t idx, std::uint32_t lo,
                        const std::vector<std::uint32_t>* floor_edge, bool tight) {
        if (idx == k) {
            if (tight) return;  // equal to the previous edge for this vertex
            if (++nodes > budget) throw OracleBudgetError("regular graph enumeration budget exceeded");
            for (std::int64_t i = 0; i < k; ++i) ++deg[edge[static_cast<std::size_t>(i)]];
            edges.push_back(edge);
            extend();
            edges.pop_back();
            for (std::int64_t i = 0; i < k; ++i) --deg[edge[static_cast<std::size_t>(i)]];
            return;
        }
        std::uint32_t start = lo;
        if (tight && floor_edge) start = std::max(start, (*floor_edge)[static_cast<std::size_t>(idx)]);
        for (std::uint32_t u = start; u < static_cast<std::uint32_t>(n); ++u) {
            if (deg[u] >= d) continue;
            bool still_tight = tight && floor_edge && u == (*floor_edge)[static_cast<std::size_t>(idx)];
            if (tight && floor_edge && u < (*floor_edge)[static_cast<std::size_t>(idx)]) continue;
            edge[static_cast<std::size_t>(idx)] = u;
            choose_partner(edge, idx + 1, u + 1, floor_edge, still_tight);
        }
    }
};

// ---------------------------------------------------------------------------
// loose Hamilton search

struct HamiltonSearch {
    const SimpleGraph& h;
    std::int64_t n, k, l;
    std::int64_t budget;
    std::int64_t nodes = 0;
    std::vector<std::vector<std::int64_t>> incident;  // vertex -> edge indices
    std::vector<bool> edge_used;
    std::vector<bool> vertex_used;
    std::vector<std::int64_t> path;  // chosen edge indices
    std::uint32_t home_joint = 0;    // joint shared by the last and first edge

    explicit HamiltonSearch(const SimpleGraph& graph, std::int64_t node_budget)
        : h(graph), n(graph.n), k(graph.k), budget(node_budget) {
        l = n / (k - 1);
        incident.resize(static_cast<std::size_t>(n));
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            for (std::uint32_t v : h.edges[e]) incident[v].push_back(static_cast<std::int64_t>(e));
        edge_used.assign(h.edges.size(), false);
        vertex_used.assign(static_cast<std::size_t>(n), false);
    }

    std::optional<std::vector<std::int64_t>> run() {
        // Vertex 0 lies on some cycle edge; rotating the cycle makes that
        // edge first, so only edges through 0 need to seed the search.
        for (std::int64_t e : incident[0]) {
            const auto& edge = h.edges[static_cast<std::size_t>(e)];
            edge_used[static_cast<std::size_t>(e)] = true;
            for (std::uint32_t vtx : edge) vertex_used[vtx] = true;
            path.push_back(e);
            // Ordered choice of (entry joint, exit joint) within the edge.
            for (std::uint32_t a : edge)
                for (std::uint32_t b : edge) {
                    if (a == b) continue;
                    home_joint = a;
                    if (extend(b)) return path;
                }
            path.pop_back();
            edge_used[static_cast<std::size_t>(e)] = false;
            for (std::uint32_t vtx : edge) vertex_used[vtx] = false;
        }
        return std::nullopt;
    }

    bool extend(std::uint32_t joint) {
        if (++nodes > budget) throw OracleBudgetError("loose cycle search budget exceeded");
        if (static_cast<std::int64_t>(path.size()) == l) {
            if (joint != home_joint) return false;
            std::int64_t covered = 0;
            for (bool used : vertex_used) covered += used;
            return covered == n;
        }
        bool last = static_cast<std::int64_t>(path.size()) == l - 1;
        for (std::int64_t e : incident[joint]) {
            if (edge_used[static_cast<std::size_t>(e)]) continue;
            const auto& edge = h.edges[static_cast<std::size_t>(e)];
            // The new edge meets everything covered so far in exactly the
            // joint; the final edge additionally reuses the home joint.
            bool ok = true;
            for (std::uint32_t vtx : edge)
                if (vtx != joint && vertex_used[vtx] && !(last && vtx == home_joint)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (last) {
                bool has_home = false;
                for (std::uint32_t vtx : edge) has_home |= vtx == home_joint;
                if (!has_home) continue;
            }
            edge_used[static_cast<std::size_t>(e)] = true;
            for (std::uint32_t vtx : edge) vertex_used[vtx] = true;
            path.push_back(e);
            for (std::uint32_t next : edge) {
                if (next == joint) continue;
                if (last && next != home_joint) continue;
                if (extend(next)) return true;
            }
            path.pop_back();
            edge_used[static_cast<std::size_t>(e)] = false;
            for (std::uint32_t vtx : edge)
                if (vtx != joint && !(last && vtx == home_joint)) vertex_used[vtx] = false;
            // The entry joint and (on the last edge) home joint stay used.
            vertex_used[joint] = true;
            if (last) vertex_used[home_joint] = true;
        }
        return false;
    }
};

}  // namespace

EnumerationResult enumerate_regular(std::int64_t n, std::int64_t d, std::int64_t k,
                                    std::int64_t node_budget) {
    // Same validity requirements as derive_params.
    derive_params(n, d, k);
    RegularSearch search{n, d, k, node_budget};
    search.run();
    std::sort(search.out.instances.begin(), search.out.instances.end(),
              [](const SimpleGraph& a, const SimpleGraph& b) { return a.edges < b.edges; });
    for (std::size_t i = 1; i < search.out.instances.size(); ++i)
        assert(!(search.out.instances[i - 1] == search.out.instances[i]));
    return std::move(search.out);
}

BigInt sequence_space_size(const Params& p) {
    BigInt size = 1;
    for (std::int64_t i = 2; i <= p.seq_len(); ++i) size *= i;
    BigInt dfact = 1;
    for (std::int64_t i = 2; i <= p.d; ++i) dfact *= i;
    for (std::int64_t i = 0; i < p.n; ++i) size /= dfact;
    return size;
}

void for_each_sequence(const Params& p, const std::function<void(const Sequence&)>& visit,
                       std::int64_t size_budget) {
    if (sequence_space_size(p) > size_budget)
        throw OracleBudgetError("sequence space exceeds enumeration budget");
    Sequence seq;
    seq.params = p;
    seq.entries.reserve(static_cast<std::size_t>(p.seq_len()));
    for (std::int64_t v = 0; v < p.n; ++v)
        for (std::int64_t j = 0; j < p.d; ++j)
            seq.entries.push_back(static_cast<std::uint32_t>(v));
    do {
        visit(seq);
    } while (std::next_permutation(seq.entries.begin(), seq.entries.end()));
}

BigInt unfiltered_preimage_count(const Params& p) {
    BigInt mfact = 1;
    for (std::int64_t i = 2; i <= p.M; ++i) mfact *= i;
    BigInt kfact = 1;
    for (std::int64_t i = 2; i <= p.k; ++i) kfact *= i;
    BigInt result = mfact;
    for (std::int64_t i = 0; i < p.M; ++i) result *= kfact;
    return result;
}

PreimageCount count_preimages(const SimpleGraph& h, const Params& p, std::int64_t budget) {
    if (h.k != p.k || h.n != p.n || static_cast<std::int64_t>(h.edges.size()) != p.M)
        throw std::invalid_argument("graph shape does not match params");
    if (unfiltered_preimage_count(p) > budget)
        throw OracleBudgetError("preimage enumeration budget exceeded");

    Rational ephi = expected_phi(p);
    PreimageCount result{0, 0};

    std::vector<std::int64_t> order(static_cast<std::size_t>(p.M));
    std::iota(order.begin(), order.end(), 0);
    Sequence seq;
    seq.params = p;
    seq.entries.resize(static_cast<std::size_t>(p.seq_len()));

    // For each edge order, run an odometer over the k! arrangements of every
    // edge. Edges of a simple graph are distinct sets of distinct vertices,
    // so each generated sequence occurs exactly once.
    do {
        std::vector<std::vector<std::uint32_t>> arranged(static_cast<std::size_t>(p.M));
        for (std::int64_t i = 0; i < p.M; ++i)
            arranged[static_cast<std::size_t>(i)] =
                h.edges[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        for (;;) {
            std::uint32_t* out = seq.entries.data();
            for (const auto& e : arranged) {
                std::copy(e.begin(), e.end(), out);
                out += p.k;
            }
            result.total += 1;
            Membership mem = membership(seq, ephi);
            if (mem.in_tilde_S) result.in_band += 1;

            // Advance: next_permutation on the last edge, carrying left.
            std::int64_t pos = p.M - 1;
            while (pos >= 0 &&
                   !std::next_permutation(arranged[static_cast<std::size_t>(pos)].begin(),
                                          arranged[static_cast<std::size_t>(pos)].end()))
                --pos;
            if (pos < 0) break;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return result;
}

std::optional<std::vector<std::int64_t>> find_loose_hamilton(const SimpleGraph& h,
                                                             std::int64_t node_budget) {
    if (h.k < 2 || h.n <= 0) return std::nullopt;
    if (h.n % (h.k - 1) != 0) return std::nullopt;
    if (h.n / (h.k - 1) < 3) return std::nullopt;
    if (h.edges.empty()) return std::nullopt;
    HamiltonSearch search(h, node_budget);
    return search.run();
}

bool validate_loose_hamilton(const SimpleGraph& h, const std::vector<std::int64_t>& order) {
    std::int64_t l = static_cast<std::int64_t>(order.size());
    if (l < 3) return false;
    if (h.k < 2 || h.n != l * (h.k - 1)) return false;
    std::vector<bool> used_edge(h.edges.size(), false);
    for (std::int64_t e : order) {
        if (e < 0 || e >= static_cast<std::int64_t>(h.edges.size())) return false;
        if (used_edge[static_cast<std::size_t>(e)]) return false;
        used_edge[static_cast<std::size_t>(e)] = true;
    }
    auto as_set = [&](std::int64_t i) {
        auto e = h.edges[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        std::sort(e.begin(), e.end());
        return e;
    };
    std::vector<std::int64_t> coverage(static_cast<std::size_t>(h.n), 0);
    for (std::int64_t i = 0; i < l; ++i) {
        auto a = as_set(i);
        for (std::uint32_t v : a) ++coverage[v];
        for (std::int64_t j = i + 1; j < l; ++j) {
            auto b = as_set(j);
            std::vector<std::uint32_t> meet;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(meet));
            bool consecutive = (j == i + 1) || (i == 0 && j == l - 1);
            if (consecutive ? meet.size() != 1 : !meet.empty()) return false;
        }
    }
    // Joints appear in two edges, interior vertices in one, nothing in zero.
    for (std::int64_t v = 0; v < h.n; ++v)
        if (coverage[static_cast<std::size_t>(v)] < 1 || coverage[static_cast<std::size_t>(v)] > 2)
            return false;
    return true;
}

}  // namespace hsw
