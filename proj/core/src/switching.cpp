// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hyperswitch/switching.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstring>

namespace hsw {
namespace {

constexpr int kMaxK = 64;

// Sorts buf[0..k) in place; true when all entries are distinct.
bool sort_distinct(std::uint32_t* buf, int k) {
    for (int i = 1; i < k; ++i) {
        std::uint32_t x = buf[i];
        int j = i;
        while (j > 0 && buf[j - 1] > x) {
            buf[j] = buf[j - 1];
            --j;
        }
        buf[j] = x;
    }
    for (int i = 1; i < k; ++i)
        if (buf[i - 1] == buf[i]) return false;
    return true;
}

void sort_small(std::uint32_t* buf, int k) {
    for (int i = 1; i < k; ++i) {
        std::uint32_t x = buf[i];
        int j = i;
        while (j > 0 && buf[j - 1] > x) {
            buf[j] = buf[j - 1];
            --j;
        }
        buf[j] = x;
    }
}

// Multiset keys for edges. Up to k = 4 an edge packs into one 128-bit word
// (32 bits per sorted entry), which keeps the admissibility inner loops free
// of allocation; larger k falls back to vector keys.
struct PackedKeyPolicy {
    using Key = unsigned __int128;
    static Key pack_sorted(const std::uint32_t* buf, int k) {
        Key key = 0;
        for (int i = 0; i < k; ++i) key = (key << 32) | buf[i];
        return key;
    }
};

struct VectorKeyPolicy {
    using Key = std::vector<std::uint32_t>;
    static Key pack_sorted(const std::uint32_t* buf, int k) { return Key(buf, buf + k); }
};

// The switching moves are only defined between levels of the loop-graded
// space: no duplicate edges, every loop simple and green, loop count within
// budget. Anything else hosts no admissible move.
bool in_switch_domain(const Sequence& seq, const EdgeClassification& cls) {
    if (cls.has_duplicates()) return false;
    if (!cls.red_loop_indices.empty()) return false;
    if (!seq.params.loops_within_limit(cls.lambda)) return false;
    for (EdgeKind kind : cls.kinds)
        if (is_loop(kind) && kind != EdgeKind::simple_loop) return false;
    return true;
}

// Locates the doubled vertex of a simple loop and its two positions.
struct LoopShape {
    std::uint32_t v = 0;
    int lpos = -1;
    int rpos = -1;
};

bool loop_shape(std::span<const std::uint32_t> e, LoopShape* out) {
    int k = static_cast<int>(e.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (e[i] == e[j]) {
                if (out->lpos >= 0) return false;  // second repeat: not simple
                out->v = e[i];
                out->lpos = i;
                out->rpos = j;
            }
    return out->lpos >= 0;
}

template <class Policy>
class Engine {
  public:
    using Key = typename Policy::Key;

    Engine(const Sequence& seq, const EdgeClassification& cls)
        : seq_(seq),
          k_(static_cast<int>(seq.params.k)),
          M_(seq.params.M),
          greens_(cls.green_proper_indices) {
        edge_key_.reserve(static_cast<std::size_t>(M_));
        std::uint32_t buf[kMaxK];
        for (std::int64_t i = 0; i < M_; ++i) {
            auto e = seq_.edge(i);
            std::copy(e.begin(), e.end(), buf);
            sort_small(buf, k_);
            edge_key_.push_back(Policy::pack_sorted(buf, k_));
        }
        sorted_keys_ = edge_key_;
        std::sort(sorted_keys_.begin(), sorted_keys_.end());
        for (std::int64_t i = seq.params.red_edges; i < M_; ++i)
            if (cls.kinds[static_cast<std::size_t>(i)] == EdgeKind::simple_loop) loops_.push_back(i);
        lambda_ = cls.lambda;
    }

    bool contains(const Key& key) const {
        return std::binary_search(sorted_keys_.begin(), sorted_keys_.end(), key);
    }

    // True when `key` names an edge other than the three being rewritten.
    bool clashes(const Key& key, std::int64_t a, std::int64_t b, std::int64_t c) const {
        return contains(key) && key != edge_key_[static_cast<std::size_t>(a)] &&
               key != edge_key_[static_cast<std::size_t>(b)] &&
               key != edge_key_[static_cast<std::size_t>(c)];
    }

    bool forward_ok(std::int64_t f, const LoopShape& ls, std::int64_t e1, std::int64_t e2,
                    int y_pos, int z_pos) const {
        const std::uint32_t* base = seq_.entries.data();
        const std::uint32_t* E1 = base + e1 * k_;
        const std::uint32_t* E2 = base + e2 * k_;
        const std::uint32_t* F = base + f * k_;
        std::uint32_t ystar = E1[y_pos];
        std::uint32_t zstar = E2[z_pos];

        std::uint32_t b1[kMaxK], b2[kMaxK], b3[kMaxK];
        std::memcpy(b1, E1, sizeof(std::uint32_t) * static_cast<std::size_t>(k_));
        b1[y_pos] = ls.v;
        if (!sort_distinct(b1, k_)) return false;
        std::memcpy(b2, E2, sizeof(std::uint32_t) * static_cast<std::size_t>(k_));
        b2[z_pos] = ls.v;
        if (!sort_distinct(b2, k_)) return false;
        std::memcpy(b3, F, sizeof(std::uint32_t) * static_cast<std::size_t>(k_));
        b3[ls.lpos] = ystar;
        b3[ls.rpos] = zstar;
        if (!sort_distinct(b3, k_)) return false;

        Key k1 = Policy::pack_sorted(b1, k_);
        Key k2 = Policy::pack_sorted(b2, k_);
        Key k3 = Policy::pack_sorted(b3, k_);
        if (k1 == k2 || k1 == k3 || k2 == k3) return false;
        if (clashes(k1, f, e1, e2)) return false;
        if (clashes(k2, f, e1, e2)) return false;
        if (clashes(k3, f, e1, e2)) return false;
        return true;
    }

    bool backward_ok(std::uint32_t v, std::int64_t e1, std::int64_t e2, std::int64_t e3,
                     int p_y, int p_z) const {
        if (!seq_.params.loops_within_limit(lambda_ + 1)) return false;
        const std::uint32_t* base = seq_.entries.data();
        const std::uint32_t* E1 = base + e1 * k_;
        const std::uint32_t* E2 = base + e2 * k_;
        const std::uint32_t* E3 = base + e3 * k_;
        int pos1 = find_pos(E1, v);
        int pos2 = find_pos(E2, v);
        if (pos1 < 0 || pos2 < 0) return false;
        // The rewritten e3 must carry v exactly twice.
        for (int i = 0; i < k_; ++i)
            if (i != p_y && i != p_z && E3[i] == v) return false;
        std::uint32_t ybar = E3[p_y];
        std::uint32_t zbar = E3[p_z];

        std::uint32_t b1[kMaxK], b2[kMaxK], b3[kMaxK];
        std::memcpy(b1, E1, sizeof(std::uint32_t) * static_cast<std::size_t>(k_));
        b1[pos1] = ybar;
        if (!sort_distinct(b1, k_)) return false;
        std::memcpy(b2, E2, sizeof(std::uint32_t) * static_cast<std::size_t>(k_));
        b2[pos2] = zbar;
        if (!sort_distinct(b2, k_)) return false;
        std::memcpy(b3, E3, sizeof(std::uint32_t) * static_cast<std::size_t>(k_));
        b3[p_y] = v;
        b3[p_z] = v;
        sort_small(b3, k_);

        Key k1 = Policy::pack_sorted(b1, k_);
        Key k2 = Policy::pack_sorted(b2, k_);
        Key k3 = Policy::pack_sorted(b3, k_);
        if (k1 == k2 || k1 == k3 || k2 == k3) return false;
        if (clashes(k1, e1, e2, e3)) return false;
        if (clashes(k2, e1, e2, e3)) return false;
        if (clashes(k3, e1, e2, e3)) return false;
        return true;
    }

    std::int64_t count_forward() const {
        std::int64_t total = 0;
        std::size_t g = greens_.size();
        for (std::int64_t f : loops_) {
            LoopShape ls;
            bool ok = loop_shape(seq_.edge(f), &ls);
            assert(ok);
            (void)ok;
            for (std::size_t a = 0; a < g; ++a)
                for (std::size_t b = 0; b < g; ++b) {
                    if (a == b) continue;
                    std::int64_t e1 = greens_[a], e2 = greens_[b];
                    for (int y = 0; y < k_; ++y)
                        for (int z = 0; z < k_; ++z)
                            if (forward_ok(f, ls, e1, e2, y, z)) ++total;
                }
        }
        return total;
    }

    std::int64_t count_backward_ordered() const {
        // Green proper edges incident to each vertex.
        std::vector<std::vector<std::int64_t>> inc(static_cast<std::size_t>(seq_.params.n));
        for (std::int64_t e : greens_)
            for (std::uint32_t v : seq_.edge(e)) inc[v].push_back(e);

        std::int64_t total = 0;
        for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(seq_.params.n); ++v) {
            const auto& around = inc[v];
            if (around.size() < 2) continue;
            for (std::int64_t e1 : around)
                for (std::int64_t e2 : around) {
                    if (e1 == e2) continue;
                    for (std::int64_t e3 : greens_) {
                        if (e3 == e1 || e3 == e2) continue;
                        for (int py = 0; py < k_; ++py)
                            for (int pz = 0; pz < k_; ++pz) {
                                if (py == pz) continue;
                                if (backward_ok(v, e1, e2, e3, py, pz)) ++total;
                            }
                    }
                }
        }
        return total;
    }

    bool is_green_proper(std::int64_t e) const {
        return std::find(greens_.begin(), greens_.end(), e) != greens_.end();
    }

    const std::vector<std::int64_t>& loops() const { return loops_; }
    const std::vector<std::int64_t>& greens() const { return greens_; }

  private:
    int find_pos(const std::uint32_t* e, std::uint32_t v) const {
        int pos = -1;
        for (int i = 0; i < k_; ++i)
            if (e[i] == v) {
                if (pos >= 0) return -2;  // v repeated: e was not proper
                pos = i;
            }
        return pos;
    }

    const Sequence& seq_;
    int k_;
    std::int64_t M_;
    std::vector<std::int64_t> greens_;
    std::vector<std::int64_t> loops_;
    std::vector<Key> edge_key_;
    std::vector<Key> sorted_keys_;
    std::int64_t lambda_ = 0;
};

template <class Fn>
auto with_engine(const Sequence& seq, const EdgeClassification& cls, Fn&& fn) {
    if (seq.params.k <= 4) return fn(Engine<PackedKeyPolicy>(seq, cls));
    return fn(Engine<VectorKeyPolicy>(seq, cls));
}

bool valid_positions(const Params& p, const Switching& sw) {
    return sw.y_pos >= 0 && sw.y_pos < p.k && sw.z_pos >= 0 && sw.z_pos < p.k &&
           sw.loop_edge >= 0 && sw.loop_edge < p.M && sw.e1 >= 0 && sw.e1 < p.M &&
           sw.e2 >= 0 && sw.e2 < p.M;
}

}  // namespace

bool is_admissible_forward(const Sequence& seq, const Switching& sw) {
    const Params& p = seq.params;
    if (!valid_positions(p, sw)) return false;
    if (sw.e1 == sw.e2 || sw.e1 == sw.loop_edge || sw.e2 == sw.loop_edge) return false;
    EdgeClassification cls = classify_edges(seq);
    if (!in_switch_domain(seq, cls)) return false;
    if (sw.loop_edge < p.red_edges ||
        cls.kinds[static_cast<std::size_t>(sw.loop_edge)] != EdgeKind::simple_loop)
        return false;
    auto green = [&](std::int64_t e) {
        return e >= p.red_edges && cls.kinds[static_cast<std::size_t>(e)] == EdgeKind::proper;
    };
    if (!green(sw.e1) || !green(sw.e2)) return false;
    LoopShape ls;
    if (!loop_shape(seq.edge(sw.loop_edge), &ls)) return false;
    return with_engine(seq, cls, [&](const auto& eng) {
        return eng.forward_ok(sw.loop_edge, ls, sw.e1, sw.e2, sw.y_pos, sw.z_pos);
    });
}

bool is_admissible_backward(const Sequence& seq, const BackSwitching& bs) {
    const Params& p = seq.params;
    if (bs.p_y < 0 || bs.p_y >= p.k || bs.p_z < 0 || bs.p_z >= p.k || bs.p_y == bs.p_z)
        return false;
    if (bs.e1 < 0 || bs.e1 >= p.M || bs.e2 < 0 || bs.e2 >= p.M || bs.e3 < 0 || bs.e3 >= p.M)
        return false;
    if (bs.e1 == bs.e2 || bs.e1 == bs.e3 || bs.e2 == bs.e3) return false;
    if (bs.v >= static_cast<std::uint32_t>(p.n)) return false;
    EdgeClassification cls = classify_edges(seq);
    if (!in_switch_domain(seq, cls)) return false;
    auto green = [&](std::int64_t e) {
        return e >= p.red_edges && cls.kinds[static_cast<std::size_t>(e)] == EdgeKind::proper;
    };
    if (!green(bs.e1) || !green(bs.e2) || !green(bs.e3)) return false;
    return with_engine(seq, cls, [&](const auto& eng) {
        return eng.backward_ok(bs.v, bs.e1, bs.e2, bs.e3, bs.p_y, bs.p_z);
    });
}

std::int64_t count_forward(const Sequence& seq) {
    EdgeClassification cls = classify_edges(seq);
    if (!in_switch_domain(seq, cls)) return 0;
    return with_engine(seq, cls, [](const auto& eng) { return eng.count_forward(); });
}

std::int64_t count_backward_ordered(const Sequence& seq) {
    EdgeClassification cls = classify_edges(seq);
    if (!in_switch_domain(seq, cls)) return 0;
    return with_engine(seq, cls, [](const auto& eng) { return eng.count_backward_ordered(); });
}

std::int64_t count_backward(const Sequence& seq) {
    std::int64_t ordered = count_backward_ordered(seq);
    assert(ordered % 2 == 0);
    return ordered / 2;
}

std::pair<std::int64_t, std::int64_t> count_forward_backward(const Sequence& seq,
                                                             const EdgeClassification& cls) {
    if (!in_switch_domain(seq, cls)) return {0, 0};
    return with_engine(seq, cls, [](const auto& eng) {
        std::int64_t ordered = eng.count_backward_ordered();
        assert(ordered % 2 == 0);
        return std::pair<std::int64_t, std::int64_t>{eng.count_forward(), ordered / 2};
    });
}

BigInt forward_upper_bound(const Params& p, std::int64_t lambda) {
    return BigInt(p.k) * p.k * lambda * p.green_edges() * p.green_edges();
}

BigInt backward_upper_bound(const Params& p, std::int64_t phi) {
    return BigInt(p.k) * (p.k - 1) / 2 * phi * p.green_edges();
}

void apply_forward_inplace(Sequence& seq, const Switching& sw) {
    const Params& p = seq.params;
    if (!valid_positions(p, sw) || sw.e1 == sw.e2 || sw.e1 == sw.loop_edge ||
        sw.e2 == sw.loop_edge)
        throw std::invalid_argument("switching indices out of range");
    LoopShape ls;
    if (!loop_shape(seq.edge(sw.loop_edge), &ls))
        throw std::invalid_argument("loop_edge does not hold a simple loop");
    auto* s = seq.entries.data();
    std::swap(s[sw.e1 * p.k + sw.y_pos], s[sw.loop_edge * p.k + ls.lpos]);
    std::swap(s[sw.e2 * p.k + sw.z_pos], s[sw.loop_edge * p.k + ls.rpos]);
}

Sequence apply_forward(const Sequence& seq, const Switching& sw) {
    Sequence out = seq;
    apply_forward_inplace(out, sw);
    return out;
}

void apply_backward_inplace(Sequence& seq, const BackSwitching& bs) {
    const Params& p = seq.params;
    if (bs.p_y < 0 || bs.p_y >= p.k || bs.p_z < 0 || bs.p_z >= p.k || bs.p_y == bs.p_z ||
        bs.e1 < 0 || bs.e1 >= p.M || bs.e2 < 0 || bs.e2 >= p.M || bs.e3 < 0 || bs.e3 >= p.M ||
        bs.e1 == bs.e2 || bs.e1 == bs.e3 || bs.e2 == bs.e3)
        throw std::invalid_argument("switching indices out of range");
    auto find_unique = [&](std::int64_t e) {
        auto edge = seq.edge(e);
        int pos = -1;
        for (int i = 0; i < p.k; ++i)
            if (edge[static_cast<std::size_t>(i)] == bs.v) {
                if (pos >= 0) throw std::invalid_argument("vertex repeated in proper edge");
                pos = i;
            }
        if (pos < 0) throw std::invalid_argument("vertex missing from edge");
        return pos;
    };
    int pos1 = find_unique(bs.e1);
    int pos2 = find_unique(bs.e2);
    auto* s = seq.entries.data();
    std::swap(s[bs.e3 * p.k + bs.p_y], s[bs.e1 * p.k + pos1]);
    std::swap(s[bs.e3 * p.k + bs.p_z], s[bs.e2 * p.k + pos2]);
}

Sequence apply_backward(const Sequence& seq, const BackSwitching& bs) {
    Sequence out = seq;
    apply_backward_inplace(out, bs);
    return out;
}

BackSwitching inverse_of(const Sequence& seq, const Switching& sw) {
    LoopShape ls;
    if (!loop_shape(seq.edge(sw.loop_edge), &ls))
        throw std::invalid_argument("loop_edge does not hold a simple loop");
    BackSwitching bs;
    bs.v = ls.v;
    bs.e1 = sw.e1;
    bs.e2 = sw.e2;
    bs.e3 = sw.loop_edge;
    bs.p_y = ls.lpos;
    bs.p_z = ls.rpos;
    return bs;
}

Switching sample_forward(const Sequence& seq, Rng& rng, std::int64_t max_rejects) {
    EdgeClassification cls = classify_edges(seq);
    if (!in_switch_domain(seq, cls))
        throw std::invalid_argument("sequence is outside the switching domain");
    return with_engine(seq, cls, [&](const auto& eng) -> Switching {
        const auto& loops = eng.loops();
        const auto& greens = eng.greens();
        if (loops.empty()) throw std::invalid_argument("no loop to remove");
        if (greens.size() < 2)
            throw RejectBudgetExhausted("fewer than two green proper edges");
        int k = static_cast<int>(seq.params.k);
        // Cache loop shapes: there are few loops and many proposals.
        std::vector<LoopShape> shapes(loops.size());
        for (std::size_t i = 0; i < loops.size(); ++i) {
            bool ok = loop_shape(seq.edge(loops[i]), &shapes[i]);
            assert(ok);
            (void)ok;
        }
        for (std::int64_t tries = 0; tries < max_rejects; ++tries) {
            std::size_t li = static_cast<std::size_t>(rng.below(loops.size()));
            std::size_t a = static_cast<std::size_t>(rng.below(greens.size()));
            std::size_t b = static_cast<std::size_t>(rng.below(greens.size() - 1));
            if (b >= a) ++b;
            int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
            int z = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
            if (eng.forward_ok(loops[li], shapes[li], greens[a], greens[b], y, z)) {
                Switching sw;
                sw.loop_edge = loops[li];
                sw.e1 = greens[a];
                sw.e2 = greens[b];
                sw.y_pos = y;
                sw.z_pos = z;
                return sw;
            }
        }
        throw RejectBudgetExhausted("forward switching proposal budget exhausted");
    });
}

std::pair<Sequence, EliminationTrace> eliminate_loops(const Sequence& seq, Rng& rng,
                                                      std::int64_t max_rejects) {
    Sequence cur = seq;
    EliminationTrace trace;
    for (;;) {
        EdgeClassification cls = classify_edges(cur);
        if (!in_switch_domain(cur, cls))
            throw std::invalid_argument("sequence is outside the switching domain");
        if (cls.lambda == 0) break;
        Switching sw = sample_forward(cur, rng, max_rejects);
        apply_forward_inplace(cur, sw);
        trace.steps.push_back(sw);
#ifndef NDEBUG
        assert(classify_edges(cur).lambda == cls.lambda - 1);
#endif
    }
    return {std::move(cur), std::move(trace)};
}

}  // namespace hsw
