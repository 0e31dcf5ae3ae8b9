// Copyright 2026 The hyperswitch Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hyperswitch/generate.hpp"

#include <cassert>
#include <stdexcept>

namespace hsw {

ResidualSampler::ResidualSampler(std::int64_t n, std::int64_t d)
    : n_(n), total_(n * d), tree_(n + 1, 0) {
    for (std::int64_t i = 1; i <= n_; ++i) {
        tree_[i] += d;
        std::int64_t j = i + (i & -i);
        if (j <= n_) tree_[j] += tree_[i];
    }
}

std::int64_t ResidualSampler::weight(std::uint32_t v) const {
    std::int64_t i = v + 1;
    std::int64_t w = tree_[i];
    std::int64_t stop = i - (i & -i);
    --i;
    while (i > stop) {
        w -= tree_[i];
        i -= i & -i;
    }
    return w;
}

std::uint32_t ResidualSampler::locate(std::int64_t u) const {
    assert(u >= 0 && u < total_);
    std::int64_t pos = 0;
    std::int64_t mask = std::int64_t{1};
    while ((mask << 1) <= n_) mask <<= 1;
    for (; mask > 0; mask >>= 1) {
        std::int64_t next = pos + mask;
        if (next <= n_ && tree_[next] <= u) {
            pos = next;
            u -= tree_[next];
        }
    }
    return static_cast<std::uint32_t>(pos);  // pos is 0-based vertex id
}

std::uint32_t ResidualSampler::pick(Rng& rng) const {
    return locate(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total_))));
}

void ResidualSampler::decrement(std::uint32_t v) {
    assert(weight(v) > 0);
    --total_;
    for (std::int64_t i = v + 1; i <= n_; i += i & -i) --tree_[i];
}

Sequence sample_iid(const Params& p, Rng& rng) {
    Sequence s;
    s.params = p;
    s.entries.resize(p.seq_len());
    for (auto& e : s.entries) {
        e = static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(p.n)));
    }
    return s;
}

Sequence sample_regular(const Params& p, Rng& rng) {
    Sequence s;
    s.params = p;
    s.entries.resize(p.seq_len());
    std::int64_t pos = 0;
    for (std::int64_t v = 0; v < p.n; ++v) {
        for (std::int64_t j = 0; j < p.d; ++j) s.entries[pos++] = static_cast<std::uint32_t>(v);
    }
    for (std::int64_t i = p.seq_len() - 1; i > 0; --i) {
        std::uint64_t j = rng.below(static_cast<std::uint64_t>(i + 1));
        std::swap(s.entries[i], s.entries[j]);
    }
    return s;
}

Sequence sample_regular_sequential(const Params& p, Rng& rng) {
    Sequence s;
    s.params = p;
    s.entries.resize(p.seq_len());
    ResidualSampler res(p.n, p.d);
    for (std::int64_t t = 0; t < p.seq_len(); ++t) {
        std::uint32_t v = res.pick(rng);
        res.decrement(v);
        s.entries[t] = v;
    }
    return s;
}

std::vector<Rational> step_distribution(const GenState& st, const Params& p) {
    const std::int64_t nd = p.seq_len();
    if (st.t >= nd) throw std::out_of_range("step_distribution: sequence already complete");
    assert(static_cast<std::int64_t>(st.deg.size()) == p.n);
    std::vector<Rational> dist(p.n);
    for (std::int64_t v = 0; v < p.n; ++v) {
        assert(st.deg[v] <= p.d);
        dist[v] = Rational(p.d - st.deg[v], nd - st.t);
    }
    return dist;
}

}  // namespace hsw
