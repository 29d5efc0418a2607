#pragma once

// Independent oracles used by the unit and acceptance suites.  Everything
// here recomputes results by brute force or by a different algorithm from
// the library under test, on purpose.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "specht/classifier.hpp"
#include "specht/enumeration.hpp"
#include "specht/numeric.hpp"
#include "specht/partition.hpp"
#include "specht/subgroups.hpp"

namespace oracle {

// Number of standard Young tableaux by exhaustive backtracking over fillings.
inline long long syt_count(const specht::Partition& mu) {
    int n = static_cast<int>(mu.sum());
    if (n == 0)
        return 1;
    std::vector<int> fill(static_cast<std::size_t>(mu.rows()), 0);
    long long count = 0;
    auto rec = [&](auto&& self, int value) -> void {
        if (value == n) {
            ++count;
            return;
        }
        for (int i = 0; i < mu.rows(); ++i) {
            int c = fill[static_cast<std::size_t>(i)];
            if (c >= mu.part(i) || (i > 0 && fill[static_cast<std::size_t>(i - 1)] <= c))
                continue;
            ++fill[static_cast<std::size_t>(i)];
            self(self, value + 1);
            --fill[static_cast<std::size_t>(i)];
        }
    };
    rec(rec, 0);
    return count;
}

// All partitions nu obtained from mu by removing one rim m-hook, found
// geometrically: the skew diagram mu/nu must have m cells, be edge-connected
// and contain no 2x2 square.
inline std::vector<specht::Partition> removable_rim_hooks(const specht::Partition& mu, int m) {
    std::vector<specht::Partition> results;
    if (mu.sum() < m)
        return results;
    for (const auto& nu : specht::enumerate_partitions(mu.sum() - m)) {
        if (nu.rows() > mu.rows())
            continue;
        bool contained = true;
        for (int i = 0; i < nu.rows() && contained; ++i)
            contained = nu.part(i) <= mu.part(i);
        if (!contained)
            continue;
        // collect skew cells
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < mu.rows(); ++i)
            for (int j = nu.part_or_zero(i); j < mu.part(i); ++j)
                cells.emplace_back(i, j);
        auto has = [&cells](int i, int j) {
            return std::find(cells.begin(), cells.end(), std::make_pair(i, j)) != cells.end();
        };
        // no 2x2 square
        bool ok = true;
        for (const auto& [i, j] : cells)
            if (has(i, j + 1) && has(i + 1, j) && has(i + 1, j + 1)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        // edge-connected
        std::vector<bool> seen(cells.size(), false);
        std::vector<std::size_t> queue{0};
        seen[0] = true;
        while (!queue.empty()) {
            auto [i, j] = cells[queue.back()];
            queue.pop_back();
            for (std::size_t t = 0; t < cells.size(); ++t) {
                if (seen[t])
                    continue;
                auto [a, b] = cells[t];
                if (std::abs(a - i) + std::abs(b - j) == 1) {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        if (std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }))
            results.push_back(nu);
    }
    return results;
}

struct RimCoreWeight {
    specht::Partition core;
    long long weight = 0;
};

// Literal rim-hook stripping in a random removal order.
inline RimCoreWeight rim_hook_core_weight(const specht::Partition& mu, int m,
                                          std::mt19937& rng) {
    specht::Partition cur = mu;
    long long steps = 0;
    for (;;) {
        auto options = removable_rim_hooks(cur, m);
        if (options.empty())
            return {cur, steps};
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        cur = options[pick(rng)];
        ++steps;
    }
}

// Count of ways n = i_0 + i_1 p + ... + i_r p^r with 0 <= i_0 <= p-1, by a
// DP over prime powers rather than recursive digit generation.
inline long long writings_count(long long n, int p) {
    std::vector<long long> ways(static_cast<std::size_t>(n) + 1, 0);
    for (long long i0 = 0; i0 < p && i0 <= n; ++i0)
        ways[static_cast<std::size_t>(i0)] = 1;
    for (long long power = p; power <= n; power *= p) {
        for (long long v = power; v <= n; ++v)
            ways[static_cast<std::size_t>(v)] += ways[static_cast<std::size_t>(v - power)];
        if (power > n / p)
            break;
    }
    return ways[static_cast<std::size_t>(n)];
}

// Every abelian p-type embeddable in S_{pw}, tested directly against the
// feasibility inequalities with c = m.
inline std::vector<specht::AbelianPType> gate_bruteforce(int p, long long w, long long s) {
    std::vector<specht::AbelianPType> survivors;
    if (w == 0) {
        if (s == 0)
            survivors.push_back(specht::AbelianPType{p, {}});
        return survivors;
    }
    for (const auto& type : specht::enumerate_abelian_types(p, p * w)) {
        long long exp_sum = type.exponent_sum();
        long long eq2 = s;
        for (int e : type.exponents)
            eq2 += specht::ipow(p, e - 1) - e;
        bool embeds = specht::abelian_type_embeds(type, p * w);
        bool eq1 = s + w <= exp_sum;
        if (embeds && eq1 && eq2 <= 0)
            survivors.push_back(type);
    }
    std::sort(survivors.begin(), survivors.end());
    return survivors;
}

// One pass of "strip all horizontal p-hooks", choosing the row at random at
// every step, for the confluence check.
inline specht::Partition random_order_strip(const specht::Partition& mu, int p,
                                            std::mt19937& rng) {
    std::vector<int> parts = mu.parts();
    for (;;) {
        std::vector<std::size_t> rows;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            int below = j + 1 < parts.size() ? parts[j + 1] : 0;
            if (parts[j] - p >= below)
                rows.push_back(j);
        }
        if (rows.empty())
            break;
        std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
        parts[rows[pick(rng)]] -= p;
        while (!parts.empty() && parts.back() == 0)
            parts.pop_back();
    }
    return specht::Partition(parts);
}

}  // namespace oracle
