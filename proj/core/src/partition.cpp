#include "specht/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "specht/numeric.hpp"

namespace specht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

int Partition::part_or_zero(int i) const {
    if (i < 0)
        throw std::out_of_range("negative row index");
    return i < rows() ? parts_[static_cast<std::size_t>(i)] : 0;
}

Partition conjugate(const Partition& mu) {
    if (mu.empty())
        return {};
    std::vector<int> conj(static_cast<std::size_t>(mu.part(0)), 0);
    for (int p : mu.parts())
        for (int j = 0; j < p; ++j)
            ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

HookGrid hook_grid(const Partition& mu) {
    HookGrid grid;
    Partition conj = conjugate(mu);
    grid.rows.reserve(static_cast<std::size_t>(mu.rows()));
    for (int i = 0; i < mu.rows(); ++i) {
        std::vector<int> row(static_cast<std::size_t>(mu.part(i)));
        for (int j = 0; j < mu.part(i); ++j)
            row[static_cast<std::size_t>(j)] = mu.part(i) - j + conj.part(j) - i - 1;
        grid.rows.push_back(std::move(row));
    }
    return grid;
}

std::vector<int> HookGrid::first_column() const {
    std::vector<int> col;
    col.reserve(rows.size());
    for (const auto& row : rows)
        col.push_back(row.front());
    return col;
}

int HookGrid::max_entry() const {
    return rows.empty() ? 0 : rows.front().front();
}

long long count_hooks_divisible(const Partition& mu, int m) {
    if (m < 2)
        throw std::invalid_argument("modulus must be at least 2");
    long long count = 0;
    for (const auto& row : hook_grid(mu).rows)
        for (int h : row)
            if (h % m == 0)
                ++count;
    return count;
}

namespace {

// Beta-set with exactly mu.rows() beads: the first-column hook lengths.
std::vector<long long> beta_set(const Partition& mu) {
    std::vector<long long> beta;
    beta.reserve(static_cast<std::size_t>(mu.rows()));
    int r = mu.rows();
    for (int i = 0; i < r; ++i)
        beta.push_back(mu.part(i) + (r - 1 - i));
    return beta;
}

Partition partition_from_beta(std::vector<long long> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    int r = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < r; ++i) {
        long long p = beta[static_cast<std::size_t>(i)] - (r - 1 - i);
        if (p < 0)
            throw std::logic_error("invalid beta-set");
        if (p > 0)
            parts.push_back(static_cast<int>(p));
    }
    return Partition(std::move(parts));
}

}  // namespace

CoreWeight m_core_weight_from_beta(std::vector<long long> beta, int m) {
    if (m < 2)
        throw std::invalid_argument("modulus must be at least 2");
    {
        auto sorted = beta;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("beta-set entries must be distinct");
        if (!sorted.empty() && sorted.front() < 0)
            throw std::invalid_argument("beta-set entries must be non-negative");
    }
    // Slide every bead as far down its runner as possible; each unit slide
    // removes one rim m-hook.
    std::vector<std::vector<long long>> runners(static_cast<std::size_t>(m));
    for (long long b : beta)
        runners[static_cast<std::size_t>(b % m)].push_back((b - b % m) / m);
    long long weight = 0;
    std::vector<long long> slid;
    for (int c = 0; c < m; ++c) {
        auto& levels = runners[static_cast<std::size_t>(c)];
        std::sort(levels.begin(), levels.end());
        for (std::size_t k = 0; k < levels.size(); ++k) {
            weight += levels[k] - static_cast<long long>(k);
            slid.push_back(c + m * static_cast<long long>(k));
        }
    }
    return CoreWeight{partition_from_beta(std::move(slid)), weight, m};
}

CoreWeight m_core_weight(const Partition& mu, int m) {
    return m_core_weight_from_beta(beta_set(mu), m);
}

bool is_m_core(const Partition& mu, int m) {
    return m_core_weight(mu, m).weight == 0;
}

bool is_p_regular(const Partition& mu, int p) {
    require_prime(p);
    int run = 0;
    int prev = 0;
    for (int part : mu.parts()) {
        run = (part == prev) ? run + 1 : 1;
        prev = part;
        if (run >= p)
            return false;
    }
    return true;
}

FactoredNat specht_dimension(const Partition& mu) {
    FactoredNat dim = FactoredNat::factorial(mu.sum());
    FactoredNat hooks;
    for (const auto& row : hook_grid(mu).rows)
        for (int h : row)
            hooks *= FactoredNat::from_integer(h);
    dim.divide_exact(hooks);
    return dim;
}

namespace {

// Remove horizontal p-hooks bottom-to-top until none remains.  A hook is
// removable from row j while parts[j] - p >= parts[j+1].
Partition strip_horizontal_hooks(const Partition& mu, int p) {
    std::vector<int> parts = mu.parts();
    for (int j = static_cast<int>(parts.size()) - 1; j >= 0; --j) {
        int below = j + 1 < static_cast<int>(parts.size())
                        ? parts[static_cast<std::size_t>(j + 1)]
                        : 0;
        while (parts[static_cast<std::size_t>(j)] - p >= below)
            parts[static_cast<std::size_t>(j)] -= p;
    }
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

}  // namespace

PAdicExpansion p_adic_expansion(const Partition& mu, int p) {
    require_prime(p);
    PAdicExpansion expansion;
    expansion.p = static_cast<int>(p);
    Partition cur = mu;
    for (;;) {
        Partition layer = strip_horizontal_hooks(cur, p);
        expansion.layers.push_back(layer);
        // Quotient (cur - layer)/p, coordinatewise.
        std::vector<int> next;
        for (int i = 0; i < cur.rows(); ++i) {
            int diff = cur.part(i) - layer.part_or_zero(i);
            if (diff % p != 0)
                throw std::logic_error("horizontal stripping left a non-multiple of p");
            if (diff > 0)
                next.push_back(diff / p);
        }
        if (next.empty())
            return expansion;
        for (std::size_t i = 1; i < next.size(); ++i)
            if (next[i] > next[i - 1])
                throw std::logic_error("p-adic quotient is not a partition");
        cur = Partition(std::move(next));
    }
}

Partition PAdicExpansion::reconstruct() const {
    std::vector<int> parts;
    long long power = 1;
    for (const auto& layer : layers) {
        for (int i = 0; i < layer.rows(); ++i) {
            if (static_cast<std::size_t>(i) >= parts.size())
                parts.resize(static_cast<std::size_t>(i) + 1, 0);
            parts[static_cast<std::size_t>(i)] +=
                static_cast<int>(power) * layer.part(i);
        }
        power *= p;
    }
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

Partition rho(const Partition& mu, int p) {
    PAdicExpansion expansion = p_adic_expansion(mu, p);
    std::vector<int> parts;
    for (int i = static_cast<int>(expansion.layers.size()) - 1; i >= 0; --i) {
        long long power = ipow(p, i);
        long long copies = expansion.layers[static_cast<std::size_t>(i)].sum();
        for (long long c = 0; c < copies; ++c)
            parts.push_back(static_cast<int>(power));
    }
    return Partition(std::move(parts));
}

bool is_two_regular_four_core_shape(const Partition& mu) {
    if (mu.empty())
        return true;
    int r = mu.rows();
    int last = mu.part(r - 1);
    std::vector<int> diffs;
    for (int i = 0; i + 1 < r; ++i)
        diffs.push_back(mu.part(i) - mu.part(i + 1));
    if (last == 1) {
        // A run of 3s followed by a run of 1s.
        std::size_t s = 0;
        while (s < diffs.size() && diffs[s] == 3)
            ++s;
        for (std::size_t i = s; i < diffs.size(); ++i)
            if (diffs[i] != 1)
                return false;
        return true;
    }
    if (last == 2 || last == 3)
        return std::all_of(diffs.begin(), diffs.end(), [](int d) { return d == 3; });
    return false;
}

bool is_pxp(const Partition& mu, int p) {
    require_prime(p);
    if (mu.empty())
        return false;
    std::map<int, int> multiplicity;
    for (int part : mu.parts())
        ++multiplicity[part];
    for (const auto& [value, count] : multiplicity)
        if (value % p != 0 || count % p != 0)
            return false;
    return true;
}

std::string to_exponent_string(const Partition& mu) {
    std::string s = "(";
    int i = 0;
    while (i < mu.rows()) {
        int j = i;
        while (j < mu.rows() && mu.part(j) == mu.part(i))
            ++j;
        if (i > 0)
            s += ",";
        s += std::to_string(mu.part(i));
        if (j - i > 1)
            s += "^" + std::to_string(j - i);
        i = j;
    }
    return s + ")";
}

}  // namespace specht
