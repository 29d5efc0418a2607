#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "specht/factored.hpp"

namespace specht {

/* A partition: weakly decreasing sequence of positive parts.  The empty
 * sequence is the unique partition of 0.  Immutable after construction.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    explicit Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    long long sum() const { return n_; }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    // parts_[i] when in range, 0 otherwise (handy below the last row).
    int part_or_zero(int i) const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    long long n_ = 0;
};

Partition conjugate(const Partition& mu);

// Hook lengths arm + leg + 1, laid out like the Young diagram.
struct HookGrid {
    std::vector<std::vector<int>> rows;

    int at(int i, int j) const {
        return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    std::vector<int> first_column() const;  // a beta-set for the partition
    int max_entry() const;                  // parts[0] + rows - 1 for nonempty shapes
};

HookGrid hook_grid(const Partition& mu);

// Number of hook lengths divisible by m (m >= 2).  Counted straight off
// the grid; the abacus route below must agree on the weight.
long long count_hooks_divisible(const Partition& mu, int m);

struct CoreWeight {
    Partition core;
    long long weight = 0;
    int modulus = 0;

    friend bool operator==(const CoreWeight&, const CoreWeight&) = default;
};

// m-core and m-weight via beta-set bead slides, one slide per weight unit.
CoreWeight m_core_weight(const Partition& mu, int m);

// Same computation on a caller-supplied beta-set (strictly decreasing after
// sorting, duplicates rejected).  Exposed so bead-count invariance can be
// exercised directly.
CoreWeight m_core_weight_from_beta(std::vector<long long> beta, int m);

bool is_m_core(const Partition& mu, int m);

// True iff no part repeats p or more times.
bool is_p_regular(const Partition& mu, int p);

// n! / prod of hooks, exact and field independent.
FactoredNat specht_dimension(const Partition& mu);

/* Layers of the p-adic expansion: mu = sum_i p^i * layers[i] coordinatewise,
 * every layer free of removable horizontal p-hooks.  layers has at least one
 * entry; the last one is nonempty unless mu itself is empty.
 */
struct PAdicExpansion {
    int p = 2;
    std::vector<Partition> layers;

    Partition reconstruct() const;
};

PAdicExpansion p_adic_expansion(const Partition& mu, int p);

// The partition (p^k repeated |layers[k]| times, ..., 1 repeated |layers[0]|
// times); its sum is |mu|.
Partition rho(const Partition& mu, int p);

/* Shape characterization of the partitions that are both 2-regular and
 * 4-cores: either the last part is 1 and the successive differences are a
 * (possibly empty) run of 3s followed by 1s, or the last part is 2 or 3 and
 * all differences are 3.  The empty partition qualifies.
 */
bool is_two_regular_four_core_shape(const Partition& mu);

// Every distinct part value and its multiplicity divisible by p.  The empty
// partition does not count (the (p^p) family is the intended use).
bool is_pxp(const Partition& mu, int p);

// Canonical exponent-form rendering, e.g. "(7,1^3)"; "()" for the empty
// partition.
std::string to_exponent_string(const Partition& mu);

}  // namespace specht
