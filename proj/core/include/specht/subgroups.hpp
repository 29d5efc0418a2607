#pragma once

#include <string>
#include <vector>

namespace specht {

// Exponent of p in n!, i.e. sum of floor(n/p^k).
long long legendre_valuation(long long n, long long p);

/* Abstract abelian p-group Z_{p^{n_1}} x ... x Z_{p^{n_m}} recorded by its
 * exponent tuple n_1 >= ... >= n_m >= 1.  The empty tuple is the trivial
 * group.  The p-rank is m.
 */
struct AbelianPType {
    int p = 2;
    std::vector<int> exponents;

    int rank() const { return static_cast<int>(exponents.size()); }
    long long exponent_sum() const;
    // Minimal number of points of a faithful permutation action built from
    // disjoint regular orbits: sum of p^{n_i}.
    long long orbit_points() const;
    std::string to_string() const;  // "Z_4 x Z_2", "1" for the trivial group

    friend bool operator==(const AbelianPType&, const AbelianPType&) = default;
    friend auto operator<=>(const AbelianPType&, const AbelianPType&) = default;
};

AbelianPType make_abelian_type(int p, std::vector<int> exponents);

/* Necessary and (via disjoint regular orbits) sufficient test for an
 * injective homomorphism of the abelian p-group into S_m: the orbit point
 * count must fit inside m.
 */
bool abelian_type_embeds(const AbelianPType& type, long long m);

// All abelian p-types that embed into S_m, trivial type included, sorted by
// exponent tuple.
std::vector<AbelianPType> enumerate_abelian_types(int p, long long m);

/* Conjugacy class of a maximal elementary abelian p-subgroup of S_n: a way
 * of writing n = i_0 + i_1 p + ... + i_r p^r with 0 <= i_0 <= p-1.  The
 * group is the product of i_j copies of V_j(p), the regular image of
 * (Z_p)^j on p^j points.
 */
struct MaxElemAbelianClass {
    int p = 2;
    long long n = 0;
    std::vector<long long> coeffs;  // i_0..i_r, trailing zeros trimmed

    long long p_rank() const;  // i_1 + 2 i_2 + ... + r i_r
    // Orbit-size bookkeeping of the class: exponent j with multiplicity i_j,
    // so that orbit_points() equals n - i_0.
    AbelianPType orbit_type() const;
    std::string description() const;  // "V_1(3)^3 x V_2(3)", "trivial"
    std::string to_json() const;      // {"p":3,"n":9,"i":[0,3]}

    friend bool operator==(const MaxElemAbelianClass&, const MaxElemAbelianClass&) = default;
};

// All classes for S_n, ordered by (r, i_r, ..., i_1).
std::vector<MaxElemAbelianClass> max_elem_abelian_classes(long long n, int p);

long long p_rank(const MaxElemAbelianClass& cls);

}  // namespace specht
