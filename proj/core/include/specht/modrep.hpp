#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "specht/gf.hpp"
#include "specht/partition.hpp"
#include "specht/subgroups.hpp"

namespace specht {

struct Budgets {
    long long perm_module_dim = 200000;     // tabloid count of M^mu
    long long column_stabilizer = 1000000;  // per-tableau stabilizer size
    long long polytabloid_work = 50000000;  // dim(S^mu) * |column stabilizer|
    long long sweep_points = 200000;        // (p^e)^k - 1
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Permutation module M^mu on tabloids, indexed canonically: the tabloids
 * are ordered lexicographically by their sequence of sorted row sets.
 * Elements of S_n act by permuting tabloid indices.
 */
class PermutationModule {
public:
    explicit PermutationModule(Partition mu, const Budgets& budgets = {});

    const Partition& shape() const { return mu_; }
    int degree() const { return n_; }
    long long dim() const { return static_cast<long long>(words_.size()); }

    // word[x] = row containing the number x+1
    const std::vector<std::uint8_t>& word(long long index) const {
        return words_[static_cast<std::size_t>(index)];
    }
    long long index_of(const std::vector<std::uint8_t>& word) const;

    // Index permutation of sigma (images, 0-based, size >= degree()).
    std::vector<long long> action(const std::vector<int>& sigma) const;

private:
    Partition mu_;
    int n_ = 0;
    std::vector<std::vector<std::uint8_t>> words_;
};

// Standard tableaux of shape mu, entries 0..n-1 by (row, column), in a
// deterministic order.
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& mu);

/* Echelonized basis of the span of all standard polytabloids inside the
 * tabloid space over GF(p^e).  The dimension always equals the hook-formula
 * dimension, whatever the field.
 */
class SpechtRealization {
public:
    SpechtRealization(const Partition& mu, int p, int e, const Budgets& budgets = {});

    const Partition& shape() const { return perm_->shape(); }
    int degree() const { return perm_->degree(); }
    long long dim() const { return basis_.rows(); }
    long long ambient_dim() const { return perm_->dim(); }
    int p() const { return field_->characteristic(); }
    int e() const { return field_->degree(); }
    const GaloisField& field() const { return *field_; }
    const PermutationModule& permutation_module() const { return *perm_; }
    const GFpMatrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Matrix of a permutation of S_n acting on the Specht basis; verifies
    // along the way that the span really is invariant.
    GFpMatrix action_on_basis(const std::vector<int>& sigma) const;

private:
    std::shared_ptr<GaloisField> field_;
    std::shared_ptr<PermutationModule> perm_;
    GFpMatrix basis_;
    std::vector<int> pivots_;
};

/* Elementary abelian p-subgroup of some S_n presented by generators.  A
 * V_1(p)^k factor list gives k disjoint p-cycles; a V_m(p) factor acts
 * regularly on p^m points labeled in mixed-radix order.  Factor supports
 * are consecutive blocks starting at point 1.
 */
struct ElementaryAbelian {
    int p = 2;
    int rank = 0;
    int degree = 0;  // points moved (generators are padded with fixed points)
    std::vector<std::vector<int>> generators;  // image vectors, 0-based
    std::string description;

    static ElementaryAbelian v1_power(int p, int k);
    // ms lists the factor sizes, e.g. {1,1,2} for V_1(p)^2 x V_2(p).
    static ElementaryAbelian product_of_factors(int p, const std::vector<int>& ms);
    static ElementaryAbelian from_class(const MaxElemAbelianClass& cls);
    // Explicit disjoint p-cycles, 1-based points; overlap is rejected.
    static ElementaryAbelian from_disjoint_cycles(int p,
                                                  const std::vector<std::vector<int>>& cycles);
};

// u_alpha = 1 + sum alpha_i (g_i - 1); alpha entries are field codes.
struct ShiftedUnit {
    ElementaryAbelian subgroup;
    std::vector<std::uint8_t> alpha;
};

GFpMatrix u_alpha_matrix(const SpechtRealization& realization, const ShiftedUnit& unit);

/* Jordan block multiplicities of the nilpotent operator u - 1 for a
 * unipotent u of order dividing p: blocks[j-1] counts blocks of size j,
 * and sum j * blocks[j-1] equals the module dimension.  Projective means
 * every block has size p.
 */
struct JordanProfile {
    int p = 2;
    std::vector<long long> blocks;  // sizes 1..p

    long long dimension() const;
    bool projective() const;
};

JordanProfile jordan_profile(const GFpMatrix& unipotent, int p);

// Generators of an elementary abelian group acting on a module: one matrix
// per generator over a common field.  The field (usually owned by the
// realization the action was restricted from) must outlive the action.
struct ModuleAction {
    const GaloisField* field = nullptr;
    long long dim = 0;
    std::vector<GFpMatrix> generators;
};

ModuleAction restrict_action(const SpechtRealization& realization,
                             const ElementaryAbelian& subgroup);
ModuleAction direct_sum(const ModuleAction& a, const ModuleAction& b);

struct SweepPoint {
    std::vector<std::uint8_t> alpha;
    JordanProfile profile;
    bool projective = false;
};

struct SweepResult {
    int p = 2;
    int e = 1;
    int rank = 0;
    long long module_dim = 0;
    std::vector<SweepPoint> points;  // all nonzero alpha in odometer order
};

// Full sweep over every nonzero alpha; no shortcut, every point gets its
// Jordan profile.
SweepResult sweep_all_points(const ModuleAction& action, const Budgets& budgets = {});

struct RankVarietyPoints {
    bool shortcut_used = false;  // p does not divide dim: every point qualifies
    long long module_dim = 0;
    std::vector<std::vector<std::uint8_t>> nonprojective;
};

RankVarietyPoints rank_variety_points(const ModuleAction& action,
                                      const Budgets& budgets = {});
RankVarietyPoints rank_variety_points(const SpechtRealization& realization,
                                      const ElementaryAbelian& subgroup,
                                      const Budgets& budgets = {});
RankVarietyPoints rank_variety_points(const Partition& mu, int p,
                                      const ElementaryAbelian& subgroup, int e,
                                      const Budgets& budgets = {});

/* Certified lower bound for the complexity of S^mu: a class counts its full
 * rank when every nonzero point over GF(p^e) is non-projective, otherwise
 * the largest size of a coordinate subspace consisting entirely of
 * non-projective points.  These are lower bounds; exact values need the
 * classifier's upper bound to close the gap.
 */
long long complexity_lower_bound(const Partition& mu, int p,
                                 const std::vector<MaxElemAbelianClass>& classes, int e,
                                 const Budgets& budgets = {});

void write_sweep_csv(std::ostream& os, const SweepResult& sweep);

}  // namespace specht
