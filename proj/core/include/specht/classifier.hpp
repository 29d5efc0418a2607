#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specht/partition.hpp"
#include "specht/subgroups.hpp"

namespace specht {

/* Input to the classifier.  Indecomposability resolves automatically for
 * p >= 3, for p = 2 with a 2-regular partition, and for (2,2); otherwise it
 * stays unknown unless the caller asserts it.  Simplicity is never computed
 * here, only asserted by the caller.
 */
struct SpechtContext {
    Partition mu;
    int p = 2;
    std::optional<bool> known_indecomposable;  // overrides the automatic rule
    bool known_simple = false;
    std::string notes;
};

// True when indecomposability of S^mu is settled (automatically or by flag).
bool indecomposability_known(const SpechtContext& ctx);

struct BlockInfo {
    int p = 2;
    Partition p_core;
    long long weight = 0;
    std::string defect_group;  // "Sylow_3(S_9)", or "trivial" when weight 0
    bool abelian_defect = false;  // exactly when weight < p

    friend bool operator==(const BlockInfo&, const BlockInfo&) = default;
};

BlockInfo block_info(const Partition& mu, int p);

// Equal p-cores; requires |mu| == |lambda|.
bool same_block(const Partition& mu, const Partition& lambda, int p);

/* Slack exponent s = sum over nodes of v_p(hook) minus the p-weight,
 * equivalently v_p(n!) - w - v_p(dim S^mu).  Both routes are evaluated and
 * must agree.  s = 0 exactly when mu is a p^2-core.
 */
long long slack_exponent(const Partition& mu, int p);

// Inequalities evaluated for a surviving type; lhs <= 0 means pass.
struct GateWitness {
    AbelianPType type;
    long long orbit_points = 0;    // sum of p^{n_i}, must be <= p*w
    long long eq1_lhs = 0;         // s + w - sum n_i
    long long eq2_lhs = 0;         // sum (p^{n_i - 1} - n_i) + s

    friend bool operator==(const GateWitness&, const GateWitness&) = default;
};

struct FeasibilityResult {
    long long slack = 0;
    long long weight = 0;
    std::vector<AbelianPType> types;    // empty whenever slack > 0
    std::vector<GateWitness> witnesses; // one per surviving type
};

/* Abelian p-types that survive the vertex feasibility gate: slack 0,
 * p^{n_i - 1} = n_i for every factor, exponent sum equal to the weight.
 * For p >= 3 that is at most {1^w}; for p = 2 all mixtures of exponents
 * 1 and 2 summing to w.
 */
FeasibilityResult feasible_abelian_types(const Partition& mu, int p);

// The closed form of the gate in terms of (p, weight, slack) alone.
std::vector<AbelianPType> gate_surviving_types(int p, long long w, long long s);

enum class VertexStatus {
    ProjectiveTrivialVertex,
    ElementaryAbelian,
    NonAbelian,
    SylowOfSym,
    KleinFour,
    AbelianFeasibleButUndetermined,
    NotClassified,
};

std::string status_name(VertexStatus status);

struct ComplexityInterval {
    long long lo = 0;
    long long hi = 0;

    friend bool operator==(const ComplexityInterval&, const ComplexityInterval&) = default;
};

struct VertexReport {
    Partition mu;
    int p = 2;
    VertexStatus status = VertexStatus::NotClassified;
    std::string vertex;  // "V1(3)^3", "Sylow_3(S_9)", "V2(2)", ...
    long long rank = 0;  // elementary abelian rank when status is ElementaryAbelian
    ComplexityInterval complexity;
    BlockInfo block;
    bool trivial_source = false;
    bool simple_young = false;
    std::string note;
    std::vector<AbelianPType> feasible_types;  // recorded for the undetermined status
    std::vector<std::string> citations;
};

/* Decision tree, first match wins:
 *   1. weight 0: projective, trivial vertex.
 *   2. p = 2 and mu 2-regular: 4-core gives V1(2)^w (trivial source, simple
 *      Young module); otherwise non-abelian.
 *   3. p >= 3, mu = (p^p): Sylow p-subgroup of S_{p^2}, complexity p-1.
 *   4. p >= 3, mu a (p x p)-partition: non-abelian, complexity in [1, w-1].
 *   5. p >= 3, w < p: abelian defect, vertex V1(p)^w.
 *   6. p >= 3, caller asserts simplicity: p^2-core gives an elementary
 *      abelian vertex of rank w, otherwise non-abelian.
 *   7. p = 2, mu = (2,2): Klein four vertex.
 *   8. otherwise: not a p^2-core means non-abelian; a p^2-core stays
 *      undetermined with the gate's feasible types attached.
 * NotClassified when indecomposability cannot be resolved.
 */
VertexReport classify(const SpechtContext& ctx);

struct YoungVertex {
    Partition rho_composition;
    std::string sylow;      // "Sylow_2(S_2 x S_2)", "trivial"
    std::string structure;  // "Z_2 x Z_2" when abelian, empty otherwise
    bool abelian = false;
    long long order_exponent = 0;  // v_p of the Sylow order
};

// Vertex of the Young module Y^mu: a Sylow p-subgroup of the Young subgroup
// for rho(mu).
YoungVertex young_vertex(const Partition& mu, int p);

/* Complexity interval from the classifier; when p = 2 and the caller asserts
 * an abelian vertex the lower bound improves to ceil(w/2) (from c <= w <= 2c).
 */
ComplexityInterval complexity_bounds(const SpechtContext& ctx,
                                     bool assume_abelian_vertex = false);

}  // namespace specht
