#include "specht/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "specht/numeric.hpp"

namespace specht {

namespace {

const char* kCiteDefectZero =
    "weight zero: defect-zero block, projective Specht module with trivial vertex";
const char* kCiteTwoRegularFourCore =
    "2-regular 4-core: simple Young module with vertex V1(2)^w and complexity w";
const char* kCiteTwoRegularNotFourCore =
    "2-regular, not a 4-core: abelian vertices are impossible";
const char* kCitePToTheP =
    "(p^p): vertices are Sylow p-subgroups of S_{p^2}; complexity p-1";
const char* kCitePxP =
    "(p x p)-partition, p odd: non-abelian vertices; complexity below the p-weight";
const char* kCiteAbelianDefect =
    "abelian defect (weight < p): elementary abelian vertex V1(p)^w; complexity w";
const char* kCiteSimpleP2Core =
    "simple Specht module over a p^2-core: elementary abelian vertex of rank w";
const char* kCiteSimpleNotP2Core =
    "simple Specht module, not a p^2-core: abelian vertices are impossible";
const char* kCiteKleinFour = "S^(2,2): vertex is the Klein four group V2(2)";
const char* kCiteNotP2Core = "not a p^2-core: abelian vertices are impossible";
const char* kCiteP2CoreOpen =
    "p^2-core with positive weight: abelian vertex existence undetermined; "
    "feasible types listed";
const char* kCiteWeightBound = "complexity is at most the p-weight";
const char* kCiteIndecUnknown =
    "indecomposability unknown (p = 2 and mu is 2-singular): not classified";

std::string sylow_of_sym(int p, long long degree) {
    return "Sylow_" + std::to_string(p) + "(S_" + std::to_string(degree) + ")";
}

std::string v1_power_name(int p, long long w) {
    return "V1(" + std::to_string(p) + ")^" + std::to_string(w);
}

bool is_klein_case(const Partition& mu, int p) {
    return p == 2 && mu.parts() == std::vector<int>{2, 2};
}

}  // namespace

bool indecomposability_known(const SpechtContext& ctx) {
    if (ctx.known_indecomposable.has_value())
        return *ctx.known_indecomposable;
    if (ctx.p >= 3)
        return true;
    if (ctx.p == 2 && is_p_regular(ctx.mu, 2))
        return true;
    return is_klein_case(ctx.mu, ctx.p);
}

BlockInfo block_info(const Partition& mu, int p) {
    require_prime(p);
    CoreWeight cw = m_core_weight(mu, p);
    BlockInfo info;
    info.p = p;
    info.p_core = cw.core;
    info.weight = cw.weight;
    info.defect_group = cw.weight == 0 ? "trivial" : sylow_of_sym(p, cw.weight * p);
    info.abelian_defect = cw.weight < p;
    return info;
}

bool same_block(const Partition& mu, const Partition& lambda, int p) {
    if (mu.sum() != lambda.sum())
        throw std::invalid_argument("partitions of different numbers never share a block");
    return m_core_weight(mu, p).core == m_core_weight(lambda, p).core;
}

long long slack_exponent(const Partition& mu, int p) {
    require_prime(p);
    long long w = m_core_weight(mu, p).weight;
    long long hook_valuations = 0;
    for (const auto& row : hook_grid(mu).rows)
        for (int h : row)
            for (int v = h; v % p == 0; v /= p)
                ++hook_valuations;
    long long s = hook_valuations - w;
    long long via_dimension =
        legendre_valuation(mu.sum(), p) - w - specht_dimension(mu).exponent(p);
    if (s != via_dimension)
        throw std::logic_error("slack exponent routes disagree");
    return s;
}

std::vector<AbelianPType> gate_surviving_types(int p, long long w, long long s) {
    require_prime(p);
    if (s < 0 || w < 0)
        throw std::invalid_argument("weight and slack are non-negative");
    std::vector<AbelianPType> types;
    if (s > 0)
        return types;
    if (p >= 3) {
        types.push_back(AbelianPType{p, std::vector<int>(static_cast<std::size_t>(w), 1)});
        return types;
    }
    // p = 2: exponents 1 and 2 mixed, summing to w.
    for (long long twos = 0; 2 * twos <= w; ++twos) {
        std::vector<int> exps(static_cast<std::size_t>(twos), 2);
        exps.resize(static_cast<std::size_t>(w - twos), 1);
        types.push_back(AbelianPType{p, std::move(exps)});
    }
    std::sort(types.begin(), types.end());
    return types;
}

FeasibilityResult feasible_abelian_types(const Partition& mu, int p) {
    FeasibilityResult result;
    result.slack = slack_exponent(mu, p);
    result.weight = m_core_weight(mu, p).weight;
    result.types = gate_surviving_types(p, result.weight, result.slack);
    for (const auto& type : result.types) {
        GateWitness witness;
        witness.type = type;
        witness.orbit_points = type.orbit_points();
        witness.eq1_lhs = result.slack + result.weight - type.exponent_sum();
        long long eq2 = result.slack;
        for (int e : type.exponents)
            eq2 += ipow(p, e - 1) - e;
        witness.eq2_lhs = eq2;
        result.witnesses.push_back(std::move(witness));
    }
    return result;
}

std::string status_name(VertexStatus status) {
    switch (status) {
        case VertexStatus::ProjectiveTrivialVertex: return "ProjectiveTrivialVertex";
        case VertexStatus::ElementaryAbelian: return "ElementaryAbelian";
        case VertexStatus::NonAbelian: return "NonAbelian";
        case VertexStatus::SylowOfSym: return "SylowOfSym";
        case VertexStatus::KleinFour: return "KleinFour";
        case VertexStatus::AbelianFeasibleButUndetermined:
            return "AbelianFeasibleButUndetermined";
        case VertexStatus::NotClassified: return "NotClassified";
    }
    throw std::logic_error("unreachable");
}

VertexReport classify(const SpechtContext& ctx) {
    require_prime(ctx.p);
    const Partition& mu = ctx.mu;
    const int p = ctx.p;

    VertexReport report;
    report.mu = mu;
    report.p = p;
    report.block = block_info(mu, p);
    const long long w = report.block.weight;

    if (!indecomposability_known(ctx)) {
        report.status = VertexStatus::NotClassified;
        report.vertex = "unknown";
        report.complexity = {std::min<long long>(1, w), w};
        if (p == 2 && !is_p_regular(mu, 2))
            report.note = count_hooks_divisible(mu, 4) == 0 ? "4-core but 2-singular"
                                                            : "2-singular";
        else
            report.note = "indecomposability not established";
        report.citations = {kCiteIndecUnknown};
        return report;
    }

    // 1. Weight zero: defect-zero block.
    if (w == 0) {
        report.status = VertexStatus::ProjectiveTrivialVertex;
        report.vertex = "trivial";
        report.complexity = {0, 0};
        report.citations = {kCiteDefectZero};
        return report;
    }

    // 2. p = 2 with a 2-regular partition: the 4-core test decides.
    if (p == 2 && is_p_regular(mu, 2)) {
        if (count_hooks_divisible(mu, 4) == 0) {
            report.status = VertexStatus::ElementaryAbelian;
            report.rank = w;
            report.vertex = v1_power_name(2, w);
            report.complexity = {w, w};
            report.trivial_source = true;
            report.simple_young = true;
            report.citations = {kCiteTwoRegularFourCore};
        } else {
            report.status = VertexStatus::NonAbelian;
            report.vertex = "non-abelian subgroup of " + report.block.defect_group;
            report.complexity = {1, w};
            report.citations = {kCiteTwoRegularNotFourCore, kCiteWeightBound};
        }
        return report;
    }

    // 3. p >= 3 and mu = (p^p).
    if (p >= 3 && mu.parts() == std::vector<int>(static_cast<std::size_t>(p), p)) {
        report.status = VertexStatus::SylowOfSym;
        report.vertex = sylow_of_sym(p, static_cast<long long>(p) * p);
        report.complexity = {p - 1, p - 1};
        report.citations = {kCitePToTheP};
        return report;
    }

    // 4. p >= 3 and mu a (p x p)-partition.
    if (p >= 3 && is_pxp(mu, p)) {
        report.status = VertexStatus::NonAbelian;
        report.vertex = "non-abelian subgroup of " + report.block.defect_group;
        report.complexity = {1, w - 1};
        if (report.complexity.lo > report.complexity.hi)
            throw std::logic_error("(p x p)-partition of weight 1 cannot occur");
        report.citations = {kCitePxP};
        return report;
    }

    // 5. p >= 3 with abelian defect.
    if (p >= 3 && w < p) {
        report.status = VertexStatus::ElementaryAbelian;
        report.rank = w;
        report.vertex = v1_power_name(p, w);
        report.complexity = {w, w};
        report.citations = {kCiteAbelianDefect};
        return report;
    }

    // 6. p >= 3 with simplicity asserted by the caller.
    if (p >= 3 && ctx.known_simple) {
        if (slack_exponent(mu, p) == 0) {
            report.status = VertexStatus::ElementaryAbelian;
            report.rank = w;
            report.vertex = v1_power_name(p, w);
            report.complexity = {w, w};
            // The Young-module conclusions additionally need p-regularity.
            if (is_p_regular(mu, p)) {
                report.trivial_source = true;
                report.simple_young = true;
            }
            report.citations = {kCiteSimpleP2Core};
        } else {
            report.status = VertexStatus::NonAbelian;
            report.vertex = "non-abelian subgroup of " + report.block.defect_group;
            report.complexity = {1, w};
            report.citations = {kCiteSimpleNotP2Core, kCiteWeightBound};
        }
        return report;
    }

    // 7. The hard-coded (2,2) case.
    if (is_klein_case(mu, p)) {
        report.status = VertexStatus::KleinFour;
        report.vertex = "V2(2)";
        report.complexity = {1, w};
        report.citations = {kCiteKleinFour, kCiteWeightBound};
        return report;
    }

    // 8. Everything else: the p^2-core test decides abelian feasibility.
    if (slack_exponent(mu, p) != 0) {
        report.status = VertexStatus::NonAbelian;
        report.vertex = "non-abelian subgroup of " + report.block.defect_group;
        report.complexity = {1, w};
        report.citations = {kCiteNotP2Core, kCiteWeightBound};
    } else {
        report.status = VertexStatus::AbelianFeasibleButUndetermined;
        report.vertex = "undetermined";
        report.complexity = {1, w};
        report.feasible_types = feasible_abelian_types(mu, p).types;
        report.citations = {kCiteP2CoreOpen, kCiteWeightBound};
    }
    return report;
}

YoungVertex young_vertex(const Partition& mu, int p) {
    YoungVertex vertex;
    vertex.rho_composition = rho(mu, p);
    std::string sylow_args;
    std::string structure;
    bool abelian = true;
    for (int part : vertex.rho_composition.parts()) {
        vertex.order_exponent += legendre_valuation(part, p);
        if (part < p)
            continue;  // S_1, ..., S_{p-1} contribute nothing
        if (!sylow_args.empty())
            sylow_args += " x ";
        sylow_args += "S_" + std::to_string(part);
        if (part == p) {
            if (!structure.empty())
                structure += " x ";
            structure += "Z_" + std::to_string(p);
        } else {
            abelian = false;  // Sylow_p(S_{p^k}) is an iterated wreath product
        }
    }
    if (sylow_args.empty()) {
        vertex.sylow = "trivial";
        vertex.structure = "1";
        vertex.abelian = true;
        return vertex;
    }
    vertex.sylow = "Sylow_" + std::to_string(p) + "(" + sylow_args + ")";
    vertex.abelian = abelian;
    vertex.structure = abelian ? structure : "";
    return vertex;
}

ComplexityInterval complexity_bounds(const SpechtContext& ctx, bool assume_abelian_vertex) {
    VertexReport report = classify(ctx);
    ComplexityInterval interval = report.complexity;
    if (assume_abelian_vertex && ctx.p == 2) {
        long long w = report.block.weight;
        interval.lo = std::max(interval.lo, (w + 1) / 2);
    }
    if (interval.lo > interval.hi)
        throw std::logic_error("empty complexity interval");
    return interval;
}

}  // namespace specht
