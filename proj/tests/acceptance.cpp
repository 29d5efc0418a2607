// Acceptance suite: every criterion prints exactly one PASS/FAIL line; the
// exit code is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "specht/classifier.hpp"
#include "specht/enumeration.hpp"
#include "specht/json_io.hpp"
#include "specht/modrep.hpp"

using namespace specht;

namespace {

struct Criterion {
    std::string name;
    double seconds_budget;  // 0 = unbounded
    std::function<bool(std::ostream&)> run;
};

SpechtContext ctx(const Partition& mu, int p, bool simple = false) {
    SpechtContext c;
    c.mu = mu;
    c.p = p;
    c.known_simple = simple;
    return c;
}

bool criterion_hook_weight(std::ostream& log) {
    long long violations = 0;
    for (long long n = 0; n <= 25; ++n)
        for_each_partition(n, [&violations, &log](const Partition& mu) {
            for (int m = 2; m <= 9; ++m)
                if (count_hooks_divisible(mu, m) != m_core_weight(mu, m).weight) {
                    if (violations == 0)
                        log << to_exponent_string(mu) << " m=" << m << " ";
                    ++violations;
                }
        });
    log << "all |mu| <= 25, m = 2..9";
    return violations == 0;
}

bool criterion_lemma_shape(std::ostream& log) {
    long long violations = 0;
    for (long long n = 0; n <= 40; ++n)
        for_each_partition(n, [&violations, &log](const Partition& mu) {
            bool expected = is_p_regular(mu, 2) && count_hooks_divisible(mu, 4) == 0;
            if (is_two_regular_four_core_shape(mu) != expected) {
                if (violations == 0)
                    log << to_exponent_string(mu) << " ";
                ++violations;
            }
        });
    log << "shape test == (2-regular and 4-core) for all |mu| <= 40";
    return violations == 0;
}

bool criterion_dimension_oracle(std::ostream& log) {
    long long violations = 0;
    for (long long n = 0; n <= 10; ++n)
        for_each_partition(n, [&violations](const Partition& mu) {
            if (specht_dimension(mu).value_u64() !=
                static_cast<std::uint64_t>(oracle::syt_count(mu)))
                ++violations;
        });
    log << "hook formula == exhaustive tableau count for all |mu| <= 10";
    return violations == 0;
}

bool criterion_gate_collapse(std::ostream& log) {
    bool ok = true;
    for (long long w = 0; w <= 8; ++w) {
        for (int p : {3, 5}) {
            auto types = gate_surviving_types(p, w, 0);
            ok = ok && types.size() == 1 &&
                 types[0].exponents == std::vector<int>(static_cast<std::size_t>(w), 1);
            ok = ok && gate_surviving_types(p, w, 1).empty();
            ok = ok && types == oracle::gate_bruteforce(p, w, 0);
        }
        auto mixtures = gate_surviving_types(2, w, 0);
        ok = ok && static_cast<long long>(mixtures.size()) == w / 2 + 1;
        for (const auto& type : mixtures) {
            for (int e : type.exponents)
                ok = ok && (e == 1 || e == 2);
            ok = ok && type.rank() >= (w + 1) / 2 && type.rank() <= w;
        }
        ok = ok && mixtures == oracle::gate_bruteforce(2, w, 0);
    }
    log << "p in {3,5}: {1^w}; p = 2: Z_2/Z_4 mixtures; brute-force oracle agrees (w <= 8)";
    return ok;
}

bool criterion_paper_golden(std::ostream& log) {
    struct Golden {
        std::string actual;
        std::string expected;
    };
    std::vector<Golden> cases;

    cases.push_back({to_json(classify(ctx(Partition({7, 1, 1, 1}), 3, true))),
                     "{\"mu\":[7,1,1,1],\"p\":3,\"status\":\"ElementaryAbelian\","
                     "\"vertex\":\"V1(3)^3\",\"complexity\":{\"lo\":3,\"hi\":3},"
                     "\"block\":{\"core\":[1],\"weight\":3,\"defect\":\"Sylow_3(S_9)\","
                     "\"abelian_defect\":false},\"trivial_source\":false,"
                     "\"simple_young\":false,\"note\":\"\",\"citations\":"
                     "[\"simple Specht module over a p^2-core: elementary abelian vertex "
                     "of rank w\"]}"});

    cases.push_back({to_json(classify(ctx(Partition({3, 3, 3}), 3))),
                     "{\"mu\":[3,3,3],\"p\":3,\"status\":\"SylowOfSym\","
                     "\"vertex\":\"Sylow_3(S_9)\",\"complexity\":{\"lo\":2,\"hi\":2},"
                     "\"block\":{\"core\":[],\"weight\":3,\"defect\":\"Sylow_3(S_9)\","
                     "\"abelian_defect\":false},\"trivial_source\":false,"
                     "\"simple_young\":false,\"note\":\"\",\"citations\":"
                     "[\"(p^p): vertices are Sylow p-subgroups of S_{p^2}; "
                     "complexity p-1\"]}"});

    cases.push_back({to_json(classify(ctx(Partition({2, 2}), 2))),
                     "{\"mu\":[2,2],\"p\":2,\"status\":\"KleinFour\","
                     "\"vertex\":\"V2(2)\",\"complexity\":{\"lo\":1,\"hi\":2},"
                     "\"block\":{\"core\":[],\"weight\":2,\"defect\":\"Sylow_2(S_4)\","
                     "\"abelian_defect\":false},\"trivial_source\":false,"
                     "\"simple_young\":false,\"note\":\"\",\"citations\":"
                     "[\"S^(2,2): vertex is the Klein four group V2(2)\","
                     "\"complexity is at most the p-weight\"]}"});

    cases.push_back({to_json(classify(ctx(Partition({4, 1, 1}), 2))),
                     "{\"mu\":[4,1,1],\"p\":2,\"status\":\"NotClassified\","
                     "\"vertex\":\"unknown\",\"complexity\":{\"lo\":1,\"hi\":3},"
                     "\"block\":{\"core\":[],\"weight\":3,\"defect\":\"Sylow_2(S_6)\","
                     "\"abelian_defect\":false},\"trivial_source\":false,"
                     "\"simple_young\":false,\"note\":\"4-core but 2-singular\","
                     "\"citations\":[\"indecomposability unknown (p = 2 and mu is "
                     "2-singular): not classified\"]}"});

    cases.push_back({to_json(Partition({7, 1, 1, 1}), block_info(Partition({7, 1, 1, 1}), 3)),
                     "{\"mu\":[7,1,1,1],\"p\":3,\"core\":[1],\"weight\":3,"
                     "\"defect\":\"Sylow_3(S_9)\",\"abelian_defect\":false}"});

    bool ok = true;
    for (std::size_t i = 0; i < cases.size(); ++i)
        if (cases[i].actual != cases[i].expected) {
            ok = false;
            log << "case " << i + 1 << " got " << cases[i].actual << " ";
        }
    log << "five exact JSON matches";
    return ok;
}

bool criterion_theorem_sweep(std::ostream& log) {
    long long violations = 0;
    for (long long n = 0; n <= 30; ++n)
        for_each_partition(n, [&violations](const Partition& mu) {
            if (!is_p_regular(mu, 2))
                return;
            VertexReport r = classify(ctx(mu, 2));
            bool four_core = count_hooks_divisible(mu, 4) == 0;
            // weight-0 partitions carry the trivial vertex, the rank-0 case
            bool abelian_vertex = r.status == VertexStatus::ElementaryAbelian ||
                                  r.status == VertexStatus::ProjectiveTrivialVertex;
            if (abelian_vertex != four_core)
                ++violations;
            if (four_core != is_two_regular_four_core_shape(mu))
                ++violations;
            if (abelian_vertex &&
                !(r.complexity.lo == r.block.weight && r.complexity.hi == r.block.weight))
                ++violations;
        });
    log << "2-regular |mu| <= 30: elementary abelian exactly on 4-cores, complexity = weight";
    return violations == 0;
}

bool criterion_modrep_cross_checks(std::ostream& log) {
    bool ok = true;

    // (a) S^(2,1) at p = 3 over V_1(3)
    RankVarietyPoints a =
        rank_variety_points(Partition({2, 1}), 3, ElementaryAbelian::v1_power(3, 1), 1);
    ok = ok && a.nonprojective.size() == 2;
    ok = ok &&
         complexity_lower_bound(Partition({2, 1}), 3, max_elem_abelian_classes(3, 3), 1) == 1;
    ok = ok && m_core_weight(Partition({2, 1}), 3).weight == 1;

    // (b) S^(3,1) at p = 2 over V_1(2)^2
    RankVarietyPoints b =
        rank_variety_points(Partition({3, 1}), 2, ElementaryAbelian::v1_power(2, 2), 1);
    ok = ok && b.nonprojective.size() == 3;
    ok = ok &&
         complexity_lower_bound(Partition({3, 1}), 2, max_elem_abelian_classes(4, 2), 1) == 2;
    ok = ok && m_core_weight(Partition({3, 1}), 2).weight == 2;

    // (c) S^(7,1^3) at p = 3 over V_1(3)^3: all 26 points, bound 3, meets [3,3]
    RankVarietyPoints c =
        rank_variety_points(Partition({7, 1, 1, 1}), 3, ElementaryAbelian::v1_power(3, 3), 1);
    ok = ok && !c.shortcut_used;  // dim 84 is divisible by 3: a real sweep
    ok = ok && c.nonprojective.size() == 26;
    long long lower = complexity_lower_bound(Partition({7, 1, 1, 1}), 3,
                                             max_elem_abelian_classes(9, 3), 1);
    ok = ok && lower == 3;
    ComplexityInterval interval = classify(ctx(Partition({7, 1, 1, 1}), 3, true)).complexity;
    ok = ok && interval.lo == 3 && interval.hi == 3 && lower == interval.lo;

    log << "(2,1)/3: 2 points, bound 1; (3,1)/2: 3 points, bound 2; (7,1^3)/3: 26 points, "
           "bound 3 = classifier";
    return ok;
}

bool criterion_max_elem_abelian(std::ostream& log) {
    bool ok = true;
    auto s9 = max_elem_abelian_classes(9, 3);
    ok = ok && s9.size() == 2;
    ok = ok && s9[0].description() == "V_1(3)^3" && s9[0].p_rank() == 3;
    ok = ok && s9[1].description() == "V_2(3)" && s9[1].p_rank() == 2;

    auto s4 = max_elem_abelian_classes(4, 2);
    ok = ok && s4.size() == 2;
    ok = ok && s4[0].description() == "V_1(2)^2" && s4[1].description() == "V_2(2)";

    for (int p : {2, 3, 5})
        for (long long n = 1; n <= 60 && ok; ++n)
            ok = static_cast<long long>(max_elem_abelian_classes(n, p).size()) ==
                 oracle::writings_count(n, p);
    log << "S_9/p=3 and S_4/p=2 classes exact; counts match the digit oracle for n <= 60";
    return ok;
}

bool criterion_expansion(std::ostream& log) {
    long long violations = 0;
    for (long long n = 0; n <= 25; ++n)
        for_each_partition(n, [&violations](const Partition& mu) {
            for (int p : {2, 3, 5}) {
                PAdicExpansion e = p_adic_expansion(mu, p);
                if (e.reconstruct() != mu)
                    ++violations;
                for (const auto& layer : e.layers) {
                    for (int i = 0; i + 1 < layer.rows(); ++i)
                        if (layer.part(i) - layer.part(i + 1) >= p)
                            ++violations;
                    if (!layer.empty() && layer.part(layer.rows() - 1) >= p)
                        ++violations;
                }
                if (rho(mu, p).sum() != mu.sum())
                    ++violations;
            }
        });
    log << "round-trip, layer freeness and rho sums for |mu| <= 25, p in {2,3,5}";
    return violations == 0;
}

bool criterion_upper_bound_sanity(std::ostream& log) {
    struct Case {
        Partition mu;
        int p;
        long long degree;
    };
    std::vector<Case> cases = {
        {Partition({2, 1}), 3, 3},       {Partition({3, 1}), 2, 4},
        {Partition({7, 1, 1, 1}), 3, 9}, {Partition({2, 2}), 2, 4},
        {Partition({3, 2, 1}), 2, 6},    {Partition({2, 2, 1, 1}), 2, 6},
        {Partition({4, 1}), 2, 4},       {Partition({3, 3}), 3, 6},
    };
    bool ok = true;
    for (const auto& c : cases) {
        long long lower =
            complexity_lower_bound(c.mu, c.p, max_elem_abelian_classes(c.degree, c.p), 1);
        long long weight = m_core_weight(c.mu, c.p).weight;
        if (lower > weight) {
            ok = false;
            log << to_exponent_string(c.mu) << " p=" << c.p << " bound " << lower << " > w="
                << weight << " ";
        }
    }
    log << "every swept lower bound stays at or below the p-weight";
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"hook-weight identity", 60.0, criterion_hook_weight},
        {"2-regular 4-core shape equivalence", 60.0, criterion_lemma_shape},
        {"dimension oracle", 0.0, criterion_dimension_oracle},
        {"feasibility gate collapse", 0.0, criterion_gate_collapse},
        {"golden classification cases", 0.0, criterion_paper_golden},
        {"elementary abelian sweep at p = 2", 120.0, criterion_theorem_sweep},
        {"modrep cross-checks", 600.0, criterion_modrep_cross_checks},
        {"maximal elementary abelian classes", 0.0, criterion_max_elem_abelian},
        {"p-adic expansion round-trip", 0.0, criterion_expansion},
        {"upper-bound sanity", 0.0, criterion_upper_bound_sanity},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::ostringstream log;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[i].run(log);
        } catch (const std::exception& e) {
            log << "exception: " << e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        if (criteria[i].seconds_budget > 0 && seconds > criteria[i].seconds_budget) {
            ok = false;
            log << " [exceeded " << criteria[i].seconds_budget << "s budget]";
        }
        if (!ok)
            ++failures;
        std::printf("%s %2zu %-38s %7.2fs  %s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), seconds, log.str().c_str());
        std::fflush(stdout);
    }
    return failures;
}
