#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "specht/enumeration.hpp"
#include "specht/gf.hpp"
#include "specht/modrep.hpp"

using namespace specht;

TEST_CASE("Galois field axioms on every element") {
    for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        GaloisField F(p, e);
        const int q = F.size();
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.mul(a, 0) == 0);
            if (a != 0)
                CHECK(F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < std::min(q, 8); ++c) {
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                }
            }
        }
        // characteristic p: adding one p times cycles back to zero
        std::uint8_t acc = 0;
        for (int i = 0; i < p; ++i)
            acc = F.add(acc, 1);
        CHECK(acc == 0);
    }
    CHECK_THROWS_AS(GaloisField(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(2, 4), std::invalid_argument);
}

TEST_CASE("matrix rank and echelon form") {
    GaloisField F(3, 1);
    GFpMatrix m(&F, 3, 3);
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(1, 0, 2);
    m.set(1, 1, 1);  // row1 = 2*row0
    m.set(2, 2, 1);
    CHECK(m.rank() == 2);
    std::vector<int> pivots;
    GFpMatrix copy = m;
    CHECK(copy.rref_in_place(&pivots) == 2);
    CHECK(pivots == std::vector<int>{0, 2});
    CHECK(GFpMatrix::identity(&F, 4).rank() == 4);
}

TEST_CASE("permutation module dimensions and canonical indexing") {
    CHECK(PermutationModule(Partition({2, 1})).dim() == 3);
    CHECK(PermutationModule(Partition({4})).dim() == 1);
    CHECK(PermutationModule(Partition()).dim() == 1);
    CHECK(PermutationModule(Partition({7, 1, 1, 1})).dim() == 720);

    Budgets tight;
    tight.perm_module_dim = 100;
    CHECK_THROWS_AS(PermutationModule(Partition({4, 4, 4, 4}), tight), BudgetError);
    // default budget also rejects 16!/(4!)^4 = 63,063,000
    CHECK_THROWS_AS(PermutationModule(Partition({4, 4, 4, 4})), BudgetError);
}

TEST_CASE("group action on tabloids composes") {
    PermutationModule mod(Partition({3, 2, 1}));
    const int n = mod.degree();
    std::mt19937 rng(99);
    std::vector<int> sigma(static_cast<std::size_t>(n)), tau(sigma), composite(sigma);
    for (int trial = 0; trial < 100; ++trial) {
        std::iota(sigma.begin(), sigma.end(), 0);
        std::iota(tau.begin(), tau.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::shuffle(tau.begin(), tau.end(), rng);
        for (int x = 0; x < n; ++x)
            composite[static_cast<std::size_t>(x)] =
                sigma[static_cast<std::size_t>(tau[static_cast<std::size_t>(x)])];
        auto a_sigma = mod.action(sigma);
        auto a_tau = mod.action(tau);
        auto a_comp = mod.action(composite);
        for (long long i = 0; i < mod.dim(); ++i)
            CHECK(a_comp[static_cast<std::size_t>(i)] ==
                  a_sigma[static_cast<std::size_t>(a_tau[static_cast<std::size_t>(i)])]);
    }
}

TEST_CASE("standard tableaux enumeration agrees with the hook formula") {
    for (long long n = 0; n <= 8; ++n)
        for_each_partition(n, [](const Partition& mu) {
            CHECK(standard_tableaux(mu).size() == specht_dimension(mu).value_u64());
        });
}

TEST_CASE("Specht realizations have hook-formula dimension in any characteristic") {
    for (long long n = 0; n <= 8; ++n)
        for_each_partition(n, [](const Partition& mu) {
            for (int p : {2, 3, 5}) {
                SpechtRealization real(mu, p, 1);
                CHECK(real.dim() == static_cast<long long>(specht_dimension(mu).value_u64()));
            }
        });
    CHECK(SpechtRealization(Partition({2, 1}), 3, 1).dim() == 2);
    CHECK(SpechtRealization(Partition({5}), 2, 1).dim() == 1);
    CHECK(SpechtRealization(Partition({7, 1, 1, 1}), 3, 1).dim() == 84);
}

TEST_CASE("elementary abelian generator layouts") {
    ElementaryAbelian e = ElementaryAbelian::v1_power(3, 2);
    CHECK(e.rank == 2);
    CHECK(e.degree == 6);
    CHECK(e.description == "V_1(3)^2");
    // first generator is the 3-cycle (1 2 3), second (4 5 6)
    CHECK(e.generators[0] == std::vector<int>{1, 2, 0, 3, 4, 5});
    CHECK(e.generators[1] == std::vector<int>{0, 1, 2, 4, 5, 3});

    ElementaryAbelian v2 = ElementaryAbelian::product_of_factors(2, {2});
    CHECK(v2.rank == 2);
    CHECK(v2.degree == 4);
    // regular action of Z_2 x Z_2 on 4 labels
    CHECK(v2.generators[0] == std::vector<int>{2, 3, 0, 1});
    CHECK(v2.generators[1] == std::vector<int>{1, 0, 3, 2});

    ElementaryAbelian cycles =
        ElementaryAbelian::from_disjoint_cycles(2, {{1, 2}, {3, 4}});
    CHECK(cycles.rank == 2);
    CHECK(cycles.generators[0] == std::vector<int>{1, 0, 2, 3});
    CHECK_THROWS_AS(ElementaryAbelian::from_disjoint_cycles(2, {{1, 2}, {2, 3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ElementaryAbelian::from_disjoint_cycles(3, {{1, 2}}),
                    std::invalid_argument);

    auto cls = max_elem_abelian_classes(9, 3);
    CHECK(ElementaryAbelian::from_class(cls[0]).rank == 3);
    CHECK(ElementaryAbelian::from_class(cls[1]).rank == 2);
    CHECK(ElementaryAbelian::from_class(cls[1]).degree == 9);
}

TEST_CASE("shifted units are unipotent") {
    // trivial module: u_alpha is the 1x1 identity
    SpechtRealization one_row(Partition({4}), 2, 1);
    ShiftedUnit flip{ElementaryAbelian::v1_power(2, 1), {1}};
    CHECK(u_alpha_matrix(one_row, flip) == GFpMatrix::identity(&one_row.field(), 1));

    SpechtRealization real(Partition({2, 1}), 3, 1);
    ShiftedUnit unit{ElementaryAbelian::v1_power(3, 1), {1}};
    GFpMatrix u = u_alpha_matrix(real, unit);
    CHECK(u.rows() == 2);
    GFpMatrix d = u - GFpMatrix::identity(&real.field(), 2);
    CHECK_FALSE(d.is_zero());

    ShiftedUnit zero{ElementaryAbelian::v1_power(3, 1), {0}};
    CHECK_THROWS_AS(u_alpha_matrix(real, zero), std::invalid_argument);

    // support must fit inside the degree
    SpechtRealization small(Partition({2, 1}), 3, 1);
    ShiftedUnit wide{ElementaryAbelian::v1_power(3, 2), {1, 1}};
    CHECK_THROWS_AS(u_alpha_matrix(small, wide), std::invalid_argument);
}

TEST_CASE("Jordan profiles") {
    GaloisField F3(3, 1);
    // identity: all blocks of size 1, never projective
    JordanProfile prof = jordan_profile(GFpMatrix::identity(&F3, 4), 3);
    CHECK(prof.blocks == std::vector<long long>{4, 0, 0});
    CHECK_FALSE(prof.projective());

    // regular representation of Z_3: one block of size 3, projective
    GFpMatrix cycle(&F3, 3, 3);
    cycle.set(0, 1, 1);
    cycle.set(1, 2, 1);
    cycle.set(2, 0, 1);
    prof = jordan_profile(cycle, 3);
    CHECK(prof.blocks == std::vector<long long>{0, 0, 1});
    CHECK(prof.projective());
    CHECK(prof.dimension() == 3);

    // S^(2,1) at p = 3 under u_(1): a single size-2 block
    SpechtRealization real(Partition({2, 1}), 3, 1);
    ShiftedUnit unit{ElementaryAbelian::v1_power(3, 1), {1}};
    prof = jordan_profile(u_alpha_matrix(real, unit), 3);
    CHECK(prof.dimension() == 2);
    CHECK(prof.blocks[2] == 0);
    CHECK_FALSE(prof.projective());

    // non-unipotent input is rejected
    GFpMatrix bad(&F3, 1, 1);
    bad.set(0, 0, 2);
    CHECK_THROWS_AS(jordan_profile(bad, 3), std::invalid_argument);
}

TEST_CASE("Jordan projectivity equals the corank test") {
    // For every swept point of a couple of modules: projective iff
    // rank((u-1)^{p-1}) = dim/p.
    for (auto [mu, p] : {std::pair{Partition({3, 1}), 2}, {Partition({2, 2}), 2},
                         {Partition({2, 1, 1}), 2}, {Partition({2, 1}), 3}}) {
        SpechtRealization real(mu, p, 1);
        ElementaryAbelian sub = ElementaryAbelian::v1_power(p, 1);
        ModuleAction action = restrict_action(real, sub);
        SweepResult sweep = sweep_all_points(action);
        for (const auto& point : sweep.points) {
            GFpMatrix u = GFpMatrix::identity(action.field, static_cast<int>(action.dim));
            for (std::size_t i = 0; i < point.alpha.size(); ++i)
                if (point.alpha[i]) {
                    GFpMatrix d = action.generators[i] -
                                  GFpMatrix::identity(action.field, static_cast<int>(action.dim));
                    u = u + d.scaled(point.alpha[i]);
                }
            GFpMatrix nil = u - GFpMatrix::identity(action.field, static_cast<int>(action.dim));
            GFpMatrix power = nil;  // (u-1)^{p-1}
            for (int j = 1; j < p - 1; ++j)
                power = power * nil;
            bool corank_projective =
                action.dim % p == 0 && power.rank() == action.dim / p;
            CHECK(point.projective == corank_projective);
            CHECK(point.profile.dimension() == action.dim);
        }
    }
}

TEST_CASE("rank variety points") {
    // dim 2, p = 3: coprime shortcut gives both nonzero alpha
    RankVarietyPoints pts =
        rank_variety_points(Partition({2, 1}), 3, ElementaryAbelian::v1_power(3, 1), 1);
    CHECK(pts.shortcut_used);
    CHECK(pts.nonprojective.size() == 2);

    // dim 3, p = 2, rank-2 subgroup: all 3 nonzero points
    pts = rank_variety_points(Partition({3, 1}), 2, ElementaryAbelian::v1_power(2, 2), 1);
    CHECK(pts.shortcut_used);
    CHECK(pts.nonprojective.size() == 3);

    // the shortcut must agree with an honest sweep
    SpechtRealization real(Partition({3, 1}), 2, 1);
    ModuleAction action = restrict_action(real, ElementaryAbelian::v1_power(2, 2));
    SweepResult sweep = sweep_all_points(action);
    std::vector<std::vector<std::uint8_t>> honest;
    for (const auto& point : sweep.points)
        if (!point.projective)
            honest.push_back(point.alpha);
    CHECK(honest == pts.nonprojective);
}

TEST_CASE("direct sums take unions of non-projective points") {
    SpechtRealization m(Partition({2, 1}), 3, 1);       // dim 2, everywhere non-projective
    SpechtRealization trivial(Partition({3}), 3, 1);    // dim 1, everywhere non-projective
    ElementaryAbelian sub = ElementaryAbelian::v1_power(3, 1);

    ModuleAction a = restrict_action(m, sub);
    ModuleAction b = restrict_action(trivial, sub);
    // regular module of Z_3: projective at every alpha
    ModuleAction regular;
    regular.field = a.field;
    regular.dim = 3;
    GFpMatrix cycle(a.field, 3, 3);
    cycle.set(0, 1, 1);
    cycle.set(1, 2, 1);
    cycle.set(2, 0, 1);
    regular.generators.push_back(cycle);

    auto points_of = [](const ModuleAction& act) {
        return rank_variety_points(act).nonprojective;
    };
    CHECK(points_of(regular).empty());
    CHECK(points_of(b).size() == 2);

    // regular (+) trivial: union is the trivial module's full point set
    ModuleAction sum = direct_sum(regular, b);
    CHECK(sum.dim == 4);
    CHECK(points_of(sum) == points_of(b));

    // S^(2,1) (+) trivial: 3-divisible total dimension, still all points
    ModuleAction sum2 = direct_sum(a, b);
    CHECK(sum2.dim == 3);
    CHECK_FALSE(rank_variety_points(sum2).shortcut_used);
    CHECK(points_of(sum2) == points_of(a));
}

TEST_CASE("complexity lower bounds from sweeps") {
    // weight-1 case: bound 1
    CHECK(complexity_lower_bound(Partition({2, 1}), 3, max_elem_abelian_classes(3, 3), 1) == 1);
    // (3,1) at p = 2 with the classes of S_4: bound 2 = weight
    CHECK(complexity_lower_bound(Partition({3, 1}), 2, max_elem_abelian_classes(4, 2), 1) == 2);
    // projective module: bound 0
    CHECK(complexity_lower_bound(Partition({3, 2, 1}), 2, max_elem_abelian_classes(6, 2), 1) == 0);
}

TEST_CASE("sweep budget is enforced") {
    Budgets tiny;
    tiny.sweep_points = 2;  // the sweep needs 3
    SpechtRealization real(Partition({2, 2}), 2, 1);
    ModuleAction action = restrict_action(real, ElementaryAbelian::v1_power(2, 2));
    CHECK_THROWS_AS(sweep_all_points(action, tiny), BudgetError);
}

TEST_CASE("sweep CSV layout") {
    SpechtRealization real(Partition({2, 2}), 2, 1);
    ModuleAction action = restrict_action(real, ElementaryAbelian::v1_power(2, 2));
    SweepResult sweep = sweep_all_points(action);
    std::ostringstream os;
    write_sweep_csv(os, sweep);
    std::string csv = os.str();
    CHECK(csv.rfind("alpha,b_1,b_2,projective\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 points
    CHECK(csv.find("0;1,") != std::string::npos);
}
