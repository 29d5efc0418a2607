#include "specht/modrep.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "specht/numeric.hpp"

namespace specht {

namespace {

// Tabloid comparison key: the numbers 1..n listed row by row, each row
// ascending.  Lexicographic order on these keys is the canonical order.
std::vector<std::uint8_t> row_set_key(const std::vector<std::uint8_t>& word, int rows) {
    std::vector<std::uint8_t> key;
    key.reserve(word.size());
    for (int r = 0; r < rows; ++r)
        for (std::size_t x = 0; x < word.size(); ++x)
            if (word[x] == r)
                key.push_back(static_cast<std::uint8_t>(x));
    return key;
}

long long multinomial_dim(const Partition& mu, long long cap) {
    long long remaining = mu.sum();
    long long dim = 1;
    for (int part : mu.parts()) {
        // dim *= C(remaining, part), bailing out beyond the cap.
        long long c = 1;
        for (long long i = 1; i <= part; ++i) {
            c = c * (remaining - part + i) / i;
            if (c > cap)
                return cap + 1;
        }
        remaining -= part;
        if (dim > cap / std::max<long long>(c, 1))
            return cap + 1;
        dim *= c;
    }
    return dim;
}

}  // namespace

PermutationModule::PermutationModule(Partition mu, const Budgets& budgets)
    : mu_(std::move(mu)), n_(static_cast<int>(mu_.sum())) {
    if (n_ > 255)
        throw BudgetError("degree too large for tabloid encoding");
    long long dim = multinomial_dim(mu_, budgets.perm_module_dim);
    if (dim > budgets.perm_module_dim)
        throw BudgetError("permutation module dimension exceeds the budget of " +
                          std::to_string(budgets.perm_module_dim));

    std::vector<std::uint8_t> word(static_cast<std::size_t>(n_));
    std::size_t pos = 0;
    for (int r = 0; r < mu_.rows(); ++r)
        for (int i = 0; i < mu_.part(r); ++i)
            word[pos++] = static_cast<std::uint8_t>(r);

    words_.reserve(static_cast<std::size_t>(dim));
    do {
        words_.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));

    std::sort(words_.begin(), words_.end(),
              [this](const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
                  return row_set_key(a, mu_.rows()) < row_set_key(b, mu_.rows());
              });
}

long long PermutationModule::index_of(const std::vector<std::uint8_t>& word) const {
    auto it = std::lower_bound(
        words_.begin(), words_.end(), word,
        [this](const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
            return row_set_key(a, mu_.rows()) < row_set_key(b, mu_.rows());
        });
    if (it == words_.end() || *it != word)
        throw std::invalid_argument("not a tabloid of this module");
    return it - words_.begin();
}

std::vector<long long> PermutationModule::action(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) < n_)
        throw std::invalid_argument("permutation does not cover the degree");
    std::vector<long long> out(words_.size());
    std::vector<std::uint8_t> moved(static_cast<std::size_t>(n_));
    for (std::size_t idx = 0; idx < words_.size(); ++idx) {
        const auto& w = words_[idx];
        for (int x = 0; x < n_; ++x)
            moved[static_cast<std::size_t>(sigma[static_cast<std::size_t>(x)])] =
                w[static_cast<std::size_t>(x)];
        out[idx] = index_of(moved);
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& mu) {
    std::vector<std::vector<std::vector<int>>> out;
    int n = static_cast<int>(mu.sum());
    std::vector<int> fill(static_cast<std::size_t>(mu.rows()), 0);
    std::vector<std::vector<int>> tableau(static_cast<std::size_t>(mu.rows()));
    for (int i = 0; i < mu.rows(); ++i)
        tableau[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(mu.part(i)));

    auto rec = [&](auto&& self, int value) -> void {
        if (value == n) {
            out.push_back(tableau);
            return;
        }
        for (int i = 0; i < mu.rows(); ++i) {
            int c = fill[static_cast<std::size_t>(i)];
            if (c >= mu.part(i))
                continue;
            if (i > 0 && fill[static_cast<std::size_t>(i - 1)] <= c)
                continue;  // the cell above must already be filled
            tableau[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = value;
            ++fill[static_cast<std::size_t>(i)];
            self(self, value + 1);
            --fill[static_cast<std::size_t>(i)];
        }
    };
    if (n == 0) {
        out.push_back(tableau);
        return out;
    }
    rec(rec, 0);
    return out;
}

namespace {

int permutation_parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inversions;
    return inversions % 2;
}

}  // namespace

SpechtRealization::SpechtRealization(const Partition& mu, int p, int e,
                                     const Budgets& budgets)
    : field_(std::make_shared<GaloisField>(p, e)),
      perm_(std::make_shared<PermutationModule>(mu, budgets)) {
    auto tableaux = standard_tableaux(mu);
    Partition conj = conjugate(mu);

    long long colstab = 1;
    for (int h : conj.parts()) {
        for (long long f = 2; f <= h; ++f)
            colstab *= f;
        if (colstab > budgets.column_stabilizer)
            throw BudgetError("column stabilizer exceeds the budget");
    }
    long long tableau_count = static_cast<long long>(tableaux.size());
    if (colstab > budgets.polytabloid_work / std::max<long long>(tableau_count, 1))
        throw BudgetError("polytabloid construction exceeds the work budget");

    const int n = perm_->degree();
    const long long ambient = perm_->dim();
    GFpMatrix rows(field_.get(), static_cast<int>(tableaux.size()),
                   static_cast<int>(ambient));

    // Per-column index permutations of the column stabilizer, with parities.
    std::vector<std::vector<std::pair<std::vector<int>, int>>> column_perms;
    for (int h : conj.parts()) {
        std::vector<std::pair<std::vector<int>, int>> perms;
        std::vector<int> idx(static_cast<std::size_t>(h));
        std::iota(idx.begin(), idx.end(), 0);
        do {
            perms.emplace_back(idx, permutation_parity(idx));
        } while (std::next_permutation(idx.begin(), idx.end()));
        column_perms.push_back(std::move(perms));
    }

    std::vector<std::uint8_t> word(static_cast<std::size_t>(n));
    const std::uint8_t minus_one = field_->neg(1);
    for (std::size_t t = 0; t < tableaux.size(); ++t) {
        const auto& tableau = tableaux[t];
        std::vector<std::size_t> odometer(column_perms.size(), 0);
        for (;;) {
            int parity = 0;
            for (int j = 0; j < conj.rows(); ++j) {
                const auto& [idx, sign] = column_perms[static_cast<std::size_t>(j)]
                                                      [odometer[static_cast<std::size_t>(j)]];
                parity ^= sign;
                for (int i = 0; i < conj.part(j); ++i) {
                    int value = tableau[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]
                                       [static_cast<std::size_t>(j)];
                    word[static_cast<std::size_t>(value)] = static_cast<std::uint8_t>(i);
                }
            }
            long long col = perm_->index_of(word);
            std::uint8_t term = parity ? minus_one : field_->one();
            rows.set(static_cast<int>(t), static_cast<int>(col),
                     field_->add(rows.at(static_cast<int>(t), static_cast<int>(col)), term));
            // advance the odometer
            std::size_t j = 0;
            while (j < odometer.size()) {
                if (++odometer[j] < column_perms[j].size())
                    break;
                odometer[j] = 0;
                ++j;
            }
            if (j == odometer.size())
                break;
        }
    }

    long long rank = rows.rref_in_place(&pivots_);
    if (rank != static_cast<long long>(tableaux.size()))
        throw std::logic_error("standard polytabloids are not independent");
    if (rank != static_cast<long long>(specht_dimension(mu).value_u64()))
        throw std::logic_error("Specht dimension disagrees with the hook formula");
    basis_ = GFpMatrix(field_.get(), static_cast<int>(rank), static_cast<int>(ambient));
    for (int i = 0; i < static_cast<int>(rank); ++i)
        for (int j = 0; j < static_cast<int>(ambient); ++j)
            basis_.set(i, j, rows.at(i, j));
}

GFpMatrix SpechtRealization::action_on_basis(const std::vector<int>& sigma) const {
    const long long ambient = perm_->dim();
    const int k = static_cast<int>(dim());
    std::vector<long long> index_map = perm_->action(sigma);
    GFpMatrix result(field_.get(), k, k);
    std::vector<std::uint8_t> moved(static_cast<std::size_t>(ambient));
    for (int i = 0; i < k; ++i) {
        std::fill(moved.begin(), moved.end(), 0);
        for (long long t = 0; t < ambient; ++t)
            moved[static_cast<std::size_t>(index_map[static_cast<std::size_t>(t)])] =
                basis_.at(i, static_cast<int>(t));
        // Coefficients against the reduced basis drop out at the pivots.
        for (int j = 0; j < k; ++j)
            result.set(i, j, moved[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(j)])]);
        // The moved row must lie in the span: subtract and compare.
        for (int j = 0; j < k; ++j) {
            std::uint8_t c = result.at(i, j);
            if (c == 0)
                continue;
            for (long long t = 0; t < ambient; ++t) {
                std::size_t idx = static_cast<std::size_t>(t);
                moved[idx] = field_->sub(moved[idx],
                                         field_->mul(c, basis_.at(j, static_cast<int>(t))));
            }
        }
        for (std::uint8_t v : moved)
            if (v != 0)
                throw std::logic_error("group action escapes the polytabloid span");
    }
    return result;
}

ElementaryAbelian ElementaryAbelian::product_of_factors(int p, const std::vector<int>& ms) {
    require_prime(p);
    ElementaryAbelian group;
    group.p = p;
    int offset = 0;
    for (int m : ms) {
        if (m < 1)
            throw std::invalid_argument("factor rank must be positive");
        offset += static_cast<int>(ipow(p, m));
    }
    group.degree = offset;

    offset = 0;
    for (int m : ms) {
        int block = static_cast<int>(ipow(p, m));
        for (int j = 1; j <= m; ++j) {
            std::vector<int> gen(static_cast<std::size_t>(group.degree));
            std::iota(gen.begin(), gen.end(), 0);
            long long stride = ipow(p, m - j);  // digit j in mixed-radix labels
            for (int label = 0; label < block; ++label) {
                long long digit = (label / stride) % p;
                long long image = label + (digit + 1 == p ? -(p - 1) * stride : stride);
                gen[static_cast<std::size_t>(offset + label)] =
                    offset + static_cast<int>(image);
            }
            group.generators.push_back(std::move(gen));
        }
        group.rank += m;
        offset += block;
    }

    std::string desc;
    int i = 0;
    while (i < static_cast<int>(ms.size())) {
        int j = i;
        while (j < static_cast<int>(ms.size()) && ms[static_cast<std::size_t>(j)] == ms[static_cast<std::size_t>(i)])
            ++j;
        if (!desc.empty())
            desc += " x ";
        desc += "V_" + std::to_string(ms[static_cast<std::size_t>(i)]) + "(" + std::to_string(p) + ")";
        if (j - i > 1)
            desc += "^" + std::to_string(j - i);
        i = j;
    }
    group.description = desc.empty() ? "trivial" : desc;
    return group;
}

ElementaryAbelian ElementaryAbelian::v1_power(int p, int k) {
    return product_of_factors(p, std::vector<int>(static_cast<std::size_t>(k), 1));
}

ElementaryAbelian ElementaryAbelian::from_class(const MaxElemAbelianClass& cls) {
    std::vector<int> ms;
    for (std::size_t j = 1; j < cls.coeffs.size(); ++j)
        for (long long c = 0; c < cls.coeffs[j]; ++c)
            ms.push_back(static_cast<int>(j));
    return product_of_factors(cls.p, ms);
}

ElementaryAbelian ElementaryAbelian::from_disjoint_cycles(
    int p, const std::vector<std::vector<int>>& cycles) {
    require_prime(p);
    ElementaryAbelian group;
    group.p = p;
    std::unordered_set<int> seen;
    int max_point = 0;
    for (const auto& cycle : cycles) {
        if (static_cast<int>(cycle.size()) != p)
            throw std::invalid_argument("each generator must be a single p-cycle");
        for (int point : cycle) {
            if (point < 1)
                throw std::invalid_argument("points are 1-based");
            if (!seen.insert(point).second)
                throw std::invalid_argument("cycle supports overlap");
            max_point = std::max(max_point, point);
        }
    }
    group.degree = max_point;
    group.rank = static_cast<int>(cycles.size());
    for (const auto& cycle : cycles) {
        std::vector<int> gen(static_cast<std::size_t>(max_point));
        std::iota(gen.begin(), gen.end(), 0);
        for (std::size_t i = 0; i < cycle.size(); ++i)
            gen[static_cast<std::size_t>(cycle[i] - 1)] =
                cycle[(i + 1) % cycle.size()] - 1;
        group.generators.push_back(std::move(gen));
    }
    group.description = "V_1(" + std::to_string(p) + ")^" + std::to_string(group.rank);
    return group;
}

ModuleAction restrict_action(const SpechtRealization& realization,
                             const ElementaryAbelian& subgroup) {
    if (subgroup.p != realization.p())
        throw std::invalid_argument("subgroup characteristic does not match the field");
    if (subgroup.degree > realization.degree())
        throw std::invalid_argument("subgroup support exceeds the degree of the module");
    ModuleAction action;
    action.field = &realization.field();
    action.dim = realization.dim();
    for (const auto& gen : subgroup.generators) {
        std::vector<int> sigma(gen);
        sigma.resize(static_cast<std::size_t>(realization.degree()));
        std::iota(sigma.begin() + subgroup.degree, sigma.end(), subgroup.degree);
        action.generators.push_back(realization.action_on_basis(sigma));
    }
    return action;
}

ModuleAction direct_sum(const ModuleAction& a, const ModuleAction& b) {
    // Field element codes are identical for equal (p, e), so matrices from
    // distinct but equal field objects combine fine.
    if (a.field->characteristic() != b.field->characteristic() ||
        a.field->degree() != b.field->degree() ||
        a.generators.size() != b.generators.size())
        throw std::invalid_argument("incompatible actions");
    ModuleAction sum;
    sum.field = a.field;
    sum.dim = a.dim + b.dim;
    for (std::size_t g = 0; g < a.generators.size(); ++g) {
        GFpMatrix block(a.field, static_cast<int>(sum.dim), static_cast<int>(sum.dim));
        const GFpMatrix& top = a.generators[g];
        const GFpMatrix& bottom = b.generators[g];
        for (int i = 0; i < top.rows(); ++i)
            for (int j = 0; j < top.cols(); ++j)
                block.set(i, j, top.at(i, j));
        for (int i = 0; i < bottom.rows(); ++i)
            for (int j = 0; j < bottom.cols(); ++j)
                block.set(top.rows() + i, top.cols() + j, bottom.at(i, j));
        sum.generators.push_back(std::move(block));
    }
    return sum;
}

namespace {

GFpMatrix shifted_unit_matrix(const ModuleAction& action,
                              const std::vector<std::uint8_t>& alpha) {
    GFpMatrix u = GFpMatrix::identity(action.field, static_cast<int>(action.dim));
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0)
            continue;
        GFpMatrix d = action.generators[i] -
                      GFpMatrix::identity(action.field, static_cast<int>(action.dim));
        u = u + d.scaled(alpha[i]);
    }
    return u;
}

bool alpha_is_zero(const std::vector<std::uint8_t>& alpha) {
    return std::all_of(alpha.begin(), alpha.end(), [](std::uint8_t a) { return a == 0; });
}

}  // namespace

GFpMatrix u_alpha_matrix(const SpechtRealization& realization, const ShiftedUnit& unit) {
    if (unit.alpha.size() != static_cast<std::size_t>(unit.subgroup.rank))
        throw std::invalid_argument("alpha length must equal the subgroup rank");
    if (alpha_is_zero(unit.alpha))
        throw std::invalid_argument("alpha must be nonzero");
    for (std::uint8_t a : unit.alpha)
        if (a >= realization.field().size())
            throw std::invalid_argument("alpha entry outside the field");
    ModuleAction action = restrict_action(realization, unit.subgroup);
    GFpMatrix u = shifted_unit_matrix(action, unit.alpha);
    // (u - 1)^p = 0 in characteristic p; anything else is a bug.
    GFpMatrix d = u - GFpMatrix::identity(action.field, static_cast<int>(action.dim));
    GFpMatrix power = d;
    for (int i = 1; i < realization.p(); ++i)
        power = power * d;
    if (!power.is_zero())
        throw std::logic_error("shifted unit is not unipotent");
    return u;
}

long long JordanProfile::dimension() const {
    long long d = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j)
        d += static_cast<long long>(j + 1) * blocks[j];
    return d;
}

bool JordanProfile::projective() const {
    for (std::size_t j = 0; j + 1 < blocks.size(); ++j)
        if (blocks[j] != 0)
            return false;
    return true;
}

JordanProfile jordan_profile(const GFpMatrix& unipotent, int p) {
    require_prime(p);
    if (unipotent.rows() != unipotent.cols())
        throw std::invalid_argument("square matrix required");
    const long long d = unipotent.rows();
    GFpMatrix nil = unipotent - GFpMatrix::identity(&unipotent.field(), unipotent.rows());
    // ranks of (u-1)^j for j = 0..p+1
    std::vector<long long> r(static_cast<std::size_t>(p) + 2, 0);
    r[0] = d;
    GFpMatrix power = nil;
    for (int j = 1; j <= p; ++j) {
        r[static_cast<std::size_t>(j)] = power.rank();
        if (j < p)
            power = power * nil;
    }
    if (r[static_cast<std::size_t>(p)] != 0)
        throw std::invalid_argument("matrix is not unipotent of order dividing p");
    JordanProfile profile;
    profile.p = p;
    profile.blocks.resize(static_cast<std::size_t>(p));
    for (int j = 1; j <= p; ++j) {
        long long b = r[static_cast<std::size_t>(j - 1)] - 2 * r[static_cast<std::size_t>(j)] +
                      r[static_cast<std::size_t>(j + 1)];
        if (b < 0)
            throw std::logic_error("negative Jordan multiplicity");
        profile.blocks[static_cast<std::size_t>(j - 1)] = b;
    }
    if (profile.dimension() != d)
        throw std::logic_error("Jordan profile does not account for the dimension");
    return profile;
}

SweepResult sweep_all_points(const ModuleAction& action, const Budgets& budgets) {
    const int q = action.field->size();
    const int k = static_cast<int>(action.generators.size());
    long long total = 1;
    for (int i = 0; i < k; ++i) {
        total *= q;
        if (total - 1 > budgets.sweep_points)
            throw BudgetError("sweep size exceeds the budget");
    }
    SweepResult sweep;
    sweep.p = action.field->characteristic();
    sweep.e = action.field->degree();
    sweep.rank = k;
    sweep.module_dim = action.dim;
    std::vector<std::uint8_t> alpha(static_cast<std::size_t>(k), 0);
    for (long long a = 1; a < total; ++a) {
        long long rest = a;
        for (int i = k - 1; i >= 0; --i) {
            alpha[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rest % q);
            rest /= q;
        }
        GFpMatrix u = shifted_unit_matrix(action, alpha);
        SweepPoint point;
        point.alpha = alpha;
        point.profile = jordan_profile(u, sweep.p);
        point.projective = point.profile.projective();
        sweep.points.push_back(std::move(point));
    }
    return sweep;
}

RankVarietyPoints rank_variety_points(const ModuleAction& action, const Budgets& budgets) {
    RankVarietyPoints result;
    result.module_dim = action.dim;
    const int q = action.field->size();
    const int k = static_cast<int>(action.generators.size());
    if (action.dim % action.field->characteristic() != 0) {
        // Dimension coprime to p: every shifted unit keeps a non-free summand.
        result.shortcut_used = true;
        long long total = 1;
        for (int i = 0; i < k; ++i) {
            total *= q;
            if (total - 1 > budgets.sweep_points)
                throw BudgetError("sweep size exceeds the budget");
        }
        std::vector<std::uint8_t> alpha(static_cast<std::size_t>(k), 0);
        for (long long a = 1; a < total; ++a) {
            long long rest = a;
            for (int i = k - 1; i >= 0; --i) {
                alpha[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rest % q);
                rest /= q;
            }
            result.nonprojective.push_back(alpha);
        }
        return result;
    }
    SweepResult sweep = sweep_all_points(action, budgets);
    for (const auto& point : sweep.points)
        if (!point.projective)
            result.nonprojective.push_back(point.alpha);
    return result;
}

RankVarietyPoints rank_variety_points(const SpechtRealization& realization,
                                      const ElementaryAbelian& subgroup,
                                      const Budgets& budgets) {
    return rank_variety_points(restrict_action(realization, subgroup), budgets);
}

RankVarietyPoints rank_variety_points(const Partition& mu, int p,
                                      const ElementaryAbelian& subgroup, int e,
                                      const Budgets& budgets) {
    SpechtRealization realization(mu, p, e, budgets);
    return rank_variety_points(realization, subgroup, budgets);
}

namespace {

long long alpha_code(const std::vector<std::uint8_t>& alpha, int q) {
    long long code = 0;
    for (std::uint8_t a : alpha)
        code = code * q + a;
    return code;
}

// Largest j such that some j-subset of coordinates spans only non-projective
// points; k when the whole space qualifies.
long long certified_dimension(const RankVarietyPoints& points, int k, int q) {
    long long total = 1;
    for (int i = 0; i < k; ++i)
        total *= q;
    if (static_cast<long long>(points.nonprojective.size()) == total - 1)
        return k;
    std::unordered_set<long long> bad;
    for (const auto& alpha : points.nonprojective)
        bad.insert(alpha_code(alpha, q));
    for (int j = k - 1; j >= 1; --j) {
        std::vector<int> pick(static_cast<std::size_t>(j));
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            long long subtotal = 1;
            for (int i = 0; i < j; ++i)
                subtotal *= q;
            bool all_bad = true;
            std::vector<std::uint8_t> alpha(static_cast<std::size_t>(k), 0);
            for (long long a = 1; a < subtotal && all_bad; ++a) {
                long long rest = a;
                std::fill(alpha.begin(), alpha.end(), 0);
                for (int i = j - 1; i >= 0; --i) {
                    alpha[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])] =
                        static_cast<std::uint8_t>(rest % q);
                    rest /= q;
                }
                all_bad = bad.count(alpha_code(alpha, q)) > 0;
            }
            if (all_bad)
                return j;
            // next combination
            int i = j - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == k - j + i)
                --i;
            if (i < 0)
                break;
            ++pick[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < j; ++t)
                pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    return 0;
}

}  // namespace

long long complexity_lower_bound(const Partition& mu, int p,
                                 const std::vector<MaxElemAbelianClass>& classes, int e,
                                 const Budgets& budgets) {
    SpechtRealization realization(mu, p, e, budgets);
    const int q = realization.field().size();
    long long best = 0;
    for (const auto& cls : classes) {
        ElementaryAbelian subgroup = ElementaryAbelian::from_class(cls);
        if (subgroup.rank == 0)
            continue;
        RankVarietyPoints points = rank_variety_points(realization, subgroup, budgets);
        best = std::max(best, certified_dimension(points, subgroup.rank, q));
    }
    return best;
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
    os << "alpha";
    for (int j = 1; j <= sweep.p; ++j)
        os << ",b_" << j;
    os << ",projective\n";
    for (const auto& point : sweep.points) {
        for (std::size_t i = 0; i < point.alpha.size(); ++i) {
            if (i > 0)
                os << ";";
            os << static_cast<int>(point.alpha[i]);
        }
        for (long long b : point.profile.blocks)
            os << "," << b;
        os << "," << (point.projective ? 1 : 0) << "\n";
    }
}

}  // namespace specht
