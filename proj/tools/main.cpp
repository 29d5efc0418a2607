// specht: exact partition/subgroup combinatorics for symmetric groups,
// vertex classification of Specht modules, and small-scale verification by
// linear algebra over finite fields.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_util.hpp"
#include "specht/classifier.hpp"
#include "specht/enumeration.hpp"
#include "specht/json_io.hpp"
#include "specht/modrep.hpp"
#include "specht/numeric.hpp"

using namespace specht;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

int worker_count(int flag_value) {
    if (flag_value > 0)
        return flag_value;
    if (const char* env = std::getenv("SPECHT_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0)
            return w;
    }
    return 1;
}

ordered_json parts_json(const Partition& mu) {
    ordered_json arr = ordered_json::array();
    for (int part : mu.parts())
        arr.push_back(part);
    return arr;
}

/* Run check(n) for n = 0..max_n on a small worker pool; failure messages come
 * back ordered by n, so output does not depend on the worker count.
 */
std::vector<std::string> run_suite(long long max_n, int workers,
                                   const std::function<std::vector<std::string>(long long)>& check) {
    std::vector<std::vector<std::string>> slots(static_cast<std::size_t>(max_n) + 1);
    std::atomic<long long> next{0};
    auto work = [&] {
        for (;;) {
            long long n = next.fetch_add(1);
            if (n > max_n)
                return;
            slots[static_cast<std::size_t>(n)] = check(n);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    std::vector<std::string> failures;
    for (auto& slot : slots)
        failures.insert(failures.end(), slot.begin(), slot.end());
    return failures;
}

int report_suite(const std::string& name, const std::vector<std::string>& failures) {
    if (failures.empty()) {
        std::cout << name << ": ok\n";
        return kExitOk;
    }
    std::cout << name << ": " << failures.size() << " counterexample(s)\n";
    std::size_t shown = 0;
    for (const auto& f : failures) {
        std::cout << "  " << f << "\n";
        if (++shown == 10) {
            std::cout << "  ...\n";
            break;
        }
    }
    return kExitCounterexample;
}

// Brute-force route of the feasibility gate, used by `verify gate`.
std::vector<AbelianPType> gate_by_inequalities(int p, long long w, long long s) {
    std::vector<AbelianPType> survivors;
    if (w == 0) {
        if (s == 0)
            survivors.push_back(AbelianPType{p, {}});
        return survivors;
    }
    for (const auto& type : enumerate_abelian_types(p, p * w)) {
        long long eq2 = s;
        for (int e : type.exponents)
            eq2 += ipow(p, e - 1) - e;
        if (abelian_type_embeds(type, p * w) && s + w <= type.exponent_sum() && eq2 <= 0)
            survivors.push_back(type);
    }
    std::sort(survivors.begin(), survivors.end());
    return survivors;
}

int cmd_info(const Partition& mu, int p, const std::string& format) {
    FactoredNat dim = specht_dimension(mu);
    if (format == "json") {
        ordered_json obj;
        obj["mu"] = parts_json(mu);
        obj["canonical"] = to_exponent_string(mu);
        obj["n"] = mu.sum();
        obj["dim"] = {{"decimal", dim.decimal_string()}, {"factored", dim.factored_string()}};
        ordered_json hooks = ordered_json::array();
        for (const auto& row : hook_grid(mu).rows)
            hooks.push_back(row);
        obj["hooks"] = hooks;
        ordered_json regular;
        for (int q : {2, 3, 5, 7})
            regular[std::to_string(q)] = is_p_regular(mu, q);
        obj["regular"] = regular;
        if (p > 0) {
            CoreWeight cw = m_core_weight(mu, p);
            obj["p"] = p;
            obj["core"] = parts_json(cw.core);
            obj["weight"] = cw.weight;
        }
        std::cout << obj.dump() << "\n";
        return kExitOk;
    }
    std::cout << "partition  " << to_exponent_string(mu) << "\n";
    std::cout << "n          " << mu.sum() << "\n";
    std::cout << "dim        " << dim.decimal_string() << " = " << dim.factored_string() << "\n";
    HookGrid grid = hook_grid(mu);
    std::string label = "hooks     ";
    if (grid.rows.empty())
        std::cout << label << " (empty diagram)\n";
    for (const auto& row : grid.rows) {
        std::cout << label;
        label.assign(label.size(), ' ');
        for (int h : row)
            std::cout << " " << h;
        std::cout << "\n";
    }
    for (int q : {2, 3, 5, 7})
        std::cout << q << "-regular  " << (is_p_regular(mu, q) ? "yes" : "no") << "\n";
    if (p > 0) {
        CoreWeight cw = m_core_weight(mu, p);
        std::cout << p << "-core     " << to_exponent_string(cw.core) << "\n";
        std::cout << p << "-weight   " << cw.weight << "\n";
    }
    return kExitOk;
}

int cmd_core(const Partition& mu, int m, const std::string& format) {
    CoreWeight cw = m_core_weight(mu, m);
    if (format == "json") {
        ordered_json obj;
        obj["mu"] = parts_json(mu);
        obj["m"] = m;
        obj["core"] = parts_json(cw.core);
        obj["weight"] = cw.weight;
        std::cout << obj.dump() << "\n";
    } else {
        std::cout << "core    " << to_exponent_string(cw.core) << "\n";
        std::cout << "weight  " << cw.weight << "\n";
    }
    return kExitOk;
}

int cmd_expand(const Partition& mu, int p, const std::string& format) {
    PAdicExpansion expansion = p_adic_expansion(mu, p);
    Partition r = rho(mu, p);
    if (format == "json") {
        ordered_json obj;
        obj["mu"] = parts_json(mu);
        obj["p"] = p;
        ordered_json layers = ordered_json::array();
        for (const auto& layer : expansion.layers)
            layers.push_back(parts_json(layer));
        obj["layers"] = layers;
        obj["rho"] = parts_json(r);
        std::cout << obj.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < expansion.layers.size(); ++i)
            std::cout << "layer " << i << "  " << to_exponent_string(expansion.layers[i])
                      << "\n";
        std::cout << "rho      " << to_exponent_string(r) << "\n";
    }
    return kExitOk;
}

int cmd_classify(const SpechtContext& ctx, const std::string& format) {
    VertexReport report = classify(ctx);
    if (format == "json") {
        std::cout << to_json(report) << "\n";
        return kExitOk;
    }
    std::cout << "partition   " << to_exponent_string(ctx.mu) << "\n";
    std::cout << "status      " << status_name(report.status) << "\n";
    std::cout << "vertex      " << report.vertex << "\n";
    std::cout << "complexity  [" << report.complexity.lo << "," << report.complexity.hi
              << "]\n";
    std::cout << "block       core " << to_exponent_string(report.block.p_core) << ", weight "
              << report.block.weight << ", defect " << report.block.defect_group << "\n";
    if (!report.note.empty())
        std::cout << "note        " << report.note << "\n";
    for (const auto& c : report.citations)
        std::cout << "because     " << c << "\n";
    return kExitOk;
}

int cmd_enumerate(long long n, int p, bool two_regular, bool four_core, bool p2_core,
                  bool pxp, const std::string& format) {
    if ((p2_core || pxp) && p <= 0)
        throw CLI::ValidationError("--p2-core and --pxp need -p");
    auto filter = [&](const Partition& mu) {
        if (two_regular && !is_p_regular(mu, 2))
            return false;
        if (four_core && count_hooks_divisible(mu, 4) != 0)
            return false;
        if (p2_core && count_hooks_divisible(mu, p * p) != 0)
            return false;
        if (pxp && !is_pxp(mu, p))
            return false;
        return true;
    };
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for_each_partition(n, [&](const Partition& mu) {
            if (filter(mu))
                arr.push_back(parts_json(mu));
        });
        std::cout << arr.dump() << "\n";
    } else {
        for_each_partition(n, [&](const Partition& mu) {
            if (filter(mu))
                std::cout << to_exponent_string(mu) << "\n";
        });
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, long long max_n, int workers) {
    if (suite == "hook-weight") {
        long long bound = max_n > 0 ? max_n : 25;
        auto failures = run_suite(bound, workers, [](long long n) {
            std::vector<std::string> bad;
            for_each_partition(n, [&bad](const Partition& mu) {
                for (int m = 2; m <= 9; ++m)
                    if (count_hooks_divisible(mu, m) != m_core_weight(mu, m).weight)
                        bad.push_back(to_exponent_string(mu) + " m=" + std::to_string(m));
            });
            return bad;
        });
        return report_suite("hook-weight", failures);
    }
    if (suite == "lemma-4core") {
        long long bound = max_n > 0 ? max_n : 40;
        auto failures = run_suite(bound, workers, [](long long n) {
            std::vector<std::string> bad;
            for_each_partition(n, [&bad](const Partition& mu) {
                bool expected = is_p_regular(mu, 2) && count_hooks_divisible(mu, 4) == 0;
                if (is_two_regular_four_core_shape(mu) != expected)
                    bad.push_back(to_exponent_string(mu));
            });
            return bad;
        });
        return report_suite("lemma-4core", failures);
    }
    if (suite == "dim-oracle") {
        long long bound = max_n > 0 ? max_n : 10;
        auto failures = run_suite(bound, workers, [](long long n) {
            std::vector<std::string> bad;
            for_each_partition(n, [&bad](const Partition& mu) {
                if (standard_tableaux(mu).size() != specht_dimension(mu).value_u64())
                    bad.push_back(to_exponent_string(mu));
            });
            return bad;
        });
        return report_suite("dim-oracle", failures);
    }
    if (suite == "expansion") {
        long long bound = max_n > 0 ? max_n : 25;
        auto failures = run_suite(bound, workers, [](long long n) {
            std::vector<std::string> bad;
            for_each_partition(n, [&bad](const Partition& mu) {
                for (int p : {2, 3, 5}) {
                    PAdicExpansion e = p_adic_expansion(mu, p);
                    bool ok = e.reconstruct() == mu && rho(mu, p).sum() == mu.sum();
                    for (const auto& layer : e.layers) {
                        for (int i = 0; ok && i + 1 < layer.rows(); ++i)
                            ok = layer.part(i) - layer.part(i + 1) < p;
                        if (ok && !layer.empty())
                            ok = layer.part(layer.rows() - 1) < p;
                    }
                    if (!ok)
                        bad.push_back(to_exponent_string(mu) + " p=" + std::to_string(p));
                }
            });
            return bad;
        });
        return report_suite("expansion", failures);
    }
    if (suite == "gate") {
        long long bound = max_n > 0 ? max_n : 20;
        auto failures = run_suite(bound, workers, [](long long n) {
            std::vector<std::string> bad;
            for_each_partition(n, [&bad](const Partition& mu) {
                for (int p : {2, 3, 5}) {
                    FeasibilityResult r = feasible_abelian_types(mu, p);
                    if (r.types != gate_by_inequalities(p, r.weight, r.slack))
                        bad.push_back(to_exponent_string(mu) + " p=" + std::to_string(p));
                    if (r.slack > 0 && !r.types.empty())
                        bad.push_back(to_exponent_string(mu) + " p=" + std::to_string(p) +
                                      " (slack)");
                }
            });
            return bad;
        });
        return report_suite("gate", failures);
    }
    throw CLI::ValidationError("unknown suite: " + suite);
}

int cmd_sweep(const Partition& mu, int p, const std::string& spec, int e,
              const std::string& out_path, const Budgets& budgets) {
    ElementaryAbelian subgroup = cli::parse_subgroup_spec(spec, p);
    SpechtRealization realization(mu, p, e, budgets);
    ModuleAction action = restrict_action(realization, subgroup);
    SweepResult sweep = sweep_all_points(action, budgets);
    if (out_path.empty()) {
        write_sweep_csv(std::cout, sweep);
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os)
            throw CLI::ValidationError("cannot open " + out_path);
        write_sweep_csv(os, sweep);
    }
    return kExitOk;
}

int cmd_bound(const SpechtContext& ctx, int e, const Budgets& budgets,
              const std::string& format) {
    VertexReport report = classify(ctx);
    long long verifier = complexity_lower_bound(
        ctx.mu, ctx.p, max_elem_abelian_classes(std::max<long long>(ctx.mu.sum(), 1), ctx.p),
        e, budgets);
    ComplexityInterval merged = report.complexity;
    merged.lo = std::max(merged.lo, verifier);
    if (merged.lo > merged.hi) {
        std::cerr << "verifier lower bound " << verifier
                  << " exceeds the upper bound; this should be impossible\n";
        return kExitCounterexample;
    }
    if (format == "json") {
        ordered_json obj;
        obj["mu"] = parts_json(ctx.mu);
        obj["p"] = ctx.p;
        obj["classifier"] = {{"lo", report.complexity.lo}, {"hi", report.complexity.hi}};
        obj["verifier_lower_bound"] = verifier;
        obj["merged"] = {{"lo", merged.lo}, {"hi", merged.hi}};
        std::cout << obj.dump() << "\n";
    } else {
        std::cout << "classifier  [" << report.complexity.lo << "," << report.complexity.hi
                  << "]\n";
        std::cout << "verifier    >= " << verifier << "\n";
        std::cout << "merged      [" << merged.lo << "," << merged.hi << "]\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Specht module combinatorics over symmetric groups"};
    app.require_subcommand(1);

    std::string mu_text, format = "table", suite, subgroup_spec, out_path;
    int p = 0, m = 0, e = 1, workers = 0;
    long long n = 0, max_n = 0;
    bool simple = false, indecomposable = false;
    bool two_regular = false, four_core = false, p2_core = false, pxp = false;
    Budgets budgets;

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: table or json")
            ->check(CLI::IsMember({"table", "json"}));
    };
    auto add_budgets = [&budgets](CLI::App* cmd) {
        cmd->add_option("--budget-dim", budgets.perm_module_dim,
                        "largest admissible tabloid module dimension");
        cmd->add_option("--budget-sweep", budgets.sweep_points,
                        "largest admissible sweep size");
        cmd->add_option("--budget-colstab", budgets.column_stabilizer,
                        "largest admissible column stabilizer");
    };

    CLI::App* info = app.add_subcommand("info", "hooks, dimension, regularity flags");
    info->add_option("mu", mu_text, "partition literal");
    info->add_option("-p", p, "also report the p-core and p-weight");
    add_format(info);

    CLI::App* core = app.add_subcommand("core", "m-core and m-weight");
    core->add_option("mu", mu_text, "partition literal");
    core->add_option("-m", m, "modulus")->required();
    add_format(core);

    CLI::App* expand = app.add_subcommand("expand", "p-adic expansion and rho");
    expand->add_option("mu", mu_text, "partition literal");
    expand->add_option("-p", p, "prime")->required();
    add_format(expand);

    CLI::App* classify_cmd = app.add_subcommand("classify", "vertex classification report");
    classify_cmd->add_option("mu", mu_text, "partition literal");
    classify_cmd->add_option("-p", p, "prime")->required();
    classify_cmd->add_flag("--simple", simple, "assert that the Specht module is simple");
    classify_cmd->add_flag("--indecomposable", indecomposable,
                           "assert indecomposability when the automatic rule cannot");
    classify_cmd->preparse_callback([&format](std::size_t) { format = "json"; });
    add_format(classify_cmd);

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "filtered partition stream");
    enumerate_cmd->add_option("n", n, "size of the partitions")->required();
    enumerate_cmd->add_option("-p", p, "prime for the p-dependent filters");
    enumerate_cmd->add_flag("--two-regular", two_regular, "keep 2-regular partitions");
    enumerate_cmd->add_flag("--four-core", four_core, "keep 4-cores");
    enumerate_cmd->add_flag("--p2-core", p2_core, "keep p^2-cores");
    enumerate_cmd->add_flag("--pxp", pxp, "keep (p x p)-partitions");
    add_format(enumerate_cmd);

    CLI::App* verify = app.add_subcommand("verify", "exhaustive property suites");
    verify->add_option("suite", suite, "hook-weight|lemma-4core|dim-oracle|expansion|gate")
        ->required();
    verify->add_option("--max-n", max_n, "largest partition size to sweep");
    verify->add_option("--workers", workers, "worker threads (default: SPECHT_WORKERS or 1)");

    CLI::App* sweep = app.add_subcommand("sweep", "rank-variety sweep as CSV");
    sweep->add_option("mu", mu_text, "partition literal");
    sweep->add_option("-p", p, "prime")->required();
    sweep->add_option("--subgroup", subgroup_spec, "elementary abelian spec, e.g. V1^3")
        ->required();
    sweep->add_option("-e", e, "field extension degree (1..3)");
    sweep->add_option("--out", out_path, "write the CSV here instead of stdout");
    add_budgets(sweep);

    CLI::App* bound = app.add_subcommand("bound", "merged complexity interval");
    bound->add_option("mu", mu_text, "partition literal");
    bound->add_option("-p", p, "prime")->required();
    bound->add_flag("--simple", simple, "assert that the Specht module is simple");
    bound->add_option("-e", e, "field extension degree (1..3)");
    add_budgets(bound);
    add_format(bound);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (info->parsed())
            return cmd_info(cli::parse_partition_literal(mu_text), p, format);
        if (core->parsed())
            return cmd_core(cli::parse_partition_literal(mu_text), m, format);
        if (expand->parsed())
            return cmd_expand(cli::parse_partition_literal(mu_text), p, format);
        if (classify_cmd->parsed() || bound->parsed()) {
            SpechtContext ctx;
            ctx.mu = cli::parse_partition_literal(mu_text);
            ctx.p = p;
            ctx.known_simple = simple;
            if (indecomposable)
                ctx.known_indecomposable = true;
            if (classify_cmd->parsed())
                return cmd_classify(ctx, format);
            return cmd_bound(ctx, e, budgets, format);
        }
        if (enumerate_cmd->parsed())
            return cmd_enumerate(n, p, two_regular, four_core, p2_core, pxp, format);
        if (verify->parsed())
            return cmd_verify(suite, max_n, worker_count(workers));
        if (sweep->parsed())
            return cmd_sweep(cli::parse_partition_literal(mu_text), p, subgroup_spec, e,
                             out_path, budgets);
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const BudgetError& err) {
        std::cerr << "budget error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const cli::ParseError& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
