#include "vest/cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "vest/brute_force.hpp"
#include "vest/dp.hpp"
#include "vest/json_io.hpp"
#include "vest/reductions.hpp"
#include "vest/verify.hpp"

namespace vest::cli {
namespace {

std::string cert_path(const std::string& out) {
    const std::string suffix = ".json";
    if (out.size() > suffix.size() && out.ends_with(suffix)) {
        return out.substr(0, out.size() - suffix.size()) + ".cert.json";
    }
    return out + ".cert.json";
}

// Smallest p such that every transform has only zero rows from p on.
int infer_row_bound(const VestInstance& inst) {
    int p = 0;
    for (const auto& t : inst.transforms) {
        for (int i = inst.dim - 1; i >= p; --i) {
            bool nonzero = false;
            for (int j = 0; j < inst.dim && !nonzero; ++j) nonzero = !t.at(i, j).is_zero();
            if (nonzero) {
                p = i + 1;
                break;
            }
        }
    }
    return p;
}

struct GenArgs {
    std::string reduction;
    std::string in;
    std::string out;
    std::int64_t k = 0;
    bool has_k = false;
    std::string style = "counting";
    std::string field = "z2";
};

std::int64_t need_k(const GenArgs& args, const std::optional<std::int64_t>& file_k,
                    std::ostream& err, bool* ok) {
    if (args.has_k) return args.k;
    if (file_k) return *file_k;
    err << "error: " << args.reduction << " needs --k (and the input carries none)\n";
    *ok = false;
    return 0;
}

int run_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
    using namespace vest::reductions;
    std::string produced;
    ReductionCertificate cert;
    bool ok = true;

    if (args.reduction == "dominating-set") {
        const Graph g = load_graph(args.in);
        const std::int64_t k = need_k(args, std::nullopt, err, &ok);
        if (!ok) return 2;
        const FieldTag tag =
            args.field == "rational" ? FieldTag::rational() : FieldTag::prime(2);
        auto red = dominating_set_to_vest(
            g, k, args.style == "decision" ? DominatingStyle::Decision : DominatingStyle::Counting,
            tag);
        produced = instance_to_json(red.instance, red.k);
        cert = std::move(red.certificate);
    } else if (args.reduction == "k-product") {
        const SetSystem sys = load_set_system(args.in);
        const std::int64_t k = need_k(args, std::nullopt, err, &ok);
        if (!ok) return 2;
        auto red = exact_cover_to_k_product(sys, k);
        produced = rational_set_to_json("k_product_with_repetition_target_1", red.numbers, red.k);
        cert = std::move(red.certificate);
    } else if (args.reduction == "at-most-k-sum") {
        const SetSystem sys = load_set_system(args.in);
        const std::int64_t k = need_k(args, std::nullopt, err, &ok);
        if (!ok) return 2;
        auto red = exact_cover_to_at_most_k_sum(sys, k);
        produced = integer_set_to_json("at_most_k_sum_with_repetition_target_1", red.numbers,
                                       red.k);
        cert = std::move(red.certificate);
    } else if (args.reduction == "sum-to-zero-product") {
        const auto a = load_integer_set(args.in);
        const std::int64_t k = need_k(args, std::nullopt, err, &ok);
        if (!ok) return 2;
        auto red = sum_to_zero_matrix_product(a, k);
        produced = instance_to_json(
            make_matrix_target_instance(red.matrices, TargetVariant::MatrixZero), red.k);
        cert = std::move(red.certificate);
    } else if (args.reduction == "sum-to-vest") {
        const auto a = load_integer_set(args.in);
        const std::int64_t k = need_k(args, std::nullopt, err, &ok);
        if (!ok) return 2;
        auto red = sum_to_vest_identity_s(a, k);
        produced = instance_to_json(red.instance, red.k);
        cert = std::move(red.certificate);
    } else if (args.reduction == "eliminate-s") {
        const InstanceFile file = load_instance(args.in);
        const std::int64_t k = need_k(args, file.k, err, &ok);
        if (!ok) return 2;
        auto red = eliminate_s(file.instance, k);
        produced = instance_to_json(red.instance, red.k);
        cert = std::move(red.certificate);
    } else if (args.reduction == "zero-product-to-vest") {
        const InstanceFile file = load_instance(args.in);
        if (file.instance.target != TargetVariant::MatrixZero) {
            throw MalformedInputError("input must be a matrix_zero instance");
        }
        const std::int64_t k = need_k(args, file.k, err, &ok);
        if (!ok) return 2;
        auto red = zero_product_to_vest(file.instance.transforms, k);
        produced = instance_to_json(red.instance, red.k);
        cert = std::move(red.certificate);
    } else if (args.reduction == "vest-to-zero-product") {
        const InstanceFile file = load_instance(args.in);
        const std::int64_t k = need_k(args, file.k, err, &ok);
        if (!ok) return 2;
        auto red = vest_to_zero_product(file.instance, k);
        produced = instance_to_json(
            make_matrix_target_instance(red.matrices, TargetVariant::MatrixZero), red.k);
        cert = std::move(red.certificate);
    } else if (args.reduction == "pcp") {
        const PcpInstance pcp = load_pcp(args.in);
        auto red = pcp_to_vest(pcp);
        produced = instance_to_json(red.instance, red.k);
        cert = std::move(red.certificate);
    } else {
        err << "error: unknown reduction '" << args.reduction << "'\n";
        return 2;
    }

    write_file(args.out, produced);
    const std::string cpath = cert_path(args.out);
    write_file(cpath, certificate_to_json(cert));
    out << "wrote " << args.out << "\n";
    out << "wrote " << cpath << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact solvers, minimal-k search, and hardness-construction generators for "
                 "counting vanishing transformation sequences"};
    app.name("vest");
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate an instance plus certificate from a source "
                                          "problem");
    gen->add_option("reduction", gen_args.reduction, "construction to run")
        ->required()
        ->check(CLI::IsMember(verify::reduction_names()));
    gen->add_option("--in", gen_args.in, "source problem file")->required();
    gen->add_option("--out", gen_args.out, "instance output path")->required();
    auto* gen_k = gen->add_option("--k", gen_args.k, "source parameter k");
    gen->add_option("--style", gen_args.style, "dominating-set gadget style")
        ->capture_default_str()
        ->check(CLI::IsMember({"counting", "decision"}));
    gen->add_option("--field", gen_args.field, "dominating-set field")
        ->capture_default_str()
        ->check(CLI::IsMember({"z2", "rational"}));

    std::string solve_in, solve_method = "brute";
    std::int64_t solve_k = 0;
    int solve_p = -1;
    std::uint64_t solve_budget = kDefaultBudget;
    bool solve_trace = false;
    unsigned solve_threads = 1;
    auto* solve = app.add_subcommand("solve", "compute M_k for an instance file");
    solve->add_option("--in", solve_in, "instance JSON file")->required();
    auto* solve_k_opt = solve->add_option("--k", solve_k, "sequence length k");
    solve->add_option("--method", solve_method, "brute, dp, or dp-rows")
        ->capture_default_str()
        ->check(CLI::IsMember({"brute", "dp", "dp-rows"}));
    solve->add_option("--p", solve_p, "row bound for dp-rows (inferred when omitted)");
    solve->add_option("--budget", solve_budget, "enumeration budget in steps")
        ->capture_default_str();
    solve->add_flag("--trace", solve_trace, "print per-level table sizes");
    solve->add_option("--threads", solve_threads, "worker cap for brute counting")
        ->capture_default_str();

    std::string mink_in;
    int mink_p = -1;
    auto* mink = app.add_subcommand("min-k", "smallest k with M_k > 0, or none");
    mink->add_option("--in", mink_in, "instance JSON file")->required();
    mink->add_option("--p", mink_p, "row bound for the row-restricted table");

    std::string verify_name;
    int verify_trials = 20;
    int verify_max_size = 4;
    std::uint64_t verify_seed = 42;
    auto* verify_cmd = app.add_subcommand("verify-reduction",
                                          "cross-validate a generator against oracles");
    verify_cmd->add_option("reduction", verify_name, "construction to validate")
        ->required()
        ->check(CLI::IsMember(verify::reduction_names()));
    verify_cmd->add_option("--trials", verify_trials, "number of random trials")
        ->capture_default_str();
    verify_cmd->add_option("--max-size", verify_max_size, "size cap for random sources")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "random seed")->capture_default_str();

    std::string bench_in;
    std::int64_t bench_kmax = 0;
    std::uint64_t bench_budget = kDefaultBudget;
    auto* bench = app.add_subcommand("bench", "per-k timings for brute vs dp, as CSV");
    bench->add_option("--in", bench_in, "instance JSON file")->required();
    bench->add_option("--kmax", bench_kmax, "largest k to time")->required();
    bench->add_option("--budget", bench_budget, "enumeration budget for brute force")
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("vest");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            gen_args.has_k = gen_k->count() > 0;
            return run_gen(gen_args, out, err);
        }

        if (solve->parsed()) {
            const InstanceFile file = load_instance(solve_in);
            std::int64_t k = 0;
            if (solve_k_opt->count() > 0) {
                k = solve_k;
            } else if (file.k) {
                k = *file.k;
            } else {
                err << "error: the instance carries no k; pass --k\n";
                return 2;
            }
            if (k < 0) {
                err << "error: k must be nonnegative\n";
                return 2;
            }
            CountValue result;
            if (solve_method == "brute") {
                result = mk_bruteforce(file.instance, static_cast<std::uint64_t>(k),
                                       {solve_budget, solve_threads});
            } else if (solve_method == "dp") {
                DpOptions opts;
                if (solve_trace) opts.trace = &out;
                result = count_mk_dp(file.instance, static_cast<std::uint64_t>(k), opts);
            } else {
                const int p = solve_p >= 0 ? solve_p : infer_row_bound(file.instance);
                DpOptions opts;
                if (solve_trace) opts.trace = &out;
                result = count_mk_dp_rows(file.instance, p, static_cast<std::uint64_t>(k), opts);
            }
            out << "M_k = " << result.get_str() << "\n";
            return 0;
        }

        if (mink->parsed()) {
            const InstanceFile file = load_instance(mink_in);
            MinKOptions opts;
            if (mink_p >= 0) opts.p_rows = mink_p;
            const auto result = min_k(file.instance, opts);
            if (result) {
                out << "min_k = " << *result << "\n";
            } else {
                out << "min_k = none\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            const auto report =
                verify::verify_reduction(verify_name, verify_trials, verify_max_size, verify_seed);
            for (const auto& line : report.lines) out << line << "\n";
            out << "summary: " << report.passed << "/" << (report.passed + report.failed)
                << " passed\n";
            return report.ok() ? 0 : 1;
        }

        if (bench->parsed()) {
            const InstanceFile file = load_instance(bench_in);
            if (bench_kmax < 1) {
                err << "error: --kmax must be >= 1\n";
                return 2;
            }
            if (!file.instance.tag.is_prime()) {
                throw InfiniteFieldError("bench compares against the value table, which needs a "
                                         "finite field");
            }
            out << "k,method,millis,count\n";
            bool brute_alive = true;
            for (std::int64_t k = 1; k <= bench_kmax; ++k) {
                const auto timed = [&](auto&& fn) {
                    const auto start = std::chrono::steady_clock::now();
                    CountValue count = fn();
                    const auto stop = std::chrono::steady_clock::now();
                    const double millis =
                        std::chrono::duration<double, std::milli>(stop - start).count();
                    return std::pair<double, CountValue>(millis, std::move(count));
                };
                if (brute_alive) {
                    try {
                        auto [ms, count] = timed([&] {
                            return mk_bruteforce(file.instance, static_cast<std::uint64_t>(k),
                                                 {bench_budget, 1});
                        });
                        out << k << ",brute," << std::fixed << std::setprecision(3) << ms << ","
                            << count.get_str() << "\n";
                    } catch (const BudgetExceededError&) {
                        brute_alive = false;
                        err << "brute skipped from k = " << k << " on (budget exceeded)\n";
                    }
                }
                auto [ms, count] = timed([&] {
                    return count_mk_dp(file.instance, static_cast<std::uint64_t>(k));
                });
                out << k << ",dp," << std::fixed << std::setprecision(3) << ms << ","
                    << count.get_str() << "\n";
            }
            return 0;
        }
    } catch (const BudgetExceededError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const MalformedInputError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

} // namespace vest::cli
