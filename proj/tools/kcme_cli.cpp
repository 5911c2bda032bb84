// kcme: command-line front end for the k-center with missing entries solver.
//
//   kcme solve  --algo {vcfpt|brute} --input FILE [--witness FILE] [--deterministic]
//               [--symmetry-pruning] [--threads N]
//   kcme verify --input FILE --solution FILE
//   kcme gen    --n N --m M --k K --d D --vc V --split S --flips F --seed X --out FILE
//   kcme stats  --input FILE
//   kcme bench  --dir DIR --algo A --out CSV [--jobs N]
//   kcme nucs   --input FILE
//
// Exit codes: 0 = yes / ok, 1 = no / violations / infeasible, 2 = input error.
// KCME_LOG selects log verbosity: quiet, info (default), debug.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "kcme/kcme.hpp"

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

void configure_logging() {
    auto logger = spdlog::stderr_color_mt("kcme");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    const char* env = std::getenv("KCME_LOG");
    const std::string level = env ? env : "info";
    if (level == "quiet") {
        spdlog::set_level(spdlog::level::off);
    } else if (level == "debug") {
        spdlog::set_level(spdlog::level::debug);
    } else {
        spdlog::set_level(spdlog::level::info);
    }
}

kcme::Instance read_instance(const std::string& path) {
    if (path == "-") return kcme::parse_instance(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return kcme::parse_instance(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

const char* fast_path_name(kcme::FastPath fp) {
    switch (fp) {
        case kcme::FastPath::RadiusCoversLength: return "d>=m";
        case kcme::FastPath::SingletonClusters: return "k>=n";
        default: return "none";
    }
}

struct SolveArgs {
    std::string algo = "vcfpt";
    std::string input;
    std::string witness;
    bool deterministic = false;
    bool symmetry = false;
    std::size_t threads = 0;
};

int run_solve(const SolveArgs& a) {
    const auto inst = read_instance(a.input);
    const auto algo = kcme::parse_algo(a.algo);
    kcme::SolverOptions opts;
    opts.symmetry_pruning = a.symmetry;
    opts.workers = a.deterministic ? 1 : (a.threads > 0 ? a.threads : std::max(1U, std::thread::hardware_concurrency()));

    const auto dec = kcme::solve(inst, algo, opts);
    const auto& s = dec.stats;
    spdlog::info("n={} m={} k={} d={} decision={}", inst.n(), inst.m(), inst.k(), inst.d(),
                 dec.feasible ? "YES" : "NO");
    spdlog::debug("fast_path={} vc={} long_rows={} cover_coords={} short_rows={} empty_rows={}",
                  fast_path_name(s.fast_path), s.vc, s.long_rows, s.cover_coords, s.short_rows, s.empty_rows);
    spdlog::debug("psi_examined={} partials_examined={} bound={} nucs_calls={} nucs_cache_hits={}", s.psi_examined,
                  s.partials_examined, s.enumeration_bound ? std::to_string(*s.enumeration_bound) : "overflow",
                  s.nucs_calls, s.nucs_cache_hits);

    std::cout << (dec.feasible ? "YES" : "NO") << '\n';
    if (dec.feasible && !a.witness.empty()) write_text(a.witness, kcme::serialize_solution(*dec.witness));
    return dec.feasible ? exit_yes : exit_no;
}

int run_verify(const std::string& input, const std::string& solution_path) {
    const auto inst = read_instance(input);
    std::ifstream in(solution_path);
    if (!in) throw std::runtime_error("cannot open " + solution_path);
    const auto sol = kcme::parse_solution(in);
    const auto verdict = kcme::verify_solution(inst, sol);
    if (verdict.ok()) {
        std::cout << "OK\n";
        return exit_yes;
    }
    std::cout << "VIOLATIONS " << verdict.violations.size() << '\n';
    for (const auto& v : verdict.violations) {
        std::cout << "row " << v.row + 1 << " cluster " << sol.assignment[v.row] + 1 << " distance " << v.distance
                  << " > " << inst.d() << '\n';
    }
    return exit_no;
}

int run_nucs(const std::string& input) {
    kcme::NucsInstance inst;
    if (input == "-") {
        inst = kcme::parse_nucs(std::cin);
    } else {
        std::ifstream in(input);
        if (!in) throw std::runtime_error("cannot open " + input);
        inst = kcme::parse_nucs(in);
    }
    const auto center = kcme::nucs_solve(inst);
    if (!center) {
        std::cout << "INFEASIBLE\n";
        return exit_no;
    }
    std::cout << "FEASIBLE\n" << center->to_string() << '\n';
    return exit_yes;
}

}  // namespace

int main(int argc, char** argv) {
    configure_logging();

    CLI::App app{"Exact solver for binary k-center with missing entries"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Decide an instance and optionally write a witness");
    solve->add_option("--algo", solve_args.algo, "vcfpt or brute")->check(CLI::IsMember({"vcfpt", "brute"}));
    solve->add_option("--input", solve_args.input, "Instance file ('-' for stdin)")->required();
    solve->add_option("--witness", solve_args.witness, "Write the solution here on YES");
    solve->add_flag("--deterministic", solve_args.deterministic, "Single worker, canonical witness");
    solve->add_flag("--symmetry-pruning", solve_args.symmetry, "Only enumerate sorted center rows on the cover");
    solve->add_option("--threads", solve_args.threads, "Worker count (default: hardware concurrency)");

    std::string verify_input;
    std::string verify_solution;
    auto* verify = app.add_subcommand("verify", "Check a solution file against an instance");
    verify->add_option("--input", verify_input)->required();
    verify->add_option("--solution", verify_solution)->required();

    kcme::GenParams gen_params;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a planted instance");
    gen->add_option("--n", gen_params.n)->required();
    gen->add_option("--m", gen_params.m)->required();
    gen->add_option("--k", gen_params.k)->required();
    gen->add_option("--d", gen_params.d)->required();
    gen->add_option("--vc", gen_params.vc, "Vertex cover budget")->required();
    gen->add_option("--split", gen_params.split, "How many of the cover vertices are rows")->required();
    gen->add_option("--flips", gen_params.flip_max, "Max flips per row (<= d)")->required();
    gen->add_option("--seed", gen_params.seed)->required();
    gen->add_option("--out", gen_out, "Output file ('-' for stdout)")->required();

    std::string stats_input;
    auto* stats = app.add_subcommand("stats", "Print structural statistics");
    stats->add_option("--input", stats_input)->required();

    std::string bench_dir;
    std::string bench_algo = "vcfpt";
    std::string bench_out;
    std::size_t bench_jobs = 1;
    auto* bench = app.add_subcommand("bench", "Time every instance in a directory, CSV output");
    bench->add_option("--dir", bench_dir)->required();
    bench->add_option("--algo", bench_algo)->check(CLI::IsMember({"vcfpt", "brute"}));
    bench->add_option("--out", bench_out, "CSV file ('-' for stdout)")->required();
    bench->add_option("--jobs", bench_jobs, "Instances solved concurrently");

    std::string nucs_input;
    auto* nucs = app.add_subcommand("nucs", "Solve a standalone non-uniform closest string instance");
    nucs->add_option("--input", nucs_input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_error;
    }

    try {
        if (*solve) return run_solve(solve_args);
        if (*verify) return run_verify(verify_input, verify_solution);
        if (*gen) {
            write_text(gen_out, kcme::serialize_instance(kcme::gen_instance(gen_params)));
            return exit_yes;
        }
        if (*stats) {
            std::cout << kcme::format_stats(kcme::compute_stats(read_instance(stats_input)));
            return exit_yes;
        }
        if (*bench) {
            kcme::SolverOptions opts;
            const auto rows = kcme::run_bench(bench_dir, kcme::parse_algo(bench_algo), opts, bench_jobs);
            std::ostringstream csv;
            kcme::write_bench_csv(csv, rows);
            write_text(bench_out, csv.str());
            return exit_yes;
        }
        if (*nucs) return run_nucs(nucs_input);
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return exit_error;
    }
    return exit_error;
}
