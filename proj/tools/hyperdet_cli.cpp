#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "hyperdet/json_io.hpp"
#include "hyperdet/oracles.hpp"

using namespace hyperdet;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitBudget = 5;

json read_json_input(const std::string& path) {
    try {
        if (path.empty() || path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'");
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

// HYPERDET_BUDGET overrides both the enumeration state budget and the
// symbolic term budget when set.
std::optional<std::uint64_t> budget_from_env() {
    const char* env = std::getenv("HYPERDET_BUDGET");
    if (!env || !*env) return std::nullopt;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw ParseError(std::string("bad HYPERDET_BUDGET '") + env + "'");
    }
}

bool is_prime_u64(std::uint64_t n) {
    mpz_class z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

std::string reason_code(DegeneracyReason r) {
    switch (r) {
        case DegeneracyReason::FirstSliceRankDeficient: return "first-slice-rank-deficient";
        case DegeneracyReason::AlgorithmPivotZero: return "pivot-zero";
        default: return "none";
    }
}

int cmd_det(const std::string& input) {
    AnyHypermatrix m = parse_hypermatrix(read_json_input(input));
    json out = std::visit(
        [](const auto& hm) {
            auto res = hyperdeterminant(hm);
            return json{{"det", res.value.str()},
                        {"degenerate", res.degenerate},
                        {"ops", res.op_count}};
        },
        m);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_check(const std::string& input) {
    AnyHypermatrix m = parse_hypermatrix(read_json_input(input));
    json out = std::visit(
        [](const auto& hm) {
            auto res = canonicalize(hm, /*track_group=*/false);
            return json{{"degenerate", !res.reduced()}, {"reason", reason_code(res.reason)}};
        },
        m);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_reduce(const std::string& input, const std::string& log_path, bool verify) {
    AnyHypermatrix m = parse_hypermatrix(read_json_input(input));
    return std::visit(
        [&](const auto& hm) {
            auto out = canonicalize(hm);
            if (!out.reduced())
                throw DegenerateInput("degenerate (" + reason_code(out.reason) + ")");
            if (verify) {
                auto one = hm.at(0, 0, 0).one();
                using HM = std::decay_t<decltype(hm)>;
                if (replay(out.log, hm) != HM::identity(hm.k(), one))
                    throw std::logic_error("log replay does not reproduce the canonical form");
            }
            if (!log_path.empty()) {
                std::ofstream lf(log_path);
                if (!lf) throw ParseError("cannot open '" + log_path + "' for writing");
                lf << log_to_json(out.log).dump(2) << "\n";
            }
            auto one = hm.at(0, 0, 0).one();
            using HM = std::decay_t<decltype(hm)>;
            std::cout << hypermatrix_to_json(HM::identity(hm.k(), one)).dump() << "\n";
            return 0;
        },
        m);
}

int cmd_transporter(const std::string& first, const std::string& second) {
    AnyHypermatrix m1 = parse_hypermatrix(read_json_input(first));
    AnyHypermatrix m2 = parse_hypermatrix(read_json_input(second));
    if (m1.index() != m2.index())
        throw DimensionMismatch("transporter inputs must share a field");
    json out = std::visit(
        [&](const auto& hm1) {
            using HM = std::decay_t<decltype(hm1)>;
            const auto& hm2 = std::get<HM>(m2);
            auto g = transporter(hm1, hm2);
            return group_element_to_json(g);
        },
        m1);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_count(int k, std::uint64_t q, const std::string& mode, const std::string& method,
              std::uint64_t budget, int threads) {
    if (k < 1) throw DimensionMismatch("k must be >= 1");
    if (q < 2 || !is_prime_u64(q)) throw ParseError("q must be a prime >= 2");
    CountMethod cm = method == "pencil" ? CountMethod::Oracle : CountMethod::Algorithm;
    CountReport rep;
    if (mode == "formula") {
        rep = make_count_report(k, q, false);
    } else if (mode == "enumerate") {
        rep.k = k;
        rep.q = q;
        rep.enumerated = count_enumerate(k, q, cm, budget, threads);
        rep.formula = count_formula(k, q);
        rep.agree = *rep.enumerated == rep.formula;
    } else {
        rep = make_count_report(k, q, true, cm, budget, threads);
    }
    std::cout << count_report_to_json(rep).dump() << "\n";
    return 0;
}

int cmd_formula(int k, bool general, bool as_json) {
    if (k < 1) throw DimensionMismatch("k must be >= 1");
    Poly<Rat> det = symbolic_hyperdet(k, /*reduced=*/!general);
    if (as_json) {
        std::cout << poly_to_json(det).dump() << "\n";
    } else {
        std::cout << det.str(symbolic_variable_names(k, !general)) << "\n";
    }
    Rat lo(0), hi(0);
    bool first = true;
    for (const auto& [mono, c] : det.terms()) {
        if (first || c.value() < lo.value()) lo = c;
        if (first || hi.value() < c.value()) hi = c;
        first = false;
    }
    std::cerr << "terms=" << det.terms().size() << " coeff_min=" << lo.str()
              << " coeff_max=" << hi.str() << "\n";
    return 0;
}

int cmd_bench(int kmin, int kmax, std::uint64_t p, int reps, std::uint64_t seed) {
    if (kmin < 1 || kmax < kmin) throw DimensionMismatch("need 1 <= kmin <= kmax");
    if (p < 2 || !is_prime_u64(p)) throw ParseError("p must be prime");
    if (reps < 1) throw ParseError("reps must be >= 1");
    std::cout << "k,opCount,wallTimeMs\n";
    for (int k = kmin; k <= kmax; ++k) {
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k)));
        std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
        std::uint64_t ops = 0;
        auto t0 = std::chrono::steady_clock::now();
        for (int rep = 0; rep < reps; ++rep) {
            Hypermatrix<Fp> m(k, Fp(0, p));
            for (int s = 0; s < 2; ++s)
                for (int r = 0; r <= k; ++r)
                    for (int c = 0; c < k; ++c) m.at(s, r, c) = Fp(dist(rng), p);
            auto res = hyperdeterminant(m);
            ops = std::max(ops, res.op_count);
        }
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
        std::cout << k << "," << ops << "," << ms << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for 2 x k x (k+1) hypermatrices"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string second_input;
    std::string log_path;
    bool verify = false;
    int k = 2;
    std::uint64_t q = 2, p = 10007;
    std::string mode = "formula", method = "algorithm";
    std::uint64_t budget = 1ULL << 24;
    int threads = 0, kmin = 2, kmax = 8, reps = 3;
    bool general = false, as_json = false;
    std::uint64_t seed = 12345;

    auto* det = app.add_subcommand("det", "Hyperdeterminant of a hypermatrix (JSON on stdin)");
    det->add_option("input", input, "input file, '-' for stdin");

    auto* reduce = app.add_subcommand("reduce", "Reduce to the canonical form, logging the moves");
    reduce->add_option("input", input, "input file, '-' for stdin");
    reduce->add_option("--log", log_path, "write the operation log JSON here");
    reduce->add_flag("--verify", verify, "replay the log and compare against the output");

    auto* check = app.add_subcommand("check", "Degeneracy check");
    check->add_option("input", input, "input file, '-' for stdin");

    auto* transp = app.add_subcommand("transporter", "Group element mapping the first input to the second");
    transp->add_option("first", second_input, "first hypermatrix file")->required();
    transp->add_option("second", input, "second hypermatrix file")->required();

    auto* count = app.add_subcommand("count", "Count nondegenerate hypermatrices over F_q");
    count->add_option("--k", k, "format parameter k")->required();
    count->add_option("--q", q, "prime field size")->required();
    count->add_option("--mode", mode, "formula | enumerate | both")
        ->check(CLI::IsMember({"formula", "enumerate", "both"}));
    count->add_option("--method", method, "enumeration degeneracy test: algorithm | pencil")
        ->check(CLI::IsMember({"algorithm", "pencil"}));
    count->add_option("--budget", budget, "max enumeration states");
    count->add_option("--threads", threads, "worker threads, 0 = machine parallelism");

    auto* formula = app.add_subcommand("formula", "Symbolic hyperdeterminant polynomial");
    formula->add_option("--k", k, "format parameter k")->required();
    formula->add_flag("--general", general, "indeterminates in both slices");
    formula->add_flag("--json", as_json, "emit the polynomial as JSON terms");

    auto* bench = app.add_subcommand("bench", "Operation-count and wall-time scaling over F_p");
    bench->add_option("--kmin", kmin, "smallest k");
    bench->add_option("--kmax", kmax, "largest k");
    std::string field = "fp";
    bench->add_option("--field", field, "coefficient field")->check(CLI::IsMember({"fp"}));
    bench->add_option("--p", p, "prime modulus");
    bench->add_option("--reps", reps, "repetitions per k");
    bench->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitParse;
    }

    try {
        if (auto env = budget_from_env()) {
            budget = *env;
            SymbolicLimits::term_budget = static_cast<std::size_t>(*env);
        }
        if (*det) return cmd_det(input);
        if (*reduce) return cmd_reduce(input, log_path, verify);
        if (*check) return cmd_check(input);
        if (*transp) return cmd_transporter(second_input, input);
        if (*count) return cmd_count(k, q, mode, method, budget, threads);
        if (*formula) return cmd_formula(k, general, as_json);
        if (*bench) return cmd_bench(kmin, kmax, p, reps, seed);
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const DegenerateInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Infeasible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
