// Acceptance suite: runs every acceptance criterion at its pinned tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.
//
// Usage: acceptance_tests <path-to-cli-binary>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "sincderiv/csv.hpp"
#include "sincderiv/inequalities.hpp"
#include "sincderiv/sweep.hpp"
#include "test_support.hpp"

using namespace sincderiv;
using testsup::close;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(const std::string& why) {
        pass = false;
        details.push_back(why);
    }
};

// ---------------------------------------------------------------------------
// 1. Interpolation exactness: order-0 evaluation reproduces the samples at
//    every node, for every catalog map and n in {4, 9, 16}.
Outcome interpolation_exactness() {
    Outcome outcome;
    struct Entry {
        MapId id;
        std::function<double(double)> f;
    };
    const auto half_line = [](double t) { return t * std::exp(-t) / (1.0 + t); };
    const auto full_line = [](double t) { return 1.0 / (1.0 + t * t); };
    const auto unit = [](double t) { return std::sin(3.0 * t) + t; };
    const std::vector<Entry> entries = {
        {MapId::se1(), half_line}, {MapId::se2(), half_line},
        {MapId::se3(), full_line}, {MapId::se4(), full_line},
        {MapId::se5(0.0, 1.0), unit}, {MapId::imp2(), half_line},
        {MapId::imp4(), full_line},
    };
    for (const Entry& entry : entries) {
        for (const int n : {4, 9, 16}) {
            const SincParams params = select_params({1.0, 1.0, 1.0}, n, 2);
            const Approximant approx =
                build_approximant(entry.f, MapSpec(entry.id, 2), params);
            for (const Node& node : approx.nodes()) {
                const double value = evaluate_derivative(approx, node.t, 0);
                const double f_t = entry.f(node.t);
                if (std::abs(value - f_t) > 1e-11 * (1.0 + std::abs(f_t))) {
                    outcome.fail(std::string(entry.id.name()) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(node.k) + ": |" +
                                 format_real(value) + " - " + format_real(f_t) + "|");
                }
            }
        }
    }
    return outcome;
}

// ---------------------------------------------------------------------------
// 2. Jet composition matches the brute-force partition sum for orders <= 5 on
//    100 random polynomial pairs, relative tolerance 1e-12.
Outcome faa_di_bruno_equivalence() {
    Outcome outcome;
    std::mt19937_64 rng(20260809);
    std::uniform_real_distribution<double> anchor(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const testsup::Poly p = testsup::random_poly(rng, 5);
        const testsup::Poly q = testsup::random_poly(rng, 5);
        const double t = anchor(rng);
        const Jet composed = p.eval_jet(q.eval_jet(Jet::variable(t, 5)));
        for (int j = 0; j <= 5; ++j) {
            const double expected = testsup::partition_sum_derivative(p, q, t, j);
            if (!close(composed.derivative(j), expected, 1e-12)) {
                outcome.fail("trial " + std::to_string(trial) + " j=" + std::to_string(j) +
                             ": jet " + format_real(composed.derivative(j)) + " vs sum " +
                             format_real(expected));
            }
        }
    }
    return outcome;
}

// ---------------------------------------------------------------------------
// 3. Basis derivatives of orders 1-2 match central finite differences at 50
//    random (map, k, t) triples, relative tolerance 1e-5.
Outcome basis_derivative_oracle() {
    Outcome outcome;
    const std::vector<MapId> maps = {MapId::se1(),         MapId::se2(),  MapId::se3(),
                                     MapId::se4(),         MapId::imp2(), MapId::imp4(),
                                     MapId::se5(0.0, 1.0)};
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> pick_k(-8, 8);
    std::uniform_real_distribution<double> pick_h(0.3, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const MapId& id = maps[trial % maps.size()];
        const int k = pick_k(rng);
        const double h = pick_h(rng);
        double t = 0.0;
        switch (id.kind()) {
            case MapKind::SE5: t = 0.05 + 0.9 * uniform(rng); break;
            case MapKind::SE3:
            case MapKind::SE4:
            case MapKind::IMP4: t = -8.0 + 16.0 * uniform(rng); break;
            default: t = std::exp(-2.0 + 5.0 * uniform(rng)); break;
        }
        const MapSpec spec(id, 2);
        const auto exact = basis_term_derivs(spec, 2, k, h, t, 2);
        const auto order0 = [&](double tt) {
            return basis_term_derivs(spec, 2, k, h, tt, 0)[0];
        };
        const double step = 1e-5 * std::max(1.0, std::abs(t));
        const double fd1 = testsup::diff1(order0, t, step);
        const double fd2 = testsup::diff2(order0, t, step);
        if (!close(exact[1], fd1, 1e-5)) {
            outcome.fail(std::string(id.name()) + " k=" + std::to_string(k) +
                         " t=" + format_real(t) + " order 1");
        }
        if (!close(exact[2], fd2, 1e-5)) {
            outcome.fail(std::string(id.name()) + " k=" + std::to_string(k) +
                         " t=" + format_real(t) + " order 2");
        }
    }
    return outcome;
}

// ---------------------------------------------------------------------------
// 4. Rate realization on example1, l = 0, fit window n in [10, 60] above the
//    roundoff floor: slope <= -0.8 sqrt(pi d mu) for each formula's (d, mu).
Outcome rate_realization(const ErrorReport& e1_se, const ErrorReport& e1_imp) {
    Outcome outcome;
    const auto check = [&](const ErrorReport& report, double d) {
        const double threshold = -0.8 * std::sqrt(kPi * d * 0.5);
        const double slope = fit_rate(report, 0, 10, 60);
        if (!(slope <= threshold)) {
            outcome.fail(std::string(to_string(report.formula)) + ": slope " +
                         format_real(slope) + " > " + format_real(threshold));
        }
    };
    check(e1_imp, 3.14);
    check(e1_se, 1.57);
    return outcome;
}

// ---------------------------------------------------------------------------
// 5. Improvement claim: per example and per l in {0,1,2}, improved max error
//    <= Stenger max error at >= 90% of sweep points where both exceed 1e-12,
//    and at the largest such n.
Outcome improvement_claim(const ErrorReport& se1, const ErrorReport& imp1,
                          const ErrorReport& se2, const ErrorReport& imp2) {
    Outcome outcome;
    const auto check = [&](const ErrorReport& se, const ErrorReport& imp) {
        for (int l = 0; l <= 2; ++l) {
            int total = 0, wins = 0;
            int largest_n = -1;
            bool wins_at_largest = false;
            for (size_t i = 0; i < se.rows.size(); ++i) {
                const double e_se = se.rows[i].max_abs_error[l];
                const double e_imp = imp.rows[i].max_abs_error[l];
                if (e_se > kRoundoffFloor && e_imp > kRoundoffFloor) {
                    ++total;
                    if (e_imp <= e_se) ++wins;
                    if (se.rows[i].n > largest_n) {
                        largest_n = se.rows[i].n;
                        wins_at_largest = e_imp <= e_se;
                    }
                }
            }
            const bool ratio_ok = total > 0 && wins * 10 >= total * 9; // >= 90%
            if (!ratio_ok || !wins_at_largest) {
                char buf[160];
                std::snprintf(buf, sizeof buf,
                              "%s l=%d: improved<=stenger at %d/%d above-floor points "
                              "(%.1f%%, need >=90%%); largest n=%d %s",
                              std::string(to_string(se.function)).c_str(), l, wins, total,
                              total ? 100.0 * wins / total : 0.0, largest_n,
                              wins_at_largest ? "ok" : "fails");
                outcome.fail(buf);
            }
        }
    };
    check(se1, imp1);
    check(se2, imp2);
    return outcome;
}

// ---------------------------------------------------------------------------
// 6. Inequality suite: all five bounds hold with max violation <= 1e-12 on
//    2001-point grids.
Outcome inequality_suite() {
    Outcome outcome;
    for (const InequalityId id : kAllInequalities) {
        const std::vector<double> grid = inequality_default_grid(id, 2001);
        const double violation = verify_inequality(id, grid);
        if (!(violation <= kInequalityTolerance)) {
            outcome.fail(std::string(to_string(id)) + ": max violation " +
                         format_real(violation));
        }
    }
    return outcome;
}

// ---------------------------------------------------------------------------
// 7. Parameter rules: M, N, h reproduce their defining formulas on 20 tuples
//    including the four benchmark profiles; spot value of h checked to 1e-7.
Outcome parameter_rules() {
    Outcome outcome;
    struct Tuple {
        double alpha, beta, d;
        int n;
    };
    const std::vector<Tuple> table = {
        {0.5, 1.0, 3.14, 50},      {0.5, 1.0, 1.57, 50},
        {2.0, 0.25 * kPi, 1.57, 40}, {2.0, 0.5 * kPi, 2.07, 40},
        {1.0, 1.0, 1.0, 1},        {1.0, 1.0, 1.0, 7},
        {3.0, 0.7, 0.9, 33},       {0.3, 0.3, 1.2, 12},
        {5.0, 1.0, 2.5, 64},       {1.0, 5.0, 2.5, 64},
        {0.25, 4.0, 0.8, 17},      {4.0, 0.25, 0.8, 17},
        {1.5, 2.5, 3.0, 80},       {2.5, 1.5, 3.0, 80},
        {kPi, 1.0, 1.0, 25},       {1.0, kPi, 1.0, 25},
        {0.125, 1.0, 1.5, 96},     {7.0, 2.0, 0.5, 9},
        {0.9, 1.1, 2.2, 41},       {1.1, 0.9, 2.2, 41},
    };
    for (const Tuple& row : table) {
        const SincParams p = select_params({row.alpha, row.beta, row.d}, row.n, 2);
        const std::string tag = "(" + std::to_string(row.alpha) + "," +
                                std::to_string(row.beta) + "," + std::to_string(row.d) +
                                ",n=" + std::to_string(row.n) + ")";
        if (p.mu != std::min(row.alpha, row.beta)) outcome.fail(tag + ": mu");
        // ceil definition: (M-1) alpha < mu n <= M alpha, same for N with beta
        if (!((p.M - 1) * row.alpha < p.mu * row.n && p.mu * row.n <= p.M * row.alpha)) {
            outcome.fail(tag + ": M=" + std::to_string(p.M));
        }
        if (!((p.N - 1) * row.beta < p.mu * row.n && p.mu * row.n <= p.N * row.beta)) {
            outcome.fail(tag + ": N=" + std::to_string(p.N));
        }
        if (p.mu == row.alpha && p.M != row.n) outcome.fail(tag + ": tie M != n");
        if (p.mu == row.beta && p.N != row.n) outcome.fail(tag + ": tie N != n");
        if (!close(p.h * p.h, kPi * row.d / (p.mu * row.n), 1e-15)) {
            outcome.fail(tag + ": h");
        }
    }

    // frozen expectations for the four benchmark profiles
    const SincParams a = select_params({0.5, 1.0, 3.14}, 50, 2);
    if (a.M != 50 || a.N != 25) outcome.fail("improved example1: M,N");
    if (std::abs(a.h - 0.6281592451686738) > 1e-7) {
        outcome.fail("spot h(0.5, 1, 3.14, 50) = " + format_real(a.h));
    }
    const SincParams b = select_params({0.5, 1.0, 1.57}, 50, 2);
    if (b.M != 50 || b.N != 25) outcome.fail("stenger example1: M,N");
    const SincParams c = select_params({2.0, 0.25 * kPi, 1.57}, 40, 2);
    if (c.M != 16 || c.N != 40) outcome.fail("stenger example2: M,N");
    const SincParams d = select_params({2.0, 0.5 * kPi, 2.07}, 40, 2);
    if (d.M != 32 || d.N != 40) outcome.fail("improved example2: M,N");
    return outcome;
}

// ---------------------------------------------------------------------------
// 8. Determinism: repeated `compare` runs produce byte-identical CSV bodies
//    (timestamp metadata line excluded).
std::string csv_body_without_timestamp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::string line, body;
    while (std::getline(in, line)) {
        if (line.rfind("# timestamp:", 0) == 0) continue;
        body += line;
        body += '\n';
    }
    return body;
}

Outcome determinism(const char* cli_path) {
    Outcome outcome;
    if (cli_path == nullptr) {
        outcome.fail("no CLI path given (argv[1])");
        return outcome;
    }
    const auto dir = std::filesystem::temp_directory_path();
    const std::string out1 = (dir / ("acc_det1_" + std::to_string(::getpid()) + ".csv")).string();
    const std::string out2 = (dir / ("acc_det2_" + std::to_string(::getpid()) + ".csv")).string();
    const std::string base = std::string("'") + cli_path +
                             "' compare --function example1 --m 2 --n-min 5 --n-max 60 "
                             "--n-step 5 --out ";
    for (const std::string& out : {out1, out2}) {
        const int status = std::system((base + "'" + out + "' > /dev/null 2>&1").c_str());
        if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
            outcome.fail("compare run failed");
            return outcome;
        }
    }
    const std::string b1 = csv_body_without_timestamp(out1);
    const std::string b2 = csv_body_without_timestamp(out2);
    if (b1.empty() || b1 != b2) outcome.fail("CSV bodies differ between runs");
    std::filesystem::remove(out1);
    std::filesystem::remove(out2);
    return outcome;
}

} // namespace

int main(int argc, char** argv) {
    const char* cli_path = argc > 1 ? argv[1] : nullptr;

    std::vector<int> n_list;
    for (int n = 5; n <= 100; n += 5) n_list.push_back(n);
    const ErrorReport e1_se = run_sweep(FunctionId::example1, Formula::stenger, 2, n_list);
    const ErrorReport e1_imp = run_sweep(FunctionId::example1, Formula::improved, 2, n_list);
    const ErrorReport e2_se = run_sweep(FunctionId::example2, Formula::stenger, 2, n_list);
    const ErrorReport e2_imp = run_sweep(FunctionId::example2, Formula::improved, 2, n_list);

    struct Row {
        const char* name;
        Outcome outcome;
    };
    const std::vector<Row> rows = {
        {"interpolation-exactness", interpolation_exactness()},
        {"faa-di-bruno-equivalence", faa_di_bruno_equivalence()},
        {"basis-derivative-oracle", basis_derivative_oracle()},
        {"rate-realization", rate_realization(e1_se, e1_imp)},
        {"improvement-claim", improvement_claim(e1_se, e1_imp, e2_se, e2_imp)},
        {"inequality-suite", inequality_suite()},
        {"parameter-rules", parameter_rules()},
        {"determinism", determinism(cli_path)},
    };

    int passed = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        std::printf("[%zu] %-28s %s\n", i + 1, row.name, row.outcome.pass ? "PASS" : "FAIL");
        for (const std::string& detail : row.outcome.details) {
            std::printf("      %s\n", detail.c_str());
        }
        passed += row.outcome.pass;
    }
    std::printf("ACCEPTANCE: %d/%zu criteria passed\n", passed, rows.size());
    return passed == static_cast<int>(rows.size()) ? 0 : 1;
}
