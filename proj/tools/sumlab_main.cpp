// Command-line front door: exhaustive censuses, seeded samplers, prescribed
// constructions, and exact verification targets, with CSV/JSON artifacts.
//
// Exit codes: 0 success, 1 usage error, 2 resource-guard refusal,
// 3 verification failure.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "sumlab/artifacts.hpp"
#include "sumlab/construct.hpp"
#include "sumlab/enumerate.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/montecarlo.hpp"
#include "sumlab/probmodel.hpp"

namespace {

using namespace sumlab;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitVerification = 3;

int enum_guard() {
    if (const char* env = std::getenv("SUMLAB_MAX_N")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring unparseable SUMLAB_MAX_N\n";
    }
    return kDefaultEnumGuard;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        q = Rational(text);
    } else if (text.find('.') != std::string::npos) {
        const auto dot = text.find('.');
        const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        mpz_class num(digits);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
        q = Rational(num, den);
    } else {
        q = Rational(text);
    }
    q.canonicalize();
    if (q < 0 || q > 1) throw CLI::ValidationError("--p must lie in [0,1]");
    return q;
}

Filter parse_filter(const std::string& text) {
    if (text == "all") return FilterAll{};
    if (text == "endpoints") return FilterContainsEndpoints{};
    if (text.rfind("fringe:", 0) == 0)
        return artifacts::read_fringe_spec(fs::path(text.substr(7)));
    throw CLI::ValidationError("--filter must be all, endpoints, or fringe:<spec-file>");
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void print_set_line(const IntSet& s) {
    const int sums = sumset(s).size();
    const int diffs = diffset(s).size();
    std::cout << s.to_string() << "\n";
    std::cout << "sum_size=" << sums << " diff_size=" << diffs << " imbalance=" << (sums - diffs)
              << " max=" << (s.empty() ? 0 : s.max()) << "\n";
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
    int n = 0;
    std::string filter_text = "all";
    std::string out;
    int threads = 0;
};

int run_enumerate(const EnumerateArgs& args) {
    const Filter filter = parse_filter(args.filter_text);
    Timer timer;
    const JointHistogram hist = enumerate_joint(args.n, filter, args.threads, enum_guard());
    const TallyReport report = tally(hist);
    if (!args.out.empty()) {
        const fs::path csv(args.out);
        const fs::path sidecar = artifacts::sidecar_path(csv);
        artifacts::write_census_csv(csv, hist);
        artifacts::Manifest manifest;
        manifest.command = "enumerate";
        manifest.parameters = {{"n", std::to_string(args.n)},
                               {"filter", args.filter_text},
                               {"threads", std::to_string(args.threads)}};
        manifest.outputs = {csv.string(), sidecar.string()};
        manifest.elapsed_seconds = timer.seconds();
        artifacts::write_census_sidecar(sidecar, hist, manifest);
    }
    std::cout << "n=" << hist.n << " sets=" << hist.total() << " sum_total="
              << report.sum_total.get_str() << " diff_total=" << report.diff_total.get_str()
              << " sd=" << report.sum_dominant.get_str() << " dd="
              << report.difference_dominant.get_str() << " bal=" << report.balanced.get_str()
              << "\n";
    return kExitOk;
}

// ------------------------------------------------------------------ sample

struct SampleArgs {
    int n = 1000;
    int m = 64;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::string p_text = "1/2";
    bool condition_zero = false;
    bool force_equal = false;
    bool literal_p = false;
    double alpha = 0;
    std::vector<int> n_list;
    std::string out;
    int threads = 0;
};

SampleConfig config_from(const SampleArgs& args) {
    SampleConfig cfg;
    cfg.n = args.n;
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.inclusion_prob = parse_rational(args.p_text);
    cfg.condition_zero = args.condition_zero;
    return cfg;
}

artifacts::Manifest sample_manifest(const std::string& command, const SampleArgs& args,
                                    const std::vector<std::string>& outputs) {
    artifacts::Manifest m;
    m.command = command;
    m.parameters = {{"n", std::to_string(args.n)},
                    {"m", std::to_string(args.m)},
                    {"trials", std::to_string(args.trials)},
                    {"p", args.p_text},
                    {"condition_zero", args.condition_zero ? "true" : "false"}};
    m.seed = args.seed;
    m.outputs = outputs;
    return m;
}

void write_histogram_outputs(const std::string& command, const SampleArgs& args,
                             const SampleConfig& cfg, const Histogram& hist) {
    if (args.out.empty()) return;
    const fs::path csv(args.out);
    const fs::path sidecar = artifacts::sidecar_path(csv);
    artifacts::write_histogram_csv(csv, hist);
    artifacts::write_histogram_sidecar(
        sidecar, hist, cfg, sample_manifest(command, args, {csv.string(), sidecar.string()}));
}

int run_sample_classes(const SampleArgs& args) {
    const SampleConfig cfg = config_from(args);
    const RhoEstimate est = sample_classes(cfg, args.threads);
    if (!args.out.empty()) {
        const fs::path out(args.out);
        artifacts::write_json_file(
            out, artifacts::rho_json(est, cfg,
                                     sample_manifest("sample classes", args, {out.string()})));
    }
    std::cout << "rho_minus=" << est.rho_minus << " (se " << est.se_minus << ")\n"
              << "rho_plus=" << est.rho_plus << " (se " << est.se_plus << ")\n"
              << "rho_equal=" << est.rho_equal << " (se " << est.se_equal << ")\n";
    return kExitOk;
}

int run_sample_missing_sums(const SampleArgs& args) {
    const SampleConfig cfg = config_from(args);
    const Histogram hist = sample_missing_sums(cfg, args.threads);
    write_histogram_outputs("sample missing-sums", args, cfg, hist);
    std::cout << "bins=" << hist.bins.size() << " f(0)=" << hist.frequency(0)
              << " f(1)=" << hist.frequency(1) << "\n";
    return kExitOk;
}

int run_sample_one_sided(const SampleArgs& args) {
    SampleConfig cfg = config_from(args);
    cfg.n = args.m;  // the sampled universe is the truncation
    const Histogram hist = sample_one_sided(cfg, args.m, args.threads);
    write_histogram_outputs("sample one-sided", args, cfg, hist);
    std::cout << "bins=" << hist.bins.size() << " f(0)=" << hist.frequency(0) << "\n";
    return kExitOk;
}

int run_sample_two_set(const SampleArgs& args) {
    const SampleConfig cfg = config_from(args);
    const TwoSetAverages avg = sample_two_set_average(cfg, args.force_equal, args.threads);
    if (!args.out.empty()) {
        nlohmann::json j = artifacts::manifest_json(
            sample_manifest("sample two-set", args, {args.out}));
        j["config"] = artifacts::config_json(cfg);
        j["force_equal"] = args.force_equal;
        j["mean_sum_size"] = avg.mean_sum_size;
        j["mean_diff_size"] = avg.mean_diff_size;
        artifacts::write_json_file(fs::path(args.out), j);
    }
    std::cout << "mean_sum_size=" << avg.mean_sum_size
              << " mean_diff_size=" << avg.mean_diff_size << "\n";
    return kExitOk;
}

int run_sample_density_sweep(const SampleArgs& args) {
    if (args.n_list.empty()) throw CLI::ValidationError("--n-list must name at least one n");
    const auto rows =
        density_sweep(args.n_list, args.alpha, args.trials, args.seed, args.literal_p, args.threads);
    if (!args.out.empty()) {
        nlohmann::json j = artifacts::manifest_json(
            sample_manifest("sample density-sweep", args, {args.out}));
        j["alpha"] = args.alpha;
        j["literal_p"] = args.literal_p;
        nlohmann::json table = nlohmann::json::array();
        for (const auto& r : rows)
            table.push_back({{"n", r.n},
                             {"p", r.inclusion_prob},
                             {"difference_dominant", r.difference_dominant},
                             {"sum_dominant", r.sum_dominant},
                             {"balanced", r.balanced}});
        j["rows"] = table;
        artifacts::write_json_file(fs::path(args.out), j);
    }
    for (const auto& r : rows)
        std::cout << "n=" << r.n << " p=" << r.inclusion_prob << " dd=" << r.difference_dominant
                  << " sd=" << r.sum_dominant << " bal=" << r.balanced << "\n";
    return kExitOk;
}

// --------------------------------------------------------------- construct

struct ConstructArgs {
    int x = 0;
    bool have_x = false;
    bool nonempty_zero = false;
    std::vector<int> verify_range;
};

int run_construct(const ConstructArgs& args) {
    if (!args.verify_range.empty()) {
        const int lo = args.verify_range.at(0), hi = args.verify_range.at(1);
        if (lo > hi) throw CLI::ValidationError("--verify-range expects lo <= hi");
        const PrescribedReport report = verify_prescribed(lo, hi);
        std::size_t passed = 0;
        for (const auto& e : report.entries) {
            if (e.ok) {
                ++passed;
            } else {
                std::cout << "FAIL x=" << e.x << " imbalance=" << e.imbalance
                          << " max=" << e.max_element << " limit=" << e.limit << "\n";
            }
        }
        std::cout << passed << "/" << report.entries.size() << " prescribed cases pass\n";
        if (!report.all_ok) return kExitVerification;
        if (!args.have_x) return kExitOk;
    }
    if (!args.have_x) throw CLI::ValidationError("construct needs an imbalance or --verify-range");
    print_set_line(build_prescribed(args.x, args.nonempty_zero));
    return kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
    int sum_n_max = 22;
    int bounds_n_max = 24;
    int m_max = 24;
    int lemma_n = 12;
    int fringe_n = 14;
    int x = 4;
    int d_max = 25;
    int threads = 0;
};

int run_verify_sum_formula(const VerifyArgs& args) {
    bool all_ok = true;
    for (int n = 1; n <= args.sum_n_max; ++n) {
        const SumTotalCheck check = verify_sum_total(n, args.threads, enum_guard());
        std::cout << (check.ok ? "ok  " : "FAIL") << " n=" << n
                  << " enumerated=" << check.enumerated.get_str()
                  << " formula=" << check.formula.get_str() << "\n";
        all_ok = all_ok && check.ok;
    }
    return all_ok ? kExitOk : kExitVerification;
}

// Exhaustive per-k missing counts versus the exact formulas.
int run_verify_lemmas(const VerifyArgs& args) {
    bool all_ok = true;

    {
        const int n = args.lemma_n;
        if (n < 1 || n > 26) throw CLI::ValidationError("--n must lie in [1,26] for this check");
        std::vector<std::uint64_t> miss_sums(2 * n - 1, 0), miss_diffs(n, 0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const std::uint64_t sums = kernel::sum_bits(static_cast<std::uint32_t>(mask));
            for (int k = 0; k <= 2 * n - 2; ++k)
                if (!((sums >> k) & 1u)) ++miss_sums[k];
            const std::uint32_t diffs = kernel::nonneg_diff_bits(static_cast<std::uint32_t>(mask));
            for (int k = (n + 1) / 2; k <= n - 1; ++k)
                if (!((diffs >> k) & 1u)) ++miss_diffs[k];
        }
        const mpz_class scale = mpz_class(1) << n;
        bool ok = true;
        for (int k = 0; k <= 2 * n - 2; ++k)
            ok = ok && p_sum_missing_uniform(n, k) * Rational(scale) ==
                           Rational(static_cast<unsigned long>(miss_sums[k]));
        for (int k = (n + 1) / 2; k <= n - 1; ++k)
            ok = ok && p_diff_missing_fringed(FringeSpec::uniform(n), k) * Rational(scale) ==
                           Rational(static_cast<unsigned long>(miss_diffs[k]));
        std::cout << (ok ? "ok  " : "FAIL") << " uniform formulas, n=" << n << ", all valid k\n";
        all_ok = all_ok && ok;
    }

    {
        const int n = args.fringe_n;
        if (n < 8 || n > 24) throw CLI::ValidationError("--fringe-n must lie in [8,24]");
        std::uint64_t cases = 0;
        bool ok = true;
        for (int ell = 0; ell <= 3; ++ell)
            for (int u = 0; u <= 3; ++u)
                for (std::uint32_t lmask = 0; lmask < (1u << ell); ++lmask)
                    for (std::uint32_t umask = 0; umask < (1u << u); ++umask) {
                        std::vector<int> lower, upper;
                        for (int i = 0; i < ell; ++i)
                            if ((lmask >> i) & 1u) lower.push_back(i);
                        for (int i = 0; i < u; ++i)
                            if ((umask >> i) & 1u) upper.push_back(n - u + i);
                        const FringeSpec spec(n, ell, u, lower, upper);
                        const int m = spec.middle_count();
                        // Exhaustive middle census of per-k missing counts. The
                        // checked k-ranges reach one past the representable
                        // sums/differences when a fringe is empty; those k are
                        // missing from every set.
                        std::vector<std::uint64_t> low_miss(2 * n, 0), diff_miss(n + 1, 0);
                        low_miss[2 * n - 1] = std::uint64_t{1} << m;
                        diff_miss[n] = std::uint64_t{1} << m;
                        const std::uint64_t base =
                            [&] {
                                std::uint64_t b = 0;
                                for (int e : lower) b |= std::uint64_t{1} << e;
                                for (int e : upper) b |= std::uint64_t{1} << e;
                                return b;
                            }();
                        for (std::uint64_t mid = 0; mid < (std::uint64_t{1} << m); ++mid) {
                            const std::uint32_t mask =
                                static_cast<std::uint32_t>(base | (mid << ell));
                            const std::uint64_t sums = kernel::sum_bits(mask);
                            for (int k = 0; k <= 2 * n - 2; ++k)
                                if (!((sums >> k) & 1u)) ++low_miss[k];
                            const std::uint32_t diffs = kernel::nonneg_diff_bits(mask);
                            for (int k = 0; k <= n - 1; ++k)
                                if (!((diffs >> k) & 1u)) ++diff_miss[k];
                        }
                        const mpz_class scale = mpz_class(1) << m;
                        for (int k = std::max(2 * ell - 1, 0); k <= n - u - 1; ++k)
                            ok = ok && p_sum_missing_fringed_low(spec, k) * Rational(scale) ==
                                           Rational(static_cast<unsigned long>(low_miss[k]));
                        for (int k = n + ell - 1; k <= 2 * n - 2 * u - 1; ++k)
                            ok = ok && p_sum_missing_fringed_high(spec, k) * Rational(scale) ==
                                           Rational(static_cast<unsigned long>(low_miss[k]));
                        for (int k = (n + 1) / 2; k <= n - u - ell; ++k)
                            ok = ok && p_diff_missing_fringed(spec, k) * Rational(scale) ==
                                           Rational(static_cast<unsigned long>(diff_miss[k]));
                        ++cases;
                    }
        std::cout << (ok ? "ok  " : "FAIL") << " fringed formulas, n=" << n << ", " << cases
                  << " (L,U) choices, all valid k\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? kExitOk : kExitVerification;
}

int run_verify_counting_bounds(const VerifyArgs& args) {
    const auto rows = class_proportions(1, args.bounds_n_max, args.threads, enum_guard());
    bool all_ok = true;
    for (const auto& row : rows) {
        const mpz_class pow2 = mpz_class(1) << row.n;
        bool ok = true;
        if (row.n >= 15) ok = ok && mpz_class(row.sum_dominant) * 10000000 >= 2 * pow2;
        if (row.n >= 4) ok = ok && mpz_class(row.difference_dominant) * 10000 >= 15 * pow2;
        ok = ok && mpz_class(row.balanced) * 100000 >= 2 * pow2;
        std::cout << (ok ? "ok  " : "FAIL") << " n=" << row.n << " sd=" << row.sum_dominant
                  << " dd=" << row.difference_dominant << " bal=" << row.balanced << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? kExitOk : kExitVerification;
}

int run_verify_fibonacci(const VerifyArgs& args) {
    if (args.m_max > 30) throw CLI::ValidationError("--m-max above 30 is not desk-scale");
    bool all_ok = true;
    for (int m = 0; m <= args.m_max; ++m) {
        std::uint64_t count = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
            if ((mask & (mask >> 1)) == 0) ++count;
        const bool ok = fib_missing_one_count(m) == mpz_class(count);
        if (!ok || m == args.m_max)
            std::cout << (ok ? "ok  " : "FAIL") << " m=" << m << " count=" << count
                      << " fibonacci=" << fib_missing_one_count(m).get_str() << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? kExitOk : kExitVerification;
}

int run_verify_catalog(const std::string& out_path) {
    const auto catalog = named_examples();
    if (!out_path.empty())
        artifacts::write_json_file(fs::path(out_path), artifacts::catalog_json(catalog));
    bool all_ok = true;
    for (const auto& ex : catalog) {
        const int sums = sumset(ex.set).size();
        const int diffs = diffset(ex.set).size();
        const bool ok = sums == ex.expected_sum_size && diffs == ex.expected_diff_size;
        std::cout << (ok ? "ok  " : "FAIL") << " " << ex.name << " sums=" << sums << "/"
                  << ex.expected_sum_size << " diffs=" << diffs << "/" << ex.expected_diff_size
                  << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? kExitOk : kExitVerification;
}

int run_verify_minimal_diameter(const VerifyArgs& args) {
    const auto sets = minimal_diameter_search(args.d_max, args.x, args.threads);
    bool all_ok = true;
    for (const auto& s : sets) {
        const int imbalance = sumset(s).size() - diffset(s).size();
        const bool ok = imbalance == args.x && !s.empty() && s.min() == 0;
        std::cout << (ok ? "ok  " : "FAIL") << " " << s.to_string() << " imbalance=" << imbalance
                  << "\n";
        all_ok = all_ok && ok;
    }
    std::cout << sets.size() << " sets at minimal diameter"
              << (sets.empty() ? "" : " " + std::to_string(sets.front().max())) << "\n";
    return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sumlab: exact and sampled statistics of sumsets and difference sets"};
    app.require_subcommand(1);
    std::function<int()> action;

    // enumerate
    EnumerateArgs en;
    auto* cmd_enum = app.add_subcommand("enumerate", "exhaustive census of subsets of {0..n-1}");
    cmd_enum->add_option("--n", en.n, "universe size")->required();
    cmd_enum->add_option("--filter", en.filter_text, "all | endpoints | fringe:<spec-file>");
    cmd_enum->add_option("--out", en.out, "census CSV path (JSON sidecar written next to it)");
    cmd_enum->add_option("--threads", en.threads, "worker threads (0 = all cores)");
    cmd_enum->callback([&] { action = [&] { return run_enumerate(en); }; });

    // sample
    SampleArgs sa;
    auto* cmd_sample = app.add_subcommand("sample", "seeded random-subset experiments");
    cmd_sample->require_subcommand(1);
    auto add_common = [&](CLI::App* sub, bool needs_n) {
        if (needs_n) sub->add_option("--n", sa.n, "universe size");
        sub->add_option("--trials", sa.trials, "number of sampled subsets");
        sub->add_option("--seed", sa.seed, "RNG seed (required)")->required();
        sub->add_option("--p", sa.p_text, "inclusion probability (default 1/2)");
        sub->add_option("--out", sa.out, "output path");
        sub->add_option("--threads", sa.threads, "worker threads (0 = all cores)");
    };
    auto* sc = cmd_sample->add_subcommand("classes", "class frequencies of sampled subsets");
    add_common(sc, true);
    sc->callback([&] { action = [&] { return run_sample_classes(sa); }; });

    auto* sm = cmd_sample->add_subcommand("missing-sums", "histogram of 2n-1-|S+S|");
    add_common(sm, true);
    sm->callback([&] { action = [&] { return run_sample_missing_sums(sa); }; });

    auto* so = cmd_sample->add_subcommand("one-sided", "histogram of low-end missing sums");
    add_common(so, false);
    so->add_option("--m", sa.m, "truncation (>= 32, default 64)");
    so->add_flag("--condition-zero", sa.condition_zero, "force 0 into every sampled set");
    so->callback([&] { action = [&] { return run_sample_one_sided(sa); }; });

    auto* st = cmd_sample->add_subcommand("two-set", "mean |S+T| and |S-T| over pairs");
    add_common(st, true);
    st->add_flag("--force-equal", sa.force_equal, "diagnostic: sample T = S");
    st->callback([&] { action = [&] { return run_sample_two_set(sa); }; });

    auto* sd = cmd_sample->add_subcommand("density-sweep", "class fractions at p = n^-alpha");
    add_common(sd, false);
    sd->add_option("--alpha", sa.alpha, "density exponent (0 means p = 1/2)");
    sd->add_option("--n-list", sa.n_list, "universe sizes")->delimiter(',');
    sd->add_flag("--literal-p", sa.literal_p, "alpha = 0 means p = 1 instead of 1/2");
    sd->callback([&] { action = [&] { return run_sample_density_sweep(sa); }; });

    // construct
    ConstructArgs ca;
    auto* cmd_construct =
        app.add_subcommand("construct", "build a set with prescribed |S+S|-|S-S|");
    auto* xopt = cmd_construct->add_option("x", ca.x, "prescribed imbalance");
    cmd_construct->add_flag("--nonempty-zero", ca.nonempty_zero, "return {0} instead of {} for x=0");
    cmd_construct->add_option("--verify-range", ca.verify_range, "check every x in [lo,hi]")
        ->expected(2);
    cmd_construct->callback([&] {
        ca.have_x = xopt->count() > 0;
        action = [&] { return run_construct(ca); };
    });

    // verify
    VerifyArgs va;
    auto* cmd_verify = app.add_subcommand("verify", "exact verification targets");
    cmd_verify->require_subcommand(1);

    auto* vf = cmd_verify->add_subcommand("sum-formula", "enumeration total vs closed form");
    vf->add_option("--n-max", va.sum_n_max, "check 1 <= n <= n-max (default 22)");
    vf->add_option("--threads", va.threads, "worker threads");
    vf->callback([&] { action = [&] { return run_verify_sum_formula(va); }; });

    auto* vl = cmd_verify->add_subcommand("lemmas", "per-k probabilities vs exhaustive counts");
    vl->add_option("--n", va.lemma_n, "uniform-model universe (default 12)");
    vl->add_option("--fringe-n", va.fringe_n, "fringed-model universe (default 14)");
    vl->callback([&] { action = [&] { return run_verify_lemmas(va); }; });

    auto* vc = cmd_verify->add_subcommand("counting-bounds", "class counts vs printed bounds");
    vc->add_option("--n-max", va.bounds_n_max, "check 1 <= n <= n-max (default 24)");
    vc->add_option("--threads", va.threads, "worker threads");
    vc->callback([&] { action = [&] { return run_verify_counting_bounds(va); }; });

    auto* vfib = cmd_verify->add_subcommand("fibonacci", "adjacency-free counts vs Fibonacci");
    vfib->add_option("--m-max", va.m_max, "check 0 <= m <= m-max (default 24)");
    vfib->callback([&] { action = [&] { return run_verify_fibonacci(va); }; });

    static std::string catalog_out;
    auto* vcat = cmd_verify->add_subcommand("catalog", "named example sizes");
    vcat->add_option("--out", catalog_out, "write the catalog as JSON");
    vcat->callback([&] { action = [&] { return run_verify_catalog(catalog_out); }; });

    auto* vmd = cmd_verify->add_subcommand("minimal-diameter", "diameter-minimal imbalance sets");
    vmd->add_option("--x", va.x, "imbalance")->required();
    vmd->add_option("--d-max", va.d_max, "diameter ceiling (<= 26)");
    vmd->add_option("--threads", va.threads, "worker threads");
    vmd->callback([&] { action = [&] { return run_verify_minimal_diameter(va); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints usage/help to the right stream
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const resource_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitResource;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
