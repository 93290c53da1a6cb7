#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "amp/ansatz.hpp"
#include "amp/boarding.hpp"
#include "amp/enumerators.hpp"
#include "amp/harmonic.hpp"
#include "amp/moments.hpp"
#include "amp/recurrence.hpp"
#include "amp/verify.hpp"

namespace amp::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Context {
    explicit Context(std::ostream& e) : err(e) {}
    std::ostream& err;
    bool force = false;
    std::ostringstream text;
    Json parameters = Json::object();
    Json results = Json::object();
    std::vector<Check> checks;
};

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

void guard(Context& ctx, const std::string& what, unsigned n, unsigned limit) {
    if (n <= limit) return;
    if (!ctx.force)
        throw DomainError(what + " is limited to n <= " + std::to_string(limit) + " (requested n = " +
                          std::to_string(n) + "); pass --force to override");
    ctx.err << "warning: " << what << " at n = " << n << " exceeds the default limit " << limit
            << "; continuing because of --force\n";
}

void require_n_k(unsigned n, unsigned k) {
    if (k < 1 || n < k)
        throw DomainError("requires n >= k >= 1 (got n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");
}

Json poly_json(const UniPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

Json enumerator_json(const MultilinearPoly& f) {
    Json a = Json::array();
    for (const auto& [s, c] : f.terms()) a.push_back(Json{{"subset", elements(s)}, {"coeff", c.str()}});
    return a;
}

Json multipoly_json(const MultiPoly& p, const std::vector<std::string>& names) {
    Json a = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term = Json::object();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term[names[i]] = e[i];
        term["coeff"] = c.str();
        a.push_back(std::move(term));
    }
    return a;
}

std::string pretty_list(std::span<const Rat> xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].pretty();
    return s + "]";
}

void add_check(Context& ctx, std::string name, bool pass, std::string witness = {}) {
    ctx.text << (pass ? "PASS " : "FAIL ") << name;
    if (!pass && !witness.empty()) ctx.text << ": " << witness;
    ctx.text << "\n";
    ctx.checks.push_back(Check{std::move(name), pass, pass ? std::string() : std::move(witness)});
}

// --- enumerate -------------------------------------------------------------

struct EnumerateArgs {
    unsigned n = 0, k = 0;
    bool oracle = false;
};

int cmd_enumerate(const EnumerateArgs& a, Context& ctx) {
    ctx.parameters = {{"n", a.n}, {"k", a.k}, {"oracle", a.oracle}};
    require_n_k(a.n, a.k);
    guard(ctx, "the closed-form enumerator", a.n, kEnumeratorGuard);
    if (a.oracle) guard(ctx, "the brute-force oracle", a.n, kOracleGuard);

    const auto f = closed_form_Fk(a.n, a.k);
    ctx.text << "F^(" << a.k << ")_" << a.n << ": " << f.size() << " terms\n";
    for (const auto& [s, c] : f.terms()) ctx.text << "  " << subset_to_string(s) << " = " << c.pretty() << "\n";
    ctx.results["enumerator"] = enumerator_json(f);

    if (a.oracle) {
        const auto o = oracle_weight_enumerator(ProcessConfig::make(a.n, a.k), std::max(a.n, kOracleGuard));
        std::string witness;
        Subset all = 0;
        for (const auto& [s, c] : f.terms()) all |= s;
        for (const auto& [s, c] : o.terms()) all |= s;
        for (Subset s = 0; s <= all && witness.empty(); ++s) {
            if ((s & ~all) != 0) continue;
            if (f.coeff(s) != o.coeff(s))
                witness = "coefficient of " + subset_to_string(s) + ": closed form " + f.coeff(s).pretty() +
                          ", oracle " + o.coeff(s).pretty();
        }
        ctx.results["oracle_equal"] = witness.empty();
        add_check(ctx, "oracle-equals-closed-form", witness.empty(), witness);
    }
    return kExitOk;
}

// --- pgf -------------------------------------------------------------------

struct PgfArgs {
    unsigned n = 0, k = 0, moments = 0;
};

int cmd_pgf(const PgfArgs& a, Context& ctx) {
    ctx.parameters = {{"n", a.n}, {"k", a.k}, {"moments", a.moments}};
    require_n_k(a.n, a.k);
    guard(ctx, "the exact pgf", a.n, kPgfGuard);
    if (a.moments > kMaxMomentOrder)
        throw DomainError("--moments is limited to " + std::to_string(kMaxMomentOrder));

    const auto f = pgf(a.n, a.k);
    ctx.text << "f^(" << a.k << ")_" << a.n << "(w) coefficients: " << pretty_list(f.coeffs()) << "\n";
    ctx.results["coefficients"] = poly_json(f);
    if (a.moments > 0) {
        const auto mv = moments_from_pgf(f, a.moments);
        ctx.text << "mean = " << mv.mean.pretty() << "\n";
        Json central = Json::array(), central_float = Json::array();
        for (unsigned r = 0; r <= a.moments; ++r) {
            if (r >= 2) ctx.text << "m" << r << " = " << mv.m(r).pretty() << "\n";
            central.push_back(mv.m(r).str());
            central_float.push_back(mv.m(r).to_double());
        }
        ctx.results["mean"] = mv.mean.str();
        ctx.results["mean_float"] = mv.mean.to_double();
        ctx.results["central_moments"] = central;
        ctx.results["central_moments_float"] = central_float;
    }
    return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    unsigned nmax = 8;
    std::string fault = "none";
};

int cmd_verify(const VerifyArgs& a, Context& ctx) {
    ctx.parameters = {{"suite", a.suite}, {"nmax", a.nmax}, {"inject_fault", a.fault}};
    const auto suite = parse_suite(a.suite);
    if (!suite) throw DomainError("unknown suite '" + a.suite + "' (theorems, recurrences, moments, all)");
    const auto fault = parse_fault(a.fault);
    if (!fault) throw DomainError("unknown fault '" + a.fault + "' (none, variance, recurrence-k1, closed-form)");
    if (a.nmax < 2) throw DomainError("--nmax must be at least 2");

    bool all = true;
    for (auto& c : run_suite(*suite, SuiteOptions{a.nmax, *fault})) {
        all = all && c.pass;
        add_check(ctx, c.name, c.pass, c.witness);
    }
    std::size_t passed = 0;
    for (const auto& c : ctx.checks) passed += c.pass;
    ctx.text << passed << "/" << ctx.checks.size() << " checks passed\n";
    return all ? kExitOk : kExitCheckFailed;
}

// --- discover --------------------------------------------------------------

struct DiscoverArgs {
    std::string target;
    std::optional<unsigned> deg, degw, order;
    unsigned from = 2, to = 40;
};

int report_nofit(const NoFit& nf, Context& ctx) {
    ctx.text << "no fit: " << nf.reason << "\n"
             << "  attempted " << nf.unknowns << " unknowns against " << nf.equations << " equations\n";
    ctx.results["fit"] = false;
    ctx.results["reason"] = nf.reason;
    ctx.results["unknowns"] = nf.unknowns;
    ctx.results["equations"] = nf.equations;
    return kExitNoFit;
}

int discover_moment(unsigned r, const DiscoverArgs& a, Context& ctx) {
    if (r < 1 || r > 8) throw DomainError("moment order must be 1..8");
    auto spec = default_moment_ansatz(r);
    if (a.deg) spec.max_total_degree = *a.deg;
    ctx.parameters["max_order"] = spec.max_order;
    ctx.parameters["max_total_degree"] = spec.max_total_degree;
    ctx.parameters["denom_pow"] = spec.denom_pow;
    ctx.parameters["from"] = a.from;
    ctx.parameters["to"] = a.to;
    if (a.from < 2 || a.to < a.from) throw DomainError("data range needs 2 <= from <= to");
    guard(ctx, "moment data", a.to, kPgfGuard);

    const auto data = moment_data(r, a.from, a.to);
    const auto res = fit_harmonic_ansatz(data, spec);
    if (const auto* nf = std::get_if<NoFit>(&res)) return report_nofit(*nf, ctx);
    const auto& fit = std::get<AnsatzFit>(res);

    ctx.text << (r == 1 ? std::string("mean") : "m" + std::to_string(r)) << " = " << fit.expr.to_string() << "\n"
             << "  basis " << fit.basis_size << ", solved on " << fit.solve_points << " points"
             << (fit.unique ? "" : " (non-unique, free coefficients set to 0)") << "\n";
    ctx.results["fit"] = true;
    ctx.results["expression"] = fit.expr.to_string();
    ctx.results["numerator"] = multipoly_json(fit.expr.numerator(), [&] {
        auto names = harmonic_variable_names(fit.expr.max_order());
        return std::vector<std::string>(names.begin(), names.end());
    }());
    ctx.results["denom_pow"] = fit.expr.denom_pow();
    ctx.results["unique"] = fit.unique;
    ctx.results["basis_size"] = fit.basis_size;
    add_check(ctx, "held-out-validation", true);
    if (r <= 6) {
        std::string witness;
        for (unsigned n = 2; n <= 200 && witness.empty(); ++n)
            if (fit.expr.evaluate(n) != moment_closed_form(n, r))
                witness = "differs from the closed form at n = " + std::to_string(n);
        add_check(ctx, "matches-closed-form", witness.empty(), witness);
        if (!witness.empty()) return kExitCheckFailed;
    }
    return kExitOk;
}

int discover_recurrence(unsigned k, const DiscoverArgs& a, Context& ctx) {
    if (k < 1) throw DomainError("recurrence target needs k >= 1");
    const unsigned order = a.order.value_or(k + 1);
    const unsigned deg_n = a.deg.value_or(k + 2);
    const unsigned deg_w = a.degw.value_or(k);
    ctx.parameters["order"] = order;
    ctx.parameters["deg_n"] = deg_n;
    ctx.parameters["deg_w"] = deg_w;

    const auto res = guess_recurrence(k, order, deg_n, deg_w);
    if (const auto* nf = std::get_if<NoFit>(&res)) return report_nofit(*nf, ctx);
    const auto& fit = std::get<RecurrenceFit>(res);

    ctx.text << fit.spec.to_string() << "  trained on n = " << fit.train_from << ".." << fit.train_to << " ("
             << fit.equations << " equations, " << fit.unknowns << " unknowns, kernel dimension " << fit.kernel_dim
             << ")\n";
    Json coeffs = Json::array();
    const std::vector<std::string> names{"n", "w"};
    for (const auto& c : fit.spec.coeffs)
        coeffs.push_back(
            Json{{"text", c.to_string()}, {"num", multipoly_json(c.num(), names)}, {"den", multipoly_json(c.den(), names)}});
    ctx.results["fit"] = true;
    ctx.results["order"] = fit.spec.order;
    ctx.results["coefficients"] = coeffs;
    ctx.results["kernel_dim"] = fit.kernel_dim;
    ctx.results["train"] = {fit.train_from, fit.train_to};
    ctx.results["holdout"] = {fit.holdout_from, fit.holdout_to};

    add_check(ctx, "held-out-validation n = " + std::to_string(fit.holdout_from) + ".." + std::to_string(fit.holdout_to),
              true);
    const unsigned lo = fit.holdout_to + 1, hi = fit.holdout_to + 10;
    const auto rep = verify_recurrence(fit.spec, lo, hi);
    add_check(ctx, "verify n = " + std::to_string(lo) + ".." + std::to_string(hi), rep.ok, rep.message);
    bool ok = rep.ok;
    if (k <= 3 && order == k + 1) {
        const bool eq = equivalent(fit.spec, builtin_recurrence(k));
        add_check(ctx, "equivalent-to-builtin", eq, "canonical forms differ");
        ok = ok && eq;
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_discover(const DiscoverArgs& a, Context& ctx) {
    ctx.parameters = {{"target", a.target}};
    const auto colon = a.target.find(':');
    const std::string kind = a.target.substr(0, colon);
    unsigned value = 0;
    try {
        if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
        std::size_t used = 0;
        value = static_cast<unsigned>(std::stoul(a.target.substr(colon + 1), &used));
        if (used != a.target.size() - colon - 1) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
        throw DomainError("target must look like moment:r or recurrence:k (got '" + a.target + "')");
    }
    if (kind == "moment") return discover_moment(value, a, ctx);
    if (kind == "recurrence") return discover_recurrence(value, a, ctx);
    throw DomainError("unknown target kind '" + kind + "' (moment, recurrence)");
}

// --- simulate --------------------------------------------------------------

struct SimulateArgs {
    unsigned n = 0, k = 0, threads = 0;
    std::uint64_t trials = 0, seed = 0;
    std::string csv;
};

int cmd_simulate(const SimulateArgs& a, Context& ctx) {
    ctx.parameters = {{"n", a.n}, {"k", a.k}, {"trials", a.trials}, {"seed", a.seed}};
    require_n_k(a.n, a.k);
    if (a.trials < 1) throw DomainError("--trials must be at least 1");
    const auto counts = simulate_wrong_counts(ProcessConfig::make(a.n, a.k), a.trials, a.seed, a.threads);

    const Rat trials(BigInt(std::to_string(a.trials)));
    Rat mean;
    Json jc = Json::array(), jf = Json::array(), jff = Json::array();
    std::ostringstream csv;
    csv << "l,frequency,frequency_float\n";
    ctx.text << "l  count  frequency\n";
    for (std::size_t l = 0; l < counts.size(); ++l) {
        const Rat freq = Rat(BigInt(std::to_string(counts[l]))) / trials;
        const double ff = static_cast<double>(counts[l]) / static_cast<double>(a.trials);
        mean += freq * Rat(static_cast<long>(l));
        ctx.text << l << "  " << counts[l] << "  " << fixed6(ff) << "\n";
        csv << l << "," << freq.str() << "," << fixed6(ff) << "\n";
        jc.push_back(counts[l]);
        jf.push_back(freq.str());
        jff.push_back(ff);
    }
    ctx.text << "mean = " << fixed6(mean.to_double()) << " (" << mean.pretty() << ")\n";
    ctx.results["counts"] = jc;
    ctx.results["frequencies"] = jf;
    ctx.results["frequencies_float"] = jff;
    ctx.results["mean"] = mean.str();
    ctx.results["mean_float"] = mean.to_double();

    if (!a.csv.empty()) {
        std::ofstream f(a.csv, std::ios::binary);
        if (!(f << csv.str())) throw DomainError("cannot write CSV to '" + a.csv + "'");
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and Monte Carlo analysis of the absent-minded passenger boarding process", "amp"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string json_path;
    bool timing = false, force = false;
    app.add_option("--json", json_path, "Write the JSON run report to PATH ('-' replaces the text output)");
    app.add_flag("--timing", timing, "Include wall-clock timing in the JSON report");
    app.add_flag("--force", force, "Override the default size limits (prints a warning)");

    EnumerateArgs ea;
    auto* enumerate = app.add_subcommand("enumerate", "Weight enumerator F^(k)_n, optionally checked by brute force");
    enumerate->add_option("--n", ea.n, "Passengers")->required();
    enumerate->add_option("--k", ea.k, "Absent-minded passengers")->required();
    enumerate->add_flag("--oracle", ea.oracle, "Compare against exhaustive enumeration");

    PgfArgs pa;
    auto* pgf_cmd = app.add_subcommand("pgf", "Probability generating function of the wrong-seated count");
    pgf_cmd->add_option("--n", pa.n, "Passengers")->required();
    pgf_cmd->add_option("--k", pa.k, "Absent-minded passengers")->required();
    pgf_cmd->add_option("--moments", pa.moments, "Also report exact central moments up to this order");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a cross-check suite");
    verify->add_option("--suite", va.suite, "theorems, recurrences, moments or all")->capture_default_str();
    verify->add_option("--nmax", va.nmax, "Largest n exercised")->capture_default_str();
    verify->add_option("--inject-fault", va.fault, "Corrupt a fixture: none, variance, recurrence-k1, closed-form")
        ->capture_default_str();

    DiscoverArgs da;
    auto* discover = app.add_subcommand("discover", "Fit a moment formula or a recurrence from exact data");
    discover->add_option("--target", da.target, "moment:r or recurrence:k")->required();
    discover->add_option("--deg", da.deg, "Total degree (moment) or n-degree (recurrence) bound");
    discover->add_option("--degw", da.degw, "w-degree bound (recurrence)");
    discover->add_option("--order", da.order, "Recurrence order");
    discover->add_option("--from", da.from, "First n of the moment data")->capture_default_str();
    discover->add_option("--to", da.to, "Last n of the moment data")->capture_default_str();

    SimulateArgs sa;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo histogram of the wrong-seated count");
    simulate->add_option("--n", sa.n, "Passengers")->required();
    simulate->add_option("--k", sa.k, "Absent-minded passengers")->required();
    simulate->add_option("--trials", sa.trials, "Number of trials")->required();
    simulate->add_option("--seed", sa.seed, "Seed")->required();
    simulate->add_option("--csv", sa.csv, "Write (l, frequency) rows to PATH");
    simulate->add_option("--threads", sa.threads, "Worker threads (default: AMP_THREADS or all cores)");

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        app.exit(e, out, err);
        return kExitPrecondition;
    }

    Context ctx(err);
    ctx.force = force;
    CLI::App* sub = app.get_subcommands().front();
    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        if (sub == enumerate) code = cmd_enumerate(ea, ctx);
        else if (sub == pgf_cmd) code = cmd_pgf(pa, ctx);
        else if (sub == verify) code = cmd_verify(va, ctx);
        else if (sub == discover) code = cmd_discover(da, ctx);
        else code = cmd_simulate(sa, ctx);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory; try a smaller n\n";
        return kExitPrecondition;
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (json_path != "-") out << ctx.text.str();
    if (!json_path.empty()) {
        Json report;
        report["command"] = sub->get_name();
        report["argv"] = std::vector<std::string>(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
        report["parameters"] = ctx.parameters;
        report["results"] = ctx.results;
        Json checks = Json::array();
        for (const auto& c : ctx.checks) {
            Json j{{"name", c.name}, {"pass", c.pass}};
            if (!c.pass) j["witness"] = c.witness;
            checks.push_back(std::move(j));
        }
        report["checks"] = checks;
        report["exit_code"] = code;
        if (timing) report["timing"] = {{"elapsed_ms_float", elapsed}};
        const std::string text = report.dump(2) + "\n";
        if (json_path == "-") {
            out << text;
        } else {
            std::ofstream f(json_path, std::ios::binary);
            if (!(f << text)) {
                err << "error: cannot write JSON report to '" << json_path << "'\n";
                return kExitPrecondition;
            }
        }
    }
    if (timing) err << "elapsed: " << fixed6(elapsed) << " ms\n";
    return code;
}

}  // namespace amp::cli
