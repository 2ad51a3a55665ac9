#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetalab/cache.hpp"
#include "zetalab/moment_series.hpp"
#include "zetalab/number_theory.hpp"
#include "zetalab/serialize.hpp"
#include "zetalab/verify.hpp"
#include "zetalab/zeta_decomposition.hpp"

namespace zetalab::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    long n = 0;
    bool has_n = false;
    std::string coeffs;
    int r = 2;
    int v = 0;
    long n_max = 10;
    int precision = 30;
    long long samples = 100'000;
    std::uint64_t seed = 42;
    std::string format;
    std::string cache_path;
    unsigned long max_terms = kDefaultMaxTerms;
    unsigned progress = 0;
    unsigned threads = 0;
    bool seedless = false;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << csv_field(fields[i]);
    }
    out << "\r\n";
}

IntPolynomial parse_coeff_list(const std::string& text) {
    std::vector<Integer> cs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            cs.push_back(parse_integer(item));
        } catch (const std::invalid_argument&) {
            throw UsageError("--coeffs must be a comma-separated integer list (got '" + item + "')");
        }
    }
    if (text.empty() || text.back() == ',') throw UsageError("--coeffs must be a comma-separated integer list");
    IntPolynomial p(std::move(cs));
    if (p.is_zero()) throw UsageError("--coeffs must describe a nonzero polynomial");
    return p;
}

void require_n(const RunConfig& cfg) {
    if (!cfg.has_n) throw UsageError("--n is required");
    if (cfg.n < 0) throw UsageError("n must be ≥ 0");
}

// (polynomial, reported n)
std::pair<IntPolynomial, unsigned> resolve_polynomial(const RunConfig& cfg) {
    const bool has_coeffs = !cfg.coeffs.empty();
    if (cfg.has_n && has_coeffs) throw UsageError("--n and --coeffs are mutually exclusive");
    if (has_coeffs) {
        IntPolynomial p = parse_coeff_list(cfg.coeffs);
        return {p, static_cast<unsigned>(p.degree())};
    }
    if (!cfg.has_n) throw UsageError("one of --n or --coeffs is required");
    require_n(cfg);
    return {legendre_coeffs(static_cast<unsigned>(cfg.n)), static_cast<unsigned>(cfg.n)};
}

void validate_rv(const RunConfig& cfg) {
    if (cfg.r < 2) throw UsageError("series diverges (r must be >= 2)");
    if (cfg.v < 0) throw UsageError("v must be >= 0");
}

void validate_precision(const RunConfig& cfg) {
    if (cfg.precision < 10) throw UsageError("--prec must be >= 10");
}

std::unique_ptr<DecompositionCache> open_cache(const RunConfig& cfg) {
    std::string path = cfg.cache_path;
    if (path.empty())
        if (const char* env = std::getenv("ZETALAB_CACHE")) path = env;
    if (path.empty()) return nullptr;
    return std::make_unique<DecompositionCache>(path);
}

ZetaCombination combination(const IntPolynomial& poly, const RunConfig& cfg, DecompositionCache* cache) {
    return cache ? cache->get_or_compute(poly, cfg.r, cfg.v) : decompose(poly, cfg.r, cfg.v);
}

int cmd_poly(const RunConfig& cfg, std::ostream& out) {
    require_n(cfg);
    const IntPolynomial p = legendre_coeffs(static_cast<unsigned>(cfg.n));
    if (cfg.format == "csv") {
        csv_row(out, {"power", "coeff"});
        for (std::size_t l = 0; l < p.coeffs().size(); ++l) csv_row(out, {std::to_string(l), to_string(p.coeffs()[l])});
    } else {
        out << to_json(p).dump() << '\n';
    }
    return kOk;
}

int cmd_moment(const RunConfig& cfg, std::ostream& out) {
    auto [poly, n] = resolve_polynomial(cfg);
    const RationalFunction m = moment_from_coeffs(poly);
    if (cfg.format == "csv") {
        csv_row(out, {"power", "numerator", "denominator"});
        const auto deg = std::max(m.numerator().degree(), m.denominator().degree());
        for (long l = 0; l <= deg; ++l)
            csv_row(out, {std::to_string(l), to_string(m.numerator()[static_cast<std::size_t>(l)]),
                          to_string(m.denominator()[static_cast<std::size_t>(l)])});
        return kOk;
    }
    nlohmann::json j = to_json(m);
    j["coeffs"] = to_json(poly);
    if (cfg.has_n) j["closed_form_agrees"] = moment_closed_form(n) == m;
    out << j.dump() << '\n';
    return kOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
    validate_rv(cfg);
    auto [poly, n] = resolve_polynomial(cfg);
    auto cache = open_cache(cfg);
    const DecompositionReport rep = build_report(n, cfg.r, cfg.v, combination(poly, cfg, cache.get()));
    if (cfg.format == "csv") {
        std::string zeta;
        for (const auto& [j, q] : rep.combo.zeta_coeffs) {
            if (!zeta.empty()) zeta += ';';
            zeta += std::to_string(j) + ":" + to_string(q);
        }
        auto opt = [](const std::optional<Integer>& z) { return z ? to_string(*z) : std::string(); };
        csv_row(out, {"n", "r", "v", "zeta", "constant", "A", "B", "G", "D", "div_lcm_n", "div_lcm_n1",
                      "structure_mismatch"});
        csv_row(out, {std::to_string(rep.n), std::to_string(rep.r), std::to_string(rep.v), zeta,
                      to_string(rep.combo.constant), opt(rep.A), opt(rep.B), opt(rep.G), to_string(rep.D),
                      rep.divides_lcm_n ? "true" : "false", rep.divides_lcm_n1 ? "true" : "false",
                      rep.structure_mismatch ? "true" : "false"});
    } else {
        out << to_json(rep).dump() << '\n';
    }
    return kOk;
}

int cmd_value(const RunConfig& cfg, std::ostream& out) {
    validate_rv(cfg);
    validate_precision(cfg);
    auto [poly, n] = resolve_polynomial(cfg);
    auto cache = open_cache(cfg);
    const unsigned digits = static_cast<unsigned>(cfg.precision);
    const HighPrecisionValue c = eval_combination_relative(combination(poly, cfg, cache.get()), digits).rounded(digits);
    if (cfg.format == "csv") {
        csv_row(out, {"n", "r", "v", "value", "error_bound"});
        csv_row(out, {std::to_string(n), std::to_string(cfg.r), std::to_string(cfg.v), c.value_string(digits),
                      c.error_string()});
    } else {
        nlohmann::json j = {{"n", n}, {"r", cfg.r}, {"v", cfg.v}, {"precision", digits}};
        j.update(c.to_json(digits));
        out << j.dump() << '\n';
    }
    return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    validate_rv(cfg);
    validate_precision(cfg);
    if (cfg.n_max < 0) throw UsageError("--n-max must be >= 0");
    auto cache = open_cache(cfg);
    const unsigned digits = static_cast<unsigned>(cfg.precision);

    CriterionOptions options;
    options.threads = cfg.threads;
    if (cache) {
        DecompositionCache* c = cache.get();
        options.source = [c](const IntPolynomial& p, int r, int v) { return c->get_or_compute(p, r, v); };
    }
    unsigned done = 0;
    if (cfg.progress > 0) {
        options.progress = [&](unsigned n) {
            if (++done % cfg.progress == 0 || done == static_cast<unsigned>(cfg.n_max) + 1)
                err << "scan: " << done << "/" << cfg.n_max + 1 << " done (last n=" << n << ")\n";
        };
    }
    const auto records = rationality_criterion([](unsigned n) { return legendre_coeffs(n); }, cfg.r, cfg.v,
                                               static_cast<unsigned>(cfg.n_max), digits, options);

    if (cfg.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& rec : records) {
            nlohmann::json j = {{"n", rec.n},
                                {"r", rec.r},
                                {"v", rec.v},
                                {"abs_c", rec.abs_c.to_json(digits)},
                                {"lcm_pow", to_string(rec.lcm_pow)},
                                {"lcm_scaled", rec.lcm_scaled.to_json(digits)},
                                {"exp_scaled", rec.exp_scaled.to_json(digits)},
                                {"ratio_to_prev", rec.ratio_to_prev ? rec.ratio_to_prev->to_json(digits)
                                                                    : nlohmann::json(nullptr)}};
            arr.push_back(std::move(j));
        }
        out << arr.dump() << '\n';
        return kOk;
    }
    csv_row(out, {"n", "abs_c", "lcm_pow", "lcm_scaled", "exp_scaled", "ratio_to_prev"});
    for (const auto& rec : records) {
        csv_row(out, {std::to_string(rec.n), rec.abs_c.rounded(digits).value_string(digits), to_string(rec.lcm_pow),
                      rec.lcm_scaled.rounded(digits).value_string(digits),
                      rec.exp_scaled.rounded(digits).value_string(digits),
                      rec.ratio_to_prev ? rec.ratio_to_prev->rounded(digits).value_string(digits) : std::string()});
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    validate_rv(cfg);
    validate_precision(cfg);
    require_n(cfg);
    if (cfg.samples < 10'000) throw UsageError("--samples must be >= 10000");
    const VerificationReport rep =
        crosscheck(static_cast<unsigned>(cfg.n), cfg.r, cfg.v, static_cast<unsigned>(cfg.precision),
                   static_cast<std::uint64_t>(cfg.samples), cfg.seed, cfg.max_terms);
    if (cfg.format == "csv") {
        csv_row(out, {"n", "r", "v", "exact", "exact_error", "direct", "direct_error", "terms", "mc_mean", "mc_stderr",
                      "samples", "seed", "pass"});
        const unsigned d = rep.precision;
        const auto ex = rep.exact.rounded(d), di = rep.direct.value.rounded(d);
        const auto mc = to_json(rep.mc);
        csv_row(out, {std::to_string(rep.n), std::to_string(rep.r), std::to_string(rep.v), ex.value_string(d),
                      ex.error_string(), di.value_string(d), di.error_string(), std::to_string(rep.direct.terms),
                      mc["mean"].get<std::string>(), mc["stderr"].get<std::string>(), std::to_string(rep.mc.samples),
                      std::to_string(rep.mc.seed), rep.pass() ? "true" : "false"});
    } else {
        out << to_json(rep).dump() << '\n';
    }
    return rep.pass() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact zeta-value decompositions of log-weighted unit-cube integrals"};
    app.name("zetalab");
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_n = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "Index of the shifted Legendre polynomial P_n (n >= 0)");
    };
    auto add_coeffs = [&](CLI::App* sub) {
        sub->add_option("--coeffs", cfg.coeffs, "Custom integer polynomial, comma-separated, lowest degree first");
    };
    auto add_rv = [&](CLI::App* sub) {
        sub->add_option("--r", cfg.r, "Number of integral folds (r >= 2)")->capture_default_str();
        sub->add_option("--v", cfg.v, "Power of the logarithm (v >= 0)")->capture_default_str();
    };
    auto add_prec = [&](CLI::App* sub) {
        sub->add_option("--prec", cfg.precision, "Significant decimal digits (>= 10)")->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub, const std::string& def) {
        sub->add_option("--format", cfg.format, "Output format (default " + def + ")")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_cache = [&](CLI::App* sub) {
        sub->add_option("--cache", cfg.cache_path, "JSON-lines decomposition cache (default: $ZETALAB_CACHE)");
    };

    auto* poly = app.add_subcommand("poly", "Print the coefficients of P_n");
    add_n(poly);
    add_format(poly, "json");

    auto* moment = app.add_subcommand("moment", "Print the moment rational function M(s)");
    add_n(moment);
    add_coeffs(moment);
    add_format(moment, "json");

    auto* dec = app.add_subcommand("decompose", "Exact zeta-value decomposition of c_v");
    add_n(dec);
    add_coeffs(dec);
    add_rv(dec);
    add_format(dec, "json");
    add_cache(dec);

    auto* value = app.add_subcommand("value", "Numerical value of c_v from the exact decomposition");
    add_n(value);
    add_coeffs(value);
    add_rv(value);
    add_prec(value);
    add_format(value, "json");
    add_cache(value);

    auto* scan = app.add_subcommand("scan", "Criterion table for n = 0..n-max");
    add_rv(scan);
    scan->add_option("--n-max", cfg.n_max, "Largest n")->capture_default_str();
    add_prec(scan);
    add_format(scan, "csv");
    add_cache(scan);
    scan->add_option("--progress", cfg.progress, "Report progress on stderr every N values of n (0 = off)");
    scan->add_option("--threads", cfg.threads, "Worker threads (0 = hardware concurrency)");
    scan->add_flag("--seedless", cfg.seedless, "Accepted for symmetry with verify; scans use no randomness");

    auto* verify = app.add_subcommand("verify", "Cross-check decomposition, direct summation and Monte Carlo");
    add_n(verify);
    add_rv(verify);
    add_prec(verify);
    verify->add_option("--samples", cfg.samples, "Monte Carlo samples (>= 10000)")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Monte Carlo seed")->capture_default_str();
    verify->add_option("--max-terms", cfg.max_terms, "Term budget for the direct summation")->capture_default_str();
    add_format(verify, "json");

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("zetalab");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    // Per-subcommand format defaults; --format overrides.
    CLI::App* sub = app.get_subcommands().front();
    if (sub->count("--format") == 0) cfg.format = (sub == scan) ? "csv" : "json";
    cfg.has_n = sub->get_option_no_throw("--n") && sub->count("--n") > 0;

    try {
        if (sub == poly) return cmd_poly(cfg, out);
        if (sub == moment) return cmd_moment(cfg, out);
        if (sub == dec) return cmd_decompose(cfg, out);
        if (sub == value) return cmd_value(cfg, out);
        if (sub == scan) return cmd_scan(cfg, out, err);
        if (sub == verify) return cmd_verify(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsage;
}

}  // namespace zetalab::cli
