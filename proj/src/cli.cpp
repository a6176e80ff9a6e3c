#include "qhorn/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include <CLI11.hpp>

#include "qhorn/qcore.hpp"

namespace qhorn {

namespace {

double parse_double_token(const std::string& tok, const std::string& whole) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && tok.front() == '+') ++first;  // from_chars rejects leading '+'
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw UsageError("malformed complex literal: '" + whole + "'");
    return v;
}

std::string shortest(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

Complex parse_complex(const std::string& text) {
    if (text.empty()) throw UsageError("empty complex literal");
    if (text.find_first_of(" \t") != std::string::npos)
        throw UsageError("malformed complex literal (no spaces allowed): '" + text + "'");
    if (text.back() != 'i') return Complex(parse_double_token(text, text), 0.0);
    const std::string body = text.substr(0, text.size() - 1);
    // split at the last +/- that does not follow an exponent marker
    size_t split = std::string::npos;
    for (size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos)
        throw UsageError("malformed complex literal (expected RE+IMi or RE-IMi): '" + text + "'");
    const double re = parse_double_token(body.substr(0, split), text);
    const double im = parse_double_token(body.substr(split), text);
    return Complex(re, im);
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return shortest(z.real());
    std::string s = shortest(z.real());
    s += (std::signbit(z.imag()) ? "-" : "+");
    s += shortest(std::abs(z.imag()));
    s += "i";
    return s;
}

namespace {

struct RawArgs {
    std::string fn = "h6";
    std::string q, alpha, beta, gamma, x, y;
    std::string id;
    std::vector<std::string> ids;
    std::uint64_t seed = 42;
    int n_points = 25;
    double tol = 1e-12;
    int max_terms = 200;
    std::string format = "json";
    std::string output;
    int order = 1;
    std::string var = "x";
    std::vector<double> q_values = {0.9, 0.99, 0.999, 0.9999};
    double threshold = 1e-3;
};

void add_scalar_opts(CLI::App* sc, RawArgs& raw, bool with_gamma = true) {
    sc->add_option("--q", raw.q, "base q (complex literal, 0<|q|<1; default 0.5)");
    sc->add_option("--alpha", raw.alpha, "parameter alpha (exponent for *exp forms)");
    sc->add_option("--beta", raw.beta, "parameter beta");
    if (with_gamma) sc->add_option("--gamma", raw.gamma, "parameter gamma (h7/h7exp)");
    sc->add_option("--x", raw.x, "argument x");
    sc->add_option("--y", raw.y, "argument y");
}

void add_numeric_opts(CLI::App* sc, RawArgs& raw) {
    sc->add_option("--tol", raw.tol, "series truncation tolerance (default 1e-12)");
    sc->add_option("--max-terms", raw.max_terms, "row/column truncation bound (default 200)");
    sc->add_option("--format", raw.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sc->add_option("--output", raw.output, "write the result to this file (atomic)");
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
    RawArgs raw;
    CLI::App app{"basic Horn q-hypergeometric functions: evaluation and identity audit", "qhorn"};
    app.require_subcommand(1);

    CLI::App* eval = app.add_subcommand("eval", "evaluate H6/H7 or their exponent forms");
    eval->add_option("--fn", raw.fn, "h6, h7, h6exp or h7exp")
        ->check(CLI::IsMember({"h6", "h7", "h6exp", "h7exp"}));
    add_scalar_opts(eval, raw);
    add_numeric_opts(eval, raw);

    CLI::App* deriv = app.add_subcommand("deriv", "order-r q-partial derivative (closed form)");
    deriv->add_option("--fn", raw.fn, "h6 or h7")->check(CLI::IsMember({"h6", "h7"}));
    deriv->add_option("--var", raw.var, "differentiation variable: x or y")
        ->check(CLI::IsMember({"x", "y"}));
    deriv->add_option("--order", raw.order, "derivative order (>= 1)");
    add_scalar_opts(deriv, raw);
    add_numeric_opts(deriv, raw);

    CLI::App* verify = app.add_subcommand("verify", "check one catalogue identity at a sampled point");
    verify->add_option("--id", raw.id, "identity id, e.g. E2.29")->required();
    verify->add_option("--seed", raw.seed, "sampler seed (default 42)");
    verify->add_option("--q", raw.q, "base q (complex literal; default 0.5)");
    add_numeric_opts(verify, raw);

    CLI::App* audit = app.add_subcommand("audit", "classify every catalogue identity");
    audit->add_option("--seed", raw.seed, "sampler seed (default 42)");
    audit->add_option("--n-points", raw.n_points, "sample points per identity (default 25)");
    audit->add_option("--ids", raw.ids, "comma-separated identity filter")->delimiter(',');
    audit->add_option("--q", raw.q, "base q (complex literal; default 0.5)");
    add_numeric_opts(audit, raw);

    CLI::App* limit = app.add_subcommand("limit", "classical-limit error sweep for the exponent forms");
    limit->add_option("--fn", raw.fn, "h6 or h7 (exponent forms)")
        ->check(CLI::IsMember({"h6", "h7", "h6exp", "h7exp"}));
    add_scalar_opts(limit, raw);
    limit->add_option("--q-values", raw.q_values, "comma-separated q sweep (default 0.9,0.99,0.999,0.9999)")
        ->delimiter(',');
    limit->add_option("--threshold", raw.threshold, "final error threshold (default 1e-3)");
    add_numeric_opts(limit, raw);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        throw HelpRequested(sub->help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CliConfig cfg;
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.fn = raw.fn;
    auto opt_complex = [](const std::string& s) -> std::optional<Complex> {
        if (s.empty()) return std::nullopt;
        return parse_complex(s);
    };
    cfg.q = opt_complex(raw.q);
    cfg.alpha = opt_complex(raw.alpha);
    cfg.beta = opt_complex(raw.beta);
    cfg.gamma = opt_complex(raw.gamma);
    cfg.x = opt_complex(raw.x);
    cfg.y = opt_complex(raw.y);
    cfg.id = raw.id;
    cfg.ids = raw.ids;
    cfg.seed = raw.seed;
    cfg.n_points = raw.n_points;
    cfg.tol = raw.tol;
    cfg.max_terms = raw.max_terms;
    cfg.format = parse_format(raw.format);
    if (!raw.output.empty()) cfg.output_path = raw.output;
    cfg.order = raw.order;
    cfg.var = raw.var;
    cfg.q_values = raw.q_values;
    cfg.threshold = raw.threshold;

    if (cfg.q) {
        const double m = std::abs(*cfg.q);
        if (!(m > 0.0) || !(m < 1.0) || *cfg.q == Complex(1.0, 0.0))
            throw UsageError("--q must satisfy 0 < |q| < 1");
    }
    if (cfg.n_points < 1) throw UsageError("--n-points must be >= 1");
    if (cfg.max_terms < 1) throw UsageError("--max-terms must be >= 1");
    if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
    if (cfg.order < 1) throw UsageError("--order must be >= 1");
    if (!(cfg.threshold > 0.0)) throw UsageError("--threshold must be positive");
    return cfg;
}

std::vector<std::string> to_argv(const CliConfig& cfg) {
    std::vector<std::string> out{cfg.subcommand};
    auto push = [&](const std::string& flag, const std::string& val) {
        out.push_back(flag);
        out.push_back(val);
    };
    const bool takes_fn =
        cfg.subcommand == "eval" || cfg.subcommand == "deriv" || cfg.subcommand == "limit";
    if (takes_fn) push("--fn", cfg.fn);
    if (cfg.subcommand == "deriv") {
        push("--var", cfg.var);
        push("--order", std::to_string(cfg.order));
    }
    if (cfg.subcommand == "verify") push("--id", cfg.id);
    if (cfg.subcommand == "verify" || cfg.subcommand == "audit")
        push("--seed", std::to_string(cfg.seed));
    if (cfg.subcommand == "audit") {
        push("--n-points", std::to_string(cfg.n_points));
        if (!cfg.ids.empty()) {
            std::string joined;
            for (const auto& id : cfg.ids) joined += (joined.empty() ? "" : ",") + id;
            push("--ids", joined);
        }
    }
    auto push_scalar = [&](const char* flag, const std::optional<Complex>& v) {
        if (v) push(flag, format_complex(*v));
    };
    push_scalar("--q", cfg.q);
    if (cfg.subcommand != "verify" && cfg.subcommand != "audit") {
        push_scalar("--alpha", cfg.alpha);
        push_scalar("--beta", cfg.beta);
        push_scalar("--gamma", cfg.gamma);
        push_scalar("--x", cfg.x);
        push_scalar("--y", cfg.y);
    }
    if (cfg.subcommand == "limit") {
        std::string joined;
        for (double qv : cfg.q_values) joined += (joined.empty() ? "" : ",") + shortest(qv);
        push("--q-values", joined);
        push("--threshold", shortest(cfg.threshold));
    }
    push("--tol", shortest(cfg.tol));
    push("--max-terms", std::to_string(cfg.max_terms));
    push("--format", format_name(cfg.format));
    if (cfg.output_path) push("--output", *cfg.output_path);
    return out;
}

namespace {

void emit_error(std::ostream& err, Format format, const char* type, const std::string& msg) {
    if (format == Format::Json) {
        nlohmann::json j{{"error", nlohmann::json{{"message", msg}, {"type", type}}}};
        err << j.dump() << "\n";
    } else {
        err << "error: " << msg << "\n";
    }
}

void deliver(const CliConfig& cfg, std::ostream& out, const std::string& bytes) {
    if (cfg.output_path)
        write_file_atomic(*cfg.output_path, bytes);
    else
        out << bytes;
}

int run_checked(const CliConfig& cfg, std::ostream& out) {
    const QContext ctx{cfg.q.value_or(Complex(0.5, 0.0))};
    const EvalPolicy policy{cfg.max_terms, cfg.max_terms, cfg.tol, 3};
    const Complex a = cfg.alpha.value_or(Complex{});
    const Complex b = cfg.beta.value_or(Complex{});
    const Complex g = cfg.gamma.value_or(Complex{});
    const Complex xv = cfg.x.value_or(Complex{});
    const Complex yv = cfg.y.value_or(Complex{});

    if (cfg.subcommand == "eval") {
        EvalResult r;
        if (cfg.fn == "h6")
            r = eval_h6(HornPoint{a, b, g, xv, yv}, ctx, policy);
        else if (cfg.fn == "h7")
            r = eval_h7(HornPoint{a, b, g, xv, yv}, ctx, policy);
        else if (cfg.fn == "h6exp")
            r = eval_h6_exp(ExpHornPoint{a, b, g, xv, yv}, ctx, policy);
        else
            r = eval_h7_exp(ExpHornPoint{a, b, g, xv, yv}, ctx, policy);
        deliver(cfg, out, eval_to_string(r, cfg.format));
        return 0;
    }
    if (cfg.subcommand == "deriv") {
        const SeriesKind kind = cfg.fn == "h6" ? SeriesKind::H6 : SeriesKind::H7;
        const HornPoint pt{a, b, g, xv, yv};
        const EvalResult r = cfg.var == "x" ? q_partial_x(kind, pt, ctx, policy, cfg.order)
                                            : q_partial_y(kind, pt, ctx, policy, cfg.order);
        deliver(cfg, out, eval_to_string(r, cfg.format));
        return 0;
    }
    if (cfg.subcommand == "verify") {
        const IdentityRecord& rec = find_record(cfg.id);
        SamplerConfig scfg;
        scfg.seed = cfg.seed;
        scfg.n_points = 1;
        const SampleSet samples = sample_points(scfg, rec, ctx);
        const Verdict v = check_identity(rec, rec.readings.front(), samples.points.front(), ctx, policy);
        deliver(cfg, out, verdict_to_string(v, cfg.format));
        return 0;
    }
    if (cfg.subcommand == "audit") {
        SamplerConfig scfg;
        scfg.seed = cfg.seed;
        scfg.n_points = cfg.n_points;
        const AuditReport report = audit_all(scfg, ctx, policy, cfg.ids);
        deliver(cfg, out, render_report(report, cfg.format));
        return has_unresolved_failure(report) ? 1 : 0;
    }
    if (cfg.subcommand == "limit") {
        const SeriesKind kind =
            (cfg.fn == "h6" || cfg.fn == "h6exp") ? SeriesKind::H6 : SeriesKind::H7;
        const ExpHornPoint pt{a, b, g, xv, yv};
        const auto samples = classical_limit_check(kind, pt, cfg.q_values, policy);
        bool passed = true;
        for (size_t i = 1; i < samples.size(); ++i)
            if (samples[i].error > 1.1 * samples[i - 1].error) passed = false;
        if (!samples.empty() && !(samples.back().error < cfg.threshold)) passed = false;
        std::string bytes;
        if (cfg.format == Format::Json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& s : samples)
                arr.push_back(nlohmann::json{{"error", s.error}, {"q", s.q}});
            bytes = nlohmann::json{{"passed", passed},
                                   {"samples", arr},
                                   {"threshold", cfg.threshold}}
                        .dump(2) +
                    "\n";
        } else if (cfg.format == Format::Csv) {
            bytes = "q,error\n";
            for (const auto& s : samples) bytes += shortest(s.q) + "," + shortest(s.error) + "\n";
        } else {
            for (const auto& s : samples)
                bytes += "q=" + shortest(s.q) + "  error=" + shortest(s.error) + "\n";
            bytes += std::string("passed = ") + (passed ? "true" : "false") + "\n";
        }
        deliver(cfg, out, bytes);
        return 0;
    }
    throw UsageError("unknown subcommand: " + cfg.subcommand);
}

}  // namespace

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        return run_checked(cfg, out);
    } catch (const UsageError& e) {
        emit_error(err, cfg.format, "usage", e.what());
        return 2;
    } catch (const ConfigError& e) {
        emit_error(err, cfg.format, "usage", e.what());
        return 2;
    } catch (const DomainError& e) {
        emit_error(err, cfg.format, "domain", e.what());
        return 3;
    } catch (const OverflowError& e) {
        emit_error(err, cfg.format, "numeric", e.what());
        return 3;
    }
}

}  // namespace qhorn
