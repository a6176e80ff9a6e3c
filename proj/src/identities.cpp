#include "qhorn/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "qhorn/qcore.hpp"

namespace qhorn {

namespace {

constexpr double kFailedThreshold = 1e-3;

// splitmix64: tiny, platform-stable generator for the rejection sampler.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

bool is_exp_family(Family f) { return f == Family::H6Exp || f == Family::H7Exp; }

HornPoint to_horn(Family fam, const SamplePoint& pt, const QContext& ctx) {
    if (is_exp_family(fam))
        return HornPoint{pow_principal(ctx.q, pt.alpha), pow_principal(ctx.q, pt.beta),
                         pow_principal(ctx.q, pt.gamma), pt.x, pt.y};
    return HornPoint{pt.alpha, pt.beta, pt.gamma, pt.x, pt.y};
}

// Pole screen shared by the sampler: the effective denominator parameters of
// every series in every reading must stay pole_margin away from {1, q^-1, ...}.
bool series_poles_clear(const IdentityRecord& rec, const HornPoint& hp, const QContext& ctx) {
    const double qmod = std::abs(ctx.q);
    auto clear = [&](Complex p) {
        Complex qk(1.0, 0.0);
        double qkmod = 1.0;
        const double pmod = std::abs(p);
        for (int k = 0; k < 128; ++k) {
            if (std::abs(1.0 - p * qk) <= ctx.pole_margin * qkmod) return false;
            qk *= ctx.q;
            qkmod *= qmod;
            if (pmod * qkmod < 1.0 - 10.0 * ctx.pole_margin) break;  // poles now out of reach
        }
        return true;
    };
    for (const auto& rd : rec.readings) {
        for (const auto* side : {&rd.lhs, &rd.rhs}) {
            for (const auto& ts : *side) {
                const Complex beta_eff = hp.beta * pow_int(ctx.q, ts.beta_shift);
                if (ts.kind == SeriesKind::H6) {
                    if (!clear(beta_eff)) return false;
                } else {
                    const Complex gamma_eff = hp.gamma * pow_int(ctx.q, ts.gamma_shift);
                    if (!clear(beta_eff) || !clear(gamma_eff)) return false;
                }
            }
        }
    }
    return true;
}

Verdict inconclusive_verdict(const IdentityRecord& rec, const Reading& rd, const SamplePoint& pt,
                             const QContext& ctx, std::string reason) {
    Verdict v;
    v.id = rec.id;
    v.variant = rd.label;
    v.point = pt;
    v.q = ctx.q;
    v.classification = Classification::Inconclusive;
    v.clean = false;
    v.reason = std::move(reason);
    return v;
}

int thread_cap_from_env() {
    const char* env = std::getenv("QHORN_THREADS");
    if (!env) return 0;
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n <= 0)
        throw ConfigError("QHORN_THREADS must be a positive integer");
    return static_cast<int>(n);
}

}  // namespace

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::Verified: return "VERIFIED";
        case Classification::Failed: return "FAILED";
        case Classification::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::string record_class_name(RecordClass c) {
    switch (c) {
        case RecordClass::Verified: return "VERIFIED";
        case RecordClass::Failed: return "FAILED";
        case RecordClass::Inconclusive: return "INCONCLUSIVE";
        case RecordClass::DiscrepantLiteral: return "DISCREPANT-LITERAL";
    }
    return "?";
}

Verdict check_identity(const IdentityRecord& rec, const Reading& reading, const SamplePoint& pt,
                       const QContext& ctx, const EvalPolicy& policy) {
    for (const auto& cons : rec.constraints)
        if (cons.distance(pt, ctx) <= ctx.pole_margin)
            throw DomainError(rec.id + ": point violates constraint " + cons.expr);

    const HornPoint hp = to_horn(rec.family, pt, ctx);
    Complex lhs(0.0, 0.0), rhs(0.0, 0.0);
    double term_mag = 0.0;
    bool clean = true;
    for (const auto& ts : reading.lhs) {
        const EvalResult r = eval_transformed(ts, hp, ctx, policy);
        lhs += r.value;
        term_mag += std::abs(r.value);
        clean = clean && r.truncated_cleanly;
    }
    for (const auto& ts : reading.rhs) {
        const EvalResult r = eval_transformed(ts, hp, ctx, policy);
        rhs += r.value;
        term_mag += std::abs(r.value);
        clean = clean && r.truncated_cleanly;
    }

    Verdict v;
    v.id = rec.id;
    v.variant = reading.label;
    v.point = pt;
    v.q = ctx.q;
    v.lhs_value = lhs;
    v.rhs_value = rhs;
    v.abs_residual = std::abs(lhs - rhs);
    const double denom = std::max({std::abs(lhs), std::abs(rhs), ctx.abs_tol});
    v.rel_residual = v.abs_residual / denom;
    v.cond = std::max(1.0, term_mag / denom);
    v.clean = clean;
    if (!clean) {
        v.classification = Classification::Inconclusive;
        v.reason = "series truncation did not converge cleanly";
    } else if (v.rel_residual <= 10.0 * policy.rel_tol * v.cond) {
        v.classification = Classification::Verified;
    } else if (v.rel_residual >= kFailedThreshold) {
        v.classification = Classification::Failed;
    } else {
        v.classification = Classification::Inconclusive;
        v.reason = "residual between the verified and failed thresholds";
    }
    return v;
}

Verdict check_identity(const std::string& id, const SamplePoint& pt, const QContext& ctx,
                       const EvalPolicy& policy) {
    const IdentityRecord& rec = find_record(id);
    return check_identity(rec, rec.readings.front(), pt, ctx, policy);
}

Verdict check_derivative_identity(const std::string& id, const SamplePoint& pt,
                                  const QContext& ctx, const EvalPolicy& policy, int order) {
    if (order < 1) throw DomainError("check_derivative_identity: order must be >= 1");
    const IdentityRecord& rec = find_record(id);
    SeriesKind kind;
    bool on_x;
    if (id == "E2.9") {
        kind = SeriesKind::H7;
        on_x = true;
    } else if (id == "E2.10") {
        kind = SeriesKind::H7;
        on_x = false;
    } else if (id == "E2.11") {
        kind = SeriesKind::H6;
        on_x = true;
    } else if (id == "E2.12") {
        kind = SeriesKind::H6;
        on_x = false;
    } else {
        throw ConfigError("check_derivative_identity applies to E2.9..E2.12 only, got " + id);
    }
    for (const auto& cons : rec.constraints)
        if (cons.distance(pt, ctx) <= ctx.pole_margin)
            throw DomainError(rec.id + ": point violates constraint " + cons.expr);

    const HornPoint hp = to_horn(rec.family, pt, ctx);
    const EvalResult closed =
        on_x ? q_partial_x(kind, hp, ctx, policy, order) : q_partial_y(kind, hp, ctx, policy, order);

    // Iterated black-box difference quotients of the plain evaluator.
    std::function<Complex(Complex, int)> dq = [&](Complex z, int ord) -> Complex {
        if (ord == 0) {
            HornPoint p2 = hp;
            (on_x ? p2.x : p2.y) = z;
            return (kind == SeriesKind::H6 ? eval_h6(p2, ctx, policy) : eval_h7(p2, ctx, policy))
                .value;
        }
        if (z == Complex(0.0, 0.0))
            throw DomainError("check_derivative_identity: quotient route needs a nonzero argument");
        return (dq(z, ord - 1) - dq(ctx.q * z, ord - 1)) / ((Complex(1.0, 0.0) - ctx.q) * z);
    };
    const Complex quotient = dq(on_x ? hp.x : hp.y, order);

    Verdict v;
    v.id = id;
    v.variant = "order-" + std::to_string(order);
    v.point = pt;
    v.q = ctx.q;
    v.lhs_value = quotient;
    v.rhs_value = closed.value;
    v.abs_residual = std::abs(quotient - closed.value);
    const double denom = std::max({std::abs(quotient), std::abs(closed.value), ctx.abs_tol});
    v.rel_residual = v.abs_residual / denom;
    v.cond = std::max(1.0, (std::abs(quotient) + std::abs(closed.value)) / denom);
    v.clean = closed.truncated_cleanly;
    if (!v.clean) {
        v.classification = Classification::Inconclusive;
        v.reason = "series truncation did not converge cleanly";
    } else if (v.rel_residual <= 1e-8) {
        v.classification = Classification::Verified;
    } else if (v.rel_residual >= kFailedThreshold) {
        v.classification = Classification::Failed;
    } else {
        v.classification = Classification::Inconclusive;
        v.reason = "residual between the verified and failed thresholds";
    }
    return v;
}

Complex draw_q(const SamplerConfig& cfg, std::uint64_t stream, bool complex_phase) {
    Rng rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    const double mod = cfg.q_mod_min + (cfg.q_mod_max - cfg.q_mod_min) * rng.uniform();
    if (!complex_phase) return Complex(mod, 0.0);
    const double ph = (rng.uniform() - 0.5) * 1.5;  // keep away from the branch cut
    return std::polar(mod, ph);
}

SampleSet sample_points(const SamplerConfig& cfg, const IdentityRecord& rec, const QContext& ctx) {
    if (cfg.n_points < 1 || !(cfg.x_y_radius > 0.0) || !(cfg.x_y_radius < 1.0))
        throw ConfigError("SamplerConfig: n_points >= 1 and 0 < x_y_radius < 1 required");
    Rng rng(cfg.seed ^ fnv1a(rec.id));
    SampleSet out;
    out.points.reserve(cfg.n_points);
    const long max_attempts = 1000L * cfg.n_points;
    long attempts = 0;
    const bool exp_fam = is_exp_family(rec.family);
    const Complex logq = std::log(ctx.q);
    while (static_cast<long>(out.points.size()) < cfg.n_points) {
        if (++attempts > max_attempts)
            throw ConfigError("sample_points: rejection rate above 99.9% for " + rec.id);
        auto draw_param = [&]() {
            const double mod =
                cfg.param_mod_min + (cfg.param_mod_max - cfg.param_mod_min) * rng.uniform();
            const double ph = rng.uniform() * 6.283185307179586;
            return std::polar(mod, ph);
        };
        auto draw_arg = [&]() {
            const double mod = cfg.x_y_radius * std::sqrt(rng.uniform());
            const double ph = rng.uniform() * 6.283185307179586;
            return std::polar(mod, ph);
        };
        SamplePoint pt;
        pt.alpha = draw_param();
        pt.beta = draw_param();
        pt.gamma = draw_param();
        pt.x = draw_arg();
        pt.y = draw_arg();
        if (exp_fam) {
            // the sampled values are the parameter values; store their exponents
            pt.alpha = std::log(pt.alpha) / logq;
            pt.beta = std::log(pt.beta) / logq;
            pt.gamma = std::log(pt.gamma) / logq;
        }
        bool ok = true;
        for (const auto& cons : rec.constraints) {
            if (cons.distance(pt, ctx) <= ctx.pole_margin) {
                ok = false;
                break;
            }
        }
        if (ok) ok = series_poles_clear(rec, to_horn(rec.family, pt, ctx), ctx);
        if (ok)
            out.points.push_back(pt);
        else
            ++out.rejected;
    }
    return out;
}

std::optional<double> origin_residual(const IdentityRecord& rec, const Reading& reading,
                                      const SamplePoint& params, const QContext& ctx,
                                      const EvalPolicy& policy) {
    SamplePoint pt = params;
    pt.x = Complex(0.0, 0.0);
    pt.y = Complex(0.0, 0.0);
    try {
        const Verdict v = check_identity(rec, reading, pt, ctx, policy);
        return v.abs_residual;
    } catch (const DomainError&) {
        return std::nullopt;
    } catch (const OverflowError&) {
        return std::nullopt;
    }
}

AuditReport audit_all(const SamplerConfig& cfg, const QContext& ctx, const EvalPolicy& policy,
                      const std::vector<std::string>& id_filter, int max_threads) {
    std::vector<const IdentityRecord*> records;
    if (id_filter.empty()) {
        for (const auto& r : registry()) records.push_back(&r);
    } else {
        for (const auto& id : id_filter) records.push_back(&find_record(id));
    }

    AuditReport report;
    report.seed = cfg.seed;
    report.q = ctx.q;
    report.policy = policy;
    report.sampler = cfg;
    report.identities.resize(records.size());

    std::atomic<size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= records.size()) return;
            const IdentityRecord& rec = *records[i];
            IdentityOutcome out;
            out.id = rec.id;
            out.eq = rec.eq;
            out.family = rec.family;
            out.n_points = cfg.n_points;
            SampleSet samples = sample_points(cfg, rec, ctx);
            out.sampler_rejected = samples.rejected;
            for (const auto& rd : rec.readings) {
                ReadingOutcome ro;
                ro.label = rd.label;
                bool any_failed = false, all_verified = true, have_worst = false;
                for (const auto& pt : samples.points) {
                    Verdict v;
                    try {
                        v = check_identity(rec, rd, pt, ctx, policy);
                    } catch (const std::exception& e) {
                        v = inconclusive_verdict(rec, rd, pt, ctx, e.what());
                    }
                    if (v.classification == Classification::Failed) any_failed = true;
                    if (v.classification != Classification::Verified) all_verified = false;
                    if (v.classification == Classification::Inconclusive) ++ro.n_inconclusive;
                    if (!have_worst || v.rel_residual > ro.worst.rel_residual) {
                        ro.worst = v;
                        have_worst = true;
                    }
                    ro.max_rel_residual = std::max(ro.max_rel_residual, v.rel_residual);
                }
                ro.classification = any_failed ? Classification::Failed
                                   : all_verified ? Classification::Verified
                                                  : Classification::Inconclusive;
                out.readings.push_back(std::move(ro));
            }
            const ReadingOutcome& lit = out.readings.front();
            const ReadingOutcome* passing_variant = nullptr;
            for (size_t k = 1; k < out.readings.size(); ++k)
                if (out.readings[k].classification == Classification::Verified) {
                    passing_variant = &out.readings[k];
                    break;
                }
            if (lit.classification == Classification::Failed && passing_variant) {
                out.record_class = RecordClass::DiscrepantLiteral;
                out.headline_variant = passing_variant->label;
                out.max_rel_residual = lit.max_rel_residual;  // the discrepancy evidence
                out.witness = lit.worst;
            } else {
                switch (lit.classification) {
                    case Classification::Verified: out.record_class = RecordClass::Verified; break;
                    case Classification::Failed: out.record_class = RecordClass::Failed; break;
                    case Classification::Inconclusive:
                        out.record_class = RecordClass::Inconclusive;
                        break;
                }
                out.headline_variant = lit.label;
                out.max_rel_residual = lit.max_rel_residual;
                out.witness = lit.worst;
            }
            report.identities[i] = std::move(out);
        }
    };

    int threads = max_threads > 0 ? max_threads : thread_cap_from_env();
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, static_cast<int>(records.size() ? records.size() : 1));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return report;
}

}  // namespace qhorn
