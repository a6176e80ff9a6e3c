#include "qhorn/series.hpp"

#include <algorithm>
#include <cmath>

#include "qhorn/qcore.hpp"

namespace qhorn {

namespace {

constexpr Complex kOne(1.0, 0.0);

// Prefix products v[n] = (eta; q)_n grown by the shift recurrence
// (eta;q)_n = (1 - eta q^{n-1}) (eta;q)_{n-1}.
struct PochTable {
    Complex eta{};
    bool guard = false;  // pole-guard each new factor (denominator parameters)
    std::vector<Complex> v;

    void reset(Complex e, bool g) {
        eta = e;
        guard = g;
        v.assign(1, kOne);
    }
};

struct QPowers {
    Complex q{};
    std::vector<Complex> v;  // v[n] = q^n

    void reset(Complex base) {
        q = base;
        v.assign(1, kOne);
    }
    const Complex& at(long n) {
        while (static_cast<long>(v.size()) <= n) v.push_back(v.back() * q);
        return v[static_cast<size_t>(n)];
    }
};

struct ArgPowers {
    Complex z{};
    std::vector<Complex> v;

    void reset(Complex base) {
        z = base;
        v.assign(1, kOne);
    }
    const Complex& at(long n) {
        while (static_cast<long>(v.size()) <= n) v.push_back(v.back() * z);
        return v[static_cast<size_t>(n)];
    }
};

void grow_poch(PochTable& t, QPowers& qp, const QContext& ctx, long n) {
    while (static_cast<long>(t.v.size()) <= n) {
        const long k = static_cast<long>(t.v.size()) - 1;
        const Complex qk = qp.at(k);
        const Complex factor = kOne - t.eta * qk;
        if (t.guard && std::abs(factor) <= ctx.pole_margin * std::abs(qk))
            throw DomainError("series: denominator parameter within pole_margin of q^-" +
                              std::to_string(k));
        t.v.push_back(t.v.back() * factor);
    }
}

struct ResolvedFactor {
    BracketFactor::Form form;
    int r_coef, s_coef;
    Complex g;  // q^q_shift * alpha^alpha_pow * beta^beta_pow * gamma^gamma_pow
};

// Effective series after shifts: parameters A, B, C and arguments X, Y.
struct SeriesSpec {
    SeriesKind kind;
    Complex A, B, C, X, Y;
    std::vector<ResolvedFactor> bracket;
};

Complex bracket_mu(const SeriesSpec& spec, QPowers& qp, const QContext& ctx, long r, long s) {
    Complex mu = kOne;
    const Complex inv1q = kOne / (kOne - ctx.q);
    for (const auto& f : spec.bracket) {
        const long w = static_cast<long>(f.r_coef) * r + static_cast<long>(f.s_coef) * s;
        Complex val;
        if (f.form == BracketFactor::Form::SquareInside) {
            val = (kOne - pow_int(ctx.q, w * w)) * inv1q;
        } else {
            val = (kOne - qp.at(w) * f.g) * inv1q;
            if (f.form == BracketFactor::Form::LinearSquared) val *= val;
        }
        mu *= val;
    }
    return mu;
}

// Anti-diagonal summation d = 2r + s ascending, within-diagonal ascending r.
// Terms come from prefix Pochhammer tables; each term is assembled as a chain
// of small quotients so that an underflowing denominator product cannot poison
// an otherwise representable term.
EvalResult sum_series(const SeriesSpec& spec, const QContext& ctx, const EvalPolicy& policy) {
    if (policy.max_r < 1 || policy.max_s < 1 || !(policy.rel_tol > 0.0) || policy.tail_block < 1)
        throw ConfigError("EvalPolicy: max_r, max_s >= 1; rel_tol > 0; tail_block >= 1");
    if (std::abs(spec.X) >= 1.0 || std::abs(spec.Y) >= 1.0)
        throw DomainError("series: arguments must satisfy |x| < 1, |y| < 1");

    QPowers qp;
    qp.reset(ctx.q);
    PochTable pa, pb, pc, pq;
    pa.reset(spec.A, false);
    pb.reset(spec.B, true);
    pc.reset(spec.C, true);
    pq.reset(ctx.q, false);
    ArgPowers xp, yp;
    xp.reset(spec.X);
    yp.reset(spec.Y);

    const long d_max = 2L * policy.max_r + policy.max_s;
    const bool has_bracket = !spec.bracket.empty();

    Complex sum(0.0, 0.0);
    long terms = 0;
    int negligible_run = 0;
    std::vector<double> diag_mag;
    diag_mag.reserve(64);

    auto tail_bound = [&](double& out) {
        // Geometric extrapolation from the observed last-block ratio; falls
        // back to the argument moduli when the block has too few nonzero rungs.
        const int nb = policy.tail_block;
        const long n = static_cast<long>(diag_mag.size());
        double m = 0.0;
        for (long i = std::max<long>(0, n - nb); i < n; ++i) m = std::max(m, diag_mag[i]);
        if (m == 0.0) {
            out = 0.0;
            return;
        }
        double ratio = -1.0;
        for (long i = n - 1; i > 0 && i + nb >= n; --i) {
            if (diag_mag[i] > 0.0 && diag_mag[i - 1] > 0.0) {
                ratio = diag_mag[i] / diag_mag[i - 1];
                break;
            }
        }
        if (ratio < 0.0) ratio = std::max(std::abs(spec.X), std::abs(spec.Y));
        ratio = std::clamp(ratio, 0.0, 0.95);
        out = m * ratio / (1.0 - ratio);
    };

    double tail = 0.0;
    bool clean = false;
    for (long d = 0; d <= d_max; ++d) {
        grow_poch(pa, qp, ctx, d);
        const long r_hi = std::min<long>(policy.max_r, d / 2);
        const long r_lo = std::max<long>(0, (d - policy.max_s + 1) / 2);
        Complex diag(0.0, 0.0);
        for (long r = r_lo; r <= r_hi; ++r) {
            const long s = d - 2 * r;
            grow_poch(pq, qp, ctx, std::max(r, s));
            Complex t;
            if (spec.kind == SeriesKind::H6) {
                grow_poch(pb, qp, ctx, r + s);
                t = (pa.v[d] / pb.v[r + s]) * (xp.at(r) / pq.v[r]) * (yp.at(s) / pq.v[s]);
            } else {
                grow_poch(pb, qp, ctx, r);
                grow_poch(pc, qp, ctx, s);
                t = (pa.v[d] / pb.v[r]) * (xp.at(r) / pq.v[r]) * ((yp.at(s) / pq.v[s]) / pc.v[s]);
            }
            if (has_bracket) t *= bracket_mu(spec, qp, ctx, r, s);
            if (!is_finite(t))
                throw OverflowError("series: term at (r=" + std::to_string(r) +
                                    ", s=" + std::to_string(s) +
                                    ") is not finite (overflow or table underflow)");
            diag += t;
            ++terms;
        }
        sum += diag;
        diag_mag.push_back(std::abs(diag));
        if (!is_finite(sum)) throw OverflowError("series: partial sum is not finite");

        const double thresh = policy.rel_tol * std::abs(sum) + ctx.abs_tol;
        if (diag_mag.back() <= thresh)
            ++negligible_run;
        else
            negligible_run = 0;
        if (negligible_run >= policy.tail_block) {
            tail_bound(tail);
            if (tail <= thresh) {
                clean = true;
                break;
            }
        }
    }
    if (!clean) tail_bound(tail);
    return EvalResult{sum, terms, tail, clean};
}

SeriesSpec make_spec(const TransformedSeries& ts, const HornPoint& pt, const QContext& ctx) {
    SeriesSpec spec;
    spec.kind = ts.kind;
    spec.A = pt.alpha * pow_int(ctx.q, ts.alpha_shift);
    spec.B = pt.beta * pow_int(ctx.q, ts.beta_shift);
    spec.C = pt.gamma * pow_int(ctx.q, ts.gamma_shift);
    spec.X = pt.x * pow_int(ctx.q, ts.x_scale_pow);
    spec.Y = pt.y * pow_int(ctx.q, ts.y_scale_pow);
    spec.bracket.reserve(ts.bracket.size());
    for (const auto& f : ts.bracket) {
        Complex g = pow_int(ctx.q, f.q_shift);
        if (f.alpha_pow) g *= pow_int(pt.alpha, f.alpha_pow);
        if (f.beta_pow) g *= pow_int(pt.beta, f.beta_pow);
        if (f.gamma_pow) g *= pow_int(pt.gamma, f.gamma_pow);
        spec.bracket.push_back(ResolvedFactor{f.form, f.r_coef, f.s_coef, g});
    }
    return spec;
}

EvalResult eval_plain(SeriesKind kind, const HornPoint& pt, const QContext& ctx,
                      const EvalPolicy& policy) {
    SeriesSpec spec;
    spec.kind = kind;
    spec.A = pt.alpha;
    spec.B = pt.beta;
    spec.C = pt.gamma;
    spec.X = pt.x;
    spec.Y = pt.y;
    return sum_series(spec, ctx, policy);
}

}  // namespace

Complex term_h6(const HornPoint& pt, const QContext& ctx, long r, long s) {
    if (r < 0 || s < 0) throw DomainError("term_h6: indices must be nonnegative");
    for (long k = 0; k < r + s; ++k) {
        const Complex qpk = pow_int(ctx.q, k);
        if (std::abs(kOne - pt.beta * qpk) <= ctx.pole_margin * std::abs(qpk))
            throw DomainError("term_h6: beta within pole_margin of q^-" + std::to_string(k));
    }
    const Complex t = q_pochhammer(pt.alpha, ctx, 2 * r + s) /
                      (q_pochhammer(pt.beta, ctx, r + s) * q_pochhammer(ctx.q, ctx, r) *
                       q_pochhammer(ctx.q, ctx, s)) *
                      pow_int(pt.x, r) * pow_int(pt.y, s);
    if (!is_finite(t)) throw OverflowError("term_h6: term is not finite");
    return t;
}

Complex term_h7(const HornPoint& pt, const QContext& ctx, long r, long s) {
    if (r < 0 || s < 0) throw DomainError("term_h7: indices must be nonnegative");
    for (long k = 0; k < r; ++k) {
        const Complex qpk = pow_int(ctx.q, k);
        if (std::abs(kOne - pt.beta * qpk) <= ctx.pole_margin * std::abs(qpk))
            throw DomainError("term_h7: beta within pole_margin of q^-" + std::to_string(k));
    }
    for (long k = 0; k < s; ++k) {
        const Complex qpk = pow_int(ctx.q, k);
        if (std::abs(kOne - pt.gamma * qpk) <= ctx.pole_margin * std::abs(qpk))
            throw DomainError("term_h7: gamma within pole_margin of q^-" + std::to_string(k));
    }
    const Complex t = q_pochhammer(pt.alpha, ctx, 2 * r + s) /
                      (q_pochhammer(pt.beta, ctx, r) * q_pochhammer(pt.gamma, ctx, s) *
                       q_pochhammer(ctx.q, ctx, r) * q_pochhammer(ctx.q, ctx, s)) *
                      pow_int(pt.x, r) * pow_int(pt.y, s);
    if (!is_finite(t)) throw OverflowError("term_h7: term is not finite");
    return t;
}

EvalResult eval_h6(const HornPoint& pt, const QContext& ctx, const EvalPolicy& policy) {
    return eval_plain(SeriesKind::H6, pt, ctx, policy);
}

EvalResult eval_h7(const HornPoint& pt, const QContext& ctx, const EvalPolicy& policy) {
    return eval_plain(SeriesKind::H7, pt, ctx, policy);
}

HornPoint exp_to_plain(const ExpHornPoint& pt, const QContext& ctx) {
    return HornPoint{pow_principal(ctx.q, pt.a_exp), pow_principal(ctx.q, pt.b_exp),
                     pow_principal(ctx.q, pt.c_exp), pt.x, pt.y};
}

EvalResult eval_h6_exp(const ExpHornPoint& pt, const QContext& ctx, const EvalPolicy& policy) {
    return eval_h6(exp_to_plain(pt, ctx), ctx, policy);
}

EvalResult eval_h7_exp(const ExpHornPoint& pt, const QContext& ctx, const EvalPolicy& policy) {
    return eval_h7(exp_to_plain(pt, ctx), ctx, policy);
}

EvalResult eval_transformed(const TransformedSeries& ts, const HornPoint& pt,
                            const QContext& ctx, const EvalPolicy& policy) {
    EvalResult res = sum_series(make_spec(ts, pt, ctx), ctx, policy);
    if (ts.prefactor) {
        const Complex pf = ts.prefactor(Scalars{pt.alpha, pt.beta, pt.gamma, pt.x, pt.y, ctx.q});
        if (!is_finite(pf)) throw OverflowError("eval_transformed: prefactor is not finite");
        res.value *= pf;
        res.tail_estimate *= std::abs(pf);
        if (!is_finite(res.value)) throw OverflowError("eval_transformed: value is not finite");
    }
    return res;
}

namespace {

// Guard the (beta;q)_order style prefactor denominators of the closed forms.
void guard_prefix_poles(Complex eta, const QContext& ctx, int order, const char* name) {
    Complex qk = kOne;
    for (int k = 0; k < order; ++k) {
        if (std::abs(kOne - eta * qk) <= ctx.pole_margin * std::abs(qk))
            throw DomainError(std::string("q_partial: ") + name + " within pole_margin of q^-" +
                              std::to_string(k));
        qk *= ctx.q;
    }
}

}  // namespace

EvalResult q_partial_x(SeriesKind kind, const HornPoint& pt, const QContext& ctx,
                       const EvalPolicy& policy, int order) {
    if (order < 1) throw DomainError("q_partial_x: order must be >= 1");
    guard_prefix_poles(pt.beta, ctx, order, "beta");
    const Complex coef = q_pochhammer(pt.alpha, ctx, 2 * order) /
                         (q_pochhammer(pt.beta, ctx, order) * pow_int(kOne - ctx.q, order));
    HornPoint shifted = pt;
    shifted.alpha = pt.alpha * pow_int(ctx.q, 2 * order);
    shifted.beta = pt.beta * pow_int(ctx.q, order);
    EvalResult res = eval_plain(kind, shifted, ctx, policy);
    res.value *= coef;
    res.tail_estimate *= std::abs(coef);
    if (!is_finite(res.value)) throw OverflowError("q_partial_x: value is not finite");
    return res;
}

EvalResult q_partial_y(SeriesKind kind, const HornPoint& pt, const QContext& ctx,
                       const EvalPolicy& policy, int order) {
    if (order < 1) throw DomainError("q_partial_y: order must be >= 1");
    HornPoint shifted = pt;
    shifted.alpha = pt.alpha * pow_int(ctx.q, order);
    Complex den;
    if (kind == SeriesKind::H6) {
        guard_prefix_poles(pt.beta, ctx, order, "beta");
        den = q_pochhammer(pt.beta, ctx, order);
        shifted.beta = pt.beta * pow_int(ctx.q, order);
    } else {
        guard_prefix_poles(pt.gamma, ctx, order, "gamma");
        den = q_pochhammer(pt.gamma, ctx, order);
        shifted.gamma = pt.gamma * pow_int(ctx.q, order);
    }
    const Complex coef = q_pochhammer(pt.alpha, ctx, order) / (den * pow_int(kOne - ctx.q, order));
    EvalResult res = eval_plain(kind, shifted, ctx, policy);
    res.value *= coef;
    res.tail_estimate *= std::abs(coef);
    if (!is_finite(res.value)) throw OverflowError("q_partial_y: value is not finite");
    return res;
}

EvalResult q_partial_x_termwise(SeriesKind kind, const HornPoint& pt, const QContext& ctx,
                                const EvalPolicy& policy, int order) {
    if (order < 1) throw DomainError("q_partial_x_termwise: order must be >= 1");
    if (pt.x == Complex(0.0, 0.0))
        throw DomainError("q_partial_x_termwise: x = 0 (use the closed form)");
    TransformedSeries ts;
    ts.kind = kind;
    for (int i = 0; i < order; ++i)
        ts.bracket.push_back(BracketFactor{BracketFactor::Form::Linear, 1, 0, -i, 0, 0, 0});
    EvalResult res = eval_transformed(ts, pt, ctx, policy);
    const Complex scale = pow_int(pt.x, order);
    res.value /= scale;
    res.tail_estimate /= std::abs(scale);
    return res;
}

EvalResult q_partial_y_termwise(SeriesKind kind, const HornPoint& pt, const QContext& ctx,
                                const EvalPolicy& policy, int order) {
    if (order < 1) throw DomainError("q_partial_y_termwise: order must be >= 1");
    if (pt.y == Complex(0.0, 0.0))
        throw DomainError("q_partial_y_termwise: y = 0 (use the closed form)");
    TransformedSeries ts;
    ts.kind = kind;
    for (int i = 0; i < order; ++i)
        ts.bracket.push_back(BracketFactor{BracketFactor::Form::Linear, 0, 1, -i, 0, 0, 0});
    EvalResult res = eval_transformed(ts, pt, ctx, policy);
    const Complex scale = pow_int(pt.y, order);
    res.value /= scale;
    res.tail_estimate /= std::abs(scale);
    return res;
}

Complex classical_horn_oracle(SeriesKind kind, Complex alpha, Complex beta, Complex gamma,
                              Complex x, Complex y, const EvalPolicy& policy) {
    if (std::abs(x) >= 0.25 || std::abs(y) >= 1.0)
        throw DomainError("classical_horn_oracle: requires |x| < 1/4 and |y| < 1");
    const double eps = 1e-17;
    Complex total(0.0, 0.0);
    Complex row_head(1.0, 0.0);  // t(r, 0)
    for (int r = 0; r < policy.max_r; ++r) {
        if (r > 0) {
            // The x-direction denominator weight is (beta)_r for both kinds.
            const Complex den = beta + Complex(r - 1.0, 0.0);
            if (std::abs(den) < 1e-12)
                throw DomainError("classical_horn_oracle: denominator parameter hits a nonpositive integer");
            row_head *= (alpha + Complex(2.0 * r - 2.0, 0.0)) * (alpha + Complex(2.0 * r - 1.0, 0.0)) /
                        (den * Complex(static_cast<double>(r), 0.0)) * x;
        }
        Complex t = row_head;
        Complex row = t;
        for (int s = 1; s < policy.max_s; ++s) {
            const Complex den = (kind == SeriesKind::H6 ? beta + Complex(r + s - 1.0, 0.0)
                                                        : gamma + Complex(s - 1.0, 0.0));
            if (std::abs(den) < 1e-12)
                throw DomainError("classical_horn_oracle: denominator parameter hits a nonpositive integer");
            t *= (alpha + Complex(2.0 * r + s - 1.0, 0.0)) / (den * Complex(static_cast<double>(s), 0.0)) * y;
            row += t;
            if (std::abs(t) < eps * (std::abs(total) + std::abs(row))) break;
        }
        total += row;
        if (!is_finite(total)) throw OverflowError("classical_horn_oracle: sum is not finite");
        if (r > 4 && std::abs(row) < eps * std::abs(total)) break;
    }
    return total;
}

std::vector<LimitSample> classical_limit_check(SeriesKind kind, const ExpHornPoint& pt,
                                               const std::vector<double>& q_sequence,
                                               const EvalPolicy& policy) {
    if (q_sequence.empty()) throw DomainError("classical_limit_check: empty q sequence");
    double prev = 0.0;
    for (size_t i = 0; i < q_sequence.size(); ++i) {
        if (!(q_sequence[i] > 0.0) || !(q_sequence[i] < 1.0) || (i > 0 && q_sequence[i] <= prev))
            throw DomainError("classical_limit_check: q values must increase strictly within (0,1)");
        prev = q_sequence[i];
    }
    const Complex target =
        classical_horn_oracle(kind, pt.a_exp, pt.b_exp, pt.c_exp, pt.x, pt.y, policy);
    std::vector<LimitSample> out;
    out.reserve(q_sequence.size());
    for (double qv : q_sequence) {
        QContext ctx{Complex(qv, 0.0)};
        ExpHornPoint scaled = pt;
        scaled.y = pt.y * Complex(1.0 - qv, 0.0);
        const EvalResult r = (kind == SeriesKind::H6) ? eval_h6_exp(scaled, ctx, policy)
                                                      : eval_h7_exp(scaled, ctx, policy);
        out.push_back(LimitSample{qv, std::abs(r.value - target)});
    }
    return out;
}

}  // namespace qhorn
