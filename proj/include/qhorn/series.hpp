#pragma once

#include <functional>
#include <vector>

#include "qhorn/types.hpp"

namespace qhorn {

enum class SeriesKind { H6, H7 };

/// Parameter/argument tuple for the basic Horn double series.
///
///   H6(alpha; beta; q, x, y)        = sum (alpha;q)_{2r+s} / [(beta;q)_{r+s} (q;q)_r (q;q)_s] x^r y^s
///   H7(alpha; beta, gamma; q, x, y) = sum (alpha;q)_{2r+s} / [(beta;q)_r (gamma;q)_s (q;q)_r (q;q)_s] x^r y^s
///
/// gamma is unused for H6. Validity domain: |x| < 1, |y| < 1, and beta (and
/// gamma for H7) stays pole_margin away from every point of {1, q^-1, q^-2, ...}.
struct HornPoint {
    Complex alpha{};
    Complex beta{};
    Complex gamma{};
    Complex x{};
    Complex y{};
};

/// Exponent form of the same series: parameters are q^a_exp, q^b_exp, q^c_exp.
struct ExpHornPoint {
    Complex a_exp{};
    Complex b_exp{};
    Complex c_exp{};
    Complex x{};
    Complex y{};
};

struct EvalPolicy {
    int max_r = 200;
    int max_s = 200;
    double rel_tol = 1e-12;
    int tail_block = 3;  // consecutive negligible anti-diagonals required to stop
};

struct EvalResult {
    Complex value{};
    long terms_used = 0;
    double tail_estimate = 0.0;
    bool truncated_cleanly = false;
};

/// Single term of H6 / H7 at index (r, s).
Complex term_h6(const HornPoint& pt, const QContext& ctx, long r, long s);
Complex term_h7(const HornPoint& pt, const QContext& ctx, long r, long s);

/// Truncated evaluation, summed by ascending anti-diagonals d = 2r + s.
/// Stops once policy.tail_block consecutive anti-diagonals are each negligible
/// against the partial sum and the geometric tail bound drops below
/// rel_tol * |value| + abs_tol; otherwise returns truncated_cleanly = false.
EvalResult eval_h6(const HornPoint& pt, const QContext& ctx, const EvalPolicy& policy);
EvalResult eval_h7(const HornPoint& pt, const QContext& ctx, const EvalPolicy& policy);

/// Exponent forms; delegate to eval_h6/eval_h7 with parameters q^a_exp, ...
EvalResult eval_h6_exp(const ExpHornPoint& pt, const QContext& ctx, const EvalPolicy& policy);
EvalResult eval_h7_exp(const ExpHornPoint& pt, const QContext& ctx, const EvalPolicy& policy);

HornPoint exp_to_plain(const ExpHornPoint& pt, const QContext& ctx);

/// One factor of a per-term bracket multiplier mu(r, s).
///
/// Writing w = r_coef*r + s_coef*s and g = q^q_shift * alpha^alpha_pow *
/// beta^beta_pow * gamma^gamma_pow (the parameter values of the evaluation
/// point), the factor contributes
///
///   Linear        : (1 - q^w g) / (1 - q)         e.g. [r]_q, [2r+s+alpha]_q
///   LinearSquared : ((1 - q^w g) / (1 - q))^2     e.g. [theta_x]_q[theta_x]_q
///   SquareInside  : (1 - q^(w*w)) / (1 - q)       e.g. [r^2]_q  (g unused)
struct BracketFactor {
    enum class Form { Linear, LinearSquared, SquareInside };
    Form form = Form::Linear;
    int r_coef = 0;
    int s_coef = 0;
    int q_shift = 0;
    int alpha_pow = 0;
    int beta_pow = 0;
    int gamma_pow = 0;
};

/// Scalar prefactor arguments: the evaluation point's unshifted parameter
/// values together with the base q.
struct Scalars {
    Complex a, b, c, x, y, q;
};
using Prefactor = std::function<Complex(const Scalars&)>;

/// One summand of an identity side: a base series with integer q-power
/// parameter shifts, argument scalings x -> x q^j / y -> y q^k, a scalar
/// prefactor and an optional per-term bracket multiplier.
///
/// Parameter shifts are carried as offsets and applied at evaluation time,
/// never pre-multiplied into the point.
struct TransformedSeries {
    SeriesKind kind = SeriesKind::H6;
    int alpha_shift = 0;
    int beta_shift = 0;
    int gamma_shift = 0;
    int x_scale_pow = 0;
    int y_scale_pow = 0;
    Prefactor prefactor;                  // empty => 1
    std::vector<BracketFactor> bracket;   // product over factors; empty => 1
};

EvalResult eval_transformed(const TransformedSeries& ts, const HornPoint& pt,
                            const QContext& ctx, const EvalPolicy& policy);

/// Order-r q-partial derivatives, closed forms:
///   D_{x,q}^r H6 = (alpha;q)_{2r} / [(beta;q)_r (1-q)^r]  H6(alpha q^{2r}; beta q^r; q, x, y)
///   D_{y,q}^r H6 = (alpha;q)_r   / [(beta;q)_r (1-q)^r]  H6(alpha q^r; beta q^r; q, x, y)
///   D_{x,q}^r H7 = (alpha;q)_{2r} / [(beta;q)_r (1-q)^r]  H7(alpha q^{2r}; beta q^r, gamma; q, x, y)
///   D_{y,q}^r H7 = (alpha;q)_r   / [(gamma;q)_r (1-q)^r]  H7(alpha q^r; beta, gamma q^r; q, x, y)
EvalResult q_partial_x(SeriesKind kind, const HornPoint& pt, const QContext& ctx,
                       const EvalPolicy& policy, int order);
EvalResult q_partial_y(SeriesKind kind, const HornPoint& pt, const QContext& ctx,
                       const EvalPolicy& policy, int order);

/// Same derivatives summed term-wise (each term picks up the falling product
/// [m]_q [m-1]_q ... [m-order+1]_q and loses order powers of the argument).
/// Requires x != 0 (resp. y != 0).
EvalResult q_partial_x_termwise(SeriesKind kind, const HornPoint& pt, const QContext& ctx,
                                const EvalPolicy& policy, int order);
EvalResult q_partial_y_termwise(SeriesKind kind, const HornPoint& pt, const QContext& ctx,
                                const EvalPolicy& policy, int order);

/// Classical (q-free) companion series with rising factorials,
///   sum (alpha)_{2r+s} / ((beta)_{r+s} r! s!) x^r y^s          (H6)
///   sum (alpha)_{2r+s} / ((beta)_r (gamma)_s r! s!) x^r y^s    (H7)
/// Converges for |x| < 1/4, |y| < 1 (the x-direction term ratio tends to 4x).
Complex classical_horn_oracle(SeriesKind kind, Complex alpha, Complex beta, Complex gamma,
                              Complex x, Complex y, const EvalPolicy& policy);

struct LimitSample {
    double q = 0.0;
    double error = 0.0;
};

/// Errors |H(q) - classical| along a sequence of real bases q -> 1^-.
///
/// The y direction of both series carries one extra q-factorial weight, so the
/// limit statement holds with the q-side evaluated at (x, (1-q) y); this
/// routine performs that scaling.
std::vector<LimitSample> classical_limit_check(SeriesKind kind, const ExpHornPoint& pt,
                                               const std::vector<double>& q_sequence,
                                               const EvalPolicy& policy);

}  // namespace qhorn
