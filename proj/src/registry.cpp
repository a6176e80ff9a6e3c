#include <utility>

#include "qhorn/identities.hpp"

// The identity catalogue. Every record encodes one printed equation verbatim
// as lists of transformed series; amended readings (suspected misprints,
// alternate bracket-operator semantics) ride along as extra readings so the
// audit can report both, never silently rewriting the source formula.
//
// Bracket-operator semantics used throughout:
//   [theta_x]_q            -> per-term multiplier [r]_q     (forced by the
//   [2theta_x+theta_y+a]_q -> [2r+s+a]_q                     series expansion
//   [theta_x]_q[theta_y]_q -> [r]_q [s]_q                    of the operators)
//   theta_x F(xq)          -> [r]_q on the series already rescaled to xq
//   [theta_x^2]_q          -> ([r]_q)^2 literally; [r^2]_q as a variant
//   D_{a,q} F              -> (F(a) - F(aq)) / ((1-q) a)

namespace qhorn {

namespace {

constexpr SeriesKind H6 = SeriesKind::H6;
constexpr SeriesKind H7 = SeriesKind::H7;
using BF = BracketFactor;

// ---- bracket factor builders -------------------------------------------

BF mu_r() { return BF{BF::Form::Linear, 1, 0, 0, 0, 0, 0}; }
BF mu_s() { return BF{BF::Form::Linear, 0, 1, 0, 0, 0, 0}; }
BF mu_lin(int rc, int sc, int qs = 0, int ap = 0, int bp = 0, int cp = 0) {
    return BF{BF::Form::Linear, rc, sc, qs, ap, bp, cp};
}
BF mu_sq(BF f) {
    f.form = BF::Form::LinearSquared;
    return f;
}
BF mu_r2() { return BF{BF::Form::SquareInside, 1, 0, 0, 0, 0, 0}; }
BF mu_s2() { return BF{BF::Form::SquareInside, 0, 1, 0, 0, 0, 0}; }

// square token [theta^2] under the two registered readings
BF sq_r(bool inside) { return inside ? mu_r2() : mu_sq(mu_r()); }
BF sq_s(bool inside) { return inside ? mu_s2() : mu_sq(mu_s()); }

// ---- term builder --------------------------------------------------------

struct T {
    TransformedSeries ts;
    explicit T(SeriesKind k) { ts.kind = k; }
    T& A(int n) {
        ts.alpha_shift = n;
        return *this;
    }
    T& B(int n) {
        ts.beta_shift = n;
        return *this;
    }
    T& G(int n) {
        ts.gamma_shift = n;
        return *this;
    }
    T& X(int n) {
        ts.x_scale_pow = n;
        return *this;
    }
    T& Y(int n) {
        ts.y_scale_pow = n;
        return *this;
    }
    T& P(Prefactor p) {
        ts.prefactor = std::move(p);
        return *this;
    }
    T& M(BF f) {
        ts.bracket.push_back(f);
        return *this;
    }
    operator TransformedSeries() const { return ts; }
};

// Scalar prefactor in terms of the point's parameter values a, b, c (for the
// exponent families these are q^alpha, q^beta, q^gamma), arguments x, y and q.
#define PF(...)                                                     \
    Prefactor([](const Scalars& v) -> Complex {                     \
        const auto& [a, b, c, x, y, q] = v;                         \
        (void)a, (void)b, (void)c, (void)x, (void)y, (void)q;       \
        return (__VA_ARGS__);                                       \
    })

Reading reading(std::string label, std::string rationale, std::vector<TransformedSeries> lhs,
                std::vector<TransformedSeries> rhs) {
    return Reading{std::move(label), std::move(rationale), std::move(lhs), std::move(rhs)};
}

Reading literal(std::vector<TransformedSeries> lhs, std::vector<TransformedSeries> rhs) {
    return reading("literal", "as printed", std::move(lhs), std::move(rhs));
}

// ---- constraint builders -------------------------------------------------

Complex pick(const SamplePoint& p, char which) {
    return which == 'a' ? p.alpha : (which == 'b' ? p.beta : p.gamma);
}

std::string pname(char which) { return which == 'a' ? "α" : (which == 'b' ? "β" : "γ"); }

Constraint ne_one(char w) {
    return Constraint{pname(w) + " ≠ 1", [w](const SamplePoint& p, const QContext&) {
                          return std::abs(1.0 - pick(p, w));
                      }};
}
Constraint ne_zero(char w) {
    return Constraint{pname(w) + " ≠ 0", [w](const SamplePoint& p, const QContext&) {
                          return std::abs(pick(p, w));
                      }};
}
Constraint ne_q(char w) {
    return Constraint{pname(w) + " ≠ q", [w](const SamplePoint& p, const QContext& c) {
                          return std::abs(pick(p, w) - c.q);
                      }};
}
Constraint ne_qinv(char w) {
    return Constraint{pname(w) + "q ≠ 1", [w](const SamplePoint& p, const QContext& c) {
                          return std::abs(1.0 - pick(p, w) * c.q);
                      }};
}
// exponent families: the constraint acts on the parameter value q^w
Constraint exp_ne_one(char w) {
    return Constraint{"q^" + pname(w) + " ≠ 1", [w](const SamplePoint& p, const QContext& c) {
                          return std::abs(1.0 - pow_principal(c.q, pick(p, w)));
                      }};
}

IdentityRecord rec(std::string id, std::string eq, Family fam, std::vector<Reading> readings,
                   std::vector<Constraint> cons = {}, std::string note = {}) {
    IdentityRecord r;
    r.id = std::move(id);
    r.eq = std::move(eq);
    r.family = fam;
    r.readings = std::move(readings);
    r.constraints = std::move(cons);
    r.note = std::move(note);
    return r;
}

std::vector<IdentityRecord> build_registry() {
    std::vector<IdentityRecord> v;
    v.reserve(74);

    // ---- numerator-parameter contiguous relations (2.1, 2.2, 2.5, 2.6) ----
    v.push_back(rec(
        "E2.1", "2.1", Family::H6,
        {literal({T(H6).A(1)},
                 {T(H6), T(H6).A(2).B(1).P(PF(a * x * (1.0 - a * q) / (1.0 - b))),
                  T(H6).A(2).B(1).X(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b))),
                  T(H6).A(1).B(1).X(2).P(PF(a * y / (1.0 - b)))}),
         reading("amended-1", "fourth summand read with the omitted base separator restored",
                 {T(H6).A(1)},
                 {T(H6), T(H6).A(2).B(1).P(PF(a * x * (1.0 - a * q) / (1.0 - b))),
                  T(H6).A(2).B(1).X(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b))),
                  T(H6).A(1).B(1).X(2).P(PF(a * y / (1.0 - b)))})},
        {ne_one('b')}, "fourth summand omits the 'q,' separator; only one parse is executable"));

    v.push_back(rec("E2.2", "2.2", Family::H6,
                    {literal({T(H6).A(1)},
                             {T(H6), T(H6).A(1).B(1).P(PF(a * y / (1.0 - b))),
                              T(H6).A(2).B(1).X(1).Y(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b))),
                              T(H6).A(2).B(1).Y(1).P(PF(a * x * (1.0 - a * q) / (1.0 - b)))})},
                    {ne_one('b')}));

    v.push_back(rec("E2.5", "2.5", Family::H7,
                    {literal({T(H7).A(1)},
                             {T(H7), T(H7).A(2).B(1).P(PF(a * x * (1.0 - a * q) / (1.0 - b))),
                              T(H7).A(1).G(1).X(2).P(PF(a * y / (1.0 - c))),
                              T(H7).A(2).B(1).X(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b)))})},
                    {ne_one('b'), ne_one('c')}));

    {
        auto sides = [] {
            return std::pair<std::vector<TransformedSeries>, std::vector<TransformedSeries>>(
                {T(H7).A(1)},
                {T(H7), T(H7).A(1).G(1).P(PF(a * y / (1.0 - c))),
                 T(H7).A(2).B(1).X(1).Y(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b))),
                 T(H7).A(2).B(1).Y(1).P(PF(a * x * (1.0 - a * q) / (1.0 - b)))});
        };
        auto [l1, r1] = sides();
        auto [l2, r2] = sides();
        v.push_back(rec("E2.6", "2.6", Family::H7,
                        {literal(l1, r1),
                         reading("amended-1", "the unshifted slot token 'b' bound to β", l2, r2)},
                        {ne_one('b'), ne_one('c')},
                        "second summand prints 'b' for the unshifted β slot"));
    }

    // ---- q-derivative closed forms (2.9 - 2.12), order-1 instances,
    //      both sides multiplied by the differentiation argument ----
    v.push_back(rec("E2.9", "2.9", Family::H7,
                    {literal({T(H7).M(mu_r())},
                             {T(H7).A(2).B(1).P(
                                 PF(x * (1.0 - a) * (1.0 - a * q) / ((1.0 - b) * (1.0 - q))))})},
                    {ne_one('b')}));
    v.push_back(rec("E2.10", "2.10", Family::H7,
                    {literal({T(H7).M(mu_s())},
                             {T(H7).A(1).G(1).P(PF(y * (1.0 - a) / ((1.0 - c) * (1.0 - q))))})},
                    {ne_one('c')}));
    v.push_back(rec("E2.11", "2.11", Family::H6,
                    {literal({T(H6).M(mu_r())},
                             {T(H6).A(2).B(1).P(
                                 PF(x * (1.0 - a) * (1.0 - a * q) / ((1.0 - b) * (1.0 - q))))})},
                    {ne_one('b')}));
    v.push_back(rec("E2.12", "2.12", Family::H6,
                    {literal({T(H6).M(mu_s())},
                             {T(H6).A(1).B(1).P(PF(y * (1.0 - a) / ((1.0 - b) * (1.0 - q))))})},
                    {ne_one('b')}));

    // ---- theta-operator relations in the numerator parameter (2.13 - 2.20) ----
    v.push_back(rec("E2.13", "2.13", Family::H6,
                    {literal({T(H6).P(PF(a)).M(mu_r()), T(H6).P(PF((1.0 - a) / (1.0 - q))),
                              T(H6).X(1).P(PF(a)).M(mu_r()), T(H6).X(2).P(PF(a)).M(mu_s())},
                             {T(H6).A(1).P(PF((1.0 - a) / (1.0 - q)))})}));
    v.push_back(rec("E2.14", "2.14", Family::H6,
                    {literal({T(H6).P(PF(a)).M(mu_s()), T(H6).P(PF((1.0 - a) / (1.0 - q))),
                              T(H6).Y(1).P(PF(a)).M(mu_r()), T(H6).X(1).Y(1).P(PF(a)).M(mu_r())},
                             {T(H6).A(1).P(PF((1.0 - a) / (1.0 - q)))})}));
    v.push_back(rec(
        "E2.15", "2.15", Family::H6,
        {literal({T(H6).A(-1).P(PF(a / q)).M(mu_r()), T(H6).A(-1).P(PF((1.0 - a / q) / (1.0 - q))),
                  T(H6).A(-1).X(1).Y(1).P(PF(a / q)).M(mu_s()),
                  T(H6).A(-1).X(1).P(PF(a / q)).M(mu_s())},
                 {T(H6).P(PF((1.0 - a / q) / (1.0 - q)))}),
         reading("amended-1", "middle pair read per the 2.16 mirror: θ_x on (xq), θ_y on (xq²)",
                 {T(H6).A(-1).P(PF(a / q)).M(mu_r()), T(H6).A(-1).P(PF((1.0 - a / q) / (1.0 - q))),
                  T(H6).A(-1).X(1).P(PF(a / q)).M(mu_r()),
                  T(H6).A(-1).X(2).P(PF(a / q)).M(mu_s())},
                 {T(H6).P(PF((1.0 - a / q) / (1.0 - q)))})},
        {}, "the two middle summands both print θ_y where the 2.16 mirror pairs θ_x/θ_y"));
    v.push_back(rec("E2.16", "2.16", Family::H6,
                    {literal({T(H6).A(-1).P(PF(a / q)).M(mu_s()),
                              T(H6).A(-1).P(PF((1.0 - a / q) / (1.0 - q))),
                              T(H6).A(-1).X(1).Y(1).P(PF(a / q)).M(mu_r()),
                              T(H6).A(-1).Y(1).P(PF(a / q)).M(mu_r())},
                             {T(H6).P(PF((1.0 - a / q) / (1.0 - q)))})}));
    v.push_back(rec("E2.17", "2.17", Family::H7,
                    {literal({T(H7).P(PF(a)).M(mu_r()), T(H7).P(PF((1.0 - a) / (1.0 - q))),
                              T(H7).X(1).P(PF(a)).M(mu_r()), T(H7).X(2).P(PF(a)).M(mu_s())},
                             {T(H7).A(1).P(PF((1.0 - a) / (1.0 - q)))})}));
    v.push_back(rec("E2.18", "2.18", Family::H7,
                    {literal({T(H7).P(PF(a)).M(mu_s()), T(H7).P(PF((1.0 - a) / (1.0 - q))),
                              T(H7).Y(1).P(PF(a)).M(mu_r()), T(H7).X(1).Y(1).P(PF(a)).M(mu_r())},
                             {T(H7).A(1).P(PF((1.0 - a) / (1.0 - q)))})}));
    v.push_back(rec("E2.19", "2.19", Family::H7,
                    {literal({T(H7).A(-1).P(PF(a / q)).M(mu_r()),
                              T(H7).A(-1).P(PF((1.0 - a / q) / (1.0 - q))),
                              T(H7).A(-1).X(1).P(PF(a / q)).M(mu_s()),
                              T(H7).A(-1).X(1).Y(1).P(PF(a / q)).M(mu_s())},
                             {T(H7).P(PF((1.0 - a / q) / (1.0 - q)))})}));
    v.push_back(rec("E2.20", "2.20", Family::H7,
                    {literal({T(H7).A(-1).P(PF(a / q)).M(mu_s()),
                              T(H7).A(-1).P(PF((1.0 - a / q) / (1.0 - q))),
                              T(H7).A(-1).Y(1).P(PF(a / q)).M(mu_r()),
                              T(H7).A(-1).X(1).Y(1).P(PF(a / q)).M(mu_r())},
                             {T(H7).P(PF((1.0 - a / q) / (1.0 - q)))})}));

    // ---- denominator-parameter relations (2.21, 2.22, 2.25, 2.26) ----
    v.push_back(
        rec("E2.21", "2.21", Family::H6,
            {literal({T(H6).B(-1)},
                     {T(H6),
                      T(H6).A(2).B(1).P(
                          PF(b * x * (1.0 - a) * (1.0 - a * q) / ((q - b) * (1.0 - b)))),
                      T(H6).A(1).B(1).X(1).P(PF(b * (1.0 - a) * y / ((q - b) * (1.0 - b))))})},
            {ne_q('b'), ne_one('b')}));
    v.push_back(
        rec("E2.22", "2.22", Family::H6,
            {literal({T(H6).B(-1)},
                     {T(H6), T(H6).A(1).B(1).P(PF(b * y * (1.0 - a) / ((q - b) * (1.0 - b)))),
                      T(H6).A(2).B(1).Y(1).P(
                          PF(b * x * (1.0 - a) * (1.0 - a * q) / ((q - b) * (1.0 - b))))})},
            {ne_q('b'), ne_one('b')}));
    v.push_back(
        rec("E2.25", "2.25", Family::H7,
            {literal({T(H7).B(-1)},
                     {T(H7), T(H7).A(2).B(1).P(
                                 PF(b * x * (1.0 - a) * (1.0 - a * q) / ((q - b) * (1.0 - b))))})},
            {ne_q('b'), ne_one('b')}));
    v.push_back(rec("E2.26", "2.26", Family::H7,
                    {literal({T(H7).G(-1)},
                             {T(H7), T(H7).A(1).G(1).P(
                                         PF(c * y * (1.0 - a) / ((q - c) * (1.0 - c))))})},
                    {ne_q('c'), ne_one('c')}));

    // ---- pure q-contiguous relations (2.29 - 2.31) ----
    {
        auto sides = [] {
            return std::pair<std::vector<TransformedSeries>, std::vector<TransformedSeries>>(
                {T(H6).B(-1)},
                {T(H6).X(1).Y(1).P(PF(b / (b - q))), T(H6).P(PF(-q / (b - q)))});
        };
        auto [l1, r1] = sides();
        auto [l2, r2] = sides();
        v.push_back(rec("E2.29", "2.29", Family::H6,
                        {literal(l1, r1),
                         reading("amended-1", "printed side condition 'β ≠ p' read as β ≠ q", l2,
                                 r2)},
                        {ne_q('b')},
                        "printed side condition 'β ≠ p'; no symbol p is defined, the derivation "
                        "needs β ≠ q"));
    }
    {
        auto sides = [] {
            return std::pair<std::vector<TransformedSeries>, std::vector<TransformedSeries>>(
                {T(H7).B(-1)}, {T(H7).X(1).P(PF(b / (b - q))), T(H7).P(PF(-q / (b - q)))});
        };
        auto [l1, r1] = sides();
        auto [l2, r2] = sides();
        v.push_back(rec("E2.30", "2.30", Family::H7,
                        {literal(l1, r1),
                         reading("amended-1", "printed side condition 'β ≠ p' read as β ≠ q", l2,
                                 r2)},
                        {ne_q('b')},
                        "printed side condition 'β ≠ p'; no symbol p is defined, the derivation "
                        "needs β ≠ q"));
    }
    v.push_back(rec("E2.31", "2.31", Family::H7,
                    {literal({T(H7).G(-1)},
                             {T(H7).Y(1).P(PF(c / (c - q))), T(H7).P(PF(-q / (c - q)))})},
                    {ne_q('c')}));

    // ---- theta relations in the denominator parameter (2.35 - 2.38) ----
    v.push_back(rec("E2.35", "2.35", Family::H6,
                    {literal({T(H6).P(PF(b / q)).M(mu_r()), T(H6).P(PF((1.0 - b / q) / (1.0 - q))),
                              T(H6).X(1).P(PF(b / q)).M(mu_s())},
                             {T(H6).B(-1).P(PF((1.0 - b / q) / (1.0 - q)))})}));
    v.push_back(rec("E2.36", "2.36", Family::H6,
                    {literal({T(H6).P(PF(b / q)).M(mu_s()), T(H6).P(PF((1.0 - b / q) / (1.0 - q))),
                              T(H6).Y(1).P(PF(b / q)).M(mu_r())},
                             {T(H6).B(-1).P(PF((1.0 - b / q) / (1.0 - q)))})}));
    v.push_back(rec("E2.37", "2.37", Family::H7,
                    {literal({T(H7).P(PF(b / q)).M(mu_r()), T(H7).P(PF((1.0 - b / q) / (1.0 - q)))},
                             {T(H7).B(-1).P(PF((1.0 - b / q) / (1.0 - q)))})}));
    v.push_back(rec("E2.38", "2.38", Family::H7,
                    {literal({T(H7).P(PF(c / q)).M(mu_s()), T(H7).P(PF((1.0 - c / q) / (1.0 - q)))},
                             {T(H7).G(-1).P(PF((1.0 - c / q) / (1.0 - q)))})}));

    // ---- simultaneous numerator/denominator shifts for H6 (2.39 - 2.42) ----
    v.push_back(rec(
        "E2.39", "2.39", Family::H6,
        {literal({T(H6).A(1).B(1)},
                 {T(H6),
                  T(H6).A(2).B(2).P(
                      PF((a - b) * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                  T(H6).A(1).B(2).X(1).P(PF((a - b) * y / ((1.0 - b) * (1.0 - b * q)))),
                  T(H6).A(2).B(2).X(1).Y(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b * q)))})},
        {ne_one('b'), ne_qinv('b')}));
    v.push_back(rec(
        "E2.40", "2.40", Family::H6,
        {literal({T(H6).A(1).B(1)},
                 {T(H6), T(H6).A(1).B(2).P(PF(a * y / ((1.0 - b) * (1.0 - b * q)))),
                  T(H6).A(2).B(2).X(1).Y(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b * q))),
                  T(H6).A(2).B(2).Y(1).P(
                      PF(a * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                  T(H6).A(2).B(2).P(PF(-b * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                  T(H6).A(1).B(2).X(1).P(PF(-b * y / ((1.0 - b) * (1.0 - b * q))))})},
        {ne_one('b'), ne_qinv('b')}));
    v.push_back(rec(
        "E2.41", "2.41", Family::H6,
        {literal({T(H6).A(1).B(1)},
                 {T(H6),
                  T(H6).A(2).B(2).P(PF(a * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                  T(H6).A(1).B(2).X(1).P(PF(a * y / ((1.0 - b) * (1.0 - b * q)))),
                  T(H6).A(2).B(2).X(1).Y(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b * q))),
                  T(H6).A(1).B(2).P(PF(-b * y / ((1.0 - b) * (1.0 - b * q)))),
                  T(H6).A(2).B(2).Y(1).P(
                      PF(-b * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q))))})},
        {ne_one('b'), ne_qinv('b')}));
    v.push_back(rec(
        "E2.42", "2.42", Family::H6,
        {literal({T(H6).A(1).B(1)},
                 {T(H6), T(H6).A(1).B(2).P(PF((a - b) * y / ((1.0 - b) * (1.0 - b * q)))),
                  T(H6).A(2).B(2).Y(1).P(
                      PF((a - b) * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                  T(H6).A(2).B(2).X(1).Y(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b * q)))})},
        {ne_one('b'), ne_qinv('b')}));

    // ---- simultaneous shifts for H7 (2.43 - 2.49) ----
    v.push_back(rec(
        "E2.43", "2.43", Family::H7,
        {literal({T(H7).A(1).B(1)},
                 {T(H7),
                  T(H7).A(2).B(2).P(
                      PF((a - b) * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                  T(H7).A(1).B(1).G(1).X(1).P(PF(a * y / ((1.0 - b) * (1.0 - c)))),
                  T(H7).A(2).B(2).X(1).Y(1).P(
                      PF(a * x * q * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                  T(H7).A(2).B(2).X(1).P(
                      PF(-a * b * x * q * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                  T(H7).A(1).B(1).G(1).X(2).P(PF(-a * b / ((1.0 - b) * (1.0 - c))))})},
        {ne_one('b'), ne_qinv('b'), ne_one('c')},
        "final summand carries no factor y although its four companions (2.45/2.47) do"));
    v.push_back(rec(
        "E2.44", "2.44", Family::H7,
        {literal({T(H7).A(1).B(1)},
                 {T(H7),
                  T(H7).A(2).B(2).P(
                      PF((a - b) * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                  T(H7).A(1).B(1).G(1).X(1).P(PF(a * y / (1.0 - c))),
                  T(H7).A(2).B(2).X(1).Y(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b * q)))})},
        {ne_one('b'), ne_qinv('b'), ne_one('c')}));
    {
        auto sides45 = [] {
            return std::pair<std::vector<TransformedSeries>, std::vector<TransformedSeries>>(
                {T(H7).A(1).B(1)},
                {T(H7), T(H7).A(1).B(1).G(1).P(PF(a * y / ((1.0 - b) * (1.0 - c)))),
                 T(H7).A(2).B(2).Y(1).P(
                     PF(a * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                 T(H7).A(2).B(2).X(1).Y(1).P(
                     PF(a * x * q * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                 T(H7).A(2).B(2).P(PF(-b * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                 T(H7).A(2).B(2).X(1).P(
                     PF(-a * b * x * q * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                 T(H7).A(1).B(1).G(1).X(2).P(PF(-a * b * y / ((1.0 - b) * (1.0 - c))))});
        };
        auto [l1, r1] = sides45();
        v.push_back(rec("E2.45", "2.45", Family::H7, {literal(l1, r1)},
                        {ne_one('b'), ne_qinv('b'), ne_one('c')}));
        v.push_back(rec(
            "E2.46", "2.46", Family::H7,
            {literal({T(H7).A(1).B(1)},
                     {T(H7), T(H7).A(1).B(1).G(1).P(PF(a * y / ((1.0 - b) * (1.0 - c)))),
                      T(H7).A(2).B(2).Y(1).P(
                          PF(a * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                      T(H7).A(2).B(2).X(1).Y(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b * q))),
                      T(H7).A(2).B(2).P(
                          PF(-b * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - b * q)))),
                      T(H7).A(1).B(1).G(1).X(1).P(PF(-a * b * y / ((1.0 - b) * (1.0 - c))))})},
            {ne_one('b'), ne_qinv('b'), ne_one('c')}));
        auto [l2, r2] = sides45();
        v.push_back(rec("E2.47", "2.47", Family::H7, {literal(l2, r2)},
                        {ne_one('b'), ne_qinv('b'), ne_one('c')},
                        "identical to 2.45 as printed"));
    }
    v.push_back(rec(
        "E2.48", "2.48", Family::H7,
        {literal({T(H7).A(1).G(1)},
                 {T(H7),
                  T(H7).A(2).B(1).G(1).P(
                      PF(a * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - c)))),
                  T(H7).A(1).G(2).X(1).P(PF(a * y / ((1.0 - c) * (1.0 - c * q)))),
                  T(H7).A(2).B(1).G(1).X(1).Y(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b))),
                  T(H7).A(1).G(2).P(PF(-b * y / ((1.0 - c) * (1.0 - c * q)))),
                  T(H7).A(2).B(1).G(1).Y(1).P(
                      PF(-a * c * x * (1.0 - a * q) / ((1.0 - b) * (1.0 - c))))})},
        {ne_one('b'), ne_one('c'), ne_qinv('c')},
        "fifth summand prints β where the γ-shift derivation produces γ"));
    v.push_back(rec(
        "E2.49", "2.49", Family::H7,
        {literal({T(H7).A(1).G(1)},
                 {T(H7), T(H7).A(1).G(2).P(PF((a - c) * y / ((1.0 - c) * (1.0 - c * q)))),
                  T(H7).A(2).B(1).G(1).Y(1).P(PF(a * x * (1.0 - a * q) / (1.0 - b))),
                  T(H7).A(2).B(1).G(1).X(1).Y(1).P(PF(a * x * q * (1.0 - a * q) / (1.0 - b)))})},
        {ne_one('b'), ne_one('c'), ne_qinv('c')}));

    // ---- upward denominator contiguous relations (2.50 - 2.52) ----
    v.push_back(rec("E2.50", "2.50", Family::H6,
                    {literal({T(H6).B(1)},
                             {T(H6), T(H6).B(1).X(1).Y(1).P(PF(b / (1.0 - b))),
                              T(H6).B(1).P(PF(-b / (1.0 - b)))})},
                    {ne_one('b')}));
    v.push_back(rec("E2.51", "2.51", Family::H7,
                    {literal({T(H7).B(1)},
                             {T(H7), T(H7).B(1).X(1).P(PF(b / (1.0 - b))),
                              T(H7).B(1).P(PF(-b / (1.0 - b)))})},
                    {ne_one('b')}));
    v.push_back(rec("E2.52", "2.52", Family::H7,
                    {literal({T(H7).G(1)},
                             {T(H7), T(H7).G(1).Y(1).P(PF(c / (1.0 - c))),
                              T(H7).G(1).P(PF(-c / (1.0 - c)))})},
                    {ne_one('c')}));

    // ---- q-difference in the numerator parameter (2.53 - 2.56) ----
    const auto dA6 = [] {
        return std::vector<TransformedSeries>{T(H6).P(PF(1.0 / ((1.0 - q) * a))),
                                              T(H6).A(1).P(PF(-1.0 / ((1.0 - q) * a)))};
    };
    const auto dA7 = [] {
        return std::vector<TransformedSeries>{T(H7).P(PF(1.0 / ((1.0 - q) * a))),
                                              T(H7).A(1).P(PF(-1.0 / ((1.0 - q) * a)))};
    };
    v.push_back(rec("E2.53", "2.53", Family::H6,
                    {literal(dA6(), {T(H6).P(PF(-1.0 / (1.0 - a))).M(mu_r()),
                                     T(H6).X(1).P(PF(-q / (1.0 - a))).M(mu_r()),
                                     T(H6).X(2).P(PF(-1.0 / (1.0 - a))).M(mu_s())})},
                    {ne_one('a'), ne_zero('a')}));
    v.push_back(rec("E2.54", "2.54", Family::H6,
                    {literal(dA6(), {T(H6).P(PF(-1.0 / (1.0 - a))).M(mu_s()),
                                     T(H6).Y(1).P(PF(-1.0 / (1.0 - a))).M(mu_r()),
                                     T(H6).X(1).Y(1).P(PF(-q / (1.0 - a))).M(mu_r())})},
                    {ne_one('a'), ne_zero('a')}));
    v.push_back(rec("E2.55", "2.55", Family::H7,
                    {literal(dA7(), {T(H7).P(PF(-1.0 / (1.0 - a))).M(mu_r()),
                                     T(H7).X(1).P(PF(-q / (1.0 - a))).M(mu_r()),
                                     T(H7).X(2).P(PF(-1.0 / (1.0 - a))).M(mu_s())})},
                    {ne_one('a'), ne_zero('a')}));
    v.push_back(rec(
        "E2.56", "2.56", Family::H7,
        {literal(dA7(), {T(H7).P(PF(-1.0 / (1.0 - a))).M(mu_s()),
                         T(H7).Y(1).P(PF(-1.0 / (1.0 - a))).M(mu_r()),
                         T(H6).X(1).Y(1).P(PF(-q / (1.0 - a))).M(mu_r())}),
         reading("amended-1", "interior H6 value read as H7",
                 dA7(), {T(H7).P(PF(-1.0 / (1.0 - a))).M(mu_s()),
                         T(H7).Y(1).P(PF(-1.0 / (1.0 - a))).M(mu_r()),
                         T(H7).X(1).Y(1).P(PF(-q / (1.0 - a))).M(mu_r())})},
        {ne_one('a'), ne_zero('a')}, "third summand prints an H6 value inside an H7 relation"));

    // ---- q-difference in the denominator parameters (2.57 - 2.60) ----
    const auto dB6 = [] {
        return std::vector<TransformedSeries>{T(H6).P(PF(1.0 / ((1.0 - q) * b))),
                                              T(H6).B(1).P(PF(-1.0 / ((1.0 - q) * b)))};
    };
    const auto dB7 = [] {
        return std::vector<TransformedSeries>{T(H7).P(PF(1.0 / ((1.0 - q) * b))),
                                              T(H7).B(1).P(PF(-1.0 / ((1.0 - q) * b)))};
    };
    const auto dC7 = [] {
        return std::vector<TransformedSeries>{T(H7).P(PF(1.0 / ((1.0 - q) * c))),
                                              T(H7).G(1).P(PF(-1.0 / ((1.0 - q) * c)))};
    };
    v.push_back(rec("E2.57", "2.57", Family::H6,
                    {literal(dB6(), {T(H6).B(1).P(PF(1.0 / (1.0 - b))).M(mu_r()),
                                     T(H6).B(1).X(1).P(PF(1.0 / (1.0 - b))).M(mu_s())})},
                    {ne_one('b'), ne_zero('b')}));
    v.push_back(rec("E2.58", "2.58", Family::H6,
                    {literal(dB6(), {T(H6).B(1).P(PF(1.0 / (1.0 - b))).M(mu_s()),
                                     T(H6).B(1).Y(1).P(PF(1.0 / (1.0 - b))).M(mu_r())})},
                    {ne_one('b'), ne_zero('b')}));
    v.push_back(rec("E2.59", "2.59", Family::H7,
                    {literal(dB7(), {T(H7).B(1).P(PF(1.0 / (1.0 - b))).M(mu_r())})},
                    {ne_one('b'), ne_zero('b')}));
    v.push_back(rec("E2.60", "2.60", Family::H7,
                    {literal(dC7(), {T(H7).G(1).P(PF(1.0 / (1.0 - c))).M(mu_r())})},
                    {ne_one('c'), ne_zero('c')},
                    "prints θ_x although the γ shift weights the y index"));

    // ---- exponent-form theta relations (2.63 - 2.66) ----
    v.push_back(rec("E2.63", "2.63", Family::H6Exp,
                    {literal({T(H6).M(mu_r())},
                             {T(H6).A(2).B(1).P(
                                 PF(x * (1.0 - a) * (1.0 - a * q) / ((1.0 - b) * (1.0 - q))))})},
                    {exp_ne_one('b')}));
    v.push_back(rec("E2.64", "2.64", Family::H6Exp,
                    {literal({T(H6).M(mu_s())},
                             {T(H6).A(1).B(1).P(PF(y * (1.0 - a) / ((1.0 - b) * (1.0 - q))))})},
                    {exp_ne_one('b')}));
    v.push_back(rec("E2.65", "2.65", Family::H7Exp,
                    {literal({T(H7).M(mu_r())},
                             {T(H7).A(2).B(1).P(
                                 PF(x * (1.0 - a) * (1.0 - a * q) / ((1.0 - b) * (1.0 - q))))})},
                    {exp_ne_one('b')}));
    v.push_back(rec("E2.66", "2.66", Family::H7Exp,
                    {literal({T(H7).M(mu_s())},
                             {T(H7).A(1).G(1).P(PF(y * (1.0 - a) / ((1.0 - c) * (1.0 - q))))})},
                    {exp_ne_one('c')}));

    // ---- bracket q-differential relations (2.67 - 2.71) ----
    v.push_back(rec("E2.67", "2.67", Family::H6Exp,
                    {literal({T(H6).M(mu_lin(2, 1, 0, 1, 0, 0))},
                             {T(H6).A(1).P(PF((1.0 - a) / (1.0 - q)))})}));
    v.push_back(rec("E2.68", "2.68", Family::H6Exp,
                    {literal({T(H6).M(mu_lin(1, 1, -1, 0, 1, 0))},
                             {T(H6).B(-1).P(PF((1.0 - b / q) / (1.0 - q)))})}));
    v.push_back(rec("E2.69", "2.69", Family::H7Exp,
                    {literal({T(H7).M(mu_lin(2, 1, 0, 1, 0, 0))},
                             {T(H7).A(1).P(PF((1.0 - a) / (1.0 - q)))})}));
    v.push_back(rec("E2.70", "2.70", Family::H7Exp,
                    {literal({T(H7).M(mu_lin(1, 0, -1, 0, 1, 0))},
                             {T(H7).B(-1).P(PF((1.0 - b / q) / (1.0 - q)))})}));
    v.push_back(rec("E2.71", "2.71", Family::H7Exp,
                    {literal({T(H7).M(mu_lin(0, 1, -1, 0, 0, 1))},
                             {T(H7).G(-1).P(PF((1.0 - c / q) / (1.0 - q)))})}));

    // ---- exponent-form numerator contiguous relations (2.72 - 2.75) ----
    v.push_back(
        rec("E2.72", "2.72", Family::H7Exp,
            {literal({T(H7).A(1)},
                     {T(H7), T(H7).P(PF(a * (1.0 - q) / (1.0 - a))).M(mu_s()),
                      T(H7).Y(1).P(PF(a * (1.0 - q) / (1.0 - a))).M(mu_r()),
                      T(H7).X(1).Y(1).P(PF(a * (1.0 - q) / (1.0 - a))).M(mu_r())})},
            {exp_ne_one('a')}));
    v.push_back(
        rec("E2.73", "2.73", Family::H7Exp,
            {literal({T(H7).A(1)},
                     {T(H7), T(H7).P(PF(a * (1.0 - q) / (1.0 - a))).M(mu_r()),
                      T(H7).X(1).P(PF(a * (1.0 - q) / (1.0 - a))).M(mu_r()),
                      T(H7).X(2).P(PF(a * (1.0 - q) / (1.0 - a))).M(mu_s())})},
            {exp_ne_one('a')}));
    v.push_back(
        rec("E2.74", "2.74", Family::H6Exp,
            {literal({T(H6).A(1)},
                     {T(H6), T(H6).P(PF(a * (1.0 - q) / (1.0 - a))).M(mu_s()),
                      T(H6).Y(1).P(PF(a * (1.0 - q) / (1.0 - a))).M(mu_r()),
                      T(H6).X(1).Y(1).P(PF(a * (1.0 - q) / (1.0 - a))).M(mu_r())})},
            {exp_ne_one('a')}));
    v.push_back(
        rec("E2.75", "2.75", Family::H6Exp,
            {literal({T(H6).A(1)},
                     {T(H6), T(H6).P(PF(a * (1.0 - q) / (1.0 - a))).M(mu_r()),
                      T(H6).X(1).P(PF(a * (1.0 - q) / (1.0 - a))).M(mu_r()),
                      T(H6).X(2).P(PF(a * (1.0 - q) / (1.0 - a))).M(mu_s())})},
            {exp_ne_one('a')}));

    // ---- second-order bracket relations (2.76 - 2.79) ----
    // y-split shape (2.76 / 2.78)
    auto second_order_y = [](SeriesKind k, bool inside) {
        std::vector<TransformedSeries> lhs{
            T(k).A(2).P(PF((1.0 - a * q) / (1.0 - q)))};
        std::vector<TransformedSeries> rhs{
            T(k).A(1),
            T(k).P(PF(q * x * ((1.0 - a) / (1.0 - q)) * ((1.0 - a) / (1.0 - q)))),
            T(k).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_s()),
            T(k).Y(1).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_r()),
            T(k).X(1).Y(1).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_r()),
            T(k).Y(1).P(PF(2.0 * a * a * q * x)).M(mu_r()).M(mu_s()),
            T(k).X(1).Y(1).P(PF(2.0 * a * a * q * x)).M(mu_r()).M(mu_s()),
            T(k).X(1).Y(2).P(PF(2.0 * a * a * q * x)).M(sq_r(inside)),
            T(k).P(PF(a * a * q * x)).M(sq_s(inside)),
            T(k).Y(2).P(PF(a * a * q * x)).M(sq_r(inside)),
            T(k).X(2).Y(2).P(PF(a * a * q * x)).M(sq_r(inside))};
        return std::make_pair(lhs, rhs);
    };
    // x-split shape (2.77 / 2.79); the 2B'C' cross term may carry the H7 token
    auto second_order_x = [](SeriesKind k, bool inside, SeriesKind cross_kind) {
        std::vector<TransformedSeries> lhs{
            T(k).A(2).P(PF((1.0 - a * q) / (1.0 - q)))};
        std::vector<TransformedSeries> rhs{
            T(k).A(1),
            T(k).P(PF(q * x * ((1.0 - a) / (1.0 - q)) * ((1.0 - a) / (1.0 - q)))),
            T(k).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_r()),
            T(k).X(1).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_r()),
            T(k).X(2).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_s()),
            T(k).X(1).P(PF(2.0 * a * a * q * x)).M(sq_r(inside)),
            T(k).X(2).P(PF(2.0 * a * a * q * x)).M(mu_r()).M(mu_s()),
            T(cross_kind).X(3).P(PF(2.0 * a * a * q * x)).M(mu_r()).M(mu_s()),
            T(k).P(PF(a * a * q * x)).M(sq_r(inside)),
            T(k).X(2).P(PF(a * a * q * x)).M(sq_r(inside)),
            T(k).X(4).P(PF(a * a * q * x)).M(sq_s(inside))};
        return std::make_pair(lhs, rhs);
    };
    {
        auto [l1, r1] = second_order_y(H7, false);
        auto [l2, r2] = second_order_y(H7, true);
        v.push_back(rec("E2.76", "2.76", Family::H7Exp,
                        {literal(l1, r1),
                         reading("bracket-square-inside", "[θ²]_q read as [r²]_q instead of ([r]_q)²",
                                 l2, r2)}));
    }
    {
        auto [l1, r1] = second_order_x(H7, false, H7);
        auto [l2, r2] = second_order_x(H7, true, H7);
        v.push_back(rec("E2.77", "2.77", Family::H7Exp,
                        {literal(l1, r1),
                         reading("bracket-square-inside", "[θ²]_q read as [r²]_q instead of ([r]_q)²",
                                 l2, r2)}));
    }
    {
        auto [l1, r1] = second_order_y(H6, false);
        auto [l2, r2] = second_order_y(H6, true);
        v.push_back(rec("E2.78", "2.78", Family::H6Exp,
                        {literal(l1, r1),
                         reading("bracket-square-inside", "[θ²]_q read as [r²]_q instead of ([r]_q)²",
                                 l2, r2)}));
    }
    {
        auto [l1, r1] = second_order_x(H6, false, H7);
        auto [l2, r2] = second_order_x(H6, false, H6);
        auto [l3, r3] = second_order_x(H6, true, H7);
        auto [l4, r4] = second_order_x(H6, true, H6);
        v.push_back(rec("E2.79", "2.79", Family::H6Exp,
                        {literal(l1, r1),
                         reading("amended-token", "interior H7 value read as H6", l2, r2),
                         reading("bracket-square-inside",
                                 "[θ²]_q read as [r²]_q instead of ([r]_q)²", l3, r3),
                         reading("amended-token+square-inside", "both amendments combined", l4, r4)},
                        {}, "eighth summand prints an H7 value inside an H6 relation"));
    }

    // ---- partial q-differential equations (2.81 - 2.88) ----
    v.push_back(rec(
        "E2.81", "2.81", Family::H7Exp,
        {literal({T(H7).P(PF(c / q)).M(mu_s()).M(mu_s()), T(H7).P(PF(-c / q)).M(mu_s()),
                  T(H7).P(PF((1.0 - c) / (1.0 - q))).M(mu_s()),
                  T(H7).P(PF(-a * q * y / (1.0 - q))).M(mu_s()),
                  T(H7).P(PF(-y * a)).M(mu_lin(2, 1)),
                  T(H7).P(PF(-y * (1.0 - a) / ((1.0 - q) * (1.0 - q))))},
                 {T(H7).Y(1).P(PF(a * q * y / (1.0 - q))).M(mu_r()),
                  T(H7).X(1).Y(1).P(PF(a * q * y / (1.0 - q))).M(mu_r())})}));
    {
        auto sides82 = [] {
            return std::pair<std::vector<TransformedSeries>, std::vector<TransformedSeries>>(
                {T(H7).P(PF(c / q)).M(mu_s()).M(mu_s()), T(H7).P(PF(-c / q)).M(mu_s()),
                 T(H7).P(PF((1.0 - c) / (1.0 - q))).M(mu_s()),
                 T(H7).P(PF(-a * q * y / (1.0 - q))).M(mu_r()),
                 T(H7).P(PF(-y * a)).M(mu_lin(2, 1)),
                 T(H7).P(PF(-y * (1.0 - a) / ((1.0 - q) * (1.0 - q))))},
                {T(H7).X(1).P(PF(a * q * y / (1.0 - q))).M(mu_r()),
                 T(H7).X(2).P(PF(a * q * y / (1.0 - q))).M(mu_s())});
        };
        auto [l1, r1] = sides82();
        auto [l2, r2] = sides82();
        v.push_back(rec("E2.82", "2.82", Family::H7Exp,
                        {literal(l1, r1),
                         reading("amended-1", "printed token [c]_q bound to [γ]_q", l2, r2)},
                        {}, "third operator prints [c]_q; c is the Latin shorthand for γ"));
    }
    auto pde_x7 = [](bool inside) {
        std::vector<TransformedSeries> lhs{
            T(H7).P(PF(b / q)).M(mu_r()).M(mu_r()), T(H7).P(PF(-b / q)).M(mu_r()),
            T(H7).P(PF((1.0 - b) / (1.0 - q))).M(mu_s()),
            T(H7).P(PF(-a * a * q * x)).M(sq_s(inside)),
            T(H7).P(PF(-2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_s()),
            T(H7).P(PF(-x * a)).M(mu_lin(2, 1)),
            T(H7).P(PF(-q * x * ((1.0 - a) / (1.0 - q)) * ((1.0 - a) / (1.0 - q)))),
            T(H7).P(PF(-x * (1.0 - a) / (1.0 - q)))};
        std::vector<TransformedSeries> rhs{
            T(H7).Y(1).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_r()),
            T(H7).X(1).Y(1).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_r()),
            T(H7).Y(1).P(PF(2.0 * a * a * q * x)).M(mu_r()).M(mu_s()),
            T(H7).X(1).Y(1).P(PF(2.0 * a * a * q * x)).M(mu_r()).M(mu_s()),
            T(H7).X(1).Y(2).P(PF(2.0 * a * a * q * x)).M(sq_r(inside)),
            T(H7).Y(2).P(PF(a * a * q * x)).M(sq_r(inside)),
            T(H7).X(2).Y(2).P(PF(a * a * q * x)).M(sq_r(inside))};
        return std::make_pair(lhs, rhs);
    };
    {
        auto [l1, r1] = pde_x7(false);
        auto [l2, r2] = pde_x7(true);
        v.push_back(rec("E2.83", "2.83", Family::H7Exp,
                        {literal(l1, r1),
                         reading("bracket-square-inside", "[θ²]_q read as [r²]_q instead of ([r]_q)²",
                                 l2, r2)},
                        {}, "third operator prints [β]_q[θ_y]_q where the x-weight derivation "
                            "produces [β]_q[θ_x]_q"));
    }
    auto pde_x7b = [](bool inside) {
        std::vector<TransformedSeries> lhs{
            T(H7).P(PF(b / q)).M(mu_r()).M(mu_r()), T(H7).P(PF(-b / q)).M(mu_r()),
            T(H7).P(PF((1.0 - b) / (1.0 - q))).M(mu_s()),
            T(H7).P(PF(-a * a * q * x)).M(sq_r(inside)),
            T(H7).P(PF(-2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_r()),
            T(H7).P(PF(-x * a)).M(mu_lin(2, 1)),
            T(H7).P(PF(-x * (1.0 - a) / (1.0 - q))),
            T(H7).P(PF(-q * x * ((1.0 - a) / (1.0 - q)) * ((1.0 - a) / (1.0 - q))))};
        std::vector<TransformedSeries> rhs{
            T(H7).X(1).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_r()),
            T(H7).X(2).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_s()),
            T(H7).X(1).P(PF(2.0 * a * a * q * x)).M(sq_r(inside)),
            T(H7).X(2).P(PF(2.0 * a * a * q * x)).M(mu_r()).M(mu_s()),
            T(H7).X(3).P(PF(2.0 * a * a * q * x)).M(mu_r()).M(mu_s()),
            T(H7).X(2).P(PF(a * a * q * x)).M(sq_r(inside)),
            T(H7).X(4).P(PF(a * a * q * x)).M(sq_s(inside))};
        return std::make_pair(lhs, rhs);
    };
    {
        auto [l1, r1] = pde_x7b(false);
        auto [l2, r2] = pde_x7b(true);
        v.push_back(rec("E2.84", "2.84", Family::H7Exp,
                        {literal(l1, r1),
                         reading("bracket-square-inside", "[θ²]_q read as [r²]_q instead of ([r]_q)²",
                                 l2, r2)},
                        {}, "third operator prints [β]_q[θ_y]_q where the x-weight derivation "
                            "produces [β]_q[θ_x]_q"));
    }
    v.push_back(rec(
        "E2.85", "2.85", Family::H6Exp,
        {literal({T(H6).P(PF(b / q)).M(mu_s()).M(mu_lin(1, 1)), T(H6).P(PF(-b / q)).M(mu_s()),
                  T(H6).P(PF((1.0 - b) / (1.0 - q))).M(mu_s()),
                  T(H6).P(PF(-a * q * y / (1.0 - q))).M(mu_s()),
                  T(H6).P(PF(-y * a)).M(mu_lin(2, 1)),
                  T(H6).P(PF(-y * (1.0 - a) / ((1.0 - q) * (1.0 - q))))},
                 {T(H6).Y(1).P(PF(a * q * y / (1.0 - q))).M(mu_r()),
                  T(H6).X(1).Y(1).P(PF(a * q * y / (1.0 - q))).M(mu_r())})}));
    v.push_back(rec(
        "E2.86", "2.86", Family::H6Exp,
        {literal({T(H6).P(PF(b / q)).M(mu_s()).M(mu_lin(1, 1)), T(H6).P(PF(-b / q)).M(mu_s()),
                  T(H6).P(PF(-a * q * y / (1.0 - q))).M(mu_r()),
                  T(H6).P(PF((1.0 - b) / (1.0 - q))).M(mu_s()),
                  T(H6).P(PF(-y * a)).M(mu_lin(2, 1)),
                  T(H6).P(PF(-y * (1.0 - a) / ((1.0 - q) * (1.0 - q))))},
                 {T(H6).X(1).P(PF(a * q * y / (1.0 - q))).M(mu_r()),
                  T(H6).X(2).P(PF(a * q * y / (1.0 - q))).M(mu_s())})}));
    auto pde_x6 = [](bool inside) {
        std::vector<TransformedSeries> lhs{
            T(H6).P(PF(b / q)).M(mu_r()).M(mu_lin(1, 1)),
            T(H6).P(PF(-2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_s()),
            T(H6).P(PF(-b / q)).M(mu_r()),
            T(H6).P(PF((1.0 - b) / (1.0 - q))).M(mu_s()),
            T(H6).P(PF(-a * a * q * x)).M(sq_s(inside)),
            T(H6).P(PF(-x * a)).M(mu_lin(2, 1)),
            T(H6).P(PF(-x * (1.0 - a) / (1.0 - q))),
            T(H6).P(PF(-q * x * ((1.0 - a) / (1.0 - q)) * ((1.0 - a) / (1.0 - q))))};
        std::vector<TransformedSeries> rhs{
            T(H6).Y(1).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_r()),
            T(H6).X(1).Y(1).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_r()),
            T(H6).Y(1).P(PF(2.0 * a * a * q * x)).M(mu_r()).M(mu_s()),
            T(H6).X(1).Y(1).P(PF(2.0 * a * a * q * x)).M(mu_r()).M(mu_s()),
            T(H6).X(1).Y(2).P(PF(2.0 * a * a * q * x)).M(sq_r(inside)),
            T(H6).Y(2).P(PF(a * a * q * x)).M(sq_r(inside)),
            T(H6).X(2).Y(2).P(PF(a * a * q * x)).M(sq_r(inside))};
        return std::make_pair(lhs, rhs);
    };
    {
        auto [l1, r1] = pde_x6(false);
        auto [l2, r2] = pde_x6(true);
        v.push_back(rec("E2.87", "2.87", Family::H6Exp,
                        {literal(l1, r1),
                         reading("bracket-square-inside", "[θ²]_q read as [r²]_q instead of ([r]_q)²",
                                 l2, r2)},
                        {}, "fourth operator prints [β]_q[θ_y]_q where the x-weight derivation "
                            "produces [β]_q[θ_x]_q"));
    }
    auto pde_x6b = [](bool inside, SeriesKind cross_kind) {
        std::vector<TransformedSeries> lhs{
            T(H6).P(PF(b / q)).M(mu_r()).M(mu_lin(1, 1)), T(H6).P(PF(-b / q)).M(mu_r()),
            T(H6).P(PF((1.0 - b) / (1.0 - q))).M(mu_s()),
            T(H6).P(PF(-2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_r()),
            T(H6).P(PF(-x * a)).M(mu_lin(2, 1)),
            T(H6).P(PF(-a * a * q * x)).M(sq_r(inside)),
            T(H6).P(PF(-x * (1.0 - a) / (1.0 - q))),
            T(H6).P(PF(-q * x * ((1.0 - a) / (1.0 - q)) * ((1.0 - a) / (1.0 - q))))};
        std::vector<TransformedSeries> rhs{
            T(H6).X(1).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_r()),
            T(H6).X(2).P(PF(2.0 * a * q * x * (1.0 - a) / (1.0 - q))).M(mu_s()),
            T(H6).X(1).P(PF(2.0 * a * a * q * x)).M(sq_r(inside)),
            T(H6).X(2).P(PF(2.0 * a * a * q * x)).M(mu_r()).M(mu_s()),
            T(cross_kind).X(3).P(PF(2.0 * a * a * q * x)).M(mu_r()).M(mu_s()),
            T(H6).X(2).P(PF(a * a * q * x)).M(sq_r(inside)),
            T(H6).X(4).P(PF(a * a * q * x)).M(sq_s(inside))};
        return std::make_pair(lhs, rhs);
    };
    {
        auto [l1, r1] = pde_x6b(false, H7);
        auto [l2, r2] = pde_x6b(false, H6);
        auto [l3, r3] = pde_x6b(true, H7);
        auto [l4, r4] = pde_x6b(true, H6);
        v.push_back(rec("E2.88", "2.88", Family::H6Exp,
                        {literal(l1, r1),
                         reading("amended-token", "interior H7 value read as H6", l2, r2),
                         reading("bracket-square-inside",
                                 "[θ²]_q read as [r²]_q instead of ([r]_q)²", l3, r3),
                         reading("amended-token+square-inside", "both amendments combined", l4, r4)},
                        {}, "fifth summand prints an H7 value inside an H6 relation; the fourth "
                            "operator also carries the [β]_q[θ_y]_q slip of 2.87"));
    }

    return v;
}

#undef PF

}  // namespace

const std::vector<IdentityRecord>& registry() {
    static const std::vector<IdentityRecord> r = build_registry();
    return r;
}

const IdentityRecord& find_record(const std::string& id) {
    for (const auto& r : registry())
        if (r.id == id) return r;
    throw ConfigError("unknown identity id: " + id);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::H6: return "H6";
        case Family::H7: return "H7";
        case Family::H6Exp: return "H6exp";
        case Family::H7Exp: return "H7exp";
    }
    return "?";
}

}  // namespace qhorn
