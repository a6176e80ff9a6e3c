#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qhorn/series.hpp"

namespace qhorn {

enum class Family { H6, H7, H6Exp, H7Exp };

std::string family_name(Family f);

/// Sampled evaluation point. For the plain families alpha/beta/gamma are the
/// parameter values themselves; for the exponent families they are the
/// exponents (the series parameters are q^alpha, q^beta, q^gamma).
struct SamplePoint {
    Complex alpha{};
    Complex beta{};
    Complex gamma{};
    Complex x{};
    Complex y{};
};

/// A scalar pole-exclusion constraint, e.g. "beta != q". distance() returns
/// how far the point is from the excluded value; points with
/// distance <= pole_margin are rejected.
struct Constraint {
    std::string expr;
    std::function<double(const SamplePoint&, const QContext&)> distance;
};

/// One executable reading of an equation: lists of transformed series whose
/// sums should agree. readings[0] of a record is always the literal one;
/// further entries are amended readings (suspected misprints, alternate
/// bracket-operator semantics) kept side by side for the audit.
struct Reading {
    std::string label;      // "literal", "amended-1", ...
    std::string rationale;  // one line on how this reading differs
    std::vector<TransformedSeries> lhs;
    std::vector<TransformedSeries> rhs;
};

struct IdentityRecord {
    std::string id;   // stable key, e.g. "E2.29"
    std::string eq;   // equation label, e.g. "2.29"
    Family family = Family::H6;
    std::vector<Reading> readings;
    std::vector<Constraint> constraints;  // beyond the series' own pole guards
    std::string note;                     // catalogue remarks (odd printed constraints etc.)
};

/// The full catalogue: 74 records in equation order.
const std::vector<IdentityRecord>& registry();

const IdentityRecord& find_record(const std::string& id);

enum class Classification { Verified, Failed, Inconclusive };
std::string classification_name(Classification c);

struct Verdict {
    std::string id;
    std::string variant;
    SamplePoint point{};
    Complex q{};
    Complex lhs_value{};
    Complex rhs_value{};
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double cond = 1.0;  // sum of term magnitudes over the result scale (cancellation guard)
    bool clean = true;  // every series truncated cleanly
    Classification classification = Classification::Inconclusive;
    std::string reason;
};

/// Residual-based check of one reading at one point. Throws DomainError when
/// the point violates the record's constraints (never returns Failed for
/// that). Classification:
///   Verified      rel_residual <= 10 * policy.rel_tol * cond, all truncations clean
///   Failed        rel_residual >= 1e-3
///   Inconclusive  otherwise, or any unclean truncation
Verdict check_identity(const IdentityRecord& rec, const Reading& reading, const SamplePoint& pt,
                       const QContext& ctx, const EvalPolicy& policy);

/// Literal reading by id.
Verdict check_identity(const std::string& id, const SamplePoint& pt, const QContext& ctx,
                       const EvalPolicy& policy);

/// Order-r check of the derivative equations E2.9..E2.12: the closed-form side
/// against iterated black-box q-difference quotients of the plain evaluator.
/// Verified threshold 1e-8 (quotient cancellation grows with the order).
Verdict check_derivative_identity(const std::string& id, const SamplePoint& pt,
                                  const QContext& ctx, const EvalPolicy& policy, int order);

struct SamplerConfig {
    std::uint64_t seed = 42;
    int n_points = 25;
    double x_y_radius = 0.25;
    double param_mod_min = 0.1;  // annulus for |alpha|, |beta|, |gamma| (parameter values)
    double param_mod_max = 0.9;
    double q_mod_min = 0.2;  // used by draw_q for property-style sweeps
    double q_mod_max = 0.8;
};

struct SampleSet {
    std::vector<SamplePoint> points;
    long rejected = 0;
};

/// Deterministic rejection sampler: emits cfg.n_points points satisfying every
/// constraint of the record (plus the series pole guards) with pole_margin.
/// Throws ConfigError when the rejection rate exceeds 99.9%.
SampleSet sample_points(const SamplerConfig& cfg, const IdentityRecord& rec, const QContext& ctx);

/// Deterministic q draw for property-style tests, |q| in (q_mod_min, q_mod_max).
Complex draw_q(const SamplerConfig& cfg, std::uint64_t stream, bool complex_phase);

/// Residual of a reading at x = y = 0 with the given parameter values, or
/// nullopt when either side is undefined there.
std::optional<double> origin_residual(const IdentityRecord& rec, const Reading& reading,
                                      const SamplePoint& params, const QContext& ctx,
                                      const EvalPolicy& policy);

enum class RecordClass { Verified, Failed, Inconclusive, DiscrepantLiteral };
std::string record_class_name(RecordClass c);

struct ReadingOutcome {
    std::string label;
    Classification classification = Classification::Inconclusive;
    double max_rel_residual = 0.0;
    Verdict worst;  // the point with the largest relative residual
    int n_inconclusive = 0;
};

struct IdentityOutcome {
    std::string id;
    std::string eq;
    Family family = Family::H6;
    int n_points = 0;
    long sampler_rejected = 0;
    RecordClass record_class = RecordClass::Inconclusive;
    std::string headline_variant;  // reading that determines record_class
    double max_rel_residual = 0.0;
    Verdict witness;
    std::vector<ReadingOutcome> readings;
};

struct AuditReport {
    std::uint64_t seed = 0;
    Complex q{};
    EvalPolicy policy{};
    SamplerConfig sampler{};
    std::vector<IdentityOutcome> identities;
};

/// Runs every record (or the id_filter subset) at n_points sampled points per
/// reading. Per reading: Verified iff all points verified, Failed iff any
/// point failed, else Inconclusive. A record whose literal reading fails while
/// some variant verifies is flagged DiscrepantLiteral. Points that violate
/// constraints become Inconclusive entries with reasons, never errors.
/// QHORN_THREADS (or max_threads > 0) caps the fan-out across identities.
AuditReport audit_all(const SamplerConfig& cfg, const QContext& ctx, const EvalPolicy& policy,
                      const std::vector<std::string>& id_filter = {}, int max_threads = 0);

}  // namespace qhorn
