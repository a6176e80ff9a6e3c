#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qhorn {

using Complex = std::complex<double>;

/// Input lies too close to (or on) a forbidden denominator value, or outside
/// the validity domain of an operation.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computed quantity left the finite range of double precision.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration (sampler exhaustion, bad policy values, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Base q together with the numeric tolerances shared by every operation.
///
/// pole_margin is the minimum allowed distance from any forbidden denominator
/// value; computations that would divide by a factor closer than this raise
/// DomainError instead of returning a huge value.
struct QContext {
    Complex q;
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    double pole_margin = 1e-3;

    explicit QContext(Complex base, double rel = 1e-10, double abs = 1e-14,
                      double margin = 1e-3)
        : q(base), rel_tol(rel), abs_tol(abs), pole_margin(margin) {
        const double m = std::abs(q);
        if (!is_finite(q) || m <= 0.0 || m >= 1.0 || q == Complex(1.0, 0.0))
            throw DomainError("QContext: base q must satisfy 0 < |q| < 1, q != 1");
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(pole_margin > 0.0))
            throw ConfigError("QContext: tolerances and pole_margin must be positive");
    }
};

/// z^n for integer n (binary powering; n may be negative).
Complex pow_int(Complex z, long n);

/// Principal-branch power z^e = exp(e Log z).
Complex pow_principal(Complex z, Complex e);

}  // namespace qhorn
