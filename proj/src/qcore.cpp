#include "qhorn/qcore.hpp"

namespace qhorn {

Complex pow_int(Complex z, long n) {
    if (n < 0) return Complex(1.0, 0.0) / pow_int(z, -n);
    Complex acc(1.0, 0.0);
    Complex base = z;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Complex pow_principal(Complex z, Complex e) {
    if (e == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
    return std::exp(e * std::log(z));
}

Complex q_pochhammer(Complex eta, const QContext& ctx, long n) {
    if (n < 0) throw DomainError("q_pochhammer: order n must be nonnegative");
    Complex prod(1.0, 0.0);
    Complex qr(1.0, 0.0);
    for (long r = 0; r < n; ++r) {
        prod *= (Complex(1.0, 0.0) - eta * qr);
        qr *= ctx.q;
    }
    if (!is_finite(prod))
        throw OverflowError("q_pochhammer: product overflowed double range");
    return prod;
}

Complex q_number(Complex eta, const QContext& ctx) {
    return (Complex(1.0, 0.0) - pow_principal(ctx.q, eta)) / (Complex(1.0, 0.0) - ctx.q);
}

Complex q_factorial(long m, const QContext& ctx) {
    if (m < 0) throw DomainError("q_factorial: order m must be nonnegative");
    Complex prod(1.0, 0.0);
    Complex qr(1.0, 0.0);
    const Complex one(1.0, 0.0);
    for (long r = 1; r <= m; ++r) {
        qr *= ctx.q;  // q^r
        prod *= (one - qr) / (one - ctx.q);
    }
    if (!is_finite(prod))
        throw OverflowError("q_factorial: product overflowed double range");
    return prod;
}

Complex q_derivative(const ScalarFn& f, Complex z, const QContext& ctx) {
    if (z == Complex(0.0, 0.0))
        throw DomainError(
            "q_derivative: z = 0 requires a series-aware derivative (q_partial_x/q_partial_y)");
    const Complex v = (f(z) - f(ctx.q * z)) / ((Complex(1.0, 0.0) - ctx.q) * z);
    if (!is_finite(v)) throw OverflowError("q_derivative: quotient is not finite");
    return v;
}

Complex theta(const ScalarFn& f, Complex z, const QContext& ctx) {
    if (z == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    const Complex v = (f(z) - f(ctx.q * z)) / (Complex(1.0, 0.0) - ctx.q);
    if (!is_finite(v)) throw OverflowError("theta: difference quotient is not finite");
    return v;
}

}  // namespace qhorn
