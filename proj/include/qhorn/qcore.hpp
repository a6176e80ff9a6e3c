#pragma once

#include <functional>

#include "qhorn/types.hpp"

namespace qhorn {

using ScalarFn = std::function<Complex(Complex)>;

/// q-shifted factorial (eta; q)_n = prod_{r=0}^{n-1} (1 - eta q^r).
/// Computed by forward product accumulation; (eta; q)_0 = 1.
Complex q_pochhammer(Complex eta, const QContext& ctx, long n);

/// q-number [eta]_q = (1 - q^eta) / (1 - q).
/// For complex eta the power q^eta uses the principal logarithm branch.
Complex q_number(Complex eta, const QContext& ctx);

/// q-factorial [m]_q! = [m]_q [m-1]_q ... [1]_q, with [0]_q! = 1.
Complex q_factorial(long m, const QContext& ctx);

/// q-difference operator D_{z,q} f = (f(z) - f(qz)) / ((1-q) z), z != 0.
/// The z = 0 case is served only by series-aware derivatives (see series.hpp).
Complex q_derivative(const ScalarFn& f, Complex z, const QContext& ctx);

/// theta operator z D_{z,q} f = (f(z) - f(qz)) / (1-q); 0 at z = 0.
Complex theta(const ScalarFn& f, Complex z, const QContext& ctx);

}  // namespace qhorn
