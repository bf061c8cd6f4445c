#include "qsylv/roots.hpp"

#include <cmath>

namespace qsylv {

RootSet sqrt(const Quaternion& a, const Tolerance& tol) {
    if (tol.is_zero(a))
        throw ZeroInputError("sqrt: square roots are defined for nonzero quaternions");

    const double n = norm(a);
    if (tol.is_real(a) && re(a) < 0.0) {
        // Negative real: every pure quaternion of norm √|a| squares to a.
        // The p = a + |a| form would cancel catastrophically here.
        const double radius = std::sqrt(n);
        return {RootKind::PureSphere, radius * q_i, radius};
    }

    const Quaternion p = a + Quaternion::real(n);
    // re(p) = re(a) + |a| > 0 off the negative-real branch, so the principal
    // root already carries the canonical positive real part.
    return {RootKind::PairRoots, (std::sqrt(n) / norm(p)) * p, 0.0};
}

RootSet sqrt_product(const Quaternion& a, const Quaternion& b, const Tolerance& tol) {
    if (!tol.close(norm(a), norm(b)))
        throw DomainError("sqrt_product: operands must have equal norms");
    const Quaternion product = a * b;
    if (tol.is_real(product))
        throw DomainError("sqrt_product: the product a·b is real; use sqrt directly");

    const Quaternion d = b + conj(a);
    // a(b + conj a) = a·b + |a|², whose real part re(a·b) + |a|² stays positive
    // for a nonreal product with |a| ≈ |b|.
    return {RootKind::PairRoots, a * d / norm(d), 0.0};
}

LinearFormCoeffs linear_form(const Quaternion& a, const Tolerance& tol) {
    if (tol.is_real(a))
        throw DomainError("linear_form: input must be nonreal");
    const double n = norm(a);
    const double lambda1 = std::sqrt(n) / norm(a + Quaternion::real(n));
    return {lambda1 * n, lambda1};
}

} // namespace qsylv
