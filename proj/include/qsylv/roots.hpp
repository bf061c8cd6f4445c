#pragma once

#include "qsylv/quaternion.hpp"

namespace qsylv {

enum class RootKind {
    PairRoots,  // exactly {principal, −principal}
    PureSphere, // every pure quaternion of norm `radius` (negative real input)
};

/// The square roots of a nonzero quaternion.
struct RootSet {
    RootKind kind = RootKind::PairRoots;
    Quaternion principal{}; // canonical representative (re > 0; radius·i on the sphere)
    double radius = 0.0;    // PureSphere only, equals √|a|
};

/// Solutions of x² = a. Nonreal or positive real a yields a ± pair built from
/// p = a + |a|; negative real a yields the sphere of pure roots. Throws
/// ZeroInputError on a ≈ 0.
RootSet sqrt(const Quaternion& a, const Tolerance& tol = {});

/// Solutions of x² = a·b for |a| = |b| and nonreal product, in the product-free
/// form ±a(b + conj(a))/|b + conj(a)|.
RootSet sqrt_product(const Quaternion& a, const Quaternion& b,
                     const Tolerance& tol = {});

/// Coefficients with √a = ±(lambda0 + lambda1·a) for nonreal a;
/// lambda0 = lambda1·|a| and lambda1 = √|a| / |a + |a||.
struct LinearFormCoeffs {
    double lambda0 = 0.0;
    double lambda1 = 0.0;
};

LinearFormCoeffs linear_form(const Quaternion& a, const Tolerance& tol = {});

} // namespace qsylv
