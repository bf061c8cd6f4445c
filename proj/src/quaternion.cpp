#include "qsylv/quaternion.hpp"

#include <cstdio>

namespace qsylv {

namespace {

std::string describe(const Quaternion& q) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g,%.17g,%.17g)", q.w, q.x, q.y, q.z);
    return buf;
}

} // namespace

Tolerance::Tolerance(double rel_, double abs_) : rel(rel_), abs(abs_) {
    if (!(rel > 0.0) || !std::isfinite(rel) || !(abs >= 0.0) || !std::isfinite(abs))
        throw DomainError("Tolerance requires finite rel > 0 and abs >= 0");
}

Quaternion inv(const Quaternion& a, const Tolerance& tol) {
    if (tol.is_zero(a))
        throw DivisionByZeroError("inv: operand " + describe(a) + " has (near-)zero norm");
    return conj(a) / norm_sq(a);
}

bool commutes(const Quaternion& a, const Quaternion& b, const Tolerance& tol) {
    if (tol.is_real(a) || tol.is_real(b)) return true;
    // a·b − b·a = 2 (Im a × Im b)
    return tol.negligible(norm(cross_im(a, b)), norm(im(a)) * norm(im(b)));
}

bool anticommutes(const Quaternion& a, const Quaternion& b, const Tolerance& tol) {
    if (tol.is_real(a) || tol.is_real(b))
        throw DomainError("anticommutes: both operands must be nonreal");
    return tol.negligible(re(a), norm(a)) && tol.negligible(re(b), norm(b)) &&
           tol.negligible(dot_im(a, b), norm(a) * norm(b));
}

bool is_similar(const Quaternion& a, const Quaternion& b, const Tolerance& tol) {
    if (tol.is_real(a) || tol.is_real(b))
        throw DomainError(
            "is_similar: both operands must be nonreal (real coefficient pairs are "
            "classified by the Sylvester solver)");
    return tol.close(re(a), re(b)) && tol.close(norm(a), norm(b));
}

Quaternion similarity_witness(const Quaternion& a, const Quaternion& b,
                              const Tolerance& tol) {
    if (!is_similar(a, b, tol))
        throw DomainError("similarity_witness: operands are not similar");

    const Quaternion ia = im(a);
    const Quaternion ib = im(b);
    const Quaternion sum = ia + ib;
    if (!tol.negligible(norm(sum), std::max(norm(ia), norm(ib))))
        return sum;

    // Im b ≈ −Im a: p = (Im a)·q − q·(Im a) with q the coordinate axis giving
    // the largest cross product; ties resolve in the order i, j, k.
    const Quaternion axes[3] = {q_i, q_j, q_k};
    int best = 0;
    double best_score = -1.0;
    for (int k = 0; k < 3; ++k) {
        const double score = norm(cross_im(a, axes[k]));
        if (score > best_score) {
            best = k;
            best_score = score;
        }
    }
    if (!(best_score > 0.0))
        throw InternalError("similarity_witness: every axis candidate collapsed to zero");
    return ia * axes[best] - axes[best] * ia;
}

} // namespace qsylv
