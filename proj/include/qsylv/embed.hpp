#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qsylv/quaternion.hpp"

namespace qsylv {

using Vec4 = std::array<double, 4>;

constexpr Vec4 to_vec(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }
constexpr Quaternion from_vec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

/// 4×4 real matrix, row-major, row/column order (w, x, y, z).
struct RealMatrix4 {
    std::array<double, 16> e{};

    double& at(int r, int c) { return e[4 * r + c]; }
    double at(int r, int c) const { return e[4 * r + c]; }

    static RealMatrix4 identity() {
        RealMatrix4 m;
        for (int i = 0; i < 4; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

inline RealMatrix4 operator-(const RealMatrix4& a, const RealMatrix4& b) {
    RealMatrix4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline RealMatrix4 operator*(const RealMatrix4& a, const RealMatrix4& b) {
    RealMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

inline Vec4 operator*(const RealMatrix4& m, const Vec4& v) {
    Vec4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

inline RealMatrix4 transpose(const RealMatrix4& m) {
    RealMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(i, j) = m.at(j, i);
    return r;
}

/// Matrix of x ↦ a·x in the (w, x, y, z) basis: left_embed(a)·vec(x) = vec(a·x).
RealMatrix4 left_embed(const Quaternion& a);

/// Matrix of x ↦ x·b: right_embed(b)·vec(x) = vec(x·b).
RealMatrix4 right_embed(const Quaternion& b);

/// Matrix of x ↦ a·x − x·b.
RealMatrix4 sylvester_matrix(const Quaternion& a, const Quaternion& b);

/// Orthonormal nullspace basis by Gaussian elimination with partial pivoting;
/// pivot threshold is tol.rel times the largest absolute entry. Empty for full
/// rank, four vectors for the zero matrix.
std::vector<Vec4> nullspace(const RealMatrix4& m, const Tolerance& tol = {});

/// Number of pivots under the same threshold policy as nullspace().
int rank(const RealMatrix4& m, const Tolerance& tol = {});

struct LinearSolve {
    std::optional<Vec4> solution; // engaged iff the system is consistent
    double residual = 0.0;        // |m·x − rhs| of the returned point; for an
                                  // inconsistent system, the least-squares
                                  // minimum as refutation evidence
};

/// Gaussian elimination on the augmented system. A consistent system yields any
/// particular solution with the free variables set to zero; an inconsistent one
/// yields the minimum residual magnitude.
LinearSolve solve_or_refute(const RealMatrix4& m, const Vec4& rhs,
                            const Tolerance& tol = {});

} // namespace qsylv
