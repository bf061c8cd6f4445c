#pragma once

#include <algorithm>
#include <cmath>

#include "qsylv/errors.hpp"

namespace qsylv {

/// Element w + x·i + y·j + z·k of the real quaternion algebra.
/// Component storage order is (w, x, y, z); components must stay finite.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion pure(double x_, double y_, double z_) {
        return {0.0, x_, y_, z_};
    }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion q_one{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion q_i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion q_j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion q_k{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
}

constexpr Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
}

constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }

constexpr Quaternion operator/(const Quaternion& a, double s) {
    return {a.w / s, a.x / s, a.y / s, a.z / s};
}

/// Hamilton product (ij = −ji = k, jk = −kj = i, ki = −ik = j, i² = j² = k² = −1).
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr double re(const Quaternion& a) { return a.w; }

constexpr Quaternion im(const Quaternion& a) { return {0.0, a.x, a.y, a.z}; }

constexpr Quaternion conj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

constexpr double norm_sq(const Quaternion& a) {
    return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

inline double norm(const Quaternion& a) { return std::sqrt(norm_sq(a)); }

/// Dot product of the imaginary parts as 3-vectors.
constexpr double dot_im(const Quaternion& a, const Quaternion& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Cross product of the imaginary parts, returned as a pure quaternion.
constexpr Quaternion cross_im(const Quaternion& a, const Quaternion& b) {
    return {0.0, a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Euclidean inner product on the four components.
constexpr double dot4(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline bool is_finite(const Quaternion& a) {
    return std::isfinite(a.w) && std::isfinite(a.x) && std::isfinite(a.y) &&
           std::isfinite(a.z);
}

/// Numeric comparison policy threaded through every predicate:
/// u ≈ v iff |u − v| ≤ abs + rel·max(|u|, |v|).
struct Tolerance {
    double rel = 1e-10;
    double abs = 1e-14;

    Tolerance() = default;
    Tolerance(double rel_, double abs_); // requires rel > 0, abs >= 0

    bool close(double u, double v) const {
        return std::fabs(u - v) <= abs + rel * std::max(std::fabs(u), std::fabs(v));
    }
    bool close(const Quaternion& u, const Quaternion& v) const {
        return norm(u - v) <= abs + rel * std::max(norm(u), norm(v));
    }
    /// |value| vanishes against the given scale.
    bool negligible(double value, double scale) const {
        return std::fabs(value) <= abs + rel * std::fabs(scale);
    }
    bool is_zero(const Quaternion& q) const { return negligible(norm(q), norm(q)); }
    bool is_nonreal(const Quaternion& q) const {
        return norm(im(q)) > abs + rel * norm(q);
    }
    bool is_real(const Quaternion& q) const { return !is_nonreal(q); }
};

/// conj(a)/|a|²; throws DivisionByZeroError on (near-)zero input.
Quaternion inv(const Quaternion& a, const Tolerance& tol = {});

/// a·b = b·a, decided via the imaginary cross product; true whenever either
/// operand is real.
bool commutes(const Quaternion& a, const Quaternion& b, const Tolerance& tol = {});

/// a·b = −b·a for nonreal operands: both pure with orthogonal imaginary parts.
bool anticommutes(const Quaternion& a, const Quaternion& b, const Tolerance& tol = {});

/// p⁻¹ a p = b for some nonzero p; for nonreal operands this is equal real
/// parts and equal norms. Real operands are rejected (the solver's classify
/// handles real coefficient pairs).
bool is_similar(const Quaternion& a, const Quaternion& b, const Tolerance& tol = {});

/// A concrete nonzero p with a·p ≈ p·b for similar nonreal a, b.
Quaternion similarity_witness(const Quaternion& a, const Quaternion& b,
                              const Tolerance& tol = {});

} // namespace qsylv
