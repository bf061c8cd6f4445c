#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "qsylv/quaternion.hpp"

namespace testsupport {

// Deterministic generators shared by the unit and acceptance suites.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double normal() { return std::normal_distribution<double>{0.0, 1.0}(gen); }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>{lo, hi}(gen);
    }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    int pick(int n) { return std::uniform_int_distribution<int>{0, n - 1}(gen); }

    qsylv::Quaternion quat() { return {normal(), normal(), normal(), normal()}; }

    qsylv::Quaternion nonreal(const qsylv::Tolerance& tol = {}) {
        while (true) {
            const qsylv::Quaternion q = quat();
            if (tol.is_nonreal(q)) return q;
        }
    }

    qsylv::Quaternion nonzero(const qsylv::Tolerance& tol = {}) {
        while (true) {
            const qsylv::Quaternion q = quat();
            if (!tol.is_zero(q)) return q;
        }
    }

    qsylv::Quaternion pure() { return qsylv::Quaternion::pure(normal(), normal(), normal()); }

    qsylv::Quaternion unit_pure() {
        while (true) {
            const qsylv::Quaternion p = pure();
            const double n = qsylv::norm(p);
            if (n > 1e-6) return p / n;
        }
    }

    qsylv::Quaternion unit() {
        while (true) {
            const qsylv::Quaternion q = quat();
            const double n = qsylv::norm(q);
            if (n > 1e-6) return q / n;
        }
    }
};

} // namespace testsupport
