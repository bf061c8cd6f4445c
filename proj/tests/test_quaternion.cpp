#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsylv/quaternion.hpp"
#include "support.hpp"

using namespace qsylv;
using testsupport::Rng;

namespace {

bool approx(const Quaternion& u, const Quaternion& v, double eps = 1e-12) {
    return norm(u - v) <= eps * std::max({1.0, norm(u), norm(v)});
}

// The product assembled from the scalar/dot/cross decomposition; an
// independent route against the componentwise formula.
Quaternion mul_via_parts(const Quaternion& a, const Quaternion& b) {
    const Quaternion scalar =
        Quaternion::real(re(a) * re(b) - dot_im(a, b));
    return scalar + re(a) * im(b) + re(b) * im(a) + cross_im(a, b);
}

} // namespace

TEST_CASE("product: unit relations and identity") {
    CHECK(q_i * q_j == q_k);
    CHECK(q_j * q_i == -q_k);
    CHECK(q_j * q_k == q_i);
    CHECK(q_k * q_i == q_j);
    CHECK(q_i * q_i == -q_one);
    CHECK(q_j * q_j == -q_one);
    CHECK(q_k * q_k == -q_one);
    CHECK(q_i * q_j * q_k == -q_one);

    Rng rng(11);
    for (int n = 0; n < 100; ++n) {
        const Quaternion a = rng.quat();
        CHECK(a * q_one == a);
        CHECK(q_one * a == a);
    }
}

TEST_CASE("product: (1+i)(1-i) = 2") {
    const Quaternion a{1, 1, 0, 0};
    const Quaternion b{1, -1, 0, 0};
    CHECK(a * b == Quaternion::real(2.0));
}

TEST_CASE("product matches the scalar/dot/cross decomposition") {
    Rng rng(12);
    for (int n = 0; n < 20000; ++n) {
        const Quaternion a = rng.quat();
        const Quaternion b = rng.quat();
        CHECK(approx(a * b, mul_via_parts(a, b), 1e-14));
    }
}

TEST_CASE("product is associative and real-bilinear") {
    Rng rng(21);
    for (int n = 0; n < 10000; ++n) {
        const Quaternion a = rng.quat();
        const Quaternion b = rng.quat();
        const Quaternion c = rng.quat();
        const double s = rng.normal();
        const double t = rng.normal();
        CHECK(approx((a * b) * c, a * (b * c), 1e-13));
        CHECK(approx((s * a + t * b) * c, s * (a * c) + t * (b * c), 1e-13));
        CHECK(approx(c * (s * a + t * b), s * (c * a) + t * (c * b), 1e-13));
    }
}

TEST_CASE("conj, norm, parts") {
    const Quaternion a{1, 1, 1, 1};
    CHECK(conj(a) == Quaternion{1, -1, -1, -1});
    CHECK(norm(a) == 2.0);
    CHECK(re(a) == 1.0);
    CHECK(im(a) == Quaternion{0, 1, 1, 1});

    Rng rng(13);
    for (int n = 0; n < 1000; ++n) {
        const Quaternion q = rng.quat();
        CHECK(approx(conj(q) * q, Quaternion::real(norm_sq(q)), 1e-14));
        CHECK(re(im(q)) == 0.0);
    }
}

TEST_CASE("inv: conj over squared norm") {
    const Quaternion two_i = 2.0 * q_i;
    CHECK(inv(two_i) == -0.5 * q_i);
    CHECK(approx(two_i * inv(two_i), q_one, 1e-15));

    Rng rng(14);
    for (int n = 0; n < 1000; ++n) {
        const Quaternion q = rng.nonzero();
        CHECK(approx(q * inv(q), q_one, 1e-13));
        CHECK(approx(inv(q) * q, q_one, 1e-13));
    }

    CHECK_THROWS_AS(inv(Quaternion{}), DivisionByZeroError);
    CHECK_THROWS_AS(inv(Quaternion::real(1e-20)), DivisionByZeroError);
}

TEST_CASE("norm multiplicativity and trace symmetry") {
    Rng rng(15);
    for (int n = 0; n < 20000; ++n) {
        const Quaternion a = rng.quat();
        const Quaternion b = rng.quat();
        CHECK(std::fabs(norm(a * b) - norm(a) * norm(b)) <=
              1e-12 * std::max(1.0, norm(a) * norm(b)));
        CHECK(std::fabs(re(a * b) - re(b * a)) <=
              1e-12 * std::max(1.0, norm(a) * norm(b)));
    }
}

TEST_CASE("pure product: a·b = -dot + cross") {
    Rng rng(16);
    for (int n = 0; n < 5000; ++n) {
        const Quaternion a = rng.pure();
        const Quaternion b = rng.pure();
        const Quaternion expect =
            Quaternion::real(-dot_im(a, b)) + cross_im(a, b);
        CHECK(approx(a * b, expect, 1e-14));
    }
}

TEST_CASE("cross-product sum identity for equal-norm pures") {
    Rng rng(17);
    const Tolerance tol;
    for (int n = 0; n < 20000; ++n) {
        Quaternion a = rng.unit_pure();
        Quaternion b = rng.unit_pure();
        const double scale = rng.log_uniform(1e-3, 1e3);
        a = scale * a;
        b = scale * b;
        const Quaternion c = cross_im(a, b);
        const Quaternion lhs = a * c + c * b;
        const Quaternion rhs = dot_im(a, b - a) * (a + b);
        const double s = scale * scale * scale;
        CHECK(norm(lhs - rhs) <= 1e-12 * std::max(1.0, s));

        // the identity vanishes exactly on commuting pairs; checked away from
        // the near-parallel band where thresholded versions diverge
        if (commutes(a, b, tol))
            CHECK(norm(lhs) <= 1e-9 * std::max(1.0, s));
    }
    // parallel pair: both sides zero, commutes true
    const Quaternion a = 2.0 * q_i;
    const Quaternion b = -2.0 * q_i;
    CHECK(commutes(a, b, tol));
    const Quaternion c = cross_im(a, b);
    CHECK(norm(a * c + c * b) == 0.0);
}

TEST_CASE("commutes: examples") {
    const Tolerance tol;
    CHECK(commutes(q_i, 2.0 * q_i, tol));
    CHECK_FALSE(commutes(q_i, q_j, tol));
    CHECK(commutes(Quaternion{1, 1, 0, 0}, Quaternion{3, -2, 0, 0}, tol));
    // a real operand commutes with everything
    CHECK(commutes(Quaternion::real(5), q_j, tol));
    CHECK(commutes(q_j, Quaternion::real(-2), tol));
}

TEST_CASE("commutes agrees with direct evaluation of ab - ba") {
    Rng rng(18);
    const Tolerance tol;
    for (int n = 0; n < 20000; ++n) {
        Quaternion a, b;
        if (n % 3 == 0) {
            // adversarial near-parallel pair
            a = rng.nonreal();
            const double eps = rng.log_uniform(1e-16, 1e-2);
            b = rng.uniform(-2, 2) * a + eps * rng.quat();
            if (tol.is_real(b)) continue;
        } else {
            a = rng.nonreal();
            b = rng.nonreal();
        }
        const bool direct =
            tol.negligible(norm(a * b - b * a) / 2.0, norm(im(a)) * norm(im(b)));
        CHECK(commutes(a, b, tol) == direct);
    }
}

TEST_CASE("anticommutes: examples and domain") {
    const Tolerance tol;
    CHECK(anticommutes(q_i, q_j, tol));
    CHECK_FALSE(anticommutes(q_i, q_i, tol));
    CHECK_FALSE(anticommutes(Quaternion{1, 1, 0, 0}, q_j, tol));
    CHECK_THROWS_AS(anticommutes(Quaternion::real(1), q_j, tol), DomainError);
    CHECK_THROWS_AS(anticommutes(q_j, Quaternion::real(1), tol), DomainError);
}

TEST_CASE("anticommutes agrees with direct evaluation of ab + ba") {
    Rng rng(19);
    const Tolerance tol;
    for (int n = 0; n < 20000; ++n) {
        Quaternion a, b;
        const int kind = n % 3;
        if (kind == 0) {
            a = rng.nonreal();
            b = rng.nonreal();
        } else {
            // orthogonal pure pair, perturbed on both sides of the threshold
            const Quaternion u = rng.unit_pure();
            Quaternion v = cross_im(u, rng.unit_pure());
            if (norm(v) < 1e-6) continue;
            v = v / norm(v);
            a = u;
            b = v;
            if (kind == 2) {
                const double eps = rng.pick(2) == 0 ? rng.log_uniform(1e-16, 1e-12)
                                                    : rng.log_uniform(1e-8, 1e-2);
                a = a + Quaternion::real(eps * rng.normal());
                b = b + eps * rng.normal() * u;
            }
        }
        const bool direct =
            tol.negligible(norm(a * b + b * a) / 2.0, norm(a) * norm(b));
        CHECK(anticommutes(a, b, tol) == direct);
    }
}

TEST_CASE("is_similar: examples and domain") {
    const Tolerance tol;
    CHECK(is_similar(Quaternion{1, 1, 0, 0}, Quaternion{1, 0, 1, 0}, tol));
    CHECK_FALSE(is_similar(q_i, 2.0 * q_i, tol));
    CHECK(is_similar(q_i, -q_i, tol));
    CHECK_THROWS_AS(is_similar(Quaternion::real(2), Quaternion::real(2), tol),
                    DomainError);
    CHECK_THROWS_AS(is_similar(q_i, Quaternion::real(2), tol), DomainError);
}

TEST_CASE("similarity_witness: constructive cases") {
    const Tolerance tol;
    CHECK(similarity_witness(q_i, q_j, tol) == q_i + q_j);
    CHECK(similarity_witness(q_i, q_i, tol) == 2.0 * q_i);
    // opposite axes: q = j wins the axis contest, p = ij - ji = 2k
    CHECK(similarity_witness(q_i, -q_i, tol) == 2.0 * q_k);
    CHECK(approx(q_i * (2.0 * q_k), (2.0 * q_k) * -q_i, 1e-15));
    CHECK_THROWS_AS(similarity_witness(q_i, 2.0 * q_i, tol), DomainError);
}

TEST_CASE("similarity_witness: soundness on conjugated pairs") {
    Rng rng(20);
    const Tolerance tol;
    for (int n = 0; n < 100000; ++n) {
        const Quaternion a = rng.nonreal();
        const Quaternion p = rng.nonzero();
        const Quaternion b = inv(p) * a * p;
        const Quaternion w = similarity_witness(a, b, tol);
        REQUIRE(norm(w) > 0.0);
        REQUIRE(norm(a * w - w * b) <= tol.rel * norm(a) * norm(w) + tol.abs);
    }
    // conjugate pairs exercise the opposite-axis construction exactly
    for (int n = 0; n < 10000; ++n) {
        const Quaternion a = rng.nonreal();
        const Quaternion w = similarity_witness(a, conj(a), tol);
        REQUIRE(norm(w) > 0.0);
        REQUIRE(norm(a * w - w * conj(a)) <= tol.rel * norm(a) * norm(w) + tol.abs);
    }
}

TEST_CASE("tolerance validation") {
    CHECK_THROWS_AS(Tolerance(0.0, 1e-14), DomainError);
    CHECK_THROWS_AS(Tolerance(-1e-10, 1e-14), DomainError);
    CHECK_THROWS_AS(Tolerance(1e-10, -1.0), DomainError);
    const Tolerance t(1e-6, 0.0);
    CHECK(t.close(1.0, 1.0 + 1e-8));
    CHECK_FALSE(t.close(1.0, 1.1));
}
