#include "qsylv/sylvester.hpp"

#include <cmath>
#include <optional>
#include <utility>

#include "qsylv/embed.hpp"
#include "qsylv/roots.hpp"
#include "qsylv/text.hpp"

namespace qsylv {

namespace {

// Flip so the component of largest magnitude (first on ties, order w,x,y,z)
// is positive; keeps basis output deterministic. Adding 0.0 clears the sign
// off negated zero components.
Quaternion canonical_sign(const Quaternion& v) {
    const double comp[4] = {v.w, v.x, v.y, v.z};
    int lead = 0;
    for (int i = 1; i < 4; ++i)
        if (std::fabs(comp[i]) > std::fabs(comp[lead])) lead = i;
    const Quaternion sign_fixed = comp[lead] < 0.0 ? -v : v;
    return {sign_fixed.w + 0.0, sign_fixed.x + 0.0, sign_fixed.y + 0.0,
            sign_fixed.z + 0.0};
}

// Modified Gram-Schmidt in generator order; nullopt when a generator is
// numerically dependent on its predecessors.
std::optional<std::vector<Quaternion>> orthonormalize(
    const std::vector<Quaternion>& generators, const Tolerance& tol) {
    std::vector<Quaternion> out;
    for (const Quaternion& g : generators) {
        Quaternion v = g;
        for (const Quaternion& u : out) v = v - dot4(v, u) * u;
        if (tol.negligible(norm(v), norm(g))) return std::nullopt;
        out.push_back(canonical_sign(v / norm(v)));
    }
    return out;
}

// Coordinate axis with the largest cross product against Im a; ties resolve
// in the order i, j, k.
Quaternion best_cross_axis(const Quaternion& a) {
    const Quaternion axes[3] = {q_i, q_j, q_k};
    int lead = 0;
    double best = -1.0;
    for (int k = 0; k < 3; ++k) {
        const double score = norm(cross_im(a, axes[k]));
        if (score > best) {
            lead = k;
            best = score;
        }
    }
    return axes[lead];
}

double solution_scale(const SylvesterProblem& p, const Quaternion& x) {
    return norm(p.a) * norm(x) + norm(p.c);
}

} // namespace

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Regular: return "Regular";
        case Regime::SingularNonreal: return "SingularNonreal";
        case Regime::RealEqual: return "RealEqual";
        case Regime::RealDistinct: return "RealDistinct";
    }
    return "?";
}

const char* to_string(SolutionKind k) {
    switch (k) {
        case SolutionKind::Empty: return "Empty";
        case SolutionKind::Unique: return "Unique";
        case SolutionKind::Affine: return "Affine";
    }
    return "?";
}

double residual(const SylvesterProblem& p, const Quaternion& x) {
    return norm(p.a * x - x * p.b - p.c);
}

Regime classify(const Quaternion& a, const Quaternion& b, const Tolerance& tol) {
    const bool real_a = tol.is_real(a);
    const bool real_b = tol.is_real(b);
    if (real_a && real_b)
        return tol.close(a, b) ? Regime::RealEqual : Regime::RealDistinct;
    if (!real_a && !real_b && is_similar(a, b, tol)) return Regime::SingularNonreal;
    return Regime::Regular;
}

SylvesterProblem reduce_to_pure(const SylvesterProblem& p, const Tolerance& tol) {
    if (classify(p.a, p.b, tol) != Regime::SingularNonreal)
        throw DomainError(
            "reduce_to_pure: only a singular nonreal pair has cancelling real parts");
    return {im(p.a), im(p.b), p.c};
}

SolutionSet solve_regular(const SylvesterProblem& p, const Tolerance& tol) {
    const Regime regime = classify(p.a, p.b, tol);
    if (regime == Regime::SingularNonreal || regime == Regime::RealEqual)
        throw DomainError("solve_regular: coefficient pair is singular");
    if (regime == Regime::RealDistinct) {
        // Real scalar equation (a − b)·x = c. The generic polynomial below
        // evaluates to (a − b)² here and would square the cancellation in
        // a − b, losing twice the digits for close coefficients.
        return {SolutionKind::Unique, p.c / (re(p.a) - re(p.b)), {}, {}};
    }
    const Quaternion d =
        p.a * p.a - 2.0 * re(p.b) * p.a + Quaternion::real(norm_sq(p.b));
    const Quaternion x = inv(d, tol) * (p.a * p.c - p.c * conj(p.b));
    return {SolutionKind::Unique, x, {}, {}};
}

Quaternion homogeneous_general(const Quaternion& a, const Quaternion& b,
                               const Quaternion& q, const Tolerance& tol) {
    if (classify(a, b, tol) != Regime::SingularNonreal)
        throw DomainError("homogeneous_general: requires a singular nonreal pair");
    return im(a) * q + q * im(b);
}

SolutionSet homogeneous_basis(const Quaternion& a, const Quaternion& b,
                              const Tolerance& tol) {
    const Regime regime = classify(a, b, tol);
    if (regime == Regime::RealEqual)
        return {SolutionKind::Affine, {}, {q_one, q_i, q_j, q_k}, {}};
    if (regime != Regime::SingularNonreal)
        throw DomainError(
            "homogeneous_basis: the homogeneous equation has only x = 0 for a "
            "regular pair");

    // The span is invariant under positive scaling of the imaginary parts;
    // computing on unit pures keeps the generators well conditioned.
    const Quaternion ua = im(a) / norm(im(a));
    const Quaternion ub = im(b) / norm(im(b));

    if (tol.negligible(norm(ua + ub), 1.0)) {
        // Im b ≈ −Im a: the solutions are the pure quaternions orthogonal to
        // Im a (every solution obeys Im a · Im x = 0).
        const Quaternion axis = best_cross_axis(ua);
        const Quaternion c1 = cross_im(ua, axis);
        const Quaternion v1 = canonical_sign(c1 / norm(c1));
        const Quaternion v2 = canonical_sign(cross_im(ua, v1));
        return {SolutionKind::Affine, {}, {v1, v2}, {}};
    }

    std::vector<Quaternion> generators;
    const Quaternion product = ua * conj(ub);
    try {
        // sqrt_product needs a nonreal product; when Im a and Im b are
        // parallel the product is the positive real |Im a|² and the plain
        // square root supplies the identical principal value.
        const RootSet root = tol.is_nonreal(product) ? sqrt_product(ua, conj(ub), tol)
                                                     : sqrt(product, tol);
        generators = {root.principal, ua + ub};
    } catch (const Error&) {
        generators.clear();
    }

    if (!generators.empty()) {
        if (auto basis = orthonormalize(generators, tol)) {
            bool sound = true;
            for (const Quaternion& v : *basis)
                if (!tol.negligible(norm(a * v - v * b), norm(a))) {
                    sound = false;
                    break;
                }
            if (sound) return {SolutionKind::Affine, {}, std::move(*basis), {}};
        }
    }

    // Regime boundary: the analytic generators degenerated; take the
    // real-embedding nullspace instead.
    std::vector<Quaternion> fallback;
    for (const Vec4& v : nullspace(sylvester_matrix(a, b), tol))
        fallback.push_back(canonical_sign(from_vec(v)));
    return {SolutionKind::Affine, {}, std::move(fallback),
            "analytic basis degenerate near a regime boundary; basis taken from the "
            "real-embedding nullspace"};
}

bool inhomogeneous_solvable(const SylvesterProblem& p, const Tolerance& tol) {
    const Regime regime = classify(p.a, p.b, tol);
    if (regime != Regime::SingularNonreal && regime != Regime::RealEqual)
        throw DomainError(
            "inhomogeneous_solvable: the pair is regular; every right-hand side is "
            "solvable via solve_regular");
    if (tol.is_zero(p.c))
        throw DomainError(
            "inhomogeneous_solvable: c ≈ 0 poses the homogeneous equation");
    if (regime == Regime::RealEqual) return false; // a·x − x·b vanishes identically
    return tol.negligible(norm(p.a * p.c - p.c * conj(p.b)), norm(p.a) * norm(p.c));
}

Quaternion inhomogeneous_general(const SylvesterProblem& p, const Quaternion& q,
                                 const Tolerance& tol) {
    if (classify(p.a, p.b, tol) != Regime::SingularNonreal)
        throw DomainError("inhomogeneous_general: requires a singular nonreal pair");
    if (!tol.is_zero(p.c) && !inhomogeneous_solvable(p, tol))
        throw DomainError(
            "inhomogeneous_general: a·c = c·conj(b) fails; the equation has no "
            "solutions");
    const Quaternion ia = im(p.a);
    const Quaternion ib = im(p.b);
    return ia * (q - p.c) / (4.0 * norm_sq(ia)) +
           (q + p.c) * ib / (4.0 * norm_sq(ib));
}

SolutionSet inhomogeneous_solution_set(const SylvesterProblem& p,
                                       const Tolerance& tol) {
    const Regime regime = classify(p.a, p.b, tol);
    if (regime == Regime::RealEqual) {
        if (tol.is_zero(p.c)) return homogeneous_basis(p.a, p.b, tol);
        return {SolutionKind::Empty,
                {},
                {},
                "real equal coefficients: a*x - x*b = 0 for every x, so a nonzero "
                "right-hand side is unreachable"};
    }
    if (regime != Regime::SingularNonreal)
        throw DomainError(
            "inhomogeneous_solution_set: the pair is regular; use solve_regular");

    SolutionSet hom = homogeneous_basis(p.a, p.b, tol);
    if (tol.is_zero(p.c)) return hom;

    if (!inhomogeneous_solvable(p, tol)) {
        const Quaternion lhs = p.a * p.c;
        const Quaternion rhs = p.c * conj(p.b);
        return {SolutionKind::Empty,
                {},
                {},
                "solvability condition a*c = c*conj(b) violated: a*c = " +
                    format_quaternion(lhs) + ", c*conj(b) = " + format_quaternion(rhs)};
    }

    // Particular point c·Im(b−a)/(4|Im a|²); it solves the equation only when
    // Im b = −Im a, so verify and otherwise take the parametrized solution at
    // q = 0, which is consistent in every solvable case.
    const Quaternion ia = im(p.a);
    Quaternion particular = p.c * (im(p.b) - ia) / (4.0 * norm_sq(ia));
    if (!tol.negligible(residual(p, particular), solution_scale(p, particular)))
        particular = inhomogeneous_general(p, {}, tol);

    return {SolutionKind::Affine, particular, std::move(hom.basis),
            std::move(hom.diagnostic)};
}

SolutionSet solve(const SylvesterProblem& p, const Tolerance& tol) {
    switch (classify(p.a, p.b, tol)) {
        case Regime::Regular:
        case Regime::RealDistinct:
            return solve_regular(p, tol);
        case Regime::SingularNonreal:
        case Regime::RealEqual:
            return inhomogeneous_solution_set(p, tol);
    }
    throw InternalError("solve: unknown regime");
}

bool oracle_agrees(const SylvesterProblem& p, const SolutionSet& s,
                   const Tolerance& tol) {
    const RealMatrix4 m = sylvester_matrix(p.a, p.b);
    const std::vector<Vec4> ns = nullspace(m, tol);
    const LinearSolve ls = solve_or_refute(m, to_vec(p.c), tol);

    switch (s.kind) {
        case SolutionKind::Empty:
            return !ls.solution.has_value();
        case SolutionKind::Unique: {
            if (!ls.solution || !ns.empty()) return false;
            return tol.close(s.particular, from_vec(*ls.solution));
        }
        case SolutionKind::Affine: {
            if (!ls.solution || ns.size() != s.basis.size()) return false;
            if (!tol.negligible(residual(p, s.particular),
                                solution_scale(p, s.particular)))
                return false;
            // Mutual span containment; both bases are orthonormal.
            for (const Quaternion& u : s.basis) {
                Quaternion r = u;
                for (const Vec4& v : ns) r = r - dot4(u, from_vec(v)) * from_vec(v);
                if (!tol.negligible(norm(r), 1.0)) return false;
            }
            for (const Vec4& v : ns) {
                Quaternion r = from_vec(v);
                for (const Quaternion& u : s.basis) r = r - dot4(from_vec(v), u) * u;
                if (!tol.negligible(norm(r), 1.0)) return false;
            }
            return true;
        }
    }
    return false;
}

} // namespace qsylv
