#pragma once

#include <string>
#include <vector>

#include "qsylv/quaternion.hpp"

namespace qsylv {

/// Solvability regime of the coefficient pair (a, b) of a·x − x·b = c.
enum class Regime {
    Regular,         // x ↦ a·x − x·b is invertible: unique solution
    SingularNonreal, // nonreal similar pair: 2-dimensional solution families
    RealEqual,       // equal real coefficients: a·x − x·b vanishes identically
    RealDistinct,    // distinct real coefficients: scalar equation (a−b)·x = c
};

const char* to_string(Regime r);

enum class SolutionKind { Empty, Unique, Affine };

const char* to_string(SolutionKind k);

/// All solutions of a·x − x·b = c as an affine real subspace of the
/// quaternions: a particular point plus 0–4 pairwise orthonormal directions.
struct SolutionSet {
    SolutionKind kind = SolutionKind::Empty;
    Quaternion particular{};          // meaningful for Unique and Affine
    std::vector<Quaternion> basis{};  // Affine only
    std::string diagnostic{};         // why Empty, or that a fallback was taken
};

struct SylvesterProblem {
    Quaternion a{};
    Quaternion b{};
    Quaternion c{}; // zero for the homogeneous equation
};

/// norm(a·x − x·b − c).
double residual(const SylvesterProblem& p, const Quaternion& x);

Regime classify(const Quaternion& a, const Quaternion& b, const Tolerance& tol = {});

/// Strip the (equal) real parts off a singular nonreal pair; the solution set
/// is unchanged.
SylvesterProblem reduce_to_pure(const SylvesterProblem& p, const Tolerance& tol = {});

/// Closed-form unique solution x = (a² − 2·Re(b)·a + |b|²)⁻¹ (a·c − c·conj(b))
/// for the Regular and RealDistinct regimes (the polynomial degenerates exactly
/// on the singular pairs).
SolutionSet solve_regular(const SylvesterProblem& p, const Tolerance& tol = {});

/// The parametrized solution x = (Im a)·q + q·(Im b) of the homogeneous
/// equation for a singular nonreal pair; surjective onto the solution space as
/// q ranges over all quaternions.
Quaternion homogeneous_general(const Quaternion& a, const Quaternion& b,
                               const Quaternion& q, const Tolerance& tol = {});

/// Orthonormal basis of the homogeneous solution space: the span of
/// {√((Im a)(Im b)*), Im(a+b)} for a singular nonreal pair (the plane of pure
/// quaternions orthogonal to Im a when Im b ≈ −Im a), or all four directions
/// for an equal real pair.
SolutionSet homogeneous_basis(const Quaternion& a, const Quaternion& b,
                              const Tolerance& tol = {});

/// a·c = c·conj(b), the solvability test for the singular inhomogeneous
/// equation; always false for an equal real pair.
bool inhomogeneous_solvable(const SylvesterProblem& p, const Tolerance& tol = {});

/// The parametrized solution
/// x = (Im a)(q − c)/(4|Im a|²) + (q + c)(Im b)/(4|Im b|²) of a solvable
/// singular inhomogeneous equation.
Quaternion inhomogeneous_general(const SylvesterProblem& p, const Quaternion& q,
                                 const Tolerance& tol = {});

/// Full solution set for the singular regimes; Empty encodes unsolvability.
SolutionSet inhomogeneous_solution_set(const SylvesterProblem& p,
                                       const Tolerance& tol = {});

/// Regime dispatcher covering every coefficient pair.
SolutionSet solve(const SylvesterProblem& p, const Tolerance& tol = {});

/// Cross-check a solution set against the 4×4 real-embedding backend:
/// consistency, family dimension, span and particular-point agreement.
bool oracle_agrees(const SylvesterProblem& p, const SolutionSet& s,
                   const Tolerance& tol = {});

} // namespace qsylv
