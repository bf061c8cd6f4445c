#include "qsylv/embed.hpp"

#include <cmath>

namespace qsylv {

namespace {

double vec_norm(const Vec4& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}

double vec_dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Vec4 vec_sub(const Vec4& a, const Vec4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

double max_abs_entry(const RealMatrix4& m) {
    double best = 0.0;
    for (double v : m.e) best = std::max(best, std::fabs(v));
    return best;
}

struct Echelon {
    double a[4][5] = {};  // working rows, column 4 carries the right-hand side
    int pivot_col[4] = {};
    int npivots = 0;
};

// Forward elimination with partial pivoting; entries at or below the threshold
// are not accepted as pivots.
Echelon eliminate(const RealMatrix4& m, const Vec4* rhs, double pivot_threshold) {
    Echelon e;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) e.a[i][j] = m.at(i, j);
        e.a[i][4] = rhs ? (*rhs)[i] : 0.0;
    }
    int row = 0;
    for (int col = 0; col < 4 && row < 4; ++col) {
        int piv = row;
        for (int i = row + 1; i < 4; ++i)
            if (std::fabs(e.a[i][col]) > std::fabs(e.a[piv][col])) piv = i;
        if (std::fabs(e.a[piv][col]) <= pivot_threshold) continue;
        if (piv != row)
            for (int j = 0; j <= 4; ++j) std::swap(e.a[piv][j], e.a[row][j]);
        for (int i = row + 1; i < 4; ++i) {
            const double f = e.a[i][col] / e.a[row][col];
            e.a[i][col] = 0.0;
            for (int j = col + 1; j <= 4; ++j) e.a[i][j] -= f * e.a[row][j];
        }
        e.pivot_col[row] = col;
        ++row;
    }
    e.npivots = row;
    return e;
}

// Particular point with all free variables at zero.
Vec4 back_substitute(const Echelon& e) {
    Vec4 x{};
    for (int r = e.npivots - 1; r >= 0; --r) {
        const int pc = e.pivot_col[r];
        double s = e.a[r][4];
        for (int c = pc + 1; c < 4; ++c) s -= e.a[r][c] * x[c];
        x[pc] = s / e.a[r][pc];
    }
    return x;
}

} // namespace

RealMatrix4 left_embed(const Quaternion& a) {
    RealMatrix4 m;
    const double r[16] = {a.w, -a.x, -a.y, -a.z,  //
                          a.x, a.w,  -a.z, a.y,   //
                          a.y, a.z,  a.w,  -a.x,  //
                          a.z, -a.y, a.x,  a.w};
    for (int i = 0; i < 16; ++i) m.e[i] = r[i];
    return m;
}

RealMatrix4 right_embed(const Quaternion& b) {
    RealMatrix4 m;
    const double r[16] = {b.w, -b.x, -b.y, -b.z,  //
                          b.x, b.w,  b.z,  -b.y,  //
                          b.y, -b.z, b.w,  b.x,   //
                          b.z, b.y,  -b.x, b.w};
    for (int i = 0; i < 16; ++i) m.e[i] = r[i];
    return m;
}

RealMatrix4 sylvester_matrix(const Quaternion& a, const Quaternion& b) {
    return left_embed(a) - right_embed(b);
}

std::vector<Vec4> nullspace(const RealMatrix4& m, const Tolerance& tol) {
    const Echelon e = eliminate(m, nullptr, tol.rel * max_abs_entry(m));
    bool is_pivot_col[4] = {};
    for (int r = 0; r < e.npivots; ++r) is_pivot_col[e.pivot_col[r]] = true;

    std::vector<Vec4> basis;
    for (int fc = 0; fc < 4; ++fc) {
        if (is_pivot_col[fc]) continue;
        Vec4 v{};
        v[fc] = 1.0;
        for (int r = e.npivots - 1; r >= 0; --r) {
            const int pc = e.pivot_col[r];
            double s = 0.0;
            for (int c = pc + 1; c < 4; ++c) s += e.a[r][c] * v[c];
            v[pc] = -s / e.a[r][pc];
        }
        basis.push_back(v);
    }

    // Modified Gram-Schmidt; the special solutions are independent by
    // construction (each owns a distinct free coordinate).
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double d = vec_dot(basis[i], basis[j]);
            for (int c = 0; c < 4; ++c) basis[i][c] -= d * basis[j][c];
        }
        const double n = vec_norm(basis[i]);
        for (int c = 0; c < 4; ++c) basis[i][c] /= n;
    }
    return basis;
}

int rank(const RealMatrix4& m, const Tolerance& tol) {
    return eliminate(m, nullptr, tol.rel * max_abs_entry(m)).npivots;
}

LinearSolve solve_or_refute(const RealMatrix4& m, const Vec4& rhs,
                            const Tolerance& tol) {
    const double mmax = max_abs_entry(m);
    const Echelon e = eliminate(m, &rhs, tol.rel * mmax);
    const Vec4 x = back_substitute(e);
    const double resid = vec_norm(vec_sub(m * x, rhs));
    if (resid <= tol.abs + tol.rel * (mmax * vec_norm(x) + vec_norm(rhs)))
        return {x, resid};

    // Inconsistent: the normal equations give a least-squares point, whose
    // residual is the minimum over all x.
    const RealMatrix4 mt = transpose(m);
    const RealMatrix4 mtm = mt * m;
    const Vec4 mtb = mt * rhs;
    const Echelon n = eliminate(mtm, &mtb, tol.rel * max_abs_entry(mtm));
    const Vec4 xls = back_substitute(n);
    return {std::nullopt, vec_norm(vec_sub(m * xls, rhs))};
}

} // namespace qsylv
