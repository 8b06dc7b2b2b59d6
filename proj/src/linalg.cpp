#include "conevol/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace conevol::linalg {

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

double dist(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Vec& a, double s) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

Vec normalized(const Vec& a) {
    const double n = norm(a);
    if (n < 1e-300) throw input_error("cannot normalize a (near-)zero vector");
    return scale(a, 1.0 / n);
}

std::optional<Vec> solve(std::vector<Vec> rows, Vec rhs, double tol) {
    const int n = static_cast<int>(rhs.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) pivot = r;
        if (std::abs(rows[pivot][col]) < tol) return std::nullopt;
        std::swap(rows[pivot], rows[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (int r = col + 1; r < n; ++r) {
            const double f = rows[r][col] / rows[col][col];
            if (f == 0.0) continue;
            for (int c = col; c < n; ++c) rows[r][c] -= f * rows[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    Vec x(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = rhs[r];
        for (int c = r + 1; c < n; ++c) s -= rows[r][c] * x[c];
        x[r] = s / rows[r][r];
    }
    return x;
}

std::optional<std::pair<Vec, double>> hyperplane_through(const std::vector<Vec>& pts,
                                                         double tol) {
    const int d = static_cast<int>(pts[0].size());
    if (static_cast<int>(pts.size()) != d) throw input_error("hyperplane_through needs d points");
    // Rows p_i - p_0, then the nullspace direction of the (d-1) x d system.
    std::vector<Vec> rows;
    double scale_hint = 1.0;
    for (int i = 1; i < d; ++i) {
        rows.push_back(sub(pts[i], pts[0]));
        scale_hint = std::max(scale_hint, norm(rows.back()));
    }
    const int m = d - 1;
    std::vector<int> pivot_col(m, -1);
    std::vector<bool> used(d, false);
    int row = 0;
    for (int r = 0; r < m; ++r) {
        // largest remaining entry in this row block
        int pr = -1, pc = -1;
        double best = tol * scale_hint;
        for (int rr = row; rr < m; ++rr)
            for (int cc = 0; cc < d; ++cc)
                if (!used[cc] && std::abs(rows[rr][cc]) > best) {
                    best = std::abs(rows[rr][cc]);
                    pr = rr;
                    pc = cc;
                }
        if (pr < 0) return std::nullopt;  // rank-deficient: degenerate point set
        std::swap(rows[pr], rows[row]);
        used[pc] = true;
        pivot_col[row] = pc;
        for (int rr = 0; rr < m; ++rr) {
            if (rr == row) continue;
            const double f = rows[rr][pc] / rows[row][pc];
            if (f == 0.0) continue;
            for (int cc = 0; cc < d; ++cc) rows[rr][cc] -= f * rows[row][cc];
        }
        ++row;
    }
    int free_col = -1;
    for (int c = 0; c < d; ++c)
        if (!used[c]) free_col = c;
    Vec nrm(d, 0.0);
    nrm[free_col] = 1.0;
    for (int r = 0; r < m; ++r) nrm[pivot_col[r]] = -rows[r][free_col] / rows[r][pivot_col[r]];
    nrm = normalized(nrm);
    return std::make_pair(nrm, dot(nrm, pts[0]));
}

std::vector<Vec> orthonormal_complement(const Vec& u) {
    const int n = static_cast<int>(u.size());
    // Gram-Schmidt of the standard basis against u, dropping the most
    // u-aligned axis.
    int drop = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(u[i]) > std::abs(u[drop])) drop = i;
    std::vector<Vec> basis;
    for (int i = 0; i < n; ++i) {
        if (i == drop) continue;
        Vec e(n, 0.0);
        e[i] = 1.0;
        Vec v = sub(e, scale(u, dot(e, u)));
        for (const Vec& b : basis) v = sub(v, scale(b, dot(v, b)));
        basis.push_back(normalized(v));
    }
    return basis;
}

std::vector<Vec> orthonormal_basis(const std::vector<Vec>& span, double tol) {
    std::vector<Vec> basis;
    for (const Vec& s : span) {
        Vec v = s;
        for (const Vec& b : basis) v = sub(v, scale(b, dot(v, b)));
        if (norm(v) > tol * (1.0 + norm(s))) basis.push_back(normalized(v));
    }
    return basis;
}

int rank(std::vector<Vec> rows, double tol) {
    if (rows.empty()) return 0;
    const int d = static_cast<int>(rows[0].size());
    double scale_hint = 1.0;
    for (const Vec& r : rows) scale_hint = std::max(scale_hint, norm(r));
    int rk = 0;
    std::vector<bool> used(d, false);
    for (int step = 0; step < d && rk < static_cast<int>(rows.size()); ++step) {
        int pr = -1, pc = -1;
        double best = tol * scale_hint;
        for (int rr = rk; rr < static_cast<int>(rows.size()); ++rr)
            for (int cc = 0; cc < d; ++cc)
                if (!used[cc] && std::abs(rows[rr][cc]) > best) {
                    best = std::abs(rows[rr][cc]);
                    pr = rr;
                    pc = cc;
                }
        if (pr < 0) break;
        std::swap(rows[pr], rows[rk]);
        used[pc] = true;
        for (int rr = rk + 1; rr < static_cast<int>(rows.size()); ++rr) {
            const double f = rows[rr][pc] / rows[rk][pc];
            if (f == 0.0) continue;
            for (int cc = 0; cc < d; ++cc) rows[rr][cc] -= f * rows[rk][cc];
        }
        ++rk;
    }
    return rk;
}

int affine_rank(const std::vector<Vec>& pts, double tol) {
    if (pts.size() < 2) return 0;
    std::vector<Vec> rows;
    for (size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
    return rank(std::move(rows), tol);
}

Vec mat_apply(const std::vector<Vec>& rows, const Vec& x) {
    Vec r(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) r[i] = dot(rows[i], x);
    return r;
}

}  // namespace conevol::linalg
