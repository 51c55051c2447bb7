#ifndef CIRCDIAM_TESTS_ORACLES_HPP
#define CIRCDIAM_TESTS_ORACLES_HPP

// Test-only reference implementations. They share no elimination code with
// the library: plain Gauss-Jordan with rational division, Laplace expansion,
// and brute-force subset scans.

#include "circdiam/hrep_io.hpp"
#include "circdiam/linalg.hpp"
#include "circdiam/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace circdiam::oracle {

using Rows = std::vector<QVector>;

inline Rows rows_of(const QMatrix& m) {
    Rows out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vector(r));
    return out;
}

// Reduced row echelon form by textbook Gauss-Jordan over Q.
inline std::pair<Rows, std::vector<std::size_t>> rref(Rows a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const Rational piv = a[r][c];
        for (auto& v : a[r]) v /= piv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return {a, pivots};
}

inline std::size_t naive_rank(const QMatrix& m) { return rref(rows_of(m), m.cols()).second.size(); }

inline Rational laplace_det(const Rows& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Rational det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        Rows minor;
        for (std::size_t r = 1; r < n; ++r) {
            QVector row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[r][j]);
            minor.push_back(row);
        }
        Rational term = a[0][c] * laplace_det(minor);
        det += (c % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

// Rank as the size of the largest nonzero minor.
inline std::size_t minor_rank(const QMatrix& m) {
    const std::size_t max_k = std::min(m.rows(), m.cols());
    for (std::size_t k = max_k; k > 0; --k) {
        std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
        std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
            do {
                Rows sub;
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    if (!rsel[r]) continue;
                    QVector row;
                    for (std::size_t c = 0; c < m.cols(); ++c)
                        if (csel[c]) row.push_back(m(r, c));
                    sub.push_back(row);
                }
                if (laplace_det(sub) != 0) return k;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

inline std::optional<QVector> naive_solve(const QMatrix& m, const QVector& rhs) {
    Rows aug = rows_of(m);
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    auto [r, pivots] = rref(aug, m.cols() + 1);
    if (pivots.size() != m.cols()) return std::nullopt;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] != i) return std::nullopt;
    QVector x(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) x[i] = r[i][m.cols()];
    return x;
}

inline std::vector<QVector> naive_nullspace(const QMatrix& m) {
    auto [r, pivots] = rref(rows_of(m), m.cols());
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        QVector x(m.cols());
        x[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r[i][f];
        basis.push_back(x);
    }
    return basis;
}

// Vertex set by solving every dim-subset of inequality rows (no equalities).
inline std::set<QVector> naive_vertices(const HPolyhedron& p) {
    std::set<QVector> out;
    const std::size_t n = p.dim(), m = p.num_inequalities();
    std::vector<bool> sel(m, false);
    if (n > m) return out;
    std::fill(sel.begin(), sel.begin() + static_cast<long>(n), true);
    do {
        QMatrix sys(0, n);
        QVector rhs;
        for (std::size_t i = 0; i < m; ++i) {
            if (!sel[i]) continue;
            sys.append_row(p.ineq_matrix().row(i));
            rhs.push_back(p.ineq_rhs()[i]);
        }
        auto x = naive_solve(sys, rhs);
        if (!x) continue;
        bool feasible = true;
        for (std::size_t i = 0; i < m && feasible; ++i) {
            Rational acc = -p.ineq_rhs()[i];
            for (std::size_t j = 0; j < n; ++j) acc += p.ineq_matrix()(i, j) * (*x)[j];
            feasible = acc >= 0;
        }
        if (feasible) out.insert(*x);
    } while (std::prev_permutation(sel.begin(), sel.end()));
    return out;
}

inline std::vector<int> support_of(const HPolyhedron& p, const QVector& g) {
    std::vector<int> s;
    for (std::size_t i = 0; i < p.num_inequalities(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < p.dim(); ++j) acc += p.ineq_matrix()(i, j) * g[j];
        if (acc != 0) s.push_back(static_cast<int>(i) + 1);
    }
    return s;
}

// Circuits (canonical sign) by scanning every row subset: collect all
// one-dimensional kernels, then keep the support-minimal ones.
inline std::set<ZVector> brute_force_circuits(const HPolyhedron& p) {
    const std::size_t m = p.num_inequalities();
    std::map<ZVector, std::vector<int>> candidates;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        QMatrix sys = p.eq_matrix();
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1UL << i)) sys.append_row(p.ineq_matrix().row(i));
        auto basis = naive_nullspace(sys);
        if (basis.size() != 1) continue;
        auto s = support_of(p, basis.front());
        if (s.empty()) continue;
        candidates.emplace(primitive_normalize(basis.front()).components(), s);
    }
    std::set<ZVector> out;
    for (const auto& [g, s] : candidates) {
        bool minimal = true;
        for (const auto& [h, t] : candidates) {
            if (t.size() < s.size() && std::includes(s.begin(), s.end(), t.begin(), t.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.insert(g);
    }
    return out;
}

// Convex polygon through the given vertices (counter-clockwise), one
// inequality per edge with a primitive inward normal.
inline HPolyhedron polygon(const std::vector<std::pair<long, long>>& ccw) {
    QMatrix a(0, 2);
    QVector b;
    for (std::size_t k = 0; k < ccw.size(); ++k) {
        auto [x1, y1] = ccw[k];
        auto [x2, y2] = ccw[(k + 1) % ccw.size()];
        QVector normal{Rational(-(y2 - y1)), Rational(x2 - x1)};
        auto prim = primitive_direction(normal);
        QVector row{Rational(prim[0]), Rational(prim[1])};
        a.append_row(row);
        b.push_back(row[0] * x1 + row[1] * y1);
    }
    return HPolyhedron(std::move(a), std::move(b));
}

inline long cross(std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Strict convex hull (collinear points dropped), counter-clockwise.
inline std::vector<std::pair<long, long>> convex_hull(std::vector<std::pair<long, long>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<std::pair<long, long>> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline Rational random_rational(std::mt19937& rng, long lo, long hi, long max_den) {
    std::uniform_int_distribution<long> num(lo * max_den, hi * max_den), den(1, max_den);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

// Bounded polytope in dimension d: a box [-r, r]^d intersected with random
// cuts a.x >= b (b < 0, so the origin stays interior). Cuts are small integer
// rows with rational right-hand sides; degenerate vertices can occur.
inline HPolyhedron random_polytope(std::mt19937& rng, std::size_t d) {
    std::uniform_int_distribution<int> coef(-3, 3), cuts(1, d == 2 ? 4 : 3), radius(1, 3);
    QMatrix a(0, d);
    QVector b;
    const long r = radius(rng);
    for (std::size_t i = 0; i < d; ++i) {
        QVector row(d), neg(d);
        row[i] = 1;
        neg[i] = -1;
        a.append_row(row);
        b.push_back(-r);
        a.append_row(neg);
        b.push_back(-r);
    }
    const int k = cuts(rng);
    for (int c = 0; c < k; ++c) {
        QVector row(d);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& v : row) {
                v = coef(rng);
                nonzero = nonzero || v != 0;
            }
        }
        a.append_row(row);
        b.push_back(-random_rational(rng, 0, r, 3) - Rational(1, 4));
    }
    return HPolyhedron(std::move(a), std::move(b));
}

// Each inequality row and its right-hand side scaled by a positive rational.
inline HPolyhedron scale_rows(const HPolyhedron& p, std::mt19937& rng) {
    QMatrix a(0, p.dim());
    QVector b;
    for (std::size_t i = 0; i < p.num_inequalities(); ++i) {
        Rational s = random_rational(rng, 0, 4, 5) + Rational(1, 7);
        QVector row = p.ineq_matrix().row_vector(i);
        for (auto& v : row) v *= s;
        a.append_row(row);
        b.push_back(p.ineq_rhs()[i] * s);
    }
    return HPolyhedron(p.eq_matrix(), p.eq_rhs(), std::move(a), std::move(b));
}

}  // namespace circdiam::oracle

#endif
