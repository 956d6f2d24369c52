#include "s3c/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "s3c/omp_shim.hpp"
#include "s3c/spectrum.hpp"

namespace s3c {

namespace {

// Symmetric tridiagonal matrix with constant off-diagonal e.
struct Tridiag {
    std::vector<double> diag;
    double off;
};

Tridiag assemble(int lChannel, double bValue, const Grid1D& grid) {
    Tridiag t;
    t.diag.resize(grid.n);
    const double h2 = grid.h * grid.h;
    const double cent = static_cast<double>(lChannel) * (lChannel + 1);
    for (int i = 0; i < grid.n; ++i) {
        const double chi = grid.node(i);
        const double s = std::sin(chi);
        t.diag[i] = 2.0 / h2 - 2.0 * bValue * std::cos(chi) / s + cent / (s * s);
    }
    t.off = -1.0 / h2;
    return t;
}

// Number of eigenvalues strictly below x (Sturm sequence / LDL^T sign count).
int count_below(const Tridiag& t, double x) {
    const double e2 = t.off * t.off;
    int count = 0;
    double q = t.diag[0] - x;
    if (q < 0) ++count;
    for (size_t i = 1; i < t.diag.size(); ++i) {
        if (q == 0.0) q = 1e-300;
        q = t.diag[i] - x - e2 / q;
        if (q < 0) ++count;
    }
    return count;
}

// Solve (T - sigma I) w = v in place by LU with partial pivoting on the
// tridiagonal band; returns false on exact breakdown.
bool shifted_solve(const Tridiag& t, double sigma, std::vector<double>& b) {
    const int n = static_cast<int>(t.diag.size());
    std::vector<double> d(n);
    std::vector<double> sub(n - 1, t.off), sup(n - 1, t.off);
    std::vector<double> sup2(n >= 2 ? n - 2 : 0, 0.0);
    std::vector<char> swapped(n - 1, 0);
    for (int i = 0; i < n; ++i) d[i] = t.diag[i] - sigma;
    for (int i = 0; i < n - 1; ++i) {
        if (std::abs(d[i]) >= std::abs(sub[i])) {
            if (d[i] == 0.0) return false;
            const double fact = sub[i] / d[i];
            sub[i] = fact;
            d[i + 1] -= fact * sup[i];
        } else {
            const double fact = d[i] / sub[i];
            d[i] = sub[i];
            sub[i] = fact;
            const double temp = sup[i];
            sup[i] = d[i + 1];
            d[i + 1] = temp - fact * d[i + 1];
            if (i < n - 2) {
                sup2[i] = sup[i + 1];
                sup[i + 1] = -fact * sup[i + 1];
            }
            swapped[i] = 1;
        }
    }
    if (d[n - 1] == 0.0) return false;
    for (int i = 0; i < n - 1; ++i) {
        if (!swapped[i]) {
            b[i + 1] -= sub[i] * b[i];
        } else {
            const double temp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = temp - sub[i] * b[i];
        }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - sup[n - 2] * b[n - 1]) / d[n - 2];
    for (int i = n - 3; i >= 0; --i)
        b[i] = (b[i] - sup[i] * b[i + 1] - sup2[i] * b[i + 2]) / d[i];
    return true;
}

double rayleigh_quotient(const Tridiag& t, const std::vector<double>& w) {
    const int n = static_cast<int>(t.diag.size());
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        double tw = t.diag[i] * w[i];
        if (i > 0) tw += t.off * w[i - 1];
        if (i + 1 < n) tw += t.off * w[i + 1];
        num += w[i] * tw;
        den += w[i] * w[i];
    }
    return num / den;
}

// k-th (0-based) eigenvalue: bisection on the Sturm count down to a narrow
// bracket, then inverse iteration with Rayleigh-quotient refinement.
double kth_eigenvalue(const Tridiag& t, int k) {
    const int n = static_cast<int>(t.diag.size());
    double lo = t.diag[0], hi = t.diag[0];
    for (int i = 0; i < n; ++i) {
        lo = std::min(lo, t.diag[i] - 2.0 * std::abs(t.off));
        hi = std::max(hi, t.diag[i] + 2.0 * std::abs(t.off));
    }
    while (hi - lo > 1e-8 * std::max(1.0, std::abs(lo) + std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (count_below(t, mid) <= k)
            lo = mid;
        else
            hi = mid;
    }
    double lambda = 0.5 * (lo + hi);
    // deterministic pseudo-random start vector; a constant start would be
    // exactly orthogonal to the antisymmetric modes at b = 0
    std::vector<double> w(n);
    uint64_t state = 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(k);
    for (int i = 0; i < n; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        w[i] = static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
    }
    double sigma = lambda;
    for (int it = 0; it < 5; ++it) {
        std::vector<double> v = w;
        if (!shifted_solve(t, sigma, v)) {
            sigma += 1e-10 * std::max(1.0, std::abs(sigma));
            continue;
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm)) break;
        for (double& x : v) x /= norm;
        w = v;
        const double rq = rayleigh_quotient(t, w);
        // stay inside the bisection bracket; the bracket identifies index k
        if (rq > lo - 1e-6 && rq < hi + 1e-6) {
            if (std::abs(rq - sigma) < 1e-13 * std::max(1.0, std::abs(rq))) return rq;
            sigma = rq;
            lambda = rq;
        } else {
            break;
        }
    }
    return lambda;
}

std::vector<double> lowest_eigenvalues(const Tridiag& t, int count, bool parallel) {
    std::vector<double> ev(count);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < count; ++k) ev[k] = kth_eigenvalue(t, k);
    } else {
        for (int k = 0; k < count; ++k) ev[k] = kth_eigenvalue(t, k);
    }
    return ev;
}

EigenResult solve_channel(int lChannel, double bValue, Grid1D grid, int count,
                          bool richardson, double tol, bool parallel) {
    if (count < 1) throw std::invalid_argument("radial_eigen: count must be >= 1");
    if (grid.n < 64) throw std::invalid_argument("radial_eigen: grid too small (n >= 64)");
    EigenResult res{lChannel, bValue, {}, grid, richardson, 0.0, false};
    const Tridiag coarse = assemble(lChannel, bValue, grid);
    res.eigenvalues = lowest_eigenvalues(coarse, count, parallel);
    if (richardson) {
        const Grid1D fine = Grid1D::interior(2 * grid.n + 1);  // h -> h/2
        const Tridiag t2 = assemble(lChannel, bValue, fine);
        const std::vector<double> ev2 = lowest_eigenvalues(t2, count, parallel);
        for (int k = 0; k < count; ++k) {
            const double est = std::abs(ev2[k] - res.eigenvalues[k]) / 3.0;
            res.estimatedError = std::max(res.estimatedError, est);
            res.eigenvalues[k] = (4.0 * ev2[k] - res.eigenvalues[k]) / 3.0;
        }
        res.coarseWarning = res.estimatedError > tol;
    }
    return res;
}

GramReport gram_scan(int Kmax, int quadOrder, Convention conv, bool parallel) {
    if (quadOrder < 2 * Kmax + 4)
        throw std::invalid_argument("orthonormality_scan: quadOrder must be >= 2*Kmax+4");
    const QuadratureRule rule = gauss_legendre(quadOrder);
    std::vector<std::pair<int, int>> labels;
    for (int K = 0; K <= Kmax; ++K)
        for (int l = 0; l <= K; ++l) labels.emplace_back(K, l);
    const int m = static_cast<int>(labels.size());

    std::vector<TrigExpr> fn(m);
    for (int i = 0; i < m; ++i) fn[i] = s_function(labels[i].first, labels[i].second, conv);

    GramReport rep{Kmax, quadOrder, std::vector<std::vector<double>>(m, std::vector<double>(m, 0.0)),
                   std::vector<double>(m, 0.0), 0.0, 0.0};
    const int pairs = m * (m + 1) / 2;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int p = 0; p < pairs; ++p) {
        // unrank p -> (i, j), j <= i
        int i = static_cast<int>((std::sqrt(8.0 * p + 1) - 1) / 2);
        while ((i + 1) * (i + 2) / 2 <= p) ++i;
        const int j = p - i * (i + 1) / 2;
        const double v = integrate(rule, 0.0, std::numbers::pi, [&](double chi) {
            const double s = std::sin(chi);
            return eval(fn[i], 0.0, chi) * eval(fn[j], 0.0, chi) * s * s;
        });
        rep.gram[i][j] = v;
        rep.gram[j][i] = v;
    }
    for (int i = 0; i < m; ++i) rep.norms[i] = rep.gram[i][i];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            if (labels[i].second == labels[j].second) {
                const double a = std::abs(rep.gram[i][j]);
                rep.maxSameLOffDiagonal = std::max(rep.maxSameLOffDiagonal, a);
                rep.maxSameLOffDiagonalRel = std::max(
                    rep.maxSameLOffDiagonalRel, a / std::sqrt(rep.norms[i] * rep.norms[j]));
            }
    return rep;
}

}  // namespace

Grid1D Grid1D::interior(int n) {
    if (n < 1) throw std::invalid_argument("Grid1D: n must be >= 1");
    return Grid1D{n, std::numbers::pi / (n + 1)};
}

EigenResult radial_eigen(int lChannel, double bValue, Grid1D grid, int count,
                         bool richardson, double tol) {
    return solve_channel(lChannel, bValue, grid, count, richardson, tol, true);
}

EigenResult radial_eigen_serial(int lChannel, double bValue, Grid1D grid, int count,
                                bool richardson, double tol) {
    return solve_channel(lChannel, bValue, grid, count, richardson, tol, false);
}

DegeneracyReport degeneracy_check(int Kmax, double bValue, double tol, int gridN) {
    if (tol <= 0) throw std::invalid_argument("degeneracy_check: tol must be > 0");
    DegeneracyReport rep{Kmax, bValue, tol, {}, true};
    std::vector<EigenResult> channels(Kmax + 1);
#pragma omp parallel for schedule(dynamic)
    for (int l = 0; l <= Kmax; ++l)
        channels[l] = radial_eigen_serial(l, bValue, Grid1D::interior(gridN), Kmax - l + 1,
                                          true, tol);
    for (int K = 0; K <= Kmax; ++K) {
        DegeneracyRow row{K, {}, 0.0, 0.0};
        const double closed = energy(K, bValue);
        double lo = 0.0, hi = 0.0;
        for (int l = 0; l <= K; ++l) {
            const double eps = channels[l].eigenvalues[K - l] - 1.0;
            row.epsilonByChannel.push_back(eps);
            if (l == 0) lo = hi = eps;
            lo = std::min(lo, eps);
            hi = std::max(hi, eps);
            row.maxClosedFormError = std::max(row.maxClosedFormError, std::abs(eps - closed));
        }
        row.spread = hi - lo;
        if (row.spread > tol || row.maxClosedFormError > tol) rep.passed = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

GramReport orthonormality_scan(int Kmax, int quadOrder, Convention conv) {
    return gram_scan(Kmax, quadOrder, conv, true);
}

GramReport orthonormality_scan_serial(int Kmax, int quadOrder, Convention conv) {
    return gram_scan(Kmax, quadOrder, conv, false);
}

}  // namespace s3c
