#include "s3c/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace s3c {

namespace {

std::vector<TrigKey> collect_keys(const std::vector<TrigExpr>& exprs) {
    std::vector<TrigKey> keys;
    for (const auto& e : exprs)
        for (const auto& [k, c] : e.terms()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

}  // namespace

ExpansionRow expand(int K, int lTilde, Convention conv) {
    if (lTilde < 0 || lTilde > K) throw std::invalid_argument("expand: need 0 <= lTilde <= K");
    const int m = K - lTilde + 1;
    std::vector<TrigExpr> basis(m);
    for (int j = 0; j < m; ++j) basis[j] = s_function(K, lTilde + j, conv);
    const TrigExpr target = psi_chi(K, lTilde);

    std::vector<TrigExpr> all = basis;
    all.push_back(target);
    const std::vector<TrigKey> keys = collect_keys(all);
    const int rows = static_cast<int>(keys.size());

    // augmented system over Q: constant matrix, Q[b] right-hand side
    std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(m));
    std::vector<PolyB> rhs(rows);
    for (int r = 0; r < rows; ++r) {
        for (int j = 0; j < m; ++j) {
            auto it = basis[j].terms().find(keys[r]);
            if (it != basis[j].terms().end()) {
                if (it->second.degree() > 0)
                    throw std::logic_error("expand: basis function depends on b");
                mat[r][j] = it->second.coeff(0);
            }
        }
        auto it = target.terms().find(keys[r]);
        if (it != target.terms().end()) rhs[r] = it->second;
    }

    // Gauss-Jordan with the pivot rows recorded per column
    std::vector<int> pivotRow(m, -1);
    std::vector<bool> used(rows, false);
    for (int j = 0; j < m; ++j) {
        int pr = -1;
        for (int r = 0; r < rows; ++r)
            if (!used[r] && !mat[r][j].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) throw std::runtime_error("expand: singular system");
        used[pr] = true;
        pivotRow[j] = pr;
        const Rational inv = Rational(1) / mat[pr][j];
        for (int c = 0; c < m; ++c) mat[pr][c] *= inv;
        rhs[pr] = rhs[pr] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || mat[r][j].is_zero()) continue;
            const Rational f = mat[r][j];
            for (int c = 0; c < m; ++c) mat[r][c] -= f * mat[pr][c];
            rhs[r] = rhs[r] - rhs[pr] * f;
        }
    }
    // consistency: eliminated non-pivot rows must vanish
    for (int r = 0; r < rows; ++r)
        if (!used[r] && !rhs[r].is_zero())
            throw std::runtime_error("expand: inconsistent system");

    ExpansionRow row{K, lTilde, conv, {}};
    for (int j = 0; j < m; ++j) row.coeffs[lTilde + j] = rhs[pivotRow[j]];

    // exact reconstruction check
    TrigExpr rebuilt;
    for (int j = 0; j < m; ++j) rebuilt += basis[j] * row.coeffs[lTilde + j];
    if (rebuilt != target) throw std::runtime_error("expand: reconstruction failed");
    return row;
}

std::vector<ExpansionRow> table1(int Kmax, Convention conv) {
    if (Kmax < 0) throw std::invalid_argument("table1: Kmax must be >= 0");
    std::vector<ExpansionRow> rows;
    for (int K = 0; K <= Kmax; ++K)
        for (int lT = 0; lT <= K; ++lT) rows.push_back(expand(K, lT, conv));
    return rows;
}

ConnectionMatrix::ConnectionMatrix(int K, std::vector<int> mTilde, Convention conv)
    : k_(K), mTilde_(std::move(mTilde)), conv_(conv) {
    if (static_cast<int>(mTilde_.size()) != K + 1)
        throw std::invalid_argument("ConnectionMatrix: mTilde needs one entry per row");
    for (int r = 0; r <= K; ++r)
        if (std::abs(mTilde_[r]) > r)
            throw std::invalid_argument("ConnectionMatrix: |mTilde_r| <= r required");
    entries_.resize(K + 1);
    for (int r = 0; r <= K; ++r) {
        const ExpansionRow row = expand(K, r, conv);
        for (int c = r; c <= K; ++c)
            entries_[r].push_back({row.coeffs.at(c), mTilde_[r] - c, r, mTilde_[r], c});
    }
}

const ConnectionEntry& ConnectionMatrix::entry(int r, int c) const {
    if (r < 0 || c < r || c > k_) throw std::out_of_range("ConnectionMatrix::entry");
    return entries_[r][c - r];
}

std::vector<std::vector<std::complex<double>>> ConnectionMatrix::evaluate(
    double theta, double phi, double bValue, bool regularizePoles) const {
    const bool atPole = !(theta > 0.0 && theta < std::numbers::pi) || std::sin(theta) == 0.0;
    if (atPole && !regularizePoles)
        throw PoleError("ConnectionMatrix: singular at theta in {0, pi}");
    const double x = std::cos(theta);
    auto legendre = [&](int l, int m) {
        if (atPole) return assoc_legendre(l, 0, theta < std::numbers::pi / 2 ? 1.0 : -1.0);
        return assoc_legendre(l, m, x);
    };
    std::vector<std::vector<std::complex<double>>> a(
        k_ + 1, std::vector<std::complex<double>>(k_ + 1, 0.0));
    for (int r = 0; r <= k_; ++r)
        for (int c = r; c <= k_; ++c) {
            const ConnectionEntry& e = entries_[r][c - r];
            a[r][c] = eval(e.coeff, bValue) * std::polar(1.0, e.phase * phi) *
                      (legendre(e.numL, e.numM) / legendre(e.denL, e.denL));
        }
    return a;
}

std::complex<double> ConnectionMatrix::determinant(double theta, double phi,
                                                   double bValue) const {
    const auto a = evaluate(theta, phi, bValue);
    std::complex<double> det = 1.0;
    for (int r = 0; r <= k_; ++r) det *= a[r][r];
    return det;
}

ConnectionMatrix connection_matrix(int K, Convention conv) {
    std::vector<int> mTilde(K + 1);
    for (int r = 0; r <= K; ++r) mTilde[r] = r;
    return ConnectionMatrix(K, std::move(mTilde), conv);
}

ConnectionMatrix connection_matrix(int K, const std::vector<int>& mTilde, Convention conv) {
    return ConnectionMatrix(K, mTilde, conv);
}

std::vector<SamplePoint> sample_points(uint64_t seed, int count) {
    std::vector<SamplePoint> pts;
    pts.reserve(count);
    uint64_t s = seed ? seed : 0x853c49e6748fea9bULL;
    auto next = [&]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return static_cast<double>(s >> 11) * 0x1.0p-53;
    };
    const double lo = 0.1, hi = std::numbers::pi - 0.1;
    for (int i = 0; i < count; ++i) {
        SamplePoint p;
        p.chi = lo + (hi - lo) * next();
        p.theta = lo + (hi - lo) * next();
        p.phi = 2.0 * std::numbers::pi * next();
        pts.push_back(p);
    }
    return pts;
}

ResidualReport verify_sl(int K, double bValue, const std::vector<SamplePoint>& points,
                         Convention conv) {
    const ConnectionMatrix a = connection_matrix(K, conv);
    std::vector<TrigExpr> psi(K + 1), s(K + 1);
    for (int l = 0; l <= K; ++l) {
        psi[l] = psi_chi(K, l);
        s[l] = s_function(K, l, conv);
    }
    ResidualReport rep{K, bValue, 0.0, static_cast<int>(points.size())};
    for (const SamplePoint& p : points) {
        const double damp = std::exp(-bValue / (K + 1) * p.chi);
        const double x = std::cos(p.theta);
        const auto mat = a.evaluate(p.theta, p.phi, bValue);
        for (int r = 0; r <= K; ++r) {
            const int mt = a.m_tilde()[r];
            const std::complex<double> lhs = damp * eval(psi[r], bValue, p.chi) *
                                             assoc_legendre(r, mt, x) *
                                             std::polar(1.0, mt * p.phi);
            std::complex<double> rhs = 0.0;
            for (int c = r; c <= K; ++c)
                rhs += mat[r][c] * damp * eval(s[c], bValue, p.chi) *
                       assoc_legendre(c, c, x) * std::polar(1.0, c * p.phi);
            rep.maxResidual = std::max(rep.maxResidual, std::abs(lhs - rhs));
        }
    }
    return rep;
}

}  // namespace s3c
