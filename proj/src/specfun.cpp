#include "s3c/specfun.hpp"

#include <cmath>
#include <numbers>

namespace s3c {

Poly<Rational> gegenbauer(int n, int lambda, Convention conv) {
    if (n < 0) throw std::invalid_argument("gegenbauer: n must be >= 0");
    if (lambda < 1) throw std::invalid_argument("gegenbauer: lambda must be >= 1");
    Poly<Rational> prev2 = Poly<Rational>(1L);
    Poly<Rational> prev1 = Poly<Rational>::monomial(1, Rational(2L * lambda));
    Poly<Rational> c = n == 0 ? prev2 : prev1;
    for (int k = 2; k <= n; ++k) {
        // k C_k = 2x (k+lambda-1) C_{k-1} - (k+2lambda-2) C_{k-2}
        Poly<Rational> next =
            Poly<Rational>::monomial(1, Rational(2L * (k + lambda - 1), k)) * prev1 -
            Rational(static_cast<long>(k) + 2 * lambda - 2, k) * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
        c = prev1;
    }
    if (conv == Convention::Rodrigues) {
        Rational scale(factorial(n) * (n % 2 ? -1 : 1), BigInt(1));
        c = c * scale;
    }
    return c;
}

XPoly romanovski(const RomanovskiParams& params) {
    if (params.n < 0) throw std::invalid_argument("romanovski: n must be >= 0");
    const XPoly one_plus_x2(std::vector<PolyB>{PolyB(1L), PolyB(), PolyB(1L)});
    XPoly q = XPoly(PolyB(1L));
    for (int k = 0; k < params.n; ++k) {
        const Rational pk = Rational(params.n) + params.beta - Rational(1) - Rational(k);
        // Q_{k+1} = (1+x^2) Q' + (2 p_k x + alpha) Q
        XPoly linear(std::vector<PolyB>{params.alpha, PolyB(pk * Rational(2))});
        q = one_plus_x2 * q.derivative() + linear * q;
    }
    return q;
}

TrigExpr s_function(int K, int l, Convention conv) {
    if (l < 0 || l > K) throw std::invalid_argument("s_function: need 0 <= l <= K");
    const Poly<Rational> g = gegenbauer(K - l, l + 1, conv);
    std::vector<RawTrigTerm> raw;
    for (int j = 0; j <= g.degree(); ++j)
        raw.push_back({PolyB(g.coeff(j)), l, j});
    return trig_normalize(raw);
}

TrigExpr psi_chi(int K, int lTilde) {
    if (lTilde < 0 || lTilde > K) throw std::invalid_argument("psi_chi: need 0 <= lTilde <= K");
    RomanovskiParams params{K - lTilde, PolyB::monomial(1, Rational(2, K + 1)), Rational(-K)};
    const XPoly r = romanovski(params);
    // x = cot chi: x^j sin^K = sin^(K-j) cos^j
    std::vector<RawTrigTerm> raw;
    for (int j = 0; j <= r.degree(); ++j)
        raw.push_back({r.coeff(j), K - j, j});
    return trig_normalize(raw);
}

double assoc_legendre(int l, int m, double x) {
    if (l < 0 || std::abs(m) > l) throw std::invalid_argument("assoc_legendre: need |m| <= l");
    if (m < 0) {
        // P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
        const int am = -m;
        double ratio = 1.0;
        for (int i = l - am + 1; i <= l + am; ++i) ratio *= i;
        return (am % 2 ? -1.0 : 1.0) / ratio * assoc_legendre(l, am, x);
    }
    // P_m^m = (-1)^m (2m-1)!! (1-x^2)^(m/2), then upward in l
    double pmm = 1.0;
    if (m > 0) {
        const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
        double fact = 1.0;
        for (int i = 0; i < m; ++i) {
            pmm *= -fact * somx2;
            fact += 2.0;
        }
    }
    if (l == m) return pmm;
    double pmmp1 = x * (2.0 * m + 1.0) * pmm;
    for (int ll = m + 2; ll <= l; ++ll) {
        const double pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pmmp1;
}

std::complex<double> sph_harmonic(int l, int m, double theta, double phi) {
    if (m < 0) {
        const std::complex<double> y = sph_harmonic(l, -m, theta, phi);
        return ((-m) % 2 ? -1.0 : 1.0) * std::conj(y);
    }
    double norm = (2.0 * l + 1.0) / (4.0 * std::numbers::pi);
    for (int i = l - m + 1; i <= l + m; ++i) norm /= i;
    const double plm = assoc_legendre(l, m, std::cos(theta));
    return std::sqrt(norm) * plm * std::polar(1.0, m * phi);
}

std::complex<double> hyper_harmonic(const QuantumNumbers& q, bool damped, double chi,
                                    double theta, double phi, double bValue, Convention conv) {
    double radial = eval(s_function(q.K, q.l, conv), bValue, chi);
    if (damped) radial *= std::exp(-bValue / (q.K + 1) * chi);
    return radial * sph_harmonic(q.l, q.m, theta, phi);
}

}  // namespace s3c
