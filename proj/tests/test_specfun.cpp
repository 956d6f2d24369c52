#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "s3c/quadrature.hpp"
#include "s3c/specfun.hpp"

using namespace s3c;

namespace {

// Independent Gegenbauer oracle: the explicit closed-form sum
// C_n^lambda(x) = sum_k (-1)^k (lambda)_{n-k} / (k! (n-2k)!) (2x)^{n-2k}.
Poly<Rational> gegenbauer_closed_form(int n, int lambda) {
    Poly<Rational> p;
    for (int k = 0; 2 * k <= n; ++k) {
        BigInt rising = 1;
        for (int i = 0; i < n - k; ++i) rising *= (lambda + i);
        Rational c(rising * BigInt(1) * boost::multiprecision::pow(BigInt(2), n - 2 * k),
                   factorial(k) * factorial(n - 2 * k));
        if (k % 2) c = -c;
        p += Poly<Rational>::monomial(n - 2 * k, c);
    }
    return p;
}

// Literal Rodrigues oracle: n-fold termwise differentiation in the ring
// spanned by x^i (1+x^2)^j exp(-alpha acot x), valid for integer beta.
XPoly rodrigues_by_differentiation(int n, const PolyB& alpha, long beta) {
    using Key = std::pair<int, int>;  // (i, j) for x^i (1+x^2)^j
    std::map<Key, PolyB> f;
    f[{0, n + static_cast<int>(beta) - 1}] = PolyB(1L);
    for (int step = 0; step < n; ++step) {
        std::map<Key, PolyB> d;
        auto acc = [&](int i, int j, const PolyB& c) {
            if (c.is_zero()) return;
            auto& slot = d[{i, j}];
            slot += c;
            if (slot.is_zero()) d.erase({i, j});
        };
        for (const auto& [key, c] : f) {
            const auto [i, j] = key;
            if (i > 0) acc(i - 1, j, c * Rational(i));
            acc(i + 1, j - 1, c * Rational(2L * j));
            acc(i, j - 1, c * alpha);
        }
        f = std::move(d);
    }
    // divide by the weight (1+x^2)^(beta-1) exp(-alpha acot x) and expand
    XPoly result;
    for (const auto& [key, c] : f) {
        const auto [i, j] = key;
        const int e = j - static_cast<int>(beta) + 1;
        REQUIRE(e >= 0);
        XPoly term = XPoly::monomial(i, c);
        for (int t = 0; t < e; ++t)
            term *= XPoly(std::vector<PolyB>{PolyB(1L), PolyB(), PolyB(1L)});
        result += term;
    }
    return result;
}

const PolyB kB = PolyB::monomial(1, Rational(1));

}  // namespace

TEST_CASE("gegenbauer base cases") {
    CHECK(gegenbauer(0, 3, Convention::Standard) == Poly<Rational>(1L));
    CHECK(gegenbauer(1, 1, Convention::Standard) == Poly<Rational>::monomial(1, Rational(2)));
    // three-term recurrence oracle: C_2^1 = 4x^2 - 1
    CHECK(gegenbauer(2, 1, Convention::Standard) ==
          Poly<Rational>::monomial(2, Rational(4)) - Poly<Rational>(1L));
}

TEST_CASE("gegenbauer matches the closed-form sum for n<=30, lambda<=12") {
    for (int lambda = 1; lambda <= 12; ++lambda)
        for (int n = 0; n <= 30; ++n)
            CHECK(gegenbauer(n, lambda, Convention::Standard) == gegenbauer_closed_form(n, lambda));
}

TEST_CASE("gegenbauer satisfies the three-term recurrence exactly") {
    for (int lambda = 1; lambda <= 12; ++lambda)
        for (int n = 2; n <= 30; ++n) {
            const auto cn = gegenbauer(n, lambda, Convention::Standard);
            const auto cn1 = gegenbauer(n - 1, lambda, Convention::Standard);
            const auto cn2 = gegenbauer(n - 2, lambda, Convention::Standard);
            const auto lhs = Rational(n) * cn;
            const auto rhs = Poly<Rational>::monomial(1, Rational(2L * (n + lambda - 1))) * cn1 -
                             Rational(static_cast<long>(n) + 2 * lambda - 2) * cn2;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("rodrigues convention rescales by (-1)^n n!") {
    const auto std2 = gegenbauer(2, 1, Convention::Standard);
    const auto rod2 = gegenbauer(2, 1, Convention::Rodrigues);
    CHECK(rod2 == Rational(2) * std2);
    const auto std3 = gegenbauer(3, 1, Convention::Standard);
    const auto rod3 = gegenbauer(3, 1, Convention::Rodrigues);
    CHECK(rod3 == Rational(-6) * std3);
}

TEST_CASE("romanovski base cases") {
    CHECK(romanovski({0, kB, Rational(-1)}) == XPoly(PolyB(1L)));
    // n = 1: R_1 = 2 beta x + alpha
    CHECK(romanovski({1, kB, Rational(-1)}) ==
          XPoly(std::vector<PolyB>{kB, PolyB(-2L)}));
    // n = 2, beta = -2, alpha = 2b/3: R_2 = 6x^2 - 4bx + 4b^2/9 - 2
    const PolyB a23 = PolyB::monomial(1, Rational(2, 3));
    const XPoly r2 = romanovski({2, a23, Rational(-2)});
    XPoly expected(std::vector<PolyB>{
        PolyB::monomial(2, Rational(4, 9)) - PolyB(2L),
        PolyB::monomial(1, Rational(-4)),
        PolyB(6L)});
    CHECK(r2 == expected);
}

TEST_CASE("romanovski recursion agrees with literal n-fold differentiation") {
    for (int K = 0; K <= 4; ++K) {
        const PolyB alphaK = PolyB::monomial(1, Rational(2, K + 1));
        for (int n = 0; n <= 4 && n <= K; ++n)
            CHECK(romanovski({n, alphaK, Rational(-K)}) ==
                  rodrigues_by_differentiation(n, alphaK, -K));
    }
    // a further case with beta not tied to n
    CHECK(romanovski({3, kB, Rational(-5)}) == rodrigues_by_differentiation(3, kB, -5));
}

TEST_CASE("romanovski satisfies its hypergeometric equation as a polynomial identity") {
    const XPoly onePlusX2(std::vector<PolyB>{PolyB(1L), PolyB(), PolyB(1L)});
    for (int K = 0; K <= 10; ++K) {
        const PolyB alphaK = PolyB::monomial(1, Rational(2, K + 1));
        const Rational beta(-K);
        for (int lT = 0; lT <= K; ++lT) {
            const int n = K - lT;
            const XPoly r = romanovski({n, alphaK, beta});
            // (1+x^2) R'' + (alpha + 2 beta x) R' - n(2 beta + n - 1) R
            const XPoly linear(std::vector<PolyB>{alphaK, PolyB(beta * Rational(2))});
            const XPoly residual = onePlusX2 * r.derivative().derivative() +
                                   linear * r.derivative() -
                                   r * PolyB(Rational(n) * (beta * Rational(2) + Rational(n - 1)));
            CHECK(residual.is_zero());
        }
    }
}

TEST_CASE("s_function low cases") {
    CHECK(s_function(1, 1, Convention::Standard) == TrigExpr::sin_pow(1));
    CHECK(s_function(1, 1, Convention::Rodrigues) == TrigExpr::sin_pow(1));
    CHECK(s_function(1, 0, Convention::Rodrigues) == TrigExpr::term(PolyB(-2L), 0, 1));
    CHECK(s_function(2, 2, Convention::Standard) == TrigExpr::sin_pow(2));
    // b-independent: all coefficients degree 0
    for (const auto& [k, c] : s_function(5, 2, Convention::Rodrigues).terms())
        CHECK(c.degree() == 0);
}

TEST_CASE("psi_chi low cases") {
    // (1,0): -2 cos + b sin
    TrigExpr expected = TrigExpr::term(PolyB(-2L), 0, 1) + TrigExpr::term(kB, 1, 0);
    CHECK(psi_chi(1, 0) == expected);
    // (2,1): -4 sin cos + (2b/3) sin^2
    TrigExpr expected21 = TrigExpr::term(PolyB(-4L), 1, 1) +
                          TrigExpr::term(PolyB::monomial(1, Rational(2, 3)), 2, 0);
    CHECK(psi_chi(2, 1) == expected21);
    // lTilde = K collapses to sin^K
    for (int K = 0; K <= 8; ++K) {
        CHECK(psi_chi(K, K) == TrigExpr::sin_pow(K));
        CHECK(psi_chi(K, K) == s_function(K, K, Convention::Standard));
        CHECK(psi_chi(K, K) == s_function(K, K, Convention::Rodrigues));
    }
}

TEST_CASE("associated legendre with condon-shortley phase") {
    CHECK(assoc_legendre(0, 0, 0.3) == doctest::Approx(1.0));
    const double theta = 0.7;
    CHECK(assoc_legendre(1, 1, std::cos(theta)) == doctest::Approx(-std::sin(theta)));
    CHECK(assoc_legendre(2, 2, 0.5) == doctest::Approx(3.0 * (1.0 - 0.25)));
    CHECK(assoc_legendre(2, 0, 0.5) == doctest::Approx(0.5 * (3 * 0.25 - 1)));
    // negative order: P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
    CHECK(assoc_legendre(2, -1, 0.4) ==
          doctest::Approx(-1.0 / 6.0 * assoc_legendre(2, 1, 0.4)));
}

TEST_CASE("spherical harmonics are orthonormal under quadrature") {
    const QuadratureRule rule = gauss_legendre(32);
    const int nPhi = 64;
    auto inner = [&](int l1, int m1, int l2, int m2) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < nPhi; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / nPhi;
            acc += integrate(rule, 0.0, std::numbers::pi, [&](double theta) {
                const auto a = sph_harmonic(l1, m1, theta, phi);
                const auto b = sph_harmonic(l2, m2, theta, phi);
                return (std::conj(a) * b).real() * std::sin(theta);
            });
        }
        return acc.real() * 2.0 * std::numbers::pi / nPhi;
    };
    CHECK(inner(1, 1, 1, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(inner(0, 0, 0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(inner(2, 1, 2, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(inner(2, -2, 2, -2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(inner(2, 1, 1, 1)) < 1e-12);
    CHECK(std::abs(inner(3, 2, 2, 2)) < 1e-12);
    CHECK(sph_harmonic(0, 0, 1.0, 2.0).real() ==
          doctest::Approx(1.0 / std::sqrt(4.0 * std::numbers::pi)));
}

TEST_CASE("quantum number validation") {
    CHECK_THROWS_AS(QuantumNumbers(1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(QuantumNumbers(2, 1, 2), std::invalid_argument);
    CHECK_NOTHROW(QuantumNumbers(2, 1, -1));
}

TEST_CASE("hyper harmonic pointwise values") {
    // (0,0,0) is chi-independent
    const auto v1 = hyper_harmonic(QuantumNumbers(0, 0, 0), false, 0.3, 1.0, 2.0, 0.0);
    const auto v2 = hyper_harmonic(QuantumNumbers(0, 0, 0), false, 2.9, 1.0, 2.0, 0.0);
    CHECK(std::abs(v1 - v2) < 1e-15);

    // (1,1,1) at chi = pi/2: sin = 1, so it reduces to Y_1^1
    const double theta = 1.1, phi = 0.4;
    const auto h = hyper_harmonic(QuantumNumbers(1, 1, 1), false, std::numbers::pi / 2, theta, phi, 0.0);
    CHECK(std::abs(h - sph_harmonic(1, 1, theta, phi)) < 1e-15);

    // damping at b = 2, K = 1: factor e^{-chi}
    const double chi = std::numbers::pi / 2;
    const auto damped = hyper_harmonic(QuantumNumbers(1, 1, 1), true, chi, theta, phi, 2.0);
    const auto undamped = hyper_harmonic(QuantumNumbers(1, 1, 1), false, chi, theta, phi, 2.0);
    CHECK(std::abs(damped - undamped * std::exp(-chi)) < 1e-15);
}
