#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "s3c/trig.hpp"

using namespace s3c;

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    double real(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
    }
    long integer(long lo, long hi) { return lo + static_cast<long>(gen() % (hi - lo + 1)); }
};

PolyB random_polyb(Rng& rng, int maxDeg = 3) {
    std::vector<Rational> c;
    const int deg = static_cast<int>(rng.integer(0, maxDeg));
    for (int i = 0; i <= deg; ++i) c.push_back(Rational(rng.integer(-9, 9), rng.integer(1, 9)));
    return PolyB(std::move(c));
}

std::vector<RawTrigTerm> random_raw(Rng& rng) {
    std::vector<RawTrigTerm> raw;
    const int n = static_cast<int>(rng.integer(1, 4));
    for (int i = 0; i < n; ++i)
        raw.push_back({random_polyb(rng), static_cast<int>(rng.integer(-3, 5)),
                       static_cast<int>(rng.integer(0, 3))});
    return raw;
}

double eval_raw(const std::vector<RawTrigTerm>& raw, double b, double chi) {
    double acc = 0.0;
    for (const auto& t : raw)
        acc += eval(t.coeff, b) * std::pow(std::sin(chi), t.sinPow) *
               std::pow(std::cos(chi), t.cosPow);
    return acc;
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms with positive denominator") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK((Rational(1) / Rational(-7, 5)) == Rational(-5, 7));
    CHECK(Rational(0).is_zero());
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("big factorial coefficients do not overflow") {
    // 40! / 39! must come out exactly 40
    Rational r(factorial(40), factorial(39));
    CHECK(r == Rational(40));
    CHECK(binomial(52, 26) == BigInt("495918532948104"));
}

TEST_CASE("poly degree and trimming") {
    PolyB zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    PolyB p(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    PolyB q = PolyB::monomial(3, Rational(1, 8)) - PolyB::monomial(1, Rational(2, 5));
    CHECK(q.degree() == 3);
    CHECK(q.coeff(1) == Rational(-2, 5));
    CHECK(to_string(q) == "-2/5*b + 1/8*b^3");
}

TEST_CASE("poly product degree adds for nonzero factors") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        PolyB a = random_polyb(rng), b = random_polyb(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("poly ring axioms on random samples") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        PolyB a = random_polyb(rng), b = random_polyb(rng), c = random_polyb(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("poly evaluation") {
    // b^2 - 2 at b = 2
    PolyB p = PolyB::monomial(2, Rational(1)) - PolyB(2L);
    CHECK(eval(p, 2.0) == doctest::Approx(2.0));
    CHECK(eval(p, Rational(2)) == Rational(2));
    CHECK(eval(p, Rational(1, 2)) == Rational(-7, 4));
}

TEST_CASE("trig normalization rewrites cos^2 as 1 - sin^2") {
    TrigExpr e = trig_normalize({{PolyB(1L), 0, 2}});
    TrigExpr expected;
    expected.add(0, 0, PolyB(1L));
    expected.add(2, 0, PolyB(-1L));
    CHECK(e == expected);
}

TEST_CASE("trig normalization cancels and is idempotent") {
    TrigExpr zero = trig_normalize({{PolyB(1L), 1, 0}, {PolyB(-1L), 1, 0}});
    CHECK(zero.is_zero());

    const PolyB b = PolyB::monomial(1, Rational(1));
    TrigExpr canonical = trig_normalize({{PolyB(1L), -2, 1}, {b, 0, 1}});
    std::vector<RawTrigTerm> again;
    for (const auto& [k, c] : canonical.terms()) again.push_back({c, k.sinPow, k.cosPow});
    CHECK(trig_normalize(again) == canonical);
}

TEST_CASE("normalization preserves the value pointwise") {
    Rng rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        const auto raw = random_raw(rng);
        const TrigExpr canon = trig_normalize(raw);
        for (int i = 0; i < 20; ++i) {
            const double b = rng.real(0.0, 4.0);
            const double chi = rng.real(0.1, std::numbers::pi - 0.1);
            const double direct = eval_raw(raw, b, chi);
            CHECK(eval(canon, b, chi) ==
                  doctest::Approx(direct).epsilon(1e-10).scale(1.0 + std::abs(direct)));
        }
    }
}

TEST_CASE("trig ring axioms on random samples") {
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        const TrigExpr a = trig_normalize(random_raw(rng));
        const TrigExpr b = trig_normalize(random_raw(rng));
        const TrigExpr c = trig_normalize(random_raw(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("derivative of simple expressions") {
    CHECK(derivative(TrigExpr::sin_pow(1)) == TrigExpr::cos_chi());
    // sin^2 -> 2 sin cos
    CHECK(derivative(TrigExpr::sin_pow(2)) == TrigExpr::term(PolyB(2L), 1, 1));
    // damped constant at K=1, r=1: d/dchi e^{-b chi/2} = -b/2 e^{-b chi/2}
    DampedTrigExpr f(1, Rational(1), TrigExpr::one());
    DampedTrigExpr expected(1, Rational(1), TrigExpr::term(PolyB::monomial(1, Rational(-1, 2)), 0, 0));
    CHECK(derivative(f) == expected);
}

TEST_CASE("cot and csc2 products") {
    CHECK(mul_cot(TrigExpr::sin_pow(1)) == TrigExpr::cos_chi());
    CHECK(mul_csc2(TrigExpr::sin_pow(2)) == TrigExpr::one());
    // cot * cos = 1/sin - sin
    TrigExpr expected;
    expected.add(-1, 0, PolyB(1L));
    expected.add(1, 0, PolyB(-1L));
    CHECK(mul_cot(TrigExpr::cos_chi()) == expected);
}

TEST_CASE("derivative agrees with centered finite differences") {
    Rng rng(47);
    std::vector<DampedTrigExpr> samples;
    samples.push_back(DampedTrigExpr::undamped(trig_normalize(
        {{PolyB::monomial(2, Rational(1)) - PolyB(2L), 2, 0}, {PolyB(6L), 0, 2}})));
    samples.push_back(DampedTrigExpr(1, Rational(1), trig_normalize({{PolyB(1L), -1, 1}})));
    samples.push_back(DampedTrigExpr(2, Rational(1), trig_normalize(
        {{PolyB::monomial(1, Rational(2, 3)), 2, 0}, {PolyB(-4L), 1, 1}})));
    samples.push_back(DampedTrigExpr(3, Rational(-2), trig_normalize({{PolyB(1L), -2, 0}})));
    for (const auto& f : samples) {
        const DampedTrigExpr df = derivative(f);
        for (int i = 0; i < 1000; ++i) {
            const double b = rng.real(0.0, 4.0);
            const double chi = rng.real(0.1, std::numbers::pi - 0.1);
            const double h = 1e-5;
            const double fd = (eval(f, b, chi + h) - eval(f, b, chi - h)) / (2.0 * h);
            const double sym = eval(df, b, chi);
            CHECK(std::abs(sym - fd) <= 1e-6 * (1.0 + std::abs(sym)));
        }
    }
}

TEST_CASE("evaluation guards poles for csc powers") {
    TrigExpr f = trig_normalize({{PolyB(1L), -1, 0}});
    CHECK_THROWS_AS(eval(f, 1.0, 0.0), PoleError);
    CHECK_THROWS_AS(eval(f, 1.0, std::numbers::pi), PoleError);
    CHECK(eval(f, 1.0, std::numbers::pi / 2) == doctest::Approx(1.0));
    // non-negative powers evaluate anywhere
    CHECK(eval(TrigExpr::sin_pow(1), 0.0, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("damped evaluation multiplies the exponential factor") {
    DampedTrigExpr f(1, Rational(1), TrigExpr::sin_pow(1));
    const double chi = std::numbers::pi / 2;
    CHECK(eval(f, 2.0, chi) == doctest::Approx(std::exp(-chi)));
    CHECK(eval(TrigExpr::sin_pow(1), 2.0, chi) == doctest::Approx(1.0));
}

TEST_CASE("mismatched damping frames are rejected") {
    DampedTrigExpr a(1, Rational(1), TrigExpr::one());
    DampedTrigExpr b(2, Rational(1), TrigExpr::one());
    CHECK_THROWS_AS(a + b, std::logic_error);
    // adding a zero body is allowed regardless of frame
    DampedTrigExpr zero(5, Rational(3), TrigExpr::zero());
    CHECK((a + zero) == a);
}
