#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "s3c/spectrum.hpp"

using namespace s3c;

TEST_CASE("closed-form energies") {
    CHECK(energy(1, 0.0) == doctest::Approx(3.0));
    CHECK(energy(0, 2.0) == doctest::Approx(-4.0));
    CHECK(energy(1, 2.0) == doctest::Approx(2.0));
    CHECK(energy(5, 1.0) == doctest::Approx(35.0 - 1.0 / 36.0));
}

TEST_CASE("energy equals the shifted-casimir form exactly") {
    for (int K = 0; K <= 20; ++K) CHECK(energy_poly(K) == energy_poly_casimir_shift(K));
}

TEST_CASE("free energy is K(K+2)") {
    for (int K = 0; K <= 20; ++K)
        CHECK(eval(energy_poly(K), Rational(0)) == Rational(static_cast<long>(K) * (K + 2)));
}

TEST_CASE("degeneracy sum identity") {
    for (int K = 0; K <= 100; ++K) {
        long sum = 0;
        for (int l = 0; l <= K; ++l) sum += 2L * l + 1;
        CHECK(sum == static_cast<long>(K + 1) * (K + 1));
    }
}

TEST_CASE("spectrum table shape and rows") {
    const auto rows = spectrum_table(0, {0.0});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].K == 0);
    CHECK(rows[0].epsilon == doctest::Approx(0.0));
    CHECK(rows[0].degeneracy == 1);

    const auto table = spectrum_table(3, {0.0, 1.0, 2.0, 3.0});
    CHECK(table.size() == 16);
}

TEST_CASE("gap between ground state and first excitation grows with b") {
    double prev = -1.0;
    for (double b : {0.0, 1.0, 2.0, 3.0}) {
        const double gap = energy(1, b) - energy(0, b);
        CHECK(gap > prev);
        prev = gap;
        // gap(b) = 3 + (3/4) b^2
        CHECK(gap == doctest::Approx(3.0 + 0.75 * b * b));
    }
}

TEST_CASE("high levels barely move for moderate b") {
    // |eps_5(1) - eps_5(0)| = 1/36 exactly, in rational arithmetic
    const Rational diff = eval(energy_poly(5), Rational(1)) - eval(energy_poly(5), Rational(0));
    CHECK(abs(diff) == Rational(1, 36));
}
