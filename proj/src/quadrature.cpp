#include "s3c/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace s3c {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) return {1.0, 0.0};
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

}  // namespace

QuadratureRule gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    QuadratureRule rule{order, std::vector<double>(order), std::vector<double>(order)};
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double step = 1.0;
        for (int it = 0; it < 100 && std::abs(step) > 1e-16; ++it) {
            const auto [p, d] = legendre_pair(order, x);
            step = p / d;
            x -= step;
        }
        if (!(std::abs(step) <= 1e-14))
            throw std::runtime_error("gauss_legendre: Newton iteration failed to converge");
        const double dp = legendre_pair(order, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[order - 1 - i] = x;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) {
        rule.nodes[order / 2] = 0.0;
        const double dp = legendre_pair(order, 0.0).second;
        rule.weights[order / 2] = 2.0 / (dp * dp);
    }
    return rule;
}

double integrate(const QuadratureRule& rule, double a, double b,
                 const std::function<double(double)>& f) {
    const double mid = 0.5 * (a + b);
    const double halfw = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < rule.order; ++i) acc += rule.weights[i] * f(mid + halfw * rule.nodes[i]);
    return acc * halfw;
}

}  // namespace s3c
