#ifndef S3C_QUADRATURE_HPP
#define S3C_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace s3c {

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2*order-1.
struct QuadratureRule {
    int order;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes and weights by Newton iteration on P_order from Chebyshev initial
/// guesses; residuals |P_order(node)| <= 1e-14 up to order 512.
QuadratureRule gauss_legendre(int order);

/// Integral of f over [a, b] under the mapped rule.
double integrate(const QuadratureRule& rule, double a, double b,
                 const std::function<double(double)>& f);

}  // namespace s3c

#endif
