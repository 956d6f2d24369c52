#ifndef S3C_SPECTRUM_HPP
#define S3C_SPECTRUM_HPP

#include <vector>

#include "s3c/poly.hpp"

namespace s3c {

struct SpectrumRow {
    int K;
    double bValue;
    double epsilon;
    int degeneracy;  // (K+1)^2
};

/// eps_K = (K+1)^2 - 1 - b^2/(K+1)^2, dimensionless (hbar = 1, 2M = 1, R = 1).
double energy(int K, double bValue);

/// The same energy as an exact polynomial in b.
PolyB energy_poly(int K);

/// K(K+2) - alpha_K^2/4 with alpha_K = 2b/(K+1); equals energy_poly(K)
/// identically (the shifted-Casimir form of the level energy).
PolyB energy_poly_casimir_shift(int K);

/// Rows for all K <= Kmax over the given b grid, in (K, b) order.
std::vector<SpectrumRow> spectrum_table(int Kmax, const std::vector<double>& bGrid);

}  // namespace s3c

#endif
