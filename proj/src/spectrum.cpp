#include "s3c/spectrum.hpp"

#include <stdexcept>

namespace s3c {

double energy(int K, double bValue) {
    if (K < 0) throw std::invalid_argument("energy: K must be >= 0");
    const double kp1 = K + 1.0;
    return kp1 * kp1 - 1.0 - bValue * bValue / (kp1 * kp1);
}

PolyB energy_poly(int K) {
    const long kp1 = K + 1L;
    return PolyB(std::vector<Rational>{Rational(kp1 * kp1 - 1), Rational(0), Rational(-1, kp1 * kp1)});
}

PolyB energy_poly_casimir_shift(int K) {
    const PolyB alpha = PolyB::monomial(1, Rational(2, K + 1L));
    return PolyB(Rational(static_cast<long>(K) * (K + 2))) - alpha * alpha * Rational(1, 4);
}

std::vector<SpectrumRow> spectrum_table(int Kmax, const std::vector<double>& bGrid) {
    if (Kmax < 0) throw std::invalid_argument("spectrum_table: Kmax must be >= 0");
    std::vector<SpectrumRow> rows;
    rows.reserve((Kmax + 1) * bGrid.size());
    for (int K = 0; K <= Kmax; ++K)
        for (double b : bGrid)
            rows.push_back({K, b, energy(K, b), (K + 1) * (K + 1)});
    return rows;
}

}  // namespace s3c
