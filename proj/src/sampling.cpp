#include "s3c/sampling.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "s3c/omp_shim.hpp"

namespace s3c {

namespace {

HarmonicGrid sample(const QuantumNumbers& q, bool damped, double theta, double bValue,
                    int nChi, int nPhi, Convention conv, bool parallel) {
    if (nChi < 1 || nPhi < 1) throw std::invalid_argument("sample_harmonic_grid: empty grid");
    HarmonicGrid g{nChi, nPhi, theta, {}, {}, {}};
    g.chi.resize(nChi);
    g.phi.resize(nPhi);
    g.absY.resize(static_cast<size_t>(nChi) * nPhi);
    for (int i = 0; i < nChi; ++i) g.chi[i] = (i + 1) * std::numbers::pi / (nChi + 1);
    for (int j = 0; j < nPhi; ++j) g.phi[j] = 2.0 * std::numbers::pi * j / nPhi;

    const TrigExpr s = s_function(q.K, q.l, conv);
    const double sphAbsAtTheta = std::abs(sph_harmonic(q.l, q.m, theta, 0.0));
#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < nChi; ++i) {
        double radial = eval(s, bValue, g.chi[i]);
        if (damped) radial *= std::exp(-bValue / (q.K + 1) * g.chi[i]);
        // |e^{i m phi}| = 1: the phi axis is kept for the surface plots
        const double v = std::abs(radial) * sphAbsAtTheta;
        for (int j = 0; j < nPhi; ++j) g.absY[static_cast<size_t>(i) * nPhi + j] = v;
    }
    return g;
}

}  // namespace

HarmonicGrid sample_harmonic_grid(const QuantumNumbers& q, bool damped, double theta,
                                  double bValue, int nChi, int nPhi, Convention conv) {
    return sample(q, damped, theta, bValue, nChi, nPhi, conv, true);
}

HarmonicGrid sample_harmonic_grid_serial(const QuantumNumbers& q, bool damped, double theta,
                                         double bValue, int nChi, int nPhi, Convention conv) {
    return sample(q, damped, theta, bValue, nChi, nPhi, conv, false);
}

}  // namespace s3c
