#ifndef S3C_SAMPLING_HPP
#define S3C_SAMPLING_HPP

#include <vector>

#include "s3c/specfun.hpp"

namespace s3c {

/// |Y_Klm| (or the damped |Ytilde_Klm|) on a uniform (chi, phi) grid at fixed
/// theta; chi spans the open interval (0, pi), phi spans [0, 2 pi).
struct HarmonicGrid {
    int nChi;
    int nPhi;
    double theta;
    std::vector<double> chi;     // size nChi
    std::vector<double> phi;     // size nPhi
    std::vector<double> absY;    // row-major [iChi * nPhi + iPhi]
};

/// Parallel over chi rows.
HarmonicGrid sample_harmonic_grid(const QuantumNumbers& q, bool damped, double theta,
                                  double bValue, int nChi, int nPhi,
                                  Convention conv = Convention::Rodrigues);

/// Serial reference; must agree with sample_harmonic_grid exactly.
HarmonicGrid sample_harmonic_grid_serial(const QuantumNumbers& q, bool damped, double theta,
                                         double bValue, int nChi, int nPhi,
                                         Convention conv = Convention::Rodrigues);

}  // namespace s3c

#endif
