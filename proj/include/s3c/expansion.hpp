#ifndef S3C_EXPANSION_HPP
#define S3C_EXPANSION_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "s3c/specfun.hpp"

namespace s3c {

/// Coefficients C_l in Q[b] of psi_K^lTilde = sum_{l=lTilde..K} C_l S_K^l.
struct ExpansionRow {
    int K;
    int lTilde;
    Convention convention;
    std::map<int, PolyB> coeffs;  // l -> C_l, l = lTilde..K
};

/// Solves the exact linear system equating canonical trig coefficients of
/// psi_chi(K, lTilde) and sum C_l s_function(K, l). Unique over Q[b]; throws
/// std::runtime_error if the system were singular or inconsistent (cannot
/// happen: the S_K^l are linearly independent).
ExpansionRow expand(int K, int lTilde, Convention conv);

/// All rows for K <= Kmax (the low-K block is the connection-coefficient
/// table; under the Rodrigues convention every leading coefficient is 1).
std::vector<ExpansionRow> table1(int Kmax, Convention conv);

/// One entry of A_K: coeff(b) * e^{i phase phi} * P_num^orderNum / P_den^den,
/// Legendre functions evaluated at cos theta.
struct ConnectionEntry {
    PolyB coeff;
    int phase;     // multiple of phi in the exponent
    int numL;      // numerator P_numL^numM
    int numM;
    int denL;      // denominator P_denL^denL
};

/// Upper-triangular (K+1) x (K+1) matrix mapping the damped free basis
/// (m = l) to the perturbed solutions; entry (r, c) carries the expansion
/// coefficient C_c of row lTilde = r. Singular only at theta in {0, pi}.
class ConnectionMatrix {
public:
    ConnectionMatrix(int K, std::vector<int> mTilde, Convention conv);

    int K() const { return k_; }
    const std::vector<int>& m_tilde() const { return mTilde_; }
    Convention convention() const { return conv_; }
    const ConnectionEntry& entry(int r, int c) const;  // requires c >= r

    /// Numeric matrix at (theta, phi, b). Throws PoleError at theta in {0, pi}
    /// unless regularizePoles, in which case every Legendre factor is replaced
    /// by its P_l^0 value at the nearest pole.
    std::vector<std::vector<std::complex<double>>> evaluate(double theta, double phi,
                                                            double bValue,
                                                            bool regularizePoles = false) const;

    /// Product of diagonal entries (the matrix is upper triangular).
    std::complex<double> determinant(double theta, double phi, double bValue) const;

private:
    int k_;
    std::vector<int> mTilde_;
    Convention conv_;
    std::vector<std::vector<ConnectionEntry>> entries_;  // [r][c - r]
};

/// connection_matrix with the default choice mTilde_r = r.
ConnectionMatrix connection_matrix(int K, Convention conv);
ConnectionMatrix connection_matrix(int K, const std::vector<int>& mTilde, Convention conv);

struct SamplePoint {
    double chi;
    double theta;
    double phi;
};

/// Deterministic sample points with chi, theta in (0.1, pi-0.1) and
/// phi in [0, 2 pi); identical sequences for identical seeds.
std::vector<SamplePoint> sample_points(uint64_t seed, int count);

struct ResidualReport {
    int K;
    double bValue;
    double maxResidual;
    int points;
};

/// Pointwise check that the perturbed solution vector equals
/// e^{-alpha_K chi/2} A_K(theta, phi) applied to the free-basis vector with
/// m = l; both sides assembled with azimuthal factors P_l^m(cos theta) e^{i m phi}.
ResidualReport verify_sl(int K, double bValue, const std::vector<SamplePoint>& points,
                         Convention conv = Convention::Rodrigues);

}  // namespace s3c

#endif
