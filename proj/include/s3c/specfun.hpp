#ifndef S3C_SPECFUN_HPP
#define S3C_SPECFUN_HPP

#include <complex>
#include <stdexcept>

#include "s3c/trig.hpp"

namespace s3c {

/// Gegenbauer normalization. Standard is the classical C_n^lambda with
/// C_0 = 1, C_1 = 2*lambda*x. Rodrigues rescales to (-1)^n * n! * C_n^lambda,
/// the convention under which the low-K connection-coefficient table comes
/// out with unit leading coefficients (see expansion::table1).
enum class Convention { Standard, Rodrigues };

/// (K, l, m) labels of a state on the three-sphere: 0 <= l <= K, |m| <= l.
struct QuantumNumbers {
    int K;
    int l;
    int m;
    QuantumNumbers(int K_, int l_, int m_) : K(K_), l(l_), m(m_) {
        if (K < 0 || l < 0 || l > K || m < -l || m > l)
            throw std::invalid_argument("QuantumNumbers: need 0 <= l <= K and |m| <= l");
    }
};

struct RomanovskiParams {
    int n;          // degree
    PolyB alpha;    // in Q[b]; the radial problem uses alpha_K = 2b/(K+1)
    Rational beta;  // the radial problem uses beta_K = -K
};

/// Degree-n Gegenbauer polynomial with exact rational coefficients.
Poly<Rational> gegenbauer(int n, int lambda, Convention conv);

/// Romanovski polynomial R_n^{alpha,beta} by the closed recursion
/// Q_0 = 1, Q_{k+1} = (1+x^2) Q_k' + (2 p_k x + alpha) Q_k, p_k = n+beta-1-k,
/// R_n = Q_n. Exact over Q[b].
XPoly romanovski(const RomanovskiParams& params);

/// Radial factor of the free eigenfunctions: sin^l chi * G_{K-l}^{l+1}(cos chi).
TrigExpr s_function(int K, int l, Convention conv);

/// Radial factor of the perturbed eigenfunctions:
/// sin^K chi * R_{K-lTilde}^{alpha_K, -K}(cot chi). Coefficients in Q[b];
/// independent of the Gegenbauer convention.
TrigExpr psi_chi(int K, int lTilde);

/// Associated Legendre P_l^m(x) with the Condon-Shortley phase
/// (P_1^1(x) = -sqrt(1-x^2)); m may be negative.
double assoc_legendre(int l, int m, double x);

/// Orthonormalized spherical harmonic Y_l^m(theta, phi).
std::complex<double> sph_harmonic(int l, int m, double theta, double phi);

/// Pointwise hyper-spherical harmonic S_K^l(chi) Y_l^m(theta,phi), optionally
/// damped by exp(-alpha_K chi / 2) with alpha_K = 2b/(K+1).
std::complex<double> hyper_harmonic(const QuantumNumbers& q, bool damped, double chi,
                                    double theta, double phi, double bValue,
                                    Convention conv = Convention::Rodrigues);

}  // namespace s3c

#endif
