#ifndef S3C_EIGENSOLVER_HPP
#define S3C_EIGENSOLVER_HPP

#include <string>
#include <vector>

#include "s3c/quadrature.hpp"
#include "s3c/specfun.hpp"

namespace s3c {

/// Uniform open grid on (0, pi): n interior nodes chi_i = (i+1) h,
/// h = pi/(n+1), Dirichlet ends (U vanishes like sin chi at both poles).
struct Grid1D {
    int n;
    double h;
    static Grid1D interior(int n);
    double node(int i) const { return (i + 1) * h; }
};

/// Numerically computed radial eigenvalues, stored as eps+1 in ascending
/// order, with the grid they came from.
struct EigenResult {
    int lChannel;
    double bValue;
    std::vector<double> eigenvalues;  // values of eps+1, strictly increasing
    Grid1D grid;
    bool richardson;
    double estimatedError;  // |lambda_2n - lambda_n| / 3 max over indices (0 when raw)
    bool coarseWarning;     // estimated error exceeded the requested tolerance
};

/// Lowest `count` eigenvalues of -d^2/dchi^2 + V_RM on the grid,
/// V_RM = -2 b cot chi + l(l+1)/sin^2 chi, by second-order central
/// differences, Sturm-sequence bisection and Rayleigh-quotient inverse
/// iteration. With richardson = true combines grids n and 2n+1 as
/// (4 lambda_{2n} - lambda_n)/3. Parallel over eigenvalue indices.
EigenResult radial_eigen(int lChannel, double bValue, Grid1D grid, int count,
                         bool richardson, double tol = 1e-4);

/// Serial reference implementation; must agree with radial_eigen exactly.
EigenResult radial_eigen_serial(int lChannel, double bValue, Grid1D grid, int count,
                                bool richardson, double tol = 1e-4);

struct DegeneracyRow {
    int K;
    std::vector<double> epsilonByChannel;  // eps from channel l = 0..K
    double spread;                         // max - min across channels
    double maxClosedFormError;             // vs energy(K, b)
};

struct DegeneracyReport {
    int Kmax;
    double bValue;
    double tol;
    std::vector<DegeneracyRow> rows;
    bool passed;
};

/// Recomputes eps_K from every channel l = 0..K by the grid solver (which
/// never sees the closed-form wave functions) and checks that the spread and
/// the deviation from energy(K, b) stay below tol. Channels run in parallel.
DegeneracyReport degeneracy_check(int Kmax, double bValue, double tol, int gridN = 4096);

struct GramReport {
    int Kmax;
    int quadOrder;
    // entries[(K,l) index][(K',l') index], flattened by idx = K(K+1)/2 + l
    std::vector<std::vector<double>> gram;
    std::vector<double> norms;          // N_{Kl} diagonal
    double maxSameLOffDiagonal;         // |<S_K^l, S_K'^l>| over K != K'
    double maxSameLOffDiagonalRel;      // same, scaled by 1/sqrt(N N')
};

/// Gram matrix of the radial functions S_K^l under weight sin^2 chi on
/// [0, pi]; diagonal entries are the norms N_{Kl}. Entries run in parallel.
GramReport orthonormality_scan(int Kmax, int quadOrder,
                               Convention conv = Convention::Rodrigues);

/// Serial reference for orthonormality_scan.
GramReport orthonormality_scan_serial(int Kmax, int quadOrder,
                                      Convention conv = Convention::Rodrigues);

}  // namespace s3c

#endif
