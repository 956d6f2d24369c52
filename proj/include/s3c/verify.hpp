#ifndef S3C_VERIFY_HPP
#define S3C_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "s3c/expansion.hpp"

namespace s3c {

/// Radial differential operators acting on (damped) trig expressions.
struct RadialOperator {
    enum class Kind {
        CasimirRadial,  // -(1/sin^2) d/dchi (sin^2 d/dchi) + l(l+1)/sin^2
        Perturbed,      // CasimirRadial(l) - 2 b cot chi
        Ladder,         // d/dchi - K cot chi
        RosenMorse1D,   // -d^2/dchi^2 - 2 b cot chi + l(l+1)/sin^2
    };
    Kind kind;
    int param;  // l for the Casimir/Rosen-Morse forms, K for the ladder
};

inline RadialOperator casimir_radial(int l) { return {RadialOperator::Kind::CasimirRadial, l}; }
inline RadialOperator perturbed_radial(int l) { return {RadialOperator::Kind::Perturbed, l}; }
inline RadialOperator ladder(int K) { return {RadialOperator::Kind::Ladder, K}; }
inline RadialOperator rosen_morse_1d(int l) { return {RadialOperator::Kind::RosenMorse1D, l}; }

/// Exact symbolic image; the damping factor is carried through d/dchi.
DampedTrigExpr apply(const RadialOperator& op, const DampedTrigExpr& f);
TrigExpr apply(const RadialOperator& op, const TrigExpr& f);

/// CasimirRadial(l) S_K^l == K(K+2) S_K^l, exactly.
bool check_free_eigen(int K, int l, Convention conv = Convention::Rodrigues);

/// [CasimirRadial(lTilde) - 2b cot] e^{-alpha_K chi/2} psi_K^lTilde ==
/// (K(K+2) - alpha_K^2/4) e^{-alpha_K chi/2} psi_K^lTilde, exactly over Q[b].
bool check_perturbed_eigen(int K, int lTilde);

/// (lTilde(lTilde+1)/sin^2 + alpha_K D_K) sum C_l S_K^l ==
/// sum l(l+1)/sin^2 C_l S_K^l with the exact expansion coefficients.
bool check_transfer_identity(int K, int lTilde, Convention conv = Convention::Rodrigues);

/// U = sin chi e^{-alpha_K chi/2} psi_K^lTilde satisfies
/// -U'' + (-2b cot + lTilde(lTilde+1)/sin^2) U - (eps+1) U == 0 exactly.
bool check_radial_reduction(int K, int lTilde);

struct RecurrenceResult {
    int K;
    int l;
    bool proportional;                    // D_K S_K^l == c csc^2 S_K^{l+1} for some c
    Rational constant;                    // c when proportional
    std::optional<Rational> literature;   // value stated in the literature, when listed
    bool matchesLiterature;               // false only when both are present and differ
};

/// Tests D_K S_K^l against csc^2 S_K^{l+1} case by case and reports the
/// exact proportionality constant or "not proportional"; never asserts the
/// literature values, only flags disagreement.
std::vector<RecurrenceResult> check_recurrences(const std::vector<std::pair<int, int>>& cases,
                                                Convention conv = Convention::Rodrigues);

struct VoalaReport {
    int K;
    double bValue;
    double maxResidual;          // both sides of the conjugated identity
    double maxEigenvalueError;   // against (K(K+2) - alpha_K^2/4) X_K
    int points;
};

/// Pointwise check of the dilation-conjugation identity: the perturbed
/// operator applied to the solution vector equals
/// e^{-alpha_K chi/2} A_K (Casimir - alpha_K^2/4) e^{alpha_K chi/2} A_K^{-1}
/// applied to it. The right side goes through the numeric A_K and its inverse.
VoalaReport check_voala(int K, double bValue, const std::vector<SamplePoint>& points,
                        Convention conv = Convention::Rodrigues);

struct IdentityCheck {
    std::string name;
    int K;
    int lTilde;
    bool passed;
};

struct VerificationReport {
    int Kmax;
    Convention convention;
    uint64_t seed;
    std::vector<double> bValues;
    std::vector<IdentityCheck> hardChecks;        // exact symbolic identities
    std::vector<RecurrenceResult> recurrences;    // audited, not asserted
    std::vector<ResidualReport> slChecks;         // tol 1e-8
    std::vector<VoalaReport> voalaChecks;         // tol 1e-8
    std::vector<std::string> warnings;
    bool allHardPassed;
};

/// Runs every check for K <= Kmax; the (K, lTilde) sweep is parallel.
VerificationReport run_verification(int Kmax, Convention conv,
                                    const std::vector<double>& bValues, uint64_t seed,
                                    int samplePointCount = 50, int matrixKmax = 3);

}  // namespace s3c

#endif
