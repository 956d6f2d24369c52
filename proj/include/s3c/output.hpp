#ifndef S3C_OUTPUT_HPP
#define S3C_OUTPUT_HPP

#include <string>
#include <vector>

#include "s3c/eigensolver.hpp"
#include "s3c/sampling.hpp"
#include "s3c/verify.hpp"

namespace s3c {

enum class OutputFormat { Csv, Json };

std::string convention_name(Convention conv);
Convention parse_convention(const std::string& name);  // "standard" | "paper"

/// s3c.spectrum.v1: K,b,epsilon,degeneracy.
std::string spectrum_csv(int Kmax, const std::vector<double>& bGrid);
std::string spectrum_json(int Kmax, const std::vector<double>& bGrid);

/// s3c.table1.v1: rows of expansion coefficients, polynomials as rational
/// coefficient arrays by b power.
std::string table1_json(int Kmax, Convention conv);

/// s3c.verify.v1: every identity check, the ladder-recurrence audit and the
/// matrix-identity residuals.
std::string verify_json(const VerificationReport& rep);

/// s3c.sample.v1: chi,phi,absY at fixed theta.
std::string sample_csv(const HarmonicGrid& grid);

/// s3c.eigensolve.v1: index,epsilonPlus1_numeric,epsilonPlus1_closedForm,absError.
std::string eigensolve_csv(const EigenResult& result);

/// s3c.matrix.v1: row,col,re,im of A_K at (theta, phi, b).
std::string matrix_csv(int K, double theta, double phi, double bValue, Convention conv,
                       bool regularizePoles);

}  // namespace s3c

#endif
