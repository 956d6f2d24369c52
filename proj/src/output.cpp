#include "s3c/output.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "s3c/spectrum.hpp"

namespace s3c {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

ordered_json poly_json(const PolyB& p) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k).str());
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

}  // namespace

std::string convention_name(Convention conv) {
    return conv == Convention::Standard ? "standard" : "paper";
}

Convention parse_convention(const std::string& name) {
    if (name == "standard") return Convention::Standard;
    if (name == "paper" || name == "rodrigues") return Convention::Rodrigues;
    throw std::invalid_argument("unknown convention: " + name);
}

std::string spectrum_csv(int Kmax, const std::vector<double>& bGrid) {
    std::ostringstream os;
    os << "# s3c.spectrum.v1\n";
    os << "K,b,epsilon,degeneracy\n";
    for (const SpectrumRow& r : spectrum_table(Kmax, bGrid))
        os << r.K << "," << fmt(r.bValue) << "," << fmt(r.epsilon) << "," << r.degeneracy << "\n";
    return os.str();
}

std::string spectrum_json(int Kmax, const std::vector<double>& bGrid) {
    ordered_json j;
    j["schema"] = "s3c.spectrum.v1";
    j["kmax"] = Kmax;
    ordered_json rows = ordered_json::array();
    for (const SpectrumRow& r : spectrum_table(Kmax, bGrid)) {
        ordered_json row;
        row["K"] = r.K;
        row["b"] = r.bValue;
        row["epsilon"] = r.epsilon;
        row["degeneracy"] = r.degeneracy;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string table1_json(int Kmax, Convention conv) {
    ordered_json j;
    j["schema"] = "s3c.table1.v1";
    j["convention"] = convention_name(conv);
    j["kmax"] = Kmax;
    ordered_json rows = ordered_json::array();
    for (const ExpansionRow& r : table1(Kmax, conv)) {
        ordered_json row;
        row["K"] = r.K;
        row["l_tilde"] = r.lTilde;
        ordered_json coeffs = ordered_json::array();
        for (const auto& [l, p] : r.coeffs) {
            ordered_json c;
            c["l"] = l;
            c["poly"] = poly_json(p);
            coeffs.push_back(c);
        }
        row["coeffs"] = coeffs;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string verify_json(const VerificationReport& rep) {
    ordered_json j;
    j["schema"] = "s3c.verify.v1";
    j["kmax"] = rep.Kmax;
    j["convention"] = convention_name(rep.convention);
    j["seed"] = rep.seed;
    j["b_values"] = rep.bValues;
    ordered_json hard = ordered_json::array();
    for (const IdentityCheck& c : rep.hardChecks) {
        ordered_json e;
        e["name"] = c.name;
        e["K"] = c.K;
        e["l_tilde"] = c.lTilde;
        e["pass"] = c.passed;
        hard.push_back(e);
    }
    j["hard_checks"] = hard;
    ordered_json rec = ordered_json::array();
    for (const RecurrenceResult& r : rep.recurrences) {
        ordered_json e;
        e["K"] = r.K;
        e["l"] = r.l;
        e["proportional"] = r.proportional;
        e["constant"] = r.proportional ? r.constant.str() : "";
        if (r.literature) e["literature_constant"] = r.literature->str();
        e["matches_literature"] = r.matchesLiterature;
        rec.push_back(e);
    }
    j["recurrence_audit"] = rec;
    ordered_json mats = ordered_json::array();
    for (const ResidualReport& r : rep.slChecks) {
        ordered_json e;
        e["check"] = "basis_connection";
        e["K"] = r.K;
        e["b"] = r.bValue;
        e["points"] = r.points;
        e["max_residual"] = r.maxResidual;
        e["pass"] = r.maxResidual <= 1e-8;
        mats.push_back(e);
    }
    for (const VoalaReport& r : rep.voalaChecks) {
        ordered_json e;
        e["check"] = "dilation_conjugation";
        e["K"] = r.K;
        e["b"] = r.bValue;
        e["points"] = r.points;
        e["max_residual"] = r.maxResidual;
        e["max_eigenvalue_error"] = r.maxEigenvalueError;
        e["pass"] = r.maxResidual <= 1e-8;
        mats.push_back(e);
    }
    j["matrix_identities"] = mats;
    j["warnings"] = rep.warnings;
    j["all_hard_passed"] = rep.allHardPassed;
    return j.dump(2) + "\n";
}

std::string sample_csv(const HarmonicGrid& grid) {
    std::ostringstream os;
    os << "# s3c.sample.v1 theta=" << fmt(grid.theta) << "\n";
    os << "chi,phi,absY\n";
    for (int i = 0; i < grid.nChi; ++i)
        for (int j = 0; j < grid.nPhi; ++j)
            os << fmt(grid.chi[i]) << "," << fmt(grid.phi[j]) << ","
               << fmt(grid.absY[static_cast<size_t>(i) * grid.nPhi + j]) << "\n";
    return os.str();
}

std::string eigensolve_csv(const EigenResult& result) {
    std::ostringstream os;
    os << "# s3c.eigensolve.v1 l=" << result.lChannel << " b=" << fmt(result.bValue)
       << " n=" << result.grid.n << " richardson=" << (result.richardson ? 1 : 0) << "\n";
    os << "index,epsilonPlus1_numeric,epsilonPlus1_closedForm,absError\n";
    for (size_t k = 0; k < result.eigenvalues.size(); ++k) {
        const int K = result.lChannel + static_cast<int>(k);
        const double closed = energy(K, result.bValue) + 1.0;
        os << k << "," << fmt(result.eigenvalues[k]) << "," << fmt(closed) << ","
           << fmt(std::abs(result.eigenvalues[k] - closed)) << "\n";
    }
    return os.str();
}

std::string matrix_csv(int K, double theta, double phi, double bValue, Convention conv,
                       bool regularizePoles) {
    const ConnectionMatrix a = connection_matrix(K, conv);
    const auto mat = a.evaluate(theta, phi, bValue, regularizePoles);
    std::ostringstream os;
    os << "# s3c.matrix.v1 K=" << K << " theta=" << fmt(theta) << " phi=" << fmt(phi)
       << " b=" << fmt(bValue) << "\n";
    os << "row,col,re,im\n";
    for (int r = 0; r <= K; ++r)
        for (int c = 0; c <= K; ++c)
            os << r << "," << c << "," << fmt(mat[r][c].real()) << "," << fmt(mat[r][c].imag())
               << "\n";
    return os.str();
}

}  // namespace s3c
