#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "s3c/output.hpp"

namespace {

int write_out(const std::string& content, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream f(outPath, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << outPath << "\n";
        return 2;
    }
    f << content;
    return 0;
}

std::vector<double> default_b_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back(i * 0.1);
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cotangent-perturbed quantum motion on the three-sphere: spectra,\n"
                 "expansions in hyper-spherical harmonics, connection matrices, and\n"
                 "symbolic plus grid-based verification of the underlying identities."};
    app.require_subcommand(1);

    int kmax = 3;
    std::vector<double> bValues;
    std::string conventionName = "paper";
    int gridN = 4096;
    int quadOrder = 64;
    std::string format = "csv";
    std::string outPath;
    uint64_t seed = 12345;
    bool regularizePoles = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--kmax", kmax, "Largest K level");
        cmd->add_option("--b", bValues, "Coupling strength (repeatable)");
        cmd->add_option("--convention", conventionName, "Gegenbauer convention: standard|paper")
            ->check(CLI::IsMember({"standard", "paper"}));
        cmd->add_option("--n", gridN, "Interior grid points for the radial solver");
        cmd->add_option("--quad-order", quadOrder, "Gauss-Legendre order");
        cmd->add_option("--format", format, "Output format: csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", outPath, "Output file (stdout when absent)");
        cmd->add_option("--seed", seed, "Seed for the random sample points");
        cmd->add_flag("--regularize-poles", regularizePoles,
                      "Replace Legendre factors by their P_l^0 pole values at theta in {0, pi}");
    };

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Energy levels over a b grid (default b in [0, 4] step 0.1)");
    add_common(spectrum);

    CLI::App* table1Cmd = app.add_subcommand(
        "table1", "Exact expansion coefficients of the perturbed radial functions");
    add_common(table1Cmd);

    CLI::App* verifyCmd = app.add_subcommand(
        "verify", "Run every identity check; exit 0 iff all hard assertions pass");
    add_common(verifyCmd);

    CLI::App* sampleCmd =
        app.add_subcommand("sample", "|Y_Klm| on a (chi, phi) grid at fixed theta");
    int qK = 1, ql = 1, qm = 1, sampleGrid = 64;
    bool damped = false;
    double theta = std::numbers::pi / 2;
    sampleCmd->add_option("--K", qK, "Level K");
    sampleCmd->add_option("--l", ql, "Orbital quantum number");
    sampleCmd->add_option("--m", qm, "Azimuthal quantum number");
    sampleCmd->add_flag("--damped", damped, "Apply the exp(-alpha_K chi/2) damping");
    sampleCmd->add_option("--theta", theta, "Fixed polar angle");
    sampleCmd->add_option("--grid", sampleGrid, "Grid steps per axis");
    add_common(sampleCmd);

    CLI::App* eigensolveCmd = app.add_subcommand(
        "eigensolve", "Radial eigenvalues from the finite-difference solver vs closed form");
    int lChannel = 0, count = 4;
    bool richardson = false;
    eigensolveCmd->add_option("--l", lChannel, "Angular momentum channel");
    eigensolveCmd->add_option("--count", count, "Number of eigenvalues");
    eigensolveCmd->add_flag("--richardson", richardson, "Richardson-extrapolate grids n and 2n+1");
    add_common(eigensolveCmd);

    CLI::App* matrixCmd =
        app.add_subcommand("matrix", "Connection matrix A_K evaluated at (theta, phi, b)");
    double mTheta = std::numbers::pi / 2, mPhi = 0.0;
    int mK = 1;
    matrixCmd->add_option("--K", mK, "Level K");
    matrixCmd->add_option("--theta", mTheta, "Polar angle");
    matrixCmd->add_option("--phi", mPhi, "Azimuthal angle");
    add_common(matrixCmd);

    CLI11_PARSE(app, argc, argv);

    try {
        const s3c::Convention conv = s3c::parse_convention(conventionName);
        const double b0 = bValues.empty() ? 1.0 : bValues.front();

        if (spectrum->parsed()) {
            const auto grid = bValues.empty() ? default_b_grid() : bValues;
            return write_out(format == "json" ? s3c::spectrum_json(kmax, grid)
                                              : s3c::spectrum_csv(kmax, grid),
                             outPath);
        }
        if (table1Cmd->parsed()) {
            return write_out(s3c::table1_json(kmax, conv), outPath);
        }
        if (verifyCmd->parsed()) {
            const auto bs = bValues.empty() ? std::vector<double>{0.45, 1.0, 2.0} : bValues;
            const auto rep = s3c::run_verification(kmax, conv, bs, seed);
            const int rc = write_out(s3c::verify_json(rep), outPath);
            if (rc != 0) return rc;
            return rep.allHardPassed ? 0 : 1;
        }
        if (sampleCmd->parsed()) {
            const s3c::QuantumNumbers q(qK, ql, qm);
            const auto grid =
                s3c::sample_harmonic_grid(q, damped, theta, b0, sampleGrid, sampleGrid, conv);
            return write_out(s3c::sample_csv(grid), outPath);
        }
        if (eigensolveCmd->parsed()) {
            const auto res = s3c::radial_eigen(lChannel, b0, s3c::Grid1D::interior(gridN), count,
                                               richardson);
            if (res.coarseWarning)
                std::cerr << "warning: estimated discretization error " << res.estimatedError
                          << " exceeds the requested tolerance; increase --n\n";
            return write_out(s3c::eigensolve_csv(res), outPath);
        }
        if (matrixCmd->parsed()) {
            return write_out(s3c::matrix_csv(mK, mTheta, mPhi, b0, conv, regularizePoles),
                             outPath);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
