#include "s3c/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string_view>

#include "s3c/omp_shim.hpp"
#include "s3c/spectrum.hpp"

namespace s3c {

namespace {

const PolyB kPolyB = PolyB::monomial(1, Rational(1));  // the variable b

DampedTrigExpr damped_psi(int K, int lTilde) {
    return DampedTrigExpr(K, Rational(1), psi_chi(K, lTilde));
}

PolyB alpha_k(int K) { return PolyB::monomial(1, Rational(2, K + 1)); }

// Inverts a small complex matrix by Gauss-Jordan with partial pivoting.
std::vector<std::vector<std::complex<double>>> invert(
    std::vector<std::vector<std::complex<double>>> a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<std::complex<double>>> inv(n, std::vector<std::complex<double>>(n, 0.0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == std::complex<double>(0.0))
            throw std::runtime_error("invert: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const std::complex<double> d = a[col][col];
        for (int c = 0; c < n; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const std::complex<double> f = a[r][col];
            if (f == std::complex<double>(0.0)) continue;
            for (int c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

}  // namespace

DampedTrigExpr apply(const RadialOperator& op, const DampedTrigExpr& f) {
    using Kind = RadialOperator::Kind;
    switch (op.kind) {
        case Kind::CasimirRadial: {
            const DampedTrigExpr d1 = derivative(f);
            const DampedTrigExpr d2 = derivative(d1);
            const long l = op.param;
            return (PolyB(-1L) * d2) - (PolyB(2L) * mul_cot(d1)) +
                   (PolyB(Rational(l * (l + 1))) * mul_csc2(f));
        }
        case Kind::Perturbed:
            return apply(casimir_radial(op.param), f) - (Rational(2) * kPolyB) * mul_cot(f);
        case Kind::Ladder:
            return derivative(f) - PolyB(Rational(op.param)) * mul_cot(f);
        case Kind::RosenMorse1D: {
            const DampedTrigExpr d2 = derivative(derivative(f));
            const long l = op.param;
            return (PolyB(-1L) * d2) - (Rational(2) * kPolyB) * mul_cot(f) +
                   PolyB(Rational(l * (l + 1))) * mul_csc2(f);
        }
    }
    throw std::logic_error("apply: unknown operator kind");
}

TrigExpr apply(const RadialOperator& op, const TrigExpr& f) {
    return apply(op, DampedTrigExpr::undamped(f)).body();
}

bool check_free_eigen(int K, int l, Convention conv) {
    const TrigExpr s = s_function(K, l, conv);
    return apply(casimir_radial(l), s) == s * PolyB(Rational(static_cast<long>(K) * (K + 2)));
}

bool check_perturbed_eigen(int K, int lTilde) {
    const DampedTrigExpr f = damped_psi(K, lTilde);
    const DampedTrigExpr lhs = apply(perturbed_radial(lTilde), f);
    const DampedTrigExpr rhs = energy_poly_casimir_shift(K) * f;
    return lhs == rhs;
}

bool check_transfer_identity(int K, int lTilde, Convention conv) {
    const ExpansionRow row = expand(K, lTilde, conv);
    TrigExpr combo, rhs;
    for (const auto& [l, c] : row.coeffs) {
        const TrigExpr s = s_function(K, l, conv);
        combo += s * c;
        rhs += mul_csc2(s) * (c * Rational(static_cast<long>(l) * (l + 1)));
    }
    const TrigExpr lhs =
        mul_csc2(combo) * PolyB(Rational(static_cast<long>(lTilde) * (lTilde + 1))) +
        apply(ladder(K), combo) * alpha_k(K);
    return lhs == rhs;
}

bool check_radial_reduction(int K, int lTilde) {
    const DampedTrigExpr u = mul_sin(damped_psi(K, lTilde));
    const DampedTrigExpr lhs = apply(rosen_morse_1d(lTilde), u);
    const PolyB epsPlus1 = energy_poly(K) + PolyB(1L);
    return lhs == epsPlus1 * u;
}

std::vector<RecurrenceResult> check_recurrences(const std::vector<std::pair<int, int>>& cases,
                                                Convention conv) {
    // constants stated in the literature for the low-K ladder relations
    auto literature = [](int K, int l) -> std::optional<Rational> {
        if (K == 1 && l == 0) return Rational(2);
        if (K == 2 && l == 0) return Rational(2);
        if (K == 2 && l == 1) return Rational(4);
        if (K == 3 && l == 1) return Rational(20, 3);
        if (K == 3 && l == 2) return Rational(6);
        return std::nullopt;
    };
    std::vector<RecurrenceResult> results;
    for (const auto& [K, l] : cases) {
        if (l >= K) throw std::invalid_argument("check_recurrences: need l < K");
        const TrigExpr image = apply(ladder(K), s_function(K, l, conv));
        const TrigExpr target = mul_csc2(s_function(K, l + 1, conv));
        RecurrenceResult res{K, l, false, Rational(0), literature(K, l), true};
        if (image.is_zero()) {
            res.proportional = true;
        } else {
            const auto& [k0, c0] = *target.terms().begin();
            auto it = image.terms().find(k0);
            if (it != image.terms().end() && c0.degree() == 0 && it->second.degree() == 0) {
                const Rational candidate = it->second.coeff(0) / c0.coeff(0);
                if (image == target * PolyB(candidate)) {
                    res.proportional = true;
                    res.constant = candidate;
                }
            }
        }
        if (res.literature && (!res.proportional || res.constant != *res.literature))
            res.matchesLiterature = false;
        results.push_back(res);
    }
    return results;
}

VoalaReport check_voala(int K, double bValue, const std::vector<SamplePoint>& points,
                        Convention conv) {
    const ConnectionMatrix a = connection_matrix(K, conv);
    const PolyB shift = alpha_k(K) * alpha_k(K) * Rational(1, 4);

    std::vector<TrigExpr> sFn(K + 1), psiFn(K + 1);
    std::vector<DampedTrigExpr> lhsOp(K + 1);
    // (Casimir(c) - alpha^2/4) psi_K^j for every channel pair: the free
    // Casimir acts componentwise on the undamped intermediate vector
    std::vector<std::vector<TrigExpr>> casimirOnPsi(K + 1, std::vector<TrigExpr>(K + 1));
    for (int l = 0; l <= K; ++l) {
        sFn[l] = s_function(K, l, conv);
        psiFn[l] = psi_chi(K, l);
        lhsOp[l] = apply(perturbed_radial(l), damped_psi(K, l));
    }
    for (int l = 0; l <= K; ++l)
        for (int j = 0; j <= K; ++j)
            casimirOnPsi[l][j] = apply(casimir_radial(l), psiFn[j]) - psiFn[j] * shift;

    const double eigen0 = static_cast<double>(K) * (K + 2);
    const double alpha = 2.0 * bValue / (K + 1);
    VoalaReport rep{K, bValue, 0.0, 0.0, static_cast<int>(points.size())};
    for (const SamplePoint& p : points) {
        const double damp = std::exp(-bValue / (K + 1) * p.chi);
        const double x = std::cos(p.theta);
        const auto mat = a.evaluate(p.theta, p.phi, bValue);
        const auto inv = invert(mat);

        std::vector<std::complex<double>> angular(K + 1), solutions(K + 1), lhs(K + 1);
        for (int r = 0; r <= K; ++r) {
            angular[r] = assoc_legendre(r, r, x) * std::polar(1.0, static_cast<double>(r) * p.phi);
            solutions[r] = damp * eval(psiFn[r], bValue, p.chi) * angular[r];
            lhs[r] = eval(lhsOp[r], bValue, p.chi) * angular[r];
        }
        // w_c = (Casimir(c) - alpha^2/4) [e^{alpha chi/2} A^{-1} X]_c
        std::vector<std::complex<double>> w(K + 1, 0.0);
        for (int c = 0; c <= K; ++c)
            for (int j = 0; j <= K; ++j)
                w[c] += inv[c][j] * eval(casimirOnPsi[c][j], bValue, p.chi) * angular[j];
        for (int r = 0; r <= K; ++r) {
            std::complex<double> rhs = 0.0;
            for (int c = r; c <= K; ++c) rhs += mat[r][c] * w[c];
            rhs *= damp;
            rep.maxResidual = std::max(rep.maxResidual, std::abs(lhs[r] - rhs));
            const std::complex<double> scaled = (eigen0 - alpha * alpha / 4.0) * solutions[r];
            rep.maxEigenvalueError = std::max(rep.maxEigenvalueError, std::abs(lhs[r] - scaled));
        }
    }
    return rep;
}

VerificationReport run_verification(int Kmax, Convention conv,
                                    const std::vector<double>& bValues, uint64_t seed,
                                    int samplePointCount, int matrixKmax) {
    VerificationReport rep{Kmax, conv, seed, bValues, {}, {}, {}, {}, {}, true};

    struct Case {
        const char* name;
        int K;
        int lTilde;
    };
    std::vector<Case> cases;
    for (int K = 0; K <= Kmax; ++K)
        for (int l = 0; l <= K; ++l) {
            cases.push_back({"free_eigen", K, l});
            cases.push_back({"perturbed_eigen", K, l});
            cases.push_back({"transfer_identity", K, l});
            cases.push_back({"radial_reduction", K, l});
        }
    std::vector<IdentityCheck> checks(cases.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < cases.size(); ++i) {
        const Case& c = cases[i];
        bool ok = false;
        if (std::string_view(c.name) == "free_eigen")
            ok = check_free_eigen(c.K, c.lTilde, conv);
        else if (std::string_view(c.name) == "perturbed_eigen")
            ok = check_perturbed_eigen(c.K, c.lTilde);
        else if (std::string_view(c.name) == "transfer_identity")
            ok = check_transfer_identity(c.K, c.lTilde, conv);
        else
            ok = check_radial_reduction(c.K, c.lTilde);
        checks[i] = {c.name, c.K, c.lTilde, ok};
    }
    rep.hardChecks = std::move(checks);

    std::vector<std::pair<int, int>> recCases;
    for (int K = 1; K <= Kmax; ++K)
        for (int l = 0; l < K; ++l) recCases.emplace_back(K, l);
    rep.recurrences = check_recurrences(recCases, conv);
    for (const RecurrenceResult& r : rep.recurrences) {
        if (!r.matchesLiterature) {
            std::ostringstream os;
            os << "ladder recurrence (K=" << r.K << ", l=" << r.l << "): computed constant ";
            os << (r.proportional ? r.constant.str() : std::string("(not proportional)"));
            os << " differs from the literature value " << r.literature->str();
            rep.warnings.push_back(os.str());
        }
    }

    const auto points = sample_points(seed, samplePointCount);
    for (int K = 1; K <= std::min(Kmax, matrixKmax); ++K)
        for (double b : bValues) {
            rep.slChecks.push_back(verify_sl(K, b, points, conv));
            rep.voalaChecks.push_back(check_voala(K, b, points, conv));
        }

    for (const IdentityCheck& c : rep.hardChecks)
        if (!c.passed) rep.allHardPassed = false;
    for (const ResidualReport& r : rep.slChecks)
        if (!(r.maxResidual <= 1e-8)) rep.allHardPassed = false;
    for (const VoalaReport& r : rep.voalaChecks)
        if (!(r.maxResidual <= 1e-8)) rep.allHardPassed = false;
    return rep;
}

}  // namespace s3c
