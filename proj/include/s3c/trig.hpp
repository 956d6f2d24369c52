#ifndef S3C_TRIG_HPP
#define S3C_TRIG_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "s3c/poly.hpp"

namespace s3c {

/// Raised when a function with csc-type factors is evaluated at chi in {0, pi}
/// or a connection matrix at theta in {0, pi}.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Monomial key sin^s * cos^c; canonical form keeps c in {0, 1} (cos^2 is
/// rewritten as 1 - sin^2). s may be negative (csc powers).
struct TrigKey {
    int sinPow = 0;
    int cosPow = 0;
    friend bool operator<(const TrigKey& a, const TrigKey& b) {
        return a.sinPow != b.sinPow ? a.sinPow < b.sinPow : a.cosPow < b.cosPow;
    }
    friend bool operator==(const TrigKey& a, const TrigKey& b) {
        return a.sinPow == b.sinPow && a.cosPow == b.cosPow;
    }
};

struct RawTrigTerm {
    PolyB coeff;
    int sinPow = 0;
    int cosPow = 0;  // any value >= 0; reduced on normalization
};

/// Canonical trigonometric expression sum p(b) * sin^s chi * cos^e chi with
/// e in {0,1} and no zero coefficients. Equality of values on (0, pi) for
/// every b is decidable by direct comparison of the term maps.
class TrigExpr {
public:
    TrigExpr() = default;

    static TrigExpr zero() { return TrigExpr(); }
    static TrigExpr one() { return term(PolyB(1L), 0, 0); }
    static TrigExpr sin_pow(int p) { return term(PolyB(1L), p, 0); }
    static TrigExpr cos_chi() { return term(PolyB(1L), 0, 1); }

    /// Single canonical term; cosPow must already be 0 or 1.
    static TrigExpr term(const PolyB& c, int sinPow, int cosPow01) {
        TrigExpr e;
        e.add(sinPow, cosPow01, c);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<TrigKey, PolyB>& terms() const { return terms_; }
    bool has_negative_sin_power() const {
        return !terms_.empty() && terms_.begin()->first.sinPow < 0;
    }

    void add(int sinPow, int cosPow01, const PolyB& c) {
        if (c.is_zero()) return;
        TrigKey k{sinPow, cosPow01};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend TrigExpr operator+(const TrigExpr& a, const TrigExpr& b) {
        TrigExpr r = a;
        for (const auto& [k, c] : b.terms_) r.add(k.sinPow, k.cosPow, c);
        return r;
    }
    TrigExpr operator-() const {
        TrigExpr r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend TrigExpr operator-(const TrigExpr& a, const TrigExpr& b) { return a + (-b); }
    friend TrigExpr operator*(const TrigExpr& a, const PolyB& s);
    friend TrigExpr operator*(const PolyB& s, const TrigExpr& a) { return a * s; }
    friend TrigExpr operator*(const TrigExpr& a, const TrigExpr& b);
    TrigExpr& operator+=(const TrigExpr& o) { return *this = *this + o; }
    TrigExpr& operator-=(const TrigExpr& o) { return *this = *this - o; }

    friend bool operator==(const TrigExpr& a, const TrigExpr& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TrigExpr& a, const TrigExpr& b) { return !(a == b); }

private:
    std::map<TrigKey, PolyB> terms_;
};

/// Canonicalize a raw term list: every cos power >= 2 is expanded through
/// cos^2 = 1 - sin^2, like terms merge, zero coefficients drop. Idempotent
/// and value-preserving on (0, pi).
TrigExpr trig_normalize(const std::vector<RawTrigTerm>& raw);

/// Exact d/dchi of an undamped expression.
TrigExpr derivative(const TrigExpr& f);

/// Exact product with cot chi (sin power shifts by -1, cos toggles).
TrigExpr mul_cot(const TrigExpr& f);
/// Exact product with csc^2 chi.
TrigExpr mul_csc2(const TrigExpr& f);
/// Exact product with sin chi.
TrigExpr mul_sin(const TrigExpr& f);

/// Double-precision value at (b, chi). Throws PoleError when the expression
/// carries negative sin powers and chi lies outside the open interval (0, pi).
double eval(const TrigExpr& f, double b, double chi);

std::string to_string(const TrigExpr& f);

/// Trigonometric expression scaled by exp(-r * alpha_K * chi / 2) with
/// alpha_K = 2b/(K+1); the damping exponent is the rational multiple r of
/// alpha_K/2, so d/dchi stays inside the ring: the chain rule contributes
/// the PolyB factor -r*b/(K+1). r = 0 means undamped.
class DampedTrigExpr {
public:
    DampedTrigExpr() = default;
    DampedTrigExpr(int levelK, Rational dampingMultiplier, TrigExpr body)
        : k_(levelK), r_(std::move(dampingMultiplier)), body_(std::move(body)) {
        if (k_ < 0) throw std::invalid_argument("DampedTrigExpr: levelK must be >= 0");
        if (r_.is_zero()) k_ = 0;  // undamped frames compare equal
    }
    static DampedTrigExpr undamped(TrigExpr body) { return DampedTrigExpr(0, Rational(0), std::move(body)); }

    int level_k() const { return k_; }
    const Rational& damping_multiplier() const { return r_; }
    const TrigExpr& body() const { return body_; }
    bool is_zero() const { return body_.is_zero(); }

    /// The PolyB exponent coefficient r*b/(K+1) (so the factor is exp(-that * chi)).
    PolyB damping_rate() const { return PolyB::monomial(1, r_ / Rational(k_ + 1)); }

    friend DampedTrigExpr operator+(const DampedTrigExpr& a, const DampedTrigExpr& b) {
        return DampedTrigExpr(a.merged_k(b), a.merged_r(b), a.body_ + b.body_);
    }
    friend DampedTrigExpr operator-(const DampedTrigExpr& a, const DampedTrigExpr& b) {
        return DampedTrigExpr(a.merged_k(b), a.merged_r(b), a.body_ - b.body_);
    }
    friend DampedTrigExpr operator*(const DampedTrigExpr& a, const PolyB& s) {
        return DampedTrigExpr(a.k_, a.r_, a.body_ * s);
    }
    friend DampedTrigExpr operator*(const PolyB& s, const DampedTrigExpr& a) { return a * s; }

    friend bool operator==(const DampedTrigExpr& a, const DampedTrigExpr& b) {
        return a.k_ == b.k_ && a.r_ == b.r_ && a.body_ == b.body_;
    }
    friend bool operator!=(const DampedTrigExpr& a, const DampedTrigExpr& b) { return !(a == b); }

private:
    int merged_k(const DampedTrigExpr& o) const {
        if (!compatible(o)) throw std::logic_error("DampedTrigExpr: mismatched damping frames");
        return body_.is_zero() ? o.k_ : k_;
    }
    Rational merged_r(const DampedTrigExpr& o) const { return body_.is_zero() ? o.r_ : r_; }
    bool compatible(const DampedTrigExpr& o) const {
        return (k_ == o.k_ && r_ == o.r_) || body_.is_zero() || o.body_.is_zero();
    }

    int k_ = 0;
    Rational r_;
    TrigExpr body_;
};

/// Exact d/dchi, damping factor included via the product rule.
DampedTrigExpr derivative(const DampedTrigExpr& f);

DampedTrigExpr mul_cot(const DampedTrigExpr& f);
DampedTrigExpr mul_csc2(const DampedTrigExpr& f);
DampedTrigExpr mul_sin(const DampedTrigExpr& f);

double eval(const DampedTrigExpr& f, double b, double chi);

std::string to_string(const DampedTrigExpr& f);

}  // namespace s3c

#endif
