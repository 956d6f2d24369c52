#ifndef S3C_POLY_HPP
#define S3C_POLY_HPP

#include <sstream>
#include <string>
#include <vector>

#include "s3c/rational.hpp"

namespace s3c {

/// Dense univariate polynomial over a commutative ring R. Trailing zero
/// coefficients are trimmed; the zero polynomial has an empty coefficient
/// list and degree -1.
template <typename R>
class Poly {
public:
    Poly() = default;
    Poly(long constant) : c_{R(constant)} { trim(); }
    Poly(R constant) : c_{std::move(constant)} { trim(); }
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// The monomial c * x^k.
    static Poly monomial(int k, R c) {
        std::vector<R> v(static_cast<size_t>(k) + 1);
        v.back() = std::move(c);
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(1, R(1L)); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^k (zero beyond the stored range).
    R coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return R();
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<R>& coeffs() const { return c_; }

    Poly operator-() const {
        std::vector<R> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
        return Poly(std::move(v));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<R> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Poly& a, const R& s) { return a * Poly(s); }
    friend Poly operator*(const R& s, const Poly& a) { return a * Poly(s); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<R> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * R(static_cast<long>(i));
        return Poly(std::move(v));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == R()) c_.pop_back();
    }
    std::vector<R> c_;
};

/// Polynomial in the coupling strength b, exact rational coefficients.
using PolyB = Poly<Rational>;
/// Polynomial in x whose coefficients live in Q[b] (Romanovski output).
using XPoly = Poly<PolyB>;

inline double eval(const PolyB& p, double x) {
    double acc = 0.0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k).to_double();
    return acc;
}

inline Rational eval(const PolyB& p, const Rational& x) {
    Rational acc;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k);
    return acc;
}

/// Substitute a PolyB value for x: result is again a polynomial in b.
inline PolyB eval(const XPoly& p, const PolyB& x) {
    PolyB acc;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k);
    return acc;
}

/// Render "1 - 2/5*b + 1/8*b^3" style; debug aid, not a stability contract.
inline std::string to_string(const PolyB& p, const std::string& var = "b") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (k == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << a.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace s3c

#endif
