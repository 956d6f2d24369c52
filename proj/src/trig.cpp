#include "s3c/trig.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace s3c {

TrigExpr trig_normalize(const std::vector<RawTrigTerm>& raw) {
    TrigExpr out;
    for (const auto& t : raw) {
        if (t.cosPow < 0) throw std::invalid_argument("trig_normalize: negative cos power");
        if (t.coeff.is_zero()) continue;
        const int half = t.cosPow / 2;
        const int rem = t.cosPow % 2;
        // cos^(2h+r) = (1 - sin^2)^h cos^r
        for (int j = 0; j <= half; ++j) {
            Rational c(binomial(half, j), BigInt(1));
            if (j % 2 != 0) c = -c;
            out.add(t.sinPow + 2 * j, rem, t.coeff * c);
        }
    }
    return out;
}

TrigExpr operator*(const TrigExpr& a, const PolyB& s) {
    TrigExpr r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.terms()) r.add(k.sinPow, k.cosPow, c * s);
    return r;
}

TrigExpr operator*(const TrigExpr& a, const TrigExpr& b) {
    std::vector<RawTrigTerm> raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            raw.push_back({ca * cb, ka.sinPow + kb.sinPow, ka.cosPow + kb.cosPow});
    return trig_normalize(raw);
}

TrigExpr derivative(const TrigExpr& f) {
    TrigExpr r;
    for (const auto& [k, c] : f.terms()) {
        const long p = k.sinPow;
        if (k.cosPow == 0) {
            // (sin^p)' = p sin^(p-1) cos
            r.add(k.sinPow - 1, 1, c * Rational(p));
        } else {
            // (sin^p cos)' = p sin^(p-1) - (p+1) sin^(p+1)
            r.add(k.sinPow - 1, 0, c * Rational(p));
            r.add(k.sinPow + 1, 0, c * Rational(-(p + 1)));
        }
    }
    return r;
}

TrigExpr mul_cot(const TrigExpr& f) {
    TrigExpr r;
    for (const auto& [k, c] : f.terms()) {
        if (k.cosPow == 0) {
            r.add(k.sinPow - 1, 1, c);
        } else {
            // cot * sin^p cos = sin^(p-1) cos^2 = sin^(p-1) - sin^(p+1)
            r.add(k.sinPow - 1, 0, c);
            r.add(k.sinPow + 1, 0, -c);
        }
    }
    return r;
}

TrigExpr mul_csc2(const TrigExpr& f) {
    TrigExpr r;
    for (const auto& [k, c] : f.terms()) r.add(k.sinPow - 2, k.cosPow, c);
    return r;
}

TrigExpr mul_sin(const TrigExpr& f) {
    TrigExpr r;
    for (const auto& [k, c] : f.terms()) r.add(k.sinPow + 1, k.cosPow, c);
    return r;
}

double eval(const TrigExpr& f, double b, double chi) {
    const double s = std::sin(chi);
    const double c = std::cos(chi);
    if (f.has_negative_sin_power() && !(chi > 0.0 && chi < std::numbers::pi && s != 0.0))
        throw PoleError("trig eval: csc power at chi in {0, pi}");
    double acc = 0.0;
    for (const auto& [k, w] : f.terms()) {
        double t = eval(w, b) * std::pow(s, k.sinPow);
        if (k.cosPow) t *= c;
        acc += t;
    }
    return acc;
}

std::string to_string(const TrigExpr& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")*sin^" << k.sinPow;
        if (k.cosPow) os << "*cos";
    }
    return os.str();
}

DampedTrigExpr derivative(const DampedTrigExpr& f) {
    TrigExpr body = derivative(f.body());
    if (!f.damping_multiplier().is_zero()) body -= f.body() * f.damping_rate();
    return DampedTrigExpr(f.level_k(), f.damping_multiplier(), std::move(body));
}

DampedTrigExpr mul_cot(const DampedTrigExpr& f) {
    return DampedTrigExpr(f.level_k(), f.damping_multiplier(), mul_cot(f.body()));
}

DampedTrigExpr mul_csc2(const DampedTrigExpr& f) {
    return DampedTrigExpr(f.level_k(), f.damping_multiplier(), mul_csc2(f.body()));
}

DampedTrigExpr mul_sin(const DampedTrigExpr& f) {
    return DampedTrigExpr(f.level_k(), f.damping_multiplier(), mul_sin(f.body()));
}

double eval(const DampedTrigExpr& f, double b, double chi) {
    double v = eval(f.body(), b, chi);
    if (!f.damping_multiplier().is_zero()) v *= std::exp(-eval(f.damping_rate(), b) * chi);
    return v;
}

std::string to_string(const DampedTrigExpr& f) {
    if (f.damping_multiplier().is_zero()) return to_string(f.body());
    std::ostringstream os;
    os << "exp(-" << f.damping_multiplier().str() << "*b/" << (f.level_k() + 1) << "*chi) * ["
       << to_string(f.body()) << "]";
    return os.str();
}

}  // namespace s3c
