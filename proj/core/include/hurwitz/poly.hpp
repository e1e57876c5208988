#pragma once

#include "hurwitz/errors.hpp"
#include "hurwitz/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

namespace hurwitz {

/// Dense univariate polynomial with coefficients stored in descending powers
/// (a_0 z^n + a_1 z^{n-1} + ... + a_n as [a_0, ..., a_n]). The zero polynomial
/// is the empty coefficient vector and has degree -1. Leading zeros are
/// trimmed on construction; instances are immutable in practice (all
/// operations return new values).
template <typename T>
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<T> descending) : c_(std::move(descending)) { trim(); }

    static Poly zero() { return Poly(); }

    static Poly constant(T value) {
        if (value == T(0)) return Poly();
        return Poly(std::vector<T>{std::move(value)});
    }

    static Poly one() { return constant(T(1)); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }

    /// a_k in the descending indexing; zero outside [0, degree].
    T coeff(int k) const {
        if (k < 0 || k > degree()) return T(0);
        return c_[static_cast<std::size_t>(k)];
    }

    /// Coefficient of z^power.
    T coeff_of_power(int power) const { return coeff(degree() - power); }

    const T& leading() const { return c_.front(); }
    T constant_term() const { return is_zero() ? T(0) : c_.back(); }

    T operator()(const T& x) const {
        T acc(0);
        for (const T& a : c_) acc = acc * x + a;
        return acc;
    }

    Poly derivative() const {
        if (degree() < 1) return Poly();
        std::vector<T> d;
        d.reserve(c_.size() - 1);
        const int n = degree();
        for (int k = 0; k < n; ++k) d.push_back(c_[static_cast<std::size_t>(k)] * T(n - k));
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> out(std::max(a.c_.size(), b.c_.size()), T(0));
        const auto na = a.c_.size(), nb = b.c_.size(), no = out.size();
        for (std::size_t i = 0; i < na; ++i) out[no - na + i] += a.c_[i];
        for (std::size_t i = 0; i < nb; ++i) out[no - nb + i] += b.c_[i];
        return Poly(std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        std::vector<T> out(c_);
        for (T& v : out) v = -v;
        Poly p;
        p.c_ = std::move(out);
        return p;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }

    Poly scaled(const T& s) const {
        if (s == T(0)) return Poly();
        std::vector<T> out(c_);
        for (T& v : out) v = v * s;
        Poly p;
        p.c_ = std::move(out);
        return p;
    }

    Poly pow(int e) const {
        require(e >= 0, ErrorCode::PreconditionFailed, "negative polynomial power");
        Poly acc = one();
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    /// g(u) -> g(z^2): spreads the coefficients with zero gaps.
    Poly compose_z_squared() const {
        if (is_zero()) return Poly();
        std::vector<T> out(2 * c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[2 * i] = c_[i];
        return Poly(std::move(out));
    }

    /// Euclidean division f = q*g + r with deg r < deg g. Requires g != 0.
    static std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
        require(!g.is_zero(), ErrorCode::PreconditionFailed, "polynomial division by zero");
        if (f.degree() < g.degree()) return {Poly(), f};
        std::vector<T> rem(f.c_);
        const int dq = f.degree() - g.degree();
        std::vector<T> quot(static_cast<std::size_t>(dq) + 1, T(0));
        for (int k = 0; k <= dq; ++k) {
            T factor = rem[static_cast<std::size_t>(k)] / g.leading();
            quot[static_cast<std::size_t>(k)] = factor;
            if (factor == T(0)) continue;
            for (int j = 0; j <= g.degree(); ++j)
                rem[static_cast<std::size_t>(k + j)] -= factor * g.c_[static_cast<std::size_t>(j)];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        Poly out(*this);
        const T lead = leading();
        for (T& v : out.c_) v = v / lead;
        return out;
    }

    /// Monic gcd by the Euclidean algorithm. Meaningful for exact coefficient
    /// types; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            (void)q;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == T(0)) ++lead;
        if (lead > 0) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    }

    std::vector<T> c_;
};

using ExactPoly = Poly<Rational>;
using FloatPoly = Poly<double>;

inline FloatPoly to_float(const ExactPoly& p) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const Rational& q : p.coeffs()) c.push_back(to_double(q));
    return FloatPoly(std::move(c));
}

} // namespace hurwitz
