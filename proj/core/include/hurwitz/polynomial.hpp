#pragma once

#include "hurwitz/config.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/roots.hpp"

#include <complex>
#include <string>
#include <vector>

namespace hurwitz {

/// Real polynomial with a dual arithmetic backend. Exact-rational instances
/// keep every later minor computation exact; float instances carry binary64
/// coefficients for inputs that are not rational (irrational examples,
/// trigonometric constructions). A polynomial never mixes backends.
class Polynomial {
public:
    Polynomial() : backend_(Backend::ExactRational) {}

    static Polynomial exact(std::vector<Rational> descending) {
        Polynomial p;
        p.backend_ = Backend::ExactRational;
        p.exact_ = ExactPoly(std::move(descending));
        return p;
    }

    static Polynomial approx(std::vector<double> descending) {
        Polynomial p;
        p.backend_ = Backend::Float;
        p.float_ = FloatPoly(std::move(descending));
        return p;
    }

    static Polynomial from_poly(ExactPoly poly) {
        Polynomial p;
        p.backend_ = Backend::ExactRational;
        p.exact_ = std::move(poly);
        return p;
    }

    static Polynomial from_poly(FloatPoly poly) {
        Polynomial p;
        p.backend_ = Backend::Float;
        p.float_ = std::move(poly);
        return p;
    }

    Backend backend() const { return backend_; }
    bool is_exact() const { return backend_ == Backend::ExactRational; }

    int degree() const { return is_exact() ? exact_.degree() : float_.degree(); }
    bool is_zero() const { return degree() < 0; }

    const ExactPoly& exact_poly() const {
        require(is_exact(), ErrorCode::BackendMismatch, "polynomial is not exact-rational");
        return exact_;
    }

    const FloatPoly& float_poly() const {
        require(!is_exact(), ErrorCode::BackendMismatch, "polynomial is not float-backed");
        return float_;
    }

    /// Lossy view used by root finding and sector work.
    FloatPoly to_float_poly() const { return is_exact() ? to_float(exact_) : float_; }

    Polynomial to_float_backend() const { return from_poly(to_float_poly()); }

    /// a_k (descending indexing) as double; exact values are rounded.
    double coeff_double(int k) const {
        return is_exact() ? to_double(exact_.coeff(k)) : float_.coeff(k);
    }

    double eval_double(double x) const { return to_float_poly()(x); }

    std::complex<double> eval_complex(std::complex<double> z) const {
        return eval_at(to_float_poly().coeffs(), z);
    }

    /// Coefficients as canonical strings ("3/4" exact, shortest decimal float).
    std::vector<std::string> coeff_strings() const;

    template <typename F>
    auto visit(F&& f) const {
        return is_exact() ? f(exact_) : f(float_);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_exact() && b.is_exact()) return from_poly(a.exact_ * b.exact_);
        return from_poly(a.to_float_poly() * b.to_float_poly());
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        if (a.is_exact() && b.is_exact()) return from_poly(a.exact_ + b.exact_);
        return from_poly(a.to_float_poly() + b.to_float_poly());
    }

    Polynomial compose_z_squared() const {
        return is_exact() ? from_poly(exact_.compose_z_squared())
                          : from_poly(float_.compose_z_squared());
    }

    Polynomial pow(int e) const {
        return is_exact() ? from_poly(exact_.pow(e)) : from_poly(float_.pow(e));
    }

    bool same_values(const Polynomial& other) const {
        return is_exact() && other.is_exact() ? exact_ == other.exact_
                                              : to_float_poly() == other.to_float_poly();
    }

private:
    Backend backend_;
    ExactPoly exact_;
    FloatPoly float_;
};

enum class Parity { Even, Odd };

/// Even/odd decomposition p(z) = p0(z^2) + z p1(z^2); p0 and p1 live in the
/// variable u, l = floor(n/2).
struct EvenOddParts {
    Polynomial p0;
    Polynomial p1;
    Parity parity = Parity::Even;
    int l = 0;
};

struct GcdResult {
    Polynomial g;
    /// Relative least-squares division residual (0 for the exact backend).
    double residual = 0.0;
};

struct PoleInfo {
    std::complex<double> location;
    int multiplicity = 1;
    double residue = 0.0;
    int residue_sign = 0;
    bool simple = true;
};

/// Poles of the associated function p1/p0 after gcd cancellation, with the
/// residue data needed for the R-function test.
struct AssociatedPoles {
    std::vector<PoleInfo> poles;
    int pole_count = 0;      // counting multiplicity
    int l = 0;               // floor(deg p / 2) of the originating polynomial
    /// Sign of lim_{u->inf} p1/p0 (0 when the reduced fraction is proper).
    int limit_sign = 0;
    bool has_multiple_pole = false;

    /// The Mittag-Leffler shape required of stable/quasi-stable polynomials:
    /// exactly `expected` simple negative poles, all residues positive.
    bool r_function_with_negative_poles(int expected, double tol = 1e-8) const;
};

EvenOddParts split_even_odd(const Polynomial& p);

/// Inverse of split_even_odd: interleaves the parts back into p.
Polynomial recombine(const EvenOddParts& parts);

/// Monic gcd(p0, p1). Exact Euclid under the rational backend. Under the
/// float backend the gcd degree is pinned from the Hurwitz-minor vanishing
/// pattern first and the factor is recovered from matched common roots with
/// a least-squares division residual check.
GcdResult gcd_even_odd(const EvenOddParts& parts,
                       const Tolerances& tol = default_tolerances());

RootSet find_roots(const Polynomial& p, const RootFinderOptions& options = {});

AssociatedPoles associated_function_poles(const EvenOddParts& parts,
                                          const Tolerances& tol = default_tolerances());

/// Coefficient test sum_{k=1}^{n-2} a_{k-1} a_{k+2} / (a_k a_{k+1}) < 1;
/// true certifies stability without any matrix work. Requires degree >= 3
/// and strictly positive coefficients.
bool kleptsyn_sufficient(const Polynomial& p);

/// Least-squares polynomial division: minimizes ||g*quotient - f||_2 over
/// quotients of degree deg f - deg g and returns the relative residual.
double least_squares_divide(const FloatPoly& f, const FloatPoly& g, FloatPoly& quotient);

} // namespace hurwitz
