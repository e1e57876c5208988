#include "hurwitz/polynomial.hpp"

#include "hurwitz/determinant.hpp"
#include "hurwitz/tnn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hurwitz {

std::vector<std::string> Polynomial::coeff_strings() const {
    std::vector<std::string> out;
    if (is_exact()) {
        for (const Rational& q : exact_.coeffs()) out.push_back(to_string(q));
        return out;
    }
    for (double v : float_.coeffs()) {
        std::ostringstream os;
        os.precision(17);
        os << v;
        out.push_back(os.str());
    }
    return out;
}

namespace {

template <typename T>
std::pair<Poly<T>, Poly<T>> split_parts(const Poly<T>& p) {
    const int n = p.degree();
    const int l = n / 2;
    std::vector<T> even, odd;
    if (n % 2 == 0) {
        for (int k = 0; k <= 2 * l; k += 2) even.push_back(p.coeff(k));
        for (int k = 1; k <= 2 * l - 1; k += 2) odd.push_back(p.coeff(k));
    } else {
        for (int k = 1; k <= 2 * l + 1; k += 2) even.push_back(p.coeff(k));
        for (int k = 0; k <= 2 * l; k += 2) odd.push_back(p.coeff(k));
    }
    return {Poly<T>(std::move(even)), Poly<T>(std::move(odd))};
}

} // namespace

EvenOddParts split_even_odd(const Polynomial& p) {
    require(p.degree() >= 1, ErrorCode::DegreeTooSmall, "even/odd split needs degree >= 1");
    EvenOddParts parts;
    parts.parity = p.degree() % 2 == 0 ? Parity::Even : Parity::Odd;
    parts.l = p.degree() / 2;
    if (p.is_exact()) {
        auto [p0, p1] = split_parts(p.exact_poly());
        parts.p0 = Polynomial::from_poly(std::move(p0));
        parts.p1 = Polynomial::from_poly(std::move(p1));
    } else {
        auto [p0, p1] = split_parts(p.float_poly());
        parts.p0 = Polynomial::from_poly(std::move(p0));
        parts.p1 = Polynomial::from_poly(std::move(p1));
    }
    return parts;
}

namespace {

template <typename T>
Poly<T> recombine_parts(const Poly<T>& p0, const Poly<T>& p1, int n) {
    std::vector<T> coeffs(static_cast<std::size_t>(n) + 1, T(0));
    for (int k = 0; k <= n; ++k) {
        const int power = n - k;
        coeffs[static_cast<std::size_t>(k)] = power % 2 == 0 ? p0.coeff_of_power(power / 2)
                                                             : p1.coeff_of_power((power - 1) / 2);
    }
    return Poly<T>(std::move(coeffs));
}

} // namespace

Polynomial recombine(const EvenOddParts& parts) {
    const int n = parts.parity == Parity::Even ? 2 * parts.l : 2 * parts.l + 1;
    if (parts.p0.is_exact() && parts.p1.is_exact())
        return Polynomial::from_poly(recombine_parts(parts.p0.exact_poly(), parts.p1.exact_poly(), n));
    return Polynomial::from_poly(
        recombine_parts(parts.p0.to_float_poly(), parts.p1.to_float_poly(), n));
}

namespace {

} // namespace

// Least-squares solve of conv(g, h) ~= f via the normal equations.
double least_squares_divide(const FloatPoly& f, const FloatPoly& g, FloatPoly& quotient) {
    const int nf = f.degree();
    const int d = g.degree();
    const int nh = nf - d;
    if (nh < 0) {
        quotient = FloatPoly();
        double fn = 0.0;
        for (double v : f.coeffs()) fn += v * v;
        return fn == 0.0 ? 0.0 : 1.0;
    }
    // G[i][j] = g_{i-j}, i in 0..nf, j in 0..nh.
    const int rows = nf + 1, colsn = nh + 1;
    std::vector<double> gt_g(static_cast<std::size_t>(colsn) * colsn, 0.0);
    std::vector<double> gt_f(static_cast<std::size_t>(colsn), 0.0);
    for (int a = 0; a < colsn; ++a) {
        for (int b = 0; b < colsn; ++b) {
            double s = 0.0;
            for (int i = 0; i < rows; ++i) s += g.coeff(i - a) * g.coeff(i - b);
            gt_g[static_cast<std::size_t>(a) * colsn + b] = s;
        }
        double s = 0.0;
        for (int i = 0; i < rows; ++i) s += g.coeff(i - a) * f.coeff(i);
        gt_f[static_cast<std::size_t>(a)] = s;
    }
    // Gaussian elimination with partial pivoting on the normal equations.
    std::vector<double> h(static_cast<std::size_t>(colsn), 0.0);
    for (int k = 0; k < colsn; ++k) {
        int pivot = k;
        for (int i = k + 1; i < colsn; ++i)
            if (std::abs(gt_g[static_cast<std::size_t>(i) * colsn + k]) >
                std::abs(gt_g[static_cast<std::size_t>(pivot) * colsn + k]))
                pivot = i;
        if (pivot != k) {
            for (int j = 0; j < colsn; ++j)
                std::swap(gt_g[static_cast<std::size_t>(k) * colsn + j],
                          gt_g[static_cast<std::size_t>(pivot) * colsn + j]);
            std::swap(gt_f[static_cast<std::size_t>(k)], gt_f[static_cast<std::size_t>(pivot)]);
        }
        const double pv = gt_g[static_cast<std::size_t>(k) * colsn + k];
        if (pv == 0.0) continue;
        for (int i = k + 1; i < colsn; ++i) {
            const double fmul = gt_g[static_cast<std::size_t>(i) * colsn + k] / pv;
            if (fmul == 0.0) continue;
            for (int j = k; j < colsn; ++j)
                gt_g[static_cast<std::size_t>(i) * colsn + j] -=
                    fmul * gt_g[static_cast<std::size_t>(k) * colsn + j];
            gt_f[static_cast<std::size_t>(i)] -= fmul * gt_f[static_cast<std::size_t>(k)];
        }
    }
    for (int i = colsn - 1; i >= 0; --i) {
        double s = gt_f[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < colsn; ++j)
            s -= gt_g[static_cast<std::size_t>(i) * colsn + j] * h[static_cast<std::size_t>(j)];
        const double pv = gt_g[static_cast<std::size_t>(i) * colsn + i];
        h[static_cast<std::size_t>(i)] = pv == 0.0 ? 0.0 : s / pv;
    }
    quotient = FloatPoly(std::move(h));

    const FloatPoly reconstructed = g * quotient;
    double err = 0.0, fn = 0.0;
    for (int k = 0; k <= nf; ++k) {
        const double diff = reconstructed.coeff_of_power(k) - f.coeff_of_power(k);
        err += diff * diff;
        const double fv = f.coeff_of_power(k);
        fn += fv * fv;
    }
    return fn == 0.0 ? std::sqrt(err) : std::sqrt(err / fn);
}

namespace {

FloatPoly poly_from_root_list(const std::vector<std::complex<double>>& roots) {
    // Conjugates are paired into exact-real quadratic factors.
    std::vector<std::complex<double>> pending = roots;
    FloatPoly g = FloatPoly::one();
    while (!pending.empty()) {
        const std::complex<double> r = pending.back();
        pending.pop_back();
        if (std::abs(r.imag()) < 1e-14 * (1.0 + std::abs(r))) {
            g = g * FloatPoly(std::vector<double>{1.0, -r.real()});
            continue;
        }
        auto match = std::min_element(pending.begin(), pending.end(),
                                      [&](const auto& a, const auto& b) {
                                          return std::abs(a - std::conj(r)) < std::abs(b - std::conj(r));
                                      });
        if (match != pending.end()) pending.erase(match);
        g = g * FloatPoly(std::vector<double>{1.0, -2.0 * r.real(), std::norm(r)});
    }
    return g;
}

GcdResult float_gcd(const EvenOddParts& parts, const Tolerances& tol) {
    const FloatPoly p0 = parts.p0.to_float_poly();
    const FloatPoly p1 = parts.p1.to_float_poly();
    if (p1.is_zero()) return {Polynomial::from_poly(p0.monic()), 0.0};
    if (p0.is_zero()) return {Polynomial::from_poly(p1.monic()), 0.0};
    if (p0.degree() == 0 || p1.degree() == 0)
        return {Polynomial::from_poly(FloatPoly::one()), 0.0};

    // The gcd degree comes from the Hurwitz-minor vanishing pattern; plain
    // float Euclid is unstable and is not used.
    const Polynomial p = recombine(parts);
    const int n = p.degree();
    int target = -1;
    if (auto m = stability_index_from_minors(hurwitz_minors(p, tol))) target = (n - *m) / 2;

    RootSet roots0 = find_roots(parts.p0);
    struct Candidate {
        std::complex<double> at;
        double quality;
        int mult;
    };
    std::vector<Candidate> candidates;
    RootSet roots1 = find_roots(parts.p1);
    for (const auto& r0 : roots0.roots) {
        double best = std::numeric_limits<double>::infinity();
        int mult1 = 0;
        for (const auto& r1 : roots1.roots) {
            const double dist = std::abs(r0.value - r1.value) / (1.0 + std::abs(r0.value));
            if (dist < best) {
                best = dist;
                mult1 = r1.multiplicity;
            }
        }
        if (mult1 > 0) candidates.push_back({r0.value, best, std::min(r0.multiplicity, mult1)});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.quality < b.quality; });

    if (target < 0) {
        // No pattern: fall back to counting plausible common roots.
        target = 0;
        for (const Candidate& c : candidates)
            if (c.quality <= 1e-6) target += c.mult;
    }

    std::vector<std::complex<double>> chosen;
    for (const Candidate& c : candidates) {
        for (int i = 0; i < c.mult && static_cast<int>(chosen.size()) < target; ++i)
            chosen.push_back(c.at);
    }
    require(static_cast<int>(chosen.size()) == target, ErrorCode::GcdUnreliable,
            "could not match enough common roots for the pinned gcd degree");

    const FloatPoly g = poly_from_root_list(chosen);
    FloatPoly h0, h1;
    const double r0 = least_squares_divide(p0, g, h0);
    const double r1 = least_squares_divide(p1, g, h1);
    const double residual = std::max(r0, r1);
    require(residual <= std::max(tol.rel, 1e-12), ErrorCode::GcdUnreliable,
            "least-squares division residual exceeds tolerance");
    return {Polynomial::from_poly(g), residual};
}

} // namespace

GcdResult gcd_even_odd(const EvenOddParts& parts, const Tolerances& tol) {
    require(!(parts.p0.is_zero() && parts.p1.is_zero()), ErrorCode::PreconditionFailed,
            "p0 and p1 must not both vanish");
    if (parts.p0.is_exact() && parts.p1.is_exact()) {
        ExactPoly g = ExactPoly::gcd(parts.p0.exact_poly(), parts.p1.exact_poly());
        return {Polynomial::from_poly(std::move(g)), 0.0};
    }
    return float_gcd(parts, tol);
}

RootSet find_roots(const Polynomial& p, const RootFinderOptions& options) {
    require(p.degree() >= 1, ErrorCode::DegreeTooSmall, "root finding needs degree >= 1");
    return find_roots_descending(p.to_float_poly().coeffs(), options);
}

bool AssociatedPoles::r_function_with_negative_poles(int expected, double tol) const {
    if (has_multiple_pole) return false;
    if (pole_count != expected) return false;
    for (const PoleInfo& pole : poles) {
        if (std::abs(pole.location.imag()) > tol * (1.0 + std::abs(pole.location))) return false;
        if (pole.location.real() >= -tol) return false;
        if (pole.residue_sign <= 0) return false;
    }
    return true;
}

AssociatedPoles associated_function_poles(const EvenOddParts& parts, const Tolerances& tol) {
    require(!parts.p0.is_zero(), ErrorCode::PreconditionFailed,
            "associated function needs p0 != 0");
    AssociatedPoles out;
    out.l = parts.l;

    // Cancel the gcd so only genuine poles remain.
    Polynomial num = parts.p1, den = parts.p0;
    if (parts.p0.is_exact() && parts.p1.is_exact()) {
        const ExactPoly g = ExactPoly::gcd(parts.p0.exact_poly(), parts.p1.exact_poly());
        if (!g.is_zero() && g.degree() > 0) {
            den = Polynomial::from_poly(ExactPoly::divmod(parts.p0.exact_poly(), g).first);
            num = Polynomial::from_poly(ExactPoly::divmod(parts.p1.exact_poly(), g).first);
        }
    } else {
        const GcdResult g = gcd_even_odd(parts, tol);
        if (g.g.degree() > 0) {
            FloatPoly h;
            least_squares_divide(parts.p0.to_float_poly(), g.g.to_float_poly(), h);
            den = Polynomial::from_poly(h);
            least_squares_divide(parts.p1.to_float_poly(), g.g.to_float_poly(), h);
            num = Polynomial::from_poly(h);
        }
    }

    if (num.is_zero()) {
        out.limit_sign = 0;
        return out;  // identically zero, no poles
    }

    if (num.degree() < den.degree()) {
        out.limit_sign = 0;
    } else {
        const double ratio = num.coeff_double(0) / den.coeff_double(0);
        out.limit_sign = ratio > 0 ? 1 : (ratio < 0 ? -1 : 0);
    }

    if (den.degree() >= 1) {
        const RootSet poles = find_roots(den);
        const FloatPoly numf = num.to_float_poly();
        const FloatPoly denf = den.to_float_poly();
        const FloatPoly dend = denf.derivative();
        for (const auto& r : poles.roots) {
            PoleInfo info;
            info.location = r.value;
            info.multiplicity = r.multiplicity;
            info.simple = r.multiplicity == 1;
            if (!info.simple) out.has_multiple_pole = true;
            if (info.simple) {
                const std::complex<double> gamma =
                    eval_at(numf.coeffs(), r.value) / eval_at(dend.coeffs(), r.value);
                info.residue = gamma.real();
                const double band = tol.boundary * (1.0 + std::abs(gamma));
                info.residue_sign = gamma.real() > band ? 1 : (gamma.real() < -band ? -1 : 0);
            }
            out.poles.push_back(info);
            out.pole_count += r.multiplicity;
        }
    }
    return out;
}

bool kleptsyn_sufficient(const Polynomial& p) {
    const int n = p.degree();
    require(n >= 3, ErrorCode::PreconditionFailed, "coefficient test needs degree >= 3");
    if (p.is_exact()) {
        const ExactPoly& poly = p.exact_poly();
        for (int k = 0; k <= n; ++k)
            require(sign_of(poly.coeff(k)) > 0, ErrorCode::PreconditionFailed,
                    "coefficient test needs positive coefficients");
        Rational sum = 0;
        for (int k = 1; k <= n - 2; ++k)
            sum += poly.coeff(k - 1) * poly.coeff(k + 2) / (poly.coeff(k) * poly.coeff(k + 1));
        return sum < 1;
    }
    const FloatPoly& poly = p.float_poly();
    for (int k = 0; k <= n; ++k)
        require(poly.coeff(k) > 0.0, ErrorCode::PreconditionFailed,
                "coefficient test needs positive coefficients");
    double sum = 0.0;
    for (int k = 1; k <= n - 2; ++k)
        sum += poly.coeff(k - 1) * poly.coeff(k + 2) / (poly.coeff(k) * poly.coeff(k + 1));
    return sum < 1.0;
}

} // namespace hurwitz
