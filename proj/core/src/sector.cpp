#include "hurwitz/sector.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>

namespace hurwitz {

const char* to_string(SectorRule r) noexcept {
    switch (r) {
        case SectorRule::NecessaryTn: return "necessary_tn";
        case SectorRule::UniversalQuarterPi: return "universal_quarter_pi";
        case SectorRule::SufficientTn: return "sufficient_tn";
        case SectorRule::Custom: return "custom";
    }
    return "custom";
}

double necessary_sector_halfangle(int n, int m) {
    require(n >= 2, ErrorCode::PreconditionFailed, "sector bound needs degree >= 2");
    require(m >= 0 && m <= n - 2, ErrorCode::PreconditionFailed, "index m must lie in [0, n-2]");
    const double angle = std::numbers::pi / 4.0 * (n + m) / (n - 1);
    return std::min(angle, std::numbers::pi / 2.0);
}

double sufficient_sector_halfangle(int n, int m) {
    require(n >= 4, ErrorCode::UseQuasiStabilityRule,
            "degrees 1..3 are quasi-stable exactly when the finite Hurwitz matrix is TN; "
            "no sector form applies");
    require(m >= 0 && m <= n - 4, ErrorCode::PreconditionFailed, "index m must lie in [0, n-4]");
    return std::numbers::pi / 2.0 * (n + m) / (n + m + 2);
}

SectorVerdict check_zero_free_sector(const Polynomial& p, double half_angle, SectorRule rule,
                                     const Tolerances& tol) {
    require(half_angle > 0.0 && half_angle <= std::numbers::pi / 2.0 + tol.boundary,
            ErrorCode::PreconditionFailed, "half angle must lie in (0, pi/2]");
    SectorVerdict verdict;
    verdict.half_angle = half_angle;
    verdict.rule = rule;
    const RootSet roots = find_roots(p);
    for (const auto& r : roots.roots) {
        if (std::abs(r.value) == 0.0) {
            // The origin has no argument; sector statements concern z != 0.
            verdict.roots_outside.push_back(r);
            continue;
        }
        const double arg = std::abs(std::atan2(r.value.imag(), r.value.real()));
        if (std::abs(arg - half_angle) <= tol.boundary)
            verdict.roots_on_boundary.push_back(r);
        else if (arg < half_angle)
            verdict.roots_inside.push_back(r);
        else
            verdict.roots_outside.push_back(r);
    }
    return verdict;
}

namespace {

std::optional<Rational> rational_cos_of_pi_fraction(long num, long den) {
    num = std::labs(num);
    den = std::labs(den);
    const long g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (num == 0) return Rational(1);
    if (den == 1 && num == 1) return Rational(-1);
    if (den == 2 && num == 1) return Rational(0);
    if (den == 3 && num == 1) return Rational(1, 2);
    if (den == 3 && num == 2) return Rational(-1, 2);
    return std::nullopt;
}

Polynomial binomial_power(int m, bool exact) {
    if (exact) return Polynomial::exact({Rational(1), Rational(1)}).pow(m);
    return Polynomial::approx({1.0, 1.0}).pow(m);
}

} // namespace

Polynomial sharp_necessary_example(int n, int m) {
    require(n >= 2, ErrorCode::PreconditionFailed, "need degree >= 2");
    require(m >= 0 && m <= n - 2, ErrorCode::PreconditionFailed, "index m must lie in [0, n-2]");
    require((n - m) % 2 == 0, ErrorCode::PreconditionFailed,
            "n - m must be even so conjugate factors pair up");

    const int count = (n - m) / 2;
    const long den = 2L * (n - 1);

    // Exponent of factor j is pi*(n-m-4j+2)/(2(n-1)); j and its mirror index
    // carry opposite exponents and multiply into a real quartic.
    std::vector<long> nums;
    for (int j = 1; j <= count; ++j) {
        const long e = n - m - 4L * j + 2;
        if (e > 0) nums.push_back(e);
    }
    const bool has_middle = count % 2 == 1;

    bool all_rational = true;
    std::vector<Rational> cos_exact;
    for (long e : nums) {
        if (auto c = rational_cos_of_pi_fraction(e, den)) {
            cos_exact.push_back(*c);
        } else {
            all_rational = false;
            break;
        }
    }

    if (all_rational) {
        ExactPoly g = ExactPoly::one();
        for (const Rational& c : cos_exact)
            g = g * ExactPoly(std::vector<Rational>{Rational(1), 2 * c, Rational(1)});
        if (has_middle) g = g * ExactPoly(std::vector<Rational>{Rational(1), Rational(1)});
        const Polynomial base = Polynomial::from_poly(g.compose_z_squared());
        return binomial_power(m, true) * base;
    }

    FloatPoly g = FloatPoly::one();
    for (long e : nums) {
        double c = std::cos(std::numbers::pi * static_cast<double>(e) / static_cast<double>(den));
        if (std::abs(c) < 1e-12) c = 0.0;
        g = g * FloatPoly(std::vector<double>{1.0, 2.0 * c, 1.0});
    }
    if (has_middle) g = g * FloatPoly(std::vector<double>{1.0, 1.0});
    const Polynomial base = Polynomial::from_poly(g.compose_z_squared());
    return binomial_power(m, false) * base;
}

Polynomial sharp_sufficient_counterexample(int n, int m, double epsilon) {
    require(epsilon >= 0.0, ErrorCode::PreconditionFailed, "epsilon must be >= 0");
    require(m >= 0 && n - m >= 4, ErrorCode::PreconditionFailed,
            "need n - m >= 4 for the quartic factor");
    require((n - m) % 2 == 0, ErrorCode::PreconditionFailed,
            "n - m must be even so conjugate factors pair up");

    const int r2 = (n - m) / 4;
    const int r1 = (n - m) / 2 - 2 * r2;

    // The quartic's u-plane zeros sit at angle pi +- theta; the coefficient
    // sequence leaves PF_{(n+m)/2} exactly past theta* = 2*pi/(n+m+2), so the
    // boundary is theta* and any epsilon > 0 breaks total nonnegativity.
    const double theta = 2.0 * std::numbers::pi / (n + m + 2) + epsilon;

    std::optional<Rational> c_exact;
    if (epsilon == 0.0) c_exact = rational_cos_of_pi_fraction(2, n + m + 2);

    if (c_exact) {
        ExactPoly u = ExactPoly::one();
        for (int i = 0; i < r1; ++i) u = u * ExactPoly(std::vector<Rational>{Rational(1), Rational(1)});
        for (int i = 0; i < r2; ++i)
            u = u * ExactPoly(std::vector<Rational>{Rational(1), 2 * (*c_exact), Rational(1)});
        const Polynomial base = Polynomial::from_poly(u.compose_z_squared());
        return binomial_power(m, true) * base;
    }

    FloatPoly u = FloatPoly::one();
    for (int i = 0; i < r1; ++i) u = u * FloatPoly(std::vector<double>{1.0, 1.0});
    const double c = std::cos(theta);
    for (int i = 0; i < r2; ++i) u = u * FloatPoly(std::vector<double>{1.0, 2.0 * c, 1.0});
    const Polynomial base = Polynomial::from_poly(u.compose_z_squared());
    return binomial_power(m, false) * base;
}

} // namespace hurwitz
