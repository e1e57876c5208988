#include "hurwitz/polya.hpp"

#include "hurwitz/determinant.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace hurwitz {

namespace {

// cos(pi * num/den) for reduced |num/den| <= 1, when it is rational
// (Niven: only 0, 1/3, 1/2, 2/3, 1 qualify).
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

} // namespace

PfReport is_pf_r(const Polynomial& g, int r, PfMode mode, const Tolerances& tol) {
    require(r >= 1, ErrorCode::PreconditionFailed, "PF order must be >= 1");
    require(!g.is_zero(), ErrorCode::PreconditionFailed, "leading coefficient must be nonzero");

    PfReport report;
    report.r = r;
    report.reduction_used = mode;
    const StructuredMatrix band = schoenberg_tr(g, r);

    // A negative leading coefficient is already a negative 1x1 minor; settle
    // it up front so the order-r reduction never sees g_0 < 0.
    const bool lead_negative = g.is_exact() ? sign_of(g.exact_poly().leading()) < 0
                                            : g.float_poly().leading() < -tol.pf_band;
    if (lead_negative) {
        report.verdict = false;
        MinorWitness w;
        w.rows = {1};
        w.cols = {1};
        if (g.is_exact()) {
            w.exact = true;
            w.exact_value = g.exact_poly().leading();
            w.value = to_double(w.exact_value);
        } else {
            w.exact = false;
            w.value = g.float_poly().leading();
        }
        report.witness = std::move(w);
        report.minors_checked = 1;
        return report;
    }

    if (mode == PfMode::AllOrders) {
        TnnOptions options;
        options.cap = std::max(band.rows(), band.cols());
        options.band_base = tol.pf_band;
        options.band_norm = 1.0;  // absolute band, the sector boundary is closed
        const TnnReport tnn = is_totally_nonnegative(band, options);
        report.verdict = tnn.verdict == TnnVerdict::TotallyNonnegative;
        report.witness = tnn.witness;
        report.minors_checked = tnn.minors_checked;
        return report;
    }

    // Order-r minors only: lower orders reduce to order-r minors divided by
    // powers of g_0, so their signs carry no extra information.
    const int cols = band.cols();
    std::vector<int> colset(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) colset[static_cast<std::size_t>(i)] = i;
    std::vector<int> all_rows(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) all_rows[static_cast<std::size_t>(i)] = i;

    report.verdict = true;
    const bool exact = band.is_exact();
    while (true) {
        ++report.minors_checked;
        bool negative = false;
        MinorWitness w;
        if (exact) {
            const Rational value = det_exact(band.exact().select(all_rows, colset));
            if (sign_of(value) < 0) {
                negative = true;
                w.exact = true;
                w.exact_value = value;
                w.value = to_double(value);
            }
        } else {
            const double value = det_float(band.approx().select(all_rows, colset));
            if (value < -tol.pf_band) {
                negative = true;
                w.exact = false;
                w.value = value;
            }
        }
        if (negative) {
            for (int i = 0; i < r; ++i) w.rows.push_back(i + 1);
            for (int c : colset) w.cols.push_back(c + 1);
            report.verdict = false;
            report.witness = std::move(w);
            return report;
        }
        // next column combination (lexicographic)
        int i = r - 1;
        while (i >= 0 && colset[static_cast<std::size_t>(i)] == cols - r + i) --i;
        if (i < 0) break;
        ++colset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            colset[static_cast<std::size_t>(j)] = colset[static_cast<std::size_t>(j - 1)] + 1;
    }
    return report;
}

Polynomial schoenberg_sharp_polynomial(int r, int k) {
    require(r >= 1 && k >= 1, ErrorCode::PreconditionFailed, "need r >= 1 and k >= 1");
    const long den = r + k - 1;

    // Factors pair up as conjugate exponents +-theta*(r-2j+1); the middle
    // factor (odd r) is exactly z + 1.
    std::vector<long> exponents;
    for (long j = 1; 2 * j <= r; ++j) exponents.push_back(r - 2 * j + 1);

    bool all_rational = true;
    std::vector<Rational> cos_exact;
    for (long e : exponents) {
        if (auto c = rational_cos_of_pi_fraction(e, den)) {
            cos_exact.push_back(*c);
        } else {
            all_rational = false;
            break;
        }
    }

    if (all_rational) {
        ExactPoly p = ExactPoly::one();
        for (const Rational& c : cos_exact)
            p = p * ExactPoly(std::vector<Rational>{Rational(1), 2 * c, Rational(1)});
        if (r % 2 == 1) p = p * ExactPoly(std::vector<Rational>{Rational(1), Rational(1)});
        return Polynomial::from_poly(std::move(p));
    }

    FloatPoly p = FloatPoly::one();
    const double theta = std::numbers::pi / static_cast<double>(den);
    for (long e : exponents) {
        double c = std::cos(theta * static_cast<double>(e));
        if (std::abs(c) < 1e-12) c = 0.0;  // truncate residue of exact zeros
        p = p * FloatPoly(std::vector<double>{1.0, 2.0 * c, 1.0});
    }
    if (r % 2 == 1) p = p * FloatPoly(std::vector<double>{1.0, 1.0});
    return Polynomial::from_poly(std::move(p));
}

} // namespace hurwitz
