#include "hurwitz/classification.hpp"

#include "hurwitz/determinant.hpp"
#include "hurwitz/spectral.hpp"

#include <cmath>
#include <sstream>

namespace hurwitz {

std::string to_string(StabilityClass c, std::optional<int> m) {
    std::ostringstream os;
    switch (c) {
        case StabilityClass::Stable: os << "Stable"; break;
        case StabilityClass::QuasiStable: os << "QuasiStable"; break;
        case StabilityClass::NotQuasiStable: os << "NotQuasiStable"; break;
        case StabilityClass::FiniteTnnOnly: os << "FiniteTnnOnly"; break;
    }
    if (m && c != StabilityClass::NotQuasiStable) os << "(m=" << *m << ")";
    return os.str();
}

namespace {

Polynomial strip_zero_roots(const Polynomial& p, int& stripped) {
    stripped = 0;
    if (p.is_exact()) {
        std::vector<Rational> c = p.exact_poly().coeffs();
        while (c.size() > 1 && c.back() == 0) {
            c.pop_back();
            ++stripped;
        }
        return Polynomial::exact(std::move(c));
    }
    std::vector<double> c = p.float_poly().coeffs();
    while (c.size() > 1 && c.back() == 0.0) {
        c.pop_back();
        ++stripped;
    }
    return Polynomial::approx(std::move(c));
}

bool all_zeros_negative(const Polynomial& g, const Tolerances& tol) {
    if (g.degree() < 1) return true;  // constant gcd, nothing to check
    const RootSet roots = find_roots(g);
    for (const auto& r : roots.roots) {
        const double band = tol.boundary * (1.0 + std::abs(r.value));
        if (std::abs(r.value.imag()) > band) return false;
        // A zero at the origin (within tolerance) also violates "negative".
        if (r.value.real() >= -band) return false;
    }
    return true;
}

struct RouteVerdict {
    StabilityClass cls = StabilityClass::NotQuasiStable;
    std::optional<int> m;
    bool decisive = true;  // false: no quasi-stability claim (FiniteTnnOnly)
    bool available = true;

    std::string text() const {
        if (!available) return "Unavailable";
        return to_string(cls, m);
    }
};

bool verdicts_disagree(const RouteVerdict& a, const RouteVerdict& b) {
    if (!a.available || !b.available || !a.decisive || !b.decisive) return false;
    if (a.cls != b.cls) return true;
    return a.m != b.m;
}

} // namespace

Factorization factor_quasistable(const Polynomial& p, const Tolerances& tol) {
    require(p.degree() >= 1, ErrorCode::DegreeTooSmall, "factorization needs degree >= 1");
    const EvenOddParts parts = split_even_odd(p);
    const GcdResult gcd = gcd_even_odd(parts, tol);

    Factorization out;
    out.g = gcd.g;
    out.residual = gcd.residual;
    if (gcd.g.degree() < 1) {
        out.q = p;
        out.g = p.is_exact() ? Polynomial::exact({Rational(1)}) : Polynomial::approx({1.0});
        return out;
    }

    if (p.is_exact()) {
        auto [q, rem] = ExactPoly::divmod(p.exact_poly(), gcd.g.exact_poly().compose_z_squared());
        require(rem.is_zero(), ErrorCode::FactorizationFailed,
                "exact division by g(z^2) left a remainder");
        out.q = Polynomial::from_poly(std::move(q));
        return out;
    }

    FloatPoly q;
    const double residual =
        least_squares_divide(p.float_poly(), gcd.g.to_float_poly().compose_z_squared(), q);
    out.residual = std::max(out.residual, residual);
    require(out.residual <= std::max(tol.rel, 1e-12), ErrorCode::FactorizationFailed,
            "division residual exceeds tolerance");
    out.q = Polynomial::from_poly(std::move(q));
    return out;
}

bool check_reflection_property(const Polynomial& p, const Tolerances& tol) {
    require(p.degree() >= 1, ErrorCode::DegreeTooSmall, "reflection check needs degree >= 1");
    const RootSet roots = find_roots(p);
    for (const auto& r : roots.roots) {
        const double band = tol.boundary * (1.0 + std::abs(r.value));
        if (r.value.real() <= band) continue;
        bool mirrored = false;
        for (const auto& s : roots.roots) {
            if (std::abs(s.value + r.value) <= band && s.multiplicity >= r.multiplicity) {
                mirrored = true;
                break;
            }
        }
        if (!mirrored) return false;
    }
    return true;
}

ClassificationReport classify(const Polynomial& input, const Tolerances& tol) {
    require(input.degree() >= 1, ErrorCode::DegreeTooSmall, "classification needs degree >= 1");
    require(input.coeff_double(0) > 0.0 || (input.is_exact() && sign_of(input.exact_poly().leading()) > 0),
            ErrorCode::PreconditionFailed, "leading coefficient must be positive");

    ClassificationReport report;
    const int full_degree = input.degree();
    report.degree = full_degree;

    int origin_mult = 0;
    const Polynomial p = strip_zero_roots(input, origin_mult);
    if (origin_mult > 0) {
        std::ostringstream os;
        os << "constant term is zero: factored out z^" << origin_mult
           << " before matrix analysis (the matrix criteria assume p(0) != 0)";
        report.warnings.push_back(os.str());
    }
    const int n = p.degree();

    if (n == 0) {
        // Pure monomial a_0 z^k: every root sits at the origin.
        report.stability_class = origin_mult > 0 ? StabilityClass::QuasiStable : StabilityClass::Stable;
        report.stability_index = 0;
        report.degeneracy_index = full_degree;
        report.factor_q = p;
        report.factor_g = p.is_exact() ? Polynomial::exact({Rational(1)}) : Polynomial::approx({1.0});
        if (origin_mult > 0) report.roots.roots.push_back({{0.0, 0.0}, origin_mult});
        report.criteria_agreement["roots"] = to_string(report.stability_class, 0);
        return report;
    }

    // Shared ingredients.
    report.delta = hurwitz_minors(p, tol);
    report.eta = eta_minors(p, n + 2, tol);
    const std::optional<int> m_delta = stability_index_from_minors(report.delta);
    const std::optional<int> eta_prefix = eta_positive_prefix(report.eta);

    bool g_negative = false;
    bool factor_available = true;
    try {
        const Factorization f = factor_quasistable(p, tol);
        report.factor_q = f.q;
        report.factor_g = f.g;
        report.factorization_residual = f.residual;
        g_negative = all_zeros_negative(f.g, tol);
    } catch (const Error& e) {
        factor_available = false;
        report.warnings.push_back(std::string("factorization unavailable: ") + e.what());
    }

    // Route (a): root locations (ground truth).
    RouteVerdict route_roots;
    int axis_mult = origin_mult;
    try {
        report.roots = find_roots(p);
        int right = 0;
        for (const auto& r : report.roots.roots) {
            const double band = tol.boundary * (1.0 + std::abs(r.value));
            if (r.value.real() > band)
                right += r.multiplicity;
            else if (r.value.real() >= -band)
                axis_mult += r.multiplicity;
        }
        if (origin_mult > 0) {
            report.roots.roots.insert(report.roots.roots.begin(), {{0.0, 0.0}, origin_mult});
        }
        if (right > 0) {
            route_roots.cls = StabilityClass::NotQuasiStable;
        } else if (axis_mult == 0) {
            route_roots.cls = StabilityClass::Stable;
            route_roots.m = full_degree;
        } else {
            route_roots.cls = StabilityClass::QuasiStable;
            route_roots.m = full_degree - axis_mult;
        }
    } catch (const RootFindingError& e) {
        route_roots.available = false;
        report.roots_available = false;
        report.roots = e.best_iterate;
        report.warnings.push_back("root finding failed; verdict falls back to the minor routes");
    }

    // Route (b): Delta pattern + gcd zero locations.
    RouteVerdict route_delta;
    if (m_delta && factor_available && g_negative) {
        route_delta.m = *m_delta;
        route_delta.cls = *m_delta == n ? StabilityClass::Stable : StabilityClass::QuasiStable;
    } else if (!factor_available && m_delta) {
        route_delta.available = false;
    } else {
        route_delta.cls = StabilityClass::NotQuasiStable;
    }

    // Route (c): eta pattern + gcd zero locations.
    RouteVerdict route_eta;
    if (eta_prefix && *eta_prefix >= 1 && factor_available && g_negative) {
        const int m_eta = *eta_prefix - 1;
        if (m_eta <= n) {
            route_eta.m = m_eta;
            route_eta.cls = m_eta == n ? StabilityClass::Stable : StabilityClass::QuasiStable;
        } else {
            route_eta.cls = StabilityClass::NotQuasiStable;
        }
    } else if (!factor_available && eta_prefix && *eta_prefix >= 1) {
        route_eta.available = false;
    } else {
        route_eta.cls = StabilityClass::NotQuasiStable;
    }

    // Route (d): total nonnegativity of the finite Hurwitz matrix. TN alone
    // only determines quasi-stability when the matrix is nonsingular or
    // Delta_{n-2} != 0; otherwise it certifies the stable-times-PF shape.
    RouteVerdict route_tnn;
    try {
        const TnnReport tnn = is_totally_nonnegative(finite_hurwitz(p));
        report.finite_tnn = tnn.verdict == TnnVerdict::TotallyNonnegative;
        if (!report.finite_tnn) {
            route_tnn.cls = StabilityClass::NotQuasiStable;
        } else if (m_delta && *m_delta == n) {
            route_tnn.cls = StabilityClass::Stable;
            route_tnn.m = n;
        } else if (m_delta && *m_delta >= n - 2) {
            route_tnn.cls = StabilityClass::QuasiStable;
            route_tnn.m = *m_delta;
        } else {
            route_tnn.cls = StabilityClass::FiniteTnnOnly;
            route_tnn.m = m_delta;
            route_tnn.decisive = false;
        }
    } catch (const Error& e) {
        route_tnn.available = false;
        report.warnings.push_back(std::string("finite-TN route unavailable: ") + e.what());
    }

    try {
        report.hurwitz_rank = rank_of(finite_hurwitz(p), tol);
    } catch (const Error&) {
        report.hurwitz_rank = -1;
    }

    // The minor routes looked at p / z^k; an origin root demotes Stable to
    // QuasiStable for the full polynomial.
    const auto demote = [&](RouteVerdict& v) {
        if (origin_mult > 0 && v.available && v.cls == StabilityClass::Stable)
            v.cls = StabilityClass::QuasiStable;
    };
    demote(route_delta);
    demote(route_eta);
    demote(route_tnn);

    report.criteria_agreement["roots"] = route_roots.text();
    report.criteria_agreement["delta_pattern"] = route_delta.text();
    report.criteria_agreement["eta_pattern"] = route_eta.text();
    report.criteria_agreement["finite_tnn"] = route_tnn.text();

    // The root route is ground truth; discrepancies are surfaced, never
    // silently resolved.
    if (verdicts_disagree(route_roots, route_delta))
        report.warnings.push_back("delta-pattern route disagrees with the root route: " +
                                  route_delta.text() + " vs " + route_roots.text());
    if (verdicts_disagree(route_roots, route_eta))
        report.warnings.push_back("eta-pattern route disagrees with the root route: " +
                                  route_eta.text() + " vs " + route_roots.text());
    if (verdicts_disagree(route_roots, route_tnn))
        report.warnings.push_back("finite-TN route disagrees with the root route: " +
                                  route_tnn.text() + " vs " + route_roots.text());

    const RouteVerdict& verdict = route_roots.available ? route_roots
                                  : route_delta.available ? route_delta
                                  : route_eta.available   ? route_eta
                                                          : route_tnn;
    report.stability_class = verdict.cls;
    report.stability_index = verdict.m;
    if (!report.stability_index) report.stability_index = m_delta;
    if (report.stability_index) {
        report.degeneracy_index = full_degree - *report.stability_index;
        if (origin_mult == 0 && *report.degeneracy_index % 2 != 0 &&
            report.stability_class != StabilityClass::NotQuasiStable)
            report.warnings.push_back("degeneracy index came out odd; expected even for p(0) != 0");
    }
    return report;
}

} // namespace hurwitz
