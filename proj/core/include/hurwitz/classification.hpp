#pragma once

#include "hurwitz/tnn.hpp"

#include <map>
#include <optional>
#include <string>

namespace hurwitz {

enum class StabilityClass { Stable, QuasiStable, NotQuasiStable, FiniteTnnOnly };

std::string to_string(StabilityClass c, std::optional<int> m = std::nullopt);

/// Combined verdict of the four classification routes. The root-location
/// route is ground truth; the minor-based routes are recorded alongside and
/// any disagreement is surfaced in `warnings`, never silently resolved.
struct ClassificationReport {
    StabilityClass stability_class = StabilityClass::NotQuasiStable;
    std::optional<int> stability_index;    // m
    std::optional<int> degeneracy_index;   // n - m
    MinorSequence delta;
    MinorSequence eta;
    Polynomial factor_q;
    Polynomial factor_g;
    double factorization_residual = 0.0;
    bool finite_tnn = false;
    int hurwitz_rank = 0;
    RootSet roots;
    bool roots_available = true;
    std::map<std::string, std::string> criteria_agreement;
    std::vector<std::string> warnings;
    int degree = 0;

    bool routes_agree() const { return warnings.empty(); }
};

/// Runs the root-location, Delta-pattern, eta-pattern and finite-TN routes
/// and assembles the report. Requires deg p >= 1 and a positive leading
/// coefficient. Inputs with zero constant term are accepted: the z^k factor
/// is split off first and noted in the warnings.
ClassificationReport classify(const Polynomial& p,
                              const Tolerances& tol = default_tolerances());

/// p = q * g(z^2) with g = gcd(p0, p1) monic; deg q equals the stability
/// index whenever the Delta pattern exists.
struct Factorization {
    Polynomial q;
    Polynomial g;
    double residual = 0.0;
};

Factorization factor_quasistable(const Polynomial& p,
                                 const Tolerances& tol = default_tolerances());

/// True when every zero with positive real part is mirrored by its negative
/// (with at least the same multiplicity).
bool check_reflection_property(const Polynomial& p,
                               const Tolerances& tol = default_tolerances());

} // namespace hurwitz
