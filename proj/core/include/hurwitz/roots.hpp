#pragma once

#include "hurwitz/errors.hpp"

#include <complex>
#include <vector>

namespace hurwitz {

/// Multiset of polynomial roots with multiplicities, sorted by (Re, Im).
struct RootSet {
    struct Root {
        std::complex<double> value;
        int multiplicity = 1;
    };

    std::vector<Root> roots;

    /// max over roots of |p(root)| / sum_k |a_k| |root|^{n-k}.
    double residual_bound = 0.0;

    int total_multiplicity() const {
        int s = 0;
        for (const Root& r : roots) s += r.multiplicity;
        return s;
    }
};

struct RootFinderOptions {
    int max_iterations = 500;
    int max_restarts = 3;
    /// Aberth stops when every step satisfies |dz| < step_tol * max(|z|, 1e-12)
    /// or the residual is at rounding level.
    double step_tol = 1e-13;
    /// Base clustering radius (absolute, scaled by max(1,|root|)). Clusters
    /// of multiple roots are confirmed by Newton refinement on derivatives,
    /// so the radius only has to catch the raw iterate spread.
    double cluster_tol = 1e-6;
    /// Conjugate pairing / realification band.
    double pairing_tol = 1e-8;
};

class RootFindingError : public Error {
public:
    RootFindingError(const std::string& message, RootSet best)
        : Error(ErrorCode::RootFindingFailed, message), best_iterate(std::move(best)) {}

    RootSet best_iterate;
};

/// Aberth-Ehrlich simultaneous iteration with deterministic perturbation
/// restarts. Coefficients in descending powers, degree >= 1 after trimming.
/// Throws RootFindingError (carrying the best iterate) on non-convergence.
RootSet find_roots_descending(const std::vector<double>& coeffs,
                              const RootFinderOptions& options = {});

/// Horner evaluation of a real-coefficient polynomial at a complex point.
std::complex<double> eval_at(const std::vector<double>& coeffs, std::complex<double> z);

} // namespace hurwitz
