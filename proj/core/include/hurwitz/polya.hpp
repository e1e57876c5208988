#pragma once

#include "hurwitz/tnn.hpp"

namespace hurwitz {

enum class PfMode { OrderROnly, AllOrders };

struct PfReport {
    int r = 0;
    bool verdict = false;
    std::optional<MinorWitness> witness;
    PfMode reduction_used = PfMode::OrderROnly;
    std::uint64_t minors_checked = 0;
};

/// PF_r membership of the coefficient sequence of g via Schoenberg's band
/// matrix T_r. The default mode checks only the order-r minors (the lower
/// orders reduce to order-r minors scaled by powers of g_0); AllOrders runs
/// the full TN check and must agree. Float minors use an absolute zero band
/// so the closed sector boundary stays inside the class.
PfReport is_pf_r(const Polynomial& g, int r, PfMode mode = PfMode::OrderROnly,
                 const Tolerances& tol = default_tolerances());

/// The boundary polynomial prod_{j=1}^{r} (z + e^{i theta (r-2j+1)}) with
/// theta = pi/(r+k-1): lies in PF_k with zeros -e^{+-i theta (r-1)} on the
/// border of the zero-free sector. Conjugate factors are paired before
/// multiplying, so coefficients are real by construction; they are
/// rationalized when every required cosine is rational.
Polynomial schoenberg_sharp_polynomial(int r, int k);

} // namespace hurwitz
