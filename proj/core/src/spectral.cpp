#include "hurwitz/spectral.hpp"

#include "hurwitz/determinant.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>

namespace hurwitz {

namespace {

template <typename T>
std::vector<T> faddeev_leverrier(const DenseMatrix<T>& a) {
    const int n = a.rows();
    require(n == a.cols(), ErrorCode::PreconditionFailed, "characteristic polynomial needs a square matrix");
    std::vector<T> coeffs(static_cast<std::size_t>(n) + 1, T(0));
    coeffs[0] = T(1);
    DenseMatrix<T> m = a;
    T ck(0);
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // M_k = A (M_{k-1} + c_{k-1} I)
            DenseMatrix<T> shifted = m;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
            m = a * shifted;
        }
        ck = -m.trace() / T(k);
        coeffs[static_cast<std::size_t>(k)] = ck;
    }
    return coeffs;
}

// Yun's squarefree decomposition of a monic rational polynomial; returns
// (factor, multiplicity) pairs with deg factor >= 1.
std::vector<std::pair<ExactPoly, int>> squarefree_decomposition(ExactPoly f) {
    std::vector<std::pair<ExactPoly, int>> out;
    f = f.monic();
    if (f.degree() < 1) return out;
    ExactPoly df = f.derivative();
    ExactPoly a = ExactPoly::gcd(f, df);
    ExactPoly b = ExactPoly::divmod(f, a).first;
    ExactPoly c = ExactPoly::divmod(df, a).first;
    ExactPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        ExactPoly t = ExactPoly::gcd(b, d);
        if (t.degree() >= 1) out.emplace_back(t, i);
        b = ExactPoly::divmod(b, t).first;
        c = ExactPoly::divmod(d, t).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

} // namespace

std::vector<Rational> characteristic_polynomial(const ExactMatrix& m) {
    return faddeev_leverrier(m);
}

std::vector<double> characteristic_polynomial(const FloatMatrix& m) {
    return faddeev_leverrier(m);
}

int rank_of(const StructuredMatrix& m, const Tolerances& tol) {
    return m.is_exact() ? rank_exact(m.exact()) : rank_float(m.approx(), tol.rank_sv);
}

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

struct EigenList {
    std::vector<SpectralReport::Eigenvalue> values;
    int zero_algebraic = 0;
};

EigenList eigenvalues_exact(const ExactMatrix& h) {
    EigenList out;
    std::vector<Rational> cp = characteristic_polynomial(h);
    while (cp.size() > 1 && cp.back() == 0) {
        cp.pop_back();
        ++out.zero_algebraic;
    }
    const ExactPoly deflated{std::vector<Rational>(cp)};
    for (const auto& [factor, mult] : squarefree_decomposition(deflated)) {
        const RootSet roots = find_roots(Polynomial::from_poly(factor));
        for (const auto& r : roots.roots)
            out.values.push_back({r.value, mult * r.multiplicity});
    }
    return out;
}

EigenList eigenvalues_float(const FloatMatrix& h, const Tolerances& tol) {
    EigenList out;
    std::vector<double> cp = characteristic_polynomial(h);
    const int n = h.rows();
    const double norm = std::max(norm1(h), 1.0);
    // c_k is a sum of k x k principal minors; rank deficiency zeroes the
    // trailing ones up to rounding.
    double band_scale = 1.0;
    std::vector<double> bands(cp.size(), 0.0);
    for (std::size_t k = 0; k < cp.size(); ++k) {
        bands[k] = tol.minor_band * static_cast<double>(binomial(n, static_cast<int>(k))) * band_scale;
        band_scale *= norm;
    }
    while (cp.size() > 1 && std::abs(cp.back()) <= bands[cp.size() - 1]) {
        cp.pop_back();
        ++out.zero_algebraic;
    }
    if (cp.size() > 1) {
        const RootSet roots = find_roots_descending(cp);
        for (const auto& r : roots.roots) out.values.push_back({r.value, r.multiplicity});
    }
    return out;
}

} // namespace

Rational rank_witness_term(const Polynomial& p) {
    const int n = p.degree();
    require(n >= 4 && n <= 12, ErrorCode::PreconditionFailed,
            "diagnostic is defined for degrees 4 through 12");
    const auto coeff = [&](int k) {
        return p.is_exact() ? p.exact_poly().coeff(k) : Rational(p.float_poly().coeff(k));
    };
    // d_l with the top coefficient substituted: the recursion reuses the
    // small-degree shape with a_n standing in for a_l.
    const std::function<Rational(int, const Rational&)> shape = [&](int k, const Rational& top) -> Rational {
        switch (k) {
            case 4: return top * coeff(0);
            case 5: return top * coeff(1) * coeff(1);
            case 6: return top * top * coeff(0) * coeff(1);
            case 7: return top * top * top * coeff(0) * coeff(1);
            case 8: return top * top * top * top * coeff(0) * coeff(0);
            default: break;
        }
        if (k % 2 == 1) {
            const int l = (k + 1) / 2;
            Rational v = coeff(1) * shape(l, top);
            for (int i = 0; i < l - 2; ++i) v *= top;
            return v;
        }
        const int l = k / 2;
        Rational v = coeff(0) * shape(l, top);
        for (int i = 0; i < l - 1; ++i) v *= top;
        return v;
    };
    return shape(n, coeff(n));
}

SpectralReport spectral_analysis(const Polynomial& p, const Tolerances& tol) {
    require(p.degree() >= 1, ErrorCode::DegreeTooSmall, "spectral analysis needs degree >= 1");
    const int n = p.degree();
    const StructuredMatrix h = finite_hurwitz(p);

    SpectralReport report;
    try {
        report.tn_verified =
            is_totally_nonnegative(h).verdict == TnnVerdict::TotallyNonnegative;
    } catch (const Error&) {
        report.tn_verified = false;
    }
    report.out_of_theorem_scope = !report.tn_verified;

    report.rank = rank_of(h, tol);
    report.zero_geometric = n - report.rank;

    EigenList eigen;
    try {
        eigen = h.is_exact() ? eigenvalues_exact(h.exact()) : eigenvalues_float(h.approx(), tol);
    } catch (const RootFindingError& e) {
        throw Error(ErrorCode::SpectralFailed,
                    std::string("eigenvalue solve failed: ") + e.what());
    }
    report.zero_algebraic = eigen.zero_algebraic;
    report.eigenvalues = std::move(eigen.values);
    if (report.zero_algebraic > 0)
        report.eigenvalues.push_back({{0.0, 0.0}, report.zero_algebraic});
    std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
              [](const auto& a, const auto& b) {
                  if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
                  return a.value.imag() > b.value.imag();
              });

    const double a_n = p.coeff_double(n);
    double trace_sum_re = 0.0;
    for (const auto& e : report.eigenvalues) trace_sum_re += e.value.real() * e.algebraic;
    const double trace = h.is_exact() ? to_double(h.exact().trace()) : h.approx().trace();
    report.trace_residual = std::abs(trace_sum_re - trace) / (1.0 + std::abs(trace));

    int positive = 0;
    for (const auto& e : report.eigenvalues) {
        const double band = tol.boundary * (1.0 + std::abs(e.value));
        if (std::abs(e.value.imag()) <= band && e.value.real() > band) positive += e.algebraic;
    }
    report.positive_count = positive;

    // Multiplicity of p(0) among the eigenvalues, and the rank of the
    // shifted matrix for its geometric multiplicity.
    for (const auto& e : report.eigenvalues) {
        const double band = std::max(tol.cluster, 1e-7) * (1.0 + std::abs(a_n));
        if (std::abs(e.value.imag()) <= band && std::abs(e.value.real() - a_n) <= band) {
            SpectralReport::ConstantTermEigen info;
            info.value = a_n;
            info.algebraic = e.algebraic;
            int shifted_rank = 0;
            if (h.is_exact()) {
                ExactMatrix b = h.exact();
                const Rational shift = p.exact_poly().coeff(n);
                for (int i = 0; i < n; ++i) b.at(i, i) -= shift;
                shifted_rank = rank_exact(b);
            } else {
                FloatMatrix b = h.approx();
                for (int i = 0; i < n; ++i) b.at(i, i) -= a_n;
                shifted_rank = rank_float(b, tol.rank_sv);
            }
            info.geometric = n - shifted_rank;
            report.p0_eigen = info;
            break;
        }
    }

    // Shape demanded of TN finite Hurwitz matrices: zero eigenvalue diagonal,
    // positive eigenvalues simple except possibly p(0) with one Jordan block.
    bool consistent = report.zero_algebraic == report.zero_geometric;
    for (const auto& e : report.eigenvalues) {
        if (e.value.real() == 0.0 && e.value.imag() == 0.0) continue;
        const double band = tol.boundary * (1.0 + std::abs(e.value));
        const bool positive_real = std::abs(e.value.imag()) <= band && e.value.real() > band;
        if (!positive_real) continue;
        const bool is_p0 = report.p0_eigen &&
                           std::abs(e.value.real() - a_n) <=
                               std::max(tol.cluster, 1e-7) * (1.0 + std::abs(a_n));
        if (e.algebraic == 1) continue;
        if (is_p0 && e.algebraic == 2 && report.p0_eigen->geometric == 1) continue;
        consistent = false;
    }
    report.jordan_consistent = consistent;

    bool coefficient_vanishes = false;
    for (int k = 0; k <= n; ++k)
        if (p.coeff_double(k) == 0.0) coefficient_vanishes = true;
    report.simplicity_flagged = coefficient_vanishes;

    return report;
}

} // namespace hurwitz
