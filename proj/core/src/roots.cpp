#include "hurwitz/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace hurwitz {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

using Cplx = std::complex<double>;

// p(z) and p'(z) in one Horner pass; coefficients descending.
void eval_with_derivative(const std::vector<double>& c, Cplx z, Cplx& value, Cplx& deriv) {
    value = Cplx(c[0], 0.0);
    deriv = Cplx(0.0, 0.0);
    for (std::size_t k = 1; k < c.size(); ++k) {
        deriv = deriv * z + value;
        value = value * z + c[k];
    }
}

double eval_abs(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (double a : c) acc = acc * x + std::abs(a);
    return acc;
}

std::vector<double> derivative_coeffs(const std::vector<double>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<double> d;
    d.reserve(c.size() > 1 ? c.size() - 1 : 0);
    for (int k = 0; k < n; ++k) d.push_back(c[static_cast<std::size_t>(k)] * (n - k));
    return d;
}

struct Engine {
    std::vector<double> coeffs;            // deflated, normalized, descending
    int degree = 0;
    std::vector<std::vector<double>> derivs;  // derivs[k] = k-th derivative

    const std::vector<double>& derivative(int k) {
        while (static_cast<int>(derivs.size()) <= k)
            derivs.push_back(derivative_coeffs(derivs.empty() ? coeffs : derivs.back()));
        return k == 0 ? coeffs : derivs[static_cast<std::size_t>(k - 1)];
    }

    Cplx eval(int deriv_order, Cplx z) {
        const auto& c = derivative(deriv_order);
        Cplx acc(0.0, 0.0);
        for (double a : c) acc = acc * z + a;
        return acc;
    }

    // Rounding-level bound for |p^(k)| evaluated near |z|.
    double eval_noise(int deriv_order, double absz) {
        const auto& c = derivative(deriv_order);
        return 64.0 * static_cast<double>(degree + 1) * kEps * std::max(eval_abs(c, absz), 1e-300);
    }
};

// Aberth-Ehrlich sweep; returns true when every point is converged.
bool aberth(Engine& eng, std::vector<Cplx>& z, const RootFinderOptions& opt) {
    const int d = eng.degree;
    std::vector<bool> done(static_cast<std::size_t>(d), false);
    for (int iter = 0; iter < opt.max_iterations; ++iter) {
        bool all_done = true;
        for (int i = 0; i < d; ++i) {
            if (done[static_cast<std::size_t>(i)]) continue;
            Cplx value, deriv;
            eval_with_derivative(eng.coeffs, z[static_cast<std::size_t>(i)], value, deriv);
            const double absz = std::abs(z[static_cast<std::size_t>(i)]);
            if (std::abs(value) <= eng.eval_noise(0, absz) / 8.0) {
                done[static_cast<std::size_t>(i)] = true;
                continue;
            }
            if (std::abs(deriv) < 1e-290) {
                z[static_cast<std::size_t>(i)] += Cplx(1e-8 * (1.0 + absz), 1e-8);
                all_done = false;
                continue;
            }
            const Cplx newton = value / deriv;
            Cplx sum(0.0, 0.0);
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                Cplx diff = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
                if (std::abs(diff) < 1e-290) diff = Cplx(1e-12, 1e-12);
                sum += 1.0 / diff;
            }
            const Cplx denom = 1.0 - newton * sum;
            const Cplx step = std::abs(denom) < 1e-12 ? newton : newton / denom;
            z[static_cast<std::size_t>(i)] -= step;
            if (std::abs(step) <= opt.step_tol * std::max(std::abs(z[static_cast<std::size_t>(i)]), 1e-12))
                done[static_cast<std::size_t>(i)] = true;
            else
                all_done = false;
        }
        if (all_done) return true;
    }
    return false;
}

std::vector<Cplx> initial_points(const Engine& eng) {
    const int d = eng.degree;
    const auto& c = eng.coeffs;
    const Cplx centroid = d > 0 ? Cplx(-c[1] / (d * c[0]), 0.0) : Cplx(0.0, 0.0);
    Cplx pc(c[0], 0.0);
    for (std::size_t k = 1; k < c.size(); ++k) pc = pc * centroid + c[k];
    double radius = std::pow(std::abs(pc) / std::abs(c[0]), 1.0 / d);
    radius = std::max(radius, 1e-3 * (1.0 + std::abs(centroid)));
    std::vector<Cplx> z(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / d + 0.4 / d + 0.55;
        const double r = radius * (1.0 + 0.08 * i / std::max(1, d));
        z[static_cast<std::size_t>(i)] = centroid + Cplx(r * std::cos(angle), r * std::sin(angle));
    }
    return z;
}

struct Resolved {
    Cplx value;
    int multiplicity;
};

// Newton on the (m-1)-th derivative (simple zero there for an m-fold root).
bool refine_multiple(Engine& eng, Cplx guess, int m, Cplx& out) {
    if (m - 1 >= eng.degree) {
        // All roots coincide: a_0 (z - r)^d has r = -a_1 / (d a_0).
        out = Cplx(-eng.coeffs[1] / (eng.degree * eng.coeffs[0]), 0.0);
        return true;
    }
    Cplx z = guess;
    for (int it = 0; it < 80; ++it) {
        const auto& f = eng.derivative(m - 1);
        Cplx value(0.0, 0.0), deriv(0.0, 0.0);
        value = Cplx(f[0], 0.0);
        for (std::size_t k = 1; k < f.size(); ++k) {
            deriv = deriv * z + value;
            value = value * z + f[k];
        }
        if (std::abs(deriv) < 1e-290) return false;
        const Cplx step = value / deriv;
        z -= step;
        if (!(std::abs(z) < 1e12)) return false;
        if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(z))) break;
    }
    out = z;
    return true;
}

bool verify_multiplicity(Engine& eng, Cplx candidate, int m) {
    const double absz = std::abs(candidate);
    for (int k = 0; k < m; ++k) {
        if (std::abs(eng.eval(k, candidate)) > eng.eval_noise(k, absz)) return false;
    }
    return true;
}

void polish_simple(Engine& eng, Cplx& z) {
    for (int it = 0; it < 3; ++it) {
        Cplx value, deriv;
        eval_with_derivative(eng.coeffs, z, value, deriv);
        if (std::abs(deriv) < 1e-200) return;
        const Cplx step = value / deriv;
        if (!(std::abs(step) < 1.0 + std::abs(z))) return;
        z -= step;
    }
}

void resolve_cluster(Engine& eng, std::vector<Cplx> members, double radius, double floor_radius,
                     int depth, std::vector<Resolved>& out) {
    if (members.size() == 1) {
        Cplx z = members[0];
        polish_simple(eng, z);
        out.push_back({z, 1});
        return;
    }
    Cplx mean(0.0, 0.0);
    for (const Cplx& v : members) mean += v;
    mean /= static_cast<double>(members.size());

    const int m = static_cast<int>(members.size());
    Cplx refined;
    if (refine_multiple(eng, mean, m, refined) && verify_multiplicity(eng, refined, m)) {
        out.push_back({refined, m});
        return;
    }

    if (depth >= 24 || radius <= floor_radius) {
        // Give up on merging: report members individually.
        for (const Cplx& v : members) {
            Cplx z = v;
            polish_simple(eng, z);
            out.push_back({z, 1});
        }
        return;
    }

    // Re-link with a tighter radius and recurse.
    const double r = std::max(radius / 4.0, floor_radius);
    std::sort(members.begin(), members.end(), [](const Cplx& a, const Cplx& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    std::vector<std::vector<Cplx>> groups;
    std::vector<bool> used(members.size(), false);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (used[i]) continue;
        std::vector<Cplx> group{members[i]};
        used[i] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (used[j]) continue;
                for (const Cplx& g : group) {
                    if (std::abs(members[j] - g) <= r * std::max(1.0, std::abs(g))) {
                        group.push_back(members[j]);
                        used[j] = true;
                        grew = true;
                        break;
                    }
                }
            }
        }
        groups.push_back(std::move(group));
    }
    if (groups.size() == 1) {
        for (const Cplx& v : members) {
            Cplx z = v;
            polish_simple(eng, z);
            out.push_back({z, 1});
        }
        return;
    }
    for (auto& g : groups) resolve_cluster(eng, std::move(g), r, floor_radius, depth + 1, out);
}

} // namespace

std::complex<double> eval_at(const std::vector<double>& coeffs, std::complex<double> z) {
    Cplx acc(0.0, 0.0);
    for (double a : coeffs) acc = acc * z + a;
    return acc;
}

RootSet find_roots_descending(const std::vector<double>& input, const RootFinderOptions& opt) {
    std::vector<double> c = input;
    while (!c.empty() && c.front() == 0.0) c.erase(c.begin());
    require(c.size() >= 2, ErrorCode::DegreeTooSmall, "root finding needs degree >= 1");

    double maxabs = 0.0;
    for (double a : c) maxabs = std::max(maxabs, std::abs(a));
    for (double& a : c) a /= maxabs;

    int zero_roots = 0;
    while (c.size() >= 2 && c.back() == 0.0) {
        c.pop_back();
        ++zero_roots;
    }

    const int d = static_cast<int>(c.size()) - 1;
    std::vector<Resolved> resolved;
    Engine eng;
    eng.coeffs = c;
    eng.degree = d;

    if (d == 1) {
        resolved.push_back({Cplx(-c[1] / c[0], 0.0), 1});
    } else if (d >= 2) {
        std::vector<Cplx> z = initial_points(eng);
        bool converged = aberth(eng, z, opt);
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        int restarts = 0;
        while (!converged && restarts < opt.max_restarts) {
            ++restarts;
            for (Cplx& v : z) {
                const double scale = 0.02 * (1.0 + std::abs(v));
                v += Cplx(scale * unit(rng), scale * unit(rng));
            }
            converged = aberth(eng, z, opt);
        }
        if (!converged) {
            RootSet best;
            for (const Cplx& v : z) best.roots.push_back({v, 1});
            best.residual_bound = std::numeric_limits<double>::infinity();
            throw RootFindingError("root finder did not converge", best);
        }

        // Loose single-linkage clustering; multiple roots are confirmed (or
        // split back apart) by derivative refinement.
        const double loose = std::max(opt.cluster_tol, 10.0 * std::pow(d * kEps, 0.25));
        std::sort(z.begin(), z.end(), [](const Cplx& a, const Cplx& b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        std::vector<bool> used(z.size(), false);
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (used[i]) continue;
            std::vector<Cplx> group{z[i]};
            used[i] = true;
            bool grew = true;
            while (grew) {
                grew = false;
                for (std::size_t j = 0; j < z.size(); ++j) {
                    if (used[j]) continue;
                    for (const Cplx& g : group) {
                        if (std::abs(z[j] - g) <= loose * std::max(1.0, std::abs(g))) {
                            group.push_back(z[j]);
                            used[j] = true;
                            grew = true;
                            break;
                        }
                    }
                }
            }
            resolve_cluster(eng, std::move(group), loose, opt.cluster_tol, 0, resolved);
        }
    }

    // Realify near-real roots, then symmetrize conjugate pairs.
    for (Resolved& r : resolved) {
        if (std::abs(r.value.imag()) <= opt.pairing_tol * (1.0 + std::abs(r.value)))
            r.value = Cplx(r.value.real(), 0.0);
    }
    for (std::size_t i = 0; i < resolved.size(); ++i) {
        if (resolved[i].value.imag() <= 0.0) continue;
        std::size_t best = resolved.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < resolved.size(); ++j) {
            if (resolved[j].value.imag() >= 0.0 || resolved[j].multiplicity != resolved[i].multiplicity)
                continue;
            const double dist = std::abs(std::conj(resolved[j].value) - resolved[i].value);
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        if (best < resolved.size() &&
            best_dist <= 1e-6 * (1.0 + std::abs(resolved[i].value))) {
            const double re = 0.5 * (resolved[i].value.real() + resolved[best].value.real());
            const double im = 0.5 * (resolved[i].value.imag() - resolved[best].value.imag());
            resolved[i].value = Cplx(re, im);
            resolved[best].value = Cplx(re, -im);
        }
    }

    RootSet out;
    if (zero_roots > 0) out.roots.push_back({Cplx(0.0, 0.0), zero_roots});
    double residual = 0.0;
    for (const Resolved& r : resolved) {
        const double scale = std::max(eval_abs(c, std::abs(r.value)), 1e-300);
        residual = std::max(residual, std::abs(eval_at(c, r.value)) / scale);
        out.roots.push_back({r.value, r.multiplicity});
    }
    out.residual_bound = residual;
    std::sort(out.roots.begin(), out.roots.end(), [](const RootSet::Root& a, const RootSet::Root& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

} // namespace hurwitz
