#include "hadlab/families.hpp"

#include <cmath>
#include <stdexcept>

#include "hadlab/errors.hpp"

namespace hadlab {

namespace {

using cplx = std::complex<double>;

CHMatrix from_values(const std::vector<std::vector<cplx>>& rows) {
    std::vector<std::vector<UnimodEntry>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<UnimodEntry> row;
        row.reserve(r.size());
        for (const cplx& z : r)
            row.push_back(UnimodEntry::from_complex(z));
        out.push_back(std::move(row));
    }
    return CHMatrix::from_rows(out);
}

cplx implicit_value(cplx be, cplx ga, cplx ep, cplx ph) {
    return be * ga * ep * ep + be * ga * ph + be * be * ep * ph + ga * ep * ph +
           be * ga * ga * ep * ph + be * ga * ep * ph * ph;
}

} // namespace

UnimodEntry cube_root_unity(WChoice w) {
    return UnimodEntry::from_turns(w == WChoice::W1 ? 1.0 / 3.0 : 2.0 / 3.0);
}

CHMatrix f6t(const FourierTParams& p) {
    const cplx w = cube_root_unity(p.w_choice).value();
    const cplx w2 = w * w;
    const cplx a = p.a.value();
    const cplx b = p.b.value();
    return from_values({
        {1, 1, 1, 1, 1, 1},
        {1, 1, 1, -1, -1, -1},
        {1, w, w2, a, a * w, a * w2},
        {1, w, w2, -a, -a * w, -a * w2},
        {1, w2, w, b, b * w2, b * w},
        {1, w2, w, -b, -b * w2, -b * w},
    });
}

CHMatrix f6t(UnimodEntry a, UnimodEntry b, WChoice w) {
    return f6t(FourierTParams{a, b, w});
}

CHMatrix x6(const X6Params& p, const Tolerances& tol) {
    tol.validate();
    const cplx be = p.beta.value();
    const cplx ga = p.gamma.value();
    const cplx ep = p.epsilon.value();
    const cplx ph = p.phi.value();
    const double residual = std::abs(implicit_value(be, ga, ep, ph));
    if (residual > tol.eps_orth)
        throw ImplicitViolation("implicit constraint residual " + std::to_string(residual));
    return from_values({
        {1, 1, 1, 1, 1, 1},
        {1, -1, -1.0 / (ga * ep), -1.0 / (be * ph), 1.0 / (ga * ep), 1.0 / (be * ph)},
        {1, -ep / be, -1, -ep / (ga * ph), ep / (ga * ph), ep / be},
        {1, -ph / ga, -ph / (be * ep), -1, ph / ga, ph / (be * ep)},
        {1, ep / be, ph / (be * ep), 1.0 / (be * ph), 1.0 / (be * ga), ga / (be * be)},
        {1, ph / ga, 1.0 / (ga * ep), ep / (ga * ph), be / (ga * ga), 1.0 / (be * ga)},
    });
}

CHMatrix d6(UnimodEntry c0) {
    const cplx i(0, 1);
    const cplx c = c0.value();
    return from_values({
        {1, 1, 1, 1, 1, 1},
        {1, -1, i, -i, -i * c, i * c},
        {1, i, -1, i, -i, -i},
        {1, -i, i, -1, i * c, -i * c},
        {1, -i / c, -i, i / c, -1, i},
        {1, i / c, -i, -i / c, i, -1},
    });
}

CHMatrix h_a(UnimodEntry a0, WChoice wc) {
    const cplx w = cube_root_unity(wc).value();
    const cplx w2 = w * w;
    const cplx a = a0.value();
    return from_values({
        {1, 1, 1, 1, 1, 1},
        {1, -1, 1, -1, a, -a},
        {1, 1, w, w, w2, w2},
        {1, -1, w, -w, a * w2, -a * w2},
        {1, 1, w2, w2, w, w},
        {1, -1, w2, -w2, a * w, -a * w},
    });
}

CHMatrix r1(UnimodEntry q0) {
    const cplx i(0, 1);
    const cplx q = q0.value();
    return from_values({
        {1, 1, 1, 1, 1, 1},
        {1, i, 1, -i, -1, -1},
        {1, -1, -i, i, q, -q},
    });
}

CHMatrix r2(UnimodEntry q0) {
    const cplx i(0, 1);
    const cplx q = q0.value();
    return from_values({
        {1, 1, 1, 1, 1, 1},
        {1, i, -1, -i, q, -q},
        {1, -1, -q, i * q, -i * q, q},
    });
}

CHMatrix w_example() {
    const cplx i(0, 1);
    const double s2 = std::sqrt(2.0);
    return from_values({
        {1, 1, 1, 1, 1, 1},
        {1, i, -1, -i, (1.0 - i) / s2, (-1.0 + i) / s2},
        {1, -1, (-1.0 + i) / s2, (1.0 + i) / s2, (-1.0 - i) / s2, (1.0 - i) / s2},
        {1, (2.0 * s2 + i) / 3.0, (-1.0 - i) / s2, (-4.0 - s2 + (4.0 - s2) * i) / 6.0,
         (-1.0 + 2.0 * s2 * i) / 3.0, -i},
    });
}

CHMatrix h13(UnimodEntry a0, UnimodEntry b0, UnimodEntry c0, UnimodEntry d0,
             const Tolerances& tol) {
    tol.validate();
    const cplx a = a0.value(), b = b0.value(), c = c0.value(), d = d0.value();
    const double r1v = std::abs(eval_relation("h33", {a, b, c, d}));
    if (r1v > tol.eps_orth)
        throw RelationViolation("h33 residual " + std::to_string(r1v));
    const double r2v = std::abs(eval_relation("h33conj", {a, b, c, d}));
    if (r2v > tol.eps_orth)
        throw RelationViolation("h33conj residual " + std::to_string(r2v));
    const cplx ac = a * c;
    return from_values({
        {1, 1, 1, 1, 1, 1},
        {1, -1, a, b, -a, -b},
        {1, c, -1, d, -d, -c},
        {1, ac / b, ac / d, -1, -ac / b, -ac / d},
        {1, -c, -ac / d, -b, ac, -b * c / d},
        {1, -ac / b, -a, -d, -a * d / b, ac},
    });
}

std::vector<UnimodEntry> solve_implicit(X6Var unknown, UnimodEntry k1, UnimodEntry k2,
                                        UnimodEntry k3) {
    const cplx x = k1.value(), y = k2.value(), z = k3.value();
    cplx qa, qb, qc; // qa*t^2 + qb*t + qc = 0 in the unknown t
    switch (unknown) {
    case X6Var::Beta: { // knowns gamma, epsilon, phi
        qa = y * z;
        qb = x * y * y + x * z + x * x * y * z + x * y * z * z;
        qc = x * y * z;
        break;
    }
    case X6Var::Gamma: { // knowns beta, epsilon, phi
        qa = x * y * z;
        qb = x * y * y + x * z + y * z + x * y * z * z;
        qc = x * x * y * z;
        break;
    }
    case X6Var::Epsilon: { // knowns beta, gamma, phi
        qa = x * y;
        qb = x * x * z + y * z + x * y * y * z + x * y * z * z;
        qc = x * y * z;
        break;
    }
    case X6Var::Phi: { // knowns beta, gamma, epsilon
        qa = x * y * z;
        qb = x * y + x * x * z + y * z + x * y * y * z;
        qc = x * y * z * z;
        break;
    }
    }

    std::vector<cplx> roots;
    if (std::abs(qa) < 1e-12) {
        if (std::abs(qb) >= 1e-12)
            roots.push_back(-qc / qb);
    } else {
        // Stable pairing: the subtractive root comes from the product of roots.
        const cplx disc = qb * qb - 4.0 * qa * qc;
        cplx sq = std::sqrt(disc);
        if ((std::conj(qb) * sq).real() < 0.0)
            sq = -sq;
        const cplx qhalf = -0.5 * (qb + sq);
        if (std::abs(qhalf) > 1e-300) {
            roots.push_back(qhalf / qa);
            roots.push_back(qc / qhalf);
        } else {
            const cplx r = std::sqrt(-qc / qa);
            roots.push_back(r);
            roots.push_back(-r);
        }
    }

    std::vector<UnimodEntry> out;
    for (const cplx& r : roots) {
        if (std::abs(std::abs(r) - 1.0) > 1e-7)
            continue;
        const UnimodEntry cand = UnimodEntry::from_complex(r / std::abs(r));
        cplx q[4];
        int slot = 0;
        const cplx known[3] = {x, y, z};
        int ki = 0;
        for (int v = 0; v < 4; ++v) {
            if (v == static_cast<int>(unknown))
                q[slot++] = cand.value();
            else
                q[slot++] = known[ki++];
        }
        if (std::abs(implicit_value(q[0], q[1], q[2], q[3])) > 1e-9)
            continue;
        bool dup = false;
        for (const auto& prev : out)
            dup = dup || std::abs(prev.value() - cand.value()) <= 1e-12;
        if (!dup)
            out.push_back(cand);
    }
    return out;
}

std::complex<double> eval_relation(const std::string& name,
                                   const std::vector<std::complex<double>>& p) {
    auto need = [&](std::size_t n) {
        if (p.size() != n)
            throw std::invalid_argument("relation '" + name + "' takes " +
                                        std::to_string(n) + " parameters, got " +
                                        std::to_string(p.size()));
    };
    if (name == "implicit") {
        need(4);
        return implicit_value(p[0], p[1], p[2], p[3]);
    }
    if (name == "h33") {
        need(4);
        const cplx a = p[0], b = p[1], c = p[2], d = p[3];
        return a * c + b * c - d + b * d + c * d - a * c * d;
    }
    if (name == "h33conj") {
        need(4);
        const cplx a = p[0], b = p[1], c = p[2], d = p[3];
        return b - a * b - a * c + a * b * c - a * d - b * d;
    }
    if (name == "subfam") {
        need(2);
        const cplx a = p[0], d = p[1];
        return a * a - a + 2.0 * a * d + d * d - a * d * d;
    }
    if (name == "sub2") {
        need(2);
        const cplx a = p[0], b = p[1];
        return a - a * a - 2.0 * a * b - b * b + a * b * b;
    }
    if (name == "case5") {
        need(2);
        const cplx a = p[0], b = p[1];
        return a * a - b + 2.0 * a * b - a * a * b + b * b;
    }
    throw std::invalid_argument("unknown relation '" + name + "'");
}

X6Params x6_params_from_h13(UnimodEntry a0, UnimodEntry b0, UnimodEntry c0,
                            UnimodEntry d0, int k) {
    if (k < 0 || k > 2)
        throw std::invalid_argument("cube-root branch must be 0, 1 or 2");
    const cplx a = a0.value(), b = b0.value(), c = c0.value(), d = d0.value();
    const cplx cube = -d / (a * b * c * c);
    const double theta = std::arg(cube);
    const cplx beta = std::polar(1.0, (theta + 2.0 * M_PI * k) / 3.0);
    const cplx gamma = -(b * c / d) * beta * beta;
    const cplx epsilon = -c * beta;
    const cplx phi = (a * c * c / d) * beta * beta;
    return {UnimodEntry::from_complex(beta), UnimodEntry::from_complex(gamma),
            UnimodEntry::from_complex(epsilon), UnimodEntry::from_complex(phi)};
}

FourierTParams sample_f6t_params(Rng& rng) {
    return {rng.unimodular(), rng.unimodular(), WChoice::W1};
}

UnimodEntry sample_d6_param(Rng& rng) { return rng.unimodular(); }

UnimodEntry sample_ha_param(Rng& rng) { return rng.unimodular(); }

X6Params sample_x6_params(Rng& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const cplx a = rng.unimodular().value();
        const cplx b = rng.unimodular().value();
        const cplx v = 1.0 - a;
        const cplx z0 = 1.0 - b;
        const double rho = std::abs(a + b);
        const double rv = std::abs(v);
        const double dist = std::abs(z0);
        if (rv < 1e-3 || rho < 1e-3 || dist < 1e-9)
            continue;
        if (!(std::abs(rv - rho) <= dist && dist <= rv + rho))
            continue;
        // Intersect the circle of radius |1-a| about 0 with the circle of
        // radius |a+b| about 1-b; c*(1-a) must land on both.
        const double x = (dist * dist + rv * rv - rho * rho) / (2.0 * dist);
        const double y2 = rv * rv - x * x;
        if (y2 < 0.0)
            continue;
        const double y = std::sqrt(y2);
        const double sgn = rng.below(2) == 0 ? 1.0 : -1.0;
        const cplx zpt = (z0 / dist) * cplx(x, sgn * y);
        cplx c = zpt / v;
        c /= std::abs(c);
        const cplx den = z0 - c * v;
        cplx d = c * (a + b) / den;
        if (std::abs(std::abs(d) - 1.0) > 1e-9)
            continue;
        d /= std::abs(d);
        const int k = rng.below(3);
        const X6Params p = x6_params_from_h13(
            UnimodEntry::from_complex(a), UnimodEntry::from_complex(b),
            UnimodEntry::from_complex(c), UnimodEntry::from_complex(d), k);
        if (std::abs(implicit_value(p.beta.value(), p.gamma.value(), p.epsilon.value(),
                                    p.phi.value())) > 1e-9)
            continue;
        return p;
    }
    throw std::runtime_error("2-circulant sampler failed to produce a draw");
}

} // namespace hadlab
