#include "hadlab/mub.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hadlab {

namespace {

int flat(int i, int j) {
    if (i < 0 || i >= 6 || j < 0 || j >= 6) throw std::out_of_range("dense matrix index");
    return 6 * i + j;
}

} // namespace

std::complex<double>& DenseMatrix::at(int i, int j) { return e_[static_cast<size_t>(flat(i, j))]; }

const std::complex<double>& DenseMatrix::at(int i, int j) const {
    return e_[static_cast<size_t>(flat(i, j))];
}

DenseMatrix DenseMatrix::identity() {
    DenseMatrix m;
    for (int i = 0; i < 6; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::adjoint_times(const DenseMatrix& other) const {
    DenseMatrix out;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < 6; ++k) s += std::conj(at(k, i)) * other.at(k, j);
            out.at(i, j) = s;
        }
    return out;
}

double unitarity_residual(const DenseMatrix& b) {
    const DenseMatrix g = b.adjoint_times(b);
    double mx = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            mx = std::max(mx, std::abs(g.at(i, j) - (i == j ? 1.0 : 0.0)));
    return mx;
}

Basis make_basis(const DenseMatrix& b) {
    const double res = unitarity_residual(b);
    if (res > 1e-6)
        throw DomainError("basis columns are not orthonormal (residual " +
                          std::to_string(res) + ")");
    return Basis{b, res};
}

DenseMatrix basis_from_hadamard(const CHMatrix& m, const Tolerances& tol) {
    const HadamardCheck chk = is_hadamard(m, tol);
    if (!chk.ok) throw NotHadamard("basis scaling requires a Hadamard matrix");
    const double s = 1.0 / std::sqrt(6.0);
    DenseMatrix out;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out.at(i, j) = s * m.value(i, j);
    return out;
}

UnbiasedCheck is_unbiased_pair(const Basis& e, const Basis& f, double eps) {
    const DenseMatrix g = e.m.adjoint_times(f.m);
    double mx = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            mx = std::max(mx, std::abs(std::norm(g.at(i, j)) - 1.0 / 6.0));
    return UnbiasedCheck{mx <= eps, mx};
}

CHMatrix transition(const Basis& e, const Basis& f, double eps) {
    const DenseMatrix g = e.m.adjoint_times(f.m);
    const double s = std::sqrt(6.0);
    CHMatrix out(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const std::complex<double> z = s * g.at(i, j);
            if (std::abs(std::abs(z) - 1.0) > eps)
                throw NotUnbiased("transition entry modulus " + std::to_string(std::abs(z)) +
                                  " is not 1; the bases are not unbiased");
            out.at(i, j) = UnimodEntry::from_complex(z);
        }
    return out;
}

MubAuditReport audit_triplet(const Basis& b0, const Basis& b1, const Basis& b2,
                             const Tolerances& tol) {
    const std::array<const Basis*, 3> bs{&b0, &b1, &b2};
    const std::array<std::array<int, 2>, 3> idx{{{0, 1}, {0, 2}, {1, 2}}};
    MubAuditReport rep;
    bool all_unbiased = true;
    bool all_in_family = true;
    for (int p = 0; p < 3; ++p) {
        const Basis& x = *bs[static_cast<size_t>(idx[static_cast<size_t>(p)][0])];
        const Basis& y = *bs[static_cast<size_t>(idx[static_cast<size_t>(p)][1])];
        PairAudit audit;
        audit.first = idx[static_cast<size_t>(p)][0];
        audit.second = idx[static_cast<size_t>(p)][1];
        const UnbiasedCheck ub = is_unbiased_pair(x, y);
        audit.unbiased = ub.unbiased;
        audit.max_deviation = ub.max_deviation;
        if (ub.unbiased) {
            const CHMatrix t = transition(x, y);
            audit.transition_residual = is_hadamard(t, tol).max_residual;
            audit.verdict = classify(t, tol).verdict;
            if (*audit.verdict == FamilyVerdict::None) all_in_family = false;
        } else {
            all_unbiased = false;
        }
        rep.pairs[static_cast<size_t>(p)] = audit;
    }
    rep.zauner_compatible = all_unbiased && all_in_family;
    return rep;
}

} // namespace hadlab
