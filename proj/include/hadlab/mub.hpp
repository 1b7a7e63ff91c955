#pragma once

#include <array>
#include <complex>
#include <optional>

#include "hadlab/classify.hpp"
#include "hadlab/matrix.hpp"

namespace hadlab {

// General 6x6 complex grid (no modulus constraint); used for orthonormal
// bases, whose vectors are the columns.
class DenseMatrix {
public:
    std::complex<double>& at(int i, int j);
    const std::complex<double>& at(int i, int j) const;

    static DenseMatrix identity();

    // this^adjoint * other
    DenseMatrix adjoint_times(const DenseMatrix& other) const;

private:
    std::array<std::complex<double>, 36> e_{};
};

// Largest |(B^* B - I)_{ij}|.
double unitarity_residual(const DenseMatrix& b);

struct Basis {
    DenseMatrix m;
    double residual;
};

// Validates column orthonormality within 1e-6; throws DomainError otherwise.
Basis make_basis(const DenseMatrix& b);

// Rescaling of a Hadamard matrix by 1/sqrt(6), turning it into a basis.
DenseMatrix basis_from_hadamard(const CHMatrix& m, const Tolerances& tol = {});

struct UnbiasedCheck {
    bool unbiased;
    double max_deviation; // max | |<e_i, f_j>|^2 - 1/6 |
};

UnbiasedCheck is_unbiased_pair(const Basis& e, const Basis& f, double eps = 1e-6);

// sqrt(6) * E^adjoint * F, valid when the pair is unbiased: every entry then
// has unit modulus and the result is a Hadamard matrix. Throws NotUnbiased
// when some modulus strays beyond eps.
CHMatrix transition(const Basis& e, const Basis& f, double eps = 1e-6);

struct PairAudit {
    int first = 0, second = 1;
    bool unbiased = false;
    double max_deviation = 0.0;
    // Present only for unbiased pairs.
    std::optional<double> transition_residual;
    std::optional<FamilyVerdict> verdict;
};

struct MubAuditReport {
    std::array<PairAudit, 3> pairs; // (0,1), (0,2), (1,2)
    // All three pairs unbiased and every transition matrix lands in at least
    // one of the two recognized families.
    bool zauner_compatible = false;
};

MubAuditReport audit_triplet(const Basis& b0, const Basis& b1, const Basis& b2,
                             const Tolerances& tol = {});

} // namespace hadlab
