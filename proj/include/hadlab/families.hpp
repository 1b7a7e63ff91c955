#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hadlab/matrix.hpp"
#include "hadlab/rng.hpp"
#include "hadlab/tolerances.hpp"

namespace hadlab {

// Which primitive cube root of unity anchors the Fourier-type constructions.
enum class WChoice { W1, W2 }; // e^{2*pi*i/3} and e^{4*pi*i/3}

UnimodEntry cube_root_unity(WChoice w = WChoice::W1);

struct FourierTParams {
    UnimodEntry a, b;
    WChoice w_choice = WChoice::W1;
};

struct X6Params {
    UnimodEntry beta, gamma, epsilon, phi;
};

// Two-parameter transposed Fourier family; rows come in three rank-1 blocks.
CHMatrix f6t(const FourierTParams& p);
CHMatrix f6t(UnimodEntry a, UnimodEntry b, WChoice w = WChoice::W1);

// Four-parameter 2-circulant family. The parameters must satisfy the implicit
// constraint (see eval_relation("implicit")); throws ImplicitViolation
// otherwise.
CHMatrix x6(const X6Params& p, const Tolerances& tol = {});

// One-parameter subfamily of the 2-circulant family.
CHMatrix d6(UnimodEntry c);

// One-parameter Fourier-type matrix whose -1 entries occupy only two columns.
CHMatrix h_a(UnimodEntry a, WChoice w = WChoice::W1);

// 3x6 families with pairwise orthogonal, pairwise cancelling rows.
CHMatrix r1(UnimodEntry q);
CHMatrix r2(UnimodEntry q);

// 4x6 matrix with pairwise orthogonal rows that cannot be completed to a 6x6
// Hadamard matrix (the three-row/four-column vanishing test fails on its
// transpose).
CHMatrix w_example();

// Four-parameter normalized form with -1 entries on the diagonal positions
// (1,1), (2,2), (3,3). Parameters must satisfy the h33 relation and its
// conjugate; throws RelationViolation otherwise.
CHMatrix h13(UnimodEntry a, UnimodEntry b, UnimodEntry c, UnimodEntry d,
             const Tolerances& tol = {});

enum class X6Var { Beta, Gamma, Epsilon, Phi };

// The implicit constraint is quadratic in each single variable. Given the
// other three (in beta,gamma,epsilon,phi order, skipping the unknown),
// returns the unimodular roots: those with ||root|-1| <= 1e-7 and implicit
// residual <= 1e-9 after renormalization. May be empty.
std::vector<UnimodEntry> solve_implicit(X6Var unknown, UnimodEntry k1, UnimodEntry k2,
                                        UnimodEntry k3);

// Named scalar relations used by the constructions:
//   "implicit" (beta,gamma,epsilon,phi), "h33" (a,b,c,d),
//   "h33conj" (a,b,c,d), "subfam" (a,d), "sub2" (a,b), "case5" (a,b).
std::complex<double> eval_relation(const std::string& name,
                                   const std::vector<std::complex<double>>& params);

// Parameter recovery core shared with the classification layer: the cube-root
// branch k in {0,1,2} of beta, then gamma, epsilon, phi by closed formulas.
X6Params x6_params_from_h13(UnimodEntry a, UnimodEntry b, UnimodEntry c, UnimodEntry d,
                            int k);

// Seeded samplers (deterministic per Rng state).
FourierTParams sample_f6t_params(Rng& rng);
UnimodEntry sample_d6_param(Rng& rng);
UnimodEntry sample_ha_param(Rng& rng);

// Draws a 2-circulant member by sampling the normalized-form scalars:
// unimodular (a,b) are drawn, c comes from a two-circle intersection so that
// d = c(a+b)/((1-b)-c(1-a)) is unimodular, and the parameter quadruple is the
// cube-root recovery of (a,b,c,d). Every returned quadruple satisfies the
// implicit constraint within 1e-9.
X6Params sample_x6_params(Rng& rng);

} // namespace hadlab
