#pragma once

#include "forcealg/matrix_forcing.hpp"
#include "forcealg/report.hpp"

namespace forcealg {

/// Sweeps data (x^a, y^b; x^c y^d) over the exponent box and checks that the
/// normality verdict, the closed-form seven-case rule, and the I+D = R test
/// agree on every instance. Rationals only.
CaseResult normality_grid(int a_max, int b_max, int c_max, int d_max);

/// Checks H ⊆ P_i for every candidate, rad(H) = rad(∩ P_i), and reports each
/// candidate's codimension. Primality of the candidates is assumed, not
/// verified.
CaseResult verify_decomposition(const Ideal& h, const std::vector<Ideal>& candidates);

/// The symmetric two-equation fixture (xT1+yT2, yT1+xT2) over k[x,y].
ForcingMatrix enlightening_matrix(const FieldSpec& k = FieldSpec::rationals());
/// Its four minimal primes (T1,T2), (x,y), (x-y,T1+T2), (x+y,T1-T2) in B.
std::vector<Ideal> enlightening_minimal_primes(const FieldSpec& k = FieldSpec::rationals());

/// Full decomposition suite for the fixture: containments, radical equality,
/// codimensions, the regular-sequence verdict, and the 2×2 Fitting ideal.
CaseResult verify_enlightening_decomposition();

/// Codimension of the fixture's singular-locus ideal J0 (the 2×2 minors of
/// the Jacobian of (h1, h2) together with h1, h2) in k[x,y,T1,T2]:
/// 3 away from characteristic 2, and 2 in characteristic 2.
CaseResult verify_enlightening_singular_locus(const FieldSpec& k = FieldSpec::rationals());

/// Presentation checks for the normalization C/P of the algebra forced by
/// x^2 T + y^2 S + xy: codim(P) = 2, the forcing equation maps into P, and
/// the Jacobian-minor ideal of P together with P is the unit ideal.
CaseResult verify_normalization_example();

}  // namespace forcealg
