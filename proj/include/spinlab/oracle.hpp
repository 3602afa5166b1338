#pragma once

#include <array>
#include <string>

#include "spinlab/boolean_function.hpp"
#include "spinlab/operator.hpp"

namespace spinlab {

/// Reversible oracle for a two-bit function on the three-spin register:
/// the permutation |i j k> -> |i j (k xor f(i,j))>. Self-inverse.
Operator oracle_unitary(const BooleanFunction& f);

/// Block-diagonal form of the oracle: block m is 2*sigma_x (the 2x2 NOT)
/// where f(m) = 1 and the identity E elsewhere, so that
/// delta_block(delta_form(f)) == oracle_unitary(f).
std::array<Matrix2, 4> delta_form(const BooleanFunction& f);

/// Unitary realized by simultaneous line-selective pi pulses on the
/// third-spin transitions selected by f: block m is 2i*sigma_x where
/// f(m) = 1 and E elsewhere. The all-zeros function maps to the identity
/// (no pulse is applied for it).
Operator experimental_unitary(const BooleanFunction& f);

/// Diagonal correction D with block m = -iE where f(m) = 1 and E
/// elsewhere, so that oracle_unitary(f) = experimental_unitary(f) * D
/// elementwise. D is trivial (identity up to a global phase) exactly for
/// the two constant functions.
Operator phase_correction(const BooleanFunction& f);

/// True when u is a scalar multiple of the identity (a pure global
/// phase), within tol.
bool is_global_phase(const Operator& u, double tol = kAlgebraTol);

/// "Delta(E,E,2sx,2sx)" style rendering of the ideal oracle block form.
std::string delta_form_label(const BooleanFunction& f);

/// "Delta(E,E,2isx,2isx)" style rendering of the realized block form.
std::string experimental_label(const BooleanFunction& f);

}  // namespace spinlab
