#pragma once

#include "parageo/algebra/graded_algebra.hpp"

namespace parageo {

/// -2 Z(X) X + s ||X||^2 J Z^t in g_{-1} of conf(p,q), for X in g_{-1} and
/// Z in g_1; s = +1 is the sign matching the bracket in this realization.
AlgElem conformal_double_bracket(const AlgElem& x, const AlgElem& z, int norm_sign = 1);

/// -2 X Z X on the off-diagonal blocks of grass(n,m) or proj(m).
AlgElem grassmann_double_bracket(const AlgElem& x, const AlgElem& z);

}  // namespace parageo
