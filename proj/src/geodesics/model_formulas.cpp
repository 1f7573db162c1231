#include "parageo/geodesics/model_formulas.hpp"

#include "parageo/geodesics/type_spec.hpp"

namespace parageo {

AlgElem conformal_double_bracket(const AlgElem& x, const AlgElem& z, int norm_sign) {
  require_same_algebra(x, z);
  const GradedAlgebra& g = x.algebra();
  const CatalogId id = CatalogId::parse(g.name());
  if (id.family != "conf") throw Error(ErrorCode::NotApplicableGrading, "conf(p,q) only");
  if (!x.in_grade(-1) || !z.in_grade(1)) throw Error(ErrorCode::NotApplicableGrading, "need X in g_-1, Z in g_1");
  const Vector xv = x.grade_coords(-1), zv = z.grade_coords(1);
  Scalar pairing;
  for (std::size_t r = 0; r < xv.size(); ++r) pairing += zv[r] * xv[r];
  const Scalar norm = conformal_norm(x) * Scalar(norm_sign);
  Vector out(xv.size());
  for (std::size_t r = 0; r < xv.size(); ++r) {
    const Scalar j = Scalar(static_cast<int>(r) < id.params[0] ? 1 : -1);
    out[r] = Scalar(-2) * pairing * xv[r] + norm * j * zv[r];
  }
  return g.grade_element(-1, out);
}

AlgElem grassmann_double_bracket(const AlgElem& x, const AlgElem& z) {
  require_same_algebra(x, z);
  const GradedAlgebra& g = x.algebra();
  const CatalogId id = CatalogId::parse(g.name());
  if (id.family != "grass" && id.family != "proj") throw Error(ErrorCode::NotApplicableGrading, "grass(n,m) only");
  if (!x.in_grade(-1) || !z.in_grade(1)) throw Error(ErrorCode::NotApplicableGrading, "need X in g_-1, Z in g_1");
  const ScalarMatrix xm = x.matrix();
  return g.from_matrix(xm * z.matrix() * xm * Scalar(-2));
}

}  // namespace parageo
