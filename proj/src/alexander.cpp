#include "untwist/alexander.hpp"

namespace untwist {

ModuleRank module_rank(const SeifertMatrix& v, const Field& field) {
  return field.visit([&](const auto& k) {
    auto module = alexander_module(v, k);
    const std::size_t rank = module.rank();
    return ModuleRank{AnyAlexanderModule(std::move(module)), rank};
  });
}

LaurentPoly<RationalField> alexander_polynomial(const SeifertMatrix& v) {
  const RationalField q;
  LaurentPoly<RationalField> det = determinant(presentation_matrix(v, q));
  det = det.shifted(-det.lowest_exp());
  if (!det.is_zero() && det.evaluate(q.one()) < 0) det = -det;
  return det;
}

}  // namespace untwist
