#pragma once

#include "untwist/field.hpp"
#include "untwist/laurent.hpp"
#include "untwist/seifert.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace untwist {

/// V - t V^T with coefficients reduced into `field`.
template <class K>
LaurentMatrix<K> presentation_matrix(const SeifertMatrix& v, const K& field) {
  const std::size_t n = v.dimension();
  const IntMatrix& e = v.entries();
  LaurentMatrix<K> m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = LaurentPoly<K>(field, {field.from_integer(e(i, j)), field.neg(field.from_integer(e(j, i)))}, 0);
  return m;
}

/// H_1 of the infinite cyclic cover with coefficients in K, as the list of
/// non-unit invariant factors of V - t V^T (normalized, each dividing the next).
template <class K>
struct AlexanderModule {
  K field;
  std::vector<LaurentPoly<K>> invariant_factors;

  /// Minimal number of K[t, t^-1] generators.
  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

/// Non-unit diagonal entries of a Smith form (zeros included).
template <class K>
std::vector<LaurentPoly<K>> nonunit_invariant_factors(const SmithForm<K>& snf) {
  std::vector<LaurentPoly<K>> out;
  for (auto& d : snf.diagonal_entries())
    if (!d.is_unit()) out.push_back(std::move(d));
  return out;
}

template <class K>
AlexanderModule<K> alexander_module(const SeifertMatrix& v, const K& field) {
  const SmithForm<K> snf = smith_normal_form(presentation_matrix(v, field));
  return {field, nonunit_invariant_factors(snf)};
}

using AnyAlexanderModule = std::variant<AlexanderModule<PrimeField>, AlexanderModule<RationalField>>;

struct ModuleRank {
  AnyAlexanderModule module;
  std::size_t rank = 0;
};

ModuleRank module_rank(const SeifertMatrix& v, const Field& field);

/// det(V - t V^T), shifted to lowest exponent 0 and signed so that Delta(1) = 1.
/// Integer coefficients stored over Q.
LaurentPoly<RationalField> alexander_polynomial(const SeifertMatrix& v);

}  // namespace untwist
