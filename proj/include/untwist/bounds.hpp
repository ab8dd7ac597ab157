#pragma once

#include "untwist/alexander.hpp"
#include "untwist/field.hpp"
#include "untwist/seifert.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string_view>

namespace untwist {

/// Bounds on the number of null-homologous twists needed to unknot a knot.
/// The upper bound is twice the genus of the presented surface, not of the knot.
struct BoundsReport {
  std::size_t genus = 0;
  LaurentPoly<RationalField> alexander{RationalField{}};
  std::map<Field, std::size_t> ranks;
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  bool tight = true;
};

/// Max over `fields` of the Alexander module rank; 0 for no fields.
std::size_t lower_bound_twists(const SeifertMatrix& v, const std::set<Field>& fields);

/// 2g for the presented surface.
std::size_t upper_bound_twists(const SeifertMatrix& v);

/// Connected sum of g copies of the genus one knot with Seifert matrix [[0,1],[2,0]].
SeifertMatrix witness_family(std::size_t g);

/// Per-field ranks are computed concurrently.
BoundsReport bounds_report(const SeifertMatrix& v, const std::set<Field>& fields);

/// Primes 2..13 plus Q. `primes_override` (comma separated, e.g. the value of
/// UNTWIST_DEFAULT_PRIMES) replaces the primes and keeps Q.
std::set<Field> default_fields(std::optional<std::string_view> primes_override = std::nullopt);

/// Parses "2,3,5". Throws SchemaViolation on junk, NonPrimeModulus on composites.
std::set<Field> parse_prime_list(std::string_view list);

}  // namespace untwist
