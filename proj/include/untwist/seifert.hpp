#pragma once

#include "untwist/integer.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace untwist {

/// Seifert matrix V of a knot: square, even dimension 2g, det(V - V^T) = 1.
/// Immutable once validated.
class SeifertMatrix {
 public:
  /// The unknot (0x0).
  SeifertMatrix() = default;

  /// Throws NotSquare, OddDimension or NonUnimodularIntersection.
  static SeifertMatrix validate(IntMatrix entries, std::string name = {});

  const IntMatrix& entries() const noexcept { return entries_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t dimension() const noexcept { return entries_.rows(); }
  std::size_t genus() const noexcept { return entries_.rows() / 2; }

  /// V - V^T.
  IntMatrix intersection_form() const;

  SeifertMatrix with_name(std::string name) const;

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  SeifertMatrix(IntMatrix entries, std::string name)
      : entries_(std::move(entries)), name_(std::move(name)) {}

  IntMatrix entries_;
  std::string name_;
};

/// Unimodular integer matrix U; columns are the new basis in old coordinates.
class BasisChange {
 public:
  BasisChange() = default;
  /// Throws NotSquare or NotUnimodular.
  explicit BasisChange(IntMatrix u);

  static BasisChange identity(std::size_t n);

  const IntMatrix& matrix() const noexcept { return u_; }
  std::size_t dimension() const noexcept { return u_.rows(); }
  bool is_identity() const { return u_ == IntMatrix::identity(u_.rows()); }

  /// Apply `this` first, then `next`: the composite U = this * next.
  BasisChange then(const BasisChange& next) const;

 private:
  IntMatrix u_;
};

/// Seifert matrix in a symplectic basis a_1, b_1, ..., a_g, b_g, i.e.
/// V - V^T is the standard block form with +1 at (a_i, b_i).
/// Index 2i is a_{i+1}, index 2i+1 is b_{i+1}.
class SymplecticSeifertMatrix {
 public:
  SymplecticSeifertMatrix() = default;
  /// Throws NotSymplectic.
  explicit SymplecticSeifertMatrix(SeifertMatrix v);

  const SeifertMatrix& seifert() const noexcept { return v_; }
  const IntMatrix& entries() const noexcept { return v_.entries(); }
  std::size_t genus() const noexcept { return v_.genus(); }

 private:
  SeifertMatrix v_;
};

/// Standard symplectic form J of size 2g.
IntMatrix standard_symplectic_form(std::size_t genus);

SeifertMatrix validate_seifert(IntMatrix entries, std::string name = {});

/// Block-diagonal sum; the genus adds.
SeifertMatrix connected_sum(const SeifertMatrix& first, const SeifertMatrix& second);

/// U^T V U. Throws DimensionMismatch.
SeifertMatrix basis_change(const SeifertMatrix& v, const BasisChange& u);

/// Integral symplectic Gram-Schmidt on V - V^T. Returns (U^T V U, U).
std::pair<SymplecticSeifertMatrix, BasisChange> symplectic_reduce(const SeifertMatrix& v);

/// Makes every a_i self-pairing odd while keeping the basis symplectic.
std::pair<SymplecticSeifertMatrix, BasisChange> parity_normalize(const SymplecticSeifertMatrix& v);

}  // namespace untwist
