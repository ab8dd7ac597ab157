#pragma once

#include "untwist/integer.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>

namespace untwist {

/// F_p for a prime p < 2^31, elements stored as canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::int64_t;

  static constexpr std::int64_t max_modulus = 2147483647;  // 2^31 - 1

  /// Throws NonPrimeModulus or UnsupportedModulus.
  explicit PrimeField(std::int64_t p);

  std::int64_t modulus() const noexcept { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type from_integer(const Integer& n) const;
  value_type from_int(std::int64_t n) const noexcept {
    const std::int64_t r = n % p_;
    return r < 0 ? r + p_ : r;
  }

  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool is_one(value_type a) const noexcept { return a == 1; }
  value_type add(value_type a, value_type b) const noexcept {
    const value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept {
    const value_type s = a - b;
    return s < 0 ? s + p_ : s;
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept { return (a * b) % p_; }
  /// a must be nonzero.
  value_type inv(value_type a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::int64_t p_;
};

/// Q with exact fractions.
class RationalField {
 public:
  using value_type = Rational;

  std::string name() const { return "Q"; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const Integer& n) const { return Rational(n); }
  value_type from_int(std::int64_t n) const { return Rational(n); }

  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

bool is_prime(std::int64_t n);

/// A coefficient field chosen at run time. Ordered with prime fields by
/// modulus first and the rationals last.
class Field {
 public:
  static Field prime(std::int64_t p) { return Field(PrimeField(p)); }
  static Field rationals() { return Field(RationalField{}); }

  explicit Field(PrimeField f) : impl_(f) {}
  explicit Field(RationalField f) : impl_(f) {}

  bool is_rational() const noexcept { return std::holds_alternative<RationalField>(impl_); }
  /// 0 for the rationals.
  std::int64_t characteristic() const noexcept {
    return is_rational() ? 0 : std::get<PrimeField>(impl_).modulus();
  }
  std::string name() const {
    return std::visit([](const auto& f) { return f.name(); }, impl_);
  }

  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), impl_);
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.characteristic() == b.characteristic();
  }
  friend std::strong_ordering operator<=>(const Field& a, const Field& b) {
    auto key = [](const Field& f) {
      return std::pair{f.is_rational(), f.characteristic()};
    };
    return key(a) <=> key(b);
  }

 private:
  std::variant<PrimeField, RationalField> impl_;
};

}  // namespace untwist
