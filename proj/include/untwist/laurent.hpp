#pragma once

#include "untwist/error.hpp"
#include "untwist/field.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace untwist {

/// Element of K[t, t^-1]: coefficients of t^low, t^(low+1), ...
/// Canonical form: zero is empty with low = 0, otherwise both stored ends nonzero.
template <class K>
class LaurentPoly {
 public:
  using Scalar = typename K::value_type;

  explicit LaurentPoly(K field) : field_(std::move(field)) {}
  LaurentPoly(K field, std::vector<Scalar> coeffs, std::int64_t lowest_exp = 0)
      : field_(std::move(field)), coeffs_(std::move(coeffs)), low_(lowest_exp) {
    canonicalize();
  }

  static LaurentPoly constant(const K& field, Scalar c) { return LaurentPoly(field, {std::move(c)}, 0); }
  static LaurentPoly monomial(const K& field, Scalar c, std::int64_t exp) {
    return LaurentPoly(field, {std::move(c)}, exp);
  }
  static LaurentPoly one(const K& field) { return constant(field, field.one()); }
  static LaurentPoly t(const K& field) { return monomial(field, field.one(), 1); }

  const K& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t lowest_exp() const noexcept { return low_; }
  /// Meaningless for zero.
  std::int64_t highest_exp() const noexcept {
    return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  /// Degree as an element of K[t]; -1 for zero.
  std::int64_t degree() const noexcept { return is_zero() ? -1 : highest_exp(); }
  /// highest - lowest exponent; the degree of the canonical associate.
  std::int64_t span() const noexcept { return is_zero() ? -1 : highest_exp() - low_; }

  Scalar coeff(std::int64_t exp) const {
    if (is_zero() || exp < low_ || exp > highest_exp()) return field_.zero();
    return coeffs_[static_cast<std::size_t>(exp - low_)];
  }
  const Scalar& leading() const { return coeffs_.back(); }

  /// Units of K[t, t^-1] are exactly c t^k.
  bool is_unit() const noexcept { return coeffs_.size() == 1; }
  bool is_polynomial() const noexcept { return is_zero() || low_ >= 0; }

  /// Multiply by t^k.
  LaurentPoly shifted(std::int64_t k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  LaurentPoly scaled(const Scalar& c) const {
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) x = field_.mul(x, c);
    r.canonicalize();
    return r;
  }

  /// Canonical associate: lowest exponent 0 and leading coefficient 1.
  LaurentPoly normalized() const {
    if (is_zero()) return *this;
    return shifted(-low_).scaled(field_.inv(leading()));
  }

  /// The unit u with *this == u * normalized().
  LaurentPoly unit_part() const {
    if (is_zero()) return one(field_);
    return monomial(field_, leading(), low_);
  }

  /// p(t) -> p(1/t).
  LaurentPoly reciprocal() const {
    if (is_zero()) return *this;
    std::vector<Scalar> c(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(field_, std::move(c), -highest_exp());
  }

  Scalar evaluate(const Scalar& x) const {
    // Only used at x != 0 when low < 0.
    Scalar acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    Scalar power = field_.one();
    const Scalar base = low_ >= 0 ? x : field_.inv(x);
    for (std::int64_t i = 0; i < (low_ >= 0 ? low_ : -low_); ++i) power = field_.mul(power, base);
    return field_.mul(acc, power);
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) x = field_.neg(x);
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, true); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    const K& f = a.field_;
    if (a.is_zero() || b.is_zero()) return LaurentPoly(f);
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (f.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return LaurentPoly(f, std::move(c), a.low_ + b.low_);
  }

  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division in K[t]; both operands must be polynomials, b nonzero.
  friend std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
    const K& f = a.field_;
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (!a.is_polynomial() || !b.is_polynomial())
      throw std::domain_error("divmod requires ordinary polynomials");
    if (a.degree() < b.degree()) return {LaurentPoly(f), a};
    auto dense = [&](const LaurentPoly& p) {
      std::vector<Scalar> d(static_cast<std::size_t>(p.low_), f.zero());
      d.insert(d.end(), p.coeffs_.begin(), p.coeffs_.end());
      return d;
    };
    std::vector<Scalar> rem = dense(a);
    const std::vector<Scalar> div = dense(b);
    const std::size_t db = div.size() - 1;
    const Scalar lead_inv = f.inv(div.back());
    std::vector<Scalar> quot(rem.size() - db, f.zero());
    for (std::size_t k = rem.size(); k-- > db;) {
      if (f.is_zero(rem[k])) continue;
      const Scalar q = f.mul(rem[k], lead_inv);
      quot[k - db] = q;
      for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = f.sub(rem[k - db + j], f.mul(q, div[j]));
    }
    rem.resize(db);
    return {LaurentPoly(f, std::move(quot), 0), LaurentPoly(f, std::move(rem), 0)};
  }

  /// Divisibility in K[t, t^-1] (units ignored).
  friend bool divides(const LaurentPoly& d, const LaurentPoly& n) {
    if (d.is_zero()) return n.is_zero();
    if (n.is_zero()) return true;
    return divmod(n.shifted(-n.low_), d.shifted(-d.low_)).second.is_zero();
  }

  /// Monic gcd in K[t, t^-1], normalized; gcd(0, 0) = 0.
  friend LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
    a = a.normalized();
    b = b.normalized();
    while (!b.is_zero()) {
      LaurentPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.normalized();
  }

  /// Human-readable form in the variable t, e.g. "2 + 2*t^2" or "t^-1 + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (field_.is_zero(coeffs_[i])) continue;
      const std::int64_t e = low_ + static_cast<std::int64_t>(i);
      std::ostringstream cs;
      cs << coeffs_[i];
      std::string c = cs.str();
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (!first) os << (negative ? " - " : " + ");
      else if (negative) os << "-";
      first = false;
      if (e == 0) {
        os << c;
        continue;
      }
      if (c != "1") os << c << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    const K& f = a.field_;
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    const std::int64_t low = std::min(a.low_, b.low_);
    const std::int64_t high = std::max(a.highest_exp(), b.highest_exp());
    std::vector<Scalar> c(static_cast<std::size_t>(high - low + 1), f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[static_cast<std::size_t>(a.low_ - low) + i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      auto& slot = c[static_cast<std::size_t>(b.low_ - low) + i];
      slot = subtract ? f.sub(slot, b.coeffs_[i]) : f.add(slot, b.coeffs_[i]);
    }
    return LaurentPoly(f, std::move(c), low);
  }

  void canonicalize() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && field_.is_zero(coeffs_[lead])) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<std::int64_t>(lead);
    }
  }

  K field_;
  std::vector<Scalar> coeffs_;
  std::int64_t low_ = 0;
};

/// Rectangular matrix over K[t, t^-1].
template <class K>
class LaurentMatrix {
 public:
  using Poly = LaurentPoly<K>;

  LaurentMatrix(K field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Poly(field_)) {}

  static LaurentMatrix identity(const K& field, std::size_t n) {
    LaurentMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::one(field);
    return m;
  }

  const K& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (r != c && !(*this)(r, c).is_zero()) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  /// row[dst] += q * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Poly& q) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(src, c).is_zero()) (*this)(dst, c) += q * (*this)(src, c);
  }
  /// col[dst] += q * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Poly& q) {
    for (std::size_t r = 0; r < rows_; ++r)
      if (!(*this)(r, src).is_zero()) (*this)(r, dst) += (*this)(r, src) * q;
  }
  void scale_row(std::size_t r, const Poly& u) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) *= u;
  }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    if (!(a.field_ == b.field_)) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
    LaurentMatrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Poly& x = a(r, k);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
      }
    return m;
  }

  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  K field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> data_;
};

/// D = A * M * B with D diagonal, d_i | d_{i+1}, nonzero diagonal entries
/// normalized (lowest exponent 0, monic) and zeros last; A and B invertible.
template <class K>
struct SmithForm {
  LaurentMatrix<K> diagonal;
  LaurentMatrix<K> left;
  LaurentMatrix<K> right;

  std::vector<LaurentPoly<K>> diagonal_entries() const {
    std::vector<LaurentPoly<K>> d;
    for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i) d.push_back(diagonal(i, i));
    return d;
  }
};

template <class K>
SmithForm<K> smith_normal_form(const LaurentMatrix<K>& input) {
  using Poly = LaurentPoly<K>;
  const K& f = input.field();
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  LaurentMatrix<K> d = input;
  LaurentMatrix<K> a = LaurentMatrix<K>::identity(f, m);
  LaurentMatrix<K> b = LaurentMatrix<K>::identity(f, n);

  // Clear negative exponents row by row so the work happens in K[t].
  for (std::size_t r = 0; r < m; ++r) {
    std::int64_t low = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (!d(r, c).is_zero()) low = std::min(low, d(r, c).lowest_exp());
    if (low < 0) {
      const Poly shift = Poly::monomial(f, f.one(), -low);
      d.scale_row(r, shift);
      a.scale_row(r, shift);
    }
  }

  const std::size_t steps = std::min(m, n);
  for (std::size_t s = 0; s < steps; ++s) {
    while (true) {
      // Pivot: nonzero entry of minimal degree, ties broken in row-major order.
      std::size_t pr = m, pc = n;
      for (std::size_t r = s; r < m; ++r)
        for (std::size_t c = s; c < n; ++c)
          if (!d(r, c).is_zero() && (pr == m || d(r, c).degree() < d(pr, pc).degree())) {
            pr = r;
            pc = c;
          }
      if (pr == m) break;
      d.swap_rows(s, pr);
      a.swap_rows(s, pr);
      d.swap_cols(s, pc);
      b.swap_cols(s, pc);

      bool clean = true;
      for (std::size_t r = s + 1; r < m; ++r) {
        if (d(r, s).is_zero()) continue;
        auto [q, rem] = divmod(d(r, s), d(s, s));
        d.add_row_multiple(r, s, -q);
        a.add_row_multiple(r, s, -q);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t c = s + 1; c < n; ++c) {
        if (d(s, c).is_zero()) continue;
        auto [q, rem] = divmod(d(s, c), d(s, s));
        d.add_col_multiple(c, s, -q);
        b.add_col_multiple(c, s, -q);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the submatrix; otherwise fold the
      // offending row in and go again.
      std::size_t bad = m;
      for (std::size_t r = s + 1; r < m && bad == m; ++r)
        for (std::size_t c = s + 1; c < n; ++c)
          if (!d(r, c).is_zero() && !divmod(d(r, c), d(s, s)).second.is_zero()) {
            bad = r;
            break;
          }
      if (bad == m) break;
      const Poly unit = Poly::one(f);
      d.add_row_multiple(s, bad, unit);
      a.add_row_multiple(s, bad, unit);
    }
  }

  // Normalize diagonal entries by units of the Laurent ring.
  for (std::size_t i = 0; i < steps; ++i) {
    const Poly& x = d(i, i);
    if (x.is_zero()) continue;
    const Poly inverse_unit =
        Poly::monomial(f, f.inv(x.leading()), -x.lowest_exp());
    d.scale_row(i, inverse_unit);
    a.scale_row(i, inverse_unit);
  }
  return {std::move(d), std::move(a), std::move(b)};
}

/// Exact determinant over K[t, t^-1] by fraction-free elimination.
template <class K>
LaurentPoly<K> determinant(const LaurentMatrix<K>& input) {
  using Poly = LaurentPoly<K>;
  const K& f = input.field();
  if (input.rows() != input.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return Poly::one(f);
  LaurentMatrix<K> a = input;
  std::int64_t shift = 0;
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t low = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (!a(r, c).is_zero()) low = std::min(low, a(r, c).lowest_exp());
    if (low < 0) {
      a.scale_row(r, Poly::monomial(f, f.one(), -low));
      shift += low;
    }
  }
  bool negate = false;
  Poly prev = Poly::one(f);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return Poly(f);
      a.swap_rows(k, swap);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = divmod(num, prev).first;
      }
      a(i, k) = Poly(f);
    }
    prev = a(k, k);
  }
  Poly det = a(n - 1, n - 1).shifted(shift);
  return negate ? -det : det;
}

}  // namespace untwist
