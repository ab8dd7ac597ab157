#include "untwist/seifert.hpp"

#include "untwist/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <numeric>
#include <vector>

namespace untwist {

namespace {

bool is_odd(const Integer& n) { return boost::multiprecision::bit_test(abs(n), 0); }

std::string dim_string(const IntMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

SeifertMatrix SeifertMatrix::validate(IntMatrix entries, std::string name) {
  if (!entries.is_square())
    throw Error(ErrorCode::NotSquare, "Seifert matrix must be square, got " + dim_string(entries));
  if (entries.rows() % 2 != 0)
    throw Error(ErrorCode::OddDimension,
                "Seifert matrix dimension must be even, got " + std::to_string(entries.rows()));
  const Integer det = (entries - entries.transpose()).determinant();
  if (det != 1)
    throw Error(ErrorCode::NonUnimodularIntersection,
                "det(V - V^T) = " + det.str() + ", expected 1");
  return SeifertMatrix(std::move(entries), std::move(name));
}

IntMatrix SeifertMatrix::intersection_form() const { return entries_ - entries_.transpose(); }

SeifertMatrix SeifertMatrix::with_name(std::string name) const {
  return SeifertMatrix(entries_, std::move(name));
}

BasisChange::BasisChange(IntMatrix u) : u_(std::move(u)) {
  if (!u_.is_square()) throw Error(ErrorCode::NotSquare, "basis change must be square");
  const Integer det = u_.determinant();
  if (det != 1 && det != -1)
    throw Error(ErrorCode::NotUnimodular, "basis change has determinant " + det.str());
}

BasisChange BasisChange::identity(std::size_t n) { return BasisChange(IntMatrix::identity(n)); }

BasisChange BasisChange::then(const BasisChange& next) const {
  return BasisChange(u_ * next.u_);
}

SymplecticSeifertMatrix::SymplecticSeifertMatrix(SeifertMatrix v) : v_(std::move(v)) {
  if (v_.intersection_form() != standard_symplectic_form(v_.genus()))
    throw Error(ErrorCode::NotSymplectic, "V - V^T is not the standard symplectic form");
}

IntMatrix standard_symplectic_form(std::size_t genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

SeifertMatrix validate_seifert(IntMatrix entries, std::string name) {
  return SeifertMatrix::validate(std::move(entries), std::move(name));
}

SeifertMatrix connected_sum(const SeifertMatrix& first, const SeifertMatrix& second) {
  std::string name;
  if (!first.name().empty() || !second.name().empty())
    name = (first.name().empty() ? "?" : first.name()) + " # " +
           (second.name().empty() ? "?" : second.name());
  return SeifertMatrix::validate(first.entries().direct_sum(second.entries()), std::move(name));
}

SeifertMatrix basis_change(const SeifertMatrix& v, const BasisChange& u) {
  if (u.dimension() != v.dimension())
    throw Error(ErrorCode::DimensionMismatch,
                "basis change of size " + std::to_string(u.dimension()) +
                    " applied to Seifert matrix of size " + std::to_string(v.dimension()));
  const IntMatrix& m = u.matrix();
  return SeifertMatrix::validate(m.transpose() * v.entries() * m, v.name());
}

std::pair<SymplecticSeifertMatrix, BasisChange> symplectic_reduce(const SeifertMatrix& v) {
  const std::size_t n = v.dimension();
  const IntMatrix form = v.intersection_form();

  // Working basis: each vector in original coordinates.
  std::vector<std::vector<Integer>> basis(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;

  auto pairing = [&](const std::vector<Integer>& x, const std::vector<Integer>& y) {
    Integer s = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (x[r] == 0) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (y[c] != 0) s += x[r] * form(r, c) * y[c];
    }
    return s;
  };
  auto axpy = [&](std::vector<Integer>& y, const Integer& q, const std::vector<Integer>& x) {
    for (std::size_t r = 0; r < n; ++r) y[r] += q * x[r];
  };

  for (std::size_t start = 0; start < n; start += 2) {
    const auto& a = basis[start];
    std::vector<Integer> row(n);
    for (std::size_t j = start + 1; j < n; ++j) row[j] = pairing(a, basis[j]);

    // Euclid on the pairings of a with the remaining vectors until one is left.
    while (true) {
      std::size_t pivot = n;
      std::size_t nonzero = 0;
      for (std::size_t j = start + 1; j < n; ++j) {
        if (row[j] == 0) continue;
        ++nonzero;
        if (pivot == n || abs(row[j]) < abs(row[pivot])) pivot = j;
      }
      if (pivot == n)
        throw Error(ErrorCode::NonUnimodularIntersection, "intersection form is degenerate");
      if (nonzero == 1) {
        if (pivot != start + 1) {
          std::swap(basis[pivot], basis[start + 1]);
          std::swap(row[pivot], row[start + 1]);
        }
        break;
      }
      for (std::size_t j = start + 1; j < n; ++j) {
        if (j == pivot || row[j] == 0) continue;
        const Integer q = row[j] / row[pivot];
        if (q == 0) continue;
        axpy(basis[j], -q, basis[pivot]);
        row[j] -= q * row[pivot];
      }
    }
    if (abs(row[start + 1]) != 1)
      throw Error(ErrorCode::NonUnimodularIntersection, "intersection form is not unimodular");
    if (row[start + 1] < 0)
      for (auto& x : basis[start + 1]) x = -x;

    // Clear the remaining vectors against the new pair (a, b):
    // w <- w - <w,b> a  (w is already orthogonal to a).
    const auto& b = basis[start + 1];
    for (std::size_t j = start + 2; j < n; ++j) {
      const Integer wb = pairing(basis[j], b);
      if (wb != 0) axpy(basis[j], -wb, a);
    }
  }

  IntMatrix u(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) u(r, c) = basis[c][r];
  BasisChange change(std::move(u));
  return {SymplecticSeifertMatrix(basis_change(v, change)), change};
}

std::pair<SymplecticSeifertMatrix, BasisChange> parity_normalize(const SymplecticSeifertMatrix& v) {
  const std::size_t n = v.seifert().dimension();
  const IntMatrix& m = v.entries();
  IntMatrix u = IntMatrix::identity(n);
  for (std::size_t i = 0; i < v.genus(); ++i) {
    const std::size_t a = 2 * i;
    const std::size_t b = a + 1;
    if (is_odd(m(a, a))) continue;
    if (is_odd(m(b, b))) {
      // a -> b, b -> -a keeps <a, b> = +1.
      u(a, a) = 0;
      u(b, a) = 1;
      u(a, b) = -1;
      u(b, b) = 0;
    } else {
      // a -> a + b; V(a+b, a+b) = V(a,a) + V(b,b) + <a,b> + 2V(b,a), which is odd.
      u(b, a) = 1;
    }
  }
  BasisChange change(std::move(u));
  return {SymplecticSeifertMatrix(basis_change(v.seifert(), change)), change};
}

}  // namespace untwist
