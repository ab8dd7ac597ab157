#pragma once

// Reference computations kept apart from the library's elimination code:
// Leibniz determinants, factorization over F_p, and ranks over F_p[t]/(q).

#include "untwist/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace untwist::oracle {

/// Sum over permutations. Fine for n <= 6.
template <class K>
LaurentPoly<K> leibniz_det(const LaurentMatrix<K>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly<K> total(m.field());
  do {
    LaurentPoly<K> term = LaurentPoly<K>::one(m.field());
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Integer Seifert determinant det(V - tV^T) by Leibniz over Z[t] (dense coefficient vectors).
inline std::vector<Integer> leibniz_alexander(const IntMatrix& v) {
  const std::size_t n = v.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Integer> total(n + 1);
  do {
    std::vector<Integer> term{1};
    for (std::size_t i = 0; i < n; ++i) {
      const Integer c0 = v(i, perm[i]);
      const Integer c1 = -v(perm[i], i);
      std::vector<Integer> next(term.size() + 1);
      for (std::size_t k = 0; k < term.size(); ++k) {
        next[k] += term[k] * c0;
        next[k + 1] += term[k] * c1;
      }
      term = std::move(next);
    }
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    for (std::size_t k = 0; k < term.size(); ++k) total[k] += inversions % 2 ? -term[k] : term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

using FpPoly = LaurentPoly<PrimeField>;

inline FpPoly mod(const FpPoly& a, const FpPoly& q) { return divmod(a, q).second; }

inline FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly& q) {
  FpPoly result = FpPoly::one(q.field());
  base = mod(base, q);
  while (e > 0) {
    if (e & 1) result = mod(result * base, q);
    base = mod(base * base, q);
    e >>= 1;
  }
  return result;
}

inline FpPoly derivative(const FpPoly& f) {
  const PrimeField& k = f.field();
  std::vector<std::int64_t> c;
  for (std::int64_t e = 1; e <= f.degree(); ++e) c.push_back(k.mul(f.coeff(e), k.from_int(e)));
  return FpPoly(k, std::move(c), 0);
}

/// Distinct monic irreducible non-unit factors over F_p[t, t^-1] (t is a unit).
inline std::vector<FpPoly> irreducible_factors(FpPoly f, std::mt19937_64& rng) {
  const PrimeField& k = f.field();
  const std::int64_t p = k.modulus();
  f = f.normalized();
  std::vector<FpPoly> out;
  if (f.degree() <= 0) return out;

  // Squarefree support: f / gcd(f, f'); if f' = 0 then f(t) = g(t)^p.
  const FpPoly df = derivative(f);
  if (df.is_zero()) {
    std::vector<std::int64_t> c;
    for (std::int64_t e = 0; e <= f.degree(); e += p) c.push_back(f.coeff(e));
    return irreducible_factors(FpPoly(k, std::move(c), 0), rng);
  }
  const FpPoly g = gcd(f, df);
  std::vector<FpPoly> parts{divmod(f, g).first.normalized()};
  if (g.degree() > 0) {
    for (auto& x : irreducible_factors(g, rng)) parts.push_back(x);
  }

  const FpPoly t = FpPoly::t(k);
  auto split_equal_degree = [&](auto&& self, const FpPoly& h, std::int64_t d) -> void {
    if (h.degree() == d) {
      out.push_back(h.normalized());
      return;
    }
    std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
    while (true) {
      std::vector<std::int64_t> c;
      for (std::int64_t i = 0; i < h.degree(); ++i) c.push_back(coeff(rng));
      const FpPoly a(k, std::move(c), 0);
      if (a.degree() <= 0) continue;
      FpPoly b(k);
      if (p == 2) {
        FpPoly power = mod(a, h);
        b = power;
        for (std::int64_t i = 1; i < d; ++i) {
          power = mod(power * power, h);
          b = b + power;
        }
      } else {
        std::uint64_t q = 1;
        for (std::int64_t i = 0; i < d; ++i) q *= static_cast<std::uint64_t>(p);
        b = powmod(a, (q - 1) / 2, h) - FpPoly::one(k);
      }
      const FpPoly factor = gcd(h, b);
      if (factor.degree() > 0 && factor.degree() < h.degree()) {
        self(self, factor, d);
        self(self, divmod(h, factor).first.normalized(), d);
        return;
      }
    }
  };

  for (FpPoly h : parts) {
    FpPoly frob = t;  // t^(p^d) mod h
    for (std::int64_t d = 1; h.degree() > 0; ++d) {
      if (2 * d > h.degree()) {
        split_equal_degree(split_equal_degree, h, h.degree());
        break;
      }
      frob = powmod(frob, static_cast<std::uint64_t>(p), h);
      const FpPoly part = gcd(h, frob - t);
      if (part.degree() > 0) {
        split_equal_degree(split_equal_degree, part, d);
        h = divmod(h, part).first.normalized();
        frob = mod(frob, h);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a.coeffs() < b.coeffs();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// (gcd, s) with s*a = gcd mod q.
inline FpPoly inverse_mod(const FpPoly& a, const FpPoly& q) {
  const PrimeField& k = q.field();
  FpPoly r0 = q, r1 = mod(a, q);
  FpPoly s0(k), s1 = FpPoly::one(k);
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    FpPoly s2 = s0 - quot * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant when a is invertible.
  return mod(s0.scaled(k.inv(r0.coeffs().front())), q);
}

/// Rank of M over the field F_p[t]/(q), q irreducible and q != t.
inline std::size_t rank_mod(const LaurentMatrix<PrimeField>& input, const FpPoly& q) {
  const PrimeField& k = q.field();
  const std::size_t rows = input.rows(), cols = input.cols();
  std::vector<std::vector<FpPoly>> a(rows, std::vector<FpPoly>(cols, FpPoly(k)));
  const FpPoly t_inv = inverse_mod(FpPoly::t(k), q);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const FpPoly& x = input(r, c);
      if (x.is_zero()) continue;
      const std::int64_t low = x.lowest_exp();
      FpPoly v = mod(x.shifted(-low), q);
      const FpPoly unit = low >= 0 ? powmod(FpPoly::t(k), static_cast<std::uint64_t>(low), q)
                                   : powmod(t_inv, static_cast<std::uint64_t>(-low), q);
      a[r][c] = mod(v * unit, q);
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const FpPoly inv = inverse_mod(a[rank][c], q);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      const FpPoly f = mod(a[r][c] * inv, q);
      for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] = mod(a[r][cc] - f * a[rank][cc], q);
    }
    ++rank;
  }
  return rank;
}

/// gcd of all r x r minors (0 if all vanish), via Leibniz.
inline FpPoly minors_gcd(const LaurentMatrix<PrimeField>& m, std::size_t r) {
  const PrimeField& k = m.field();
  FpPoly g(k);
  std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
  std::fill(rsel.end() - static_cast<std::ptrdiff_t>(r), rsel.end(), true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.end() - static_cast<std::ptrdiff_t>(r), csel.end(), true);
    do {
      LaurentMatrix<PrimeField> sub(k, r, r);
      for (std::size_t i = 0, si = 0; i < m.rows(); ++i) {
        if (!rsel[i]) continue;
        for (std::size_t j = 0, sj = 0; j < m.cols(); ++j)
          if (csel[j]) sub(si, sj++) = m(i, j);
        ++si;
      }
      g = gcd(g, leibniz_det(sub));
    } while (std::next_permutation(csel.begin(), csel.end()));
  } while (std::next_permutation(rsel.begin(), rsel.end()));
  return g;
}

/// Minimal number of generators of the cokernel-side invariant factors:
/// max over irreducible q != t of (#diagonal entries) - rank over F_p[t]/(q).
inline std::size_t module_rank_by_extension(const LaurentMatrix<PrimeField>& m, std::mt19937_64& rng) {
  const PrimeField& k = m.field();
  const std::size_t diag = std::min(m.rows(), m.cols());
  std::size_t generic = 0;
  FpPoly divisor = FpPoly::one(k);
  for (std::size_t r = diag; r > 0; --r) {
    FpPoly g = minors_gcd(m, r);
    if (!g.is_zero()) {
      generic = r;
      divisor = g;
      break;
    }
  }
  std::vector<FpPoly> candidates = irreducible_factors(divisor, rng);
  if (generic < diag)  // zero invariant factors: any q counts them
    candidates.push_back(FpPoly(k, {k.neg(k.one()), k.one()}, 0));
  std::size_t best = 0;
  for (const auto& q : candidates) best = std::max(best, diag - rank_mod(m, q));
  return best;
}

}  // namespace untwist::oracle
