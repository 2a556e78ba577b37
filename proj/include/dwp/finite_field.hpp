#pragma once

// Finite fields F_{p^e} = F_p[t]/(f) and square matrices over them, enough
// to test tr(A^p) = tr(A)^p in characteristic p.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dwp/error.hpp"

namespace dwp {

inline constexpr std::size_t kMaxExtensionDegree = 12;
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// Coefficients of a polynomial in t, constant term first.
struct FqElem {
  std::array<std::uint32_t, kMaxExtensionDegree> c{};
  bool operator==(const FqElem&) const = default;
};

namespace poly {

using Coeffs = std::vector<std::uint32_t>;  // constant term first

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a by a monic divisor over F_p.
inline Coeffs mod_monic(Coeffs a, const Coeffs& divisor, std::uint32_t p) {
  const std::size_t d = divisor.size() - 1;
  trim(a);
  while (a.size() > d) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - d;
    for (std::size_t j = 0; j < d; ++j) {
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - lead) * divisor[j] % p) % p);
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  if (e == 0) return false;
  for (std::size_t d = 1; d <= e / 2; ++d) {
    Coeffs divisor(d + 1, 0);
    divisor[d] = 1;
    while (true) {
      if (mod_monic(f, divisor, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++divisor[i] == p) divisor[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

}  // namespace poly

class FqField {
 public:
  /// Modulus is the lexicographically smallest monic irreducible of degree e,
  /// comparing coefficient lists from the constant term up.
  static FqField make(std::uint32_t p, std::size_t e) {
    check_params(p, e);
    poly::Coeffs f(e + 1, 0);
    f[e] = 1;
    // Odometer with the constant term most significant.
    while (true) {
      if (poly::is_irreducible(f, p)) return FqField(p, e, f);
      std::size_t i = e;
      while (i-- > 0) {
        if (++f[i] < p) break;
        f[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
    throw Error(ErrorKind::BadInput, "no irreducible polynomial found");
  }

  static FqField with_modulus(std::uint32_t p, poly::Coeffs modulus) {
    if (modulus.size() < 2 || modulus.back() != 1) throw Error(ErrorKind::BadInput, "modulus must be monic of degree >= 1");
    check_params(p, modulus.size() - 1);
    for (auto c : modulus)
      if (c >= p) throw Error(ErrorKind::BadInput, "modulus coefficient out of range");
    if (!poly::is_irreducible(modulus, p)) throw Error(ErrorKind::BadInput, "modulus is reducible");
    return FqField(p, modulus.size() - 1, std::move(modulus));
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::size_t degree() const noexcept { return e_; }
  std::uint64_t order() const noexcept { return order_; }
  const poly::Coeffs& modulus() const noexcept { return modulus_; }
  bool operator==(const FqField& o) const noexcept { return p_ == o.p_ && modulus_ == o.modulus_; }

  FqElem zero() const noexcept { return {}; }
  FqElem one() const noexcept { return from_int(1); }
  FqElem from_int(std::uint64_t v) const noexcept {
    FqElem r;
    r.c[0] = static_cast<std::uint32_t>(v % p_);
    return r;
  }
  /// Base-p digits of index, lowest digit = constant term. Bijective on [0, order).
  FqElem from_index(std::uint64_t index) const noexcept {
    FqElem r;
    for (std::size_t i = 0; i < e_; ++i, index /= p_) r.c[i] = static_cast<std::uint32_t>(index % p_);
    return r;
  }
  std::uint64_t index(const FqElem& a) const noexcept {
    std::uint64_t v = 0;
    for (std::size_t i = e_; i-- > 0;) v = v * p_ + a.c[i];
    return v;
  }
  bool is_zero(const FqElem& a) const noexcept { return a == FqElem{}; }

  FqElem add(const FqElem& a, const FqElem& b) const noexcept {
    FqElem r;
    for (std::size_t i = 0; i < e_; ++i) r.c[i] = static_cast<std::uint32_t>((std::uint64_t{a.c[i]} + b.c[i]) % p_);
    return r;
  }
  FqElem neg(const FqElem& a) const noexcept {
    FqElem r;
    for (std::size_t i = 0; i < e_; ++i) r.c[i] = a.c[i] == 0 ? 0 : p_ - a.c[i];
    return r;
  }
  FqElem sub(const FqElem& a, const FqElem& b) const noexcept { return add(a, neg(b)); }

  FqElem mul(const FqElem& a, const FqElem& b) const noexcept {
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
    for (std::size_t i = 0; i < e_; ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % p_;
    }
    for (std::size_t i = 2 * e_ - 1; i-- > e_;) {
      std::uint64_t lead = prod[i];
      if (lead == 0) continue;
      for (std::size_t j = 0; j < e_; ++j) {
        prod[i - e_ + j] = (prod[i - e_ + j] + (p_ - lead) * modulus_[j]) % p_;
      }
      prod[i] = 0;
    }
    FqElem r;
    for (std::size_t i = 0; i < e_; ++i) r.c[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
  }

  FqElem pow(FqElem a, std::uint64_t n) const noexcept {
    FqElem acc = one();
    while (n != 0) {
      if (n & 1U) acc = mul(acc, a);
      a = mul(a, a);
      n >>= 1U;
    }
    return acc;
  }

  FqElem inv(const FqElem& a) const {
    if (is_zero(a)) throw Error(ErrorKind::BadInput, "zero has no inverse");
    return pow(a, order_ - 2);
  }

  FqElem frobenius(const FqElem& a) const noexcept { return pow(a, p_); }

  std::string to_string(const FqElem& a) const {
    std::string out;
    for (std::size_t i = e_; i-- > 0;) {
      if (a.c[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0 || a.c[i] != 1) out += std::to_string(a.c[i]);
      if (i >= 1) out += "t";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  FqField(std::uint32_t p, std::size_t e, poly::Coeffs modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
    order_ = 1;
    for (std::size_t i = 0; i < e_; ++i) order_ *= p_;
  }

  static void check_params(std::uint32_t p, std::size_t e) {
    std::uint64_t pp = p;
    bool prime = pp >= 2;
    for (std::uint64_t d = 2; prime && d * d <= pp; ++d) prime = pp % d != 0;
    if (!prime) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (e < 1 || e > kMaxExtensionDegree) throw Error(ErrorKind::DegreeTooLarge, "extension degree must be in 1..12");
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < e; ++i) {
      q *= pp;
      if (q > kMaxFieldOrder) throw Error(ErrorKind::DegreeTooLarge, "field order exceeds 2^20");
    }
  }

  std::uint32_t p_;
  std::size_t e_;
  poly::Coeffs modulus_;
  std::uint64_t order_ = 0;
};

inline FqField field_make(std::uint32_t p, std::size_t e) { return FqField::make(p, e); }

class FqMatrix {
 public:
  FqMatrix(FqField field, std::size_t dim) : field_(std::move(field)), dim_(dim), entries_(dim * dim) {}

  static FqMatrix identity(const FqField& field, std::size_t dim) {
    FqMatrix m(field, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = field.one();
    return m;
  }

  static FqMatrix from_ints(const FqField& field, const std::vector<std::vector<std::uint64_t>>& rows) {
    FqMatrix m(field, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw Error(ErrorKind::DimMismatch, "matrix must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  template <class Rng>
  static FqMatrix random(const FqField& field, std::size_t dim, Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, field.order() - 1);
    FqMatrix m(field, dim);
    for (auto& x : m.entries_) x = field.from_index(pick(rng));
    return m;
  }

  const FqField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  FqElem& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const FqElem& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  bool operator==(const FqMatrix& o) const { return field_ == o.field_ && dim_ == o.dim_ && entries_ == o.entries_; }

 private:
  FqField field_;
  std::size_t dim_;
  std::vector<FqElem> entries_;
};

inline FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimMismatch, "matrix dimensions differ");
  const auto& f = a.field();
  const std::size_t n = a.dim();
  FqMatrix c(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
    }
  return c;
}

inline FqMatrix mat_pow(FqMatrix a, std::uint64_t n) {
  FqMatrix acc = FqMatrix::identity(a.field(), a.dim());
  while (n != 0) {
    if (n & 1U) acc = mat_mul(acc, a);
    n >>= 1U;
    if (n != 0) a = mat_mul(a, a);
  }
  return acc;
}

inline FqElem trace(const FqMatrix& a) {
  FqElem t = a.field().zero();
  for (std::size_t i = 0; i < a.dim(); ++i) t = a.field().add(t, a(i, i));
  return t;
}

/// Gauss-Jordan; nullopt when singular.
inline std::optional<FqMatrix> mat_inverse(const FqMatrix& a) {
  const auto& f = a.field();
  const std::size_t n = a.dim();
  FqMatrix work = a;
  FqMatrix inv = FqMatrix::identity(f, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && f.is_zero(work(pivot, col))) ++pivot;
    if (pivot == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(work(col, j), work(pivot, j));
      std::swap(inv(col, j), inv(pivot, j));
    }
    FqElem scale = f.inv(work(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) = f.mul(work(col, j), scale);
      inv(col, j) = f.mul(inv(col, j), scale);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || f.is_zero(work(r, col))) continue;
      FqElem factor = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) = f.sub(work(r, j), f.mul(factor, work(col, j)));
        inv(r, j) = f.sub(inv(r, j), f.mul(factor, inv(col, j)));
      }
    }
  }
  return inv;
}

struct FrobeniusReport {
  std::uint32_t p = 0;
  std::size_t e = 0;
  std::size_t dim = 0;
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;          // tr(A^p) == tr(A)^p
  std::uint64_t iterated_checks = 0; // tr(A^(p^k)) == tr(A)^(p^k), k = 1..max_k
  std::uint64_t iterated_passed = 0;
  unsigned max_k = 0;

  bool ok() const noexcept { return passed == trials && iterated_passed == iterated_checks; }
};

inline FrobeniusReport frobenius_trace_check(const FqField& field, std::size_t dim, std::uint64_t trials,
                                             std::uint64_t seed = 0x5eed, unsigned max_k = 3) {
  if (trials < 1) throw Error(ErrorKind::BadInput, "trials must be at least 1");
  if (dim < 1) throw Error(ErrorKind::DimMismatch, "dimension must be at least 1");
  FrobeniusReport report{field.characteristic(), field.degree(), dim, trials, 0, 0, 0, max_k};
  std::mt19937_64 rng(seed);
  const std::uint64_t p = field.characteristic();
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    auto a = FqMatrix::random(field, dim, rng);
    auto tr = trace(a);
    auto powered = a;
    auto tr_powered = tr;
    for (unsigned k = 1; k <= max_k; ++k) {
      powered = mat_pow(powered, p);  // A^(p^k)
      tr_powered = field.frobenius(tr_powered);
      bool holds = trace(powered) == tr_powered;
      if (k == 1 && holds) ++report.passed;
      ++report.iterated_checks;
      if (holds) ++report.iterated_passed;
    }
    if (max_k == 0 && trace(mat_pow(a, p)) == field.frobenius(tr)) ++report.passed;
  }
  return report;
}

}  // namespace dwp
