#pragma once

// Small finite fields GF(q) as lookup tables: any prime q, plus the prime
// powers 4, 8 and 9 built from x²+x+1, x³+x+1 (over GF(2)) and x²+1 (over
// GF(3)). Elements are integers 0..q-1; for prime powers the base-p digits
// are the polynomial coefficients, lowest degree first.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lpack/errors.hpp"

namespace lpack {

using FieldElement = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

class GaloisField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1024;

  explicit GaloisField(std::uint32_t q) : q_(q) {
    std::vector<std::uint32_t> modulus;  // monic irreducible, low degree first
    if (q <= kMaxOrder && is_prime(q)) {
      p_ = q;
      m_ = 1;
    } else if (q == 4) {
      p_ = 2, m_ = 2, modulus = {1, 1, 1};
    } else if (q == 8) {
      p_ = 2, m_ = 3, modulus = {1, 1, 0, 1};
    } else if (q == 9) {
      p_ = 3, m_ = 2, modulus = {1, 0, 1};
    } else {
      throw input_error("unsupported field order q = " + std::to_string(q) +
                        "; supported: primes up to " + std::to_string(kMaxOrder) + " and 4, 8, 9");
    }
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        if (m_ == 1) {
          add_[a * q_ + b] = (a + b) % q_;
          mul_[a * q_ + b] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % q_);
        } else {
          add_[a * q_ + b] = from_digits(poly_add(digits(a), digits(b)));
          mul_[a * q_ + b] = from_digits(poly_mul_mod(digits(a), digits(b), modulus));
        }
      }
    }
    inv_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) {
      for (std::uint32_t b = 1; b < q_; ++b) {
        if (mul(a, b) == 1) inv_[a] = b;
      }
    }
  }

  [[nodiscard]] std::uint32_t order() const { return q_; }
  [[nodiscard]] std::uint32_t characteristic() const { return p_; }
  [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const { return add_[a * q_ + b]; }
  [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const { return mul_[a * q_ + b]; }
  [[nodiscard]] FieldElement inv(FieldElement a) const {
    if (a == 0) throw input_error("zero has no inverse");
    return inv_[a];
  }

 private:
  [[nodiscard]] std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }
  [[nodiscard]] std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (std::uint32_t i = m_; i-- > 0;) a = a * p_ + d[i];
    return a;
  }
  [[nodiscard]] std::vector<std::uint32_t> poly_add(const std::vector<std::uint32_t>& x,
                                                    const std::vector<std::uint32_t>& y) const {
    std::vector<std::uint32_t> out(m_);
    for (std::uint32_t i = 0; i < m_; ++i) out[i] = (x[i] + y[i]) % p_;
    return out;
  }
  [[nodiscard]] std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& x,
                                                        const std::vector<std::uint32_t>& y,
                                                        const std::vector<std::uint32_t>& modulus) const {
    std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
      for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    // Reduce the top coefficients using x^m = -(lower terms of the modulus).
    for (std::uint32_t deg = 2 * m_ - 2; deg >= m_; --deg) {
      const std::uint32_t lead = prod[deg];
      prod[deg] = 0;
      for (std::uint32_t i = 0; i < m_; ++i) {
        prod[deg - m_ + i] = (prod[deg - m_ + i] + (p_ - modulus[i]) % p_ * lead) % p_;
      }
    }
    prod.resize(m_);
    return prod;
  }

  std::uint32_t q_;
  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::vector<FieldElement> add_;
  std::vector<FieldElement> mul_;
  std::vector<FieldElement> inv_;
};

// Canonical representative of a projective point: first nonzero coordinate is 1.
struct ProjectivePoint {
  std::vector<FieldElement> coords;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

inline ProjectivePoint normalize_point(const GaloisField& f, std::vector<FieldElement> coords) {
  FieldElement lead = 0;
  for (FieldElement x : coords) {
    if (x != 0) {
      lead = x;
      break;
    }
  }
  if (lead == 0) throw input_error("the zero vector is not a projective point");
  const FieldElement scale = f.inv(lead);
  for (auto& x : coords) x = f.mul(x, scale);
  return {std::move(coords)};
}

inline FieldElement inner_product(const GaloisField& f, const ProjectivePoint& a, const ProjectivePoint& b) {
  FieldElement acc = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) acc = f.add(acc, f.mul(a.coords[i], b.coords[i]));
  return acc;
}

// All points of the projective space of vectors of the given length, in
// lexicographic order of their canonical coordinates.
inline std::vector<ProjectivePoint> projective_points(const GaloisField& f, std::size_t length) {
  std::vector<ProjectivePoint> out;
  std::vector<FieldElement> v(length, 0);
  const FieldElement q = f.order();
  while (true) {
    // Increment v as a base-q number, last coordinate least significant.
    std::size_t i = length;
    while (i > 0 && v[i - 1] == q - 1) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
    auto first = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x != 0; });
    if (*first == 1) out.push_back({v});
  }
  return out;
}

}  // namespace lpack
