#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "socle/error.hpp"

namespace socle {

inline bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Characteristic of the coefficient field: 0 means the rationals, otherwise a prime.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  void validate() const {
    if (characteristic != 0 && !isPrime(characteristic))
      throw DomainError("field characteristic " + std::to_string(characteristic) +
                        " is neither 0 nor prime");
  }
};

/// GF(p) with elements stored as residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    FieldSpec{p}.validate();
    if (p == 0) throw DomainError("PrimeField requires a prime characteristic");
    if (p >= (1u << 31)) throw DomainError("prime too large for 32-bit residues");
    if (p <= kTableLimit) {
      auto table = std::make_shared<std::vector<value_type>>(p, 0);
      (*table)[1] = 1;
      for (std::uint64_t a = 2; a < p; ++a)
        (*table)[a] = static_cast<value_type>(p - (p / a) * (*table)[p % a] % p);
      inverses_ = std::move(table);
    }
  }

  std::uint32_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }

  value_type fromInt(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type fromInteger(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r.get_ui());
  }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(p_) + ")");
    if (inverses_) return (*inverses_)[a];
    // extended Euclid
    std::int64_t t = 0, newt = 1, r = p_, newr = a;
    while (newr != 0) {
      std::int64_t q = r / newr;
      t -= q * newt;
      std::swap(t, newt);
      r -= q * newr;
      std::swap(r, newr);
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  bool isZero(value_type a) const { return a == 0; }
  bool isOne(value_type a) const { return a == 1; }

  /// Symmetric representative, so p-1 prints as -1.
  std::string toString(value_type a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  static constexpr std::uint32_t kTableLimit = 1u << 16;
  std::uint32_t p_;
  std::shared_ptr<const std::vector<value_type>> inverses_;
};

/// The rationals, as GMP reduced fractions.
class RationalField {
 public:
  using value_type = mpq_class;

  std::uint32_t characteristic() const { return 0; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type fromInt(long long v) const { return value_type(mpz_class(std::to_string(v))); }
  value_type fromInteger(const mpz_class& v) const { return value_type(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw DomainError("division by zero in QQ");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return a * inv(b); }
  bool isZero(const value_type& a) const { return sgn(a) == 0; }
  bool isOne(const value_type& a) const { return a == 1; }
  std::string toString(const value_type& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class K>
concept CoefficientField = requires(const K& k, typename K::value_type a, long long n) {
  { k.zero() } -> std::convertible_to<typename K::value_type>;
  { k.one() } -> std::convertible_to<typename K::value_type>;
  { k.fromInt(n) } -> std::convertible_to<typename K::value_type>;
  { k.add(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.sub(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.mul(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.inv(a) } -> std::convertible_to<typename K::value_type>;
  { k.isZero(a) } -> std::convertible_to<bool>;
  { k.characteristic() } -> std::convertible_to<std::uint32_t>;
};

/// Exact small rational, used for the (1/q)-graded Cartier degrees.
class Fraction {
 public:
  Fraction() = default;
  Fraction(long long num, long long den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Fraction operator+(Fraction a, Fraction b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator-(Fraction a, Fraction b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator*(Fraction a, Fraction b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend Fraction operator-(Fraction a) { return {-a.num_, a.den_}; }
  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string toString() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace socle
