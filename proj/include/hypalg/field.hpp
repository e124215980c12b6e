#pragma once

// Exact scalar fields: prime fields GF(p) with p < 2^31, and the rationals.

#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypalg/error.hpp"

namespace hypalg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Deterministic primality by trial division (p < 2^31 needs divisors < 46341).
inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t q = 3; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
      throw DomainError("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
    }
  }

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_int(std::int64_t v) const {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type from_rational(const Rational& v) const {
    const Integer p{p_};
    Integer num = boost::multiprecision::numerator(v) % p;
    Integer den = boost::multiprecision::denominator(v) % p;
    if (den == 0) throw DomainError("rational has denominator divisible by " + name());
    if (num < 0) num += p;
    return mul(static_cast<value_type>(num), inv(static_cast<value_type>(den)));
  }

  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }

  /// Modular inverse by the extended Euclidean algorithm.
  value_type inv(value_type a) const {
    if (a == 0) throw DomainError("division by zero in " + name());
    std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      r0 = std::exchange(r1, r0 - q * r1);
      s0 = std::exchange(s1, s0 - q * s1);
    }
    return from_int(s0);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = Rational;

  std::string name() const { return "Q"; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return v; }
  value_type from_rational(const Rational& v) const { return v; }

  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw DomainError("division by zero in Q");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return a * inv(b); }

  std::string to_string(const value_type& a) const { return a.str(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Runtime field selector: GF(p) or Q.
class FieldSpec {
 public:
  enum class Kind { kPrime, kRationals };

  static FieldSpec prime(std::uint32_t p) {
    PrimeField check(p);  // validates
    return FieldSpec(Kind::kPrime, check.characteristic());
  }
  static FieldSpec rationals() { return FieldSpec(Kind::kRationals, 0); }
  static FieldSpec gf2() { return prime(2); }

  /// "Q" (or "q") for the rationals, otherwise a decimal prime.
  static FieldSpec parse(const std::string& text) {
    if (text == "Q" || text == "q") return rationals();
    std::size_t used = 0;
    unsigned long long p = 0;
    try {
      p = std::stoull(text, &used);
    } catch (const std::exception&) {
      throw DomainError("field must be a prime or 'Q', got '" + text + "'");
    }
    if (used != text.size() || p >= (1ULL << 31)) {
      throw DomainError("field must be a prime < 2^31 or 'Q', got '" + text + "'");
    }
    return prime(static_cast<std::uint32_t>(p));
  }

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::kPrime; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const {
    return kind_ == Kind::kRationals ? "Q" : "GF(" + std::to_string(p_) + ")";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Calls `fn` with the concrete field object selected by `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_prime()) return std::forward<Fn>(fn)(PrimeField(spec.characteristic()));
  return std::forward<Fn>(fn)(RationalField{});
}

}  // namespace hypalg
