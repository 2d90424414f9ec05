#pragma once

// Exact scalars: arbitrary-precision rationals and prime fields GF(p).
// Every structure that needs arithmetic is parameterized over a small field
// object (RationalField or PrimeField) that owns the element operations, so
// GF(p) elements stay plain integers and the modulus lives in one place.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "gyrorep/errors.hpp"

namespace gyrorep {

/// Deterministic Miller-Rabin, valid for every 64-bit input.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Arbitrary-precision rational in lowest terms with positive denominator.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) fail(errc::parse_error, "rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "a" or "a/b" with optional sign; rejects everything else.
  static std::optional<Rational> parse(std::string_view s) {
    auto is_int = [](std::string_view t) {
      if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
      if (t.empty()) return false;
      for (char c : t)
        if (c < '0' || c > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    if (num.front() == '+') num.remove_prefix(1); // gmp rejects a leading plus
    if (den.front() == '+') den.remove_prefix(1);
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  std::string str() const { return v_.get_str(); }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const { return Rational(mpq_class(v_ / o.v_)); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

private:
  mpq_class v_;
};

/// The field Q. Stateless; characteristic 0.
struct RationalField {
  using Elem = Rational;
  static constexpr bool finite = false;

  std::uint64_t characteristic() const { return 0; }
  bool same(const RationalField&) const { return true; }

  Elem zero() const { return Rational(); }
  Elem one() const { return Rational(1); }
  Elem from_int(long n) const { return Rational(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a.is_zero()) fail(errc::internal_inconsistency, "inverse of zero");
    return one() / a;
  }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return a.str(); }
  std::optional<Elem> parse(std::string_view s) const { return Rational::parse(s); }
};

/// The field GF(p), p prime. Elements are reduced residues in [0, p).
struct PrimeField {
  using Elem = std::uint64_t;
  static constexpr bool finite = true;

  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime(p)) fail(errc::invalid_field, "not a prime: " + std::to_string(p));
  }

  std::uint64_t characteristic() const { return p; }
  bool same(const PrimeField& o) const { return p == o.p; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long n) const {
    if (n >= 0) return static_cast<Elem>(n) % p;
    std::uint64_t mag = static_cast<std::uint64_t>(-(n + 1)) + 1;
    std::uint64_t r = mag % p;
    return r == 0 ? 0 : p - r;
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) fail(errc::internal_inconsistency, "inverse of zero");
    // extended Euclid on (a, p)
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
    while (new_r != 0) {
      long long q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<Elem>(t);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return std::to_string(a); }
  std::optional<Elem> parse(std::string_view s) const {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;
    Elem r = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      r = add(mul(r, 10 % p), static_cast<Elem>(c - '0') % p);
    }
    return negative ? neg(r) : r;
  }
};

/// Runtime description of a field, as selected by the CLI flag `q` / `f:<p>`.
class FieldSpec {
public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  static FieldSpec prime(std::uint64_t p) {
    if (!is_prime(p)) fail(errc::invalid_field, "not a prime: " + std::to_string(p));
    return FieldSpec(Kind::prime, p);
  }
  /// "q" for the rationals, "f:<p>" for GF(p).
  static std::optional<FieldSpec> parse(std::string_view s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.size() > 2 && (s.substr(0, 2) == "f:" || s.substr(0, 2) == "F:")) {
      std::uint64_t p = 0;
      for (char c : s.substr(2)) {
        if (c < '0' || c > '9') return std::nullopt;
        if (p > (UINT64_MAX - 9) / 10) return std::nullopt;
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
      }
      if (!is_prime(p)) return std::nullopt;
      return FieldSpec(Kind::prime, p);
    }
    return std::nullopt;
  }

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t prime() const { return p_; }
  std::string str() const { return kind_ == Kind::rationals ? "q" : "f:" + std::to_string(p_); }

private:
  FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// Calls fn with the concrete field object selected by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind() == FieldSpec::Kind::rationals) return fn(RationalField{});
  return fn(PrimeField{spec.prime()});
}

} // namespace gyrorep
