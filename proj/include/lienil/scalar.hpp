#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lienil {

/// Raised when two values built over different scalar modes or ambient
/// generator counts are combined.
class ModeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal inconsistency: a computed quantity violated an invariant that
/// must hold for correct input (negative multiplicity, failed soundness, ...).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A component or system exceeded the configured column limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1
inline constexpr uint64_t kSecondPrime = 2147483629ULL;   // 2^31 - 19

bool is_prime(uint64_t p);
uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t p);
uint64_t mod_inverse(uint64_t a, uint64_t p);

/// Scalar field selector: exact rationals, or F_p for a prime p < 2^32.
class ScalarMode {
 public:
  constexpr ScalarMode() = default;

  static constexpr ScalarMode exact() { return ScalarMode(); }
  static ScalarMode mod(uint64_t p);

  constexpr bool is_exact() const { return prime_ == 0; }
  constexpr uint64_t prime() const { return prime_; }

  /// "exact" or "mod<p>"; stable, used in cache keys and reports.
  std::string tag() const;
  static ScalarMode from_tag(std::string_view tag);

  constexpr auto operator<=>(const ScalarMode&) const = default;

 private:
  uint64_t prime_ = 0;
};

/// Element of Q or F_p. Arithmetic between different modes throws ModeMismatch.
class Scalar {
 public:
  explicit Scalar(ScalarMode mode = ScalarMode::exact(), long value = 0);
  Scalar(ScalarMode mode, const mpq_class& value);
  Scalar(ScalarMode mode, long num, long den);

  ScalarMode mode() const { return mode_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); only meaningful in modular mode.
  uint64_t residue() const { return residue_; }
  /// Exact value; only meaningful in exact mode.
  const mpq_class& rational() const { return value_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  bool operator==(const Scalar& o) const;

  /// "a/b", "a" (exact) or the residue (modular).
  std::string to_string() const;
  /// Parses "a", "-a", "a/b".
  static Scalar parse(std::string_view text, ScalarMode mode);

 private:
  void check(const Scalar& o) const;

  ScalarMode mode_;
  uint64_t residue_ = 0;
  mpq_class value_;
};

}  // namespace lienil
