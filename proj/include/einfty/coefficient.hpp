// Exact coefficient rings: the integers (overflow-checked) and Z/p.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace einfty {

/// Arithmetic overflow in the integer ring. Exact computations never wrap.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The ground ring: modulus 0 is Z, a prime p is Z/p.
struct Ring {
  std::int64_t modulus = 0;

  static constexpr Ring integers() { return Ring{0}; }
  static Ring mod(std::int64_t p) {
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    return Ring{p};
  }

  bool is_integers() const { return modulus == 0; }

  /// Parses "Z", "Z/2", "Z/p".
  static Ring parse(const std::string& s) {
    if (s == "Z") return integers();
    if (s.size() > 2 && s.rfind("Z/", 0) == 0) {
      std::size_t used = 0;
      std::int64_t p = 0;
      try {
        p = std::stoll(s.substr(2), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == s.size() - 2) return mod(p);
    }
    throw std::invalid_argument("unknown ring '" + s + "' (expected Z or Z/p)");
  }

  std::string name() const { return is_integers() ? "Z" : "Z/" + std::to_string(modulus); }

  std::int64_t normalize(std::int64_t v) const {
    if (is_integers()) return v;
    std::int64_t r = v % modulus;
    return r < 0 ? r + modulus : r;
  }

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    if (!is_integers()) return normalize(normalize(a) + normalize(b));
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
    return out;
  }

  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    if (!is_integers()) {
      __int128 p = static_cast<__int128>(normalize(a)) * normalize(b);
      return static_cast<std::int64_t>(p % modulus);
    }
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
    return out;
  }

  std::int64_t neg(std::int64_t a) const {
    if (!is_integers()) return normalize(-normalize(a));
    if (a == INT64_MIN) throw OverflowError("integer overflow in negation");
    return -a;
  }

  /// Multiplicative inverse of a unit.
  std::int64_t inverse(std::int64_t a) const {
    if (is_integers()) {
      if (a == 1 || a == -1) return a;
      throw std::domain_error(std::to_string(a) + " is not a unit in Z");
    }
    std::int64_t x = normalize(a);
    if (x == 0) throw std::domain_error("0 is not invertible");
    // Fermat: x^{p-2}.
    std::int64_t result = 1, e = modulus - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, x);
      x = mul(x, x);
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Ring&, const Ring&) = default;
};

/// A ring element. Residues are kept canonical in [0, p).
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(std::int64_t value, Ring ring = Ring::integers()) : ring_(ring), value_(ring.normalize(value)) {}

  std::int64_t value() const { return value_; }
  Ring ring() const { return ring_; }
  bool is_zero() const { return value_ == 0; }

  Coefficient operator+(const Coefficient& o) const {
    check(o);
    return Coefficient(ring_.add(value_, o.value_), ring_);
  }
  Coefficient operator*(const Coefficient& o) const {
    check(o);
    return Coefficient(ring_.mul(value_, o.value_), ring_);
  }
  Coefficient operator-() const { return Coefficient(ring_.neg(value_), ring_); }
  Coefficient operator-(const Coefficient& o) const { return *this + (-o); }

  friend bool operator==(const Coefficient&, const Coefficient&) = default;

 private:
  void check(const Coefficient& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch("coefficient ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
  }

  Ring ring_{};
  std::int64_t value_ = 0;
};

}  // namespace einfty
