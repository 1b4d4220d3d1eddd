// Finite formal linear combinations over an ordered basis.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "einfty/coefficient.hpp"

namespace einfty {

/// An element of the free module on basis type B. Zero coefficients are never
/// stored, so equality is equality of the underlying maps. Iteration follows
/// B's operator<, which makes every printed result reproducible.
template <class B>
class FreeElement {
 public:
  using basis_type = B;
  using storage = std::map<B, std::int64_t>;
  using const_iterator = typename storage::const_iterator;

  explicit FreeElement(Ring ring = Ring::integers()) : ring_(ring) {}

  static FreeElement basis(B b, std::int64_t coeff = 1, Ring ring = Ring::integers()) {
    FreeElement out(ring);
    out.add_term(std::move(b), coeff);
    return out;
  }

  Ring ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  std::int64_t coefficient(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const B& b, std::int64_t coeff) {
    coeff = ring_.normalize(coeff);
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, coeff);
    if (!inserted) {
      it->second = ring_.add(it->second, coeff);
      if (it->second == 0) terms_.erase(it);
    }
  }

  FreeElement& operator+=(const FreeElement& o) {
    check(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  FreeElement& operator-=(const FreeElement& o) {
    check(o);
    for (const auto& [b, c] : o.terms_) add_term(b, ring_.neg(c));
    return *this;
  }
  /// Adds scale * o.
  FreeElement& add_scaled(const FreeElement& o, std::int64_t scale) {
    check(o);
    scale = ring_.normalize(scale);
    if (scale == 0) return *this;
    for (const auto& [b, c] : o.terms_) add_term(b, ring_.mul(c, scale));
    return *this;
  }

  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(std::int64_t s, const FreeElement& a) {
    FreeElement out(a.ring_);
    return out.add_scaled(a, s);
  }
  FreeElement operator-() const { return -1 * *this; }

  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Same element read in another ring (coefficients reduced).
  FreeElement reduce(Ring target) const {
    FreeElement out(target);
    for (const auto& [b, c] : terms_) out.add_term(b, c);
    return out;
  }

  /// Linear extension of f : B -> FreeElement<C>.
  template <class F>
  auto linear_map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const B&>()))>;
    Out out(ring_);
    for (const auto& [b, c] : terms_) out.add_scaled(f(b), c);
    return out;
  }

 private:
  void check(const FreeElement& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch("ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
  }

  Ring ring_;
  storage terms_;
};

/// A pure tensor of basis elements; the basis of C^{⊗k}.
template <class B>
using Tensor = std::vector<B>;

template <class B>
using TensorElement = FreeElement<Tensor<B>>;

/// Writes "a + b - 2c". Basis elements print through render(b).
template <class B, class Render>
std::string render_element(const FreeElement<B>& x, Render&& render) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, c] : x) {
    std::int64_t shown = c;
    if (first) {
      if (shown < 0) out << "-";
    } else {
      out << (shown < 0 ? " - " : " + ");
    }
    std::int64_t mag = shown < 0 ? -shown : shown;
    if (mag != 1) out << mag << "*";
    out << render(b);
    first = false;
  }
  return out.str();
}

}  // namespace einfty
