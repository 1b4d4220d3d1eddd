// Chains of the representable cube: tensor words over [0], [0,1], [1], the
// Serre counit and coproduct, the degree 1 product and cubical operators.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "einfty/free_module.hpp"
#include "einfty/permutation.hpp"

namespace einfty {

/// Ordered as [0] < [0,1] < [1].
enum class CubeSymbol : std::uint8_t { E0 = 0, I = 1, E1 = 2 };

inline int degree(CubeSymbol s) { return s == CubeSymbol::I ? 1 : 0; }

inline std::string_view render(CubeSymbol s) {
  switch (s) {
    case CubeSymbol::E0: return "[0]";
    case CubeSymbol::I: return "[01]";
    case CubeSymbol::E1: return "[1]";
  }
  return "?";
}

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A basis element x_1 ⊗ ... ⊗ x_n of chains(□^n). Slots are 1-indexed in the
/// public interface. Packed two bits per slot, most significant slot first,
/// so integer comparison of equal-length words is lexicographic.
class CubeWord {
 public:
  static constexpr int kMaxLength = 32;

  CubeWord() = default;
  explicit CubeWord(const std::vector<CubeSymbol>& symbols) {
    if (symbols.size() > kMaxLength) throw std::invalid_argument("cube words are limited to 32 slots");
    for (auto s : symbols) push_back(s);
  }

  /// [0,1]^{⊗n}.
  static CubeWord top(int n) { return CubeWord(std::vector<CubeSymbol>(n, CubeSymbol::I)); }

  int size() const { return length_; }
  int degree() const { return std::popcount(interval_mask()); }

  CubeSymbol operator[](int slot) const {
    return static_cast<CubeSymbol>((bits_ >> shift(slot)) & 3u);
  }

  CubeWord with(int slot, CubeSymbol s) const {
    CubeWord out = *this;
    out.bits_ &= ~(std::uint64_t{3} << shift(slot));
    out.bits_ |= std::uint64_t(static_cast<std::uint8_t>(s)) << shift(slot);
    return out;
  }

  void push_back(CubeSymbol s) {
    if (length_ == kMaxLength) throw std::invalid_argument("cube words are limited to 32 slots");
    ++length_;
    bits_ |= std::uint64_t(static_cast<std::uint8_t>(s)) << shift(length_);
  }

  std::vector<CubeSymbol> symbols() const {
    std::vector<CubeSymbol> out;
    for (int i = 1; i <= length_; ++i) out.push_back((*this)[i]);
    return out;
  }

  /// Slots q_1 < ... < q_m carrying [0,1].
  std::vector<int> interval_slots() const {
    std::vector<int> out;
    for (int i = 1; i <= length_; ++i)
      if ((*this)[i] == CubeSymbol::I) out.push_back(i);
    return out;
  }

  /// Symbolwise comparison in the poset [0] < [0,1] < [1].
  bool precedes_or_equal(const CubeWord& o) const {
    if (o.length_ != length_) return false;
    for (int i = 1; i <= length_; ++i)
      if (static_cast<int>((*this)[i]) > static_cast<int>(o[i])) return false;
    return true;
  }

  std::string render() const {
    std::string s;
    for (int i = 1; i <= length_; ++i) s += einfty::render((*this)[i]);
    return s;
  }

  /// Parses "[0][01][1]"; also accepts "[0,1]" for the interval.
  static CubeWord parse(std::string_view text) {
    CubeWord w;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip();
    while (i < text.size()) {
      if (text[i] != '[') throw ParseError("expected '[' in cube word", i);
      std::size_t close = text.find(']', i);
      if (close == std::string_view::npos) throw ParseError("unterminated '[' in cube word", i);
      std::string_view body = text.substr(i + 1, close - i - 1);
      if (body == "0")
        w.push_back(CubeSymbol::E0);
      else if (body == "1")
        w.push_back(CubeSymbol::E1);
      else if (body == "01" || body == "0,1")
        w.push_back(CubeSymbol::I);
      else
        throw ParseError("expected [0], [1] or [01]", i);
      i = close + 1;
      skip();
    }
    return w;
  }

  friend bool operator==(const CubeWord&, const CubeWord&) = default;
  friend bool operator<(const CubeWord& a, const CubeWord& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.bits_ < b.bits_;
  }

  std::uint64_t interval_mask() const {
    // Bit pattern 01 per interval slot.
    std::uint64_t lo = bits_ & 0x5555555555555555ULL;
    std::uint64_t hi = (bits_ >> 1) & 0x5555555555555555ULL;
    return lo & ~hi;
  }

 private:
  static int shift(int slot) { return 2 * (kMaxLength - slot); }

  std::uint64_t bits_ = 0;
  std::uint8_t length_ = 0;
};

inline std::string render(const CubeWord& w) { return w.render(); }
inline int degree(const CubeWord& w) { return w.degree(); }

using CubeChain = FreeElement<CubeWord>;

/// All 3^n basis words of chains(□^n).
inline std::vector<CubeWord> all_cube_words(int n) {
  std::vector<CubeWord> out{CubeWord()};
  for (int i = 0; i < n; ++i) {
    std::vector<CubeWord> next;
    next.reserve(out.size() * 3);
    for (const auto& w : out)
      for (auto s : {CubeSymbol::E0, CubeSymbol::I, CubeSymbol::E1}) {
        CubeWord v = w;
        v.push_back(s);
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

/// Differential: ∂[0,1] = [1] - [0], extended by the Leibniz rule.
inline CubeChain cube_boundary(const CubeWord& w, Ring ring = Ring::integers()) {
  CubeChain out(ring);
  int prefix_degree = 0;
  for (int i = 1; i <= w.size(); ++i) {
    if (w[i] == CubeSymbol::I) {
      const std::int64_t sign = prefix_degree % 2 == 0 ? 1 : -1;
      out.add_term(w.with(i, CubeSymbol::E1), sign);
      out.add_term(w.with(i, CubeSymbol::E0), -sign);
      ++prefix_degree;
    }
  }
  return out;
}

inline std::int64_t cube_counit(const CubeWord& w) { return w.degree() == 0 ? 1 : 0; }

/// Serre coproduct, computed as Δ^{⊗n} on the factors followed by the inverse
/// (n,n)-deck shuffle with Koszul signs.
inline TensorElement<CubeWord> cube_coproduct(const CubeWord& w, Ring ring = Ring::integers()) {
  const int n = w.size();
  TensorElement<CubeWord> out(ring);
  const Permutation unshuffle = deck_shuffle(2 * n).inverse();
  const auto intervals = w.interval_slots();
  const int choices = 1 << intervals.size();
  std::vector<CubeSymbol> factors(2 * n);
  for (int mask = 0; mask < choices; ++mask) {
    int j = 0;
    for (int i = 1; i <= n; ++i) {
      const CubeSymbol s = w[i];
      if (s != CubeSymbol::I) {
        factors[2 * (i - 1)] = s;
        factors[2 * (i - 1) + 1] = s;
      } else {
        // Δ[0,1] = [0]⊗[0,1] + [0,1]⊗[1]
        const bool second = (mask >> j++) & 1;
        factors[2 * (i - 1)] = second ? CubeSymbol::I : CubeSymbol::E0;
        factors[2 * (i - 1) + 1] = second ? CubeSymbol::E1 : CubeSymbol::I;
      }
    }
    auto [moved, sign] = permute_factors(unshuffle, factors, [](CubeSymbol s) { return degree(s); });
    CubeWord left, right;
    for (int i = 0; i < n; ++i) left.push_back(moved[i]);
    for (int i = n; i < 2 * n; ++i) right.push_back(moved[i]);
    out.add_term(Tensor<CubeWord>{left, right}, sign);
  }
  return out;
}

/// Closed form of Δ([0,1]^{⊗n}): a sum over λ : {1..n} -> {0,1} with sign
/// (-1)^{#inversions of λ}; λ(i) = 0 gives [0,1]⊗[1], λ(i) = 1 gives [0]⊗[0,1].
inline TensorElement<CubeWord> cube_coproduct_top_closed(int n, Ring ring = Ring::integers()) {
  TensorElement<CubeWord> out(ring);
  for (std::uint32_t lambda = 0; lambda < (1u << n); ++lambda) {
    CubeWord x, y;
    int ones_seen = 0, inversions = 0;
    for (int i = 0; i < n; ++i) {
      const bool one = (lambda >> i) & 1;
      if (one) {
        ++ones_seen;
        x.push_back(CubeSymbol::E0);
        y.push_back(CubeSymbol::I);
      } else {
        inversions += ones_seen;
        x.push_back(CubeSymbol::I);
        y.push_back(CubeSymbol::E1);
      }
    }
    out.add_term(Tensor<CubeWord>{x, y}, inversions % 2 == 0 ? 1 : -1);
  }
  return out;
}

/// Degree 1 product
///   x * y = (-1)^{|x|} Σ_i x_{<i} ε(y_{<i}) ⊗ x_i * y_i ⊗ ε(x_{>i}) y_{>i}
/// with [0]*[1] = [0,1] and [1]*[0] = -[0,1] the only nonzero symbol products.
inline CubeChain cube_star(const CubeWord& x, const CubeWord& y, Ring ring = Ring::integers()) {
  if (x.size() != y.size())
    throw std::invalid_argument("star: words of different ambient dimension (" + std::to_string(x.size()) + " and " +
                                std::to_string(y.size()) + ")");
  CubeChain out(ring);
  const int n = x.size();
  const std::int64_t global = x.degree() % 2 == 0 ? 1 : -1;
  // y_{<i} must be of degree 0 and x_{>i} of degree 0.
  for (int i = 1; i <= n; ++i) {
    std::int64_t local = 0;
    if (x[i] == CubeSymbol::E0 && y[i] == CubeSymbol::E1)
      local = 1;
    else if (x[i] == CubeSymbol::E1 && y[i] == CubeSymbol::E0)
      local = -1;
    if (local == 0) continue;
    bool ok = true;
    for (int j = 1; j < i && ok; ++j) ok = y[j] != CubeSymbol::I;
    for (int j = i + 1; j <= n && ok; ++j) ok = x[j] != CubeSymbol::I;
    if (!ok) continue;
    CubeWord w;
    for (int j = 1; j < i; ++j) w.push_back(x[j]);
    w.push_back(CubeSymbol::I);
    for (int j = i + 1; j <= n; ++j) w.push_back(y[j]);
    out.add_term(w, global * local);
  }
  return out;
}

/// A morphism 2^m -> 2^n of the cube category in normal form: each target
/// coordinate is a constant or a source coordinate, sources strictly
/// increasing. Unused source coordinates are the ones collapsed by
/// codegeneracies; constants are inserted by cofaces.
class CubicalOperator {
 public:
  static constexpr int kConst0 = -1;
  static constexpr int kConst1 = -2;

  static CubicalOperator identity(int n) {
    CubicalOperator op;
    op.domain_ = n;
    for (int i = 1; i <= n; ++i) op.images_.push_back(i);
    return op;
  }

  /// δ_i^ε : 2^{n-1} -> 2^n, inserting ε as the i-th coordinate.
  static CubicalOperator coface(int n, int i, int eps) {
    if (n < 1 || i < 1 || i > n) throw std::out_of_range("coface index " + std::to_string(i) + " out of range for 2^" + std::to_string(n));
    if (eps != 0 && eps != 1) throw std::invalid_argument("coface value must be 0 or 1");
    CubicalOperator op;
    op.domain_ = n - 1;
    for (int j = 1; j < i; ++j) op.images_.push_back(j);
    op.images_.push_back(eps == 0 ? kConst0 : kConst1);
    for (int j = i; j <= n - 1; ++j) op.images_.push_back(j);
    return op;
  }

  /// σ_i : 2^n -> 2^{n-1}, deleting the i-th coordinate.
  static CubicalOperator codegeneracy(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("codegeneracy index " + std::to_string(i) + " out of range for 2^" + std::to_string(n));
    CubicalOperator op;
    op.domain_ = n;
    for (int j = 1; j <= n; ++j)
      if (j != i) op.images_.push_back(j);
    return op;
  }

  int domain() const { return domain_; }
  int codomain() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  /// this ∘ before.
  CubicalOperator after(const CubicalOperator& before) const {
    if (before.codomain() != domain_)
      throw std::invalid_argument("composing cubical operators with mismatched dimensions");
    CubicalOperator op;
    op.domain_ = before.domain_;
    for (int v : images_) op.images_.push_back(v < 0 ? v : before.images_[v - 1]);
    return op;
  }

  /// Coordinates of the domain that are collapsed.
  std::vector<int> collapsed() const {
    std::vector<bool> used(domain_ + 1, false);
    for (int v : images_)
      if (v > 0) used[v] = true;
    std::vector<int> out;
    for (int j = 1; j <= domain_; ++j)
      if (!used[j]) out.push_back(j);
    return out;
  }

  /// Image of a basis word; zero when an interval coordinate is collapsed.
  CubeChain apply(const CubeWord& w, Ring ring = Ring::integers()) const {
    if (w.size() != domain_)
      throw std::invalid_argument("operator with domain 2^" + std::to_string(domain_) + " applied to a word of length " +
                                  std::to_string(w.size()));
    for (int j : collapsed())
      if (w[j] == CubeSymbol::I) return CubeChain(ring);
    CubeWord out;
    for (int v : images_) {
      if (v == kConst0)
        out.push_back(CubeSymbol::E0);
      else if (v == kConst1)
        out.push_back(CubeSymbol::E1);
      else
        out.push_back(w[v]);
    }
    return CubeChain::basis(out, 1, ring);
  }

  CubeChain apply(const CubeChain& c) const {
    return c.linear_map([&](const CubeWord& w) { return apply(w, c.ring()); });
  }

  friend bool operator==(const CubicalOperator&, const CubicalOperator&) = default;

 private:
  int domain_ = 0;
  std::vector<int> images_;
};

}  // namespace einfty
