// Chains of the representable simplex and of products of intervals:
// Alexander-Whitney coalgebra and the join product.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "einfty/cube.hpp"
#include "einfty/free_module.hpp"

namespace einfty {

/// A nondegenerate simplex [v_0 < ... < v_m] of △^n.
class SimplexWord {
 public:
  SimplexWord() = default;
  SimplexWord(int ambient, std::vector<int> vertices) : ambient_(ambient), vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i] < 0 || vertices_[i] > ambient_)
        throw std::invalid_argument("vertex " + std::to_string(vertices_[i]) + " outside △^" + std::to_string(ambient_));
      if (i > 0 && vertices_[i - 1] >= vertices_[i])
        throw std::invalid_argument("simplex vertices must be strictly increasing: " + render());
    }
  }

  /// [0, 1, ..., n] in △^n.
  static SimplexWord top(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return SimplexWord(n, std::move(v));
  }

  int ambient() const { return ambient_; }
  int degree() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<int>& vertices() const { return vertices_; }

  SimplexWord face(int i) const {
    std::vector<int> v = vertices_;
    v.erase(v.begin() + i);
    SimplexWord out;
    out.ambient_ = ambient_;
    out.vertices_ = std::move(v);
    return out;
  }

  SimplexWord slice(int from, int to) const {
    SimplexWord out;
    out.ambient_ = ambient_;
    out.vertices_.assign(vertices_.begin() + from, vertices_.begin() + to + 1);
    return out;
  }

  std::string render() const {
    std::string s = "[";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(vertices_[i]);
    }
    return s + "]";
  }

  /// Parses "[0,1,2]" (also "[012]" when every vertex is a single digit).
  static SimplexWord parse(std::string_view text, int ambient) {
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '[') throw ParseError("expected '[' to open a simplex", i);
    ++i;
    std::vector<int> v;
    bool comma_mode = text.find(',') != std::string_view::npos;
    while (true) {
      skip();
      if (i >= text.size()) throw ParseError("unterminated simplex", i);
      if (text[i] == ']') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a vertex number", i);
      if (comma_mode) {
        int value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) value = value * 10 + (text[i++] - '0');
        v.push_back(value);
        skip();
        if (i < text.size() && text[i] == ',') ++i;
      } else {
        v.push_back(text[i++] - '0');
      }
    }
    skip();
    if (i != text.size()) throw ParseError("trailing characters after simplex", i);
    if (v.empty()) throw ParseError("empty simplex", 0);
    const int n = ambient < 0 ? v.back() : ambient;
    return SimplexWord(n, std::move(v));
  }

  friend bool operator==(const SimplexWord&, const SimplexWord&) = default;
  friend auto operator<=>(const SimplexWord&, const SimplexWord&) = default;

 private:
  int ambient_ = 0;
  std::vector<int> vertices_;
};

inline std::string render(const SimplexWord& s) { return s.render(); }
inline int degree(const SimplexWord& s) { return s.degree(); }

using SimplexChain = FreeElement<SimplexWord>;

/// All nondegenerate simplices of △^n.
inline std::vector<SimplexWord> all_simplex_words(int n) {
  std::vector<SimplexWord> out;
  for (std::uint32_t mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> v;
    for (int i = 0; i <= n; ++i)
      if ((mask >> i) & 1) v.push_back(i);
    out.emplace_back(n, std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline SimplexChain simplex_boundary(const SimplexWord& s, Ring ring = Ring::integers()) {
  SimplexChain out(ring);
  if (s.degree() == 0) return out;
  for (int i = 0; i <= s.degree(); ++i) out.add_term(s.face(i), i % 2 == 0 ? 1 : -1);
  return out;
}

inline std::int64_t simplex_counit(const SimplexWord& s) { return s.degree() == 0 ? 1 : 0; }

/// Alexander-Whitney: Σ_i [v_0..v_i] ⊗ [v_i..v_m].
inline TensorElement<SimplexWord> aw_coproduct(const SimplexWord& s, Ring ring = Ring::integers()) {
  TensorElement<SimplexWord> out(ring);
  for (int i = 0; i <= s.degree(); ++i) out.add_term(Tensor<SimplexWord>{s.slice(0, i), s.slice(i, s.degree())}, 1);
  return out;
}

/// Join: (-1)^{p + |σ|} [v_σ(0), ..., v_σ(m)] where p = |a| and σ sorts the
/// concatenated vertex list; zero when a vertex is shared.
inline SimplexChain simplex_join(const SimplexWord& a, const SimplexWord& b, Ring ring = Ring::integers()) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("join of simplices in different ambient simplices (△^" + std::to_string(a.ambient()) +
                                " and △^" + std::to_string(b.ambient()) + ")");
  SimplexChain out(ring);
  std::vector<int> all = a.vertices();
  all.insert(all.end(), b.vertices().begin(), b.vertices().end());
  int inversions = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) return out;
      if (all[i] > all[j]) ++inversions;
    }
  std::sort(all.begin(), all.end());
  out.add_term(SimplexWord(a.ambient(), std::move(all)), (a.degree() + inversions) % 2 == 0 ? 1 : -1);
  return out;
}

/// An m-simplex of (△^1)^{×k}: m+1 vertex columns in {0,1}^k, coordinatewise
/// nondecreasing. Column bit (k - c) holds coordinate c, so integer order of
/// columns refines the product order.
class ProductSimplex {
 public:
  ProductSimplex() = default;
  ProductSimplex(int factors, std::vector<std::uint32_t> columns) : factors_(factors), columns_(std::move(columns)) {
    if (factors_ < 0 || factors_ > 31) throw std::invalid_argument("product simplex factor count out of range");
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (columns_[j] >> factors_) throw std::invalid_argument("product simplex column out of range");
      if (j > 0 && (columns_[j - 1] & ~columns_[j]) != 0)
        throw std::invalid_argument("product simplex rows must be nondecreasing");
    }
  }

  /// From rows such as {"011", "001"}.
  static ProductSimplex from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("product simplex needs at least one factor");
    const std::size_t len = rows.front().size();
    std::vector<std::uint32_t> cols(len, 0);
    const int k = static_cast<int>(rows.size());
    for (int c = 0; c < k; ++c) {
      if (rows[c].size() != len) throw std::invalid_argument("product simplex rows must have equal length");
      for (std::size_t j = 0; j < len; ++j) {
        if (rows[c][j] != '0' && rows[c][j] != '1') throw std::invalid_argument("product simplex rows are 0/1 words");
        if (rows[c][j] == '1') cols[j] |= 1u << (k - 1 - c);
      }
    }
    return ProductSimplex(k, std::move(cols));
  }

  /// Parses "011x001" (or "011×001").
  static ProductSimplex parse(std::string_view text) {
    std::vector<std::string> rows(1);
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      if (ch == 'x') {
        rows.emplace_back();
      } else if (ch == '0' || ch == '1') {
        rows.back() += ch;
      } else if (static_cast<unsigned char>(ch) == 0xC3 && i + 1 < text.size() &&
                 static_cast<unsigned char>(text[i + 1]) == 0x97) {
        rows.emplace_back();
        ++i;
      } else if (ch != ' ') {
        throw ParseError("unexpected character in product simplex", i);
      }
    }
    return from_rows(rows);
  }

  int factors() const { return factors_; }
  int degree() const { return static_cast<int>(columns_.size()) - 1; }
  const std::vector<std::uint32_t>& columns() const { return columns_; }

  bool is_degenerate() const {
    for (std::size_t j = 1; j < columns_.size(); ++j)
      if (columns_[j] == columns_[j - 1]) return true;
    return false;
  }

  ProductSimplex face(int i) const {
    ProductSimplex out = *this;
    out.columns_.erase(out.columns_.begin() + i);
    return out;
  }
  ProductSimplex slice(int from, int to) const {
    ProductSimplex out;
    out.factors_ = factors_;
    out.columns_.assign(columns_.begin() + from, columns_.begin() + to + 1);
    return out;
  }

  std::string render() const {
    std::string s;
    for (int c = 0; c < factors_; ++c) {
      if (c) s += "x";
      for (auto col : columns_) s += ((col >> (factors_ - 1 - c)) & 1) ? '1' : '0';
    }
    return s;
  }

  friend bool operator==(const ProductSimplex&, const ProductSimplex&) = default;
  friend auto operator<=>(const ProductSimplex&, const ProductSimplex&) = default;

 private:
  int factors_ = 0;
  std::vector<std::uint32_t> columns_;
};

inline std::string render(const ProductSimplex& s) { return s.render(); }
inline int degree(const ProductSimplex& s) { return s.degree(); }

using ProductChain = FreeElement<ProductSimplex>;

inline ProductChain product_boundary(const ProductSimplex& s, Ring ring = Ring::integers()) {
  ProductChain out(ring);
  if (s.degree() == 0) return out;
  for (int i = 0; i <= s.degree(); ++i) {
    ProductSimplex f = s.face(i);
    if (!f.is_degenerate()) out.add_term(f, i % 2 == 0 ? 1 : -1);
  }
  return out;
}

inline std::int64_t product_counit(const ProductSimplex& s) { return s.degree() == 0 ? 1 : 0; }

inline TensorElement<ProductSimplex> product_aw_coproduct(const ProductSimplex& s, Ring ring = Ring::integers()) {
  TensorElement<ProductSimplex> out(ring);
  if (s.is_degenerate()) return out;
  for (int i = 0; i <= s.degree(); ++i) {
    ProductSimplex front = s.slice(0, i), back = s.slice(i, s.degree());
    if (!front.is_degenerate() && !back.is_degenerate()) out.add_term(Tensor<ProductSimplex>{front, back}, 1);
  }
  return out;
}

/// All nondegenerate simplices of (△^1)^{×k}.
inline std::vector<ProductSimplex> all_product_simplices(int k) {
  std::vector<ProductSimplex> out;
  const std::uint32_t full = (1u << k) - 1;
  std::vector<std::uint32_t> path;
  auto extend = [&](auto&& self) -> void {
    out.emplace_back(k, path);
    const std::uint32_t last = path.back();
    // Strict supersets of the last column.
    const std::uint32_t free = full & ~last;
    for (std::uint32_t sub = free; sub != 0; sub = (sub - 1) & free) {
      path.push_back(last | sub);
      self(self);
      path.pop_back();
    }
  };
  for (std::uint32_t start = 0; start <= full; ++start) {
    path = {start};
    extend(extend);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace einfty
