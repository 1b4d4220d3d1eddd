// Homology over Z and Z/p, mod-2 cohomology with chosen bases, cup
// products, Steenrod squares from cup-i coproducts, and the Bockstein.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "einfty/complexes.hpp"
#include "einfty/linalg.hpp"

namespace einfty {

class NotACocycle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Graded basis and integral boundary matrices; boundary[n] : C_n -> C_{n-1}.
struct ChainComplexData {
  std::vector<std::size_t> ranks;
  std::vector<ExactMatrix> boundary;
  std::vector<std::vector<std::string>> labels;

  int top() const { return static_cast<int>(ranks.size()) - 1; }
  std::size_t rank(int n) const { return n >= 0 && n <= top() ? ranks[n] : 0; }

  /// ∂_n, with empty shapes outside the complex.
  ExactMatrix d(int n) const {
    if (n >= 1 && n <= top()) return boundary[n];
    return ExactMatrix(rank(n - 1), rank(n));
  }

  bool d_squared_zero() const {
    for (int n = 2; n <= top(); ++n)
      if (!(boundary[n - 1] * boundary[n]).is_zero()) return false;
    return true;
  }
};

template <FiniteComplex X>
ChainComplexData chain_complex(const X& x) {
  ChainComplexData out;
  const int top = x.dimension();
  for (int n = 0; n <= top; ++n) {
    out.ranks.push_back(x.count(n));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < x.count(n); ++i) labels.push_back(x.label(n, i));
    out.labels.push_back(std::move(labels));
  }
  out.boundary.emplace_back(0, x.count(0));
  for (int n = 1; n <= top; ++n) {
    ExactMatrix m(x.count(n - 1), x.count(n));
    for (std::size_t i = 0; i < x.count(n); ++i)
      for (const auto& [cell, c] : cell_boundary(x, n, i)) m(static_cast<std::size_t>(cell.index), i) = c;
    m.row_labels = out.labels[n - 1];
    m.col_labels = out.labels[n];
    out.boundary.push_back(std::move(m));
  }
  return out;
}

struct HomologyGroup {
  int degree = 0;
  std::int64_t betti = 0;
  std::vector<std::int64_t> torsion;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

inline std::string render_group(const HomologyGroup& g, Ring ring) {
  std::string s;
  auto add = [&](const std::string& part) { s += (s.empty() ? "" : " + ") + part; };
  const std::string base = ring.is_integers() ? "Z" : "Z/" + std::to_string(ring.modulus);
  if (g.betti == 1) add(base);
  if (g.betti > 1) add(base + "^" + std::to_string(g.betti));
  for (auto t : g.torsion) add("Z/" + std::to_string(t));
  return s.empty() ? "0" : s;
}

inline std::vector<HomologyGroup> homology(const ChainComplexData& c, Ring ring = Ring::integers()) {
  std::vector<std::int64_t> rank_d(c.ranks.size() + 1, 0);
  std::vector<std::vector<std::int64_t>> torsion(c.ranks.size());
  for (int n = 1; n <= c.top(); ++n) {
    if (ring.is_integers()) {
      SmithForm f = smith_normal_form(c.boundary[n], false);
      rank_d[n] = static_cast<std::int64_t>(f.rank());
      for (auto d : f.diagonal)
        if (d > 1) torsion[n - 1].push_back(d);
    } else {
      rank_d[n] = static_cast<std::int64_t>(rank_mod_p(c.boundary[n], ring.modulus));
    }
  }
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= c.top(); ++n)
    out.push_back({n, static_cast<std::int64_t>(c.ranks[n]) - rank_d[n] - rank_d[n + 1], torsion[n]});
  return out;
}

template <FiniteComplex X>
std::vector<HomologyGroup> homology(const X& x, Ring ring = Ring::integers()) {
  return homology(chain_complex(x), ring);
}

/// H^*(X; Z/2) with representatives chosen by echelon reduction in cell order.
class Mod2Cohomology {
 public:
  explicit Mod2Cohomology(ChainComplexData data) : data_(std::move(data)) {
    for (int n = 0; n <= data_.top(); ++n) {
      // Cocycles: kernel of δ^n, whose rows are ∂c mod 2 for (n+1)-cells c.
      std::vector<BitVector> rows;
      if (n + 1 <= data_.top())
        for (std::size_t c = 0; c < data_.rank(n + 1); ++c) rows.push_back(boundary_row(n + 1, c));
      std::vector<BitVector> cocycles = nullspace_mod2(rows, data_.rank(n));
      // Coboundaries: δ e_j for (n-1)-cells j.
      std::vector<BitVector> cobounds;
      for (std::size_t j = 0; j < data_.rank(n - 1); ++j) cobounds.push_back(coboundary(n - 1, BitVector::unit(data_.rank(n - 1), j)));
      F2Echelon b(data_.rank(n), 0);
      for (const auto& v : cobounds) b.insert(v, BitVector(0));
      const std::size_t dim = cocycles.size() - b.rank();
      F2Echelon e(data_.rank(n), dim);
      for (const auto& v : cobounds) e.insert(v, BitVector(dim));
      std::vector<BitVector> reps;
      for (const auto& z : cocycles) {
        if (reps.size() == dim) break;
        if (e.insert(z, BitVector::unit(dim, reps.size()))) reps.push_back(z);
      }
      basis_.push_back(std::move(reps));
      echelon_.push_back(std::move(e));
    }
  }

  const ChainComplexData& data() const { return data_; }
  int top() const { return data_.top(); }
  std::size_t rank(int n) const { return n >= 0 && n <= top() ? basis_[n].size() : 0; }
  const std::vector<BitVector>& basis(int n) const { return basis_.at(n); }

  /// (δα)(c) = α(∂c).
  BitVector coboundary(int n, const BitVector& alpha) const {
    BitVector out(data_.rank(n + 1));
    if (n < 0 || n + 1 > top()) return out;
    const ExactMatrix& d = data_.boundary[n + 1];
    for (std::size_t c = 0; c < d.cols(); ++c) {
      bool bit = false;
      for (std::size_t j = 0; j < d.rows(); ++j)
        if (d(j, c) % 2 != 0 && alpha.get(j)) bit = !bit;
      out.set(c, bit);
    }
    return out;
  }

  bool is_cocycle(int n, const BitVector& alpha) const { return !coboundary(n, alpha).any(); }

  /// Coordinates of [α] in the chosen basis of H^n.
  BitVector express(int n, const BitVector& alpha) const {
    if (n < 0 || n > top()) return BitVector(0);
    if (alpha.size() != data_.rank(n)) throw std::invalid_argument("cochain has the wrong length");
    if (!is_cocycle(n, alpha)) throw NotACocycle("cochain of degree " + std::to_string(n) + " is not a cocycle");
    auto r = echelon_[n].reduce(alpha);
    if (r.remainder.any()) throw std::logic_error("cocycle outside the span of the chosen basis");
    return r.tag;
  }

  /// δ of a uniformly random (n-1)-cochain.
  BitVector random_coboundary(int n, std::mt19937_64& rng) const {
    if (n < 1) return BitVector(data_.rank(n));
    BitVector beta(data_.rank(n - 1));
    for (std::size_t j = 0; j < beta.size(); ++j) beta.set(j, rng() & 1u);
    return coboundary(n - 1, beta);
  }

 private:
  BitVector boundary_row(int n, std::size_t c) const {
    BitVector v(data_.rank(n - 1));
    const ExactMatrix& d = data_.boundary[n];
    for (std::size_t j = 0; j < d.rows(); ++j)
      if (d(j, c) % 2 != 0) v.set(j, true);
    return v;
  }

  ChainComplexData data_;
  std::vector<std::vector<BitVector>> basis_;
  std::vector<F2Echelon> echelon_;
};

/// Cup products and Steenrod squares on a finite complex, mod 2.
template <FiniteComplex X>
class SteenrodAlgebra {
 public:
  explicit SteenrodAlgebra(const X& x) : x_(&x), h_(chain_complex(x)) {}

  const X& complex() const { return *x_; }
  const Mod2Cohomology& cohomology() const { return h_; }

  /// (α⊗β)(c) summed over the transported coproduct of (p+q)-cells c.
  BitVector cup(int p, const BitVector& alpha, int q, const BitVector& beta) const {
    return pair_with(cup_i_pushforward(0), p + q, p, alpha, q, beta);
  }

  /// Sq^k α for α of degree n, via Δ_{n-k}; zero for k > n.
  BitVector sq(int k, int n, const BitVector& alpha) const {
    if (k < 0) throw std::invalid_argument("Sq^k needs k >= 0");
    if (!h_.is_cocycle(n, alpha)) throw NotACocycle("Sq^k needs a cocycle representative");
    if (k > n) return BitVector(h_.data().rank(n + k));
    return pair_with(cup_i_pushforward(n - k), n + k, n, alpha, n, alpha);
  }

  /// Classical Bockstein: lift to Z, take δ, halve, reduce mod 2.
  BitVector bockstein(int n, const BitVector& alpha) const {
    if (!h_.is_cocycle(n, alpha)) throw NotACocycle("Bockstein needs a cocycle representative");
    BitVector out(h_.data().rank(n + 1));
    if (n + 1 > h_.top()) return out;
    const ExactMatrix& d = h_.data().boundary[n + 1];
    const Ring z = Ring::integers();
    for (std::size_t c = 0; c < d.cols(); ++c) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < d.rows(); ++j)
        if (alpha.get(j)) s = z.add(s, d(j, c));
      if (s % 2 != 0) throw std::logic_error("integral lift of a mod-2 cocycle has odd coboundary");
      out.set(c, (s / 2) % 2 != 0);
    }
    return out;
  }

  /// matrix[i][j] = coefficient of basis class i of H^{n+k} in Sq^k(class j of H^n).
  std::vector<std::vector<int>> sq_matrix(int k, int n) const {
    return class_matrix(n, n + k, [&](const BitVector& a) { return sq(k, n, a); });
  }

  std::vector<std::vector<int>> bockstein_matrix(int n) const {
    return class_matrix(n, n + 1, [&](const BitVector& a) { return bockstein(n, a); });
  }

  template <class F>
  std::vector<std::vector<int>> class_matrix(int n, int target, F&& op) const {
    const std::size_t rows = h_.rank(target), cols = h_.rank(n);
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) {
      BitVector coords = h_.express(target, op(h_.basis(n)[j]));
      for (std::size_t i = 0; i < rows; ++i) m[i][j] = coords.get(i) ? 1 : 0;
    }
    return m;
  }

 private:
  const Pushforward<X>& cup_i_pushforward(int i) const {
    auto it = cache_.find(i);
    if (it == cache_.end()) it = cache_.emplace(i, Pushforward<X>(*x_, cup_i_closed(i), Ring::mod(2))).first;
    return it->second;
  }

  BitVector pair_with(const Pushforward<X>& push, int degree, int p, const BitVector& alpha, int q,
                      const BitVector& beta) const {
    BitVector out(h_.data().rank(degree));
    for (std::size_t c = 0; c < out.size(); ++c) {
      bool bit = false;
      for (const auto& [t, coeff] : push(degree, c)) {
        if (t[0].dim != p || t[1].dim != q) continue;
        if (coeff % 2 != 0 && alpha.get(t[0].index) && beta.get(t[1].index)) bit = !bit;
      }
      out.set(c, bit);
    }
    return out;
  }

  const X* x_;
  Mod2Cohomology h_;
  mutable std::map<int, Pushforward<X>> cache_;
};

/// (EZ^* β)(c) = β(EZ c) for a degree-n cochain β on the triangulation.
inline BitVector ez_pullback(const LatticeCubicalComplex& x, const TriangulatedComplex& t, int n,
                             const BitVector& beta) {
  BitVector out(x.count(n));
  for (std::size_t i = 0; i < x.count(n); ++i) {
    bool bit = false;
    const CellChain image = t.ez_map(CellChain::basis(CellRef{n, static_cast<int>(i)}, 1, Ring::mod(2)));
    for (const auto& [cell, c] : image)
      if (c % 2 != 0 && beta.get(cell.index)) bit = !bit;
    out.set(i, bit);
  }
  return out;
}

struct EzComparison {
  bool isomorphism = true;  // EZ^* : H^n(T X) -> H^n(X) bijective in every degree
  bool sq_agrees = true;    // Sq^k EZ^* = EZ^* Sq^k on every basis class
  std::size_t classes_checked = 0;
};

/// Compares Steenrod squares on a lattice complex and on its triangulation
/// through the cohomology isomorphism induced by EZ.
inline EzComparison compare_under_ez(const LatticeCubicalComplex& x, const TriangulatedComplex& t) {
  SteenrodAlgebra<LatticeCubicalComplex> cub(x);
  SteenrodAlgebra<SimplicialComplex> tri(t.complex());
  EzComparison out;
  const auto& hx = cub.cohomology();
  const auto& ht = tri.cohomology();
  const int top = std::max(hx.top(), ht.top());
  for (int n = 0; n <= top; ++n) {
    if (hx.rank(n) != ht.rank(n)) {
      out.isomorphism = false;
      continue;
    }
    F2Echelon image(hx.rank(n), 0);
    for (std::size_t j = 0; j < ht.rank(n); ++j) {
      const BitVector& beta = ht.basis(n)[j];
      image.insert(hx.express(n, ez_pullback(x, t, n, beta)), BitVector(0));
      for (int k = 0; k <= n; ++k) {
        if (n + k > top) break;
        const BitVector lhs = hx.express(n + k, cub.sq(k, n, ez_pullback(x, t, n, beta)));
        const BitVector rhs = hx.express(n + k, ez_pullback(x, t, n + k, tri.sq(k, n, beta)));
        out.sq_agrees = out.sq_agrees && lhs == rhs;
        ++out.classes_checked;
      }
    }
    if (image.rank() != hx.rank(n)) out.isomorphism = false;
  }
  return out;
}

}  // namespace einfty
