// Finite complexes: lattice cubical complexes, presented cubical sets and
// simplicial complexes with ordered vertices. Each cell carries a
// characteristic map from a representable, through which boundaries and
// single-input cooperations are transported.
#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "einfty/comparison.hpp"
#include "einfty/evaluate.hpp"

namespace einfty {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cell of a complex, addressed by dimension and index within it.
struct CellRef {
  int dim = 0;
  int index = 0;
  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

using CellChain = FreeElement<CellRef>;
using CellTensorElement = TensorElement<CellRef>;

template <class X>
concept FiniteComplex = requires(const X& x, const typename X::Model::Basis& b, int n, std::size_t i, Ring r) {
  typename X::Model;
  requires ChainModel<typename X::Model>;
  { x.dimension() } -> std::convertible_to<int>;
  { x.count(n) } -> std::convertible_to<std::size_t>;
  { x.label(n, i) } -> std::convertible_to<std::string>;
  { x.transport(b, n, i, r) } -> std::same_as<CellChain>;
};

/// ∂ of a cell: the boundary of the top representable element, transported.
template <FiniteComplex X>
CellChain cell_boundary(const X& x, int n, std::size_t i, Ring ring = Ring::integers()) {
  using M = typename X::Model;
  CellChain out(ring);
  for (const auto& [b, c] : M::boundary(M::top(n), ring)) out.add_scaled(x.transport(b, n, i, ring), c);
  return out;
}

template <FiniteComplex X>
CellChain chain_boundary(const X& x, const CellChain& c) {
  CellChain out(c.ring());
  for (const auto& [cell, k] : c) out.add_scaled(cell_boundary(x, cell.dim, cell.index, c.ring()), k);
  return out;
}

/// Per-cell pushforward of a single-input term. The term is evaluated once
/// per cell dimension on the top representable element and each output
/// tensor factor is transported along the cell's characteristic map.
template <FiniteComplex X>
class Pushforward {
 public:
  using M = typename X::Model;

  Pushforward(const X& complex, CoopTerm term, Ring ring = Ring::integers())
      : complex_(&complex), term_(std::move(term)), ring_(ring) {
    if (term_.signature().inputs != 1)
      throw ArityError("pushforward needs a term with one input, got " + std::to_string(term_.signature().inputs));
  }

  const CoopTerm& term() const { return term_; }
  Ring ring() const { return ring_; }

  CellTensorElement operator()(int n, std::size_t i) const {
    const auto& top = top_value(n);
    CellTensorElement out(ring_);
    for (const auto& [t, c] : top) {
      CellTensorElement acc = CellTensorElement::basis(Tensor<CellRef>{}, c, ring_);
      for (const auto& b : t) {
        CellChain image = complex_->transport(b, n, i, ring_);
        if (image.is_zero()) {
          acc = CellTensorElement(ring_);
          break;
        }
        CellTensorElement next(ring_);
        for (const auto& [prefix, pc] : acc)
          for (const auto& [cell, cc] : image) {
            Tensor<CellRef> u = prefix;
            u.push_back(cell);
            next.add_term(u, ring_.mul(pc, cc));
          }
        acc = std::move(next);
      }
      out += acc;
    }
    return out;
  }

  CellTensorElement operator()(const CellChain& c) const {
    CellTensorElement out(ring_);
    for (const auto& [cell, k] : c) out.add_scaled((*this)(cell.dim, cell.index), k);
    return out;
  }

 private:
  const TensorElement<typename M::Basis>& top_value(int n) const {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, evaluate<M>(term_, M::top(n), ring_)).first;
    return it->second;
  }

  const X* complex_;
  CoopTerm term_;
  Ring ring_;
  mutable std::map<int, TensorElement<typename M::Basis>> cache_;
};

template <FiniteComplex X>
CellTensorElement pushforward_coop(const CoopTerm& term, const X& x, const CellChain& chain) {
  return Pushforward<X>(x, term, chain.ring())(chain);
}

// ---------------------------------------------------------------------------
// Lattice cubical complexes

/// Elementary interval [lo, lo] or [lo, lo + 1].
struct Interval {
  long lo = 0;
  long hi = 0;
  bool degenerate() const { return lo == hi; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

using ElementaryCube = std::vector<Interval>;

inline int cube_dimension(const ElementaryCube& q) {
  int d = 0;
  for (const auto& iv : q) d += iv.degenerate() ? 0 : 1;
  return d;
}

inline std::string render_cube(const ElementaryCube& q) {
  std::string s;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (j) s += "x";
    s += "[" + std::to_string(q[j].lo) + "," + std::to_string(q[j].hi) + "]";
  }
  return s;
}

/// A finite set of elementary cubes in Z^d, closed under faces.
class LatticeCubicalComplex {
 public:
  using Model = CubicalModel;

  /// Face closure of the listed cubes.
  LatticeCubicalComplex(int ambient, const std::vector<ElementaryCube>& cubes) : ambient_(ambient) {
    if (ambient < 1) throw ValidationError("lattice complex needs dimension >= 1");
    std::set<ElementaryCube> all;
    std::vector<ElementaryCube> stack;
    for (const auto& q : cubes) {
      if (static_cast<int>(q.size()) != ambient)
        throw ValidationError("cube " + render_cube(q) + " does not have " + std::to_string(ambient) + " intervals");
      for (const auto& iv : q)
        if (iv.hi != iv.lo && iv.hi != iv.lo + 1)
          throw ValidationError("interval [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                                "] is not elementary");
      stack.push_back(q);
    }
    while (!stack.empty()) {
      ElementaryCube q = std::move(stack.back());
      stack.pop_back();
      if (!all.insert(q).second) continue;
      for (std::size_t j = 0; j < q.size(); ++j)
        if (!q[j].degenerate()) {
          ElementaryCube lo = q, hi = q;
          lo[j].hi = lo[j].lo;
          hi[j].lo = hi[j].hi;
          stack.push_back(lo);
          stack.push_back(hi);
        }
    }
    for (const auto& q : all) {
      const int k = cube_dimension(q);
      if (static_cast<int>(cells_.size()) <= k) cells_.resize(k + 1);
      cells_[k].push_back(q);
    }
    for (int k = 0; k < static_cast<int>(cells_.size()); ++k)
      for (std::size_t i = 0; i < cells_[k].size(); ++i) index_.emplace(cells_[k][i], CellRef{k, static_cast<int>(i)});
  }

  int ambient() const { return ambient_; }
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t count(int n) const { return n >= 0 && n < static_cast<int>(cells_.size()) ? cells_[n].size() : 0; }
  const ElementaryCube& cell(int n, std::size_t i) const { return cells_.at(n).at(i); }
  std::string label(int n, std::size_t i) const { return render_cube(cell(n, i)); }

  std::optional<CellRef> find(const ElementaryCube& q) const {
    auto it = index_.find(q);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// The face of cell (n, i) named by a word of □^n: slot j refers to the
  /// j-th nondegenerate coordinate of the cell.
  CellChain transport(const CubeWord& w, int n, std::size_t i, Ring ring) const {
    ElementaryCube q = cell(n, i);
    if (w.size() != n) throw std::invalid_argument("word length does not match cell dimension");
    int slot = 0;
    for (auto& iv : q) {
      if (iv.degenerate()) continue;
      const CubeSymbol s = w[++slot];
      if (s == CubeSymbol::E0) iv.hi = iv.lo;
      if (s == CubeSymbol::E1) iv.lo = iv.hi;
    }
    auto ref = find(q);
    if (!ref) throw std::logic_error("face missing from a face-closed complex");
    return CellChain::basis(*ref, 1, ring);
  }

 private:
  int ambient_;
  std::vector<std::vector<ElementaryCube>> cells_;
  std::map<ElementaryCube, CellRef> index_;
};

// ---------------------------------------------------------------------------
// Presented cubical sets

/// A finite cubical set given by its nondegenerate cells and face tables.
/// Elements of X_n are pairs (cell, D) where D ⊂ {1..n} lists the collapsed
/// coordinates; a face entry's degeneracy list s_{j_1} ... s_{j_k} (strictly
/// decreasing) is exactly D = {j_1, ..., j_k}.
class PresentedCubicalSet {
 public:
  using Model = CubicalModel;

  struct Face {
    int target = 0;  // cell index
    std::vector<int> degens;
  };
  struct Cell {
    std::string id;
    int dim = 0;
    // faces[2 * (i - 1) + eps] for i in 1..dim.
    std::vector<Face> faces;
  };
  struct Element {
    int cell = 0;
    std::vector<int> collapsed;  // ascending
    friend bool operator==(const Element&, const Element&) = default;
  };

  struct FaceEntry {
    int i = 0;
    int eps = 0;
    std::string target;
    std::vector<int> degens;
  };

  PresentedCubicalSet(const std::vector<std::pair<std::string, int>>& cells,
                      const std::map<std::string, std::vector<FaceEntry>>& faces) {
    for (const auto& [id, dim] : cells) {
      if (dim < 0) throw ValidationError("cell '" + id + "' has negative dimension");
      if (by_id_.count(id)) throw ValidationError("duplicate cell id '" + id + "'");
      by_id_[id] = static_cast<int>(cells_.size());
      cells_.push_back(Cell{id, dim, {}});
    }
    for (const auto& [id, entries] : faces)
      if (!by_id_.count(id)) throw ValidationError("faces given for unknown cell '" + id + "'");
    for (auto& c : cells_) {
      c.faces.assign(2 * c.dim, Face{-1, {}});
      auto it = faces.find(c.id);
      const std::size_t expected = 2 * static_cast<std::size_t>(c.dim);
      const std::size_t given = it == faces.end() ? 0 : it->second.size();
      if (given != expected)
        throw ValidationError("cell '" + c.id + "' of dimension " + std::to_string(c.dim) + " needs " +
                              std::to_string(expected) + " face entries, got " + std::to_string(given));
      if (it == faces.end()) continue;
      for (const auto& e : it->second) {
        if (e.i < 1 || e.i > c.dim || (e.eps != 0 && e.eps != 1))
          throw ValidationError("cell '" + c.id + "': face index (" + std::to_string(e.i) + "," + std::to_string(e.eps) +
                                ") out of range");
        auto t = by_id_.find(e.target);
        if (t == by_id_.end()) throw ValidationError("cell '" + c.id + "': unknown face target '" + e.target + "'");
        for (std::size_t k = 0; k < e.degens.size(); ++k) {
          if (e.degens[k] < 1 || e.degens[k] > c.dim - 1)
            throw ValidationError("cell '" + c.id + "': degeneracy index out of range");
          if (k > 0 && e.degens[k - 1] <= e.degens[k])
            throw ValidationError("cell '" + c.id + "': degeneracy list must be strictly decreasing");
        }
        if (cells_[t->second].dim + static_cast<int>(e.degens.size()) != c.dim - 1)
          throw ValidationError("cell '" + c.id + "': face (" + std::to_string(e.i) + "," + std::to_string(e.eps) +
                                ") has the wrong dimension");
        Face& slot = c.faces[2 * (e.i - 1) + e.eps];
        if (slot.target != -1)
          throw ValidationError("cell '" + c.id + "': face (" + std::to_string(e.i) + "," + std::to_string(e.eps) +
                                ") given twice");
        slot.target = t->second;
        slot.degens = e.degens;
        std::sort(slot.degens.begin(), slot.degens.end());
      }
    }
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      const int d = cells_[k].dim;
      if (static_cast<int>(by_dim_.size()) <= d) by_dim_.resize(d + 1);
      position_.push_back(static_cast<int>(by_dim_[d].size()));
      by_dim_[d].push_back(static_cast<int>(k));
    }
    check_face_identities();
  }

  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int n) const { return n >= 0 && n < static_cast<int>(by_dim_.size()) ? by_dim_[n].size() : 0; }
  std::string label(int n, std::size_t i) const { return cells_[by_dim_.at(n).at(i)].id; }
  const Cell& cell(int n, std::size_t i) const { return cells_[by_dim_.at(n).at(i)]; }

  /// d_i^ε on an element of X_n.
  Element face(const Element& e, int n, int i, int eps) const {
    auto renumber = [i](int d) { return d > i ? d - 1 : d; };
    Element out;
    if (std::binary_search(e.collapsed.begin(), e.collapsed.end(), i)) {
      out.cell = e.cell;
      for (int d : e.collapsed)
        if (d != i) out.collapsed.push_back(renumber(d));
      return out;
    }
    std::vector<int> kept;
    for (int k = 1; k <= n; ++k)
      if (!std::binary_search(e.collapsed.begin(), e.collapsed.end(), k)) kept.push_back(k);
    const int r = static_cast<int>(std::find(kept.begin(), kept.end(), i) - kept.begin()) + 1;
    const Face& f = cells_[e.cell].faces[2 * (r - 1) + eps];
    std::vector<int> kept_after;
    for (int k : kept)
      if (k != i) kept_after.push_back(renumber(k));
    out.cell = f.target;
    for (int d : e.collapsed) out.collapsed.push_back(renumber(d));
    for (int j : f.degens) out.collapsed.push_back(kept_after[j - 1]);
    std::sort(out.collapsed.begin(), out.collapsed.end());
    return out;
  }

  /// X(w)(cell): apply the faces named by the constant slots of w, highest first.
  Element apply(const CubeWord& w, int n, std::size_t i) const {
    Element e{by_dim_.at(n).at(i), {}};
    int dim = n;
    for (int slot = n; slot >= 1; --slot) {
      if (w[slot] == CubeSymbol::I) continue;
      e = face(e, dim, slot, w[slot] == CubeSymbol::E1 ? 1 : 0);
      --dim;
    }
    return e;
  }

  CellChain transport(const CubeWord& w, int n, std::size_t i, Ring ring) const {
    if (w.size() != n) throw std::invalid_argument("word length does not match cell dimension");
    Element e = apply(w, n, i);
    if (!e.collapsed.empty()) return CellChain(ring);
    return CellChain::basis(CellRef{cells_[e.cell].dim, position_[e.cell]}, 1, ring);
  }

 private:
  void check_face_identities() const {
    // d_i^ε d_j^ω = d_{j-1}^ω d_i^ε for i < j.
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      const int n = cells_[k].dim;
      const Element top{static_cast<int>(k), {}};
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int eps = 0; eps <= 1; ++eps)
            for (int om = 0; om <= 1; ++om) {
              Element a = face(face(top, n, j, om), n - 1, i, eps);
              Element b = face(face(top, n, i, eps), n - 1, j - 1, om);
              if (!(a == b))
                throw ValidationError("cell '" + cells_[k].id + "' violates the cubical identity d_" +
                                      std::to_string(i) + "^" + std::to_string(eps) + " d_" + std::to_string(j) + "^" +
                                      std::to_string(om) + " = d_" + std::to_string(j - 1) + "^" + std::to_string(om) +
                                      " d_" + std::to_string(i) + "^" + std::to_string(eps));
            }
    }
  }

  std::vector<Cell> cells_;
  std::map<std::string, int> by_id_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<int> position_;
};

// ---------------------------------------------------------------------------
// Simplicial complexes

/// A simplicial complex on integer vertices; each simplex is listed in the
/// global vertex order, which the Alexander-Whitney map and join use.
class SimplicialComplex {
 public:
  using Model = SimplicialModel;

  explicit SimplicialComplex(const std::vector<std::vector<long>>& facets) {
    std::set<std::vector<long>> all;
    for (auto f : facets) {
      if (f.empty()) throw ValidationError("empty facet");
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw ValidationError("facet with a repeated vertex");
      if (f.size() > 20) throw ValidationError("facets are limited to 20 vertices");
      const std::uint32_t full = (1u << f.size()) - 1;
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::vector<long> s;
        for (std::size_t b = 0; b < f.size(); ++b)
          if ((mask >> b) & 1) s.push_back(f[b]);
        all.insert(std::move(s));
      }
    }
    for (const auto& s : all) {
      const int k = static_cast<int>(s.size()) - 1;
      if (static_cast<int>(simplices_.size()) <= k) simplices_.resize(k + 1);
      simplices_[k].push_back(s);
    }
    for (int k = 0; k < static_cast<int>(simplices_.size()); ++k) {
      std::sort(simplices_[k].begin(), simplices_[k].end());
      for (std::size_t i = 0; i < simplices_[k].size(); ++i)
        index_.emplace(simplices_[k][i], CellRef{k, static_cast<int>(i)});
    }
  }

  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t count(int n) const { return n >= 0 && n < static_cast<int>(simplices_.size()) ? simplices_[n].size() : 0; }
  const std::vector<long>& simplex(int n, std::size_t i) const { return simplices_.at(n).at(i); }

  std::string label(int n, std::size_t i) const {
    std::string s = "[";
    const auto& v = simplex(n, i);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(v[k]);
    }
    return s + "]";
  }

  std::optional<CellRef> find(const std::vector<long>& vertices) const {
    auto it = index_.find(vertices);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  CellChain transport(const SimplexWord& s, int n, std::size_t i, Ring ring) const {
    const auto& v = simplex(n, i);
    std::vector<long> image;
    for (int k : s.vertices()) image.push_back(v.at(k));
    return CellChain::basis(*find(image), 1, ring);
  }

 private:
  std::vector<std::vector<std::vector<long>>> simplices_;
  std::map<std::vector<long>, CellRef> index_;
};

static_assert(FiniteComplex<LatticeCubicalComplex>);
static_assert(FiniteComplex<PresentedCubicalSet>);
static_assert(FiniteComplex<SimplicialComplex>);

// ---------------------------------------------------------------------------
// Triangulation and the Eilenberg-Zilber map

/// Staircase triangulation of a lattice cubical complex. Vertices are the
/// lattice points, numbered in lexicographic order (which extends the
/// product order), and simplices are the strictly increasing chains of
/// lattice points inside a single cube of X.
class TriangulatedComplex {
 public:
  explicit TriangulatedComplex(const LatticeCubicalComplex& x) : source_(&x) {
    std::set<std::vector<long>> points;
    for (std::size_t i = 0; i < x.count(0); ++i) {
      std::vector<long> p;
      for (const auto& iv : x.cell(0, i)) p.push_back(iv.lo);
      points.insert(p);
    }
    long id = 0;
    for (const auto& p : points) {
      vertex_id_[p] = id++;
      points_.push_back(p);
    }
    std::vector<std::vector<long>> facets;
    for (int n = 0; n <= x.dimension(); ++n)
      for (std::size_t i = 0; i < x.count(n); ++i)
        for (const auto& s : all_product_simplices(n)) facets.push_back(vertex_ids(s, n, i));
    complex_.emplace(facets);
  }

  const SimplicialComplex& complex() const { return *complex_; }
  const std::vector<long>& point(long vertex) const { return points_.at(vertex); }

  /// Vertex ids of a product simplex placed in cell (n, i) of the source.
  std::vector<long> vertex_ids(const ProductSimplex& s, int n, std::size_t i) const {
    const ElementaryCube& q = source_->cell(n, i);
    std::vector<long> out;
    for (std::uint32_t col : s.columns()) {
      std::vector<long> p;
      int slot = 0;
      for (const auto& iv : q) {
        if (iv.degenerate()) {
          p.push_back(iv.lo);
        } else {
          ++slot;
          p.push_back(((col >> (n - slot)) & 1) ? iv.hi : iv.lo);
        }
      }
      out.push_back(vertex_id_.at(p));
    }
    return out;
  }

  /// EZ on a chain of the source complex.
  CellChain ez_map(const CellChain& c) const {
    CellChain out(c.ring());
    for (const auto& [cell, k] : c)
      for (const auto& [s, sc] : eilenberg_zilber(CubeWord::top(cell.dim), c.ring())) {
        auto ref = complex_->find(vertex_ids(s, cell.dim, cell.index));
        out.add_term(*ref, c.ring().mul(k, sc));
      }
    return out;
  }

  std::string label_point(long vertex) const {
    std::string s = "(";
    for (std::size_t k = 0; k < points_[vertex].size(); ++k) {
      if (k) s += ",";
      s += std::to_string(points_[vertex][k]);
    }
    return s + ")";
  }

 private:
  const LatticeCubicalComplex* source_;
  std::map<std::vector<long>, long> vertex_id_;
  std::vector<std::vector<long>> points_;
  std::optional<SimplicialComplex> complex_;
};

inline TriangulatedComplex triangulate(const LatticeCubicalComplex& x) { return TriangulatedComplex(x); }

}  // namespace einfty
