// The two representable chain models carrying ε, Δ and *, and the
// differential on tensor powers.
#pragma once

#include <concepts>
#include <cstdint>

#include "einfty/cube.hpp"
#include "einfty/simplex.hpp"

namespace einfty {

/// A chain complex with a basis and the three structure maps of an
/// M-bialgebra.
template <class M>
concept ChainModel = requires(const typename M::Basis& b, Ring r) {
  { M::degree(b) } -> std::convertible_to<int>;
  { M::counit(b) } -> std::convertible_to<std::int64_t>;
  { M::coproduct(b, r) } -> std::same_as<TensorElement<typename M::Basis>>;
  { M::star(b, b, r) } -> std::same_as<FreeElement<typename M::Basis>>;
  { M::boundary(b, r) } -> std::same_as<FreeElement<typename M::Basis>>;
  { render(b) };
};

/// chains(□^n) with the Serre coalgebra and the degree 1 product.
struct CubicalModel {
  using Basis = CubeWord;
  static constexpr const char* name = "cubical";
  static int degree(const CubeWord& w) { return w.degree(); }
  static std::int64_t counit(const CubeWord& w) { return cube_counit(w); }
  static TensorElement<CubeWord> coproduct(const CubeWord& w, Ring r) { return cube_coproduct(w, r); }
  static CubeChain star(const CubeWord& x, const CubeWord& y, Ring r) { return cube_star(x, y, r); }
  static CubeChain boundary(const CubeWord& w, Ring r) { return cube_boundary(w, r); }
  static CubeWord top(int n) { return CubeWord::top(n); }
  static std::vector<CubeWord> basis(int n) { return all_cube_words(n); }
};

/// chains(△^n) with Alexander-Whitney and the join.
struct SimplicialModel {
  using Basis = SimplexWord;
  static constexpr const char* name = "simplicial";
  static int degree(const SimplexWord& s) { return s.degree(); }
  static std::int64_t counit(const SimplexWord& s) { return simplex_counit(s); }
  static TensorElement<SimplexWord> coproduct(const SimplexWord& s, Ring r) { return aw_coproduct(s, r); }
  static SimplexChain star(const SimplexWord& a, const SimplexWord& b, Ring r) { return simplex_join(a, b, r); }
  static SimplexChain boundary(const SimplexWord& s, Ring r) { return simplex_boundary(s, r); }
  static SimplexWord top(int n) { return SimplexWord::top(n); }
  static std::vector<SimplexWord> basis(int n) { return all_simplex_words(n); }
};

static_assert(ChainModel<CubicalModel>);
static_assert(ChainModel<SimplicialModel>);

template <class B, class DegreeFn>
int tensor_degree(const Tensor<B>& t, DegreeFn&& degree) {
  int d = 0;
  for (const auto& b : t) d += degree(b);
  return d;
}

/// ∂(x_1 ⊗ ... ⊗ x_r) = Σ_j (-1)^{|x_1|+...+|x_{j-1}|} x_1 ⊗ .. ∂x_j .. ⊗ x_r.
template <class B, class BoundaryFn, class DegreeFn>
TensorElement<B> tensor_boundary(const TensorElement<B>& x, BoundaryFn&& boundary, DegreeFn&& degree) {
  TensorElement<B> out(x.ring());
  for (const auto& [t, c] : x) {
    int prefix = 0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      const std::int64_t sign = prefix % 2 == 0 ? 1 : -1;
      for (const auto& [b, bc] : boundary(t[j], x.ring())) {
        Tensor<B> u = t;
        u[j] = b;
        out.add_term(u, x.ring().mul(x.ring().mul(c, bc), sign));
      }
      prefix += degree(t[j]);
    }
  }
  return out;
}

template <ChainModel M>
TensorElement<typename M::Basis> model_tensor_boundary(const TensorElement<typename M::Basis>& x) {
  return tensor_boundary(
      x, [](const typename M::Basis& b, Ring r) { return M::boundary(b, r); },
      [](const typename M::Basis& b) { return M::degree(b); });
}

/// The transposition T(x ⊗ y) = (-1)^{|x||y|} y ⊗ x on binary tensors.
template <class B, class DegreeFn>
TensorElement<B> transpose(const TensorElement<B>& x, DegreeFn&& degree) {
  TensorElement<B> out(x.ring());
  for (const auto& [t, c] : x) {
    if (t.size() != 2) throw std::invalid_argument("transpose expects binary tensors");
    const int sign = (degree(t[0]) * degree(t[1])) % 2 == 0 ? 1 : -1;
    out.add_term(Tensor<B>{t[1], t[0]}, x.ring().mul(c, sign));
  }
  return out;
}

/// Linear extension of a basis map f to tensors: f^{⊗r}.
template <class B, class C, class F>
TensorElement<C> tensor_power_map(const TensorElement<B>& x, F&& f) {
  TensorElement<C> out(x.ring());
  for (const auto& [t, c] : x) {
    TensorElement<C> acc = TensorElement<C>::basis(Tensor<C>{}, c, x.ring());
    for (const auto& b : t) {
      TensorElement<C> next(x.ring());
      FreeElement<C> image = f(b);
      for (const auto& [prefix, pc] : acc)
        for (const auto& [ib, ic] : image) {
          Tensor<C> u = prefix;
          u.push_back(ib);
          next.add_term(u, x.ring().mul(pc, ic));
        }
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

template <class B>
TensorElement<B> as_tensor(const FreeElement<B>& x) {
  TensorElement<B> out(x.ring());
  for (const auto& [b, c] : x) out.add_term(Tensor<B>{b}, c);
  return out;
}

template <class B>
std::string render_tensor(const Tensor<B>& t) {
  if (t.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += " ⊗ ";
    s += render(t[i]);
  }
  return s;
}

template <class B>
std::string render(const TensorElement<B>& x) {
  return render_element(x, [](const Tensor<B>& t) { return render_tensor(t); });
}

template <class B>
std::string render(const FreeElement<B>& x) {
  return render_element(x, [](const B& b) { return render(b); });
}

}  // namespace einfty
