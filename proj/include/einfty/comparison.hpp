// Comparison maps on representables: Cartan-Serre chains(□^n) -> chains(△^n)
// and Eilenberg-Zilber chains(□^n) -> chains((△^1)^{×n}), plus pushforward of
// single-input terms to products of intervals.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "einfty/evaluate.hpp"

namespace einfty {

/// CS(x) = 0 if some x_l = [0] precedes the last interval slot q_m;
/// otherwise [q_1 - 1, ..., q_m - 1, p(x) - 1] where p(x) is the first slot
/// holding [0] (n + 1 if none).
inline SimplexChain cartan_serre(const CubeWord& x, Ring ring = Ring::integers()) {
  const int n = x.size();
  const auto q = x.interval_slots();
  int p = n + 1;
  for (int l = 1; l <= n; ++l)
    if (x[l] == CubeSymbol::E0) {
      p = l;
      break;
    }
  SimplexChain out(ring);
  if (!q.empty() && p < q.back()) return out;
  std::vector<int> v;
  for (int s : q) v.push_back(s - 1);
  v.push_back(p - 1);
  out.add_term(SimplexWord(n, std::move(v)), 1);
  return out;
}

inline SimplexChain cartan_serre(const CubeChain& c) {
  return c.linear_map([&](const CubeWord& w) { return cartan_serre(w, c.ring()); });
}

/// CS^{⊗r}.
inline TensorElement<SimplexWord> cartan_serre(const TensorElement<CubeWord>& x) {
  return tensor_power_map<CubeWord, SimplexWord>(x, [&](const CubeWord& w) { return cartan_serre(w, x.ring()); });
}

/// EZ(x) = Σ_{σ ∈ S_m} sign(σ) · (staircase simplex flipping the interval
/// coordinates of x in the order σ), other coordinates held at their constant.
inline ProductChain eilenberg_zilber(const CubeWord& x, Ring ring = Ring::integers()) {
  const int n = x.size();
  std::uint32_t base = 0;
  for (int i = 1; i <= n; ++i)
    if (x[i] == CubeSymbol::E1) base |= 1u << (n - i);
  std::vector<int> order = x.interval_slots();
  ProductChain out(ring);
  // next_permutation walks S_m in lexicographic order starting from the identity.
  do {
    std::vector<std::uint32_t> cols{base};
    for (int slot : order) cols.push_back(cols.back() | (1u << (n - slot)));
    int inversions = 0;
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = a + 1; b < order.size(); ++b)
        if (order[a] > order[b]) ++inversions;
    out.add_term(ProductSimplex(n, std::move(cols)), inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

inline ProductChain eilenberg_zilber(const CubeChain& c) {
  return c.linear_map([&](const CubeWord& w) { return eilenberg_zilber(w, c.ring()); });
}

inline TensorElement<ProductSimplex> eilenberg_zilber(const TensorElement<CubeWord>& x) {
  return tensor_power_map<CubeWord, ProductSimplex>(x,
                                                    [&](const CubeWord& w) { return eilenberg_zilber(w, x.ring()); });
}

/// Image of a simplex of △^m under the vertex map i -> columns[i]; zero when
/// two consecutive vertices land on the same column.
inline ProductChain push_simplex(const SimplexWord& s, const ProductSimplex& target, Ring ring) {
  std::vector<std::uint32_t> cols;
  for (int v : s.vertices()) cols.push_back(target.columns()[v]);
  ProductSimplex image(target.factors(), std::move(cols));
  ProductChain out(ring);
  if (!image.is_degenerate()) out.add_term(image, 1);
  return out;
}

/// A single-input term on chains((△^1)^{×k}): evaluate on [0..m] in △^m and
/// push forward along the simplex's characteristic map.
inline TensorElement<ProductSimplex> pushforward(const CoopTerm& term, const ProductSimplex& s,
                                                 Ring ring = Ring::integers()) {
  if (term.signature().inputs != 1) throw ArityError("pushforward needs a single-input term");
  if (s.is_degenerate()) return TensorElement<ProductSimplex>(ring);
  const auto top = evaluate<SimplicialModel>(term, SimplexWord::top(s.degree()), ring);
  return tensor_power_map<SimplexWord, ProductSimplex>(top,
                                                       [&](const SimplexWord& v) { return push_simplex(v, s, ring); });
}

inline TensorElement<ProductSimplex> pushforward(const CoopTerm& term, const ProductChain& c) {
  TensorElement<ProductSimplex> out(c.ring());
  for (const auto& [s, k] : c) out.add_scaled(pushforward(term, s, c.ring()), k);
  return out;
}

}  // namespace einfty
