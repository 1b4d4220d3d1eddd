// Evaluation of cooperation terms on a chain model.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "einfty/chain_model.hpp"
#include "einfty/term.hpp"

namespace einfty {

namespace detail {

template <ChainModel M>
TensorElement<typename M::Basis> evaluate_basis(const CoopTerm& term, const Tensor<typename M::Basis>& input,
                                                Ring ring) {
  using B = typename M::Basis;
  using K = CoopTerm::Kind;
  using Out = TensorElement<B>;
  switch (term.kind()) {
    case K::Identity: return Out::basis(input, 1, ring);
    case K::Counit: {
      Out out(ring);
      out.add_term(Tensor<B>{}, M::counit(input[0]));
      return out;
    }
    case K::Coproduct: return M::coproduct(input[0], ring);
    case K::Product: return as_tensor(M::star(input[0], input[1], ring));
    case K::Perm: {
      auto [moved, sign] = permute_factors(term.permutation(), input, [](const B& b) { return M::degree(b); });
      return Out::basis(std::move(moved), sign, ring);
    }
    case K::Compose: {
      const CoopTerm& outer = term.children()[0];
      Out inner = evaluate_basis<M>(term.children()[1], input, ring);
      Out out(ring);
      for (const auto& [t, c] : inner) out.add_scaled(evaluate_basis<M>(outer, t, ring), c);
      return out;
    }
    case K::Negate: return -evaluate_basis<M>(term.children()[0], input, ring);
    case K::Tensor: {
      // (f_1 ⊗ ... ⊗ f_r)(x_1 ⊗ ... ⊗ x_r) =
      //   (-1)^{Σ_j |f_j| (|x_1| + ... + |x_{j-1}|)} f_1(x_1) ⊗ ... ⊗ f_r(x_r)
      Out acc = Out::basis(Tensor<B>{}, 1, ring);
      std::size_t offset = 0;
      int passed_degree = 0;
      for (const auto& f : term.children()) {
        const Signature s = f.signature();
        Tensor<B> part(input.begin() + offset, input.begin() + offset + s.inputs);
        offset += s.inputs;
        const std::int64_t sign = (s.degree * passed_degree) % 2 == 0 ? 1 : -1;
        passed_degree += tensor_degree(part, [](const B& b) { return M::degree(b); });
        Out image = evaluate_basis<M>(f, part, ring);
        if (image.is_zero()) return Out(ring);
        Out next(ring);
        for (const auto& [prefix, pc] : acc)
          for (const auto& [t, tc] : image) {
            Tensor<B> joined = prefix;
            joined.insert(joined.end(), t.begin(), t.end());
            next.add_term(joined, ring.mul(ring.mul(pc, tc), sign));
          }
        acc = std::move(next);
      }
      return acc;
    }
  }
  throw std::logic_error("unknown term kind");
}

}  // namespace detail

/// Applies a term to an element of C^{⊗m}, where m is the term's input arity.
template <ChainModel M>
TensorElement<typename M::Basis> evaluate(const CoopTerm& term, const TensorElement<typename M::Basis>& input) {
  const int m = term.signature().inputs;
  TensorElement<typename M::Basis> out(input.ring());
  for (const auto& [t, c] : input) {
    if (static_cast<int>(t.size()) != m)
      throw ArityError("term with " + std::to_string(m) + " inputs applied to a tensor of arity " +
                       std::to_string(t.size()));
    out.add_scaled(detail::evaluate_basis<M>(term, t, input.ring()), c);
  }
  return out;
}

template <ChainModel M>
TensorElement<typename M::Basis> evaluate(const CoopTerm& term, const typename M::Basis& input,
                                          Ring ring = Ring::integers()) {
  return evaluate<M>(term, TensorElement<typename M::Basis>::basis(Tensor<typename M::Basis>{input}, 1, ring));
}

}  // namespace einfty
