// Cooperation terms: expressions over ε, Δ, *, identities, permutations,
// composition and tensor product, together with the standard constructions
// built from them (iterated combs, cup-i coproducts, shuffle graphs).
#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "einfty/permutation.hpp"

namespace einfty {

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inputs, outputs and degree of a term.
struct Signature {
  int inputs = 0;
  int outputs = 0;
  int degree = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

class CoopTerm {
 public:
  enum class Kind { Identity, Counit, Coproduct, Product, Perm, Compose, Tensor, Negate };

  static CoopTerm identity(int k) {
    if (k < 0) throw ArityError("id(k) needs k >= 0");
    return CoopTerm(Node{Kind::Identity, k, {}, {}, Signature{k, k, 0}});
  }
  static CoopTerm counit() { return CoopTerm(Node{Kind::Counit, 0, {}, {}, Signature{1, 0, 0}}); }
  static CoopTerm coproduct() { return CoopTerm(Node{Kind::Coproduct, 0, {}, {}, Signature{1, 2, 0}}); }
  static CoopTerm product() { return CoopTerm(Node{Kind::Product, 0, {}, {}, Signature{2, 1, 1}}); }

  /// Permutation of factors; identities collapse to id(k).
  static CoopTerm perm(Permutation sigma) {
    const int k = sigma.size();
    if (sigma.is_identity()) return identity(k);
    return CoopTerm(Node{Kind::Perm, 0, std::move(sigma), {}, Signature{k, k, 0}});
  }

  /// outer ∘ inner. Identities are absorbed.
  static CoopTerm compose(const CoopTerm& outer, const CoopTerm& inner) {
    if (outer.signature().inputs != inner.signature().outputs)
      throw ArityError("comp: outer term takes " + std::to_string(outer.signature().inputs) +
                       " inputs but inner term gives " + std::to_string(inner.signature().outputs) + " outputs");
    if (outer.is_identity()) return inner;
    if (inner.is_identity()) return outer;
    Signature s{inner.signature().inputs, outer.signature().outputs,
                outer.signature().degree + inner.signature().degree};
    return CoopTerm(Node{Kind::Compose, 0, {}, {outer, inner}, s});
  }

  /// f_1 ⊗ ... ⊗ f_r. A tensor of identities is a single identity.
  static CoopTerm tensor(std::vector<CoopTerm> factors) {
    if (factors.empty()) throw ArityError("ten() needs at least one factor");
    if (factors.size() == 1) return factors.front();
    Signature s;
    bool all_identity = true;
    for (const auto& f : factors) {
      s.inputs += f.signature().inputs;
      s.outputs += f.signature().outputs;
      s.degree += f.signature().degree;
      all_identity = all_identity && f.is_identity();
    }
    if (all_identity) return identity(s.inputs);
    return CoopTerm(Node{Kind::Tensor, 0, {}, std::move(factors), s});
  }

  /// -f. Double negation cancels.
  static CoopTerm negate(const CoopTerm& f) {
    if (f.kind() == Kind::Negate) return f.children()[0];
    return CoopTerm(Node{Kind::Negate, 0, {}, {f}, f.signature()});
  }

  Kind kind() const { return node_->kind; }
  const Signature& signature() const { return node_->signature; }
  int identity_arity() const { return node_->arity; }
  const Permutation& permutation() const { return node_->sigma; }
  const std::vector<CoopTerm>& children() const { return node_->children; }
  bool is_identity() const { return node_->kind == Kind::Identity; }

  /// DSL form using only primitive constructors; parses back to an equal term.
  std::string render() const {
    switch (kind()) {
      case Kind::Identity: return "id(" + std::to_string(identity_arity()) + ")";
      case Kind::Counit: return "eps";
      case Kind::Coproduct: return "delta";
      case Kind::Product: return "star";
      case Kind::Perm: {
        std::string s = "perm";
        return s + permutation().render();
      }
      case Kind::Compose: return "comp(" + children()[0].render() + "," + children()[1].render() + ")";
      case Kind::Negate: return "neg(" + children()[0].render() + ")";
      case Kind::Tensor: {
        std::string s = "ten(";
        for (std::size_t i = 0; i < children().size(); ++i) {
          if (i) s += ",";
          s += children()[i].render();
        }
        return s + ")";
      }
    }
    return "?";
  }

  friend bool operator==(const CoopTerm& a, const CoopTerm& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    return x.kind == y.kind && x.arity == y.arity && x.sigma == y.sigma && x.children == y.children;
  }

 private:
  struct Node {
    Kind kind;
    int arity;
    Permutation sigma;
    std::vector<CoopTerm> children;
    Signature signature;
  };

  explicit CoopTerm(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  std::shared_ptr<const Node> node_;
};

/// Arity and degree of a term. Terms are checked as they are built, so this
/// recomputes the signature bottom-up and reports the first inconsistency.
inline Signature validate(const CoopTerm& t) {
  using K = CoopTerm::Kind;
  switch (t.kind()) {
    case K::Identity: return {t.identity_arity(), t.identity_arity(), 0};
    case K::Counit: return {1, 0, 0};
    case K::Coproduct: return {1, 2, 0};
    case K::Product: return {2, 1, 1};
    case K::Perm: return {t.permutation().size(), t.permutation().size(), 0};
    case K::Compose: {
      Signature outer = validate(t.children()[0]);
      Signature inner = validate(t.children()[1]);
      if (outer.inputs != inner.outputs) throw ArityError("arity mismatch at comp");
      return {inner.inputs, outer.outputs, outer.degree + inner.degree};
    }
    case K::Negate: return validate(t.children()[0]);
    case K::Tensor: {
      Signature s;
      for (const auto& c : t.children()) {
        Signature cs = validate(c);
        s.inputs += cs.inputs;
        s.outputs += cs.outputs;
        s.degree += cs.degree;
      }
      return s;
    }
  }
  throw ArityError("unknown term kind");
}

/// Δ^k = (Δ^{k-1} ⊗ id) ∘ Δ with Δ^0 = id; arity (1, k+1).
inline CoopTerm iterated_coproduct(int k) {
  if (k < 0) throw ArityError("itdelta(k) needs k >= 0");
  CoopTerm t = CoopTerm::identity(1);
  for (int j = 1; j <= k; ++j)
    t = CoopTerm::compose(CoopTerm::tensor({t, CoopTerm::identity(1)}), CoopTerm::coproduct());
  return t;
}

/// The k-input left comb: Star[1] = id, Star[2] = *, Star[k+1] = * ∘ (Star[k] ⊗ id).
inline CoopTerm iterated_product(int k) {
  if (k < 1) throw ArityError("itstar(k) needs k >= 1");
  CoopTerm t = CoopTerm::identity(1);
  for (int j = 2; j <= k; ++j) t = CoopTerm::compose(CoopTerm::product(), CoopTerm::tensor({t, CoopTerm::identity(1)}));
  return t;
}

/// σ_{i+2}: the deck shuffle used by the closed cup-i formula.
inline Permutation shuffle_sigma(int i_plus_2) { return deck_shuffle(i_plus_2); }

/// Part sizes (k_1, ..., k_r) and a (k_1, ..., k_r)-shuffle σ.
struct ShuffleSpec {
  std::vector<int> parts;
  Permutation sigma;

  int total() const {
    int k = 0;
    for (int p : parts) k += p;
    return k;
  }

  void check() const {
    if (parts.empty()) throw ArityError("shuffle graph needs at least one part");
    for (int p : parts)
      if (p < 1) throw ArityError("shuffle graph parts must be positive");
    if (sigma.size() != total())
      throw ArityError("shuffle permutation has size " + std::to_string(sigma.size()) + " but the parts sum to " +
                       std::to_string(total()));
    if (!is_shuffle(sigma, parts)) throw ArityError("permutation " + sigma.render() + " is not a shuffle for these parts");
  }
};

/// Every (k_1, ..., k_r)-shuffle for every composition of every k in 1..k_max.
inline std::vector<ShuffleSpec> all_shuffle_specs(int k_max) {
  std::vector<ShuffleSpec> out;
  for (int k = 1; k <= k_max; ++k)
    for (unsigned cuts = 0; cuts < (1u << (k - 1)); ++cuts) {
      std::vector<int> parts{1};
      for (int b = 0; b < k - 1; ++b) {
        if ((cuts >> b) & 1u)
          parts.push_back(1);
        else
          ++parts.back();
      }
      std::vector<int> v(k);
      for (int i = 0; i < k; ++i) v[i] = i + 1;
      do {
        Permutation s(v);
        if (is_shuffle(s, parts)) out.push_back({parts, s});
      } while (std::next_permutation(v.begin(), v.end()));
    }
  return out;
}

/// (Star[k_1] ⊗ ... ⊗ Star[k_r]) ∘ σ^{-1} ∘ Δ^{k-1}.
inline CoopTerm shuffle_graph(const ShuffleSpec& spec) {
  spec.check();
  std::vector<CoopTerm> combs;
  for (int p : spec.parts) combs.push_back(iterated_product(p));
  return CoopTerm::compose(CoopTerm::tensor(std::move(combs)),
                           CoopTerm::compose(CoopTerm::perm(spec.sigma.inverse()), iterated_coproduct(spec.total() - 1)));
}

/// Δ_i = (Star[⌈(i+2)/2⌉] ⊗ Star[⌊(i+2)/2⌋]) ∘ σ_{i+2}^{-1} ∘ Δ^{i+1}.
inline CoopTerm cup_i_closed(int i) {
  if (i < 0) throw ArityError("cup(i) needs i >= 0");
  const int k = i + 2;
  return shuffle_graph(ShuffleSpec{{(k + 1) / 2, k / 2}, shuffle_sigma(k)});
}

/// (* ⊗ id) ∘ (123) ∘ Δ^2: a degree-1 binary cooperation that is not a
/// shuffle graph; its permutation (3,1,2) is not a (2,1)-shuffle.
inline CoopTerm twisted_cup1() {
  return CoopTerm::compose(CoopTerm::tensor({CoopTerm::product(), CoopTerm::identity(1)}),
                           CoopTerm::compose(CoopTerm::perm(Permutation({2, 3, 1})), iterated_coproduct(2)));
}

/// Recursive cup-i coproducts. The new last factor of Δ^{i+1} joins the
/// first deck for odd i and the second deck for even i:
///   Δ_i = (* ⊗ id) ∘ (23)(Δ_{i-1} ⊗ id) ∘ Δ   (i odd)
///   Δ_i = ±(id ⊗ *) ∘ (Δ_{i-1} ⊗ id) ∘ Δ      (i even, i > 0)
/// For even i the interchange (id ⊗ *) ∘ (Star[a] ⊗ Star[a-1] ⊗ id) =
/// (-1)^{a-1} Star[a] ⊗ Star[a] with a = (i+2)/2, so the even step carries
/// the sign (-1)^{a-1}. With it the result equals cup_i_closed(i).
inline CoopTerm cup_i_recursive(int i) {
  if (i < 0) throw ArityError("cup(i) needs i >= 0");
  CoopTerm t = CoopTerm::coproduct();
  const CoopTerm id = CoopTerm::identity(1);
  const CoopTerm star = CoopTerm::product();
  const CoopTerm swap23 = CoopTerm::perm(Permutation({1, 3, 2}));
  for (int j = 1; j <= i; ++j) {
    CoopTerm attach = j % 2 == 1 ? CoopTerm::compose(CoopTerm::tensor({star, id}), swap23)
                                 : CoopTerm::tensor({id, star});
    if (j % 2 == 0 && ((j + 2) / 2 - 1) % 2 == 1) attach = CoopTerm::negate(attach);
    t = CoopTerm::compose(attach, CoopTerm::compose(CoopTerm::tensor({t, id}), CoopTerm::coproduct()));
  }
  return t;
}

/// Δ_0 = Δ, Δ_i = (* ⊗ id) ∘ (23)(Δ_{i-1} ⊗ id) ∘ Δ for every i. Equal to
/// cup_i_recursive for i <= 1 only.
inline CoopTerm cup_i_recursive_verbatim(int i) {
  if (i < 0) throw ArityError("cup(i) needs i >= 0");
  CoopTerm t = CoopTerm::coproduct();
  const CoopTerm swap23 = CoopTerm::perm(Permutation({1, 3, 2}));
  for (int j = 1; j <= i; ++j)
    t = CoopTerm::compose(
        CoopTerm::compose(CoopTerm::tensor({CoopTerm::product(), CoopTerm::identity(1)}), swap23),
        CoopTerm::compose(CoopTerm::tensor({t, CoopTerm::identity(1)}), CoopTerm::coproduct()));
  return t;
}

}  // namespace einfty
