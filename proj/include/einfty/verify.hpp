// Relation suites: exhaustive and seeded random checks of the algebraic
// identities, and reproduction of the three obstructions to strict
// preservation of higher structure.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "einfty/comparison.hpp"
#include "einfty/parser.hpp"

namespace einfty {

/// Worker count: EINFTY_THREADS if set (>= 1), else the hardware count.
inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EINFTY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return hw;
}

/// out[i] = f(i), computed on up to worker_count() threads.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, F&& f) {
  std::vector<R> out(count);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1)));
  if (workers <= 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = count;
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
  }
  std::string render() const {
    std::string s = "suite " + suite + "\n";
    for (const auto& c : checks) {
      s += "  " + std::string(c.passed() ? "ok   " : "FAIL ") + c.name + " (" + std::to_string(c.cases) + " cases";
      if (!c.passed()) s += ", " + std::to_string(c.failures) + " failures";
      s += ")\n";
      if (!c.passed()) s += "       first failure: " + c.first_failure + "\n";
    }
    s += passed() ? "all relations hold\n" : "some relations fail\n";
    return s;
  }
};

/// Runs pred on every case; pred returns a description on failure.
template <class Case, class Pred>
CheckResult run_check(std::string name, const std::vector<Case>& cases, Pred&& pred) {
  auto results = parallel_map<std::optional<std::string>>(cases.size(), [&](std::size_t i) -> std::optional<std::string> {
    try {
      return pred(cases[i]);
    } catch (const std::exception& e) {
      return std::string("exception: ") + e.what();
    }
  });
  CheckResult r{std::move(name), cases.size(), 0, {}};
  for (auto& f : results)
    if (f) {
      if (r.failures++ == 0) r.first_failure = *f;
    }
  return r;
}

inline CheckResult single_check(std::string name, bool ok, std::string detail = {}) {
  return CheckResult{std::move(name), 1, ok ? 0u : 1u, ok ? std::string() : std::move(detail)};
}

namespace detail {

template <ChainModel M>
FreeElement<typename M::Basis> chain_star(const FreeElement<typename M::Basis>& a, const FreeElement<typename M::Basis>& b) {
  FreeElement<typename M::Basis> out(a.ring());
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(M::star(x, y, a.ring()), a.ring().mul(cx, cy));
  return out;
}

template <ChainModel M>
FreeElement<typename M::Basis> chain_boundary(const FreeElement<typename M::Basis>& a) {
  return a.linear_map([&](const typename M::Basis& b) { return M::boundary(b, a.ring()); });
}

template <class B>
FreeElement<B> single(const B& b, Ring ring = Ring::integers()) {
  return FreeElement<B>::basis(b, 1, ring);
}

template <class B>
TensorElement<B> tensor_of(std::initializer_list<B> bs, Ring ring = Ring::integers()) {
  return TensorElement<B>::basis(Tensor<B>(bs), 1, ring);
}

template <ChainModel M>
std::optional<std::string> compare(const std::string& what, const TensorElement<typename M::Basis>& lhs,
                                   const TensorElement<typename M::Basis>& rhs) {
  if (lhs == rhs) return std::nullopt;
  return what + ": " + render(lhs) + "  vs  " + render(rhs);
}

inline CubeWord random_cube_word(int n, std::mt19937_64& rng) {
  CubeWord w;
  for (int i = 0; i < n; ++i) w.push_back(static_cast<CubeSymbol>(rng() % 3));
  return w;
}

inline SimplexWord random_simplex_word(int n, std::mt19937_64& rng) {
  std::vector<int> v;
  while (v.empty()) {
    v.clear();
    for (int i = 0; i <= n; ++i)
      if (rng() & 1u) v.push_back(i);
  }
  return SimplexWord(n, std::move(v));
}

template <class B>
using Pair = std::pair<B, B>;

}  // namespace detail

template <ChainModel M>
std::vector<typename M::Basis> words_up_to(int n) {
  std::vector<typename M::Basis> out;
  for (int k = 0; k <= n; ++k)
    for (auto& b : M::basis(k)) out.push_back(b);
  return out;
}

/// ε, Δ and * satisfy the relations of M on chains of the representables:
/// counitality, ε∘* = 0 and ∂(x*y) + ∂x*y + (-1)^{|x|} x*∂y = ε(x)y - ε(y)x.
template <ChainModel M>
SuiteReport bialgebra_suite(int n_exhaustive, std::size_t random_pairs, int n_random, std::uint64_t seed) {
  using B = typename M::Basis;
  using P = detail::Pair<B>;
  const Ring z = Ring::integers();
  const CoopTerm left = parse_term("comp(ten(eps,id(1)),delta)");
  const CoopTerm right = parse_term("comp(ten(id(1),eps),delta)");

  std::vector<B> words = words_up_to<M>(std::max(n_exhaustive, 0));
  std::vector<P> pairs;
  for (int n = 0; n <= n_exhaustive; ++n) {
    auto ws = M::basis(n);
    for (const auto& x : ws)
      for (const auto& y : ws) pairs.emplace_back(x, y);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < random_pairs; ++k) {
    const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(n_random + 1));
    if constexpr (std::is_same_v<M, CubicalModel>) {
      B x = detail::random_cube_word(n, rng);
      B y = detail::random_cube_word(n, rng);
      pairs.emplace_back(x, y);
      words.push_back(x);
    } else {
      B x = detail::random_simplex_word(n, rng);
      B y = detail::random_simplex_word(n, rng);
      pairs.emplace_back(x, y);
      words.push_back(x);
    }
  }

  SuiteReport r{std::string("bialgebra (") + M::name + ")", {}};
  r.checks.push_back(run_check("(eps ⊗ id) delta = id", words, [&](const B& x) {
    return detail::compare<M>("counit left on " + render(x), evaluate<M>(left, x), detail::tensor_of({x}));
  }));
  r.checks.push_back(run_check("(id ⊗ eps) delta = id", words, [&](const B& x) {
    return detail::compare<M>("counit right on " + render(x), evaluate<M>(right, x), detail::tensor_of({x}));
  }));
  r.checks.push_back(run_check("boundary squared = 0", words, [&](const B& x) -> std::optional<std::string> {
    auto dd = detail::chain_boundary<M>(M::boundary(x, z));
    if (dd.is_zero()) return std::nullopt;
    return "∂∂" + render(x) + " = " + render(dd);
  }));
  r.checks.push_back(run_check("eps boundary = 0", words, [&](const B& x) -> std::optional<std::string> {
    std::int64_t s = 0;
    for (const auto& [b, c] : M::boundary(x, z)) s += c * M::counit(b);
    if (s == 0) return std::nullopt;
    return "ε∂" + render(x) + " = " + std::to_string(s);
  }));
  r.checks.push_back(run_check("eps(x * y) = 0", pairs, [&](const P& p) -> std::optional<std::string> {
    std::int64_t s = 0;
    for (const auto& [b, c] : M::star(p.first, p.second, z)) s += c * M::counit(b);
    if (s == 0) return std::nullopt;
    return "ε(" + render(p.first) + " * " + render(p.second) + ") = " + std::to_string(s);
  }));
  r.checks.push_back(run_check("boundary of product", pairs, [&](const P& p) -> std::optional<std::string> {
    const auto& [x, y] = p;
    auto X = detail::single(x), Y = detail::single(y);
    auto lhs = detail::chain_boundary<M>(M::star(x, y, z)) + detail::chain_star<M>(detail::chain_boundary<M>(X), Y);
    lhs.add_scaled(detail::chain_star<M>(X, detail::chain_boundary<M>(Y)), M::degree(x) % 2 == 0 ? 1 : -1);
    auto rhs = M::counit(x) * Y - M::counit(y) * X;
    if (lhs == rhs) return std::nullopt;
    return "x = " + render(x) + ", y = " + render(y) + ": " + render(lhs) + " vs " + render(rhs);
  }));
  return r;
}

/// ([0][0][0]) * ([1][1][1]) and its boundary.
struct WorkedExample {
  CubeChain product;
  CubeChain boundary;
  bool matches = false;
};

inline WorkedExample worked_boundary_example() {
  const CubeWord x = CubeWord::parse("[0][0][0]");
  const CubeWord y = CubeWord::parse("[1][1][1]");
  WorkedExample w;
  w.product = cube_star(x, y);
  w.boundary = detail::chain_boundary<CubicalModel>(w.product);
  CubeChain expected;
  expected.add_term(CubeWord::parse("[01][1][1]"), 1);
  expected.add_term(CubeWord::parse("[0][01][1]"), 1);
  expected.add_term(CubeWord::parse("[0][0][01]"), 1);
  CubeChain expected_boundary;
  expected_boundary.add_term(y, 1);
  expected_boundary.add_term(x, -1);
  w.matches = w.product == expected && w.boundary == expected_boundary;
  return w;
}

/// Serre coproduct: closed formula, coassociativity, chain map, counit.
inline SuiteReport coproduct_suite(int n) {
  using M = CubicalModel;
  SuiteReport r{"coproduct", {}};
  std::vector<int> dims;
  for (int k = 0; k <= n; ++k) dims.push_back(k);
  r.checks.push_back(run_check("closed formula = compositional delta on [01]^n", dims, [](int k) {
    return detail::compare<M>("n = " + std::to_string(k), cube_coproduct(CubeWord::top(k)), cube_coproduct_top_closed(k));
  }));
  const auto words = words_up_to<M>(std::min(n, 5));
  const CoopTerm a = parse_term("comp(ten(delta,id(1)),delta)");
  const CoopTerm b = parse_term("comp(ten(id(1),delta),delta)");
  r.checks.push_back(run_check("coassociativity", words, [&](const CubeWord& x) {
    return detail::compare<M>(render(x), evaluate<M>(a, x), evaluate<M>(b, x));
  }));
  r.checks.push_back(run_check("∂ delta = delta ∂", words, [&](const CubeWord& x) {
    return detail::compare<M>(render(x), model_tensor_boundary<M>(evaluate<M>(CoopTerm::coproduct(), x)),
                              evaluate<M>(CoopTerm::coproduct(), as_tensor(cube_boundary(x))));
  }));
  return r;
}

/// Recursive and closed cup-i coproducts agree; degree bookkeeping.
inline SuiteReport cupi_suite(int i_max, int n) {
  SuiteReport r{"cupi", {}};
  for (int i = 0; i <= i_max; ++i) {
    const CoopTerm closed = cup_i_closed(i), rec = cup_i_recursive(i);
    r.checks.push_back(run_check("recursive = closed, i = " + std::to_string(i) + " (cubical)",
                                 words_up_to<CubicalModel>(n), [&](const CubeWord& x) {
                                   return detail::compare<CubicalModel>(render(x), evaluate<CubicalModel>(rec, x),
                                                                        evaluate<CubicalModel>(closed, x));
                                 }));
    r.checks.push_back(run_check("recursive = closed, i = " + std::to_string(i) + " (simplicial)",
                                 words_up_to<SimplicialModel>(n), [&](const SimplexWord& x) {
                                   return detail::compare<SimplicialModel>(render(x), evaluate<SimplicialModel>(rec, x),
                                                                           evaluate<SimplicialModel>(closed, x));
                                 }));
    r.checks.push_back(run_check("degree of delta_" + std::to_string(i) + " output", words_up_to<CubicalModel>(n),
                                 [&](const CubeWord& x) -> std::optional<std::string> {
                                   for (const auto& [t, c] : evaluate<CubicalModel>(closed, x)) {
                                     int d = 0;
                                     for (const auto& w : t) d += w.degree();
                                     if (d != x.degree() + i) return render(x) + " -> " + render_tensor(t);
                                   }
                                   return std::nullopt;
                                 }));
  }
  return r;
}

/// ∂Δ_i + Δ_i∂ = (1 + T)Δ_{i-1} over Z/2.
template <ChainModel M>
CheckResult coherence_check(int i, int n) {
  using B = typename M::Basis;
  const Ring f2 = Ring::mod(2);
  const CoopTerm cur = cup_i_closed(i);
  std::optional<CoopTerm> prev;
  if (i > 0) prev = cup_i_closed(i - 1);
  return run_check("i = " + std::to_string(i) + " (" + M::name + ")", words_up_to<M>(n), [&](const B& x) {
    auto in = TensorElement<B>::basis(Tensor<B>{x}, 1, f2);
    auto lhs = model_tensor_boundary<M>(evaluate<M>(cur, in)) +
               evaluate<M>(cur, as_tensor(M::boundary(x, f2)));
    TensorElement<B> rhs(f2);
    if (prev) {
      auto p = evaluate<M>(*prev, in);
      rhs = p + transpose(p, [](const B& b) { return M::degree(b); });
    }
    return detail::compare<M>(render(x), lhs, rhs);
  });
}

inline SuiteReport coherence_suite(int i_max, int n) {
  SuiteReport r{"coherence (mod 2)", {}};
  for (int i = 0; i <= i_max; ++i) {
    r.checks.push_back(coherence_check<CubicalModel>(i, n));
    r.checks.push_back(coherence_check<SimplicialModel>(i, n));
  }
  return r;
}

/// Cartan-Serre: chain map, coalgebra map, equivariance for shuffle graphs,
/// and the two ordering lemmas.
inline SuiteReport cs_suite(int n, int k_max, int n_local) {
  using C = CubicalModel;
  using S = SimplicialModel;
  SuiteReport r{"cartan-serre", {}};
  const auto words = words_up_to<C>(n);
  r.checks.push_back(run_check("CS ∂ = ∂ CS", words, [](const CubeWord& x) {
    return detail::compare<S>(render(x), as_tensor(cartan_serre(cube_boundary(x))),
                              as_tensor(detail::chain_boundary<S>(cartan_serre(x))));
  }));
  r.checks.push_back(run_check("(CS ⊗ CS) delta = delta_AW CS", words, [](const CubeWord& x) {
    return detail::compare<S>(render(x), cartan_serre(cube_coproduct(x)),
                              evaluate<S>(CoopTerm::coproduct(), as_tensor(cartan_serre(x))));
  }));
  r.checks.push_back(run_check("eps CS = eps", words, [](const CubeWord& x) -> std::optional<std::string> {
    std::int64_t s = 0;
    for (const auto& [b, c] : cartan_serre(x)) s += c * simplex_counit(b);
    if (s == cube_counit(x)) return std::nullopt;
    return render(x);
  }));

  struct LocalCase {
    ShuffleSpec spec;
    int n;
  };
  std::vector<LocalCase> local;
  for (const auto& spec : all_shuffle_specs(k_max))
    for (int m = 0; m <= n_local; ++m) local.push_back({spec, m});
  r.checks.push_back(run_check("CS^{⊗r} Γ = Γ CS for shuffle graphs Γ", local, [](const LocalCase& c) {
    const CoopTerm g = shuffle_graph(c.spec);
    const CubeWord top = CubeWord::top(c.n);
    return detail::compare<S>(g.render() + " on " + render(top), cartan_serre(evaluate<C>(g, top)),
                              evaluate<S>(g, as_tensor(cartan_serre(top))));
  }));

  struct OrderCase {
    int k, n;
  };
  std::vector<OrderCase> order;
  for (int k = 1; k <= std::max(k_max, 5); ++k)
    for (int m = 0; m <= std::max(n_local, 5); ++m) order.push_back({k, m});
  r.checks.push_back(run_check("summands of delta^{k-1}[01]^n are ordered", order,
                               [](const OrderCase& c) -> std::optional<std::string> {
                                 for (const auto& [t, coeff] : evaluate<C>(iterated_coproduct(c.k - 1), CubeWord::top(c.n)))
                                   for (std::size_t j = 1; j < t.size(); ++j)
                                     if (!t[j - 1].precedes_or_equal(t[j])) return render_tensor(t);
                                 return std::nullopt;
                               }));

  std::vector<Tensor<CubeWord>> tuples;
  for (int k = 2; k <= k_max; ++k)
    for (int m = 0; m <= n_local; ++m) {
      const auto ws = all_cube_words(m);
      std::vector<Tensor<CubeWord>> level{{}};
      for (int j = 0; j < k; ++j) {
        std::vector<Tensor<CubeWord>> next;
        for (const auto& t : level)
          for (const auto& w : ws)
            if (t.empty() || t.back().precedes_or_equal(w)) {
              auto u = t;
              u.push_back(w);
              next.push_back(std::move(u));
            }
        level = std::move(next);
      }
      tuples.insert(tuples.end(), level.begin(), level.end());
    }
  r.checks.push_back(run_check("CS Star[k] = Star[k] CS^{⊗k} on ordered tuples", tuples, [](const Tensor<CubeWord>& t) {
    const CoopTerm st = iterated_product(static_cast<int>(t.size()));
    const auto in = TensorElement<CubeWord>::basis(t);
    return detail::compare<S>(render_tensor(t), cartan_serre(evaluate<C>(st, in)), evaluate<S>(st, cartan_serre(in)));
  }));
  return r;
}

/// Eilenberg-Zilber: chain map, coalgebra map, counit, and the two-term
/// expansion on [01][01].
inline SuiteReport ez_suite(int n) {
  SuiteReport r{"eilenberg-zilber", {}};
  const auto words = words_up_to<CubicalModel>(n);
  auto render_p = [](const TensorElement<ProductSimplex>& x) { return render(x); };
  r.checks.push_back(run_check("∂ EZ = EZ ∂", words, [&](const CubeWord& x) -> std::optional<std::string> {
    ProductChain lhs(Ring::integers());
    for (const auto& [s, c] : eilenberg_zilber(x)) lhs.add_scaled(product_boundary(s), c);
    ProductChain rhs = eilenberg_zilber(cube_boundary(x));
    if (lhs == rhs) return std::nullopt;
    return render(x) + ": " + render(lhs) + " vs " + render(rhs);
  }));
  r.checks.push_back(run_check("(EZ ⊗ EZ) delta = delta_AW EZ", words, [&](const CubeWord& x) -> std::optional<std::string> {
    auto lhs = eilenberg_zilber(cube_coproduct(x));
    TensorElement<ProductSimplex> rhs(Ring::integers());
    for (const auto& [s, c] : eilenberg_zilber(x)) rhs.add_scaled(product_aw_coproduct(s), c);
    if (lhs == rhs) return std::nullopt;
    return render(x) + ": " + render_p(lhs) + " vs " + render_p(rhs);
  }));
  r.checks.push_back(run_check("eps EZ = eps", words, [](const CubeWord& x) -> std::optional<std::string> {
    std::int64_t s = 0;
    for (const auto& [p, c] : eilenberg_zilber(x)) s += c * product_counit(p);
    if (s == cube_counit(x)) return std::nullopt;
    return render(x);
  }));
  const ProductChain e = eilenberg_zilber(CubeWord::parse("[01][01]"));
  std::set<ProductSimplex> support;
  bool unit = true;
  for (const auto& [s, c] : e) {
    support.insert(s);
    unit = unit && (c == 1 || c == -1);
  }
  const std::set<ProductSimplex> expected{ProductSimplex::parse("011x001"), ProductSimplex::parse("001x011")};
  r.checks.push_back(single_check("EZ([01][01]) = 011x001 ± 001x011", unit && support == expected, render(e)));
  return r;
}

/// Shuffle graphs commute with every coface on cubical words.
inline SuiteReport naturality_suite(int k_max, int n) {
  struct Case {
    ShuffleSpec spec;
    int n, i, eps;
  };
  std::vector<Case> cases;
  for (const auto& spec : all_shuffle_specs(k_max))
    for (int m = 1; m <= n; ++m)
      for (int i = 1; i <= m; ++i)
        for (int e = 0; e <= 1; ++e) cases.push_back({spec, m, i, e});
  SuiteReport r{"naturality", {}};
  r.checks.push_back(run_check("chains(δ)^{⊗r} Γ = Γ chains(δ) for cofaces δ", cases, [](const Case& c) -> std::optional<std::string> {
    const CoopTerm g = shuffle_graph(c.spec);
    const CubicalOperator d = CubicalOperator::coface(c.n, c.i, c.eps);
    for (const auto& x : all_cube_words(c.n - 1)) {
      auto lhs = tensor_power_map<CubeWord, CubeWord>(evaluate<CubicalModel>(g, x),
                                                      [&](const CubeWord& w) { return d.apply(w); });
      auto rhs = evaluate<CubicalModel>(g, as_tensor(d.apply(x)));
      if (!(lhs == rhs))
        return g.render() + ", δ_" + std::to_string(c.i) + "^" + std::to_string(c.eps) + " on " + render(x);
    }
    return std::nullopt;
  }));
  return r;
}

/// Simplicial side: AW coassociativity, join sign rule, product AW.
inline SuiteReport simplicial_suite(int n) {
  using S = SimplicialModel;
  SuiteReport r{"simplicial", {}};
  const auto words = words_up_to<S>(n);
  const CoopTerm a = parse_term("comp(ten(delta,id(1)),delta)");
  const CoopTerm b = parse_term("comp(ten(id(1),delta),delta)");
  r.checks.push_back(run_check("AW coassociativity", words, [&](const SimplexWord& x) {
    return detail::compare<S>(render(x), evaluate<S>(a, x), evaluate<S>(b, x));
  }));
  r.checks.push_back(run_check("∂ AW = AW ∂", words, [&](const SimplexWord& x) {
    return detail::compare<S>(render(x), model_tensor_boundary<S>(aw_coproduct(x)),
                              evaluate<S>(CoopTerm::coproduct(), as_tensor(simplex_boundary(x))));
  }));
  std::vector<detail::Pair<SimplexWord>> pairs;
  for (int m = 0; m <= std::min(n, 4); ++m) {
    auto ws = all_simplex_words(m);
    for (const auto& x : ws)
      for (const auto& y : ws) pairs.emplace_back(x, y);
  }
  r.checks.push_back(run_check("join against sorting oracle", pairs, [](const detail::Pair<SimplexWord>& p) -> std::optional<std::string> {
    // Bubble sort the concatenated vertex list, counting swaps.
    std::vector<int> v = p.first.vertices();
    v.insert(v.end(), p.second.vertices().begin(), p.second.vertices().end());
    int swaps = 0;
    bool repeated = false;
    for (std::size_t pass = 0; pass < v.size(); ++pass)
      for (std::size_t j = 0; j + 1 < v.size(); ++j) {
        if (v[j] == v[j + 1]) repeated = true;
        if (v[j] > v[j + 1]) {
          std::swap(v[j], v[j + 1]);
          ++swaps;
        }
      }
    SimplexChain expected;
    if (!repeated) expected.add_term(SimplexWord(p.first.ambient(), v), (p.first.degree() + swaps) % 2 == 0 ? 1 : -1);
    const SimplexChain got = simplex_join(p.first, p.second);
    if (got == expected) return std::nullopt;
    return render(p.first) + " * " + render(p.second) + " = " + render(got);
  }));
  r.checks.push_back(run_check("a * b = -(-1)^{|a||b|} b * a", pairs, [](const detail::Pair<SimplexWord>& p) -> std::optional<std::string> {
    const int sign = (p.first.degree() * p.second.degree()) % 2 == 0 ? -1 : 1;
    if (simplex_join(p.first, p.second) == sign * simplex_join(p.second, p.first)) return std::nullopt;
    return render(p.first) + ", " + render(p.second);
  }));
  std::vector<ProductSimplex> prods;
  for (int k = 0; k <= 3; ++k)
    for (const auto& s : all_product_simplices(k)) {
      prods.push_back(s);
      for (int i = 0; i <= s.degree(); ++i)
        if (s.degree() > 0) prods.push_back(s.face(i));
    }
  r.checks.push_back(run_check("AW on (△^1)^k: coassociative and counital", prods, [](const ProductSimplex& s) -> std::optional<std::string> {
    const Ring z = Ring::integers();
    auto d = product_aw_coproduct(s);
    TensorElement<ProductSimplex> l(z), rr(z), cl(z), cr(z);
    for (const auto& [t, c] : d) {
      for (const auto& [u, cu] : product_aw_coproduct(t[0])) l.add_term({u[0], u[1], t[1]}, c * cu);
      for (const auto& [u, cu] : product_aw_coproduct(t[1])) rr.add_term({t[0], u[0], u[1]}, c * cu);
      cl.add_term({t[1]}, c * product_counit(t[0]));
      cr.add_term({t[0]}, c * product_counit(t[1]));
    }
    const auto id = TensorElement<ProductSimplex>::basis({s});
    if (l == rr && cl == id && cr == id) return std::nullopt;
    return s.render();
  }));
  return r;
}

/// One of the three obstructions: both sides and whether the display
/// reproduces (supports compared, signs suppressed).
struct NoGoDisplay {
  std::string title;
  std::string lhs_label, rhs_label;
  std::string lhs, rhs;
  std::vector<std::string> notes;
  bool reproduced = false;
};

namespace detail {

template <class B>
std::set<Tensor<B>> support(const TensorElement<B>& x, bool* unit = nullptr) {
  std::set<Tensor<B>> s;
  for (const auto& [t, c] : x) {
    s.insert(t);
    if (unit && c != 1 && c != -1) *unit = false;
  }
  return s;
}

inline Tensor<ProductSimplex> product_tensor(const std::string& a, const std::string& b) {
  return {ProductSimplex::parse(a), ProductSimplex::parse(b)};
}

}  // namespace detail

inline std::vector<NoGoDisplay> counterexamples() {
  using C = CubicalModel;
  using S = SimplicialModel;
  std::vector<NoGoDisplay> out;
  const CubeWord sq = CubeWord::parse("[01][01]");
  const CoopTerm cup1 = cup_i_closed(1);

  {
    NoGoDisplay d;
    d.title = "EZ does not commute with delta_1";
    d.lhs_label = "(EZ ⊗ EZ) delta_1([01][01])";
    d.rhs_label = "delta_1 EZ([01][01])";
    const auto lhs = eilenberg_zilber(evaluate<C>(cup1, sq));
    const auto rhs = pushforward(cup1, eilenberg_zilber(sq));
    d.lhs = render(lhs);
    d.rhs = render(rhs);
    using detail::product_tensor;
    const std::set<Tensor<ProductSimplex>> lhs_display{
        product_tensor("011x001", "11x01"), product_tensor("001x011", "11x01"),
        product_tensor("01x11", "011x001"), product_tensor("01x11", "001x011"),
        product_tensor("00x01", "011x001"), product_tensor("00x01", "001x011"),
        product_tensor("011x001", "01x00"), product_tensor("001x011", "01x00")};
    const std::set<Tensor<ProductSimplex>> rhs_display{
        product_tensor("011x001", "01x00"), product_tensor("01x01", "011x001"),
        product_tensor("011x001", "11x01"), product_tensor("001x011", "00x01"),
        product_tensor("01x01", "001x011"), product_tensor("001x011", "01x11")};
    bool unit = true;
    const auto ls = detail::support(lhs, &unit), rs = detail::support(rhs, &unit);
    const auto witness = product_tensor("01x11", "011x001");
    const bool in_lhs = ls.count(witness) > 0, in_rhs = rs.count(witness) > 0;
    d.notes.push_back("left side matches the displayed sum up to signs: " + std::string(ls == lhs_display ? "yes" : "no"));
    d.notes.push_back("right side matches the displayed sum up to signs: " + std::string(rs == rhs_display ? "yes" : "no"));
    d.notes.push_back("witness 01x11 ⊗ 011x001: " + std::string(in_lhs ? "left" : "") + (in_rhs ? " right" : "") +
                      (in_lhs != in_rhs ? " only" : ""));
    d.reproduced = unit && ls == lhs_display && rs == rhs_display && in_lhs && !in_rhs;
    out.push_back(std::move(d));
  }

  {
    NoGoDisplay d;
    d.title = "CS does not commute with *";
    d.lhs_label = "CS(([1][1]) * ([0][01]))";
    d.rhs_label = "CS([1][1]) * CS([0][01])";
    const CubeWord x = CubeWord::parse("[1][1]"), y = CubeWord::parse("[0][01]");
    const SimplexChain lhs = cartan_serre(cube_star(x, y));
    const SimplexChain rhs = detail::chain_star<S>(cartan_serre(x), cartan_serre(y));
    d.lhs = render(lhs);
    d.rhs = render(rhs);
    const bool cs_y_zero = cartan_serre(y).is_zero();
    d.notes.push_back("([1][1]) * ([0][01]) = " + render(cube_star(x, y)));
    d.notes.push_back("CS([0][01]) = " + render(cartan_serre(y)));
    const SimplexWord top = SimplexWord::top(2);
    d.reproduced = cs_y_zero && rhs.is_zero() && lhs.size() == 1 && std::abs(lhs.coefficient(top)) == 1;
    out.push_back(std::move(d));
  }

  {
    NoGoDisplay d;
    const CoopTerm twisted = twisted_cup1();
    d.title = "CS does not commute with the non-shuffle cooperation " + twisted.render();
    d.lhs_label = "(CS ⊗ CS) Δ̃_1([01][01])";
    d.rhs_label = "Δ̃_1 CS([01][01])";
    const auto lhs = cartan_serre(evaluate<C>(twisted, sq));
    const auto rhs = evaluate<S>(twisted, as_tensor(cartan_serre(sq)));
    d.lhs = render(lhs);
    d.rhs = render(rhs);
    const auto aw1 = evaluate<S>(cup1, SimplexWord::top(2));
    const auto t_aw1 = transpose(aw1, [](const SimplexWord& s) { return s.degree(); });
    d.notes.push_back("delta_1[0,1,2] = " + render(aw1));
    d.notes.push_back("T delta_1[0,1,2] = " + render(t_aw1));
    const std::vector<int> parts{2, 1};
    const bool shuffle = is_shuffle(Permutation({3, 1, 2}), parts);
    d.notes.push_back(std::string("(3,1,2) is a (2,1)-shuffle: ") + (shuffle ? "yes" : "no"));
    d.reproduced = (lhs == t_aw1 || lhs == -t_aw1) && (rhs == aw1 || rhs == -aw1) && !(lhs == rhs) && !(lhs == -rhs) &&
                   !shuffle;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace einfty
