#include <random>

#include "catch_amalgamated.hpp"
#include "einfty/chain_model.hpp"

using namespace einfty;

TEST_CASE("ring parsing and residues") {
  CHECK(Ring::parse("Z").is_integers());
  CHECK(Ring::parse("Z/2").modulus == 2);
  CHECK(Ring::parse("Z/7").name() == "Z/7");
  CHECK_THROWS_AS(Ring::parse("Z/4"), std::invalid_argument);
  CHECK_THROWS_AS(Ring::parse("Q"), std::invalid_argument);
  CHECK_THROWS_AS(Ring::parse("Z/"), std::invalid_argument);

  const Ring f5 = Ring::mod(5);
  CHECK(f5.normalize(-1) == 4);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.neg(2) == 3);
  for (int a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inverse(a)) == 1);
  CHECK_THROWS(f5.inverse(0));
}

TEST_CASE("integer arithmetic is checked") {
  const Ring z = Ring::integers();
  CHECK_THROWS_AS(z.add(INT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(z.mul(INT64_MAX / 2 + 1, 2), OverflowError);
  CHECK_THROWS_AS(z.neg(INT64_MIN), OverflowError);
  CHECK(z.mul(-3, 7) == -21);
}

TEST_CASE("coefficients refuse mixed rings") {
  Coefficient a(3, Ring::mod(5)), b(4, Ring::mod(7));
  CHECK_THROWS_AS(a + b, RingMismatch);
  CHECK((a + Coefficient(4, Ring::mod(5))).value() == 2);
}

TEST_CASE("free module elements") {
  using E = FreeElement<int>;
  E a = E::basis(1, 2), b = E::basis(2, -1), c = E::basis(1, -2);
  CHECK((a + b) + c == a + (b + c));
  CHECK(a + b == b + a);
  CHECK((a + c).is_zero());
  CHECK(3 * (a + b) == 3 * a + 3 * b);
  CHECK((a - a).size() == 0);

  E m(Ring::mod(2));
  m.add_term(5, 3);
  CHECK(m.coefficient(5) == 1);
  m.add_term(5, 1);
  CHECK(m.is_zero());

  CHECK_THROWS_AS(E::basis(1, 1) + E::basis(1, 1, Ring::mod(3)), RingMismatch);
  CHECK(E::basis(1, 4).reduce(Ring::mod(2)).is_zero());
}

TEST_CASE("permutation basics") {
  const Permutation s({2, 3, 1});
  CHECK(s(1) == 2);
  CHECK(s.compose(s.inverse()).is_identity());
  CHECK(s.inverse() == Permutation({3, 1, 2}));
  CHECK(s.sign() == 1);
  CHECK(Permutation({2, 1}).sign() == -1);
  CHECK(s.render() == "(2,3,1)");
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK(deck_shuffle(4) == Permutation({1, 3, 2, 4}));
  CHECK(deck_shuffle(5) == Permutation({1, 3, 5, 2, 4}));
  const std::vector<int> parts{2, 1};
  CHECK(is_shuffle(Permutation({1, 3, 2}), parts));
  CHECK_FALSE(is_shuffle(Permutation({3, 1, 2}), parts));
}

namespace {

Permutation random_permutation(int k, std::mt19937_64& rng) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace

TEST_CASE("Koszul sign is a cocycle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const Permutation s = random_permutation(k, rng), t = random_permutation(k, rng);
    std::vector<int> d(k);
    for (auto& x : d) x = static_cast<int>(rng() % 4);
    const auto td = permute_degrees(t, d);
    CHECK(koszul_sign(s.compose(t), d) == koszul_sign(s, td) * koszul_sign(t, d));
  }
}

TEST_CASE("permute_factors is a group action") {
  std::mt19937_64 rng(11);
  auto degree = [](const std::pair<char, int>& f) { return f.second; };
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<char, int>> word;
    for (int i = 0; i < k; ++i) word.emplace_back(static_cast<char>('a' + i), static_cast<int>(rng() % 3));
    // A random word in adjacent transpositions, applied one at a time.
    Permutation total = Permutation::identity(k);
    auto current = word;
    int sign = 1;
    for (int step = 0; step < 6; ++step) {
      const int i = 1 + static_cast<int>(rng() % (k - 1));
      std::vector<int> v(k);
      for (int j = 0; j < k; ++j) v[j] = j + 1;
      std::swap(v[i - 1], v[i]);
      const Permutation g(v);
      auto [next, s] = permute_factors(g, current, degree);
      current = next;
      sign *= s;
      total = g.compose(total);
    }
    auto [direct, s] = permute_factors(total, word, degree);
    CHECK(direct == current);
    CHECK(s == sign);
  }
}

TEST_CASE("transposition and tensor boundary signs") {
  using B = CubeWord;
  const auto x = CubeWord::parse("[01]"), y = CubeWord::parse("[01][1]");
  auto t = TensorElement<B>::basis({x, y});
  auto deg = [](const B& b) { return b.degree(); };
  CHECK(transpose(t, deg) == -1 * TensorElement<B>::basis({y, x}));
  auto d = model_tensor_boundary<CubicalModel>(t);
  auto dd = model_tensor_boundary<CubicalModel>(d);
  CHECK(dd.is_zero());
  CHECK(d.coefficient({x, CubeWord::parse("[1][1]")}) == -1);
}
