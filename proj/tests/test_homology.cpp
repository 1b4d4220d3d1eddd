#include <random>

#include "catch_amalgamated.hpp"
#include "einfty/homology.hpp"

using namespace einfty;

namespace {

PresentedCubicalSet torus() {
  return PresentedCubicalSet({{"v", 0}, {"a", 1}, {"b", 1}, {"Q", 2}},
                             {{"a", {{1, 0, "v", {}}, {1, 1, "v", {}}}},
                              {"b", {{1, 0, "v", {}}, {1, 1, "v", {}}}},
                              {"Q", {{1, 0, "a", {}}, {1, 1, "a", {}}, {2, 0, "b", {}}, {2, 1, "b", {}}}}});
}

SimplicialComplex rp2() {
  return SimplicialComplex({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                            {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

LatticeCubicalComplex hollow_square() {
  return LatticeCubicalComplex(2, {{{0, 1}, {0, 0}}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, {{1, 1}, {0, 1}}});
}

std::vector<std::string> groups(const std::vector<HomologyGroup>& h, Ring r = Ring::integers()) {
  std::vector<std::string> out;
  for (const auto& g : h) out.push_back(render_group(g, r));
  return out;
}

}  // namespace

TEST_CASE("Smith normal form") {
  const auto m = ExactMatrix::from_rows({{2, 0}, {0, 3}});
  const auto f = smith_normal_form(m);
  CHECK(f.diagonal == std::vector<std::int64_t>{1, 6});
  CHECK(f.U * m * f.V == f.D);

  const auto z = ExactMatrix(3, 2);
  CHECK(smith_normal_form(z).rank() == 0);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    ExactMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = static_cast<std::int64_t>(rng() % 7) - 3;
    const auto g = smith_normal_form(a);
    REQUIRE(g.U * a * g.V == g.D);
    for (std::size_t k = 1; k < g.diagonal.size(); ++k) REQUIRE(g.diagonal[k] % g.diagonal[k - 1] == 0);
  }
}

TEST_CASE("ranks mod p") {
  const auto m = ExactMatrix::from_rows({{2, 0}, {0, 3}});
  CHECK(rank_mod_p(m, 2) == 1);
  CHECK(rank_mod_p(m, 3) == 1);
  CHECK(rank_mod_p(m, 5) == 2);
}

TEST_CASE("homology of small spaces") {
  const auto hs = hollow_square();
  CHECK(groups(homology(hs)) == std::vector<std::string>{"Z", "Z"});
  CHECK(smith_normal_form(chain_complex(hs).boundary[1], false).rank() == 3);
  CHECK(groups(homology(torus())) == std::vector<std::string>{"Z", "Z^2", "Z"});
  CHECK(groups(homology(rp2())) == std::vector<std::string>{"Z", "Z/2", "0"});
  CHECK(groups(homology(rp2(), Ring::mod(2)), Ring::mod(2)) == std::vector<std::string>{"Z/2", "Z/2", "Z/2"});
  CHECK(groups(homology(rp2(), Ring::mod(3)), Ring::mod(3)) == std::vector<std::string>{"Z/3", "0", "0"});
  CHECK(homology(hs) == homology(triangulate(hs).complex()));
}

TEST_CASE("cohomology bases") {
  Mod2Cohomology h(chain_complex(torus()));
  CHECK(h.rank(0) == 1);
  CHECK(h.rank(1) == 2);
  CHECK(h.rank(2) == 1);
  for (int n = 0; n <= 2; ++n)
    for (std::size_t j = 0; j < h.rank(n); ++j) {
      CHECK(h.is_cocycle(n, h.basis(n)[j]));
      CHECK(h.express(n, h.basis(n)[j]) == BitVector::unit(h.rank(n), j));
    }
  Mod2Cohomology hs(chain_complex(hollow_square()));
  CHECK_THROWS_AS(hs.express(0, BitVector::unit(4, 0)), NotACocycle);
}

TEST_CASE("cup products do not depend on representatives") {
  const auto x = rp2();
  SteenrodAlgebra<SimplicialComplex> a(x);
  const auto& h = a.cohomology();
  std::mt19937_64 rng(5);
  const BitVector alpha = h.basis(1)[0];
  const BitVector base = h.express(2, a.cup(1, alpha, 1, alpha));
  for (int trial = 0; trial < 20; ++trial) {
    BitVector a1 = alpha, a2 = alpha;
    a1 ^= h.random_coboundary(1, rng);
    a2 ^= h.random_coboundary(1, rng);
    REQUIRE(h.express(2, a.cup(1, a1, 1, a2)) == base);
  }
  CHECK(base.any());
}

TEST_CASE("torus cup pairing and unit") {
  const auto x = torus();
  SteenrodAlgebra<PresentedCubicalSet> a(x);
  const auto& h = a.cohomology();
  const BitVector one = h.basis(0)[0];
  for (std::size_t j = 0; j < h.rank(1); ++j) {
    CHECK(h.express(1, a.cup(0, one, 1, h.basis(1)[j])) == BitVector::unit(2, j));
    CHECK(h.express(1, a.cup(1, h.basis(1)[j], 0, one)) == BitVector::unit(2, j));
  }
  int pairing[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) pairing[i][j] = h.express(2, a.cup(1, h.basis(1)[i], 1, h.basis(1)[j])).get(0);
  CHECK((pairing[0][0] * pairing[1][1] + pairing[0][1] * pairing[1][0]) % 2 == 1);
}

TEST_CASE("Steenrod squares") {
  const auto x = rp2();
  SteenrodAlgebra<SimplicialComplex> a(x);
  CHECK(a.sq_matrix(1, 1) == std::vector<std::vector<int>>{{1}});
  CHECK(a.sq_matrix(1, 1) == a.bockstein_matrix(1));
  CHECK(a.sq_matrix(0, 1) == std::vector<std::vector<int>>{{1}});
  CHECK(a.sq_matrix(2, 1) == std::vector<std::vector<int>>{});
  const auto& h = a.cohomology();
  const BitVector alpha = h.basis(1)[0];
  CHECK(h.express(2, a.sq(1, 1, alpha)) == h.express(2, a.cup(1, alpha, 1, alpha)));
  CHECK_FALSE(a.sq(3, 1, alpha).any());
  CHECK_THROWS_AS(a.sq(1, 1, BitVector::unit(x.count(1), 0)), NotACocycle);

  const auto t = torus();
  SteenrodAlgebra<PresentedCubicalSet> b(t);
  CHECK(b.sq_matrix(1, 1) == std::vector<std::vector<int>>{{0, 0}});
  CHECK(b.bockstein_matrix(1) == std::vector<std::vector<int>>{{0, 0}});
}

TEST_CASE("cubical and triangulated squares agree") {
  const auto hs = hollow_square();
  const auto t = triangulate(hs);
  const auto cmp = compare_under_ez(hs, t);
  CHECK(cmp.isomorphism);
  CHECK(cmp.sq_agrees);
  CHECK(cmp.classes_checked > 0);
}
