#include <random>

#include "catch_amalgamated.hpp"
#include "einfty/evaluate.hpp"
#include "einfty/parser.hpp"

using namespace einfty;

namespace {

CubeWord W(const char* s) { return CubeWord::parse(s); }
CubeChain C(const char* s) { return CubeChain::basis(W(s)); }

TensorElement<CubeWord> T(std::initializer_list<std::pair<std::int64_t, std::vector<const char*>>> terms) {
  TensorElement<CubeWord> out;
  for (const auto& [c, ws] : terms) {
    Tensor<CubeWord> t;
    for (auto w : ws) t.push_back(W(w));
    out.add_term(t, c);
  }
  return out;
}

}  // namespace

TEST_CASE("cube words parse and render") {
  CHECK(W("[0][01][1]").render() == "[0][01][1]");
  CHECK(W("[0,1]") == W("[01]"));
  CHECK(W("[0][01][1]").degree() == 1);
  CHECK(W("").size() == 0);
  CHECK_THROWS_AS(W("[2]"), ParseError);
  CHECK_THROWS_AS(W("[0"), ParseError);
  CHECK(all_cube_words(3).size() == 27);
  CHECK(W("[0]") < W("[01]"));
  CHECK(W("[01]") < W("[1]"));
}

TEST_CASE("boundary") {
  CHECK(cube_boundary(W("[01]")) == C("[1]") - C("[0]"));
  CHECK(cube_boundary(W("[0]")).is_zero());
  CHECK(cube_boundary(W("[01][01]")) == C("[1][01]") - C("[0][01]") - C("[01][1]") + C("[01][0]"));
  for (int n = 0; n <= 6; ++n)
    for (const auto& w : all_cube_words(n)) {
      CubeChain dd = cube_boundary(w).linear_map([](const CubeWord& v) { return cube_boundary(v); });
      REQUIRE(dd.is_zero());
    }
}

TEST_CASE("counit") {
  CHECK(cube_counit(W("[0][1]")) == 1);
  CHECK(cube_counit(W("[01]")) == 0);
  CHECK(cube_counit(W("")) == 1);
}

TEST_CASE("Serre coproduct") {
  CHECK(cube_coproduct(W("[01]")) == T({{1, {"[0]", "[01]"}}, {1, {"[01]", "[1]"}}}));
  CHECK(cube_coproduct(W("[1]")) == T({{1, {"[1]", "[1]"}}}));
  CHECK(cube_coproduct(W("[01][01]")) == T({{1, {"[01][01]", "[1][1]"}},
                                            {1, {"[01][0]", "[1][01]"}},
                                            {-1, {"[0][01]", "[01][1]"}},
                                            {1, {"[0][0]", "[01][01]"}}}));
  CHECK(cube_coproduct(W("")) == TensorElement<CubeWord>::basis({W(""), W("")}));
  for (int n = 0; n <= 6; ++n) CHECK(cube_coproduct_top_closed(n) == cube_coproduct(CubeWord::top(n)));
}

TEST_CASE("coproduct is coassociative and a chain map") {
  const auto left = CoopTerm::compose(CoopTerm::tensor({CoopTerm::coproduct(), CoopTerm::identity(1)}),
                                      CoopTerm::coproduct());
  const auto right = CoopTerm::compose(CoopTerm::tensor({CoopTerm::identity(1), CoopTerm::coproduct()}),
                                       CoopTerm::coproduct());
  for (int n = 0; n <= 3; ++n)
    for (const auto& w : all_cube_words(n)) {
      REQUIRE(evaluate<CubicalModel>(left, w) == evaluate<CubicalModel>(right, w));
      auto d_then = evaluate<CubicalModel>(CoopTerm::coproduct(), as_tensor(cube_boundary(w)));
      auto then_d = model_tensor_boundary<CubicalModel>(cube_coproduct(w));
      REQUIRE(d_then == then_d);
    }
}

TEST_CASE("degree one product") {
  CHECK(cube_star(W("[0]"), W("[1]")) == C("[01]"));
  CHECK(cube_star(W("[1]"), W("[0]")) == -C("[01]"));
  CHECK(cube_star(W("[0]"), W("[0]")).is_zero());
  CHECK(cube_star(W("[0][0][0]"), W("[1][1][1]")) == C("[01][1][1]") + C("[0][01][1]") + C("[0][0][01]"));
  CHECK(cube_star(W("[1][1]"), W("[0][01]")) == -C("[01][01]"));
  CHECK_THROWS_AS(cube_star(W("[0]"), W("[0][0]")), std::invalid_argument);
}

TEST_CASE("boundary relation of the product, n <= 2") {
  for (int n = 0; n <= 2; ++n)
    for (const auto& x : all_cube_words(n))
      for (const auto& y : all_cube_words(n)) {
        auto bd = [](const CubeChain& c) { return c.linear_map([](const CubeWord& v) { return cube_boundary(v); }); };
        auto star_left = [&](const CubeChain& c) {
          return c.linear_map([&](const CubeWord& v) { return cube_star(v, y); });
        };
        auto star_right = [&](const CubeChain& c) {
          return c.linear_map([&](const CubeWord& v) { return cube_star(x, v); });
        };
        const std::int64_t sx = x.degree() % 2 == 0 ? 1 : -1;
        CubeChain lhs = bd(cube_star(x, y)) + star_left(cube_boundary(x)) + sx * star_right(cube_boundary(y));
        CubeChain rhs = cube_counit(x) * CubeChain::basis(y) - cube_counit(y) * CubeChain::basis(x);
        REQUIRE(lhs == rhs);
        REQUIRE(cube_star(x, y).linear_map([](const CubeWord& v) {
          return FreeElement<int>::basis(0, cube_counit(v));
        }).is_zero());
      }
}

TEST_CASE("cubical operators") {
  CHECK(CubicalOperator::coface(2, 1, 0).apply(W("[01]")) == C("[0][01]"));
  CHECK(CubicalOperator::codegeneracy(2, 1).apply(W("[01][1]")).is_zero());
  CHECK(CubicalOperator::codegeneracy(2, 1).apply(W("[0][01]")) == C("[01]"));
  CHECK_THROWS_AS(CubicalOperator::coface(2, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(CubicalOperator::codegeneracy(2, 1).apply(W("[0]")), std::invalid_argument);

  // σ_1 δ_1^ε = id and δ_j δ_i = δ_{i+1} δ_j for j <= i.
  const auto s_d = CubicalOperator::codegeneracy(2, 1).after(CubicalOperator::coface(2, 1, 1));
  CHECK(s_d == CubicalOperator::identity(1));
  const auto a = CubicalOperator::coface(3, 1, 0).after(CubicalOperator::coface(2, 2, 1));
  const auto b = CubicalOperator::coface(3, 3, 1).after(CubicalOperator::coface(2, 1, 0));
  CHECK(a == b);
}

TEST_CASE("coface naturality of the coproduct") {
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= n; ++i)
      for (int eps = 0; eps <= 1; ++eps) {
        const auto op = CubicalOperator::coface(n, i, eps);
        for (const auto& w : all_cube_words(n - 1)) {
          auto pushed = tensor_power_map<CubeWord, CubeWord>(cube_coproduct(w), [&](const CubeWord& v) { return op.apply(v); });
          auto direct = op.apply(w).linear_map([](const CubeWord& v) { return cube_coproduct(v); });
          REQUIRE(pushed == direct);
        }
      }
}

TEST_CASE("chains parse with coefficients and tensor separators") {
  auto c = parse_cube_chain("2*[0][01] ⊗ [1] - [01]|[0] + [1] ⊗ [1]");
  CHECK(c == T({{2, {"[0][01]", "[1]"}}, {-1, {"[01]", "[0]"}}, {1, {"[1]", "[1]"}}}));
  CHECK(parse_cube_chain("[0] [1]") == T({{1, {"[0][1]"}}}));
  CHECK_THROWS_AS(parse_cube_chain(""), ParseError);
  CHECK_THROWS_AS(parse_cube_chain("[0] [1] [0]]"), ParseError);
  CHECK_THROWS_AS(parse_cube_chain("[0] + "), ParseError);
  CHECK(parse_cube_chain("3[1]", Ring::mod(2)) == TensorElement<CubeWord>::basis({W("[1]")}, 1, Ring::mod(2)));
}
