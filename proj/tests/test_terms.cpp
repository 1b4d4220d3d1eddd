#include "catch_amalgamated.hpp"
#include "einfty/evaluate.hpp"
#include "einfty/parser.hpp"

using namespace einfty;

namespace {

template <ChainModel M>
bool same_on(const CoopTerm& a, const CoopTerm& b, int n) {
  for (const auto& w : M::basis(n))
    if (!(evaluate<M>(a, w) == evaluate<M>(b, w))) return false;
  return true;
}

}  // namespace

TEST_CASE("signatures") {
  CHECK(CoopTerm::counit().signature() == Signature{1, 0, 0});
  CHECK(CoopTerm::product().signature() == Signature{2, 1, 1});
  CHECK(iterated_coproduct(3).signature() == Signature{1, 4, 0});
  CHECK(iterated_product(4).signature() == Signature{4, 1, 3});
  CHECK(cup_i_closed(3).signature() == Signature{1, 2, 3});
  CHECK(CoopTerm::tensor({CoopTerm::product(), CoopTerm::coproduct()}).signature() == Signature{3, 3, 1});
  CHECK_THROWS_AS(CoopTerm::compose(CoopTerm::product(), CoopTerm::product()), ArityError);
  CHECK_THROWS_AS(iterated_product(0), ArityError);
  CHECK_THROWS_AS(cup_i_closed(-1), ArityError);
}

TEST_CASE("term language round trip") {
  for (const auto& t : {cup_i_closed(0), cup_i_closed(3), cup_i_recursive(4), twisted_cup1(),
                        CoopTerm::negate(iterated_product(3)), shuffle_graph({{1, 2}, Permutation({2, 1, 3})})}) {
    const auto back = parse_term(t.render());
    CHECK(back.render() == t.render());
    if (t.signature().inputs == 1) CHECK(same_on<CubicalModel>(t, back, 2));
  }
  CHECK(parse_term("cup(1)").render() == cup_i_closed(1).render());
  CHECK(parse_term(" comp ( ten(eps, id(1)) , delta ) ").signature() == Signature{1, 1, 0});
}

TEST_CASE("parse errors carry positions") {
  auto error_at = [](const char* src) {
    try {
      parse_term(src);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(error_at("comp(delta, star") == 16);
  CHECK(error_at("foo") == 0);
  CHECK(error_at("delta delta") == 6);
  CHECK(error_at("perm(1,1)") == 5);
  CHECK(error_at("id(1234567)") == 3);
  CHECK(error_at("shuffle(2,1;3,1,2)") == 0);
  CHECK(error_at("comp(star, star)") == 0);
  CHECK_THROWS_WITH(parse_term("ten(id(1) id(1))"), Catch::Matchers::ContainsSubstring("expected ')'"));
}

TEST_CASE("cup(0) is the coproduct") {
  for (int n = 0; n <= 3; ++n) CHECK(same_on<CubicalModel>(cup_i_closed(0), CoopTerm::coproduct(), n));
  for (int n = 0; n <= 3; ++n) CHECK(same_on<SimplicialModel>(cup_i_closed(0), CoopTerm::coproduct(), n));
}

TEST_CASE("cup(1) on the square") {
  const auto got = evaluate<CubicalModel>(cup_i_closed(1), CubeWord::parse("[01][01]"));
  CHECK(got == parse_cube_chain("[0][01] ⊗ [01][01] - [01][01] ⊗ [01][0] - [01][01] ⊗ [1][01] + [01][1] ⊗ [01][01]"));
}

TEST_CASE("recursive and closed cup-i agree") {
  for (int i = 0; i <= 3; ++i)
    for (int n = 0; n <= 3; ++n) {
      CHECK(same_on<CubicalModel>(cup_i_recursive(i), cup_i_closed(i), n));
      CHECK(same_on<SimplicialModel>(cup_i_recursive(i), cup_i_closed(i), n));
    }
}

TEST_CASE("verbatim recursion leaves the shuffle family at i = 2") {
  CHECK(same_on<CubicalModel>(cup_i_recursive_verbatim(1), cup_i_closed(1), 3));
  CHECK_FALSE(same_on<CubicalModel>(cup_i_recursive_verbatim(2), cup_i_closed(2), 3));
}

TEST_CASE("shuffle graphs") {
  CHECK_THROWS_AS(shuffle_graph({{2, 1}, Permutation({3, 1, 2})}), ArityError);
  CHECK_THROWS_AS(shuffle_graph({{2, 2}, Permutation({1, 2, 3})}), ArityError);
  CHECK_THROWS_AS(parse_term("shuffle(2,1;3,1,2)"), ParseError);
  CHECK(twisted_cup1().signature() == Signature{1, 2, 1});
  // Counts: one spec for k = 1; (2), (1,1) x 2 for k = 2.
  CHECK(all_shuffle_specs(1).size() == 1);
  CHECK(all_shuffle_specs(2).size() == 4);
  for (const auto& spec : all_shuffle_specs(4)) CHECK_NOTHROW(spec.check());
}

TEST_CASE("tensor and negation") {
  const auto w = CubeWord::parse("[01]");
  const auto t = CoopTerm::tensor({CoopTerm::product(), CoopTerm::identity(1)});
  Tensor<CubeWord> in{CubeWord::parse("[0]"), CubeWord::parse("[1]"), w};
  CHECK(evaluate<CubicalModel>(t, TensorElement<CubeWord>::basis(in)) ==
        TensorElement<CubeWord>::basis({w, w}));
  // (id ⊗ *)(x ⊗ [0] ⊗ [1]) picks up (-1)^{|*||x|}.
  const auto u = CoopTerm::tensor({CoopTerm::identity(1), CoopTerm::product()});
  Tensor<CubeWord> in2{w, CubeWord::parse("[0]"), CubeWord::parse("[1]")};
  CHECK(evaluate<CubicalModel>(u, TensorElement<CubeWord>::basis(in2)) ==
        TensorElement<CubeWord>::basis({w, w}, -1));
  CHECK(evaluate<CubicalModel>(CoopTerm::negate(CoopTerm::coproduct()), w) == -cube_coproduct(w));
  CHECK_THROWS_AS(evaluate<CubicalModel>(CoopTerm::product(), w), ArityError);
}
