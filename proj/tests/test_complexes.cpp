#include "catch_amalgamated.hpp"
#include "einfty/complex_io.hpp"
#include "einfty/homology.hpp"

using namespace einfty;

namespace {

using Entry = PresentedCubicalSet::FaceEntry;

PresentedCubicalSet torus() {
  return PresentedCubicalSet({{"v", 0}, {"a", 1}, {"b", 1}, {"Q", 2}},
                             {{"a", {{1, 0, "v", {}}, {1, 1, "v", {}}}},
                              {"b", {{1, 0, "v", {}}, {1, 1, "v", {}}}},
                              {"Q", {{1, 0, "a", {}}, {1, 1, "a", {}}, {2, 0, "b", {}}, {2, 1, "b", {}}}}});
}

LatticeCubicalComplex unit_square() { return LatticeCubicalComplex(2, {{{0, 1}, {0, 1}}}); }

CellRef cell(int d, int i) { return CellRef{d, i}; }

}  // namespace

TEST_CASE("lattice complexes close under faces") {
  const auto x = unit_square();
  CHECK(x.count(0) == 4);
  CHECK(x.count(1) == 4);
  CHECK(x.count(2) == 1);
  CHECK(x.label(2, 0) == "[0,1]x[0,1]");
  CHECK(x.find({{0, 0}, {1, 1}}).has_value());
  CHECK_FALSE(x.find({{2, 2}, {1, 1}}).has_value());
  CHECK_THROWS_AS(LatticeCubicalComplex(2, {{{0, 2}, {0, 0}}}), ValidationError);
  CHECK_THROWS_AS(LatticeCubicalComplex(2, {{{0, 1}}}), ValidationError);
  CHECK(chain_complex(x).d_squared_zero());
}

TEST_CASE("presented cubical sets validate their face tables") {
  CHECK_NOTHROW(torus());
  // Missing face entry.
  CHECK_THROWS_AS(PresentedCubicalSet({{"v", 0}, {"a", 1}}, {{"a", {{1, 0, "v", {}}}}}), ValidationError);
  // Unknown target.
  CHECK_THROWS_AS(PresentedCubicalSet({{"v", 0}, {"a", 1}}, {{"a", {{1, 0, "w", {}}, {1, 1, "v", {}}}}}),
                  ValidationError);
  // Wrong dimension.
  CHECK_THROWS_AS(PresentedCubicalSet({{"v", 0}, {"a", 1}, {"Q", 2}},
                                      {{"a", {{1, 0, "v", {}}, {1, 1, "v", {}}}},
                                       {"Q", {{1, 0, "v", {}}, {1, 1, "a", {}}, {2, 0, "a", {}}, {2, 1, "a", {}}}}}),
                  ValidationError);
  // Duplicate ids.
  CHECK_THROWS_AS(PresentedCubicalSet({{"v", 0}, {"v", 0}}, {}), ValidationError);
  // Corners that do not match violate the cubical identities.
  CHECK_THROWS_AS(PresentedCubicalSet({{"v", 0}, {"w", 0}, {"a", 1}, {"b", 1}, {"Q", 2}},
                                      {{"a", {{1, 0, "v", {}}, {1, 1, "v", {}}}},
                                       {"b", {{1, 0, "w", {}}, {1, 1, "w", {}}}},
                                       {"Q", {{1, 0, "a", {}}, {1, 1, "a", {}}, {2, 0, "b", {}}, {2, 1, "b", {}}}}}),
                  ValidationError);
  // A degenerate face: the square whose left edge is collapsed to a point.
  CHECK_NOTHROW(PresentedCubicalSet({{"v", 0}, {"a", 1}, {"Q", 2}},
                                    {{"a", {{1, 0, "v", {}}, {1, 1, "v", {}}}},
                                     {"Q", {{1, 0, "v", {1}}, {1, 1, "a", {}}, {2, 0, "a", {}}, {2, 1, "a", {}}}}}));
}

TEST_CASE("torus boundary and coproduct pushforward") {
  const auto x = torus();
  CHECK(cell_boundary(x, 2, 0).is_zero());
  CHECK(cell_boundary(x, 1, 0).is_zero());
  Pushforward<PresentedCubicalSet> delta(x, CoopTerm::coproduct());
  CellTensorElement expected;
  expected.add_term({cell(2, 0), cell(0, 0)}, 1);
  expected.add_term({cell(1, 1), cell(1, 0)}, 1);
  expected.add_term({cell(1, 0), cell(1, 1)}, -1);
  expected.add_term({cell(0, 0), cell(2, 0)}, 1);
  CHECK(delta(2, 0) == expected);
  CHECK_THROWS_AS(Pushforward<PresentedCubicalSet>(x, CoopTerm::product()), ArityError);
}

TEST_CASE("pushforward commutes with boundary on a lattice complex") {
  LatticeCubicalComplex x(3, {{{0, 1}, {0, 1}, {0, 1}}});
  Pushforward<LatticeCubicalComplex> delta(x, CoopTerm::coproduct());
  auto tensor_bd = [&](const CellTensorElement& t) {
    return tensor_boundary(
        t, [&](const CellRef& c, Ring r) { return cell_boundary(x, c.dim, c.index, r); },
        [](const CellRef& c) { return c.dim; });
  };
  for (int n = 0; n <= 3; ++n)
    for (std::size_t i = 0; i < x.count(n); ++i)
      REQUIRE(delta(cell_boundary(x, n, static_cast<int>(i))) == tensor_bd(delta(n, i)));
}

TEST_CASE("simplicial complexes") {
  SimplicialComplex s({{0, 1, 2}, {2, 3}});
  CHECK(s.count(0) == 4);
  CHECK(s.count(1) == 4);
  CHECK(s.count(2) == 1);
  CHECK(s.label(2, 0) == "[0,1,2]");
  CHECK_THROWS_AS(SimplicialComplex({{0, 0}}), ValidationError);
  CHECK_THROWS_AS(SimplicialComplex(std::vector<std::vector<long>>{std::vector<long>{}}), ValidationError);
  CHECK(chain_complex(s).d_squared_zero());
}

TEST_CASE("triangulation") {
  const auto sq = unit_square();
  const auto t = triangulate(sq);
  CHECK(t.complex().count(0) == 4);
  CHECK(t.complex().count(1) == 5);
  CHECK(t.complex().count(2) == 2);

  LatticeCubicalComplex surface(3, {{{0, 1}, {0, 1}, {0, 0}}, {{0, 1}, {0, 1}, {1, 1}}, {{0, 1}, {0, 0}, {0, 1}},
                                    {{0, 1}, {1, 1}, {0, 1}}, {{0, 0}, {0, 1}, {0, 1}}, {{1, 1}, {0, 1}, {0, 1}}});
  const auto ts = triangulate(surface);
  CHECK(ts.complex().count(0) == 8);
  CHECK(ts.complex().count(1) == 18);
  CHECK(ts.complex().count(2) == 12);

  // EZ is a chain map from the cubical to the triangulated chains.
  for (int n = 1; n <= 2; ++n)
    for (std::size_t i = 0; i < sq.count(n); ++i) {
      CellChain c = CellChain::basis(cell(n, static_cast<int>(i)));
      REQUIRE(t.ez_map(chain_boundary(sq, c)) == chain_boundary(t.complex(), t.ez_map(c)));
    }
}

TEST_CASE("complex files") {
  const auto x = parse_complex_text(R"({"dim": 1, "cubes": [[[0,1]]]})");
  CHECK(complex_kind(x) == "lattice");
  CHECK(complex_kind(parse_complex_text(R"({"facets": [[0,1],[1,2]]})")) == "simplicial");
  CHECK_THROWS_AS(parse_complex_text("{\"dim\": 1,"), InputError);
  CHECK_THROWS_AS(parse_complex_text("[]"), InputError);
  CHECK_THROWS_AS(parse_complex_text(R"({"shapes": []})"), InputError);
  CHECK_THROWS_AS(load_complex("/nonexistent/complex.json"), InputError);
  CHECK_THROWS(parse_complex_text(R"({"dim": 2, "cubes": [[[0,1]]]})"));
}
