// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "einfty/einfty.hpp"

using namespace einfty;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

Outcome from_reports(const std::vector<SuiteReport>& reports) {
  Outcome o{true, {}};
  std::size_t cases = 0;
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      cases += c.cases;
      if (!c.passed() && o.ok) {
        o.ok = false;
        o.detail = r.suite + ": " + c.name + ": " + c.first_failure;
      }
    }
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

std::string sample(const std::string& name) { return std::string(EINFTY_SAMPLES) + "/" + name + ".json"; }

std::vector<std::string> groups(const std::vector<HomologyGroup>& h) {
  std::vector<std::string> out;
  for (const auto& g : h) out.push_back(render_group(g, Ring::integers()));
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return "(" + s + ")";
}

const std::vector<std::string> kSamples{"point", "hollow_square", "unit_square", "annulus", "cube_surface", "torus", "rp2"};
const std::vector<std::string> kLattice{"point", "hollow_square", "unit_square", "annulus", "cube_surface"};

Outcome bialgebra() {
  const auto t0 = Clock::now();
  auto o = from_reports({bialgebra_suite<CubicalModel>(3, 1000, 6, 2024)});
  const double s = seconds_since(t0);
  o.detail += ", " + seconds(s);
  if (s >= 5.0) {
    o.ok = false;
    o.detail += " (limit 5 s)";
  }
  return o;
}

Outcome worked_example() {
  const auto w = worked_boundary_example();
  return {w.matches, "product = " + render(w.product) + "; boundary = " + render(w.boundary)};
}

Outcome coproduct() {
  const auto t0 = Clock::now();
  auto o = from_reports({coproduct_suite(6)});
  const double s = seconds_since(t0);
  o.detail += ", " + seconds(s);
  if (s >= 5.0) {
    o.ok = false;
    o.detail += " (limit 5 s)";
  }
  return o;
}

Outcome counterexample_displays() {
  Outcome o{true, {}};
  int n = 0;
  for (const auto& d : counterexamples()) {
    ++n;
    if (!d.reproduced) {
      o.ok = false;
      o.detail += "not reproduced: " + d.title + "; ";
    }
  }
  if (n != 3) o.ok = false;
  if (o.ok) o.detail = std::to_string(n) + " displays reproduced";
  return o;
}

Outcome homology_oracles() {
  const std::vector<std::pair<std::string, std::vector<std::string>>> oracles{
      {"hollow_square", {"Z", "Z"}},
      {"cube_surface", {"Z", "0", "Z"}},
      {"torus", {"Z", "Z^2", "Z"}},
      {"rp2", {"Z", "Z/2", "0"}},
  };
  Outcome o{true, {}};
  for (const auto& [name, want] : oracles) {
    const auto got = groups(std::visit([](const auto& c) { return homology(c); }, load_complex(sample(name))));
    if (got != want) {
      o.ok = false;
      o.detail += name + " gave " + join(got) + "; ";
    }
  }
  for (const auto& name : kLattice) {
    const auto x = std::get<LatticeCubicalComplex>(load_complex(sample(name)));
    if (homology(x) != homology(triangulate(x).complex())) {
      o.ok = false;
      o.detail += name + ": H(X) != H(T X); ";
    }
  }
  if (o.ok) o.detail = "4 oracles, " + std::to_string(kLattice.size()) + " triangulations";
  return o;
}

template <FiniteComplex X>
std::string steenrod_failures(const X& x) {
  const SteenrodAlgebra<X> a(x);
  const auto& h = a.cohomology();
  std::string bad;
  for (int n = 0; n <= h.top(); ++n) {
    if (a.sq_matrix(1, n) != a.bockstein_matrix(n)) bad += "Sq^1 != Bockstein on H^" + std::to_string(n) + "; ";
    for (const auto& alpha : h.basis(n)) {
      for (int k = n + 1; k <= n + 2; ++k)
        if (a.sq(k, n, alpha).any()) bad += "Sq^" + std::to_string(k) + " nonzero on H^" + std::to_string(n) + "; ";
      if (2 * n <= h.top() && !(h.express(2 * n, a.sq(n, n, alpha)) == h.express(2 * n, a.cup(n, alpha, n, alpha))))
        bad += "Sq^n != cup square on H^" + std::to_string(n) + "; ";
    }
  }
  return bad;
}

Outcome steenrod_oracles() {
  Outcome o{true, {}};
  for (const auto& name : kSamples) {
    const std::string bad =
        std::visit([](const auto& c) { return steenrod_failures(c); }, load_complex(sample(name)));
    if (!bad.empty()) {
      o.ok = false;
      o.detail += name + ": " + bad;
    }
  }

  const auto rp2 = std::get<SimplicialComplex>(load_complex(sample("rp2")));
  const SteenrodAlgebra<SimplicialComplex> r(rp2);
  if (r.sq_matrix(1, 1) != std::vector<std::vector<int>>{{1}}) {
    o.ok = false;
    o.detail += "RP2: Sq^1 H^1 -> H^2 is not an isomorphism; ";
  }

  const auto torus = std::get<PresentedCubicalSet>(load_complex(sample("torus")));
  const SteenrodAlgebra<PresentedCubicalSet> t(torus);
  if (t.sq_matrix(1, 1) != std::vector<std::vector<int>>{{0, 0}}) {
    o.ok = false;
    o.detail += "torus: Sq^1 != 0; ";
  }
  const auto& ht = t.cohomology();
  int p[2][2] = {};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) p[i][j] = ht.express(2, t.cup(1, ht.basis(1)[i], 1, ht.basis(1)[j])).get(0);
  if ((p[0][0] * p[1][1] + p[0][1] * p[1][0]) % 2 != 1) {
    o.ok = false;
    o.detail += "torus: cup pairing degenerate; ";
  }

  std::size_t pairs = 0;
  for (const auto& name : kLattice) {
    const auto x = std::get<LatticeCubicalComplex>(load_complex(sample(name)));
    const auto cmp = compare_under_ez(x, triangulate(x));
    pairs += cmp.classes_checked;
    if (!cmp.isomorphism || !cmp.sq_agrees) {
      o.ok = false;
      o.detail += name + ": cubical and triangulated squares disagree; ";
    }
  }
  if (o.ok) o.detail = std::to_string(kSamples.size()) + " complexes, " + std::to_string(pairs) + " EZ class checks";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bialgebra relations on chains of cubes", bialgebra},
      {"worked boundary example", worked_example},
      {"closed and compositional coproduct agree", coproduct},
      {"recursive and closed cup-i agree", [] { return from_reports({cupi_suite(4, 5)}); }},
      {"mod-2 coherence of cup-i", [] { return from_reports({coherence_suite(3, 5)}); }},
      {"Cartan-Serre suite", [] { return from_reports({cs_suite(5, 4, 4)}); }},
      {"no-go displays", counterexample_displays},
      {"Eilenberg-Zilber suite", [] { return from_reports({ez_suite(4)}); }},
      {"homology oracles", homology_oracles},
      {"Steenrod oracles", steenrod_oracles},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " [" << o.detail
              << "]\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
