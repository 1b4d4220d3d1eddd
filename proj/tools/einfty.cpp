// einfty: homology, Steenrod squares, term evaluation and relation suites
// for cubical and simplicial chains.
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "einfty/einfty.hpp"
#include "json.hpp"

namespace {

using namespace einfty;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::string input;
  std::string ring = "Z";
  std::string term;
  std::string side = "cubical";
  std::string suite = "all";
  std::string cell;
  std::optional<int> n, i, k;
  std::uint64_t seed = 1;
  bool json = false;
};

json torsion_json(const HomologyGroup& g) { return json(g.torsion); }

template <FiniteComplex X>
json homology_json(const X& x, Ring ring) {
  json out = json::array();
  for (const auto& g : homology(x, ring))
    out.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", torsion_json(g)}});
  return out;
}

int cmd_homology(const Options& o) {
  const Ring ring = Ring::parse(o.ring);
  const AnyComplex x = load_complex(o.input);
  return std::visit(
      [&](const auto& c) {
        const auto groups = homology(c, ring);
        if (o.json) {
          std::cout << homology_json(c, ring).dump(2) << "\n";
        } else {
          std::cout << complex_kind(x) << " complex, cells per degree:";
          for (int n = 0; n <= c.dimension(); ++n) std::cout << " " << c.count(n);
          std::cout << "\n";
          for (const auto& g : groups) std::cout << "H_" << g.degree << " = " << render_group(g, ring) << "\n";
        }
        return kOk;
      },
      x);
}

std::string cochain_support(const BitVector& v, const ChainComplexData& d, int n) {
  std::string s;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v.get(j)) s += (s.empty() ? "" : " + ") + d.labels[n][j] + "*";
  return s.empty() ? "0" : s;
}

int cmd_cohomology(const Options& o) {
  const AnyComplex x = load_complex(o.input);
  return std::visit(
      [&](const auto& c) {
        const Mod2Cohomology h(chain_complex(c));
        json out = json::array();
        for (int n = 0; n <= h.top(); ++n) {
          json reps = json::array();
          for (const auto& b : h.basis(n)) reps.push_back(cochain_support(b, h.data(), n));
          out.push_back({{"degree", n}, {"rank", h.rank(n)}, {"representatives", reps}});
          if (!o.json) {
            std::cout << "H^" << n << "(Z/2) has rank " << h.rank(n) << "\n";
            for (std::size_t j = 0; j < h.rank(n); ++j)
              std::cout << "  class " << j << ": " << reps[j].get<std::string>() << "\n";
          }
        }
        if (o.json) std::cout << out.dump(2) << "\n";
        return kOk;
      },
      x);
}

std::string render_matrix(const std::vector<std::vector<int>>& m) {
  if (m.empty()) return "(empty)";
  std::string s;
  for (const auto& row : m) {
    s += "[";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
    s += "]";
  }
  return s.empty() ? "(empty)" : s;
}

int cmd_sq(const Options& o) {
  const int k = o.k.value_or(1);
  if (k < 0) throw InputError("--k must be >= 0");
  const AnyComplex x = load_complex(o.input);
  return std::visit(
      [&](const auto& c) {
        using X = std::decay_t<decltype(c)>;
        const SteenrodAlgebra<X> a(c);
        const auto groups = homology(c, Ring::integers());
        const auto& h = a.cohomology();
        json out = json::array();
        for (int n = 0; n <= h.top(); ++n) {
          const auto m = a.sq_matrix(k, n);
          out.push_back({{"degree", n},
                         {"betti", groups[n].betti},
                         {"torsion", torsion_json(groups[n])},
                         {"sq", {{"k", k}, {"matrix", m}}}});
          if (!o.json)
            std::cout << "Sq^" << k << ": H^" << n << " (rank " << h.rank(n) << ") -> H^" << n + k << " (rank "
                      << h.rank(n + k) << "): " << render_matrix(m) << "\n";
        }
        if (o.json) std::cout << out.dump(2) << "\n";
        return kOk;
      },
      x);
}

template <ChainModel M>
int print_eval(const Options& o, const CoopTerm& t, const TensorElement<typename M::Basis>& in) {
  const auto out = evaluate<M>(t, in);
  if (o.json) {
    json terms = json::array();
    for (const auto& [tensor, c] : out) {
      json factors = json::array();
      for (const auto& b : tensor) factors.push_back(render(b));
      terms.push_back({{"coefficient", c}, {"tensor", factors}});
    }
    std::cout << json{{"term", t.render()}, {"input", render(in)}, {"output", terms}}.dump(2) << "\n";
  } else {
    std::cout << render(out) << "\n";
  }
  return kOk;
}

int cmd_eval(const Options& o) {
  if (o.term.empty()) throw InputError("eval needs --term");
  if (o.input.empty()) throw InputError("eval needs --input (a chain such as \"[01][01]\" or a complex file)");
  const Ring ring = Ring::parse(o.ring);
  const CoopTerm t = parse_term(o.term);
  if (!o.cell.empty()) {
    const AnyComplex x = load_complex(o.input);
    return std::visit(
        [&](const auto& c) {
          for (int n = 0; n <= c.dimension(); ++n)
            for (std::size_t i = 0; i < c.count(n); ++i)
              if (c.label(n, i) == o.cell) {
                const auto out = Pushforward<std::decay_t<decltype(c)>>(c, t, ring)(n, i);
                std::string s = render_element(out, [&](const Tensor<CellRef>& tensor) {
                  if (tensor.empty()) return std::string("1");
                  std::string r;
                  for (std::size_t j = 0; j < tensor.size(); ++j)
                    r += (j ? " ⊗ " : "") + c.label(tensor[j].dim, static_cast<std::size_t>(tensor[j].index));
                  return r;
                });
                std::cout << s << "\n";
                return kOk;
              }
          throw InputError("no cell labelled '" + o.cell + "'");
        },
        x);
  }
  if (o.side == "cubical") return print_eval<CubicalModel>(o, t, parse_cube_chain(o.input, ring));
  if (o.side == "simplicial") return print_eval<SimplicialModel>(o, t, parse_simplex_chain(o.input, o.n.value_or(-1), ring));
  throw InputError("--side must be cubical or simplicial");
}

json suite_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"passed", c.passed()},
                      {"first_failure", c.first_failure}});
  return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

int cmd_verify(const Options& o) {
  const std::vector<std::string> names{"bialgebra", "coproduct", "cupi",       "coherence",
                                       "cs",        "ez",        "naturality", "simplicial"};
  if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end()) {
    std::string all;
    for (const auto& n : names) all += " " + n;
    throw InputError("unknown suite '" + o.suite + "'; expected all or one of:" + all);
  }
  auto run = [&](const std::string& s) -> std::vector<SuiteReport> {
    if (s == "bialgebra")
      return {bialgebra_suite<CubicalModel>(o.n.value_or(3), 1000, 6, o.seed),
              bialgebra_suite<SimplicialModel>(o.n.value_or(3), 1000, 6, o.seed)};
    if (s == "coproduct") return {coproduct_suite(o.n.value_or(6))};
    if (s == "cupi") return {cupi_suite(o.i.value_or(4), o.n.value_or(5))};
    if (s == "coherence") return {coherence_suite(o.i.value_or(3), o.n.value_or(5))};
    if (s == "cs") return {cs_suite(o.n.value_or(5), o.k.value_or(4), std::min(o.n.value_or(4), 4))};
    if (s == "ez") return {ez_suite(o.n.value_or(4))};
    if (s == "naturality") return {naturality_suite(o.k.value_or(3), o.n.value_or(4))};
    return {simplicial_suite(o.n.value_or(5))};
  };
  std::vector<SuiteReport> reports;
  for (const auto& s : names)
    if (o.suite == "all" || o.suite == s)
      for (auto& r : run(s)) reports.push_back(std::move(r));
  bool ok = true;
  json out = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (o.json)
      out.push_back(suite_json(r));
    else
      std::cout << r.render();
  }
  if (o.json) std::cout << out.dump(2) << "\n";
  return ok ? kOk : kVerificationFailed;
}

LatticeCubicalComplex load_lattice(const std::string& path) {
  AnyComplex x = load_complex(path);
  if (auto* l = std::get_if<LatticeCubicalComplex>(&x)) return *l;
  throw InputError(path + ": expected a lattice cubical complex (keys \"dim\" and \"cubes\")");
}

int cmd_triangulate(const Options& o) {
  const LatticeCubicalComplex x = load_lattice(o.input);
  const TriangulatedComplex t = triangulate(x);
  const SimplicialComplex& s = t.complex();
  if (o.json) {
    json facets = json::array(), points = json::array();
    for (int n = 0; n <= s.dimension(); ++n)
      for (std::size_t i = 0; i < s.count(n); ++i) facets.push_back(s.simplex(n, i));
    for (std::size_t v = 0; v < s.count(0); ++v) points.push_back(t.point(static_cast<long>(v)));
    std::cout << json{{"facets", facets}, {"points", points}}.dump() << "\n";
    return kOk;
  }
  std::cout << "simplices per degree:";
  for (int n = 0; n <= s.dimension(); ++n) std::cout << " " << s.count(n);
  std::cout << "\n";
  for (std::size_t v = 0; v < s.count(0); ++v) std::cout << "vertex " << v << " = " << t.label_point(static_cast<long>(v)) << "\n";
  for (int n = 1; n <= s.dimension(); ++n)
    for (std::size_t i = 0; i < s.count(n); ++i) std::cout << s.label(n, i) << "\n";
  return kOk;
}

int cmd_compare(const Options& o) {
  const LatticeCubicalComplex x = load_lattice(o.input);
  const TriangulatedComplex t = triangulate(x);
  const auto hx = homology(x), ht = homology(t.complex());
  const bool same = hx == ht;
  const EzComparison cmp = compare_under_ez(x, t);
  const bool ok = same && cmp.isomorphism && cmp.sq_agrees;
  if (o.json) {
    std::cout << json{{"homology_equal", same},
                      {"ez_isomorphism", cmp.isomorphism},
                      {"sq_agrees", cmp.sq_agrees},
                      {"classes_checked", cmp.classes_checked},
                      {"cubical", homology_json(x, Ring::integers())},
                      {"triangulated", homology_json(t.complex(), Ring::integers())}}
                     .dump(2)
              << "\n";
  } else {
    for (std::size_t n = 0; n < std::max(hx.size(), ht.size()); ++n) {
      const std::string a = n < hx.size() ? render_group(hx[n], Ring::integers()) : "0";
      const std::string b = n < ht.size() ? render_group(ht[n], Ring::integers()) : "0";
      std::cout << "H_" << n << ": X = " << a << ", T X = " << b << "\n";
    }
    std::cout << "EZ induces an isomorphism on mod-2 cohomology: " << (cmp.isomorphism ? "yes" : "no") << "\n";
    std::cout << "Sq^k agrees under EZ (" << cmp.classes_checked << " class/operation pairs): "
              << (cmp.sq_agrees ? "yes" : "no") << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_counterexamples(const Options& o) {
  const auto displays = counterexamples();
  bool ok = true;
  json out = json::array();
  for (const auto& d : displays) {
    ok = ok && d.reproduced;
    if (o.json) {
      out.push_back({{"title", d.title},
                     {"lhs", {{"label", d.lhs_label}, {"value", d.lhs}}},
                     {"rhs", {{"label", d.rhs_label}, {"value", d.rhs}}},
                     {"notes", d.notes},
                     {"reproduced", d.reproduced}});
      continue;
    }
    std::cout << d.title << "\n";
    std::cout << "  " << d.lhs_label << " =\n    " << d.lhs << "\n";
    std::cout << "  " << d.rhs_label << " =\n    " << d.rhs << "\n";
    for (const auto& n : d.notes) std::cout << "  " << n << "\n";
    std::cout << "  " << (d.reproduced ? "reproduced" : "NOT reproduced") << "\n\n";
  }
  if (o.json) std::cout << out.dump(2) << "\n";
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubical and simplicial chains with an explicit E-infinity structure"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* c, const std::string& help) { c->add_option("--input", o.input, help)->required(); };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "Emit JSON"); };

  auto* homology_cmd = app.add_subcommand("homology", "Homology of a complex");
  add_input(homology_cmd, "Complex file (JSON)");
  homology_cmd->add_option("--ring", o.ring, "Z or Z/p");
  add_json(homology_cmd);

  auto* cohomology_cmd = app.add_subcommand("cohomology", "Mod-2 cohomology basis of a complex");
  add_input(cohomology_cmd, "Complex file (JSON)");
  add_json(cohomology_cmd);

  auto* sq_cmd = app.add_subcommand("sq", "Steenrod square Sq^k on mod-2 cohomology");
  add_input(sq_cmd, "Complex file (JSON)");
  sq_cmd->add_option("--k", o.k, "Degree of the square (default 1)");
  add_json(sq_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term on a chain or on a cell of a complex");
  add_input(eval_cmd, "Chain such as \"[01][01]\", or a complex file together with --cell");
  eval_cmd->add_option("--term", o.term, "Term, e.g. \"cup(1)\"")->required();
  eval_cmd->add_option("--side", o.side, "cubical or simplicial")->check(CLI::IsMember({"cubical", "simplicial"}));
  eval_cmd->add_option("--ring", o.ring, "Z or Z/p");
  eval_cmd->add_option("--n", o.n, "Ambient simplex dimension for simplicial chains");
  eval_cmd->add_option("--cell", o.cell, "Label of a cell of the complex in --input");
  add_json(eval_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run relation suites");
  verify_cmd->add_option("--suite", o.suite,
                         "all, bialgebra, coproduct, cupi, coherence, cs, ez, naturality or simplicial");
  verify_cmd->add_option("--n", o.n, "Dimension bound");
  verify_cmd->add_option("--i", o.i, "Largest cup-i index");
  verify_cmd->add_option("--k", o.k, "Largest shuffle size");
  verify_cmd->add_option("--seed", o.seed, "Seed for randomized checks");
  add_json(verify_cmd);

  auto* tri_cmd = app.add_subcommand("triangulate", "Staircase triangulation of a lattice complex");
  add_input(tri_cmd, "Lattice complex file (JSON)");
  add_json(tri_cmd);

  auto* compare_cmd = app.add_subcommand("compare", "Compare a lattice complex with its triangulation");
  add_input(compare_cmd, "Lattice complex file (JSON)");
  add_json(compare_cmd);

  auto* counter_cmd = app.add_subcommand("counterexamples", "Reproduce the three no-go examples");
  add_json(counter_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (homology_cmd->parsed()) return cmd_homology(o);
    if (cohomology_cmd->parsed()) return cmd_cohomology(o);
    if (sq_cmd->parsed()) return cmd_sq(o);
    if (eval_cmd->parsed()) return cmd_eval(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (tri_cmd->parsed()) return cmd_triangulate(o);
    if (compare_cmd->parsed()) return cmd_compare(o);
    if (counter_cmd->parsed()) return cmd_counterexamples(o);
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
