// JSON input for the three complex formats, told apart by their keys:
//   {"dim": d, "cubes": [...]}            lattice cubical complex
//   {"cells": [...], "faces": {...}}      presented cubical set
//   {"facets": [...]}                     simplicial complex
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "einfty/complexes.hpp"
#include "json.hpp"

namespace einfty {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyComplex = std::variant<LatticeCubicalComplex, PresentedCubicalSet, SimplicialComplex>;

namespace detail {

inline const nlohmann::json& member(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing key \"" + key + "\"");
  return j.at(key);
}

inline long as_long(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer, got " + j.dump());
  return j.get<long>();
}

inline LatticeCubicalComplex parse_lattice(const nlohmann::json& j) {
  const long d = as_long(member(j, "dim", "lattice complex"), "dim");
  const auto& cubes = member(j, "cubes", "lattice complex");
  if (!cubes.is_array()) throw InputError("cubes: expected an array");
  std::vector<ElementaryCube> out;
  for (std::size_t q = 0; q < cubes.size(); ++q) {
    const std::string where = "cubes[" + std::to_string(q) + "]";
    if (!cubes[q].is_array()) throw InputError(where + ": expected an array of intervals");
    ElementaryCube cube;
    for (std::size_t k = 0; k < cubes[q].size(); ++k) {
      const auto& iv = cubes[q][k];
      const std::string w = where + "[" + std::to_string(k) + "]";
      if (!iv.is_array() || iv.size() != 2) throw InputError(w + ": expected [lo, hi]");
      cube.push_back(Interval{as_long(iv[0], w), as_long(iv[1], w)});
    }
    out.push_back(std::move(cube));
  }
  try {
    return LatticeCubicalComplex(static_cast<int>(d), out);
  } catch (const ValidationError& e) {
    throw InputError(std::string("lattice complex: ") + e.what());
  }
}

inline PresentedCubicalSet parse_presented(const nlohmann::json& j) {
  const auto& cells = member(j, "cells", "presented cubical set");
  const auto& faces = member(j, "faces", "presented cubical set");
  if (!cells.is_array()) throw InputError("cells: expected an array");
  if (!faces.is_object()) throw InputError("faces: expected an object keyed by cell id");
  std::vector<std::pair<std::string, int>> cs;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::string where = "cells[" + std::to_string(k) + "]";
    const auto& id = member(cells[k], "id", where);
    if (!id.is_string()) throw InputError(where + ".id: expected a string");
    cs.emplace_back(id.get<std::string>(), static_cast<int>(as_long(member(cells[k], "dim", where), where + ".dim")));
  }
  std::map<std::string, std::vector<PresentedCubicalSet::FaceEntry>> fs;
  for (const auto& [id, list] : faces.items()) {
    if (!list.is_array()) throw InputError("faces." + id + ": expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string where = "faces." + id + "[" + std::to_string(k) + "]";
      PresentedCubicalSet::FaceEntry e;
      e.i = static_cast<int>(as_long(member(list[k], "i", where), where + ".i"));
      e.eps = static_cast<int>(as_long(member(list[k], "e", where), where + ".e"));
      const auto& target = member(list[k], "target", where);
      if (!target.is_string()) throw InputError(where + ".target: expected a string");
      e.target = target.get<std::string>();
      if (list[k].contains("degens")) {
        if (!list[k]["degens"].is_array()) throw InputError(where + ".degens: expected an array");
        for (const auto& d : list[k]["degens"]) e.degens.push_back(static_cast<int>(as_long(d, where + ".degens")));
      }
      fs[id].push_back(std::move(e));
    }
  }
  try {
    return PresentedCubicalSet(cs, fs);
  } catch (const ValidationError& e) {
    throw InputError(std::string("presented cubical set: ") + e.what());
  }
}

inline SimplicialComplex parse_simplicial(const nlohmann::json& j) {
  const auto& facets = member(j, "facets", "simplicial complex");
  if (!facets.is_array()) throw InputError("facets: expected an array");
  std::vector<std::vector<long>> out;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    const std::string where = "facets[" + std::to_string(k) + "]";
    if (!facets[k].is_array()) throw InputError(where + ": expected an array of vertices");
    std::vector<long> f;
    for (const auto& v : facets[k]) f.push_back(as_long(v, where));
    out.push_back(std::move(f));
  }
  try {
    return SimplicialComplex(out);
  } catch (const ValidationError& e) {
    throw InputError(std::string("simplicial complex: ") + e.what());
  }
}

}  // namespace detail

inline AnyComplex parse_complex(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("complex: expected a JSON object");
  if (j.contains("cubes")) return detail::parse_lattice(j);
  if (j.contains("cells")) return detail::parse_presented(j);
  if (j.contains("facets")) return detail::parse_simplicial(j);
  throw InputError("complex: expected one of the keys \"cubes\", \"cells\" or \"facets\"");
}

inline AnyComplex parse_complex_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_complex(j);
}

inline AnyComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_complex_text(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline std::string complex_kind(const AnyComplex& x) {
  switch (x.index()) {
    case 0: return "lattice";
    case 1: return "presented";
    default: return "simplicial";
  }
}

}  // namespace einfty
