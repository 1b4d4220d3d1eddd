// Text front ends: the term language and linear combinations of tensors.
//
//   term := id(k) | eps | delta | star | perm(s_1,...,s_k) | comp(term,term)
//         | ten(term,...) | neg(term) | cup(i) | itdelta(k) | itstar(k)
//         | shuffle(k_1,...,k_r; s_1,...,s_k)
//
//   chain  := ["-"] summand (("+" | "-") summand)*
//   summand := [int ["*"]] word (("⊗" | "|") word)*
#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "einfty/chain_model.hpp"
#include "einfty/term.hpp"

namespace einfty {

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view src) : src_(src) {}

  CoopTerm parse_all() {
    CoopTerm t = term();
    skip();
    if (pos_ != src_.size()) fail("end of input");
    return t;
  }

 private:
  static constexpr const char* kTermStart =
      "id, eps, delta, star, perm, comp, ten, neg, cup, itdelta, itstar, shuffle";

  [[noreturn]] void fail(const std::string& expected) const {
    std::string got = pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
    throw ParseError("expected " + expected + " but found " + got, pos_);
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= src_.size() || src_[pos_] != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("an integer");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("an integer below 10^6");
    }
    return std::stoi(std::string(src_.substr(start, pos_ - start)));
  }

  std::vector<int> integers() {
    std::vector<int> v{integer()};
    while (accept(',')) v.push_back(integer());
    return v;
  }

  int argument() {
    expect('(');
    const int k = integer();
    expect(')');
    return k;
  }

  Permutation one_line(std::size_t at, const std::vector<int>& v) {
    try {
      return Permutation(v);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()), at);
    }
  }

  template <class F>
  CoopTerm checked(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
  }

  CoopTerm term() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string_view word = src_.substr(start, pos_ - start);
    if (word.empty()) fail(std::string("a term (") + kTermStart + ")");
    if (word == "eps") return CoopTerm::counit();
    if (word == "delta") return CoopTerm::coproduct();
    if (word == "star") return CoopTerm::product();
    if (word == "id") return checked(start, [k = argument()] { return CoopTerm::identity(k); });
    if (word == "cup") return checked(start, [k = argument()] { return cup_i_closed(k); });
    if (word == "itdelta") return checked(start, [k = argument()] { return iterated_coproduct(k); });
    if (word == "itstar") return checked(start, [k = argument()] { return iterated_product(k); });
    if (word == "perm") {
      expect('(');
      const std::size_t at = pos_;
      auto v = integers();
      expect(')');
      return CoopTerm::perm(one_line(at, v));
    }
    if (word == "comp") {
      expect('(');
      CoopTerm outer = term();
      expect(',');
      CoopTerm inner = term();
      expect(')');
      return checked(start, [&] { return CoopTerm::compose(outer, inner); });
    }
    if (word == "ten") {
      expect('(');
      std::vector<CoopTerm> factors{term()};
      while (accept(',')) factors.push_back(term());
      expect(')');
      return checked(start, [&] { return CoopTerm::tensor(factors); });
    }
    if (word == "neg") {
      expect('(');
      CoopTerm inner = term();
      expect(')');
      return CoopTerm::negate(inner);
    }
    if (word == "shuffle") {
      expect('(');
      auto parts = integers();
      expect(';');
      const std::size_t at = pos_;
      auto v = integers();
      expect(')');
      ShuffleSpec spec{parts, one_line(at, v)};
      return checked(start, [&] { return shuffle_graph(spec); });
    }
    pos_ = start;
    fail(std::string("a term (") + kTermStart + ")");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline CoopTerm parse_term(std::string_view src) { return detail::TermParser(src).parse_all(); }

/// One summand of a parsed chain: coefficient and the source text of each
/// tensor factor with its offset.
struct ChainSummand {
  std::int64_t coefficient = 1;
  std::vector<std::pair<std::string, std::size_t>> factors;
};

/// Splits a linear combination of tensors of bracketed words. Factors are
/// separated by "⊗" or "|"; a factor is a run of bracket groups.
inline std::vector<ChainSummand> split_chain(std::string_view text) {
  std::vector<ChainSummand> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto at_tensor = [&] {
    if (i < text.size() && text[i] == '|') return std::size_t{1};
    if (text.substr(i, 3) == "⊗") return std::size_t{3};
    return std::size_t{0};
  };
  skip();
  if (i == text.size()) throw ParseError("expected a chain but the input is empty", 0);
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between summands", i);
    }
    first = false;
    ChainSummand s;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i - start > 18) throw ParseError("coefficient too large", start);
      s.coefficient = std::stoll(std::string(text.substr(start, i - start)));
      skip();
      if (i < text.size() && text[i] == '*') ++i;
    }
    s.coefficient *= sign;
    while (true) {
      skip();
      if (i >= text.size() || text[i] != '[') throw ParseError("expected '[' starting a word", i);
      const std::size_t start = i;
      while (true) {
        std::size_t close = text.find(']', i);
        if (close == std::string_view::npos) throw ParseError("unterminated '['", i);
        i = close + 1;
        std::size_t j = i;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j < text.size() && text[j] == '[')
          i = j;
        else
          break;
      }
      s.factors.emplace_back(std::string(text.substr(start, i - start)), start);
      skip();
      const std::size_t sep = at_tensor();
      if (sep == 0) break;
      i += sep;
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// A chain of cubical tensor words, e.g. "[01][01]" or "[0][1] ⊗ [01] - [1]|[0]".
inline TensorElement<CubeWord> parse_cube_chain(std::string_view text, Ring ring = Ring::integers()) {
  TensorElement<CubeWord> out(ring);
  for (const auto& s : split_chain(text)) {
    Tensor<CubeWord> t;
    for (const auto& [f, at] : s.factors) {
      try {
        t.push_back(CubeWord::parse(f));
      } catch (const ParseError& e) {
        throw ParseError("bad cube word '" + f + "'", at + e.position());
      }
    }
    out.add_term(t, s.coefficient);
  }
  return out;
}

/// A chain of simplices of △^n, e.g. "[0,1,2]" or "[0,1] | [1,2]". With
/// ambient < 0 the ambient simplex is spanned by the largest vertex used.
inline TensorElement<SimplexWord> parse_simplex_chain(std::string_view text, int ambient = -1,
                                                      Ring ring = Ring::integers()) {
  auto summands = split_chain(text);
  if (ambient < 0) {
    ambient = 0;
    for (const auto& s : summands)
      for (const auto& [f, at] : s.factors) {
        try {
          ambient = std::max(ambient, SimplexWord::parse(f, -1).ambient());
        } catch (const ParseError& e) {
          throw ParseError("bad simplex '" + f + "'", at + e.position());
        } catch (const std::invalid_argument& e) {
          throw ParseError("bad simplex '" + f + "': " + e.what(), at);
        }
      }
  }
  TensorElement<SimplexWord> out(ring);
  for (const auto& s : summands) {
    Tensor<SimplexWord> t;
    for (const auto& [f, at] : s.factors) {
      try {
        t.push_back(SimplexWord::parse(f, ambient));
      } catch (const ParseError& e) {
        throw ParseError("bad simplex '" + f + "'", at + e.position());
      } catch (const std::invalid_argument& e) {
        throw ParseError("bad simplex '" + f + "': " + e.what(), at);
      }
    }
    out.add_term(t, s.coefficient);
  }
  return out;
}

}  // namespace einfty
