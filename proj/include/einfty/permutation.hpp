// Permutations in one-line notation and the Koszul sign rule.
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace einfty {

/// A bijection of {1..k}, stored in 1-indexed one-line notation:
/// images()[l-1] = sigma(l).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
        throw std::invalid_argument("not a permutation in one-line notation: " + render());
      seen[v] = true;
    }
  }

  static Permutation identity(int k) {
    std::vector<int> v(k);
    for (int i = 0; i < k; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int l) const { return images_.at(l - 1); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int l = 1; l <= size(); ++l) inv[(*this)(l) - 1] = l;
    return Permutation(std::move(inv));
  }

  /// (this ∘ other)(l) = this(other(l)).
  Permutation compose(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> out(images_.size());
    for (int l = 1; l <= size(); ++l) out[l - 1] = (*this)(other(l));
    return Permutation(std::move(out));
  }

  int inversions() const {
    int n = 0;
    for (int a = 0; a < size(); ++a)
      for (int b = a + 1; b < size(); ++b)
        if (images_[a] > images_[b]) ++n;
    return n;
  }
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  std::string render() const {
    std::string s = "(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(images_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Sign of moving factor l to slot sigma(l) for factors of the given degrees:
/// every pair of odd-degree factors whose order is reversed contributes -1.
inline int koszul_sign(const Permutation& sigma, std::span<const int> degrees) {
  if (static_cast<int>(degrees.size()) != sigma.size())
    throw std::invalid_argument("koszul_sign: " + std::to_string(degrees.size()) + " degrees for a permutation of " +
                                std::to_string(sigma.size()));
  int sign = 1;
  for (int a = 1; a <= sigma.size(); ++a)
    for (int b = a + 1; b <= sigma.size(); ++b)
      if (sigma(a) > sigma(b) && (degrees[a - 1] & 1) && (degrees[b - 1] & 1)) sign = -sign;
  return sign;
}

/// Degrees after acting by sigma: out[sigma(l)] = in[l].
inline std::vector<int> permute_degrees(const Permutation& sigma, std::span<const int> degrees) {
  std::vector<int> out(degrees.size());
  for (int l = 1; l <= sigma.size(); ++l) out[sigma(l) - 1] = degrees[l - 1];
  return out;
}

/// Acts on a word of graded factors: the factor at output slot sigma(l) is
/// input factor l. Returns the permuted word and its Koszul sign.
template <class T, class DegreeFn>
std::pair<std::vector<T>, int> permute_factors(const Permutation& sigma, const std::vector<T>& word, DegreeFn&& degree) {
  if (static_cast<int>(word.size()) != sigma.size())
    throw std::invalid_argument("permute_factors: word of arity " + std::to_string(word.size()) +
                                " for a permutation of " + std::to_string(sigma.size()));
  std::vector<int> degs;
  degs.reserve(word.size());
  for (const auto& f : word) degs.push_back(degree(f));
  std::vector<T> out(word.size());
  for (int l = 1; l <= sigma.size(); ++l) out[sigma(l) - 1] = word[l - 1];
  return {std::move(out), koszul_sign(sigma, degs)};
}

/// The (ceil(k/2), floor(k/2))-shuffle sending the first deck to odd and the
/// second deck to even positions: l -> 2l-1 for l <= ceil(k/2), else
/// 2(l - ceil(k/2)).
inline Permutation deck_shuffle(int k) {
  if (k < 0) throw std::invalid_argument("deck_shuffle: negative size");
  const int half = (k + 1) / 2;
  std::vector<int> v(k);
  for (int l = 1; l <= k; ++l) v[l - 1] = l <= half ? 2 * l - 1 : 2 * (l - half);
  return Permutation(std::move(v));
}

/// True when sigma is ascending on each consecutive block of the given sizes.
inline bool is_shuffle(const Permutation& sigma, std::span<const int> parts) {
  int start = 1;
  int total = 0;
  for (int k : parts) total += k;
  if (total != sigma.size()) return false;
  for (int k : parts) {
    for (int l = start; l + 1 < start + k; ++l)
      if (sigma(l) > sigma(l + 1)) return false;
    start += k;
  }
  return true;
}

}  // namespace einfty
