#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmcg/exact_linalg.hpp"
#include "pmcg/word.hpp"

namespace pmcg {

/// A braid word on m strands: letters +i / -i encode the Artin generators
/// sigma_i^{+-1}, 1 <= i <= m-1, read left to right as a temporal sequence.
struct BraidWord {
  int strands = 0;
  std::vector<Letter> letters;

  BraidWord() = default;
  BraidWord(int m, std::vector<Letter> ls) : strands(m), letters(std::move(ls)) {
    for (Letter l : letters) check(l, m);
  }

  static void check(Letter l, int m) {
    if (l == 0 || letter_index(l) > m - 1)
      throw std::invalid_argument("braid generator index out of range");
  }

  std::size_t size() const { return letters.size(); }

  BraidWord& append(const BraidWord& other) {
    require_same_rank(strands, other.strands);
    letters.insert(letters.end(), other.letters.begin(), other.letters.end());
    return *this;
  }

  BraidWord inverse() const {
    BraidWord r;
    r.strands = strands;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      r.letters.push_back(-*it);
    return r;
  }

  BraidWord power(int e) const {
    BraidWord base = e >= 0 ? *this : inverse();
    BraidWord r;
    r.strands = strands;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) r.append(base);
    return r;
  }
};

inline BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.append(b);
  return r;
}

namespace detail {

// In-place rewrite of every image word by the elementary automorphism of
// sigma_i (sign +1) or sigma_i^{-1} (sign -1):
//   sigma_i:      x_i -> x_i x_{i+1} x_i^{-1},   x_{i+1} -> x_i
//   sigma_i^{-1}: x_i -> x_{i+1},                x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
inline ReducedWord artin_rewrite(const ReducedWord& w, int i, int sign) {
  std::vector<Letter> out;
  out.reserve(w.size() + 8);
  const Letter a = Letter(i), b = Letter(i + 1);
  for (Letter l : w.letters()) {
    if (sign > 0) {
      if (l == a) {
        push_reduced(out, a); push_reduced(out, b); push_reduced(out, -a);
      } else if (l == -a) {
        push_reduced(out, a); push_reduced(out, -b); push_reduced(out, -a);
      } else if (l == b) {
        push_reduced(out, a);
      } else if (l == -b) {
        push_reduced(out, -a);
      } else {
        push_reduced(out, l);
      }
    } else {
      if (l == a) {
        push_reduced(out, b);
      } else if (l == -a) {
        push_reduced(out, -b);
      } else if (l == b) {
        push_reduced(out, -b); push_reduced(out, a); push_reduced(out, b);
      } else if (l == -b) {
        push_reduced(out, -b); push_reduced(out, -a); push_reduced(out, b);
      } else {
        push_reduced(out, l);
      }
    }
  }
  return ReducedWord::reduce(w.rank(), out);
}

}  // namespace detail

/// The (faithful) Artin action of a braid word on the rank-m free group.
/// Temporal convention: in the word uv the braid u acts first, so
/// artin_action(uv) = compose(artin_action(v), artin_action(u)).
inline Automorphism artin_action(const BraidWord& b) {
  const int m = b.strands;
  std::vector<ReducedWord> fwd, inv;
  fwd.reserve(std::size_t(m));
  inv.reserve(std::size_t(m));
  for (int i = 1; i <= m; ++i) {
    fwd.push_back(ReducedWord::generator(m, i));
    inv.push_back(ReducedWord::generator(m, i));
  }
  for (Letter l : b.letters)
    for (auto& w : fwd) w = detail::artin_rewrite(w, letter_index(l), letter_sign(l));
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    for (auto& w : inv) w = detail::artin_rewrite(w, letter_index(*it), -letter_sign(*it));
  return Automorphism::from_images_unchecked(std::move(fwd), std::move(inv));
}

/// Right-handed Dehn twist about a round curve enclosing punctures j..k:
/// with delta = x_j x_{j+1} ... x_k, maps x_i -> delta x_i delta^{-1} for
/// j <= i <= k and fixes the other generators. Equals the full twist
/// artin_action((sigma_j ... sigma_{k-1})^{k-j+1}) for k > j.
inline Automorphism interval_twist(int j, int k, int m) {
  if (!(1 <= j && j <= k && k <= m))
    throw std::invalid_argument("interval_twist range violation: [" +
                                std::to_string(j) + "," + std::to_string(k) +
                                "] in rank " + std::to_string(m));
  std::vector<Letter> delta_letters;
  for (int i = j; i <= k; ++i) delta_letters.push_back(Letter(i));
  ReducedWord delta = ReducedWord::reduce(m, delta_letters);
  ReducedWord delta_inv = invert(delta);
  std::vector<ReducedWord> fwd, inv;
  for (int i = 1; i <= m; ++i) {
    ReducedWord xi = ReducedWord::generator(m, i);
    if (j <= i && i <= k) {
      fwd.push_back(conjugate(xi, delta));
      inv.push_back(conjugate(xi, delta_inv));
    } else {
      fwd.push_back(xi);
      inv.push_back(xi);
    }
  }
  return Automorphism::from_images_unchecked(std::move(fwd), std::move(inv));
}

/// The positive braid word (sigma_j ... sigma_{k-1})^{k-j+1} whose Artin
/// action is interval_twist(j, k, m). For k == j the word is empty.
inline BraidWord interval_twist_braid(int j, int k, int m) {
  if (!(1 <= j && j <= k && k <= m))
    throw std::invalid_argument("interval_twist_braid range violation");
  BraidWord b;
  b.strands = m;
  for (int rep = 0; rep < k - j + 1; ++rep)
    for (int i = j; i < k; ++i) b.letters.push_back(Letter(i));
  return b;
}

/// Exact equality via the faithful Artin action.
inline bool braid_equal(const BraidWord& a, const BraidWord& b) {
  require_same_rank(a.strands, b.strands);
  return artin_action(a) == artin_action(b);
}

/// Reduced Burau matrix evaluated at t = -1: each generator acts as an
/// integral transvection on Z^{m-1}. Multiplicative with the same temporal
/// convention as artin_action.
inline IntMatrix burau_at_minus_one(const BraidWord& b) {
  const std::size_t n = b.strands > 0 ? std::size_t(b.strands - 1) : 0;
  IntMatrix acc = IntMatrix::identity(n);
  for (Letter l : b.letters) {
    const std::size_t i = std::size_t(letter_index(l));  // 1-based generator
    IntMatrix g = IntMatrix::identity(n);
    // column i-1 (0-based) picks up the transvection offsets
    if (i >= 2) g(i - 2, i - 1) = letter_sign(l) > 0 ? -1 : 1;
    if (i < n) g(i, i - 1) = letter_sign(l) > 0 ? 1 : -1;
    acc = g * acc;
  }
  return acc;
}

/// Exponent sum: additive under concatenation.
inline std::int64_t exponent_sum(const BraidWord& b) {
  std::int64_t s = 0;
  for (Letter l : b.letters) s += letter_sign(l);
  return s;
}

/// Strand permutation (image of each strand, 1-based), multiplicative with
/// the temporal convention. Pure braids map to the identity permutation.
inline std::vector<int> permutation(const BraidWord& b) {
  std::vector<int> p(std::size_t(b.strands));
  std::iota(p.begin(), p.end(), 1);
  for (Letter l : b.letters) {
    const std::size_t i = std::size_t(letter_index(l) - 1);
    std::swap(p[i], p[i + 1]);
  }
  return p;
}

}  // namespace pmcg
