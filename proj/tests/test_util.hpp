#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "pmcg/surface.hpp"

namespace pmcg_test {

using namespace pmcg;

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline ReducedWord random_word(int rank, int len) {
  std::uniform_int_distribution<int> gen_idx(1, rank);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  for (int i = 0; i < len; ++i) {
    int g = gen_idx(rng());
    letters.push_back(coin(rng()) ? Letter(g) : Letter(-g));
  }
  return ReducedWord::reduce(rank, letters);
}

inline BraidWord random_braid(int strands, int len, bool positive = false) {
  std::uniform_int_distribution<int> gen_idx(1, strands - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  BraidWord b;
  b.strands = strands;
  for (int i = 0; i < len; ++i) {
    int g = gen_idx(rng());
    b.letters.push_back(positive || coin(rng()) ? Letter(g) : Letter(-g));
  }
  return b;
}

// Twist fingerprint under a hole relabeling: one (sorted relabeled enclosed
// set, sign) entry per power unit, so different power groupings of the same
// twists compare equal.
inline std::multiset<std::pair<std::vector<int>, int>> side_fingerprint(
    const MonodromyWord& w, const std::vector<int>& perm) {
  std::multiset<std::pair<std::vector<int>, int>> out;
  for (const auto& l : w.letters) {
    std::vector<int> set;
    for (int h : enclosed_holes(l.curve, w.surface))
      set.push_back(perm[std::size_t(h - 1)]);
    std::sort(set.begin(), set.end());
    const int reps = l.power < 0 ? -l.power : l.power;
    for (int i = 0; i < reps; ++i) out.insert({set, l.power < 0 ? -1 : 1});
  }
  return out;
}

// Relabeling isomorphism: some hole permutation matches the lhs letter
// multisets and the rhs homology-class multisets of the two relations.
inline bool relations_isomorphic(const Relation& a, const Relation& b) {
  if (a.surface.holes != b.surface.holes) return false;
  if (a.certificate != CertStatus::verified || b.certificate != CertStatus::verified)
    return false;
  const int n = a.surface.holes;
  std::vector<int> perm(static_cast<std::size_t>(n), 0);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> id = perm;
  auto lhs_b = side_fingerprint(b.lhs, id);
  auto rhs_b = side_fingerprint(b.rhs, id);
  do {
    if (side_fingerprint(a.lhs, perm) == lhs_b && side_fingerprint(a.rhs, perm) == rhs_b)
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace pmcg_test
