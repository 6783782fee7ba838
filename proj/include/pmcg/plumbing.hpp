#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmcg/exact_linalg.hpp"
#include "pmcg/families.hpp"
#include "pmcg/surface.hpp"

namespace pmcg {

/// A connected plumbing graph with integer vertex weights.
struct PlumbingGraph {
  std::vector<long long> weights;
  std::vector<std::pair<int, int>> edges;  // 0-based vertex pairs
  std::string family;
  std::vector<long long> params;

  std::size_t vertex_count() const { return weights.size(); }
};

inline IntMatrix intersection_matrix(const PlumbingGraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = g.weights[i];
  for (auto [a, b] : g.edges) {
    m(std::size_t(a), std::size_t(b)) = 1;
    m(std::size_t(b), std::size_t(a)) = 1;
  }
  return m;
}

inline bool is_negative_definite(const PlumbingGraph& g) {
  return is_negative_definite(intersection_matrix(g));
}

inline BigInt graph_det(const PlumbingGraph& g) {
  return determinant(intersection_matrix(g));
}

/// Linear plumbing C_{p,q}: a path weighted by the negated continued
/// fraction coefficients of p^2/(pq-1).
inline PlumbingGraph linear_chain(long long p, long long q) {
  CFExpansion e = cf_expand(p, q);
  PlumbingGraph g;
  g.family = "linear";
  g.params = {p, q};
  for (std::size_t i = 0; i < e.coefficients.size(); ++i) {
    g.weights.push_back(-e.coefficients[i]);
    if (i) g.edges.push_back({int(i - 1), int(i)});
  }
  return g;
}

/// Gamma_{p,q,r}: central -4 vertex with three legs of -2 chains ending in
/// -(p+3), -(q+3) and -(r+3).
inline PlumbingGraph gamma_w(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("gamma_w needs p,q,r >= 0");
  PlumbingGraph g;
  g.family = "wfam";
  g.params = {p, q, r};
  g.weights.push_back(-4);  // vertex 0: center
  auto add_leg = [&](int twos, long long end_weight) {
    int prev = 0;
    for (int i = 0; i < twos; ++i) {
      g.weights.push_back(-2);
      g.edges.push_back({prev, int(g.weights.size() - 1)});
      prev = int(g.weights.size() - 1);
    }
    g.weights.push_back(end_weight);
    g.edges.push_back({prev, int(g.weights.size() - 1)});
  };
  add_leg(q, -(p + 3));
  add_leg(r, -(q + 3));
  add_leg(p, -(r + 3));
  if (g.vertex_count() != std::size_t(p + q + r + 4))
    throw std::logic_error("gamma_w vertex count self-check failed");
  if (!is_negative_definite(g))
    throw std::logic_error("gamma_w definiteness self-check failed");
  return g;
}

/// Delta_{p,q,r}: for p >= 1 a chain
///   -(r+3), (p-1) x -2, -3, q x -2, -3, r x -2, -(q+4)
/// with a -(p+2) vertex attached below the second -3; for p = 0 a chain
///   -(r+4), q x -2, -3, r x -2, -(q+4)
/// with an (unlabeled) -2 vertex attached below the -3. Vertex count and
/// negative definiteness are re-checked on construction.
inline PlumbingGraph delta_n(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("delta_n needs p,q,r >= 0");
  PlumbingGraph g;
  g.family = "nfam";
  g.params = {p, q, r};
  int prev = -1;
  auto chain_vertex = [&](long long w) {
    g.weights.push_back(w);
    int idx = int(g.weights.size() - 1);
    if (prev >= 0) g.edges.push_back({prev, idx});
    prev = idx;
    return idx;
  };
  int branch_at = -1;
  if (p >= 1) {
    chain_vertex(-(r + 3));
    for (int i = 0; i < p - 1; ++i) chain_vertex(-2);
    chain_vertex(-3);
    for (int i = 0; i < q; ++i) chain_vertex(-2);
    branch_at = chain_vertex(-3);
    for (int i = 0; i < r; ++i) chain_vertex(-2);
    chain_vertex(-(q + 4));
    g.weights.push_back(-(p + 2));
  } else {
    chain_vertex(-(r + 4));
    for (int i = 0; i < q; ++i) chain_vertex(-2);
    branch_at = chain_vertex(-3);
    for (int i = 0; i < r; ++i) chain_vertex(-2);
    chain_vertex(-(q + 4));
    g.weights.push_back(-2);
  }
  g.edges.push_back({branch_at, int(g.weights.size() - 1)});
  if (g.vertex_count() != std::size_t(p + q + r + 4))
    throw std::logic_error("delta_n vertex count self-check failed");
  if (!is_negative_definite(g))
    throw std::logic_error("delta_n definiteness self-check failed");
  return g;
}

inline std::string to_dot(const PlumbingGraph& g) {
  std::ostringstream os;
  os << "graph plumbing {\n";
  os << "  // family " << g.family << "\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    os << "  v" << i << " [label=\"" << g.weights[i] << "\"];\n";
  for (auto [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Homology of Lefschetz fibrations over the disk

/// Rows of the vanishing-cycle incidence matrix: one row per twist (powers
/// expanded), entries the H_1 classes of the curves.
inline IntMatrix incidence_matrix(const MonodromyWord& w) {
  IntMatrix m(w.twist_count(), std::size_t(w.surface.holes));
  std::size_t row = 0;
  for (const auto& l : w.letters) {
    auto cls = homology_class(l.curve, w.surface);
    const int reps = l.power < 0 ? -l.power : l.power;
    for (int i = 0; i < reps; ++i, ++row)
      for (std::size_t j = 0; j < cls.size(); ++j) m(row, j) = cls[j];
  }
  return m;
}

struct FibrationHomology {
  std::size_t b1 = 0;  // over Q
  std::size_t b2 = 0;  // over Q
  std::optional<BigInt> torsion_det_abs;  // |det| when the matrix is square
};

/// Rational homology of the Lefschetz fibration over D^2 with planar fiber
/// and the given monodromy word: b1 = n - rank, b2 = rows - rank, and the
/// order |det| of H_1 when the incidence matrix is square and nonsingular.
inline FibrationHomology fibration_homology(const MonodromyWord& w) {
  IntMatrix m = incidence_matrix(w);
  const std::size_t rk = rank(m);
  FibrationHomology out;
  out.b1 = std::size_t(w.surface.holes) - rk;
  out.b2 = m.rows() - rk;
  if (m.rows() == m.cols()) {
    BigInt d = determinant(m);
    if (d != 0) out.torsion_det_abs = abs(d);
  }
  return out;
}

struct KernelGram {
  std::vector<std::vector<BigInt>> basis;  // rows in cycle coordinates
  IntMatrix gram;
};

/// Kernel lattice of the incidence matrix with the pairing
/// Gram(u, v) = -(u . v): every 2-handle carries framing -1 and pairwise
/// disjoint page curves have zero mutual linking in the standard diagram.
/// Requires the word's curves to be pairwise disjoint.
inline KernelGram kernel_gram(const MonodromyWord& w) {
  std::vector<CurveSpec> curves;
  for (const auto& l : w.letters) curves.push_back(l.curve);
  if (pairwise_disjoint(curves, w.surface) != TriState::yes)
    throw std::invalid_argument("kernel_gram requires pairwise disjoint curves");
  IntMatrix m = incidence_matrix(w);
  KernelGram out;
  out.basis = left_kernel_basis(m);
  const std::size_t k = out.basis.size();
  out.gram = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      BigInt dot = 0;
      for (std::size_t t = 0; t < m.rows(); ++t) dot += out.basis[i][t] * out.basis[j][t];
      out.gram(i, j) = -dot;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Matching the kernel lattice against a plumbing graph

enum class MatchVerdict { exact_basis, invariants_only, mismatch };

struct MatchReport {
  MatchVerdict verdict = MatchVerdict::mismatch;
  bool rank_matches = false;
  bool det_matches = false;
  bool definiteness_matches = false;
  std::vector<std::vector<BigInt>> exhibited_basis;  // rows, when exact
};

namespace detail {

// Backtracking search for kernel vectors realizing the target Gram matrix,
// with coefficients bounded by `radius` in the given basis and a node
// budget. Returns the realizing rows on success.
inline bool gram_basis_search(const IntMatrix& gram, const IntMatrix& target,
                              int radius, long long budget,
                              std::vector<std::vector<long long>>& out_coeffs) {
  const std::size_t k = gram.rows();
  if (target.rows() != k) return false;
  // enumerate candidate coefficient vectors with the right self-pairing
  std::vector<std::vector<long long>> pool;
  std::vector<BigInt> selfs;
  std::vector<long long> cur(k, -radius);
  while (true) {
    BigInt s = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        s += BigInt(cur[i]) * cur[j] * gram(i, j);
    bool nonzero = false;
    for (long long c : cur) nonzero |= (c != 0);
    if (nonzero) {
      pool.push_back(cur);
      selfs.push_back(s);
    }
    std::size_t pos = 0;
    while (pos < k && cur[pos] == radius) {
      cur[pos] = -radius;
      ++pos;
    }
    if (pos == k) break;
    ++cur[pos];
    if (pool.size() > 300000) return false;  // out of budget
  }
  auto pair_of = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        s += BigInt(a[i]) * b[j] * gram(i, j);
    return s;
  };
  std::vector<std::size_t> chosen;
  long long nodes = 0;
  std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
    if (v == k) {
      IntMatrix t(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) t(i, j) = pool[chosen[i]][j];
      BigInt d = determinant(t);
      return d == 1 || d == -1;  // basis of the kernel lattice
    }
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (++nodes > budget) return false;
      if (selfs[c] != target(v, v)) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u)
        ok = pair_of(pool[chosen[u]], pool[c]) == target(u, v);
      if (!ok) continue;
      chosen.push_back(c);
      if (rec(v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(0)) return false;
  out_coeffs.clear();
  for (std::size_t i = 0; i < k; ++i) out_coeffs.push_back(pool[chosen[i]]);
  return true;
}

// Canonical chain basis for a daisy-shaped word: one boundary letter with
// power e >= 1 repeated, the other letters single. Rows are indexed with the
// repeated letter's copies first.
inline std::optional<std::vector<std::vector<BigInt>>> daisy_chain_basis(
    const MonodromyWord& w, const IntMatrix& incidence) {
  // locate a letter with power >= 2 whose curve is a single hole
  std::size_t rep_pos = SIZE_MAX;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (w.letters[i].power >= 2 &&
        enclosed_holes(w.letters[i].curve, w.surface).size() == 1) {
      if (rep_pos != SIZE_MAX) return std::nullopt;  // more than one repeated letter
      rep_pos = i;
    } else if (w.letters[i].power != 1) {
      return std::nullopt;
    }
  }
  if (rep_pos == SIZE_MAX) return std::nullopt;
  const int e = w.letters[rep_pos].power;
  // row index of the first copy
  std::size_t base_row = 0;
  for (std::size_t i = 0; i < rep_pos; ++i) base_row += std::size_t(w.letters[i].power);
  const std::size_t rows = incidence.rows();
  std::vector<std::vector<BigInt>> basis;
  // closing vector: one copy of the repeated letter plus every other letter,
  // minus the outer letter, must lie in the kernel
  std::vector<BigInt> closing(rows, BigInt(0));
  closing[base_row + std::size_t(e) - 1] = 1;
  std::size_t row = 0;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    for (int cpy = 0; cpy < w.letters[i].power; ++cpy, ++row) {
      if (i == rep_pos) continue;
      if (std::holds_alternative<OuterCurve>(w.letters[i].curve))
        closing[row] = -1;
      else
        closing[row] = 1;
    }
  }
  basis.push_back(closing);
  for (int i = e - 1; i >= 1; --i) {
    std::vector<BigInt> diff(rows, BigInt(0));
    diff[base_row + std::size_t(i) - 1] = 1;
    diff[base_row + std::size_t(i)] = -1;
    basis.push_back(diff);
  }
  // verify kernel membership
  for (const auto& v : basis)
    for (std::size_t j = 0; j < incidence.cols(); ++j) {
      BigInt s = 0;
      for (std::size_t t = 0; t < rows; ++t) s += v[t] * incidence(t, j);
      if (s != 0) return std::nullopt;
    }
  return basis;
}

}  // namespace detail

/// Decide whether the kernel lattice of the word realizes the intersection
/// form of the plumbing graph: exact_basis when a basis change exhibits the
/// graph's Gram matrix (canonical chain basis for linear families, plus a
/// bounded unimodular search), invariants_only when rank, |det| and
/// definiteness all agree, mismatch otherwise.
inline MatchReport matches_plumbing(const MonodromyWord& w, const PlumbingGraph& g) {
  MatchReport rep;
  KernelGram kg = kernel_gram(w);
  IntMatrix target = intersection_matrix(g);
  rep.rank_matches = kg.basis.size() == g.vertex_count();
  if (!rep.rank_matches) return rep;
  rep.det_matches = abs(determinant(kg.gram)) == abs(determinant(target));
  rep.definiteness_matches =
      is_negative_definite(kg.gram) == is_negative_definite(target);

  const std::size_t k = kg.basis.size();
  IntMatrix incidence = incidence_matrix(w);

  // canonical chain basis (daisy / C_{p,1}-shaped words)
  if (auto chain = detail::daisy_chain_basis(w, incidence)) {
    if (chain->size() == k) {
      IntMatrix gram(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          BigInt dot = 0;
          for (std::size_t t = 0; t < incidence.rows(); ++t)
            dot += (*chain)[i][t] * (*chain)[j][t];
          gram(i, j) = -dot;
        }
      if (gram == target) {
        rep.verdict = MatchVerdict::exact_basis;
        rep.exhibited_basis = *chain;
        return rep;
      }
    }
  }

  if (rep.det_matches && rep.definiteness_matches) {
    for (int radius : {1, 2}) {
      std::vector<std::vector<long long>> coeffs;
      if (detail::gram_basis_search(kg.gram, target, radius, 2'000'000, coeffs)) {
        rep.verdict = MatchVerdict::exact_basis;
        for (const auto& c : coeffs) {
          std::vector<BigInt> row(incidence.rows(), BigInt(0));
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t t = 0; t < incidence.rows(); ++t)
              row[t] += BigInt(c[i]) * kg.basis[i][t];
          rep.exhibited_basis.push_back(std::move(row));
        }
        return rep;
      }
      if (k > 8) break;  // radius-2 pool too large
    }
    rep.verdict = MatchVerdict::invariants_only;
    return rep;
  }
  rep.verdict = MatchVerdict::mismatch;
  return rep;
}

// ---------------------------------------------------------------------------
// Rational blowdown arithmetic

/// (chi, sigma) |-> (chi - |V|, sigma + |V|): the negative-definite piece of
/// signature -|V| is replaced by a rational ball.
inline std::pair<long long, long long> blowdown_invariants(long long chi,
                                                           long long sigma,
                                                           const PlumbingGraph& g) {
  if (!is_negative_definite(g))
    throw std::invalid_argument("blowdown requires a negative definite plumbing");
  const long long v = (long long)g.vertex_count();
  return {chi - v, sigma + v};
}

struct HomeoType {
  long long b2plus = 0, b2minus = 0;
  std::string display;
  // the classification statement assumes a simply connected manifold with
  // odd intersection form; that hypothesis is not re-proved here
  bool assumes_simply_connected_odd = true;
};

inline HomeoType homeo_type(long long chi, long long sigma);

/// Invariants of a closed Lefschetz fibration over the sphere with fiber
/// genus g and a monodromy word of the given length: chi = 2(2-2g) + n,
/// and b2+- = (chi - 2 +- sigma)/2 when b1 = 0.
struct FibrationInvariants {
  int fiber_genus = 0;
  std::size_t word_length = 0;
  long long chi = 0, sigma = 0;
  long long b2plus = 0, b2minus = 0;
};

inline FibrationInvariants fibration_invariants(int fiber_genus,
                                                std::size_t word_length,
                                                long long sigma) {
  FibrationInvariants f;
  f.fiber_genus = fiber_genus;
  f.word_length = word_length;
  f.chi = 2LL * (2 - 2 * fiber_genus) + (long long)word_length;
  f.sigma = sigma;
  HomeoType h = homeo_type(f.chi, f.sigma);
  f.b2plus = h.b2plus;
  f.b2minus = h.b2minus;
  return f;
}

inline HomeoType homeo_type(long long chi, long long sigma) {
  const long long plus2 = chi - 2 + sigma, minus2 = chi - 2 - sigma;
  if (plus2 % 2 != 0 || minus2 % 2 != 0)
    throw std::invalid_argument("homeo_type: chi - 2 +- sigma must be even");
  if (plus2 < 0 || minus2 < 0)
    throw std::invalid_argument("homeo_type: b2+ and b2- must be nonnegative");
  HomeoType h;
  h.b2plus = plus2 / 2;
  h.b2minus = minus2 / 2;
  h.display = "#" + std::to_string(h.b2plus) + " CP2 # " + std::to_string(h.b2minus) +
              " CP2bar";
  return h;
}

// ---------------------------------------------------------------------------
// Theta-chain descriptor of the rational ball B_{p,q}

struct ThetaChainDescriptor {
  long long p = 0, q = 0;
  bool degenerate = false;  // q == 1: classical one-handle picture
  std::vector<long long> c_sequence;
  std::vector<std::pair<long long, long long>> links;  // (twist count, framing)
};

/// Twist-count/framing data of the rational-ball diagram chain, from the
/// c-sequence: end links -(c_1-4) / -(c_1-3) and -(c_l-1) / -(c_l-1), middle
/// links -(c_j-2) twice; a single link gets -(c-2) twists and framing
/// -(c-3). For q = 1 the diagram degenerates and only the c-sequence is
/// reported.
inline ThetaChainDescriptor theta_chain(long long p, long long q) {
  CFExpansion e = cf_expand(p, q);
  ThetaChainDescriptor t;
  t.p = p;
  t.q = q;
  t.c_sequence = e.c_sequence;
  if (q == 1) {
    t.degenerate = true;
    return t;
  }
  const std::size_t l = t.c_sequence.size();
  if (l == 1) {
    const long long c = t.c_sequence[0];
    t.links.push_back({-(c - 2), -(c - 3)});
    return t;
  }
  t.links.push_back({-(t.c_sequence[0] - 4), -(t.c_sequence[0] - 3)});
  for (std::size_t j = 1; j + 1 < l; ++j)
    t.links.push_back({-(t.c_sequence[j] - 2), -(t.c_sequence[j] - 2)});
  t.links.push_back({-(t.c_sequence[l - 1] - 1), -(t.c_sequence[l - 1] - 1)});
  return t;
}

}  // namespace pmcg
