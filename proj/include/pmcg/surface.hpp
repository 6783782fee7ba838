#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pmcg/braid.hpp"
#include "pmcg/word.hpp"

namespace pmcg {

/// A disk with n inner holes in a fixed circular order, labeled 1..n. The
/// outer boundary is implicit.
struct HoledDisk {
  int holes = 0;
  std::vector<std::string> labels;  // optional; size holes when present

  HoledDisk() = default;
  explicit HoledDisk(int n, std::vector<std::string> ls = {})
      : holes(n), labels(std::move(ls)) {
    if (n < 1) throw std::invalid_argument("holed disk needs at least one hole");
    if (!labels.empty() && int(labels.size()) != n)
      throw std::invalid_argument("label count does not match hole count");
  }

  std::string label(int hole) const {
    if (!labels.empty()) return labels.at(std::size_t(hole - 1));
    return std::to_string(hole);
  }
};

/// Which side of the skipped holes a non-convex hull curve passes.
enum class Routing { front, back };

struct BoundaryCurve {
  int hole = 0;
};
struct OuterCurve {};
struct HullCurve {
  std::vector<int> holes;  // sorted, the side NOT containing the outer boundary
  Routing routing = Routing::front;
};

using PlainCurve = std::variant<BoundaryCurve, OuterCurve, HullCurve>;

struct TwistLetter;

/// A curve carried by a mapping class: the conjugator word acts on the base
/// curve. The base is itself never conjugated (flattened).
struct ConjugatedCurve {
  std::vector<TwistLetter> conjugator;
  PlainCurve base;
};

using CurveSpec = std::variant<BoundaryCurve, OuterCurve, HullCurve, ConjugatedCurve>;

/// One twist letter of a monodromy word: a curve and a nonzero power.
/// Right-handed twists are positive.
struct TwistLetter {
  CurveSpec curve;
  int power = 1;
};

/// An ordered product of Dehn twists on a holed disk; in the product xy the
/// twist around x precedes the twist around y.
struct MonodromyWord {
  HoledDisk surface;
  std::vector<TwistLetter> letters;

  std::size_t twist_count() const {
    std::size_t c = 0;
    for (const auto& l : letters) c += std::size_t(l.power < 0 ? -l.power : l.power);
    return c;
  }
};

enum class CertStatus { unverified, verified, refuted };

struct RefutationDiagnostic {
  int first_differing_generator = 0;  // doubled-disk generator index
  std::string lhs_image, rhs_image;
  bool homology_screen_passed = true;
};

/// A two-sided relation candidate w_lhs = w_rhs with its certificate.
struct Relation {
  HoledDisk surface;
  MonodromyWord lhs, rhs;
  CertStatus certificate = CertStatus::unverified;
  std::optional<RefutationDiagnostic> diagnostic;
};

// ---------------------------------------------------------------------------
// Curve helpers

inline CurveSpec boundary(int hole) { return BoundaryCurve{hole}; }
inline CurveSpec outer() { return OuterCurve{}; }

/// Canonical hull constructor: sorts, deduplicates, collapses singletons to
/// boundary curves.
inline CurveSpec hull(std::vector<int> holes, Routing routing = Routing::front) {
  std::sort(holes.begin(), holes.end());
  holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
  if (holes.empty()) throw std::invalid_argument("hull of empty hole set");
  if (holes.size() == 1) return BoundaryCurve{holes[0]};
  return HullCurve{std::move(holes), routing};
}

inline CurveSpec conjugated(std::vector<TwistLetter> conjugator, PlainCurve base) {
  if (conjugator.empty()) return std::visit([](auto&& b) { return CurveSpec(b); }, base);
  return ConjugatedCurve{std::move(conjugator), std::move(base)};
}

inline void validate_curve(const CurveSpec& c, const HoledDisk& s);

inline void validate_plain(const PlainCurve& c, const HoledDisk& s) {
  if (const auto* b = std::get_if<BoundaryCurve>(&c)) {
    if (b->hole < 1 || b->hole > s.holes)
      throw std::invalid_argument("boundary curve hole out of range");
  } else if (const auto* h = std::get_if<HullCurve>(&c)) {
    if (h->holes.empty()) throw std::invalid_argument("hull of empty hole set");
    if (int(h->holes.size()) >= s.holes)
      throw std::invalid_argument("hull must be a proper subset of the holes");
    if (!std::is_sorted(h->holes.begin(), h->holes.end()))
      throw std::invalid_argument("hull holes must be sorted");
    for (int x : h->holes)
      if (x < 1 || x > s.holes) throw std::invalid_argument("hull hole out of range");
    if (std::adjacent_find(h->holes.begin(), h->holes.end()) != h->holes.end())
      throw std::invalid_argument("hull holes must be distinct");
  }
}

inline void validate_curve(const CurveSpec& c, const HoledDisk& s) {
  if (const auto* cc = std::get_if<ConjugatedCurve>(&c)) {
    validate_plain(cc->base, s);
    for (const auto& l : cc->conjugator) {
      if (l.power == 0) throw std::invalid_argument("twist letter power must be nonzero");
      validate_curve(l.curve, s);
    }
  } else if (const auto* b = std::get_if<BoundaryCurve>(&c)) {
    validate_plain(PlainCurve(*b), s);
  } else if (const auto* h = std::get_if<HullCurve>(&c)) {
    validate_plain(PlainCurve(*h), s);
  }
}

inline std::string curve_key(const CurveSpec& c);

inline std::string curve_key_plain(const PlainCurve& c) {
  if (const auto* b = std::get_if<BoundaryCurve>(&c)) return "B" + std::to_string(b->hole);
  if (std::holds_alternative<OuterCurve>(c)) return "O";
  const auto& h = std::get<HullCurve>(c);
  std::string s = "H{";
  for (std::size_t i = 0; i < h.holes.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(h.holes[i]);
  }
  s += '}';
  s += (h.routing == Routing::front ? 'f' : 'b');
  return s;
}

inline std::string curve_key(const CurveSpec& c) {
  if (const auto* cc = std::get_if<ConjugatedCurve>(&c)) {
    std::string s = "C[";
    for (const auto& l : cc->conjugator)
      s += curve_key(l.curve) + "^" + std::to_string(l.power) + ";";
    s += "]";
    return s + curve_key_plain(cc->base);
  }
  if (const auto* b = std::get_if<BoundaryCurve>(&c)) return curve_key_plain(PlainCurve(*b));
  if (std::holds_alternative<OuterCurve>(c)) return "O";
  return curve_key_plain(PlainCurve(std::get<HullCurve>(c)));
}

inline bool curve_same(const CurveSpec& a, const CurveSpec& b) {
  return curve_key(a) == curve_key(b);
}

/// Set of holes a curve encloses (the side away from the outer boundary).
inline std::vector<int> enclosed_holes(const CurveSpec& c, const HoledDisk& s) {
  if (const auto* b = std::get_if<BoundaryCurve>(&c)) return {b->hole};
  if (std::holds_alternative<OuterCurve>(c)) {
    std::vector<int> all(std::size_t(s.holes));
    for (int i = 1; i <= s.holes; ++i) all[std::size_t(i - 1)] = i;
    return all;
  }
  if (const auto* h = std::get_if<HullCurve>(&c)) return h->holes;
  const auto& cc = std::get<ConjugatedCurve>(c);
  return enclosed_holes(std::visit([](auto&& b) { return CurveSpec(b); }, cc.base), s);
}

/// Class in H_1 of the holed disk (Z^n, basis the hole boundaries). Mapping
/// classes fixing the boundary act trivially on H_1, so conjugated curves
/// share the class of their base.
inline std::vector<std::int64_t> homology_class(const CurveSpec& c, const HoledDisk& s) {
  std::vector<std::int64_t> v(std::size_t(s.holes), 0);
  for (int h : enclosed_holes(c, s)) v[std::size_t(h - 1)] = 1;
  return v;
}

enum class TriState { yes, no, unknown };

namespace detail {

// Circular interleaving of two disjoint hole sets on the n-cycle: walk the
// circle; the pattern of memberships must have at most one A-block and one
// B-block.
inline bool circularly_interleaved(const std::vector<int>& a, const std::vector<int>& b,
                                   int n) {
  std::vector<int> mark(std::size_t(n + 1), 0);
  for (int x : a) mark[std::size_t(x)] = 1;
  for (int x : b) mark[std::size_t(x)] = 2;
  std::vector<int> seq;
  for (int i = 1; i <= n; ++i)
    if (mark[std::size_t(i)]) seq.push_back(mark[std::size_t(i)]);
  int transitions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] != seq[(i + 1) % seq.size()]) ++transitions;
  return transitions > 2;
}

}  // namespace detail

/// Disjointness test for collections of symbolic curves: enclosed sets must
/// be nested or disjoint, circular-interval interleaving is rejected, and
/// two non-convex hulls are only compared when their routings agree
/// (routing is meaningless for boundary, outer and contiguous hull curves).
/// Conjugated curves are compared only syntactically.
inline TriState pairwise_disjoint(const std::vector<CurveSpec>& curves,
                                  const HoledDisk& s) {
  auto contiguous = [](const std::vector<int>& set) {
    return set.back() - set.front() + 1 == int(set.size());
  };
  auto routed = [&](const CurveSpec& c, const std::vector<int>& set) {
    const auto* h = std::get_if<HullCurve>(&c);
    return h != nullptr && !contiguous(set);
  };
  auto routing_of = [](const CurveSpec& c) {
    if (const auto* h = std::get_if<HullCurve>(&c)) return h->routing;
    return Routing::front;
  };
  TriState result = TriState::yes;
  const std::size_t k = curves.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const CurveSpec&a = curves[i], &b = curves[j];
      if (curve_same(a, b)) continue;  // isotopic curves can be made disjoint
      const bool conj_a = std::holds_alternative<ConjugatedCurve>(a);
      const bool conj_b = std::holds_alternative<ConjugatedCurve>(b);
      if (conj_a || conj_b) {
        result = TriState::unknown;
        continue;
      }
      std::vector<int> sa = enclosed_holes(a, s), sb = enclosed_holes(b, s);
      std::vector<int> inter;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::back_inserter(inter));
      const bool nested = inter.size() == sa.size() || inter.size() == sb.size();
      const bool disjoint_sets = inter.empty();
      if (!nested && !disjoint_sets) return TriState::no;
      if (disjoint_sets && detail::circularly_interleaved(sa, sb, s.holes))
        return TriState::no;
      const bool comparable =
          !routed(a, sa) || !routed(b, sb) || routing_of(a) == routing_of(b);
      if (!comparable) result = TriState::unknown;
    }
  return result;
}

// ---------------------------------------------------------------------------
// The doubled punctured-disk model. Hole i maps to the puncture pair
// {2i-1, 2i}; boundary twists about holes become nontrivial pair twists,
// which removes the kernel of the naive action and makes the representation
// faithful.

struct DoubledContext {
  int holes = 0;
  int punctures = 0;  // 2 * holes
};

inline DoubledContext double_surface(const HoledDisk& s) {
  return DoubledContext{s.holes, 2 * s.holes};
}

inline std::pair<int, int> puncture_pair(int hole) { return {2 * hole - 1, 2 * hole}; }
inline int hole_of_puncture(int puncture) { return (puncture + 1) / 2; }

/// Side the compiler slides skipped puncture pairs out of a hull block.
enum class SlideSide { right, left };
/// Whether the gathered block twist is conjugated by the gather braid or by
/// its inverse.
enum class ConjSense { forward, backward };

struct CompileConventions {
  SlideSide slide = SlideSide::right;
  ConjSense sense = ConjSense::forward;
};

/// Frozen global conventions for compiling hull curves; pinned by the
/// lantern and daisy verifications (and by pushforward consistency of the
/// lantern under hole splitting) and protected by regression tests.
inline const CompileConventions& frozen_conventions() {
  static const CompileConventions c{SlideSide::left, ConjSense::backward};
  return c;
}

namespace detail {

// Braid word passing the hole pair at (0-based) slot s over the pair at
// slot s+1; all four crossings carry the given sign.
inline void append_pair_pass(std::vector<Letter>& out, int slot, int sign) {
  const Letter a = Letter(2 * slot + 1);  // first puncture of the left pair
  for (Letter l : {Letter(a + 1), Letter(a + 2), a, Letter(a + 1)})
    out.push_back(sign > 0 ? l : -l);
}

struct GatherPlan {
  BraidWord braid;      // moves skipped pairs out of the hull interval
  int block_begin = 0;  // first puncture (1-based) of the packed block
  int block_end = 0;    // last puncture (1-based)
};

// Slide every skipped hole inside [min S, max S] out of the interval so the
// hull becomes a contiguous block of pairs; crossings take the routing sign.
inline GatherPlan plan_gather(const std::vector<int>& hull_holes, int n, int sign,
                              SlideSide side) {
  std::vector<int> slot_hole(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) slot_hole[std::size_t(i)] = i + 1;
  std::set<int> in_hull(hull_holes.begin(), hull_holes.end());
  const int lo = hull_holes.front(), hi = hull_holes.back();

  std::vector<int> skipped;
  for (int h = lo + 1; h < hi; ++h)
    if (!in_hull.count(h)) skipped.push_back(h);

  GatherPlan plan;
  plan.braid.strands = 2 * n;
  auto slot_of = [&](int hole) {
    return int(std::find(slot_hole.begin(), slot_hole.end(), hole) - slot_hole.begin());
  };

  if (side == SlideSide::right) {
    for (auto it = skipped.rbegin(); it != skipped.rend(); ++it) {
      int s = slot_of(*it);
      while (s + 1 < n && in_hull.count(slot_hole[std::size_t(s + 1)])) {
        append_pair_pass(plan.braid.letters, s, sign);
        std::swap(slot_hole[std::size_t(s)], slot_hole[std::size_t(s + 1)]);
        ++s;
      }
    }
  } else {
    for (int g : skipped) {
      int s = slot_of(g);
      while (s - 1 >= 0 && in_hull.count(slot_hole[std::size_t(s - 1)])) {
        append_pair_pass(plan.braid.letters, s - 1, sign);
        std::swap(slot_hole[std::size_t(s - 1)], slot_hole[std::size_t(s)]);
        --s;
      }
    }
  }

  int first_slot = n;
  for (int h : hull_holes) first_slot = std::min(first_slot, slot_of(h));
  plan.block_begin = 2 * first_slot + 1;
  plan.block_end = plan.block_begin + 2 * int(hull_holes.size()) - 1;
  return plan;
}

}  // namespace detail

/// Compiles symbolic curves on a holed disk into automorphisms of the
/// rank-2n free group of the doubled punctured disk, memoizing per curve.
/// Instances are independent; use one per computation.
class TwistCompiler {
public:
  explicit TwistCompiler(const HoledDisk& surface,
                         CompileConventions conv = frozen_conventions())
      : surface_(surface), ctx_(double_surface(surface)), conv_(conv) {}

  const HoledDisk& surface() const { return surface_; }
  int rank() const { return ctx_.punctures; }

  const Automorphism& twist(const CurveSpec& curve) {
    const std::string key = curve_key(curve);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    validate_curve(curve, surface_);
    Automorphism a = compile(curve);
    return cache_.emplace(key, std::move(a)).first->second;
  }

  /// Composite action of a monodromy word, honoring the temporal order
  /// (first letter acts first) and expanding powers.
  Automorphism word_action(const MonodromyWord& w) {
    require_same_rank(w.surface.holes, surface_.holes);
    Automorphism acc = Automorphism::identity(rank());
    for (const auto& letter : w.letters) {
      if (letter.power == 0) throw std::invalid_argument("zero twist power");
      const Automorphism& t = twist(letter.curve);
      const Automorphism step = letter.power > 0 ? t : t.inverse();
      const int reps = letter.power > 0 ? letter.power : -letter.power;
      for (int i = 0; i < reps; ++i) acc = compose(step, acc);
    }
    return acc;
  }

private:
  Automorphism compile(const CurveSpec& curve) {
    if (const auto* b = std::get_if<BoundaryCurve>(&curve)) {
      auto [p, q] = puncture_pair(b->hole);
      return interval_twist(p, q, rank());
    }
    if (std::holds_alternative<OuterCurve>(curve))
      return interval_twist(1, rank(), rank());
    if (const auto* h = std::get_if<HullCurve>(&curve)) return compile_hull(*h);
    const auto& cc = std::get<ConjugatedCurve>(curve);
    MonodromyWord conj{surface_, cc.conjugator};
    Automorphism ag = word_action(conj);
    CurveSpec base = std::visit([](auto&& b) { return CurveSpec(b); }, cc.base);
    const Automorphism& tb = twist(base);
    return compose(ag, compose(tb, ag.inverse()));
  }

  Automorphism compile_hull(const HullCurve& h) {
    const int n = surface_.holes;
    bool contiguous = h.holes.back() - h.holes.front() + 1 == int(h.holes.size());
    if (contiguous) {
      auto [p, _] = puncture_pair(h.holes.front());
      auto [__, q] = puncture_pair(h.holes.back());
      return interval_twist(p, q, rank());
    }
    const int sign = h.routing == Routing::front ? 1 : -1;
    auto plan = detail::plan_gather(h.holes, n, sign, conv_.slide);
    Automorphism block = interval_twist(plan.block_begin, plan.block_end, rank());
    Automorphism ac = artin_action(plan.braid);
    if (conv_.sense == ConjSense::forward)
      return compose(ac, compose(block, ac.inverse()));
    return compose(ac.inverse(), compose(block, ac));
  }

  HoledDisk surface_;
  DoubledContext ctx_;
  CompileConventions conv_;
  std::map<std::string, Automorphism> cache_;
};

inline Automorphism compile_twist(const CurveSpec& curve, const HoledDisk& s) {
  TwistCompiler c(s);
  return c.twist(curve);
}

inline Automorphism word_action(const MonodromyWord& w) {
  TwistCompiler c(w.surface);
  return c.word_action(w);
}

// ---------------------------------------------------------------------------
// Verification

inline std::vector<std::int64_t> word_homology_sum(const MonodromyWord& w) {
  std::vector<std::int64_t> sum(std::size_t(w.surface.holes), 0);
  for (const auto& l : w.letters) {
    auto c = homology_class(l.curve, w.surface);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += std::int64_t(l.power) * c[i];
  }
  return sum;
}

/// Oracle check: the relation is certified verified iff the doubled-disk
/// actions of the two sides agree exactly. Refutation is a value, not an
/// error; the diagnostic records the first differing generator image and
/// the homology screening result.
inline Relation verify_relation(Relation rel,
                                CompileConventions conv = frozen_conventions()) {
  require_same_rank(rel.lhs.surface.holes, rel.surface.holes);
  require_same_rank(rel.rhs.surface.holes, rel.surface.holes);
  const bool screen = word_homology_sum(rel.lhs) == word_homology_sum(rel.rhs);

  TwistCompiler compiler(rel.surface, conv);
  Automorphism la = compiler.word_action(rel.lhs);
  Automorphism ra = compiler.word_action(rel.rhs);
  if (la == ra) {
    rel.certificate = CertStatus::verified;
    rel.diagnostic.reset();
    return rel;
  }
  rel.certificate = CertStatus::refuted;
  RefutationDiagnostic d;
  d.homology_screen_passed = screen;
  for (int i = 1; i <= la.rank(); ++i) {
    if (la.image(i) != ra.image(i)) {
      d.first_differing_generator = i;
      d.lhs_image = la.image(i).str();
      d.rhs_image = ra.image(i).str();
      break;
    }
  }
  rel.diagnostic = std::move(d);
  return rel;
}

inline bool automorphisms_commute(const Automorphism& a, const Automorphism& b) {
  return compose(a, b) == compose(b, a);
}

// ---------------------------------------------------------------------------
// Key Lemma splitting

class split_error : public std::runtime_error {
public:
  explicit split_error(const std::string& what) : std::runtime_error(what) {}
};

/// Inputs for one application of the hole-splitting rewrite. Positions are
/// 0-based letter indices. The five output curves live on the enlarged
/// surface: lhs_replacement = (a, b, c) replaces one power of the letter at
/// z_pos; rhs_replacement = (x, y) replaces one power of the letter at
/// d_pos. The companion is the third pair-of-pants boundary used in the
/// commutation hypothesis (normally equal to lhs_replacement[0]).
struct SplitSpec {
  std::size_t z_pos = 0;
  std::size_t d_pos = 0;
  CurveSpec companion;
  std::vector<CurveSpec> lhs_replacement;  // exactly 3 curves
  std::vector<CurveSpec> rhs_replacement;  // exactly 2 curves
};

namespace detail {

inline int remap_hole(int hole, int split) { return hole <= split ? hole : hole + 1; }

inline CurveSpec remap_curve(const CurveSpec& c, int split);

inline PlainCurve remap_plain(const PlainCurve& c, int split) {
  if (const auto* b = std::get_if<BoundaryCurve>(&c)) {
    if (b->hole == split) return HullCurve{{split, split + 1}, Routing::front};
    return BoundaryCurve{remap_hole(b->hole, split)};
  }
  if (std::holds_alternative<OuterCurve>(c)) return OuterCurve{};
  const auto& h = std::get<HullCurve>(c);
  HullCurve out;
  out.routing = h.routing;
  for (int x : h.holes) {
    if (x == split) {
      out.holes.push_back(split);
      out.holes.push_back(split + 1);
    } else {
      out.holes.push_back(remap_hole(x, split));
    }
  }
  std::sort(out.holes.begin(), out.holes.end());
  return out;
}

inline CurveSpec remap_curve(const CurveSpec& c, int split) {
  if (const auto* cc = std::get_if<ConjugatedCurve>(&c)) {
    ConjugatedCurve out;
    out.base = remap_plain(cc->base, split);
    for (const auto& l : cc->conjugator)
      out.conjugator.push_back(TwistLetter{remap_curve(l.curve, split), l.power});
    return out;
  }
  if (const auto* b = std::get_if<BoundaryCurve>(&c))
    return std::visit([](auto&& v) { return CurveSpec(v); }, remap_plain(PlainCurve(*b), split));
  if (std::holds_alternative<OuterCurve>(c)) return OuterCurve{};
  return std::visit([](auto&& v) { return CurveSpec(v); },
                    remap_plain(PlainCurve(std::get<HullCurve>(c)), split));
}

inline std::vector<TwistLetter> remap_letters(const std::vector<TwistLetter>& ls,
                                              int split) {
  std::vector<TwistLetter> out;
  out.reserve(ls.size());
  for (const auto& l : ls) out.push_back(TwistLetter{remap_curve(l.curve, split), l.power});
  return out;
}

}  // namespace detail

/// Apply the hole-splitting rewrite to a verified relation: the hole h
/// enclosed by the letter at z_pos is replaced by two adjacent holes h,
/// h+1; one power of z becomes the three twists a.b.c and one power of the
/// letter at d_pos becomes x.y. The commutation hypothesis (the companion
/// twist commutes with both prefixes or with both suffixes) is checked
/// exactly, and the resulting relation is re-verified before being
/// returned.
inline Relation split_hole(const Relation& rel, const SplitSpec& spec) {
  if (rel.certificate != CertStatus::verified)
    throw split_error("split_hole requires a verified relation");
  if (spec.z_pos >= rel.lhs.letters.size() || spec.d_pos >= rel.rhs.letters.size())
    throw split_error("split position out of range");
  if (spec.lhs_replacement.size() != 3 || spec.rhs_replacement.size() != 2)
    throw split_error("split needs 3 lhs and 2 rhs replacement curves");

  const TwistLetter& z_letter = rel.lhs.letters[spec.z_pos];
  auto z_holes = enclosed_holes(z_letter.curve, rel.surface);
  if (z_holes.size() != 1 || z_letter.power < 1)
    throw split_error("z letter must be a positive twist about a single hole");
  const int h = z_holes[0];

  // The d curve may carry the split hole on either of its two sides (the
  // recorded side is the one away from the outer boundary).
  const TwistLetter& d_letter = rel.rhs.letters[spec.d_pos];
  if (d_letter.power < 1) throw split_error("d letter must be a positive twist");

  HoledDisk enlarged(rel.surface.holes + 1);
  if (!rel.surface.labels.empty()) {
    enlarged.labels.clear();
    for (int i = 1; i <= rel.surface.holes; ++i) {
      enlarged.labels.push_back(rel.surface.label(i));
      if (i == h) enlarged.labels.push_back(rel.surface.label(i) + "'");
    }
  }

  // Pattern checks: b and c must be the boundary twists of the two children.
  {
    auto b_holes = enclosed_holes(spec.lhs_replacement[1], enlarged);
    auto c_holes = enclosed_holes(spec.lhs_replacement[2], enlarged);
    if (b_holes != std::vector<int>{h} || c_holes != std::vector<int>{h + 1})
      throw split_error("lhs replacement must end with the two child boundary twists");
  }
  for (const auto& c : spec.lhs_replacement) validate_curve(c, enlarged);
  for (const auto& c : spec.rhs_replacement) validate_curve(c, enlarged);
  validate_curve(spec.companion, enlarged);

  auto build_side = [&](const MonodromyWord& side, std::size_t pos,
                        const std::vector<CurveSpec>& replacement,
                        std::vector<TwistLetter>& prefix_out,
                        std::vector<TwistLetter>& suffix_out) {
    std::vector<TwistLetter> prefix(side.letters.begin(),
                                    side.letters.begin() + long(pos));
    std::vector<TwistLetter> suffix(side.letters.begin() + long(pos) + 1,
                                    side.letters.end());
    prefix_out = detail::remap_letters(prefix, h);
    suffix_out = detail::remap_letters(suffix, h);
    const TwistLetter& target = side.letters[pos];
    if (target.power > 1) {
      // the remaining powers ride along as the pushed-forward curve
      TwistLetter rest{detail::remap_curve(target.curve, h), target.power - 1};
      suffix_out.insert(suffix_out.begin(), rest);
    }
    std::vector<TwistLetter> mid;
    for (const auto& c : replacement) mid.push_back(TwistLetter{c, 1});
    std::vector<TwistLetter> out = prefix_out;
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), suffix_out.begin(), suffix_out.end());
    return out;
  };

  std::vector<TwistLetter> w1, w2, w1p, w2p;
  MonodromyWord new_lhs{enlarged, build_side(rel.lhs, spec.z_pos, spec.lhs_replacement, w1, w2)};
  MonodromyWord new_rhs{enlarged, build_side(rel.rhs, spec.d_pos, spec.rhs_replacement, w1p, w2p)};

  TwistCompiler compiler(enlarged);
  Automorphism a_comp = compiler.twist(spec.companion);
  auto act = [&](const std::vector<TwistLetter>& ls) {
    return compiler.word_action(MonodromyWord{enlarged, ls});
  };
  const bool left_ok = automorphisms_commute(a_comp, act(w1)) &&
                       automorphisms_commute(a_comp, act(w1p));
  const bool right_ok = !left_ok && automorphisms_commute(a_comp, act(w2)) &&
                        automorphisms_commute(a_comp, act(w2p));
  if (!left_ok && !right_ok)
    throw split_error("commutation hypothesis fails for the given companion");

  Relation out;
  out.surface = enlarged;
  out.lhs = std::move(new_lhs);
  out.rhs = std::move(new_rhs);
  out = verify_relation(std::move(out));
  if (out.certificate != CertStatus::verified) {
    std::string msg = "split produced a refuted relation";
    if (out.diagnostic)
      msg += " (first differing generator " +
             std::to_string(out.diagnostic->first_differing_generator) + ")";
    throw split_error(msg);
  }
  return out;
}

}  // namespace pmcg
