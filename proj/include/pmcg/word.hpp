#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmcg {

// A letter of a free-group word: +i encodes the generator x_i, -i encodes
// x_i^{-1}. Generator indices are 1-based throughout.
using Letter = std::int32_t;

inline int letter_index(Letter l) { return l > 0 ? int(l) : int(-l); }
inline int letter_sign(Letter l) { return l > 0 ? 1 : -1; }

/// Thrown when a word would exceed the configured length cap.
class word_length_error : public std::runtime_error {
public:
  explicit word_length_error(std::size_t attempted)
      : std::runtime_error("word length cap exceeded (attempted " +
                           std::to_string(attempted) + " letters)") {}
};

/// Hard cap on the length of any single reduced word. Pathological blowup
/// becomes a reported error instead of memory exhaustion.
inline std::size_t& word_length_cap() {
  static std::size_t cap = 10'000'000;
  return cap;
}

namespace detail {
// Push a letter onto a reduction stack, cancelling against the top.
inline void push_reduced(std::vector<Letter>& buf, Letter l) {
  if (!buf.empty() && buf.back() == -l) {
    buf.pop_back();
    return;
  }
  buf.push_back(l);
  if (buf.size() > word_length_cap()) throw word_length_error(buf.size());
}
}  // namespace detail

/// A freely reduced word in the free group of a given rank. The empty word
/// is the identity. Immutable after construction.
class ReducedWord {
public:
  ReducedWord() : rank_(0) {}

  /// Freely reduce an arbitrary letter sequence. The result is independent
  /// of cancellation order.
  static ReducedWord reduce(int rank, std::span<const Letter> letters) {
    ReducedWord w;
    w.rank_ = check_rank(rank);
    w.letters_.reserve(letters.size());
    for (Letter l : letters) {
      check_letter(l, rank);
      detail::push_reduced(w.letters_, l);
    }
    return w;
  }

  static ReducedWord reduce(int rank, std::initializer_list<Letter> letters) {
    return reduce(rank, std::span<const Letter>(letters.begin(), letters.size()));
  }

  static ReducedWord identity(int rank) {
    ReducedWord w;
    w.rank_ = check_rank(rank);
    return w;
  }

  static ReducedWord generator(int rank, int index, int sign = 1) {
    return reduce(rank, {Letter(sign >= 0 ? index : -index)});
  }

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const ReducedWord& a, const ReducedWord& b) {
    return !(a == b);
  }

  std::string str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) s += '.';
      s += 'x';
      s += std::to_string(letter_index(letters_[i]));
      if (letters_[i] < 0) s += '~';
    }
    return s;
  }

  static void check_letter(Letter l, int rank) {
    if (l == 0 || letter_index(l) > rank)
      throw std::invalid_argument("letter index out of range for rank " +
                                  std::to_string(rank));
  }

private:
  static int check_rank(int rank) {
    if (rank < 0) throw std::invalid_argument("negative free-group rank");
    return rank;
  }

  friend class Automorphism;
  friend ReducedWord multiply(const ReducedWord&, const ReducedWord&);
  friend ReducedWord invert(const ReducedWord&);

  int rank_;
  std::vector<Letter> letters_;
};

inline void require_same_rank(int a, int b) {
  if (a != b)
    throw std::invalid_argument("free-group rank mismatch: " +
                                std::to_string(a) + " vs " + std::to_string(b));
}

/// Reduced concatenation a.b.
inline ReducedWord multiply(const ReducedWord& a, const ReducedWord& b) {
  require_same_rank(a.rank(), b.rank());
  ReducedWord r;
  r.rank_ = a.rank();
  r.letters_ = a.letters();
  for (Letter l : b.letters()) detail::push_reduced(r.letters_, l);
  return r;
}

inline ReducedWord invert(const ReducedWord& w) {
  ReducedWord r;
  r.rank_ = w.rank();
  r.letters_.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    r.letters_.push_back(-*it);
  return r;
}

/// g w g^{-1}.
inline ReducedWord conjugate(const ReducedWord& w, const ReducedWord& g) {
  return multiply(multiply(g, w), invert(g));
}

/// Exponent-sum vector of length rank. Additive under multiply.
inline std::vector<std::int64_t> abelianize(const ReducedWord& w) {
  std::vector<std::int64_t> v(std::size_t(w.rank()), 0);
  for (Letter l : w.letters()) v[std::size_t(letter_index(l) - 1)] += letter_sign(l);
  return v;
}

/// An automorphism of a free group, given by the images of the generators
/// in both directions. Construction from raw image lists verifies that the
/// two lists are mutually inverse by substitution.
class Automorphism {
public:
  Automorphism() : rank_(0) {}

  static Automorphism identity(int rank) {
    Automorphism f;
    f.rank_ = rank;
    f.fwd_.reserve(std::size_t(rank));
    for (int i = 1; i <= rank; ++i) f.fwd_.push_back(ReducedWord::generator(rank, i));
    f.inv_ = f.fwd_;
    return f;
  }

  /// Verifying constructor: substituting inverse images into each forward
  /// image (and vice versa) must reduce to the corresponding generator.
  static Automorphism from_images(std::vector<ReducedWord> fwd,
                                  std::vector<ReducedWord> inv) {
    Automorphism f = from_images_unchecked(std::move(fwd), std::move(inv));
    for (int i = 1; i <= f.rank_; ++i) {
      ReducedWord gi = ReducedWord::generator(f.rank_, i);
      if (apply_images(f.inv_, f.fwd_[std::size_t(i - 1)]) != gi ||
          apply_images(f.fwd_, f.inv_[std::size_t(i - 1)]) != gi)
        throw std::invalid_argument(
            "image lists do not define an automorphism (generator " +
            std::to_string(i) + ")");
    }
    return f;
  }

  /// Trusted constructor for images known to be mutually inverse (e.g.
  /// composites of verified automorphisms).
  static Automorphism from_images_unchecked(std::vector<ReducedWord> fwd,
                                            std::vector<ReducedWord> inv) {
    if (fwd.size() != inv.size())
      throw std::invalid_argument("forward/inverse image count mismatch");
    Automorphism f;
    f.rank_ = int(fwd.size());
    for (const auto& w : fwd) require_same_rank(w.rank(), f.rank_);
    for (const auto& w : inv) require_same_rank(w.rank(), f.rank_);
    f.fwd_ = std::move(fwd);
    f.inv_ = std::move(inv);
    return f;
  }

  int rank() const { return rank_; }
  const std::vector<ReducedWord>& forward_images() const { return fwd_; }
  const std::vector<ReducedWord>& inverse_images() const { return inv_; }
  const ReducedWord& image(int i) const { return fwd_.at(std::size_t(i - 1)); }

  ReducedWord apply(const ReducedWord& w) const {
    require_same_rank(rank_, w.rank());
    return apply_images(fwd_, w);
  }

  ReducedWord apply_inverse(const ReducedWord& w) const {
    require_same_rank(rank_, w.rank());
    return apply_images(inv_, w);
  }

  Automorphism inverse() const {
    Automorphism f;
    f.rank_ = rank_;
    f.fwd_ = inv_;
    f.inv_ = fwd_;
    return f;
  }

  bool is_identity() const {
    for (int i = 1; i <= rank_; ++i)
      if (fwd_[std::size_t(i - 1)] != ReducedWord::generator(rank_, i)) return false;
    return true;
  }

  /// Exact equality: forward images compared as reduced words.
  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.rank_ == b.rank_ && a.fwd_ == b.fwd_;
  }
  friend bool operator!=(const Automorphism& a, const Automorphism& b) {
    return !(a == b);
  }

  static ReducedWord apply_images(const std::vector<ReducedWord>& images,
                                  const ReducedWord& w) {
    ReducedWord r;
    r.rank_ = int(images.size());
    for (Letter l : w.letters()) {
      const ReducedWord& img = images[std::size_t(letter_index(l) - 1)];
      if (l > 0) {
        for (Letter m : img.letters()) detail::push_reduced(r.letters_, m);
      } else {
        for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
          detail::push_reduced(r.letters_, -*it);
      }
    }
    return r;
  }

private:
  int rank_;
  std::vector<ReducedWord> fwd_;
  std::vector<ReducedWord> inv_;
};

/// compose(f, g) applies g first, then f.
inline Automorphism compose(const Automorphism& f, const Automorphism& g) {
  require_same_rank(f.rank(), g.rank());
  std::vector<ReducedWord> fwd, inv;
  fwd.reserve(std::size_t(f.rank()));
  inv.reserve(std::size_t(f.rank()));
  for (int i = 1; i <= f.rank(); ++i) {
    fwd.push_back(f.apply(g.image(i)));
    inv.push_back(g.apply_inverse(f.inverse_images()[std::size_t(i - 1)]));
  }
  return Automorphism::from_images_unchecked(std::move(fwd), std::move(inv));
}

}  // namespace pmcg
