#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "loopchar/charalg.hpp"
#include "loopchar/weights.hpp"

namespace loopchar {

/// A word over the simple reflections {s0, s1}.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> letters);
  Word(std::initializer_list<int> letters);

  /// Parses "s0s1s0"; "" and "e" give the empty word.
  static Word parse(std::string_view text);

  const std::vector<std::uint8_t>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t j) const { return letters_[j]; }

  /// In the infinite dihedral group a word is reduced iff no letter repeats
  /// next to itself.
  bool is_reduced() const;
  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t j) const;

  std::string str() const;  // "e" for the empty word

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Element of the affine Weyl group Z/2 |x Z as (eps, t): reflection bit and
/// coroot translation. The product is (e1, t1)(e2, t2) = (e1^e2, (-1)^e2 t1 + t2)
/// with s1 = (1, 0) and s0 = (1, -1).
class WeylElement {
 public:
  constexpr WeylElement() = default;
  WeylElement(int eps, std::int64_t t);

  static WeylElement identity() { return {}; }
  static WeylElement generator(int i);
  /// Accepts "eps,t" or a word such as "s1s0".
  static WeylElement parse(std::string_view text);

  int eps() const { return eps_; }
  std::int64_t t() const { return t_; }

  WeylElement inverse() const;
  std::int64_t length() const;
  /// The unique reduced word (there is one per element except the identity).
  Word reduced_word() const;

  std::string str() const;  // "eps,t"

  friend WeylElement operator*(const WeylElement& x, const WeylElement& y);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  int eps_ = 0;
  std::int64_t t_ = 0;
};

std::ostream& operator<<(std::ostream& os, const WeylElement& v);

/// A subword selector gamma in {0,1}^n.
class Gallery {
 public:
  Gallery() = default;
  explicit Gallery(std::vector<std::uint8_t> bits);
  /// The idx-th gallery of length n in lexicographic order (first bit most
  /// significant).
  static Gallery from_index(std::size_t n, std::uint64_t idx);
  static Gallery parse(std::string_view bits);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  int operator[](std::size_t j) const { return bits_[j]; }
  std::string str() const;

  friend bool operator==(const Gallery&, const Gallery&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// All 2^n galleries of a word, in lexicographic order. Indexable, so it can
/// be split across threads.
class GalleryRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Gallery;
    using difference_type = std::ptrdiff_t;
    iterator(std::size_t n, std::uint64_t idx) : n_(n), idx_(idx) {}
    Gallery operator*() const { return Gallery::from_index(n_, idx_); }
    iterator& operator++() {
      ++idx_;
      return *this;
    }
    bool operator==(const iterator& o) const { return idx_ == o.idx_; }

   private:
    std::size_t n_;
    std::uint64_t idx_;
  };

  explicit GalleryRange(std::size_t n);
  std::uint64_t count() const { return count_; }
  Gallery operator[](std::uint64_t idx) const { return Gallery::from_index(n_, idx); }
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }

 private:
  std::size_t n_;
  std::uint64_t count_;
};

WeylElement word_to_elem(const Word& w);

/// w_n: the alternating word of length n ending in s0.
Word chain_word(std::size_t n);
WeylElement chain_element(std::size_t n);

/// Product of the letters of w selected by g.
WeylElement realization(const Word& w, const Gallery& g);

GalleryRange galleries(const Word& w);

/// The m with v W = w_m W, where W = {e, s1}.
std::size_t coset_index(const WeylElement& v);

/// Bruhat order on the infinite dihedral group: strictly shorter, or equal.
bool bruhat_leq(const WeylElement& u, const WeylElement& v);

/// v(mu), through the reduced word of v.
Weight act(const WeylElement& v, const Weight& mu);
/// s_{i1} ... s_{in}(mu) for a word (need not be reduced).
Weight act(const Word& w, const Weight& mu);

/// f(w) = sum_j s_{i1} ... s_{i(j-1)}(alpha_{ij}). Throws for non-reduced words.
Weight f_sum(const Word& w);
/// The monomial e^{f(w)}.
LaurentPoly s_factor(const Word& w);

}  // namespace loopchar
