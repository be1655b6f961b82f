#include "loopchar/weyl.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace loopchar {

// ---------------------------------------------------------------- Word

Word::Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
  for (auto l : letters_) check_simple_index(l);
}

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) {
    check_simple_index(l);
    letters_.push_back(static_cast<std::uint8_t>(l));
  }
}

Word Word::parse(std::string_view text) {
  if (text.empty() || text == "e" || text == "id") return {};
  std::vector<std::uint8_t> letters;
  std::size_t k = 0;
  while (k < text.size()) {
    if (text[k] != 's' || k + 1 >= text.size() || (text[k + 1] != '0' && text[k + 1] != '1'))
      throw std::invalid_argument("cannot parse word '" + std::string(text) + "'");
    letters.push_back(static_cast<std::uint8_t>(text[k + 1] - '0'));
    k += 2;
  }
  return Word(std::move(letters));
}

bool Word::is_reduced() const {
  for (std::size_t j = 1; j < letters_.size(); ++j)
    if (letters_[j] == letters_[j - 1]) return false;
  return true;
}

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<std::uint8_t>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix_from(std::size_t j) const {
  return Word(std::vector<std::uint8_t>(letters_.begin() + j, letters_.end()));
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::string s;
  for (auto l : letters_) {
    s += 's';
    s += static_cast<char>('0' + l);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

// ---------------------------------------------------------------- WeylElement

WeylElement::WeylElement(int eps, std::int64_t t) : eps_(eps), t_(t) {
  if (eps != 0 && eps != 1) throw std::invalid_argument("reflection bit must be 0 or 1");
}

WeylElement WeylElement::generator(int i) {
  check_simple_index(i);
  return i == 1 ? WeylElement(1, 0) : WeylElement(1, -1);
}

WeylElement WeylElement::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) return word_to_elem(Word::parse(text));
  auto num = [&](std::string_view s) {
    std::int64_t v = 0;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw std::invalid_argument("cannot parse Weyl element '" + std::string(text) + "'");
    return v;
  };
  return WeylElement(static_cast<int>(num(text.substr(0, comma))), num(text.substr(comma + 1)));
}

WeylElement operator*(const WeylElement& x, const WeylElement& y) {
  return WeylElement(x.eps_ ^ y.eps_, (y.eps_ ? -x.t_ : x.t_) + y.t_);
}

WeylElement WeylElement::inverse() const {
  // (e, t)^{-1} = (e, -(-1)^e t)
  return WeylElement(eps_, eps_ ? t_ : -t_);
}

std::int64_t WeylElement::length() const {
  if (eps_ == 0) return 2 * (t_ < 0 ? -t_ : t_);
  const std::int64_t v = 2 * t_ + 1;
  return v < 0 ? -v : v;
}

// (0, -j) = (s1 s0)^j, (0, j) = (s0 s1)^j, (1, t>=0) = s1 (s0 s1)^t,
// (1, t<0) = s0 (s1 s0)^{-1-t}.
Word WeylElement::reduced_word() const {
  const auto n = static_cast<std::size_t>(length());
  if (n == 0) return {};
  int first;
  if (eps_ == 0) {
    first = t_ < 0 ? 1 : 0;
  } else {
    first = t_ >= 0 ? 1 : 0;
  }
  std::vector<std::uint8_t> letters(n);
  for (std::size_t j = 0; j < n; ++j) letters[j] = static_cast<std::uint8_t>((first + j) % 2);
  return Word(std::move(letters));
}

std::string WeylElement::str() const { return std::to_string(eps_) + "," + std::to_string(t_); }

std::ostream& operator<<(std::ostream& os, const WeylElement& v) { return os << v.str(); }

// ---------------------------------------------------------------- Gallery

Gallery::Gallery(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("gallery bits must be 0 or 1");
}

Gallery Gallery::from_index(std::size_t n, std::uint64_t idx) {
  std::vector<std::uint8_t> bits(n);
  for (std::size_t j = 0; j < n; ++j) bits[j] = static_cast<std::uint8_t>((idx >> (n - 1 - j)) & 1u);
  return Gallery(std::move(bits));
}

Gallery Gallery::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("gallery must be a bit string");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Gallery(std::move(bits));
}

std::string Gallery::str() const {
  std::string s;
  for (auto b : bits_) s += static_cast<char>('0' + b);
  return s;
}

GalleryRange::GalleryRange(std::size_t n) : n_(n) {
  if (n > 40) throw std::invalid_argument("gallery enumeration limited to words of length <= 40");
  count_ = std::uint64_t{1} << n;
}

// ---------------------------------------------------------------- operations

WeylElement word_to_elem(const Word& w) {
  WeylElement v;
  for (auto l : w.letters()) v = v * WeylElement::generator(l);
  return v;
}

Word chain_word(std::size_t n) {
  std::vector<std::uint8_t> letters(n);
  for (std::size_t j = 0; j < n; ++j) letters[j] = static_cast<std::uint8_t>((n - j) % 2 == 1 ? 0 : 1);
  return Word(std::move(letters));
}

WeylElement chain_element(std::size_t n) { return word_to_elem(chain_word(n)); }

WeylElement realization(const Word& w, const Gallery& g) {
  if (w.size() != g.size()) throw std::invalid_argument("gallery length does not match word");
  WeylElement v;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (g[j]) v = v * WeylElement::generator(w[j]);
  return v;
}

GalleryRange galleries(const Word& w) { return GalleryRange(w.size()); }

std::size_t coset_index(const WeylElement& v) {
  // Move to the translation representative (0, t) of {v, v s1}.
  const std::int64_t t = v.eps() == 1 ? -v.t() : v.t();
  return static_cast<std::size_t>(t <= 0 ? -2 * t : 2 * t - 1);
}

bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
  return u == v || u.length() < v.length();
}

Weight act(const Word& w, const Weight& mu) {
  Weight r = mu;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) r = reflect(*it, r);
  return r;
}

Weight act(const WeylElement& v, const Weight& mu) { return act(v.reduced_word(), mu); }

Weight f_sum(const Word& w) {
  if (!w.is_reduced()) throw std::invalid_argument("f_sum: word " + w.str() + " is not reduced");
  Weight total;
  for (std::size_t j = 0; j < w.size(); ++j) total += act(w.prefix(j), simple_root(w[j]));
  return total;
}

LaurentPoly s_factor(const Word& w) { return LaurentPoly::monomial(f_sum(w)); }

}  // namespace loopchar
