#include "loopchar/charalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace loopchar {

namespace {

using Terms = std::vector<LaurentPoly::Term>;

// a + sign*b for sorted term lists.
Terms merge(const Terms& a, const Terms& b, int sign) {
  Terms out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->w < j->w)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->w < i->w) {
      out.push_back({j->w, sign > 0 ? j->c : Integer(-j->c)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(i->c + j->c) : Integer(i->c - j->c);
      if (c != 0) out.push_back({i->w, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Sorted multiset helpers for denominators.
std::vector<Weight> multiset_max_union(const std::vector<Weight>& a, const std::vector<Weight>& b) {
  std::vector<Weight> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Weight> multiset_difference(const std::vector<Weight>& a, const std::vector<Weight>& b) {
  std::vector<Weight> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LaurentPoly times_factors(LaurentPoly p, const std::vector<Weight>& factors) {
  for (const auto& b : factors) p = p.times_one_minus(b);
  return p;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back({Weight{}, Integer(constant)});
}

LaurentPoly LaurentPoly::monomial(const Weight& w, const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({w, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.w < y.w; });
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().w == t.w) {
      p.terms_.back().c += t.c;
    } else {
      if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
  return p;
}

Integer LaurentPoly::coefficient(const Weight& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Weight& x) { return t.w < x; });
  if (it != terms_.end() && it->w == w) return it->c;
  return 0;
}

Integer LaurentPoly::coefficient_sum() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.c;
  return s;
}

LaurentPoly LaurentPoly::shifted(const Weight& mu) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.w += mu;  // translation keeps lexicographic order
  return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

LaurentPoly LaurentPoly::times_one_minus(const Weight& beta) const {
  LaurentPoly r;
  r.terms_ = merge(terms_, shifted(beta).terms_, -1);
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_one_minus(const Weight& beta) const {
  if (beta.is_zero() || beta.l0 != 0)
    throw std::invalid_argument("divide_one_minus: beta must be nonzero with l0 = 0");
  if (terms_.empty()) return LaurentPoly{};

  // Split the support into lines mu + Z*beta. With beta = g*p, p primitive,
  // a line is fixed by l0, the cross product with p and the residue of the
  // dot product with p modulo g*|p|^2; the quotient of that dot product is
  // the position along the line.
  const std::int64_t g = std::gcd(beta.a1, beta.d);
  const std::int64_t p1 = beta.a1 / g;
  const std::int64_t pd = beta.d / g;
  const std::int64_t step = std::abs(g) * (p1 * p1 + pd * pd);

  struct Slot {
    std::tuple<std::int64_t, std::int64_t, std::int64_t> line;
    std::int64_t pos;
    std::size_t idx;
  };
  std::vector<Slot> slots;
  slots.reserve(terms_.size());
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& w = terms_[k].w;
    const std::int64_t cross = w.a1 * pd - w.d * p1;
    const std::int64_t dot = w.a1 * p1 + w.d * pd;
    const std::int64_t pos = floor_div(dot, step);
    slots.push_back({{w.l0, cross, dot - pos * step}, pos, k});
  }
  // Orient positions so that increasing pos means adding beta.
  const bool forward = (p1 * beta.a1 + pd * beta.d) > 0;
  std::sort(slots.begin(), slots.end(), [&](const Slot& x, const Slot& y) {
    if (x.line != y.line) return x.line < y.line;
    return forward ? x.pos < y.pos : x.pos > y.pos;
  });

  std::vector<Term> out;
  std::size_t s = 0;
  while (s < slots.size()) {
    std::size_t e = s;
    while (e < slots.size() && slots[e].line == slots[s].line) ++e;
    // Walk the line from its lowest point, q(mu) = sum_{k>=0} p(mu - k beta).
    Integer running = 0;
    Weight cur = terms_[slots[s].idx].w;
    std::size_t next = s;
    while (next < e) {
      const Weight& target = terms_[slots[next].idx].w;
      if (cur == target) {
        running += terms_[slots[next].idx].c;
        ++next;
      }
      if (next == e) break;
      if (running != 0) out.push_back({cur, running});
      cur += beta;
    }
    if (running != 0) return std::nullopt;
    s = e;
  }
  return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& large = a.size() <= b.size() ? b : a;
  if (small.is_monomial()) return large.shifted(small.terms_[0].w).scaled(small.terms_[0].c);
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(small.size() * large.size());
  for (const auto& s : small.terms_)
    for (const auto& l : large.terms_) prod.push_back({s.w + l.w, s.c * l.c});
  return LaurentPoly::from_terms(std::move(prod));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].w != b.terms_[k].w || a.terms_[k].c != b.terms_[k].c) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  if (p.is_zero()) return os << '0';
  bool first = true;
  for (const auto& t : p.terms()) {
    Integer c = t.c;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << '-';
      c = -c;
    }
    first = false;
    if (t.w.is_zero()) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << "e" << t.w;
  }
  return os;
}

// ---------------------------------------------------------------- polarize

Polarized polarize(const Weight& beta) {
  if (beta.is_zero()) throw std::domain_error("polarize: zero weight gives a zero factor");
  if (is_positive_root(beta)) return {beta, LaurentPoly(1)};
  if (is_positive_root(-beta)) return {-beta, -LaurentPoly::monomial(beta)};
  throw std::invalid_argument("polarize: weight is not a root");
}

// ---------------------------------------------------------------- FactoredRational

FactoredRational::FactoredRational(Raw, LaurentPoly num, std::vector<Weight> den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) den_.clear();
}

FactoredRational::FactoredRational(LaurentPoly num) : num_(std::move(num)) {}

FactoredRational::FactoredRational(LaurentPoly num, const std::vector<Weight>& den)
    : num_(std::move(num)) {
  den_.reserve(den.size());
  for (const auto& b : den) {
    auto pol = polarize(b);
    den_.push_back(pol.beta);
    // 1/(1 - e^b) = -e^{-b} / (1 - e^{-b}) when b is negative.
    if (pol.beta != b) num_ = num_.shifted(-b).scaled(-1);
  }
  std::sort(den_.begin(), den_.end());
  if (num_.is_zero()) den_.clear();
}

FactoredRational FactoredRational::inverse_one_minus(const Weight& beta) {
  return FactoredRational(LaurentPoly(1), {beta});
}

FactoredRational FactoredRational::reduced() const {
  if (num_.is_zero()) return {};
  LaurentPoly num = num_;
  std::vector<Weight> kept;
  kept.reserve(den_.size());
  for (const auto& b : den_) {
    if (auto q = num.divide_one_minus(b)) {
      num = std::move(*q);
    } else {
      kept.push_back(b);
    }
  }
  return FactoredRational(Raw{}, std::move(num), std::move(kept));
}

FactoredRational FactoredRational::operator-() const {
  return FactoredRational(Raw{}, -num_, den_);
}

FactoredRational& FactoredRational::operator+=(const FactoredRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) den_.clear();
    return *this;
  }
  auto common = multiset_max_union(den_, o.den_);
  LaurentPoly num = times_factors(num_, multiset_difference(common, den_)) +
                    times_factors(o.num_, multiset_difference(common, o.den_));
  return *this = FactoredRational(Raw{}, std::move(num), std::move(common));
}

FactoredRational& FactoredRational::operator-=(const FactoredRational& o) { return *this += -o; }

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
  if (is_zero() || o.is_zero()) return *this = {};
  std::vector<Weight> den;
  den.reserve(den_.size() + o.den_.size());
  std::merge(den_.begin(), den_.end(), o.den_.begin(), o.den_.end(), std::back_inserter(den));
  return *this = FactoredRational(Raw{}, num_ * o.num_, std::move(den));
}

FactoredRational& FactoredRational::operator*=(const LaurentPoly& p) {
  num_ *= p;
  if (num_.is_zero()) den_.clear();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const FactoredRational& r) {
  os << '(' << r.num() << ')';
  if (!r.den().empty()) {
    os << " / (";
    for (std::size_t k = 0; k < r.den().size(); ++k) {
      if (k) os << ' ';
      os << "(1 - e" << r.den()[k] << ')';
    }
    os << ')';
  }
  return os;
}

bool rat_equal(const FactoredRational& r, const FactoredRational& s) {
  return (r - s).is_zero();
}

// ---------------------------------------------------------------- expand

std::int64_t default_a1_cutoff(std::int64_t order, std::int64_t level) {
  return order + level * order;
}

LaurentPoly expand(const FactoredRational& r, std::int64_t order,
                   std::optional<std::int64_t> a1_cutoff) {
  if (r.is_zero()) return {};
  std::int64_t level = 0;
  std::int64_t hmin = 0, dmin = 0;
  bool first = true;
  for (const auto& t : r.num().terms()) {
    level = std::max(level, std::abs(t.w.l0));
    const std::int64_t h = t.w.a1 + 2 * t.w.d;
    hmin = first ? h : std::min(hmin, h);
    dmin = first ? t.w.d : std::min(dmin, t.w.d);
    first = false;
  }
  const std::int64_t cutoff = a1_cutoff.value_or(default_a1_cutoff(order, level));
  if (cutoff < 0) return {};

  // The grading a1 + 2d is positive on every positive root, so the product of
  // geometric series truncated at height hs and depth ds is exact there; no
  // numerator term times a higher series term can land in the window.
  const std::int64_t hs = cutoff + 2 * order - hmin;
  const std::int64_t ds = order - dmin;
  if (hs < 0 || ds < 0) return {};

  const std::int64_t width = hs + ds + 1;  // a1 in [-ds, hs]
  std::vector<Integer> grid(static_cast<std::size_t>((ds + 1) * width));
  auto at = [&](std::int64_t a, std::int64_t d) -> Integer& {
    return grid[static_cast<std::size_t>(d * width + (a + ds))];
  };
  auto inside = [&](std::int64_t a, std::int64_t d) {
    return d >= 0 && d <= ds && a >= -ds && a + 2 * d <= hs;
  };
  at(0, 0) = 1;
  for (const auto& beta : r.den()) {
    for (std::int64_t d = 0; d <= ds; ++d) {
      for (std::int64_t a = -ds; a + 2 * d <= hs; ++a) {
        const std::int64_t pa = a - beta.a1, pd = d - beta.d;
        if (inside(pa, pd)) {
          const Integer& prev = at(pa, pd);
          if (prev != 0) at(a, d) += prev;
        }
      }
    }
  }

  std::map<Weight, Integer> acc;
  for (const auto& t : r.num().terms()) {
    for (std::int64_t d = 0; d <= ds && t.w.d + d <= order; ++d) {
      const std::int64_t lo = std::max(-ds, -cutoff - t.w.a1);
      const std::int64_t hi = std::min(hs - 2 * d, cutoff - t.w.a1);
      for (std::int64_t a = lo; a <= hi; ++a) {
        const Integer& s = at(a, d);
        if (s == 0) continue;
        acc[Weight{t.w.l0, t.w.a1 + a, t.w.d + d}] += t.c * s;
      }
    }
  }
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [w, c] : acc)
    if (c != 0) terms.push_back({w, std::move(c)});
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace loopchar
