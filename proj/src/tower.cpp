// Copyright 2026 The Anyon Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anyon/tower.hpp"

#include <algorithm>
#include <sstream>

#include "anyon/errors.hpp"

namespace anyon {

namespace {

using Terms = TowerNumber::Terms;

std::uint32_t mask_union(const Terms& x) {
  std::uint32_t m = 0;
  for (const auto& t : x) m |= t.first;
  return m;
}

Terms add_terms(const Terms& x, const Terms& y) {
  Terms out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back(y[j++]);
    } else {
      CycloNumber c = x[i].second + y[j].second;
      if (!c.is_zero()) out.push_back({x[i].first, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Terms negate_terms(Terms x) {
  for (auto& t : x) t.second = -t.second;
  return x;
}

Terms scale_terms(const Terms& x, const CycloNumber& c) {
  Terms out;
  if (c.is_zero()) return out;
  out.reserve(x.size());
  for (const auto& t : x) out.push_back({t.first, t.second * c});
  return out;
}

void split(const Terms& x, std::uint32_t bit, Terms& low, Terms& high) {
  for (const auto& t : x) {
    if (t.first & bit) high.push_back({t.first & ~bit, t.second});
    else low.push_back(t);
  }
}

Terms with_bit(Terms x, std::uint32_t bit) {
  for (auto& t : x) t.first |= bit;
  return x;
}

int top_index(std::uint32_t m) { return 31 - __builtin_clz(m); }

Terms mul_terms(const Terms& x, const Terms& y, const Tower* t) {
  if (x.empty() || y.empty()) return {};
  std::uint32_t all = mask_union(x) | mask_union(y);
  if (all == 0) {
    CycloNumber c = x[0].second * y[0].second;
    if (c.is_zero()) return {};
    return {{0u, std::move(c)}};
  }
  if (x.size() == 1 && x[0].first == 0) return scale_terms(y, x[0].second);
  if (y.size() == 1 && y[0].first == 0) return scale_terms(x, y[0].second);
  int top = top_index(all);
  std::uint32_t bit = 1u << top;
  Terms xa, xb, ya, yb;
  split(x, bit, xa, xb);
  split(y, bit, ya, yb);
  Terms low = mul_terms(xa, ya, t);
  if (!xb.empty() && !yb.empty()) {
    Terms bd = mul_terms(xb, yb, t);
    low = add_terms(low, mul_terms(bd, t->alpha(top).terms(), t));
  }
  Terms high = add_terms(mul_terms(xa, yb, t), mul_terms(xb, ya, t));
  Terms out = std::move(low);
  for (auto& h : high) out.push_back({h.first | bit, std::move(h.second)});
  return out;
}

Terms inv_terms(const Terms& x, const Tower* t) {
  if (x.empty()) throw ArithmeticError("inversion of zero");
  std::uint32_t all = mask_union(x);
  if (all == 0) return {{0u, x[0].second.inv()}};
  int top = top_index(all);
  std::uint32_t bit = 1u << top;
  Terms a, b;
  split(x, bit, a, b);
  // (a + b y)^{-1} = (a - b y) / (a^2 - b^2 alpha).
  Terms norm = add_terms(mul_terms(a, a, t),
                         negate_terms(mul_terms(mul_terms(b, b, t), t->alpha(top).terms(), t)));
  Terms ninv = inv_terms(norm, t);
  Terms out = mul_terms(a, ninv, t);
  for (auto& h : mul_terms(negate_terms(b), ninv, t)) out.push_back({h.first | bit, h.second});
  return out;
}

bool terms_equal(const Terms& x, const Terms& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].first != y[i].first || x[i].second != y[i].second) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return a;
  int da = a ? a->depth() : 0;
  int db = b ? b->depth() : 0;
  if (da >= db) {
    if (db == 0 || a->level(db) == b.get()) return a;
  } else {
    if (da == 0 || b->level(da) == a.get()) return b;
  }
  throw DomainError("values belong to incompatible square-root towers");
}

TowerPtr Tower::extend(const TowerPtr& parent, const TowerNumber& alpha, int base_order) {
  if (alpha.is_zero()) throw DomainError("cannot adjoin the square root of zero");
  TowerPtr host = common_tower(parent, alpha.tower());
  if (host != parent) throw DomainError("radicand does not lie in the parent tower");
  auto t = std::shared_ptr<Tower>(new Tower());
  t->parent_ = parent;
  t->alpha_ = alpha;
  t->base_order_ = base_order;
  if (parent) {
    t->levels_ = parent->levels_;
    if (parent->base_order_ != base_order) throw DomainError("tower base order mismatch");
  }
  t->levels_.push_back(t.get());
  t->embed_ = std::sqrt(alpha.embed());
  t->embed_big_ = big_sqrt(alpha.embed_big());
  return t;
}

TowerPtr Tower::prefix(int d) const {
  if (d <= 0) return nullptr;
  TowerPtr cur = shared_from_this();
  while (cur->depth() > d) cur = cur->parent_;
  return cur;
}

TowerNumber::TowerNumber(long value) : TowerNumber(CycloNumber(value)) {}

TowerNumber::TowerNumber(const Rational& value) : TowerNumber(CycloNumber(value)) {}

TowerNumber::TowerNumber(const CycloNumber& value) {
  if (!value.is_zero()) terms_.push_back({0u, value});
}

TowerNumber::TowerNumber(TowerPtr tower, Terms terms)
    : tower_(std::move(tower)), terms_(std::move(terms)) {
  int d = depth();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].second.is_zero()) throw DomainError("zero coefficient in tower value");
    if (d < 32 && (terms_[i].first >> d) != 0) throw DomainError("radical index out of range");
    if (i > 0 && terms_[i - 1].first >= terms_[i].first) {
      throw DomainError("tower terms not sorted");
    }
  }
}

TowerNumber TowerNumber::radical(const TowerPtr& tower, int i) {
  if (!tower || i < 0 || i >= tower->depth()) throw DomainError("radical index out of range");
  return TowerNumber(tower, {{1u << i, CycloNumber(1)}});
}

int TowerNumber::depth() const { return tower_ ? tower_->depth() : 0; }

bool TowerNumber::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
}

bool TowerNumber::is_cyclo() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

CycloNumber TowerNumber::cyclo_value() const {
  if (!is_cyclo()) throw DomainError("value involves radicals: " + str());
  return terms_.empty() ? CycloNumber() : terms_[0].second;
}

TowerNumber TowerNumber::operator-() const {
  TowerNumber r = *this;
  r.terms_ = negate_terms(std::move(r.terms_));
  return r;
}

TowerNumber& TowerNumber::operator+=(const TowerNumber& o) {
  tower_ = common_tower(tower_, o.tower_);
  terms_ = add_terms(terms_, o.terms_);
  return *this;
}

TowerNumber& TowerNumber::operator-=(const TowerNumber& o) { return *this += -o; }

TowerNumber operator*(const TowerNumber& a, const TowerNumber& b) {
  TowerNumber r;
  r.tower_ = common_tower(a.tower_, b.tower_);
  r.terms_ = mul_terms(a.terms_, b.terms_, r.tower_.get());
  return r;
}

TowerNumber& TowerNumber::operator*=(const TowerNumber& o) { return *this = *this * o; }

TowerNumber TowerNumber::inv() const {
  TowerNumber r;
  r.tower_ = tower_;
  r.terms_ = inv_terms(terms_, tower_.get());
  return r;
}

TowerNumber operator/(const TowerNumber& a, const TowerNumber& b) { return a * b.inv(); }

TowerNumber& TowerNumber::operator/=(const TowerNumber& o) { return *this = *this / o; }

bool TowerNumber::operator==(const TowerNumber& o) const {
  if (tower_ != o.tower_) common_tower(tower_, o.tower_);
  return terms_equal(terms_, o.terms_);
}

TowerNumber TowerNumber::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  TowerNumber result(1), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

std::complex<double> TowerNumber::embed() const {
  std::complex<double> z = 0;
  for (const auto& [mask, c] : terms_) {
    std::complex<double> v = c.embed();
    for (std::uint32_t m = mask; m; m &= m - 1) v *= tower_->radical_embed(__builtin_ctz(m));
    z += v;
  }
  return z;
}

BigComplex TowerNumber::embed_big() const {
  BigComplex z;
  for (const auto& [mask, c] : terms_) {
    BigComplex v = c.embed_big();
    for (std::uint32_t m = mask; m; m &= m - 1) v *= tower_->radical_embed_big(__builtin_ctz(m));
    z += v;
  }
  return z;
}

std::size_t TowerNumber::hash() const {
  std::size_t h = 0x12345;
  for (const auto& [mask, c] : terms_) {
    h ^= std::hash<std::uint32_t>()(mask) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string TowerNumber::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (mask == 0) {
      os << (c.terms().size() > 1 ? "(" + c.str() + ")" : c.str());
      continue;
    }
    if (!c.is_one()) os << "(" << c.str() << ")*";
    bool f2 = true;
    for (std::uint32_t m = mask; m; m &= m - 1) {
      if (!f2) os << "*";
      f2 = false;
      os << "y" << __builtin_ctz(m);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Square roots.

namespace {

std::optional<Terms> sqrt_terms(const Terms& x, int k, const Tower* t, int m) {
  if (x.empty()) return Terms{};
  if (k == 0) {
    auto r = cyclo_sqrt(x[0].second, m);
    if (!r) return std::nullopt;
    return Terms{{0u, *r}};
  }
  std::uint32_t bit = 1u << (k - 1);
  Terms a, b;
  split(x, bit, a, b);
  const Terms& alpha = t->alpha(k - 1).terms();
  if (b.empty()) {
    if (auto r = sqrt_terms(a, k - 1, t, m)) return r;
    Terms q = mul_terms(a, inv_terms(alpha, t), t);
    if (auto r = sqrt_terms(q, k - 1, t, m)) return with_bit(*r, bit);
    return std::nullopt;
  }
  Terms disc = add_terms(mul_terms(a, a, t), negate_terms(mul_terms(mul_terms(b, b, t), alpha, t)));
  auto n = sqrt_terms(disc, k - 1, t, m);
  if (!n) return std::nullopt;
  const CycloNumber half(Rational(1, 2));
  for (int sign : {1, -1}) {
    Terms s = sign > 0 ? *n : negate_terms(*n);
    Terms c2 = scale_terms(add_terms(a, s), half);
    auto c = sqrt_terms(c2, k - 1, t, m);
    if (!c || c->empty()) continue;
    Terms d = mul_terms(scale_terms(b, half), inv_terms(*c, t), t);
    Terms cand = *c;
    for (auto& h : d) cand.push_back({h.first | bit, h.second});
    if (terms_equal(mul_terms(cand, cand, t), x)) return cand;
  }
  return std::nullopt;
}

}  // namespace

TowerNumber principal_sign(const TowerNumber& x) {
  std::complex<double> z = x.embed();
  bool negate;
  if (std::abs(z.real()) > 1e-9 * std::max(1.0, std::abs(z))) {
    negate = z.real() < 0;
  } else {
    BigComplex w = x.embed_big();
    if (boost::multiprecision::abs(w.re) > BigReal("1e-60")) negate = w.re < 0;
    else negate = w.im < 0;
  }
  return negate ? -x : x;
}

std::optional<TowerNumber> tower_sqrt(const TowerNumber& a, int m) {
  auto r = sqrt_terms(a.terms(), a.depth(), a.tower().get(), m);
  if (!r) return std::nullopt;
  return principal_sign(TowerNumber(a.tower(), std::move(*r)));
}

}  // namespace anyon
