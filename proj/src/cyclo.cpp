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

#include "anyon/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

#include "anyon/errors.hpp"

namespace anyon {

Rational parse_rational(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
  if (t.empty()) throw DomainError("empty rational");
  auto slash = t.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), ::isdigit);
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!valid_int(num) || !valid_int(den)) throw DomainError("malformed rational: " + text);
  mpz_class n(num), d(den);
  if (d == 0) throw ArithmeticError("zero denominator: " + text);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::size_t rational_hash(const Rational& q) {
  std::size_t h = std::hash<unsigned long>()(mpz_get_ui(q.get_num_mpz_t()));
  h ^= mpz_size(q.get_num_mpz_t()) * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<unsigned long>()(mpz_get_ui(q.get_den_mpz_t())) + 0x9e3779b97f4a7c15ULL +
       (h << 6) + (h >> 2);
  if (sgn(q) < 0) h = ~h;
  return h;
}

namespace {

using IntPoly = std::vector<long>;

/** Exact quotient of integer polynomials, b monic. */
IntPoly poly_divide(IntPoly a, const IntPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  IntPoly q(std::max(da - db + 1, 1), 0);
  for (int i = da; i >= db; --i) {
    long c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

IntPoly cyclotomic(int m, std::map<int, IntPoly>& memo) {
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_divide(p, cyclotomic(d, memo));
  }
  memo[m] = p;
  return p;
}

const CycloField* rational_field() {
  static const CycloField* f = &CycloField::get(1);
  return f;
}

void add_term_into(std::vector<Rational>& dense, std::vector<char>& touched, int e,
                   const Rational& c) {
  if (touched[e]) {
    dense[e] += c;
  } else {
    dense[e] = c;
    touched[e] = 1;
  }
}

}  // namespace

const CycloField& CycloField::get(int m) {
  if (m <= 0) throw DomainError("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[m];
  if (!slot) slot.reset(new CycloField(m));
  return *slot;
}

CycloField::CycloField(int m) : m_(m) {
  std::map<int, IntPoly> memo;
  phi_poly_ = cyclotomic(m, memo);
  phi_ = static_cast<int>(phi_poly_.size()) - 1;
  powers_.resize(m);
  IntPoly cur(phi_, 0);
  for (int e = 0; e < m; ++e) {
    if (e < phi_) {
      powers_[e] = {{e, 1}};
      if (e == phi_ - 1) cur[e] = 1;
      continue;
    }
    // cur holds zeta^{e-1}; multiply by zeta and reduce the overflow by Phi_m.
    long top = cur[phi_ - 1];
    for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < phi_; ++i) cur[i] -= top * phi_poly_[i];
    for (int i = 0; i < phi_; ++i) {
      if (cur[i] != 0) powers_[e].push_back({i, cur[i]});
    }
  }
  for (int k = 1; k <= m; ++k) {
    if (std::gcd(k, m) == 1) units_.push_back(k % m == 0 && m > 1 ? 0 : k);
  }
  roots_.resize(m);
  for (int e = 0; e < m; ++e) {
    double a = 2.0 * M_PI * e / m;
    roots_[e] = {std::cos(a), std::sin(a)};
  }
}

const BigComplex& CycloField::big_unit_root(int e) const {
  std::call_once(big_once_, [this] {
    big_roots_.resize(m_);
    for (int k = 0; k < m_; ++k) big_roots_[k] = anyon::big_unit_root(k, m_);
  });
  return big_roots_[e];
}

/** Grants the free helpers below access to the private constructor. */
class CycloAccess {
 public:
  static CycloNumber make(const CycloField* f, std::vector<CycloNumber::Term> terms) {
    return CycloNumber(f, std::move(terms));
  }

  /** Reduces a dense buffer indexed by exponent mod m; entries flagged in touched. */
  static CycloNumber reduce(const CycloField& f, std::vector<Rational>& dense,
                            std::vector<char>& touched) {
    int m = f.order();
    int phi = f.degree();
    for (int e = phi; e < m; ++e) {
      if (!touched[e]) continue;
      touched[e] = 0;
      if (sgn(dense[e]) == 0) continue;
      for (const auto& [k, c] : f.power(e)) {
        Rational t = dense[e] * c;
        add_term_into(dense, touched, k, t);
      }
    }
    std::vector<CycloNumber::Term> terms;
    for (int e = 0; e < phi; ++e) {
      if (!touched[e]) continue;
      touched[e] = 0;
      if (sgn(dense[e]) != 0) terms.push_back({e, dense[e]});
    }
    return CycloNumber(&f, std::move(terms));
  }
};

namespace {

struct Scratch {
  std::vector<Rational> dense;
  std::vector<char> touched;
  void ensure(int m) {
    if (static_cast<int>(dense.size()) < m) {
      dense.resize(m);
      touched.resize(m, 0);
    }
  }
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

CycloNumber::CycloNumber() : field_(rational_field()) {}

CycloNumber::CycloNumber(long value) : field_(rational_field()) {
  if (value != 0) terms_.push_back({0, Rational(value)});
}

CycloNumber::CycloNumber(const Rational& value) : field_(rational_field()) {
  if (sgn(value) != 0) {
    terms_.push_back({0, value});
    terms_[0].coeff.canonicalize();
  }
}

CycloNumber::CycloNumber(const CycloField* f, std::vector<Term> terms)
    : field_(f), terms_(std::move(terms)) {
  normalize_order();
}

void CycloNumber::normalize_order() {
  if (field_->order() != 1 && (terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0))) {
    field_ = rational_field();
  }
}

CycloNumber CycloNumber::zeta(int m, long e) {
  const CycloField& f = CycloField::get(m);
  long r = e % m;
  if (r < 0) r += m;
  std::vector<Term> terms;
  for (const auto& [k, c] : f.power(static_cast<int>(r))) terms.push_back({k, Rational(c)});
  return CycloNumber(&f, std::move(terms));
}

CycloNumber CycloNumber::root_of_unity(int m, const Rational& q) {
  Rational qm = q * m;
  if (qm.get_den() != 1) {
    throw UnrepresentableError("root of unity e^{2 pi i " + q.get_str() +
                               "} is not in Q(zeta_" + std::to_string(m) + ")");
  }
  mpz_class n = qm.get_num() % m;
  return zeta(m, n.get_si());
}

CycloNumber CycloNumber::from_terms(int m, const std::vector<std::pair<long, Rational>>& terms) {
  const CycloField& f = CycloField::get(m);
  Scratch& s = scratch();
  s.ensure(m);
  for (const auto& [e, c] : terms) {
    long r = e % m;
    if (r < 0) r += m;
    Rational q = c;
    q.canonicalize();
    add_term_into(s.dense, s.touched, static_cast<int>(r), q);
  }
  return CycloAccess::reduce(f, s.dense, s.touched);
}

bool CycloNumber::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

Rational CycloNumber::rational_value() const {
  if (!is_rational()) throw DomainError("not a rational number: " + str());
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

CycloNumber CycloNumber::lift(int m) const {
  int n = order();
  if (m % n != 0) throw DomainError("cannot lift order " + std::to_string(n) + " to " +
                                    std::to_string(m));
  if (n == m || is_rational()) {
    CycloNumber r = *this;
    return r;
  }
  const CycloField& f = CycloField::get(m);
  int step = m / n;
  Scratch& s = scratch();
  s.ensure(m);
  for (const Term& t : terms_) add_term_into(s.dense, s.touched, t.exp * step, t.coeff);
  return CycloAccess::reduce(f, s.dense, s.touched);
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  if (field_ != o.field_ && !o.is_rational()) {
    if (is_rational()) {
      field_ = o.field_;
    } else {
      int m = lcm_int(order(), o.order());
      if (m != order()) *this = lift(m);
      if (m != o.order()) return *this += o.lift(m);
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exp < o.terms_[j].exp)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].exp < terms_[i].exp) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + o.terms_[j].coeff;
      if (sgn(c) != 0) out.push_back({terms_[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  normalize_order();
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  if (a.terms_.empty() || b.terms_.empty()) return CycloNumber();
  if (b.is_rational() || a.is_rational()) {
    const CycloNumber& s = a.is_rational() ? a : b;
    const CycloNumber& v = a.is_rational() ? b : a;
    const Rational& c = s.terms_[0].coeff;
    CycloNumber r = v;
    if (c != 1) {
      for (auto& t : r.terms_) t.coeff *= c;
    }
    return r;
  }
  if (a.field_ != b.field_) {
    int m = lcm_int(a.order(), b.order());
    return a.lift(m) * b.lift(m);
  }
  const CycloField& f = *a.field_;
  int m = f.order();
  Scratch& s = scratch();
  s.ensure(m);
  Rational t;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      int e = x.exp + y.exp;
      if (e >= m) e -= m;
      t = x.coeff * y.coeff;
      add_term_into(s.dense, s.touched, e, t);
    }
  }
  return CycloAccess::reduce(f, s.dense, s.touched);
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) { return *this = *this * o; }

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) { return *this = *this * o.inv(); }

bool CycloNumber::operator==(const CycloNumber& o) const {
  if (field_ == o.field_) return terms_ == o.terms_;
  if (is_rational() || o.is_rational()) return false;
  int m = lcm_int(order(), o.order());
  return lift(m).terms_ == o.lift(m).terms_;
}

CycloNumber CycloNumber::galois(int k) const {
  if (is_rational()) return *this;
  const CycloField& f = *field_;
  int m = f.order();
  long kk = ((k % m) + m) % m;
  if (std::gcd(static_cast<long>(m), kk) != 1) throw DomainError("galois exponent not a unit");
  if (kk == 1) return *this;
  Scratch& s = scratch();
  s.ensure(m);
  for (const Term& t : terms_) {
    int e = static_cast<int>((t.exp * kk) % m);
    add_term_into(s.dense, s.touched, e, t.coeff);
  }
  return CycloAccess::reduce(f, s.dense, s.touched);
}

CycloNumber CycloNumber::conj() const { return galois(order() - 1); }

CycloNumber CycloNumber::inv() const {
  if (terms_.empty()) throw ArithmeticError("inversion of zero");
  if (is_rational()) return CycloNumber(Rational(1) / terms_[0].coeff);
  if (terms_.size() == 1) {
    CycloNumber r = zeta(order(), -static_cast<long>(terms_[0].exp));
    return r * CycloNumber(Rational(1) / terms_[0].coeff);
  }
  // 1/a = prod_{k != 1} sigma_k(a) / N(a), with N(a) rational.
  CycloNumber prod(1);
  for (int k : field_->units()) {
    if (k == 1) continue;
    prod *= galois(k);
  }
  CycloNumber norm = *this * prod;
  if (!norm.is_rational()) throw ArithmeticError("norm computation failed for " + str());
  return prod * CycloNumber(Rational(1) / norm.rational_value());
}

CycloNumber CycloNumber::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  CycloNumber result(1), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

std::complex<double> CycloNumber::embed() const {
  std::complex<double> z = 0;
  for (const Term& t : terms_) z += t.coeff.get_d() * field_->unit_root(t.exp);
  return z;
}

namespace {

BigReal to_big(const mpz_class& z) {
  if (z.fits_slong_p()) return BigReal(z.get_si());
  return BigReal(z.get_str());
}

BigReal to_big(const Rational& q) { return to_big(q.get_num()) / to_big(q.get_den()); }

}  // namespace

BigComplex CycloNumber::embed_big() const { return embed_big(1); }

BigComplex CycloNumber::embed_big(int k) const {
  BigComplex z;
  int m = field_->order();
  for (const Term& t : terms_) {
    BigReal c = to_big(t.coeff);
    const BigComplex& w = field_->big_unit_root(static_cast<int>((1L * t.exp * k) % m));
    z.re += c * w.re;
    z.im += c * w.im;
  }
  return z;
}

std::size_t CycloNumber::hash() const {
  std::size_t h = std::hash<int>()(order());
  for (const Term& t : terms_) {
    h ^= std::hash<int>()(t.exp) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= rational_hash(t.coeff) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string CycloNumber::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (it->exp == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "z" << order();
    if (it->exp != 1) os << "^" << it->exp;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Square roots.

namespace {

long legendre(long a, long p) {
  long r = 1, b = a % p, e = (p - 1) / 2;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

/** |n| = s * r^2 with s squarefree; false when trial division is inconclusive. */
bool squarefree_split(mpz_class n, mpz_class& s, mpz_class& r) {
  n = abs(n);
  s = 1;
  r = 1;
  const long bound = 200000;
  for (long p = 2; p <= bound; ++p) {
    if (mpz_cmp_si(n.get_mpz_t(), p * p) < 0) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e / 2) {
      mpz_class pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), p, e / 2);
      r *= pe;
    }
    if (e % 2) s *= p;
  }
  if (n > 1) {
    if (n > mpz_class(bound) * bound) {
      if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class q = sqrt(n);
        r *= q;
        return true;
      }
      return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0 ? (s *= n, true) : false;
    }
    s *= n;
  }
  return true;
}

/** Outer nullopt: undecided (factoring gave up); inner nullopt: not a square. */
std::optional<std::optional<CycloNumber>> rational_sqrt(const Rational& q, int m) {
  if (sgn(q) == 0) return std::optional<CycloNumber>(CycloNumber());
  mpz_class num = q.get_num(), den = q.get_den();
  if (sgn(num) > 0 && mpz_perfect_square_p(num.get_mpz_t()) &&
      mpz_perfect_square_p(den.get_mpz_t())) {
    return std::optional<CycloNumber>(CycloNumber(Rational(sqrt(num), sqrt(den))));
  }
  // q = num*den / den^2, so sqrt(q) = sqrt(num*den) / den.
  mpz_class t = num * den, s, r;
  if (!squarefree_split(t, s, r)) return std::nullopt;
  if (!s.fits_slong_p()) return std::nullopt;
  long sf = s.get_si() * (sgn(t) < 0 ? -1 : 1);
  auto root = sqrt_squarefree_integer(sf, m);
  if (!root) return std::optional<CycloNumber>();
  return std::optional<CycloNumber>(*root * CycloNumber(Rational(r, den)));
}

struct SqrtTables {
  std::vector<int> units;
  std::vector<std::vector<BigComplex>> vinv;  // phi x phi inverse of zeta^{k j}
};

const SqrtTables& sqrt_tables(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SqrtTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (slot) return *slot;
  slot = std::make_unique<SqrtTables>();
  const CycloField& f = CycloField::get(m);
  int phi = f.degree();
  slot->units = f.units();
  // Gauss-Jordan on [V | I].
  std::vector<std::vector<BigComplex>> a(phi, std::vector<BigComplex>(2 * phi));
  for (int i = 0; i < phi; ++i) {
    for (int j = 0; j < phi; ++j) {
      a[i][j] = f.big_unit_root(static_cast<int>((1L * slot->units[i] * j) % m));
    }
    a[i][phi + i] = BigComplex(BigReal(1));
  }
  for (int c = 0; c < phi; ++c) {
    int piv = c;
    for (int r = c + 1; r < phi; ++r) {
      if (a[r][c].norm() > a[piv][c].norm()) piv = r;
    }
    std::swap(a[c], a[piv]);
    BigComplex d = a[c][c];
    for (auto& x : a[c]) x = x / d;
    for (int r = 0; r < phi; ++r) {
      if (r == c) continue;
      BigComplex factor = a[r][c];
      if (factor.re == 0 && factor.im == 0) continue;
      for (int k = 0; k < 2 * phi; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  slot->vinv.assign(phi, std::vector<BigComplex>(phi));
  for (int i = 0; i < phi; ++i) {
    for (int j = 0; j < phi; ++j) slot->vinv[i][j] = a[i][phi + j];
  }
  return *slot;
}

/** Continued-fraction reconstruction of a real close to a small-height rational. */
std::optional<Rational> reconstruct(const BigReal& x) {
  static const BigReal tol("1e-40");
  static const BigReal limit("1e17");
  if (boost::multiprecision::abs(x) > limit) return std::nullopt;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  BigReal y = x;
  for (int it = 0; it < 80; ++it) {
    BigReal fl = boost::multiprecision::floor(y);
    long long a = static_cast<long long>(fl);
    mpz_class h2 = mpz_class(std::to_string(a)) * h1 + h0;
    mpz_class k2 = mpz_class(std::to_string(a)) * k1 + k0;
    if (k2 > mpz_class("1000000000000000000")) return std::nullopt;
    BigReal approx = to_big(h2) / to_big(k2);
    if (boost::multiprecision::abs(approx - x) < tol) return Rational(h2, k2);
    BigReal frac = y - fl;
    if (frac < tol) return std::nullopt;
    y = 1 / frac;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  return std::nullopt;
}

constexpr int kMaxSignBits = 16;

std::optional<CycloNumber> numeric_sqrt(const CycloNumber& a, int m) {
  const CycloField& f = CycloField::get(m);
  int phi = f.degree();
  const SqrtTables& tab = sqrt_tables(m);
  std::vector<int> rep;  // indices of units k < m/2; partner m-k
  std::vector<int> partner(phi, -1);
  for (int i = 0; i < phi; ++i) {
    int k = tab.units[i];
    if (2 * k < m) {
      rep.push_back(i);
      int other = static_cast<int>(std::find(tab.units.begin(), tab.units.end(), m - k) -
                                   tab.units.begin());
      partner[i] = other;
    }
  }
  int free_bits = static_cast<int>(rep.size()) - 1;
  if (free_bits > kMaxSignBits) return std::nullopt;
  std::vector<BigComplex> roots(rep.size());
  for (std::size_t t = 0; t < rep.size(); ++t) {
    roots[t] = big_sqrt(a.embed_big(tab.units[rep[t]]));
  }
  std::vector<BigComplex> w(phi);
  for (long mask = 0; mask < (1L << free_bits); ++mask) {
    for (std::size_t t = 0; t < rep.size(); ++t) {
      bool flip = t > 0 && ((mask >> (t - 1)) & 1);
      BigComplex v = flip ? -roots[t] : roots[t];
      w[rep[t]] = v;
      w[partner[rep[t]]] = v.conj();
    }
    std::vector<std::pair<long, Rational>> terms;
    bool ok = true;
    for (int j = 0; j < phi && ok; ++j) {
      BigReal bj = 0;
      for (int i = 0; i < phi; ++i) {
        const BigComplex& c = tab.vinv[j][i];
        bj += c.re * w[i].re - c.im * w[i].im;
      }
      auto q = reconstruct(bj);
      if (!q) ok = false;
      else if (sgn(*q) != 0) terms.push_back({j, *q});
    }
    if (!ok) continue;
    CycloNumber cand = CycloNumber::from_terms(m, terms);
    if (cand * cand == a) return cand;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CycloNumber> sqrt_squarefree_integer(long s, int m) {
  if (s == 0) return CycloNumber();
  CycloNumber result(1);
  long n = s < 0 ? -s : s;
  int sign = 1;
  for (long p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) throw DomainError("not squarefree: " + std::to_string(s));
    if (p == 2) {
      if (m % 8 != 0) return std::nullopt;
      result *= CycloNumber::zeta(m, m / 8) + CycloNumber::zeta(m, -m / 8);
      continue;
    }
    if (m % p != 0) return std::nullopt;
    CycloNumber gauss;
    for (long x = 1; x < p; ++x) {
      gauss += CycloNumber::zeta(m, (m / p) * x) * CycloNumber(legendre(x, p));
    }
    result *= gauss;
    if (p % 4 == 3) sign = -sign;
  }
  if ((s < 0 ? -1 : 1) != sign) {
    if (m % 4 != 0) return std::nullopt;
    result *= CycloNumber::zeta(m, m / 4);
  }
  if (result * result != CycloNumber(s)) return std::nullopt;
  return result;
}

std::optional<CycloNumber> cyclo_sqrt(const CycloNumber& a, int m) {
  if (a.is_zero()) return CycloNumber();
  if (m % a.order() != 0) throw DomainError("cyclo_sqrt: value outside Q(zeta_m)");
  if (a.is_rational()) {
    auto r = rational_sqrt(a.rational_value(), m);
    if (r) return *r;
  }
  if (CycloField::get(m).degree() <= 1) return std::nullopt;
  return numeric_sqrt(a.lift(m), m);
}

}  // namespace anyon
