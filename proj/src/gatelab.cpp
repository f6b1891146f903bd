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


#include "anyon/gatelab.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "anyon/errors.hpp"
#include "anyon/parallel.hpp"

namespace anyon {

BigMatrix BigMatrix::identity(int n) {
  BigMatrix m{n, std::vector<BigComplex>(static_cast<std::size_t>(n) * n)};
  for (int i = 0; i < n; ++i) m(i, i) = BigComplex(BigReal(1));
  return m;
}

BigMatrix operator*(const BigMatrix& x, const BigMatrix& y) {
  if (x.n != y.n) throw DomainError("matrix shape mismatch in product");
  BigMatrix r{x.n, std::vector<BigComplex>(x.a.size())};
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k)
      for (int j = 0; j < x.n; ++j) r(i, j) += x(i, k) * y(k, j);
  return r;
}

BigMatrix BigMatrix::adjoint() const {
  BigMatrix r{n, std::vector<BigComplex>(a.size())};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

CMatrix to_complex(const TowerMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).embed();
  return out;
}

BigMatrix to_big(const TowerMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("square matrix expected");
  return BigMatrix{m.rows(), m.embed_big()};
}

BigReal distance_from_identity_inf(const BigMatrix& m) {
  BigReal worst(0);
  for (int i = 0; i < m.n; ++i) {
    BigReal row(0);
    for (int j = 0; j < m.n; ++j) {
      BigComplex d = m(i, j);
      if (i == j) d.re -= 1;
      row += d.abs();
    }
    if (row > worst) worst = row;
  }
  return worst;
}

namespace {

struct MatrixHash {
  std::size_t operator()(const TowerMatrix& m) const { return m.hash(); }
};

void check_generators(int n, int rows, int cols) {
  if (rows != cols || rows != n) throw DomainError("generators must be square of one size");
}

}  // namespace

ClosureResult group_closure(const std::vector<TowerMatrix>& generators, std::size_t cap) {
  if (generators.empty()) return {1, false};
  const int n = generators[0].rows();
  for (const auto& g : generators) check_generators(n, g.rows(), g.cols());
  std::unordered_set<TowerMatrix, MatrixHash> seen;
  std::vector<TowerMatrix> queue{TowerMatrix::identity(n)};
  seen.insert(queue[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : generators) {
      TowerMatrix h = queue[head] * g;
      if (seen.count(h)) continue;
      if (seen.size() >= cap) return {seen.size(), true};
      seen.insert(h);
      queue.push_back(std::move(h));
    }
  }
  return {seen.size(), false};
}

ClosureResult group_closure(const std::vector<TowerMatrix>& generators, const TowerNumber& phase, std::size_t cap) {
  const TowerNumber s = phase.inv();
  std::vector<TowerMatrix> scaled;
  for (const auto& g : generators) scaled.push_back(g.scaled(s));
  return group_closure(scaled, cap);
}

ClosureResult group_closure_numeric(const std::vector<BigMatrix>& generators, std::size_t cap) {
  if (generators.empty()) return {1, false};
  const int n = generators[0].n;
  for (const auto& g : generators) check_generators(n, g.n, g.n);
  const BigReal eps = boost::multiprecision::ldexp(BigReal(1), -100);
  // The irrational offset keeps algebraic entries away from rounding boundaries.
  auto key = [](const BigMatrix& m) {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& z : m.a) {
      for (const BigReal* x : {&z.re, &z.im}) {
        long long q = std::llround(static_cast<double>(*x) * 1e6 + 0.31830988618379067);
        h = (h ^ static_cast<std::size_t>(q)) * 1099511628211ULL;
      }
    }
    return h;
  };
  auto same = [&](const BigMatrix& x, const BigMatrix& y) {
    for (std::size_t i = 0; i < x.a.size(); ++i)
      if ((x.a[i] - y.a[i]).norm() > eps * eps) return false;
    return true;
  };
  std::unordered_multimap<std::size_t, std::size_t> buckets;
  std::vector<BigMatrix> elems{BigMatrix::identity(n)};
  buckets.emplace(key(elems[0]), 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      BigMatrix h = elems[head] * g;
      const std::size_t k = key(h);
      bool found = false;
      auto range = buckets.equal_range(k);
      for (auto it = range.first; it != range.second && !found; ++it) found = same(elems[it->second], h);
      if (found) continue;
      if (elems.size() >= cap) return {elems.size(), true};
      buckets.emplace(k, elems.size());
      elems.push_back(std::move(h));
    }
  }
  return {elems.size(), false};
}

double phase_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("phase_distance: dimension mismatch");
  if (a.size() == 0) return 0.0;
  const std::complex<double> t = (b.adjoint() * a).trace();
  const std::complex<double> lambda = std::abs(t) > 1e-300 ? t / std::abs(t) : std::complex<double>(1.0);
  const CMatrix d = a - lambda * b;
  return Eigen::JacobiSVD<CMatrix>(d).singularValues()(0);
}

double GateTarget::distance(const CMatrix& m) const {
  if (up_to_phase) return phase_distance(m, matrix);
  if (m.rows() != matrix.rows() || m.cols() != matrix.cols()) throw DomainError("distance: dimension mismatch");
  return Eigen::JacobiSVD<CMatrix>(m - matrix).singularValues()(0);
}

GateTarget GateTarget::from_json(const nlohmann::json& j) {
  GateTarget t;
  try {
    const auto& rows = j.at("matrix");
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw DomainError("gate target: empty matrix");
    t.matrix = CMatrix(n, n);
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows[r].size()) != n) throw DomainError("gate target: matrix must be square");
      for (int c = 0; c < n; ++c) {
        const auto& z = rows[r][c];
        if (z.is_number()) {
          t.matrix(r, c) = {z.get<double>(), 0.0};
        } else {
          t.matrix(r, c) = {z.at(0).get<double>(), z.at(1).get<double>()};
        }
      }
    }
    const std::string mode = j.value("mode", "phase");
    if (mode != "phase" && mode != "exact") throw DomainError("gate target: mode must be phase or exact");
    t.up_to_phase = mode == "phase";
    t.tolerance = j.value("unitarity_tol", 1e-8);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("gate target: ") + e.what());
  }
  const double err = (t.matrix.adjoint() * t.matrix - CMatrix::Identity(t.dim(), t.dim())).cwiseAbs().maxCoeff();
  if (err > t.tolerance) throw DomainError("gate target is not unitary");
  return t;
}

TowerMatrix word_matrix(const BraidRep& rep, const std::vector<int>& word) {
  TowerMatrix m = TowerMatrix::identity(rep.dim());
  for (int i : word) m = m * rep.generator(i);
  return m;
}

TowerMatrix word_matrix(const BraidRep& rep, const std::vector<int>& word, const TowerNumber& phase) {
  long net = 0;
  for (int i : word) net += i > 0 ? 1 : -1;
  TowerMatrix m = word_matrix(rep, word);
  return net == 0 ? m : m.scaled(phase.pow(-net));
}

nlohmann::json WeaveResult::to_json(int digits) const {
  nlohmann::json j;
  j["pattern"] = pattern;
  j["word"] = word;
  j["distance"] = distance;
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < matrix.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < matrix.cols(); ++c)
      row.push_back(complex_to_json(BigComplex(BigReal(matrix(r, c).real()), BigReal(matrix(r, c).imag())), digits));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

namespace {

using Cx = std::complex<double>;

/** Row-major n x n product out = x * y. */
void mul(const Cx* x, const Cx* y, Cx* out, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cx acc = 0;
      for (int k = 0; k < n; ++k) acc += x[i * n + k] * y[k * n + j];
      out[i * n + j] = acc;
    }
}

struct WeaveSearch {
  int n;
  int len;
  const GateTarget* target;
  double tol;
  /** powers[g][e] is generator g raised to alphabet entry e, row-major. */
  std::vector<std::vector<std::vector<Cx>>> powers;
  /** Conjugate of the target, row-major, for tr(T^H W). */
  std::vector<Cx> target_conj;
  const std::atomic<long>* best;
  long task;

  /** Lower bound of the phase distance: ||.||_2 >= ||.||_F / sqrt(n) with ||.||_F^2 = 2n - 2|tr|. */
  bool may_hit(const Cx* w) const {
    if (!target->up_to_phase) return true;
    Cx t = 0;
    for (int i = 0; i < n * n; ++i) t += target_conj[i] * w[i];
    const double f2 = std::max(0.0, 2.0 * n - 2.0 * std::abs(t));
    return std::sqrt(f2 / n) < tol;
  }

  double exact_distance(const Cx* w) const {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = w[i * n + j];
    return target->distance(m);
  }

  /** Depth-first search in lex order; fills pattern and returns true on the first hit. */
  bool dfs(int k, std::vector<std::vector<Cx>>& buf, std::vector<int>& pattern) {
    if (best->load(std::memory_order_relaxed) < task) return false;
    const int g = k % 2;
    for (std::size_t e = 0; e < powers[g].size(); ++e) {
      pattern[k] = static_cast<int>(e);
      mul(powers[g][e].data(), buf[k].data(), buf[k + 1].data(), n);
      if (k + 1 == len) {
        if (may_hit(buf[k + 1].data()) && exact_distance(buf[k + 1].data()) < tol) return true;
      } else if (dfs(k + 1, buf, pattern)) {
        return true;
      }
    }
    return false;
  }
};

std::vector<Cx> row_major(const CMatrix& m) {
  std::vector<Cx> v(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v[static_cast<std::size_t>(i) * m.cols() + j] = m(i, j);
  return v;
}

}  // namespace

std::optional<WeaveResult> weave_search(const BraidRep& rep, const GateTarget& target, const WeaveOptions& opt) {
  if (opt.max_len < 1) throw DomainError("weave_search: max_len must be at least 1");
  if (rep.dim() != target.dim()) throw DomainError("weave_search: target dimension differs from the representation");
  if (opt.exponents.empty()) throw DomainError("weave_search: empty exponent alphabet");
  const int n = rep.dim();
  const int gens[2] = {opt.first_generator, opt.second_generator};
  std::vector<std::vector<std::vector<Cx>>> powers(2);
  for (int g = 0; g < 2; ++g) {
    rep.generator(gens[g]);
    const CMatrix base = to_complex(rep.generator(gens[g]));
    const CMatrix inv = to_complex(rep.generator(-gens[g]));
    for (int e : opt.exponents) {
      if (e == 0) throw DomainError("weave_search: zero exponent");
      CMatrix p = CMatrix::Identity(n, n);
      for (int i = 0; i < std::abs(e); ++i) p = p * (e > 0 ? base : inv);
      powers[g].push_back(row_major(p));
    }
  }
  std::vector<Cx> tconj = row_major(target.matrix.conjugate());
  const std::vector<Cx> id = row_major(CMatrix::Identity(n, n));
  const long tasks = static_cast<long>(opt.exponents.size());
  for (int len = 1; len <= opt.max_len; ++len) {
    std::atomic<long> best{tasks};
    std::vector<std::vector<int>> found(static_cast<std::size_t>(tasks));
    parallel_for(static_cast<std::size_t>(tasks), opt.workers, [&](std::size_t t) {
      WeaveSearch s{n, len, &target, opt.tol, powers, tconj, &best, static_cast<long>(t)};
      std::vector<std::vector<Cx>> buf(static_cast<std::size_t>(len) + 1, id);
      std::vector<int> pattern(static_cast<std::size_t>(len));
      pattern[0] = static_cast<int>(t);
      mul(powers[0][t].data(), buf[0].data(), buf[1].data(), n);
      bool hit = false;
      if (len == 1) {
        hit = s.may_hit(buf[1].data()) && s.exact_distance(buf[1].data()) < opt.tol;
      } else {
        hit = s.dfs(1, buf, pattern);
      }
      if (!hit) return;
      found[t] = pattern;
      long cur = best.load();
      while (static_cast<long>(t) < cur && !best.compare_exchange_weak(cur, static_cast<long>(t))) {
      }
    });
    const long b = best.load();
    if (b == tasks) continue;
    WeaveResult res;
    for (int e : found[static_cast<std::size_t>(b)]) res.pattern.push_back(opt.exponents[static_cast<std::size_t>(e)]);
    for (int k = len - 1; k >= 0; --k) {
      const int g = gens[k % 2];
      const int p = res.pattern[static_cast<std::size_t>(k)];
      for (int i = 0; i < std::abs(p); ++i) res.word.push_back(p > 0 ? g : -g);
    }
    res.matrix = to_complex(word_matrix(rep, res.word));
    res.distance = target.distance(res.matrix);
    return res;
  }
  return std::nullopt;
}

}  // namespace anyon
