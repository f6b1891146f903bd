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


#include "anyon/braidrep.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "anyon/eqgen.hpp"
#include "anyon/errors.hpp"

namespace anyon {

std::string state_str(const FusionRing& ring, const BasisState& s) {
  std::string out = "(";
  bool first = true;
  for (const auto* part : {&s.t, &s.l}) {
    for (int x : *part) {
      if (!first) out += ",";
      out += ring.label_names()[x];
      first = false;
    }
  }
  return out + ")";
}

std::vector<BasisState> comp_basis(const FusionRing& ring, int a, int b, int m) {
  if (m < 3) throw DomainError("braid representations need at least 3 strands");
  if (a < 0 || a >= ring.rank() || b < 0 || b >= ring.rank()) throw DomainError("label out of range");
  const int r = m / 2;
  const bool odd = m % 2 == 1;
  const std::vector<int> pairs = ring.fuse(a, a);
  std::vector<BasisState> out;
  BasisState cur;
  cur.t.assign(r, 0);
  // chain[k] is l_k with l_0 = t_1; odd m stores l_1..l_{r-1}, even m l_1..l_{r-2}.
  std::function<void(int, int)> grow = [&](int k, int prev) {
    const int last = odd ? r - 1 : r - 2;
    if (k > last) {
      const int closing = odd ? a : cur.t[r - 1];
      if (ring.N(prev, closing, b)) out.push_back(cur);
      return;
    }
    for (int x : ring.fuse(prev, cur.t[k])) {
      cur.l.push_back(x);
      grow(k + 1, x);
      cur.l.pop_back();
    }
  };
  std::function<void(int)> pick = [&](int i) {
    if (i == r) {
      grow(1, cur.t[0]);
      return;
    }
    for (int x : pairs) {
      cur.t[i] = x;
      pick(i + 1);
    }
  };
  pick(0);
  std::sort(out.begin(), out.end(), [](const BasisState& x, const BasisState& y) { return y < x; });
  return out;
}

int BraidContext::Block::row(int e) const {
  auto it = std::find(rows.begin(), rows.end(), e);
  return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
}

int BraidContext::Block::col(int g) const {
  auto it = std::find(cols.begin(), cols.end(), g);
  return it == cols.end() ? -1 : static_cast<int>(it - cols.begin());
}

BraidContext::BraidContext(const FSymbolTable& table, int a, int b, int m)
    : table_(table), a_(a), b_(b), m_(m), r_(m / 2), basis_(comp_basis(table.ring(), a, b, m)) {
  for (int i = 0; i < dim(); ++i) index_[basis_[i]] = i;
}

const BraidContext::Block& BraidContext::block(int x, int y, int z, int w) const {
  auto key = std::make_tuple(x, y, z, w);
  auto it = blocks_.find(key);
  if (it != blocks_.end()) return it->second;
  Block blk;
  std::tie(blk.rows, blk.cols) = f_block_labels(ring(), x, y, z, w);
  if (blk.rows.size() != blk.cols.size()) throw DataError("non-square F-block");
  const int n = static_cast<int>(blk.rows.size());
  blk.f = TowerMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) blk.f(i, k) = table_.F(x, y, z, w, blk.rows[i], blk.cols[k]);
  try {
    blk.inv = blk.f.inverse();
  } catch (const ArithmeticError&) {
    throw DataError("singular F-block");
  }
  return blocks_.emplace(key, std::move(blk)).first->second;
}

TowerNumber BraidContext::finv(int x, int y, int z, int w, int g, int e) const {
  const Block& blk = block(x, y, z, w);
  int i = blk.col(g), k = blk.row(e);
  if (i < 0 || k < 0) return TowerNumber();
  return blk.inv(i, k);
}

TowerNumber BraidContext::r_aa(int c) const { return TowerNumber(ring().R(a_, a_, c)); }

std::vector<int> BraidContext::chain(const BasisState& s) const {
  std::vector<int> ch{s.t[0]};
  ch.insert(ch.end(), s.l.begin(), s.l.end());
  if (m_ % 2 == 0) ch.push_back(b_);
  return ch;
}

BasisState BraidContext::from_chain(std::vector<int> t, const std::vector<int>& ch) const {
  BasisState s;
  s.t = std::move(t);
  const std::size_t n = m_ % 2 == 0 ? ch.size() - 1 : ch.size();
  s.l.assign(ch.begin() + 1, ch.begin() + static_cast<long>(n));
  return s;
}

int BraidContext::state_index(const BasisState& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

TowerMatrix BraidContext::sigma_odd(int j) const {
  if (j < 1 || 2 * j - 1 > m_ - 1) throw DomainError("odd generator index out of range");
  std::vector<TowerNumber> d;
  d.reserve(basis_.size());
  for (const auto& s : basis_) d.push_back(r_aa(s.t[j - 1]));
  return TowerMatrix::diagonal(d);
}

const TowerMatrix& BraidContext::local_b3(int c) const {
  auto it = b3_.find(c);
  if (it != b3_.end()) return it->second;
  const auto basis = comp_basis(ring(), a_, c, 3);
  const int n = static_cast<int>(basis.size());
  TowerMatrix s(n, n);
  const Block& blk = block(a_, a_, a_, c);
  // |(aa)_y a> = sum_e F_{ye} |a (aa)_e>, braid on e, then back with F^{-1}.
  for (int k = 0; k < n; ++k) {
    const int y = basis[k].t[0];
    for (int i = 0; i < n; ++i) {
      const int x = basis[i].t[0];
      TowerNumber acc;
      for (int e : blk.cols) {
        TowerNumber fy = table_.F(a_, a_, a_, c, y, e);
        if (fy.is_zero()) continue;
        TowerNumber fi = finv(a_, a_, a_, c, e, x);
        if (!fi.is_zero()) acc += fy * r_aa(e) * fi;
      }
      s(i, k) = acc;
    }
  }
  b3_basis_[c] = basis;
  return b3_.emplace(c, std::move(s)).first->second;
}

const TowerMatrix& BraidContext::local_b4(int c) const {
  auto it = b4_.find(c);
  if (it != b4_.end()) return it->second;
  const auto basis = comp_basis(ring(), a_, c, 4);
  const int n = static_cast<int>(basis.size());
  TowerMatrix s(n, n);
  for (int k = 0; k < n; ++k) {
    const int y = basis[k].t[0], yp = basis[k].t[1];
    for (int i = 0; i < n; ++i) {
      const int x = basis[i].t[0], xp = basis[i].t[1];
      TowerNumber acc;
      for (int e : ring().fuse(a_, yp)) {
        TowerNumber f1 = table_.F(a_, a_, yp, c, y, e);
        if (f1.is_zero()) continue;
        TowerNumber f4 = finv(a_, a_, xp, c, e, x);
        if (f4.is_zero()) continue;
        for (int d : ring().fuse(a_, a_)) {
          TowerNumber f2 = finv(a_, a_, a_, e, yp, d);
          if (f2.is_zero()) continue;
          TowerNumber f3 = table_.F(a_, a_, a_, e, d, xp);
          if (f3.is_zero()) continue;
          acc += f1 * f2 * r_aa(d) * f3 * f4;
        }
      }
      s(i, k) = acc;
    }
  }
  b4_basis_[c] = basis;
  return b4_.emplace(c, std::move(s)).first->second;
}

TowerMatrix BraidContext::sigma_even(int j) const {
  if (j < 1 || 2 * j > m_ - 1) throw DomainError("even generator index out of range");
  const int n = dim();
  TowerMatrix out(n, n);
  const bool tail = m_ % 2 == 1 && j == r_;
  for (int k = 0; k < n; ++k) {
    const BasisState& s = basis_[k];
    const std::vector<int> ch = chain(s);
    auto emit = [&](const std::vector<int>& t, const std::vector<int>& c2, const TowerNumber& v) {
      if (v.is_zero()) return;
      int i = state_index(from_chain(t, c2));
      if (i < 0) throw DataError("braid image leaves the computational basis");
      out(i, k) += v;
    };
    if (tail) {
      // Pair r and the unpaired a share the B_3 block at root c.
      if (r_ == 1) {
        const TowerMatrix& loc = local_b3(b_);
        const auto& lb = b3_basis_.at(b_);
        const int kk = static_cast<int>(std::find(lb.begin(), lb.end(), BasisState{{s.t[0]}, {}}) - lb.begin());
        for (int i = 0; i < static_cast<int>(lb.size()); ++i) emit(lb[i].t, {lb[i].t[0]}, loc(i, kk));
        continue;
      }
      const int ls = ch[r_ - 2], mid = ch[r_ - 1], tr = s.t[r_ - 1];
      for (int c : ring().fuse(tr, a_)) {
        TowerNumber f1 = table_.F(ls, tr, a_, b_, mid, c);
        if (f1.is_zero()) continue;
        const TowerMatrix& loc = local_b3(c);
        const auto& lb = b3_basis_.at(c);
        const int kk = static_cast<int>(std::find(lb.begin(), lb.end(), BasisState{{tr}, {}}) - lb.begin());
        if (kk >= static_cast<int>(lb.size())) continue;
        for (int i = 0; i < static_cast<int>(lb.size()); ++i) {
          if (loc(i, kk).is_zero()) continue;
          const int u = lb[i].t[0];
          std::vector<int> t = s.t;
          t[r_ - 1] = u;
          for (int f : block(ls, u, a_, b_).rows) {
            std::vector<int> c2 = ch;
            c2[r_ - 1] = f;
            emit(t, c2, f1 * loc(i, kk) * finv(ls, u, a_, b_, c, f));
          }
        }
      }
      continue;
    }
    const int tj = s.t[j - 1], tj1 = s.t[j];
    const BasisState pair{{tj, tj1}, {}};
    if (j == 1) {
      // Pairs 1 and 2 fuse directly to l_1.
      const int root = ch[1];
      const TowerMatrix& loc = local_b4(root);
      const auto& lb = b4_basis_.at(root);
      const int kk = static_cast<int>(std::find(lb.begin(), lb.end(), pair) - lb.begin());
      for (int i = 0; i < static_cast<int>(lb.size()); ++i) {
        std::vector<int> t = s.t;
        t[0] = lb[i].t[0];
        t[1] = lb[i].t[1];
        std::vector<int> c2 = ch;
        c2[0] = t[0];
        emit(t, c2, loc(i, kk));
      }
      continue;
    }
    const int ls = ch[j - 2], mid = ch[j - 1], root = ch[j];
    for (int c : ring().fuse(tj, tj1)) {
      TowerNumber f1 = table_.F(ls, tj, tj1, root, mid, c);
      if (f1.is_zero()) continue;
      const TowerMatrix& loc = local_b4(c);
      const auto& lb = b4_basis_.at(c);
      const int kk = static_cast<int>(std::find(lb.begin(), lb.end(), pair) - lb.begin());
      if (kk >= static_cast<int>(lb.size())) continue;
      for (int i = 0; i < static_cast<int>(lb.size()); ++i) {
        if (loc(i, kk).is_zero()) continue;
        std::vector<int> t = s.t;
        t[j - 1] = lb[i].t[0];
        t[j] = lb[i].t[1];
        for (int f : block(ls, t[j - 1], t[j], root).rows) {
          std::vector<int> c2 = ch;
          c2[j - 1] = f;
          emit(t, c2, f1 * loc(i, kk) * finv(ls, t[j - 1], t[j], root, c, f));
        }
      }
    }
  }
  return out;
}

TowerMatrix BraidContext::sigma(int i) const {
  if (i < 1 || i > m_ - 1) throw DomainError("generator index out of range");
  return i % 2 == 1 ? sigma_odd((i + 1) / 2) : sigma_even(i / 2);
}

TowerMatrix sigma2_b3(const FSymbolTable& table, int a, int b) {
  BraidContext ctx(table, a, b, 3);
  return ctx.local_b3(b);
}

TowerMatrix sigma2_b4(const FSymbolTable& table, int a, int b) {
  BraidContext ctx(table, a, b, 4);
  return ctx.local_b4(b);
}

const TowerMatrix& BraidRep::generator(int i) const {
  if (i == 0 || std::abs(i) > static_cast<int>(generators.size())) throw DomainError("generator index out of range");
  return i > 0 ? generators[i - 1] : inverses[-i - 1];
}

BraidRep build_rep(const FSymbolTable& table, int a, int b, int m) {
  BraidContext ctx(table, a, b, m);
  if (ctx.dim() == 0) throw DomainError("empty computational basis: the root is not reachable");
  BraidRep rep;
  rep.ring = table.ring();
  rep.a = a;
  rep.b = b;
  rep.m = m;
  rep.basis = ctx.basis();
  for (int i = 1; i < m; ++i) {
    rep.generators.push_back(ctx.sigma(i));
    rep.inverses.push_back(rep.generators.back().inverse());
  }
  return rep;
}

nlohmann::json complex_to_json(const BigComplex& z, int digits) {
  auto fmt = [&](const BigReal& x) { return x.str(digits, std::ios_base::fmtflags(0)); };
  return nlohmann::json::array({fmt(z.re), fmt(z.im)});
}

nlohmann::json rep_to_json(const BraidRep& rep, int digits) {
  nlohmann::json j;
  j["ring"] = rep.ring.name();
  j["anyon"] = rep.ring.label_names()[rep.a];
  j["root"] = rep.ring.label_names()[rep.b];
  j["strands"] = rep.m;
  j["basis"] = nlohmann::json::array();
  for (const auto& s : rep.basis) j["basis"].push_back(state_str(rep.ring, s));
  j["generators"] = nlohmann::json::array();
  for (const auto& g : rep.generators) {
    nlohmann::json rows = nlohmann::json::array();
    const auto e = g.embed_big();
    for (int r = 0; r < g.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < g.cols(); ++c) row.push_back(complex_to_json(e[static_cast<std::size_t>(r) * g.cols() + c], digits));
      rows.push_back(std::move(row));
    }
    j["generators"].push_back(std::move(rows));
  }
  return j;
}

std::string rep_to_text(const BraidRep& rep, int digits) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rep.basis.size(); ++i) os << (i ? " " : "") << state_str(rep.ring, rep.basis[i]);
  os << "\n";
  os.precision(digits);
  for (std::size_t g = 0; g < rep.generators.size(); ++g) {
    os << "sigma_" << g + 1 << ":\n";
    const TowerMatrix& m = rep.generators[g];
    const auto e = m.embed();
    for (int r = 0; r < m.rows(); ++r) {
      os << " ";
      for (int c = 0; c < m.cols(); ++c) {
        const auto z = e[static_cast<std::size_t>(r) * m.cols() + c];
        os << " " << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace anyon
