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

#include "anyon/tmatrix.hpp"

#include <sstream>
#include <utility>

#include "anyon/errors.hpp"

namespace anyon {

TowerMatrix TowerMatrix::identity(int n) {
  TowerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = TowerNumber(1);
  return m;
}

TowerMatrix TowerMatrix::diagonal(const std::vector<TowerNumber>& d) {
  int n = static_cast<int>(d.size());
  TowerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

TowerMatrix operator*(const TowerMatrix& x, const TowerMatrix& y) {
  if (x.cols_ != y.rows_) throw DomainError("matrix shape mismatch in product");
  TowerMatrix r(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k) {
      const TowerNumber& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < y.cols_; ++j) {
        const TowerNumber& ykj = y(k, j);
        if (!ykj.is_zero()) r(i, j) += xik * ykj;
      }
    }
  return r;
}

TowerMatrix operator+(const TowerMatrix& x, const TowerMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DomainError("matrix shape mismatch in sum");
  TowerMatrix r = x;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
  return r;
}

TowerMatrix operator-(const TowerMatrix& x, const TowerMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DomainError("matrix shape mismatch in difference");
  TowerMatrix r = x;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
  return r;
}

TowerMatrix TowerMatrix::scaled(const TowerNumber& s) const {
  TowerMatrix r = *this;
  for (auto& v : r.a_)
    if (!v.is_zero()) v *= s;
  return r;
}

TowerMatrix TowerMatrix::transpose() const {
  TowerMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

TowerMatrix TowerMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  const int n = rows_;
  TowerMatrix a = *this;
  TowerMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!a(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw ArithmeticError("singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    TowerNumber p = a(col, col).inv();
    for (int j = 0; j < n; ++j) {
      if (!a(col, j).is_zero()) a(col, j) *= p;
      if (!inv(col, j).is_zero()) inv(col, j) *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      TowerNumber f = a(r, col);
      for (int j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

TowerNumber TowerMatrix::trace() const {
  TowerNumber t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool TowerMatrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool TowerMatrix::operator==(const TowerMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

std::size_t TowerMatrix::hash() const {
  std::size_t h = static_cast<std::size_t>(rows_) * 31 + static_cast<std::size_t>(cols_);
  for (const auto& v : a_) h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::vector<std::complex<double>> TowerMatrix::embed() const {
  std::vector<std::complex<double>> out;
  out.reserve(a_.size());
  for (const auto& v : a_) out.push_back(v.embed());
  return out;
}

std::vector<BigComplex> TowerMatrix::embed_big() const {
  std::vector<BigComplex> out;
  out.reserve(a_.size());
  for (const auto& v : a_) out.push_back(v.embed_big());
  return out;
}

std::string TowerMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",\n [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace anyon
