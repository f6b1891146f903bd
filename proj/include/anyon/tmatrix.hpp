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

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "anyon/bigcomplex.hpp"
#include "anyon/tower.hpp"

namespace anyon {

/** Dense square or rectangular matrix over a square-root tower, row-major. */
class TowerMatrix {
 public:
  TowerMatrix() = default;
  TowerMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static TowerMatrix identity(int n);
  static TowerMatrix diagonal(const std::vector<TowerNumber>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  TowerNumber& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const TowerNumber& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend TowerMatrix operator*(const TowerMatrix& x, const TowerMatrix& y);
  friend TowerMatrix operator+(const TowerMatrix& x, const TowerMatrix& y);
  friend TowerMatrix operator-(const TowerMatrix& x, const TowerMatrix& y);
  TowerMatrix scaled(const TowerNumber& s) const;
  TowerMatrix transpose() const;
  /** Gauss-Jordan elimination; throws ArithmeticError when singular. */
  TowerMatrix inverse() const;
  TowerNumber trace() const;
  bool is_diagonal() const;
  bool operator==(const TowerMatrix& o) const;
  bool operator!=(const TowerMatrix& o) const { return !(*this == o); }
  std::size_t hash() const;

  std::vector<std::complex<double>> embed() const;
  std::vector<BigComplex> embed_big() const;
  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<TowerNumber> a_;
};

}  // namespace anyon
