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

#include "anyon/bigcomplex.hpp"

#include <boost/math/constants/constants.hpp>

namespace anyon {

BigComplex big_unit_root(long k, long m) {
  k %= m;
  if (k < 0) k += m;
  if (k == 0) return BigComplex(BigReal(1));
  // Exact quarter turns avoid rounding in the most common phases.
  if (4 * k == m) return BigComplex(BigReal(0), BigReal(1));
  if (2 * k == m) return BigComplex(BigReal(-1));
  if (4 * k == 3 * m) return BigComplex(BigReal(0), BigReal(-1));
  BigReal angle = 2 * boost::math::constants::pi<BigReal>() * BigReal(k) / BigReal(m);
  return BigComplex(boost::multiprecision::cos(angle), boost::multiprecision::sin(angle));
}

BigComplex big_sqrt(const BigComplex& z) {
  if (z.re == 0 && z.im == 0) return BigComplex();
  BigReal r = z.abs();
  BigReal re = boost::multiprecision::sqrt((r + z.re) / 2);
  BigReal im = boost::multiprecision::sqrt((r - z.re) / 2);
  if (z.im < 0) im = -im;
  return BigComplex(re, im);
}

}  // namespace anyon
