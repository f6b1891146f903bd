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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <complex>

namespace anyon {

/** Working precision, in bits, of every high-precision embedding. */
constexpr int kBigPrecisionBits = 256;

using BigReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<
        kBigPrecisionBits, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() : re(0), im(0) {}
  BigComplex(BigReal r, BigReal i = BigReal(0)) : re(std::move(r)), im(std::move(i)) {}

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re, -a.im); }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal n = b.re * b.re + b.im * b.im;
    return BigComplex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }

  BigComplex conj() const { return BigComplex(re, -im); }
  BigReal norm() const { return re * re + im * im; }
  BigReal abs() const { return boost::multiprecision::sqrt(norm()); }
  std::complex<double> to_double() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

/** e^{2 pi i k / m} at working precision. */
BigComplex big_unit_root(long k, long m);

/** Principal square root (branch cut on the negative real axis). */
BigComplex big_sqrt(const BigComplex& z);

}  // namespace anyon
