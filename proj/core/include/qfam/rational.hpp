// Copyright 2026 The qfam Authors
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
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qfam {

// Arbitrary-precision rational, always stored in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline double rational_to_double(const Rational& r) {
  return static_cast<double>(r);
}

/// Complex number with exact rational real and imaginary parts.
/// All coefficient arithmetic in the engine runs over this field; no
/// floating point ever enters a symbolic verdict.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}  // NOLINT: implicit by design
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  std::complex<double> to_complex() const {
    return {rational_to_double(re_), rational_to_double(im_)};
  }

  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b) {
    return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend GaussianRational operator-(const GaussianRational& a,
                                    const GaussianRational& b) {
    return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return GaussianRational(-a.re_, -a.im_);
  }
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b) {
    return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_,
                            a.re_ * b.im_ + a.im_ * b.re_);
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Canonical rendering, frozen for golden files:
  //   real only        ->  "2", "-1/2"
  //   imaginary only   ->  "i", "-i", "2i", "-2/3i"
  //   mixed            ->  "(1+i)", "(-1/2-2i)"
  std::string to_string() const {
    if (im_ == 0) return rational_to_string(re_);
    const Rational abs_im = im_ < 0 ? Rational(-im_) : im_;
    const std::string im_body =
        abs_im == 1 ? "i" : rational_to_string(abs_im) + "i";
    if (re_ == 0) return (im_ < 0 ? "-" : "") + im_body;
    return "(" + rational_to_string(re_) + (im_ < 0 ? "-" : "+") + im_body +
           ")";
  }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace qfam
