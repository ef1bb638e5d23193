// Copyright 2026 The framelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace framelab {

/// Neumaier (improved Kahan-Babuska) accumulation. Results depend only on the
/// order of add() calls, never on thread count.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) noexcept {
    if constexpr (std::is_floating_point_v<T>) {
      accumulate(sum_, carry_, x);
    } else {
      auto re = sum_.real(), re_c = carry_.real();
      auto im = sum_.imag(), im_c = carry_.imag();
      accumulate(re, re_c, x.real());
      accumulate(im, im_c, x.imag());
      sum_ = T(re, im);
      carry_ = T(re_c, im_c);
    }
  }

  CompensatedSum& operator+=(T x) noexcept {
    add(x);
    return *this;
  }

  T value() const noexcept { return sum_ + carry_; }

 private:
  template <typename R>
  static void accumulate(R& acc, R& carry, R x) noexcept {
    const R t = acc + x;
    if (std::abs(acc) >= std::abs(x)) {
      carry += (acc - t) + x;
    } else {
      carry += (x - t) + acc;
    }
    acc = t;
  }

  T sum_{};
  T carry_{};
};

}  // namespace framelab
