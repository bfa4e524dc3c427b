// Copyright 2026 The cvtele Authors
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

#ifndef CVTELE_SPECFUN_H
#define CVTELE_SPECFUN_H

namespace cvtele::specfun {

/// Value of an iterative special-function evaluation together with whether the
/// iteration met its tolerance. `value` is finite whenever `converged` is set.
struct SpecFunResult {
    double value;
    bool converged;
};

/// Modified Bessel function of the first kind, order zero.
///
/// Power series below |x| = 15, Hankel asymptotic expansion above. Relative
/// error is below 1e-12 for |x| <= 700. Throws std::overflow_error once the
/// result no longer fits in a double (|x| > ~713.9) and std::domain_error for
/// non-finite input.
double bessel_i0(double x);

/// Modified Bessel function of the first kind, order one. Odd in x; same
/// accuracy and error behaviour as bessel_i0.
double bessel_i1(double x);

/// Exponentially scaled exp(-|x|) * I0(x). Never overflows.
double bessel_i0e(double x);

/// Exponentially scaled exp(-|x|) * I1(x). Never overflows.
double bessel_i1e(double x);

/// 1 - exp(-z) I0(z) for z >= 0, accurate also when z is tiny.
double one_minus_i0e(double z);

/// Raw Halley iteration for the principal Lambert W branch. Starts from
/// ln(1 + x), caps at 50 iterations and stops once the relative step is
/// below 1e-14.
SpecFunResult lambert_w0_halley(double x);

/// Principal branch W0(x) for x >= 0: the w >= 0 with w * exp(w) = x.
/// Throws std::domain_error for x < 0 or NaN.
double lambert_w0(double x);

/// W0(exp(log_x)), evaluated without forming exp(log_x) so arguments far
/// beyond the double range are fine.
double lambert_w0_of_exp(double log_x);

}  // namespace cvtele::specfun

#endif  // CVTELE_SPECFUN_H
