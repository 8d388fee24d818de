// Copyright 2026 The ebcsim Authors
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

#ifndef EBC_STATISTICS_H
#define EBC_STATISTICS_H

#include <cstddef>

namespace ebc {

/// Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

struct Interval {
    double low = 0;
    double high = 0;
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(size_t successes, size_t trials, double z = kZ99);

/// Pr[Bin(n, p) <= k].
double binomial_cdf(size_t n, double p, size_t k);

/// Standard error of a proportion estimate, sqrt(p (1 - p) / trials).
double proportion_sigma(double p, size_t trials);

}  // namespace ebc

#endif
