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

#include "ebc/statistics.h"

#include <boost/math/distributions/binomial.hpp>
#include <cmath>
#include <stdexcept>

namespace ebc {

Interval wilson_interval(size_t successes, size_t trials, double z) {
    if (trials == 0) {
        throw std::invalid_argument("wilson_interval: no trials");
    }
    if (successes > trials) {
        throw std::invalid_argument("wilson_interval: more successes than trials");
    }
    double nn = static_cast<double>(trials);
    double p = static_cast<double>(successes) / nn;
    double z2 = z * z;
    double denom = 1 + z2 / nn;
    double center = (p + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double binomial_cdf(size_t n, double p, size_t k) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("binomial_cdf: p must lie in [0, 1]");
    }
    if (k >= n) {
        return 1.0;
    }
    if (p == 0) {
        return 1.0;
    }
    if (p == 1) {
        return 0.0;
    }
    boost::math::binomial_distribution<double> dist(static_cast<double>(n), p);
    return boost::math::cdf(dist, static_cast<double>(k));
}

double proportion_sigma(double p, size_t trials) {
    if (trials == 0) {
        throw std::invalid_argument("proportion_sigma: no trials");
    }
    return std::sqrt(std::max(0.0, p * (1 - p)) / static_cast<double>(trials));
}

}  // namespace ebc
