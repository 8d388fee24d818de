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

#include "ebc/params.h"

#include "gtest/gtest.h"

using namespace ebc;

namespace {

ProtocolParams demo(size_t d) {
    return ProtocolParams{.n = 16, .m = 8, .t = 1, .gamma = 0, .k = 2, .d = d, .ell = 1};
}

}  // namespace

TEST(params, accept_threshold_floors) {
    ASSERT_EQ(demo(10).accept_threshold(), 2u);
    ProtocolParams p{.n = 64, .m = 8, .t = 0, .gamma = 0.1, .k = 2, .d = 42, .ell = 1};
    ASSERT_EQ(p.accept_threshold(), 6u);
    p.t = 1;
    p.gamma = 0;
    ASSERT_EQ(p.accept_threshold(), 8u);
    // 0.1 * 70 is 7.000000000000001 or 6.999999999999999 depending on rounding.
    ProtocolParams q{.n = 70, .m = 1, .t = 0, .gamma = 0.1, .k = 1, .d = 70, .ell = 1};
    ASSERT_EQ(q.accept_threshold(), 7u);
}

TEST(params, validate_distance_requirement) {
    ValidationReport ok = validate_params(demo(10));
    ASSERT_TRUE(ok.ok()) << ok.summary();
    ValidationReport bad = validate_params(demo(8));
    ASSERT_FALSE(bad.ok());
    ASSERT_NE(bad.summary().find("d=8"), std::string::npos);
    ASSERT_TRUE(validate_params(demo(9)).ok());
}

TEST(params, zero_leak_degenerates_to_positive_distance) {
    ProtocolParams p{.n = 4, .m = 1, .t = 0, .gamma = 0, .k = 1, .d = 1, .ell = 1};
    ASSERT_TRUE(validate_params(p).ok());
}

TEST(params, structural_violations_are_reported_not_thrown) {
    ProtocolParams p{.n = 15, .m = 8, .t = 9, .gamma = 1.5, .k = 20, .d = 1, .ell = 30};
    ValidationReport r = validate_params(p);
    ASSERT_GE(r.violations.size(), 5u);
    ASSERT_NE(r.summary().find("not divisible"), std::string::npos);
}

TEST(params, gv_regime_flag) {
    ASSERT_FALSE(validate_params(demo(10)).gv_regime);  // 1/8 > 0.083
    ProtocolParams p{.n = 64, .m = 16, .t = 1, .gamma = 0, .k = 2, .d = 42, .ell = 1};
    ASSERT_TRUE(validate_params(p).gv_regime);
}

TEST(params, valid_params_imply_binding_geometry) {
    for (size_t n = 4; n <= 64; n += 4) {
        for (size_t m : {1u, 2u, 4u}) {
            for (size_t t = 0; t <= m; t++) {
                for (double gamma : {0.0, 0.02, 0.05}) {
                    ProtocolParams p{.n = n, .m = m, .t = t, .gamma = gamma, .k = 1, .d = n, .ell = 1};
                    if (!validate_params(p).ok()) {
                        continue;
                    }
                    size_t thr = p.accept_threshold();
                    ASSERT_GT(p.d, 4 * thr);
                    ASSERT_GT(p.d - 2 * thr, 2 * thr);
                }
            }
        }
    }
}

TEST(params, derived_rates) {
    ProtocolParams p{.n = 100, .m = 10, .t = 1, .gamma = 0.05, .k = 40, .d = 61, .ell = 10};
    ASSERT_DOUBLE_EQ(p.delta_c(), 0.1);
    ASSERT_NEAR(p.delta_prime(), (40.0 - 15.0 - 10.0) / 100.0, 1e-12);
    ASSERT_TRUE(validate_params(p).asymptotic_relation);
    ASSERT_FALSE(validate_params(demo(10)).asymptotic_relation);
}

TEST(params, flag_names_round_trip) {
    for (Flag f : {Flag::success, Flag::failure, Flag::erase}) {
        ASSERT_EQ(parse_flag(to_string(f)), f);
    }
    ASSERT_THROW(parse_flag("maybe"), std::invalid_argument);
}
