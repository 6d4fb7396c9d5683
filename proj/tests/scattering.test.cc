// Copyright 2026 The heraldq Authors
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

#include "heraldq/scattering.h"

#include <array>
#include <cmath>

#include "gtest/gtest.h"

using namespace heraldq;

namespace {

std::shared_ptr<const RegisterLayout> one_path_one_emitter() {
    return make_layout({"a1"}, {"a"});
}

}  // namespace

TEST(scattering, reflection_at_resonance) {
    const auto c = reflection_coefficient({40.0, 0.0});
    EXPECT_NEAR(c.r.real(), -40.0 / 41.0, 1e-15);
    EXPECT_EQ(c.r.imag(), 0.0);
    EXPECT_NEAR(c.r.real(), -0.975609756097561, 1e-15);
    EXPECT_EQ(c.t, 1.0 + c.r);
}

TEST(scattering, reflection_detuned) {
    const auto c = reflection_coefficient({25.0, 0.05});
    EXPECT_NEAR(c.r.real(), -0.952729937706119, 1e-14);
    EXPECT_NEAR(c.r.imag(), -0.091608647856358, 1e-14);
    EXPECT_EQ(c.t, 1.0 + c.r);
}

TEST(scattering, reflection_large_purcell_limit) {
    const auto c = reflection_coefficient({1e12, 0.0});
    EXPECT_NEAR(c.r.real(), -1.0, 1e-11);
    EXPECT_NEAR(std::abs(c.t), 0.0, 1e-11);
}

TEST(scattering, reflection_magnitude_bounded) {
    for (double p : {0.1, 1.0, 3.0, 40.0, 1e4}) {
        for (double d : {-1.0, -0.05, 0.0, 0.2, 3.0}) {
            EXPECT_LE(std::abs(reflection_coefficient({p, d}).r), 1.0) << p << " " << d;
        }
    }
}

TEST(scattering, params_validation) {
    EXPECT_THROW(reflection_coefficient({0.0, 0.0}), DomainError);
    EXPECT_THROW(reflection_coefficient({-1.0, 0.0}), DomainError);
    EXPECT_THROW(reflection_coefficient({std::nan(""), 0.0}), DomainError);
    EXPECT_THROW(reflection_coefficient({40.0, INFINITY}), DomainError);
    EXPECT_NO_THROW(ScatteringParams{}.validate());
}

TEST(scattering, union_on_plus_h) {
    auto layout = one_path_one_emitter();
    const std::array<SpinInit, 1> plus{SpinInit::Plus};
    const HybridState s = new_state(layout, PolInit::H, "a1", plus);
    const Complex r = reflection_coefficient({40.0, 0.0}).r;
    const HybridState out = union_scatter(s, "a", "a1", r);
    // |H>|+> -> -r |V>|->
    EXPECT_NEAR(std::abs(out.amplitude({Polarization::V, 0, 1}) - (-r)), 0, 1e-15);
    EXPECT_NEAR(out.norm_squared(), std::norm(r), 1e-15);
    EXPECT_NEAR(heralded_failure_probability(out), 0.0481856038072576, 1e-15);
}

TEST(scattering, union_in_g_basis) {
    auto layout = one_path_one_emitter();
    const Complex r = Complex(-0.8, 0.1);
    // r sigma_z(g): |g+> -> r|g+>, |g-> -> -r|g->, with an H<->V flip.
    const std::array<SpinInit, 1> gp{SpinInit::GPlus};
    const std::array<SpinInit, 1> gm{SpinInit::GMinus};
    const HybridState out_p = union_scatter(new_state(layout, PolInit::H, "a1", gp), "a", "a1", r);
    const HybridState want_p = new_state(layout, PolInit::V, "a1", gp).scaled(r);
    EXPECT_LT(out_p.max_abs_difference(want_p), 1e-15);
    const HybridState out_m = union_scatter(new_state(layout, PolInit::V, "a1", gm), "a", "a1", r);
    const HybridState want_m = new_state(layout, PolInit::H, "a1", gm).scaled(-r);
    EXPECT_LT(out_m.max_abs_difference(want_m), 1e-15);
}

TEST(scattering, union_leaves_other_paths) {
    auto layout = make_layout({"a1", "a2"}, {"a", "b"});
    const std::array<SpinInit, 2> plus{SpinInit::Plus, SpinInit::Plus};
    const HybridState s = new_state(layout, PolInit::HV, "a2", plus);
    const HybridState out = union_scatter(s, "b", "a1", Complex(-0.5));
    EXPECT_LT(out.max_abs_difference(s), 1e-15);
}

TEST(scattering, union_twice_gives_r_squared) {
    auto layout = one_path_one_emitter();
    const std::array<SpinInit, 1> minus{SpinInit::Minus};
    const HybridState s = new_state(layout, PolInit::HV, "a1", minus);
    const Complex r = reflection_coefficient({25.0, 0.05}).r;
    const HybridState out = union_scatter(union_scatter(s, 0, 0, r), 0, 0, r);
    EXPECT_LT(out.max_abs_difference(s.scaled(r * r)), 1e-15);
    EXPECT_NEAR(heralded_failure_probability(out), 1.0 - std::pow(std::abs(r), 4), 1e-15);
}

TEST(scattering, double_union_failure_probability_at_p40) {
    auto layout = one_path_one_emitter();
    const std::array<SpinInit, 1> plus{SpinInit::Plus};
    const Complex r = reflection_coefficient({40.0, 0.0}).r;
    const HybridState s = new_state(layout, PolInit::H, "a1", plus);
    const HybridState out = union_scatter(union_scatter(s, "a", "a1", r), "a", "a1", r);
    EXPECT_NEAR(heralded_failure_probability(out), 0.0940493552002452, 1e-15);
}

TEST(scattering, unknown_names_rejected) {
    auto layout = one_path_one_emitter();
    const std::array<SpinInit, 1> plus{SpinInit::Plus};
    const HybridState s = new_state(layout, PolInit::H, "a1", plus);
    EXPECT_THROW(union_scatter(s, "z", "a1", Complex(-1.0)), LayoutError);
    EXPECT_THROW(union_scatter(s, "a", "a9", Complex(-1.0)), LayoutError);
}

TEST(scattering, failure_probability_rejects_supernormal) {
    auto layout = one_path_one_emitter();
    const std::array<SpinInit, 1> plus{SpinInit::Plus};
    const HybridState s = new_state(layout, PolInit::H, "a1", plus).scaled(1.01);
    EXPECT_THROW(heralded_failure_probability(s), ConsistencyError);
    EXPECT_EQ(heralded_failure_probability(s.scaled(1.0 / 1.01)), 0.0);
}
