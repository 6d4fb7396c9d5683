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

#include "heraldq/metrics.h"

#include <array>
#include <cmath>

#include "gtest/gtest.h"
#include "heraldq/schemes.h"

using namespace heraldq;

TEST(metrics, identical_states) {
    const HybridState s = ideal_state(SchemeSpec::uniform(4, 2, 1));
    EXPECT_NEAR(fidelity(s, s), 1.0, 1e-15);
    EXPECT_NEAR(efficiency(s, s), 1.0, 1e-15);
    const MetricsReport r = evaluate_metrics(s, s);
    EXPECT_NEAR(r.entropy_bits, 2.0, 1e-12);
    EXPECT_NEAR(r.herald_failure, 0.0, 1e-15);
    ASSERT_EQ(r.schmidt.size(), 4u);
    for (double v : r.schmidt) {
        EXPECT_NEAR(v, 0.5, 1e-12);
    }
}

TEST(metrics, fidelity_ignores_norm_efficiency_does_not) {
    const HybridState s = ideal_state(SchemeSpec::uniform(4, 2, 0));
    const HybridState lossy = s.scaled(Complex(0, 0.9));
    EXPECT_NEAR(fidelity(lossy, s), 1.0, 1e-15);
    EXPECT_NEAR(efficiency(lossy, s), 0.81, 1e-15);
}

TEST(metrics, orthogonal_states) {
    const HybridState a = ideal_state(SchemeSpec::uniform(4, 2, 0));
    const HybridState b = ideal_state(SchemeSpec::uniform(4, 2, 1));
    EXPECT_NEAR(fidelity(a, b), 0.0, 1e-15);
    EXPECT_NEAR(efficiency(a, b), 0.0, 1e-15);
}

TEST(metrics, errors) {
    const HybridState s = ideal_state(SchemeSpec::uniform(4, 2, 0));
    EXPECT_THROW(fidelity(HybridState(s.layout_ptr()), s), DomainError);
    EXPECT_THROW(fidelity(s, s.scaled(2.0)), ConsistencyError);
    EXPECT_THROW(efficiency(s, ideal_state(SchemeSpec::uniform(4, 3, 0))), LayoutError);
    EXPECT_THROW(schmidt_spectrum(s, Cut{{"a", "a"}}), LayoutError);
    EXPECT_THROW(schmidt_spectrum(s, Cut{{"zz"}}), LayoutError);
    EXPECT_THROW(schmidt_spectrum(s, Cut{{}}), LayoutError);
}

TEST(metrics, product_state_has_no_entanglement) {
    auto layout = make_layout({"a1", "a2"}, {"a", "b"});
    const std::array<SpinInit, 2> init{SpinInit::GPlus, SpinInit::Minus};
    const HybridState s = new_state(layout, PolInit::HV, "a1", init);
    EXPECT_NEAR(entanglement_entropy(s, Cut::photon(*layout)), 0.0, 1e-12);
    EXPECT_NEAR(entanglement_entropy(s, Cut{{"b"}}), 0.0, 1e-12);
}

TEST(metrics, partial_cut_of_three_qudit_state) {
    // Cutting off one stationary qudit of a GHZ-type state still leaves 2 bits.
    const HybridState s = ideal_state(SchemeSpec::uniform(4, 3, 0));
    EXPECT_NEAR(entanglement_entropy(s, Cut{{"c", "d"}}), 2.0, 1e-12);
    // One emitter of a qudit pair carries a single bit.
    EXPECT_NEAR(entanglement_entropy(s, Cut{{"d"}}), 1.0, 1e-12);
}

TEST(metrics, entropy_from_spectrum) {
    EXPECT_DOUBLE_EQ(entropy_from_spectrum({1.0}), 0.0);
    EXPECT_NEAR(entropy_from_spectrum({std::sqrt(0.5), std::sqrt(0.5)}), 1.0, 1e-15);
    EXPECT_NEAR(entropy_from_spectrum({std::sqrt(0.75), std::sqrt(0.25), 0.0}), 0.8112781244591328, 1e-15);
}

TEST(metrics, report_json_fields) {
    const HybridState s = ideal_state(SchemeSpec::uniform(4, 2, 0));
    const auto j = to_json(evaluate_metrics(s.scaled(0.5), s));
    EXPECT_NEAR(j["fidelity"].get<double>(), 1.0, 1e-15);
    EXPECT_NEAR(j["efficiency"].get<double>(), 0.25, 1e-15);
    EXPECT_NEAR(j["herald_failure"].get<double>(), 0.75, 1e-15);
    EXPECT_EQ(j["schmidt"].size(), 4u);
    EXPECT_TRUE(j.contains("entropy_bits"));
}
