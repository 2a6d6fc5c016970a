// Copyright 2026 The stabsep Authors
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

#include <complex>

#include "gtest/gtest.h"

#include "stabsep/scalar/matrix.h"
#include "stabsep/util/errors.h"

using namespace stabsep;

namespace {

// Floating-point oracle for an element of Q(τ).
std::complex<double> approx(const CycRat &z) {
    std::complex<double> r = 0;
    double pi = std::acos(-1.0);
    for (size_t j = 0; j < z.coeffs().size(); j++) {
        r += z.coeffs()[j].get_d() * std::polar(1.0, 2 * pi * j / z.order());
    }
    return r;
}

}  // namespace

TEST(rational, text_roundtrip) {
    EXPECT_EQ(rational_str(rat(2, 4)), "1/2");
    EXPECT_EQ(rational_str(rat(-3)), "-3");
    EXPECT_EQ(parse_rational("5/10"), rat(1, 2));
    EXPECT_EQ(parse_rational("-7"), rat(-7));
    EXPECT_THROW(parse_rational("1/0"), InvalidInput);
    EXPECT_THROW(parse_rational("x"), InvalidInput);
    EXPECT_THROW(parse_rational("1/-2"), InvalidInput);
}

TEST(cyclotomic, roots_and_reduction) {
    for (int order : {4, 3, 5, 7}) {
        for (int k = 0; k < 2 * order; k++) {
            CycRat r = CycRat::root(order, k);
            EXPECT_EQ(r.root_exponent(), k % order);
            auto a = approx(r);
            double pi = std::acos(-1.0);
            EXPECT_NEAR(a.real(), std::cos(2 * pi * k / order), 1e-12);
            EXPECT_NEAR(a.imag(), std::sin(2 * pi * k / order), 1e-12);
            EXPECT_EQ(r * CycRat::root(order, -k), CycRat(order, 1));
            EXPECT_EQ(r.conj(), CycRat::root(order, -k));
        }
        CycRat sum(order);
        for (int k = 0; k < order; k++) {
            sum += CycRat::root(order, k);
        }
        EXPECT_TRUE(sum.is_zero());
    }
}

TEST(cyclotomic, field_operations_match_float_oracle) {
    for (int order : {4, 3, 5}) {
        CycRat a = CycRat::from_powers(order, {rat(1, 2), rat(-3), rat(2, 7)});
        CycRat b = CycRat::from_powers(order, {rat(5), rat(0), rat(1, 3), rat(1)});
        auto fa = approx(a), fb = approx(b);
        EXPECT_LT(std::abs(approx(a * b) - fa * fb), 1e-9);
        EXPECT_LT(std::abs(approx(a + b) - (fa + fb)), 1e-9);
        EXPECT_LT(std::abs(approx(a.conj()) - std::conj(fa)), 1e-9);
        EXPECT_EQ(a * a.inverse(), CycRat(order, 1));
        EXPECT_EQ((a / b) * b, a);
        EXPECT_LT(std::abs(approx(a.norm_sq()) - std::norm(fa)), 1e-9);
    }
    EXPECT_THROW(CycRat(4).inverse(), InvalidInput);
    EXPECT_THROW(CycRat(4, 1) + CycRat(3, 1), DimensionMismatch);
    EXPECT_THROW(CycRat(6), InvalidInput);
}

TEST(cyclotomic, agnostic_zero) {
    CycRat z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z, CycRat(4));
    z += CycRat::root(3, 1);
    EXPECT_EQ(z.order(), 3);
}

TEST(matrix, products_and_partial_trace) {
    CycMatrix a(2, 2, 4);
    a(0, 1) = CycRat::root(4, 1);
    a(1, 0) = CycRat::root(4, 3);
    EXPECT_TRUE(a.is_hermitian());
    EXPECT_EQ(a * a, CycMatrix::identity(2, 4));
    CycMatrix k = a.kron(CycMatrix::identity(2, 4));
    EXPECT_EQ(partial_trace(k, 2, 2, true), a * rat(2));
    EXPECT_EQ(partial_trace(k, 2, 2, false), CycMatrix::identity(2, 4) * CycRat(4));
    EXPECT_EQ(k.trace(), CycRat(4));
}

TEST(matrix, scaled_equality) {
    // Hadamard as d^{-1/2} [[1,1],[1,-1]] squares to identity.
    CycMatrix h(2, 2, 4);
    h(0, 0) = CycRat(4, 1);
    h(0, 1) = CycRat(4, 1);
    h(1, 0) = CycRat(4, 1);
    h(1, 1) = CycRat(4, -1);
    ScaledMatrix sh(h, -1, 2);
    EXPECT_EQ(sh * sh, ScaledMatrix(CycMatrix::identity(2, 4), 0, 2));
    EXPECT_NE(sh, ScaledMatrix(h, 1, 2));
    EXPECT_EQ(ScaledMatrix(h * rat(2), -3, 2), sh);
    auto ph = equal_up_to_phase(ScaledMatrix(h * CycRat::root(4, 1), -1, 2), sh);
    ASSERT_TRUE(ph.has_value());
    EXPECT_EQ(ph->value, CycRat::root(4, 1));
    EXPECT_FALSE(equal_up_to_phase(ScaledMatrix(h, 0, 2), sh).has_value());
}

TEST(matrix, sqrt_d_absorbed_for_d_1_mod_4) {
    auto s = sqrt_d_in_field(5);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s * *s, CycRat(5, 5));
    EXPECT_FALSE(sqrt_d_in_field(3).has_value());
    ScaledScalar a{CycRat(5, 1), 1, 5};
    ScaledScalar b{*s, 0, 5};
    EXPECT_EQ(a, b);
}
