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

#include <Eigen/Dense>
#include <complex>
#include <numbers>

#include "gtest/gtest.h"
#include "oracle.h"

#include "stabsep/channels/channel.h"
#include "stabsep/util/errors.h"

using namespace stabsep;

namespace {

CycMatrix unit(uint64_t dim, int order, uint64_t a, uint64_t b) {
    CycMatrix m(dim, dim, order);
    m(a, b) = CycRat(order, 1);
    return m;
}

CycMatrix filled(uint64_t dim, int order, const Rational &v) {
    CycMatrix m(dim, dim, order);
    for (uint64_t a = 0; a < dim; a++) {
        for (uint64_t b = 0; b < dim; b++) {
            m(a, b) = CycRat(order, v);
        }
    }
    return m;
}

// Oracle σ for Λ: built from digit vectors, rank of {x, y} decided by brute force.
Rational lambda_entry(uint64_t x, uint64_t y, size_t n, int d) {
    uint64_t dim = oracle::ipow(d, n);
    if (x == 0 || y == 0) {
        return 0;
    }
    if (x == y) {
        return rat(1, (long)dim - 1);
    }
    auto vx = oracle::digits(x, n, d), vy = oracle::digits(y, n, d);
    for (int t = 0; t < d; t++) {
        std::vector<int> tx(n);
        for (size_t i = 0; i < n; i++) {
            tx[i] = (t * vx[i]) % d;
        }
        if (tx == vy) {
            return 0;
        }
    }
    return rat(1, d * ((long)dim - 1));
}

std::complex<double> to_complex(const CycRat &z) {
    std::complex<double> s = 0;
    const auto &c = z.coeffs();
    for (size_t k = 0; k < c.size(); k++) {
        s += c[k].get_d() * std::polar(1.0, 2 * std::numbers::pi * (double)k / z.order());
    }
    return s;
}

double min_eigenvalue(const CycMatrix &m) {
    Eigen::MatrixXcd a(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            a(i, j) = to_complex(m(i, j));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    return es.eigenvalues().minCoeff();
}

}  // namespace

TEST(channels, lambda_two_qubit_examples) {
    Channel l = lambda_channel(2, 2);
    EXPECT_EQ(l.unit_image(0, 0), filled(4, 4, rat(1, 4)));
    EXPECT_EQ(l.unit_image(1, 2), unit(4, 4, 1, 2) * rat(1, 2));
    CycMatrix s = lambda_sigma(2, 2);
    long tab[4][4] = {{0, 0, 0, 0}, {0, 2, 1, 1}, {0, 1, 2, 1}, {0, 1, 1, 2}};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            EXPECT_EQ(s(i, j), CycRat(4, rat(tab[i][j], 6)));
        }
    }
}

TEST(channels, lambda_sigma_matches_oracle) {
    for (auto [n, d] : std::vector<std::pair<size_t, int>>{{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {1, 5}, {2, 5}}) {
        CycMatrix s = lambda_sigma(n, d);
        uint64_t dim = oracle::ipow(d, n);
        for (uint64_t x = 0; x < dim; x++) {
            for (uint64_t y = 0; y < dim; y++) {
                ASSERT_EQ(s(x, y), CycRat(tau_order(d), lambda_entry(x, y, n, d))) << n << " " << d;
            }
        }
        EXPECT_NO_THROW(validate_ad_sigma(s, n, d));
    }
}

TEST(channels, qubit_kraus_form_equals_embedding) {
    for (size_t n = 1; n <= 4; n++) {
        Channel k = lambda_channel(n, 2);
        ASSERT_EQ(k.form(), Channel::Form::kraus);
        EXPECT_TRUE(kraus_complete(k));
        Channel e = ad_embed(lambda_sigma(n, 2), n, 2);
        EXPECT_TRUE(channels_equal(k, e)) << n;
        EXPECT_TRUE(channels_equal(k.to_superop(), e)) << n;
    }
}

TEST(channels, lambda_is_cptp_ad) {
    for (auto [n, d] : std::vector<std::pair<size_t, int>>{{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {1, 5}}) {
        Channel l = lambda_channel(n, d);
        EXPECT_TRUE(is_tp(l));
        EXPECT_TRUE(is_ad(l));
        CycMatrix j = choi(l);
        EXPECT_TRUE(j.is_hermitian());
        EXPECT_EQ(j.trace(), CycRat(tau_order(d), 1));
        uint64_t din = l.dim_in();
        EXPECT_EQ(partial_trace(j, din, din, false),
                  CycMatrix::identity(din, tau_order(d)) * rat(1, (long)din));
        EXPECT_GT(min_eigenvalue(j), -1e-9) << n << " " << d;
        // Round trip through the Choi matrix.
        EXPECT_TRUE(channels_equal(Channel::from_choi(d, n, n, j), l));
    }
}

TEST(channels, lambda_has_trivial_pauli_kernel_and_no_pauli_dilation) {
    for (auto [n, d] : std::vector<std::pair<size_t, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        Channel l = lambda_channel(n, d);
        EXPECT_FALSE(kernel_pauli_scan(l).has_value());
        DilationCheck c = clifford_dilation_obstruction(l);
        EXPECT_FALSE(c.pauli_to_pauli);
        ASSERT_TRUE(c.witness.has_value());
    }
    DilationCheck c = clifford_dilation_obstruction(lambda_channel(2, 2));
    EXPECT_EQ(*c.witness, PauliOp::z(2, 2, 0));
}

TEST(channels, adjoint_matches_trace_pairing) {
    // tr(E(ρ) O) = tr(ρ E†(O)) on basis units, for both representations.
    Channel l = lambda_channel(2, 2);
    Channel s = l.to_superop();
    CycMatrix o = oracle::weyl(2, 1, {1, 0}, {1, 1});
    CycMatrix ak = adjoint_apply(l, o), as = adjoint_apply(s, o);
    EXPECT_EQ(ak, as);
    for (uint64_t x = 0; x < 4; x++) {
        for (uint64_t y = 0; y < 4; y++) {
            EXPECT_EQ((l.unit_image(x, y) * o).trace(), (unit(4, 4, x, y) * ak).trace());
        }
    }
}

TEST(channels, builtins) {
    for (const auto &name : builtin_channel_names()) {
        for (int d : {2, 3}) {
            Channel c = builtin_channel(name, 2, d);
            EXPECT_TRUE(is_tp(c)) << name;
            if (c.form() == Channel::Form::kraus) {
                EXPECT_TRUE(kraus_complete(c)) << name;
            }
        }
    }
    EXPECT_THROW(builtin_channel("nope", 1, 2), InvalidInput);

    Channel id = builtin_channel("identity", 2, 3);
    EXPECT_FALSE(kernel_pauli_scan(id).has_value());
    EXPECT_TRUE(clifford_dilation_obstruction(id).pauli_to_pauli);
    EXPECT_FALSE(is_ad(id));

    // Dephasing kills X: the scan finds X on the last qudit first in index order.
    Channel dz = builtin_channel("dephase-z", 2, 2);
    auto k = kernel_pauli_scan(dz);
    ASSERT_TRUE(k.has_value());
    EXPECT_EQ(*k, PauliOp::x(2, 2, 1));
    DilationCheck dc = clifford_dilation_obstruction(dz);
    EXPECT_FALSE(dc.pauli_to_pauli);
    EXPECT_EQ(*dc.witness, PauliOp::x(2, 2, 0));

    EXPECT_TRUE(is_ad(builtin_channel("measure00-hadamard", 2, 2)));
    Channel rp = builtin_channel("reset-plus", 1, 3);
    EXPECT_EQ(rp.unit_image(2, 2), filled(3, 3, rat(1, 3)));
    EXPECT_TRUE(rp.unit_image(1, 2).is_zero());
}

TEST(channels, validation) {
    CycMatrix s = lambda_sigma(2, 2);
    CycMatrix bad = s;
    bad(1, 1) = CycRat(4, rat(1, 2));
    EXPECT_THROW(ad_embed(bad, 2, 2), InvalidInput);
    bad = s;
    bad(1, 2) = CycRat::root(4, 1);
    EXPECT_THROW(ad_embed(bad, 2, 2), InvalidInput);
    bad = s;
    bad(0, 1) = bad(1, 0) = CycRat(4, 1);
    EXPECT_THROW(ad_embed(bad, 2, 2), InvalidInput);
    EXPECT_THROW(ad_embed(s, 1, 2), DimensionMismatch);
    EXPECT_THROW(Channel::from_superop(2, 1, 1, {}), DimensionMismatch);
    Caps tiny;
    tiny.dense_cap = 4;
    EXPECT_THROW(choi(lambda_channel(2, 2), tiny), CapExceeded);
}
