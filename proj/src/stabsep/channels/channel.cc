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

#include "stabsep/channels/channel.h"

#include "stabsep/field/fvec.h"
#include "stabsep/util/errors.h"

namespace stabsep {

namespace {

// d^e for a possibly negative integer e.
Rational d_pow(int d, int e) {
    Rational r(1);
    for (int i = 0; i < std::abs(e); i++) {
        r *= d;
    }
    return e < 0 ? Rational(1 / r) : r;
}

CycMatrix zeros(uint64_t dim, int order) {
    return CycMatrix(dim, dim, order);
}

// Combined rational factor weight · d^{half_exp} of a Kraus term's K·K†.
Rational term_scale(const KrausOp &op, int d) {
    return op.weight * d_pow(d, op.k.half_exp);
}

}  // namespace

uint64_t Channel::dim_in() const {
    return checked_pow(d_, n_in_);
}

uint64_t Channel::dim_out() const {
    return checked_pow(d_, n_out_);
}

Channel Channel::from_kraus(int d, size_t n_in, size_t n_out, std::vector<KrausOp> ops) {
    check_prime(d);
    Channel c;
    c.d_ = d;
    c.n_in_ = n_in;
    c.n_out_ = n_out;
    c.form_ = Form::kraus;
    uint64_t din = checked_pow(d, n_in), dout = checked_pow(d, n_out);
    for (auto &op : ops) {
        if (op.k.m.rows() != dout || op.k.m.cols() != din || op.k.d != d) {
            throw DimensionMismatch("Kraus operator has the wrong shape");
        }
        if (op.k.m.order() != tau_order(d)) {
            throw DimensionMismatch("Kraus operator entries live in the wrong field");
        }
        if (sgn(op.weight) < 0) {
            throw InvalidInput("Kraus weights must be nonnegative");
        }
    }
    c.kraus_ = std::move(ops);
    return c;
}

Channel Channel::from_superop(int d, size_t n_in, size_t n_out, std::vector<CycMatrix> unit_images) {
    check_prime(d);
    Channel c;
    c.d_ = d;
    c.n_in_ = n_in;
    c.n_out_ = n_out;
    c.form_ = Form::superop;
    uint64_t din = checked_pow(d, n_in), dout = checked_pow(d, n_out);
    if (unit_images.size() != din * din) {
        throw DimensionMismatch("superoperator needs d^{2 n_in} unit images");
    }
    for (const auto &m : unit_images) {
        if (m.rows() != dout || m.cols() != dout) {
            throw DimensionMismatch("unit image has the wrong shape");
        }
    }
    c.units_ = std::move(unit_images);
    return c;
}

Channel Channel::from_choi(int d, size_t n_in, size_t n_out, const CycMatrix &j) {
    uint64_t din = checked_pow(d, n_in), dout = checked_pow(d, n_out);
    if (j.rows() != din * dout || j.cols() != din * dout) {
        throw DimensionMismatch("Choi matrix has the wrong size");
    }
    std::vector<CycMatrix> units;
    Rational scale(din);
    for (uint64_t x = 0; x < din; x++) {
        for (uint64_t y = 0; y < din; y++) {
            CycMatrix u = zeros(dout, tau_order(d));
            for (uint64_t a = 0; a < dout; a++) {
                for (uint64_t b = 0; b < dout; b++) {
                    u(a, b) = j(a * din + x, b * din + y) * scale;
                }
            }
            units.push_back(std::move(u));
        }
    }
    return from_superop(d, n_in, n_out, std::move(units));
}

CycMatrix Channel::unit_image(uint64_t x, uint64_t y) const {
    uint64_t din = dim_in(), dout = dim_out();
    if (x >= din || y >= din) {
        throw DimensionMismatch("basis label out of range");
    }
    if (form_ == Form::superop) {
        return units_[x * din + y];
    }
    CycMatrix out = zeros(dout, tau_order(d_));
    for (const auto &op : kraus_) {
        Rational s = term_scale(op, d_);
        if (sgn(s) == 0) {
            continue;
        }
        // K|x⟩⟨y|K† = (K e_x)(K e_y)†.
        for (uint64_t a = 0; a < dout; a++) {
            const CycRat &kx = op.k.m(a, x);
            if (kx.is_zero()) {
                continue;
            }
            CycRat kxs = kx * s;
            for (uint64_t b = 0; b < dout; b++) {
                const CycRat &ky = op.k.m(b, y);
                if (!ky.is_zero()) {
                    out(a, b) += kxs * ky.conj();
                }
            }
        }
    }
    return out;
}

CycMatrix Channel::apply(const CycMatrix &rho) const {
    uint64_t din = dim_in(), dout = dim_out();
    if (rho.rows() != din || rho.cols() != din) {
        throw DimensionMismatch("input operator has the wrong size");
    }
    CycMatrix out = zeros(dout, tau_order(d_));
    if (form_ == Form::kraus) {
        for (const auto &op : kraus_) {
            out += op.k.m * rho * op.k.m.adjoint() * term_scale(op, d_);
        }
        return out;
    }
    for (uint64_t x = 0; x < din; x++) {
        for (uint64_t y = 0; y < din; y++) {
            if (!rho(x, y).is_zero()) {
                out += units_[x * din + y] * rho(x, y);
            }
        }
    }
    return out;
}

Channel Channel::to_superop() const {
    if (form_ == Form::superop) {
        return *this;
    }
    uint64_t din = dim_in();
    std::vector<CycMatrix> units;
    units.reserve(din * din);
    for (uint64_t x = 0; x < din; x++) {
        for (uint64_t y = 0; y < din; y++) {
            units.push_back(unit_image(x, y));
        }
    }
    return from_superop(d_, n_in_, n_out_, std::move(units));
}

CycMatrix choi(const Channel &ch, const Caps &caps) {
    uint64_t din = ch.dim_in(), dout = ch.dim_out();
    if (din * dout > caps.dense_cap) {
        throw CapExceeded("Choi matrix of dimension " + std::to_string(din * dout) + " exceeds dense cap " +
                          std::to_string(caps.dense_cap));
    }
    CycMatrix j(din * dout, din * dout, tau_order(ch.d()));
    Rational inv(1, 1);
    inv /= din;
    for (uint64_t x = 0; x < din; x++) {
        for (uint64_t y = 0; y < din; y++) {
            CycMatrix u = ch.unit_image(x, y);
            for (uint64_t a = 0; a < dout; a++) {
                for (uint64_t b = 0; b < dout; b++) {
                    if (!u(a, b).is_zero()) {
                        j(a * din + x, b * din + y) = u(a, b) * inv;
                    }
                }
            }
        }
    }
    return j;
}

bool is_tp(const Channel &ch) {
    uint64_t din = ch.dim_in();
    for (uint64_t x = 0; x < din; x++) {
        for (uint64_t y = 0; y < din; y++) {
            CycRat t = ch.unit_image(x, y).trace();
            if (t != CycRat(tau_order(ch.d()), x == y ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

bool kraus_complete(const Channel &ch) {
    if (ch.form() != Channel::Form::kraus) {
        throw InvalidInput("completeness is defined for Kraus channels");
    }
    CycMatrix acc = zeros(ch.dim_in(), tau_order(ch.d()));
    for (const auto &op : ch.kraus()) {
        acc += op.k.m.adjoint() * op.k.m * term_scale(op, ch.d());
    }
    return acc == CycMatrix::identity(ch.dim_in(), tau_order(ch.d()));
}

CycMatrix adjoint_apply(const Channel &ch, const CycMatrix &obs) {
    uint64_t din = ch.dim_in(), dout = ch.dim_out();
    if (obs.rows() != dout || obs.cols() != dout) {
        throw DimensionMismatch("observable has the wrong size");
    }
    if (ch.form() == Channel::Form::kraus) {
        CycMatrix out = zeros(din, tau_order(ch.d()));
        for (const auto &op : ch.kraus()) {
            out += op.k.m.adjoint() * obs * op.k.m * term_scale(op, ch.d());
        }
        return out;
    }
    CycMatrix out = zeros(din, tau_order(ch.d()));
    for (uint64_t x = 0; x < din; x++) {
        for (uint64_t y = 0; y < din; y++) {
            // ⟨x|E†(O)|y⟩ = tr(E(|y⟩⟨x|) O).
            out(x, y) = (ch.unit_image(y, x) * obs).trace();
        }
    }
    return out;
}

bool is_ad(const Channel &ch) {
    if (ch.n_in() != ch.n_out()) {
        return false;
    }
    uint64_t dim = ch.dim_in();
    int order = tau_order(ch.d());
    CycMatrix plus(dim, dim, order);
    Rational inv(1, 1);
    inv /= dim;
    for (uint64_t a = 0; a < dim; a++) {
        for (uint64_t b = 0; b < dim; b++) {
            plus(a, b) = CycRat(order, inv);
        }
    }
    if (ch.unit_image(0, 0) != plus) {
        return false;
    }
    for (uint64_t x = 1; x < dim; x++) {
        CycMatrix e(dim, dim, order);
        e(x, x) = CycRat(order, 1);
        if (ch.unit_image(x, x) != e) {
            return false;
        }
    }
    return true;
}

std::optional<PauliOp> kernel_pauli_scan(const Channel &ch) {
    if (ch.n_in() != ch.n_out()) {
        throw DimensionMismatch("kernel scan needs a square channel");
    }
    Channel s = ch.to_superop();
    size_t n = ch.n_in();
    int d = ch.d();
    uint64_t dim = ch.dim_in();
    for (const auto &a : all_pauli_vectors(n, d)) {
        if (a.is_zero()) {
            continue;
        }
        PauliOp p(0, a);
        CycMatrix w = weyl_matrix(p);
        CycMatrix img(dim, dim, tau_order(d));
        for (uint64_t x = 0; x < dim; x++) {
            for (uint64_t y = 0; y < dim; y++) {
                if (!w(x, y).is_zero()) {
                    img += s.unit_image(x, y) * w(x, y);
                }
            }
        }
        if (img.is_zero()) {
            return p;
        }
    }
    return std::nullopt;
}

DilationCheck clifford_dilation_obstruction(const Channel &ch) {
    if (ch.n_in() != ch.n_out()) {
        throw DimensionMismatch("dilation check needs a square channel");
    }
    size_t n = ch.n_in();
    int d = ch.d();
    DilationCheck out;
    std::vector<PauliOp> gens;
    for (size_t i = 0; i < n; i++) {
        gens.push_back(PauliOp::z(n, d, i));
    }
    for (size_t i = 0; i < n; i++) {
        gens.push_back(PauliOp::x(n, d, i));
    }
    for (const auto &g : gens) {
        CycMatrix img = adjoint_apply(ch, weyl_matrix(g));
        if (img.is_zero() || !scaled_pauli_from_matrix(img, n, d)) {
            out.pauli_to_pauli = false;
            out.witness = g;
            return out;
        }
    }
    return out;
}

bool channels_equal(const Channel &a, const Channel &b) {
    if (a.d() != b.d() || a.n_in() != b.n_in() || a.n_out() != b.n_out()) {
        throw DimensionMismatch("channels act on different spaces");
    }
    uint64_t din = a.dim_in();
    for (uint64_t x = 0; x < din; x++) {
        for (uint64_t y = 0; y < din; y++) {
            if (a.unit_image(x, y) != b.unit_image(x, y)) {
                return false;
            }
        }
    }
    return true;
}

void validate_ad_sigma(const CycMatrix &sigma, size_t n, int d) {
    uint64_t dim = checked_pow(d, n);
    if (sigma.rows() != dim || sigma.cols() != dim) {
        throw DimensionMismatch("sigma must be d^n × d^n");
    }
    if (!sigma.is_hermitian()) {
        throw InvalidInput("sigma must be Hermitian");
    }
    int order = tau_order(d);
    Rational pv(1);
    pv /= (long)(dim - 1);
    for (uint64_t x = 0; x < dim; x++) {
        if (!sigma(0, x).is_zero() || !sigma(x, 0).is_zero()) {
            throw InvalidInput("sigma must vanish on the 0 label");
        }
        if (x && sigma(x, x) != CycRat(order, pv)) {
            throw InvalidInput("sigma diagonal must be 1/(d^n - 1) off the 0 label");
        }
    }
}

Channel ad_embed(const CycMatrix &sigma, size_t n, int d) {
    validate_ad_sigma(sigma, n, d);
    uint64_t dim = checked_pow(d, n);
    int order = tau_order(d);
    Rational scale((long)(dim - 1));
    Rational inv(1);
    inv /= (long)dim;
    std::vector<CycMatrix> units;
    for (uint64_t x = 0; x < dim; x++) {
        for (uint64_t y = 0; y < dim; y++) {
            CycMatrix u(dim, dim, order);
            if (x == 0 && y == 0) {
                for (uint64_t a = 0; a < dim; a++) {
                    for (uint64_t b = 0; b < dim; b++) {
                        u(a, b) = CycRat(order, inv);
                    }
                }
            } else {
                u(x, y) = sigma(x, y) * scale;
            }
            units.push_back(std::move(u));
        }
    }
    return Channel::from_superop(d, n, n, std::move(units));
}

CycMatrix lambda_sigma(size_t n, int d) {
    if (n == 0) {
        throw InvalidInput("lambda needs n >= 1");
    }
    uint64_t dim = checked_pow(d, n);
    int order = tau_order(d);
    CycMatrix s(dim, dim, order);
    Rational diag(1), off(1);
    diag /= (long)(dim - 1);
    off /= (long)(d * (dim - 1));
    for (uint64_t i = 1; i < dim; i++) {
        FVec x = FVec::from_index(i, n, d);
        for (uint64_t j = 1; j < dim; j++) {
            FVec y = FVec::from_index(j, n, d);
            if (i == j) {
                s(i, j) = CycRat(order, diag);
                continue;
            }
            bool dependent = false;
            for (int t = 2; t < d; t++) {
                if (x * t == y) {
                    dependent = true;
                }
            }
            s(i, j) = CycRat(order, dependent ? Rational(0) : off);
        }
    }
    return s;
}

Channel lambda_channel(size_t n, int d) {
    check_prime(d);
    if (n == 0) {
        throw InvalidInput("lambda needs n >= 1");
    }
    if (d != 2) {
        return ad_embed(lambda_sigma(n, d), n, d);
    }
    uint64_t dim = checked_pow(2, n);
    std::vector<KrausOp> ops;
    CycMatrix h0(dim, dim, 4);
    for (uint64_t a = 0; a < dim; a++) {
        h0(a, 0) = CycRat(4, 1);
    }
    ops.push_back({ScaledMatrix(h0, -(int)n, 2), 1});
    for (uint64_t zi = 1; zi < dim; zi++) {
        FVec z = FVec::from_index(zi, n, 2);
        CycMatrix p(dim, dim, 4);
        for (uint64_t xi = 0; xi < dim; xi++) {
            if (dot(z, FVec::from_index(xi, n, 2)) == 1) {
                p(xi, xi) = CycRat(4, 1);
            }
        }
        ops.push_back({ScaledMatrix(p, -(int)(n - 1), 2), 1});
    }
    return Channel::from_kraus(2, n, n, std::move(ops));
}

std::vector<std::string> builtin_channel_names() {
    return {"lambda", "identity", "measure00-hadamard", "reset-plus", "dephase-z"};
}

Channel builtin_channel(const std::string &name, size_t n, int d) {
    check_prime(d);
    if (n == 0) {
        throw InvalidInput("builtin channels need n >= 1");
    }
    uint64_t dim = checked_pow(d, n);
    int order = tau_order(d);
    auto unit = [&](uint64_t a, uint64_t b) {
        CycMatrix m(dim, dim, order);
        m(a, b) = CycRat(order, 1);
        return m;
    };
    auto plus_from = [&](uint64_t x) {
        CycMatrix m(dim, dim, order);
        for (uint64_t a = 0; a < dim; a++) {
            m(a, x) = CycRat(order, 1);
        }
        return ScaledMatrix(m, -(int)n, d);
    };
    std::vector<KrausOp> ops;
    if (name == "lambda") {
        return lambda_channel(n, d);
    } else if (name == "identity") {
        ops.push_back({ScaledMatrix(CycMatrix::identity(dim, order), 0, d), 1});
    } else if (name == "measure00-hadamard") {
        // Outcome |0…0⟩: Fourier-transform it to |+…+⟩; otherwise leave the state alone.
        ops.push_back({plus_from(0), 1});
        CycMatrix rest = CycMatrix::identity(dim, order);
        rest(0, 0) = CycRat(order);
        ops.push_back({ScaledMatrix(rest, 0, d), 1});
    } else if (name == "reset-plus") {
        for (uint64_t x = 0; x < dim; x++) {
            ops.push_back({plus_from(x), 1});
        }
    } else if (name == "dephase-z") {
        for (uint64_t x = 0; x < dim; x++) {
            ops.push_back({ScaledMatrix(unit(x, x), 0, d), 1});
        }
    } else {
        throw InvalidInput("unknown builtin channel '" + name + "'");
    }
    return Channel::from_kraus(d, n, n, std::move(ops));
}

}  // namespace stabsep
