// Copyright 2026 The hyperent Authors
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

#include "hyperent/concurrence.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hyperent/error.h"
#include "hyperent/pairdensity.h"

namespace hyperent {

namespace {

using Int128 = __int128;
using IntMatrix4 = std::array<std::array<Int128, 4>, 4>;

constexpr double kRootTolerance = 1e-13;
constexpr int kMaxSweeps = 200;

// Numerators above this would overflow the 128-bit trace recursion.
constexpr double kMaxExactNumerator = 134217728.0;  // 2^27

struct ScaledIntegers {
    IntMatrix4 entries{};
    int exponent = 0;  // m = entries / 2^exponent
};

// Writes every entry as odd * 2^e and scales by the smallest power of two that
// clears all denominators.
std::optional<ScaledIntegers> as_scaled_integers(const Matrix4 &m) {
    int exponent = 0;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            const double x = m(r, c);
            if (!std::isfinite(x)) {
                return std::nullopt;
            }
            if (x == 0) {
                continue;
            }
            int e = 0;
            const double frac = std::frexp(std::abs(x), &e);
            const auto mantissa = static_cast<std::uint64_t>(std::ldexp(frac, 53));
            const int low = e - 53 + std::countr_zero(mantissa);
            exponent = std::max(exponent, -low);
        }
    }
    if (exponent > 256) {
        return std::nullopt;
    }
    ScaledIntegers out;
    out.exponent = exponent;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            const double v = std::ldexp(m(r, c), exponent);
            if (std::abs(v) >= kMaxExactNumerator) {
                return std::nullopt;
            }
            out.entries[r][c] = static_cast<Int128>(static_cast<std::int64_t>(v));
        }
    }
    return out;
}

std::array<double, 4> characteristic_polynomial_exact(const ScaledIntegers &s) {
    const IntMatrix4 &a = s.entries;
    IntMatrix4 acc{};
    for (int r = 0; r < 4; r++) {
        acc[r][r] = 1;
    }
    std::array<Int128, 4> coeff{};
    for (int k = 1; k <= 4; k++) {
        if (k > 1) {
            IntMatrix4 next{};
            for (int r = 0; r < 4; r++) {
                for (int c = 0; c < 4; c++) {
                    Int128 sum = 0;
                    for (int t = 0; t < 4; t++) {
                        sum += a[r][t] * acc[t][c];
                    }
                    next[r][c] = sum;
                }
                next[r][r] += coeff[k - 2];
            }
            acc = next;
        }
        Int128 trace = 0;
        for (int r = 0; r < 4; r++) {
            for (int t = 0; t < 4; t++) {
                trace += a[r][t] * acc[t][r];
            }
        }
        // Exact: the characteristic polynomial of an integer matrix has
        // integer coefficients.
        coeff[k - 1] = -trace / k;
    }
    std::array<double, 4> out{};
    for (int k = 0; k < 4; k++) {
        out[k] = std::ldexp(static_cast<double>(coeff[k]), -(k + 1) * s.exponent);
    }
    return out;
}

std::array<double, 4> characteristic_polynomial_float(const Matrix4 &a) {
    Matrix4 acc = Matrix4::Identity();
    std::array<double, 4> coeff{};
    for (int k = 1; k <= 4; k++) {
        if (k > 1) {
            acc = a * acc + coeff[k - 2] * Matrix4::Identity();
        }
        coeff[k - 1] = -(a * acc).trace() / k;
    }
    return coeff;
}


using Complex = std::complex<double>;
// Monic polynomial, highest degree first: poly[0] = 1.
using Poly = std::vector<double>;

struct Residual {
    Complex value;
    double rounding;  // bound on the evaluation error of `value`
};

Residual evaluate(const Poly &poly, Complex z) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    Complex value = 0;
    double bound = 0;
    const double mag = std::abs(z);
    for (double c : poly) {
        value = value * z + c;
        bound = bound * mag + std::abs(c);
    }
    return {value, 4.0 * static_cast<double>(poly.size()) * eps * bound};
}

Complex weierstrass_denominator(const std::vector<Complex> &z, std::size_t k) {
    Complex denom = 1;
    for (std::size_t t = 0; t < z.size(); t++) {
        if (t != k) {
            denom *= z[k] - z[t];
        }
    }
    return denom;
}

// q-th derivative of the polynomial, highest degree first.
Poly derivative(const Poly &poly, int q) {
    const int degree = static_cast<int>(poly.size()) - 1;
    Poly out;
    for (int k = 0; k + q <= degree; k++) {
        double factor = 1;
        for (int t = 0; t < q; t++) {
            factor *= degree - k - t;
        }
        out.push_back(poly[k] * factor);
    }
    return out;
}

Complex horner(const Poly &poly, Complex z) {
    Complex value = 0;
    for (double c : poly) {
        value = value * z + c;
    }
    return value;
}

// Approximations whose inclusion disks overlap cannot be told apart in double
// precision: near a root of multiplicity m they scatter by about eps^(1/m).
// Such a cluster is collapsed onto one point, found by Newton's method on
// p^(m-1), for which the multiple root is simple.
void refine_clusters(const Poly &poly, std::vector<Complex> &z) {
    const std::size_t degree = z.size();
    std::vector<double> radius(degree);
    for (std::size_t k = 0; k < degree; k++) {
        const Residual res = evaluate(poly, z[k]);
        const double denom = std::abs(weierstrass_denominator(z, k));
        radius[k] = denom == 0 ? std::numeric_limits<double>::infinity()
                               : static_cast<double>(degree) * (std::abs(res.value) + res.rounding) / denom;
    }
    std::vector<std::size_t> cluster(degree);
    for (std::size_t k = 0; k < degree; k++) {
        cluster[k] = k;
    }
    auto find = [&](std::size_t x) {
        while (cluster[x] != x) {
            x = cluster[x];
        }
        return x;
    };
    for (std::size_t a = 0; a < degree; a++) {
        for (std::size_t b = a + 1; b < degree; b++) {
            if (std::abs(z[a] - z[b]) <= radius[a] + radius[b]) {
                cluster[find(b)] = find(a);
            }
        }
    }
    for (std::size_t root = 0; root < degree; root++) {
        std::vector<std::size_t> group;
        for (std::size_t k = 0; k < degree; k++) {
            if (find(k) == root) {
                group.push_back(k);
            }
        }
        if (group.size() < 2) {
            continue;
        }
        Complex center = 0;
        for (std::size_t k : group) {
            center += z[k];
        }
        center /= static_cast<double>(group.size());
        const Complex mean = center;
        double reach = 0;
        for (std::size_t k : group) {
            reach = std::max(reach, std::abs(z[k] - mean) + radius[k]);
        }
        const Poly f = derivative(poly, static_cast<int>(group.size()) - 1);
        const Poly df = derivative(f, 1);
        for (int iter = 0; iter < 50; iter++) {
            const Complex slope = horner(df, center);
            if (slope == Complex(0)) {
                break;
            }
            const Complex step = horner(f, center) / slope;
            center -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(center))) {
                break;
            }
        }
        if (!(std::abs(center - mean) <= reach)) {
            center = mean;  // Newton left the cluster
        }
        for (std::size_t k : group) {
            z[k] = center;
        }
    }
}

}  // namespace

Matrix4 spin_flip_operator() {
    Matrix4 y = Matrix4::Zero();
    y(0, 3) = -1;
    y(1, 2) = 1;
    y(2, 1) = 1;
    y(3, 0) = -1;
    return y;
}

SpinFlipProduct spin_flip_product(const PairDensity &rho) {
    return SpinFlipProduct{rho.matrix * spin_flip_operator()};
}

std::array<double, 4> characteristic_polynomial(const Matrix4 &m) {
    if (auto exact = as_scaled_integers(m)) {
        return characteristic_polynomial_exact(*exact);
    }
    return characteristic_polynomial_float(m);
}

std::array<std::complex<double>, 4> quartic_roots(const std::array<double, 4> &coefficients) {
    for (double c : coefficients) {
        if (!std::isfinite(c)) {
            throw Error(ErrorCode::InvalidArgument, "polynomial coefficient is not finite");
        }
    }
    std::array<Complex, 4> roots{};
    int degree = 4;
    while (degree > 0 && coefficients[degree - 1] == 0) {
        degree--;  // lambda divides the polynomial; that root is exactly 0
    }
    if (degree == 0) {
        return roots;
    }

    // Rescale lambda = scale * mu so every root satisfies |mu| <= 1
    // (Fujiwara's bound).
    double scale = 0;
    for (int k = 1; k <= degree; k++) {
        double c = std::abs(coefficients[k - 1]);
        if (k == degree) {
            c /= 2;
        }
        scale = std::max(scale, std::pow(c, 1.0 / k));
    }
    scale *= 2;
    Poly poly(degree + 1);
    poly[0] = 1;
    for (int k = 1; k <= degree; k++) {
        poly[k] = coefficients[k - 1] / std::pow(scale, k);
    }

    std::vector<Complex> z(degree);
    const Complex seed(0.4, 0.9);
    z[0] = 1;
    for (int k = 1; k < degree; k++) {
        z[k] = z[k - 1] * seed;
    }

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; sweep++) {
        double max_step = 0;
        bool at_noise_floor = true;
        for (int k = 0; k < degree; k++) {
            const Residual res = evaluate(poly, z[k]);
            if (std::abs(res.value) > res.rounding) {
                at_noise_floor = false;
            }
            const Complex step = res.value / weierstrass_denominator(z, k);
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        converged = max_step <= kRootTolerance || at_noise_floor;
    }
    if (!converged) {
        throw Error(
            ErrorCode::NoConvergence,
            "root iteration did not settle within " + std::to_string(kMaxSweeps) + " sweeps");
    }
    refine_clusters(poly, z);
    for (int k = 0; k < degree; k++) {
        roots[k] = scale * z[k];
    }
    return roots;
}

std::array<double, 4> eigenvalues_4(const Matrix4 &m) {
    const auto roots = quartic_roots(characteristic_polynomial(m));
    std::array<double, 4> mags{};
    for (int k = 0; k < 4; k++) {
        mags[k] = std::abs(roots[k]);
    }
    std::sort(mags.begin(), mags.end(), std::greater<>());
    return mags;
}

ConcurrenceResult concurrence_of(const PairDensity &rho) {
    const Matrix4 &m = rho.matrix;
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "pair density is not symmetric");
    }
    if (std::abs(m.trace() - 1.0) > 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "pair density trace is not 1");
    }
    ConcurrenceResult out;
    out.sqrt_eigs = eigenvalues_4(spin_flip_product(rho).matrix);
    const auto &s = out.sqrt_eigs;
    out.value = std::clamp(s[0] - s[1] - s[2] - s[3], 0.0, 1.0);
    return out;
}

double gstar_concurrence(int n) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidArgument, "g* concurrence needs n >= 2");
    }
    // sqrt-eigenvalues are a + b, |a - b|, 0, 0 with a = 2^(1-n), b = 2^(-n/2).
    const double a = std::exp2(1.0 - n);
    const double b = std::exp2(-n / 2.0);
    return (a + b) - std::abs(a - b);
}

const std::array<Rank2Row, 22> &rank2_table() {
    static const std::array<Rank2Row, 22> rows = {{
        {1, 1, 0, 0, 0, 0},
        {1, 2, 0, 0, 1, 0},
        {1, 3, 0, 0, -1, 0},
        {1, 4, 0, 1, 0, 0},
        {1, 5, 0, -1, 0, 0},
        {1, 6, 1, 0, 0, 0},
        {1, 7, -1, 0, 0, 0},
        {1, 8, 1, 1, 1, 0},
        {1, 9, 1, -1, -1, 0},
        {1, 10, -1, 1, -1, 0},
        {1, 11, -1, -1, 1, 0},
        {2, 1, 0, 0, 0, 0},
        {2, 2, 0, 0, 1, 0},
        {2, 3, 0, 0, -1, 0},
        {2, 4, 0, 1, 0, 0},
        {2, 5, 0, -1, 0, 0},
        {2, 6, 1, 0, 0, 0},
        {2, 7, -1, 0, 0, 0},
        {2, 8, 1, 1, 1, 1},
        {2, 9, 1, -1, -1, 1},
        {2, 10, -1, 1, -1, 1},
        {2, 11, -1, -1, 1, 1},
    }};
    return rows;
}

const Rank2Row &rank2_row(const Hypergraph &g, Vertex i, Vertex j) {
    if (rank(g) > 2) {
        throw Error(ErrorCode::RankTooHigh, "table lookup needs rank <= 2, got " + std::to_string(rank(g)));
    }
    const EpsilonKey key = epsilon_key(g, i, j);
    const int table = key.pair == 1 ? 1 : key.pair == -1 ? 2 : 0;
    for (const Rank2Row &row : rank2_table()) {
        if (row.table == table && row.forward == key.forward && row.backward == key.backward &&
            row.cross == key.cross) {
            return row;
        }
    }
    throw Error(
        ErrorCode::TableMiss, "no table row for epsilon key (" + std::to_string(key.pair) + ", " +
                                  std::to_string(key.forward) + ", " + std::to_string(key.backward) + ", " +
                                  std::to_string(key.cross) + ")");
}

int rank2_concurrence(const Hypergraph &g, Vertex i, Vertex j) {
    return rank2_row(g, i, j).concurrence;
}

ConcurrenceResult concurrence_pair(const Hypergraph &g, Vertex i, Vertex j, Method method) {
    switch (method) {
        case Method::Combinatorial:
            return concurrence_of(pair_density_comb(g, i, j));
        case Method::Oracle:
            if (g.num_vertices() < 2) {
                throw Error(ErrorCode::TooFewQubits, "a qubit pair needs n >= 2");
            }
            return concurrence_of(reduce_pair(hypergraph_state(g), i, j));
        case Method::ClosedForm:
            break;
    }
    if (g.num_vertices() < 2) {
        throw Error(ErrorCode::TooFewQubits, "a qubit pair needs n >= 2");
    }
    if (rank(g) <= 2) {
        ConcurrenceResult out;
        out.value = rank2_concurrence(g, i, j);
        out.sqrt_eigs = eigenvalues_4(spin_flip_product(rank2_density(g, i, j)).matrix);
        return out;
    }
    if (g == gstar(g.num_vertices())) {
        // Validates the pair the same way the other routes do.
        (void)pair_adjacent(g, i, j);
        const int n = g.num_vertices();
        const double a = std::exp2(1.0 - n);
        const double b = std::exp2(-n / 2.0);
        ConcurrenceResult out;
        out.value = gstar_concurrence(n);
        out.sqrt_eigs = {a + b, std::abs(a - b), 0.0, 0.0};
        return out;
    }
    throw Error(ErrorCode::ClosedFormUnavailable, "closed form covers rank <= 2 and g* only");
}

}  // namespace hyperent
