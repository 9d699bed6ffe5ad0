#pragma once

// Generator bookkeeping for the two coefficient algebras the library works
// over: the free polynomial algebra R[x_1..x_d] and the torus algebra
// R[c_1,s_1,..,c_n,s_n] / (c_i^2 + s_i^2 - 1).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace psatz {

enum class AlgebraKind { FreePoly, Torus };

/// Ambient commutative algebra. For Torus, `num_vars` counts angle pairs,
/// so there are 2*num_vars generators ordered c_1, s_1, c_2, s_2, ...
struct AlgebraSpec {
    AlgebraKind kind = AlgebraKind::FreePoly;
    int num_vars = 1;

    int generator_count() const {
        return kind == AlgebraKind::Torus ? 2 * num_vars : num_vars;
    }

    void validate() const {
        if (num_vars < 1) throw std::invalid_argument("AlgebraSpec: num_vars must be >= 1");
    }

    bool operator==(const AlgebraSpec&) const = default;
};

/// Exponent vector over the generators of an ambient AlgebraSpec.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
    static Monomial unit(int generator_count) {
        return Monomial(std::vector<int>(generator_count, 0));
    }

    int degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), 0);
    }

    Monomial times(const Monomial& other) const {
        if (exponents.size() != other.exponents.size())
            throw std::invalid_argument("Monomial::times: generator count mismatch");
        Monomial r = *this;
        for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += other.exponents[i];
        return r;
    }

    /// Normal form on the torus keeps every s_i exponent at 0 or 1.
    bool torus_normal(const AlgebraSpec& alg) const {
        if (alg.kind != AlgebraKind::Torus) return true;
        for (int i = 0; i < alg.num_vars; ++i)
            if (exponents[2 * i + 1] > 1) return false;
        return true;
    }

    bool operator==(const Monomial&) const = default;

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "g" + std::to_string(i);
            if (exponents[i] > 1) s += "^" + std::to_string(exponents[i]);
        }
        return s.empty() ? "1" : s;
    }
};

/// Graded order used everywhere a monomial list must be deterministic:
/// lower total degree first, ties broken so earlier generators sort first
/// (x1 before x2, giving [1, x1, x2, x1^2, x1*x2, x2^2], ...).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(),
                                            a.exponents.begin(), a.exponents.end());
    }
};

/// Evaluation point. One coordinate per generator; torus points carry the
/// materialized (cos phi_i, sin phi_i) pairs and must sit on the circles.
struct Point {
    std::vector<double> coordinates;

    Point() = default;
    explicit Point(std::vector<double> c) : coordinates(std::move(c)) {}

    static Point from_angles(const AlgebraSpec& alg, const std::vector<double>& angles) {
        if (alg.kind != AlgebraKind::Torus)
            throw std::invalid_argument("Point::from_angles: algebra is not Torus");
        if (static_cast<int>(angles.size()) != alg.num_vars)
            throw std::invalid_argument("Point::from_angles: angle count mismatch");
        std::vector<double> c(2 * angles.size());
        for (std::size_t i = 0; i < angles.size(); ++i) {
            c[2 * i] = std::cos(angles[i]);
            c[2 * i + 1] = std::sin(angles[i]);
        }
        return Point(std::move(c));
    }

    void validate(const AlgebraSpec& alg, double circle_tol = 1e-12) const {
        if (static_cast<int>(coordinates.size()) != alg.generator_count())
            throw std::invalid_argument("Point: coordinate count does not match algebra");
        if (alg.kind == AlgebraKind::Torus) {
            for (int i = 0; i < alg.num_vars; ++i) {
                const double c = coordinates[2 * i], s = coordinates[2 * i + 1];
                if (std::abs(c * c + s * s - 1.0) > circle_tol)
                    throw std::invalid_argument("Point: torus coordinates off the unit circle");
            }
        }
    }
};

namespace detail {

inline void enumerate_exponents(std::vector<Monomial>& out, std::vector<int>& cur, int pos,
                                int remaining, const AlgebraSpec& alg, bool exact) {
    const int gens = alg.generator_count();
    if (pos == gens) {
        if (!exact || remaining == 0) out.emplace_back(cur);
        return;
    }
    int cap = remaining;
    if (alg.kind == AlgebraKind::Torus && pos % 2 == 1) cap = std::min(cap, 1);
    for (int e = 0; e <= cap; ++e) {
        cur[pos] = e;
        enumerate_exponents(out, cur, pos + 1, remaining - e, alg, exact);
    }
    cur[pos] = 0;
}

}  // namespace detail

/// All normal-form monomials of degree <= t (or exactly t when
/// `homogeneous`), sorted by MonomialOrder. Homogeneous mode is only
/// meaningful over the free algebra.
inline std::vector<Monomial> monomial_basis(const AlgebraSpec& alg, int t, bool homogeneous = false) {
    alg.validate();
    if (t < 0) throw std::invalid_argument("monomial_basis: negative degree bound");
    if (homogeneous && alg.kind == AlgebraKind::Torus)
        throw std::invalid_argument("monomial_basis: homogeneous basis unsupported on Torus");
    std::vector<Monomial> out;
    std::vector<int> cur(alg.generator_count(), 0);
    detail::enumerate_exponents(out, cur, 0, t, alg, homogeneous);
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

}  // namespace psatz
