#pragma once

// Sparse multivariate polynomials with dense real matrix coefficients.
// Elements of R (x) M_nu(R) for R one of the two AlgebraSpec algebras.
// Rectangular shapes are allowed so weighted products q^* p q with
// multipliers in M_{nu_k x nu}(R) can be formed symbolically; the public
// file schema and all certificate targets are square.

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "psatz/algebra.hpp"

namespace psatz {

class MatrixPoly {
  public:
    using TermMap = std::map<Monomial, Eigen::MatrixXd, MonomialOrder>;

    MatrixPoly() = default;
    MatrixPoly(AlgebraSpec alg, int rows, int cols) : algebra_(alg), rows_(rows), cols_(cols) {
        alg.validate();
        if (rows < 1 || cols < 1) throw std::invalid_argument("MatrixPoly: nonpositive shape");
    }

    static MatrixPoly zero(const AlgebraSpec& alg, int rows, int cols) {
        return MatrixPoly(alg, rows, cols);
    }

    static MatrixPoly constant(const AlgebraSpec& alg, const Eigen::MatrixXd& value) {
        MatrixPoly p(alg, static_cast<int>(value.rows()), static_cast<int>(value.cols()));
        p.add_term(Monomial::unit(alg.generator_count()), value);
        return p;
    }

    static MatrixPoly scalar(const AlgebraSpec& alg, double value) {
        return constant(alg, Eigen::MatrixXd::Constant(1, 1, value));
    }

    /// x_index * coeff as a single-term polynomial.
    static MatrixPoly monomial(const AlgebraSpec& alg, const Monomial& m, const Eigen::MatrixXd& coeff) {
        MatrixPoly p(alg, static_cast<int>(coeff.rows()), static_cast<int>(coeff.cols()));
        p.add_term(m, coeff);
        return p;
    }

    static MatrixPoly variable(const AlgebraSpec& alg, int index, double scale = 1.0) {
        if (index < 0 || index >= alg.generator_count())
            throw std::invalid_argument("MatrixPoly::variable: generator index out of range");
        std::vector<int> e(alg.generator_count(), 0);
        e[index] = 1;
        return monomial(alg, Monomial(std::move(e)), Eigen::MatrixXd::Constant(1, 1, scale));
    }

    const AlgebraSpec& algebra() const { return algebra_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    /// Accumulates a coefficient; exactly-zero results are pruned so the
    /// stored support stays minimal (tolerance pruning belongs to verify/sdp).
    void add_term(const Monomial& m, const Eigen::MatrixXd& coeff) {
        if (static_cast<int>(m.exponents.size()) != algebra_.generator_count())
            throw std::invalid_argument("MatrixPoly::add_term: monomial generator count mismatch");
        if (coeff.rows() != rows_ || coeff.cols() != cols_)
            throw std::invalid_argument("MatrixPoly::add_term: coefficient shape mismatch");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!coeff.isZero(0.0)) terms_.emplace(m, coeff);
        } else {
            it->second += coeff;
            if (it->second.isZero(0.0)) terms_.erase(it);
        }
    }

    Eigen::MatrixXd coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        if (it != terms_.end()) return it->second;
        return Eigen::MatrixXd::Zero(rows_, cols_);
    }

    bool is_hermitian(double tol = 1e-12) const {
        if (rows_ != cols_) return false;
        for (const auto& [m, c] : terms_)
            if ((c - c.transpose()).cwiseAbs().maxCoeff() > tol) return false;
        return true;
    }

    double max_abs_coeff() const {
        double v = 0.0;
        for (const auto& [m, c] : terms_) v = std::max(v, c.cwiseAbs().maxCoeff());
        return v;
    }

    bool homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

  private:
    AlgebraSpec algebra_;
    int rows_ = 1;
    int cols_ = 1;
    TermMap terms_;
};

inline MatrixPoly mp_add(const MatrixPoly& a, const MatrixPoly& b) {
    if (a.algebra() != b.algebra()) throw std::invalid_argument("mp_add: algebra mismatch");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mp_add: size mismatch");
    MatrixPoly r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

inline MatrixPoly mp_scale(const MatrixPoly& a, double s) {
    MatrixPoly r(a.algebra(), a.rows(), a.cols());
    if (s == 0.0) return r;
    for (const auto& [m, c] : a.terms()) r.add_term(m, s * c);
    return r;
}

inline MatrixPoly mp_sub(const MatrixPoly& a, const MatrixPoly& b) {
    return mp_add(a, mp_scale(b, -1.0));
}

/// Rewrites every s_i^k with k >= 2 through s_i^2 -> 1 - c_i^2 until the
/// normal form (all s exponents <= 1) is reached. Identity on polynomials
/// already in normal form; evaluation-preserving on the torus.
inline MatrixPoly torus_reduce(const MatrixPoly& a) {
    if (a.algebra().kind != AlgebraKind::Torus)
        throw std::invalid_argument("torus_reduce: algebra is not Torus");
    MatrixPoly out(a.algebra(), a.rows(), a.cols());
    std::vector<std::pair<Monomial, Eigen::MatrixXd>> work(a.terms().begin(), a.terms().end());
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        int sin_pos = -1;
        for (int i = 0; i < a.algebra().num_vars; ++i) {
            if (m.exponents[2 * i + 1] >= 2) {
                sin_pos = i;
                break;
            }
        }
        if (sin_pos < 0) {
            out.add_term(m, c);
            continue;
        }
        Monomial lowered = m;
        lowered.exponents[2 * sin_pos + 1] -= 2;
        work.emplace_back(lowered, c);
        Monomial cos_raised = lowered;
        cos_raised.exponents[2 * sin_pos] += 2;
        work.emplace_back(cos_raised, -c);
    }
    return out;
}

/// Expansion of a single monomial into torus normal form, as (monomial,
/// coefficient) pairs. Used wherever coefficient matching must happen on
/// normal forms without building a MatrixPoly.
inline std::vector<std::pair<Monomial, double>> reduce_monomial(const AlgebraSpec& alg, const Monomial& m) {
    if (alg.kind != AlgebraKind::Torus || m.torus_normal(alg)) return {{m, 1.0}};
    std::map<Monomial, double, MonomialOrder> acc;
    std::vector<std::pair<Monomial, double>> work{{m, 1.0}};
    while (!work.empty()) {
        auto [cur, w] = std::move(work.back());
        work.pop_back();
        int sin_pos = -1;
        for (int i = 0; i < alg.num_vars; ++i) {
            if (cur.exponents[2 * i + 1] >= 2) {
                sin_pos = i;
                break;
            }
        }
        if (sin_pos < 0) {
            acc[cur] += w;
            continue;
        }
        Monomial lowered = cur;
        lowered.exponents[2 * sin_pos + 1] -= 2;
        work.emplace_back(lowered, w);
        Monomial cos_raised = lowered;
        cos_raised.exponents[2 * sin_pos] += 2;
        work.emplace_back(cos_raised, -w);
    }
    std::vector<std::pair<Monomial, double>> out;
    for (const auto& [mm, w] : acc)
        if (w != 0.0) out.emplace_back(mm, w);
    return out;
}

inline MatrixPoly mp_mul(const MatrixPoly& a, const MatrixPoly& b) {
    if (a.algebra() != b.algebra()) throw std::invalid_argument("mp_mul: algebra mismatch");
    if (a.cols() != b.rows()) throw std::invalid_argument("mp_mul: size mismatch");
    MatrixPoly r(a.algebra(), a.rows(), b.cols());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma.times(mb), ca * cb);
    if (a.algebra().kind == AlgebraKind::Torus) return torus_reduce(r);
    return r;
}

inline MatrixPoly mp_adjoint(const MatrixPoly& a) {
    MatrixPoly r(a.algebra(), a.cols(), a.rows());
    for (const auto& [m, c] : a.terms()) r.add_term(m, c.transpose());
    return r;
}

inline Eigen::MatrixXd mp_eval(const MatrixPoly& a, const Point& pt) {
    pt.validate(a.algebra());
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(a.rows(), a.cols());
    for (const auto& [m, c] : a.terms()) {
        double v = 1.0;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            for (int e = 0; e < m.exponents[i]; ++e) v *= pt.coordinates[i];
        }
        out += v * c;
    }
    return out;
}

/// The unit 1 (x) I_nu of the ambient algebra.
inline MatrixPoly mp_identity(const AlgebraSpec& alg, int size) {
    return MatrixPoly::constant(alg, Eigen::MatrixXd::Identity(size, size));
}

/// x_1^2 + ... + x_d^2 over the free algebra (scalar).
inline MatrixPoly squared_norm_poly(const AlgebraSpec& alg) {
    if (alg.kind != AlgebraKind::FreePoly)
        throw std::invalid_argument("squared_norm_poly: algebra is not FreePoly");
    MatrixPoly r(alg, 1, 1);
    for (int i = 0; i < alg.num_vars; ++i) {
        std::vector<int> e(alg.generator_count(), 0);
        e[i] = 2;
        r.add_term(Monomial(std::move(e)), Eigen::MatrixXd::Constant(1, 1, 1.0));
    }
    return r;
}

}  // namespace psatz
