#pragma once

// Self-contained primal-dual path-following solver for block semidefinite
// programs in standard form
//
//     (P)  min/max  sum_j <C_j, X_j> + f^T u
//          s.t.     sum_j <A_ij, X_j> + F_i. u = b_i   (i = 1..m)
//                   X_j >= 0 (PSD blocks), u free
//
// with the matching dual
//
//     (D)  max  b^T y   s.t.  sum_i y_i A_ij + Z_j = C_j, Z_j >= 0,
//                             F^T y = f                  (minimize sense)
//
// using the HKM direction with a Mehrotra predictor-corrector and a dense
// Schur complement per iteration. Free variables enter the Schur system as
// a border and are eliminated blockwise. Primal infeasibility is reported
// only with a verified Farkas ray (sum_i y_i A_ij PSD up to a small defect
// on every block, b^T y < 0, F^T y = 0); anything unresolved is Stalled so
// callers never mistake numerical failure for mathematical infeasibility.

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace psatz {

struct SdpConstraint {
    std::vector<Eigen::MatrixXd> A;  // one symmetric matrix per block
    std::vector<double> free_coeff;  // one entry per free variable (may be empty)
    double rhs = 0.0;
};

struct SdpProblem {
    std::vector<int> block_dims;
    std::vector<Eigen::MatrixXd> objective;  // C_j, symmetric, same shapes as blocks
    std::vector<double> free_objective;      // f, one per free variable
    bool maximize = false;
    std::vector<SdpConstraint> constraints;

    int num_blocks() const { return static_cast<int>(block_dims.size()); }
    int num_free() const { return static_cast<int>(free_objective.size()); }
    int num_constraints() const { return static_cast<int>(constraints.size()); }

    void validate() const {
        if (block_dims.empty()) throw std::invalid_argument("SdpProblem: no blocks");
        if (constraints.empty()) throw std::invalid_argument("SdpProblem: no constraints");
        if (objective.size() != block_dims.size())
            throw std::invalid_argument("SdpProblem: objective/block count mismatch");
        for (std::size_t j = 0; j < block_dims.size(); ++j) {
            if (block_dims[j] < 1) throw std::invalid_argument("SdpProblem: nonpositive block dim");
            check_sym(objective[j], block_dims[j], "objective");
        }
        for (const auto& con : constraints) {
            if (con.A.size() != block_dims.size())
                throw std::invalid_argument("SdpProblem: constraint block count mismatch");
            for (std::size_t j = 0; j < block_dims.size(); ++j)
                check_sym(con.A[j], block_dims[j], "constraint");
            if (static_cast<int>(con.free_coeff.size()) != num_free())
                throw std::invalid_argument("SdpProblem: constraint free-coefficient count mismatch");
        }
    }

  private:
    static void check_sym(const Eigen::MatrixXd& m, int dim, const char* what) {
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument(std::string("SdpProblem: ") + what + " dimension mismatch");
        if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + m.cwiseAbs().maxCoeff()))
            throw std::invalid_argument(std::string("SdpProblem: ") + what + " matrix not symmetric");
    }
};

enum class SdpStatus { Optimal, Feasible, Infeasible, Stalled };

inline const char* to_string(SdpStatus s) {
    switch (s) {
        case SdpStatus::Optimal: return "optimal";
        case SdpStatus::Feasible: return "feasible";
        case SdpStatus::Infeasible: return "infeasible";
        case SdpStatus::Stalled: return "stalled";
    }
    return "?";
}

/// Certificate of primal infeasibility: with ||y||_2 = 1,
/// sum_i y_i A_ij >= -psd_defect * I on every block and b^T y = -objective_margin.
struct FarkasRay {
    Eigen::VectorXd y;
    double psd_defect = 0.0;
    double objective_margin = 0.0;
};

struct SdpSolution {
    SdpStatus status = SdpStatus::Stalled;
    std::vector<Eigen::MatrixXd> X;
    std::vector<Eigen::MatrixXd> Z;
    Eigen::VectorXd y;               // multipliers; for maximize problems see note in solve()
    std::vector<double> free_values;
    double primal_objective = 0.0;
    double dual_objective = 0.0;
    double primal_residual = 0.0;    // ||A(X)+Fu-b||_inf
    double dual_residual = 0.0;
    double duality_gap = 0.0;        // <X,Z> / (1+|p|+|d|)
    int iterations = 0;
    std::optional<FarkasRay> farkas;
    std::string diagnostics;
};

struct SdpOptions {
    int max_iterations = 200;
    double tol_eq = 1e-8;
    double tol_gap = 1e-8;
    double tol_psd = 1e-9;
    double ray_psd_tol = 1e-9;          // PSD defect allowed on a verified ray
    double ray_objective_margin = 1e-9; // required -b^T y on a unit-norm ray
    double divergence_threshold = 1e9;
    bool verbose = false;
};

namespace detail {

inline double sym_eig_min(const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return 0.0;
    if (m.rows() == 1) return m(0, 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

inline double sym_eig_max(const Eigen::MatrixXd& m) { return -sym_eig_min(-m); }

// Largest alpha in (0, 1] with S + alpha * dS > 0, dampened by tau.
inline double max_step(const Eigen::MatrixXd& S, const Eigen::MatrixXd& dS, double tau) {
    Eigen::LLT<Eigen::MatrixXd> llt(S);
    if (llt.info() != Eigen::Success) return 0.0;
    const Eigen::MatrixXd L = llt.matrixL();
    Eigen::MatrixXd K = L.triangularView<Eigen::Lower>().solve(dS);
    K = L.triangularView<Eigen::Lower>().solve(K.transpose()).eval();
    const double lmin = sym_eig_min(0.5 * (K + K.transpose()));
    if (lmin >= -1e-14) return 1.0;
    return std::min(1.0, -tau / lmin);
}

inline double max_step_all(const std::vector<Eigen::MatrixXd>& S, const std::vector<Eigen::MatrixXd>& dS,
                           double tau) {
    double a = 1.0;
    for (std::size_t j = 0; j < S.size(); ++j) a = std::min(a, max_step(S[j], dS[j], tau));
    return a;
}

}  // namespace detail

class SdpSolver {
  public:
    SdpSolver(const SdpProblem& prob, SdpOptions opts = {}) : pub_(prob), opts_(opts) {
        prob.validate();
        nb_ = prob.num_blocks();
        m_ = prob.num_constraints();
        k_ = prob.num_free();
        sign_ = prob.maximize ? -1.0 : 1.0;
        C_.reserve(nb_);
        for (int j = 0; j < nb_; ++j) C_.push_back(sign_ * prob.objective[j]);
        f_.resize(k_);
        for (int l = 0; l < k_; ++l) f_[l] = sign_ * prob.free_objective[l];
        b_.resize(m_);
        F_.resize(m_, std::max(k_, 1));
        F_.setZero();
        for (int i = 0; i < m_; ++i) {
            b_[i] = prob.constraints[i].rhs;
            for (int l = 0; l < k_; ++l) F_(i, l) = prob.constraints[i].free_coeff[l];
        }
    }

    SdpSolution solve() {
        init_iterates();
        SdpSolution sol;
        std::ostringstream diag;
        int stall_counter = 0;
        double best_merit = std::numeric_limits<double>::infinity();

        int iter = 0;
        for (; iter < opts_.max_iterations; ++iter) {
            compute_residuals();
            if (const auto ray = try_farkas(y_)) return finish_infeasible(*ray, iter);

            const double relgap = gap_ / (1.0 + std::abs(pobj_) + std::abs(dobj_));
            if (perr_ <= opts_.tol_eq && derr_ <= 100 * opts_.tol_eq && relgap <= opts_.tol_gap) break;

            const double merit = perr_ + derr_ + relgap;
            if (merit < best_merit * 0.9999) {
                best_merit = merit;
                stall_counter = 0;
            } else if (++stall_counter > 25) {
                diag << "no progress over 25 iterations; ";
                break;
            }
            if (std::abs(pobj_) > opts_.divergence_threshold ||
                std::abs(dobj_) > opts_.divergence_threshold ||
                y_.lpNorm<Eigen::Infinity>() > opts_.divergence_threshold) {
                diag << "iterates diverging (objective or multipliers exceed threshold); ";
                break;
            }

            if (!factor_schur()) {
                diag << "schur factorization failed; ";
                break;
            }

            // Predictor: affine direction.
            std::vector<Eigen::MatrixXd> Rc(nb_);
            for (int j = 0; j < nb_; ++j) Rc[j] = -X_[j] * Z_[j];
            Direction aff;
            if (!solve_direction(Rc, aff)) {
                diag << "direction solve failed; ";
                break;
            }
            if (const auto ray = try_farkas(aff.dy)) return finish_infeasible(*ray, iter);

            const double ap_aff = detail::max_step_all(X_, aff.dX, 1.0);
            const double ad_aff = detail::max_step_all(Z_, aff.dZ, 1.0);
            double gap_aff = 0.0;
            for (int j = 0; j < nb_; ++j)
                gap_aff += ((X_[j] + ap_aff * aff.dX[j]).cwiseProduct(Z_[j] + ad_aff * aff.dZ[j])).sum();
            gap_aff = std::max(gap_aff, 0.0);
            const double mu = gap_ / ntot_;
            double sigma = std::pow(gap_aff / std::max(gap_, 1e-300), 3.0);
            sigma = std::clamp(sigma, 1e-10, 1.0);

            // Corrector.
            for (int j = 0; j < nb_; ++j) {
                Rc[j] = -X_[j] * Z_[j] - aff.dX[j] * aff.dZ[j];
                Rc[j].diagonal().array() += sigma * mu;
            }
            Direction dir;
            if (!solve_direction(Rc, dir)) {
                diag << "corrector solve failed; ";
                break;
            }
            if (const auto ray = try_farkas(dir.dy)) return finish_infeasible(*ray, iter);

            const double tau = iter < 3 ? 0.9 : 0.98;
            double ap = detail::max_step_all(X_, dir.dX, tau);
            double ad = detail::max_step_all(Z_, dir.dZ, tau);
            ap = damp_to_pd(X_, dir.dX, ap);
            ad = damp_to_pd(Z_, dir.dZ, ad);
            if (ap < 1e-10 && ad < 1e-10) {
                diag << "step sizes collapsed; ";
                break;
            }
            for (int j = 0; j < nb_; ++j) {
                X_[j] += ap * dir.dX[j];
                X_[j] = 0.5 * (X_[j] + X_[j].transpose()).eval();
                Z_[j] += ad * dir.dZ[j];
                Z_[j] = 0.5 * (Z_[j] + Z_[j].transpose()).eval();
            }
            u_ += ap * dir.du;
            y_ += ad * dir.dy;
        }

        compute_residuals();
        if (const auto ray = try_farkas(y_)) return finish_infeasible(*ray, iter);
        return finish_regular(iter, diag.str());
    }

  private:
    struct Direction {
        std::vector<Eigen::MatrixXd> dX, dZ;
        Eigen::VectorXd dy;
        Eigen::VectorXd du;
    };

    void init_iterates() {
        ntot_ = 0;
        for (int d : pub_.block_dims) ntot_ += d;
        double xi = 10.0, eta = 10.0;
        for (int i = 0; i < m_; ++i) {
            double anorm = F_.row(i).norm();
            for (int j = 0; j < nb_; ++j) anorm = std::hypot(anorm, pub_.constraints[i].A[j].norm());
            xi = std::max(xi, static_cast<double>(ntot_) * (1.0 + std::abs(b_[i])) / (1.0 + anorm));
            eta = std::max(eta, anorm);
        }
        for (int j = 0; j < nb_; ++j) eta = std::max(eta, C_[j].norm());
        X_.clear();
        Z_.clear();
        for (int j = 0; j < nb_; ++j) {
            X_.push_back(xi * Eigen::MatrixXd::Identity(pub_.block_dims[j], pub_.block_dims[j]));
            Z_.push_back(eta * Eigen::MatrixXd::Identity(pub_.block_dims[j], pub_.block_dims[j]));
        }
        y_ = Eigen::VectorXd::Zero(m_);
        u_ = Eigen::VectorXd::Zero(std::max(k_, 1));
        if (k_ == 0) u_.resize(0);
    }

    void compute_residuals() {
        Rp_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            double ax = 0.0;
            for (int j = 0; j < nb_; ++j) ax += (pub_.constraints[i].A[j].cwiseProduct(X_[j])).sum();
            if (k_ > 0) ax += F_.row(i).head(k_).dot(u_);
            Rp_[i] = b_[i] - ax;
        }
        Rd_.assign(nb_, Eigen::MatrixXd());
        for (int j = 0; j < nb_; ++j) {
            Eigen::MatrixXd s = C_[j] - Z_[j];
            for (int i = 0; i < m_; ++i) s -= y_[i] * pub_.constraints[i].A[j];
            Rd_[j] = s;
        }
        Rf_ = Eigen::VectorXd::Zero(std::max(k_, 0));
        if (k_ > 0) {
            Eigen::VectorXd fv(k_);
            for (int l = 0; l < k_; ++l) fv[l] = f_[l];
            Rf_ = fv - F_.leftCols(k_).transpose() * y_;
        }
        pobj_ = 0.0;
        gap_ = 0.0;
        for (int j = 0; j < nb_; ++j) {
            pobj_ += (C_[j].cwiseProduct(X_[j])).sum();
            gap_ += (X_[j].cwiseProduct(Z_[j])).sum();
        }
        for (int l = 0; l < k_; ++l) pobj_ += f_[l] * u_[l];
        dobj_ = 0.0;
        for (int i = 0; i < m_; ++i) dobj_ += b_[i] * y_[i];
        perr_ = 0.0;
        for (int i = 0; i < m_; ++i) perr_ = std::max(perr_, std::abs(Rp_[i]));
        derr_ = k_ > 0 ? Rf_.lpNorm<Eigen::Infinity>() : 0.0;
        for (int j = 0; j < nb_; ++j)
            if (Rd_[j].size() > 0) derr_ = std::max(derr_, Rd_[j].cwiseAbs().maxCoeff());
        const double scale = 1.0 + bnorm_inf();
        perr_rel_ = perr_ / scale;
    }

    double bnorm_inf() const {
        double v = 0.0;
        for (int i = 0; i < m_; ++i) v = std::max(v, std::abs(b_[i]));
        return v;
    }

    bool factor_schur() {
        Zinv_.assign(nb_, Eigen::MatrixXd());
        for (int j = 0; j < nb_; ++j) {
            Eigen::LLT<Eigen::MatrixXd> llt(Z_[j]);
            if (llt.info() != Eigen::Success) return false;
            Zinv_[j] = llt.solve(Eigen::MatrixXd::Identity(Z_[j].rows(), Z_[j].cols()));
        }
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m_, m_);
        std::vector<Eigen::MatrixXd> V(nb_);
        for (int c = 0; c < m_; ++c) {
            for (int j = 0; j < nb_; ++j) V[j] = X_[j] * pub_.constraints[c].A[j] * Zinv_[j];
            for (int r = 0; r < m_; ++r) {
                double v = 0.0;
                for (int j = 0; j < nb_; ++j) v += (pub_.constraints[r].A[j].cwiseProduct(V[j].transpose())).sum();
                M(r, c) = v;
            }
        }
        M = 0.5 * (M + M.transpose()).eval();
        double ridge = 0.0;
        const double base = std::max(1.0, M.diagonal().cwiseAbs().maxCoeff());
        for (int attempt = 0; attempt < 6; ++attempt) {
            schur_llt_.compute(M + ridge * Eigen::MatrixXd::Identity(m_, m_));
            if (schur_llt_.info() == Eigen::Success) {
                if (k_ > 0) {
                    W_ = schur_llt_.solve(F_.leftCols(k_));
                    Eigen::MatrixXd Sff = F_.leftCols(k_).transpose() * W_;
                    Sff = 0.5 * (Sff + Sff.transpose()).eval();
                    sff_lu_.compute(Sff);
                    if (std::abs(sff_lu_.determinant()) < 1e-300) { ridge = ridge == 0.0 ? 1e-13 * base : ridge * 100; continue; }
                }
                return true;
            }
            ridge = ridge == 0.0 ? 1e-13 * base : ridge * 100;
        }
        return false;
    }

    // Solves the Newton system for a given complementarity right-hand side,
    // reusing the current Schur factorization.
    bool solve_direction(const std::vector<Eigen::MatrixXd>& Rc, Direction& dir) {
        Eigen::VectorXd g(m_);
        for (int i = 0; i < m_; ++i) {
            double acc = Rp_[i];
            for (int j = 0; j < nb_; ++j) {
                const Eigen::MatrixXd t = (Rc[j] - X_[j] * Rd_[j]) * Zinv_[j];
                acc -= (pub_.constraints[i].A[j].cwiseProduct(t.transpose())).sum();
            }
            g[i] = acc;
        }
        Eigen::VectorXd h = schur_llt_.solve(g);
        if (k_ > 0) {
            const Eigen::VectorXd rhs = F_.leftCols(k_).transpose() * h - Rf_;
            dir.du = sff_lu_.solve(rhs);
            dir.dy = h - W_ * dir.du;
        } else {
            dir.du.resize(0);
            dir.dy = h;
        }
        if (!dir.dy.allFinite()) return false;
        dir.dZ.assign(nb_, Eigen::MatrixXd());
        dir.dX.assign(nb_, Eigen::MatrixXd());
        for (int j = 0; j < nb_; ++j) {
            Eigen::MatrixXd dz = Rd_[j];
            for (int i = 0; i < m_; ++i) dz -= dir.dy[i] * pub_.constraints[i].A[j];
            dir.dZ[j] = 0.5 * (dz + dz.transpose()).eval();
            Eigen::MatrixXd dx = (Rc[j] - X_[j] * dir.dZ[j]) * Zinv_[j];
            dir.dX[j] = 0.5 * (dx + dx.transpose()).eval();
            if (!dir.dX[j].allFinite() || !dir.dZ[j].allFinite()) return false;
        }
        return true;
    }

    double damp_to_pd(const std::vector<Eigen::MatrixXd>& S, const std::vector<Eigen::MatrixXd>& dS,
                      double alpha) const {
        for (int cut = 0; cut < 40 && alpha > 1e-12; ++cut) {
            bool ok = true;
            for (int j = 0; j < nb_ && ok; ++j) {
                Eigen::MatrixXd T = S[j] + alpha * dS[j];
                Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (T + T.transpose()));
                ok = llt.info() == Eigen::Success;
            }
            if (ok) return alpha;
            alpha *= 0.8;
        }
        return 0.0;
    }

    // Checks whether w (up to sign and scale) certifies primal infeasibility.
    std::optional<FarkasRay> try_farkas(const Eigen::VectorXd& w) const {
        if (w.size() != m_) return std::nullopt;
        const double n2 = w.norm();
        if (!(n2 > 1e-10) || !w.allFinite()) return std::nullopt;
        for (const double s : {-1.0, 1.0}) {
            Eigen::VectorXd cand = (s / n2) * w;
            double bty = 0.0;
            for (int i = 0; i < m_; ++i) bty += b_[i] * cand[i];
            if (bty > -opts_.ray_objective_margin) continue;
            if (k_ > 0 && (F_.leftCols(k_).transpose() * cand).lpNorm<Eigen::Infinity>() > 1e-8) continue;
            double defect = 0.0;
            bool all_psd = true;
            for (int j = 0; j < nb_ && all_psd; ++j) {
                Eigen::MatrixXd Sj = Eigen::MatrixXd::Zero(pub_.block_dims[j], pub_.block_dims[j]);
                for (int i = 0; i < m_; ++i) Sj += cand[i] * pub_.constraints[i].A[j];
                const double lmin = detail::sym_eig_min(Sj);
                if (lmin < -opts_.ray_psd_tol) all_psd = false;
                defect = std::max(defect, std::max(0.0, -lmin));
            }
            if (!all_psd) continue;
            FarkasRay ray;
            ray.y = cand;
            ray.psd_defect = defect;
            ray.objective_margin = -bty;
            return ray;
        }
        return std::nullopt;
    }

    SdpSolution finish_infeasible(const FarkasRay& ray, int iters) const {
        SdpSolution sol;
        sol.status = SdpStatus::Infeasible;
        sol.farkas = ray;
        sol.iterations = iters;
        sol.X = X_;
        sol.Z = Z_;
        sol.y = sign_ * y_;
        sol.free_values.assign(u_.data(), u_.data() + u_.size());
        sol.diagnostics = "verified Farkas ray: b^T y = -" + std::to_string(ray.objective_margin) +
                          ", psd defect " + std::to_string(ray.psd_defect);
        return sol;
    }

    SdpSolution finish_regular(int iters, const std::string& diag) {
        SdpSolution sol;
        sol.X = X_;
        sol.Z = Z_;
        sol.y = sign_ * y_;  // report multipliers in the problem's own sense
        sol.free_values.assign(u_.data(), u_.data() + u_.size());
        sol.iterations = iters;
        sol.primal_objective = sign_ * pobj_;
        sol.dual_objective = sign_ * dobj_;
        sol.primal_residual = perr_;
        sol.dual_residual = derr_;
        sol.duality_gap = gap_ / (1.0 + std::abs(pobj_) + std::abs(dobj_));
        double min_eig = std::numeric_limits<double>::infinity();
        for (int j = 0; j < nb_; ++j) min_eig = std::min(min_eig, detail::sym_eig_min(X_[j]));
        const bool primal_ok = perr_ <= opts_.tol_eq && min_eig >= -opts_.tol_psd;
        const bool dual_ok = derr_ <= 100 * opts_.tol_eq;
        const bool gap_ok = sol.duality_gap <= opts_.tol_gap;
        if (primal_ok && dual_ok && gap_ok)
            sol.status = SdpStatus::Optimal;
        else if (primal_ok)
            sol.status = SdpStatus::Feasible;
        else
            sol.status = SdpStatus::Stalled;
        sol.diagnostics = diag;
        if (sol.status == SdpStatus::Stalled && diag.empty())
            sol.diagnostics = "iteration limit reached without convergence";
        return sol;
    }

    SdpProblem pub_;
    SdpOptions opts_;
    int nb_ = 0, m_ = 0, k_ = 0, ntot_ = 0;
    double sign_ = 1.0;
    std::vector<Eigen::MatrixXd> C_;
    std::vector<double> f_;
    Eigen::VectorXd b_;
    Eigen::MatrixXd F_;

    std::vector<Eigen::MatrixXd> X_, Z_, Zinv_;
    Eigen::VectorXd y_, u_;
    std::vector<double> Rp_;
    std::vector<Eigen::MatrixXd> Rd_;
    Eigen::VectorXd Rf_;
    double pobj_ = 0, dobj_ = 0, gap_ = 0, perr_ = 0, derr_ = 0, perr_rel_ = 0;
    Eigen::LLT<Eigen::MatrixXd> schur_llt_;
    Eigen::MatrixXd W_;
    Eigen::PartialPivLU<Eigen::MatrixXd> sff_lu_;
};

inline SdpSolution solve(const SdpProblem& prob, const SdpOptions& opts = {}) {
    return SdpSolver(prob, opts).solve();
}

/// Residuals recomputed from the raw problem data, independent of any
/// solver bookkeeping: (||A(X)+Fu-b||_inf, min over blocks of lambda_min(X_j),
/// |primal objective - dual objective|).
struct SdpResiduals {
    double primal_eq = 0.0;
    double min_eig = 0.0;
    double gap = 0.0;
};

inline SdpResiduals residuals(const SdpProblem& prob, const SdpSolution& sol) {
    prob.validate();
    if (static_cast<int>(sol.X.size()) != prob.num_blocks())
        throw std::invalid_argument("residuals: block count mismatch");
    SdpResiduals r;
    for (int i = 0; i < prob.num_constraints(); ++i) {
        double ax = 0.0;
        for (int j = 0; j < prob.num_blocks(); ++j)
            ax += (prob.constraints[i].A[j].cwiseProduct(sol.X[j])).sum();
        for (int l = 0; l < prob.num_free(); ++l)
            ax += prob.constraints[i].free_coeff[l] * (l < static_cast<int>(sol.free_values.size()) ? sol.free_values[l] : 0.0);
        r.primal_eq = std::max(r.primal_eq, std::abs(ax - prob.constraints[i].rhs));
    }
    r.min_eig = std::numeric_limits<double>::infinity();
    for (int j = 0; j < prob.num_blocks(); ++j) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sol.X[j], Eigen::EigenvaluesOnly);
        r.min_eig = std::min(r.min_eig, es.eigenvalues().minCoeff());
    }
    double pobj = 0.0;
    for (int j = 0; j < prob.num_blocks(); ++j) pobj += (prob.objective[j].cwiseProduct(sol.X[j])).sum();
    for (int l = 0; l < prob.num_free(); ++l)
        pobj += prob.free_objective[l] * (l < static_cast<int>(sol.free_values.size()) ? sol.free_values[l] : 0.0);
    double dobj = 0.0;
    for (int i = 0; i < prob.num_constraints(); ++i) dobj += prob.constraints[i].rhs * sol.y[i];
    r.gap = std::abs(pobj - dobj);
    return r;
}

}  // namespace psatz
