#pragma once

// Generator sets S = {p_1, ..., p_m} and degree-truncated quadratic
// modules. Generator index 0 always denotes the implicit unit weight
// p_0 = 1 (scalar); indices 1..m refer into `generators`.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psatz/poly.hpp"

namespace psatz {

struct ConstraintSystem {
    AlgebraSpec algebra;
    int ambient_size = 1;                 // nu, size of the target polynomial
    std::vector<MatrixPoly> generators;   // p_k, hermitian, sizes nu_k (may differ from nu)
    std::vector<std::string> names;       // optional labels, parallel to generators

    const MatrixPoly& generator(int k) const {
        if (k < 1 || k > static_cast<int>(generators.size()))
            throw std::out_of_range("ConstraintSystem::generator: index out of range");
        return generators[k - 1];
    }

    std::string name_of(int k) const {
        if (k == 0) return "1";
        if (k >= 1 && k <= static_cast<int>(names.size()) && !names[k - 1].empty())
            return names[k - 1];
        return "p" + std::to_string(k);
    }

    void validate() const {
        algebra.validate();
        if (ambient_size < 1) throw std::invalid_argument("ConstraintSystem: ambient_size must be >= 1");
        for (const auto& g : generators) {
            if (g.algebra() != algebra)
                throw std::invalid_argument("ConstraintSystem: generator algebra mismatch");
            if (!g.is_hermitian())
                throw std::invalid_argument("ConstraintSystem: generator is not hermitian");
        }
        if (!names.empty() && names.size() != generators.size())
            throw std::invalid_argument("ConstraintSystem: names length mismatch");
    }
};

/// Degree truncation of the module at half-degree t. Block 0 is the
/// unweighted (sum of squares) block; weighted blocks keep the generator
/// index they parametrize. Generators of degree > 2t are dropped from the
/// level and recorded.
struct TruncationPlan {
    struct Block {
        int generator_index = 0;        // 0 = unit weight
        int multiplier_degree = 0;      // t_k
        int weight_rows = 1;            // nu_k (1 for the unit block)
        std::vector<Monomial> basis;    // multiplier monomials
    };

    int level = 0;
    bool homogeneous = false;
    std::vector<Block> blocks;
    std::vector<int> dropped;           // generator indices with deg > 2t
};

inline TruncationPlan truncate(const ConstraintSystem& S, int t, bool homogeneous = false) {
    S.validate();
    if (t < 0) throw std::invalid_argument("truncate: negative level");
    if (homogeneous) {
        if (S.algebra.kind == AlgebraKind::Torus)
            throw std::invalid_argument("truncate: homogeneous mode unsupported on Torus");
        for (const auto& g : S.generators) {
            if (!g.homogeneous() || g.degree() % 2 != 0)
                throw std::invalid_argument(
                    "truncate: homogeneous mode requires homogeneous generators of even degree");
        }
    }

    TruncationPlan plan;
    plan.level = t;
    plan.homogeneous = homogeneous;

    TruncationPlan::Block unit;
    unit.generator_index = 0;
    unit.multiplier_degree = t;
    unit.weight_rows = 1;
    unit.basis = monomial_basis(S.algebra, t, homogeneous);
    plan.blocks.push_back(std::move(unit));

    for (int k = 1; k <= static_cast<int>(S.generators.size()); ++k) {
        const MatrixPoly& g = S.generator(k);
        const int dg = g.degree();
        if (dg > 2 * t) {
            plan.dropped.push_back(k);
            continue;
        }
        TruncationPlan::Block blk;
        blk.generator_index = k;
        blk.weight_rows = g.rows();
        blk.multiplier_degree = homogeneous ? t - dg / 2 : t - (dg + 1) / 2;
        blk.basis = monomial_basis(S.algebra, blk.multiplier_degree, homogeneous);
        plan.blocks.push_back(std::move(blk));
    }
    return plan;
}

}  // namespace psatz
