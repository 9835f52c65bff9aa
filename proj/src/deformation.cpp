#include "lieb/deformation.hpp"

#include <algorithm>

#include "lieb/errors.hpp"

namespace lieb {

LieAlgebra linear_deform(const LieAlgebra& base, const Cochain2& phi, const Rational& t) {
    if (phi.dim() != base.dim()) throw dimension_error("cochain dimension differs from base");
    return LieAlgebra(base.name(), base.table().plus(phi.scaled(t)));
}

bool is_Z2_CH(const Cochain2& mu0, const Cochain2& phi) {
    if (phi.dim() != mu0.dim()) throw dimension_error("cochain dimensions differ");
    return is_identically_zero(sum(comp1(phi, mu0), comp1(mu0, phi)));
}

namespace {

constexpr std::size_t kFailureCap = 1000;

ConditionResult evaluate_condition(std::string name, const MultiMap& m) {
    ConditionResult r;
    r.name = std::move(name);
    r.failures = nonzero_tuples(m, kFailureCap, r.failure_count);
    r.ok = r.failure_count == 0;
    return r;
}

SystemReport check_kstep_system(const Cochain2& mu0, const Cochain2& phi, std::size_t k) {
    SystemReport rep;
    rep.conditions.push_back(evaluate_condition("delta_C", delta_C(mu0, phi)));
    rep.conditions.push_back(evaluate_condition("phi_bullet_phi", bullet(phi, phi)));

    // One shared pass over all (k+1)-tuples covers the degree-1..k word sums.
    std::vector<ConditionResult> degs;
    for (std::size_t d = 1; d <= k; ++d) {
        std::string name = "degree_" + std::to_string(d);
        if (d == 1) name += "_delta_R";
        if (d == k) name += "_phi_power";
        degs.push_back({name, true, 0, {}});
    }

    const std::size_t n = mu0.dim();
    std::vector<BasisIndex> t(k + 1, 1);
    while (true) {
        std::vector<SparseVec> vals = degree_values(mu0, phi, k, t);
        for (std::size_t d = 1; d <= k; ++d) {
            if (vals[d].empty()) continue;
            ConditionResult& cond = degs[d - 1];
            cond.ok = false;
            ++cond.failure_count;
            if (cond.failures.size() < kFailureCap) cond.failures.push_back({t, std::move(vals[d])});
        }
        std::size_t pos = k + 1;
        while (pos > 0) {
            if (t[pos - 1] < n) {
                ++t[pos - 1];
                break;
            }
            t[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) break;
    }
    for (auto& cond : degs) rep.conditions.push_back(std::move(cond));
    return rep;
}

} // namespace

SystemReport check_line_system(const Cochain2& mu0, const Cochain2& phi) {
    SystemReport rep;
    rep.conditions.push_back(evaluate_condition("delta_C", delta_C(mu0, phi)));
    rep.conditions.push_back(evaluate_condition("phi_bullet_phi", bullet(phi, phi)));
    return rep;
}

SystemReport check_2step_system(const Cochain2& mu0, const Cochain2& phi) {
    SystemReport rep;
    rep.conditions.push_back(
        evaluate_condition("Z2_CH", sum(comp1(phi, mu0), comp1(mu0, phi))));
    rep.conditions.push_back(evaluate_condition("phi_comp1_phi", comp1(phi, phi)));
    return rep;
}

SystemReport check_3step_system(const Cochain2& mu0, const Cochain2& phi) {
    return check_kstep_system(mu0, phi, 3);
}

SystemReport check_4step_system(const Cochain2& mu0, const Cochain2& phi) {
    return check_kstep_system(mu0, phi, 4);
}

// ---- g2 cocycle ------------------------------------------------------------------

Cochain2 g2_cocycle(std::size_t n, G2Component comp, const G2CocycleParams& p) {
    if (n < 5) throw dimension_error("this family needs dimension >= 5");

    auto admissible = [&](const IndexPair& ij) {
        auto [i, j] = ij;
        if (!(2 <= i && i < j && j <= n)) return false;
        if (i == 3 || i == 5 || j == 3 || j == 5) return false;
        if (comp == G2Component::C2) {
            if (j > n - 1) return false;
            if (i == 2 && j == 4) return false;
        }
        return true;
    };

    Cochain2 phi(n);
    for (const auto& [ij, c] : p.a3) {
        if (!admissible(ij)) throw param_error("pair not admissible for this component");
        phi.add_term(ij.first, ij.second, 3, c);
    }
    for (const auto& [ij, c] : p.a5) {
        if (!admissible(ij)) throw param_error("pair not admissible for this component");
        phi.add_term(ij.first, ij.second, 5, c);
    }
    if (comp == G2Component::C2) phi.add_term(2, 4, n, 1);
    return phi;
}

// ---- g3 cocycle ------------------------------------------------------------------

Cochain2 g3_cocycle(std::size_t n, G3Family family, const G3CocycleParams& p) {
    const std::size_t min_dim = family == G3Family::Phi1 ? 9 : 8;
    if (n < min_dim)
        throw dimension_error("this cocycle family needs dimension >= " +
                              std::to_string(min_dim));

    auto low_admissible = [&](const IndexPair& ij) {
        if (family == G3Family::Phi2) return ij == IndexPair{2, 4} || ij == IndexPair{4, 6};
        return ij == IndexPair{2, 4} || ij == IndexPair{2, 6} || ij == IndexPair{4, 6};
    };
    // The free high pairs start above the indices consumed as deformation
    // targets: X8 (and X9 for the first family) already receive the image of
    // the even pairs, and a nonzero value on a pair containing them breaks
    // phi o1 phi = 0.
    const std::size_t high_min = family == G3Family::Phi2 ? 9 : 8;

    Cochain2 phi(n);
    for (const auto& [ij, coeffs] : p.low) {
        if (!low_admissible(ij)) throw param_error("pair not admissible for this family");
        for (std::size_t t = 0; t < 3; ++t)
            phi.add_term(ij.first, ij.second, 2 * t + 3, coeffs[t]);
    }
    switch (family) {
        case G3Family::Phi1:
            if (!p.high.empty()) throw param_error("this family has no free high pairs");
            phi.add_term(2, 4, 8, 1);
            phi.add_term(2, 6, 9, 1);
            break;
        case G3Family::Phi2:
            phi.add_term(2, 4, 8, 1);
            for (const auto& [sl, c] : p.high) {
                auto [s, l] = sl;
                if (!(high_min <= s && s < l && l <= n))
                    throw param_error("high pair out of range");
                phi.add_term(s, l, 5, c);
            }
            break;
        case G3Family::Phi3:
            for (const auto& [sl, c] : p.high) {
                auto [s, l] = sl;
                if (!(high_min <= s && s < l && l <= n))
                    throw param_error("high pair out of range");
                phi.add_term(s, l, 3, c);
                phi.add_term(s, l, 5, c);
                phi.add_term(s, l, 7, c);
            }
            break;
    }
    return phi;
}

// ---- seq41 ------------------------------------------------------------------

namespace {

LieAlgebra base_4step(std::size_t n) {
    if (n < 5) throw dimension_error("the 4-step base needs dimension >= 5");
    Cochain2 mu0(n);
    for (BasisIndex i = 2; i <= 4; ++i) mu0.add_term(1, i, i + 1, 1);
    return LieAlgebra("g_1_0_0_" + std::to_string(n - 4), std::move(mu0));
}

void check_high_index(std::size_t n, BasisIndex k) {
    if (k < 6 || k > n) throw param_error("index must lie in 6..n");
}

} // namespace

Cochain2 seq41_cochain(std::size_t n, Seq41Family family, const Seq41Params& p) {
    if (n < 5) throw dimension_error("this family needs dimension >= 5");
    if (family == Seq41Family::One && !p.dk.empty())
        throw param_error("d coefficients belong to the second family");
    if (family == Seq41Family::Two && !p.ak.empty())
        throw param_error("a_k coefficients belong to the first family");

    Cochain2 phi(n);
    phi.add_term(2, 3, 5, p.a);
    if (family == Seq41Family::Two)
        for (const auto& [k, c] : p.dk) {
            check_high_index(n, k);
            phi.add_term(2, 3, k, c);
        }
    for (const auto& [k, c] : p.bk) {
        check_high_index(n, k);
        phi.add_term(2, k, 5, c);
    }
    if (family == Seq41Family::One)
        for (const auto& [k, c] : p.ak) {
            check_high_index(n, k);
            phi.add_term(2, k, 4, c);
            phi.add_term(3, k, 5, c);
        }
    for (const auto& [ij, c] : p.c) {
        auto [i, j] = ij;
        check_high_index(n, i);
        check_high_index(n, j);
        if (i >= j) throw param_error("pair coefficients need i < j");
        phi.add_term(i, j, 5, c);
    }
    return phi;
}

std::map<BasisIndex, Rational> seq41_constraint(std::size_t n, const Seq41Params& p) {
    auto d_of = [&](BasisIndex i) -> Rational {
        auto it = p.dk.find(i);
        return it == p.dk.end() ? Rational(0) : it->second;
    };
    auto c_of = [&](BasisIndex i, BasisIndex j) -> Rational {
        auto it = p.c.find({i, j});
        return it == p.c.end() ? Rational(0) : it->second;
    };
    std::map<BasisIndex, Rational> residuals;
    for (BasisIndex j = 6; j <= n; ++j) {
        Rational r = 0;
        for (BasisIndex i = 6; i < j; ++i) r += c_of(i, j) * d_of(i);
        for (BasisIndex i = j + 1; i <= n; ++i) r -= c_of(j, i) * d_of(i);
        residuals[j] = r;
    }
    return residuals;
}

LieAlgebra seq41_algebra(std::size_t n, Seq41Family family, const Seq41Params& p) {
    Cochain2 phi = seq41_cochain(n, family, p);
    if (family == Seq41Family::Two) {
        for (const auto& [j, r] : seq41_constraint(n, p))
            if (r != 0)
                throw constraint_error("closure constraint fails at j=" + std::to_string(j) +
                                       ": residual " + to_string(r));
    }
    std::string name = family == Seq41Family::One ? "seq41_one_" : "seq41_two_";
    return LieAlgebra(name + std::to_string(n), base_4step(n).table().plus(phi));
}

std::pair<LieAlgebra, Seq41Report> seq41_family(std::size_t n, Seq41Family family,
                                                const Seq41Params& p,
                                                const SamplingConfig& cfg) {
    LieAlgebra g = seq41_algebra(n, family, p);

    Seq41Report rep;
    rep.jacobi_ok = jacobi_check(g).empty();
    rep.sequence = characteristic_sequence(g, cfg).parts;
    rep.breadth_value = breadth(g, cfg).breadth;

    std::vector<std::size_t> expected{4};
    expected.insert(expected.end(), n - 4, 1);
    rep.sequence_ok = rep.sequence.parts == expected;
    rep.breadth_ok = rep.breadth_value == 3;
    return {std::move(g), rep};
}

// ---- 3-step shape -------------------------------------------------------------

ShapeReport matches_3step_shape(const Cochain2& phi) {
    const std::size_t n = phi.dim();
    ShapeReport rep;
    auto problem = [&](const std::string& msg) {
        rep.ok = false;
        rep.problems.push_back(msg);
    };
    if (n < 6) {
        problem("shape is defined for dimension >= 6");
        return rep;
    }

    auto allowed_targets = [&](BasisIndex i, BasisIndex j) -> std::vector<BasisIndex> {
        if (i == 2 && (j == 3 || j == 5 || j == 6)) return {4, 6, 7};
        if (i == 3 && j == 5) return {4, 6, 7};
        if (i == 5 && j == 6) return {4, 7};
        if (i == 2 && j >= 7) return {4, 6};
        if (i == 5 && j >= 7) return {3, 4, 6};
        if (i == 6 && j >= 7) return {4};
        return {};
    };

    for (const auto& [pair, v] : phi.entries()) {
        auto [i, j] = pair;
        auto targets = allowed_targets(i, j);
        if (targets.empty()) {
            problem("unexpected support on pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
            continue;
        }
        for (const auto& [k, c] : v)
            if (std::find(targets.begin(), targets.end(), k) == targets.end())
                problem("pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") has a component on X" + std::to_string(k));
    }

    auto coeff = [&](BasisIndex i, BasisIndex j, BasisIndex k) -> Rational {
        SparseVec v = phi.basis_value(i, j);
        auto it = v.find(k);
        return it == v.end() ? Rational(0) : it->second;
    };

    // Coupled coefficients of the family.
    if (n >= 7 && coeff(3, 5, 7) != coeff(2, 6, 7))
        problem("X7 components of (3,5) and (2,6) differ");
    for (BasisIndex i = 7; i <= n; ++i)
        if (coeff(6, i, 4) != coeff(5, i, 3))
            problem("X4 component of (6," + std::to_string(i) +
                    ") does not match the X3 component of (5," + std::to_string(i) + ")");
    return rep;
}

} // namespace lieb
