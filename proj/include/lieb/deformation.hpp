#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "lieb/invariants.hpp"

namespace lieb {

// Bracket table of mu0 + t*phi.  The result is not assumed to satisfy the
// Jacobi identity; callers verify.
LieAlgebra linear_deform(const LieAlgebra& base, const Cochain2& phi, const Rational& t = 1);

// Membership in the 2-step subcomplex cocycles: phi o1 mu0 + mu0 o1 phi = 0.
bool is_Z2_CH(const Cochain2& mu0, const Cochain2& phi);

struct ConditionResult {
    std::string name;
    bool ok = false;
    std::size_t failure_count = 0;
    std::vector<TupleFailure> failures; // capped sample of failing tuples
};

struct SystemReport {
    std::vector<ConditionResult> conditions;
    bool pass() const {
        for (const auto& c : conditions)
            if (!c.ok) return false;
        return true;
    }
};

// Jacobi of mu0 + t*phi for every t: delta_C(phi) = 0 and phi • phi = 0.
SystemReport check_line_system(const Cochain2& mu0, const Cochain2& phi);

// 2-step deformation system: phi in Z2_CH and phi o1 phi = 0.
SystemReport check_2step_system(const Cochain2& mu0, const Cochain2& phi);

// 3-step system: delta_C, phi • phi, and the degree-1..3 components of the
// length-3 word expansion (degree 1 is the 4-linear delta_R).
SystemReport check_3step_system(const Cochain2& mu0, const Cochain2& phi);

// 4-step system: delta_C, phi • phi, and the degree-1..4 components of the
// length-4 word expansion (degree 1 is the 5-linear delta_R).
SystemReport check_4step_system(const Cochain2& mu0, const Cochain2& phi);

// ---- parameterized cocycle families ---------------------------------------

// Deformations of the 2-step double-block algebra (brackets [X1,X2]=X3,
// [X1,X4]=X5 on K^n): values land in span{X3, X5}, component C2 additionally
// sends (X2, X4) to Xn.
enum class G2Component { C1, C2 };
struct G2CocycleParams {
    std::map<IndexPair, Rational> a3; // coefficient of X3 per pair
    std::map<IndexPair, Rational> a5; // coefficient of X5 per pair
};
Cochain2 g2_cocycle(std::size_t n, G2Component comp, const G2CocycleParams& p);

// Deformations of the 2-step triple-block algebra ([X1,X_{2i}]=X_{2i+1},
// i=1,2,3 on K^n).  `low` holds the X3/X5/X7 coefficients of the even pairs
// (2,4), (2,6), (4,6); `high` one coefficient per admissible pair (s,l) of
// high indices.
enum class G3Family { Phi1, Phi2, Phi3 };
struct G3CocycleParams {
    std::map<IndexPair, std::array<Rational, 3>> low;
    std::map<IndexPair, Rational> high;
};
Cochain2 g3_cocycle(std::size_t n, G3Family family, const G3CocycleParams& p);

// Deformations of the 4-step base ([X1,Xi]=X_{i+1}, i=2,3,4 on K^n) with
// characteristic sequence (4,1,...,1).
enum class Seq41Family { One, Two };
struct Seq41Params {
    Rational a;                        // [X2,X3] coefficient on X5
    std::map<BasisIndex, Rational> ak; // family One: [X2,Xk] on X4 and [X3,Xk] on X5
    std::map<BasisIndex, Rational> bk; // [X2,Xk] coefficient on X5
    std::map<BasisIndex, Rational> dk; // family Two: [X2,X3] coefficients on Xk
    std::map<IndexPair, Rational> c;   // [Xi,Xj] on X5, 6 <= i < j <= n
};

// The deformation cochain alone, shape-checked but without the closure
// constraint (so ill-formed family-Two parameter sets can be fed to
// check_4step_system).
Cochain2 seq41_cochain(std::size_t n, Seq41Family family, const Seq41Params& p);

// Family-Two closure residuals, indexed by j in 6..n:
// sum_{i<j} c_{i,j} d_i - sum_{i>j} c_{j,i} d_i.
std::map<BasisIndex, Rational> seq41_constraint(std::size_t n, const Seq41Params& p);

// The deformed algebra itself.  Family Two throws constraint_error when the
// closure residuals are nonzero.
LieAlgebra seq41_algebra(std::size_t n, Seq41Family family, const Seq41Params& p);

struct Seq41Report {
    bool jacobi_ok = false;
    JordanType sequence;
    std::size_t breadth_value = 0;
    bool sequence_ok = false; // (4,1,...,1)
    bool breadth_ok = false;  // 3
    bool pass() const { return jacobi_ok && sequence_ok && breadth_ok; }
};

// Builds the full algebra and verifies it.  Family Two throws
// constraint_error when the closure residuals are nonzero.
std::pair<LieAlgebra, Seq41Report> seq41_family(std::size_t n, Seq41Family family,
                                                const Seq41Params& p,
                                                const SamplingConfig& cfg = {});

// Provisional shape test for deformations of the 3-step base ([X1,Xi]=X_{i+1},
// i=2,3,5): support and target pattern of the reduced cocycle family,
// including the two coupled-coefficient identities.
struct ShapeReport {
    bool ok = true;
    std::vector<std::string> problems;
};
ShapeReport matches_3step_shape(const Cochain2& phi);

} // namespace lieb
