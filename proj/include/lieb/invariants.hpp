#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieb/lie_algebra.hpp"

namespace lieb {

// Deterministic sampling scheme shared by the generic-element searches: all
// basis vectors, all pairwise basis sums, then `samples` seeded random integer
// vectors with entries in [-bound, bound].  Max rank and lex-max Jordan type
// are attained on dense open sets, so the sampled value is the true invariant
// with overwhelming probability; each individual sample is evaluated exactly.
struct SamplingConfig {
    std::size_t samples = 25;
    std::uint64_t seed = 0;
    long bound = 10;
};

// Nonincreasing partition: Jordan block sizes of a nilpotent operator.
struct JordanType {
    std::vector<std::size_t> parts;
    bool operator==(const JordanType&) const = default;
};

// Lexicographic order, the shorter sequence padded with zeros (never needed
// when both sum to the same dimension).
bool lex_less(const JordanType& a, const JordanType& b);
std::string to_string(const JordanType& t); // "(3,2,1)"

struct BreadthCertificate {
    std::size_t breadth = 0;
    Vec witness;
    std::size_t samples_tried = 0;
    std::uint64_t seed = 0;
};

struct CharacteristicSequence {
    JordanType parts;
    Vec witness; // a characteristic vector candidate, outside C^1(g)
};

// Jordan type of ad x.  Throws not_nilpotent_error if ad x is not nilpotent.
JordanType jordan_type_of(const LieAlgebra& g, const Vec& x);

// max rank(ad x) over the sample set, with the maximizing witness.
BreadthCertificate breadth(const LieAlgebra& g, const SamplingConfig& cfg = {});

// max rank(ad x restricted to the ideal); throws not_an_ideal_error.
BreadthCertificate breadth_on_ideal(const LieAlgebra& g, const Subspace& ideal,
                                    const SamplingConfig& cfg = {});

// Lex-max Jordan type over sampled x outside the derived subalgebra; random
// samples landing inside C^1 are discarded and redrawn.
CharacteristicSequence characteristic_sequence(const LieAlgebra& g,
                                               const SamplingConfig& cfg = {});

// sum(c_i - 1) over all parts; equals the breadth of a nilpotent algebra with
// this characteristic sequence.
std::size_t breadth_from_sequence(const JordanType& t);

struct TheoremReport {
    std::size_t breadth_value = 0;
    JordanType sequence;
    std::size_t breadth_from_seq = 0;
    bool formula_match = false; // breadth == sum(c_i - 1)
    bool bound_checked = false; // skipped for abelian algebras (Z = g)
    std::size_t bound = 0;      // dim g - dim Z(g) - 1
    bool bound_ok = true;
    bool pass() const { return formula_match && bound_ok; }
};

// Computes breadth and characteristic sequence independently and checks the
// breadth formula plus the centre bound b <= dim(g/Z) - 1.
TheoremReport verify_theorem_b(const LieAlgebra& g, const SamplingConfig& cfg = {});

enum class BreadthTwoClass { TwoStep22, ThreeStep31, NotBreadth2 };
std::string to_string(BreadthTwoClass c);

// Breadth-2 dichotomy: sequence (2,2,1,...,1) or (3,1,...,1).  A breadth-2
// algebra matching neither shape raises theorem_violation.
BreadthTwoClass classify_b2(const LieAlgebra& g, const SamplingConfig& cfg = {});

} // namespace lieb
