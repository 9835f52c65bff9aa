#pragma once

#include <string>

#include "lieb/catalog.hpp"

namespace lieb::io {

enum class LoadMode { Strict, Lenient };

// Parses the JSON algebra format:
//   {"name": ..., "dim": n, "brackets": [{"i":1,"j":2,"terms":[{"k":3,"c":"1"}]}]}
// Indices are 1-based with 1 <= i < j <= dim; coefficients are canonical
// rational strings.  Strict mode rejects tables that fail the Jacobi check.
LieAlgebra parse_algebra(const std::string& text, LoadMode mode = LoadMode::Strict);

// Canonical serialization: brackets ordered by (i, j), terms by k, reduced
// "p/q" coefficients.  parse(serialize(g)) == g and serialization is a fixed
// point of parse-then-serialize.
std::string serialize_algebra(const LieAlgebra& g);

struct CochainFile {
    std::string name;
    std::string base; // optional: name of the intended base algebra
    Cochain2 phi;
};

CochainFile parse_cochain(const std::string& text);
std::string serialize_cochain(const CochainFile& c);

// Invariant report of a nilpotent algebra, as deterministic JSON or text.
// Shared by the CLI and the test suites so both see identical bytes.
std::string invariants_json(const LieAlgebra& g, const SamplingConfig& cfg);
std::string invariants_text(const LieAlgebra& g, const SamplingConfig& cfg);

std::string verify_report_json(const VerifyReport& report);
std::string verify_report_text(const VerifyReport& report);

std::string system_report_json(const SystemReport& report);
std::string system_report_text(const SystemReport& report);

} // namespace lieb::io
