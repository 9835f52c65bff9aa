#pragma once

#include <optional>

#include "lieb/deformation.hpp"

namespace lieb {

using Params = std::map<std::string, Rational>;

struct Expected {
    std::vector<std::size_t> sequence;
    std::size_t breadth = 0;
    std::size_t nil_class = 0;
};

// One named family of algebras.  Tables are transcribed exactly as printed in
// their sources; an entry whose printed table fails verification carries a
// typo_note describing the failure and points at a corrected variant under
// the "_fixed" key suffix.  Both variants stay in the catalog.
struct CatalogEntry {
    std::string key;
    std::string summary;
    std::size_t min_dim = 1;
    std::size_t max_dim = 0; // 0 = unbounded
    enum class Parity { Any, Even, Odd } parity = Parity::Any;

    // Named parameters with optional defaults; a parameter without a default
    // must be supplied by the caller.
    std::vector<std::pair<std::string, std::optional<Rational>>> params;
    // Accepts coefficient grids like a6, b7, c6_8 instead of a fixed list.
    bool free_form_params = false;

    std::function<LieAlgebra(std::size_t, const Params&)> build;
    std::function<Expected(std::size_t)> expected;

    std::string typo_note;
    std::function<bool(std::size_t)> typo_applies; // null: never
    std::string fixed_key;

    // Parameter sets verify_catalog runs (defaults only when empty).
    std::vector<Params> verify_sweep;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* catalog_find(const std::string& key);
bool catalog_accepts(const CatalogEntry& e, std::size_t n);

// Resolves parameters against the entry (throws unknown_key_error,
// dimension_error, missing_param_error, param_error) and builds the table.
LieAlgebra catalog_build(const std::string& key, std::size_t n, const Params& params = {});

struct VerifyRow {
    std::string key;
    std::size_t n = 0;
    Params params;
    enum class Status { Ok, Mismatch, AnnotatedTypo } status = Status::Ok;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    std::size_t mismatch_count() const;
    std::size_t annotated_count() const;
};

// Builds every entry instantiable at the requested dimensions and compares
// Jacobi, nilpotency class, characteristic sequence (across seeds 0, 1, 2),
// breadth, the breadth formula and the centre bound against the expected
// values.  `only_keys` empty means all entries.
VerifyReport verify_catalog(const std::vector<std::size_t>& dims,
                            const SamplingConfig& cfg = {},
                            const std::vector<std::string>& only_keys = {});

} // namespace lieb
