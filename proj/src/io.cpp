#include "lieb/io.hpp"

#include <set>

#include <json.hpp>

#include "lieb/errors.hpp"

namespace lieb::io {

using ordered_json = nlohmann::ordered_json;

namespace {

// Parses the shared {"name", "dim", "brackets"} layout into a table.
std::pair<std::string, Cochain2> parse_table(const ordered_json& j, const std::string& what) {
    if (!j.is_object()) throw parse_error(what + ": top level must be an object");
    if (!j.contains("name") || !j["name"].is_string())
        throw parse_error(what + ": missing string field \"name\"");
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw parse_error(what + ": missing nonnegative integer field \"dim\"");
    std::size_t dim = j["dim"].get<std::size_t>();
    if (dim == 0) throw parse_error(what + ": \"dim\" must be positive");
    if (!j.contains("brackets") || !j["brackets"].is_array())
        throw parse_error(what + ": missing array field \"brackets\"");

    Cochain2 table(dim);
    std::set<IndexPair> seen;
    for (const auto& rec : j["brackets"]) {
        if (!rec.is_object() || !rec.contains("i") || !rec.contains("j") ||
            !rec.contains("terms"))
            throw parse_error(what + ": each bracket needs fields i, j, terms");
        if (!rec["i"].is_number_unsigned() || !rec["j"].is_number_unsigned())
            throw parse_error(what + ": bracket indices must be positive integers");
        std::size_t i = rec["i"].get<std::size_t>();
        std::size_t jj = rec["j"].get<std::size_t>();
        if (i < 1 || jj < 1 || i > dim || jj > dim || i >= jj)
            throw parse_error(what + ": bracket (" + std::to_string(i) + "," +
                              std::to_string(jj) + ") violates 1 <= i < j <= dim");
        if (!seen.insert({i, jj}).second)
            throw parse_error(what + ": duplicate bracket (" + std::to_string(i) + "," +
                              std::to_string(jj) + ")");
        if (!rec["terms"].is_array()) throw parse_error(what + ": \"terms\" must be an array");
        std::set<std::size_t> seen_k;
        for (const auto& term : rec["terms"]) {
            if (!term.is_object() || !term.contains("k") || !term.contains("c") ||
                !term["k"].is_number_unsigned() || !term["c"].is_string())
                throw parse_error(what + ": each term needs integer k and string c");
            std::size_t k = term["k"].get<std::size_t>();
            if (k < 1 || k > dim)
                throw parse_error(what + ": target index " + std::to_string(k) +
                                  " out of range in bracket (" + std::to_string(i) + "," +
                                  std::to_string(jj) + ")");
            if (!seen_k.insert(k).second)
                throw parse_error(what + ": duplicate target " + std::to_string(k) +
                                  " in bracket (" + std::to_string(i) + "," +
                                  std::to_string(jj) + ")");
            Rational c = parse_rational(term["c"].get<std::string>());
            table.add_term(i, jj, k, c);
        }
    }
    return {j["name"].get<std::string>(), std::move(table)};
}

ordered_json table_to_json(const std::string& name, const Cochain2& table) {
    ordered_json j;
    j["name"] = name;
    j["dim"] = table.dim();
    ordered_json brackets = ordered_json::array();
    for (const auto& [pair, v] : table.entries()) {
        ordered_json rec;
        rec["i"] = pair.first;
        rec["j"] = pair.second;
        ordered_json terms = ordered_json::array();
        for (const auto& [k, c] : v) {
            ordered_json term;
            term["k"] = k;
            term["c"] = lieb::to_string(c);
            terms.push_back(std::move(term));
        }
        rec["terms"] = std::move(terms);
        brackets.push_back(std::move(rec));
    }
    j["brackets"] = std::move(brackets);
    return j;
}

ordered_json parse_json(const std::string& text, const std::string& what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(what + ": " + e.what());
    }
}

} // namespace

LieAlgebra parse_algebra(const std::string& text, LoadMode mode) {
    auto [name, table] = parse_table(parse_json(text, "algebra file"), "algebra file");
    LieAlgebra g(name, std::move(table));
    if (mode == LoadMode::Strict) {
        auto violations = jacobi_check(g);
        if (!violations.empty()) {
            const auto& v = violations.front();
            throw parse_error("algebra \"" + g.name() + "\" fails the Jacobi identity at (" +
                              std::to_string(v.i) + "," + std::to_string(v.j) + "," +
                              std::to_string(v.k) + "); load with --lenient to inspect");
        }
    }
    return g;
}

std::string serialize_algebra(const LieAlgebra& g) {
    return table_to_json(g.name(), g.table()).dump(2) + "\n";
}

CochainFile parse_cochain(const std::string& text) {
    ordered_json j = parse_json(text, "cochain file");
    auto [name, table] = parse_table(j, "cochain file");
    CochainFile out{name, "", std::move(table)};
    if (j.contains("base")) {
        if (!j["base"].is_string()) throw parse_error("cochain file: \"base\" must be a string");
        out.base = j["base"].get<std::string>();
    }
    return out;
}

std::string serialize_cochain(const CochainFile& c) {
    ordered_json j = table_to_json(c.name, c.phi);
    if (!c.base.empty()) {
        // keep key order: name, base, dim, brackets
        ordered_json with_base;
        with_base["name"] = j["name"];
        with_base["base"] = c.base;
        with_base["dim"] = j["dim"];
        with_base["brackets"] = j["brackets"];
        j = std::move(with_base);
    }
    return j.dump(2) + "\n";
}

namespace {

ordered_json vec_to_json(const Vec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(lieb::to_string(x));
    return a;
}

ordered_json invariants_report(const LieAlgebra& g, const SamplingConfig& cfg) {
    ordered_json j;
    j["name"] = g.name();
    j["dim"] = g.dim();
    j["nilpotency_class"] = nilpotency_class(g);

    BreadthCertificate cert = breadth(g, cfg);
    j["breadth"] = cert.breadth;
    j["breadth_witness"] = vec_to_json(cert.witness);
    j["seed"] = cfg.seed;
    j["samples_tried"] = cert.samples_tried;

    CharacteristicSequence seq = characteristic_sequence(g, cfg);
    j["characteristic_sequence"] = seq.parts.parts;
    j["characteristic_vector"] = vec_to_json(seq.witness);

    auto dims_of = [](const std::vector<Subspace>& series) {
        std::vector<std::size_t> dims;
        for (const auto& s : series) dims.push_back(s.dim());
        return dims;
    };
    j["lower_central_dims"] = dims_of(lower_central_series(g));
    j["ascending_dims"] = dims_of(ascending_series(g));
    j["derived_dim"] = derived_subalgebra(g).dim();
    j["center_dim"] = center(g).dim();

    TheoremReport rep = verify_theorem_b(g, cfg);
    ordered_json cross;
    cross["breadth_from_sequence"] = rep.breadth_from_seq;
    cross["formula_match"] = rep.formula_match;
    cross["bound_checked"] = rep.bound_checked;
    if (rep.bound_checked) {
        cross["bound"] = rep.bound;
        cross["bound_ok"] = rep.bound_ok;
    }
    cross["pass"] = rep.pass();
    j["theorem_check"] = std::move(cross);
    return j;
}

} // namespace

std::string invariants_json(const LieAlgebra& g, const SamplingConfig& cfg) {
    return invariants_report(g, cfg).dump(2) + "\n";
}

std::string invariants_text(const LieAlgebra& g, const SamplingConfig& cfg) {
    ordered_json j = invariants_report(g, cfg);
    std::string out;
    out += "name: " + j["name"].get<std::string>() + "\n";
    out += "dim: " + std::to_string(j["dim"].get<std::size_t>()) + "\n";
    out += "nilpotency class: " + std::to_string(j["nilpotency_class"].get<std::size_t>()) + "\n";
    out += "breadth (Monte Carlo, seed=" + std::to_string(j["seed"].get<std::uint64_t>()) +
           "): " + std::to_string(j["breadth"].get<std::size_t>()) + "\n";
    auto vec_line = [&](const char* field) {
        std::string line = "[";
        bool first = true;
        for (const auto& c : j[field]) {
            if (!first) line += ", ";
            line += c.get<std::string>();
            first = false;
        }
        return line + "]";
    };
    out += "breadth witness: " + vec_line("breadth_witness") + "\n";
    JordanType seq{j["characteristic_sequence"].get<std::vector<std::size_t>>()};
    out += "characteristic sequence: " + lieb::to_string(seq) + "\n";
    out += "characteristic vector: " + vec_line("characteristic_vector") + "\n";

    auto dims_line = [&](const char* label, const char* field) {
        std::string line = label;
        for (auto d : j[field].get<std::vector<std::size_t>>()) line += " " + std::to_string(d);
        return line + "\n";
    };
    out += dims_line("lower central series dims:", "lower_central_dims");
    out += dims_line("ascending series dims:", "ascending_dims");
    out += "derived subalgebra dim: " + std::to_string(j["derived_dim"].get<std::size_t>()) + "\n";
    out += "center dim: " + std::to_string(j["center_dim"].get<std::size_t>()) + "\n";
    out += std::string("theorem cross-check: ") +
           (j["theorem_check"]["pass"].get<bool>() ? "pass" : "FAIL") + "\n";
    return out;
}

namespace {

const char* status_name(VerifyRow::Status s) {
    switch (s) {
        case VerifyRow::Status::Ok: return "ok";
        case VerifyRow::Status::Mismatch: return "mismatch";
        case VerifyRow::Status::AnnotatedTypo: return "annotated-typo";
    }
    return "?";
}

std::string params_label(const Params& p) {
    std::string out;
    for (const auto& [k, v] : p) {
        if (!out.empty()) out += ",";
        out += k + "=" + lieb::to_string(v);
    }
    return out;
}

} // namespace

std::string verify_report_json(const VerifyReport& report) {
    ordered_json j;
    j["mismatches"] = report.mismatch_count();
    j["annotated_typos"] = report.annotated_count();
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.rows) {
        ordered_json row;
        row["key"] = r.key;
        row["dim"] = r.n;
        if (!r.params.empty()) {
            ordered_json ps;
            for (const auto& [k, v] : r.params) ps[k] = lieb::to_string(v);
            row["params"] = std::move(ps);
        }
        row["status"] = status_name(r.status);
        if (!r.detail.empty()) row["detail"] = r.detail;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string verify_report_text(const VerifyReport& report) {
    std::string out;
    for (const auto& r : report.rows) {
        out += std::string(r.status == VerifyRow::Status::Ok ? "  ok  " : "  !!  ") + r.key +
               " n=" + std::to_string(r.n);
        if (!r.params.empty()) out += " [" + params_label(r.params) + "]";
        if (r.status != VerifyRow::Status::Ok)
            out += std::string(" (") + status_name(r.status) + ": " + r.detail + ")";
        out += "\n";
    }
    out += std::to_string(report.rows.size()) + " instance(s), " +
           std::to_string(report.mismatch_count()) + " mismatch(es), " +
           std::to_string(report.annotated_count()) + " annotated typo(s)\n";
    return out;
}

std::string system_report_json(const SystemReport& report) {
    ordered_json j;
    j["pass"] = report.pass();
    ordered_json conds = ordered_json::array();
    for (const auto& c : report.conditions) {
        ordered_json cond;
        cond["name"] = c.name;
        cond["pass"] = c.ok;
        cond["failing_tuples"] = c.failure_count;
        ordered_json fails = ordered_json::array();
        for (const auto& f : c.failures) {
            ordered_json fj;
            fj["tuple"] = f.tuple;
            ordered_json res;
            for (const auto& [k, v] : f.residual) res[std::to_string(k)] = lieb::to_string(v);
            fj["residual"] = std::move(res);
            fails.push_back(std::move(fj));
        }
        if (!c.ok) cond["failures"] = std::move(fails);
        conds.push_back(std::move(cond));
    }
    j["conditions"] = std::move(conds);
    return j.dump(2) + "\n";
}

std::string system_report_text(const SystemReport& report) {
    std::string out;
    for (const auto& c : report.conditions) {
        out += "  " + c.name + ": " + (c.ok ? "pass" : "FAIL") + "\n";
        if (!c.ok) {
            out += "    failing tuples: " + std::to_string(c.failure_count) + "\n";
            std::size_t shown = 0;
            for (const auto& f : c.failures) {
                if (shown++ >= 3) break;
                out += "    at (";
                for (std::size_t t = 0; t < f.tuple.size(); ++t)
                    out += (t ? "," : "") + std::to_string(f.tuple[t]);
                out += ")\n";
            }
        }
    }
    out += std::string("overall: ") + (report.pass() ? "pass" : "FAIL") + "\n";
    return out;
}

} // namespace lieb::io
