#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lieb/errors.hpp"
#include "lieb/io.hpp"

namespace {

// Exit codes: 0 success, 1 validation error, 2 check failed, 3 internal.
constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitInternal = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lieb::parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lieb::parse_error("cannot write file: " + path);
    out << text;
}

lieb::SamplingConfig sampling_defaults() {
    lieb::SamplingConfig cfg;
    if (const char* env = std::getenv("LIE_BREADTH_SEED"))
        cfg.seed = std::strtoull(env, nullptr, 10);
    return cfg;
}

void add_sampling_flags(CLI::App* cmd, lieb::SamplingConfig& cfg) {
    cmd->add_option("--samples", cfg.samples, "random samples per search")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
    cmd->add_option("--bound", cfg.bound, "random coordinate bound")->capture_default_str();
}

std::vector<std::size_t> parse_dim_range(const std::string& spec) {
    auto dots = spec.find("..");
    auto to_dim = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(s, &pos);
            if (pos != s.size() || v == 0) throw std::invalid_argument(s);
            return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw lieb::parse_error("bad dimension range: " + spec);
        }
    };
    std::vector<std::size_t> dims;
    if (dots == std::string::npos) {
        dims.push_back(to_dim(spec));
        return dims;
    }
    std::size_t lo = to_dim(spec.substr(0, dots));
    std::size_t hi = to_dim(spec.substr(dots + 2));
    if (hi < lo) throw lieb::parse_error("bad dimension range: " + spec);
    for (std::size_t n = lo; n <= hi; ++n) dims.push_back(n);
    return dims;
}

lieb::Params parse_param_flags(const std::vector<std::string>& kvs) {
    lieb::Params params;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw lieb::parse_error("--param expects name=value, got: " + kv);
        params[kv.substr(0, eq)] = lieb::parse_rational(kv.substr(eq + 1));
    }
    return params;
}

int run(int argc, char** argv) {
    CLI::App app{"Breadth and characteristic-sequence invariants of rational nilpotent Lie algebras"};
    app.require_subcommand(1);

    lieb::SamplingConfig cfg = sampling_defaults();

    // check
    std::string check_file;
    auto* check = app.add_subcommand("check", "verify the Jacobi identity of an algebra file");
    check->add_option("file", check_file, "algebra file")->required();

    // invariants
    std::string inv_file;
    bool inv_json = false;
    auto* inv = app.add_subcommand("invariants", "breadth, characteristic sequence, series");
    inv->add_option("file", inv_file, "algebra file")->required();
    inv->add_flag("--json", inv_json, "emit JSON");
    add_sampling_flags(inv, cfg);

    // classify
    std::string cls_file;
    auto* cls = app.add_subcommand("classify", "breadth-2 dichotomy classification");
    cls->add_option("file", cls_file, "algebra file")->required();
    add_sampling_flags(cls, cfg);

    // catalog list|emit
    auto* catalog = app.add_subcommand("catalog", "built-in algebra catalog");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list", "list catalog keys");
    std::string emit_key, emit_out;
    std::size_t emit_dim = 0;
    std::vector<std::string> emit_params;
    auto* cat_emit = catalog->add_subcommand("emit", "write one catalog algebra as JSON");
    cat_emit->add_option("key", emit_key, "catalog key")->required();
    cat_emit->add_option("--dim", emit_dim, "dimension")->required();
    cat_emit->add_option("--param", emit_params, "name=value (repeatable)");
    cat_emit->add_option("-o,--output", emit_out, "output file (default stdout)");

    // verify-catalog
    std::string dims_spec = "4..10";
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify-catalog", "check every catalog table against its expected invariants");
    verify->add_option("--dims", dims_spec, "dimension range, e.g. 4..10")->capture_default_str();
    verify->add_flag("--json", verify_json, "emit JSON");
    add_sampling_flags(verify, cfg);

    // cocycle-check
    std::string cc_base, cc_phi, cc_system;
    bool cc_json = false;
    auto* cc = app.add_subcommand("cocycle-check", "run a deformation system checker");
    cc->add_option("--base", cc_base, "base algebra file")->required();
    cc->add_option("--phi", cc_phi, "cochain file")->required();
    cc->add_option("--system", cc_system, "line|2step|3step|4step")->required();
    cc->add_flag("--json", cc_json, "emit JSON");

    // deform
    std::string def_base, def_phi, def_out, def_t = "1";
    auto* def = app.add_subcommand("deform", "write the linear deformation base + t*phi");
    def->add_option("--base", def_base, "base algebra file")->required();
    def->add_option("--phi", def_phi, "cochain file")->required();
    def->add_option("--t", def_t, "deformation parameter (rational)")->capture_default_str();
    def->add_option("-o,--output", def_out, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    if (check->parsed()) {
        lieb::LieAlgebra g = lieb::io::parse_algebra(slurp(check_file), lieb::io::LoadMode::Lenient);
        auto violations = lieb::jacobi_check(g);
        if (violations.empty()) {
            std::cout << "jacobi: pass (" << g.name() << ", dim " << g.dim() << ")\n";
            return kExitOk;
        }
        std::cout << "jacobi: FAIL (" << violations.size() << " violating triple(s))\n";
        for (const auto& v : violations)
            std::cout << "  (" << v.i << "," << v.j << "," << v.k
                      << "): residual " << lieb::to_string(v.residual) << "\n";
        return kExitCheckFailed;
    }

    if (inv->parsed()) {
        lieb::LieAlgebra g = lieb::io::parse_algebra(slurp(inv_file));
        std::cout << (inv_json ? lieb::io::invariants_json(g, cfg)
                               : lieb::io::invariants_text(g, cfg));
        return kExitOk;
    }

    if (cls->parsed()) {
        lieb::LieAlgebra g = lieb::io::parse_algebra(slurp(cls_file));
        auto kind = lieb::classify_b2(g, cfg);
        auto seq = lieb::characteristic_sequence(g, cfg);
        switch (kind) {
            case lieb::BreadthTwoClass::TwoStep22:
                std::cout << "2-step, c=" << lieb::to_string(seq.parts) << "\n";
                break;
            case lieb::BreadthTwoClass::ThreeStep31:
                std::cout << "3-step, c=" << lieb::to_string(seq.parts) << "\n";
                break;
            case lieb::BreadthTwoClass::NotBreadth2:
                std::cout << "breadth " << lieb::breadth(g, cfg).breadth
                          << ", c=" << lieb::to_string(seq.parts) << "\n";
                break;
        }
        return kExitOk;
    }

    if (cat_list->parsed()) {
        for (const auto& e : lieb::catalog_entries()) {
            std::cout << e.key << "  dim>=" << e.min_dim;
            if (e.max_dim) std::cout << " dim<=" << e.max_dim;
            if (e.parity == lieb::CatalogEntry::Parity::Even) std::cout << " even";
            if (e.parity == lieb::CatalogEntry::Parity::Odd) std::cout << " odd";
            for (const auto& [p, def] : e.params) {
                std::cout << "  param " << p;
                if (def) std::cout << "=" << lieb::to_string(*def);
            }
            std::cout << "  -- " << e.summary;
            if (!e.typo_note.empty()) std::cout << " [suspected typo; see " << e.fixed_key << "]";
            std::cout << "\n";
        }
        return kExitOk;
    }

    if (cat_emit->parsed()) {
        lieb::LieAlgebra g = lieb::catalog_build(emit_key, emit_dim, parse_param_flags(emit_params));
        std::string text = lieb::io::serialize_algebra(g);
        if (emit_out.empty())
            std::cout << text;
        else
            write_file(emit_out, text);
        return kExitOk;
    }

    if (verify->parsed()) {
        auto report = lieb::verify_catalog(parse_dim_range(dims_spec), cfg);
        std::cout << (verify_json ? lieb::io::verify_report_json(report)
                                  : lieb::io::verify_report_text(report));
        return report.mismatch_count() == 0 ? kExitOk : kExitCheckFailed;
    }

    if (cc->parsed()) {
        lieb::LieAlgebra base = lieb::io::parse_algebra(slurp(cc_base));
        lieb::io::CochainFile phi = lieb::io::parse_cochain(slurp(cc_phi));
        lieb::SystemReport report;
        if (cc_system == "line")
            report = lieb::check_line_system(base.table(), phi.phi);
        else if (cc_system == "2step")
            report = lieb::check_2step_system(base.table(), phi.phi);
        else if (cc_system == "3step")
            report = lieb::check_3step_system(base.table(), phi.phi);
        else if (cc_system == "4step")
            report = lieb::check_4step_system(base.table(), phi.phi);
        else
            throw lieb::parse_error("unknown system \"" + cc_system +
                                    "\" (expected line|2step|3step|4step)");
        std::cout << (cc_json ? lieb::io::system_report_json(report)
                              : lieb::io::system_report_text(report));
        return report.pass() ? kExitOk : kExitCheckFailed;
    }

    if (def->parsed()) {
        lieb::LieAlgebra base = lieb::io::parse_algebra(slurp(def_base));
        lieb::io::CochainFile phi = lieb::io::parse_cochain(slurp(def_phi));
        lieb::LieAlgebra out = lieb::linear_deform(base, phi.phi, lieb::parse_rational(def_t));
        lieb::LieAlgebra named(base.name() + "_deformed", out.table());
        write_file(def_out, lieb::io::serialize_algebra(named));
        std::cout << "wrote " << def_out << "\n";
        return kExitOk;
    }

    return kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lieb::theorem_violation& e) {
        std::cerr << "internal contradiction: " << e.what() << "\n";
        return kExitInternal;
    } catch (const lieb::not_nilpotent_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const lieb::constraint_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const lieb::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
