#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpcalc/json_io.hpp"
#include "lpcalc/pencil_library.hpp"

namespace fs = std::filesystem;
using namespace lpcalc;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitNotFound = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Files are looked up as given first, then under the dataset directory
// (LPCALC_DATA, default "data").
std::string resolve(const std::string& path) {
    if (fs::exists(path)) return path;
    const char* env = std::getenv("LPCALC_DATA");
    fs::path dir = env ? fs::path(env) : fs::path("data");
    fs::path alt = dir / path;
    if (fs::exists(alt)) return alt.string();
    throw data_error("cannot open file: " + path);
}

Dataset load_checked(const std::string& path) {
    try {
        return load_dataset_file(resolve(path));
    } catch (const data_error&) {
        throw;
    } catch (const std::exception& e) {
        throw data_error(std::string("bad dataset file ") + path + ": " + e.what());
    }
}

void write_json(const json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(1) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw data_error("cannot write file: " + out_path);
    f << j.dump(1) << "\n";
}

int cmd_verify(const std::string& file) {
    Dataset d = load_checked(file);
    std::string report = verify_report(*d.sys, d.fact);
    if (report == "verified") {
        std::cout << "VERIFIED\n";
        return 0;
    }
    std::cout << "NOT VERIFIED: " << report << "\n";
    return kExitVerifyFailed;
}

int cmd_invariants(const std::string& file, bool want_pi1, bool want_h2, bool want_div) {
    Dataset d = load_checked(file);
    const Surface& s = d.sys->surface();
    json j;
    j["euler"] = euler_characteristic(s.genus(), static_cast<int>(d.fact.twists.size()),
                                      s.boundary_count());
    Presentation pres = pi1_presentation(*d.sys, d.fact);
    H1Result h = h1(pres);
    json tors = json::array();
    for (const Int& t : h.torsion) tors.push_back(t.convert_to<long long>());
    j["h1"] = {{"rank", h.rank}, {"torsion", tors}};
    if (want_pi1) {
        json rels = json::array();
        for (const auto& r : pres.relators) {
            json w = json::array();
            for (int l : r) {
                int g = std::abs(l);
                std::string tok = (g % 2 ? "a" : "b") + std::to_string((g + 1) / 2);
                if (l < 0) tok += "~";
                w.push_back(tok);
            }
            rels.push_back(w);
        }
        j["pi1"] = {{"generators", 2 * pres.genus}, {"relators", rels}};
    }
    if (want_h2 || want_div) {
        HomologyReport full;
        try {
            full = full_report(*d.sys, d.fact);
        } catch (const std::exception& e) {
            throw data_error(std::string("homology pipeline: ") + e.what());
        }
        json full_j = report_to_json(full);
        j["h2"] = full_j["h2"];
        if (want_div) {
            j["fiber_divisibility"] = full_j["fiber_divisibility"];
            j["fiber_class"] = full_j["fiber_class"];
        }
    }
    std::cout << j.dump(1) << "\n";
    std::cerr << "invariants of " << (d.id.empty() ? file : d.id) << " computed\n";
    return 0;
}

int cmd_gen(const Dataset& d, const std::string& out) {
    write_json(dataset_to_json(d), out);
    std::cerr << "generated " << d.id << "\n";
    return 0;
}

int cmd_script_apply(const std::string& fact_file, const std::string& script_file,
                     const std::string& out) {
    Dataset d = load_checked(fact_file);
    MoveScript script;
    try {
        std::ifstream f(resolve(script_file));
        json j = json::parse(f);
        script = script_from_json(*d.sys, j);
    } catch (const data_error&) {
        throw;
    } catch (const std::exception& e) {
        throw data_error(std::string("bad script file ") + script_file + ": " + e.what());
    }
    RelationTable table;  // relations referenced by id must ship with the dataset
    Factorization end;
    try {
        end = apply_script(*d.sys, d.fact, script, &table);
    } catch (const std::exception& e) {
        throw data_error(std::string("script replay failed: ") + e.what());
    }
    Dataset out_ds;
    out_ds.id = d.id.empty() ? "endpoint" : d.id + "-endpoint";
    out_ds.sys = std::move(d.sys);
    out_ds.fact = std::move(end);
    write_json(dataset_to_json(out_ds), out);
    std::cerr << "script replayed, " << script.size() << " moves\n";
    return 0;
}

// Registers the second factorization's curves on the first dataset's system
// so the two can be compared and searched in one registry.
Factorization import_factorization(TwistSystem& sys, const Dataset& other) {
    const Surface& a = sys.surface();
    const Surface& b = other.sys->surface();
    if (a.genus() != b.genus() || a.boundary_count() != b.boundary_count() ||
        a.extended() != b.extended())
        throw data_error("factorizations live on different surfaces");
    Factorization out;
    auto import_curve = [&](CurveId id) -> CurveId {
        const Curve& c = other.sys->curve(id);
        if (sys.has_curve(c.name)) {
            CurveId mine = sys.curve_id(c.name);
            if (!sys.curve(mine).word.cyclic_equal(c.word))
                throw data_error("curve name clash on import: " + c.name);
            return mine;
        }
        CurveId mine = sys.add_curve(c.name, c.word, c.rel_h1);
        sys.register_twist(mine, other.sys->twist(id));
        return mine;
    };
    for (CurveId id : other.fact.twists) out.twists.push_back(import_curve(id));
    for (CurveId id : other.fact.target) {
        const Curve& c = other.sys->curve(id);
        out.target.push_back(sys.curve_id(c.name));
    }
    return out;
}

int cmd_search(const std::string& file1, const std::string& file2, int max_depth,
               const std::string& conj_file, const std::string& out) {
    Dataset d1 = load_checked(file1);
    Dataset d2 = load_checked(file2);
    Factorization f2 = import_factorization(*d1.sys, d2);

    std::vector<MappingClass> conjugators;
    std::vector<std::pair<std::vector<CurveId>, std::vector<int>>> conj_specs;
    if (!conj_file.empty()) {
        std::ifstream f(resolve(conj_file));
        json j;
        try {
            j = json::parse(f);
        } catch (const std::exception& e) {
            throw data_error(std::string("bad conjugator file: ") + e.what());
        }
        for (const auto& entry : j) {
            std::vector<CurveId> ids;
            std::vector<int> signs;
            MappingClass phi = MappingClass::identity(d1.sys->surface());
            for (const auto& tok : entry) {
                std::string name = tok.get<std::string>();
                int sign = 1;
                if (!name.empty() && name.back() == '~') {
                    sign = -1;
                    name.pop_back();
                }
                CurveId id = d1.sys->curve_id(name);
                ids.push_back(id);
                signs.push_back(sign);
                MappingClass t = d1.sys->twist(id);
                phi = (sign > 0 ? t : t.inverted()).compose(phi);
            }
            conj_specs.emplace_back(std::move(ids), std::move(signs));
            conjugators.push_back(std::move(phi));
        }
    }

    auto found = hurwitz_search(*d1.sys, d1.fact, f2, max_depth, conjugators);
    if (!found) {
        std::cerr << "not found within depth " << max_depth << " (not a disproof)\n";
        return kExitNotFound;
    }
    // search reports conjugation moves by index into the conjugator list
    for (Move& m : *found) {
        if (m.kind == Move::Kind::Conj) {
            m.conj_twists = conj_specs.at(m.index).first;
            m.conj_signs = conj_specs.at(m.index).second;
        }
    }
    write_json(script_to_json(*d1.sys, *found), out);
    std::cerr << "witness script with " << found->size() << " moves\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus for positive factorizations of boundary multitwists"};
    app.require_subcommand(1);

    std::string file, file2, out, alpha_text, beta_text, conj_file, builtin_id;
    bool want_pi1 = false, want_h2 = false, want_div = false;
    int genus = 0, max_depth = 0;

    auto* verify = app.add_subcommand("verify", "check a factorization against its target");
    verify->add_option("file", file, "dataset file")->required();

    auto* invar = app.add_subcommand("invariants", "invariants of the pencil's total space");
    invar->add_option("file", file, "dataset file")->required();
    invar->add_flag("--pi1", want_pi1, "include the fundamental-group presentation");
    invar->add_flag("--h2", want_h2, "include second homology");
    invar->add_flag("--divisibility", want_div, "include fiber class and divisibility");

    auto* gen = app.add_subcommand("gen", "construct a dataset");
    gen->require_subcommand(1);
    auto* gen_fg = gen->add_subcommand("fg", "symmetric genus-g pencil");
    gen_fg->add_option("--genus", genus, "fiber genus, >= 3")->required();
    gen_fg->add_option("-o,--output", out, "output file (default stdout)");
    auto* gen_fab = gen->add_subcommand("fab", "fiber-sum twist by a commuting pair");
    gen_fab->add_option("--alpha", alpha_text, "first twist word, tokens tc/td[~]")->required();
    gen_fab->add_option("--beta", beta_text, "second twist word")->required();
    gen_fab->add_option("-o,--output", out, "output file (default stdout)");
    auto* gen_builtin = gen->add_subcommand("builtin", "one of the shipped pencils");
    gen_builtin->add_option("id", builtin_id, "dataset id")->required();
    gen_builtin->add_option("-o,--output", out, "output file (default stdout)");

    auto* script = app.add_subcommand("script", "move scripts");
    script->require_subcommand(1);
    auto* script_apply = script->add_subcommand("apply", "replay a script");
    script_apply->add_option("fact", file, "dataset file")->required();
    script_apply->add_option("script", file2, "script file")->required();
    script_apply->add_option("-o,--output", out, "output file (default stdout)");

    auto* search = app.add_subcommand("search", "bounded Hurwitz-equivalence search");
    search->add_option("f1", file, "first dataset")->required();
    search->add_option("f2", file2, "second dataset")->required();
    search->add_option("--max-depth", max_depth, "move-count bound")->required();
    search->add_option("--conjugators", conj_file, "twist-word conjugators, JSON");
    search->add_option("-o,--output", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(file);
        if (*invar) return cmd_invariants(file, want_pi1, want_h2, want_div);
        if (*gen_fg) return cmd_gen(generalized_fg(genus), out);
        if (*gen_fab)
            return cmd_gen(f_alpha_beta(parse_tc_td(alpha_text), parse_tc_td(beta_text)), out);
        if (*gen_builtin) return cmd_gen(build_builtin(builtin_id), out);
        if (*script_apply) return cmd_script_apply(file, file2, out);
        if (*search) return cmd_search(file, file2, max_depth, conj_file, out);
    } catch (const data_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const model_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
