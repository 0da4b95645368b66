// Command-line front end: reads a JSON job description, runs one pipeline
// stage, and prints a report (stable-key JSON or indented text).
//
// Exit codes: 0 success, 2 config error, 3 hypothesis violation,
// 4 internal assertion failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ellhodge/differentials_oracle.hpp"
#include "ellhodge/json_io.hpp"

using namespace ellhodge;
using json_io::bad;

namespace {

struct Job {
    Json raw;
    std::optional<WeierstrassSurface> surface;
    std::optional<GaloisCover> cover;
    std::optional<BundleSpec> bundle;
    std::int64_t epsilon = 0;  // 0 = default (|G|)
    bool singular = false;
    std::optional<int> p, q;
    bool json_output = false;
    bool full_check = false;
};

Job load_job(const std::string& path, bool json_flag, bool check_flag) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    Job job;
    try {
        job.raw = Json::parse(in);
    } catch (const Json::exception& e) {
        throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!job.raw.is_object()) throw config_error("config root must be a JSON object");

    if (job.raw.contains("surface")) job.surface = json_io::parse_surface(job.raw.at("surface"));
    if (job.raw.contains("cover")) job.cover = json_io::parse_cover(job.raw.at("cover"));
    if (job.raw.contains("bundle")) job.bundle = json_io::parse_bundle(job.raw.at("bundle"));
    job.epsilon = json_io::parse_int(job.raw, "epsilon", "config", 0);
    job.singular = json_io::parse_bool(job.raw, "singular", "config", false);
    if (job.raw.contains("p")) job.p = static_cast<int>(json_io::parse_int(job.raw.at("p"), "p"));
    if (job.raw.contains("q")) job.q = static_cast<int>(json_io::parse_int(job.raw.at("q"), "q"));

    std::string output = "text";
    if (job.raw.contains("output")) {
        if (!job.raw.at("output").is_string()) bad("output", "expected \"json\" or \"text\"");
        output = job.raw.at("output").get<std::string>();
        if (output != "json" && output != "text") bad("output", "expected \"json\" or \"text\"");
    }
    std::string level = "fast";
    if (job.raw.contains("check_level")) {
        if (!job.raw.at("check_level").is_string()) bad("check_level", "expected \"fast\" or \"full\"");
        level = job.raw.at("check_level").get<std::string>();
        if (level != "fast" && level != "full") bad("check_level", "expected \"fast\" or \"full\"");
    }
    job.json_output = json_flag || output == "json";
    job.full_check = check_flag || level == "full";
    return job;
}

const WeierstrassSurface& need_surface(const Job& job) {
    if (!job.surface) throw config_error("this command needs a \"surface\" section");
    return *job.surface;
}

const GaloisCover& need_cover(const Job& job) {
    if (!job.cover) throw config_error("this command needs a \"cover\" section");
    return *job.cover;
}

// ---- cross-module consistency suite (check_level = full) ----

// the six pushforward characteristics of the Weierstrass family, pinned as
// exact (cG, cO) pairs, plus the middle cohomology symbols
void check_weierstrass_vectors(std::int64_t n) {
    const BundleSpec W = BundleSpec::weierstrass(n);
    const std::int64_t a[3] = {0, -2 * n, -3 * n};
    require(chi_omega_total(3, 1, W) == SymbolicChi{n, -1}, "regression vector K_P(X) failed");
    require(chi_omega_total(3, 2, W) == SymbolicChi{20 * n, -10}, "regression vector K_P(2X) failed");
    require(chi_omega_vertical(2, {6 * n, false, 3}, W) == SymbolicChi{n, 1},
            "regression vector vertical 2-forms failed");
    require(pushforward_chi({6 * n, true, 3}, W) == SymbolicChi{10 * n, -10},
            "regression vector canonical twist failed");
    SymbolicChi sheet{0, 0};
    for (auto aj : a) sheet += pushforward_chi({6 * n + aj, true, 2}, W);
    require(sheet == SymbolicChi{18 * n, -18}, "regression vector bundle twist failed");
    require(chi_omega_total(2, 1, W) == SymbolicChi{9 * n, -7}, "regression vector 2-forms failed");

    require(hodge_middle(2, W) == SymbolicClass{n, -1, 0, 0}, "H^{2,0} symbol failed");
    require(hodge_middle(0, W) == SymbolicClass{n, -1, 0, 0}, "H^{0,2} symbol failed");
    require(hodge_middle(1, W, false) == SymbolicClass{10 * n, -2, 2, 0},
            "H^{1,1} resolved symbol failed");
    require(hodge_middle(1, W, true) == SymbolicClass{10 * n, -2, 2, 1},
            "H^{1,1} singular-model symbol failed");
    require(hodge_of_bundle(0, 1, W) == SymbolicClass{0, -1, 1, 0}, "H^{0,1} symbol failed");
}

void run_full_checks(const Job& job) {
    if (job.surface) {
        const SurfaceReport rep = surface_report(*job.surface);
        require(10 * rep.n - rep.mu == rep.c_E - rep.d_E / 6,
                "full check: 10n - mu != c_E - d_E/6");
        check_weierstrass_vectors(rep.n);
    }
    if (job.cover && job.cover->superelliptic_data())
        require(superelliptic_differentials_oracle(*job.cover) == job.cover->h0_canonical(),
                "full check: differentials oracle disagrees with the fixed-point formula");
    if (job.surface && job.cover) {
        const SurfaceReport rep = surface_report(*job.surface);
        if (classify_hypothesis(rep, *job.cover) != BranchHypothesis::violated) {
            const BaseChangeReport bc = base_change_report(rep, *job.cover);
            const BundleSpec W = BundleSpec::weierstrass(rep.n);
            const auto dia = evaluate_diamond(full_diamond(W), *job.cover, bc.tjurina);
            std::int64_t euler = 0;
            for (size_t pp = 0; pp < dia.size(); ++pp)
                for (size_t qq = 0; qq < dia.size(); ++qq)
                    euler += ((pp + qq) % 2 == 0 ? 1 : -1) * dia[pp][qq].dimension();
            require(euler == 12 * rep.n * job.cover->group_order(),
                    "full check: evaluated diamond Euler total != 12n|G|");
            if (bc.tjurina && !rep.isotrivial) {
                const auto h11 = evaluate_class(hodge_middle(1, W), *job.cover, bc.tjurina,
                                                SlotMode::self_conjugate);
                require(h11 - trivial_lattice_class(*bc.tjurina) == covering_module(rep, *job.cover),
                        "full check: two-path H^{1,1} mismatch");
            }
        }
    }
}

// ---- commands ----

Json cmd_analyze(const Job& job) {
    const SurfaceReport rep = surface_report(need_surface(job));
    Json out{{"command", "analyze"}};
    out.update(json_io::surface_report_to_json(rep));
    return out;
}

Json cmd_basechange(const Job& job) {
    const SurfaceReport rep = surface_report(need_surface(job));
    const GaloisCover& cov = need_cover(job);
    const BaseChangeReport bc = base_change_report(rep, cov);
    Json out{{"command", "basechange"}, {"n", rep.n}, {"cover", json_io::cover_to_json(cov)}};
    out.update(json_io::base_change_report_to_json(bc));
    return out;
}

Json cmd_hodge(const Job& job) {
    const SurfaceReport rep = surface_report(need_surface(job));
    const GaloisCover& cov = need_cover(job);
    const BundleSpec W = BundleSpec::weierstrass(rep.n);

    std::optional<VirtualModule> tjurina;
    if (classify_hypothesis(rep, cov) != BranchHypothesis::violated)
        tjurina = tjurina_class(rep, cov);

    const auto symbols = full_diamond(W, job.singular);
    const auto classes = evaluate_diamond(symbols, cov, tjurina);

    Json sym = Json::array(), cls = Json::array(), dims = Json::array();
    std::int64_t euler = 0;
    for (size_t pp = 0; pp < classes.size(); ++pp) {
        Json srow = Json::array(), crow = Json::array(), drow = Json::array();
        for (size_t qq = 0; qq < classes.size(); ++qq) {
            srow.push_back(json_io::symbolic_class_to_json(symbols[pp][qq]));
            crow.push_back(json_io::module_to_json(classes[pp][qq]));
            drow.push_back(classes[pp][qq].dimension());
            euler += ((pp + qq) % 2 == 0 ? 1 : -1) * classes[pp][qq].dimension();
        }
        sym.push_back(std::move(srow));
        cls.push_back(std::move(crow));
        dims.push_back(std::move(drow));
    }
    require(euler == 12 * rep.n * cov.group_order(), "diamond Euler total != 12n|G|");

    return Json{{"command", "hodge"},
                {"n", rep.n},
                {"model", job.singular ? "weierstrass" : "resolved"},
                {"cover", json_io::cover_to_json(cov)},
                {"symbols", std::move(sym)},
                {"classes", std::move(cls)},
                {"hodge_numbers", std::move(dims)},
                {"euler", euler}};
}

Json cmd_mwbound(const Job& job) {
    const SurfaceReport rep = surface_report(need_surface(job));
    const GaloisCover& cov = need_cover(job);
    if (job.epsilon < 0) throw config_error("epsilon must be a positive integer");
    const MWReport mw = mw_report(rep, cov, job.epsilon);
    Json out{{"command", "mwbound"}, {"n", rep.n}, {"cover", json_io::cover_to_json(cov)}};
    out.update(json_io::mw_report_to_json(mw));
    return out;
}

Json cmd_engine(const Job& job) {
    if (!job.bundle) throw config_error("this command needs a \"bundle\" section");
    const BundleSpec& b = *job.bundle;
    const int n = b.dim_hypersurface();

    Json degrees = Json::array();
    for (auto d : b.summand_degrees) degrees.push_back(d);
    Json out{{"command", "engine"}, {"rank", b.rank()},      {"degrees", std::move(degrees)},
             {"ell", b.ell},        {"d", b.d},              {"singular", job.singular}};

    const auto diamond = full_diamond(b, job.singular);
    Json sym = Json::array();
    for (const auto& row : diamond) {
        Json srow = Json::array();
        for (const auto& c : row) srow.push_back(json_io::symbolic_class_to_json(c));
        sym.push_back(std::move(srow));
    }
    out["diamond"] = std::move(sym);

    if (job.p || job.q) {
        if (!job.p || !job.q) throw config_error("engine slot needs both \"p\" and \"q\"");
        if (*job.p < 0 || *job.p > n || *job.q < 0 || *job.q > n)
            throw config_error("slot (p, q) outside the Hodge diamond");
        Json slot{{"p", *job.p}, {"q", *job.q}};
        slot.update(json_io::symbolic_class_to_json(diamond[*job.p][*job.q]));
        out["slot"] = std::move(slot);
    }
    return out;
}

Json cmd_oracle(const Job& job) {
    const GaloisCover& cov = need_cover(job);
    const VirtualModule oracle = superelliptic_differentials_oracle(cov);
    const VirtualModule h0k = cov.h0_canonical();
    require(oracle == h0k, "differentials oracle disagrees with the fixed-point formula");
    const auto& data = *cov.superelliptic_data();
    return Json{{"command", "oracle"},
                {"m", data.m},
                {"f", format_poly(data.f)},
                {"genus_upstairs", cov.genus_upstairs()},
                {"oracle", json_io::module_to_json(oracle)},
                {"fixed_point_formula", json_io::module_to_json(h0k)},
                {"match", oracle == h0k}};
}

Json run_command(const std::string& cmd, const Job& job) {
    if (job.full_check) run_full_checks(job);
    if (cmd == "analyze") return cmd_analyze(job);
    if (cmd == "basechange") return cmd_basechange(job);
    if (cmd == "hodge") return cmd_hodge(job);
    if (cmd == "mwbound") return cmd_mwbound(job);
    if (cmd == "engine") return cmd_engine(job);
    if (cmd == "oracle") return cmd_oracle(job);
    throw internal_error("unknown command: " + cmd);
}

// ---- output ----

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "none";
    return j.dump();
}

bool is_scalar_array(const Json& j) {
    for (const auto& v : j)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

void render_text(const Json& j, std::ostream& os, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            os << pad << key << ":\n";
            render_text(value, os, indent + 1);
        } else if (value.is_array() && !is_scalar_array(value)) {
            os << pad << key << ":\n";
            for (const auto& item : value) {
                if (item.is_object()) {
                    bool first = true;
                    for (const auto& [k2, v2] : item.items()) {
                        os << pad << (first ? "  - " : "    ") << k2 << ": "
                           << (v2.is_object() || v2.is_array() ? v2.dump() : scalar_text(v2))
                           << "\n";
                        first = false;
                    }
                } else {
                    os << pad << "  - " << item.dump() << "\n";
                }
            }
        } else if (value.is_array()) {
            os << pad << key << ": " << value.dump() << "\n";
        } else {
            os << pad << key << ": " << scalar_text(value) << "\n";
        }
    }
}

void emit_error(const std::string& kind, const std::string& message, bool json_output) {
    if (json_output)
        std::cerr << Json{{"error", Json{{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
    else
        std::cerr << "error (" << kind << "): " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant Hodge classes and Mordell-Weil rank bounds for elliptic surfaces"};
    app.require_subcommand(1);

    std::string cmd;
    std::string config_path;
    bool json_flag = false;
    bool check_flag = false;

    const auto add = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("config", config_path, "JSON job description")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_flag("--json", json_flag, "emit the report as JSON");
        sub->add_flag("--check", check_flag, "run the full cross-module consistency suite first");
        sub->callback([&cmd, name] { cmd = name; });
        return sub;
    };
    add("analyze", "singular fibers and global invariants of one surface");
    add("basechange", "pull the fiber configuration back along a Galois cover");
    add("hodge", "equivariant Hodge diamond of the pulled-back surface");
    add("mwbound", "covering module and Mordell-Weil rank bounds");
    add("engine", "symbolic Hodge classes of a hypersurface in a split bundle");
    add("oracle", "superelliptic differentials basis vs the fixed-point formula");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Job job = load_job(config_path, json_flag, check_flag);
        const Json report = run_command(cmd, job);
        if (job.json_output)
            std::cout << report.dump(2) << "\n";
        else
            render_text(report, std::cout, 0);
        return 0;
    } catch (const config_error& e) {
        emit_error("config", e.what(), json_flag);
        return 2;
    } catch (const hypothesis_error& e) {
        emit_error("hypothesis", e.what(), json_flag);
        return 3;
    } catch (const internal_error& e) {
        emit_error("internal", e.what(), json_flag);
        return 4;
    } catch (const std::exception& e) {
        emit_error("internal", e.what(), json_flag);
        return 4;
    }
}
