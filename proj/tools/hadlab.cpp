#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hadlab/haagerup.hpp"
#include "hadlab/json_io.hpp"
#include "hadlab/laurent.hpp"
#include "hadlab/rng.hpp"

namespace {

using hadlab::Json;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

struct Options {
    std::optional<std::uint64_t> seed;
    hadlab::Tolerances tol;
    std::string format = "json";
};

std::uint64_t resolve_seed(const Options& opt) {
    if (opt.seed) return *opt.seed;
    if (const char* env = std::getenv("HADLAB_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

void emit(const Options& opt, const Json& j, const std::string& text) {
    if (opt.format == "text")
        std::cout << text;
    else
        std::cout << j.dump(2) << "\n";
}

hadlab::UnimodEntry param_entry(const Json& params, const std::string& key) {
    if (!params.contains(key))
        throw std::invalid_argument("params missing field \"" + key + "\"");
    return hadlab::entry_from_json(params[key]);
}

int run_gen(const Options& opt, const std::string& family, const std::string& params_text) {
    using namespace hadlab;
    std::optional<Json> params;
    if (!params_text.empty()) params = Json::parse(params_text);
    Rng rng(resolve_seed(opt));

    CHMatrix m(6, 6);
    if (family == "f6t") {
        FourierTParams p =
            params ? FourierTParams{param_entry(*params, "a"), param_entry(*params, "b"),
                                    params->value("w_choice", 1) == 2 ? WChoice::W2
                                                                      : WChoice::W1}
                   : sample_f6t_params(rng);
        m = f6t(p);
    } else if (family == "x6") {
        X6Params p;
        if (params)
            p = X6Params{param_entry(*params, "beta"), param_entry(*params, "gamma"),
                         param_entry(*params, "epsilon"), param_entry(*params, "phi")};
        else
            p = sample_x6_params(rng);
        m = x6(p, opt.tol);
    } else if (family == "d6") {
        m = d6(params ? param_entry(*params, "c") : sample_d6_param(rng));
    } else if (family == "ha") {
        m = h_a(params ? param_entry(*params, "a") : sample_ha_param(rng));
    } else if (family == "r1") {
        m = r1(params ? param_entry(*params, "q") : rng.unimodular());
    } else if (family == "r2") {
        m = r2(params ? param_entry(*params, "q") : rng.unimodular());
    } else if (family == "w") {
        m = w_example();
    } else if (family == "h13") {
        if (params) {
            m = h13(param_entry(*params, "a"), param_entry(*params, "b"),
                    param_entry(*params, "c"), param_entry(*params, "d"), opt.tol);
        } else {
            const CHMatrix x = x6(sample_x6_params(rng), opt.tol);
            m = h13(x.at(1, 2), x.at(1, 3), x.at(2, 1), x.at(2, 3), opt.tol);
        }
    } else {
        throw std::invalid_argument("unknown family " + family);
    }

    std::string text = "matrix " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + " (family " + family + ")\n";
    emit(opt, hadlab::matrix_to_json(m), text);
    return 0;
}

int run_sample(const Options& opt, const std::string& family, int count) {
    using namespace hadlab;
    if (family != "x6") throw std::invalid_argument("sample supports only --family x6");
    if (count < 0) throw std::invalid_argument("count must be non-negative");
    Rng rng(resolve_seed(opt));
    Json out = Json::array();
    for (int i = 0; i < count; ++i) {
        const X6Params p = sample_x6_params(rng);
        Json item;
        item["params"] = x6_params_to_json(p);
        item["matrix"] = matrix_to_json(x6(p, opt.tol));
        out.push_back(std::move(item));
    }
    emit(opt, out, "sampled " + std::to_string(count) + " members\n");
    return 0;
}

int run_classify(const Options& opt, const std::string& path, bool all_pivots) {
    using namespace hadlab;
    const CHMatrix m = matrix_from_json(load_json(path));
    const ClassificationReport rep = classify(m, opt.tol);
    Json j = report_to_json(rep);
    std::string text = std::string("verdict: ") + to_string(rep.verdict) + "\n";
    if (all_pivots) {
        const PivotSweep sweep = classify_all_pivots(m, opt.tol);
        j["pivots"] = sweep_to_json(sweep);
        text += std::string("pivot-consistent: ") + (sweep.consistent ? "yes" : "no") + "\n";
    }
    emit(opt, j, text);
    return 0;
}

int run_verify(const Options& opt, const std::string& path) {
    using namespace hadlab;
    const CHMatrix m = matrix_from_json(load_json(path));
    Json j;
    std::string text;
    if (m.rows() == m.cols()) {
        const HadamardCheck chk = is_hadamard(m, opt.tol);
        j["hadamard_residual"] = chk.max_residual;
        const ScanReport scan = haagerup_scan(m);
        j["haagerup_max"] = scan.max_abs;
        text += "hadamard residual: " + std::to_string(chk.max_residual) + "\n";
        text += "largest vanishing-expression |value|: " + std::to_string(scan.max_abs) + "\n";
    } else {
        j["hadamard_residual"] = max_offdiag_row_residual(m);
        j["haagerup_max"] = nullptr;
        text += "row residual: " + std::to_string(max_offdiag_row_residual(m)) + "\n";
    }
    const auto fp = haagerup_fingerprint(m);
    j["fingerprint_size"] = fp.size();
    text += "fingerprint size: " + std::to_string(fp.size()) + "\n";
    emit(opt, j, text);
    return 0;
}

int run_equiv(const Options& opt, const std::string& pa, const std::string& pb) {
    using namespace hadlab;
    const CHMatrix a = matrix_from_json(load_json(pa));
    const CHMatrix b = matrix_from_json(load_json(pb));
    const EquivalenceResult res = are_equivalent(a, b, opt.tol);
    Json j;
    j["equivalent"] = res.equivalent;
    j["witness"] = res.witness ? move_to_json(*res.witness) : Json(nullptr);
    emit(opt, j, std::string(res.equivalent ? "equivalent\n" : "inequivalent\n"));
    return 0;
}

int run_recover(const Options& opt, const std::string& path) {
    using namespace hadlab;
    const CHMatrix m = matrix_from_json(load_json(path));
    Json j;
    std::string text;
    try {
        const F6TRecovery rec = recover_f6t(m, opt.tol);
        j["family"] = "f6t";
        Json params;
        params["a"] = entry_to_json(rec.a);
        params["b"] = entry_to_json(rec.b);
        j["params"] = std::move(params);
        j["certificate"] = move_to_json(rec.certificate);
        text = "family: f6t\n";
    } catch (const PatternMissing&) {
        const X6MatrixRecovery rec = recover_x6_from_matrix(m, opt.tol);
        j["family"] = "x6";
        Json branches = Json::array();
        for (const X6Params& p : rec.params) branches.push_back(x6_params_to_json(p));
        j["params"] = std::move(branches);
        j["certificate"] = move_to_json(rec.certificate);
        text = "family: x6\n";
    }
    emit(opt, j, text);
    return 0;
}

int run_witness(const Options& opt, const std::string& name) {
    using namespace hadlab;
    WitnessReport rep;
    if (name == "l62")
        rep = witness_check_l62();
    else if (name == "p63")
        rep = witness_check_p63();
    else
        throw std::invalid_argument("unknown identity " + name + " (expected l62 or p63)");
    std::string text = rep.holds ? "IDENTITY HOLDS" : "IDENTITY FAILS";
    text += " (component terms:";
    for (std::size_t t : rep.component_terms) text += " " + std::to_string(t);
    text += "; residual terms: " + std::to_string(rep.residual_terms) + ")\n";
    emit(opt, witness_to_json(rep), text);
    if (!rep.holds) {
        std::cerr << "residual: " << rep.residual << "\n";
        return 1;
    }
    return 0;
}

int run_mub(const Options& opt, const std::string& p0, const std::string& p1,
            const std::string& p2) {
    using namespace hadlab;
    const Basis b0 = make_basis(dense_from_json(load_json(p0)));
    const Basis b1 = make_basis(dense_from_json(load_json(p1)));
    const Basis b2 = make_basis(dense_from_json(load_json(p2)));
    const MubAuditReport rep = audit_triplet(b0, b1, b2, opt.tol);
    std::string text;
    for (const PairAudit& p : rep.pairs) {
        text += "pair (" + std::to_string(p.first) + "," + std::to_string(p.second) +
                "): " + (p.unbiased ? "unbiased" : "biased");
        if (p.verdict) text += std::string(", verdict ") + to_string(*p.verdict);
        text += "\n";
    }
    text += std::string("zauner-compatible: ") + (rep.zauner_compatible ? "yes" : "no") + "\n";
    emit(opt, mub_to_json(rep), text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"6x6 complex Hadamard matrix toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::uint64_t seed_flag = 0;
    app.add_flag_callback("--version", [] {
        std::cout << "hadlab 1.0.0\n";
        std::exit(0);
    });
    auto* seed_opt = app.add_option("--seed", seed_flag, "RNG seed (fallback: HADLAB_SEED)");
    app.add_option("--tol-orth", opt.tol.eps_orth, "orthogonality tolerance");
    app.add_option("--tol-entry", opt.tol.eps_entry, "entrywise tolerance");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string family, params_text, path_a, path_b, path_c, witness_name;
    int count = 1;
    bool all_pivots = false;

    auto* gen = app.add_subcommand("gen", "construct a family member");
    gen->add_option("--family", family, "f6t|x6|d6|ha|r1|r2|w|h13")->required();
    gen->add_option("--params", params_text, "parameter JSON object");

    auto* sample = app.add_subcommand("sample", "draw seeded members with parameters");
    sample->add_option("--family", family, "x6")->required();
    sample->add_option("--count", count, "number of draws")->required();

    auto* classify_cmd = app.add_subcommand("classify", "pattern-based family verdict");
    classify_cmd->add_option("matrix", path_a, "matrix JSON file")->required();
    classify_cmd->add_flag("--all-pivots", all_pivots, "sweep all 36 pivots");

    auto* verify = app.add_subcommand("verify", "orthogonality and invariant report");
    verify->add_option("matrix", path_a, "matrix JSON file")->required();

    auto* equiv = app.add_subcommand("equiv", "decide equivalence of two matrices");
    equiv->add_option("a", path_a, "matrix JSON file")->required();
    equiv->add_option("b", path_b, "matrix JSON file")->required();

    auto* recover = app.add_subcommand("recover", "parameter recovery with certificate");
    recover->add_option("matrix", path_a, "matrix JSON file")->required();

    auto* witness = app.add_subcommand("witness", "check a bundled exact identity");
    witness->add_option("name", witness_name, "l62|p63")->required();

    auto* mub = app.add_subcommand("mub", "mutually unbiased bases tools");
    auto* audit = mub->add_subcommand("audit", "audit a basis triplet");
    audit->add_option("b0", path_a, "basis JSON file")->required();
    audit->add_option("b1", path_b, "basis JSON file")->required();
    audit->add_option("b2", path_c, "basis JSON file")->required();
    mub->require_subcommand(1);

    // Allow the global flags (--seed, --format, ...) after a subcommand name.
    for (CLI::App* sub : {gen, sample, classify_cmd, verify, equiv, recover, witness,
                          mub, audit})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (seed_opt->count() > 0) opt.seed = seed_flag;

    try {
        opt.tol.validate();
        if (gen->parsed()) return run_gen(opt, family, params_text);
        if (sample->parsed()) return run_sample(opt, family, count);
        if (classify_cmd->parsed()) return run_classify(opt, path_a, all_pivots);
        if (verify->parsed()) return run_verify(opt, path_a);
        if (equiv->parsed()) return run_equiv(opt, path_a, path_b);
        if (recover->parsed()) return run_recover(opt, path_a);
        if (witness->parsed()) return run_witness(opt, witness_name);
        if (mub->parsed()) return run_mub(opt, path_a, path_b, path_c);
    } catch (const hadlab::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const hadlab::PolyParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
