// pants: exact and numerical referee for the conic-skeleton geometry of the
// Landau-Ginzburg model (C^3, z1 z2 z3) and its pair-of-pants category.
//
// Subcommands:
//   verify-geometry   sampled identity/rank/double-point suites, JSON report
//   trefoil           planar link diagram, CSV/SVG emission, region counts
//   link-regions      3d complement count of the projected link surface
//   rep               validate | classify | hom | roundtrip | random
//
// Exit codes: 0 success, 1 verification/validation failure, 2 usage or
// parse error. Output is a single JSON document on stdout with fixed key
// order, so identical inputs and seed give byte-identical bytes.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pants/cat/random_reps.hpp"
#include "pants/errors.hpp"
#include "pants/geom/link.hpp"
#include "pants/geom/verify.hpp"
#include "pants/io/json_io.hpp"

namespace {

using pants::io::Json;
namespace geom = pants::geom;
namespace cat = pants::cat;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
    const char* env = std::getenv("PANTS_SEED");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw UsageError("PANTS_SEED must be a nonnegative integer");
    return v;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_verify_geometry(const geom::GeomConfig& cfg) {
    auto checks = geom::run_geometry_suite(cfg);

    Json out;
    out["seed"] = cfg.seed;
    out["samples"] = cfg.samples;
    out["tol"] = cfg.tol;
    out["jacobian_tol"] = cfg.jacobian_tol;
    Json arr = Json::array();
    bool all_pass = true;
    for (const auto& c : checks) {
        Json e;
        e["name"] = c.name;
        e["value"] = c.value;
        e["threshold"] = c.threshold;
        e["cmp"] = c.greater_is_pass ? "gt" : "lt";
        e["samples"] = c.samples;
        e["pass"] = c.pass;
        arr.push_back(std::move(e));
        all_pass = all_pass && c.pass;
    }
    out["checks"] = std::move(arr);
    out["pass"] = all_pass;
    emit(out);
    return all_pass ? 0 : 1;
}

int run_trefoil(const geom::GeomConfig& cfg, const std::string& out_base,
                const std::string& format) {
    geom::Polyline2 curve = geom::trefoil_polyline(cfg);

    {
        std::ofstream csv(out_base + ".csv");
        if (!csv) throw UsageError("cannot write " + out_base + ".csv");
        geom::write_csv(curve, csv);
    }
    if (format == "svg") {
        std::ofstream svg(out_base + ".svg");
        if (!svg) throw UsageError("cannot write " + out_base + ".svg");
        geom::write_svg(curve, svg);
    }

    auto crossings = geom::polyline_crossings(curve, cfg.tol);
    auto regions = geom::region_count_2d(curve, cfg);

    // the doubled-resolution rerun also covers the ray sampling
    geom::GeomConfig doubled = cfg;
    doubled.ray_samples *= 2;
    geom::Polyline2 fine = geom::trefoil_polyline(doubled);
    bool stable = regions.stable &&
                  geom::polyline_crossings(fine, cfg.tol).count() == crossings.count() &&
                  geom::region_count_2d(fine, doubled).total == regions.total;

    Json out;
    out["crossings"] = crossings.count();
    out["regions_total"] = regions.total;
    out["regions_bounded"] = regions.bounded;
    out["stable"] = stable;
    emit(out);

    bool expected = crossings.count() == 3 && regions.total == 5 && regions.bounded == 4;
    return (expected && stable) ? 0 : 1;
}

int run_link_regions(const geom::GeomConfig& cfg) {
    auto rc = geom::link_regions_3d(cfg);
    Json out;
    out["regions_total"] = rc.total;
    out["regions_bounded"] = rc.bounded;
    out["unbounded"] = rc.unbounded;
    out["stable"] = rc.stable;
    emit(out);
    bool expected = rc.total == 6 && rc.bounded == 5 && rc.unbounded == 1;
    return (expected && rc.stable) ? 0 : 1;
}

int run_rep_validate(const std::string& path) {
    Json doc = pants::io::load_document(path);
    cat::StarSumRep rep = pants::io::rep_from_json(doc);
    auto report = cat::validate(rep);
    Json out;
    out["input"] = doc;
    out["result"] = pants::io::validation_to_json(report);
    emit(out);
    return report.valid ? 0 : 1;
}

int run_rep_classify(const std::string& path) {
    Json doc = pants::io::load_document(path);
    cat::StarSumRep rep = pants::io::rep_from_json(doc);
    Json out;
    out["input"] = doc;
    try {
        out["result"] = pants::io::classification_to_json(cat::classify(rep));
    } catch (const pants::InvalidRepError& e) {
        out["result"] = Json{{"error", e.what()}};
        emit(out);
        return 1;
    }
    emit(out);
    return 0;
}

int run_rep_hom(const std::string& path_a, const std::string& path_b) {
    Json doc_a = pants::io::load_document(path_a);
    Json doc_b = pants::io::load_document(path_b);
    cat::StarSumRep a = pants::io::rep_from_json(doc_a);
    cat::StarSumRep b = pants::io::rep_from_json(doc_b);

    Json out;
    out["inputs"] = Json::array({doc_a, doc_b});
    try {
        auto hom = cat::hom_star(a, b);
        Json result;
        result["dim_star"] = hom.dim();
        if (a.n() == 4 && b.n() == 4) {
            auto pair_hom = cat::hom_autpair(cat::to_autpair(a), cat::to_autpair(b));
            result["dim_autpair"] = pair_hom.dim();
            result["agree"] = hom.dim() == pair_hom.dim();
        }
        out["result"] = std::move(result);
    } catch (const pants::Error& e) {
        out["result"] = Json{{"error", e.what()}};
        emit(out);
        return 1;
    }
    emit(out);
    bool agree = !out["result"].contains("agree") || out["result"]["agree"].get<bool>();
    return agree ? 0 : 1;
}

int run_rep_roundtrip(const std::string& path) {
    Json doc = pants::io::load_document(path);
    cat::StarSumRep rep = pants::io::rep_from_json(doc);
    Json out;
    out["input"] = doc;
    try {
        auto witness = cat::roundtrip_witness(rep);
        out["result"] = pants::io::witness_to_json(witness);
        emit(out);
        return witness.all_ok ? 0 : 1;
    } catch (const pants::Error& e) {
        out["result"] = Json{{"error", e.what()}};
        emit(out);
        return 1;
    }
}

int run_rep_random(std::uint64_t seed, std::size_t max_dim, const std::string& out_path) {
    cat::StarSumRep rep = cat::random_pants(seed, max_dim);
    Json rep_json = pants::io::rep_to_json(rep);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        f << rep_json.dump(2) << "\n";
    }
    Json out;
    out["input"] = Json{{"seed", seed}, {"max_dim", max_dim}};
    out["result"] = std::move(rep_json);
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact/numerical referee for the z1z2z3 skeleton geometry and its "
                 "pair-of-pants model"};
    app.require_subcommand(1);

    geom::GeomConfig cfg;
    std::optional<std::uint64_t> seed_flag;

    auto add_geom_flags = [&](CLI::App* sub) {
        sub->add_option("--rho1", cfg.rho1, "link-sphere radius");
        sub->add_option("--tol", cfg.tol, "identity tolerance");
        sub->add_option("--jacobian-tol", cfg.jacobian_tol, "numerical-rank threshold");
        sub->add_option("--samples", cfg.samples, "Monte-Carlo sample count");
        sub->add_option("--ray-samples", cfg.ray_samples, "polyline resolution");
        sub->add_option("--grid-res", cfg.grid_res, "grid cells per axis");
        sub->add_option("--seed", seed_flag, "RNG seed (falls back to PANTS_SEED)");
    };

    CLI::App* verify = app.add_subcommand("verify-geometry", "run the sampled geometry suites");
    add_geom_flags(verify);

    CLI::App* trefoil = app.add_subcommand("trefoil", "emit the planar link diagram and counts");
    add_geom_flags(trefoil);
    std::string out_base = "trefoil";
    std::string format = "json";
    trefoil->add_option("-o,--output", out_base, "output basename for curve files");
    trefoil->add_option("--format", format, "json|csv|svg (csv is always written)")
        ->check(CLI::IsMember({"json", "csv", "svg"}));

    CLI::App* link = app.add_subcommand("link-regions", "count 3d complement regions");
    add_geom_flags(link);

    CLI::App* rep = app.add_subcommand("rep", "star-sum representation operations");
    rep->require_subcommand(1);
    std::string file_a, file_b, rep_out;
    std::size_t max_dim = 4;
    CLI::App* rep_validate = rep->add_subcommand("validate", "pairwise direct-sum checks");
    rep_validate->add_option("file", file_a, "representation JSON file")->required();
    CLI::App* rep_classify = rep->add_subcommand("classify", "classification by arity");
    rep_classify->add_option("file", file_a, "representation JSON file")->required();
    CLI::App* rep_hom = rep->add_subcommand("hom", "Hom dimensions on both sides");
    rep_hom->add_option("file", file_a, "first representation")->required();
    rep_hom->add_option("file2", file_b, "second representation")->required();
    CLI::App* rep_roundtrip = rep->add_subcommand("roundtrip", "classification witness");
    rep_roundtrip->add_option("file", file_a, "representation JSON file")->required();
    CLI::App* rep_random = rep->add_subcommand("random", "seeded generator");
    rep_random->add_option("--max-dim", max_dim, "largest automorphism dimension");
    rep_random->add_option("--seed", seed_flag, "RNG seed (falls back to PANTS_SEED)");
    rep_random->add_option("-o,--output", rep_out, "also write the representation here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        cfg.seed = seed_flag ? *seed_flag : seed_from_env_or(cfg.seed);

        if (verify->parsed() || trefoil->parsed() || link->parsed()) cfg.require_valid();

        if (verify->parsed()) return run_verify_geometry(cfg);
        if (trefoil->parsed()) return run_trefoil(cfg, out_base, format);
        if (link->parsed()) return run_link_regions(cfg);

        if (rep_validate->parsed()) return run_rep_validate(file_a);
        if (rep_classify->parsed()) return run_rep_classify(file_a);
        if (rep_hom->parsed()) return run_rep_hom(file_a, file_b);
        if (rep_roundtrip->parsed()) return run_rep_roundtrip(file_a);
        if (rep_random->parsed())
            return run_rep_random(seed_flag ? *seed_flag : seed_from_env_or(cfg.seed), max_dim,
                                  rep_out);
    } catch (const pants::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const pants::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
