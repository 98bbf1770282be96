// Acceptance suite: one criterion per section, each printed as a PASS/FAIL
// line with the observed values. Exits nonzero when any criterion fails.
//
// Usage: acceptance <path-to-cli-binary>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pants/cat/random_reps.hpp"
#include "pants/exact/linalg.hpp"
#include "pants/geom/double_points.hpp"
#include "pants/geom/link.hpp"
#include "pants/geom/verify.hpp"

using namespace pants;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::string g_cli;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, const std::string& label, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(status);
    return out;
}

// ---- criterion 1: identity suite ------------------------------------------

void criterion_identities() {
    geom::GeomConfig cfg;
    cfg.samples = 10000;
    auto t0 = Clock::now();
    auto checks = geom::identity_checks(cfg);
    double elapsed = seconds_since(t0);

    bool pass = elapsed < 10.0;
    double worst = 0;
    for (const auto& c : checks) {
        pass = pass && c.pass && c.threshold == 1e-9;
        worst = std::max(worst, c.value);
    }
    std::ostringstream detail;
    detail << "5 defect families over 1e4 samples, max defect " << worst << " < 1e-9, " << elapsed
           << " s";
    report(1, "geometry identity suite", pass, detail.str());
}

// ---- criterion 2: ramification --------------------------------------------

void criterion_ramification() {
    geom::GeomConfig cfg;
    bool pass = true;
    double max_sigma2_at_r = 0;

    for (const auto& r : geom::ramification_points()) {
        double s2 = geom::jacobian_rank_profile(geom::ChartMap::BaseOnTorus, r, cfg).sv[1];
        max_sigma2_at_r = std::max(max_sigma2_at_r, s2);
        pass = pass && s2 < 1e-6;
    }

    // "exactly the four": a torus sweep finds no other near-singular points
    int spurious = 0;
    for (int i = 0; i < 120; ++i)
        for (int j = 0; j < 120; ++j) {
            geom::AngleTriple t{2 * M_PI * i / 120, 2 * M_PI * j / 120};
            double s2 = geom::jacobian_rank_profile(geom::ChartMap::BaseOnTorus, t, cfg).sv[1];
            if (s2 < 1e-6 && geom::distance_to_ramification(t) > 0.05) ++spurious;
        }
    pass = pass && spurious == 0;

    std::mt19937_64 rng(cfg.seed);
    auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53); };
    int full_rank = 0, tested = 0;
    while (tested < 1000) {
        geom::AngleTriple t{uniform(0, 2 * M_PI), uniform(0, 2 * M_PI)};
        if (geom::distance_to_ramification(t) <= 0.1) continue;
        ++tested;
        if (geom::jacobian_rank_profile(geom::ChartMap::BaseOnTorus, t, cfg).rank == 2)
            ++full_rank;
    }
    pass = pass && full_rank == 1000;

    std::ostringstream detail;
    detail << "sigma2 at the 4 points <= " << max_sigma2_at_r << ", " << spurious
           << " spurious drops, " << full_rank << "/1000 far samples full rank";
    report(2, "ramification locus of the base projection", pass, detail.str());
}

// ---- criterion 3: trefoil diagram ------------------------------------------

void criterion_trefoil() {
    geom::GeomConfig cfg;
    auto t0 = Clock::now();
    auto curve = geom::trefoil_polyline(cfg);
    auto crossings = geom::polyline_crossings(curve, cfg.tol);
    auto regions = geom::region_count_2d(curve, cfg);  // doubles grid_res internally

    geom::GeomConfig doubled = cfg;
    doubled.ray_samples *= 2;
    auto fine = geom::trefoil_polyline(doubled);
    auto fine_crossings = geom::polyline_crossings(fine, cfg.tol);
    auto fine_regions = geom::region_count_2d(fine, doubled);
    double elapsed = seconds_since(t0);

    bool pass = crossings.count() == 3 && regions.total == 5 && regions.bounded == 4 &&
                regions.stable && fine_crossings.count() == 3 && fine_regions.total == 5 &&
                fine_regions.bounded == 4 && fine_regions.stable && elapsed < 5.0;
    std::ostringstream detail;
    detail << crossings.count() << " crossings, " << regions.total << " regions ("
           << regions.bounded << " bounded), stable under doubling, " << elapsed << " s";
    report(3, "trefoil diagram counts", pass, detail.str());
}

// ---- criterion 4: 3d link regions ------------------------------------------

void criterion_link_regions() {
    geom::GeomConfig cfg;
    cfg.grid_res = 96;
    auto coarse = geom::link_regions_3d(cfg);

    cfg.grid_res = 192;
    auto t0 = Clock::now();
    auto fine = geom::link_regions_3d(cfg);
    double elapsed = seconds_since(t0);

    bool pass = coarse.total == 6 && coarse.bounded == 5 && coarse.unbounded == 1 &&
                fine.total == 6 && fine.bounded == 5 && fine.unbounded == 1 && elapsed < 60.0;
    std::ostringstream detail;
    detail << "96: (" << coarse.total << "," << coarse.bounded << "," << coarse.unbounded
           << "), 192: (" << fine.total << "," << fine.bounded << "," << fine.unbounded << "), "
           << elapsed << " s at 192^3";
    report(4, "3d link complement regions", pass, detail.str());
}

// ---- criterion 5: double points --------------------------------------------

void criterion_double_points() {
    geom::GeomConfig cfg;
    cfg.samples = 10000;
    bool pass = true;
    std::size_t found_front = 0, found_toy = 0;
    double worst_wall = 0;

    for (auto map : {geom::ChartMap::FrontOnTorus, geom::ChartMap::ToyF}) {
        auto report_dp = geom::double_point_report(map, cfg.samples, cfg);
        (map == geom::ChartMap::FrontOnTorus ? found_front : found_toy) =
            report_dp.points.size();
        pass = pass && !report_dp.points.empty();
        for (const auto& dp : report_dp.points) {
            worst_wall = std::max(worst_wall, dp.wall_distance);
            pass = pass && dp.wall_distance < 1e-6 && dp.transverse;
        }
    }

    auto patch = [](const geom::AngleTriple& t) {
        return t.theta1 > 0.1 && t.theta2 > 0.1 && geom::wrap_angle(t.theta3()) < -0.2;
    };
    auto control = geom::double_point_report(geom::ChartMap::BaseOnTorus, cfg.samples, cfg, patch);
    pass = pass && control.points.empty();

    std::ostringstream detail;
    detail << found_front << "+" << found_toy << " double points, max wall distance "
           << worst_wall << " < 1e-6, all transverse, " << control.points.size()
           << " on the wall-free patch";
    report(5, "double-point locus", pass, detail.str());
}

// ---- criterion 6: eigenvalue constraint -------------------------------------

void criterion_eigenvalue_constraint() {
    using namespace pants::cat;
    using pants::exact::det;
    using pants::exact::invert;

    std::mt19937_64 rng(606);
    int engineered = 0, exceptions = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t w = 1 + static_cast<std::size_t>(rand_int(rng, 0, 2));
        RatMatrix m3 = random_invertible(rng, w);
        RatMatrix m4;
        if (trial % 8 == 0) {
            m4 = m3;  // det(m3^{-1} m4 - I) = 0 by construction
            ++engineered;
        } else if (trial % 8 == 4 && w >= 2) {
            // singular difference of full-rank maps: m4 = m3 + (column) e1^T
            for (;;) {
                m4 = m3;
                for (std::size_t i = 0; i < w; ++i) m4(i, 0) += Rational(rand_int(rng, -2, 2));
                if (!det(m4).is_zero() && det(m4 - m3).is_zero()) break;
            }
            ++engineered;
        } else {
            m4 = random_invertible(rng, w);
        }

        RatMatrix id = RatMatrix::identity(w);
        RatMatrix zero(w, w);
        StarSumRep rep;
        rep.dim_v = 2 * w;
        rep.outer = {{w, RatMatrix::vcat(id, zero)},
                     {w, RatMatrix::vcat(zero, id)},
                     {w, RatMatrix::vcat(id, m3)},
                     {w, RatMatrix::vcat(id, m4)}};
        bool constraint = !det(invert(m3) * m4 - id).is_zero();
        if (validate(rep).valid != constraint) ++exceptions;
    }
    bool pass = exceptions == 0 && engineered >= 20;
    std::ostringstream detail;
    detail << "200 assemblies, " << engineered << " engineered singular, " << exceptions
           << " exceptions";
    report(6, "validity equals the eigenvalue-one constraint", pass, detail.str());
}

// ---- criterion 7: round trips -----------------------------------------------

void criterion_round_trips() {
    using namespace pants::cat;

    std::mt19937_64 rng(707);
    int exact_round_trips = 0;
    for (int trial = 0; trial < 200; ++trial) {
        AutPair a = random_autpair(rng, 4);
        AutPair back = to_autpair(from_autpair(a));
        if (back.dim == a.dim && back.m == a.m) ++exact_round_trips;
    }

    int witnesses_ok = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        if (roundtrip_witness(random_pants(seed, 4)).all_ok) ++witnesses_ok;
    }

    bool pass = exact_round_trips == 200 && witnesses_ok == 200;
    std::ostringstream detail;
    detail << exact_round_trips << "/200 exact matrix equalities, " << witnesses_ok
           << "/200 witnesses with all subspace checks";
    report(7, "round trips through the classification", pass, detail.str());
}

// ---- criterion 8: hom preservation ------------------------------------------

void criterion_hom_preservation() {
    using namespace pants::cat;

    int agreements = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        StarSumRep p = random_pants(1000 + 2 * seed, 3);  // dim V <= 6
        StarSumRep q = random_pants(1001 + 2 * seed, 3);
        if (hom_star(p, q).dim() == hom_autpair(to_autpair(p), to_autpair(q)).dim())
            ++agreements;
    }

    const Rational lambdas[4] = {Rational(2), Rational(3), Rational(-1), Rational(1, 2)};
    bool table_ok = true;
    for (const auto& l : lambdas)
        for (const auto& mu : lambdas) {
            std::size_t expected = l == mu ? 1 : 0;
            AutPair a{1, RatMatrix{{l}}}, b{1, RatMatrix{{mu}}};
            table_ok = table_ok && hom_autpair(a, b).dim() == expected &&
                       hom_star(from_autpair(a), from_autpair(b)).dim() == expected;
        }

    bool pass = agreements == 100 && table_ok;
    std::ostringstream detail;
    detail << agreements << "/100 random pairs agree, skyscraper table "
           << (table_ok ? "exact" : "broken");
    report(8, "hom dimensions transport through the equivalence", pass, detail.str());
}

// ---- criterion 9: n=3 classification ----------------------------------------

void criterion_three_star() {
    using namespace pants::cat;
    using pants::exact::det;
    using pants::exact::rref;

    std::mt19937_64 rng(909);
    int classified = 0, witness_ok = 0, hom_ok = 0;
    std::vector<StarSumRep> reps;
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t w = 1 + static_cast<std::size_t>(rand_int(rng, 0, 2));
        RatMatrix m3 = random_invertible(rng, w);
        StarSumRep rep;
        rep.dim_v = 2 * w;
        rep.outer = {{w, RatMatrix::vcat(RatMatrix::identity(w), RatMatrix(w, w))},
                     {w, RatMatrix::vcat(RatMatrix(w, w), RatMatrix::identity(w))},
                     {w, RatMatrix::vcat(RatMatrix::identity(w), m3)}};
        RatMatrix g = random_invertible(rng, rep.dim_v);
        for (auto& o : rep.outer) o.j = g * o.j;
        reps.push_back(rep);

        auto res = classify(rep);
        if (res.kind == ClassificationResult::Kind::Vect && res.dims[0] == w) ++classified;
        if (res.graph_iso && !det(*res.graph_iso).is_zero()) {
            // the witness graph: j1 u + j2 m3 u spans the image of j3
            RatMatrix graph = rep.outer[0].j + rep.outer[1].j * *res.graph_iso;
            if (rref(RatMatrix::hcat(graph, rep.outer[2].j)).rank == w) ++witness_ok;
        }
    }

    for (int i = 0; i < 25; ++i) {
        const auto& p = reps[2 * i];
        const auto& q = reps[2 * i + 1];
        if (hom_star(p, q).dim() == p.outer[0].dim * q.outer[0].dim) ++hom_ok;
    }

    bool pass = classified == 50 && witness_ok == 50 && hom_ok == 25;
    std::ostringstream detail;
    detail << classified << "/50 classified to Vect, " << witness_ok << "/50 verified witnesses, "
           << hom_ok << "/25 hom dimensions equal dim V1 * dim V1'";
    report(9, "three-star reps classify to vector spaces", pass, detail.str());
}

// ---- criterion 10: determinism ----------------------------------------------

void criterion_determinism() {
    auto suite = [&]() {
        std::string all;
        all += run_cli("verify-geometry --samples 2000 --seed 7");
        all += run_cli("trefoil --ray-samples 1024 --seed 3 -o /tmp/pants_acc_trefoil");
        all += run_cli("link-regions --grid-res 64 --seed 5");
        all += run_cli("rep random --seed 11 --max-dim 4 -o /tmp/pants_acc_rep.json");
        all += run_cli("rep validate /tmp/pants_acc_rep.json");
        all += run_cli("rep classify /tmp/pants_acc_rep.json");
        all += run_cli("rep roundtrip /tmp/pants_acc_rep.json");
        all += run_cli("rep hom /tmp/pants_acc_rep.json /tmp/pants_acc_rep.json");
        return all;
    };
    std::string first = suite();
    std::string second = suite();
    bool pass = !first.empty() && first == second;
    std::ostringstream detail;
    detail << first.size() << " bytes, " << (pass ? "byte-identical" : "DIFFER");
    report(10, "full CLI suite is deterministic", pass, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
        return 2;
    }
    g_cli = argv[1];

    criterion_identities();
    criterion_ramification();
    criterion_trefoil();
    criterion_link_regions();
    criterion_double_points();
    criterion_eigenvalue_constraint();
    criterion_round_trips();
    criterion_hom_preservation();
    criterion_three_star();
    criterion_determinism();

    std::printf("ACCEPTANCE: %d/10 criteria passed\n", 10 - g_failures);
    return g_failures > 0 ? 1 : 0;
}
