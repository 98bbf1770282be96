#include <doctest.h>

#include <cmath>
#include <sstream>

#include "pants/geom/link.hpp"
#include "pants/geom/polyline.hpp"

using namespace pants::geom;
using pants::DegenerateCrossingError;

namespace {

Polyline2 circle(int n, double r = 1.0) {
    Polyline2 p;
    for (int k = 0; k <= n; ++k) {
        double t = 2 * M_PI * (k + 0.5) / n;
        p.pts.push_back({r * std::cos(t), r * std::sin(t)});
    }
    return p;
}

Polyline2 figure_eight(int n) {
    Polyline2 p;
    for (int k = 0; k <= n; ++k) {
        double t = 2 * M_PI * (k + 0.5) / n;
        p.pts.push_back({std::sin(2 * t), std::sin(t)});
    }
    return p;
}

}  // namespace

TEST_SUITE("polyline crossings") {
    TEST_CASE("circle has none") { CHECK(polyline_crossings(circle(512)).count() == 0); }

    TEST_CASE("figure eight has one, at the origin") {
        auto report = polyline_crossings(figure_eight(512));
        REQUIRE(report.count() == 1);
        CHECK(norm(report.crossings[0].where) < 1e-2);
    }

    TEST_CASE("trefoil diagram has three, all on the double-point sphere") {
        GeomConfig cfg;
        auto report = polyline_crossings(trefoil_polyline(cfg));
        REQUIRE(report.count() == 3);
        // crossings come from wall rays: their images sit on the equator,
        // which lands at norm exactly 2 rho1 under the projection
        for (const auto& c : report.crossings)
            CHECK(norm(c.where) == doctest::Approx(2 * cfg.rho1).epsilon(1e-6));
    }

    TEST_CASE("two crossings within tol are flagged degenerate") {
        // a horizontal run crossed by two vertical runs 1e-12 apart
        Polyline2 p;
        p.pts = {{0, 0},           {10, 0},          {10, 2}, {5, 2}, {5, -2},
                 {5 + 1e-12, -2},  {5 + 1e-12, 2},   {0, 2},  {0, 0}};
        CHECK_THROWS_AS(polyline_crossings(p), DegenerateCrossingError);
    }
}

TEST_SUITE("regions 2d") {
    TEST_CASE("jordan curve") {
        GeomConfig cfg;
        auto rc = region_count_2d(circle(512), cfg);
        CHECK(rc.total == 2);
        CHECK(rc.bounded == 1);
        CHECK(rc.stable);
    }

    TEST_CASE("figure eight") {
        GeomConfig cfg;
        auto rc = region_count_2d(figure_eight(512), cfg);
        CHECK(rc.total == 3);
        CHECK(rc.bounded == 2);
        CHECK(rc.stable);
    }

    TEST_CASE("trefoil diagram") {
        GeomConfig cfg;
        auto rc = region_count_2d(trefoil_polyline(cfg), cfg);
        CHECK(rc.total == 5);
        CHECK(rc.bounded == 4);
        CHECK(rc.stable);
    }

    TEST_CASE("euler count: regions = crossings + 2 on generic closed curves") {
        GeomConfig cfg;
        for (const Polyline2& p : {circle(512), figure_eight(512), trefoil_polyline(cfg)}) {
            auto rc = region_count_2d(p, cfg);
            auto cr = polyline_crossings(p);
            CHECK(rc.total == static_cast<int>(cr.count()) + 2);
        }
    }

    TEST_CASE("counts survive doubling of the sampling resolution") {
        GeomConfig cfg;
        GeomConfig doubled = cfg;
        doubled.ray_samples *= 2;
        auto a = region_count_2d(trefoil_polyline(cfg), cfg);
        auto b = region_count_2d(trefoil_polyline(doubled), doubled);
        CHECK(a.total == b.total);
        CHECK(a.bounded == b.bounded);
        CHECK(polyline_crossings(trefoil_polyline(doubled)).count() == 3);
    }
}

TEST_SUITE("curve output") {
    TEST_CASE("csv has a header and one vertex per line") {
        Polyline2 p;
        p.pts = {{0, 0}, {1.5, 0}, {0.25, 2}, {0, 0}};
        std::ostringstream os;
        write_csv(p, os);
        CHECK(os.str() == "x,y\n0,0\n1.5,0\n0.25,2\n0,0\n");
    }

    TEST_CASE("svg is a single fitted path") {
        std::ostringstream os;
        write_svg(circle(64), os);
        std::string s = os.str();
        CHECK(s.find("<svg") != std::string::npos);
        CHECK(s.find("viewBox=") != std::string::npos);
        CHECK(s.find("<path") != std::string::npos);
        CHECK(s.find("<path", s.find("<path") + 1) == std::string::npos);  // exactly one
    }
}
