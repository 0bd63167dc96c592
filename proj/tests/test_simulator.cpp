#include <doctest.h>

#include <cmath>
#include <cstring>
#include <sstream>

#include "helpers.hpp"
#include "rfp/closed_form.hpp"
#include "rfp/compliance.hpp"
#include "rfp/simulator.hpp"

using namespace rfp;
using rfp::test::rel_err;

namespace {

const PropagationParams kUrban07{3.0, 0.7, 2.0, 32.4};
const PropagationParams kDense37{2.1, 3.7, 2.0, 32.4};
const ElpConfig kElp{0.1, GainDb(15.0), GainDb(2.32)};
constexpr double kHexOverlap = 0.8660254037844386;

Deployment s1_dep1_msp(int neighbors = 0) {
    return Deployment(15.0, 500.0, kUrban07, MspConfig::from_dbm(-90.0),
                      LayoutSpec(kHexOverlap, neighbors == 0 ? 0 : 1), neighbors);
}

Deployment s5_dep2_msp(int neighbors = 0) {
    return Deployment(15.0, 50.0, kDense37, MspConfig::from_dbm(-87.0),
                      LayoutSpec(kHexOverlap, neighbors == 0 ? 0 : 1), neighbors);
}

}  // namespace

TEST_SUITE("simulator") {

TEST_CASE("single-source pixels carry the kernel at their center distance") {
    const Deployment dep = s5_dep2_msp();
    const PixelGrid grid = build_grid(dep, 0, 1.0);
    CHECK(grid.half_extent_m() == 50.0);
    CHECK(grid.side() == 100);
    int checked = 0;
    for (int iy = 0; iy < grid.side(); iy += 7) {
        for (int ix = 0; ix < grid.side(); ix += 7) {
            if (grid.masked(ix, iy)) continue;
            const double expected = fixed_rfp(dep, grid.distance(ix, iy)).value;
            CHECK(rel_err(grid.value(ix, iy), expected) < 1e-12);
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("annulus masking follows the closed membership rule") {
    const PixelGrid grid = build_grid(s5_dep2_msp(), 0, 1.0);
    for (int iy = 0; iy < grid.side(); ++iy) {
        for (int ix = 0; ix < grid.side(); ++ix) {
            const double d = grid.distance(ix, iy);
            const bool inside = d >= 15.0 && d <= 50.0;
            CHECK(grid.masked(ix, iy) == !inside);
        }
    }
}

TEST_CASE("neighbor contributions stay within the closed-form bound per pixel") {
    const Deployment dep = s5_dep2_msp(6);
    const PixelGrid grid = build_grid(dep, 1, 1.0);
    CHECK(grid.neighbor_sites().size() == 6);
    const double bound = neighbor_rfp_ub(dep).value;
    for (int iy = 0; iy < grid.side(); ++iy) {
        for (int ix = 0; ix < grid.side(); ++ix) {
            if (grid.masked(ix, iy)) continue;
            const double serving = fixed_rfp(dep, grid.distance(ix, iy)).value;
            const double neighbor_part = grid.value(ix, iy) - serving;
            CHECK(neighbor_part >= 0.0);
            CHECK(neighbor_part <= bound * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("fixed window aggregate against the closed form and a frozen cross-check") {
    const Deployment dep = s1_dep1_msp();
    const PixelGrid grid = build_grid(dep, 0, 1.0);
    const double sim = aggregate_fixed(grid, 16.0, 1.0).value;
    // Same semantics computed independently with numpy.
    CHECK(rel_err(sim, 3.023500231863807e-08) < 1e-9);
    CHECK(rel_err(sim, fixed_rfp(dep, 16.0).value) < 0.02);
}

TEST_CASE("cell aggregate against the closed form and a frozen cross-check") {
    const Deployment dep = s1_dep1_msp();
    const PixelGrid grid = build_grid(dep, 0, 1.0);
    const double sim = aggregate_cell(grid).value;
    CHECK(rel_err(sim, 6.428846037560193e-11) < 1e-9);
    CHECK(rel_err(sim, cell_rfp(dep).value) < 0.03);

    const PixelGrid with_ring = build_grid(s1_dep1_msp(6), 1, 1.0);
    CHECK(aggregate_cell(with_ring).value > sim);
}

TEST_CASE("a window covering the whole annulus reproduces the cell aggregate") {
    const PixelGrid grid = build_grid(s5_dep2_msp(), 0, 1.0);
    const double whole = aggregate_fixed(grid, 0.0, 1e6).value;
    CHECK(whole == aggregate_cell(grid).value);
}

TEST_CASE("zero-power deployments aggregate to exactly zero") {
    Deployment dep = s5_dep2_msp();
    dep.emitted_power_override = PowerWatts(0.0);
    const PixelGrid grid = build_grid(dep, 0, 1.0);
    CHECK(aggregate_cell(grid).value == 0.0);
    CHECK(aggregate_fixed(grid, 16.0, 1.0).value == 0.0);
}

TEST_CASE("empty fixed window is an explicit error") {
    const PixelGrid grid = build_grid(s5_dep2_msp(), 0, 1.0);
    CHECK_THROWS_AS(aggregate_fixed(grid, 5.0, 0.1), empty_aggregate_error);
}

TEST_CASE("distance profile bins are 1 m wide, non-empty and decreasing without neighbors") {
    const Deployment dep = s5_dep2_msp();
    const PixelGrid grid = build_grid(dep, 0, 1.0);
    const DistanceProfile profile = distance_profile(grid);
    REQUIRE(!profile.bins.empty());
    std::size_t total = 0;
    for (std::size_t i = 0; i < profile.bins.size(); ++i) {
        const auto& bin = profile.bins[i];
        CHECK(bin.pixels > 0);
        CHECK(bin.lower_m >= 15.0);
        CHECK(bin.lower_m < 50.0);
        CHECK(std::floor(bin.lower_m - 15.0) == bin.lower_m - 15.0);
        if (i > 0) {
            CHECK(bin.lower_m > profile.bins[i - 1].lower_m);
            CHECK(bin.mean_w < profile.bins[i - 1].mean_w);
        }
        total += bin.pixels;
    }
    std::size_t unmasked = 0;
    for (double v : grid.values()) {
        if (!std::isnan(v)) ++unmasked;
    }
    CHECK(total == unmasked);
}

TEST_CASE("profile csv has the documented header and row count") {
    const PixelGrid grid = build_grid(s5_dep2_msp(), 0, 1.0);
    const DistanceProfile profile = distance_profile(grid);
    std::ostringstream out;
    write_profile_csv(profile, out);
    std::istringstream in(out.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "bin_m,mean_rfp_dbm,pixels");
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == profile.bins.size());
}

TEST_CASE("heatmap round-trips within the printed precision") {
    const Deployment dep = s5_dep2_msp();
    const PixelGrid grid = build_grid(dep, 0, 1.0);
    std::ostringstream out;
    export_heatmap(grid, out);

    std::istringstream in(out.str());
    std::string line;
    int rows = 0;
    double max_seen = -1e30;
    double max_seen_distance = 0.0;
    for (int iy = grid.side() - 1; iy >= 0; --iy) {
        REQUIRE(std::getline(in, line));
        ++rows;
        std::size_t start = 0;
        for (int ix = 0; ix < grid.side(); ++ix) {
            std::size_t end = line.find(',', start);
            if (end == std::string::npos) end = line.size();
            const std::string field = line.substr(start, end - start);
            if (field.empty()) {
                CHECK(grid.masked(ix, iy));
            } else {
                REQUIRE(!grid.masked(ix, iy));
                const double dbm = std::stod(field);
                const double truth = 10.0 * std::log10(grid.value(ix, iy)) + 30.0;
                CHECK(std::abs(dbm - truth) <= 0.005 + 1e-9);
                if (dbm > max_seen) {
                    max_seen = dbm;
                    max_seen_distance = grid.distance(ix, iy);
                }
            }
            start = end + 1;
        }
    }
    CHECK(rows == grid.side());
    // The hottest pixel sits on the innermost unmasked ring.
    CHECK(max_seen_distance < 15.0 + 1.0);
}

TEST_CASE("grids are bit-identical for any thread count") {
    const Deployment dep = s1_dep1_msp(6);
    const PixelGrid a = build_grid(dep, 1, 2.0, GridOptions{50'000'000, 1});
    const PixelGrid b = build_grid(dep, 1, 2.0, GridOptions{50'000'000, 3});
    const PixelGrid c = build_grid(dep, 1, 2.0, GridOptions{50'000'000, 8});
    REQUIRE(a.values().size() == b.values().size());
    REQUIRE(a.values().size() == c.values().size());
    CHECK(std::memcmp(a.values().data(), b.values().data(),
                      a.values().size() * sizeof(double)) == 0);
    CHECK(std::memcmp(a.values().data(), c.values().data(),
                      a.values().size() * sizeof(double)) == 0);
}

TEST_CASE("raster cap guards against runaway grids") {
    CHECK_THROWS_AS(build_grid(s1_dep1_msp(), 0, 0.05, GridOptions{1'000'000, 1}),
                    grid_limit_error);
}

TEST_CASE("grid extent expands to cover neighbor sites") {
    const PixelGrid l0 = build_grid(s5_dep2_msp(), 0, 1.0);
    const PixelGrid l2 = build_grid(s5_dep2_msp(6), 2, 1.0);
    CHECK(l0.half_extent_m() == 50.0);
    CHECK(l2.neighbor_sites().size() == 18);
    // Farthest ring sits at twice the inter-site distance.
    CHECK(l2.half_extent_m() >= 2.0 * inter_site_distance(50.0, kHexOverlap));
}

TEST_CASE("exposure-limit verification") {
    const Deployment dep(15.0, 250.0, kUrban07, kElp, LayoutSpec(kHexOverlap, 0), 0);
    const PixelGrid grid = build_grid(dep, 0, 1.0);
    const ComplianceReport report = verify_elp_compliance(dep, grid);
    CHECK(report.passed);
    CHECK(report.limit_w_m2 == 0.1);
    CHECK(report.max_pd_w_m2 <= 0.1);
    // The worst pixel hugs the exclusion boundary.
    CHECK(report.worst_distance_m < 16.0);
    CHECK(report.margin_w_m2() > 0.0);
}

TEST_CASE("exposure-limit verification with zero power passes trivially") {
    Deployment dep(15.0, 100.0, kUrban07, kElp, LayoutSpec(kHexOverlap, 0), 0);
    dep.emitted_power_override = PowerWatts(0.0);
    const PixelGrid grid = build_grid(dep, 0, 1.0);
    const ComplianceReport report = verify_elp_compliance(dep, grid);
    CHECK(report.passed);
    CHECK(report.max_pd_w_m2 == 0.0);
}

TEST_CASE("exposure-limit verification rejects mismatched inputs") {
    const Deployment msp = s5_dep2_msp();
    const PixelGrid msp_grid = build_grid(msp, 0, 1.0);
    CHECK_THROWS_AS(verify_elp_compliance(msp, msp_grid), std::invalid_argument);

    const Deployment elp(15.0, 100.0, kUrban07, kElp, LayoutSpec(kHexOverlap, 0), 0);
    CHECK_THROWS_AS(verify_elp_compliance(elp, msp_grid), std::invalid_argument);
}

}  // TEST_SUITE
