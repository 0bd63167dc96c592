#include "rfp/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <thread>

namespace rfp {

double PixelGrid::distance(int ix, int iy) const {
    return std::hypot(center_x(ix), center_y(iy));
}

bool PixelGrid::masked(int ix, int iy) const {
    return std::isnan(values_[index(ix, iy)]);
}

namespace {

struct RasterFill {
    double pixel_size;
    double half_extent;
    int side;
    double inner;
    double outer;
    double gamma;
    double scale;  // pe / (f^eta * c); per-site terms are then d^-gamma
    const std::vector<SitePosition>* sites;
    std::vector<double>* values;

    void rows(int row_begin, int row_end) const {
        for (int iy = row_begin; iy < row_end; ++iy) {
            const double cy = -half_extent + (iy + 0.5) * pixel_size;
            for (int ix = 0; ix < side; ++ix) {
                const double cx = -half_extent + (ix + 0.5) * pixel_size;
                const double d = std::hypot(cx, cy);
                auto& out = (*values)[static_cast<std::size_t>(iy) * side + ix];
                if (d < inner || d > outer) {
                    out = std::numeric_limits<double>::quiet_NaN();
                    continue;
                }
                double kernel = std::pow(d, -gamma);
                for (const auto& s : *sites) {
                    kernel += std::pow(std::hypot(cx - s.x, cy - s.y), -gamma);
                }
                out = scale * kernel;
            }
        }
    }
};

}  // namespace

PixelGrid build_grid(const Deployment& dep, int neighbor_levels, double pixel_size_m,
                     const GridOptions& options) {
    if (!(pixel_size_m > 0.0)) {
        throw std::invalid_argument("build_grid: pixel size must be > 0");
    }
    if (neighbor_levels < 0 || neighbor_levels > 2) {
        throw std::invalid_argument("build_grid: neighbor levels must be 0, 1 or 2");
    }

    PixelGrid grid;
    grid.pixel_size_ = pixel_size_m;
    grid.inner_ = dep.exclusion_radius_m;
    grid.outer_ = dep.coverage_radius_m;
    grid.serving_power_ = emitted_power(dep).value;
    grid.sites_ = hex_neighbors(dep.coverage_radius_m,
                                LayoutSpec(dep.layout.overlap, neighbor_levels));

    double needed = dep.coverage_radius_m;
    for (const auto& s : grid.sites_) {
        needed = std::max({needed, std::abs(s.x), std::abs(s.y)});
    }
    // Anchor the serving site on a pixel corner: the half extent is a whole
    // number of pixels, so the grid lines pass through the origin.
    const double half_pixels = std::ceil(needed / pixel_size_m);
    grid.half_extent_ = half_pixels * pixel_size_m;
    const double side = 2.0 * half_pixels;
    if (side * side > static_cast<double>(options.max_pixels)) {
        throw grid_limit_error("build_grid: raster of " + std::to_string(side) + "x" +
                               std::to_string(side) + " pixels exceeds the cap of " +
                               std::to_string(options.max_pixels));
    }
    grid.side_ = static_cast<int>(side);
    grid.values_.resize(static_cast<std::size_t>(grid.side_) * grid.side_);

    const RasterFill fill{grid.pixel_size_, grid.half_extent_, grid.side_,
                          grid.inner_,      grid.outer_,       dep.prop.path_loss_exp,
                          grid.serving_power_ / dep.prop.spectral_factor(),
                          &grid.sites_,     &grid.values_};

    unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min(workers, static_cast<unsigned>(grid.side_)));
    if (workers == 1) {
        fill.rows(0, grid.side_);
        return grid;
    }
    // Each pixel depends only on immutable inputs, so any static row
    // partition yields the same bits.
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int rows_per_worker = (grid.side_ + static_cast<int>(workers) - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const int begin = static_cast<int>(w) * rows_per_worker;
        const int end = std::min(grid.side_, begin + rows_per_worker);
        if (begin >= end) break;
        pool.emplace_back([&fill, begin, end] { fill.rows(begin, end); });
    }
    for (auto& t : pool) t.join();
    return grid;
}

PowerWatts aggregate_fixed(const PixelGrid& grid, double fixed_distance_m, double epsilon_m) {
    const double lo = fixed_distance_m - epsilon_m;
    const double hi = fixed_distance_m + epsilon_m;
    double sum = 0.0;
    std::size_t count = 0;
    for (int iy = 0; iy < grid.side(); ++iy) {
        for (int ix = 0; ix < grid.side(); ++ix) {
            const double v = grid.value(ix, iy);
            if (std::isnan(v)) continue;
            const double d = grid.distance(ix, iy);
            if (d < lo || d > hi) continue;
            sum += v;
            ++count;
        }
    }
    if (count == 0) {
        throw empty_aggregate_error("aggregate_fixed: no pixels within " +
                                    std::to_string(epsilon_m) + " m of distance " +
                                    std::to_string(fixed_distance_m) + " m");
    }
    return PowerWatts(sum / static_cast<double>(count));
}

PowerWatts aggregate_cell(const PixelGrid& grid) {
    double sum = 0.0;
    std::size_t count = 0;
    for (double v : grid.values()) {
        if (std::isnan(v)) continue;
        sum += v;
        ++count;
    }
    if (count == 0) {
        throw empty_aggregate_error("aggregate_cell: grid has no unmasked pixels");
    }
    return PowerWatts(sum / static_cast<double>(count));
}

DistanceProfile distance_profile(const PixelGrid& grid) {
    const double inner = grid.inner_radius_m();
    const double outer = grid.outer_radius_m();
    const std::size_t nbins =
        static_cast<std::size_t>(std::ceil(outer - inner));
    std::vector<double> sums(nbins, 0.0);
    std::vector<std::size_t> counts(nbins, 0);

    for (int iy = 0; iy < grid.side(); ++iy) {
        for (int ix = 0; ix < grid.side(); ++ix) {
            const double v = grid.value(ix, iy);
            if (std::isnan(v)) continue;
            const double d = grid.distance(ix, iy);
            auto bin = static_cast<std::size_t>(d - inner);
            if (bin >= nbins) bin = nbins - 1;  // pixels exactly at the outer edge
            sums[bin] += v;
            counts[bin] += 1;
        }
    }

    DistanceProfile profile;
    for (std::size_t b = 0; b < nbins; ++b) {
        if (counts[b] == 0) continue;
        profile.bins.push_back(ProfileBin{inner + static_cast<double>(b),
                                          sums[b] / static_cast<double>(counts[b]),
                                          counts[b]});
    }
    return profile;
}

namespace {

std::string dbm_field(double watts) {
    if (watts <= 0.0) {
        return "-inf";
    }
    const double dbm = 10.0 * std::log10(watts) + 30.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", dbm);
    return buf;
}

}  // namespace

void export_heatmap(const PixelGrid& grid, std::ostream& out) {
    // Image order: the first emitted row is the maximum-y edge.
    for (int iy = grid.side() - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < grid.side(); ++ix) {
            if (ix > 0) out << ',';
            const double v = grid.value(ix, iy);
            if (!std::isnan(v)) out << dbm_field(v);
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("export_heatmap: stream write failed");
    }
}

void export_heatmap(const PixelGrid& grid, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("export_heatmap: cannot open '" + path + "' for writing");
    }
    export_heatmap(grid, out);
    if (!out.flush()) {
        throw std::runtime_error("export_heatmap: write to '" + path + "' failed");
    }
}

void write_profile_csv(const DistanceProfile& profile, std::ostream& out) {
    out << "bin_m,mean_rfp_dbm,pixels\n";
    for (const auto& bin : profile.bins) {
        char lower[32];
        std::snprintf(lower, sizeof lower, "%g", bin.lower_m);
        out << lower << ',' << dbm_field(bin.mean_w) << ',' << bin.pixels << '\n';
    }
    if (!out) {
        throw std::runtime_error("write_profile_csv: stream write failed");
    }
}

void write_profile_csv(const DistanceProfile& profile, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("write_profile_csv: cannot open '" + path + "' for writing");
    }
    write_profile_csv(profile, out);
    if (!out.flush()) {
        throw std::runtime_error("write_profile_csv: write to '" + path + "' failed");
    }
}

}  // namespace rfp
