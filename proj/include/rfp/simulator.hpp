#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfp/deployment.hpp"

namespace rfp {

struct grid_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_aggregate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridOptions {
    std::size_t max_pixels = 50'000'000;
    unsigned threads = 0;  // 0 = one per hardware thread
};

/// Square raster of per-pixel received power over the serving annulus.
///
/// The raster is anchored so the serving site sits exactly on a pixel
/// corner at the center; pixel centers therefore never coincide with a
/// site. Pixels whose center distance to the serving site falls outside
/// [inner_radius, outer_radius] are masked (NaN). Unmasked pixels carry
/// the sum of received powers from the serving site and every generated
/// neighbor site, evaluated at exact center distances.
///
/// Grids are immutable once built and safe to share across threads.
class PixelGrid {
public:
    double pixel_size_m() const { return pixel_size_; }
    double half_extent_m() const { return half_extent_; }
    int side() const { return side_; }
    double inner_radius_m() const { return inner_; }
    double outer_radius_m() const { return outer_; }
    PowerWatts serving_power() const { return PowerWatts(serving_power_); }
    const std::vector<SitePosition>& neighbor_sites() const { return sites_; }
    const std::vector<double>& values() const { return values_; }

    double center_x(int ix) const { return -half_extent_ + (ix + 0.5) * pixel_size_; }
    double center_y(int iy) const { return -half_extent_ + (iy + 0.5) * pixel_size_; }
    /// Center distance to the serving site.
    double distance(int ix, int iy) const;
    /// Received power at the pixel; NaN when masked.
    double value(int ix, int iy) const { return values_[index(ix, iy)]; }
    bool masked(int ix, int iy) const;
    std::size_t index(int ix, int iy) const {
        return static_cast<std::size_t>(iy) * side_ + ix;
    }

private:
    friend PixelGrid build_grid(const Deployment&, int, double, const GridOptions&);

    double pixel_size_ = 1.0;
    double half_extent_ = 0.0;
    int side_ = 0;
    double inner_ = 0.0;
    double outer_ = 0.0;
    double serving_power_ = 0.0;
    std::vector<SitePosition> sites_;
    std::vector<double> values_;
};

/// Rasterizes the deployment at the given pixel size with 0, 1 or 2 rings
/// of neighbor sites. The extent covers the serving annulus and, when
/// neighbor rings are generated, every neighbor site. Construction is
/// parallelized over rows; the result is bit-identical for any thread
/// count.
PixelGrid build_grid(const Deployment& dep, int neighbor_levels, double pixel_size_m,
                     const GridOptions& options = {});

/// Mean received power over the unmasked pixels whose center distance to
/// the serving site lies within [d_fx - epsilon, d_fx + epsilon].
/// Throws empty_aggregate_error when no pixel qualifies.
PowerWatts aggregate_fixed(const PixelGrid& grid, double fixed_distance_m, double epsilon_m);

/// Mean received power over all unmasked pixels.
PowerWatts aggregate_cell(const PixelGrid& grid);

struct ProfileBin {
    double lower_m = 0.0;       // bin lower edge (1 m wide bins)
    double mean_w = 0.0;        // mean received power of the bin's pixels
    std::size_t pixels = 0;
};

/// Per-distance means in 1 m bins from the inner to the outer radius.
/// Only non-empty bins are returned, sorted by ascending distance.
struct DistanceProfile {
    std::vector<ProfileBin> bins;
};

DistanceProfile distance_profile(const PixelGrid& grid);

/// Row-major CSV raster of the grid in dBm, rounded to 0.01 dBm; masked
/// pixels become empty fields. The first row is the maximum-y edge.
void export_heatmap(const PixelGrid& grid, std::ostream& out);
void export_heatmap(const PixelGrid& grid, const std::string& path);

/// CSV with header `bin_m,mean_rfp_dbm,pixels`.
void write_profile_csv(const DistanceProfile& profile, std::ostream& out);
void write_profile_csv(const DistanceProfile& profile, const std::string& path);

}  // namespace rfp
