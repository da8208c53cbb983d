#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fgap {

enum class Ambient { unit_interval, circle, real_line };

std::string ambient_name(Ambient a);
Ambient ambient_from_name(const std::string& s);

// A set materialized as a finite union of disjoint closed intervals at a
// stated finest scale. Circle covers are parametrized by angle in [0, 2pi);
// an arc crossing 0 is stored split in two.
struct IntervalCover {
  std::vector<std::pair<double, double>> intervals;  // sorted by lo, disjoint
  double resolution = 0.0;                           // finest generation scale
  Ambient ambient = Ambient::unit_interval;

  bool empty() const { return intervals.empty(); }
  std::size_t size() const { return intervals.size(); }
  double total_length() const;

  // Throws input_error if sortedness/disjointness/domain bounds fail.
  void validate() const;
};

// Sorts and merges overlapping or touching intervals in place.
void normalize_intervals(std::vector<std::pair<double, double>>& v);

// Builds a cover from possibly unsorted, possibly overlapping intervals.
IntervalCover make_cover(std::vector<std::pair<double, double>> intervals,
                         double resolution, Ambient ambient);

// Distance from a point to the union (0 if inside). For circle covers both
// the point and the set live in angle coordinates and the distance returned
// is the angular distance.
double distance_to(const IntervalCover& c, double x);

// True if x lies in some interval (closed).
bool cover_contains(const IntervalCover& c, double x);

// True if the closed interval [lo,hi] meets the union.
bool cover_intersects(const IntervalCover& c, double lo, double hi);

// The alpha-neighborhood as a new cover (exact interval inflation; circle
// covers wrap and cap at full circle).
IntervalCover inflate(const IntervalCover& c, double alpha);

// Lebesgue measure of the alpha-neighborhood. By default this is the measure
// of the inflated union on the ambient line (no clipping); pass clip=true to
// clip to [0,1] for unit-interval covers. Circle covers cap at 2pi.
double neighborhood_measure(const IntervalCover& c, double alpha, bool clip = false);

// a^b for integer exponent via repeated multiplication; exact for integer
// values below 2^53, used so grid arithmetic is reproducible.
double int_pow(double base, int exp);

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace fgap
