#include "fgap/interval_cover.hpp"

#include <algorithm>
#include <cmath>

#include "fgap/errors.hpp"

namespace fgap {

std::string ambient_name(Ambient a) {
  switch (a) {
    case Ambient::unit_interval: return "unit_interval";
    case Ambient::circle: return "circle";
    case Ambient::real_line: return "real_line";
  }
  return "unknown";
}

Ambient ambient_from_name(const std::string& s) {
  if (s == "unit_interval") return Ambient::unit_interval;
  if (s == "circle") return Ambient::circle;
  if (s == "real_line") return Ambient::real_line;
  throw input_error("unknown ambient: " + s);
}

double IntervalCover::total_length() const {
  double t = 0.0;
  for (const auto& [lo, hi] : intervals) t += hi - lo;
  return t;
}

void IntervalCover::validate() const {
  double prev_hi = -1e300;
  for (const auto& [lo, hi] : intervals) {
    if (!(lo <= hi)) throw input_error("cover: interval with lo > hi");
    if (!(lo > prev_hi)) throw input_error("cover: intervals not sorted/disjoint");
    prev_hi = hi;
    if (ambient == Ambient::unit_interval && (lo < 0.0 || hi > 1.0))
      throw input_error("cover: interval outside [0,1]");
    if (ambient == Ambient::circle && (lo < 0.0 || hi > kTwoPi))
      throw input_error("cover: interval outside [0,2pi)");
  }
}

void normalize_intervals(std::vector<std::pair<double, double>>& v) {
  std::sort(v.begin(), v.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (out > 0 && v[i].first <= v[out - 1].second) {
      v[out - 1].second = std::max(v[out - 1].second, v[i].second);
    } else {
      v[out++] = v[i];
    }
  }
  v.resize(out);
}

IntervalCover make_cover(std::vector<std::pair<double, double>> intervals,
                         double resolution, Ambient ambient) {
  normalize_intervals(intervals);
  IntervalCover c;
  c.intervals = std::move(intervals);
  c.resolution = resolution;
  c.ambient = ambient;
  c.validate();
  return c;
}

namespace {

// Index of the first interval with lo > x.
std::size_t upper_index(const IntervalCover& c, double x) {
  return static_cast<std::size_t>(
      std::upper_bound(c.intervals.begin(), c.intervals.end(),
                       std::make_pair(x, 1e300)) -
      c.intervals.begin());
}

double line_distance(const IntervalCover& c, double x) {
  if (c.empty()) return 1e300;
  std::size_t i = upper_index(c, x);
  double d = 1e300;
  if (i > 0) {
    const auto& [lo, hi] = c.intervals[i - 1];
    if (x <= hi) return 0.0;
    d = std::min(d, x - hi);
  }
  if (i < c.intervals.size()) d = std::min(d, c.intervals[i].first - x);
  return d;
}

}  // namespace

double distance_to(const IntervalCover& c, double x) {
  if (c.ambient != Ambient::circle) return line_distance(c, x);
  if (c.empty()) return 1e300;
  x = std::fmod(x, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  double d = line_distance(c, x);
  // wrap candidates: distance through 0 / 2pi
  d = std::min(d, line_distance(c, x + kTwoPi));
  d = std::min(d, line_distance(c, x - kTwoPi));
  return d;
}

bool cover_contains(const IntervalCover& c, double x) {
  return distance_to(c, x) == 0.0;
}

bool cover_intersects(const IntervalCover& c, double lo, double hi) {
  std::size_t i = upper_index(c, lo);
  if (i > 0 && c.intervals[i - 1].second >= lo) return true;
  return i < c.intervals.size() && c.intervals[i].first <= hi;
}

IntervalCover inflate(const IntervalCover& c, double alpha) {
  IntervalCover out;
  out.resolution = c.resolution;
  out.ambient = c.ambient;
  if (c.empty() || alpha < 0.0) {
    out.intervals = c.intervals;
    return out;
  }
  std::vector<std::pair<double, double>> v;
  v.reserve(c.intervals.size());
  for (const auto& [lo, hi] : c.intervals) v.emplace_back(lo - alpha, hi + alpha);
  if (c.ambient == Ambient::circle) {
    // wrap pieces back into [0,2pi)
    std::vector<std::pair<double, double>> w;
    for (auto [lo, hi] : v) {
      if (hi - lo >= kTwoPi) return make_cover({{0.0, kTwoPi}}, c.resolution, c.ambient);
      lo = std::fmod(lo, kTwoPi);
      if (lo < 0.0) lo += kTwoPi;
      hi = lo + (hi - lo) + 0.0;
      hi = lo + (v.empty() ? 0.0 : 0.0);  // recompute below
      w.emplace_back(lo, lo);
    }
    w.clear();
    for (auto [lo, hi] : v) {
      double len = hi - lo;
      double a = std::fmod(lo, kTwoPi);
      if (a < 0.0) a += kTwoPi;
      double b = a + len;
      if (b <= kTwoPi) {
        w.emplace_back(a, b);
      } else {
        w.emplace_back(a, kTwoPi);
        w.emplace_back(0.0, b - kTwoPi);
      }
    }
    normalize_intervals(w);
    // adjacent-through-zero pieces stay split; measure and queries handle it
    if (w.size() >= 2 && w.front().first <= 0.0 && w.back().second >= kTwoPi) {
      // fine: both endpoints present, still disjoint as stored
    }
    out.intervals = std::move(w);
    return out;
  }
  normalize_intervals(v);
  out.intervals = std::move(v);
  return out;
}

double neighborhood_measure(const IntervalCover& c, double alpha, bool clip) {
  if (c.empty()) return 0.0;
  IntervalCover infl = inflate(c, alpha);
  if (!clip || c.ambient == Ambient::circle) return infl.total_length();
  double t = 0.0;
  for (const auto& [lo, hi] : infl.intervals) {
    double a = std::max(lo, 0.0), b = std::min(hi, 1.0);
    if (b > a) t += b - a;
  }
  return t;
}

double int_pow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace fgap
