#include "bpinn/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bpinn/errors.hpp"

namespace bpinn {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

double interp_series(const std::vector<double>& t, const std::vector<double>& y,
                     double time) {
  if (time < t.front() || time > t.back()) {
    throw OutOfDomainError("time " + std::to_string(time) +
                           " outside profile range [" +
                           std::to_string(t.front()) + ", " +
                           std::to_string(t.back()) + "]");
  }
  auto it = std::upper_bound(t.begin(), t.end(), time);
  if (it == t.begin()) return y.front();
  if (it == t.end()) return y.back();
  std::size_t i = static_cast<std::size_t>(it - t.begin());
  double w = (time - t[i - 1]) / (t[i] - t[i - 1]);
  return y[i - 1] + w * (y[i] - y[i - 1]);
}

}  // namespace

ThermalParams ThermalParams::with_derived(double k, double rho, double cp,
                                          double h, double height, double p0,
                                          double mu) {
  ThermalParams p;
  p.k = k;
  p.rho = rho;
  p.cp = cp;
  p.h = h;
  p.height = height;
  p.p0 = p0;
  p.mu = mu;
  p.alpha = k / (rho * cp);
  return p;
}

void ThermalParams::validate() const {
  require(k > 0 && rho > 0 && cp > 0 && h > 0 && height > 0 && p0 > 0 && mu > 0,
          "thermal parameters must be strictly positive");
  double derived = k / (rho * cp);
  require(std::abs(alpha - derived) <= 1e-12 * std::abs(derived),
          "alpha inconsistent with k/(rho*cp)");
}

void TimeSeriesProfile::validate() const {
  require(t.size() >= 2, "profile needs at least two samples");
  require(t.size() == load.size() && t.size() == theta_a.size() &&
              t.size() == theta_to.size(),
          "profile series lengths differ");
  require(sample_interval > 0, "sample_interval must be positive");
  for (std::size_t i = 1; i < t.size(); ++i) {
    double dt = t[i] - t[i - 1];
    require(dt > 0, "profile times not strictly increasing");
    require(std::abs(dt - sample_interval) <= 1e-6 * sample_interval,
            "profile time base not uniform at sample " + std::to_string(i));
  }
  for (double k : load) require(k >= 0, "load factor must be >= 0");
}

double TimeSeriesProfile::load_at(double time) const {
  return interp_series(t, load, time);
}
double TimeSeriesProfile::ambient_at(double time) const {
  return interp_series(t, theta_a, time);
}
double TimeSeriesProfile::top_oil_at(double time) const {
  return interp_series(t, theta_to, time);
}

Normalization Normalization::from_profile(const ThermalParams& params,
                                          const TimeSeriesProfile& profile) {
  Normalization n;
  n.x_scale = params.height;
  n.t_scale = profile.duration();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : profile.theta_a) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  for (double v : profile.theta_to) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  n.theta_offset = lo;
  n.theta_scale = (hi - lo) > 1e-12 ? (hi - lo) : 1.0;
  return n;
}

void Normalization::validate() const {
  require(x_scale > 0 && t_scale > 0 && theta_scale > 0,
          "normalization scales must be strictly positive");
}

double heat_source(const ThermalParams& params, const TimeSeriesProfile& profile,
                   double theta_o, double x, double time) {
  if (x < 0 || x > params.height) {
    throw OutOfDomainError("position " + std::to_string(x) +
                           " outside [0, " + std::to_string(params.height) + "]");
  }
  double k_load = profile.load_at(time);
  double p_load = k_load * k_load * params.mu;
  return params.p0 + p_load - params.h * (theta_o - profile.ambient_at(time));
}

std::pair<double, double> boundary_values(const TimeSeriesProfile& profile,
                                          double time) {
  return {profile.ambient_at(time), profile.top_oil_at(time)};
}

double initial_condition(const TimeSeriesProfile& profile, double x,
                         double height) {
  if (x < 0 || x > height) {
    throw OutOfDomainError("position " + std::to_string(x) + " outside [0, " +
                           std::to_string(height) + "]");
  }
  double bottom = profile.theta_a.front();
  double top = profile.theta_to.front();
  return bottom + (top - bottom) * (x / height);
}

}  // namespace bpinn
