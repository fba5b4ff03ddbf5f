#pragma once

#include <utility>
#include <vector>

namespace bpinn {

/// Physical constants of the 1-D oil thermal problem. Losses enter the heat
/// source on a per-unit-volume basis, matching how the governing equation is
/// written; `h` is the volumetric convective coupling to ambient.
struct ThermalParams {
  double k = 0.12;      // thermal conductivity [W/m.K]
  double rho = 870.0;   // density [kg/m^3]
  double cp = 1900.0;   // specific heat [J/kg.K]
  double h = 240.0;     // convective coefficient [W/m^3.K]
  double height = 1.5;  // tank height [m]
  double p0 = 842.0;    // no-load losses [W]
  double mu = 9800.0;   // rated load losses [W]
  double alpha = 0.12 / (870.0 * 1900.0);  // diffusivity k/(rho*cp) [m^2/s]

  /// Fills alpha from k, rho, cp.
  static ThermalParams with_derived(double k, double rho, double cp, double h,
                                    double height, double p0, double mu);

  /// Throws ConfigError unless all entries are strictly positive and alpha
  /// matches k/(rho*cp) to 1e-12 relative.
  void validate() const;
};

/// Uniformly sampled operating data: load factor, ambient temperature and
/// top-oil temperature over time. Times in seconds, temperatures in Celsius.
struct TimeSeriesProfile {
  std::vector<double> t;
  std::vector<double> load;      // K(t), p.u., >= 0
  std::vector<double> theta_a;   // ambient
  std::vector<double> theta_to;  // top-oil
  double sample_interval = 60.0;

  std::size_t size() const { return t.size(); }
  double t_begin() const { return t.front(); }
  double t_end() const { return t.back(); }
  double duration() const { return t.back() - t.front(); }

  /// Equal lengths, >= 2 samples, strictly increasing uniform time base,
  /// K >= 0. Throws ConfigError on violation.
  void validate() const;

  /// Linear interpolation; time outside [t_begin, t_end] throws
  /// OutOfDomainError.
  double load_at(double time) const;
  double ambient_at(double time) const;
  double top_oil_at(double time) const;
};

/// Affine maps between the physical domain and the unit training domain
/// x in [0,1], t in [0,1], temperature approximately in [0,1], plus the PDE
/// coefficients induced in normalized units.
///
/// Physical form:   u_t = alpha * u_xx + alpha/k * q,
///                  q   = p0 + K^2 mu - h (u - theta_a)
/// Normalized form: u~_xx + source_coeff * (p0 + K^2 mu)
///                        - reaction_coeff * (u~ - u~_a)  =  time_coeff * u~_t
struct Normalization {
  double x_scale = 1.0;       // physical height H
  double t_scale = 1.0;       // physical duration T
  double theta_offset = 0.0;  // physical = offset + scale * normalized
  double theta_scale = 1.0;

  /// Scales from the profile's global temperature min/max and the physical
  /// extents. A degenerate (constant) temperature range falls back to unit
  /// scale.
  static Normalization from_profile(const ThermalParams& params,
                                    const TimeSeriesProfile& profile);

  double norm_x(double x_phys) const { return x_phys / x_scale; }
  double phys_x(double x_norm) const { return x_norm * x_scale; }
  double norm_t(double t_phys, double t0_phys) const {
    return (t_phys - t0_phys) / t_scale;
  }
  double phys_t(double t_norm, double t0_phys) const {
    return t0_phys + t_norm * t_scale;
  }
  double norm_temp(double celsius) const {
    return (celsius - theta_offset) / theta_scale;
  }
  double phys_temp(double normalized) const {
    return theta_offset + theta_scale * normalized;
  }

  // Coefficients of the normalized PDE.
  double source_coeff(const ThermalParams& p) const {
    return x_scale * x_scale / (p.k * theta_scale);
  }
  double reaction_coeff(const ThermalParams& p) const {
    return p.h * x_scale * x_scale / p.k;
  }
  double time_coeff(const ThermalParams& p) const {
    return x_scale * x_scale / (p.alpha * t_scale);
  }

  void validate() const;  // strictly monotone maps
};

/// Volumetric heat rate q(x,t) at oil temperature theta_o: no-load losses
/// plus load losses K(t)^2*mu minus convective exchange with ambient.
/// Position x must lie in [0, height]; t must lie inside the profile.
double heat_source(const ThermalParams& params, const TimeSeriesProfile& profile,
                   double theta_o, double x, double time);

/// Dirichlet data: (bottom, top) = (ambient, top-oil) at time t.
std::pair<double, double> boundary_values(const TimeSeriesProfile& profile,
                                          double time);

/// t = 0 spatial profile: linear ramp between the two Dirichlet values, so the
/// corners (0,0) and (H,0) are consistent by construction.
double initial_condition(const TimeSeriesProfile& profile, double x,
                         double height);

}  // namespace bpinn
