#pragma once

#include <string>

namespace pbdm {

/// Volume growth rate entering the intracellular drift: k_V = r, or k_V = r*n.
enum class KvMode { constant_r, r_times_n };

/// Motility profile D(z): linear z/(2*Zw) + 0.01, or 0.5*(z/Zw)^30 + 0.01.
enum class DzProfile { linear, power30 };

struct ModelParams {
    double r = 0;      // cell growth rate
    double kappa = 0;  // response-speed scaling of the internal drift
    double Dh = 0;     // AHL diffusion
    double Dn = 0;     // nutrient diffusion
    double alpha = 0;  // AHL production
    double beta = 0;   // AHL degradation
    double gamma = 0;  // nutrient consumption
    double h0 = 0;     // AHL threshold
    double mu = 0;     // sensitivity of L(h)
    double Zw = 0;     // CheZ maximum
    KvMode kv_mode = KvMode::constant_r;
    DzProfile dz_profile = DzProfile::linear;

    /// Throws ConfigError on invalid values. r = 0 is admitted (it switches
    /// off growth and drift, used by conservation checks); everything else
    /// must be strictly positive.
    void validate() const;
};

const char* to_string(KvMode m);
const char* to_string(DzProfile p);
KvMode kv_mode_from_string(const std::string& s);
DzProfile dz_profile_from_string(const std::string& s);

} // namespace pbdm
