#pragma once

// Shared algorithm configuration.

#include <stdexcept>
#include <string>

namespace locdom {

enum class Phase2Rule { MaxResidual, FirstOrderThreshold };

inline const char* to_string(Phase2Rule r) {
  return r == Phase2Rule::MaxResidual ? "max" : "fo";
}

struct Config {
  // Density upper bound: the coverage condition in the first phase uses
  // witness sets of size at most 2c.
  int c = 3;
  // Genus bound of the input class; drives the number of elimination
  // iterations in preprocessing (0 disables preprocessing entirely).
  int genus = 0;
  // Bipartite exclusion parameter; only the threshold dominator rule reads
  // it, through the cutoff 4c + 2c(t-1). The max-residual rule ignores it.
  int t = 3;
  Phase2Rule phase2_rule = Phase2Rule::MaxResidual;

  // Safe defaults for a genus bound g: any depth-1 minor of a genus-g graph
  // has edge density below 3 + 6g, and K_{4g+3,3} is excluded.
  static Config for_genus(int g, Phase2Rule rule = Phase2Rule::MaxResidual) {
    Config cfg;
    cfg.genus = g;
    cfg.c = g == 0 ? 3 : 3 + 6 * g;
    cfg.t = 4 * g + 3;
    cfg.phase2_rule = rule;
    return cfg;
  }

  // After preprocessing has eliminated all K_{3,3} depth-1 minors the
  // residual graph supports t = 3; with no preprocessing the configured t
  // applies.
  int effective_t_for_phase2() const { return genus >= 1 ? 3 : t; }

  long long fo_threshold() const {
    long long cc = c;
    long long tt = effective_t_for_phase2();
    return 4 * cc + 2 * cc * (tt - 1);
  }

  void validate() const {
    if (c < 1) throw std::invalid_argument("config: c must be >= 1");
    if (t < 3) throw std::invalid_argument("config: t must be >= 3");
    if (genus < 0) throw std::invalid_argument("config: genus must be >= 0");
  }
};

}  // namespace locdom
