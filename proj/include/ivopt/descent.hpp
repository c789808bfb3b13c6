#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ivopt/function.hpp"
#include "ivopt/interval.hpp"

namespace ivopt {

/// Direction d with the certificate interval S = sum_i d_i * g_i.
/// S strictly below [0,0] witnesses that d is a descent direction; this is
/// a stronger test than membership in the descent set {g_lo'd<0, g_hi'd<0},
/// since S.hi maximizes over all box selections. certify => in_descent_set,
/// but not conversely for mixed-sign d.
struct DescentCertificate {
  Eigen::VectorXd d;
  Interval S;
  bool is_descent = false;
};

/// How the endpoint parameters t_i in [0,1] of a candidate direction are
/// chosen: d_i = -g_i.hi + t_i * (g_i.hi - g_i.lo).
struct TStrategy {
  enum class Kind { Zero, Midpoint, Random, Fixed };
  Kind kind = Kind::Zero;
  std::vector<double> fixed_values;  // Kind::Fixed
  std::uint64_t seed = 0;            // Kind::Random, standalone draws

  static TStrategy zero() { return {}; }
  static TStrategy midpoint() { return {Kind::Midpoint, {}, 0}; }
  static TStrategy random(std::uint64_t seed) {
    return {Kind::Random, {}, seed};
  }
  static TStrategy fixed(std::vector<double> values) {
    return {Kind::Fixed, std::move(values), 0};
  }
};

/// n parameters in [0,1] per the strategy. Random draws come from `rng`
/// when given, otherwise from a fresh engine seeded with strategy.seed.
Eigen::VectorXd draw_t(const TStrategy& strategy, int n,
                       std::mt19937_64* rng = nullptr);

/// Candidate descent direction: d_i = 0 where 0 lies in the interior of
/// g_i, otherwise the point of -g_i selected by t_i. The all-zero vector is
/// a legal result and signals that no candidate exists.
Eigen::VectorXd candidate_direction(const IntervalBox& g,
                                    const Eigen::VectorXd& t,
                                    double tau = kZeroTol);
Eigen::VectorXd candidate_direction(const IntervalBox& g,
                                    const TStrategy& strategy,
                                    double tau = kZeroTol);

/// Certificate S = sum_i d_i * g_i with is_descent = (S strictly < [0,0]).
DescentCertificate certify(const Eigen::VectorXd& d, const IntervalBox& g);

/// Membership in {d : g_lo'd < 0 and g_hi'd < 0}.
bool in_descent_set(const Eigen::VectorXd& d, const IntervalBox& g);

/// Closed-form criticality test: no direction d has p'd < 0 for every
/// selection p from the box iff every component contains 0 in its closed
/// hull (the box maximum of p'd is separable per coordinate).
bool is_critical(const IntervalBox& g, double tau = kZeroTol);

/// One sign pattern of the exhaustive criticality check: the active
/// endpoint selection, the infimum of the selected linear form over the
/// pattern's unit cube, and the vertex attaining it.
struct OrthantEntry {
  std::vector<int> signs;   // +1 / -1 per coordinate
  Eigen::VectorXd active;   // worst-case endpoint per coordinate
  double infimum = 0.0;
  Eigen::VectorXd vertex;   // cube vertex attaining the infimum
};

struct CriticalityReport {
  bool critical = false;
  std::optional<Eigen::VectorXd> witness;  // present iff not critical
  std::vector<OrthantEntry> orthants;
};

/// Enumerates all 2^n sign patterns of direction space and checks whether
/// any admits a strictly negative box-maximum certificate; validates the
/// closed-form test and yields a case-by-case report. Dimensions above 16
/// are refused.
CriticalityReport criticality_oracle(const IntervalBox& g,
                                     double tau = kZeroTol);

/// Human-readable per-pattern table; for n = 2 the patterns are grouped
/// into the uniform-sign and mixed-sign cases.
std::string format_case_table(const CriticalityReport& report);

}  // namespace ivopt
