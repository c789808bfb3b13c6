#include "ivopt/descent.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ivopt {

Eigen::VectorXd draw_t(const TStrategy& strategy, int n, std::mt19937_64* rng) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  Eigen::VectorXd t(n);
  switch (strategy.kind) {
    case TStrategy::Kind::Zero:
      t.setZero();
      break;
    case TStrategy::Kind::Midpoint:
      t.setConstant(0.5);
      break;
    case TStrategy::Kind::Random: {
      std::mt19937_64 local(strategy.seed);
      std::mt19937_64& engine = rng ? *rng : local;
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (int i = 0; i < n; ++i) t[i] = unit(engine);
      break;
    }
    case TStrategy::Kind::Fixed: {
      if (static_cast<int>(strategy.fixed_values.size()) != n)
        throw std::invalid_argument("fixed t list has the wrong length");
      for (int i = 0; i < n; ++i) t[i] = strategy.fixed_values[i];
      break;
    }
  }
  for (int i = 0; i < n; ++i)
    if (!(t[i] >= 0.0 && t[i] <= 1.0))
      throw std::invalid_argument("t values must lie in [0,1]");
  return t;
}

Eigen::VectorXd candidate_direction(const IntervalBox& g,
                                    const Eigen::VectorXd& t, double tau) {
  if (t.size() != g.size())
    throw std::invalid_argument("t length does not match box dimension");
  for (int i = 0; i < t.size(); ++i)
    if (!(t[i] >= 0.0 && t[i] <= 1.0))
      throw std::invalid_argument("t values must lie in [0,1]");
  Eigen::VectorXd d(g.size());
  for (int i = 0; i < g.size(); ++i) {
    if (zero_in_interior(g[i], tau))
      d[i] = 0.0;
    else
      d[i] = -g[i].hi() + t[i] * (g[i].hi() - g[i].lo());
  }
  return d;
}

Eigen::VectorXd candidate_direction(const IntervalBox& g,
                                    const TStrategy& strategy, double tau) {
  return candidate_direction(g, draw_t(strategy, g.size()), tau);
}

DescentCertificate certify(const Eigen::VectorXd& d, const IntervalBox& g) {
  if (d.size() != g.size())
    throw std::invalid_argument("direction length does not match box");
  Interval s;
  for (int i = 0; i < g.size(); ++i) s = s + scale(d[i], g[i]);
  return {d, s, strictly_precedes(s, Interval())};
}

bool in_descent_set(const Eigen::VectorXd& d, const IntervalBox& g) {
  if (d.size() != g.size())
    throw std::invalid_argument("direction length does not match box");
  return g.lower().dot(d) < 0.0 && g.upper().dot(d) < 0.0;
}

bool is_critical(const IntervalBox& g, double tau) {
  for (const Interval& c : g)
    if (!zero_in_closure(c, tau)) return false;
  return true;
}

CriticalityReport criticality_oracle(const IntervalBox& g, double tau) {
  const int n = g.size();
  if (n > 16)
    throw std::invalid_argument(
        "orthant enumeration is limited to 16 dimensions; use is_critical");
  CriticalityReport rep;
  rep.orthants.reserve(std::size_t{1} << n);
  double best = 0.0;
  const OrthantEntry* best_entry = nullptr;
  for (std::uint32_t pattern = 0; pattern < (std::uint32_t{1} << n);
       ++pattern) {
    OrthantEntry entry;
    entry.signs.resize(n);
    entry.active.resize(n);
    entry.vertex = Eigen::VectorXd::Zero(n);
    entry.infimum = 0.0;
    for (int i = 0; i < n; ++i) {
      const int s = (pattern >> i) & 1 ? -1 : +1;
      entry.signs[i] = s;
      // Worst-case selection: the box maximum of p'd on this orthant uses
      // the upper endpoint where d_i >= 0 and the lower endpoint otherwise.
      const double c = s > 0 ? g[i].hi() : g[i].lo();
      entry.active[i] = c;
      const double contribution = s * c;  // value of c*d_i at d_i = s
      if (contribution < 0.0) {
        entry.vertex[i] = s;
        entry.infimum += contribution;
      }
    }
    rep.orthants.push_back(std::move(entry));
    if (rep.orthants.back().infimum < best) {
      best = rep.orthants.back().infimum;
      best_entry = &rep.orthants.back();
    }
  }
  rep.critical = !(best < -tau);
  if (!rep.critical && best_entry) rep.witness = best_entry->vertex;
  return rep;
}

namespace {

std::string sign_string(const std::vector<int>& signs) {
  std::string s;
  for (int v : signs) s += v > 0 ? '+' : '-';
  return s;
}

std::string entry_line(const OrthantEntry& e) {
  std::ostringstream os;
  os << "  (" << sign_string(e.signs) << "): selection";
  for (int i = 0; i < e.active.size(); ++i) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), " %+.5f*d%d", e.active[i], i + 1);
    os << buf;
  }
  char inf[48];
  std::snprintf(inf, sizeof(inf), "%.5f", e.infimum);
  os << " ; infimum over cube " << inf;
  if (e.infimum < 0.0) {
    os << " ; descent at d = (";
    for (int i = 0; i < e.vertex.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%s%g", i ? ", " : "", e.vertex[i]);
      os << buf;
    }
    os << ")";
  } else {
    os << " ; no descent";
  }
  os << "\n";
  return os.str();
}

bool uniform_sign(const OrthantEntry& e) {
  for (int v : e.signs)
    if (v != e.signs.front()) return false;
  return true;
}

}  // namespace

std::string format_case_table(const CriticalityReport& report) {
  std::ostringstream os;
  const bool grouped =
      !report.orthants.empty() && report.orthants.front().signs.size() == 2;
  if (grouped) {
    os << "Case 1 (d1, d2 of the same sign):\n";
    for (const OrthantEntry& e : report.orthants)
      if (uniform_sign(e)) os << entry_line(e);
    os << "Case 2 (d1, d2 of opposite sign):\n";
    for (const OrthantEntry& e : report.orthants)
      if (!uniform_sign(e)) os << entry_line(e);
  } else {
    for (const OrthantEntry& e : report.orthants) os << entry_line(e);
  }
  os << (report.critical
             ? "verdict: critical (no sign pattern admits a strictly "
               "negative certificate)\n"
             : "verdict: not critical (a descent direction exists)\n");
  return os.str();
}

}  // namespace ivopt
