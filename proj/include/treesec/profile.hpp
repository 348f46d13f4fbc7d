#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treesec/errors.hpp"
#include "treesec/model.hpp"
#include "treesec/rational.hpp"

namespace treesec {

struct ProfilePoint {
  Rational threshold;
  Rational value;
  std::optional<Attack> witness;  // realizes (threshold, value) when present
};

// The function B -> maxp(B) as a right-continuous step function: breakpoints
// with strictly increasing thresholds and strictly increasing values. The
// first breakpoint always has threshold 0; its value is maxp(0), which is
// positive exactly when a zero-cost attack collects a prize.
class MaxPrizeProfile {
 public:
  MaxPrizeProfile() { points_.push_back({Rational(0), Rational(0), Attack{}}); }

  static MaxPrizeProfile from_points(std::vector<ProfilePoint> pts) {
    if (pts.empty() || pts.front().threshold != 0)
      throw LengthMismatch("a profile starts with a breakpoint at threshold 0");
    for (size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].value < 0 || pts[i].threshold < 0)
        throw NegativeValue("profile breakpoints must be nonnegative");
      if (i > 0 && (pts[i].threshold <= pts[i - 1].threshold || pts[i].value <= pts[i - 1].value))
        throw LengthMismatch("profile breakpoints must strictly increase");
    }
    MaxPrizeProfile p;
    p.points_ = std::move(pts);
    return p;
  }

  const std::vector<ProfilePoint>& points() const { return points_; }

  // Last breakpoint with threshold <= B.
  const ProfilePoint& point_at(const Rational& B) const {
    if (B < 0) throw NegativeValue("budgets are nonnegative");
    size_t lo = 0, hi = points_.size();
    while (hi - lo > 1) {
      size_t mid = (lo + hi) / 2;
      if (points_[mid].threshold <= B)
        lo = mid;
      else
        hi = mid;
    }
    return points_[lo];
  }

  const Rational& value_at(const Rational& B) const { return point_at(B).value; }

  bool operator==(const MaxPrizeProfile& other) const {
    if (points_.size() != other.points_.size()) return false;
    for (size_t i = 0; i < points_.size(); ++i)
      if (points_[i].threshold != other.points_[i].threshold || points_[i].value != other.points_[i].value)
        return false;
    return true;
  }

 private:
  std::vector<ProfilePoint> points_;
};

// Sorted union of the two breakpoint threshold sets.
inline std::vector<Rational> merged_thresholds(const MaxPrizeProfile& f, const MaxPrizeProfile& g) {
  std::vector<Rational> ts;
  ts.reserve(f.points().size() + g.points().size());
  for (const auto& p : f.points()) ts.push_back(p.threshold);
  for (const auto& p : g.points()) ts.push_back(p.threshold);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

enum class ProfileOrder {
  Equal,        // identical everywhere
  FirstLower,   // f <= g everywhere, strictly somewhere
  SecondLower,  // g <= f everywhere, strictly somewhere
  Crossing,     // each is strictly lower at some budget
};

struct ProfileComparison {
  ProfileOrder order;
  std::optional<Rational> first_lower_at;   // a budget with f < g
  std::optional<Rational> second_lower_at;  // a budget with g < f
};

// Pointwise comparison on the merged threshold set (the functions are
// constant in between, so this decides the order everywhere).
inline ProfileComparison profile_leq(const MaxPrizeProfile& f, const MaxPrizeProfile& g) {
  ProfileComparison r{ProfileOrder::Equal, {}, {}};
  for (const Rational& t : merged_thresholds(f, g)) {
    const Rational& a = f.value_at(t);
    const Rational& b = g.value_at(t);
    if (a < b && !r.first_lower_at) r.first_lower_at = t;
    if (b < a && !r.second_lower_at) r.second_lower_at = t;
  }
  if (r.first_lower_at && r.second_lower_at)
    r.order = ProfileOrder::Crossing;
  else if (r.first_lower_at)
    r.order = ProfileOrder::FirstLower;
  else if (r.second_lower_at)
    r.order = ProfileOrder::SecondLower;
  else
    r.order = ProfileOrder::Equal;
  return r;
}

}  // namespace treesec
