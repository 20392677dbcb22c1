#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ics/point.hpp"

namespace ics {

/// Absolute tolerance under which two coordinate representations are
/// considered the same point.
inline constexpr double kPointEqualityTol = 1e-12;

/// A compact metric space together with the metric transforms used in the
/// contraction arguments (snowflake d^alpha and the truncated metric d').
///
/// Instances are immutable values; copies share state and are safe to read
/// concurrently.
class PhaseSpace {
 public:
  enum class Kind { Circle, Interval, Symbolic, Plane };
  enum class PlaneShape { Disc, Box, Triangle };

  /// R/Z with arc-length metric; circumference 1, diameter 1/2, systole 1.
  static PhaseSpace circle();
  static PhaseSpace interval(double lo, double hi);
  /// {0..k-1}^N truncated at `depth`, metric theta_sym^(first disagreement).
  static PhaseSpace symbolic(int symbols, double theta_sym, int depth = 24);
  static PhaseSpace disc(double radius = 1.0);
  static PhaseSpace box(double lx, double ly, double hx, double hy);
  /// Triangle with vertices (0,0), (1,0), (0,1).
  static PhaseSpace triangle();

  Kind kind() const;
  PlaneShape plane_shape() const;
  double diameter() const;

  /// Exact metric evaluation, including any snowflake/truncation transforms.
  /// Throws InputError if either point is outside the domain.
  double distance(const Point& a, const Point& b) const;

  /// Metric of the underlying space, before transforms.
  double base_distance(const Point& a, const Point& b) const;

  bool contains(const Point& p) const;
  /// Representation equality at kPointEqualityTol (independent of transforms).
  bool equal(const Point& a, const Point& b) const;

  /// Space carrying the metric d^alpha, alpha in (0,1].
  PhaseSpace snowflake(double alpha) const;
  /// Space carrying d'(x,y) = theta^-N d(x,y) when d <= theta^N diam, else diam.
  PhaseSpace truncated(double theta, int n) const;

  /// Structural identity of kind, parameters and transform chain.
  bool same_space(const PhaseSpace& other) const;

  // Kind-specific accessors (throw InputError when not applicable).
  double interval_lo() const;
  double interval_hi() const;
  int symbol_count() const;
  double symbol_theta() const;
  int symbol_depth() const;
  double disc_radius() const;

  /// Canonical representative (e.g. circle coordinates wrapped to [0,1)).
  Point canonical(Point p) const;

  std::string describe() const;

 private:
  struct State;
  explicit PhaseSpace(std::shared_ptr<const State> s) : state_(std::move(s)) {}
  std::shared_ptr<const State> state_;
};

}  // namespace ics
