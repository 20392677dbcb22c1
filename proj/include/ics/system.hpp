#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ics/multiset.hpp"
#include "ics/phase_space.hpp"
#include "ics/point.hpp"

namespace ics {

using PointPair = std::pair<Point, Point>;

/// A k-branch iterated contraction system: a map x -> k-multiset F(x)
/// together with a pairing that matches F(x) and F(y) branch by branch with
/// d(x_i, y_i) <= theta d(x, y).
///
/// Immutable; branch and pairing evaluations are pure.
class Ics {
 public:
  struct Model {
    virtual ~Model() = default;
    virtual MultiSet branches(const Point& x) const = 0;
    virtual std::vector<PointPair> paired_branches(const Point& x, const Point& y) const = 0;
  };

  Ics(PhaseSpace space, int arity, double theta, std::string name,
      std::shared_ptr<const Model> model);

  const PhaseSpace& space() const { return space_; }
  int arity() const { return arity_; }
  double theta() const { return theta_; }
  const std::string& name() const { return name_; }

  /// The k-multiset F(x).
  MultiSet branches(const Point& x) const;

  /// k pairs covering F(x) and F(y); every pair verified to contract by
  /// theta (a violation indicates a miscoded system and throws logic_error).
  std::vector<PointPair> paired_branches(const Point& x, const Point& y) const;

 private:
  PhaseSpace space_;
  int arity_;
  double theta_;
  std::string name_;
  std::shared_ptr<const Model> model_;
};

/// Backward orbit (x_0, ..., x_t) with x_{n+1} in F(x_n); multiplicity is the
/// product of branch multiplicities along the way.
struct AdmissibleSequence {
  std::vector<Point> points;
  long long multiplicity = 1;
};

inline constexpr std::size_t kSequenceCap = std::size_t{1} << 20;

/// All k^t admissible sequences of length t+1 starting at x.
/// Throws ResourceError when k^t exceeds `cap`.
std::vector<AdmissibleSequence> admissible_sequences(const Ics& f, const Point& x, int t,
                                                     std::size_t cap = kSequenceCap);

/// Synchronized pairs of admissible sequences from x and y such that
/// d(x_n, y_n) <= theta^n d(x, y) for every index n.
std::vector<std::pair<AdmissibleSequence, AdmissibleSequence>> paired_sequences(
    const Ics& f, const Point& x, const Point& y, int t, std::size_t cap = kSequenceCap);

/// Uniform distance between two systems of equal arity on the same space:
/// sup over grid points of the bottleneck matching distance between branch
/// multisets. The grid is refined by doubling until the value changes by
/// less than `refine_tol`; `refinement_slack` reports the last change.
struct IcsDistance {
  double value = 0.0;
  double refinement_slack = 0.0;
  int grid_size = 0;
};
IcsDistance ics_distance(const Ics& f1, const Ics& f2, int initial_grid = 512,
                         double refine_tol = 1e-6);
double ics_distance_at(const Ics& f1, const Ics& f2, const Point& x);

// --- Built-in systems ---------------------------------------------------

struct ContractionMap {
  std::function<Point(const Point&)> map;
  double ratio;
  std::string label;
};

/// IFS as an ICS: branches are the maps' values, paired by map index.
Ics from_ifs(PhaseSpace space, std::vector<ContractionMap> maps, std::string name = "ifs");

/// Degree-k expanding circle map x -> kx + g(x) mod 1 with certified
/// derivative range of g; branches are computed on the lift (closed form for
/// g linear, bisection to 1e-13 otherwise) and paired in lift order.
class CircleMap {
 public:
  CircleMap(int degree, std::function<double(double)> g, double g_deriv_lo,
            double g_deriv_hi, std::string name);
  /// x -> degree*x + offset mod 1.
  static CircleMap linear(int degree, double offset = 0.0);

  double operator()(double x) const;
  /// Monotone lift L(s) = degree*s + g(s) on the real line.
  double lift(double s) const;
  int degree() const { return degree_; }
  double min_slope() const { return degree_ + deriv_lo_; }
  double theta() const { return 1.0 / min_slope(); }
  const std::string& name() const { return name_; }

  /// The degree preimages of x, in increasing lift order, in [0,1).
  std::vector<double> inverse_branches(double x) const;
  /// Solves L(s) = target for s (not reduced mod 1).
  double invert_lift(double target) const;

  Ics ics() const;

 private:
  int degree_;
  std::function<double(double)> g_;
  double deriv_lo_, deriv_hi_;
  bool linear_ = false;
  double offset_ = 0.0;
  std::string name_;
};

/// x -> 2x mod 1 on the circle (exact branch formulas).
Ics doubling_map();
Ics expanding_circle_map(const CircleMap& map);

/// Piecewise-linear unimodal map on [0,1] with left slope s1 > 1; the right
/// branch is the onto completion with slope -s1/(s1-1).
Ics tent_map(double left_slope = 2.0);

/// Full shift on k symbols with metric theta_sym^(disagreement index).
Ics full_shift(int k, double theta_sym, int depth = 24);

/// Two-to-one angle-halving fold of the closed unit disc; F(0) = {0, 0}.
Ics disc_fold();

/// Right isoceles triangle folded along the altitude from the right angle;
/// an IFS of two similarity maps with ratio 1/sqrt(2).
Ics triangle_fold();

}  // namespace ics
