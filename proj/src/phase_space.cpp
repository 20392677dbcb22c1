#include "ics/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ics/errors.hpp"

namespace ics {

namespace {

double wrap_unit(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f -= 1.0;  // guards against floor rounding at exact integers
  return f;
}

}  // namespace

struct PhaseSpace::State {
  Kind kind = Kind::Interval;
  PlaneShape shape = PlaneShape::Disc;

  double lo = 0.0, hi = 1.0;           // interval
  int symbols = 2;                     // symbolic
  double theta_sym = 0.5;
  int depth = 24;
  double radius = 1.0;                 // disc
  double bx0 = 0, by0 = 0, bx1 = 1, by1 = 1;  // box

  struct Transform {
    enum class Type { Snowflake, Truncate } type;
    double alpha = 1.0;      // snowflake
    double scale = 1.0;      // truncate: theta^-N
    double threshold = 0.0;  // truncate: theta^N * diam at time of transform
    double cap = 0.0;        // truncate: diam at time of transform
  };
  std::vector<Transform> transforms;
  double diam = 1.0;
};

PhaseSpace PhaseSpace::circle() {
  auto s = std::make_shared<State>();
  s->kind = Kind::Circle;
  s->diam = 0.5;
  return PhaseSpace(std::move(s));
}

PhaseSpace PhaseSpace::interval(double lo, double hi) {
  if (!(lo < hi)) throw InputError("interval requires lo < hi");
  auto s = std::make_shared<State>();
  s->kind = Kind::Interval;
  s->lo = lo;
  s->hi = hi;
  s->diam = hi - lo;
  return PhaseSpace(std::move(s));
}

PhaseSpace PhaseSpace::symbolic(int symbols, double theta_sym, int depth) {
  if (symbols < 2) throw InputError("symbolic space needs at least 2 symbols");
  if (!(theta_sym > 0.0 && theta_sym < 1.0))
    throw InputError("theta_sym must lie in (0,1)");
  if (depth < 1) throw InputError("symbolic depth must be positive");
  auto s = std::make_shared<State>();
  s->kind = Kind::Symbolic;
  s->symbols = symbols;
  s->theta_sym = theta_sym;
  s->depth = depth;
  s->diam = 1.0;  // theta^0: any two sequences differing at index 0
  return PhaseSpace(std::move(s));
}

PhaseSpace PhaseSpace::disc(double radius) {
  if (!(radius > 0)) throw InputError("disc radius must be positive");
  auto s = std::make_shared<State>();
  s->kind = Kind::Plane;
  s->shape = PlaneShape::Disc;
  s->radius = radius;
  s->diam = 2 * radius;
  return PhaseSpace(std::move(s));
}

PhaseSpace PhaseSpace::box(double lx, double ly, double hx, double hy) {
  if (!(lx < hx && ly < hy)) throw InputError("degenerate box");
  auto s = std::make_shared<State>();
  s->kind = Kind::Plane;
  s->shape = PlaneShape::Box;
  s->bx0 = lx;
  s->by0 = ly;
  s->bx1 = hx;
  s->by1 = hy;
  s->diam = std::hypot(hx - lx, hy - ly);
  return PhaseSpace(std::move(s));
}

PhaseSpace PhaseSpace::triangle() {
  auto s = std::make_shared<State>();
  s->kind = Kind::Plane;
  s->shape = PlaneShape::Triangle;
  s->diam = std::sqrt(2.0);
  return PhaseSpace(std::move(s));
}

PhaseSpace::Kind PhaseSpace::kind() const { return state_->kind; }

PhaseSpace::PlaneShape PhaseSpace::plane_shape() const {
  if (state_->kind != Kind::Plane) throw InputError("not a planar space");
  return state_->shape;
}

double PhaseSpace::diameter() const { return state_->diam; }

double PhaseSpace::base_distance(const Point& a, const Point& b) const {
  const State& s = *state_;
  switch (s.kind) {
    case Kind::Circle: {
      double d = std::fabs(wrap_unit(a.x) - wrap_unit(b.x));
      return std::min(d, 1.0 - d);
    }
    case Kind::Interval:
      return std::fabs(a.x - b.x);
    case Kind::Symbolic: {
      const std::size_t n =
          std::min({a.word.size(), b.word.size(), static_cast<std::size_t>(s.depth)});
      for (std::size_t i = 0; i < n; ++i) {
        if (a.word[i] != b.word[i]) return std::pow(s.theta_sym, static_cast<double>(i));
      }
      // Agreement to the truncation depth counts as equality; shorter words
      // are cylinders and measure from their first unknown index.
      const std::size_t m = std::min(a.word.size(), b.word.size());
      if (m < static_cast<std::size_t>(s.depth) && a.word.size() != b.word.size())
        return std::pow(s.theta_sym, static_cast<double>(m));
      return 0.0;
    }
    case Kind::Plane:
      return std::hypot(a.x - b.x, a.y - b.y);
  }
  throw InputError("unknown space kind");
}

double PhaseSpace::distance(const Point& a, const Point& b) const {
  if (!contains(a) || !contains(b)) throw InputError("point outside space domain");
  double d = base_distance(a, b);
  for (const auto& tr : state_->transforms) {
    if (tr.type == State::Transform::Type::Snowflake) {
      d = std::pow(d, tr.alpha);
    } else {
      d = (d <= tr.threshold) ? tr.scale * d : tr.cap;
    }
  }
  return d;
}

bool PhaseSpace::contains(const Point& p) const {
  const State& s = *state_;
  const double tol = 1e-9;
  switch (s.kind) {
    case Kind::Circle:
      return std::isfinite(p.x);
    case Kind::Interval:
      return p.x >= s.lo - tol && p.x <= s.hi + tol;
    case Kind::Symbolic:
      if (p.word.empty()) return false;
      return std::all_of(p.word.begin(), p.word.end(),
                         [&](std::uint8_t c) { return c < s.symbols; });
    case Kind::Plane:
      switch (s.shape) {
        case PlaneShape::Disc:
          return std::hypot(p.x, p.y) <= s.radius + tol;
        case PlaneShape::Box:
          return p.x >= s.bx0 - tol && p.x <= s.bx1 + tol && p.y >= s.by0 - tol &&
                 p.y <= s.by1 + tol;
        case PlaneShape::Triangle:
          return p.x >= -tol && p.y >= -tol && p.x + p.y <= 1.0 + tol;
      }
  }
  return false;
}

bool PhaseSpace::equal(const Point& a, const Point& b) const {
  const State& s = *state_;
  switch (s.kind) {
    case Kind::Circle: {
      double d = std::fabs(wrap_unit(a.x) - wrap_unit(b.x));
      return std::min(d, 1.0 - d) <= kPointEqualityTol;
    }
    case Kind::Interval:
      return std::fabs(a.x - b.x) <= kPointEqualityTol;
    case Kind::Symbolic:
      return base_distance(a, b) <= kPointEqualityTol;
    case Kind::Plane:
      return std::fabs(a.x - b.x) <= kPointEqualityTol &&
             std::fabs(a.y - b.y) <= kPointEqualityTol;
  }
  return false;
}

PhaseSpace PhaseSpace::snowflake(double alpha) const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("snowflake exponent must be in (0,1]");
  if (alpha == 1.0) return *this;
  auto s = std::make_shared<State>(*state_);
  State::Transform tr;
  tr.type = State::Transform::Type::Snowflake;
  tr.alpha = alpha;
  s->transforms.push_back(tr);
  s->diam = std::pow(s->diam, alpha);
  return PhaseSpace(std::move(s));
}

PhaseSpace PhaseSpace::truncated(double theta, int n) const {
  if (!(theta > 0.0 && theta < 1.0)) throw InputError("truncation theta must be in (0,1)");
  if (n < 0) throw InputError("truncation level must be nonnegative");
  auto s = std::make_shared<State>(*state_);
  State::Transform tr;
  tr.type = State::Transform::Type::Truncate;
  tr.scale = std::pow(theta, -n);
  tr.threshold = std::pow(theta, n) * s->diam;
  tr.cap = s->diam;
  s->transforms.push_back(tr);
  // diameter is unchanged: scaled distances top out exactly at the cap
  return PhaseSpace(std::move(s));
}

bool PhaseSpace::same_space(const PhaseSpace& other) const {
  const State& a = *state_;
  const State& b = *other.state_;
  if (state_ == other.state_) return true;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::Interval:
      if (a.lo != b.lo || a.hi != b.hi) return false;
      break;
    case Kind::Symbolic:
      if (a.symbols != b.symbols || a.theta_sym != b.theta_sym || a.depth != b.depth)
        return false;
      break;
    case Kind::Plane:
      if (a.shape != b.shape) return false;
      if (a.shape == PlaneShape::Disc && a.radius != b.radius) return false;
      if (a.shape == PlaneShape::Box &&
          (a.bx0 != b.bx0 || a.by0 != b.by0 || a.bx1 != b.bx1 || a.by1 != b.by1))
        return false;
      break;
    case Kind::Circle:
      break;
  }
  if (a.transforms.size() != b.transforms.size()) return false;
  for (std::size_t i = 0; i < a.transforms.size(); ++i) {
    const auto& ta = a.transforms[i];
    const auto& tb = b.transforms[i];
    if (ta.type != tb.type || ta.alpha != tb.alpha || ta.scale != tb.scale ||
        ta.threshold != tb.threshold || ta.cap != tb.cap)
      return false;
  }
  return true;
}

double PhaseSpace::interval_lo() const {
  if (state_->kind != Kind::Interval) throw InputError("not an interval space");
  return state_->lo;
}

double PhaseSpace::interval_hi() const {
  if (state_->kind != Kind::Interval) throw InputError("not an interval space");
  return state_->hi;
}

int PhaseSpace::symbol_count() const {
  if (state_->kind != Kind::Symbolic) throw InputError("not a symbolic space");
  return state_->symbols;
}

double PhaseSpace::symbol_theta() const {
  if (state_->kind != Kind::Symbolic) throw InputError("not a symbolic space");
  return state_->theta_sym;
}

int PhaseSpace::symbol_depth() const {
  if (state_->kind != Kind::Symbolic) throw InputError("not a symbolic space");
  return state_->depth;
}

double PhaseSpace::disc_radius() const {
  if (state_->kind != Kind::Plane || state_->shape != PlaneShape::Disc)
    throw InputError("not a disc space");
  return state_->radius;
}

Point PhaseSpace::canonical(Point p) const {
  if (state_->kind == Kind::Circle) p.x = wrap_unit(p.x);
  if (state_->kind == Kind::Symbolic &&
      p.word.size() > static_cast<std::size_t>(state_->depth))
    p.word.resize(state_->depth);
  return p;
}

std::string PhaseSpace::describe() const {
  std::ostringstream os;
  switch (state_->kind) {
    case Kind::Circle:
      os << "circle";
      break;
    case Kind::Interval:
      os << "interval[" << state_->lo << "," << state_->hi << "]";
      break;
    case Kind::Symbolic:
      os << "shift(" << state_->symbols << ",theta=" << state_->theta_sym << ")";
      break;
    case Kind::Plane:
      switch (state_->shape) {
        case PlaneShape::Disc:
          os << "disc(r=" << state_->radius << ")";
          break;
        case PlaneShape::Box:
          os << "box";
          break;
        case PlaneShape::Triangle:
          os << "triangle";
          break;
      }
      break;
  }
  for (const auto& tr : state_->transforms) {
    if (tr.type == State::Transform::Type::Snowflake)
      os << "^" << tr.alpha;
    else
      os << "'trunc";
  }
  return os.str();
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  if (!p.word.empty()) {
    for (auto c : p.word) os << static_cast<int>(c);
  } else {
    os << "(" << p.x;
    if (p.y != 0.0) os << "," << p.y;
    os << ")";
  }
  return os.str();
}

}  // namespace ics
