#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace decay {

using cplx = std::complex<double>;

// Thrown when an operation's numeric preconditions are violated.
// Carries the operation name so front ends can report it.
class precondition_error : public std::runtime_error {
public:
  precondition_error(std::string op, const std::string& what)
      : std::runtime_error(op + ": " + what), op_(std::move(op)) {}

  const std::string& op() const noexcept { return op_; }

private:
  std::string op_;
};

// Distance metric a decay bound is expressed in. For the band metric the
// bound is evaluated at |i-j| and rates are divided by the bandwidth m;
// for the graph metric it is evaluated at the shortest-path distance.
struct Metric {
  enum class Kind { band, graph };
  Kind kind = Kind::band;
  int m = 1;  // bandwidth, used by band-metric rates

  static Metric band(int m) { return {Kind::band, m}; }
  static Metric graph() { return {Kind::graph, 1}; }
  bool is_band() const { return kind == Kind::band; }
};

// Affine spectral map x -> a*x + b produced by normalization.
struct AffineMap {
  double a = 1.0;
  double b = 0.0;

  double operator()(double x) const { return a * x + b; }
  double inverse(double y) const { return (y - b) / a; }
  bool identity() const { return a == 1.0 && b == 0.0; }
};

}  // namespace decay
