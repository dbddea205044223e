#pragma once

#include <complex>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace hilbert_et {

enum class Parity { even, odd, none };

const char* to_string(Parity p);

struct Knot {
  double x = 0.0;
  double value = 0.0;
};

class CompactFunction;

namespace forms {

/// 2 max(1 - 2|x|, 0), unit mass.
struct Triangle {};
/// (2/pi) log((1 + sqrt(1 - 4x^2)) / (2|x|)), unit mass, log singular at 0.
struct MagicF {};
/// 2x / sqrt(1 - 4x^2), odd.
struct MagicG {};
/// (1 - 4x^2)^(-1/2), mass pi/2.
struct Chebyshev {};
/// Linear between strictly increasing knots in [-1/2, 1/2], zero outside.
struct PiecewiseLinear {
  std::vector<Knot> knots;
};
/// base_{1-eps} * phi_eps with g_s(x) = g(x/s)/s.
struct Mollified {
  std::shared_ptr<const CompactFunction> base;
  double epsilon = 0.0;
};

}  // namespace forms

using Form = std::variant<forms::Triangle, forms::MagicF, forms::MagicG, forms::Chebyshev,
                          forms::PiecewiseLinear, forms::Mollified>;

/// A function supported in [-1/2, 1/2], as a closed-form tag or a polyline,
/// with its symmetry and class flags worked out at construction.
class CompactFunction {
 public:
  static CompactFunction triangle();
  static CompactFunction magic_f();
  static CompactFunction magic_g();
  static CompactFunction chebyshev();
  static CompactFunction polyline(std::vector<Knot> knots);
  /// Zero on |x| <= 1/4, peak 4 at |x| = 5/16, unit mass.
  static CompactFunction outlier();
  static CompactFunction mollified(const CompactFunction& base, double epsilon);

  const Form& form() const { return form_; }
  std::string name() const;

  double operator()(double x) const;

  Parity parity() const { return parity_; }
  bool continuous() const { return continuous_; }
  bool nonnegative() const { return nonnegative_; }
  /// even, continuous, non-negative and not identically zero
  bool class_A() const { return parity_ == Parity::even && continuous_ && nonnegative_ && mass_ > 0.0; }
  bool radial_decreasing() const { return radial_decreasing_; }

  /// int F
  double mass() const { return mass_; }
  double l1_norm() const;

  /// Points in [-1/2, 1/2] where F or its transform is not smooth.
  std::vector<double> breakpoints() const;

  /// Points where H(F) itself is unbounded.
  std::vector<double> line_singularities() const;

  /// Triangle and polylines: the knots; empty otherwise.
  std::vector<Knot> knots() const;
  bool piecewise_linear() const { return !knots().empty(); }

  /// Closed-form Fourier transform int F(x) e^{-2 pi i t x} dx.
  std::complex<double> fourier(double t) const;

 private:
  explicit CompactFunction(Form form);
  void classify();

  Form form_;
  Parity parity_ = Parity::none;
  bool continuous_ = false;
  bool nonnegative_ = false;
  bool radial_decreasing_ = false;
  double mass_ = 0.0;
};

namespace mollifier {

/// phi = psi * psi with psi the normalized exp(-1 / (1 - 16 s^2)) bump on
/// [-1/4, 1/4]; phi is radial decreasing, supported in [-1/2, 1/2] and has
/// unit mass.
double phi(double x);

/// phi_hat(t) = psi_hat(t)^2 >= 0.
double phi_hat(double t);

double psi(double s);

}  // namespace mollifier

}  // namespace hilbert_et
