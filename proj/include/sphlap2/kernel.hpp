#pragma once

#include <optional>

#include "sphlap2/radial.hpp"

namespace sphlap2 {

/// Radial smoothing kernel together with its spatial interaction function
/// K2 = IFT[|FT K|^2] and the first four radial derivatives of K2.
///
/// Implementations must supply the K2 derivatives analytically; nothing here
/// differentiates numerically. The r -> 0 limits of Lap K2 and Lap^2 K2 are
/// optional; without them the generic precision function cannot be
/// evaluated at r = 0.
class SmoothingKernel {
 public:
  virtual ~SmoothingKernel() = default;

  [[nodiscard]] virtual int dimension() const noexcept = 0;
  [[nodiscard]] virtual double value(double r) const = 0;
  [[nodiscard]] virtual double ft(double knorm) const = 0;
  [[nodiscard]] virtual double k2(double r) const = 0;
  [[nodiscard]] virtual RadialDerivatives k2_derivatives(double r) const = 0;

  [[nodiscard]] virtual std::optional<double> k2_laplacian_at_zero() const { return std::nullopt; }
  [[nodiscard]] virtual std::optional<double> k2_bilaplacian_at_zero() const { return std::nullopt; }

  /// Exponent p of the algebraic envelope |FT K(k)| ~ k^p for large k;
  /// -infinity for faster-than-algebraic decay.
  [[nodiscard]] virtual double ft_tail_exponent() const noexcept = 0;
};

/// The squared exponential kernel (h sqrt(pi))^-d exp(-r^2/h^2).
class GaussianKernel final : public SmoothingKernel {
 public:
  /// Throws NonPositiveBandwidth unless h > 0 (finite), and
  /// UnsupportedDimension unless d is 1, 2 or 3.
  GaussianKernel(double h, int d);

  [[nodiscard]] double bandwidth() const noexcept { return h_; }
  [[nodiscard]] int dimension() const noexcept override { return d_; }

  [[nodiscard]] double value(double r) const override;
  /// exp(-k^2 h^2 / 4); dimension-independent.
  [[nodiscard]] double ft(double knorm) const override;
  /// (h sqrt(2 pi))^-d exp(-r^2 / 2h^2), i.e. the kernel at bandwidth sqrt(2) h.
  [[nodiscard]] double k2(double r) const override;
  [[nodiscard]] RadialDerivatives k2_derivatives(double r) const override;
  [[nodiscard]] std::optional<double> k2_laplacian_at_zero() const override;
  [[nodiscard]] std::optional<double> k2_bilaplacian_at_zero() const override;
  [[nodiscard]] double ft_tail_exponent() const noexcept override;

  /// Normalization (h sqrt(2 pi))^-d of K2.
  [[nodiscard]] double k2_prefactor() const noexcept { return k2_prefactor_; }

  friend bool operator==(const GaussianKernel& a, const GaussianKernel& b) noexcept {
    return a.h_ == b.h_ && a.d_ == b.d_;
  }

 private:
  double h_;
  int d_;
  double prefactor_;
  double k2_prefactor_;
};

/// True iff an FT tail decaying like k^tail_exponent is strictly faster than
/// k^-(d+4)/2, the decay needed for a finite precision operator.
bool decay_condition_ok(double tail_exponent, int d) noexcept;

}  // namespace sphlap2
