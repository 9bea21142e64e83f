#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hypertrees/quadratic.hpp"
#include "hypertrees/recurrence.hpp"
#include "hypertrees/schlafli.hpp"

namespace hypertrees {

enum class DistributionKind { Asymptotic, Exact };

/// Distribution of the level of the tree root for a vertex drawn uniformly
/// from layer i. Masses are exact: rationals for the Exact kind, elements of
/// Q(sqrt(c^2-4)) for the Asymptotic kind.
class RootDistribution {
 public:
  RootDistribution(SchlafliSymbol pq, std::size_t level, DistributionKind kind,
                   std::vector<QuadraticNumber> masses);

  const SchlafliSymbol& symbol() const noexcept { return symbol_; }
  std::size_t level() const noexcept { return level_; }
  DistributionKind kind() const noexcept { return kind_; }

  /// p_{i,j}, 0 <= j <= i.
  const QuadraticNumber& point_mass(std::size_t j) const;
  /// p_{i,-j}: root on level j or below.
  QuadraticNumber cumulative_below(std::size_t j) const;
  QuadraticNumber total() const;

  std::span<const QuadraticNumber> masses() const noexcept { return masses_; }

 private:
  SchlafliSymbol symbol_;
  std::size_t level_;
  DistributionKind kind_;
  std::vector<QuadraticNumber> masses_;
};

/// Limit model for large i: mass K at j = i, (1-K) M (1-M)^(i-j-1) for
/// 0 < j < i, and (1-K)(1-M)^(i-1) at j = 0. Hyperbolic symbols only.
RootDistribution asymptotic_distribution(const SpectralConstants& consts, std::size_t i);

/// Exact distribution from the forced fan-outs (main root q children, other
/// roots q-2, non-roots q-3). `counts` must cover levels 0..i.
RootDistribution exact_distribution(const SchlafliSymbol& pq, std::size_t i,
                                    std::span<const LayerCounts> counts);

struct ErrorRow {
  std::size_t j;
  QuadraticNumber asymptotic;
  QuadraticNumber exact;
  QuadraticNumber abs_error;
  /// floor(log10(abs_error)); meaningless when abs_error is zero.
  int order;
};

struct ErrorReport {
  SchlafliSymbol symbol;
  std::size_t level;
  std::vector<ErrorRow> rows;  // j = 0..level

  const ErrorRow& at(std::size_t j) const { return rows.at(j); }
  int main_root_order() const { return rows.front().order; }
};

ErrorReport distribution_error_report(const RootDistribution& asymptotic,
                                      const RootDistribution& exact);

}  // namespace hypertrees
