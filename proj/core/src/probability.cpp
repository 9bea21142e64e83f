#include "hypertrees/probability.hpp"

#include <utility>

#include "hypertrees/errors.hpp"

namespace hypertrees {

RootDistribution::RootDistribution(SchlafliSymbol pq, std::size_t level, DistributionKind kind,
                                   std::vector<QuadraticNumber> masses)
    : symbol_(pq), level_(level), kind_(kind), masses_(std::move(masses)) {
  if (masses_.size() != level_ + 1) {
    throw PreconditionError("a level-" + std::to_string(level_) + " distribution needs " +
                            std::to_string(level_ + 1) + " masses");
  }
}

const QuadraticNumber& RootDistribution::point_mass(std::size_t j) const {
  if (j > level_) throw PreconditionError("root level j exceeds vertex level i");
  return masses_[j];
}

QuadraticNumber RootDistribution::cumulative_below(std::size_t j) const {
  if (j > level_) throw PreconditionError("root level j exceeds vertex level i");
  QuadraticNumber sum;
  for (std::size_t m = 0; m <= j; ++m) sum += masses_[m];
  return sum;
}

QuadraticNumber RootDistribution::total() const { return cumulative_below(level_); }

RootDistribution asymptotic_distribution(const SpectralConstants& consts, std::size_t i) {
  if (i < 1) throw PreconditionError("the root-level distribution needs i >= 1");
  const QuadraticNumber one(1L);
  const QuadraticNumber not_root = one - consts.K;
  const QuadraticNumber stay = one - consts.M;

  std::vector<QuadraticNumber> masses(i + 1);
  masses[i] = consts.K;
  // Walk down from j = i-1, carrying (1-K)(1-M)^(i-j-1).
  QuadraticNumber below = not_root;
  for (std::size_t j = i - 1; j >= 1; --j) {
    masses[j] = below * consts.M;
    below *= stay;
  }
  masses[0] = below;
  return RootDistribution(consts.symbol, i, DistributionKind::Asymptotic, std::move(masses));
}

RootDistribution exact_distribution(const SchlafliSymbol& pq, std::size_t i,
                                    std::span<const LayerCounts> counts) {
  if (pq.q() == 3) {
    throw DegenerateSymbol(pq.to_string() + ": q = 3 leaves no fan-out between layers");
  }
  require_tree_symbol(pq);
  if (i < 1) throw PreconditionError("the root-level distribution needs i >= 1");
  if (counts.size() < i + 1) {
    throw PreconditionError("layer counts cover " + std::to_string(counts.size()) +
                            " levels, need " + std::to_string(i + 1));
  }
  const long q = pq.q();
  const mpz_class total = counts[i].total();

  // Descendants on layer i of one vertex on layer j: q-2 children for a
  // root, then q-3 per generation.
  std::vector<mpz_class> numerators(i + 1);
  numerators[i] = counts[i].b;
  mpz_class spread = 1;  // (q-3)^(i-j-1)
  for (std::size_t j = i - 1; j >= 1; --j) {
    numerators[j] = counts[j].b * (q - 2) * spread;
    spread *= q - 3;
  }
  numerators[0] = q * spread;

  std::vector<QuadraticNumber> masses;
  masses.reserve(i + 1);
  for (auto& n : numerators) {
    mpq_class m(n, total);
    m.canonicalize();
    masses.emplace_back(std::move(m));
  }
  return RootDistribution(pq, i, DistributionKind::Exact, std::move(masses));
}

ErrorReport distribution_error_report(const RootDistribution& asymptotic,
                                      const RootDistribution& exact) {
  if (asymptotic.kind() != DistributionKind::Asymptotic || exact.kind() != DistributionKind::Exact) {
    throw PreconditionError("error report compares an asymptotic with an exact distribution");
  }
  if (!(asymptotic.symbol() == exact.symbol()) || asymptotic.level() != exact.level()) {
    throw PreconditionError("distributions differ in symbol or level: " +
                            asymptotic.symbol().to_string() + " i=" +
                            std::to_string(asymptotic.level()) + " vs " +
                            exact.symbol().to_string() + " i=" + std::to_string(exact.level()));
  }
  ErrorReport report{asymptotic.symbol(), asymptotic.level(), {}};
  for (std::size_t j = 0; j <= asymptotic.level(); ++j) {
    ErrorRow row{j, asymptotic.point_mass(j), exact.point_mass(j), {}, 0};
    row.abs_error = (row.asymptotic - row.exact).abs();
    row.order = row.abs_error.sign() == 0 ? 0 : decimal_order(row.abs_error);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace hypertrees
