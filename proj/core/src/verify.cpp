#include "hypertrees/verify.hpp"

#include <algorithm>
#include <future>

#include "hypertrees/forest.hpp"
#include "hypertrees/probability.hpp"
#include "hypertrees/recurrence.hpp"

namespace hypertrees {

bool SymbolReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string level_mismatch(std::size_t i, const mpz_class& got, const mpz_class& want) {
  return "level " + std::to_string(i) + ": " + got.get_str() + " != " + want.get_str();
}

mpz_class to_mpz(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

CheckResult check_closed_form(const SchlafliSymbol& pq, std::size_t levels) {
  CheckResult r{"closed-form", true, ""};
  const auto counts = layer_counts(pq, levels);
  if (pq.is_euclidean()) {
    r.name = "euclidean-formula";
    for (std::size_t i = 1; i <= levels && r.passed; ++i) {
      if (!(euclidean_counts(i) == counts[i])) {
        r.passed = false;
        r.detail = "level " + std::to_string(i) + " differs from a = 8i-4, b = 4";
      }
    }
  } else {
    const auto consts = spectral_constants(pq);
    for (std::size_t i = 1; i <= levels && r.passed; ++i) {
      for (Sequence s : {Sequence::A, Sequence::B, Sequence::AB}) {
        const mpz_class want = s == Sequence::A ? counts[i].a : s == Sequence::B ? counts[i].b : counts[i].total();
        const mpz_class got = closed_form_count(consts, i, s);
        if (got != want) {
          r.passed = false;
          r.detail = to_string(s) + " " + level_mismatch(i, got, want);
          break;
        }
      }
    }
  }
  if (r.passed) r.detail = "levels 1.." + std::to_string(levels);
  return r;
}

}  // namespace

SymbolReport verify_symbol(const SchlafliSymbol& pq, const VerifyOptions& options) {
  SymbolReport report{pq, options.levels, {}};
  const auto counts = layer_counts(pq, options.levels);
  const Mosaic mosaic = build(pq, options.levels, BuildOptions{options.vertex_cap});

  {
    const auto v = validate(mosaic);
    CheckResult r{"mosaic-valid", v.ok(), std::to_string(v.checks_run) + " checks"};
    if (!v.ok()) r.detail = v.issues.front().check + " at " + v.issues.front().element + ": " + v.issues.front().message;
    report.checks.push_back(std::move(r));
  }

  {
    CheckResult r{"layer-sizes", true, ""};
    const auto sizes = mosaic.layer_sizes();
    for (std::size_t i = 0; i <= options.levels && r.passed; ++i) {
      if (to_mpz(sizes[i]) != counts[i].total()) {
        r.passed = false;
        r.detail = level_mismatch(i, to_mpz(sizes[i]), counts[i].total());
      }
    }
    if (r.passed) r.detail = "total " + std::to_string(mosaic.vertex_count()) + " vertices";
    report.checks.push_back(std::move(r));
  }

  Forest forest = grow(mosaic, options.levels);
  if (options.inject_fault) {
    for (VertexId v : forest.layer(options.levels)) {
      if (forest.class_of(v) == VertexClass::A) {
        forest.reclassify_as_root(v);
        break;
      }
    }
  }

  {
    CheckResult r{"forest-counts", true, "a_i, b_i match the recursion"};
    for (std::size_t i = 0; i <= options.levels && r.passed; ++i) {
      const auto c = hypertrees::counts(forest, i);
      if (to_mpz(c.a) != counts[i].a) {
        r = {"forest-counts", false, "a " + level_mismatch(i, to_mpz(c.a), counts[i].a)};
      } else if (to_mpz(c.b) != counts[i].b) {
        r = {"forest-counts", false, "b " + level_mismatch(i, to_mpz(c.b), counts[i].b)};
      }
    }
    report.checks.push_back(std::move(r));
  }

  report.checks.push_back(check_closed_form(pq, options.closed_form_levels));

  {
    CheckResult r{"histogram", true, "root-level histograms equal the exact distribution"};
    for (std::size_t i = 1; i <= options.levels && r.passed; ++i) {
      const auto hist = root_level_histogram(forest, i);
      const auto exact = exact_distribution(pq, i, counts);
      const mpz_class total = counts[i].total();
      for (std::size_t j = 0; j <= i; ++j) {
        mpq_class empirical(to_mpz(hist[j]), total);
        empirical.canonicalize();
        if (!(QuadraticNumber(empirical) == exact.point_mass(j))) {
          r = {"histogram", false,
               "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": " + to_string(empirical) +
                   " != " + exact.point_mass(j).to_string()};
          break;
        }
      }
    }
    report.checks.push_back(std::move(r));
  }

  {
    const auto issues = check_structure(forest, mosaic);
    CheckResult r{"structure", issues.empty(), "fan-out, no leaves, forced parents, s_i"};
    if (!issues.empty()) {
      r.detail = issues.front().law + " at vertex " + std::to_string(issues.front().vertex) + ": " +
                 issues.front().message;
    }
    report.checks.push_back(std::move(r));
  }
  return report;
}

std::vector<SymbolReport> verify_symbols(std::span<const SchlafliSymbol> symbols,
                                         const VerifyOptions& options) {
  std::vector<std::future<SymbolReport>> pending;
  pending.reserve(symbols.size());
  for (const auto& pq : symbols) {
    pending.push_back(std::async(std::launch::async, [pq, options] { return verify_symbol(pq, options); }));
  }
  std::vector<SymbolReport> out;
  out.reserve(symbols.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::vector<SchlafliSymbol> default_verify_symbols() {
  return {{4, 5}, {5, 4}, {4, 6}, {6, 4}, {5, 5}, {4, 4}};
}

}  // namespace hypertrees
