#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "hypertrees/errors.hpp"
#include "hypertrees/forest.hpp"
#include "hypertrees/probability.hpp"
#include "hypertrees/recurrence.hpp"
#include "hypertrees/verify.hpp"
#include "json.hpp"

namespace hypertrees::cli {

namespace {

using nlohmann::json;

json rational_json(const mpq_class& r) {
  return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

json quadratic_json(const QuadraticNumber& v) {
  json j{{"x", rational_json(v.rational_part())}, {"y", rational_json(v.irrational_part())}};
  j["radicand"] = v.radicand();
  return j;
}

// One table cell: its text for markdown/csv and its value for json-lines.
struct Cell {
  std::string text;
  json value;

  Cell(std::string s) : text(s), value(std::move(s)) {}  // NOLINT
  Cell(const char* s) : Cell(std::string(s)) {}          // NOLINT
  Cell(std::size_t n) : text(std::to_string(n)), value(n) {}  // NOLINT
  Cell(int n) : text(std::to_string(n)), value(n) {}  // NOLINT
  Cell(const mpz_class& n) : text(n.get_str()), value(n.get_str()) {}  // NOLINT
  static Cell rational(const mpq_class& r) { return {to_string(r), rational_json(r)}; }
  static Cell exact(const QuadraticNumber& v) { return {v.to_string(), quadratic_json(v)}; }

 private:
  Cell(std::string t, json v) : text(std::move(t)), value(std::move(v)) {}
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

// Quoted when it holds a comma, quote or newline; quotes doubled.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

void render(const Table& t, Format format, std::ostream& out) {
  switch (format) {
    case Format::Markdown: {
      out << '|';
      for (const auto& h : t.header) out << ' ' << h << " |";
      out << "\n|";
      for (const auto& h : t.header) out << std::string(h.size() + 2, '-') << '|';
      out << '\n';
      for (const auto& row : t.rows) {
        out << '|';
        for (const auto& c : row) out << ' ' << c.text << " |";
        out << '\n';
      }
      break;
    }
    case Format::Csv: {
      for (std::size_t k = 0; k < t.header.size(); ++k) out << (k ? "," : "") << csv_field(t.header[k]);
      out << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_field(row[k].text);
        out << '\n';
      }
      break;
    }
    case Format::JsonLines: {
      for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t k = 0; k < row.size(); ++k) obj[t.header[k]] = row[k].value;
        out << obj.dump() << '\n';
      }
      break;
    }
  }
}

}  // namespace

std::size_t default_vertex_cap() {
  if (const char* env = std::getenv("HYPERTREES_VERTEX_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw PreconditionError(std::string("HYPERTREES_VERTEX_CAP is not a positive integer: ") + env);
  }
  return kDefaultVertexCap;
}

Format parse_format(const std::string& s) {
  if (s == "markdown" || s == "markdown-table" || s == "md") return Format::Markdown;
  if (s == "csv") return Format::Csv;
  if (s == "json-lines" || s == "jsonl") return Format::JsonLines;
  throw PreconditionError("unknown format '" + s + "' (markdown-table, csv, json-lines)");
}

ProbMode parse_mode(const std::string& s) {
  if (s == "asymptotic") return ProbMode::Asymptotic;
  if (s == "exact") return ProbMode::Exact;
  if (s == "both") return ProbMode::Both;
  throw PreconditionError("unknown mode '" + s + "' (asymptotic, exact, both)");
}

ExportWhat parse_what(const std::string& s) {
  if (s == "forest") return ExportWhat::Forest;
  if (s == "spanning") return ExportWhat::Spanning;
  if (s == "mosaic-edges") return ExportWhat::MosaicEdges;
  throw PreconditionError("unknown export '" + s + "' (forest, spanning, mosaic-edges)");
}

std::vector<SchlafliSymbol> parse_symbol_list(const std::string& s) {
  std::vector<SchlafliSymbol> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw PreconditionError("empty entry in symbol list '" + s + "'");
    out.push_back(parse_symbol(item));
  }
  if (out.empty() || s.back() == ',') throw PreconditionError("empty entry in symbol list '" + s + "'");
  return out;
}

int cmd_counts(const RunConfig& config, std::ostream& out) {
  const auto counts = layer_counts(config.symbol(), config.levels);
  Table t{{"i", "a_i", "b_i", "a_i+b_i"}, {}};
  for (const auto& lc : counts) t.rows.push_back({lc.level, lc.a, lc.b, lc.total()});
  render(t, config.format, out);
  return kExitOk;
}

int cmd_constants(const RunConfig& config, std::ostream& out) {
  const auto consts = spectral_constants(config.symbol(), config.precision);
  Table t{{"name", "exact", "decimal"}, {}};
  for (const auto& [name, value] : consts.named()) {
    t.rows.push_back({name, Cell::exact(value), consts.decimal(value)});
  }
  render(t, config.format, out);
  return kExitOk;
}

int cmd_probs(const RunConfig& config, std::ostream& out) {
  const SchlafliSymbol pq = config.symbol();
  const std::size_t i = config.levels;
  const int digits = config.precision;
  const auto counts = layer_counts(pq, i);

  if (config.mode == ProbMode::Exact) {
    const auto exact = exact_distribution(pq, i, counts);
    Table t{{"j", "p_exact", "p_exact_rational", "cumulative_below"}, {}};
    for (std::size_t j = i + 1; j-- > 0;) {
      const auto& m = exact.point_mass(j);
      t.rows.push_back({j, m.to_decimal(digits), Cell::rational(m.as_rational()),
                        Cell::rational(exact.cumulative_below(j).as_rational())});
    }
    render(t, config.format, out);
    return kExitOk;
  }

  const auto consts = spectral_constants(pq, digits);
  const auto asym = asymptotic_distribution(consts, i);
  if (config.mode == ProbMode::Asymptotic) {
    Table t{{"j", "p_asymptotic", "cumulative_below"}, {}};
    for (std::size_t j = i + 1; j-- > 0;) {
      t.rows.push_back({j, asym.point_mass(j).to_decimal(digits), asym.cumulative_below(j).to_decimal(digits)});
    }
    render(t, config.format, out);
    return kExitOk;
  }

  const auto exact = exact_distribution(pq, i, counts);
  const auto report = distribution_error_report(asym, exact);
  Table t{{"j", "p_asymptotic", "p_exact", "p_exact_rational", "abs_error", "error_order"}, {}};
  for (std::size_t j = i + 1; j-- > 0;) {
    const auto& row = report.at(j);
    const bool zero = row.abs_error.sign() == 0;
    t.rows.push_back({j, row.asymptotic.to_decimal(digits), row.exact.to_decimal(digits),
                      Cell::rational(row.exact.as_rational()), row.abs_error.to_decimal(digits),
                      zero ? Cell("none") : Cell(row.order)});
  }
  render(t, config.format, out);
  if (config.format == Format::Markdown) {
    out << "\nError order at j=0: 10^" << report.main_root_order() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  VerifyOptions options;
  options.levels = config.levels;
  options.vertex_cap = config.vertex_cap;
  options.inject_fault = config.inject_fault;
  const auto symbols = config.symbols.empty() ? default_verify_symbols() : config.symbols;
  const auto reports = verify_symbols(symbols, options);

  Table t{{"symbol", "check", "result", "detail"}, {}};
  bool all = true;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      t.rows.push_back({r.symbol.to_string(), c.name, c.passed ? "PASS" : "FAIL", c.detail});
      all = all && c.passed;
    }
  }
  render(t, config.format, out);
  if (config.format == Format::Markdown) {
    out << '\n' << (all ? "All checks passed" : "Verification FAILED") << " (" << symbols.size()
        << (symbols.size() == 1 ? " symbol, " : " symbols, ") << config.levels << " levels)\n";
  }
  return all ? kExitOk : kExitVerificationFailed;
}

int cmd_export(const RunConfig& config, std::ostream& out) {
  if (config.what == ExportWhat::MosaicEdges) {
    write_edge_list(build(config.symbol(), config.levels, BuildOptions{config.vertex_cap}), out);
    return kExitOk;
  }
  // a forest with levels 0 is the main root alone, but still needs a belt to grow from
  const Mosaic mosaic = build(config.symbol(), std::max<std::size_t>(config.levels, 1), BuildOptions{config.vertex_cap});
  const Forest forest = grow(mosaic, config.levels);
  if (config.what == ExportWhat::Spanning) {
    const SpanningTree tree = spanning_tree(forest, mosaic);
    out << export_dot(forest, DotOptions{"spanning_tree", &tree});
  } else {
    out << export_dot(forest);
  }
  return kExitOk;
}

int run(const std::string& command, const RunConfig& config, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>> commands{
      {"counts", cmd_counts}, {"constants", cmd_constants}, {"probs", cmd_probs},
      {"verify", cmd_verify}, {"export", cmd_export},
  };
  const auto it = commands.find(command);
  if (it == commands.end()) {
    err << "error: unknown command '" << command << "'\n";
    return kExitUsage;
  }
  std::ostringstream buffer;
  int code = kExitOk;
  try {
    code = it->second(config, buffer);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (config.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << config.out << "' for writing\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace hypertrees::cli
