// residx: command-line front end over the C API.
//
//   residx count     --g 2 --t 1 --x 1000000
//   residx heuristic --g -4 --t 2 --x 100000
//   residx density   --g 2 --t 1 --tol 1e-6
//   residx verify    --max-n 200
//   residx report    --g 2,3,-4 --t 1,2,3 --x 1000000 --format csv
//
// Exit codes: 0 success, 2 bad input, 3 a verified identity failed,
// 1 anything else.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "residx/residx.h"

namespace {

struct Failure {
  residx_status status;
  std::string message;
};

void check(residx_status s) {
  if (s != RESIDX_OK) throw Failure{s, residx_last_error()};
}

int exit_code_for(residx_status s) {
  switch (s) {
    case RESIDX_ERR_PARSE:
    case RESIDX_ERR_EXCLUDED_BASE:
    case RESIDX_ERR_BOUND:
    case RESIDX_ERR_DOMAIN:
    case RESIDX_ERR_CAPABILITY:
    case RESIDX_ERR_INVALID_ARGUMENT:
      return 2;
    case RESIDX_ERR_INVARIANT:
      return 3;
    default:
      return 1;
  }
}

using TablePtr = std::unique_ptr<residx_table, decltype(&residx_table_destroy)>;
using BasePtr = std::unique_ptr<residx_base, decltype(&residx_base_destroy)>;

TablePtr make_table(uint64_t limit) {
  residx_table* t = nullptr;
  check(residx_table_create(limit < 2 ? 2 : limit, &t));
  return {t, &residx_table_destroy};
}

BasePtr make_base(const std::string& text) {
  residx_base* b = nullptr;
  check(residx_base_parse(text.c_str(), &b));
  return {b, &residx_base_destroy};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) out.push_back(item);
  if (out.empty()) out.push_back(s);
  return out;
}

std::vector<uint64_t> parse_t_list(const std::string& s) {
  std::vector<uint64_t> out;
  for (const auto& item : split_list(s)) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      if (item.empty() || item[0] == '-' || item[0] == '+') throw std::invalid_argument("");
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v == 0)
      throw Failure{RESIDX_ERR_DOMAIN, "t must be a positive integer, got '" + item + "'"};
    out.push_back(v);
  }
  return out;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string format_rational(const residx_rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

// A cell is printed verbatim in text and CSV; JSON keeps numbers numeric.
using Cell = std::variant<std::string, uint64_t, int64_t, double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (auto s = std::get_if<std::string>(&c)) return *s;
  if (auto u = std::get_if<uint64_t>(&c)) return std::to_string(*u);
  if (auto i = std::get_if<int64_t>(&c)) return std::to_string(*i);
  return format_real(std::get<double>(c));
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (auto s = std::get_if<std::string>(&c)) return *s;
  if (auto u = std::get_if<uint64_t>(&c)) return *u;
  if (auto i = std::get_if<int64_t>(&c)) return *i;
  const double v = std::get<double>(c);
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_real(v));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void emit(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i)
        obj[t.columns[i]] = cell_json(row[i]);
      arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      os << (i ? "," : "") << csv_field(t.columns[i]);
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << csv_field(cell_text(row[i]));
      os << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], cell_text(row[i]).size());
  auto line = [&](auto get) {
    std::string s;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      const std::string v = get(i);
      if (i) s += "  ";
      s += std::string(width[i] - v.size(), ' ') + v;
    }
    os << s << "\n";
  };
  line([&](std::size_t i) { return t.columns[i]; });
  for (const auto& row : t.rows) line([&](std::size_t i) { return cell_text(row[i]); });
}

struct Options {
  std::string g;
  std::string t = "1";
  uint64_t x = 1000000;
  double tol = 1e-6;
  std::string format = "text";
  unsigned threads = 1;
  uint64_t max_n = 200;
  uint64_t max_p = 2000;
  std::string suite;
};

Table run_count(const Options& o) {
  Table out{{"g", "t", "x", "N", "R", "pi_t", "split_t"}, {}};
  const auto ts = parse_t_list(o.t);
  const auto table = make_table(o.x);
  for (const auto& gs : split_list(o.g)) {
    const auto base = make_base(gs);
    for (const uint64_t t : ts) {
      residx_counts c;
      check(residx_count(base.get(), t, o.x, table.get(), o.threads, &c));
      out.rows.push_back({residx_base_text(base.get()), t, o.x, c.N, c.R, c.pi_t,
                          c.split_t});
    }
  }
  return out;
}

Table run_heuristic(const Options& o) {
  Table out{{"g", "t", "x", "naive", "quadratic", "H", "M", "L", "Q"}, {}};
  const auto ts = parse_t_list(o.t);
  const auto table = make_table(o.x);
  for (const auto& gs : split_list(o.g)) {
    const auto base = make_base(gs);
    for (const uint64_t t : ts) {
      residx_heuristics h;
      check(residx_heuristic(base.get(), t, o.x, table.get(), o.threads, &h));
      out.rows.push_back({residx_base_text(base.get()), t, o.x, h.naive, h.quadratic,
                          format_rational(h.H), format_rational(h.M),
                          format_rational(h.L), format_rational(h.Q)});
    }
  }
  return out;
}

// Degrees of Q(zeta_kt, g^(1/kt)) for the first terms of the density sum.
constexpr uint64_t kDegreeTerms = 8;

void run_density(const Options& o, std::ostream& os) {
  const auto ts = parse_t_list(o.t);
  residx_truncated artin;
  check(residx_artin_constant(o.tol, &artin));
  Table summary{{"g", "t", "A", "A_error", "cutoff", "artin_constant", "artin_error"},
                {}};
  Table degrees{{"g", "t", "k", "m", "degree", "nu"}, {}};
  for (const auto& gs : split_list(o.g)) {
    const auto base = make_base(gs);
    const std::string name = residx_base_text(base.get());
    for (const uint64_t t : ts) {
      residx_truncated a;
      check(residx_density(base.get(), t, o.tol, &a));
      summary.rows.push_back({name, t, a.value, a.error_bound, a.cutoff, artin.value,
                              artin.error_bound});
      for (uint64_t k = 1; k <= kDegreeTerms; ++k) {
        residx_degree d;
        check(residx_kummer_degree(base.get(), k * t, &d));
        degrees.rows.push_back({name, t, k, k * t, d.degree, format_rational(d.nu)});
      }
    }
  }
  if (o.format == "json") {
    // One object per (g, t) with its degree table nested.
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    std::size_t next = 0;
    for (const auto& row : summary.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < summary.columns.size(); ++i)
        obj[summary.columns[i]] = cell_json(row[i]);
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (uint64_t k = 0; k < kDegreeTerms; ++k, ++next) {
        const auto& d = degrees.rows[next];
        list.push_back({{"k", cell_json(d[2])},
                        {"m", cell_json(d[3])},
                        {"degree", cell_json(d[4])},
                        {"nu", cell_json(d[5])}});
      }
      obj["degrees"] = std::move(list);
      arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
  } else if (o.format == "csv") {
    emit(summary, "csv", os);
  } else {
    emit(summary, "text", os);
    os << "\n";
    emit(degrees, "text", os);
  }
}

bool run_verify(const Options& o, std::ostream& os) {
  residx_verify_config cfg;
  residx_verify_config_default(&cfg);
  cfg.max_n = o.max_n;
  cfg.max_p = o.max_p;
  std::vector<std::string> names;
  if (!o.suite.empty()) {
    names.push_back(o.suite);
  } else {
    for (std::size_t i = 0; i < residx_suite_count(); ++i)
      names.push_back(residx_suite_name(i));
  }
  Table out{{"suite", "checks", "violations", "status", "first_violation", "notes"}, {}};
  bool all_ok = true;
  for (const auto& name : names) {
    residx_suite_result r;
    check(residx_verify_suite(name.c_str(), &cfg, &r));
    all_ok = all_ok && r.violations == 0;
    out.rows.push_back({name, r.checks, r.violations,
                        std::string(r.violations == 0 ? "ok" : "FAILED"),
                        std::string(r.first_violation), std::string(r.notes)});
  }
  if (o.format == "text") {
    for (const auto& row : out.rows) {
      os << cell_text(row[0]) << ": " << cell_text(row[3]) << " (" << cell_text(row[1])
         << " checks, " << cell_text(row[2]) << " violations)\n";
      if (!cell_text(row[4]).empty()) os << "  first violation: " << cell_text(row[4]) << "\n";
      if (!cell_text(row[5]).empty()) os << "  note: " << cell_text(row[5]) << "\n";
    }
  } else {
    emit(out, o.format, os);
  }
  return all_ok;
}

Table run_report(const Options& o) {
  Table out{{"g", "t", "x", "N", "R", "naive", "quadratic", "M", "A_times_Li",
             "ratio_N_over_ALi"},
            {}};
  if (o.format == "json") {
    out.columns = {"g", "t", "x", "N", "R", "pi_t", "split_t", "naive", "quadratic",
                   "M", "A", "Li", "A_times_Li", "ratio_N_over_ALi"};
  }
  const auto ts = parse_t_list(o.t);
  const auto table = make_table(o.x);
  for (const auto& gs : split_list(o.g)) {
    const auto base = make_base(gs);
    const std::string name = residx_base_text(base.get());
    for (const uint64_t t : ts) {
      residx_report r;
      check(residx_report_row(base.get(), t, o.x, table.get(), o.tol, o.threads, &r));
      if (o.format == "json") {
        out.rows.push_back({name, r.t, r.x, r.N, r.R, r.pi_t, r.split_t, r.naive,
                            r.quadratic, r.M, r.A, r.Li, r.A_times_Li,
                            r.ratio_N_over_ALi});
      } else {
        out.rows.push_back({name, r.t, r.x, r.N, r.R, r.naive, r.quadratic, r.M,
                            r.A_times_Li, r.ratio_N_over_ALi});
      }
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residual index statistics of rational bases modulo primes"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_g) {
    auto* g = sub->add_option("--g", o.g, "base: [-]a or [-]a/b (comma list allowed)");
    if (needs_g) g->required();
    sub->add_option("--t", o.t, "index t >= 1 (comma list allowed)");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
  };
  // accepts 1000000 as well as 1e6
  const CLI::Validator scientific_integer(
      [](std::string& s) -> std::string {
        if (s.find_first_of("eE.") == std::string::npos) return {};
        std::size_t used = 0;
        double v = 0;
        try {
          v = std::stod(s, &used);
        } catch (const std::exception&) {
          return "not a number: " + s;
        }
        if (used != s.size() || !(v >= 0) || v > 1e18 || v != std::floor(v))
          return "not a non-negative integer: " + s;
        s = std::to_string(static_cast<uint64_t>(v));
        return {};
      },
      "INT");
  auto add_x = [&](CLI::App* sub) {
    sub->add_option("--x", o.x, "upper bound for primes")
        ->transform(scientific_integer)
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "absolute error target")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "N_{g,t}(x), R_{g,t}(x) and related counts");
  add_common(count, true);
  add_x(count);
  auto* heuristic = app.add_subcommand("heuristic", "naive and quadratic sums, H, M, L, Q");
  add_common(heuristic, true);
  add_x(heuristic);
  auto* density = app.add_subcommand("density", "field degrees, A(g,t), Artin constant");
  add_common(density, true);
  add_tol(density);
  auto* verify = app.add_subcommand("verify", "run the exhaustive verification suites");
  verify->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  verify->add_option("--max-n", o.max_n, "largest cyclic group order")
      ->transform(scientific_integer)
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-p", o.max_p, "largest prime for (Z/pZ)* checks")
      ->transform(scientific_integer)
      ->check(CLI::Range(uint64_t{2}, uint64_t{1000000000}));
  verify->add_option("--suite", o.suite, "run only this suite");
  auto* report = app.add_subcommand("report", "one CountReport row per (g, t)");
  add_common(report, true);
  add_x(report);
  add_tol(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ostringstream os;
    bool ok = true;
    if (*count) {
      emit(run_count(o), o.format, os);
    } else if (*heuristic) {
      emit(run_heuristic(o), o.format, os);
    } else if (*density) {
      run_density(o, os);
    } else if (*verify) {
      ok = run_verify(o, os);
    } else if (*report) {
      emit(run_report(o), o.format, os);
    }
    std::cout << os.str() << std::flush;
    return ok ? 0 : 3;
  } catch (const Failure& f) {
    std::cerr << "error: " << residx_status_string(f.status) << ": " << f.message << "\n";
    return exit_code_for(f.status);
  }
}
