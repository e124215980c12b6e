#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in-process.
//
// Exit codes: 0 success, 2 input errors, 3 budget exceeded, 1 internal
// contradiction (a proven property failed).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypalg/approx.hpp"
#include "hypalg/arrangements.hpp"
#include "hypalg/core_sets.hpp"
#include "hypalg/error.hpp"
#include "hypalg/generators.hpp"
#include "hypalg/hilbert.hpp"
#include "hypalg/io.hpp"
#include "hypalg/matchings.hpp"

namespace hypalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

/// HYPALG_BUDGET: comma-separated key=value overrides, keys
/// n, m, profile, oracle, columns, family.
inline Budget budget_from_env(const char* value) {
  Budget b;
  if (value == nullptr || *value == '\0') return b;
  std::istringstream in(value);
  std::string item;
  const std::map<std::string, int Budget::*> keys{
      {"n", &Budget::max_dimension},        {"m", &Budget::max_hyperplanes},
      {"profile", &Budget::max_profile_hyperplanes}, {"oracle", &Budget::oracle_log2},
      {"columns", &Budget::column_log2},    {"family", &Budget::max_family_search}};
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("HYPALG_BUDGET entry '" + item + "' lacks '='");
    const auto key = io::trim(item.substr(0, eq));
    const auto it = keys.find(key);
    if (it == keys.end()) throw DomainError("unknown HYPALG_BUDGET key '" + key + "'");
    int v = 0;
    try {
      v = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw DomainError("HYPALG_BUDGET value for '" + key + "' is not an integer");
    }
    if (v < 0 || v > 62) throw DomainError("HYPALG_BUDGET value for '" + key + "' out of range");
    b.*(it->second) = v;
  }
  return b;
}

namespace detail {

struct Options {
  std::string set_path;
  std::string arrangement_path;
  std::string family_path;
  std::string phi_path;
  std::string truth_table;
  std::string truth_table_file;
  std::vector<std::string> fields{"2"};
  std::string format = "tsv";
  std::optional<int> degree;
  bool all_d = false;
  std::optional<int> coordinate;
  int deg_p = 0;
  int m = 0;
  int k = 0;
  int n = 0;
  bool odd = false;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

inline std::vector<FieldSpec> parse_fields(const std::vector<std::string>& raw) {
  std::vector<FieldSpec> out;
  for (const auto& f : raw) out.push_back(FieldSpec::parse(f));
  return out;
}

inline PointSet load_set(const Options& o, const Budget& budget) {
  auto c = io::parse_point_set(io::read_file(o.set_path));
  if (c.dimension() > budget.max_dimension) {
    throw BudgetExceeded("point set dimension n=" + std::to_string(c.dimension()) +
                         " exceeds budget " + std::to_string(budget.max_dimension));
  }
  return c;
}

inline BooleanFunction load_function(const Options& o, const Budget& budget) {
  if (!o.truth_table.empty()) return BooleanFunction::parse(io::trim(o.truth_table));
  if (!o.truth_table_file.empty()) {
    return BooleanFunction::parse(io::trim(io::read_file(o.truth_table_file)));
  }
  if (!o.set_path.empty()) return BooleanFunction::indicator(load_set(o, budget));
  throw DomainError("give --truth-table, --truth-table-file or --set");
}

inline SetFamily load_family(const Options& o) {
  const std::string text = io::read_file(o.family_path);
  const std::string body = io::trim(text);
  if (!body.empty() && (body.front() == '[' || body.front() == '{')) {
    const auto j = io::parse_json(body);
    if (j.is_object() && j.contains("points")) return as_family(io::point_set_from_json(j));
    return io::family_from_json(j);
  }
  return as_family(io::parse_point_set(text));
}

inline void print_json(std::ostream& out, const io::Json& j) { out << j.dump(2) << '\n'; }

inline void cmd_hilbert(const Options& o, const Budget& budget, std::ostream& out) {
  const auto c = load_set(o, budget);
  const auto fields = parse_fields(o.fields);
  std::vector<int> degrees;
  if (o.degree && !o.all_d) {
    if (*o.degree < 0 || *o.degree > c.dimension()) throw DomainError("--d outside [0, n]");
    degrees.push_back(*o.degree);
  } else {
    for (int d = 0; d <= c.dimension(); ++d) degrees.push_back(d);
  }
  if (c.empty()) throw DomainError("the Hilbert function needs a nonempty point set");
  const auto str = shattered_family(c);
  const auto sstr = strongly_shattered_family(c);
  const auto shifted = full_shift(c);
  std::vector<std::vector<std::size_t>> series;
  for (const auto& f : fields) series.push_back(hilbert_series(c, f, budget));
  if (o.format == "json") {
    io::Json rows = io::Json::array();
    for (int d : degrees) {
      io::Json h = io::Json::object();
      for (std::size_t i = 0; i < fields.size(); ++i) {
        h[fields[i].name()] = series[i][static_cast<std::size_t>(d)];
      }
      rows.push_back({{"d", d},
                      {"lower_sstr", sstr.count_up_to(d)},
                      {"lower_shift", shifted.count_up_to(d)},
                      {"h", h},
                      {"upper_str", str.count_up_to(d)}});
    }
    print_json(out, {{"n", c.dimension()}, {"size", c.size()}, {"rows", rows}});
    return;
  }
  out << "d\tlower_sstr\tlower_shift";
  for (const auto& f : fields) out << "\th_d[" << f.name() << "]";
  out << "\tupper_str\n";
  for (int d : degrees) {
    out << d << '\t' << sstr.count_up_to(d) << '\t' << shifted.count_up_to(d);
    for (const auto& s : series) out << '\t' << s[static_cast<std::size_t>(d)];
    out << '\t' << str.count_up_to(d) << '\n';
  }
}

inline void cmd_intdeg(const Options& o, const Budget& budget, std::ostream& out) {
  const auto c = load_set(o, budget);
  if (c.empty()) throw DomainError("interpolation degree needs a nonempty point set");
  const auto fields = parse_fields(o.fields);
  const int lower_sstr = strongly_shattered_family(c).max_member_size();
  const int lower_shift = full_shift(c).max_member_size();
  const int vc = vc_dimension(c);
  std::vector<int> degrees;
  for (const auto& f : fields) degrees.push_back(interpolation_degree(c, f, budget));
  if (o.format == "json") {
    io::Json per_field = io::Json::object();
    for (std::size_t i = 0; i < fields.size(); ++i) per_field[fields[i].name()] = degrees[i];
    print_json(out, {{"intdeg", per_field},
                     {"max_sstr", lower_sstr},
                     {"max_shift", lower_shift},
                     {"vc", vc}});
    return;
  }
  out << "field\tintdeg\tmax_sstr\tmax_shift\tvc\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out << fields[i].name() << '\t' << degrees[i] << '\t' << lower_sstr << '\t' << lower_shift
        << '\t' << vc << '\n';
  }
}

inline void cmd_shatter(const Options& o, const Budget& budget, std::ostream& out) {
  const auto c = load_set(o, budget);
  const auto str = shattered_family(c);
  const auto sstr = strongly_shattered_family(c);
  const io::Json vc = c.empty() ? io::Json(nullptr) : io::Json(str.max_member_size());
  if (o.format == "json") {
    print_json(out, {{"str", io::family_to_json(str)},
                     {"sstr", io::family_to_json(sstr)},
                     {"vc", vc}});
    return;
  }
  out << "str\t" << io::family_to_json(str).dump() << '\n';
  out << "sstr\t" << io::family_to_json(sstr).dump() << '\n';
  out << "vc\t" << (c.empty() ? std::string("undefined") : vc.dump()) << '\n';
}

inline void cmd_shift(const Options& o, const Budget& budget, std::ostream& out) {
  const auto c = load_set(o, budget);
  const PointSet shifted =
      o.coordinate ? down_shift(c, *o.coordinate) : as_point_set(full_shift(c));
  const PointSet result(c.dimension(), {shifted.begin(), shifted.end()});
  if (o.format == "json") {
    print_json(out, io::point_set_to_json(result));
    return;
  }
  out << io::format_point_set(result);
}

inline void cmd_sandwich(const Options& o, const Budget& budget, std::ostream& out) {
  const auto c = load_set(o, budget);
  const auto sstr = strongly_shattered_family(c).size();
  const auto str = shattered_family(c).size();
  if (sstr > c.size() || c.size() > str) {
    throw InternalError("sandwich inequality violated");
  }
  if (o.format == "json") {
    print_json(out, {{"sstr", sstr}, {"size", c.size()}, {"str", str}});
    return;
  }
  out << "sstr\tsize\tstr\n" << sstr << '\t' << c.size() << '\t' << str << '\n';
}

inline void cmd_arrangement_cells(const Options& o, const Budget& budget, std::ostream& out) {
  const auto h = io::parse_arrangement(io::read_file(o.arrangement_path));
  const auto cells = enumerate_cells(h, budget, o.jobs);
  if (o.format == "json") {
    io::Json list = io::Json::array();
    for (const auto& s : cells.feasible) list.push_back(s.to_string());
    print_json(out, {{"m", h.size()}, {"k", h.dimension()}, {"cells", list}});
    return;
  }
  out << io::format_cells(cells);
}

inline void cmd_arrangement_profile(const Options& o, const Budget& budget, std::ostream& out) {
  const auto h = io::parse_arrangement(io::read_file(o.arrangement_path));
  const auto profile = cell_shattering_profile(h, budget, o.jobs);
  const auto expected = SetFamily::up_to_size(static_cast<int>(h.size()), h.dimension());
  const bool matches = profile.shattered.same_members(expected) &&
                       profile.strongly_shattered.same_members(expected);
  if (o.format == "json") {
    print_json(out, {{"general_position", true},
                     {"str", io::family_to_json(profile.shattered)},
                     {"sstr", io::family_to_json(profile.strongly_shattered)},
                     {"equals_up_to_k", matches}});
    return;
  }
  out << "general_position\ttrue\n";
  out << "str\t" << io::family_to_json(profile.shattered).dump() << '\n';
  out << "sstr\t" << io::family_to_json(profile.strongly_shattered).dump() << '\n';
  out << "equals_up_to_k\t" << (matches ? "true" : "false") << '\n';
}

inline void cmd_smolensky(const Options& o, const Budget& budget, std::ostream& out) {
  const auto f = load_function(o, budget);
  const auto fields = parse_fields(o.fields);
  const int n = f.dimension();
  const std::optional<CorollaryBound> corollary =
      n % 2 == 1 ? std::optional<CorollaryBound>(corollary_bound(n, o.deg_p)) : std::nullopt;
  std::vector<SmolenskyBound> bounds;
  for (const auto& field : fields) bounds.push_back(smolensky_bound(f, o.deg_p, field, budget));
  if (o.format == "json") {
    io::Json rows = io::Json::array();
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const auto& b = bounds[i];
      rows.push_back({{"field", fields[i].name()},
                      {"deg_p", o.deg_p},
                      {"d", b.degree_bound},
                      {"h_d", b.hilbert},
                      {"support", b.support},
                      {"bound", io::format_rational(b.value)},
                      {"vacuous", b.vacuous},
                      {"corollary", corollary ? io::Json(corollary->to_string()) : io::Json(nullptr)}});
    }
    print_json(out, rows);
    return;
  }
  out << "field\tdeg_p\td\th_d\tsupport\tbound\tvacuous\tcorollary\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto& b = bounds[i];
    out << fields[i].name() << '\t' << o.deg_p << '\t' << b.degree_bound << '\t' << b.hilbert << '\t'
        << b.support << '\t' << io::format_rational(b.value) << '\t'
        << (b.vacuous ? "true" : "false") << '\t' << (corollary ? corollary->to_string() : "-")
        << '\n';
  }
}

inline void cmd_approx_oracle(const Options& o, const Budget& budget, std::ostream& out) {
  const auto f = load_function(o, budget);
  if (!o.degree) throw DomainError("--d is required");
  const int d = *o.degree;
  const auto best = best_approx_disagreement(f, d, budget, o.jobs);
  const Rational fraction(static_cast<long long>(best.disagreements),
                          static_cast<long long>(std::size_t{1} << f.dimension()));
  const auto bound = smolensky_bound(f, d, FieldSpec::gf2(), budget);
  const bool dominated = fraction >= bound.value;
  if (!dominated) throw InternalError("oracle disagreement below the Hilbert-function bound");
  std::string poly;
  for (Subset s : best.best_support) poly += (poly.empty() ? "" : "+") + Monomial{s}.to_string();
  if (poly.empty()) poly = "0";
  if (o.format == "json") {
    print_json(out, {{"d", d},
                     {"disagreements", best.disagreements},
                     {"fraction", io::format_rational(fraction)},
                     {"smolensky_gf2", io::format_rational(bound.value)},
                     {"best_polynomial", poly}});
    return;
  }
  out << "d\tdisagreements\tfraction\tsmolensky_gf2\tbest_polynomial\n";
  out << d << '\t' << best.disagreements << '\t' << io::format_rational(fraction) << '\t'
      << io::format_rational(bound.value) << '\t' << poly << '\n';
}

inline void print_bijection(const Bijection& pi, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    print_json(out, io::bijection_to_json(pi));
    return;
  }
  for (const auto& [a, b] : pi.pairs()) {
    out << io::format_subset(a) << '\t' << io::format_subset(b) << '\n';
  }
}

inline void cmd_bijection(const Options& o, std::ostream& out) {
  const auto d = load_family(o);
  const auto im = io::intersection_map_from_json(d, io::parse_json(io::read_file(o.phi_path)));
  print_bijection(prescribed_bijection(im), o, out);
}

inline void cmd_pseudo_complement(const Options& o, std::ostream& out) {
  const auto d = load_family(o);
  if (!is_downward_closed(d)) throw DomainError("family is not downward-closed");
  print_bijection(pseudo_complement(d), o, out);
}

inline void cmd_gen_arrangement(const Options& o, std::ostream& out) {
  print_json(out, io::arrangement_to_json(random_general_arrangement(o.m, o.k, o.seed)));
}

inline void cmd_gen_parity(const Options& o, std::ostream& out) {
  const auto p = parity_set(o.n, o.odd);
  if (o.format == "json") {
    print_json(out, io::point_set_to_json(p));
    return;
  }
  out << io::format_point_set(p);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const char* budget_env = std::getenv("HYPALG_BUDGET")) {
  detail::Options o;
  CLI::App app{"Hilbert functions, shattering, hyperplane arrangements and prescribed "
               "intersections on the boolean cube"};
  app.name("hypalg");
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
  };
  auto add_fields = [&](CLI::App* sub) {
    sub->add_option("--field", o.fields, "prime p or Q (repeatable)");
  };
  auto add_set = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--set", o.set_path, "point set file (text or JSON)");
    if (required) opt->required();
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1U, 256U));
  };
  auto add_function = [&](CLI::App* sub) {
    sub->add_option("--truth-table", o.truth_table, "2^n characters of 0/1");
    sub->add_option("--truth-table-file", o.truth_table_file, "file holding a truth table");
    add_set(sub, false);
  };

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table with its bounds");
  add_set(hilbert, true);
  add_fields(hilbert);
  hilbert->add_option("--d", o.degree, "single degree");
  hilbert->add_flag("--all-d", o.all_d, "every degree 0..n (default)");
  add_format(hilbert);

  auto* intdeg = app.add_subcommand("intdeg", "interpolation degree and its bounds");
  add_set(intdeg, true);
  add_fields(intdeg);
  add_format(intdeg);

  auto* shatter = app.add_subcommand("shatter", "shattered and strongly shattered families");
  add_set(shatter, true);
  add_format(shatter);

  auto* shift = app.add_subcommand("shift", "down-shift (one coordinate, or all in order)");
  add_set(shift, true);
  shift->add_option("--coordinate", o.coordinate, "single coordinate i to shift");
  add_format(shift);

  auto* sandwich = app.add_subcommand("sandwich", "|sstr(C)|, |C|, |str(C)|");
  add_set(sandwich, true);
  add_format(sandwich);

  auto* cells = app.add_subcommand("arrangement-cells", "feasible sign vectors");
  cells->add_option("--arrangement", o.arrangement_path, "arrangement JSON")->required();
  add_jobs(cells);
  add_format(cells);

  auto* profile = app.add_subcommand("arrangement-profile", "str and sstr of the cell set");
  profile->add_option("--arrangement", o.arrangement_path, "arrangement JSON")->required();
  add_jobs(profile);
  add_format(profile);

  auto* smolensky = app.add_subcommand("smolensky", "Hilbert-function approximation bound");
  add_function(smolensky);
  smolensky->add_option("--deg", o.deg_p, "degree of the approximating polynomial")->required();
  add_fields(smolensky);
  add_format(smolensky);

  auto* oracle = app.add_subcommand("approx-oracle", "exhaustive best GF(2) approximation");
  add_function(oracle);
  oracle->add_option("--d", o.degree, "polynomial degree bound")->required();
  add_jobs(oracle);
  add_format(oracle);

  auto* bijection = app.add_subcommand("bijection", "prescribed-intersection bijection");
  bijection->add_option("--family", o.family_path, "downward-closed family")->required();
  bijection->add_option("--phi", o.phi_path, "phi as JSON")->required();
  add_format(bijection);

  auto* pseudo = app.add_subcommand("pseudo-complement", "bijection with a ∩ pi(a) = ∅");
  pseudo->add_option("--family", o.family_path, "downward-closed family")->required();
  add_format(pseudo);

  auto* gen_arr = app.add_subcommand("gen-arrangement", "seeded Vandermonde arrangement (JSON)");
  gen_arr->add_option("--m", o.m, "hyperplanes")->required();
  gen_arr->add_option("--k", o.k, "dimension")->required();
  gen_arr->add_option("--seed", o.seed, "seed");

  auto* gen_parity = app.add_subcommand("gen-parity", "even-weight (or odd) points of {0,1}^n");
  gen_parity->add_option("--n", o.n, "dimension")->required();
  gen_parity->add_flag("--odd", o.odd, "odd-weight points instead");
  add_format(gen_parity);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    const Budget budget = budget_from_env(budget_env);
    if (*hilbert) detail::cmd_hilbert(o, budget, out);
    else if (*intdeg) detail::cmd_intdeg(o, budget, out);
    else if (*shatter) detail::cmd_shatter(o, budget, out);
    else if (*shift) detail::cmd_shift(o, budget, out);
    else if (*sandwich) detail::cmd_sandwich(o, budget, out);
    else if (*cells) detail::cmd_arrangement_cells(o, budget, out);
    else if (*profile) detail::cmd_arrangement_profile(o, budget, out);
    else if (*smolensky) detail::cmd_smolensky(o, budget, out);
    else if (*oracle) detail::cmd_approx_oracle(o, budget, out);
    else if (*bijection) detail::cmd_bijection(o, out);
    else if (*pseudo) detail::cmd_pseudo_complement(o, out);
    else if (*gen_arr) detail::cmd_gen_arrangement(o, out);
    else if (*gen_parity) detail::cmd_gen_parity(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace hypalg::cli
