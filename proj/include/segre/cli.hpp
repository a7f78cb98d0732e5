#pragma once
/*
 * Command-line front end.
 *
 *   segre segre <spec>                          Segre number report
 *   segre check <src> <dst> --degree <d>        degree-formula verdict
 *   segre family <sb|quadric|involution> --max-n <k>
 *   segre witt-bound <d>
 *   segre verify [--suite <name>]...
 *
 * Global flags: --format text|json|csv (default text), --output <path>.
 * Exit codes: 0 success, 2 usage or parse error, 3 violated formula,
 * 4 internal invariant failure.
 */

#include <CLI11.hpp>
#include <segre/output.hpp>
#include <segre/selfcheck.hpp>

#include <fstream>
#include <iostream>

namespace segre::cli {

enum class Format { text, json, csv };

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_formula_violation = 3;
constexpr int exit_invariant_failure = 4;

namespace detail {

inline Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return Format::text;
}

inline std::string index_str(const VarietyModel& m) {
  return m.index ? m.index->get_str() : "unknown";
}

inline int cmd_segre(const std::string& spec_text, Format format,
                     std::ostream& out) {
  AstPtr ast = parse_variety_spec(spec_text);
  VarietyModel model = build_model(ast);
  Int s = segre_number(model);
  Valuation v2 = s == 0 ? Valuation::infinite() : vp(s, 2);
  RingElement sq = sq_class(model);
  std::string spec = to_string(ast);

  switch (format) {
    case Format::json: {
      Json j;
      j["spec"] = spec;
      j["dim"] = model.dim;
      j["segre_number"] = json_int(s);
      j["v2"] = json_valuation(v2);
      j["index"] = model.index ? json_int(*model.index) : Json("unknown");
      j["sq_class"] = json_element(sq);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << csv_row({"spec", "dim", "segre_number", "v2", "index"});
      out << csv_row({spec, std::to_string(model.dim), s.get_str(),
                      v2.str(), index_str(model)});
      break;
    case Format::text:
      out << "spec: " << spec << '\n'
          << "dim: " << model.dim << '\n'
          << "segre_number: " << s.get_str() << '\n'
          << "v2: " << v2.str() << '\n'
          << "index: " << index_str(model) << '\n'
          << "sq_class: " << sq.str() << '\n';
      break;
  }
  return exit_ok;
}

inline int cmd_check(const std::string& src_text, const std::string& dst_text,
                     const std::string& degree_text, Format format,
                     std::ostream& out) {
  VarietyModel src = build_model(parse_variety_spec(src_text));
  VarietyModel dst = build_model(parse_variety_spec(dst_text));
  Int degree;
  try {
    degree = Int(degree_text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("check: '" + degree_text +
                                "' is not an integer degree");
  }
  FormulaVerdict v = check_degree_formula(make_morphism(src, dst, degree));

  switch (format) {
    case Format::json: {
      Json j;
      j["source"] = src.name;
      j["target"] = dst.name;
      j["degree"] = json_int(degree);
      j["applicable"] = v.applicable;
      j["holds"] = v.holds;
      if (v.applicable) {
        j["lhs_mod2"] = v.lhs_mod2;
        j["rhs_mod2"] = v.rhs_mod2;
        j["n_ratio"] = json_int(v.n_ratio);
        j["sY_over_nY"] = json_int(v.sY_over_nY);
        j["sX_over_nX"] = json_int(v.sX_over_nX);
      } else {
        j["reason"] = v.reason;
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << csv_row({"source", "target", "degree", "applicable", "holds",
                      "lhs_mod2", "rhs_mod2", "reason"});
      out << csv_row({src.name, dst.name, degree.get_str(),
                      v.applicable ? "true" : "false",
                      v.holds ? "true" : "false",
                      std::to_string(v.lhs_mod2),
                      std::to_string(v.rhs_mod2), v.reason});
      break;
    case Format::text:
      if (!v.applicable) {
        out << "inapplicable: " << v.reason << '\n';
      } else {
        out << "lhs_mod2: " << v.lhs_mod2 << '\n'
            << "rhs_mod2: " << v.rhs_mod2 << '\n'
            << "n_ratio: " << v.n_ratio.get_str() << '\n'
            << "sY_over_nY: " << v.sY_over_nY.get_str() << '\n'
            << "sX_over_nX: " << v.sX_over_nX.get_str() << '\n'
            << "holds: " << (v.holds ? "true" : "false") << '\n';
      }
      break;
  }
  return v.holds || !v.applicable ? exit_ok : exit_formula_violation;
}

inline int cmd_family(const std::string& family_name, unsigned n_max,
                      Format format, std::ostream& out) {
  Family family;
  if (family_name == "sb")
    family = Family::severi_brauer;
  else if (family_name == "quadric")
    family = Family::quadric;
  else if (family_name == "involution")
    family = Family::involution;
  else
    throw std::invalid_argument("family: unknown family '" + family_name +
                                "' (expected sb, quadric or involution)");

  auto rows = family_report(family, n_max);
  bool all_match = true;
  for (const auto& row : rows)
    all_match = all_match && row.closed_form_match && row.valuation_match;

  switch (format) {
    case Format::json: {
      Json j;
      j["family"] = family_name;
      j["rows"] = Json::array();
      for (const auto& row : rows) {
        Json r;
        r["n"] = row.n;
        r["dim"] = row.dim;
        r["segre"] = json_int(row.certificate.segre);
        r["v2_segre"] = json_valuation(row.certificate.v2_segre);
        r["v2_index"] = row.certificate.v2_index;
        r["conclusion"] = to_string(row.certificate.conclusion);
        r["closed_form"] = json_int(row.closed_form);
        r["closed_form_match"] = row.closed_form_match;
        r["valuation_match"] = row.valuation_match;
        j["rows"].push_back(std::move(r));
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
    case Format::text:
      out << csv_row({"n", "dim", "segre", "v2_segre", "v2_index",
                      "conclusion", "closed_form", "closed_form_match",
                      "valuation_match"});
      for (const auto& row : rows)
        out << csv_row({std::to_string(row.n), std::to_string(row.dim),
                        row.certificate.segre.get_str(),
                        row.certificate.v2_segre.str(),
                        std::to_string(row.certificate.v2_index),
                        to_string(row.certificate.conclusion),
                        row.closed_form.get_str(),
                        row.closed_form_match ? "true" : "false",
                        row.valuation_match ? "true" : "false"});
      break;
  }
  return all_match ? exit_ok : exit_invariant_failure;
}

inline int cmd_witt(unsigned d, Format format, std::ostream& out) {
  unsigned bound = witt_index_bound(d);
  switch (format) {
    case Format::json: {
      Json j;
      j["d"] = d;
      j["witt_index_bound"] = bound;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << csv_row({"d", "witt_index_bound"});
      out << csv_row({std::to_string(d), std::to_string(bound)});
      break;
    case Format::text:
      out << "witt_index_bound(" << d << ") = " << bound << '\n';
      break;
  }
  return exit_ok;
}

inline int cmd_verify(const std::vector<std::string>& selected, Format format,
                      std::ostream& out, std::ostream& err) {
  std::vector<const Suite*> to_run;
  if (selected.empty()) {
    for (const Suite& s : all_suites()) to_run.push_back(&s);
  } else {
    for (const std::string& name : selected) {
      const Suite* found = nullptr;
      for (const Suite& s : all_suites())
        if (s.name == name) found = &s;
      if (!found) {
        err << "error: unknown suite '" << name << "'; available:";
        for (const Suite& s : all_suites()) err << ' ' << s.name;
        err << '\n';
        return exit_usage;
      }
      to_run.push_back(found);
    }
  }

  long passed = 0, failed = 0;
  Json json_results = Json::array();
  for (const Suite* suite : to_run) {
    for (const CheckResult& r : suite->run()) {
      (r.passed ? passed : failed) += 1;
      switch (format) {
        case Format::json: {
          Json j;
          j["suite"] = suite->name;
          j["check"] = r.name;
          j["passed"] = r.passed;
          j["checks"] = r.checks;
          if (!r.passed) j["detail"] = r.detail;
          json_results.push_back(std::move(j));
          break;
        }
        case Format::csv:
          if (passed + failed == 1)
            out << csv_row({"suite", "check", "passed", "checks"});
          out << csv_row({suite->name, r.name, r.passed ? "true" : "false",
                          std::to_string(r.checks)});
          break;
        case Format::text:
          out << (r.passed ? "pass" : "FAIL") << "  [" << suite->name << "] "
              << r.name << " (" << r.checks << " checks)";
          if (!r.passed) out << "\n      " << r.detail;
          out << '\n';
          break;
      }
    }
  }
  if (format == Format::json) {
    Json summary;
    summary["results"] = std::move(json_results);
    summary["passed"] = passed;
    summary["failed"] = failed;
    out << summary.dump(2) << '\n';
  } else if (format == Format::text) {
    out << (failed == 0 ? "all checks passed" : "CHECKS FAILED") << " ("
        << passed << " passed, " << failed << " failed)\n";
  }
  return failed == 0 ? exit_ok : exit_invariant_failure;
}

}  // namespace detail

/// Runs the CLI on the given arguments (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact Segre-number engine for formal variety models",
               "segre"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::string format_name = "text";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  std::string output_path;
  app.add_option("--output", output_path, "write the report to a file");

  auto* sub_segre =
      app.add_subcommand("segre", "Segre number of a variety spec");
  std::string spec_text;
  sub_segre->add_option("spec", spec_text, "variety spec, e.g. \"P(3)\"")
      ->required();

  auto* sub_check =
      app.add_subcommand("check", "mod-2 degree formula on a morphism datum");
  std::string src_text, dst_text, degree_text;
  sub_check->add_option("source", src_text, "source variety spec (Y)")
      ->required();
  sub_check->add_option("target", dst_text, "target variety spec (X)")
      ->required();
  sub_check->add_option("--degree", degree_text, "degree of the morphism")
      ->required();

  auto* sub_family =
      app.add_subcommand("family", "per-n certificates for a variety family");
  std::string family_name;
  unsigned n_max = 0;
  sub_family
      ->add_option("name", family_name, "family: sb, quadric or involution")
      ->required();
  sub_family->add_option("--max-n", n_max, "largest n to report")->required();

  auto* sub_witt = app.add_subcommand(
      "witt-bound", "bound on the first Witt index of an anisotropic form");
  unsigned witt_d = 0;
  sub_witt->add_option("d", witt_d, "dimension of the quadratic form")
      ->required();

  auto* sub_verify =
      app.add_subcommand("verify", "run the invariant suites");
  std::vector<std::string> suites;
  sub_verify->add_option("--suite", suites,
                         "run only the named suite (repeatable)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  for (const std::string& name : suites)
    if (name.empty()) {
      err << "error: empty suite name\n";
      return exit_usage;
    }

  std::ofstream file_out;
  std::ostream* sink = &out;
  if (!output_path.empty()) {
    file_out.open(output_path);
    if (!file_out) {
      err << "error: cannot open output file " << output_path << '\n';
      return exit_usage;
    }
    sink = &file_out;
  }

  Format format = detail::parse_format(format_name);
  try {
    if (sub_segre->parsed())
      return detail::cmd_segre(spec_text, format, *sink);
    if (sub_check->parsed())
      return detail::cmd_check(src_text, dst_text, degree_text, format,
                               *sink);
    if (sub_family->parsed())
      return detail::cmd_family(family_name, n_max, format, *sink);
    if (sub_witt->parsed()) return detail::cmd_witt(witt_d, format, *sink);
    if (sub_verify->parsed())
      return detail::cmd_verify(suites, format, *sink, err);
    err << "error: no subcommand\n";
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_invariant_failure;
  }
}

}  // namespace segre::cli
