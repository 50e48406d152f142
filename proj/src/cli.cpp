#include "fcalc/cli.hpp"

#include "fcalc/closed_form.hpp"
#include "fcalc/combinatorics.hpp"
#include "fcalc/derivation.hpp"
#include "fcalc/diff_rep.hpp"
#include "fcalc/expr.hpp"
#include "fcalc/faa_di_bruno.hpp"
#include "fcalc/format.hpp"
#include "fcalc/serialize.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

namespace fcalc::cli {

namespace {

struct VerificationFailed {
  OutputDoc doc;
};

bool use_color(const std::ostream& out) {
  const char* mode = std::getenv("FCALC_COLOR");
  if (mode && std::string(mode) == "always") return true;
  if (mode && std::string(mode) == "never") return false;
  if (std::getenv("NO_COLOR")) return false;
  return &out == &std::cout && isatty(STDOUT_FILENO);
}

std::string display_math(const std::string& body) { return "\\[\n" + body + "\n\\]\n"; }

OutputDoc render_series(Format format, const std::string& lhs_latex, const Element& input, const YSeries& s) {
  OutputDoc doc{format, {}};
  switch (format) {
    case Format::Text: doc.payload = to_text(s) + "\n"; break;
    case Format::Json:
      doc.payload = Json{{"input", to_json(input)}, {"series", to_json(s)}}.dump(2) + "\n";
      break;
    case Format::Latex:
      doc.payload = display_math(lhs_latex + "\\left(" + to_latex(input) + "\\right) = " + to_latex(s) +
                                 " + O(y^{" + std::to_string(s.order() + 1) + "})");
      break;
  }
  return doc;
}

OutputDoc render_report(Format format, const std::string& check, const VerifyReport& r, bool color) {
  OutputDoc doc{format, {}};
  switch (format) {
    case Format::Text: {
      std::string verdict = r.passed ? "PASS" : "FAIL";
      if (color) verdict = (r.passed ? "\033[32m" : "\033[31m") + verdict + "\033[0m";
      doc.payload = check + ": " + verdict + " (" + std::to_string(r.cases) + " cases)\n";
      if (!r.passed) doc.payload += "  counterexample: " + r.failure + "\n";
      break;
    }
    case Format::Json:
      doc.payload = Json{{"check", check}, {"passed", r.passed}, {"cases", r.cases}, {"failure", r.failure}}.dump(2) + "\n";
      break;
    case Format::Latex:
      doc.payload = display_math("\\text{" + check + ": " + (r.passed ? "pass" : "fail") + " (" +
                                 std::to_string(r.cases) + " cases)}");
      break;
  }
  return doc;
}

OutputDoc render_stirling(Format format, unsigned max) {
  std::vector<std::vector<std::string>> rows;
  std::size_t width = 1;
  for (unsigned k = 0; k <= max; ++k) {
    std::vector<std::string> row;
    for (unsigned j = 0; j <= max; ++j) {
      row.push_back(bracket(k, j).get_str());
      width = std::max(width, row.back().size());
    }
    rows.push_back(std::move(row));
  }
  OutputDoc doc{format, {}};
  std::ostringstream os;
  switch (format) {
    case Format::Text: {
      width = std::max(width, std::to_string(max).size());
      auto pad = [&](const std::string& s) { return std::string(width - s.size() + 1, ' ') + s; };
      os << std::string(std::to_string(max).size(), ' ') << " |";
      for (unsigned j = 0; j <= max; ++j) os << pad(std::to_string(j));
      os << "\n" << std::string(std::to_string(max).size() + 2 + (max + 1) * (width + 1), '-') << "\n";
      for (unsigned k = 0; k <= max; ++k) {
        const std::string label = std::to_string(k);
        os << std::string(std::to_string(max).size() - label.size(), ' ') << label << " |";
        for (const auto& v : rows[k]) os << pad(v);
        os << "\n";
      }
      break;
    }
    case Format::Json:
      os << Json{{"max", max}, {"rows", rows}}.dump(2) << "\n";
      break;
    case Format::Latex: {
      std::string body = "\\begin{array}{r|" + std::string(max + 1, 'r') + "}\n k\\backslash j";
      for (unsigned j = 0; j <= max; ++j) body += " & " + std::to_string(j);
      body += " \\\\ \\hline\n";
      for (unsigned k = 0; k <= max; ++k) {
        body += " " + std::to_string(k);
        for (const auto& v : rows[k]) body += " & " + v;
        body += " \\\\\n";
      }
      os << display_math(body + "\\end{array}");
      break;
    }
  }
  doc.payload = os.str();
  return doc;
}

OutputDoc render_faa_di_bruno(Format format, unsigned order) {
  std::vector<FdbElement> derivs{FdbElement::var(FdbVar::y(0))};
  for (unsigned n = 1; n <= order; ++n) derivs.push_back(fdb_D(derivs.back()));
  OutputDoc doc{format, {}};
  switch (format) {
    case Format::Text:
      for (unsigned n = 0; n <= order; ++n)
        doc.payload += "D^" + std::to_string(n) + " y_0 = " + to_text(derivs[n]) + "\n";
      break;
    case Format::Json: {
      Json d = Json::array();
      Json e = Json::array();
      const auto coeffs = exp_zD_y0(order);
      for (unsigned n = 0; n <= order; ++n) {
        d.push_back(to_json(derivs[n]));
        e.push_back(to_json(coeffs[n]));
      }
      doc.payload = Json{{"order", order}, {"derivatives", d}, {"exp_coefficients", e}}.dump(2) + "\n";
      break;
    }
    case Format::Latex: {
      std::string body = "\\begin{aligned}\n";
      for (unsigned n = 0; n <= order; ++n)
        body += "D^{" + std::to_string(n) + "} y_{0} &= " + to_latex(derivs[n]) + " \\\\\n";
      doc.payload = display_math(body + "\\end{aligned}");
      break;
    }
  }
  return doc;
}

std::string power_text(unsigned k) {
  if (k == 0) return "1";
  if (k == 1) return "x";
  return "x^" + std::to_string(k);
}

OutputDoc render_umbral(Format format, const UmbralTable& t) {
  OutputDoc doc{format, {}};
  switch (format) {
    case Format::Text:
      for (std::size_t k = 0; k < t.images.size(); ++k)
        doc.payload += "D_B " + power_text(static_cast<unsigned>(k)) + " = " + to_text(t.images[k]) + "\n";
      break;
    case Format::Json: doc.payload = to_json(t).dump(2) + "\n"; break;
    case Format::Latex: {
      std::string body = "\\begin{aligned}\n";
      for (std::size_t k = 0; k < t.images.size(); ++k) {
        std::string p = k == 0 ? "1" : k == 1 ? "x" : "x^{" + std::to_string(k) + "}";
        body += "D_{B}\\, " + p + " &= " + to_latex(t.images[k]) + " \\\\\n";
      }
      doc.payload = display_math(body + "\\end{aligned}");
      break;
    }
  }
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact formal calculus: exponentiated derivations, formal Taylor expansions,\n"
               "Stirling-number identities, Faa di Bruno data and umbral shifts."};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::Text;
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"latex", Format::Latex}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::string expr_text;
  unsigned order = 6;
  std::string via = "engine";

  auto* expand = app.add_subcommand("expand", "Expand e^{y d/dx} applied to an expression");
  expand->add_option("--expr", expr_text, "Expression, e.g. \"x^r + 2*log(x)\"")->required();
  expand->add_option("--order", order, "Truncation order in y");
  expand->add_option("--via", via, "Computation route")->check(CLI::IsMember({"engine", "closed-form"}));

  auto* lift = app.add_subcommand("lift", "Expand e^{y x d/dx} by lifting through the subscript shift");
  lift->add_option("--expr", expr_text, "Expression")->required();
  lift->add_option("--order", order, "Truncation order in y");

  unsigned table_max = 6;
  auto* table = app.add_subcommand("stirling-table", "Table of bracket numbers [k over j]");
  table->add_option("--max", table_max, "Largest k and j");

  std::string check;
  unsigned max = 6, max_k = 6, max_n = 3, samples = 20, degree = 6;
  unsigned long seed = 1;
  auto* verify = app.add_subcommand("verify", "Check one of the identities exhaustively or on random samples");
  verify->add_option("check", check, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"automorphism", "intertwine", "lubell", "s-identity", "faa-di-bruno"}));
  verify->add_option("--max", max, "Bound for intertwine (|n|) and lubell (n)");
  verify->add_option("--max-k", max_k, "Largest j_0 for s-identity");
  verify->add_option("--max-n", max_n, "Longest chain for s-identity");
  verify->add_option("--samples", samples, "Random samples for automorphism and faa-di-bruno");
  verify->add_option("--order", order, "Truncation order for automorphism and faa-di-bruno");
  verify->add_option("--degree", degree, "Polynomial degree bound for faa-di-bruno");
  verify->add_option("--seed", seed, "Random seed");

  unsigned fdb_order = 4;
  auto* fdb = app.add_subcommand("faa-di-bruno", "Print D^n y_0 for the Faa di Bruno derivation");
  fdb->add_option("--order", fdb_order, "Largest n")->required();

  std::vector<std::string> b_text;
  unsigned depth = 4;
  auto* umbral = app.add_subcommand("umbral", "Solve for the umbral shift D_B");
  umbral->add_option("--B", b_text, "B_1,B_2,... (rationals; use --B=-1,2 for a leading minus)")
      ->delimiter(',')
      ->required();
  umbral->add_option("--depth", depth, "Number of powers x^k to solve for")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    OutputDoc doc;
    bool passed = true;
    if (expand->parsed()) {
      const Element a = parse_element(expr_text);
      const YSeries s = via == "engine" ? exp_apply(dx_spec(), a, order) : closed_form_expand(a, order);
      doc = render_series(format, "e^{y\\frac{d}{dx}}", a, s);
    } else if (lift->parsed()) {
      const Element a = parse_element(expr_text);
      doc = render_series(format, "e^{yx\\frac{d}{dx}}", a, lift_exp(a, order));
    } else if (table->parsed()) {
      doc = render_stirling(format, table_max);
    } else if (verify->parsed()) {
      VerifyReport r;
      if (check == "automorphism") r = verify_automorphism(samples, order, seed);
      if (check == "intertwine") r = verify_intertwine(max, 50, seed);
      if (check == "lubell") r = verify_lubell(max, std::max(max + 2, 10U));
      if (check == "s-identity") r = verify_s_product_identity(max_k, max_n);
      if (check == "faa-di-bruno") r = verify_faa_di_bruno(samples, degree, order, seed);
      doc = render_report(format, check, r, format == Format::Text && use_color(out));
      passed = r.passed;
    } else if (fdb->parsed()) {
      doc = render_faa_di_bruno(format, fdb_order);
    } else if (umbral->parsed()) {
      std::vector<Rational> values;
      for (const auto& v : b_text) values.push_back(parse_rational(v));
      doc = render_umbral(format, umbral_solve(BSequence(std::move(values)), depth));
    }
    out << doc.payload;
    return passed ? kOk : kVerificationFailed;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UnsupportedClosedForm& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ClosureError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace fcalc::cli
