// Command-line front end: exact evaluation of Boros-Moll polynomials by four
// routes, coefficient tables, sequence property sweeps, brute-force identity
// verification, structure enumeration, bijection transforms, and the
// floating-point quartic-integral cross-check.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 enumeration
// refused (above the brute-force limit).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bmoll/bmoll.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

struct Options {
  std::string format = "text";
  std::string output;
  int threads = 1;
  int brute_limit = bmoll::kDefaultBruteLimit;
};

void emit(const Options& opt, const std::string& body) {
  if (opt.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot open output file " + opt.output);
  out << body;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

json read_input_json(const std::string& path) {
  json j;
  if (path.empty() || path == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file " + path);
    in >> j;
  }
  return j;
}

bmoll::Poly eval_route(const std::string& method, int m) {
  if (method == "double") return bmoll::double_sum(m);
  if (method == "single") return bmoll::single_sum(m);
  if (method == "hyp") return bmoll::hypergeometric_form(m);
  if (method == "jacobi") return bmoll::jacobi_form(m);
  throw std::invalid_argument("unknown method " + method);
}

// ---- eval ----

int cmd_eval(const Options& opt, int m, const std::string& a_str,
             const std::string& method) {
  const bmoll::Rational a = bmoll::Rational::from_string(a_str);
  const std::vector<std::string> routes{"double", "single", "hyp", "jacobi"};

  if (method != "all") {
    bmoll::Rational value = eval_route(method, m).eval(a);
    if (opt.format == "json") {
      emit(opt, dump(json{{"m", m}, {"a", a_str}, {"method", method}, {"value", value}}));
    } else if (opt.format == "csv") {
      emit(opt, "m,a,method,value\n" + std::to_string(m) + "," + a_str + "," +
                    method + "," + value.to_string() + "\n");
    } else {
      emit(opt, value.to_string() + "\n");
    }
    return kExitOk;
  }

  std::map<std::string, bmoll::Rational> values;
  for (const auto& r : routes) values[r] = eval_route(r, m).eval(a);
  bool equal = true;
  for (const auto& r : routes) equal = equal && values[r] == values["single"];

  if (opt.format == "json") {
    json jv;
    for (const auto& [r, v] : values) jv[r] = v;
    emit(opt, dump(json{{"m", m}, {"a", a_str}, {"values", jv}, {"equal", equal}}));
  } else if (opt.format == "csv") {
    std::string body = "m,a,method,value\n";
    for (const auto& r : routes) {
      body += std::to_string(m) + "," + a_str + "," + r + "," +
              values[r].to_string() + "\n";
    }
    emit(opt, body);
  } else {
    std::string body;
    for (const auto& r : routes) body += r + ": " + values[r].to_string() + "\n";
    body += "routes agree: " + yesno(equal) + "\n";
    emit(opt, body);
  }
  return equal ? kExitOk : kExitCheckFailed;
}

// ---- coeffs ----

int cmd_coeffs(const Options& opt, int m) {
  const bmoll::CoeffTable table = bmoll::CoeffTable::build(m);
  if (opt.format == "json") {
    emit(opt, dump(json(table)));
  } else if (opt.format == "csv") {
    std::string body = "m,i,d\n";
    for (int i = 0; i <= m; ++i) {
      body += std::to_string(m) + "," + std::to_string(i) + "," +
              table.d[i].to_string() + "\n";
    }
    emit(opt, body);
  } else {
    std::string body;
    for (int i = 0; i <= m; ++i) {
      body += "d_" + std::to_string(i) + "(" + std::to_string(m) +
              ") = " + table.d[i].to_string() + "\n";
    }
    emit(opt, body);
  }
  return kExitOk;
}

// ---- check ----

struct CheckRow {
  int m = 0;
  bool positive = false, unimodal = false, log_concave = false, routes_equal = false;

  bool all() const { return positive && unimodal && log_concave && routes_equal; }
};

int cmd_check(const Options& opt, int m_max) {
  std::vector<CheckRow> rows = bmoll::parallel_reduce(
      static_cast<std::size_t>(m_max) + 1, std::vector<CheckRow>{},
      [](std::size_t mi) {
        const int m = static_cast<int>(mi);
        CheckRow row;
        row.m = m;
        const bmoll::CoeffTable table = bmoll::CoeffTable::build(m);
        row.positive = bmoll::is_positive_sequence(table.d);
        row.unimodal = bmoll::is_unimodal_sequence(table.d);
        row.log_concave = bmoll::is_log_concave_sequence(table.d);
        const bmoll::Poly single = bmoll::single_sum(m);
        row.routes_equal = bmoll::double_sum(m) == single &&
                           bmoll::hypergeometric_form(m) == single &&
                           bmoll::jacobi_form(m) == single &&
                           table.to_poly() == single;
        return std::vector<CheckRow>{row};
      },
      [](std::vector<CheckRow> acc, std::vector<CheckRow> part) {
        acc.insert(acc.end(), part.begin(), part.end());
        return acc;
      },
      opt.threads);

  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.all();

  if (opt.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back(json{{"m", r.m},
                       {"positive", r.positive},
                       {"unimodal", r.unimodal},
                       {"log_concave", r.log_concave},
                       {"routes_equal", r.routes_equal}});
    }
    emit(opt, dump(json{{"rows", j}, {"all_ok", all_ok}}));
  } else if (opt.format == "csv") {
    std::string body = "m,positive,unimodal,log_concave,routes_equal\n";
    for (const auto& r : rows) {
      body += std::to_string(r.m) + "," + yesno(r.positive) + "," +
              yesno(r.unimodal) + "," + yesno(r.log_concave) + "," +
              yesno(r.routes_equal) + "\n";
    }
    emit(opt, body);
  } else {
    std::string body = "   m  positive  unimodal  log-concave  routes-equal\n";
    for (const auto& r : rows) {
      char line[96];
      std::snprintf(line, sizeof line, "%4d  %-8s  %-8s  %-11s  %-12s\n", r.m,
                    r.positive ? "ok" : "FAIL", r.unimodal ? "ok" : "FAIL",
                    r.log_concave ? "ok" : "FAIL", r.routes_equal ? "ok" : "FAIL");
      body += line;
    }
    body += all_ok ? "all checks passed\n" : "CHECKS FAILED\n";
    emit(opt, body);
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

// ---- verify-identity ----

int cmd_verify_identity(const Options& opt, int m_max) {
  std::vector<bmoll::IdentityReport> reports;
  for (int m = 0; m <= m_max; ++m) {
    reports.push_back(bmoll::IdentityReport::build(m, opt.brute_limit, opt.threads));
  }
  bool all_ok = true;
  for (const auto& r : reports) all_ok = all_ok && r.all_equal;

  if (opt.format == "json") {
    json j = json::array();
    for (const auto& r : reports) j.push_back(json(r));
    emit(opt, dump(json{{"reports", j}, {"all_ok", all_ok}}));
  } else if (opt.format == "csv") {
    std::string body = "m,all_equal,brute_included\n";
    for (const auto& r : reports) {
      body += std::to_string(r.m) + "," + yesno(r.all_equal) + "," +
              yesno(r.brute_bi.has_value()) + "\n";
    }
    emit(opt, body);
  } else {
    std::string body = "   m  lhs=rhs  forms  scaling  brute_bi  brute_endo  all\n";
    for (const auto& r : reports) {
      const bmoll::Rational mf{mpz_class(bmoll::factorial(r.m))};
      const bmoll::Rational sign(r.m % 2 == 0 ? 1 : -1);
      const bool closed = r.weighted_lhs == r.weighted_rhs;
      const bool forms = r.double_sum_form == r.single_sum_form;
      const bool scaling = r.double_sum_form * mf == r.weighted_lhs * sign &&
                           r.single_sum_form * mf == r.weighted_rhs * sign;
      char line[128];
      std::snprintf(line, sizeof line, "%4d  %-7s  %-5s  %-7s  %-8s  %-10s  %s\n",
                    r.m, closed ? "ok" : "FAIL", forms ? "ok" : "FAIL",
                    scaling ? "ok" : "FAIL",
                    r.brute_bi ? (*r.brute_bi == r.weighted_lhs ? "ok" : "FAIL") : "-",
                    r.brute_endo ? (*r.brute_endo == r.weighted_rhs ? "ok" : "FAIL") : "-",
                    r.all_equal ? "ok" : "FAIL");
      body += line;
    }
    body += all_ok ? "identity verified\n" : "IDENTITY CHECK FAILED\n";
    emit(opt, body);
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

// ---- enumerate ----

int cmd_enumerate(const Options& opt, int m, const std::string& structure,
                  int a_size, int b_size) {
  json records = json::array();

  if (structure == "endofunctions") {
    bmoll::for_each_endofunction(m, opt.brute_limit, [&](const bmoll::MeixnerEndofunction& x) {
      records.push_back(json{{"structure", x}, {"weight", bmoll::weight(x, m)}});
    });
  } else if (structure == "bi-endofunctions") {
    bmoll::for_each_bi_endofunction(m, opt.brute_limit,
                                    [&](const bmoll::MeixnerBiEndofunction& x) {
      records.push_back(json{{"structure", x}, {"weight", bmoll::weight(x, m)}});
    });
  } else if (structure == "colored2" || structure == "colored3") {
    const int colors = structure == "colored2" ? 2 : 3;
    bmoll::for_each_colored_permutation(m, colors, opt.brute_limit,
                                        [&](const bmoll::ColoredPermutation& p) {
      records.push_back(json{{"structure", p}, {"weight", bmoll::weight(p, m)}});
    });
  } else if (structure == "reluctant") {
    if (a_size < 0 || b_size < 0) {
      throw std::invalid_argument("reluctant enumeration needs --a-size and --b-size");
    }
    if (a_size + b_size > opt.brute_limit + 1) {
      throw bmoll::EnumerationLimitError(a_size + b_size, opt.brute_limit + 1,
                                         bmoll::reluctant_count(a_size, b_size));
    }
    std::vector<int> A, B;
    for (int t = 1; t <= a_size; ++t) A.push_back(t);
    for (int t = a_size + 1; t <= a_size + b_size; ++t) B.push_back(t);
    bmoll::for_each_reluctant(A, B, [&](const bmoll::ReluctantFunction& rf) {
      records.push_back(json{{"structure", rf},
                             {"word", bmoll::canonical_word(rf).word},
                             {"weight", bmoll::cycle_weight_monomial(rf)}});
    });
  } else {
    throw std::invalid_argument("unknown structure " + structure);
  }

  if (opt.format == "json") {
    emit(opt, dump(json{{"m", m}, {"structure", structure},
                        {"count", records.size()}, {"records", records}}));
  } else if (opt.format == "csv") {
    std::string body = "index,structure,weight\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      bmoll::Poly w = records[i]["weight"].get<bmoll::Poly>();
      body += std::to_string(i) + "," + structure + "," + w.to_string() + "\n";
    }
    emit(opt, body);
  } else {
    std::string body;
    for (std::size_t i = 0; i < records.size(); ++i) {
      bmoll::Poly w = records[i]["weight"].get<bmoll::Poly>();
      body += std::to_string(i) + "  weight=" + w.to_string() + "  " +
              records[i]["structure"].dump() + "\n";
    }
    body += "count: " + std::to_string(records.size()) + "\n";
    emit(opt, body);
  }
  return kExitOk;
}

// ---- bijection ----

int cmd_bijection(const Options& opt, const std::string& mode, const std::string& kind,
                  int m, const std::string& input) {
  const bool foata = kind == "foata";

  if (mode == "forward") {
    json j = read_input_json(input);
    bmoll::ColoredPermutation p =
        foata ? bmoll::foata_forward(j.get<bmoll::MeixnerEndofunction>())
              : bmoll::extended_forward(j.get<bmoll::MeixnerBiEndofunction>());
    emit(opt, dump(json(p)));
    return kExitOk;
  }
  if (mode == "backward") {
    bmoll::ColoredPermutation p = read_input_json(input).get<bmoll::ColoredPermutation>();
    if (foata) {
      emit(opt, dump(json(bmoll::foata_backward(p))));
    } else {
      emit(opt, dump(json(bmoll::extended_backward(p))));
    }
    return kExitOk;
  }
  if (mode == "trace") {
    json j = read_input_json(input);
    bmoll::MeixnerBiEndofunction x =
        foata ? bmoll::embed(j.get<bmoll::MeixnerEndofunction>())
              : j.get<bmoll::MeixnerBiEndofunction>();
    emit(opt, dump(json(bmoll::absorption_trace(x))));
    return kExitOk;
  }
  if (mode == "roundtrip") {
    if (m < 0) throw std::invalid_argument("roundtrip mode needs --m");
    std::size_t structures = 0, images = 0;
    bool ok = true;
    std::set<std::string> seen;
    if (foata) {
      bmoll::for_each_endofunction(m, opt.brute_limit, [&](const bmoll::MeixnerEndofunction& x) {
        ++structures;
        bmoll::ColoredPermutation p = bmoll::foata_forward(x);
        ok = ok && bmoll::foata_backward(p) == x && seen.insert(json(p).dump()).second;
      });
      bmoll::for_each_colored_permutation(m, 2, opt.brute_limit,
                                          [&](const bmoll::ColoredPermutation& p) {
        ++images;
        ok = ok && bmoll::foata_forward(bmoll::foata_backward(p)) == p;
      });
    } else {
      bmoll::for_each_bi_endofunction(m, opt.brute_limit,
                                      [&](const bmoll::MeixnerBiEndofunction& x) {
        ++structures;
        bmoll::ColoredPermutation p = bmoll::extended_forward(x);
        ok = ok && bmoll::extended_backward(p) == x && seen.insert(json(p).dump()).second;
      });
      bmoll::for_each_colored_permutation(m, 3, opt.brute_limit,
                                          [&](const bmoll::ColoredPermutation& p) {
        ++images;
        ok = ok && bmoll::extended_forward(bmoll::extended_backward(p)) == p;
      });
    }
    ok = ok && structures == images && seen.size() == structures;
    if (opt.format == "json") {
      emit(opt, dump(json{{"m", m}, {"kind", kind}, {"structures", structures},
                          {"colored_permutations", images}, {"ok", ok}}));
    } else {
      emit(opt, "m=" + std::to_string(m) + " kind=" + kind + " structures=" +
                    std::to_string(structures) + " colored=" + std::to_string(images) +
                    (ok ? " round trip ok\n" : " ROUND TRIP FAILED\n"));
    }
    return ok ? kExitOk : kExitCheckFailed;
  }
  throw std::invalid_argument("unknown mode " + mode);
}

// ---- integral ----

int cmd_integral(const Options& opt, int m_max, std::vector<double> a_values,
                 double tol, double max_residual) {
  if (a_values.empty()) a_values = {0.0, 0.5, 1.0, 2.0};
  struct Row {
    int m;
    double a, quad, closed, residual;
  };
  std::vector<Row> rows;
  bool ok = true;
  for (int m = 0; m <= m_max; ++m) {
    for (double a : a_values) {
      Row r;
      r.m = m;
      r.a = a;
      r.quad = bmoll::quartic_integral(m, a, tol);
      r.closed = bmoll::closed_form_value(m, a);
      r.residual = std::fabs(r.quad - r.closed);
      ok = ok && r.residual <= max_residual;
      rows.push_back(r);
    }
  }

  if (opt.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back(json{{"m", r.m},
                       {"a", r.a},
                       {"quadrature", r.quad},
                       {"closed_form", r.closed},
                       {"residual", r.residual}});
    }
    emit(opt, dump(json{{"rows", j}, {"max_residual", max_residual}, {"all_ok", ok}}));
  } else if (opt.format == "csv") {
    std::string body = "m,a,quadrature,closed_form,residual\n";
    for (const auto& r : rows) {
      body += std::to_string(r.m) + "," + fmt_double(r.a) + "," + fmt_double(r.quad) +
              "," + fmt_double(r.closed) + "," + fmt_double(r.residual) + "\n";
    }
    emit(opt, body);
  } else {
    std::string body = "   m          a            quadrature           closed form      residual\n";
    for (const auto& r : rows) {
      char line[160];
      std::snprintf(line, sizeof line, "%4d %10s  %20.15g  %20.15g  %10.3g\n", r.m,
                    fmt_double(r.a).c_str(), r.quad, r.closed, r.residual);
      body += line;
    }
    body += ok ? "residuals within bound\n" : "RESIDUAL BOUND EXCEEDED\n";
    emit(opt, body);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Boros-Moll polynomial toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", opt.output, "Write output to this file instead of stdout");
  app.add_option("--threads", opt.threads, "Worker threads for exact reductions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--brute-limit", opt.brute_limit,
                 "Largest m the enumerators will attempt")
      ->envname("BM_BRUTE_LIMIT")
      ->capture_default_str();

  int m = -1, m_max = 4, a_size = -1, b_size = -1;
  std::string a_str = "0", method = "single", structure = "bi-endofunctions";
  std::string mode = "roundtrip", kind = "extended", input;
  std::vector<double> a_values;
  double tol = 1e-10, max_residual = 1e-6;

  auto* eval = app.add_subcommand("eval", "Evaluate P_m(a) exactly at a rational a");
  eval->add_option("--m", m, "Polynomial order")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--a", a_str, "Evaluation point, as \"p\" or \"p/q\"")->required();
  eval->add_option("--method", method, "Evaluation route")
      ->check(CLI::IsMember({"double", "single", "hyp", "jacobi", "all"}))
      ->capture_default_str();

  auto* coeffs = app.add_subcommand("coeffs", "Coefficient table d_0(m)..d_m(m)");
  coeffs->add_option("--m", m, "Polynomial order")->required()->check(CLI::NonNegativeNumber);

  auto* check = app.add_subcommand(
      "check", "Positivity/unimodality/log-concavity/route-equality sweep");
  check->add_option("--m-max", m_max, "Check all m from 0 to this bound")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand(
      "verify-identity", "Verify the weighted-enumeration identity per m");
  verify->add_option("--m-max", m_max, "Verify all m from 0 to this bound")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List structures with weights");
  enumerate->add_option("--m", m, "Ground set size")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--structure", structure, "Structure family")
      ->check(CLI::IsMember({"endofunctions", "bi-endofunctions", "colored2",
                             "colored3", "reluctant"}))
      ->capture_default_str();
  enumerate->add_option("--a-size", a_size, "|A| for reluctant enumeration");
  enumerate->add_option("--b-size", b_size, "|B| for reluctant enumeration");

  auto* bijection = app.add_subcommand(
      "bijection", "Foata-style transforms: forward/backward/trace/roundtrip");
  bijection->add_option("--mode", mode, "Operation")
      ->check(CLI::IsMember({"forward", "backward", "trace", "roundtrip"}))
      ->capture_default_str();
  bijection->add_option("--kind", kind, "Bijection variant")
      ->check(CLI::IsMember({"extended", "foata"}))
      ->capture_default_str();
  bijection->add_option("--m", m, "Ground set size for roundtrip mode")
      ->check(CLI::NonNegativeNumber);
  bijection->add_option("--input", input, "Structure JSON file, or - for stdin");

  auto* integral = app.add_subcommand(
      "integral", "Quadrature vs closed form for the quartic integral");
  integral->add_option("--m-max", m_max, "Largest m in the residual table")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  integral->add_option("--a", a_values, "Evaluation points (repeatable; default 0 1/2 1 2)");
  integral->add_option("--tol", tol, "Quadrature error target")->capture_default_str();
  integral->add_option("--max-residual", max_residual, "Pass/fail bound on |quad - closed|")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(opt, m, a_str, method);
    if (coeffs->parsed()) return cmd_coeffs(opt, m);
    if (check->parsed()) return cmd_check(opt, m_max);
    if (verify->parsed()) return cmd_verify_identity(opt, m_max);
    if (enumerate->parsed()) {
      if (m < 0 && structure != "reluctant") {
        throw std::invalid_argument("enumerate needs --m");
      }
      return cmd_enumerate(opt, m, structure, a_size, b_size);
    }
    if (bijection->parsed()) return cmd_bijection(opt, mode, kind, m, input);
    if (integral->parsed()) return cmd_integral(opt, m_max, a_values, tol, max_residual);
  } catch (const bmoll::EnumerationLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
