#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qrs/families.hpp"
#include "qrs/report_json.hpp"
#include "qrs/verifier.hpp"

namespace {

using namespace qrs;

// ---------------------------------------------------------------------------
// rendering helpers
// ---------------------------------------------------------------------------

std::string rat_latex(const Rat& value) {
  Rat mag = value < 0 ? Rat(-value) : value;
  std::ostringstream os;
  if (denominator(mag) == 1) {
    os << numerator(mag);
  } else {
    os << "\\frac{" << numerator(mag) << "}{" << denominator(mag) << "}";
  }
  return os.str();
}

std::string poly_latex(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    std::string mono;
    for (int i = 0; i < kNumSymbols; ++i) {
      if (e[i] == 0) continue;
      mono += kSymbolNames[i];
      if (e[i] != 1) {
        mono += "^{" + std::to_string(e[i]) + "}";
      }
    }
    if (mono.empty()) {
      os << rat_latex(mag);
    } else {
      if (mag != 1) os << rat_latex(mag);
      os << mono;
    }
  }
  return os.str();
}

std::string rf_latex(const RationalFunction& f) {
  if (f.den().is_one()) return poly_latex(f.num());
  return "\\frac{" + poly_latex(f.num()) + "}{" + poly_latex(f.den()) + "}";
}

std::string rf_render(const RationalFunction& f, bool latex) {
  return latex ? rf_latex(f) : f.str();
}

// whether a coefficient string can sit directly in front of a variable
// without parentheses
bool juxtaposable(const std::string& s, bool latex) {
  if (s.empty()) return false;
  bool all_digits = true;
  for (char ch : s) {
    if (ch < '0' || ch > '9') all_digits = false;
  }
  if (all_digits) return true;
  if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'z') return true;
  if (latex) {
    // single positive monomial: no sum, difference, or fraction structure
    return s.find('+') == std::string::npos &&
           s.find('-') == std::string::npos &&
           s.find("\\frac") == std::string::npos;
  }
  return false;
}

std::string power_string(Sym var, int k, bool latex) {
  std::string v(1, symbol_name(var));
  if (k == 1) return v;
  if (latex) return v + "^{" + std::to_string(k) + "}";
  return v + "^" + std::to_string(k);
}

std::string graded_term(const RationalFunction& coeff, Sym var, int k,
                        bool latex) {
  std::string cs = rf_render(coeff, latex);
  if (k == 0) return cs;
  std::string vp = power_string(var, k, latex);
  if (cs == "1") return vp;
  if (!juxtaposable(cs, latex)) cs = "(" + cs + ")";
  return cs + vp;
}

// polynomial printed by ascending powers of var, e.g. "1 + (1+q)x + x^2"
std::string graded_poly_string(const RationalFunction& f, Sym var,
                               bool latex) {
  const int vi = static_cast<int>(var);
  int max_deg = 0;
  for (const auto& [e, c] : f.num().terms()) {
    (void)c;
    if (e[vi] > max_deg) max_deg = e[vi];
  }
  std::vector<std::string> pieces;
  for (int k = 0; k <= max_deg; ++k) {
    RationalFunction coeff(f.num().coeff_of(var, k), f.den());
    if (coeff.is_zero()) continue;
    pieces.push_back(graded_term(coeff, var, k, latex));
  }
  if (pieces.empty()) return "0";
  std::string out = pieces[0];
  for (size_t i = 1; i < pieces.size(); ++i) out += " + " + pieces[i];
  return out;
}

std::string series_string(const TruncatedSeries& s, bool latex) {
  std::vector<std::string> pieces;
  for (int k = 0; k <= s.order(); ++k) {
    RationalFunction coeff = s.coeff(k);
    if (coeff.is_zero()) continue;
    pieces.push_back(graded_term(coeff, s.var(), k, latex));
  }
  std::string out = pieces.empty() ? "0" : pieces[0];
  for (size_t i = 1; i < pieces.size(); ++i) out += " + " + pieces[i];
  out += " + O(" + power_string(s.var(), s.order() + 1, latex) + ")";
  return out;
}

std::string meta_string(const std::map<std::string, int>& meta) {
  std::string out;
  for (const auto& [name, value] : meta) {
    if (!out.empty()) out += ' ';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

std::string degree_string(const std::vector<int>& degree) {
  if (degree.size() == 1) return std::to_string(degree[0]);
  if (degree.size() == 2) {
    return "(" + std::to_string(degree[0]) + ", " + std::to_string(degree[1]) +
           ")";
  }
  return "direct";
}

std::string report_text(const VerificationReport& rep, bool latex) {
  std::ostringstream os;
  os << "id: " << rep.id << "\n";
  os << "status: " << to_string(rep.status) << "\n";
  os << "order: " << rep.order_checked << "\n";
  os << "meta: " << (rep.meta.empty() ? "-" : meta_string(rep.meta)) << "\n";
  if (!rep.reason.empty()) os << "reason: " << rep.reason << "\n";
  if (rep.first_mismatch.has_value()) {
    const FirstMismatch& fm = *rep.first_mismatch;
    os << "first_mismatch:\n";
    os << "  degree: " << degree_string(fm.degree) << "\n";
    os << "  lhs: " << rf_render(fm.lhs, latex) << "\n";
    os << "  rhs: " << rf_render(fm.rhs, latex) << "\n";
    os << "  diff: " << rf_render(fm.diff, latex) << "\n";
  } else {
    os << "first_mismatch: none\n";
  }
  return os.str();
}

std::string sweep_line(const VerificationReport& rep, bool expected) {
  std::ostringstream os;
  os << (expected ? "ok         " : "UNEXPECTED ");
  os << rep.id;
  if (!rep.meta.empty()) os << " " << meta_string(rep.meta);
  os << " order=" << rep.order_checked;
  os << " " << to_string(rep.status);
  if (rep.first_mismatch.has_value()) {
    os << " at degree " << degree_string(rep.first_mismatch->degree);
  }
  if (rep.status == VerifyStatus::unsupported && !rep.reason.empty()) {
    os << " (" << rep.reason << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// command configuration
// ---------------------------------------------------------------------------

struct Options {
  std::string id;
  std::string family;
  std::string format = "text";
  std::string out_path;
  int order = 0;
  bool order_given = false;
  int degree = 0;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> k;
};

int resolve_order(const Options& opt, std::string& error) {
  if (opt.order_given) {
    if (opt.order < 1) {
      error = "--order must be at least 1";
      return -1;
    }
    return opt.order;
  }
  if (const char* env = std::getenv("QRS_ORDER")) {
    try {
      size_t used = 0;
      int value = std::stoi(env, &used);
      if (used != std::string(env).size() || value < 1) {
        error = std::string("QRS_ORDER must be a positive integer, got '") +
                env + "'";
        return -1;
      }
      return value;
    } catch (const std::exception&) {
      error = std::string("QRS_ORDER must be a positive integer, got '") +
              env + "'";
      return -1;
    }
  }
  return 8;
}

MetaMap explicit_meta(const Options& opt) {
  MetaMap meta;
  if (opt.n) meta["n"] = *opt.n;
  if (opt.m) meta["m"] = *opt.m;
  if (opt.k) meta["k"] = *opt.k;
  return meta;
}

int emit(const Options& opt, const std::string& payload) {
  if (opt.out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return 0;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path '" << opt.out_path << "'\n";
    return 2;
  }
  out << payload;
  if (!payload.empty() && payload.back() != '\n') out << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

int run_list(const Options& opt) {
  const auto& registry = identity_registry();
  std::string payload;
  if (opt.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const IdentityRecord& rec : registry) {
      nlohmann::json j;
      j["id"] = rec.id;
      j["expected"] = expected_status_name(rec.expected_status);
      j["description"] = rec.description;
      j["meta"] = nlohmann::json::object();
      for (const MetaRange& range : rec.meta_params) {
        j["meta"][range.name] = nlohmann::json::array({range.lo, range.hi});
      }
      arr.push_back(std::move(j));
    }
    payload = arr.dump(2);
  } else {
    std::ostringstream os;
    for (const IdentityRecord& rec : registry) {
      os << rec.id << "\n";
      os << "  expected: " << expected_status_name(rec.expected_status);
      if (!rec.meta_params.empty()) {
        os << "  meta:";
        for (const MetaRange& range : rec.meta_params) {
          os << " " << range.name << " in [" << range.lo << ", " << range.hi
             << "]";
        }
      }
      os << "\n";
      os << "  " << rec.description << "\n";
    }
    payload = os.str();
  }
  return emit(opt, payload);
}

int run_verify(const Options& opt) {
  std::string error;
  int order = resolve_order(opt, error);
  if (order < 0) {
    std::cerr << "error: " << error << "\n";
    return 2;
  }
  const IdentityRecord& rec = find_identity(opt.id);
  VerificationReport rep = verify(opt.id, order, explicit_meta(opt));
  bool expected = status_expected(rec.expected_status, rep.status);
  std::string payload;
  if (opt.format == "json") {
    payload = report_to_json(rep);
  } else {
    payload = report_text(rep, opt.format == "latex");
  }
  int emitted = emit(opt, payload);
  if (emitted != 0) return emitted;
  return expected ? 0 : 1;
}

int run_sweep(const Options& opt) {
  std::string error;
  int order = resolve_order(opt, error);
  if (order < 0) {
    std::cerr << "error: " << error << "\n";
    return 2;
  }
  std::vector<std::string> ids;
  if (!opt.id.empty()) {
    find_identity(opt.id);
    ids.push_back(opt.id);
  } else {
    for (const IdentityRecord& rec : identity_registry()) {
      ids.push_back(rec.id);
    }
  }
  std::map<std::string, std::pair<int, int>> ranges;
  ranges["n"] = opt.n ? std::pair<int, int>{*opt.n, *opt.n}
                      : std::pair<int, int>{0, 3};
  ranges["m"] = opt.m ? std::pair<int, int>{*opt.m, *opt.m}
                      : std::pair<int, int>{0, 3};
  if (opt.k) ranges["k"] = {*opt.k, *opt.k};
  std::vector<VerificationReport> reports = sweep(ids, {order}, ranges);
  bool all_expected = true;
  for (const VerificationReport& rep : reports) {
    const IdentityRecord& rec = find_identity(rep.id);
    if (!status_expected(rec.expected_status, rep.status)) {
      all_expected = false;
    }
  }
  std::string payload;
  if (opt.format == "json") {
    payload = reports_to_json(reports);
  } else {
    std::ostringstream os;
    for (const VerificationReport& rep : reports) {
      const IdentityRecord& rec = find_identity(rep.id);
      os << sweep_line(rep, status_expected(rec.expected_status, rep.status))
         << "\n";
    }
    os << (all_expected ? "all statuses expected"
                        : "UNEXPECTED statuses present")
       << " (" << reports.size() << " reports)\n";
    payload = os.str();
  }
  int emitted = emit(opt, payload);
  if (emitted != 0) return emitted;
  return all_expected ? 0 : 1;
}

int run_table(const Options& opt) {
  PolySpec spec;
  spec.family = family_from_name(opt.family);
  spec.degree = opt.degree;
  RationalFunction poly = build_polynomial(spec);
  std::string payload;
  if (opt.format == "json") {
    nlohmann::json j;
    j["family"] = opt.family;
    j["degree"] = opt.degree;
    j["polynomial"] = poly.str();
    payload = j.dump(2);
  } else {
    payload = graded_poly_string(poly, Sym::x, opt.format == "latex");
  }
  return emit(opt, payload);
}

int run_expand(const Options& opt) {
  std::string error;
  int order = resolve_order(opt, error);
  if (order < 0) {
    std::cerr << "error: " << error << "\n";
    return 2;
  }
  TruncatedSeries series = lhs_probe(opt.id, order, explicit_meta(opt));
  std::string payload;
  if (opt.format == "json") {
    nlohmann::json j;
    j["id"] = opt.id;
    j["var"] = std::string(1, symbol_name(series.var()));
    j["order"] = series.order();
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= series.order(); ++k) {
      coeffs.push_back(series.coeff(k).str());
    }
    j["coefficients"] = std::move(coeffs);
    payload = j.dump(2);
  } else {
    payload = series_string(series, opt.format == "latex");
  }
  return emit(opt, payload);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic verifier for q-operator identities"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    cmd->add_option("--out", opt.out_path, "write output to this path");
  };
  auto add_order = [&opt](CLI::App* cmd) {
    cmd->add_option("--order", opt.order,
                    "truncation order (default 8, or QRS_ORDER)")
        ->each([&opt](const std::string&) { opt.order_given = true; });
  };
  auto add_meta = [&opt](CLI::App* cmd) {
    cmd->add_option("--n", opt.n, "value of the meta parameter n");
    cmd->add_option("--m", opt.m, "value of the meta parameter m");
    cmd->add_option("--k", opt.k, "value of the meta parameter k");
  };

  CLI::App* cmd_list = app.add_subcommand("list", "print the identity catalog");
  add_format(cmd_list);

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "check one identity at one meta point");
  cmd_verify->add_option("--id", opt.id, "identity id")->required();
  add_order(cmd_verify);
  add_meta(cmd_verify);
  add_format(cmd_verify);

  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "check identities over meta ranges");
  cmd_sweep->add_option("--id", opt.id, "restrict to one identity id");
  add_order(cmd_sweep);
  add_meta(cmd_sweep);
  add_format(cmd_sweep);

  CLI::App* cmd_table =
      app.add_subcommand("table", "print one polynomial from a family");
  cmd_table->add_option("--family", opt.family, "family name")->required();
  cmd_table->add_option("--degree", opt.degree, "polynomial degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_format(cmd_table);

  CLI::App* cmd_expand = app.add_subcommand(
      "expand", "print the left-hand series of an identity");
  cmd_expand->add_option("--id", opt.id, "identity id")->required();
  add_order(cmd_expand);
  add_meta(cmd_expand);
  add_format(cmd_expand);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_list)) return run_list(opt);
    if (app.got_subcommand(cmd_verify)) return run_verify(opt);
    if (app.got_subcommand(cmd_sweep)) return run_sweep(opt);
    if (app.got_subcommand(cmd_table)) return run_table(opt);
    if (app.got_subcommand(cmd_expand)) return run_expand(opt);
  } catch (const QrsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
