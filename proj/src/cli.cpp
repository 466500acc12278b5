#include "psik/cli.hpp"

#include "psik/combinatorics.hpp"
#include "psik/digamma.hpp"
#include "psik/errors.hpp"
#include "psik/report_io.hpp"
#include "psik/suite.hpp"
#include "psik/xi_integral.hpp"
#include "psik/zeta_engine.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace psik {

namespace {

struct CommonFlags {
  std::optional<unsigned> digits;
  bool json = false;
  bool csv = false;
  std::string out_file;
  std::optional<long> max_terms;
  std::optional<std::string> tolerance_factor;
  std::optional<unsigned> threads;
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--digits", f.digits, "Decimal digits; working precision is ceil(3.33 (D + 15)) bits")
      ->check(CLI::Range(1u, 5000u));
  app->add_flag("--json", f.json, "Emit JSON");
  app->add_flag("--csv", f.csv, "Emit CSV");
  app->add_option("--out", f.out_file, "Write output to FILE");
  app->add_option("--max-terms", f.max_terms, "Terms summed directly before the tail is used")
      ->check(CLI::Range(1L, 10000000L));
  app->add_option("--tolerance-factor", f.tolerance_factor, "Pass when residual <= factor * budget");
  app->add_option("--threads", f.threads, "Worker threads")->check(CLI::Range(1u, 256u));
}

/// "--key value" and "--key=value" pairs left over after CLI11 parsing.
ParamMap collect_params(const std::vector<std::string>& rest) {
  ParamMap params;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const std::string& tok = rest[i];
    if (tok.rfind("--", 0) != 0 || tok.size() < 3) throw DomainError("unexpected argument '" + tok + "'");
    std::string key = tok.substr(2), value;
    auto eq = key.find('=');
    if (eq != std::string::npos) {
      value = key.substr(eq + 1);
      key.erase(eq);
    } else {
      if (i + 1 >= rest.size()) throw DomainError("missing value for '" + tok + "'");
      value = rest[++i];
    }
    if (params.count(key)) throw DomainError("parameter '" + key + "' given twice");
    params[key] = value;
  }
  return params;
}

const std::string& param(const ParamMap& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError("missing parameter --" + key);
  return it->second;
}

unsigned uparam(const ParamMap& p, const std::string& key) {
  const std::string& s = param(p, key);
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw DomainError("--" + key + " must be a non-negative integer");
  }
  return static_cast<unsigned>(std::stoul(s));
}

void check_keys(const ParamMap& p, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : p) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw DomainError("unknown parameter --" + k);
  }
}

struct EvalResult {
  std::string function;
  ParamMap params;
  std::string value;
  std::optional<PrecReal> bound;
};

EvalResult evaluate(const std::string& fn, const ParamMap& p, int digits) {
  EvalResult r{fn, p, "", std::nullopt};
  auto real = [&](const SeriesValue<PrecReal>& v) {
    r.value = to_string(v.value, digits);
    r.bound = v.trunc_bound;
  };
  if (fn == "psik") {
    check_keys(p, {"k", "x"});
    real(psi_k(uparam(p, "k"), parse_real(param(p, "x"))));
  } else if (fn == "psik-deriv") {
    check_keys(p, {"k", "m", "x"});
    real(psi_k_deriv(uparam(p, "k"), uparam(p, "m"), parse_real(param(p, "x"))));
  } else if (fn == "stieltjes") {
    check_keys(p, {"k", "x"});
    PrecReal x = p.count("x") ? parse_real(p.at("x")) : PrecReal(1);
    real(stieltjes_series(uparam(p, "k"), x));
  } else if (fn == "hurwitz-deriv") {
    check_keys(p, {"r", "z", "x"});
    real(hurwitz_deriv(uparam(p, "r"), parse_real(param(p, "z")), parse_real(param(p, "x"))));
  } else if (fn == "zeta0-deriv") {
    check_keys(p, {"k"});
    real(zeta_deriv_at_zero(uparam(p, "k")));
  } else if (fn == "stirling") {
    check_keys(p, {"n", "m"});
    r.value = stirling_first(uparam(p, "n"), uparam(p, "m")).str();
  } else if (fn == "h") {
    check_keys(p, {"r", "z"});
    unsigned rr = uparam(p, "r");
    unsigned z = p.count("z") ? uparam(p, "z") : 2;
    r.value = to_string(h_of_r(rr, stirling_kernel(z, rr + 1)));
  } else if (fn == "xi") {
    check_keys(p, {"t"});
    r.value = to_string(xi_of(parse_real(param(p, "t"))), digits);
  } else if (fn == "script-i") {
    check_keys(p, {"alpha"});
    real(script_I(Alpha::parse(param(p, "alpha"))));
  } else {
    throw DomainError("unknown function '" + fn + "'");
  }
  return r;
}

class Output {
 public:
  Output(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot open '" + path + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

RelationOptions relation_options(const CommonFlags& f) {
  RelationOptions o;
  if (f.tolerance_factor) {
    o.tolerance_factor = parse_real(*f.tolerance_factor);
    if (!(o.tolerance_factor > 0)) throw DomainError("--tolerance-factor must be positive");
  }
  if (f.max_terms) o.tail.n0 = *f.max_terms;
  return o;
}

void emit_reports(const CommonFlags& f, std::ostream& out, const std::vector<RelationReport>& reports) {
  if (f.json) {
    out << to_json(reports).dump(2) << '\n';
  } else if (f.csv) {
    write_csv(out, reports);
  } else {
    for (const auto& r : reports) out << summary_line(r) << '\n';
  }
}

const char* status_text(RowStatus s) {
  switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::Failed: return "failed";
    case RowStatus::BudgetExceeded: return "budget-exceeded";
    case RowStatus::InvalidParams: return "invalid-params";
  }
  return "?";
}

std::string job_text(const SuiteJob& job) {
  std::string s = job.relation;
  for (const auto& [k, v] : job.params) s += " " + k + "=" + v;
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized digamma functions, Stieltjes constants and their transformation formulas"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  CommonFlags eval_flags, verify_flags, suite_flags;
  std::string function, relation, config_path;

  auto* eval = app.add_subcommand("eval", "Evaluate one function: psik, psik-deriv, stieltjes, hurwitz-deriv, "
                                          "zeta0-deriv, stirling, h, xi, script-i");
  eval->add_option("function", function)->required();
  eval->allow_extras();
  add_common(eval, eval_flags);

  auto* verify = app.add_subcommand("verify", "Verify one relation; parameters follow as --name value");
  verify->add_option("relation", relation)->required();
  verify->allow_extras();
  add_common(verify, verify_flags);

  auto* suite = app.add_subcommand("suite", "Run a grid of verifications from a config file");
  suite->add_option("config", config_path)->required();
  add_common(suite, suite_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  auto bits_for = [](const CommonFlags& f) {
    return f.digits ? bits_for_digits(*f.digits) : default_precision_bits();
  };

  try {
    if (eval->parsed()) {
      PrecisionScope scope(bits_for(eval_flags));
      ParamMap params = collect_params(eval->remaining());
      int digits = eval_flags.digits ? static_cast<int>(*eval_flags.digits) : 30;
      EvalResult r = evaluate(function, params, digits);
      Output sink(out, eval_flags.out_file);
      std::ostream& o = sink.get();
      if (eval_flags.json) {
        nlohmann::ordered_json j;
        j["function"] = r.function;
        j["params"] = r.params;
        j["value"] = r.value;
        if (r.bound) j["trunc_bound"] = to_string(*r.bound, 6);
        j["precision_bits"] = current_precision_bits();
        o << j.dump(2) << '\n';
      } else if (eval_flags.csv) {
        o << "function,value,trunc_bound,precision_bits\n"
          << r.function << ',' << r.value << ',' << (r.bound ? to_string(*r.bound, 6) : "0") << ','
          << current_precision_bits() << '\n';
      } else {
        o << r.value;
        if (r.bound) o << "  (trunc_bound " << to_string(*r.bound, 3) << ")";
        o << '\n';
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      PrecisionScope scope(bits_for(verify_flags));
      ParamMap params = collect_params(verify->remaining());
      auto reports = run_relation(relation, params, relation_options(verify_flags));
      Output sink(out, verify_flags.out_file);
      emit_reports(verify_flags, sink.get(), reports);
      for (const auto& r : reports) {
        if (!r.pass) return kExitFailed;
      }
      return kExitOk;
    }

    SuiteConfig cfg = load_suite_config(config_path);
    if (suite_flags.digits) cfg.precision_bits = bits_for_digits(*suite_flags.digits);
    if (cfg.precision_bits == 0) cfg.precision_bits = default_precision_bits();
    if (suite_flags.threads) cfg.threads = *suite_flags.threads;
    if (suite_flags.max_terms) cfg.max_terms = *suite_flags.max_terms;
    if (suite_flags.tolerance_factor) {
      cfg.tolerance_factor = relation_options(suite_flags).tolerance_factor;
    }
    Output sink(out, suite_flags.out_file);
    std::ostream& o = sink.get();
    auto rows = run_suite(cfg);

    std::vector<RelationReport> reports;
    nlohmann::ordered_json errors = nlohmann::ordered_json::array();
    bool invalid = false, budget = false, failed = false;
    for (const auto& row : rows) {
      reports.insert(reports.end(), row.reports.begin(), row.reports.end());
      invalid = invalid || row.status == RowStatus::InvalidParams;
      budget = budget || row.status == RowStatus::BudgetExceeded;
      failed = failed || row.status == RowStatus::Failed;
      if (!row.error.empty()) {
        err << "error: " << job_text(row.job) << ": " << row.error << '\n';
        nlohmann::ordered_json e;
        e["relation"] = row.job.relation;
        e["params"] = row.job.params;
        e["status"] = status_text(row.status);
        e["error"] = row.error;
        errors.push_back(e);
      }
    }
    if (suite_flags.json) {
      nlohmann::ordered_json j;
      j["reports"] = to_json(reports);
      j["errors"] = errors;
      o << j.dump(2) << '\n';
    } else {
      emit_reports(suite_flags, o, reports);
    }
    std::size_t npass = 0;
    for (const auto& r : reports) npass += r.pass ? 1 : 0;
    err << reports.size() << " reports, " << npass << " passed, " << reports.size() - npass << " failed, "
        << errors.size() << " errors\n";
    if (invalid) return kExitInvalid;
    if (budget) return kExitBudget;
    if (failed) return kExitFailed;
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DomainError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace psik
