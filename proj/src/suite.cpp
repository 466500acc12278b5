#include "psik/suite.hpp"

#include "psik/errors.hpp"
#include "psik/xi_integral.hpp"
#include "psik/zeta_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

namespace psik {

namespace {

const std::string& need(const ParamMap& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError("missing parameter '" + key + "'");
  return it->second;
}

unsigned as_uint(const ParamMap& p, const std::string& key) {
  const std::string& s = need(p, key);
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw DomainError("parameter '" + key + "' must be a non-negative integer, got '" + s + "'");
  }
  return static_cast<unsigned>(std::stoul(s));
}

unsigned as_uint_or(const ParamMap& p, const std::string& key, unsigned fallback) {
  return p.count(key) ? as_uint(p, key) : fallback;
}

PrecReal as_real(const ParamMap& p, const std::string& key) { return parse_real(need(p, key)); }

Alpha as_alpha(const ParamMap& p, const std::string& key) { return Alpha::parse(need(p, key)); }

bool as_flag(const ParamMap& p, const std::string& key, bool fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  if (it->second == "yes" || it->second == "true" || it->second == "1") return true;
  if (it->second == "no" || it->second == "false" || it->second == "0") return false;
  throw DomainError("parameter '" + key + "' must be yes or no");
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

RelationReport asymptotic_report(const std::string& kind, const Alpha& alpha, unsigned M) {
  auto start = std::chrono::steady_clock::now();
  const PrecReal a = alpha.value();
  SeriesValue<PrecReal> exact, expansion;
  if (kind == "script-i") {
    exact = script_I(alpha);
    expansion = asympt_script_I(a, M);
  } else if (kind == "phi1-infinity") {
    exact = eval_phi1_sum(a);
    expansion = asympt_phi1_sum(a, M, AsymptoticDirection::ToInfinity);
  } else if (kind == "phi1-zero") {
    exact = eval_phi1_sum(a);
    expansion = asympt_phi1_sum(a, M, AsymptoticDirection::ToZero);
  } else if (kind == "ramanujan") {
    exact = ramanujan_integral(alpha);
    exact.value = -exact.value;
    expansion = asympt_ramanujan(a, M);
  } else {
    throw DomainError("asymptotic kind must be script-i, phi1-infinity, phi1-zero or ramanujan");
  }
  // pass: |exact - expansion| below the first omitted term
  auto r = make_report("asymptotic", {{"kind", kind}, {"alpha", alpha.text()}, {"M", std::to_string(M)}}, exact,
                       expansion, PrecReal(1));
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

RelationReport gamma1_report(const RelationOptions& options) {
  auto start = std::chrono::steady_clock::now();
  auto series = gamma1_odd_zeta_series();
  auto g = stieltjes_all(1, PrecReal(1))[1];
  auto r = make_report("gamma1-series", {}, series, g, options.tolerance_factor);
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<std::string>& relation_names() {
  static const std::vector<std::string> names{
      "ramanujan-k", "psi1-xi", "carlitz",   "meeting",     "dup1",         "dup2",      "guinand",
      "curious",     "summatory", "inv6",    "ramanujan-xi", "hurwitz-xi", "asymptotic", "gamma1-series"};
  return names;
}

std::vector<RelationReport> run_relation(const std::string& relation, const ParamMap& p,
                                         const RelationOptions& options) {
  if (relation == "ramanujan-k") return {verify_ramanujan_k(as_uint(p, "k"), as_alpha(p, "alpha"), options)};
  if (relation == "psi1-xi") return verify_psi1(as_alpha(p, "alpha"), as_flag(p, "integral", true), options);
  if (relation == "carlitz") {
    const unsigned k = as_uint(p, "k"), m = as_uint(p, "m"), n = as_uint(p, "n");
    const PrecReal x = as_real(p, "x");
    std::vector<RelationReport> out{verify_carlitz(k, m, n, x, options)};
    if (k == 0) out.push_back(verify_carlitz_corollary(m, n, x, options));
    return out;
  }
  if (relation == "meeting") {
    const PrecReal x = as_real(p, "x");
    if (p.count("preset")) {
      const std::string& preset = p.at("preset");
      if (preset == "dup1") return {verify_meeting(1, 2, 1, 2, x, options), verify_dup1(x, options)};
      if (preset == "dup2") return {verify_meeting(2, 2, 2, 1, x, options), verify_dup2(x, options)};
      throw DomainError("preset must be dup1 or dup2");
    }
    return {verify_meeting(as_uint(p, "k"), as_uint(p, "z"), as_uint(p, "m"), as_uint(p, "n"), x, options)};
  }
  if (relation == "dup1") return {verify_dup1(as_real(p, "x"), options)};
  if (relation == "dup2") return {verify_dup2(as_real(p, "x"), options)};
  if (relation == "guinand") {
    const unsigned k = as_uint(p, "k"), z = as_uint(p, "z");
    const Alpha alpha = as_alpha(p, "alpha");
    std::vector<RelationReport> out{verify_guinand(k, z, alpha, options)};
    if (k == 0) out.push_back(verify_guigen(z, alpha, options));
    return out;
  }
  if (relation == "curious") {
    const unsigned k = as_uint(p, "k");
    const Alpha alpha = as_alpha(p, "alpha");
    std::vector<RelationReport> out{verify_curious(k, alpha, options)};
    if (k == 0) out.push_back(verify_guigen1(alpha, options));
    return out;
  }
  if (relation == "summatory") {
    const unsigned x = as_uint(p, "x");
    return {summatory_log_check(as_uint(p, "j"), static_cast<long>(x), as_real(p, "y"), options)};
  }
  if (relation == "inv6") return {verify_inv6(as_uint(p, "n"), as_uint(p, "l"), as_real(p, "x"), options)};
  if (relation == "ramanujan-xi") return {verify_ramanujan_integral(as_alpha(p, "alpha"), options)};
  if (relation == "hurwitz-xi") return {verify_hurwitz_integral(as_real(p, "z"), as_alpha(p, "alpha"), options)};
  if (relation == "asymptotic") {
    unsigned M = as_uint_or(p, "M", 3);
    if (M > 8) throw DomainError("M must be at most 8");
    return {asymptotic_report(need(p, "kind"), as_alpha(p, "alpha"), M)};
  }
  if (relation == "gamma1-series") return {gamma1_report(options)};
  throw DomainError("unknown relation '" + relation + "'");
}

SuiteConfig parse_suite_config(std::istream& in) {
  SuiteConfig cfg;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) { throw ConfigError("line " + std::to_string(lineno) + ": " + msg); };
  auto parse_unsigned = [&](const std::string& v) {
    if (v.empty() || v.size() > 9 || !std::all_of(v.begin(), v.end(), [](unsigned char c) { return std::isdigit(c); })) {
      fail("expected a positive integer, got '" + v + "'");
    }
    return static_cast<unsigned>(std::stoul(v));
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (value.empty()) fail("empty value for '" + key + "'");
    if (key == "digits") {
      unsigned d = parse_unsigned(value);
      if (d == 0) fail("digits must be positive");
      cfg.precision_bits = bits_for_digits(d);
    } else if (key == "bits") {
      cfg.precision_bits = parse_unsigned(value);
      if (cfg.precision_bits < 32) fail("bits must be at least 32");
    } else if (key == "threads") {
      cfg.threads = std::max(1u, parse_unsigned(value));
    } else if (key == "tolerance_factor") {
      try {
        cfg.tolerance_factor = parse_real(value);
      } catch (const DomainError&) {
        fail("bad tolerance_factor");
      }
      if (!(cfg.tolerance_factor > 0)) fail("tolerance_factor must be positive");
    } else if (key == "max_terms") {
      cfg.max_terms = parse_unsigned(value);
      if (cfg.max_terms < 1) fail("max_terms must be positive");
    } else if (key == "run") {
      std::istringstream is(value);
      std::string relation;
      is >> relation;
      const auto& names = relation_names();
      if (std::find(names.begin(), names.end(), relation) == names.end()) fail("unknown relation '" + relation + "'");
      std::vector<std::pair<std::string, std::vector<std::string>>> axes;
      std::string tok;
      while (is >> tok) {
        auto e = tok.find('=');
        if (e == std::string::npos || e == 0 || e + 1 == tok.size()) fail("expected param=values, got '" + tok + "'");
        std::string name = tok.substr(0, e);
        std::vector<std::string> values;
        for (const auto& part : split(tok.substr(e + 1), ',')) {
          auto dots = part.find("..");
          if (dots == std::string::npos) {
            if (part.empty()) fail("empty value in '" + tok + "'");
            values.push_back(part);
            continue;
          }
          unsigned lo = parse_unsigned(part.substr(0, dots)), hi = parse_unsigned(part.substr(dots + 2));
          if (hi < lo) fail("empty range in '" + tok + "'");
          for (unsigned v = lo; v <= hi; ++v) values.push_back(std::to_string(v));
        }
        axes.emplace_back(name, values);
      }
      // cartesian product, last axis fastest
      std::vector<std::size_t> idx(axes.size(), 0);
      for (;;) {
        SuiteJob job{relation, {}};
        for (std::size_t a = 0; a < axes.size(); ++a) job.params[axes[a].first] = axes[a].second[idx[a]];
        cfg.jobs.push_back(job);
        std::size_t a = axes.size();
        while (a > 0) {
          --a;
          if (++idx[a] < axes[a].second.size()) break;
          idx[a] = 0;
          if (a == 0) {
            a = axes.size() + 1;
            break;
          }
        }
        if (axes.empty() || a == axes.size() + 1) break;
      }
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  return cfg;
}

SuiteConfig load_suite_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_suite_config(in);
}

std::vector<SuiteRow> run_suite(const SuiteConfig& config) {
  std::optional<PrecisionScope> scope;
  if (config.precision_bits > 0) scope.emplace(config.precision_bits);
  RelationOptions options;
  options.tolerance_factor = config.tolerance_factor;
  options.tail.n0 = config.max_terms;

  std::vector<SuiteRow> rows(config.jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      SuiteRow& row = rows[i];
      row.job = config.jobs[i];
      try {
        row.reports = run_relation(row.job.relation, row.job.params, options);
        bool ok = std::all_of(row.reports.begin(), row.reports.end(), [](const RelationReport& r) { return r.pass; });
        row.status = ok ? RowStatus::Ok : RowStatus::Failed;
      } catch (const BudgetExceeded& e) {
        row.status = RowStatus::BudgetExceeded;
        row.error = e.what();
      } catch (const DomainError& e) {
        row.status = RowStatus::InvalidParams;
        row.error = e.what();
      } catch (const std::exception& e) {
        row.status = RowStatus::Failed;
        row.error = e.what();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(std::max<std::size_t>(1, rows.size()))));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

}  // namespace psik
