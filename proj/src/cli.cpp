#include "hsum/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsum/bernoulli.hpp"
#include "hsum/harmonic.hpp"
#include "hsum/numtheory.hpp"
#include "hsum/verify.hpp"

namespace hsum::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { table, json, csv };

struct Common {
  Format format = Format::table;
  std::string out_path;
  unsigned threads = 1;
  bool quiet = false;
  bool no_timing = false;
  std::uint64_t max_brute_n = SumCaps{}.bruteforce_max_n;
  std::uint64_t max_exact_n = SumCaps{}.exact_max_n;
  std::uint64_t max_tuple4_n = SumCaps{}.tuple4_max_n;
  std::uint64_t max_fast_n = SumCaps{}.fast_max_n;
  unsigned long bernoulli_cap = kDefaultBernoulliCap;

  SumCaps caps() const { return {max_brute_n, max_exact_n, max_tuple4_n, max_fast_n}; }
};

void add_common(CLI::App& app, Common& c) {
  const std::map<std::string, Format> formats{
      {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", c.format, "table, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--out", c.out_path, "write output to a file instead of stdout");
  app.add_option("--threads", c.threads, "worker threads, 0 = hardware concurrency");
  app.add_flag("--quiet", c.quiet, "suppress diagnostics on stderr");
  app.add_flag("--no-timing", c.no_timing, "emit elapsed_ms as null");
  app.add_option("--max-brute-n", c.max_brute_n, "largest n for the O(n^2) evaluator");
  app.add_option("--max-exact-n", c.max_exact_n, "largest n for exact rational sums");
  app.add_option("--max-tuple4-n", c.max_tuple4_n, "largest n for 4-part sums");
  app.add_option("--max-fast-n", c.max_fast_n, "largest n for the fast evaluator");
  app.add_option("--bernoulli-cap", c.bernoulli_cap, "largest exact Bernoulli index");
}

unsigned resolved_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

VerifyOptions verify_options(const Common& c, bool oracle_check) {
  VerifyOptions o;
  o.lhs.eval.caps = c.caps();
  o.lhs.oracle_check = oracle_check;
  o.rhs.bernoulli_cap = c.bernoulli_cap;
  return o;
}

// Report rendering.

ordered_json opt_json(const std::optional<std::uint64_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string opt_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }

std::string elapsed_text(std::chrono::nanoseconds ns) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << std::chrono::duration<double, std::milli>(ns).count();
  return s.str();
}

ordered_json report_json(const CongruenceReport& r, bool timing) {
  const auto& p = r.params;
  ordered_json params{{"p", opt_json(p.p)},         {"q", opt_json(p.q)}, {"alpha", opt_json(p.alpha)},
                      {"beta", opt_json(p.beta)},   {"r", opt_json(p.r)}, {"m", opt_json(p.m)},
                      {"n", opt_json(p.n)},
                      {"variant", p.variant.empty() ? ordered_json(nullptr) : ordered_json(p.variant)}};
  return ordered_json{
      {"statement", std::string(to_string(p.statement))},
      {"params", params},
      {"modulus", r.modulus.get_str()},
      {"lhs", r.lhs.value().get_str()},
      {"rhs", r.rhs.value().get_str()},
      {"intermediate", r.intermediate ? ordered_json(r.intermediate->value().get_str()) : ordered_json(nullptr)},
      {"pass", r.pass},
      {"method", to_string(r.method)},
      {"elapsed_ms", timing ? ordered_json(std::chrono::duration<double, std::milli>(r.elapsed).count())
                            : ordered_json(nullptr)},
  };
}

const std::vector<std::string> kCsvColumns{"statement", "p", "q", "alpha", "beta", "r", "m", "n",
                                           "variant", "modulus", "lhs", "rhs", "intermediate",
                                           "pass", "method", "elapsed_ms"};

std::vector<std::string> report_row(const CongruenceReport& r, bool timing) {
  const auto& p = r.params;
  return {std::string(to_string(p.statement)),
          opt_text(p.p), opt_text(p.q), opt_text(p.alpha), opt_text(p.beta), opt_text(p.r),
          opt_text(p.m), opt_text(p.n), p.variant,
          r.modulus.get_str(), r.lhs.value().get_str(), r.rhs.value().get_str(),
          r.intermediate ? r.intermediate->value().get_str() : "",
          r.pass ? "true" : "false", to_string(r.method), timing ? elapsed_text(r.elapsed) : ""};
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  const auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size(), ' ');
    }
    os << s << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string params_text(const StatementParams& p) {
  std::string s;
  const auto add = [&](const char* name, const std::optional<std::uint64_t>& v) {
    if (!v) return;
    if (!s.empty()) s += ' ';
    s += std::string(name) + "=" + std::to_string(*v);
  };
  add("p", p.p);
  add("q", p.q);
  add("alpha", p.alpha);
  add("beta", p.beta);
  add("r", p.r);
  add("m", p.m);
  add("n", p.n);
  if (!p.variant.empty()) s += (s.empty() ? "" : " ") + p.variant;
  return s;
}

void emit_reports(std::ostream& os, const std::vector<CongruenceReport>& reports, const Common& c) {
  const bool timing = !c.no_timing;
  switch (c.format) {
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(report_json(r, timing));
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : reports) rows.push_back(report_row(r, timing));
      write_csv(os, kCsvColumns, rows);
      break;
    }
    case Format::table: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : reports) {
        rows.push_back({std::string(to_string(r.params.statement)), params_text(r.params),
                        r.modulus.get_str(), r.lhs.value().get_str(), r.rhs.value().get_str(),
                        r.intermediate ? r.intermediate->value().get_str() : "-",
                        r.pass ? "PASS" : "FAIL", to_string(r.method),
                        timing ? elapsed_text(r.elapsed) : "-"});
      }
      write_table(os, {"statement", "params", "modulus", "lhs", "rhs", "intermediate", "result",
                       "method", "elapsed_ms"},
                  rows);
      break;
    }
  }
}

// Subcommands.

struct VerifyArgs {
  std::string statement;
  std::optional<std::uint64_t> p, q, alpha, beta, r, m, n;
  std::string variant;
};

struct ScanArgs {
  GridConfig grid;
  std::vector<std::string> statements;
  bool oracle_check = false;
};

struct ConjectureArgs {
  std::uint64_t n_max = 0;
  unsigned min_primes = 1;
  ConjectureFilters::Parity parity = ConjectureFilters::Parity::odd;
  bool oracle_check = false;
};

struct SumArgs {
  std::uint64_t n = 0;
  std::uint64_t radical = 1;
  SignVariant sign = SignVariant::plain;
  ParityFilter parity = ParityFilter::all;
  std::optional<std::uint64_t> mod;
  SumMethod method = SumMethod::bruteforce;
};

struct BernoulliArgs {
  unsigned long k = 0;
  std::optional<std::uint64_t> mod;
  bool exact = false;
};

StatementId require_statement(const std::string& name) {
  const auto id = parse_statement(name);
  if (!id) throw InvalidArgument("unknown statement '" + name + "'");
  return *id;
}

std::vector<StatementParams> verify_params(const VerifyArgs& a) {
  StatementParams base;
  base.statement = require_statement(a.statement);
  base.p = a.p;
  base.q = a.q;
  base.alpha = a.alpha;
  base.beta = a.beta;
  base.r = a.r;
  base.m = a.m;
  base.n = a.n;
  base.variant = a.variant;
  const auto variants = statement_variants(base.statement);
  std::vector<StatementParams> out;
  if (!a.variant.empty() || variants.empty()) {
    out.push_back(base);
  } else {
    for (auto v : variants) {
      base.variant = std::string(v);
      out.push_back(base);
    }
  }
  for (const auto& s : out) s.validate();
  return out;
}

int finish(const std::vector<CongruenceReport>& reports, const Common& c, std::ostream& out,
           std::ostream& err) {
  if (c.out_path.empty()) {
    emit_reports(out, reports, c);
  } else {
    std::ofstream file(c.out_path);
    if (!file) throw CapExceeded("cannot open " + c.out_path + " for writing");
    emit_reports(file, reports, c);
  }
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
  if (!c.quiet) err << reports.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? kPass : kFail;
}

int run_sum(const SumArgs& a, const Common& c, std::ostream& out) {
  TripleSumSpec spec{a.n, a.radical, a.sign, a.parity};
  spec.validate();
  EvalOptions eval;
  eval.threads = resolved_threads(c.threads);
  eval.caps = c.caps();

  std::string value;
  std::string modulus;
  std::uint64_t terms = 0;
  std::chrono::nanoseconds elapsed{};
  if (a.method == SumMethod::exact) {
    const auto r = triple_sum_exact(spec, eval.caps);
    terms = r.term_count;
    elapsed = r.elapsed;
    if (a.mod) {
      value = reduce_rational(r.value, BigInt(static_cast<unsigned long>(*a.mod))).value().get_str();
      modulus = std::to_string(*a.mod);
    } else {
      value = r.value.to_string();
    }
  } else {
    if (!a.mod) throw InvalidArgument("--mod is required unless --method exact");
    const BigInt m(static_cast<unsigned long>(*a.mod));
    SumResult r = [&] {
      if (a.method == SumMethod::bruteforce) return triple_sum_bruteforce(spec, m, eval);
      const auto factors = factorize(*a.mod);
      if (factors.size() != 1) throw InvalidArgument("--method fast needs a prime-power modulus");
      const auto p = factors.front().prime;
      std::vector<std::uint64_t> cofactors;
      for (auto q : distinct_primes(a.radical))
        if (q != p) cofactors.push_back(q);
      return triple_sum_fast(spec, PrimePower(BigInt(static_cast<unsigned long>(p)), factors.front().exponent),
                             cofactors, eval);
    }();
    value = r.residue.value().get_str();
    modulus = std::to_string(*a.mod);
    terms = r.term_count;
    elapsed = r.elapsed;
  }

  const bool timing = !c.no_timing;
  std::ostringstream os;
  switch (c.format) {
    case Format::json: {
      ordered_json j{{"n", a.n},
                     {"radical", a.radical},
                     {"sign", to_string(a.sign)},
                     {"parity", to_string(a.parity)},
                     {"modulus", modulus.empty() ? ordered_json(nullptr) : ordered_json(modulus)},
                     {"value", value},
                     {"term_count", terms},
                     {"method", to_string(a.method)},
                     {"elapsed_ms", timing ? ordered_json(std::chrono::duration<double, std::milli>(elapsed).count())
                                           : ordered_json(nullptr)}};
      os << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
    case Format::table: {
      const std::vector<std::string> header{"n", "radical", "sign", "parity", "modulus", "value",
                                            "term_count", "method", "elapsed_ms"};
      const std::vector<std::vector<std::string>> rows{
          {std::to_string(a.n), std::to_string(a.radical), to_string(a.sign), to_string(a.parity), modulus,
           value, std::to_string(terms), to_string(a.method), timing ? elapsed_text(elapsed) : ""}};
      if (c.format == Format::csv) write_csv(os, header, rows);
      else write_table(os, header, rows);
      break;
    }
  }
  if (c.out_path.empty()) {
    out << os.str();
  } else {
    std::ofstream file(c.out_path);
    if (!file) throw CapExceeded("cannot open " + c.out_path + " for writing");
    file << os.str();
  }
  return kPass;
}

int run_bernoulli(const BernoulliArgs& a, const Common& c, std::ostream& out) {
  std::string value;
  std::string modulus;
  std::string provenance;
  if (a.mod && !a.exact) {
    if (*a.mod < 3 || *a.mod % 2 == 0 || !is_squarefree(*a.mod)) {
      throw InvalidArgument("--mod must be an odd squarefree integer >= 3");
    }
    const auto primes = distinct_primes(*a.mod);
    const auto v = bernoulli_mod(a.k, primes);
    value = v.is_exact() ? v.exact().to_string() : v.residue().value().get_str();
    modulus = std::to_string(*a.mod);
    provenance = to_string(v.provenance);
  } else {
    value = bernoulli_exact(a.k, c.bernoulli_cap).to_string();
    provenance = to_string(BernoulliProvenance::recurrence);
  }

  std::ostringstream os;
  switch (c.format) {
    case Format::json:
      os << ordered_json{{"k", a.k},
                         {"modulus", modulus.empty() ? ordered_json(nullptr) : ordered_json(modulus)},
                         {"value", value},
                         {"provenance", provenance}}
                .dump(2)
         << '\n';
      break;
    case Format::csv:
    case Format::table: {
      const std::vector<std::string> header{"k", "modulus", "value", "provenance"};
      const std::vector<std::vector<std::string>> rows{{std::to_string(a.k), modulus, value, provenance}};
      if (c.format == Format::csv) write_csv(os, header, rows);
      else write_table(os, header, rows);
      break;
    }
  }
  if (c.out_path.empty()) {
    out << os.str();
  } else {
    std::ofstream file(c.out_path);
    if (!file) throw CapExceeded("cannot open " + c.out_path + " for writing");
    file << os.str();
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic-sum congruence verifier"};
  app.require_subcommand(1);
  Common common;

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "check one statement");
  verify_cmd->add_option("statement", va.statement, "statement id")->required();
  verify_cmd->add_option("--p", va.p);
  verify_cmd->add_option("--q", va.q);
  verify_cmd->add_option("--alpha", va.alpha);
  verify_cmd->add_option("--beta", va.beta);
  verify_cmd->add_option("--r", va.r);
  verify_cmd->add_option("--m", va.m);
  verify_cmd->add_option("--n", va.n);
  verify_cmd->add_option("--variant", va.variant, "omit to check every variant");
  bool verify_oracle = false;
  verify_cmd->add_flag("--oracle-check", verify_oracle);
  add_common(*verify_cmd, common);

  ScanArgs sa;
  auto* scan_cmd = app.add_subcommand("scan", "check a parameter grid");
  scan_cmd->add_option("--primes", sa.grid.primes)->delimiter(',');
  scan_cmd->add_option("--max-exponent", sa.grid.max_exponent);
  scan_cmd->add_option("--max-size", sa.grid.max_size);
  scan_cmd->add_option("--eq1-max-prime", sa.grid.eq1_max_prime);
  scan_cmd->add_option("--eq2-max-power", sa.grid.eq2_max_power);
  scan_cmd->add_option("--xia-cai-max-prime", sa.grid.xia_cai_max_prime);
  scan_cmd->add_option("--zhao2-max-power", sa.grid.zhao2_max_power);
  scan_cmd->add_option("--zhao4-max-power", sa.grid.zhao4_max_power);
  scan_cmd->add_option("--lemma1-multipliers", sa.grid.lemma1_multipliers)->delimiter(',');
  scan_cmd->add_option("--statements", sa.statements, "comma-separated statement ids")->delimiter(',');
  scan_cmd->add_flag("--oracle-check", sa.oracle_check, "recompute fast sums by brute force");
  add_common(*scan_cmd, common);

  ConjectureArgs ca;
  auto* conj_cmd = app.add_subcommand("conjecture", "scan the open conjecture");
  conj_cmd->add_option("--n-max", ca.n_max)->required();
  conj_cmd->add_option("--min-primes", ca.min_primes, "minimum number of distinct prime factors of n");
  const std::map<std::string, ConjectureFilters::Parity> parities{
      {"odd", ConjectureFilters::Parity::odd},
      {"even", ConjectureFilters::Parity::even},
      {"all", ConjectureFilters::Parity::all}};
  conj_cmd->add_option("--parity", ca.parity, "odd, even or all")
      ->transform(CLI::CheckedTransformer(parities, CLI::ignore_case));
  conj_cmd->add_flag("--oracle-check", ca.oracle_check);
  add_common(*conj_cmd, common);

  SumArgs suma;
  auto* sum_cmd = app.add_subcommand("sum", "evaluate one triple sum");
  sum_cmd->add_option("--n", suma.n)->required();
  sum_cmd->add_option("--radical", suma.radical);
  const std::map<std::string, SignVariant> signs{{"plain", SignVariant::plain},
                                                 {"alt_first", SignVariant::alt_first}};
  sum_cmd->add_option("--sign", suma.sign)->transform(CLI::CheckedTransformer(signs, CLI::ignore_case));
  const std::map<std::string, ParityFilter> filters{{"all", ParityFilter::all},
                                                    {"all_odd", ParityFilter::all_odd},
                                                    {"all_even", ParityFilter::all_even},
                                                    {"exactly_one_even", ParityFilter::exactly_one_even},
                                                    {"exactly_one_odd", ParityFilter::exactly_one_odd}};
  sum_cmd->add_option("--parity", suma.parity)->transform(CLI::CheckedTransformer(filters, CLI::ignore_case));
  sum_cmd->add_option("--mod", suma.mod);
  const std::map<std::string, SumMethod> methods{
      {"brute", SumMethod::bruteforce}, {"fast", SumMethod::fast}, {"exact", SumMethod::exact}};
  sum_cmd->add_option("--method", suma.method, "brute, fast or exact")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  add_common(*sum_cmd, common);

  BernoulliArgs ba;
  auto* bern_cmd = app.add_subcommand("bernoulli", "Bernoulli number B_k");
  bern_cmd->add_option("--k", ba.k)->required();
  auto* mod_opt = bern_cmd->add_option("--mod", ba.mod, "odd squarefree modulus");
  bern_cmd->add_flag("--exact", ba.exact)->excludes(mod_opt);
  add_common(*bern_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*verify_cmd) {
      const auto params = verify_params(va);
      return finish(verify_all(params, verify_options(common, verify_oracle), resolved_threads(common.threads)),
                    common, out, err);
    }
    if (*scan_cmd) {
      for (const auto& name : sa.statements) sa.grid.statements.push_back(require_statement(name));
      const auto params = grid_params(sa.grid);
      if (!common.quiet) err << "scanning " << params.size() << " parameter sets\n";
      return finish(verify_all(params, verify_options(common, sa.oracle_check), resolved_threads(common.threads)),
                    common, out, err);
    }
    if (*conj_cmd) {
      ConjectureFilters filters{ca.min_primes, ca.parity};
      return finish(conjecture_scan(ca.n_max, filters, verify_options(common, ca.oracle_check),
                                    resolved_threads(common.threads)),
                    common, out, err);
    }
    if (*sum_cmd) return run_sum(suma, common, out);
    if (*bern_cmd) return run_bernoulli(ba, common, out);
  } catch (const RouteMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kResource;
  } catch (const std::exception& e) {
    // Invalid parameters, poles, non-invertible inputs.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hsum::cli
