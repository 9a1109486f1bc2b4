#include "cfsurd/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cfsurd/analyzer.hpp"
#include "cfsurd/cf.hpp"
#include "cfsurd/chebyshev.hpp"
#include "cfsurd/convergents.hpp"
#include "cfsurd/families.hpp"
#include "cfsurd/miner.hpp"
#include "cfsurd/sequences.hpp"
#include "json.hpp"

namespace cfsurd {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

Json jint(const Int& v) {
  if (fits_i64(v)) return to_i64(v);
  return v.get_str();
}

Json jword(const std::vector<Int>& w) {
  Json a = Json::array();
  for (const Int& v : w) a.push_back(jint(v));
  return a;
}

std::string csv_word(const std::vector<Int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i].get_str();
  }
  return s;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

Int usage_int(const std::string& text, const std::string& what) {
  try {
    return parse_int(text);
  } catch (const DomainError&) {
    throw UsageError("malformed " + what + " '" + text + "'");
  }
}

std::vector<Int> usage_word(const std::string& text, const std::string& what) {
  std::vector<Int> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(usage_int(item, what));
  }
  return out;
}

// "a0;p1,p2,..." with optional surrounding brackets.
std::pair<Int, std::vector<Int>> usage_cf(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == '[' || c == ']'; }), text.end());
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw UsageError("expected 'a0;p1,p2,...', got '" + text + "'");
  return {usage_int(text.substr(0, semi), "integer part"), usage_word(text.substr(semi + 1), "period")};
}

Json cf_json(const PeriodicCF& cf) {
  Json j;
  j["d"] = jint(cf.d);
  j["a0"] = jint(cf.a0);
  j["period"] = jword(cf.period);
  j["length"] = cf.period.size();
  return j;
}

Json bindings_json(const Bindings& b) {
  Json j = Json::object();
  for (const auto& [k, v] : b) j[k] = jint(v);
  return j;
}

Json report_json(const VerifyReport& r) {
  Json j;
  j["id"] = r.id;
  j["status"] = to_string(r.status);
  j["declared"] = to_string(r.declared);
  j["tested"] = r.tested;
  j["reduced"] = r.reduced;
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    Json fj;
    fj["params"] = bindings_json(f.params);
    fj["reason"] = f.reason;
    fj["expected"] = f.expected ? Json(to_string(*f.expected)) : Json(nullptr);
    fj["actual"] = f.actual ? Json(to_string(*f.actual)) : Json(nullptr);
    fails.push_back(std::move(fj));
  }
  j["failures"] = std::move(fails);
  return j;
}

Json mined_json(const std::vector<Int>& word, const std::optional<MinedFamily>& f) {
  Json j;
  j["palindrome"] = jword(word);
  j["found"] = f.has_value();
  if (f) {
    j["a_modulus"] = jint(f->a_modulus);
    j["a_residue"] = jint(f->a_residue);
    j["b_slope"] = jint(f->b_slope);
    j["b_intercept"] = jint(f->b_intercept);
    j["min_c"] = jint(f->min_c);
    j["verified_instances"] = f->verified_instances;
  }
  return j;
}

Json analyze_json(const StructReport& r) {
  Json j;
  j["d_min"] = r.d_min;
  j["d_max"] = r.d_max;
  j["tested"] = r.tested;
  j["skipped"] = r.skipped;
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json cj;
    cj["id"] = c.id;
    cj["kind"] = c.kind == ClaimKind::Theorem ? "theorem" : "proposition";
    cj["tested"] = c.tested;
    cj["status"] = to_string(c.status());
    Json ce = Json::array();
    for (const auto& x : c.counterexamples) ce.push_back(Json{{"d", jint(x.d)}, {"detail", x.detail}});
    cj["counterexamples"] = std::move(ce);
    claims.push_back(std::move(cj));
  }
  j["claims"] = std::move(claims);
  Json hist = Json::object();
  for (const auto& [len, n] : r.histogram) hist[std::to_string(len)] = n;
  j["histogram"] = std::move(hist);
  Json un = Json::array();
  for (const Int& d : r.unclassified) un.push_back(jint(d));
  j["unclassified"] = std::move(un);
  return j;
}

void add_format(CLI::App* cmd, Format& fmt) {
  cmd->add_option("--format", fmt, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}}));
}

struct Options {
  Format format = Format::Json;
  unsigned jobs = 1;
  std::string registry_path;

  std::string d_text;

  std::string surd_P, surd_Q, surd_d, surd_cf;
  long max_steps = kDefaultMaxSteps;

  std::string conv_d, conv_word;
  long conv_count = 10;

  std::vector<std::string> ids;
  bool all = false;
  std::optional<long> n_max, m_max, k_max;
  bool list = false;

  std::string pattern;
  bool sweep = false;
  long max_len = 3, max_entry = 3;

  long from = 2, to = 1000;

  std::string seq_name;
  long seq_m = 1, seq_count = 10, seq_start = 0;
};

int cmd_expand(const Options& o, std::ostream& out) {
  const Int d = usage_int(o.d_text, "d");
  if (d < 2) throw UsageError("d must be > 1");
  if (is_square(d)) throw DomainError(d.get_str() + " is a perfect square");
  const PeriodicCF cf = expand_sqrt(d);
  switch (o.format) {
    case Format::Json: emit(out, cf_json(cf)); break;
    case Format::Csv: out << "d,a0,length,period\n" << d << ',' << cf.a0 << ',' << cf.period.size() << ','
                          << csv_word(cf.period) << '\n'; break;
    case Format::Text: out << "sqrt(" << d << ") = " << to_string(cf) << "  (period " << cf.period.size() << ")\n"; break;
  }
  return kExitOk;
}

int cmd_surd(const Options& o, std::ostream& out) {
  if (!o.surd_cf.empty()) {
    const auto [a0, period] = usage_cf(o.surd_cf);
    const QuadSolution q = surd_from_periodic_cf(a0, period);
    Json j;
    j["cf"] = to_string(PeriodicCF{a0, period, 0});
    j["P"] = jint(q.root_num_P);
    j["Q"] = jint(q.root_den_Q);
    j["d"] = jint(q.d);
    j["quadratic"] = Json::array({jint(q.A2), jint(q.A1), jint(q.A0)});
    j["tail"] = Json{{"P", jint(q.tail_P)}, {"Q", jint(q.tail_Q)}, {"d", jint(q.tail_d)}};
    if (o.format == Format::Json) {
      emit(out, j);
    } else if (o.format == Format::Csv) {
      out << "P,Q,d\n" << q.root_num_P << ',' << q.root_den_Q << ',' << q.d << '\n';
    } else {
      out << "(" << q.root_num_P << " + sqrt(" << q.d << ")) / " << q.root_den_Q << '\n';
    }
    return kExitOk;
  }
  if (o.surd_P.empty() || o.surd_Q.empty() || o.surd_d.empty()) {
    throw UsageError("surd needs P Q d or --cf");
  }
  const SurdState s{usage_int(o.surd_P, "P"), usage_int(o.surd_Q, "Q"), usage_int(o.surd_d, "d")};
  const SurdExpansion e = expand_surd(s, o.max_steps);
  if (o.format == Format::Json) {
    Json j;
    j["P"] = jint(s.P);
    j["Q"] = jint(s.Q);
    j["d"] = jint(s.d);
    j["preperiod"] = jword(e.preperiod);
    j["period"] = jword(e.period);
    emit(out, j);
  } else if (o.format == Format::Csv) {
    out << "P,Q,d,preperiod,period\n" << s.P << ',' << s.Q << ',' << s.d << ',' << csv_word(e.preperiod) << ','
        << csv_word(e.period) << '\n';
  } else {
    out << "[" << csv_word(e.preperiod) << "; (" << csv_word(e.period) << ")]\n";
  }
  return kExitOk;
}

int cmd_convergents(const Options& o, std::ostream& out) {
  std::vector<Int> word;
  if (!o.conv_word.empty()) {
    word = usage_word(o.conv_word, "word");
  } else if (!o.conv_d.empty()) {
    const Int d = usage_int(o.conv_d, "d");
    if (d < 2) throw UsageError("d must be > 1");
    if (is_square(d)) throw DomainError(d.get_str() + " is a perfect square");
    if (o.conv_count < 1) throw UsageError("--count must be positive");
    const PeriodicCF cf = expand_sqrt(d);
    word.push_back(cf.a0);
    for (long i = 1; i < o.conv_count; ++i) word.push_back(cf.period[static_cast<std::size_t>(i - 1) % cf.period.size()]);
  } else {
    throw UsageError("convergents needs d or --word");
  }
  const auto cs = convergents_of_word(word);
  if (o.format == Format::Csv) out << "index,p,q\n";
  for (const auto& c : cs) {
    if (o.format == Format::Json) {
      emit(out, Json{{"index", c.index}, {"p", jint(c.p)}, {"q", jint(c.q)}});
    } else if (o.format == Format::Csv) {
      out << c.index << ',' << c.p << ',' << c.q << '\n';
    } else {
      out << "c_" << c.index << " = " << c.p << '/' << c.q << '\n';
    }
  }
  return kExitOk;
}

std::vector<FamilyDescriptor> load(const Options& o) {
  return load_registry(o.registry_path.empty() ? default_registry_path() : o.registry_path);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto reg = load(o);
  std::vector<const FamilyDescriptor*> chosen;
  if (o.all || o.ids.empty()) {
    if (!o.all && !o.list) throw UsageError("verify-families needs --id or --all");
    for (const auto& f : reg) chosen.push_back(&f);
  } else {
    for (const auto& id : o.ids) {
      const FamilyDescriptor* f = find_family(reg, id);
      if (!f) throw UsageError("unknown family id '" + id + "'");
      chosen.push_back(f);
    }
  }
  if (o.list) {
    if (o.format == Format::Csv) out << "id,status,citation\n";
    for (const auto* f : chosen) {
      if (o.format == Format::Json) {
        Json j;
        j["id"] = f->id;
        j["citation"] = f->citation;
        j["status"] = to_string(f->declared);
        Json params = Json::array();
        for (const auto& p : f->params) {
          params.push_back(Json{{"name", p.name}, {"min", p.min}, {"max", p.max ? Json(*p.max) : Json(nullptr)}});
        }
        j["params"] = std::move(params);
        j["a"] = f->a_expr.source();
        j["b"] = f->b_expr.source();
        j["head"] = f->head_expr.source();
        j["pattern"] = f->pattern.source();
        emit(out, j);
      } else if (o.format == Format::Csv) {
        out << f->id << ',' << to_string(f->declared) << ",\"" << f->citation << "\"\n";
      } else {
        out << f->id << "  sqrt((" << f->a_expr.source() << ")^2 + " << f->b_expr.source() << ") = ["
            << f->head_expr.source() << "; " << f->pattern.source() << "]\n";
      }
    }
    return kExitOk;
  }

  VerifyBudget budget;
  budget.jobs = o.jobs;
  budget.n_max = o.n_max;
  if (o.m_max) budget.m_max = *o.m_max;
  if (o.k_max) budget.k_max = *o.k_max;
  bool ok = true;
  if (o.format == Format::Csv) out << "id,status,declared,tested,reduced,failures\n";
  for (const auto* f : chosen) {
    const VerifyReport r = verify_family(*f, budget);
    if (r.declared == FamilyStatus::Verified && r.status != FamilyStatus::Verified) ok = false;
    if (o.format == Format::Json) {
      emit(out, report_json(r));
    } else if (o.format == Format::Csv) {
      out << r.id << ',' << to_string(r.status) << ',' << to_string(r.declared) << ',' << r.tested << ','
          << r.reduced << ',' << r.failures.size() << '\n';
    } else {
      out << r.id << ": " << to_string(r.status) << " (" << r.tested << " tested, " << r.failures.size()
          << " failed" << (r.as_declared() ? "" : ", NOT AS DECLARED") << ")\n";
    }
  }
  return ok ? kExitOk : kExitDomain;
}

int cmd_mine(const Options& o, std::ostream& out) {
  std::vector<std::pair<std::vector<Int>, std::optional<MinedFamily>>> results;
  if (o.sweep) {
    if (o.max_len < 0 || o.max_entry < 1) throw UsageError("--max-len must be >= 0 and --max-entry >= 1");
    for (auto& f : mine_sweep(o.max_len, o.max_entry, o.jobs)) {
      auto word = f.palindrome;
      results.emplace_back(std::move(word), std::move(f));
    }
  } else {
    const auto word = usage_word(o.pattern, "pattern");
    if (!is_palindrome(word)) throw UsageError(format_word(word) + " is not a palindrome");
    for (const Int& q : word) {
      if (q < 1) throw UsageError("pattern entries must be >= 1");
    }
    results.emplace_back(word, mine(word));
  }
  if (o.format == Format::Csv) out << "palindrome,found,a_modulus,a_residue,b_slope,b_intercept,min_c\n";
  for (const auto& [word, f] : results) {
    if (o.format == Format::Json) {
      emit(out, mined_json(word, f));
    } else if (o.format == Format::Csv) {
      out << csv_word(word) << ',' << (f ? "true" : "false");
      if (f) out << ',' << f->a_modulus << ',' << f->a_residue << ',' << f->b_slope << ',' << f->b_intercept << ','
                 << f->min_c;
      else out << ",,,,,";
      out << '\n';
    } else if (f) {
      out << format_word(word) << ": a = " << f->a_modulus << "c + " << f->a_residue << ", b = " << f->b_slope
          << "c + " << f->b_intercept << ", c >= " << f->min_c << '\n';
    } else {
      out << format_word(word) << ": none\n";
    }
  }
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  if (o.from < 1 || o.from > o.to) throw UsageError("need 1 <= --from <= --to");
  const StructReport r = check_claims(o.from, o.to, o.jobs);
  if (o.format == Format::Json) {
    emit(out, analyze_json(r));
  } else if (o.format == Format::Csv) {
    out << "period_length,count\n";
    for (const auto& [len, n] : r.histogram) out << len << ',' << n << '\n';
  } else {
    out << "range [" << r.d_min << ", " << r.d_max << "]: " << r.tested << " tested, " << r.skipped
        << " squares skipped\n";
    for (const auto& c : r.claims) {
      out << "  " << c.id << ": " << to_string(c.status()) << ", " << c.tested << " tested, "
          << c.counterexamples.size() << " counterexamples\n";
    }
  }
  return kExitOk;
}

int cmd_sequences(const Options& o, std::ostream& out) {
  if (o.seq_count < 0) throw UsageError("--count must be >= 0");
  const std::string& name = o.seq_name;
  const long m = o.seq_m;
  using PairFn = std::function<IntPair(long)>;
  std::map<std::string, PairFn> pairs = {
      {"pell", [](long k) { return pell_pair(k); }},
      {"sqrt3", [](long k) { return sqrt3_convergent(k); }},
      {"ab", [](long k) { return ab_pair(k); }},
      {"triple113", [](long k) { return triple113_pair(k); }},
      {"even", [m](long k) { return interleaved_even_pair(m, k); }},
      {"odd-short", [m](long k) { return odd_family_short(m, k); }},
      {"odd-full", [m](long k) { return odd_family_full(m, k); }},
  };
  std::map<std::string, std::function<Int(long)>> scalars = {
      {"fibonacci", [](long n) { return fibonacci(n); }},
      {"m2m", [m](long j) { return pair_m2m_denominator(m, j); }},
      {"odd-recurrence", [m](long n) { return linrec_nth(odd_quotient_recurrence(m), n); }},
  };
  std::map<std::string, std::function<Poly(long)>> polys = {
      {"cheb-u", [](long n) { return cheb_u(n); }},
      {"cheb-u-prime", [](long n) { return cheb_u_prime(n); }},
  };
  const bool known = pairs.count(name) || scalars.count(name) || polys.count(name);
  if (!known) throw UsageError("unknown sequence '" + name + "'");

  if (o.format == Format::Csv) {
    out << (pairs.count(name) ? "index,p,q\n" : polys.count(name) ? "index,coeffs\n" : "index,value\n");
  }
  for (long i = o.seq_start; i < o.seq_start + o.seq_count; ++i) {
    if (auto it = pairs.find(name); it != pairs.end()) {
      const IntPair v = it->second(i);
      if (o.format == Format::Json) emit(out, Json{{"index", i}, {"p", jint(v.p)}, {"q", jint(v.q)}});
      else if (o.format == Format::Csv) out << i << ',' << v.p << ',' << v.q << '\n';
      else out << i << ": " << v.p << '/' << v.q << '\n';
    } else if (auto sit = scalars.find(name); sit != scalars.end()) {
      const Int v = sit->second(i);
      if (o.format == Format::Json) emit(out, Json{{"index", i}, {"value", jint(v)}});
      else if (o.format == Format::Csv) out << i << ',' << v << '\n';
      else out << i << ": " << v << '\n';
    } else {
      const Poly p = polys.at(name)(i);
      if (o.format == Format::Json) emit(out, Json{{"index", i}, {"coeffs", jword(p.coeffs)}, {"poly", to_string(p)}});
      else if (o.format == Format::Csv) out << i << ',' << csv_word(p.coeffs) << '\n';
      else out << "U_" << i << " = " << to_string(p) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions of quadratic surds and their formula families", "cfsurd"};
  app.require_subcommand(1, 1);
  Options o;

  auto* expand = app.add_subcommand("expand", "Continued fraction of sqrt(d)");
  expand->add_option("d", o.d_text, "Radicand")->required();
  add_format(expand, o.format);

  auto* surd = app.add_subcommand("surd", "Expand (P + sqrt d)/Q, or recover the surd of a periodic expansion");
  surd->add_option("P", o.surd_P);
  surd->add_option("Q", o.surd_Q);
  surd->add_option("d", o.surd_d);
  surd->add_option("--cf", o.surd_cf, "Periodic expansion 'a0;p1,p2,...'");
  surd->add_option("--max-steps", o.max_steps)->check(CLI::PositiveNumber);
  add_format(surd, o.format);

  auto* conv = app.add_subcommand("convergents", "Convergents of sqrt(d) or of an explicit word");
  conv->add_option("d", o.conv_d);
  conv->add_option("--word", o.conv_word, "Comma-separated partial quotients a0,a1,...");
  conv->add_option("--count", o.conv_count, "Number of convergents for sqrt(d)");
  add_format(conv, o.format);

  auto* verify = app.add_subcommand("verify-families", "Check registry families against the expansion engine");
  verify->add_option("--id", o.ids, "Family id (repeatable)");
  verify->add_flag("--all", o.all, "Every registry family");
  verify->add_flag("--list", o.list, "List families instead of verifying");
  verify->add_option("--n-max", o.n_max, "Largest n tested (default n_min + 100)")->check(CLI::NonNegativeNumber);
  verify->add_option("--m-max", o.m_max, "Largest m tested")->check(CLI::PositiveNumber);
  verify->add_option("--k-max", o.k_max, "Largest k tested")->check(CLI::PositiveNumber);
  verify->add_option("--registry", o.registry_path, "Registry file (overrides CFSURD_REGISTRY)");
  verify->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  add_format(verify, o.format);

  auto* mine_cmd = app.add_subcommand("mine", "Derive the family for a palindromic word");
  auto* pat = mine_cmd->add_option("--pattern", o.pattern, "Comma-separated palindrome (empty for none)");
  auto* sw = mine_cmd->add_flag("--sweep", o.sweep, "Mine every palindrome within the bounds");
  pat->excludes(sw);
  mine_cmd->add_option("--max-len", o.max_len)->check(CLI::NonNegativeNumber);
  mine_cmd->add_option("--max-entry", o.max_entry)->check(CLI::PositiveNumber);
  mine_cmd->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  add_format(mine_cmd, o.format);

  auto* analyze = app.add_subcommand("analyze", "Check structural claims over a range of d");
  analyze->add_option("--from", o.from);
  analyze->add_option("--to", o.to);
  analyze->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  add_format(analyze, o.format);

  auto* seq = app.add_subcommand("sequences", "Print a named sequence");
  seq->add_option("name", o.seq_name,
                  "fibonacci, pell, sqrt3, ab, triple113, even, m2m, odd-short, odd-full, odd-recurrence, "
                  "cheb-u, cheb-u-prime")
      ->required();
  seq->add_option("--m", o.seq_m, "Parameter m for the m-indexed sequences");
  seq->add_option("--count", o.seq_count);
  seq->add_option("--start", o.seq_start);
  add_format(seq, o.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (expand->parsed()) return cmd_expand(o, out);
    if (surd->parsed()) return cmd_surd(o, out);
    if (conv->parsed()) return cmd_convergents(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (mine_cmd->parsed()) {
      if (!o.sweep && mine_cmd->count("--pattern") == 0) throw UsageError("mine needs --pattern or --sweep");
      return cmd_mine(o, out);
    }
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (seq->parsed()) return cmd_sequences(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace cfsurd
