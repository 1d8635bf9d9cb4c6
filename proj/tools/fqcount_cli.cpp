// fqcount command-line front end. Talks to the library only through fqcount.h.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqcount/fqcount.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// Usage and precondition failures: reported on stderr, exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(fqc_status s) {
  if (s != FQC_OK) throw UsageError(std::string(fqc_status_name(s)) + ": " + fqc_last_error());
}

struct FieldDeleter {
  void operator()(fqc_field* f) const { fqc_field_destroy(f); }
};
struct ExtDeleter {
  void operator()(fqc_extension* e) const { fqc_extension_destroy(e); }
};
using FieldPtr = std::unique_ptr<fqc_field, FieldDeleter>;
using ExtPtr = std::unique_ptr<fqc_extension, ExtDeleter>;

FieldPtr make_field(std::uint64_t p, unsigned k) {
  fqc_field* f = nullptr;
  check(fqc_field_create(p, k, &f));
  return FieldPtr(f);
}

ExtPtr make_extension(const fqc_field* f, unsigned n) {
  fqc_extension* e = nullptr;
  check(fqc_extension_create(f, n, &e));
  return ExtPtr(e);
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("malformed " + what + ": '" + s + "'");
  return v;
}

// A coefficient token is an integer (read in the prime subfield) or @code for
// an arbitrary element of F_{p^k} given by its code.
std::uint64_t parse_elem(const fqc_field* f, const std::string& tok) {
  if (!tok.empty() && tok[0] == '@') {
    const auto code = parse_int(tok.substr(1), "element code");
    if (code < 0 || static_cast<std::uint64_t>(code) >= fqc_field_size(f))
      throw UsageError("element code out of range: " + tok);
    return static_cast<std::uint64_t>(code);
  }
  return fqc_field_from_int(f, parse_int(tok, "coefficient"));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

struct Output {
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw UsageError("cannot write " + path);
    os << text;
  }
  void emit(const json& j) const { emit(j.dump(2) + "\n"); }
};

fqc_family resolve_family(const std::string& name, unsigned curve) {
  if (name == "quartic-pair") return curve == 2 ? FQC_QUARTIC_PAIR_C2 : FQC_QUARTIC_PAIR_C1;
  fqc_family fam{};
  if (fqc_family_from_name(name.c_str(), &fam) != FQC_OK) throw UsageError("unknown family '" + name + "'");
  return fam;
}

// ---------------------------------------------------------------- trace

struct TraceArgs {
  std::uint64_t p = 0;
  unsigned k = 1, n = 1;
  std::string A, B, C;
  std::string method = "auto";
};

int run_trace(const TraceArgs& a, const Output& out) {
  const auto F = make_field(a.p, a.k);
  const std::uint64_t A = parse_elem(F.get(), a.A), B = parse_elem(F.get(), a.B), C = parse_elem(F.get(), a.C);
  fqc_method m = FQC_METHOD_AUTO;
  if (a.method == "naive")
    m = FQC_METHOD_NAIVE;
  else if (a.method == "congruence")
    m = FQC_METHOD_CONGRUENCE;

  fqc_trace_result r{};
  const fqc_status s = fqc_trace(F.get(), A, B, C, m, &r);
  if (s == FQC_PRECONDITION) throw UsageError(std::string("not an elliptic curve: ") + fqc_last_error());
  check(s);

  json j;
  j["command"] = "trace";
  j["params"] = {{"p", a.p}, {"k", a.k}, {"n", a.n}, {"A", a.A}, {"B", a.B}, {"C", a.C}, {"method", a.method}};
  j["provenance"] = a.method == "naive" ? "enumeration" : a.method == "congruence" ? "congruence" : "auto";
  json results = json::array();
  if (!r.resolved) {
    json row{{"n", 1}, {"residue", r.residue}, {"resolved", false},
             {"note", "residue only: the congruence pins down the trace only over prime fields with p >= 17"}};
    results.push_back(row);
  } else {
    char omega[128];
    check(fqc_omega_string(r.q, r.trace, omega, sizeof omega));
    for (unsigned m2 = 1; m2 <= a.n; ++m2) {
      std::int64_t sn = 0;
      check(fqc_s_n(r.q, r.trace, m2, &sn));
      std::int64_t qn = 1;
      for (unsigned i = 0; i < m2; ++i) qn *= static_cast<std::int64_t>(r.q);
      json row{{"n", m2}, {"N", qn + 1 - sn}, {"trace", sn}};
      if (m2 == 1) {
        if (r.has_residue) row["residue"] = r.residue;
        row["resolved"] = true;
        row["omega"] = omega;
      }
      results.push_back(row);
    }
  }
  j["results"] = results;
  j["checked"] = false;
  j["match"] = nullptr;
  out.emit(j);
  return 0;
}

// ---------------------------------------------------------------- count

struct CountArgs {
  std::string family;
  std::string coeffs;
  std::uint64_t p = 0;
  unsigned k = 1, n = 1, i = 2, curve = 1;
  bool check = false;
  std::uint64_t budget = 0;
};

struct SpecHolder {
  std::vector<std::uint64_t> codes;
  fqc_family_spec spec{};
};

SpecHolder build_spec(fqc_family fam, std::vector<std::uint64_t> codes, unsigned i, unsigned curve) {
  SpecHolder h;
  h.codes = std::move(codes);
  h.spec.family = fam;
  h.spec.coeffs = h.codes.data();
  h.spec.ncoeffs = h.codes.size();
  h.spec.order = i;
  h.spec.curve = curve;
  return h;
}

int run_count(const CountArgs& a, const Output& out) {
  const fqc_family fam = resolve_family(a.family, a.curve);
  const auto F = make_field(a.p, a.k);
  std::vector<std::uint64_t> codes;
  for (const auto& t : split(a.coeffs, ',')) codes.push_back(parse_elem(F.get(), t));
  if (codes.size() != fqc_family_arity(fam))
    throw UsageError(std::string(fqc_family_name(fam)) + " takes " + std::to_string(fqc_family_arity(fam)) +
                     " coefficients, got " + std::to_string(codes.size()));
  const auto E = make_extension(F.get(), a.n);
  const SpecHolder h = build_spec(fam, std::move(codes), a.i, a.curve);
  check(fqc_family_check(E.get(), &h.spec));

  std::int64_t closed = 0;
  check(fqc_count_closed(E.get(), &h.spec, &closed));
  json j;
  j["command"] = "count";
  j["params"] = {{"family", fqc_family_name(fam)}, {"coeffs", a.coeffs}, {"p", a.p}, {"k", a.k}, {"n", a.n}};
  if (fam == FQC_QUARTIC_PAIR_C1 || fam == FQC_QUARTIC_PAIR_C2) j["params"]["i"] = a.i;
  if (fam == FQC_Y3_LINEAR_QUAD) j["params"]["curve"] = a.curve;
  json row{{"n", a.n}, {"N", closed}};
  bool match = true;
  if (a.check) {
    std::int64_t oracle = 0;
    check(fqc_count_oracle(E.get(), &h.spec, a.budget, &oracle));
    row["oracle"] = oracle;
    row["difference"] = closed - oracle;
    match = closed == oracle;
  }
  j["provenance"] = a.check ? "both" : "closed-form";
  j["results"] = json::array({row});
  j["checked"] = a.check;
  j["match"] = a.check ? json(match) : json(nullptr);
  out.emit(j);
  return match ? 0 : kExitMismatch;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  unsigned degree = 3;
  std::uint64_t p = 0;
  unsigned k = 1, n = 1;
  std::string a = "1", b = "1", c = "1";
  bool certify = false, experimental = false;
  std::uint64_t budget = 0;
};

int run_classify(const ClassifyArgs& a, const Output& out) {
  const auto F = make_field(a.p, a.k);
  const std::uint64_t abc[3] = {parse_elem(F.get(), a.a), parse_elem(F.get(), a.b), parse_elem(F.get(), a.c)};
  json j;
  j["command"] = "classify";
  j["params"] = {{"degree", a.degree}, {"p", a.p}, {"k", a.k}, {"n", a.n},
                 {"a", a.a},           {"b", a.b}, {"c", a.c}};
  json row{{"n", a.n}, {"field", "F_" + std::to_string(a.p) + "^" + std::to_string(2 * a.n * a.k)}};
  bool match = true;
  bool have_verdict = false;
  fqc_verdict v = FQC_NEITHER;
  if (a.k == 1) {
    check(fqc_classify(F.get(), a.degree, abc, a.n, &v));
    row["verdict"] = fqc_verdict_name(v);
    have_verdict = true;
  } else if (!a.certify || !a.experimental) {
    throw UsageError("classification needs a prime base field; use --certify --experimental to count over F_{p^k}");
  }
  if (a.certify) {
    fqc_certificate cert{};
    check(fqc_certify(F.get(), a.degree, abc, a.n, a.experimental ? 1 : 0, a.budget, &cert));
    row["N"] = cert.count;
    row["hasse_weil"] = {cert.lo, cert.hi};
    row["certified"] = fqc_verdict_name(cert.verdict);
    if (!have_verdict) row["verdict"] = fqc_verdict_name(cert.verdict);
    if (cert.experimental) row["experimental"] = true;
    match = !have_verdict || cert.verdict == v;
  }
  j["provenance"] = a.certify ? (have_verdict ? "both" : "oracle") : "closed-form";
  j["results"] = json::array({row});
  j["checked"] = a.certify;
  j["match"] = a.certify ? json(match) : json(nullptr);
  out.emit(j);
  return match ? 0 : kExitMismatch;
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::string family;
  std::uint64_t p = 0;
  unsigned k = 1, n_max = 1, i = 2, curve = 1;
  std::string sweep;
  std::string format = "json";
  std::uint64_t budget = 0;
};

struct Range {
  std::int64_t lo, hi;
};

std::vector<Range> parse_sweep(const std::string& text, std::size_t arity) {
  std::vector<Range> out;
  for (const auto& part : split(text, ',')) {
    const auto ends = split(part, ':');
    if (ends.size() == 1) {
      const auto v = parse_int(ends[0], "sweep range");
      out.push_back({v, v});
    } else if (ends.size() == 2) {
      out.push_back({parse_int(ends[0], "sweep range"), parse_int(ends[1], "sweep range")});
    } else {
      throw UsageError("malformed sweep range: '" + part + "'");
    }
  }
  if (out.size() != arity)
    throw UsageError("sweep needs " + std::to_string(arity) + " ranges, got " + std::to_string(out.size()));
  return out;
}

int run_table(const TableArgs& a, const Output& out) {
  const fqc_family fam = resolve_family(a.family, a.curve);
  const auto F = make_field(a.p, a.k);
  const std::size_t ar = fqc_family_arity(fam);
  const bool by_code = a.sweep.empty();
  std::vector<Range> ranges;
  if (by_code) {
    ranges.assign(ar, Range{0, static_cast<std::int64_t>(fqc_field_size(F.get())) - 1});
  } else {
    ranges = parse_sweep(a.sweep, ar);
  }
  if (a.n_max == 0) throw UsageError("--n-max must be at least 1");
  std::vector<ExtPtr> exts;
  for (unsigned n = 1; n <= a.n_max; ++n) exts.push_back(make_extension(F.get(), n));

  bool empty = false;
  for (const auto& r : ranges) empty = empty || r.lo > r.hi;

  json rows = json::array();
  std::ostringstream csv;
  csv << "coeffs,n,N,oracle,match\n";
  bool all_match = true;
  std::size_t skipped = 0;
  std::vector<std::int64_t> cur(ar);
  for (std::size_t t = 0; t < ar; ++t) cur[t] = ranges[t].lo;
  while (!empty) {
    std::vector<std::uint64_t> codes;
    std::string label;
    for (std::size_t t = 0; t < ar; ++t) {
      codes.push_back(by_code ? static_cast<std::uint64_t>(cur[t]) : fqc_field_from_int(F.get(), cur[t]));
      label += (t ? " " : "") + (by_code && a.k > 1 ? "@" : std::string()) + std::to_string(cur[t]);
    }
    const SpecHolder h = build_spec(fam, codes, a.i, a.curve);
    for (unsigned n = 1; n <= a.n_max; ++n) {
      const fqc_extension* e = exts[n - 1].get();
      if (fqc_family_check(e, &h.spec) != FQC_OK) {
        ++skipped;
        continue;
      }
      std::int64_t closed = 0, oracle = 0;
      check(fqc_count_closed(e, &h.spec, &closed));
      check(fqc_count_oracle(e, &h.spec, a.budget, &oracle));
      const bool ok = closed == oracle;
      all_match = all_match && ok;
      rows.push_back({{"coeffs", label}, {"n", n}, {"N", closed}, {"oracle", oracle}, {"match", ok}});
      csv << label << ',' << n << ',' << closed << ',' << oracle << ',' << (ok ? "true" : "false") << '\n';
    }
    std::size_t t = 0;
    while (t < ar && ++cur[t] > ranges[t].hi) {
      cur[t] = ranges[t].lo;
      ++t;
    }
    if (t == ar) break;
  }

  if (a.format == "csv") {
    out.emit(csv.str());
  } else {
    json j;
    j["command"] = "table";
    j["params"] = {{"family", fqc_family_name(fam)}, {"p", a.p}, {"k", a.k}, {"n_max", a.n_max},
                   {"sweep", by_code ? "all" : a.sweep}};
    if (fam == FQC_QUARTIC_PAIR_C1 || fam == FQC_QUARTIC_PAIR_C2) j["params"]["i"] = a.i;
    if (fam == FQC_Y3_LINEAR_QUAD) j["params"]["curve"] = a.curve;
    j["provenance"] = "both";
    j["results"] = rows;
    j["skipped"] = skipped;
    j["checked"] = true;
    j["match"] = all_match;
    out.emit(j);
  }
  return all_match ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact point counts on curves over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::uint64_t budget = 0;
  app.add_option("--out", out.path, "Write the report to this file instead of standard output");
  app.add_option("--budget", budget, "Oracle evaluation budget (0 = library default)");

  TraceArgs ta;
  auto* trace = app.add_subcommand("trace", "Frobenius trace of y^2 = Ax^3 + Bx + C");
  trace->add_option("--p", ta.p, "Characteristic")->required();
  trace->add_option("--k", ta.k, "Base field degree")->capture_default_str();
  trace->add_option("--n", ta.n, "Also report counts over F_{q^m} for m <= n")->capture_default_str();
  trace->add_option("--A", ta.A)->required();
  trace->add_option("--B", ta.B)->required();
  trace->add_option("--C", ta.C)->required();
  trace->add_option("--method", ta.method)->check(CLI::IsMember({"naive", "congruence", "auto"}))->capture_default_str();

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Closed-form point count of a curve family");
  count->add_option("--family", ca.family, "Family name, e.g. y2-sextic-even")->required();
  count->add_option("--coeffs", ca.coeffs, "Comma-separated coefficients")->required()->allow_extra_args(false);
  count->add_option("--p", ca.p)->required();
  count->add_option("--k", ca.k)->capture_default_str();
  count->add_option("--n", ca.n)->capture_default_str();
  count->add_option("--i", ca.i, "Character order for the quartic pair")->capture_default_str();
  count->add_option("--curve", ca.curve, "Which curve of a pair (1 or 2)")->check(CLI::Range(1, 2))->capture_default_str();
  count->add_flag("--check", ca.check, "Also count by enumeration and compare");

  ClassifyArgs la;
  auto* classify = app.add_subcommand("classify", "Maximal/minimal test for aX^d + bY^d + cZ^d = 0 over F_{p^2n}");
  classify->add_option("--degree", la.degree)->required()->check(CLI::IsMember({3, 4}));
  classify->add_option("--p", la.p)->required();
  classify->add_option("--k", la.k)->capture_default_str();
  classify->add_option("--n", la.n)->capture_default_str();
  classify->add_option("--a", la.a)->capture_default_str();
  classify->add_option("--b", la.b)->capture_default_str();
  classify->add_option("--c", la.c)->capture_default_str();
  classify->add_flag("--certify", la.certify, "Count the points and check the Hasse-Weil bound");
  classify->add_flag("--experimental", la.experimental, "Allow a non-prime base field when certifying");

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Closed form and oracle over a coefficient sweep");
  table->add_option("--family", tb.family)->required();
  table->add_option("--p", tb.p)->required();
  table->add_option("--k", tb.k)->capture_default_str();
  table->add_option("--n-max", tb.n_max)->required();
  table->add_option("--i", tb.i)->capture_default_str();
  table->add_option("--curve", tb.curve)->check(CLI::Range(1, 2))->capture_default_str();
  table->add_option("--sweep", tb.sweep, "Per-coefficient integer ranges lo:hi, comma-separated (default: every element)");
  table->add_option("--format", tb.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*trace) return run_trace(ta, out);
    if (*count) {
      ca.budget = budget;
      return run_count(ca, out);
    }
    if (*classify) {
      la.budget = budget;
      return run_classify(la, out);
    }
    tb.budget = budget;
    return run_table(tb, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
