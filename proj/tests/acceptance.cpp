// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "fqcount/characters.hpp"
#include "fqcount/charsums.hpp"
#include "fqcount/extremal.hpp"
#include "fqcount/families.hpp"
#include "fqcount/frobenius.hpp"
#include "fqcount/oracle.hpp"

using namespace fqcount;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::vector<std::string> failures;
  void fail(const std::string& what) {
    ok = false;
    if (failures.size() < 8) failures.push_back(what);
  }
};

int g_failed = 0;

void report(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  criterion %d: %s (%s; %.2fs)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.str().c_str(), secs);
  for (const auto& f : o.failures) std::printf("        %s\n", f.c_str());
  if (!o.ok) ++g_failed;
  std::fflush(stdout);
}

std::string tuple_str(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// ---------------------------------------------------------------- criterion 1
void golden_traces(Outcome& o) {
  struct Case {
    std::uint64_t p;
    std::vector<std::int64_t> f;  // a, b, c, d
    std::int64_t trace;
  };
  const std::vector<Case> cases = {
      {19, {1, 0, 0, 2}, 7},     {73, {2, 0, -2, 1}, 16},   {29, {2, 0, 0, 1}, 0},    {29, {1, 0, 0, 2}, 0},
      {67, {1, 0, 24, 0}, 0},    {37, {-52, 0, 0, 12}, -10}, {41, {1, 0, 5, 0}, -10},  {41, {-1, 0, 5, 0}, -10},
      {41, {1, 4, -1, 0}, -10},  {103, {1, 0, 0, -1}, -20}, {103, {1, 0, 0, -4}, 7},  {103, {-4, 0, 0, 1}, -13},
  };
  for (const auto& c : cases) {
    const auto F = FieldCtx::make(c.p);
    const Elem a = F.from_int(c.f[0]), b = F.from_int(c.f[1]), cc = F.from_int(c.f[2]), d = F.from_int(c.f[3]);
    const auto naive = trace_naive(F, a, b, cc, d).trace;
    const auto exact = trace_general(F, a, b, cc, d, TraceMethod::Congruence).trace;
    if (naive != c.trace || exact != c.trace)
      o.fail("p=" + std::to_string(c.p) + " " + tuple_str(c.f) + ": naive " + std::to_string(naive) +
             ", congruence " + std::to_string(exact) + ", expected " + std::to_string(c.trace));
  }
  o.detail << cases.size() << " traces, enumeration and congruence";
}

// ---------------------------------------------------------------- criterion 2
void example_counts(Outcome& o) {
  struct Case {
    const char* label;
    std::uint64_t p;
    unsigned n;
    FamilyTag tag;
    std::vector<std::int64_t> coeffs;
    std::int64_t expected;
    unsigned curve = 1;
  };
  const std::vector<Case> cases = {
      {"y^2=2x^6+1 over F_29", 29, 1, FamilyTag::Y2SexticEven, {2, 0, 0, 1}, 31},
      {"y^2=2x^6+1 over F_29^2", 29, 2, FamilyTag::Y2SexticEven, {2, 0, 0, 1}, 957},
      {"y^2=(x^2+3x+2)(x^2-2x-5) over F_67", 67, 1, FamilyTag::Y2QuadProduct, {1, -2, -5, 1, 3, 2}, 67},
      {"y^2=(x^2+3x+2)(x^2-2x-5) over F_67^2", 67, 2, FamilyTag::Y2QuadProduct, {1, -2, -5, 1, 3, 2}, 4623},
      {"y^3=(x+3)(-x^2+2x+2) over F_37", 37, 1, FamilyTag::Y3LinearQuad, {3, -1, 2, 2}, 48, 1},
      {"y^3=(x+3)^2(-x^2+2x+2)^2 over F_37", 37, 1, FamilyTag::Y3LinearQuad, {3, -1, 2, 2}, 46, 2},
      {"y^4=x^4+4x^2-1 over F_41", 41, 1, FamilyTag::Y4QuarticEven, {1, 4, -1}, 72},
      {"y^3=x^6+1 over F_103", 103, 1, FamilyTag::Y3Sextic, {1, 1}, 148},
  };
  for (const auto& c : cases) {
    const auto F = FieldCtx::make(c.p);
    const Extension ext(F, c.n);
    FamilySpec s{c.tag, {}, 2, c.curve};
    for (auto v : c.coeffs) s.coeffs.push_back(F.from_int(v));
    const auto closed = closed_form_count(s, ext).value;
    const auto oracle = count_total(s, ext).value;
    if (closed != c.expected || oracle != c.expected)
      o.fail(std::string(c.label) + ": closed " + std::to_string(closed) + ", oracle " + std::to_string(oracle) +
             ", expected " + std::to_string(c.expected));
  }
  o.detail << cases.size() << " counts, closed form and enumeration";
}

// ---------------------------------------------------------------- criterion 3
void congruence_validity(Outcome& o) {
  std::size_t curves = 0;
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19}) {
    const auto F = FieldCtx::make(p);
    for (Elem A : F.elements()) {
      if (A == F.zero()) continue;
      for (Elem B : F.elements())
        for (Elem C : F.elements()) {
          if (discriminant_cubic(F, {A, F.zero(), B, C}) == F.zero()) continue;
          ++curves;
          const auto r = trace_congruence(F, A, B, C).residue;
          const auto t = brute::trace_by_enumeration(F, {A, F.zero(), B, C});
          const auto tm = ((t % static_cast<std::int64_t>(p)) + p) % p;
          if (static_cast<std::int64_t>(r) != tm)
            o.fail("p=" + std::to_string(p) + " (A,B,C)=" + tuple_str({A.code, B.code, C.code}) + ": residue " +
                   std::to_string(r) + " vs trace " + std::to_string(t));
        }
    }
  }
  o.detail << curves << " elliptic curves over p in {5,7,11,13,17,19}";
}

// ---------------------------------------------------------------- criterion 4
struct SweepStats {
  std::size_t checked = 0;
  std::size_t skipped = 0;
};

void sweep_family(Outcome& o, SweepStats& st, const Extension& ext, FamilyTag tag, unsigned order, unsigned curve) {
  const FieldCtx& F = ext.base();
  const std::size_t ar = family_arity(tag);
  std::vector<std::uint32_t> idx(ar, 0);
  const std::uint64_t q = F.size();
  FamilySpec s{tag, std::vector<Elem>(ar), order, curve};
  while (true) {
    for (std::size_t k = 0; k < ar; ++k) s.coeffs[k] = Elem{idx[k]};
    if (admissibility_error(s, ext).empty()) {
      ++st.checked;
      const auto closed = closed_form_count(s, ext).value;
      const auto oracle = count_total(s, ext).value;
      if (closed != oracle) {
        std::vector<std::int64_t> t(idx.begin(), idx.end());
        o.fail(std::string(family_name(tag)) + " i=" + std::to_string(order) + " curve=" + std::to_string(curve) +
               " q=" + std::to_string(q) + " n=" + std::to_string(ext.degree()) + " " + tuple_str(t) + ": closed " +
               std::to_string(closed) + " vs oracle " + std::to_string(oracle));
      }
    } else {
      ++st.skipped;
    }
    std::size_t k = 0;
    while (k < ar && ++idx[k] == q) idx[k++] = 0;
    if (k == ar) break;
  }
}

void family_sweeps(Outcome& o) {
  SweepStats st;
  for (std::uint64_t p : {5, 7, 13}) {
    const auto F = FieldCtx::make(p);
    for (unsigned n : {1u, 2u}) {
      const Extension ext(F, n);
      for (FamilyTag tag : kAllFamilies) {
        const bool cubic_quartic = tag == FamilyTag::Y3LinearQuad || tag == FamilyTag::Y3Cubic ||
                                   tag == FamilyTag::Y3Sextic || tag == FamilyTag::Y4QuarticEven;
        if (p == 13 && !cubic_quartic) continue;
        if (family_uses_order(tag)) {
          for (unsigned i = 1; i <= 4; ++i) sweep_family(o, st, ext, tag, i, 1);
        } else if (family_has_curve_selector(tag)) {
          for (unsigned c = 1; c <= 2; ++c) sweep_family(o, st, ext, tag, 2, c);
        } else {
          sweep_family(o, st, ext, tag, 2, 1);
        }
      }
    }
  }
  o.detail << st.checked << " admissible tuples checked, " << st.skipped << " inadmissible skipped";
}

// ---------------------------------------------------------------- criterion 5
void classification(Outcome& o) {
  std::size_t curves = 0;
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const auto F = FieldCtx::make(p);
    for (unsigned d : {3u, 4u})
      for (Elem a : F.elements())
        for (Elem b : F.elements())
          for (Elem c : F.elements()) {
            if (a == F.zero() || b == F.zero() || c == F.zero()) continue;
            const PlaneFermatLike curve(d, F, a, b, c);
            const auto v = classify(curve, 1);
            const auto cert = certify(curve, 1);
            ++curves;
            if (v.kind != cert.verdict.kind || cert.count < cert.lo || cert.count > cert.hi)
              o.fail("p=" + std::to_string(p) + " d=" + std::to_string(d) + " " +
                     tuple_str({a.code, b.code, c.code}) + ": classified " + std::string(to_string(v.kind)) +
                     ", certified " + std::string(to_string(cert.verdict.kind)) + " N=" + std::to_string(cert.count));
          }
  }
  const auto F5 = FieldCtx::make(5), F7 = FieldCtx::make(7);
  const auto c36 = certify(PlaneFermatLike(3, F5, F5.one(), F5.one(), F5.one()), 1);
  const auto c92 = certify(PlaneFermatLike(4, F7, F7.one(), F7.one(), F7.one()), 1);
  if (c36.count != 36 || c36.verdict.kind != ExtremalKind::Maximal) o.fail("p=5 d=3: N=" + std::to_string(c36.count));
  if (c92.count != 92 || c92.verdict.kind != ExtremalKind::Maximal) o.fail("p=7 d=4: N=" + std::to_string(c92.count));
  o.detail << curves << " curves; N=" << c36.count << " (p=5,d=3), N=" << c92.count << " (p=7,d=4)";
}

// ---------------------------------------------------------------- criterion 6
void character_properties(Outcome& o) {
  std::size_t fields = 0;
  for (std::uint64_t q = 3; q <= 343; q += 2) {
    std::uint64_t p = 0;
    unsigned k = 0;
    if (!brute::prime_power(q, p, k)) continue;
    ++fields;
    const auto F = FieldCtx::make(p, k);
    const std::string tag = "q=" + std::to_string(q);
    for (unsigned i = 2; i <= 4; ++i) {
      if ((q - 1) % i) continue;
      const MultChar chi(F, i);
      for (Elem x : F.elements()) {
        if (x == F.zero()) continue;
        // order: chi(x^i) = 1; conjugate pairing
        if (chi(F.pow(x, i)) != CyclotomicValue::one(i)) o.fail(tag + " chi_" + std::to_string(i) + "(x^i) != 1");
        for (unsigned j = 1; j < i; ++j)
          if (chi.pow(i - j)(x) != chi.pow(j)(x).conj()) o.fail(tag + " conjugate pairing");
        for (Elem y : F.elements()) {
          if (y == F.zero()) continue;
          if (chi(F.mul(x, y)) != chi(x) * chi(y)) o.fail(tag + " multiplicativity");
        }
      }
      if (chi(F.generator()) != CyclotomicValue::root_of_unity(i, 1)) o.fail(tag + " generator value");
      for (unsigned j = 1; j < i; ++j)
        if (char_sum(chi.pow(j)) != CyclotomicValue::zero(i)) o.fail(tag + " nontrivial sum");
    }
    const MultChar chi2(F, 2);
    for (Elem x : F.elements())
      if (chi2(x).to_integer() != quadratic_char(F, x) || quadratic_char(F, x) != brute::is_square_sign(F, x))
        o.fail(tag + " Euler criterion");
    for (std::uint64_t m = 0; m <= 2 * (q - 1) + 1; ++m) {
      const Elem s = F.power_sum(m);
      const Elem want = (m != 0 && m % (q - 1) == 0) ? F.neg(F.one()) : F.zero();
      if (s != want) o.fail(tag + " power sum m=" + std::to_string(m));
    }
    if (q % 4 == 3) {
      for (unsigned e = 1; e <= 4; ++e) {
        const std::uint64_t k2 = std::uint64_t{1} << e;
        std::vector<bool> sq(q, false), pw(q, false);
        for (Elem y : F.elements()) {
          sq[F.pow(y, 2).code] = true;
          pw[F.pow(y, k2).code] = true;
        }
        if (sq != pw) o.fail(tag + " squares vs 2^" + std::to_string(e) + " powers");
      }
    }
  }
  o.detail << fields << " fields with q <= 343";
}

// ---------------------------------------------------------------- criterion 7
void extension_check(Outcome& o) {
  std::mt19937_64 rng(20240531);
  std::size_t curves = 0;
  for (std::uint64_t q : {5, 7, 13, 19}) {
    const auto F = FieldCtx::make(q);
    const Extension ext(F, 2);
    std::uniform_int_distribution<std::uint64_t> coef(0, q - 1);
    int taken = 0;
    while (taken < 25) {
      Cubic f{Elem{static_cast<std::uint32_t>(coef(rng))}, Elem{static_cast<std::uint32_t>(coef(rng))},
              Elem{static_cast<std::uint32_t>(coef(rng))}, Elem{static_cast<std::uint32_t>(coef(rng))}};
      if (f.a == F.zero() || discriminant_cubic(F, f) == F.zero()) continue;
      ++taken;
      ++curves;
      const auto closed = count_elliptic(F, f.a, f.b, f.c, f.d, 2).value;
      const auto direct = brute::projective_y2_cubic(ext, f);
      if (closed != direct)
        o.fail("q=" + std::to_string(q) + " " + tuple_str({f.a.code, f.b.code, f.c.code, f.d.code}) + ": " +
               std::to_string(closed) + " vs " + std::to_string(direct));
    }
  }
  o.detail << curves << " curves over F_{q^2}, q in {5,7,13,19}";
}

// ------------------------------------------------------------ informational
void benchmark() {
  for (std::uint64_t p : {10007, 49999, 100003}) {
    const auto F = FieldCtx::make(p);
    const Elem A = F.one(), B = F.from_int(3), C = F.from_int(7);
    const auto t0 = std::chrono::steady_clock::now();
    const auto naive = trace_naive(F, A, F.zero(), B, C).trace;
    const auto t1 = std::chrono::steady_clock::now();
    const auto cong = trace_exact(F, A, B, C).trace;
    const auto t2 = std::chrono::steady_clock::now();
    std::printf("INFO  trace benchmark p=%llu: enumeration %.2f ms, congruence %.2f ms, traces %lld/%lld\n",
                static_cast<unsigned long long>(p), std::chrono::duration<double, std::milli>(t1 - t0).count(),
                std::chrono::duration<double, std::milli>(t2 - t1).count(), static_cast<long long>(naive),
                static_cast<long long>(cong));
  }
}

}  // namespace

int main() {
  report(1, "golden traces", golden_traces);
  report(2, "example point counts", example_counts);
  report(3, "congruence vs enumeration", congruence_validity);
  report(4, "closed form vs oracle sweeps", family_sweeps);
  report(5, "maximal/minimal classification", classification);
  report(6, "character and property suites", character_properties);
  report(7, "extension counts via s_n", extension_check);
  benchmark();
  std::printf("%s: %d failing criteria\n", g_failed ? "FAILED" : "ALL PASSED", g_failed);
  return g_failed ? 1 : 0;
}
