#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "fqcount/charsums.hpp"
#include "fqcount/error.hpp"
#include "fqcount/frobenius.hpp"

using namespace fqcount;

namespace {

std::uint64_t exact_binom(std::uint64_t n, std::uint64_t m) {
  if (m > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= m; ++i) r = r * (n - m + i) / i;
  return r;
}

}  // namespace

TEST_CASE("binomials modulo p agree with exact binomials") {
  for (std::uint64_t p : {3, 5, 7, 13}) {
    const LucasBinomial lucas(p);
    for (std::uint64_t n = 0; n <= 40; ++n)
      for (std::uint64_t m = 0; m <= n + 2; ++m) {
        CHECK(lucas(n, m) == exact_binom(n, m) % p);
        CHECK(binom_mod_p(n, m, p) == exact_binom(n, m) % p);
      }
  }
  CHECK(binom_mod_p(1000000, 999, 1000003) == LucasBinomial(1000003)(1000000, 999));
  CHECK_THROWS_AS(binom_mod_p(5, 2, 9), InvalidArgument);
}

TEST_CASE("s_n recurrence") {
  const FrobeniusData fd{19, 7};
  CHECK(s_n(fd, 0) == 2);
  CHECK(s_n(fd, 1) == 7);
  CHECK(s_n(fd, 2) == 49 - 38);
  CHECK(s_n(fd, 3) == 7 * 11 - 19 * 7);
  CHECK(checked_pow(19, 3) == 6859);
  CHECK_THROWS_AS(checked_pow(3, 41), OverflowError);
  CHECK_THROWS_AS(s_n(FrobeniusData{1000003, 1000}, 7), OverflowError);
  CHECK(fd.in_hasse_range());
  CHECK_FALSE(FrobeniusData{19, 9}.in_hasse_range());
}

TEST_CASE("omega text form") {
  CHECK(FrobeniusData{19, 7}.omega_string() == "7/2 + i*sqrt(27/4)");
  CHECK(FrobeniusData{73, 16}.omega_string() == "8 + 3i");
  CHECK(FrobeniusData{29, 0}.omega_string() == "i*sqrt(29)");
  CHECK(FrobeniusData{37, -10}.omega_string() == "-5 + i*sqrt(12)");
  CHECK(FrobeniusData{4, 4}.omega_string() == "2");
}

TEST_CASE("count_elliptic against enumeration over F_{q^n}") {
  std::mt19937 rng(3);
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {5, 1}, {3, 2}, {11, 1}}) {
    const auto F = FieldCtx::make(p, k);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.size() - 1));
    for (unsigned n = 1; n <= 3; ++n) {
      if (checked_pow(F.size(), n) > 1400) continue;
      const Extension ext(F, n);
      for (int t = 0; t < 6; ++t) {
        const Cubic f{Elem{pick(rng)}, Elem{pick(rng)}, Elem{pick(rng)}, Elem{pick(rng)}};
        if (f.a == F.zero() || discriminant_cubic(F, f) == F.zero()) continue;
        CHECK(count_elliptic(F, f.a, f.b, f.c, f.d, n).value == brute::projective_y2_cubic(ext, f));
      }
    }
  }
  const auto F = FieldCtx::make(7);
  CHECK_THROWS_AS(count_elliptic(F, F.one(), F.zero(), F.zero(), F.zero(), 1), PreconditionError);
}

TEST_CASE("trace routes agree") {
  for (std::uint64_t p : {17, 23}) {
    const auto F = FieldCtx::make(p);
    for (Elem A : F.elements())
      for (Elem B : F.elements())
        for (Elem C : F.elements()) {
          if (A == F.zero() || discriminant_cubic(F, {A, F.zero(), B, C}) == F.zero()) continue;
          const auto t = brute::trace_by_enumeration(F, {A, F.zero(), B, C});
          CHECK(trace_exact(F, A, B, C).trace == t);
          CHECK(trace_naive(F, A, F.zero(), B, C).trace == t);
        }
  }
  const auto F = FieldCtx::make(29);
  for (Elem b : F.elements()) {
    const Cubic f{F.from_int(2), b, F.from_int(3), F.one()};
    if (discriminant_cubic(F, f) == F.zero()) continue;
    const auto t = brute::trace_by_enumeration(F, f);
    CHECK(trace_general(F, f.a, f.b, f.c, f.d, TraceMethod::Congruence).trace == t);
    CHECK(trace_general(F, f.a, f.b, f.c, f.d, TraceMethod::Auto).trace == t);
    CHECK(trace_general(F, f.a, f.b, f.c, f.d, TraceMethod::Naive).trace == t);
  }
}

TEST_CASE("congruence over extension fields lands in the prime subfield") {
  const auto F = FieldCtx::make(5, 2);
  for (Elem B : F.elements())
    for (Elem C : F.elements()) {
      if (discriminant_cubic(F, {F.one(), F.zero(), B, C}) == F.zero()) continue;
      const auto t = brute::trace_by_enumeration(F, {F.one(), F.zero(), B, C});
      CHECK(static_cast<std::int64_t>(trace_congruence(F, F.one(), B, C).residue) == ((t % 5) + 5) % 5);
    }
}

TEST_CASE("trace preconditions") {
  const auto F13 = FieldCtx::make(13);
  CHECK_THROWS_AS(trace_exact(F13, F13.one(), F13.zero(), F13.from_int(2)), PreconditionError);
  CHECK_THROWS_AS(trace_general(F13, F13.one(), F13.zero(), F13.zero(), F13.from_int(2), TraceMethod::Congruence),
                  PreconditionError);
  CHECK(trace_general(F13, F13.one(), F13.zero(), F13.zero(), F13.from_int(2)).trace ==
        brute::trace_by_enumeration(F13, {F13.one(), F13.zero(), F13.zero(), F13.from_int(2)}));
  const auto F3 = FieldCtx::make(3);
  CHECK_THROWS_AS(trace_general(F3, F3.one(), F3.one(), F3.zero(), F3.one(), TraceMethod::Congruence),
                  PreconditionError);
  const auto F19 = FieldCtx::make(19);
  CHECK_THROWS_AS(trace_congruence(F19, F19.zero(), F19.one(), F19.one()), PreconditionError);
  CHECK_THROWS_AS(trace_congruence(F19, F19.one(), F19.zero(), F19.zero()), PreconditionError);
  CHECK_THROWS_AS(trace_naive(F19, F19.zero(), F19.one(), F19.one(), F19.one()), InvalidArgument);
}

TEST_CASE("integer square root") {
  for (std::uint64_t v : {0ull, 1ull, 2ull, 15ull, 16ull, 17ull, 999999999999ull, 18446744073709551615ull}) {
    const std::uint64_t r = detail::isqrt(v);
    CHECK(static_cast<unsigned __int128>(r) * r <= v);
    CHECK(static_cast<unsigned __int128>(r + 1) * (r + 1) > v);
  }
}
