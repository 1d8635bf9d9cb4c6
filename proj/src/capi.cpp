#include "fqcount/fqcount.h"

#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include "fqcount/charsums.hpp"
#include "fqcount/error.hpp"
#include "fqcount/extremal.hpp"
#include "fqcount/families.hpp"
#include "fqcount/field.hpp"
#include "fqcount/frobenius.hpp"
#include "fqcount/oracle.hpp"

struct fqc_field {
  fqcount::FieldCtx ctx;
};

struct fqc_extension {
  fqcount::Extension ext;
};

namespace {

thread_local std::string g_last_error;

template <class F>
fqc_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return FQC_OK;
  } catch (const fqcount::InvalidArgument& e) {
    g_last_error = e.what();
    return FQC_INVALID_ARGUMENT;
  } catch (const fqcount::PreconditionError& e) {
    g_last_error = e.what();
    return FQC_PRECONDITION;
  } catch (const fqcount::BudgetExceeded& e) {
    g_last_error = e.what();
    return FQC_BUDGET_EXCEEDED;
  } catch (const fqcount::OverflowError& e) {
    g_last_error = e.what();
    return FQC_OVERFLOW;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FQC_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return FQC_INTERNAL;
  }
}

void require_ptr(const void* p, const char* what) {
  if (!p) throw fqcount::InvalidArgument(std::string("null ") + what);
}

fqcount::Elem elem(const fqcount::FieldCtx& F, uint64_t code) { return F.from_code(code); }

fqcount::FamilySpec to_spec(const fqc_extension* e, const fqc_family_spec* s) {
  require_ptr(e, "extension");
  require_ptr(s, "family spec");
  if (s->family < 0 || s->family >= FQC_FAMILY_COUNT) throw fqcount::InvalidArgument("unknown family");
  if (s->ncoeffs && !s->coeffs) throw fqcount::InvalidArgument("null coefficient array");
  fqcount::FamilySpec spec;
  spec.tag = static_cast<fqcount::FamilyTag>(s->family);
  for (size_t k = 0; k < s->ncoeffs; ++k) spec.coeffs.push_back(elem(e->ext.base(), s->coeffs[k]));
  spec.order = s->order;
  spec.curve = s->curve ? s->curve : 1;
  return spec;
}

fqcount::PlaneFermatLike to_curve(const fqc_field* base, unsigned degree, const uint64_t abc[3]) {
  require_ptr(base, "field");
  require_ptr(abc, "coefficients");
  const auto& F = base->ctx;
  return fqcount::PlaneFermatLike(degree, F, elem(F, abc[0]), elem(F, abc[1]), elem(F, abc[2]));
}

fqc_verdict to_c(fqcount::ExtremalKind k) {
  switch (k) {
    case fqcount::ExtremalKind::Maximal: return FQC_MAXIMAL;
    case fqcount::ExtremalKind::Minimal: return FQC_MINIMAL;
    default: return FQC_NEITHER;
  }
}

static_assert(static_cast<int>(fqcount::FamilyTag::Y4QuarticEven) == FQC_Y4_QUARTIC_EVEN);

}  // namespace

extern "C" {

const char* fqc_last_error(void) { return g_last_error.c_str(); }

const char* fqc_status_name(fqc_status s) {
  switch (s) {
    case FQC_OK: return "ok";
    case FQC_INVALID_ARGUMENT: return "invalid argument";
    case FQC_PRECONDITION: return "precondition failed";
    case FQC_BUDGET_EXCEEDED: return "budget exceeded";
    case FQC_OVERFLOW: return "overflow";
    default: return "internal error";
  }
}

fqc_status fqc_field_create(uint64_t p, unsigned k, fqc_field** out) {
  return guarded([&] {
    require_ptr(out, "output");
    *out = nullptr;
    *out = new fqc_field{fqcount::FieldCtx::make(p, k)};
  });
}

void fqc_field_destroy(fqc_field* f) { delete f; }
uint64_t fqc_field_characteristic(const fqc_field* f) { return f ? f->ctx.characteristic() : 0; }
unsigned fqc_field_degree(const fqc_field* f) { return f ? f->ctx.degree() : 0; }
uint64_t fqc_field_size(const fqc_field* f) { return f ? f->ctx.size() : 0; }
uint64_t fqc_field_generator(const fqc_field* f) { return f ? f->ctx.generator().code : 0; }

fqc_status fqc_field_modulus(const fqc_field* f, uint32_t* coeffs, size_t cap, size_t* len) {
  return guarded([&] {
    require_ptr(f, "field");
    const auto m = f->ctx.modulus();
    if (len) *len = m.size();
    if (coeffs) std::memcpy(coeffs, m.data(), std::min(cap, m.size()) * sizeof(uint32_t));
  });
}

uint64_t fqc_field_from_int(const fqc_field* f, int64_t v) { return f ? f->ctx.from_int(v).code : 0; }

fqc_status fqc_extension_create(const fqc_field* base, unsigned n, fqc_extension** out) {
  return guarded([&] {
    require_ptr(base, "field");
    require_ptr(out, "output");
    *out = nullptr;
    *out = new fqc_extension{fqcount::Extension(base->ctx, n)};
  });
}

void fqc_extension_destroy(fqc_extension* e) { delete e; }
unsigned fqc_extension_degree(const fqc_extension* e) { return e ? e->ext.degree() : 0; }

fqc_status fqc_trace(const fqc_field* f, uint64_t A, uint64_t B, uint64_t C, fqc_method method,
                     fqc_trace_result* out) {
  return guarded([&] {
    require_ptr(f, "field");
    require_ptr(out, "output");
    const auto& F = f->ctx;
    const auto a = elem(F, A), b = elem(F, B), c = elem(F, C);
    if (a == F.zero()) throw fqcount::PreconditionError("A must be nonzero");
    if (fqcount::discriminant_cubic(F, {a, F.zero(), b, c}) == F.zero())
      throw fqcount::PreconditionError("curve is not elliptic (zero discriminant)");
    fqc_trace_result r{};
    r.q = F.size();
    const auto res = fqcount::trace_congruence(F, a, b, c);
    r.has_residue = 1;
    r.residue = res.residue;
    switch (method) {
      case FQC_METHOD_NAIVE:
        r.trace = fqcount::trace_naive(F, a, F.zero(), b, c).trace;
        r.resolved = 1;
        break;
      case FQC_METHOD_CONGRUENCE:
        if (F.degree() == 1 && F.characteristic() >= 17) {
          r.trace = fqcount::trace_exact(F, a, b, c).trace;
          r.resolved = 1;
        }
        break;
      default:
        r.trace = fqcount::trace_general(F, a, F.zero(), b, c).trace;
        r.resolved = 1;
        break;
    }
    *out = r;
  });
}

fqc_status fqc_trace_cubic(const fqc_field* f, const uint64_t coeffs[4], fqc_method method, int64_t* trace) {
  return guarded([&] {
    require_ptr(f, "field");
    require_ptr(coeffs, "coefficients");
    require_ptr(trace, "output");
    const auto& F = f->ctx;
    const auto m = method == FQC_METHOD_NAIVE        ? fqcount::TraceMethod::Naive
                   : method == FQC_METHOD_CONGRUENCE ? fqcount::TraceMethod::Congruence
                                                     : fqcount::TraceMethod::Auto;
    *trace = fqcount::trace_general(F, elem(F, coeffs[0]), elem(F, coeffs[1]), elem(F, coeffs[2]),
                                    elem(F, coeffs[3]), m)
                 .trace;
  });
}

fqc_status fqc_s_n(uint64_t q, int64_t trace, unsigned n, int64_t* out) {
  return guarded([&] {
    require_ptr(out, "output");
    *out = fqcount::s_n({q, trace}, n);
  });
}

fqc_status fqc_omega_string(uint64_t q, int64_t trace, char* buf, size_t cap) {
  return guarded([&] {
    require_ptr(buf, "buffer");
    if (cap == 0) throw fqcount::InvalidArgument("empty buffer");
    const fqcount::FrobeniusData fd{q, trace};
    if (!fd.in_hasse_range()) throw fqcount::InvalidArgument("trace outside the Hasse range");
    const auto s = fd.omega_string();
    const size_t n = std::min(cap - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  });
}

fqc_status fqc_binom_mod_p(uint64_t n, uint64_t m, uint64_t p, uint64_t* out) {
  return guarded([&] {
    require_ptr(out, "output");
    *out = fqcount::binom_mod_p(n, m, p);
  });
}

fqc_status fqc_family_from_name(const char* name, fqc_family* out) {
  return guarded([&] {
    require_ptr(name, "name");
    require_ptr(out, "output");
    const auto tag = fqcount::family_from_name(name);
    if (!tag) throw fqcount::InvalidArgument(std::string("unknown family '") + name + "'");
    *out = static_cast<fqc_family>(*tag);
  });
}

const char* fqc_family_name(fqc_family fam) {
  if (fam < 0 || fam >= FQC_FAMILY_COUNT) return "";
  return fqcount::family_name(static_cast<fqcount::FamilyTag>(fam)).data();
}

size_t fqc_family_arity(fqc_family fam) {
  if (fam < 0 || fam >= FQC_FAMILY_COUNT) return 0;
  return fqcount::family_arity(static_cast<fqcount::FamilyTag>(fam));
}

fqc_status fqc_family_check(const fqc_extension* e, const fqc_family_spec* spec) {
  return guarded([&] { fqcount::validate(to_spec(e, spec), e->ext); });
}

fqc_status fqc_count_closed(const fqc_extension* e, const fqc_family_spec* spec, int64_t* out) {
  return guarded([&] {
    require_ptr(out, "output");
    *out = fqcount::closed_form_count(to_spec(e, spec), e->ext).value;
  });
}

fqc_status fqc_count_oracle(const fqc_extension* e, const fqc_family_spec* spec, uint64_t budget, int64_t* out) {
  return guarded([&] {
    require_ptr(out, "output");
    const auto s = to_spec(e, spec);
    fqcount::validate(s, e->ext);
    fqcount::OracleOptions opts;
    if (budget) opts.budget = budget;
    *out = fqcount::count_total(s, e->ext, opts).value;
  });
}

const char* fqc_verdict_name(fqc_verdict v) {
  switch (v) {
    case FQC_MAXIMAL: return "Maximal";
    case FQC_MINIMAL: return "Minimal";
    default: return "Neither";
  }
}

fqc_status fqc_classify(const fqc_field* base, unsigned degree, const uint64_t abc[3], unsigned n,
                        fqc_verdict* out) {
  return guarded([&] {
    require_ptr(out, "output");
    *out = to_c(fqcount::classify(to_curve(base, degree, abc), n).kind);
  });
}

fqc_status fqc_certify(const fqc_field* base, unsigned degree, const uint64_t abc[3], unsigned n,
                       int experimental, uint64_t budget, fqc_certificate* out) {
  return guarded([&] {
    require_ptr(out, "output");
    fqcount::OracleOptions opts;
    if (budget) opts.budget = budget;
    const auto c = fqcount::certify(to_curve(base, degree, abc), n, experimental != 0, opts);
    *out = {to_c(c.verdict.kind), c.count, c.lo, c.hi, c.experimental ? 1 : 0};
  });
}

fqc_status fqc_hasse_weil_interval(uint64_t q, unsigned n, unsigned g, int64_t* lo, int64_t* hi) {
  return guarded([&] {
    require_ptr(lo, "output");
    require_ptr(hi, "output");
    const auto [l, h] = fqcount::hasse_weil_interval(q, n, g);
    *lo = l;
    *hi = h;
  });
}

}  // extern "C"
