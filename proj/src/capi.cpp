#include "gsfactor.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <new>
#include <sstream>

#include "gsfactor/report.hpp"

struct gs_field {
  gsf::FieldPtr field;
  std::once_flag dickson_once;
  gsf::DicksonPtr dickson;

  const gsf::DicksonCtx& ctx() {
    std::call_once(dickson_once, [this] { dickson = std::make_shared<const gsf::DicksonCtx>(field); });
    return *dickson;
  }
};

namespace {

thread_local std::string g_last_error;

gs_status fail(gs_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating library exceptions into status codes.
template <class Fn>
gs_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const gsf::ParseError& e) {
    return fail(GS_ERR_PARSE, e.what());
  } catch (const gsf::FieldError& e) {
    return fail(GS_ERR_FIELD, e.what());
  } catch (const gsf::DomainError& e) {
    return fail(GS_ERR_DOMAIN, e.what());
  } catch (const gsf::PreconditionError& e) {
    return fail(GS_ERR_PRECONDITION, e.what());
  } catch (const gsf::GuardError& e) {
    return fail(GS_ERR_GUARD, e.what());
  } catch (const gsf::InvariantError& e) {
    return fail(GS_ERR_INVARIANT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GS_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool valid_format(gs_format fmt) { return fmt == GS_FORMAT_TEXT || fmt == GS_FORMAT_JSON; }

std::string join(const gsf::Field& f, const std::vector<gsf::Elem>& xs) {
  std::string out;
  for (gsf::Elem x : xs) {
    if (!out.empty()) out += ' ';
    out += gsf::element_text(f, x);
  }
  return out;
}

std::string residue_text(const std::optional<int>& r) {
  return r ? std::to_string(*r) : std::string("mixed");
}

std::optional<int> common_residue(const gsf::Field& f, const std::vector<gsf::Elem>& xs) {
  if (xs.empty()) return std::nullopt;
  const int r = f.quad_char(xs.front());
  for (gsf::Elem x : xs) {
    if (f.quad_char(x) != r) return std::nullopt;
  }
  return r;
}

}  // namespace

extern "C" {

const char* gs_version(void) { return "1.0.0"; }

const char* gs_status_name(gs_status status) {
  switch (status) {
    case GS_OK: return "ok";
    case GS_ERR_ARGUMENT: return "argument";
    case GS_ERR_PARSE: return "parse";
    case GS_ERR_FIELD: return "field";
    case GS_ERR_DOMAIN: return "domain";
    case GS_ERR_PRECONDITION: return "precondition";
    case GS_ERR_GUARD: return "guard";
    case GS_ERR_INVARIANT: return "invariant";
    case GS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* gs_last_error(void) { return g_last_error.c_str(); }

uint64_t gs_default_seed(void) { return gsf::kDefaultSeed; }

int gs_is_odd_prime_power(uint64_t q) { return gsf::odd_prime_power(q).has_value() ? 1 : 0; }

void gs_string_free(char* s) { std::free(s); }

gs_status gs_field_open(const char* spec, gs_field** out) {
  if (!spec || !out) return fail(GS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    gsf::FieldPtr f = gsf::parse_field_spec(spec);
    auto* h = new gs_field;
    h->field = std::move(f);
    *out = h;
    return GS_OK;
  });
}

gs_status gs_field_open_pk(uint64_t p, unsigned k, gs_field** out) {
  if (!out) return fail(GS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    gsf::FieldPtr f = gsf::Field::make(p, k);
    auto* h = new gs_field;
    h->field = std::move(f);
    *out = h;
    return GS_OK;
  });
}

void gs_field_close(gs_field* field) { delete field; }

gs_status gs_field_info(const gs_field* field, uint64_t* p, unsigned* k, uint64_t* q) {
  if (!field) return fail(GS_ERR_ARGUMENT, "null field");
  if (p) *p = field->field->p();
  if (k) *k = field->field->k();
  if (q) *q = field->field->q();
  return GS_OK;
}

gs_status gs_field_summary(gs_field* field, gs_format fmt, char** out) {
  if (!field || !out || !valid_format(fmt)) return fail(GS_ERR_ARGUMENT, "invalid argument");
  return guarded([&] {
    const gsf::DicksonCtx& ctx = field->ctx();
    const gsf::Field& f = ctx.field();
    if (fmt == GS_FORMAT_JSON) {
      *out = dup_string(gsf::field_summary_json(ctx).dump() + "\n");
    } else {
      std::ostringstream os;
      os << "q = " << f.q() << ", n = " << ctx.n() << ", E = " << ctx.big_e()
         << ", tau = " << gsf::element_text(f, ctx.tau()) << "\n"
         << "C: " << join(f, ctx.square_pairs()) << "\n"
         << "|W| = " << ctx.nonsquare_halves().size() << "\n";
      *out = dup_string(os.str());
    }
    return GS_OK;
  });
}

gs_status gs_factor(gs_field* field, const char* s, uint64_t seed, gs_format fmt, char** out) {
  if (!field || !s || !out || !valid_format(fmt)) return fail(GS_ERR_ARGUMENT, "invalid argument");
  return guarded([&] {
    const gsf::DicksonCtx& ctx = field->ctx();
    const gsf::Elem sv = gsf::parse_element(ctx.field(), s);
    const gsf::ClosedForm cf = gsf::factor_closed_form(ctx, sv, seed);
    *out = dup_string(fmt == GS_FORMAT_JSON ? gsf::case_report_json(ctx, sv, cf).dump() + "\n"
                                            : gsf::case_report_text(ctx, sv, cf));
    return GS_OK;
  });
}

gs_status gs_verify(gs_field* field, uint64_t seed, gs_format fmt, char** out,
                    uint64_t* verified, uint64_t* total) {
  if (!field || !out || !valid_format(fmt)) return fail(GS_ERR_ARGUMENT, "invalid argument");
  return guarded([&] {
    const gsf::DicksonCtx& ctx = field->ctx();
    const gsf::Field& f = ctx.field();
    uint64_t ok = 0;
    uint64_t count = 0;
    gsf::json mismatches = gsf::json::array();
    std::string text;
    for (gsf::Elem s : f.elements()) {
      ++count;
      std::string reason;
      try {
        if (gsf::matches_oracle(ctx, s, seed)) {
          ++ok;
        } else {
          reason = "closed form differs from the generic factorization";
        }
      } catch (const gsf::InvariantError& e) {
        reason = e.what();
      }
      if (!reason.empty()) {
        mismatches.push_back({{"s", gsf::element_json(f, s)}, {"reason", reason}});
        text += "mismatch at s = " + gsf::element_text(f, s) + ": " + reason + "\n";
      }
    }
    if (verified) *verified = ok;
    if (total) *total = count;
    if (fmt == GS_FORMAT_JSON) {
      const gsf::json report = {
          {"q", f.q()}, {"verified", ok}, {"total", count}, {"mismatches", mismatches}};
      *out = dup_string(report.dump() + "\n");
    } else {
      *out = dup_string(text + "q = " + std::to_string(f.q()) + ": " + std::to_string(ok) + "/" +
                        std::to_string(count) + " values of s verified\n");
    }
    if (ok != count) return fail(GS_ERR_INVARIANT, "closed form disagrees with the oracle");
    return GS_OK;
  });
}

gs_status gs_atlas(gs_field* field, uint64_t seed, char** out) {
  if (!field || !out) return fail(GS_ERR_ARGUMENT, "invalid argument");
  return guarded([&] {
    const gsf::DicksonCtx& ctx = field->ctx();
    std::string lines;
    for (gsf::Elem s : ctx.field().elements()) {
      const gsf::ClosedForm cf = gsf::factor_closed_form(ctx, s, seed);
      lines += gsf::case_report_json(ctx, s, cf).dump() + "\n";
    }
    *out = dup_string(lines);
    return GS_OK;
  });
}

gs_status gs_irreducible_values(gs_field* field, gs_format fmt, char** out) {
  if (!field || !out || !valid_format(fmt)) return fail(GS_ERR_ARGUMENT, "invalid argument");
  return guarded([&] {
    const gsf::DicksonCtx& ctx = field->ctx();
    const gsf::Field& f = ctx.field();
    const auto by_period = gsf::irreducible_s_values(ctx);
    // With E = 2 no sequence reaches period E and the order scan misses
    // irreducible quadratics from the other cases, so it is not compared.
    const bool scan_applies = ctx.big_e() > 2;
    const bool agree = !scan_applies || by_period == gsf::irreducible_s_values_by_order(ctx);
    if (fmt == GS_FORMAT_JSON) {
      const gsf::json report = {{"q", f.q()},
                                {"E", ctx.big_e()},
                                {"s_values", gsf::elements_json(f, by_period)},
                                {"order_scan_agrees", scan_applies ? gsf::json(agree) : gsf::json(nullptr)}};
      *out = dup_string(report.dump() + "\n");
    } else {
      *out = dup_string("q = " + std::to_string(f.q()) + ", E = " + std::to_string(ctx.big_e()) +
                        ": " + std::to_string(by_period.size()) + " irreducible g_s\n" +
                        "s: " + join(f, by_period) + "\n" +
                        "order scan agrees: " +
                        (scan_applies ? (agree ? "yes" : "no") : "not applicable (E = 2)") + "\n");
    }
    if (!agree) return fail(GS_ERR_INVARIANT, "period test and order-2E scan disagree");
    return GS_OK;
  });
}

gs_status gs_residuacity(gs_field* field, const char* s, uint64_t seed, gs_format fmt,
                         char** out) {
  if (!field || !s || !out || !valid_format(fmt)) return fail(GS_ERR_ARGUMENT, "invalid argument");
  return guarded([&] {
    const gsf::DicksonCtx& ctx = field->ctx();
    const gsf::Field& f = ctx.field();
    const gsf::Elem sv = gsf::parse_element(f, s);
    const gsf::NormClass nc = gsf::norm_residuacity(ctx, sv, seed);
    if (fmt == GS_FORMAT_JSON) {
      *out = dup_string(gsf::norm_class_json(f, nc).dump() + "\n");
    } else {
      std::ostringstream os;
      os << "q = " << f.q() << ", s = " << gsf::element_text(f, sv) << "\n"
         << "d = " << nc.d << ", b_set: " << gsf::trace_class_name(nc.membership) << "\n"
         << "norms: " << join(f, nc.norms) << " (residue " << residue_text(nc.residue) << ")\n"
         << "partner norms (s = " << gsf::element_text(f, f.neg(sv)) << "): "
         << join(f, nc.partner_norms) << " (residue "
         << residue_text(common_residue(f, nc.partner_norms)) << ")\n";
      *out = dup_string(os.str());
    }
    return GS_OK;
  });
}

gs_status gs_check_corollaries(gs_field* field, uint64_t seed, gs_format fmt, char** out) {
  if (!field || !out || !valid_format(fmt)) return fail(GS_ERR_ARGUMENT, "invalid argument");
  return guarded([&] {
    const gsf::DicksonCtx& ctx = field->ctx();
    const gsf::Field& f = ctx.field();
    bool all_ok = true;
    std::string text = "q = " + std::to_string(f.q()) + "\n";
    gsf::json families = gsf::json::array();
    for (unsigned d : gsf::kPeriodFamilies) {
      gsf::json rec = {{"d", d}, {"applicable", false}, {"passed", nullptr}, {"detail", ""}};
      std::string line = "period " + std::to_string(d) + ": ";
      if (!gsf::period_family_applies(f.q(), d)) {
        line += "not applicable";
      } else {
        try {
          const gsf::PeriodFamilyResult r = gsf::check_period_family(ctx, d, seed);
          rec["applicable"] = true;
          rec["passed"] = r.passed;
          rec["variants"] = r.variants;
          rec["detail"] = r.detail;
          all_ok = all_ok && r.passed;
          line += r.passed ? "pass (" + std::to_string(r.variants) + " variant" +
                                 (r.variants == 1 ? ")" : "s)")
                           : "FAIL: " + r.detail;
        } catch (const gsf::PreconditionError& e) {
          rec["detail"] = e.what();
          line += std::string("not applicable (") + e.what() + ")";
        }
      }
      families.push_back(std::move(rec));
      text += line + "\n";
    }

    gsf::json cubic = {{"applicable", false}};
    if (f.q() % 12 == 1 || f.q() % 12 == 11) {
      const gsf::CubicComplement cc = gsf::cubic_norm_complement(ctx, seed);
      cubic = {{"applicable", true},
               {"holds", cc.holds()},
               {"U_size", cc.u.size()},
               {"V_size", cc.v.size()}};
      all_ok = all_ok && cc.holds();
      text += std::string("cubic complement: ") + (cc.holds() ? "pass" : "FAIL") +
              " (|U| = " + std::to_string(cc.u.size()) + ", |V| = " + std::to_string(cc.v.size()) +
              ")\n";
    } else {
      text += "cubic complement: not applicable\n";
    }

    gsf::json surd = gsf::json::object();
    for (auto [which, name] : {std::pair{gsf::SurdCheck::Five, "five"},
                               std::pair{gsf::SurdCheck::Two, "two"}}) {
      if (!gsf::surd_check_applies(f.q(), which)) {
        surd[name] = nullptr;
        continue;
      }
      const bool holds = gsf::surd_check_holds(f, which);
      surd[name] = holds;
      all_ok = all_ok && holds;
      text += std::string("surd residuacity (") + name + "): " + (holds ? "pass" : "FAIL") + "\n";
    }

    if (fmt == GS_FORMAT_JSON) {
      const gsf::json report = {{"q", f.q()},
                                {"families", families},
                                {"cubic_complement", cubic},
                                {"surd_checks", surd},
                                {"passed", all_ok}};
      *out = dup_string(report.dump() + "\n");
    } else {
      *out = dup_string(text);
    }
    if (!all_ok) return fail(GS_ERR_INVARIANT, "an applicable check failed");
    return GS_OK;
  });
}

gs_status gs_profile(gs_field* field, const char* c, gs_format fmt, char** out) {
  if (!field || !c || !out || !valid_format(fmt)) return fail(GS_ERR_ARGUMENT, "invalid argument");
  return guarded([&] {
    const gsf::Field& f = *field->field;
    const gsf::RecurrenceProfile prof = gsf::build_profile(field->field, gsf::parse_element(f, c));
    if (fmt == GS_FORMAT_JSON) {
      *out = dup_string(gsf::profile_json(prof).dump() + "\n");
    } else {
      *out = dup_string("c = " + gsf::element_text(f, prof.c) + ", e = " + std::to_string(prof.e) +
                        "\nterms: " + join(f, prof.terms) + "\nbeta = " +
                        gsf::ext_element_text(f, prof.beta) +
                        ", order " + std::to_string(prof.beta_order) + "\n");
    }
    return GS_OK;
  });
}

}  // extern "C"
