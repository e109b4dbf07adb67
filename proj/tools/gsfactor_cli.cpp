// Command-line front end over the C API.
//
//   gsfactor factor q=13 s=6
//   gsfactor verify --field p=3,k=2
//   gsfactor atlas --max-q 50
//
// Exit status: 0 success, 2 usage or input error, 3 a verified identity failed.

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gsfactor.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct UsageError {
  std::string message;
};

int exit_code(gs_status st) {
  switch (st) {
    case GS_OK: return kExitOk;
    case GS_ERR_INVARIANT:
    case GS_ERR_INTERNAL: return kExitInvariant;
    default: return kExitUsage;
  }
}

struct Options {
  std::string field;
  std::string s;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> max_q;
  std::vector<std::string> tokens;  // positional key=value pairs
};

// Folds positional "q=13", "p=3,k=2", "s=6", "c=4" tokens into the options.
void absorb_tokens(Options& o, std::string* c_literal) {
  std::string field_from_tokens;
  for (const std::string& tok : o.tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw UsageError{"unexpected argument '" + tok + "'"};
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "q" || key == "p" || key == "k") {
      if (!field_from_tokens.empty()) field_from_tokens += ',';
      field_from_tokens += tok;
    } else if (key == "s") {
      if (!o.s.empty()) throw UsageError{"s given twice"};
      o.s = val;
    } else if (key == "c" && c_literal) {
      *c_literal = val;
    } else {
      throw UsageError{"unknown argument '" + tok + "'"};
    }
  }
  if (!field_from_tokens.empty()) {
    if (!o.field.empty()) throw UsageError{"field given twice"};
    o.field = field_from_tokens;
  }
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("GS_SEED"); env && *env) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (errno != 0 || *end != '\0') throw UsageError{"GS_SEED is not an unsigned integer"};
    return v;
  }
  return gs_default_seed();
}

gs_format resolve_format(const Options& o) {
  return o.format == "json" ? GS_FORMAT_JSON : GS_FORMAT_TEXT;
}

struct FieldHandle {
  gs_field* h = nullptr;
  ~FieldHandle() { gs_field_close(h); }
};

// Prints *out (if any) and reports failures. Returns the status.
gs_status emit(gs_status st, char* out) {
  if (out) {
    std::fputs(out, stdout);
    gs_string_free(out);
  }
  if (st != GS_OK) std::cerr << "error (" << gs_status_name(st) << "): " << gs_last_error() << "\n";
  return st;
}

std::vector<std::string> field_specs(const Options& o, bool allow_sweep) {
  if (o.max_q) {
    if (!allow_sweep) throw UsageError{"--max-q is not supported by this subcommand"};
    if (!o.field.empty()) throw UsageError{"give either a field or --max-q, not both"};
    std::vector<std::string> specs;
    for (std::uint64_t q = 3; q <= *o.max_q; q += 2) {
      if (gs_is_odd_prime_power(q)) specs.push_back("q=" + std::to_string(q));
    }
    return specs;
  }
  if (o.field.empty()) throw UsageError{"a field is required (q=... or --field)"};
  return {o.field};
}

template <class Fn>
int for_each_field(const Options& o, bool allow_sweep, Fn&& fn) {
  int worst = kExitOk;
  for (const std::string& spec : field_specs(o, allow_sweep)) {
    FieldHandle field;
    gs_status st = gs_field_open(spec.c_str(), &field.h);
    if (st != GS_OK) {
      emit(st, nullptr);
      return exit_code(st);
    }
    st = fn(field.h);
    const int code = exit_code(st);
    if (code == kExitUsage) return code;
    worst = std::max(worst, code);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factor g_s(y) = y^n + (1-y)^n - s over F_q and check the closed forms"};
  app.require_subcommand(1);
  Options o;
  std::string c_literal;

  const auto add_common = [&](CLI::App* sub, bool wants_s) {
    sub->add_option("--field", o.field, "Field spec: q=13 or p=3,k=2");
    if (wants_s) sub->add_option("--s", o.s, "Element literal: 6, -1/2 or digits 1,2");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", o.seed, "Seed for the randomized oracle (env GS_SEED)");
    sub->add_option("tokens", o.tokens, "Positional q=..., p=...,k=..., s=...");
  };

  CLI::App* factor = app.add_subcommand("factor", "Case report and closed-form factorization of g_s");
  add_common(factor, true);
  CLI::App* verify = app.add_subcommand("verify", "Compare closed forms with the generic factorization for every s");
  add_common(verify, false);
  verify->add_option("--max-q", o.max_q, "Sweep every odd prime power up to this bound");
  CLI::App* atlas = app.add_subcommand("atlas", "JSON lines, one case report per s");
  add_common(atlas, false);
  atlas->add_option("--max-q", o.max_q, "Sweep every odd prime power up to this bound");
  CLI::App* irreducible = app.add_subcommand("irreducible", "All s with g_s irreducible");
  add_common(irreducible, false);
  irreducible->add_option("--max-q", o.max_q, "Sweep every odd prime power up to this bound");
  CLI::App* residuacity = app.add_subcommand("residuacity", "Constant terms of the degree-e factors and their residues");
  add_common(residuacity, true);
  CLI::App* corollaries = app.add_subcommand("check-corollaries", "Period families and the cubic complement check");
  add_common(corollaries, false);
  corollaries->add_option("--max-q", o.max_q, "Sweep every odd prime power up to this bound");
  CLI::App* summary = app.add_subcommand("summary", "n, E, tau and the square-pair set");
  add_common(summary, false);
  CLI::App* profile = app.add_subcommand("profile", "Sequence, period and beta for one c");
  add_common(profile, false);
  profile->add_option("--c", c_literal, "Element c with c and 1-c nonzero squares");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    absorb_tokens(o, profile->parsed() ? &c_literal : nullptr);
    const std::uint64_t seed = resolve_seed(o);
    const gs_format fmt = resolve_format(o);

    if (factor->parsed() || residuacity->parsed()) {
      if (o.s.empty()) throw UsageError{"s is required (s=... or --s)"};
      return for_each_field(o, false, [&](gs_field* f) {
        char* out = nullptr;
        const gs_status st = factor->parsed() ? gs_factor(f, o.s.c_str(), seed, fmt, &out)
                                              : gs_residuacity(f, o.s.c_str(), seed, fmt, &out);
        return emit(st, out);
      });
    }
    if (verify->parsed()) {
      std::uint64_t all_ok = 0;
      std::uint64_t all_total = 0;
      const int rc = for_each_field(o, true, [&](gs_field* f) {
        char* out = nullptr;
        std::uint64_t ok = 0;
        std::uint64_t total = 0;
        const gs_status st = gs_verify(f, seed, fmt, &out, &ok, &total);
        all_ok += ok;
        all_total += total;
        return emit(st, out);
      });
      if (o.max_q && fmt == GS_FORMAT_TEXT) {
        std::cout << "total: " << all_ok << "/" << all_total << " values of s verified\n";
      }
      return rc;
    }
    if (atlas->parsed()) {
      return for_each_field(o, true, [&](gs_field* f) {
        char* out = nullptr;
        const gs_status st = gs_atlas(f, seed, &out);
        return emit(st, out);
      });
    }
    if (irreducible->parsed()) {
      return for_each_field(o, true, [&](gs_field* f) {
        char* out = nullptr;
        const gs_status st = gs_irreducible_values(f, fmt, &out);
        return emit(st, out);
      });
    }
    if (corollaries->parsed()) {
      return for_each_field(o, true, [&](gs_field* f) {
        char* out = nullptr;
        const gs_status st = gs_check_corollaries(f, seed, fmt, &out);
        return emit(st, out);
      });
    }
    if (summary->parsed()) {
      return for_each_field(o, false, [&](gs_field* f) {
        char* out = nullptr;
        const gs_status st = gs_field_summary(f, fmt, &out);
        return emit(st, out);
      });
    }
    if (profile->parsed()) {
      if (c_literal.empty()) throw UsageError{"c is required (c=... or --c)"};
      return for_each_field(o, false, [&](gs_field* f) {
        char* out = nullptr;
        const gs_status st = gs_profile(f, c_literal.c_str(), fmt, &out);
        return emit(st, out);
      });
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
