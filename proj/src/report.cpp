#include "gsfactor/report.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace gsf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

u64 parse_u64(std::string_view text, std::string_view what) {
  text = trim(text);
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

// Signed integer literal reduced into F_q.
Elem parse_integer(const Field& f, std::string_view text) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const u64 mag = parse_u64(text, "element literal");
  const Elem a = f.from_int(static_cast<i64>(mag % f.p()));
  return negative ? f.neg(a) : a;
}

}  // namespace

FieldPtr parse_field_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw ParseError("empty field spec");
  std::optional<u64> q, p, k;
  for (std::string_view token : split(spec, ',')) {
    token = trim(token);
    const auto eq = token.find('=');
    const std::string_view key = eq == std::string_view::npos ? "q" : trim(token.substr(0, eq));
    const std::string_view val = eq == std::string_view::npos ? token : token.substr(eq + 1);
    std::optional<u64>* slot = key == "q" ? &q : key == "p" ? &p : key == "k" ? &k : nullptr;
    if (!slot) throw ParseError("unknown field spec key '" + std::string(key) + "'");
    if (slot->has_value()) throw ParseError("repeated field spec key '" + std::string(key) + "'");
    *slot = parse_u64(val, "field spec value");
  }
  if (q && (p || k)) throw ParseError("give either q=... or p=...,k=...");
  if (q) {
    const auto pk = odd_prime_power(*q);
    if (!pk) throw FieldError("q must be an odd prime power");
    return Field::make(pk->first, pk->second);
  }
  if (!p) throw ParseError("field spec needs q=... or p=...");
  const u64 kk = k.value_or(1);
  if (kk < 1 || kk > 64) throw FieldError("extension degree k must be at least 1");
  return Field::make(*p, static_cast<unsigned>(kk));
}

Elem parse_element(const Field& f, std::string_view literal) {
  literal = trim(literal);
  if (literal.empty()) throw ParseError("empty element literal");
  if (literal.find(',') != std::string_view::npos) {
    std::vector<u64> digits;
    for (std::string_view d : split(literal, ',')) digits.push_back(parse_u64(d, "digit"));
    return f.from_digits(digits);
  }
  if (const auto slash = literal.find('/'); slash != std::string_view::npos) {
    const Elem num = parse_integer(f, literal.substr(0, slash));
    const Elem den = parse_integer(f, literal.substr(slash + 1));
    if (den == f.zero()) throw ParseError("denominator vanishes in F_" + std::to_string(f.q()));
    return f.div(num, den);
  }
  return parse_integer(f, literal);
}

std::string element_text(const Field& f, Elem a) {
  if (f.is_prime_field()) return std::to_string(a.code);
  std::string out = "(";
  const auto digits = f.digits(a);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits[i]);
  }
  return out + ")";
}

json element_json(const Field& f, Elem a) {
  if (f.is_prime_field()) return a.code;
  return f.digits(a);
}

json elements_json(const Field& f, std::span<const Elem> xs) {
  json out = json::array();
  for (Elem a : xs) out.push_back(element_json(f, a));
  return out;
}

std::string ext_element_text(const Field& f, Elem2 x) {
  return element_text(f, x.a) + "+" + element_text(f, x.b) + "*t";
}

std::string poly_text(const Poly& p) {
  if (p.is_zero()) return "0";
  const Field& f = p.field();
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Elem c = p.coeff(i);
    if (c == f.zero()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += element_text(f, c);
      continue;
    }
    if (c != f.one()) out += element_text(f, c) + "*";
    out += i == 1 ? std::string("y") : "y^" + std::to_string(i);
  }
  return out;
}

std::string factorization_text(const Factorization& fz) {
  std::string out = element_text(*fz.field, fz.lead);
  for (const Factor& fac : fz.factors) {
    out += "*(" + poly_text(fac.poly) + ")";
    if (fac.mult > 1) out += "^" + std::to_string(fac.mult);
  }
  return out;
}

json factorization_json(const Factorization& fz) {
  json factors = json::array();
  for (const Factor& fac : fz.factors) {
    factors.push_back({{"coeffs", elements_json(*fz.field, fac.poly.coeffs())}, {"mult", fac.mult}});
  }
  return {{"lead", element_json(*fz.field, fz.lead)}, {"factors", std::move(factors)}};
}

namespace {

std::optional<int> common_residue(const Field& f, const std::vector<Elem>& xs) {
  if (xs.empty()) return std::nullopt;
  const int r = f.quad_char(xs.front());
  for (Elem m : xs) {
    if (f.quad_char(m) != r) return std::nullopt;
  }
  return r;
}

}  // namespace

json case_report_json(const DicksonCtx& ctx, Elem s, const ClosedForm& cf) {
  const Field& f = ctx.field();
  const bool deep = cf.tag.kind == CaseKind::DegreeE;
  const auto residue = common_residue(f, cf.constant_terms);
  return {
      {"q", f.q()},
      {"s", element_json(f, s)},
      {"case", std::string(case_name(cf.tag.kind))},
      {"e", deep ? json(cf.tag.e) : json(nullptr)},
      {"constant_terms", elements_json(f, cf.constant_terms)},
      {"residue", residue ? json(*residue) : json(nullptr)},
      {"b_set", std::string(trace_class_name(trace_class(ctx, s)))},
      {"factorization", factorization_json(cf.factorization)},
  };
}

std::string case_report_text(const DicksonCtx& ctx, Elem s, const ClosedForm& cf) {
  const Field& f = ctx.field();
  std::string out = "q = " + std::to_string(f.q()) + ", s = " + element_text(f, s) + "\n";
  out += "case: " + std::string(case_name(cf.tag.kind));
  if (cf.tag.kind == CaseKind::DegreeE) {
    out += " (e = " + std::to_string(cf.tag.e) + ")\n";
    out += "constant terms:";
    for (Elem m : cf.constant_terms) out += " " + element_text(f, m);
    out += "\n";
    const auto residue = common_residue(f, cf.constant_terms);
    out += "residue: " + (residue ? std::to_string(*residue) : std::string("mixed")) + "\n";
    out += "b_set: " + std::string(trace_class_name(trace_class(ctx, s))) + "\n";
  } else {
    out += "\n";
  }
  out += "g_s = " + factorization_text(cf.factorization) + "\n";
  return out;
}

json field_summary_json(const DicksonCtx& ctx) {
  const Field& f = ctx.field();
  return {
      {"q", f.q()},
      {"n", ctx.n()},
      {"E", ctx.big_e()},
      {"tau", element_json(f, ctx.tau())},
      {"C", elements_json(f, ctx.square_pairs())},
      {"W_size", ctx.nonsquare_halves().size()},
  };
}

json profile_json(const RecurrenceProfile& prof) {
  const Field& f = *prof.field;
  return {
      {"c", element_json(f, prof.c)},
      {"e", prof.e},
      {"terms", elements_json(f, prof.terms)},
      {"beta", ext_element_text(f, prof.beta)},
      {"beta_order", prof.beta_order},
  };
}

json norm_class_json(const Field& f, const NormClass& nc) {
  return {
      {"s", element_json(f, nc.s)},
      {"d", nc.d},
      {"b_set", std::string(trace_class_name(nc.membership))},
      {"norms", elements_json(f, nc.norms)},
      {"partner_norms", elements_json(f, nc.partner_norms)},
      {"residue", nc.residue ? json(*nc.residue) : json(nullptr)},
  };
}

}  // namespace gsf
