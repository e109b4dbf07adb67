#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "gsfactor/factorizer.hpp"

namespace gsf {

using nlohmann::json;

// "q=13", "q=9", "p=3,k=2", "p=13" or a bare "13". Throws FieldError when q
// is not an odd prime power and ParseError for malformed text.
FieldPtr parse_field_spec(std::string_view spec);

// Integers ("6", "-1"), fractions ("-1/2") or base-p digits a_0..a_{k-1}
// separated by commas ("1,2").
Elem parse_element(const Field& f, std::string_view literal);

// Prime fields: the residue. Extensions: "(a_0,...,a_{k-1})" in text and a
// digit array in JSON.
std::string element_text(const Field& f, Elem a);
json element_json(const Field& f, Elem a);
json elements_json(const Field& f, std::span<const Elem> xs);
// "a+b*t" with a, b in element_text form.
std::string ext_element_text(const Field& f, Elem2 x);

// Highest degree first, e.g. "y^3 + 5*y^2 + 3*y + 1".
std::string poly_text(const Poly& p);
// e.g. "7*(y^3 + 5*y^2 + 3*y + 1)*(y - 4)^2".
std::string factorization_text(const Factorization& fz);
// {"lead": ..., "factors": [{"coeffs": [constant first ...], "mult": n}]}
json factorization_json(const Factorization& fz);

// {"s", "case", "e", "constant_terms", "residue", "b_set", "factorization"}
json case_report_json(const DicksonCtx& ctx, Elem s, const ClosedForm& cf);
std::string case_report_text(const DicksonCtx& ctx, Elem s, const ClosedForm& cf);

// {"q", "n", "E", "tau", "C", "W_size"}
json field_summary_json(const DicksonCtx& ctx);
// {"c", "e", "terms", "beta", "beta_order"}
json profile_json(const RecurrenceProfile& prof);
// {"s", "d", "b_set", "norms", "partner_norms", "residue"}
json norm_class_json(const Field& f, const NormClass& nc);

}  // namespace gsf
