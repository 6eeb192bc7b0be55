// Copyright 2026 The tamedeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TAMEDEG_CERTIO_HPP
#define TAMEDEG_CERTIO_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tamedeg/automorphism.hpp"
#include "tamedeg/derivation.hpp"
#include "tamedeg/errors.hpp"
#include "tamedeg/multipoly.hpp"
#include "tamedeg/tamecert.hpp"
#include "tamedeg/text.hpp"
#include "tamedeg/transcript.hpp"

// JSON envelopes for certificates. Polynomials are stored as strings in
// the canonical text grammar; every document carries `kind`, `arity`,
// `ring_mode` and a `transcript` of checked identities.

namespace tamedeg {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

namespace io {

inline Json poly(const MultiPoly& p) { return p.to_string(); }

inline Json endo(const PolyEndo& phi) {
  Json a = Json::array();
  for (const auto& img : phi.images()) a.push_back(img.to_string());
  return a;
}

inline Json derivation(const TriangularDerivation& d) {
  Json a = Json::array();
  for (const auto& f : d.images()) a.push_back(f.to_string());
  return a;
}

inline Json word(const std::vector<PolyEndo>& w) {
  Json a = Json::array();
  for (const auto& f : w) a.push_back(endo(f));
  return a;
}

inline Json transcript(const Transcript& tr) {
  Json a = Json::array();
  for (const auto& c : tr.checks()) {
    Json e = {{"identity", c.identity}, {"pass", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    a.push_back(std::move(e));
  }
  return a;
}

inline Json wildness(const WildnessReport& r) {
  return {{"alpha", "0"},
          {"f2bar", poly(r.f2bar)},
          {"f3bar", poly(r.f3bar)},
          {"hbar", poly(r.hbar)},
          {"f2bar_nonzero", r.f2bar_nonzero},
          {"hbar_outside_x1", r.hbar_outside_x1},
          {"df3_not_in_ideal", r.df3_not_in_ideal},
          {"verdict", to_string(r.verdict)}};
}

// --- reading -------------------------------------------------------------

inline const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

inline std::string read_string(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline long long read_int(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

inline bool read_bool(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_boolean()) throw ParseError(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

inline std::size_t read_arity(const Json& doc) {
  const long long n = read_int(doc, "arity");
  if (n < 1 || n > static_cast<long long>(kMaxArity)) throw ParseError("arity out of range");
  return static_cast<std::size_t>(n);
}

inline MultiPoly read_poly(const Json& doc, const char* key, std::size_t arity) {
  return parse_multipoly(read_string(doc, key), arity);
}

inline std::vector<MultiPoly> read_poly_list(const Json& v, std::size_t arity, std::size_t count, const char* key) {
  if (!v.is_array() || v.size() != count)
    throw ParseError(std::string("field '") + key + "' must be a list of " + std::to_string(count) + " polynomials");
  std::vector<MultiPoly> out;
  for (const auto& s : v) {
    if (!s.is_string()) throw ParseError(std::string("field '") + key + "' must hold strings");
    out.push_back(parse_multipoly(s.get<std::string>(), arity));
  }
  return out;
}

inline PolyEndo read_endo(const Json& doc, const char* key, std::size_t arity) {
  return PolyEndo(read_poly_list(field(doc, key), arity, arity, key));
}

inline TriangularDerivation read_derivation(const Json& doc, const char* key, std::size_t arity) {
  return TriangularDerivation(read_poly_list(field(doc, key), arity, arity, key));
}

inline std::vector<PolyEndo> read_word(const Json& doc, const char* key, std::size_t arity) {
  const Json& v = field(doc, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be a list of endomorphisms");
  std::vector<PolyEndo> out;
  for (const auto& e : v) out.emplace_back(read_poly_list(e, arity, arity, key));
  return out;
}

inline Rational read_rational(const Json& doc, const char* key) { return Rational::parse(read_string(doc, key)); }

inline WildnessReport read_wildness(const Json& doc, std::size_t arity) {
  WildnessReport r{read_poly(doc, "f2bar", arity), read_poly(doc, "f3bar", arity), read_poly(doc, "hbar", arity)};
  r.f2bar_nonzero = read_bool(doc, "f2bar_nonzero");
  r.hbar_outside_x1 = read_bool(doc, "hbar_outside_x1");
  r.df3_not_in_ideal = read_bool(doc, "df3_not_in_ideal");
  const std::string v = read_string(doc, "verdict");
  if (v == "wild") r.verdict = Verdict::Wild;
  else if (v == "tame-or-undetermined") r.verdict = Verdict::TameOrUndetermined;
  else throw ParseError("unknown verdict '" + v + "'");
  return r;
}

}  // namespace io

// --- documents -----------------------------------------------------------

inline Json family_document(const FamilyInstance& f, const Transcript& tr) {
  Json c = Json::array();
  for (const auto& ci : f.coeffs_c) c.push_back(ci.to_string());
  return {{"kind", "family"},
          {"format_version", kFormatVersion},
          {"l", f.l},
          {"arity", 3},
          {"ring_mode", to_string(RingMode::Laurent)},
          {"c", std::move(c)},
          {"delta", io::derivation(f.delta)},
          {"g2", io::poly(f.g2)},
          {"g3", io::poly(f.g3)},
          {"tau", io::endo(f.tau)},
          {"tau_inv", io::endo(f.tau_inv)},
          {"p", io::poly(f.p)},
          {"epsilon", io::endo(f.epsilon)},
          {"factor_word", {"tau", "epsilon", "tau_inv"}},
          {"h", io::poly(f.h)},
          {"phi", io::endo(f.phi)},
          {"delta0", io::derivation(f.delta0)},
          {"h_limit", io::poly(f.h_limit)},
          {"wildness_at_zero", io::wildness(f.wildness)},
          {"transcript", io::transcript(tr)}};
}

inline FamilyInstance read_family(const Json& doc) {
  const long long l = io::read_int(doc, "l");
  if (l < 1 || l > 1000) throw ParseError("family parameter l out of range");
  const Json& cj = io::field(doc, "c");
  if (!cj.is_array()) throw ParseError("field 'c' must be a list");
  std::vector<Rational> c;
  for (const auto& v : cj) {
    if (!v.is_string()) throw ParseError("field 'c' must hold rational strings");
    c.push_back(Rational::parse(v.get<std::string>()));
  }
  return FamilyInstance{static_cast<int>(l),
                        std::move(c),
                        io::read_derivation(doc, "delta", 3),
                        io::read_poly(doc, "g2", 3),
                        io::read_poly(doc, "g3", 3),
                        io::read_endo(doc, "tau", 3),
                        io::read_endo(doc, "tau_inv", 3),
                        io::read_poly(doc, "p", 3),
                        io::read_endo(doc, "epsilon", 3),
                        io::read_poly(doc, "h", 3),
                        io::read_endo(doc, "phi", 3),
                        io::read_derivation(doc, "delta0", 3),
                        io::read_poly(doc, "h_limit", 3),
                        io::read_wildness(io::field(doc, "wildness_at_zero"), 3)};
}

inline Json conjugation_document(const ConjugationCertificate& c, const Transcript& tr) {
  return {{"kind", "conjugation"},
          {"format_version", kFormatVersion},
          {"arity", c.delta.arity()},
          {"ring_mode", to_string(RingMode::Laurent)},
          {"delta", io::derivation(c.delta)},
          {"h", io::poly(c.h)},
          {"f1", c.f1.to_string()},
          {"tau", io::endo(c.tau)},
          {"tau_inv", io::endo(c.tau_inv)},
          {"p", io::poly(c.slice_potential)},
          {"epsilon", io::endo(c.epsilon)},
          {"factor_word", {"tau", "epsilon", "tau_inv"}},
          {"phi", io::endo(c.phi)},
          {"transcript", io::transcript(tr)}};
}

inline ConjugationCertificate read_conjugation(const Json& doc) {
  const std::size_t n = io::read_arity(doc);
  return ConjugationCertificate{io::read_derivation(doc, "delta", n),
                                io::read_poly(doc, "h", n),
                                parse_laurent(io::read_string(doc, "f1")),
                                io::read_endo(doc, "tau", n),
                                io::read_endo(doc, "tau_inv", n),
                                io::read_poly(doc, "p", n),
                                io::read_endo(doc, "epsilon", n),
                                io::read_endo(doc, "phi", n)};
}

inline Json stabilization_document(const StabilizationCertificate& s, const LengthBounds* lb, const Transcript& tr,
                                   int l = 0) {
  Json alphas = Json::array();
  for (const auto& a : s.alphas) alphas.push_back(a.to_string());
  Json doc = {{"kind", "stabilization"}, {"format_version", kFormatVersion}};
  if (l > 0) doc["l"] = l;
  doc["arity"] = s.delta.arity() + 1;
  doc["base_arity"] = s.delta.arity();
  doc["ring_mode"] = to_string(s.mode);
  doc["delta"] = io::derivation(s.delta);
  doc["h"] = io::poly(s.h);
  doc["base"] = io::endo(s.base);
  doc["delta_tilde"] = io::derivation(s.delta_tilde);
  doc["gamma"] = io::endo(s.gamma);
  doc["gamma_inv"] = io::endo(s.gamma_inv);
  doc["rho"] = io::endo(s.rho);
  doc["rho_inv"] = io::endo(s.rho_inv);
  doc["factor_word"] = {"gamma_inv", "rho_inv", "gamma", "rho"};
  doc["factor_count"] = s.factor_count;
  doc["extended"] = io::endo(s.extended);
  doc["specializations"] = std::move(alphas);
  if (lb) {
    doc["length_bounds"] = {{"alpha_nonzero_bound", lb->alpha_nonzero_bound},
                            {"alpha_zero_bound", lb->alpha_zero_bound},
                            {"witness_alpha", lb->witness_alpha.to_string()},
                            {"alpha_nonzero_word", io::word(lb->nonzero_word)},
                            {"alpha_zero_word", io::word(lb->zero_word)},
                            {"alpha_zero_exact_value", "4 (only the upper bound is checked)"}};
  }
  doc["transcript"] = io::transcript(tr);
  return doc;
}

inline StabilizationCertificate read_stabilization(const Json& doc) {
  const std::size_t m = io::read_arity(doc);
  const long long n_ll = io::read_int(doc, "base_arity");
  if (m < 2 || n_ll != static_cast<long long>(m) - 1) throw ParseError("base_arity must be arity - 1");
  const std::size_t n = m - 1;
  const Json& aj = io::field(doc, "specializations");
  if (!aj.is_array()) throw ParseError("field 'specializations' must be a list");
  std::vector<Rational> alphas;
  for (const auto& a : aj) {
    if (!a.is_string()) throw ParseError("field 'specializations' must hold rational strings");
    alphas.push_back(Rational::parse(a.get<std::string>()));
  }
  StabilizationCertificate s{io::read_derivation(doc, "delta", n),
                             io::read_poly(doc, "h", n),
                             io::read_endo(doc, "base", n),
                             io::read_derivation(doc, "delta_tilde", m),
                             io::read_endo(doc, "gamma", m),
                             io::read_endo(doc, "gamma_inv", m),
                             io::read_endo(doc, "rho", m),
                             io::read_endo(doc, "rho_inv", m),
                             io::read_endo(doc, "extended", m),
                             parse_ring_mode(io::read_string(doc, "ring_mode")),
                             std::move(alphas)};
  s.factor_count = static_cast<int>(io::read_int(doc, "factor_count"));
  return s;
}

inline LengthBounds read_length_bounds(const Json& doc, const PolyEndo& psi) {
  const Json& lb = io::field(doc, "length_bounds");
  const std::size_t m = psi.arity();
  return LengthBounds{static_cast<int>(io::read_int(lb, "alpha_nonzero_bound")),
                      static_cast<int>(io::read_int(lb, "alpha_zero_bound")), io::read_rational(lb, "witness_alpha"),
                      io::read_word(lb, "alpha_nonzero_word", m), io::read_word(lb, "alpha_zero_word", m), psi};
}

/// Fiber of exp(h*delta) at t = alpha != 0 as a triangular word.
inline Json tameness_word_document(const TriangularDerivation& delta, const MultiPoly& h, const Rational& alpha,
                                   const PolyEndo& fiber, const std::vector<PolyEndo>& word, const Transcript& tr) {
  return {{"kind", "tameness_word"},
          {"format_version", kFormatVersion},
          {"alpha", alpha.to_string()},
          {"arity", delta.arity()},
          {"ring_mode", to_string(RingMode::Polynomial)},
          {"delta", io::derivation(delta)},
          {"h", io::poly(h)},
          {"fiber", io::endo(fiber)},
          {"factor_word", io::word(word)},
          {"factor_names", {"tau_alpha", "epsilon_alpha", "tau_inv_alpha"}},
          {"transcript", io::transcript(tr)}};
}

/// Fiber of exp(h*delta) at t = 0 with its wildness report.
inline Json wildness_document(const TriangularDerivation& delta, const MultiPoly& h, const PolyEndo& fiber,
                              const WildnessReport& r, const Transcript& tr) {
  return {{"kind", "wildness"},
          {"format_version", kFormatVersion},
          {"alpha", "0"},
          {"arity", delta.arity()},
          {"ring_mode", to_string(RingMode::Polynomial)},
          {"delta", io::derivation(delta)},
          {"h", io::poly(h)},
          {"fiber", io::endo(fiber)},
          {"report", io::wildness(r)},
          {"verdict", to_string(r.verdict)},
          {"transcript", io::transcript(tr)}};
}

/// Plain specialization of an endomorphism given only by its images.
inline Json fiber_document(const PolyEndo& source, const RingMode mode, const Rational& alpha, const PolyEndo& fiber,
                           const Transcript& tr) {
  return {{"kind", "fiber"},
          {"format_version", kFormatVersion},
          {"alpha", alpha.to_string()},
          {"arity", source.arity()},
          {"ring_mode", to_string(mode)},
          {"source", io::endo(source)},
          {"fiber", io::endo(fiber)},
          {"transcript", io::transcript(tr)}};
}

inline Json endo_document(const PolyEndo& phi, RingMode mode) {
  return {{"kind", "endo"},
          {"format_version", kFormatVersion},
          {"arity", phi.arity()},
          {"ring_mode", to_string(mode)},
          {"images", io::endo(phi)}};
}

// --- verification --------------------------------------------------------

inline Transcript verify_tameness_word(const TriangularDerivation& delta, const MultiPoly& h, const Rational& alpha,
                                       const PolyEndo& fiber, const std::vector<PolyEndo>& word) {
  Transcript tr;
  tr.record("alpha != 0", !alpha.is_zero());
  tr.check("delta(h) = 0", [&] { return delta.apply(h).is_zero(); });
  tr.check("fiber = exp(h*delta)|_{t=alpha}", [&] { return fiber == specialize(delta.exp_auto(h), alpha); });
  tr.append(verify_triangular_word(word, fiber, 3));
  return tr;
}

inline Transcript verify_wildness(const TriangularDerivation& delta, const MultiPoly& h, const PolyEndo& fiber,
                                  const WildnessReport& stored) {
  Transcript tr;
  tr.check("delta(h) = 0", [&] { return delta.apply(h).is_zero(); });
  tr.check("fiber = exp(h*delta)|_{t=0}", [&] { return fiber == specialize(delta.exp_auto(h), Rational(0)); });
  tr.check("report matches recomputed criterion at t = 0", [&] {
    const WildnessReport r = check_wild_at_zero(delta, h);
    return r.f2bar == stored.f2bar && r.f3bar == stored.f3bar && r.hbar == stored.hbar &&
           r.f2bar_nonzero == stored.f2bar_nonzero && r.hbar_outside_x1 == stored.hbar_outside_x1 &&
           r.df3_not_in_ideal == stored.df3_not_in_ideal && r.verdict == stored.verdict;
  });
  return tr;
}

/// Rebuilds the typed certificate from `doc` and recomputes every identity.
///
/// Throws ParseError when the document is structurally malformed. Data that
/// parses but violates a type invariant (say a non-triangular derivation)
/// is reported as a failed check instead.
inline Transcript verify_document(const Json& doc) {
  const std::string kind = io::read_string(doc, "kind");
  Transcript tr;
  try {
    if (kind == "family") {
      if (io::read_arity(doc) != 3) throw ParseError("family documents have arity 3");
      tr.append(verify_family(read_family(doc)));
      tr.record("wildness report is taken at t = 0",
                io::read_rational(io::field(doc, "wildness_at_zero"), "alpha").is_zero());
    } else if (kind == "conjugation") {
      tr.append(verify_conjugation(read_conjugation(doc)));
    } else if (kind == "stabilization") {
      const StabilizationCertificate s = read_stabilization(doc);
      tr.append(verify_stabilization(s));
      if (doc.contains("length_bounds")) tr.append(verify_length_bounds(read_length_bounds(doc, s.extended)), "length: ");
    } else if (kind == "tameness_word") {
      const std::size_t n = io::read_arity(doc);
      tr.append(verify_tameness_word(io::read_derivation(doc, "delta", n), io::read_poly(doc, "h", n),
                                     io::read_rational(doc, "alpha"), io::read_endo(doc, "fiber", n),
                                     io::read_word(doc, "factor_word", n)));
    } else if (kind == "wildness") {
      const std::size_t n = io::read_arity(doc);
      const WildnessReport stored = io::read_wildness(io::field(doc, "report"), n);
      tr.append(verify_wildness(io::read_derivation(doc, "delta", n), io::read_poly(doc, "h", n),
                                io::read_endo(doc, "fiber", n), stored));
      tr.record("verdict field matches report", io::read_string(doc, "verdict") == to_string(stored.verdict));
      tr.record("fiber and report are taken at t = 0", io::read_rational(doc, "alpha").is_zero() &&
                                                          io::read_rational(io::field(doc, "report"), "alpha").is_zero());
    } else if (kind == "fiber") {
      const std::size_t n = io::read_arity(doc);
      const PolyEndo source = io::read_endo(doc, "source", n);
      const Rational alpha = io::read_rational(doc, "alpha");
      const PolyEndo fiber = io::read_endo(doc, "fiber", n);
      tr.check("fiber = source|_{t=alpha}", [&] { return specialize(source, alpha) == fiber; });
    } else {
      throw ParseError("'" + kind + "' is not a certificate kind");
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    tr.record("document data satisfies type invariants", false, e.what());
  }
  return tr;
}

}  // namespace tamedeg

#endif  // TAMEDEG_CERTIO_HPP
