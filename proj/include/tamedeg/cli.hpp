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

#ifndef TAMEDEG_CLI_HPP
#define TAMEDEG_CLI_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tamedeg/certio.hpp"
#include "tamedeg/errors.hpp"
#include "tamedeg/tamecert.hpp"

// Command implementations behind the `tamedeg` binary. Each returns the
// payload and exit code instead of touching files, so they can be driven
// directly from tests.
//
// Exit codes: 0 all verifications passed, 1 a verification failed,
// 2 usage or parse error.

namespace tamedeg::cli {

enum class Format { Json, Text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  throw ParseError("unknown format '" + s + "' (expected json or text)");
}

struct CommandResult {
  int exit_code = 0;
  std::string payload;
  std::string diagnostic;  // for stderr
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline void flatten(const Json& v, const std::string& prefix, std::string& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (v.is_array()) {
    if (v.empty()) out += prefix + ": []\n";
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (v.is_string()) {
    out += prefix + ": " + v.get<std::string>() + "\n";
  } else {
    out += prefix + ": " + v.dump() + "\n";
  }
}

inline std::string render(const Json& doc, Format format) {
  if (format == Format::Json) return doc.dump(2) + "\n";
  std::string out;
  flatten(doc, "", out);
  return out;
}

inline CommandResult finish(const Json& doc, const Transcript& tr, Format format) {
  CommandResult r;
  r.payload = render(doc, format);
  r.exit_code = tr.all_passed() ? kExitOk : kExitVerificationFailed;
  for (const auto& f : tr.failures()) r.diagnostic += "failed: " + f + "\n";
  return r;
}

inline CommandResult usage(const std::string& message) { return {kExitUsage, "", message + "\n"}; }

template <typename Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return usage(std::string("parse error: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    return usage(std::string("malformed document: ") + e.what());
  } catch (const PoleError& e) {
    return usage(std::string("pole: ") + e.what());
  } catch (const HypothesisViolation& e) {
    return usage(std::string("invalid input: ") + e.what());
  } catch (const Error& e) {
    return {kExitVerificationFailed, "", std::string("error: ") + e.what() + "\n"};
  }
}

inline Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("not valid JSON: ") + e.what());
  }
}

}  // namespace detail

/// `family --l <l>`: the verified family instance.
inline CommandResult cmd_family(int l, Format format = Format::Json) {
  if (l < 1) return detail::usage("family: --l must be an integer >= 1");
  return detail::guarded([&] {
    const FamilyInstance fam = build_family(l);
    const Transcript tr = verify_family(fam);
    return detail::finish(family_document(fam, tr), tr, format);
  });
}

/// `smith --l <l>`: stabilization certificate for the family plus length bounds.
inline CommandResult cmd_smith(int l, Format format = Format::Json) {
  if (l < 1) return detail::usage("smith: --l must be an integer >= 1");
  return detail::guarded([&] {
    const FamilyInstance fam = build_family(l);
    const StabilizationCertificate s = build_smith_stabilization(fam.delta, fam.h);
    const LengthBounds lb = length_bounds(fam.conjugation(), s, Rational(1));
    Transcript tr = verify_stabilization(s);
    tr.append(verify_length_bounds(lb), "length: ");
    return detail::finish(stabilization_document(s, &lb, tr, l), tr, format);
  });
}

/// `specialize --in <doc> --alpha <q>`.
///
/// For documents carrying a derivation and kernel element (family,
/// conjugation): alpha != 0 yields the three-factor triangular word of the
/// fiber, alpha = 0 the fiber with its wildness report. Plain `endo`
/// documents are specialized image by image.
inline CommandResult cmd_specialize(const std::string& document, const std::string& alpha_text,
                                    Format format = Format::Json) {
  return detail::guarded([&] {
    const Rational alpha = Rational::parse(alpha_text);
    const Json doc = detail::parse_document(document);
    const std::string kind = io::read_string(doc, "kind");
    if (kind == "endo") {
      const std::size_t n = io::read_arity(doc);
      const PolyEndo source(io::read_poly_list(io::field(doc, "images"), n, n, "images"));
      const RingMode mode = parse_ring_mode(io::read_string(doc, "ring_mode"));
      const PolyEndo fiber = specialize(source, alpha);
      Transcript tr;
      tr.check("fiber = source|_{t=alpha}", [&] { return specialize(source, alpha) == fiber; });
      return detail::finish(fiber_document(source, mode, alpha, fiber, tr), tr, format);
    }
    std::optional<ConjugationCertificate> conj;
    if (kind == "family") conj = read_family(doc).conjugation();
    else if (kind == "conjugation") conj = read_conjugation(doc);
    else throw ParseError("specialize accepts family, conjugation or endo documents, got '" + kind + "'");
    const PolyEndo fiber = specialize(conj->delta.exp_auto(conj->h), alpha);
    if (alpha.is_zero()) {
      const WildnessReport report = check_wild_at_zero(conj->delta, conj->h);
      const Transcript tr = verify_wildness(conj->delta, conj->h, fiber, report);
      return detail::finish(wildness_document(conj->delta, conj->h, fiber, report, tr), tr, format);
    }
    const ConjugationCertificate checked = build_conjugation(conj->delta, conj->h);
    const std::vector<PolyEndo> word = specialized_tameness(checked, alpha);
    const Transcript tr = verify_tameness_word(conj->delta, conj->h, alpha, fiber, word);
    return detail::finish(tameness_word_document(conj->delta, conj->h, alpha, fiber, word, tr), tr, format);
  });
}

/// `verify --in <doc>`: recompute every identity from the embedded data.
inline CommandResult cmd_verify(const std::string& document, Format format = Format::Json) {
  return detail::guarded([&] {
    const Json doc = detail::parse_document(document);
    const Transcript tr = verify_document(doc);
    Json failures = Json::array();
    for (const auto& f : tr.failures()) failures.push_back(f);
    Json report = {{"kind", "verification"},
                   {"verified_kind", io::read_string(doc, "kind")},
                   {"all_passed", tr.all_passed()},
                   {"failures", std::move(failures)},
                   {"transcript", io::transcript(tr)}};
    return detail::finish(report, tr, format);
  });
}

}  // namespace tamedeg::cli

#endif  // TAMEDEG_CLI_HPP
