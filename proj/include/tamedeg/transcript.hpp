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

#ifndef TAMEDEG_TRANSCRIPT_HPP
#define TAMEDEG_TRANSCRIPT_HPP

#include <algorithm>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "tamedeg/errors.hpp"

namespace tamedeg {

struct Check {
  std::string identity;
  bool passed = false;
  std::string detail;  // empty unless the check failed with a diagnostic
};

/// Ordered list of checked identities with their outcomes.
class Transcript {
 public:
  void record(std::string identity, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(identity), passed, std::move(detail)});
  }

  /// Runs `fn` (returning bool); an exception inside counts as failure.
  template <typename Fn>
  bool check(std::string identity, Fn&& fn) {
    try {
      const bool ok = fn();
      record(std::move(identity), ok);
      return ok;
    } catch (const std::exception& e) {
      record(std::move(identity), false, e.what());
      return false;
    }
  }

  void append(const Transcript& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.identity, c.passed, c.detail});
  }

  [[nodiscard]] bool all_passed() const {
    return !checks_.empty() && std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
  }
  [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }

  [[nodiscard]] std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks_)
      if (!c.passed) out.push_back(c.detail.empty() ? c.identity : c.identity + " (" + c.detail + ")");
    return out;
  }

  /// Throws InternalError naming the first failure.
  void require(const std::string& context) const {
    for (const auto& c : checks_)
      if (!c.passed)
        throw InternalError(context + ": identity failed: " + c.identity + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace tamedeg

#endif  // TAMEDEG_TRANSCRIPT_HPP
