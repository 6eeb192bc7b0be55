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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tamedeg/cli.hpp"

namespace {

using tamedeg::cli::CommandResult;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int emit(const CommandResult& r, const std::string& out_path) {
  std::cerr << r.diagnostic;
  if (r.payload.empty()) return r.exit_code;
  if (out_path.empty()) {
    std::cout << r.payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return tamedeg::cli::kExitUsage;
    }
    out << r.payload;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tame/wild certificates for exponential automorphisms over Q[t]"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  std::string in_path;
  std::string alpha;
  int l = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out_path, "write the payload here instead of stdout");
  };

  auto* family = app.add_subcommand("family", "build and verify the degenerating family for parameter l");
  family->add_option("--l", l, "family parameter, l >= 1")->required();
  add_common(family);

  auto* smith = app.add_subcommand("smith", "stabilization certificate and length bounds for parameter l");
  smith->add_option("--l", l, "family parameter, l >= 1")->required();
  add_common(smith);

  auto* specialize_cmd = app.add_subcommand("specialize", "specialize a family, conjugation or endo document at t = alpha");
  specialize_cmd->add_option("--in", in_path, "input document")->required();
  specialize_cmd->add_option("--alpha", alpha, "exact rational num/den")->required();
  add_common(specialize_cmd);

  auto* verify = app.add_subcommand("verify", "re-verify a certificate from its embedded data");
  verify->add_option("--in", in_path, "certificate document")->required();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return tamedeg::cli::kExitUsage;
  }

  const auto fmt = tamedeg::cli::parse_format(format);
  std::string input;
  if (!in_path.empty() && !read_file(in_path, input)) {
    std::cerr << "cannot read " << in_path << "\n";
    return tamedeg::cli::kExitUsage;
  }

  if (family->parsed()) return emit(tamedeg::cli::cmd_family(l, fmt), out_path);
  if (smith->parsed()) return emit(tamedeg::cli::cmd_smith(l, fmt), out_path);
  if (specialize_cmd->parsed()) return emit(tamedeg::cli::cmd_specialize(input, alpha, fmt), out_path);
  return emit(tamedeg::cli::cmd_verify(input, fmt), out_path);
}
