// Copyright 2026 The clutterkit Authors
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

// Command-line front end. Exit codes: 0 success (or "yes" for predicates),
// 1 "no" for predicates and failed verification, 2 domain errors, 64 usage
// errors, 65 unreadable or malformed input files.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "clutterkit/clutterkit.hpp"

namespace {

constexpr int kExitNo = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

clutterkit::Clutter load(const std::string& path) {
  try {
    return clutterkit::parse_clutter(read_file(path));
  } catch (const clutterkit::ClutterError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_spec(const clutterkit::MinorSpec& spec) {
  auto join = [](const std::vector<std::string>& items) {
    if (items.empty()) return std::string(" -");
    std::string out;
    for (const auto& i : items) out += " " + i;
    return out;
  };
  return "deletes" + join(spec.deletes) + "\ncontracts" + join(spec.contracts) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  namespace ck = clutterkit;
  CLI::App app{"Clutters: minors, blockers, connectivity and splitter chains"};
  app.require_subcommand(1);

  std::string file_m, file_n, element;
  std::size_t n = 0;
  std::size_t jobs = 1;
  bool identities = false;
  bool theorem = false;

  auto* show = app.add_subcommand("show", "Print a clutter in canonical form");
  show->add_option("FILE", file_m)->required();

  auto* del = app.add_subcommand("delete", "Delete an element");
  del->add_option("FILE", file_m)->required();
  del->add_option("-e,--element", element, "Element to delete")->required();

  auto* con = app.add_subcommand("contract", "Contract an element");
  con->add_option("FILE", file_m)->required();
  con->add_option("-e,--element", element, "Element to contract")->required();

  auto* blk = app.add_subcommand("blocker", "Print the blocker");
  blk->add_option("FILE", file_m)->required();

  auto* conn = app.add_subcommand("connected", "Exit 0 if connected, 1 if not");
  conn->add_option("FILE", file_m)->required();

  auto* minor = app.add_subcommand("minor", "Find a witness that N is a minor of M");
  minor->add_option("FILE_M", file_m)->required();
  minor->add_option("FILE_N", file_n)->required();

  auto* split = app.add_subcommand("splitter", "One connectivity-preserving step towards N");
  split->add_option("FILE_M", file_m)->required();
  split->add_option("FILE_N", file_n)->required();

  auto* chn = app.add_subcommand("chain", "Connected chain from M down to N (default: empty)");
  chn->add_option("FILE_M", file_m)->required();
  chn->add_option("FILE_N", file_n);

  auto* dot = app.add_subcommand("dot", "Incidence graph in DOT format");
  dot->add_option("FILE", file_m)->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive checks over all clutters on n elements");
  verify->add_option("--n", n, "Ground set size")->required();
  auto* id_flag = verify->add_flag("--identities", identities, "Check the identity families");
  verify->add_flag("--theorem", theorem, "Check the splitter theorem")->excludes(id_flag);
  verify->add_option("--jobs", jobs, "Worker threads for --theorem")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*show) {
      std::cout << ck::serialize(load(file_m));
    } else if (*del) {
      std::cout << ck::serialize(ck::delete_element(load(file_m), element));
    } else if (*con) {
      std::cout << ck::serialize(ck::contract(load(file_m), element));
    } else if (*blk) {
      std::cout << ck::serialize(ck::blocker(load(file_m)));
    } else if (*conn) {
      const bool connected = ck::is_connected(load(file_m));
      std::cout << (connected ? "connected\n" : "disconnected\n");
      return connected ? 0 : kExitNo;
    } else if (*minor) {
      const auto spec = ck::has_minor(load(file_m), load(file_n));
      if (!spec) {
        std::cout << "none\n";
        return kExitNo;
      }
      std::cout << format_spec(*spec);
    } else if (*split) {
      std::cout << ck::format_step(ck::find_splitter(load(file_m), load(file_n)));
    } else if (*chn) {
      const ck::Clutter m = load(file_m);
      const auto c = file_n.empty() ? ck::chain_to_empty(m) : ck::chain(m, load(file_n));
      std::cout << ck::format_chain(c);
    } else if (*dot) {
      std::cout << ck::to_dot(ck::incidence_graph(load(file_m)));
    } else if (*verify) {
      const bool both = !identities && !theorem;
      bool ok = true;
      if (identities || both) {
        const auto report = ck::verify_identities(n);
        std::cout << report.to_text();
        ok = ok && report.ok();
      }
      if (theorem || both) {
        const auto report = ck::verify_theorem(n, jobs);
        std::cout << report.to_text();
        ok = ok && report.ok();
      }
      return ok ? 0 : kExitNo;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const ck::TheoremCounterexample& e) {
    std::cerr << "error: " << e.what() << "\n"
              << ck::counterexample_report(e.m(), e.n());
    return kExitDomain;
  } catch (const ck::ClutterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
