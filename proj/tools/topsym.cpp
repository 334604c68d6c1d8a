// topsym: symmetry verdicts and homology identity checks for split simplicial domains.
//
// Exit status: 0 success, 1 --assert-symmetric failed, 2 input or validation error,
// 3 an identity check failed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "topsym/topsym.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kAsymmetric = 1;
constexpr int kInputError = 2;
constexpr int kIdentityFailure = 3;

struct Target {
  std::string name;
  topsym::BoundarySplit split;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw topsym::InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// An existing file is parsed as a space file; anything else is looked up in the catalog.
Target resolve(const std::string& target) {
  if (std::filesystem::is_regular_file(target)) {
    auto file = topsym::parse_space_file(read_file(target));
    return {file.name, file.to_split()};
  }
  return {target, topsym::as_split(topsym::builtin_example(target))};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw topsym::InputError("cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological symmetry of split simplicial domains"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  std::string target;
  std::string out_path;
  std::optional<std::size_t> chern;
  bool assert_symmetric = false;
  std::size_t seeds = 10;

  auto* analyze = app.add_subcommand("analyze", "Betti tables, verdicts, duality and doubling checks");
  analyze->add_option("target", target, "Space file or catalog name")->required();
  analyze->add_option("--mod", chern, "Minimal Chern number N; adds verdicts modulo 2N")->check(CLI::PositiveNumber);
  analyze->add_flag("--assert-symmetric", assert_symmetric, "Exit with status 1 unless the positive verdict is symmetric");

  auto* example = app.add_subcommand("example", "Write a catalog space as a space file");
  example->add_option("name", target, "Catalog name")->required();
  example->add_option("-o,--output", out_path, "Output path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Run the homology identity suite");
  verify->add_option("target", target, "Space file or catalog name")->required();
  verify->add_option("--seeds", seeds, "Shuffled greedy orders per Morse check");

  auto* dbl = app.add_subcommand("double", "Write the truncated double as a space file");
  dbl->add_option("target", target, "Space file or catalog name")->required();
  dbl->add_option("-o,--output", out_path, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) {
      const auto t = resolve(target);
      topsym::AnalysisOptions options;
      options.chern_number = chern;
      const auto report = topsym::analyze_action(t.split, t.name, options);
      std::cout << (as_json ? topsym::report_json(report).dump(2) + "\n" : topsym::report_text(report));
      if (assert_symmetric && !report.verdict_positive.symmetric) return kAsymmetric;
      return kOk;
    }
    if (*example) {
      emit(topsym::write_space_file(topsym::space_file_from(target, topsym::builtin_example(target))), out_path);
      return kOk;
    }
    if (*verify) {
      const auto t = resolve(target);
      const auto results = topsym::run_identity_suite(t.split, seeds);
      std::cout << (as_json ? topsym::suite_json(t.name, results).dump(2) + "\n" : topsym::suite_text(t.name, results));
      for (const auto& r : results) {
        if (r.status == topsym::CheckStatus::fail) return kIdentityFailure;
      }
      return kOk;
    }
    if (*dbl) {
      const auto t = resolve(target);
      const auto td = topsym::truncated_double(t.split);
      topsym::SpaceFile file{t.name + "_double", td.m_t.maximal_simplices(), td.minus.maximal_simplices(),
                             td.plus.maximal_simplices()};
      emit(topsym::write_space_file(file), out_path);
      return kOk;
    }
  } catch (const topsym::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kIdentityFailure;
  }
  return kInputError;
}
