// Command-line front end; talks to the engine only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deltader/deltader.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

struct CliError {
  int exit_code;
  std::string message;
};

void check(dd_status status) {
  if (status == DD_OK) return;
  std::string msg = std::string(dd_status_name(status)) + ": " + dd_last_error();
  throw CliError{status == DD_ERR_VERIFICATION ? kExitVerification : kExitInput, msg};
}

struct AlgebraDeleter {
  void operator()(dd_algebra* p) const { dd_algebra_free(p); }
};
struct ModuleDeleter {
  void operator()(dd_module* p) const { dd_module_free(p); }
};
using AlgebraHandle = std::unique_ptr<dd_algebra, AlgebraDeleter>;
using ModuleHandle = std::unique_ptr<dd_module, ModuleDeleter>;

std::string take_string(char* s) {
  std::string out(s);
  dd_string_free(s);
  return out;
}

struct Job {
  std::string algebra;
  std::string module;
  std::optional<std::string> delta;
  bool include_zero = false;
  long grading_element = -1;
  std::string format = "json";
  std::string input;
  std::string output;
  int max_n = 4;
};

dd_format format_of(const Job& job) { return job.format == "table" ? DD_FORMAT_TABLE : DD_FORMAT_JSON; }

std::pair<AlgebraHandle, ModuleHandle> load(const Job& job, bool need_module) {
  dd_algebra* a = nullptr;
  dd_module* m = nullptr;
  if (!job.input.empty()) {
    if (!job.algebra.empty()) throw CliError{kExitInput, "--input and --algebra are mutually exclusive"};
    std::ifstream in(job.input);
    if (!in) throw CliError{kExitInput, "cannot read " + job.input};
    std::stringstream buf;
    buf << in.rdbuf();
    check(dd_load_json(buf.str().c_str(), &a, &m));
  } else {
    if (job.algebra.empty()) throw CliError{kExitInput, "--algebra or --input is required"};
    check(dd_algebra_parse(job.algebra.c_str(), &a));
  }
  AlgebraHandle algebra(a);
  ModuleHandle module(m);
  if (!job.module.empty()) {
    if (module) throw CliError{kExitInput, "--module conflicts with the module in the input file"};
    dd_module* parsed = nullptr;
    check(dd_module_parse(algebra.get(), job.module.c_str(), &parsed));
    module.reset(parsed);
  }
  if (need_module && !module) throw CliError{kExitInput, "a module is required (--module or a \"module\" in --input)"};
  return {std::move(algebra), std::move(module)};
}

void emit(const Job& job, const std::string& text) {
  if (job.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(job.output, std::ios::binary);
  if (!out) throw CliError{kExitInput, "cannot write " + job.output};
  out << text;
}

int run_solve(const Job& job) {
  if (!job.delta) throw CliError{kExitInput, "solve requires --delta"};
  auto [algebra, module] = load(job, true);
  dd_space* space = nullptr;
  check(dd_solve(module.get(), job.delta->c_str(), job.grading_element, &space));
  char* text = nullptr;
  dd_status st = dd_space_render(space, format_of(job), &text);
  dd_space_free(space);
  check(st);
  emit(job, take_string(text));
  return kExitOk;
}

int run_scan(const Job& job) {
  if (job.delta) throw CliError{kExitInput, "scan does not take --delta"};
  auto [algebra, module] = load(job, true);
  dd_scan_report* report = nullptr;
  check(dd_scan(module.get(), job.include_zero ? 1 : 0, &report));
  char* text = nullptr;
  dd_status st = dd_scan_render(report, format_of(job), &text);
  dd_scan_free(report);
  check(st);
  emit(job, take_string(text));
  return kExitOk;
}

int run_verify(const Job& job) {
  dd_verify_report* report = nullptr;
  check(dd_verify_all(job.max_n, &report));
  char* text = nullptr;
  dd_status st = dd_verify_render(report, format_of(job), &text);
  const std::size_t failures = dd_verify_failures(report);
  dd_verify_free(report);
  check(st);
  emit(job, take_string(text));
  return failures == 0 ? kExitOk : kExitVerification;
}

int run_describe(const Job& job) {
  auto [algebra, module] = load(job, false);
  char* text = nullptr;
  check(dd_describe_render(algebra.get(), module.get(), format_of(job), &text));
  emit(job, take_string(text));
  return kExitOk;
}

// "--delta -2/3" would otherwise be read as an unknown short option.
std::vector<std::string> join_negative_values(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--delta" && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-') {
      out.push_back("--delta=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact delta-derivations of Lie algebras with values in modules"};
  app.require_subcommand(1);
  Job job;

  auto add_inputs = [&job](CLI::App* sub, bool with_delta) {
    sub->add_option("--algebra", job.algebra, "Algebra descriptor, e.g. \"sl2\" or \"sl2 o+ sl2\"");
    sub->add_option("--module", job.module, "Module descriptor, e.g. \"V(3)\" or \"V(1) (x) V(0)\"");
    sub->add_option("--input", job.input, "JSON file with \"algebra\" and optional \"module\" objects");
    sub->add_option("--output", job.output, "Write output to FILE instead of standard output");
    sub->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    if (with_delta) sub->add_option("--delta", job.delta, "Rational delta as p/q");
  };

  auto* solve = app.add_subcommand("solve", "Basis of the delta-derivation space at a fixed delta");
  add_inputs(solve, true);
  solve->add_option("--grading-element", job.grading_element, "Basis index of a diagonal element to grade by");

  auto* scan = app.add_subcommand("scan", "All rational delta with nonzero delta-derivations");
  add_inputs(scan, true);
  scan->add_flag("--include-zero", job.include_zero, "Also test delta = 0");

  auto* verify = app.add_subcommand("verify", "Check the solver against the closed-form sl(2) families");
  verify->add_option("--max-n", job.max_n, "Largest highest weight n to check")->check(CLI::PositiveNumber);
  verify->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--output", job.output, "Write output to FILE instead of standard output");

  auto* describe = app.add_subcommand("describe", "Canonical form and structure data of the inputs");
  add_inputs(describe, false);

  std::vector<std::string> args = join_negative_values(argc, argv);
  std::vector<char*> raw;
  for (auto& a : args) raw.push_back(a.data());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*solve) return run_solve(job);
    if (*scan) return run_scan(job);
    if (*verify) return run_verify(job);
    if (*describe) return run_describe(job);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitInput;
}
