#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "semico/semico.h"

namespace {

struct Options {
  std::string input;
  std::string n;
  std::uint64_t budget = 2'000'000;
  std::string format = "text";
  std::int64_t m = 0;
  bool example = false;
  bool oracle = false;
};

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
};

bool parse_range(const std::string& text, Range& out) {
  try {
    auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      out.lo = out.hi = static_cast<unsigned>(std::stoul(text, &used));
      return used == text.size();
    }
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    out.lo = static_cast<unsigned>(std::stoul(a, &used));
    if (used != a.size()) return false;
    out.hi = static_cast<unsigned>(std::stoul(b, &used));
    return used == b.size() && out.lo <= out.hi;
  } catch (const std::exception&) {
    return false;
  }
}

int exit_code(semico_status s) {
  switch (s) {
    case SEMICO_OK: return 0;
    case SEMICO_ERR_PARSE:
    case SEMICO_ERR_INVALID:
    case SEMICO_ERR_UNSUPPORTED:
    case SEMICO_ERR_ARGUMENT: return 1;
    case SEMICO_ERR_BUDGET: return 2;
    case SEMICO_ERR_MISMATCH: return 3;
    default: return 4;
  }
}

int report_error(semico_status s) {
  std::cerr << "semico: " << semico_status_name(s) << ": " << semico_last_error() << "\n";
  return exit_code(s);
}

int emit(semico_status s, semico_report* const& r, const Options& o, int failure_code) {
  if (s != SEMICO_OK) return report_error(s);
  std::cout << (o.format == "json" ? semico_report_json(r) : semico_report_text(r));
  if (o.format == "json") std::cout << "\n";
  int code = semico_report_ok(r) ? 0 : failure_code;
  semico_report_free(r);
  return code;
}

class InputHandle {
 public:
  semico_status load(const std::string& path) { return semico_input_load(path.c_str(), &p_); }
  ~InputHandle() { semico_input_free(p_); }
  const semico_input* get() const { return p_; }

 private:
  semico_input* p_ = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of monoids with coefficients in semimodules"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c, bool needs_input, const char* default_n) {
    if (needs_input) c->add_option("--input", o.input, "input JSON file")->required()->check(CLI::ExistingFile);
    if (default_n) c->add_option("--n", o.n, std::string("degree or range lo..hi (default ") + default_n + ")");
    c->add_option("--budget", o.budget, "enumeration budget")->check(CLI::PositiveNumber);
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "check structure axioms");
  add_common(validate, true, nullptr);
  auto* cohomology = app.add_subcommand("cohomology", "H^n and script H^n over a degree range");
  add_common(cohomology, true, "0..2");
  auto* diagram = app.add_subcommand("diagram", "comparison triangle script H^n -> H^n -> H^n(M, K(A))");
  add_common(diagram, true, "2");
  auto* extensions = app.add_subcommand("extensions", "Schreier extensions");
  extensions->require_subcommand(1);
  auto* classify = extensions->add_subcommand("classify", "classify extensions by congruence and similarity");
  add_common(classify, true, nullptr);
  classify->add_flag("--oracle", o.oracle, "also enumerate raw Cayley tables");
  auto* completion = app.add_subcommand("completion", "K(A), U(A) and cancellativity");
  add_common(completion, true, nullptr);
  auto* cyclic = app.add_subcommand("cyclic", "closed-form cohomology of cyclic groups");
  add_common(cyclic, false, "0..3");
  cyclic->add_option("--input", o.input, "cyclic data or semimodule JSON file")->check(CLI::ExistingFile);
  cyclic->add_option("--m", o.m, "order of the cyclic group");
  cyclic->add_flag("--example-310", o.example, "the D(m) + N + Z/m separation family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (o.n.empty()) o.n = cohomology->parsed() ? "0..2" : diagram->parsed() ? "2" : "0..3";
  Range range;
  if (!parse_range(o.n, range)) {
    std::cerr << "semico: --n must be a degree or a range lo..hi\n";
    return 1;
  }

  semico_report* r = nullptr;

  if (cyclic->parsed() && o.example) {
    if (o.m < 2) {
      std::cerr << "semico: --example-310 needs --m >= 2\n";
      return 1;
    }
    return emit(semico_cyclic_separation(o.m, range.lo, range.hi, &r), r, o, 3);
  }
  if (cyclic->parsed() && o.input.empty()) {
    std::cerr << "semico: cyclic needs --input or --example-310\n";
    return 1;
  }

  InputHandle in;
  if (semico_status s = in.load(o.input); s != SEMICO_OK) return report_error(s);

  if (validate->parsed()) return emit(semico_validate(in.get(), &r), r, o, 1);
  if (cohomology->parsed()) return emit(semico_cohomology(in.get(), range.lo, range.hi, o.budget, &r), r, o, 3);
  if (diagram->parsed()) {
    if (range.lo != range.hi) {
      std::cerr << "semico: diagram takes a single degree\n";
      return 1;
    }
    return emit(semico_diagram(in.get(), range.lo, o.budget, &r), r, o, 3);
  }
  if (classify->parsed()) return emit(semico_classify(in.get(), o.oracle ? 1 : 0, o.budget, &r), r, o, 3);
  if (completion->parsed()) return emit(semico_completion(in.get(), &r), r, o, 1);
  if (cyclic->parsed()) {
    if (o.m != 0) std::cerr << "semico: --m is only used with --example-310; the input fixes m\n";
    return emit(semico_cyclic(in.get(), range.lo, range.hi, o.budget, &r), r, o, 3);
  }
  return 1;
}
