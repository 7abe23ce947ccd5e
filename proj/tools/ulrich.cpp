// ulrich: verification suites, samplers, Hilbert functions and section exports.
//
// Exit codes: 0 success, 1 usage error or unknown case, 2 failed check or
// mathematical error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ulrich/engine.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/parallel.hpp"
#include "ulrich/report.hpp"
#include "ulrich/section.hpp"

namespace {

using namespace ulrich;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailure = 2;

struct Options {
  std::string case_name;
  bool all = false;
  int trials = 20;
  std::uint64_t seed = 0;
  int dim = 3;
  int max_degree = 4;
  std::string out;
  bool json = false;
  bool timing = false;
  bool on_hypersurface = false;
  unsigned threads = 0;
};

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

int emit(const Options& o, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (!o.out.empty()) {
    if (!write_file(o.out, text)) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return kUsage;
    }
  } else if (o.json) {
    std::cout << text;
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  if (o.all == !o.case_name.empty()) {
    std::cerr << "error: verify needs exactly one of --case or --all\n";
    return kUsage;
  }
  std::vector<const CaseDescriptor*> cases;
  if (o.all) {
    for (const auto& c : register_cases()) cases.push_back(&c);
  } else {
    cases.push_back(&find_case(o.case_name));
  }
  std::vector<Report> reports;
  for (const auto* c : cases) {
    reports.push_back(verify_case(*c, o.trials, o.seed));
    if (!o.json) std::cout << human_summary(reports.back());
  }
  const Json j = o.all ? reports_json(reports, o.timing) : report_json(reports.front(), o.timing);
  if (const int rc = emit(o, j); rc != kOk) return rc;
  for (const auto& r : reports) {
    if (!r.passed()) return kFailure;
  }
  return kOk;
}

int cmd_hilbert(const Options& o) {
  const auto hf = hilbert_function(find_case(o.case_name), o.dim, o.max_degree, o.seed);
  if (o.json || !o.out.empty()) {
    Json j{{"case", o.case_name}, {"d", o.dim}, {"seed", o.seed}, {"hilbert_function", hf}};
    if (const int rc = emit(o, j); rc != kOk) return rc;
    if (o.json) return kOk;
  }
  for (std::size_t i = 0; i < hf.size(); ++i) std::cout << (i ? " " : "") << hf[i];
  std::cout << "\n";
  return kOk;
}

int cmd_section(const Options& o) {
  const CaseDescriptor& c = find_case(o.case_name);
  const LinearSection s = restrict_section(c, o.dim, o.seed);
  const auto evidence = section_evidence(c, s);
  bool ok = true;
  for (const auto& ch : evidence) {
    ok = ok && ch.passed;
    if (!o.json) {
      std::cout << (ch.passed ? "[PASS] " : "[FAIL] ") << c.name << "/" << ch.id << " ("
                << ch.anchor << ")\n";
    }
  }
  Json j = presentation_json(s);
  Json ev = Json::array();
  for (const auto& ch : evidence) {
    ev.push_back(Json{{"id", ch.id}, {"anchor", ch.anchor},
                      {"status", ch.passed ? "pass" : "fail"}, {"witness", ch.witness}});
  }
  j["evidence"] = ev;
  if (const int rc = emit(o, j); rc != kOk) return rc;
  return ok ? kOk : kFailure;
}

int cmd_sample(const Options& o) {
  const CaseDescriptor& c = find_case(o.case_name);
  Rng rng(o.seed);
  const Vector v = o.on_hypersurface ? c.sample_H(rng) : random_generic_point(c, rng);
  const Rational h = c.h(v);
  Json coords = Json::array();
  for (Index i = 0; i < v.size(); ++i) coords.push_back(to_string(v(i)));
  if (o.json || !o.out.empty()) {
    Json j{{"case", c.name}, {"seed", o.seed}, {"on_hypersurface", o.on_hypersurface},
           {"point", coords}, {"h", to_string(h)}};
    if (const int rc = emit(o, j); rc != kOk) return rc;
  }
  if (!o.json) {
    for (Index i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << to_string(v(i));
    std::cout << "\nh = " << to_string(h) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant matrix presentations on invariant hypersurfaces"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    sub->add_option("--out", o.out, "Write JSON to this file");
    sub->add_flag("--json", o.json, "Print JSON to stdout");
    sub->add_option("--threads", o.threads, "Worker threads (results do not depend on it)");
  };

  auto* verify = app.add_subcommand("verify", "Run the verification suite of a case");
  verify->add_option("--case", o.case_name, "Case name");
  verify->add_flag("--all", o.all, "Run every registered case");
  verify->add_option("--trials", o.trials, "Random trials per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_flag("--timing", o.timing, "Record elapsed time in the JSON report");
  add_common(verify);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a section");
  hilbert->add_option("--case", o.case_name, "Case name")->required();
  hilbert->add_option("--dim", o.dim, "Projective dimension of the section")->capture_default_str();
  hilbert->add_option("--max-degree", o.max_degree, "Largest degree m")->capture_default_str();
  add_common(hilbert);

  auto* section = app.add_subcommand("section", "Export the presentation restricted to a section");
  section->add_option("--case", o.case_name, "Case name")->required();
  section->add_option("--dim", o.dim, "Projective dimension of the section")->capture_default_str();
  add_common(section);

  auto* sample = app.add_subcommand("sample", "Draw a point of V");
  sample->add_option("--case", o.case_name, "Case name")->required();
  sample->add_flag("--on-hypersurface", o.on_hypersurface, "Sample a point of H");
  add_common(sample);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (o.threads != 0) set_worker_count(o.threads);

  try {
    if (verify->parsed()) return cmd_verify(o);
    if (hilbert->parsed()) return cmd_hilbert(o);
    if (section->parsed()) return cmd_section(o);
    return cmd_sample(o);
  } catch (const UnknownCase& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
