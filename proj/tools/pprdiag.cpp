#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ppr/error.hpp"
#include "ppr/homology.hpp"
#include "ppr/io.hpp"
#include "ppr/oracle.hpp"
#include "ppr/pullback.hpp"
#include "ppr/random.hpp"

namespace {

enum Exit : int { kOk = 0, kInvalidMath = 1, kParse = 2, kConsistency = 3 };

struct Options {
  std::string input = "-";
  std::optional<std::size_t> degree;
  bool all = false;
  std::string format = "json";
  bool trace = false;
  bool p_check = false;
  std::uint64_t seed = 1;
  std::size_t count = 50;
};

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Standard input can only be consumed once, so the text is kept for --p-check.
const std::string& read_input(const std::string& path) {
  static std::optional<std::string> cached;
  if (cached) return *cached;
  if (path == "-") {
    cached.emplace(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ppr::ParseError("cannot read " + path);
    cached.emplace(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return *cached;
}

// Set once a valid complex is loaded, for the reproducer on internal failures.
std::optional<ppr::ChainComplexR> loaded;

void print_reproducer(const ppr::ChainComplexR& c, std::optional<std::size_t> degree) {
  nlohmann::json doc = ppr::complex_to_json(c);
  if (degree) doc["degree"] = *degree;
  std::cerr << "reproducer:\n" << doc.dump(2) << "\n";
}

ppr::ChainComplexR load_valid_complex(const Options& o) {
  ppr::ChainComplexR c = ppr::parse_complex(read_input(o.input));
  const ppr::ComplexReport report = ppr::validate_complex(c);
  if (!report.ok()) {
    std::ostringstream os;
    os << "input is not a complex of R-modules:";
    for (const auto& v : report.violations) os << "\n  " << v;
    throw InvalidInput(os.str());
  }
  loaded = c;
  return c;
}

std::vector<std::size_t> selected_degrees(const Options& o, const ppr::ChainComplexR& c) {
  if (o.degree && o.all) throw InvalidInput("--degree and --all are exclusive");
  if (o.degree) {
    if (*o.degree >= c.degrees())
      throw InvalidInput("degree " + std::to_string(*o.degree) + " out of range: the complex has degrees 0.." +
                         std::to_string(c.degrees() - 1));
    return {*o.degree};
  }
  std::vector<std::size_t> all(c.degrees());
  for (std::size_t n = 0; n < all.size(); ++n) all[n] = n;
  return all;
}

std::vector<ppr::DegreeReport> run_degrees(const Options& o, const ppr::ChainComplexR& c) {
  const auto degrees = selected_degrees(o, c);
  std::vector<ppr::DegreeResult> results;
  if (degrees.size() == c.degrees()) {
    results = ppr::homology_rdiagrams(c, true, o.trace);
  } else {
    for (std::size_t n : degrees) results.push_back(ppr::homology_degree(c, n, o.trace));
  }
  std::vector<ppr::DegreeReport> reports;
  for (auto& r : results) reports.push_back(ppr::report_degree(std::move(r), c));
  return reports;
}

// A pipeline output that fails validation or disagrees with the oracle is a bug.
int consistency_status(const std::vector<ppr::DegreeReport>& reports, const ppr::ChainComplexR& c) {
  for (const auto& r : reports) {
    if (r.validation.ok() && r.agree()) continue;
    std::cerr << "internal consistency failure in degree " << r.result.degree << ": "
              << (r.validation.ok() ? "pipeline and integer homology disagree" : "R-diagram fails validation") << "\n";
    print_reproducer(c, r.result.degree);
    return kConsistency;
  }
  return kOk;
}

int cmd_validate(const Options& o) {
  const ppr::ChainComplexR c = ppr::parse_complex(read_input(o.input));
  const ppr::ComplexReport report = ppr::validate_complex(c);
  nlohmann::json violations = report.violations;
  std::cout << nlohmann::json{{"p", c.p.value()}, {"valid", report.ok()}, {"violations", violations}}.dump(2) << "\n";
  return report.ok() ? kOk : kInvalidMath;
}

int cmd_rdiagram(const Options& o) {
  const ppr::ChainComplexR c = load_valid_complex(o);
  const auto reports = run_degrees(o, c);
  if (o.format == "text") {
    for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << ppr::render_text(reports[i], c.p, o.trace);
  } else {
    std::cout << ppr::rdiagram_document(c.p, reports, o.trace).dump(2) << "\n";
  }
  return consistency_status(reports, c);
}

int cmd_invariants(const Options& o) {
  const ppr::ChainComplexR c = load_valid_complex(o);
  const auto reports = run_degrees(o, c);
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& r : reports)
    degrees.push_back({{"degree", r.result.degree},
                       {"pipeline", ppr::invariants_to_json(r.pipeline)},
                       {"oracle", ppr::invariants_to_json(r.oracle)},
                       {"agree", r.agree()}});
  std::cout << nlohmann::json{{"p", c.p.value()}, {"degrees", degrees}}.dump(2) << "\n";
  for (const auto& r : reports)
    if (!r.agree()) {
      std::cerr << "pipeline and integer homology disagree in degree " << r.result.degree << "\n";
      print_reproducer(c, r.result.degree);
      return kConsistency;
    }
  return kOk;
}

bool same_components(const ppr::RDiagram& a, const ppr::RDiagram& b) {
  return a.k_dim == b.k_dim && a.s.bar_dim == b.s.bar_dim && a.s.m1.invariants() == b.s.m1.invariants() &&
         a.s.m2.invariants() == b.s.m2.invariants();
}

int cmd_selftest(const Options& o) {
  ppr::Rng rng(o.seed);
  const std::uint64_t primes[] = {2, 3, 5};
  std::size_t degrees = 0;
  for (std::size_t t = 0; t < o.count; ++t) {
    const ppr::Prime p(primes[t % 3]);
    ppr::ComplexShape shape;
    shape.degrees = 2 + t % 2;
    const ppr::ChainComplexR c = ppr::random_complex(rng, p, shape);
    std::vector<ppr::DegreeReport> reports;
    for (auto& r : ppr::homology_rdiagrams(c, true)) reports.push_back(ppr::report_degree(std::move(r), c));
    if (int status = consistency_status(reports, c); status != kOk) return status;
    for (std::size_t n = 0; n < c.degrees(); ++n) {
      if (!same_components(ppr::closed_form_components(c, n).rd, reports[n].result.rd)) {
        std::cerr << "closed form and generic pipeline disagree in degree " << n << "\n";
        print_reproducer(c, n);
        return kConsistency;
      }
      ++degrees;
    }
  }
  std::cout << nlohmann::json{{"seed", o.seed}, {"complexes", o.count}, {"degrees", degrees}, {"ok", true}}.dump(2)
            << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"R-diagrams of homology modules over the p-pullback ring"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--p-check", o.p_check, "Check that R/(P1+P2) is Z/p for the input prime before running");

  auto add_input = [&](CLI::App* cmd) { cmd->add_option("input", o.input, "Complex document, or - for stdin"); };
  auto add_degrees = [&](CLI::App* cmd) {
    cmd->add_option("--degree", o.degree, "Single degree");
    cmd->add_flag("--all", o.all, "Every degree (default)");
  };

  CLI::App* validate = app.add_subcommand("validate", "Check that the input is a complex of R-modules");
  add_input(validate);
  CLI::App* rdiagram = app.add_subcommand("rdiagram", "R-diagrams of the homology modules");
  add_input(rdiagram);
  add_degrees(rdiagram);
  rdiagram->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  rdiagram->add_flag("--trace", o.trace, "Include every intermediate presentation");
  CLI::App* invariants = app.add_subcommand("invariants", "Underlying groups by the pipeline and by integer homology");
  add_input(invariants);
  add_degrees(invariants);
  CLI::App* selftest = app.add_subcommand("selftest", "Run the pipeline against its oracles on random complexes");
  selftest->add_option("--seed", o.seed, "Random seed");
  selftest->add_option("--count", o.count, "Number of random complexes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (o.p_check && !selftest->parsed()) {
      const ppr::ChainComplexR c = ppr::parse_complex(read_input(o.input));
      if (!ppr::quotient_ring_check(c.p)) {
        std::cerr << "quotient ring check failed for p = " << c.p.value() << "\n";
        return kConsistency;
      }
      std::cerr << "quotient ring check passed for p = " << c.p.value() << "\n";
    }
    if (validate->parsed()) return cmd_validate(o);
    if (rdiagram->parsed()) return cmd_rdiagram(o);
    if (invariants->parsed()) return cmd_invariants(o);
    return cmd_selftest(o);
  } catch (const ppr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidInput& e) {
    std::cerr << e.what() << "\n";
    return kInvalidMath;
  } catch (const ppr::HypothesisError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidMath;
  } catch (const ppr::DimensionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidMath;
  } catch (const ppr::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    if (loaded) print_reproducer(*loaded, o.degree);
    return kConsistency;
  }
}
