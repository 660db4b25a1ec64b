// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "ppr/error.hpp"
#include "ppr/homology.hpp"
#include "ppr/oracle.hpp"
#include "ppr/random.hpp"
#include "ppr/reduction.hpp"
#include "support/brute.hpp"
#include "support/embed.hpp"

using namespace ppr;

namespace {

using Clock = std::chrono::steady_clock;

Prime cycle_prime(std::size_t t) { return Prime(std::array<std::uint64_t, 3>{2, 3, 5}[t % 3]); }

bool same_components(const RDiagram& a, const RDiagram& b) {
  return a.k_dim == b.k_dim && a.s.bar_dim == b.s.bar_dim && a.s.m1.invariants() == b.s.m1.invariants() &&
         a.s.m2.invariants() == b.s.m2.invariants();
}

bool same_shape(const PullbackDiagram& a, const PullbackDiagram& b) {
  return a.bar_dim == b.bar_dim && a.m1.invariants() == b.m1.invariants() && a.m2.invariants() == b.m2.invariants();
}

// Collects failures for one criterion; only the first few are printed.
struct Tally {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0; }
};

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome finish(const Tally& t, const std::string& summary, double elapsed = -1, double budget = -1) {
  std::ostringstream os;
  os << summary;
  if (elapsed >= 0) os << ", " << elapsed << " s";
  bool ok = t.ok();
  if (budget > 0 && elapsed > budget) {
    ok = false;
    os << " (over the " << budget << " s budget)";
  }
  if (!t.ok()) os << "; " << t.failures << " failures, first: " << t.first;
  return {ok, os.str()};
}

// ---- shared random corpora -------------------------------------------------

struct PresentationRun {
  SeparatedPresentation input;
  GroupInvariants before;
  std::vector<GroupInvariants> after;  // reduce_K, reduce_barf, reduce_monos, reduce_combined
  std::optional<RDiagram> combined;
  std::optional<RDiagram> sequential;
};

constexpr std::size_t kPresentations = 1200;
constexpr std::size_t kComplexes = 360;

std::vector<SeparatedPresentation> presentation_corpus() {
  Rng rng(20240601);
  std::vector<SeparatedPresentation> out;
  for (std::size_t t = 0; t < kPresentations; ++t) out.push_back(random_separated_presentation(rng, cycle_prime(t)));
  return out;
}

std::vector<ChainComplexR> complex_corpus() {
  Rng rng(314159);
  std::vector<ChainComplexR> out;
  for (std::size_t t = 0; t < kComplexes; ++t) {
    ComplexShape shape;
    shape.max_rank = 6;
    shape.degrees = 2 + t % 2;
    out.push_back(random_complex(rng, cycle_prime(t), shape));
  }
  return out;
}

// ---- criteria ----------------------------------------------------------------

struct Context {
  std::vector<SeparatedPresentation> presentations;
  std::vector<PresentationRun> runs;
  std::vector<ChainComplexR> complexes;
  std::vector<std::vector<DegreeResult>> homology;  // filled by criterion 2
  std::size_t divisibility_checks = 0;
  std::size_t divisibility_runs = 0;
  Tally divisibility;
};

Outcome criterion1(Context& ctx) {
  const auto start = Clock::now();
  Tally t;
  auto reduce_all = [&](const SeparatedPresentation& pres, const std::string& label) {
    PresentationRun run{pres, underlying_invariants_of_presentation(pres), {}, {}, {}};
    try {
      const SeparatedPresentation a = reduce_K(pres);
      run.after.push_back(underlying_invariants_of_presentation(a));
      const SeparatedPresentation b = reduce_barf(a);
      run.after.push_back(underlying_invariants_of_presentation(b));
      const SeparatedPresentation c = reduce_monos(b);
      run.after.push_back(underlying_invariants_of_presentation(c));
      run.combined = reduce_combined(pres);
      run.after.push_back(underlying_invariants_of_rdiagram(*run.combined));
      run.sequential = reduce_sequential(pres);
    } catch (const std::exception& e) {
      t.check(false, label + " threw: " + e.what());
      return;
    }
    static const char* names[] = {"reduce_K", "reduce_barf", "reduce_monos", "reduce_combined"};
    for (std::size_t i = 0; i < run.after.size(); ++i)
      t.check(run.after[i] == run.before, label + ": invariants changed by " + names[i]);
    ++t.trials;
    ctx.runs.push_back(std::move(run));
  };
  for (std::size_t i = 0; i < ctx.presentations.size(); ++i)
    reduce_all(ctx.presentations[i], "presentation " + std::to_string(i));
  const std::size_t random_count = t.trials;
  // Homology presentations of the random complexes exercise the same reductions.
  for (std::size_t i = 0; i < 150; ++i)
    for (std::size_t n = 0; n < ctx.complexes[i].degrees(); ++n)
      reduce_all(homology_presentation(ctx.complexes[i], n).pres,
                 "complex " + std::to_string(i) + " degree " + std::to_string(n));
  t.check(random_count >= 1000, "fewer than 1000 random presentations");
  return finish(t,
                std::to_string(random_count) + " random presentations and " + std::to_string(t.trials - random_count) +
                    " homology presentations, invariants preserved by all four reductions",
                seconds_since(start), 60);
}

Outcome criterion2(Context& ctx) {
  Tally t;
  for (std::size_t i = 0; i < ctx.runs.size(); ++i) {
    for (const RDiagram* rd : {&*ctx.runs[i].combined, &*ctx.runs[i].sequential}) {
      const ValidationReport r = validate_rdiagram(*rd);
      const Condition* bad = r.failed();
      t.check(r.ok(), "reduction run " + std::to_string(i) + ": " + (bad ? bad->name : ""));
      ++t.trials;
    }
  }
  std::size_t degrees = 0;
  for (std::size_t i = 0; i < ctx.complexes.size(); ++i) {
    const ChainComplexR& c = ctx.complexes[i];
    t.check(validate_complex(c).ok(), "random complex " + std::to_string(i) + " is not a complex");
    std::vector<DegreeResult> results;
    try {
      results = homology_rdiagrams(c, true);
      ++ctx.divisibility_runs;
    } catch (const ConsistencyError& e) {
      ctx.divisibility.check(false, "complex " + std::to_string(i) + ": " + e.what());
      t.check(false, "complex " + std::to_string(i) + ": " + e.what());
      ctx.homology.emplace_back();
      continue;
    }
    for (const DegreeResult& r : results) {
      ctx.divisibility_checks += r.divisibility_checks;
      const ValidationReport report = validate_rdiagram(r.rd);
      const Condition* bad = report.failed();
      t.check(report.ok(), "complex " + std::to_string(i) + " degree " + std::to_string(r.degree) + ": " +
                               (bad ? bad->name : ""));
      ++degrees;
      ++t.trials;
    }
    ctx.homology.push_back(std::move(results));
  }
  return finish(t, std::to_string(ctx.runs.size() * 2) + " reduction outputs and " + std::to_string(degrees) +
                       " homology R-diagrams from " + std::to_string(ctx.complexes.size()) +
                       " random complexes pass every validation condition");
}

Outcome criterion3(Context& ctx) {
  Tally t;
  for (std::size_t i = 0; i < ctx.runs.size(); ++i) {
    t.check(same_components(*ctx.runs[i].combined, *ctx.runs[i].sequential), "run " + std::to_string(i));
    ++t.trials;
  }
  return finish(t, std::to_string(t.trials) + " runs with equal component normal forms");
}

Outcome criterion4(Context& ctx) {
  Tally t;
  std::size_t degrees = 0;
  for (std::size_t i = 0; i < ctx.complexes.size(); ++i) {
    const ChainComplexR& c = ctx.complexes[i];
    for (std::size_t n = 0; n < c.degrees(); ++n) {
      const std::string label = "complex " + std::to_string(i) + " degree " + std::to_string(n);
      try {
        const ClosedForm cf = closed_form_components(c, n);
        ctx.divisibility_checks += cf.divisibility_checks;
        ++ctx.divisibility_runs;
        const RDiagram generic = homology_rdiagram(c, n);
        t.check(same_components(cf.rd, generic), label);
        t.check(validate_rdiagram(cf.rd).ok(), label + ": closed form fails validation");
      } catch (const ConsistencyError& e) {
        ctx.divisibility.check(false, label + ": " + e.what());
        t.check(false, label + ": " + e.what());
      }
      ++degrees;
    }
    ++t.trials;
  }
  t.check(t.trials >= 300, "fewer than 300 complexes");
  return finish(t, std::to_string(t.trials) + " complexes (" + std::to_string(degrees) +
                       " degrees): closed form matches the generic pipeline");
}

Outcome criterion5(Context& ctx) {
  Tally t;
  Rng rng(4242);
  std::vector<std::pair<Differential, Prime>> pairs;
  for (std::size_t i = 0; i < 400; ++i) {
    const Prime p = cycle_prime(i);
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const IntMatrix d1 = random_int_matrix(rng, rows, cols, 3);
    const IntMatrix e = random_int_matrix(rng, rows, cols, 2);
    IntMatrix d2 = d1;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) d2(r, c) += p.as_integer() * e(r, c);
    pairs.push_back({{d1, d2}, p});
  }
  for (const ChainComplexR& c : ctx.complexes)
    for (const Differential& d : c.differentials) pairs.push_back({d, c.p});
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [d, p] = pairs[i];
    try {
      t.check(embedded_kernel(canonical_kernel_presentation(d, p)) == testing::kernel_lattice(d, p),
              "pair " + std::to_string(i));
    } catch (const std::exception& e) {
      t.check(false, "pair " + std::to_string(i) + " threw: " + e.what());
    }
    ++t.trials;
  }
  return finish(t, std::to_string(t.trials) + " differential pairs with HNF-equal kernels");
}

Outcome criterion6(Context&) {
  const auto start = Clock::now();
  Tally t;
  const Prime p(2);
  const ChainComplexR c =
      ChainComplexR::from_differentials(p, {{IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{0}})}});
  const RDiagram rd = homology_rdiagram(c, 1);
  t.check(rd.k_dim == 0, "K_dim is " + std::to_string(rd.k_dim));
  t.check(rd.s.m1.invariants() == AbelianInvariants{0, {2}}, "S1 is not Z/2");
  t.check(rd.s.bar_dim == 1, "dim Sbar is " + std::to_string(rd.s.bar_dim));
  t.check(rd.s.m2.invariants() == AbelianInvariants{1, {}}, "S2 is not Z");
  t.check(validate_rdiagram(rd).ok(), "R-diagram fails validation");
  t.check(underlying_invariants_of_rdiagram(rd) == GroupInvariants{1, {}}, "pipeline group is not Z");
  t.check(integer_homology_invariants(c, 1) == GroupInvariants{1, {}}, "integer homology is not Z");
  t.check(same_components(closed_form_components(c, 1).rd, rd), "closed form differs");
  return finish(t, "p = 2, R --(2,0)--> R, degree 1: K = 0, S1 = Z/2, Sbar = F_2, S2 = Z, group Z",
                seconds_since(start), 1);
}

Outcome criterion7(Context&) {
  Tally t;
  Rng rng(777);
  for (std::size_t i = 0; i < 250; ++i) {
    const Prime p = cycle_prime(i);
    const LatticeRModule s = random_r_module(rng, p, rng() % 4, rng() % 4);
    const Separation a = separate(testing::reembed(rng, s));
    const Separation b = separate(testing::reembed(rng, s));
    t.check(is_separated(a.diagram).separated && is_separated(b.diagram).separated, "trial " + std::to_string(i) + " not separated");
    t.check(same_shape(a.diagram, b.diagram), "trial " + std::to_string(i));
    ++t.trials;
  }
  return finish(t, std::to_string(t.trials) + " modules, two random embeddings each, equal separated normal forms");
}

Outcome criterion8(Context& ctx) {
  Tally t;
  std::size_t monos = 0, epis = 0;
  std::array<std::size_t, 4> fired{};
  auto check_morphism = [&](const DiagramMorphism& m, const std::string& label) {
    const bool direct = is_mono_direct(m);
    t.check(is_mono(m) == direct, label + ": is_mono disagrees with the kernel");
    t.check(mono_conditions(m).holds() == direct, label + ": mono conditions disagree with the kernel");
    monos += direct;
    const EpiReport e = epi_conditions(m);
    const bool conds[] = {e.cond1, e.cond2, e.cond3, e.cond4};
    for (std::size_t k = 0; k < 4; ++k) {
      if (!conds[k]) continue;
      ++fired[k];
      t.check(e.direct, label + ": epi condition " + std::to_string(k + 1) + " holds but the map is not onto");
    }
    epis += e.direct;
    ++t.trials;
  };
  for (std::size_t i = 0; i < 600; ++i) check_morphism(ctx.presentations[i].f, "presentation " + std::to_string(i));
  for (std::size_t i = 0; i < 60; ++i)
    for (std::size_t n = 0; n < ctx.complexes[i].degrees(); ++n)
      check_morphism(homology_presentation(ctx.complexes[i], n).pres.f, "complex " + std::to_string(i));
  std::ostringstream os;
  os << t.trials << " morphisms (" << monos << " mono, " << epis << " epi; conditions 1-4 held " << fired[0] << "/"
     << fired[1] << "/" << fired[2] << "/" << fired[3] << " times)";
  return finish(t, os.str());
}

Outcome criterion9(Context&) {
  const auto start = Clock::now();
  Tally t;
  Rng rng(999);
  auto divides = [](const Integer& a, const Integer& b) { return a == 0 ? b == 0 : b % a == 0; };
  auto unimodular = [](const IntMatrix& u) {
    const Integer d = determinant(u);
    return d == 1 || d == -1;
  };
  for (std::size_t i = 0; i < 1200; ++i) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    const IntMatrix m = random_int_matrix(rng, rows, cols, 100);
    const std::string label = "matrix " + std::to_string(i);

    const SmithForm s = snf(m);
    t.check(s.U * m * s.V == s.D, label + ": U M V != D");
    t.check(unimodular(s.U) && unimodular(s.V), label + ": SNF transform not unimodular");
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (r != c) t.check(s.D(r, c) == 0, label + ": D not diagonal");
    for (std::size_t k = 0; k < s.diagonal.size(); ++k) {
      t.check(s.diagonal[k] >= 0, label + ": negative invariant factor");
      if (k + 1 < s.diagonal.size()) t.check(divides(s.diagonal[k], s.diagonal[k + 1]), label + ": divisibility chain");
    }

    const HermiteForm h = hnf(m);
    t.check(m * h.U == h.H, label + ": M U != H");
    t.check(unimodular(h.U), label + ": HNF transform not unimodular");
    std::size_t rank = 0;
    for (const Integer& d : s.diagonal) rank += d != 0;
    t.check(h.rank == rank, label + ": HNF rank differs from SNF rank");
    for (std::size_t j = 0; j < cols; ++j) {
      if (j >= h.rank) {
        for (std::size_t r = 0; r < rows; ++r) t.check(h.H(r, j) == 0, label + ": nonzero column past the rank");
        continue;
      }
      const std::size_t pr = h.pivot_rows[j];
      t.check(j == 0 || pr > h.pivot_rows[j - 1], label + ": pivot rows not increasing");
      for (std::size_t r = 0; r < pr; ++r) t.check(h.H(r, j) == 0, label + ": entry above pivot");
      t.check(h.H(pr, j) > 0, label + ": pivot not positive");
      for (std::size_t l = 0; l < j; ++l)
        t.check(h.H(pr, l) >= 0 && h.H(pr, l) < h.H(pr, j), label + ": entry left of pivot not reduced");
    }

    const Lattice k = kernel_basis(m);
    t.check((m * k.basis()).is_zero(), label + ": kernel basis not in the kernel");
    t.check(k.rank() == cols - rank, label + ": kernel rank");
    // Z^cols / kernel is torsion-free exactly when the kernel is saturated.
    t.check(invariants_of_relations(cols, k.basis()).factors.empty(), label + ": kernel not saturated");
    ++t.trials;
  }
  return finish(t, std::to_string(t.trials) + " matrices up to 8x8 with entries in [-100, 100]", seconds_since(start),
                30);
}

Outcome criterion10(Context& ctx) {
  Tally t = ctx.divisibility;
  t.check(ctx.divisibility_checks > 0, "no divisibility checks were performed");
  return finish(t, std::to_string(ctx.divisibility_checks) + " divisibility checks over " +
                       std::to_string(ctx.divisibility_runs) + " pipeline runs, no violation");
}

}  // namespace

int main() {
  Context ctx;
  ctx.presentations = presentation_corpus();
  ctx.complexes = complex_corpus();

  const std::array<std::function<Outcome(Context&)>, 10> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i](ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.passed;
    std::cout << "criterion " << (i + 1) << ": " << (o.passed ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
  }
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
