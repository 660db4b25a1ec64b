#include "ppr/reduction.hpp"

#include <sstream>

#include "ppr/error.hpp"
#include "ppr/lift.hpp"

namespace ppr {
namespace {

std::string column_string(const IntMatrix& m, std::size_t j) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? "," : "") << m(i, j).get_str();
  os << ')';
  return os.str();
}

bool kills(const ZModulePresentation& target, const IntMatrix& images) {
  for (std::size_t j = 0; j < images.cols(); ++j)
    if (!target.is_zero_element(images.column(j))) return false;
  return true;
}

[[noreturn]] void hypothesis_fails(const std::string& where, const std::string& condition) {
  throw HypothesisError(where + ": hypothesis '" + condition + "' fails");
}

template <class Build>
auto rebuild(const char* where, Build&& build) {
  try {
    return build();
  } catch (const HypothesisError& e) {
    throw ConsistencyError(std::string(where) + ": " + e.what());
  }
}

}  // namespace

SeparatedPresentation SeparatedPresentation::make(DiagramMorphism f) {
  if (!(f.source.p == f.target.p)) throw HypothesisError("SeparatedPresentation: diagrams over different primes");
  const SeparationReport rk = is_separated(f.source);
  if (!rk.separated)
    throw HypothesisError("SeparatedPresentation: K is not separated" +
                          (rk.witnesses.empty() ? std::string() : " (" + rk.witnesses.front() + ")"));
  const SeparationReport rs = is_separated(f.target);
  if (!rs.separated)
    throw HypothesisError("SeparatedPresentation: S is not separated" +
                          (rs.witnesses.empty() ? std::string() : " (" + rs.witnesses.front() + ")"));
  if (auto d = morphism_defects(f); !d.empty()) throw HypothesisError("SeparatedPresentation: " + d.front());
  return SeparatedPresentation{std::move(f)};
}

PullbackDiagram free_presentation_stub(Prime p, std::size_t rank) { return PullbackDiagram::free(p, rank); }

PullbackDiagram elementary_diagram(Prime p, std::size_t d) {
  const ZModulePresentation v = ZModulePresentation::normalize(d, Lattice::scaled_full(d, p.as_integer()));
  return PullbackDiagram::make(v, v, d, FpMatrix::identity(p, d), FpMatrix::identity(p, d));
}

SeparatedPresentation quotient_presentation(const SeparatedPresentation& pres, const SubDiagram& l,
                                            QuotientMode mode) {
  static const std::string where = "quotient_presentation";
  const PullbackDiagram& k = pres.k();
  const PullbackDiagram& s = pres.s();
  const DiagramMorphism& f = pres.f;
  if (l.l1.rows() != k.m1.generators() || l.l2.rows() != k.m2.generators() || l.lbar.ambient_dim() != k.bar_dim)
    throw DimensionError(where + ": sub-diagram does not live in K");

  const FpSubspace img1 = image_of(k.p1, l.l1);
  const FpSubspace img2 = image_of(k.p2, l.l2);
  if (!l.lbar.contains(img1)) hypothesis_fails(where, "q1(L1) in Lbar");
  if (!l.lbar.contains(img2)) hypothesis_fails(where, "q2(L2) in Lbar");
  const FpMatrix f_lbar = f.fbar * l.lbar.basis_columns();
  const IntMatrix f1l = f.f1 * l.l1;
  const IntMatrix f2l = f.f2 * l.l2;
  auto need = [&](bool ok, const char* condition) {
    if (!ok) hypothesis_fails(where, condition);
  };
  switch (mode) {
    case QuotientMode::Full:
      need(img1 == l.lbar, "u1 surjective");
      need(img2 == l.lbar, "u2 surjective");
      need(fp_rank(f_lbar) == l.lbar.dim(), "fbar injective on Lbar");
      break;
    case QuotientMode::SecondVanishing:
      need(img2 == l.lbar, "u2 surjective");
      need(kills(s.m2, f2l), "f2(L2) = 0");
      need(f_lbar.is_zero(), "fbar(Lbar) = 0");
      break;
    case QuotientMode::FirstVanishing:
      need(img1 == l.lbar, "u1 surjective");
      need(kills(s.m1, f1l), "f1(L1) = 0");
      need(f_lbar.is_zero(), "fbar(Lbar) = 0");
      break;
    case QuotientMode::Combined:
      need(img1 == l.lbar, "u1 surjective");
      need(img2 == l.lbar, "u2 surjective");
      break;
  }

  const FpQuotient ql = fp_quotient(l.lbar);
  const FpQuotient qf = fp_quotient(fp_image(f_lbar));
  return rebuild("quotient_presentation", [&] {
    PullbackDiagram k_new = PullbackDiagram::make(quotient(k.m1, l.l1).module, quotient(k.m2, l.l2).module,
                                                  ql.projection.rows(), ql.projection * k.p1, ql.projection * k.p2);
    PullbackDiagram s_new = PullbackDiagram::make(quotient(s.m1, f1l).module, quotient(s.m2, f2l).module,
                                                  qf.projection.rows(), qf.projection * s.p1, qf.projection * s.p2);
    return SeparatedPresentation::make(
        {std::move(k_new), std::move(s_new), f.f1, f.f2, qf.projection * f.fbar * ql.section});
  });
}

bool has_elementary_source(const SeparatedPresentation& pres) {
  const PullbackDiagram& k = pres.k();
  const Lattice pz = Lattice::scaled_full(k.bar_dim, k.p.as_integer());
  return preimage_lattice(k.p1.lift(), pz) == k.m1.relations() &&
         preimage_lattice(k.p2.lift(), pz) == k.m2.relations();
}

SeparatedPresentation rebase(const SeparatedPresentation& pres) {
  if (!has_elementary_source(pres)) throw HypothesisError("rebase: K_i is not identified with Kbar by q_i");
  const PullbackDiagram& k = pres.k();
  const IntMatrix r1 = fp_right_inverse(k.p1).lift();
  const IntMatrix r2 = fp_right_inverse(k.p2).lift();
  return rebuild("rebase", [&] {
    return SeparatedPresentation::make(
        {elementary_diagram(k.p, k.bar_dim), pres.s(), pres.f.f1 * r1, pres.f.f2 * r2, pres.f.fbar});
  });
}

namespace {

SeparatedPresentation rebase_if_elementary(const SeparatedPresentation& pres) {
  return has_elementary_source(pres) ? rebase(pres) : pres;
}

Lattice component_kernel(const SeparatedPresentation& pres, int i) {
  return i == 1 ? kernel_of_map({pres.k().m1, pres.s().m1, pres.f.f1})
                : kernel_of_map({pres.k().m2, pres.s().m2, pres.f.f2});
}

}  // namespace

SeparatedPresentation reduce_K(const SeparatedPresentation& pres) {
  const PullbackDiagram& k = pres.k();
  const Lattice pz = Lattice::scaled_full(k.bar_dim, k.p.as_integer());
  const SubDiagram l{preimage_lattice(k.p1.lift(), pz).basis(), FpSubspace(k.p, k.bar_dim),
                     preimage_lattice(k.p2.lift(), pz).basis()};
  return rebase(quotient_presentation(pres, l, QuotientMode::Full));
}

SeparatedPresentation reduce_barf(const SeparatedPresentation& pres) {
  const PullbackDiagram& k = pres.k();
  const FpSubspace u = fp_complement(fp_kernel(pres.f.fbar));
  const SubDiagram l{fp_preimage_lattice(k.p1, u).basis(), u, fp_preimage_lattice(k.p2, u).basis()};
  SeparatedPresentation out = quotient_presentation(pres, l, QuotientMode::Full);
  if (!out.f.fbar.is_zero()) throw ConsistencyError("reduce_barf: fbar is nonzero after the quotient");
  return rebase_if_elementary(out);
}

SeparatedPresentation reduce_monos(const SeparatedPresentation& pres) {
  if (!pres.f.fbar.is_zero()) throw HypothesisError("reduce_monos: requires fbar = 0");
  const Lattice t2 = component_kernel(pres, 2);
  const FpSubspace lbar2 = image_of(pres.k().p2, t2.basis());
  const SubDiagram first{fp_preimage_lattice(pres.k().p1, lbar2).basis(), lbar2, t2.basis()};
  const SeparatedPresentation mid = quotient_presentation(pres, first, QuotientMode::SecondVanishing);

  const Lattice t1 = component_kernel(mid, 1);
  const FpSubspace lbar1 = image_of(mid.k().p1, t1.basis());
  const SubDiagram second{t1.basis(), lbar1, fp_preimage_lattice(mid.k().p2, lbar1).basis()};
  SeparatedPresentation out = quotient_presentation(mid, second, QuotientMode::FirstVanishing);

  if (!(component_kernel(out, 1) == out.k().m1.relations()))
    throw ConsistencyError("reduce_monos: f1 is not injective after reduction");
  if (!(component_kernel(out, 2) == out.k().m2.relations()))
    throw ConsistencyError("reduce_monos: f2 is not injective after reduction");
  return rebase_if_elementary(out);
}

bool ValidationReport::ok() const { return failed() == nullptr; }

const Condition* ValidationReport::failed() const {
  for (const auto& c : conditions)
    if (!c.passed) return &c;
  return nullptr;
}

ValidationReport validate_rdiagram(const RDiagram& rd) {
  ValidationReport r;
  const PullbackDiagram& s = rd.s;
  const Prime p = rd.p;
  const bool shapes = s.p == p && s.p1.rows() == s.bar_dim && s.p2.rows() == s.bar_dim &&
                      s.p1.cols() == s.m1.generators() && s.p2.cols() == s.m2.generators() &&
                      rd.q1.rows() == s.m1.generators() && rd.q2.rows() == s.m2.generators() &&
                      rd.q1.cols() == rd.k_dim && rd.q2.cols() == rd.k_dim;
  r.conditions.push_back({"shapes", shapes, shapes ? "" : "matrix shapes do not match the components"});
  if (!shapes) return r;

  const Integer pz = p.as_integer();
  const Lattice pk = Lattice::scaled_full(rd.k_dim, pz);
  for (int i = 1; i <= 2; ++i) {
    const std::string n = std::to_string(i);
    const ZModulePresentation& m = i == 1 ? s.m1 : s.m2;
    const FpMatrix& pm = i == 1 ? s.p1 : s.p2;
    const IntMatrix& q = i == 1 ? rd.q1 : rd.q2;

    Condition pwd{"p" + n + " well-defined", true, ""};
    const IntMatrix rel = m.relations().basis();
    for (std::size_t j = 0; j < rel.cols() && pwd.passed; ++j)
      if (!is_zero(lift_vector(pm.apply(reduce_vector(rel.column(j), p))))) {
        pwd.passed = false;
        pwd.witness = "relation " + column_string(rel, j) + " is not killed";
      }
    r.conditions.push_back(pwd);

    const std::size_t rank = fp_rank(pm);
    r.conditions.push_back({"p" + n + " epi", rank == s.bar_dim,
                            rank == s.bar_dim ? "" : "rank " + std::to_string(rank) + " < " + std::to_string(s.bar_dim)});

    Condition sep{"ker p" + n + " = pS" + n, true, ""};
    const Lattice ker = preimage_lattice(pm.lift(), Lattice::scaled_full(s.bar_dim, pz));
    const Lattice ps = Lattice::scaled_full(m.generators(), pz) + m.relations();
    if (!(ker == ps)) {
      sep.passed = false;
      for (std::size_t j = 0; j < ker.rank(); ++j)
        if (!ps.contains(ker.basis().column(j))) {
          sep.witness = column_string(ker.basis(), j) + " lies in the kernel but not in pS" + n;
          break;
        }
      if (sep.witness.empty()) sep.witness = "pS" + n + " is not contained in the kernel";
    }
    r.conditions.push_back(sep);

    Condition qwd{"q" + n + " well-defined", true, ""};
    for (std::size_t j = 0; j < rd.k_dim && qwd.passed; ++j) {
      IntVector v = q.column(j);
      for (auto& x : v) x *= pz;
      if (!m.is_zero_element(v)) {
        qwd.passed = false;
        qwd.witness = "p times image of K generator " + std::to_string(j) + " is nonzero";
      }
    }
    r.conditions.push_back(qwd);

    Condition mono{"q" + n + " mono", true, ""};
    if (qwd.passed) {
      const Lattice kq = preimage_lattice(q, m.relations());
      if (!(kq == pk)) {
        mono.passed = false;
        for (std::size_t j = 0; j < kq.rank(); ++j)
          if (!pk.contains(kq.basis().column(j))) {
            mono.witness = "K element " + column_string(kq.basis(), j) + " maps to zero";
            break;
          }
      }
    } else {
      mono.passed = false;
      mono.witness = "q" + n + " is not well-defined";
    }
    r.conditions.push_back(mono);

    const FpMatrix pq = pm * FpMatrix::reduce(p, q);
    Condition zero{"p" + n + " q" + n + " = 0", pq.is_zero(), ""};
    if (!zero.passed)
      for (std::size_t j = 0; j < rd.k_dim; ++j)
        if (!is_zero(lift_vector(pq.column(j)))) {
          zero.witness = "K generator " + std::to_string(j) + " has nonzero image in Sbar";
          break;
        }
    r.conditions.push_back(zero);
  }
  return r;
}

SeparatedPresentation as_presentation(const RDiagram& rd) {
  return SeparatedPresentation::make(
      {elementary_diagram(rd.p, rd.k_dim), rd.s, rd.q1, rd.q2, FpMatrix(rd.p, rd.s.bar_dim, rd.k_dim)});
}

RDiagram minimize_components(const RDiagram& rd) {
  const Minimized a = minimize(rd.s.m1);
  const Minimized b = minimize(rd.s.m2);
  const Prime p = rd.p;
  return rebuild("minimize_components", [&] {
    return RDiagram{p, rd.k_dim,
                    PullbackDiagram::make(a.module, b.module, rd.s.bar_dim, rd.s.p1 * FpMatrix::reduce(p, a.to_old),
                                          rd.s.p2 * FpMatrix::reduce(p, b.to_old)),
                    a.to_new * rd.q1, b.to_new * rd.q2};
  });
}

RDiagram to_rdiagram(const SeparatedPresentation& pres) {
  if (!has_elementary_source(pres)) throw ConsistencyError("to_rdiagram: source is not an F_p-space diagram");
  const SeparatedPresentation base = rebase(pres);
  if (!base.f.fbar.is_zero()) throw ConsistencyError("to_rdiagram: fbar is nonzero");
  const RDiagram rd = minimize_components(RDiagram{base.k().p, base.k().bar_dim, base.s(), base.f.f1, base.f.f2});
  const ValidationReport report = validate_rdiagram(rd);
  if (const Condition* c = report.failed())
    throw ConsistencyError("to_rdiagram: condition '" + c->name + "' fails: " + c->witness);
  return rd;
}

RDiagram reduce_sequential(const SeparatedPresentation& pres, Trace* trace) {
  auto record = [&](const char* name, const SeparatedPresentation& x) {
    if (trace) trace->push_back({name, x});
  };
  record("input", pres);
  const SeparatedPresentation a = reduce_K(pres);
  record("reduce_K", a);
  const SeparatedPresentation b = reduce_barf(a);
  record("reduce_barf", b);
  const SeparatedPresentation c = reduce_monos(b);
  record("reduce_monos", c);
  return to_rdiagram(c);
}

RDiagram reduce_combined(const SeparatedPresentation& pres, Trace* trace) {
  const PullbackDiagram& k = pres.k();
  const Lattice t1 = component_kernel(pres, 1);
  const Lattice t2 = component_kernel(pres, 2);
  const FpSubspace tbar1 = image_of(k.p1, t1.basis());
  const FpSubspace tbar2 = image_of(k.p2, t2.basis());
  const FpSubspace u = fp_complement(fp_kernel(pres.f.fbar));
  const SubDiagram l{(fp_preimage_lattice(k.p1, u + tbar2) + t1).basis(), u + tbar1 + tbar2,
                     (fp_preimage_lattice(k.p2, u + tbar1) + t2).basis()};
  const SeparatedPresentation q = quotient_presentation(pres, l, QuotientMode::Combined);
  const SeparatedPresentation base = rebase(q);
  if (trace) {
    trace->push_back({"input", pres});
    trace->push_back({"combined quotient", q});
    trace->push_back({"rebase", base});
  }
  return to_rdiagram(base);
}

}  // namespace ppr
