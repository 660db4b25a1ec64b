#include "ppr/io.hpp"

#include <iomanip>
#include <sstream>

#include "ppr/error.hpp"

namespace ppr {

using nlohmann::json;

namespace {

Integer parse_entry(const json& e) {
  if (e.is_number_integer()) return Integer(e.get<long>());
  if (e.is_string()) {
    Integer x;
    const std::string s = e.get<std::string>();
    if (s.empty() || x.set_str(s, 10) != 0) throw ParseError("matrix entry \"" + s + "\" is not a decimal integer");
    return x;
  }
  throw ParseError("matrix entry " + e.dump() + " is neither an integer nor a decimal string");
}

// Row-major matrix; an empty list is a matrix with no rows and `cols` columns.
IntMatrix parse_matrix(const json& j, const std::string& what, std::size_t cols_if_empty) {
  if (!j.is_array()) throw ParseError(what + " is not an array of rows");
  if (j.empty()) return IntMatrix(0, cols_if_empty);
  std::vector<IntVector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError(what + " has a row that is not an array");
    IntVector r;
    for (const auto& e : row) r.push_back(parse_entry(e));
    if (!rows.empty() && r.size() != rows.front().size()) throw ParseError(what + " has rows of different lengths");
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows, rows.front().size());
}

json int_matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(std::move(row));
  }
  return out;
}

json fp_matrix_json(const FpMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix matrix_of_shape(const json& j, const std::string& what, std::size_t rows, std::size_t cols) {
  const IntMatrix m = parse_matrix(j, what, cols);
  if (m.rows() != rows || (rows > 0 && m.cols() != cols))
    throw ParseError(what + " should be " + std::to_string(rows) + "x" + std::to_string(cols));
  return m;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t count_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    throw ParseError(std::string("field \"") + name + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

ZModulePresentation component_from_json(const json& j, const std::string& what) {
  AbelianInvariants inv;
  inv.free_rank = count_field(j, "rank");
  const json& factors = field(j, "factors");
  if (!factors.is_array()) throw ParseError(what + ".factors is not an array");
  for (const auto& f : factors) inv.factors.push_back(parse_entry(f));
  return ZModulePresentation::from_invariants(inv);
}

std::string invariants_string(const AbelianInvariants& inv) {
  std::ostringstream os;
  os << inv;
  return os.str();
}

std::string matrix_lines(const std::string& name, const IntMatrix& m, const std::string& indent) {
  std::ostringstream os;
  os << indent << name << " =";
  if (m.rows() == 0 || m.cols() == 0) {
    os << " (" << m.rows() << "x" << m.cols() << ")\n";
    return os.str();
  }
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, m(i, j).get_str().size());
  os << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << std::setw(static_cast<int>(width)) << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace

ChainComplexR parse_complex(const std::string& text) {
  const json doc = parse_json(text);
  try {
    const json& pj = field(doc, "p");
    if (!pj.is_number_integer() || pj.get<long>() < 0) throw ParseError("field \"p\" must be a non-negative integer");
    const Prime p(pj.get<std::uint64_t>());
    static const json no_differentials = json::array();
    const json& dj = doc.contains("differentials") ? doc.at("differentials") : no_differentials;
    if (!dj.is_array()) throw ParseError("field \"differentials\" is not an array");

    std::vector<std::size_t> ranks;
    const bool explicit_ranks = doc.contains("ranks");
    if (explicit_ranks) {
      if (!doc["ranks"].is_array()) throw ParseError("field \"ranks\" is not an array");
      for (const auto& r : doc["ranks"]) {
        if (!r.is_number_integer() || r.get<long>() < 0) throw ParseError("ranks must be non-negative integers");
        ranks.push_back(r.get<std::size_t>());
      }
    }
    std::vector<Differential> diffs;
    for (std::size_t k = 0; k < dj.size(); ++k) {
      const std::string where = "differentials[" + std::to_string(k) + "]";
      const std::size_t cols = k < ranks.size() ? ranks[k] : (diffs.empty() ? 0 : diffs.back().d1.rows());
      diffs.push_back({parse_matrix(field(dj[k], "d1"), where + ".d1", cols),
                       parse_matrix(field(dj[k], "d2"), where + ".d2", cols)});
    }
    if (!explicit_ranks) {
      if (diffs.empty()) throw ParseError("a complex without differentials needs a \"ranks\" field");
      ranks.push_back(diffs.front().d1.cols());
      for (const auto& d : diffs) ranks.push_back(d.d1.rows());
    }
    return ChainComplexR{p, std::move(ranks), std::move(diffs)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed complex document: ") + e.what());
  }
}

json complex_to_json(const ChainComplexR& c) {
  json diffs = json::array();
  for (const auto& d : c.differentials) diffs.push_back({{"d1", int_matrix_json(d.d1)}, {"d2", int_matrix_json(d.d2)}});
  return {{"p", c.p.value()}, {"ranks", c.ranks}, {"differentials", diffs}};
}

json invariants_to_json(const AbelianInvariants& inv) {
  json factors = json::array();
  for (const auto& f : inv.factors) factors.push_back(f.get_str());
  return {{"rank", inv.free_rank}, {"factors", factors}};
}

json validation_to_json(const ValidationReport& report) {
  json out = json::array();
  for (const auto& c : report.conditions) {
    json entry = {{"name", c.name}, {"passed", c.passed}};
    if (!c.witness.empty()) entry["witness"] = c.witness;
    out.push_back(std::move(entry));
  }
  return out;
}

json rdiagram_to_json(const RDiagram& rd) {
  auto component = [](const ZModulePresentation& m) {
    json j = invariants_to_json(m.invariants());
    j["generators"] = m.generators();
    return j;
  };
  return {{"K_dim", rd.k_dim},
          {"S1", component(rd.s.m1)},
          {"S2", component(rd.s.m2)},
          {"Sbar_dim", rd.s.bar_dim},
          {"q1", int_matrix_json(rd.q1)},
          {"q2", int_matrix_json(rd.q2)},
          {"p1", fp_matrix_json(rd.s.p1)},
          {"p2", fp_matrix_json(rd.s.p2)}};
}

RDiagram rdiagram_from_json(const json& j, Prime p) {
  try {
    const std::size_t k = count_field(j, "K_dim");
    const std::size_t sbar = count_field(j, "Sbar_dim");
    ZModulePresentation s1 = component_from_json(field(j, "S1"), "S1");
    ZModulePresentation s2 = component_from_json(field(j, "S2"), "S2");
    const std::size_t g1 = s1.generators(), g2 = s2.generators();
    const IntMatrix p1 = matrix_of_shape(field(j, "p1"), "p1", sbar, g1);
    const IntMatrix p2 = matrix_of_shape(field(j, "p2"), "p2", sbar, g2);
    // Built without validation: validate_rdiagram reports any defect.
    PullbackDiagram s{p, std::move(s1), std::move(s2), sbar, FpMatrix::reduce(p, p1), FpMatrix::reduce(p, p2)};
    return RDiagram{p, k, std::move(s), matrix_of_shape(field(j, "q1"), "q1", g1, k),
                    matrix_of_shape(field(j, "q2"), "q2", g2, k)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed R-diagram: ") + e.what());
  }
}

json presentation_to_json(const SeparatedPresentation& pres) {
  const PullbackDiagram& k = pres.k();
  const PullbackDiagram& s = pres.s();
  return {{"K1", invariants_string(k.m1.invariants())},
          {"Kbar_dim", k.bar_dim},
          {"K2", invariants_string(k.m2.invariants())},
          {"S1", invariants_string(s.m1.invariants())},
          {"Sbar_dim", s.bar_dim},
          {"S2", invariants_string(s.m2.invariants())},
          {"f1", int_matrix_json(pres.f.f1)},
          {"f2", int_matrix_json(pres.f.f2)},
          {"fbar", fp_matrix_json(pres.f.fbar)}};
}

DegreeReport report_degree(DegreeResult result, const ChainComplexR& c) {
  ValidationReport validation = validate_rdiagram(result.rd);
  const GroupInvariants pipeline = underlying_invariants_of_rdiagram(result.rd);
  const GroupInvariants oracle = integer_homology_invariants(c, result.degree);
  return DegreeReport{std::move(result), std::move(validation), pipeline, oracle};
}

json degree_to_json(const DegreeReport& r, bool include_trace) {
  json j = rdiagram_to_json(r.result.rd);
  j["degree"] = r.result.degree;
  j["valid"] = r.validation.ok();
  j["validation"] = validation_to_json(r.validation);
  json oracle = invariants_to_json(r.oracle);
  oracle["agree"] = r.agree();
  j["oracle"] = std::move(oracle);
  j["diagnostics"] = {{"divisibility_checks", r.result.divisibility_checks},
                      {"torsion_columns", r.result.torsion_columns}};
  if (include_trace) {
    json stages = json::array();
    for (const auto& st : r.result.trace) {
      json s = presentation_to_json(st.pres);
      s["name"] = st.name;
      stages.push_back(std::move(s));
    }
    j["trace"] = std::move(stages);
  }
  return j;
}

json rdiagram_document(Prime p, const std::vector<DegreeReport>& reports, bool include_trace) {
  json degrees = json::array();
  for (const auto& r : reports) degrees.push_back(degree_to_json(r, include_trace));
  return {{"p", p.value()}, {"degrees", degrees}};
}

std::vector<RDiagram> parse_rdiagram_document(const std::string& text) {
  const json doc = parse_json(text);
  try {
    const Prime p(field(doc, "p").get<std::uint64_t>());
    std::vector<RDiagram> out;
    for (const auto& d : field(doc, "degrees")) out.push_back(rdiagram_from_json(d, p));
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed R-diagram document: ") + e.what());
  }
}

std::string render_text(const DegreeReport& r, Prime p, bool include_trace) {
  const RDiagram& rd = r.result.rd;
  const std::string fp = "F_" + std::to_string(p.value());
  const std::string k = "K = " + fp + "^" + std::to_string(rd.k_dim);
  const std::string s1 = "S1 = " + invariants_string(rd.s.m1.invariants());
  const std::string s2 = "S2 = " + invariants_string(rd.s.m2.invariants());
  const std::string sbar = "Sbar = " + fp + "^" + std::to_string(rd.s.bar_dim);
  const std::size_t left = std::max<std::size_t>(s1.size(), 12);
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  const std::string centre(left, ' ');

  std::ostringstream os;
  os << "degree " << r.result.degree << "\n\n";
  os << centre << "  " << k << "\n";
  os << centre << "q1 /   \\ q2\n";
  os << centre << " v     v\n";
  os << pad(s1, left) << "        " << s2 << "\n";
  os << centre << "p1 \\   / p2\n";
  os << centre << "   v v\n";
  os << centre << "  " << sbar << "\n\n";
  os << matrix_lines("q1", rd.q1, "  ") << matrix_lines("q2", rd.q2, "  ");
  os << matrix_lines("p1", rd.s.p1.lift(), "  ") << matrix_lines("p2", rd.s.p2.lift(), "  ");
  os << "\n  valid: " << (r.validation.ok() ? "yes" : "no") << "\n";
  for (const auto& c : r.validation.conditions)
    if (!c.passed) os << "    failed: " << c.name << (c.witness.empty() ? "" : " (" + c.witness + ")") << "\n";
  os << "  underlying group: " << invariants_string(r.pipeline) << "\n";
  os << "  integer homology: " << invariants_string(r.oracle) << (r.agree() ? " (agree)" : " (DISAGREE)") << "\n";
  if (include_trace)
    for (const auto& st : r.result.trace) {
      const SeparatedPresentation& pr = st.pres;
      os << "  stage " << st.name << ": K = (" << invariants_string(pr.k().m1.invariants()) << ", " << fp << "^"
         << pr.k().bar_dim << ", " << invariants_string(pr.k().m2.invariants()) << ")  S = ("
         << invariants_string(pr.s().m1.invariants()) << ", " << fp << "^" << pr.s().bar_dim << ", "
         << invariants_string(pr.s().m2.invariants()) << ")\n";
    }
  return os.str();
}

}  // namespace ppr
