#include "cherednik/json_io.hpp"

namespace cherednik {

namespace {

Json vector_json(const IntVector& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    a.push_back(std::move(row));
  }
  return a;
}

const char* class_name(int cls) { return cls == 0 ? "long" : "short"; }

const char* kind_name(RhsCondition::Kind k) {
  switch (k) {
    case RhsCondition::Kind::any: return "any";
    case RhsCondition::Kind::not_divisible: return "not_divisible";
    case RhsCondition::Kind::residues: return "residues";
    case RhsCondition::Kind::coprime: return "coprime";
  }
  return "any";
}

}  // namespace

Json to_json(const RootSystem& rs) {
  Json roots = Json::array(), coroots = Json::array(), classes = Json::array();
  for (std::size_t r = 0; r < rs.roots().size(); ++r) {
    roots.push_back(vector_json(rs.roots()[r]));
    coroots.push_back(vector_json(rs.coroots()[r]));
    const auto id = rs.length_class(r);
    classes.push_back({{"factor", id.factor}, {"class", class_name(id.cls)}});
  }
  return {{"type", rs.type().to_string()},
          {"rank", rs.rank()},
          {"cartan_matrix", matrix_json(rs.cartan_matrix())},
          {"symmetrizer", vector_json(rs.symmetrizer())},
          {"num_positive_roots", rs.num_positive()},
          {"roots", std::move(roots)},
          {"coroots", std::move(coroots)},
          {"length_classes", std::move(classes)}};
}

Json to_json(const DynkinDiagram& dd) {
  Json edges = Json::array();
  for (const auto& e : dd.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"multiplicity", e.multiplicity}, {"directed", e.directed}});
  Json nodes = Json::array();
  for (const auto& r : dd.node_roots) nodes.push_back(vector_json(r));
  return {{"num_nodes", dd.num_nodes}, {"extended", dd.extended}, {"edges", std::move(edges)}, {"marks", dd.marks},
          {"node_roots", std::move(nodes)}};
}

Json to_json(const SubsystemEmbedding& e) {
  Json map = Json::array();
  for (const auto& [id, image] : e.class_map)
    map.push_back({{"factor", id.factor}, {"sub_class", class_name(id.cls)}, {"parent_class", class_name(image)}});
  Json roots = Json::array();
  for (const auto& factor : e.sub_simple_roots) {
    Json f = Json::array();
    for (const auto& r : factor) f.push_back(vector_json(r));
    roots.push_back(std::move(f));
  }
  return {{"deleted_node", e.deleted_node},
          {"sub_type", e.sub_type.to_string()},
          {"description", e.describe()},
          {"class_map", std::move(map)},
          {"sub_simple_roots", std::move(roots)}};
}

Json to_json(const RhsCondition& c) {
  Json j{{"kind", kind_name(c.kind)}};
  switch (c.kind) {
    case RhsCondition::Kind::any: break;
    case RhsCondition::Kind::not_divisible: j["modulus"] = c.modulus; break;
    case RhsCondition::Kind::residues:
      j["modulus"] = c.modulus;
      j["residues"] = c.residues;
      break;
    case RhsCondition::Kind::coprime: j["coprime_to"] = c.modulus; break;
  }
  return j;
}

Json to_json(const LineFamily& f) { return {{"coeffs", f.coeffs}, {"condition", to_json(f.condition)}, {"source", f.source}}; }

Json to_json(const SingularLocus& locus) {
  Json fams = Json::array();
  for (const auto& f : locus.families) fams.push_back(to_json(f));
  return {{"type", locus.type.to_string()}, {"classes", class_labels(locus.type)}, {"families", std::move(fams)}};
}

Json to_json(const CanonicalLine& line) { return {{"coeffs", line.coeffs}, {"rhs", line.rhs}}; }

Json to_json(const RationalPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", to_string(c)}});
  return terms;
}

Json to_json(const CartanType& t, const Decision& d) {
  Json j{{"reducible", d.member}};
  if (d.witness)
    j["witness"] = {{"stratum", t.to_string()}, {"family_source", d.witness->family.source}, {"l", d.witness->l.get_str()}};
  else
    j["witness"] = nullptr;
  return j;
}

Json to_json(const TrigDecision& d) {
  Json j{{"reducible", d.reducible}};
  if (d.witness)
    j["witness"] = {{"stratum", d.witness->stratum.describe()},
                    {"deleted_node", d.witness->stratum.deleted_node},
                    {"family_source", d.witness->rational.family.source},
                    {"l", d.witness->rational.l.get_str()}};
  else
    j["witness"] = nullptr;
  return j;
}

CanonicalLine canonical_line_from_json(const Json& j) {
  return CanonicalLine::normalized(j.at("coeffs").get<std::vector<std::int64_t>>(), j.at("rhs").get<std::int64_t>());
}

RationalPolynomial polynomial_from_json(const Json& j, int nvars) {
  RationalPolynomial p(nvars);
  for (const auto& term : j) {
    auto e = term.at("exponents").get<Exponents>();
    if (static_cast<int>(e.size()) != nvars) throw ValidationError("exponent vector of the wrong length");
    p.add_term(std::move(e), parse_rational(term.at("coeff").get<std::string>()));
  }
  return p;
}

RhsCondition condition_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "any") return RhsCondition::any();
  if (kind == "not_divisible") return RhsCondition::not_divisible_by(j.at("modulus").get<int>());
  if (kind == "residues") return RhsCondition::residues_mod(j.at("modulus").get<int>(), j.at("residues").get<std::vector<int>>());
  if (kind == "coprime") return RhsCondition::coprime_to(j.at("coprime_to").get<int>());
  throw ValidationError("unknown condition kind '" + kind + "'");
}

LineFamily family_from_json(const Json& j) {
  return {j.at("coeffs").get<std::vector<int>>(), condition_from_json(j.at("condition")), j.at("source").get<std::string>()};
}

}  // namespace cherednik
