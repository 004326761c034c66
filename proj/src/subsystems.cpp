#include "cherednik/subsystems.hpp"

#include <algorithm>
#include <tuple>

namespace cherednik {

namespace {

struct Component {
  Factor factor;
  std::vector<int> images;
  std::vector<IntVector> roots;
};

const char* class_name(int cls) { return cls == 0 ? "long" : "short"; }

}  // namespace

std::vector<std::vector<int>> SubsystemEmbedding::class_images() const {
  std::vector<std::vector<int>> out(sub_type.factors().size());
  for (const auto& [id, image] : class_map) out.at(id.factor).push_back(image);
  return out;
}

std::string SubsystemEmbedding::describe() const {
  std::string s;
  const auto images = class_images();
  for (std::size_t f = 0; f < sub_type.factors().size(); ++f) {
    if (f) s += 'x';
    s += sub_type.factors()[f].to_string() + "(";
    for (std::size_t k = 0; k < images[f].size(); ++k) s += (k ? "," : "") + std::string(class_name(images[f][k]));
    s += ")";
  }
  return s;
}

std::vector<SubsystemEmbedding> point_strata(const CartanType& parent) {
  if (!parent.irreducible())
    throw ValidationError("point strata are defined per irreducible factor, got " + parent.to_string());
  const RootSystem rs(parent);
  const DynkinDiagram ext = extended_diagram(parent);
  const IntMatrix ext_cartan = cartan_matrix_of(ext.node_roots, rs.form());
  const int nodes = ext.num_nodes;

  std::vector<SubsystemEmbedding> out;
  for (int deleted = 0; deleted < nodes; ++deleted) {
    std::vector<int> kept;
    for (int i = 0; i < nodes; ++i)
      if (i != deleted) kept.push_back(i);
    IntMatrix sub(kept.size(), kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (std::size_t j = 0; j < kept.size(); ++j) sub(i, j) = ext_cartan(kept[i], kept[j]);

    std::vector<Component> comps;
    for (const auto& comp : connected_components(sub)) {
      Component c{identify_component(sub, comp), {}, {}};
      int long_len = 0;
      for (int i : comp) {
        c.roots.push_back(ext.node_roots[kept[i]]);
        long_len = std::max(long_len, rs.squared_length(c.roots.back()));
      }
      std::vector<int> image(c.factor.simply_laced() ? 1 : 2, -1);
      for (const auto& root : c.roots) {
        const auto idx = rs.find(root);
        if (!idx) throw InvariantError("subsystem simple root is not a parent root");
        const int sub_cls = rs.squared_length(root) == long_len ? 0 : 1;
        if (sub_cls >= static_cast<int>(image.size())) throw InvariantError("two root lengths in a simply laced component");
        const int parent_cls = rs.length_class(*idx).cls;
        if (image[sub_cls] >= 0 && image[sub_cls] != parent_cls) throw InvariantError("inconsistent class map");
        image[sub_cls] = parent_cls;
      }
      if (std::find(image.begin(), image.end(), -1) != image.end()) throw InvariantError("length class without a simple root");
      c.images = std::move(image);
      comps.push_back(std::move(c));
    }
    std::stable_sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
      return std::tie(a.factor, a.images) < std::tie(b.factor, b.images);
    });

    SubsystemEmbedding e;
    e.parent = parent;
    e.deleted_node = deleted;
    std::vector<Factor> factors;
    for (std::size_t f = 0; f < comps.size(); ++f) {
      factors.push_back(comps[f].factor);
      for (std::size_t k = 0; k < comps[f].images.size(); ++k)
        e.class_map[{static_cast<int>(f), static_cast<int>(k)}] = comps[f].images[k];
      e.sub_simple_roots.push_back(comps[f].roots);
    }
    e.sub_type = CartanType(std::move(factors));
    if (e.sub_type.rank() != parent.rank()) throw InvariantError("stratum of non-maximal rank");

    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const SubsystemEmbedding& o) {
      return o.sub_type == e.sub_type && o.class_images() == e.class_images();
    });
    if (!duplicate) out.push_back(std::move(e));
  }
  return out;
}

ParameterPoint restrict_parameters(const SubsystemEmbedding& e, const ParameterPoint& c) {
  if (c.type() != e.parent) throw InvariantError("parameter point does not live on the stratum's parent type");
  std::map<ClassId, Rational> values;
  for (const auto& id : e.sub_type.classes()) {
    const auto it = e.class_map.find(id);
    if (it == e.class_map.end()) throw InvariantError("class map misses a subsystem class");
    values[id] = c[{0, it->second}];
  }
  return ParameterPoint(e.sub_type, std::move(values));
}

}  // namespace cherednik
