#pragma once

#include <map>
#include <vector>

#include "cherednik/parameters.hpp"
#include "cherednik/root_system.hpp"

namespace cherednik {

/// An equal-rank subsystem obtained by deleting one node of the extended
/// Dynkin diagram of an irreducible parent.
struct SubsystemEmbedding {
  CartanType parent;
  int deleted_node = 0;  // 0 is the affine node
  CartanType sub_type;
  /// Sub length class -> parent class id (0 long, 1 short).
  std::map<ClassId, int> class_map;
  /// Simple roots of each factor of sub_type, as parent roots in the
  /// parent simple-root basis (the affine node realized as -theta).
  std::vector<std::vector<IntVector>> sub_simple_roots;

  /// Class images per factor, the second half of the deduplication key.
  std::vector<std::vector<int>> class_images() const;
  std::string describe() const;
};

/// Point strata of the torus for the coroot lattice: one entry per
/// extended-diagram node deletion, deduplicated on (sub_type, class images),
/// in order of the deleted node. The first entry is always the parent itself.
std::vector<SubsystemEmbedding> point_strata(const CartanType& parent);

/// c -> c_g: each sub length class gets the value of its image class.
ParameterPoint restrict_parameters(const SubsystemEmbedding& e, const ParameterPoint& c);

}  // namespace cherednik
