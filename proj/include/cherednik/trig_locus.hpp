#pragma once

#include <optional>
#include <vector>

#include "cherednik/singular_locus.hpp"
#include "cherednik/subsystems.hpp"

namespace cherednik {

struct TrigWitness {
  std::size_t stratum_index = 0;
  SubsystemEmbedding stratum;
  Witness rational;
};

struct TrigDecision {
  bool reducible = false;
  std::optional<TrigWitness> witness;
};

/// Rational locus of the stratum's subsystem, pulled back to the parent
/// parameters through the class map.
SingularLocus pullback_locus(const SubsystemEmbedding& e);

/// Reducibility of the polynomial representation of the trigonometric
/// algebra: some stratum's restricted parameter is rationally singular.
/// Strata are tried in enumeration order.
TrigDecision is_reducible_trig(const CartanType& t, const ParameterPoint& c);

LineSet trig_lines_up_to_height(const CartanType& t, int max_height);

struct AdditionalLine {
  CanonicalLine line;
  /// Every sample point is trigonometrically reducible and rationally regular.
  bool verified = false;
};

/// Trigonometric lines that are not rational lines, each re-checked on
/// sample points.
std::vector<AdditionalLine> additional_lines(const CartanType& t, int max_height);
LineSet line_set(const std::vector<AdditionalLine>& lines);

/// Generic rational points on a line (free coordinates get large prime
/// denominators so no other low-height line passes through them).
std::vector<std::vector<Rational>> sample_points(const CanonicalLine& line, int count = 20);

/// Constant-parameter rule c = j/d with d a degree and d not dividing j.
/// Throws ValidationError unless t is irreducible and simply laced.
bool constant_reducibility(const CartanType& t, const Rational& c);

}  // namespace cherednik
