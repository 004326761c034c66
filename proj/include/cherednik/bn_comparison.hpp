#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cherednik/json_io.hpp"
#include "cherednik/trig_locus.hpp"

namespace cherednik {

/// Additional B_n lines from D_n alone: lines of Sing(D_n) pulled back to
/// k_long, minus the rational B_n lines. Built straight from the D_n
/// degrees, without the stratum enumeration.
LineSet dn_pullback_additional(int n, int max_height);

/// {2q k_long = m : m odd, gcd(m, q) = 1, n/2 < q <= n-1} minus rational lines.
LineSet bn_closed_form_additional(int n, int max_height);

/// The printed reading (2p-1) k_long = 2q, n/2 < q <= n-1, p >= 1,
/// gcd(2p-1, q) = 1, before removing rational lines.
LineSet bn_printed_lines(int n, int max_height);
/// The same family with the two sides exchanged: 2q k_long = 2p-1.
LineSet bn_transposed_lines(int n, int max_height);

/// Oracle run at one representative point of a reading, on the D_n stratum.
struct Adjudication {
  std::string reading;
  CanonicalLine line;
  Rational k_long;
  bool trig_reducible = false;
  int max_degree = 0;
  std::optional<int> singular_degree;
};

struct BnComparison {
  int n = 0;
  int max_height = 0;
  LineSet computed;
  LineSet dn_pullback;
  LineSet closed_form;
  LineSet printed;     // minus rational lines
  LineSet transposed;  // minus rational lines
  bool all_verified = false;
  bool consistent = false;
  bool matches_printed = false;
  bool matches_transposed = false;
  std::vector<Adjudication> adjudication;
};

/// Three-way comparison; `oracle_degree` = 0 skips the Dunkl adjudication.
BnComparison compare_bn(int n, int max_height, int oracle_degree = 3);

Json to_json(const BnComparison& c);

}  // namespace cherednik
