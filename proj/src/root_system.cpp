#include "cherednik/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace cherednik {

IntMatrix cartan_matrix(const Factor& f) {
  const int n = f.rank;
  IntMatrix a = 2 * IntMatrix::Identity(n, n);
  auto link = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  switch (f.letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(2, 1) = -2;
      break;
    case 'G':
      link(0, 1);
      a(0, 1) = -3;
      break;
    default:
      throw ValidationError("unknown Cartan letter");
  }
  return a;
}

IntMatrix cartan_matrix(const CartanType& t) {
  const int n = t.rank();
  IntMatrix a = IntMatrix::Zero(n, n);
  int offset = 0;
  for (const auto& f : t.factors()) {
    a.block(offset, offset, f.rank, f.rank) = cartan_matrix(f);
    offset += f.rank;
  }
  return a;
}

std::vector<std::vector<int>> connected_components(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      comp.push_back(i);
      for (int j = 0; j < n; ++j)
        if (j != i && !seen[j] && (cartan(i, j) != 0 || cartan(j, i) != 0)) {
          seen[j] = 1;
          queue.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

IntVector symmetrizer(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  IntVector d = IntVector::Zero(n);
  for (const auto& comp : connected_components(a)) {
    std::map<int, Rational> value{{comp.front(), Rational(1)}};
    std::deque<int> queue{comp.front()};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j : comp) {
        if (j == i || a(i, j) == 0 || value.count(j)) continue;
        if (a(j, i) == 0) throw ValidationError("Cartan matrix is not symmetrizable");
        // d_i a_ij = d_j a_ji
        value[j] = value[i] * a(i, j) / a(j, i);
        queue.push_back(j);
      }
    }
    Integer lcm = 1;
    for (const auto& [i, v] : value) lcm = lcm * v.get_den() / gcd(lcm, v.get_den());
    Integer g = 0;
    for (const auto& [i, v] : value) g = gcd(g, Integer(v * lcm));
    for (const auto& [i, v] : value) {
      const Rational scaled = v * lcm / g;
      if (scaled <= 0) throw ValidationError("Cartan matrix is not symmetrizable with positive entries");
      d(i) = static_cast<int>(scaled.get_num().get_si());
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d(i) * a(i, j) != d(j) * a(j, i)) throw ValidationError("Cartan matrix is not symmetrizable");
  return d;
}

RootSystem::RootSystem(const CartanType& type)
    : type_(type), cartan_(cherednik::cartan_matrix(type)), sym_(cherednik::symmetrizer(cartan_)) {
  if (type_.empty()) throw ValidationError("empty Cartan type");
  const int n = rank();
  form_ = sym_.asDiagonal() * cartan_;

  for (int f = 0; f < static_cast<int>(type_.factors().size()); ++f)
    for (int k = 0; k < type_.factors()[f].rank; ++k) simple_factor_.push_back(f);

  // Close the simple roots under simple reflections.
  std::set<IntVector, LexLess> found;
  std::deque<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    IntVector e = IntVector::Unit(n, i);
    found.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVector beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IntVector image = beta;
      image(i) -= cartan_.row(i).dot(beta);
      if (found.insert(image).second) queue.push_back(image);
    }
  }
  roots_.assign(found.begin(), found.end());
  std::sort(roots_.begin(), roots_.end(), [](const IntVector& a, const IntVector& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return LexLess{}(b, a);
  });

  std::vector<int> long_length(type_.factors().size(), 0);
  for (int i = 0; i < n; ++i) long_length[simple_factor_[i]] = std::max(long_length[simple_factor_[i]], 2 * sym_(i));

  for (std::size_t r = 0; r < roots_.size(); ++r) {
    const IntVector& beta = roots_[r];
    index_.emplace(beta, r);
    if (height(beta) > 0) positive_.push_back(r);

    int support = 0;
    while (beta(support) == 0) ++support;
    const int factor = simple_factor_[support];
    const int len = squared_length(beta);
    const bool simply_laced = type_.factors()[factor].simply_laced();
    classes_.push_back({factor, (simply_laced || len == long_length[factor]) ? 0 : 1});

    IntVector co(n);
    for (int j = 0; j < n; ++j) {
      const int num = 2 * beta(j) * sym_(j);
      if (num % len != 0) throw InvariantError("non-integral coroot");
      co(j) = num / len;
    }
    coroots_.push_back(std::move(co));
  }
}

std::optional<std::size_t> RootSystem::find(const IntVector& root) const {
  const auto it = index_.find(root);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IntVector RootSystem::highest_root(int factor) const {
  const IntVector* best = nullptr;
  for (const auto& r : roots_) {
    int support = 0;
    while (r(support) == 0) ++support;
    if (simple_factor_[support] != factor) continue;
    if (!best || height(r) > height(*best)) best = &r;
  }
  if (!best) throw ValidationError("no such factor");
  return *best;
}

IntVector RootSystem::reflect(std::size_t root, const IntVector& x) const {
  if (root >= roots_.size()) throw ValidationError("root index out of range");
  const int pairing = x.dot(cartan_ * roots_[root]);
  return x - pairing * coroots_[root];
}

IntVector RootSystem::reflect_root(std::size_t root, const IntVector& beta) const {
  if (root >= roots_.size()) throw ValidationError("root index out of range");
  const int pairing = coroots_[root].dot(cartan_ * beta);
  return beta - pairing * roots_[root];
}

std::vector<int> degrees(const CartanType& t) {
  std::vector<int> out;
  for (const auto& f : t.factors()) {
    const int n = f.rank;
    switch (f.letter) {
      case 'A':
        for (int d = 2; d <= n + 1; ++d) out.push_back(d);
        break;
      case 'B':
      case 'C':
        for (int i = 1; i <= n; ++i) out.push_back(2 * i);
        break;
      case 'D':
        for (int i = 1; i <= n - 1; ++i) out.push_back(2 * i);
        out.push_back(n);
        break;
      case 'E':
        if (n == 6) out.insert(out.end(), {2, 5, 6, 8, 9, 12});
        if (n == 7) out.insert(out.end(), {2, 6, 8, 10, 12, 14, 18});
        if (n == 8) out.insert(out.end(), {2, 8, 12, 14, 18, 20, 24, 30});
        break;
      case 'F':
        out.insert(out.end(), {2, 6, 8, 12});
        break;
      case 'G':
        out.insert(out.end(), {2, 6});
        break;
    }
  }
  return out;
}

Integer weyl_order(const CartanType& t) {
  Integer order = 1;
  for (int d : degrees(t)) order *= d;
  return order;
}

int root_count(const CartanType& t) {
  int total = 0;
  for (const auto& f : t.factors()) {
    const int n = f.rank;
    switch (f.letter) {
      case 'A': total += n * (n + 1); break;
      case 'B':
      case 'C': total += 2 * n * n; break;
      case 'D': total += 2 * n * (n - 1); break;
      case 'E': total += n == 6 ? 72 : n == 7 ? 126 : 240; break;
      case 'F': total += 48; break;
      case 'G': total += 12; break;
    }
  }
  return total;
}

UnivariatePolynomial<Integer> poincare_polynomial(const CartanType& t) {
  auto p = UnivariatePolynomial<Integer>::one();
  for (int d : degrees(t)) p = p * UnivariatePolynomial<Integer>::geometric(d);
  return p;
}

DynkinDiagram dynkin_diagram(const IntMatrix& cartan) {
  DynkinDiagram dd;
  dd.num_nodes = static_cast<int>(cartan.rows());
  for (int i = 0; i < dd.num_nodes; ++i)
    for (int j = i + 1; j < dd.num_nodes; ++j) {
      if (cartan(i, j) == 0 && cartan(j, i) == 0) continue;
      DynkinEdge e{i, j, cartan(i, j) * cartan(j, i), cartan(i, j) != cartan(j, i)};
      // The row holding the larger entry belongs to the shorter root.
      if (e.directed && std::abs(cartan(i, j)) > std::abs(cartan(j, i))) std::swap(e.from, e.to);
      dd.edges.push_back(e);
    }
  return dd;
}

IntMatrix DynkinDiagram::to_cartan_matrix() const {
  IntMatrix a = 2 * IntMatrix::Identity(num_nodes, num_nodes);
  for (const auto& e : edges) {
    if (!e.directed) {
      const int v = e.multiplicity == 4 ? -2 : -1;
      a(e.from, e.to) = a(e.to, e.from) = v;
    } else {
      a(e.to, e.from) = -e.multiplicity;
      a(e.from, e.to) = -1;
    }
  }
  return a;
}

IntMatrix cartan_matrix_of(const std::vector<IntVector>& simple_roots, const IntMatrix& form) {
  const int n = static_cast<int>(simple_roots.size());
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    const int ii = simple_roots[i].dot(form * simple_roots[i]);
    for (int j = 0; j < n; ++j) {
      const int ij = 2 * simple_roots[i].dot(form * simple_roots[j]);
      if (ij % ii != 0) throw InvariantError("non-integral Cartan entry");
      a(i, j) = ij / ii;
    }
  }
  return a;
}

DynkinDiagram extended_diagram(const CartanType& t) {
  if (!t.irreducible()) throw ValidationError("extended diagram requires an irreducible type, got " + t.to_string());
  const RootSystem rs(t);
  const IntVector theta = rs.highest_root();
  std::vector<IntVector> nodes{-theta};
  for (int i = 0; i < rs.rank(); ++i) nodes.push_back(IntVector::Unit(rs.rank(), i));
  DynkinDiagram dd = dynkin_diagram(cartan_matrix_of(nodes, rs.form()));
  dd.extended = true;
  dd.node_roots = std::move(nodes);
  dd.marks.push_back(1);
  for (int i = 0; i < rs.rank(); ++i) dd.marks.push_back(theta(i));
  return dd;
}

Factor identify_component(const IntMatrix& cartan, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  const auto fail = [](const std::string& why) -> Factor { throw ValidationError("not a finite-type Cartan matrix: " + why); };
  if (n == 1) return {'A', 1};

  std::vector<std::vector<int>> adj(n);
  int edges = 0, multiple = 0, mult_u = -1, mult_v = -1, bond = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int aij = cartan(nodes[i], nodes[j]), aji = cartan(nodes[j], nodes[i]);
      if ((aij == 0) != (aji == 0) || aij > 0 || aji > 0) fail("inconsistent off-diagonal entries");
      if (aij == 0) continue;
      const int m = aij * aji;
      if (m > 3) fail("bond of multiplicity " + std::to_string(m));
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
      if (m > 1) {
        ++multiple;
        mult_u = i;
        mult_v = j;
        bond = m;
      }
    }
  if (edges != n - 1) fail("diagram contains a cycle");
  if (multiple > 1) fail("more than one multiple bond");
  std::vector<int> branch;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 3) fail("node of valence > 3");
    if (adj[i].size() == 3) branch.push_back(i);
  }
  if (branch.size() > 1) fail("more than one branch node");

  if (bond == 3) {
    if (n != 2) fail("triple bond in rank > 2");
    return {'G', 2};
  }
  if (bond == 2) {
    if (!branch.empty()) fail("branched diagram with a double bond");
    if (n == 2) return {'B', 2};
    const bool u_end = adj[mult_u].size() == 1, v_end = adj[mult_v].size() == 1;
    if (u_end != v_end) {
      const int end = u_end ? mult_u : mult_v, inner = u_end ? mult_v : mult_u;
      // A(short, long) = -2
      const bool end_short = cartan(nodes[end], nodes[inner]) == -2;
      return {end_short ? 'B' : 'C', n};
    }
    if (n == 4) return {'F', 4};
    fail("double bond in the interior of a long chain");
  }
  if (branch.empty()) return {'A', n};

  const int b = branch.front();
  std::vector<int> arms;
  for (int start : adj[b]) {
    int prev = b, cur = start, len = 1;
    while (adj[cur].size() == 2) {
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n};
  return fail("branched diagram of non-finite type");
}

CartanType identify_diagram(const IntMatrix& cartan) {
  if (cartan.rows() != cartan.cols() || cartan.rows() == 0) throw ValidationError("Cartan matrix must be square and nonempty");
  for (int i = 0; i < cartan.rows(); ++i)
    if (cartan(i, i) != 2) throw ValidationError("Cartan matrix diagonal must be 2");
  std::vector<Factor> factors;
  for (const auto& comp : connected_components(cartan)) factors.push_back(identify_component(cartan, comp));
  return CartanType(std::move(factors));
}

}  // namespace cherednik
