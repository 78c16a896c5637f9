#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// One of the simple complex Lie algebras, identified by family letter and rank.
// The canonical list is isomorphism-free: A r>=1, B r>=2, C r>=3, D r>=4,
// E 6..8, F 4, G 2.  Redundant low-rank types (B1, C1, C2, D2, D3) are rejected.
struct SimpleType {
  Family family;
  int rank;

  auto operator<=>(const SimpleType&) const = default;
};

bool is_admissible(const SimpleType& t);
SimpleType parse_simple_type(const std::string& text);  // "A3", "E7", ...
std::string to_string(const SimpleType& t);
long long algebra_dimension(const SimpleType& t);

// Coordinate order used for canonical forms: shorter first, then at the first
// differing position the LARGER entry sorts first.  This makes low-index
// support win, e.g. A^1 < A^r and omega_1 < omega_r.
template <typename T>
std::strong_ordering support_order(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

// Integral weight in the fundamental-weight basis.
struct Weight {
  std::vector<long long> fw;

  bool is_zero() const;
  bool is_dominant() const;
  std::strong_ordering operator<=>(const Weight& o) const { return support_order(fw, o.fw); }
  bool operator==(const Weight& o) const { return fw == o.fw; }
};

Weight operator+(const Weight& a, const Weight& b);

// Grading element sum_{i: bits[i]=1} A^i in the basis dual to the simple roots.
struct GradingElement {
  std::vector<int> bits;  // entries in {0,1}

  bool is_zero() const;
  int node_count() const;
  std::strong_ordering operator<=>(const GradingElement& o) const {
    return support_order(bits, o.bits);
  }
  bool operator==(const GradingElement& o) const { return bits == o.bits; }
};

// Full combinatorial root-system data of one simple type.  All entries are
// exact; the node numbering follows Bourbaki and is pinned by golden-value
// tests on fundamental-weight evaluations.
struct RootDatum {
  SimpleType type;
  // cartan[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in the
  // fundamental-weight basis.
  std::vector<std::vector<long long>> cartan;
  std::vector<std::vector<Rat>> inverse_cartan;  // row i is omega_i in the simple-root basis
  std::vector<std::vector<long long>> positive_roots;  // simple-root coordinates
  std::vector<long long> highest_root;                 // simple-root coordinates
  std::vector<long long> symmetrizer;  // s_i = (alpha_i,alpha_i)/2, short roots get 1
  Weight rho;                          // all fundamental coordinates 1

  int rank() const { return type.rank; }

  // Simple-root coordinates of a weight given in fundamental-weight coordinates.
  std::vector<Rat> root_coords(const Weight& w) const;

  // w(E) = sum over graded nodes of the simple-root coordinates of w.
  Rat eval_on_grading(const Weight& w, const GradingElement& e) const;

  // w(T) with T = 2 sum_{i: e_i = 0} A^i, the parity element of the grading.
  Rat parity_element_eval(const Weight& w, const GradingElement& e) const;

  // Highest-root pairing with the grading element; this is the adjoint depth.
  long long highest_root_eval(const GradingElement& e) const;

  // Duality involution -w_0 as a node permutation applied to w.
  Weight dual_weight(const Weight& w) const;

  // Node permutation realizing -w_0 (identity for self-dual types).
  const std::vector<int>& duality_permutation() const { return duality_perm_; }

  // All diagram automorphisms as node permutations (identity first).
  const std::vector<std::vector<int>>& diagram_automorphisms() const { return diagram_auts_; }

  // Symmetrized pairing (v, w) with v in fundamental-weight coordinates and
  // w in simple-root coordinates: sum_j v_j * s_j * w_j.
  Rat pairing_fw_root(const std::vector<long long>& fw, const std::vector<Rat>& rc) const;

  std::vector<int> duality_perm_;
  std::vector<std::vector<int>> diagram_auts_;
};

// Builds (and caches) the root datum of an admissible simple type.
// Throws DomainError for inadmissible ranks.
const RootDatum& build_root_datum(const SimpleType& t);

// Applies a node permutation to weight coordinates: result[perm[i]] = w[i].
Weight permute_weight(const Weight& w, const std::vector<int>& perm);
GradingElement permute_grading(const GradingElement& e, const std::vector<int>& perm);

}  // namespace hodge
