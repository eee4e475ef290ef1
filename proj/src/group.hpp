#pragma once

#include "ints.hpp"

#include <optional>
#include <string>

namespace sfc {

// Finite group by multiplication table; element 0 is the identity.
struct GroupTable {
  int n = 0;
  std::vector<int> mul;  // n*n, mul[g*n+h] = g*h
  std::string name;

  int at(int g, int h) const { return mul[size_t(g) * n + h]; }
  int inverse(int g) const;
  int order_of(int g) const;
  int pow(int g, int e) const;
  int conj(int g, int h) const { return at(at(h, g), inverse(h)); }  // h g h^-1
  bool is_abelian() const;
  void validate() const;  // associativity, identity, invertibility

  std::vector<int> centre() const;
  // subgroup generated by a set, as a sorted element list
  std::vector<int> generated(std::vector<int> gens) const;
  bool is_normal(const std::vector<int>& sub) const;
  std::vector<std::vector<int>> conjugacy_classes() const;
  // all normal subgroups (as sorted element lists), including 1 and G
  std::vector<std::vector<int>> normal_subgroups() const;
  GroupTable quotient(const std::vector<int>& nsub) const;
  std::vector<int> derived_subgroup() const;
  // invariant factors of G^{ab}
  std::vector<Int> abelianization_invariants() const;
  // a small generating set
  std::vector<int> small_generating_set() const;
};

GroupTable direct_product(const GroupTable& a, const GroupTable& b);

// Builders: Cn, Q4n (n >= 2), binary tetrahedral/octahedral/icosahedral.
GroupTable cyclic_group(int n);
GroupTable quaternion_group(int fourn);  // order 4n, argument is 4n
GroupTable binary_tetrahedral();
GroupTable binary_octahedral();
GroupTable binary_icosahedral();

// Name grammar: `Cn`, `Q4n`, `Ttilde`, `Otilde`, `Itilde`, products with `x`.
GroupTable group_by_name(const std::string& name);

// Text format: line 1 "order n", line 2 "identity k", then n rows of n
// 1-based indices.
GroupTable parse_group_table(const std::string& text);
std::string format_group_table(const GroupTable& g);

bool is_isomorphic(const GroupTable& a, const GroupTable& b);

// recognise generalised quaternion Q_{4n}; returns n on success
std::optional<int> as_generalized_quaternion(const GroupTable& g);

}  // namespace sfc
