#ifndef GARSIDE_COXETER_MATRIX_HPP
#define GARSIDE_COXETER_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace garside {

// Bond label value standing for m = ∞.
inline constexpr int kInfiniteBond = 0;

// A Coxeter presentation: generator names and the symmetric matrix of bond
// labels m(s,t), with m(s,s) = 1 and off-diagonal entries ≥ 2 or kInfiniteBond.
class CoxeterMatrix {
public:
  CoxeterMatrix(std::vector<std::string> names, std::vector<std::vector<int>> entries);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::string& name(int s) const { return names_[s]; }

  // m(s,t); kInfiniteBond means ∞.
  int entry(int s, int t) const { return entries_[s][t]; }
  bool is_finite_bond(int s, int t) const { return entries_[s][t] != kInfiniteBond; }

  // Generator index for a name, or -1.
  int generator_index(const std::string& name) const;

  // Reorders generators; order[k] = old index placed at position k.
  CoxeterMatrix reordered(const std::vector<int>& order) const;

  bool operator==(const CoxeterMatrix& o) const = default;

  // -------- catalog constructors --------
  static CoxeterMatrix type_A(int rank);                  // path, all bonds 3
  static CoxeterMatrix type_B(int rank);                  // path, last bond 4
  static CoxeterMatrix type_H3();                         // 5 - 3 path
  static CoxeterMatrix type_I2(int bond);                 // dihedral; bond may be kInfiniteBond
  static CoxeterMatrix affine_A(int n);                   // (n+1)-cycle, all bonds 3 (n ≥ 2)
  static CoxeterMatrix affine_B3();                       // fork 3,3 at node 3, tail bond 4
  static CoxeterMatrix affine_C(int n);                   // path of n+1 nodes, end bonds 4
  // Listed edges commute (m = 2); all other pairs get m = ∞.
  static CoxeterMatrix right_angled(int rank, const std::vector<std::pair<int, int>>& commuting_edges);

private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> entries_;
};

// Parses a presentation document: a JSON object with either a catalog
// descriptor {"type": ..., "rank": ..., "bond": ..., "edges": ...} or an
// explicit {"generators": [...], "matrix": [[...]]} where ∞ is written "inf".
// Throws InvalidMatrixError / UnknownTypeError.
CoxeterMatrix parse_coxeter_input(const std::string& text);

// Default generator names for catalog systems: "1".."n".
std::vector<std::string> default_generator_names(int rank);

}  // namespace garside

#endif
