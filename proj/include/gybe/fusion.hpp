#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gybe/json_io.hpp"
#include "gybe/matrix.hpp"

namespace gybe {

/// Multiplicity-free fusion ring: labels in file order, a unit, duals, and
/// the fusion table a⊗b = multiset of labels (each at most once).
/// All computation uses label indices into `labels`.
class FusionRing {
 public:
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<int> dual;  // dual[a] = index of the dual label
  // fuse(a,b), keyed with a <= b; commutativity fills the rest.
  std::map<std::pair<int, int>, std::vector<int>> table;

  int size() const { return int(labels.size()); }
  int index_of(const std::string& label) const;  // throws on unknown label
  std::optional<int> find(const std::string& label) const;

  /// Sorted multiset of fusion channels of a⊗b.
  const std::vector<int>& fuse(int a, int b) const;

  /// Multiplicity of c in a⊗b (0 or 1 in this multiplicity-free model).
  int n_abc(int a, int b, int c) const;

  /// Fusion matrix of a: M[b][c] = N_{ab}^c.
  std::vector<std::vector<long>> fusion_matrix(int a) const;

  /// Re-checks every ring invariant (unit law, commutativity by
  /// construction, associativity over all triples, duals); throws with a
  /// location on the first violation.
  void validate() const;

  bool operator==(const FusionRing& o) const;
};

/// A possibly non-simple object: a multiplicity-free set of summand labels.
struct ObjectExpr {
  std::vector<std::string> summands;
};

/// F-move data for one (a,b,c; d): the matrix is indexed by the stored
/// channel orderings, never by label sort order — orderings are data.
struct FMatrixData {
  std::vector<int> row_channels;  // channels of b⊗c admissible against (a; d)
  std::vector<int> col_channels;  // channels of a⊗b admissible against (c; d)
  ExactMatrix matrix;
};

struct CategoryData {
  std::string name;
  int field_order = limits::kDefaultFieldOrder;
  FusionRing ring;
  std::optional<CycloScalar> kauffman_variable;  // provenance metadata only
  std::map<std::array<int, 3>, CycloScalar> r_symbols;  // (a,b,c) → R^{ab}_c
  std::map<std::array<int, 4>, FMatrixData> f_matrices; // (a,b,c,d) → F^{abc}_d

  const CycloScalar* find_r(int a, int b, int c) const;
  const FMatrixData* find_f(int a, int b, int c, int d) const;

  bool operator==(const CategoryData& o) const;
};

/// Parses and fully validates a category file; every scalar is promoted to
/// the declared cyclotomic order.
CategoryData parse_category(const Json& j);
CategoryData parse_category_file(const std::string& path);
Json serialize_category(const CategoryData& cat);

/// SO(2r+1) level-2 fusion ring with labels {1, Z, X1..Xr, Xe, Xep}.
FusionRing gen_so_odd_level2(int r);

/// Relabels the r = 1 ring to the five-label alphabet {0,1,2,3,4}
/// (1→0, Xe→1, X1→2, Xep→3, Z→4); rejects other rings.
FusionRing relabel_jk(const FusionRing& ring);

/// Built-in categories, parsed from the same files shipped under data/.
CategoryData builtin_category(const std::string& name);
/// Raw JSON text of a built-in category file.
std::string builtin_category_text(const std::string& name);

/// The published 8x8 R-matrix for the Jones-Kauffman sixth-root category.
ExactMatrix reference_jk6_r_matrix();
/// The published 8x8 signed permutation for the Ising object 1⊕ψ.
ExactMatrix reference_ising_r_matrix();

}  // namespace gybe
