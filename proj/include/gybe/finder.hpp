#pragma once

#include <map>
#include <variant>

#include "gybe/fusion.hpp"

namespace gybe {

/// Evidence that x is a (d,3,1)-gYBE object with respect to the label set s:
/// for every i in s, x⊗X_i decomposes as exactly the multiset s.
struct GybeCertificate {
  std::vector<std::string> object;  // summand labels of x
  std::vector<std::string> set;     // the ordered set S
  int d = 0;
  std::map<std::string, std::vector<std::string>> decompositions;
  // The definition does not force the summands of x to lie in S; flagged
  // when they do not.
  bool object_outside_set = false;
};

/// Refusal is a value, not an error: the first violating i and what x⊗X_i
/// actually decomposes into.
struct GybeRefusal {
  std::string violating_label;
  std::vector<std::string> actual_decomposition;
};

using GybeScan = std::variant<GybeCertificate, GybeRefusal>;

struct DimValue {
  bool exact = false;   // certified integer (exact eigenvector check passed)
  long exact_value = 0;
  double approx = 0.0;
  double residual = 0.0;  // max-norm eigen residual of the power iterate
};

/// Frobenius-Perron dimensions per label (index-aligned with the ring).
struct FPDims {
  std::vector<std::string> labels;
  std::vector<DimValue> values;
  const DimValue& of(int label) const { return values.at(std::size_t(label)); }
};

/// Perron eigenvalues of the fusion matrices, by shifted power iteration
/// (Rayleigh threshold 1e-13); values within 1e-9 of an integer <= 2^10 are
/// upgraded to exact after an exact singularity check of N_a − d·I.
FPDims fp_dimensions(const FusionRing& ring);

GybeScan is_gybe_object(const FusionRing& ring, const ObjectExpr& x,
                        const std::vector<std::string>& s);

/// Exhaustive scan: x over multiplicity-free sums of at most max_summands
/// simples, s over label subsets of size >= 2, in lexicographic (x, s)
/// order. Refuses rings with more than 16 labels when max_summands > 2.
std::vector<GybeCertificate> find_gybe_objects(const FusionRing& ring,
                                               int max_summands);

/// Σ of the object's dimensions equals |s| (exact when dims are exact,
/// within 1e-9 otherwise).
bool check_dim_integrality(const FusionRing& ring, const GybeCertificate& cert,
                           const FPDims& dims);

/// Number of distinct fusion channels of x⊗x (expanded over ordered summand
/// pairs); an upper bound for the number of distinct eigenvalues of the
/// assembled R-matrix.
int eigenvalue_bound_l(const FusionRing& ring, const ObjectExpr& x);

Json certificate_to_json(const GybeCertificate& cert);
Json refusal_to_json(const GybeRefusal& refusal);

}  // namespace gybe
