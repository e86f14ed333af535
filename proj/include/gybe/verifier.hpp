#pragma once

#include <optional>

#include "gybe/rep_builder.hpp"

namespace gybe {

/// Outcome of an exact identity check; `witness` locates the first
/// differing entry when the check fails.
struct CheckResult {
  bool ok = false;
  struct Witness {
    int stage = 0;  // which equation (j for far commutativity, k for braids)
    int row = 0;
    int col = 0;
  };
  std::optional<Witness> witness;
  explicit operator bool() const { return ok; }
};

/// (R⊗I)(I⊗R)(R⊗I) = (I⊗R)(R⊗I)(I⊗R) on V^{⊗(m+1)}, exactly.
/// R must be invertible of size d^m; m = 2 is the ordinary YBE.
CheckResult check_gybe(const ExactMatrix& r, int d, int m);

/// R_{σ1}R_{σj} = R_{σj}R_{σ1} on V^{⊗(j−1+m)} for every 2 < j < m+1;
/// vacuously true for m = 2.
CheckResult check_far_commutativity(const ExactMatrix& r, int d, int m);

/// Braid relations σ_k σ_{k+1} σ_k = σ_{k+1} σ_k σ_{k+1} plus commutation of
/// all far generator pairs, exactly.
CheckResult check_braid_relations(const BraidRep& rep);

struct EigenCertification {
  std::vector<CycloScalar> certified;  // candidates with R − λI singular
  // True when Π(R − λI) over the certified set is exactly zero, i.e. R is
  // diagonalizable with spectrum inside the candidate list.
  bool annihilates = false;
};

/// Exact certification: keeps exactly the candidates λ with R − λI
/// singular. Candidate order is preserved; duplicates are dropped.
EigenCertification certify_eigenvalues(const ExactMatrix& r,
                                       const std::vector<CycloScalar>& candidates);

/// Numeric proposals for matrices without category provenance: floating
/// eigenvalues matched against roots of unity of the given order within
/// 1e-9. Proposals only; verdicts stay exact.
struct EigenProposals {
  std::vector<CycloScalar> matched;
  std::vector<std::complex<double>> unmatched;
};
EigenProposals propose_eigenvalues(const ExactMatrix& r, int order);

struct GroupClosureReport {
  int generator_count = 0;
  bool projective = false;
  std::optional<std::size_t> order;  // empty means the cap was exceeded
  std::size_t cap = 0;
  bool closed = false;  // set iff BFS exhausted the frontier
  std::vector<ExactMatrix> element_sample;
};

/// Breadth-first closure of the generated matrix group under
/// multiplication, with exact canonical-form hashing. In projective mode
/// matrices are normalized by scaling the first nonzero entry (row-major)
/// to 1 before hashing. Stops with `order` empty once `cap` distinct
/// elements have been found.
GroupClosureReport group_closure(const std::vector<ExactMatrix>& generators,
                                 std::size_t cap, bool projective,
                                 std::size_t sample_size = 0);

Json check_report_json(const std::string& name, const CheckResult& result,
                       const Json& dimensions);
Json closure_report_json(const GroupClosureReport& report);

}  // namespace gybe
