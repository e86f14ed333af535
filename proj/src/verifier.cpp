#include "gybe/verifier.hpp"

#include <Eigen/Eigenvalues>

#include <deque>
#include <unordered_set>

#include "gybe/error.hpp"
#include "gybe/limits.hpp"

namespace gybe {

namespace {

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::optional<CheckResult::Witness> first_difference(const ExactMatrix& a,
                                                     const ExactMatrix& b,
                                                     int stage) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return CheckResult::Witness{stage, i, j};
  return std::nullopt;
}

void require_shape(const ExactMatrix& r, int d, int m, const char* who) {
  if (d < 1 || m < 1) fail(std::string(who) + ": d and m must be positive");
  const long dm = ipow(d, m);
  if (r.rows() != dm || r.cols() != dm)
    fail(std::string(who) + ": expected a " + std::to_string(dm) + "x" +
         std::to_string(dm) + " matrix for d=" + std::to_string(d) +
         ", m=" + std::to_string(m) + ", got " + std::to_string(r.rows()) +
         "x" + std::to_string(r.cols()));
}

}  // namespace

CheckResult check_gybe(const ExactMatrix& r, int d, int m) {
  require_shape(r, d, m, "check_gybe");
  if (r.is_singular()) fail("check_gybe: R must be invertible");
  const ExactMatrix id = ExactMatrix::identity(d);
  const ExactMatrix left = kron(r, id);   // R ⊗ I_V on V^{⊗(m+1)}
  const ExactMatrix right = kron(id, r);  // I_V ⊗ R
  const ExactMatrix lhs = left * right * left;
  const ExactMatrix rhs = right * left * right;
  CheckResult res;
  res.witness = first_difference(lhs, rhs, 0);
  res.ok = !res.witness.has_value();
  return res;
}

CheckResult check_far_commutativity(const ExactMatrix& r, int d, int m) {
  require_shape(r, d, m, "check_far_commutativity");
  CheckResult res;
  res.ok = true;
  for (int j = 3; j < m + 1; ++j) {
    // σ1 and σj act on V^{⊗(j−1+m)}; their supports overlap in m−j+1
    // slots, so the commutation is a real constraint.
    const ExactMatrix pad = ExactMatrix::identity(int(ipow(d, j - 1)));
    const ExactMatrix g1 = kron(r, pad);
    const ExactMatrix gj = kron(pad, r);
    const ExactMatrix ab = g1 * gj;
    const ExactMatrix ba = gj * g1;
    if (auto w = first_difference(ab, ba, j)) {
      res.ok = false;
      res.witness = w;
      return res;
    }
  }
  return res;
}

CheckResult check_braid_relations(const BraidRep& rep) {
  CheckResult res;
  res.ok = true;
  const auto& g = rep.generators;
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    const ExactMatrix lhs = g[k] * g[k + 1] * g[k];
    const ExactMatrix rhs = g[k + 1] * g[k] * g[k + 1];
    if (auto w = first_difference(lhs, rhs, int(k + 1))) {
      res.ok = false;
      res.witness = w;
      return res;
    }
  }
  for (std::size_t k = 0; k < g.size(); ++k)
    for (std::size_t l = k + 2; l < g.size(); ++l) {
      const ExactMatrix ab = g[k] * g[l];
      const ExactMatrix ba = g[l] * g[k];
      if (auto w = first_difference(ab, ba, int(k + 1))) {
        res.ok = false;
        res.witness = w;
        return res;
      }
    }
  return res;
}

EigenCertification certify_eigenvalues(
    const ExactMatrix& r, const std::vector<CycloScalar>& candidates) {
  if (!r.is_square()) fail("certify_eigenvalues requires a square matrix");
  if (candidates.empty())
    fail("certify_eigenvalues requires at least one candidate");
  EigenCertification cert;
  const ExactMatrix id = ExactMatrix::identity(r.rows());
  for (const auto& lambda : candidates) {
    bool dup = false;
    for (const auto& seen : cert.certified) dup = dup || seen == lambda;
    if (dup) continue;
    if ((r - id.scaled(lambda)).is_singular()) cert.certified.push_back(lambda);
  }
  if (!cert.certified.empty()) {
    ExactMatrix prod = id;
    for (const auto& lambda : cert.certified)
      prod = prod * (r - id.scaled(lambda));
    cert.annihilates = prod.is_zero();
  }
  return cert;
}

EigenProposals propose_eigenvalues(const ExactMatrix& r, int order) {
  if (!r.is_square()) fail("propose_eigenvalues requires a square matrix");
  Eigen::MatrixXcd m(r.rows(), r.cols());
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) m(i, j) = r.at(i, j).embed();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  EigenProposals out;
  std::vector<std::complex<double>> distinct;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const std::complex<double> ev = solver.eigenvalues()[i];
    bool seen = false;
    for (const auto& d : distinct) seen = seen || std::abs(d - ev) < 1e-9;
    if (seen) continue;
    distinct.push_back(ev);
    bool matched = false;
    for (int k = 0; k < order && !matched; ++k) {
      const CycloScalar root = root_of_unity(k, order);
      if (std::abs(root.embed() - ev) < 1e-9) {
        out.matched.push_back(root);
        matched = true;
      }
    }
    if (!matched) out.unmatched.push_back(ev);
  }
  return out;
}

namespace {

ExactMatrix projective_normalize(const ExactMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) {
        if (m.at(i, j).is_one()) return m;
        return m.scaled(m.at(i, j).inverse());
      }
  fail("projective normalization of a zero matrix");
}

}  // namespace

GroupClosureReport group_closure(const std::vector<ExactMatrix>& generators,
                                 std::size_t cap, bool projective,
                                 std::size_t sample_size) {
  if (generators.empty()) fail("group_closure requires generators");
  if (cap < 1) fail("group_closure cap must be positive");
  const int n = generators.front().rows();
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != n)
      fail("group_closure generators must be square and of equal size");
    if (g.is_singular()) fail("group_closure: non-invertible generator");
  }

  auto canonical = [&](const ExactMatrix& m) {
    return projective ? projective_normalize(m) : m;
  };

  GroupClosureReport report;
  report.generator_count = int(generators.size());
  report.projective = projective;
  report.cap = cap;

  std::unordered_set<std::string> seen;
  std::deque<ExactMatrix> frontier;
  std::size_t key_bytes = 0;

  auto insert = [&](const ExactMatrix& m) {
    std::string key = m.key();
    key_bytes += key.size();
    if (key_bytes > limits::kDefaultClosureMemoryGuard)
      fail("group_closure memory guard exceeded; lower the cap");
    if (!seen.insert(std::move(key)).second) return false;
    if (sample_size > 0 && report.element_sample.size() < sample_size)
      report.element_sample.push_back(m);
    frontier.push_back(m);
    return true;
  };

  insert(canonical(ExactMatrix::identity(n)));
  bool capped = false;
  while (!frontier.empty()) {
    const ExactMatrix cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      const ExactMatrix next = canonical(cur * g);
      insert(next);
      if (seen.size() > cap) {
        capped = true;
        break;
      }
    }
    if (capped) break;
  }

  if (!capped) {
    // Frontier exhausted: the set is finite and closed under every
    // generator, hence a group (it contains I and right multiplication by
    // each generator permutes it).
    report.order = seen.size();
    report.closed = true;
  }
  return report;
}

Json check_report_json(const std::string& name, const CheckResult& result,
                       const Json& dimensions) {
  Json j;
  j["check"] = name;
  j["result"] = result.ok;
  j["dimensions"] = dimensions;
  if (result.witness) {
    Json w;
    w["stage"] = result.witness->stage;
    w["row"] = result.witness->row;
    w["col"] = result.witness->col;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json closure_report_json(const GroupClosureReport& report) {
  Json j;
  j["check"] = "group_closure";
  j["generator_count"] = report.generator_count;
  j["projective"] = report.projective;
  if (report.order)
    j["order"] = *report.order;
  else
    j["order"] = "exceeded_cap";
  j["cap"] = report.cap;
  j["closed"] = report.closed;
  if (!report.element_sample.empty()) {
    Json sample = Json::array();
    for (const auto& m : report.element_sample)
      sample.push_back(matrix_to_json(m));
    j["element_sample"] = std::move(sample);
  }
  return j;
}

}  // namespace gybe
