#include "gybe/finder.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "gybe/error.hpp"

namespace gybe {

namespace {

std::vector<int> resolve_labels(const FusionRing& ring,
                                const std::vector<std::string>& names) {
  std::vector<int> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(ring.index_of(n));
  return out;
}

std::vector<int> fuse_object_with(const FusionRing& ring,
                                  const std::vector<int>& summands, int b) {
  std::vector<int> out;
  for (int a : summands) {
    const auto& ch = ring.fuse(a, b);
    out.insert(out.end(), ch.begin(), ch.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> names_of(const FusionRing& ring,
                                  const std::vector<int>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(ring.labels[i]);
  return out;
}

}  // namespace

FPDims fp_dimensions(const FusionRing& ring) {
  const int n = ring.size();
  FPDims dims;
  dims.labels = ring.labels;
  dims.values.resize(n);
  for (int a = 0; a < n; ++a) {
    const auto m = ring.fusion_matrix(a);
    // Power iteration on N_a + I; the shift removes periodicity without
    // moving the Perron vector.
    std::vector<double> v(n, 1.0), w(n, 0.0);
    double rayleigh = 0.0, prev = -1.0;
    int it = 0;
    const int max_it = 100000;
    for (; it < max_it; ++it) {
      for (int i = 0; i < n; ++i) {
        double acc = v[i];
        for (int j = 0; j < n; ++j) acc += double(m[i][j]) * v[j];
        w[i] = acc;
      }
      double vv = 0.0, vw = 0.0, norm = 0.0;
      for (int i = 0; i < n; ++i) {
        vv += v[i] * v[i];
        vw += v[i] * w[i];
        norm = std::max(norm, std::abs(w[i]));
      }
      rayleigh = vw / vv - 1.0;
      for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
      if (it > 0 && std::abs(rayleigh - prev) <
                        1e-13 * std::max(1.0, std::abs(rayleigh)))
        break;
      prev = rayleigh;
    }
    if (it == max_it)
      fail("power iteration failed to converge for label '" + ring.labels[a] +
           "' (degenerate ring?)");
    DimValue dv;
    dv.approx = rayleigh;
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += double(m[i][j]) * v[j];
      res = std::max(res, std::abs(acc - rayleigh * v[i]));
    }
    dv.residual = res;
    const double rounded = std::round(rayleigh);
    if (std::abs(rayleigh - rounded) < 1e-9 && rounded >= 1.0 &&
        rounded <= 1024.0) {
      // Exact certification: d is an eigenvalue iff N_a − d·I is singular.
      const long d = long(rounded);
      ExactMatrix exact(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          long e = m[i][j] - (i == j ? d : 0);
          if (e != 0) exact.set(i, j, CycloScalar(e, 1));
        }
      if (exact.is_singular()) {
        dv.exact = true;
        dv.exact_value = d;
        dv.approx = double(d);
      }
    }
    dims.values[std::size_t(a)] = dv;
  }
  return dims;
}

GybeScan is_gybe_object(const FusionRing& ring, const ObjectExpr& x,
                        const std::vector<std::string>& s) {
  if (x.summands.empty()) fail("object expression must be nonempty");
  std::vector<int> xs = resolve_labels(ring, x.summands);
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (xs[i] == xs[i + 1])
      fail("object expression repeats label '" + ring.labels[xs[i]] + "'");
  std::vector<int> si = resolve_labels(ring, s);
  {
    std::set<int> uniq(si.begin(), si.end());
    if (uniq.size() != si.size()) fail("set S repeats a label");
  }
  if (si.size() < 2) fail("set S needs at least two labels");

  std::vector<int> s_sorted = si;
  std::sort(s_sorted.begin(), s_sorted.end());

  for (int i : si) {
    const auto decomposition = fuse_object_with(ring, xs, i);
    if (decomposition != s_sorted)
      return GybeRefusal{ring.labels[i], names_of(ring, decomposition)};
  }

  GybeCertificate cert;
  cert.object = names_of(ring, xs);
  cert.set = names_of(ring, si);
  cert.d = int(si.size());
  for (int i : si)
    cert.decompositions[ring.labels[i]] =
        names_of(ring, fuse_object_with(ring, xs, i));
  cert.object_outside_set =
      std::any_of(xs.begin(), xs.end(), [&](int a) {
        return std::find(s_sorted.begin(), s_sorted.end(), a) ==
               s_sorted.end();
      });
  return cert;
}

namespace {

// All nonempty subsets of {0..n−1} with at most k elements, in lexicographic
// order of the increasing index vector.
void enumerate_subsets(int n, int k,
                       const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> walk = [&](int next) {
    if (!cur.empty()) fn(cur);
    if (int(cur.size()) == k) return;
    for (int i = next; i < n; ++i) {
      cur.push_back(i);
      walk(i + 1);
      cur.pop_back();
    }
  };
  walk(0);
}

}  // namespace

std::vector<GybeCertificate> find_gybe_objects(const FusionRing& ring,
                                               int max_summands) {
  if (max_summands < 1) fail("max_summands must be at least 1");
  if (ring.size() > 16 && max_summands > 2)
    fail("scan over " + std::to_string(ring.size()) +
         " labels with max_summands > 2 is too large; test candidates "
         "individually with is_gybe_object");
  std::vector<GybeCertificate> found;
  enumerate_subsets(ring.size(), max_summands, [&](const std::vector<int>& xs) {
    ObjectExpr x{names_of(ring, xs)};
    enumerate_subsets(ring.size(), ring.size(), [&](const std::vector<int>& si) {
      if (si.size() < 2) return;
      auto scan = is_gybe_object(ring, x, names_of(ring, si));
      if (auto* cert = std::get_if<GybeCertificate>(&scan))
        found.push_back(std::move(*cert));
    });
  });
  return found;
}

bool check_dim_integrality(const FusionRing& ring, const GybeCertificate& cert,
                           const FPDims& dims) {
  bool all_exact = true;
  long exact_sum = 0;
  double approx_sum = 0.0;
  for (const auto& label : cert.object) {
    const DimValue& dv = dims.values.at(std::size_t(ring.index_of(label)));
    all_exact = all_exact && dv.exact;
    exact_sum += dv.exact_value;
    approx_sum += dv.approx;
  }
  if (all_exact) return exact_sum == long(cert.set.size());
  return std::abs(approx_sum - double(cert.set.size())) < 1e-9;
}

int eigenvalue_bound_l(const FusionRing& ring, const ObjectExpr& x) {
  std::vector<int> xs = resolve_labels(ring, x.summands);
  std::set<int> channels;
  for (int a : xs)
    for (int b : xs)
      for (int c : ring.fuse(a, b)) channels.insert(c);
  return int(channels.size());
}

Json certificate_to_json(const GybeCertificate& cert) {
  Json j;
  j["object"] = cert.object;
  j["set"] = cert.set;
  j["d"] = cert.d;
  Json dec;
  for (const auto& [label, channels] : cert.decompositions)
    dec[label] = channels;
  j["decompositions"] = std::move(dec);
  if (cert.object_outside_set) j["object_outside_set"] = true;
  return j;
}

Json refusal_to_json(const GybeRefusal& refusal) {
  Json j;
  j["refused"] = true;
  j["violating_label"] = refusal.violating_label;
  j["actual_decomposition"] = refusal.actual_decomposition;
  return j;
}

}  // namespace gybe
