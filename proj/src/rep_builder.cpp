#include "gybe/rep_builder.hpp"

#include <algorithm>
#include <cmath>

#include "gybe/error.hpp"
#include "gybe/limits.hpp"

namespace gybe {

namespace {

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Largest matrix dimension whose dense square fits the entry cap.
long rep_dimension_cap() {
  return long(std::sqrt(double(limits::matrix_entry_cap())));
}

std::vector<int> cert_set_indices(const FusionRing& ring,
                                  const GybeCertificate& cert) {
  std::vector<int> out;
  for (const auto& l : cert.set) out.push_back(ring.index_of(l));
  return out;
}

bool is_invertible_label(const FusionRing& ring, int a) {
  return ring.fuse(a, ring.dual[a]) == std::vector<int>{ring.unit};
}

// For invertible a: the unique simple a⊗b.
int invertible_product(const FusionRing& ring, int a, int b,
                       const std::string& what) {
  const auto& ch = ring.fuse(a, b);
  if (ch.size() != 1)
    fail(what + ": product " + ring.labels[a] + " x " + ring.labels[b] +
         " is not simple");
  return ch[0];
}

ExactMatrix monomial_sector(const CategoryData& cat,
                            const std::vector<int>& summands,
                            const std::vector<int>& s, int a, int d) {
  const FusionRing& ring = cat.ring;
  const int dim = int(s.size());
  ExactMatrix m(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const int y = s[col];
    // Unique summands m1, m2 with a⊗x_{m1} = y and y⊗x_{m2} = d; the gYBE
    // decomposition hits each internal label exactly once.
    int m1 = -1, m2 = -1;
    for (int g : summands) {
      if (invertible_product(ring, a, g, "sector") == y) m1 = g;
      if (invertible_product(ring, y, g, "sector") == d) m2 = g;
    }
    if (m1 < 0 || m2 < 0)
      fail("sector (" + ring.labels[a] + ", " + ring.labels[d] +
           "): no summand reaches internal label " + ring.labels[y]);
    const CycloScalar* braiding =
        cat.find_r(m1, m2, invertible_product(ring, m1, m2, "sector"));
    if (!braiding)
      fail("missing R-symbol R^{" + ring.labels[m1] + "," + ring.labels[m2] +
           "}_" + ring.labels[invertible_product(ring, m1, m2, "sector")]);
    const int y_out = invertible_product(ring, a, m2, "sector");
    const auto row_it = std::find(s.begin(), s.end(), y_out);
    if (row_it == s.end())
      fail("sector (" + ring.labels[a] + ", " + ring.labels[d] +
           "): swapped internal label " + ring.labels[y_out] +
           " lies outside S");
    m.set(int(row_it - s.begin()), col, *braiding);
  }
  return m;
}

ExactMatrix f_conjugated_sector(const CategoryData& cat, int x, int a, int d,
                                const std::vector<int>& s,
                                bool reindex_to_s_order) {
  const FusionRing& ring = cat.ring;
  const FMatrixData* f = cat.find_f(a, x, x, d);
  if (!f)
    fail("missing F-matrix F^{" + ring.labels[a] + ring.labels[x] +
         ring.labels[x] + "}_" + ring.labels[d]);
  const int dim = f->matrix.rows();
  ExactMatrix diag(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const int channel = f->row_channels[std::size_t(k)];
    const CycloScalar* r = cat.find_r(x, x, channel);
    if (!r)
      fail("missing R-symbol R^{" + ring.labels[x] + "," + ring.labels[x] +
           "}_" + ring.labels[channel]);
    diag.set(k, k, *r);
  }
  ExactMatrix m = f->matrix.inverse() * diag * f->matrix;
  if (!reindex_to_s_order) return m;
  // Reindex rows/columns from the stored F column order into S order.
  std::vector<int> pos(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto it = std::find(f->col_channels.begin(), f->col_channels.end(), s[i]);
    if (it == f->col_channels.end())
      fail("F-matrix column channels do not cover internal label " +
           ring.labels[s[i]]);
    pos[i] = int(it - f->col_channels.begin());
  }
  ExactMatrix out(int(s.size()), int(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      out.set(int(i), int(j), m.at(pos[i], pos[j]));
  return out;
}

}  // namespace

TreeBasis tree_basis(const GybeCertificate& cert, int n) {
  if (n < 2) fail("tree basis needs at least two strands");
  TreeBasis basis;
  basis.d = cert.d;
  basis.n = n;
  basis.alphabet = cert.set;
  const long dim = ipow(cert.d, n + 1);
  if (dim > rep_dimension_cap())
    fail("tree basis dimension " + std::to_string(dim) +
         " exceeds the matrix size cap");
  basis.sequences.reserve(std::size_t(dim));
  std::vector<int> digits(std::size_t(n) + 1, 0);
  for (long idx = 0; idx < dim; ++idx) {
    long rem = idx;
    for (int slot = n; slot >= 0; --slot) {
      digits[std::size_t(slot)] = int(rem % cert.d);
      rem /= cert.d;
    }
    basis.sequences.push_back(digits);
  }
  return basis;
}

ExactMatrix sector_matrix(const CategoryData& cat, const GybeCertificate& cert,
                          const std::string& i, const std::string& j) {
  const FusionRing& ring = cat.ring;
  const std::vector<int> s = cert_set_indices(ring, cert);
  const int a = ring.index_of(i);
  const int d = ring.index_of(j);
  if (std::find(s.begin(), s.end(), a) == s.end() ||
      std::find(s.begin(), s.end(), d) == s.end())
    fail("sector labels must lie in the certificate's set S");
  if (cert.object.size() == 1)
    return f_conjugated_sector(cat, ring.index_of(cert.object[0]), a, d, s,
                               /*reindex_to_s_order=*/false);
  std::vector<int> summands;
  for (const auto& l : cert.object) summands.push_back(ring.index_of(l));
  for (int g : summands)
    if (!is_invertible_label(ring, g))
      fail("non-simple object with non-invertible summand '" +
           ring.labels[g] + "' is not supported");
  return monomial_sector(cat, summands, s, a, d);
}

AssembledR assemble_R(const CategoryData& cat, const GybeCertificate& cert) {
  const FusionRing& ring = cat.ring;
  const std::vector<int> s = cert_set_indices(ring, cert);
  const int d = cert.d;

  AssembledR out;
  out.d = d;

  const bool simple = cert.object.size() == 1;
  std::vector<int> summands;
  if (!simple) {
    for (const auto& l : cert.object) summands.push_back(ring.index_of(l));
    for (int g : summands)
      if (!is_invertible_label(ring, g))
        fail("non-simple object with non-invertible summand '" +
             ring.labels[g] + "' is not supported");
  }

  for (int qi = 0; qi < d; ++qi)
    for (int qj = 0; qj < d; ++qj) {
      out.sector_order.emplace_back(ring.labels[s[std::size_t(qi)]],
                                    ring.labels[s[std::size_t(qj)]]);
      if (simple)
        out.sector_blocks.push_back(f_conjugated_sector(
            cat, ring.index_of(cert.object[0]), s[std::size_t(qi)],
            s[std::size_t(qj)], s, /*reindex_to_s_order=*/true));
      else
        out.sector_blocks.push_back(monomial_sector(
            cat, summands, s, s[std::size_t(qi)], s[std::size_t(qj)]));
    }

  out.b = direct_sum(out.sector_blocks);

  // Sector-ordered tuple m = (q·d + p) carries (i0, i1, i2) =
  // (s[q / d], s[p], s[q mod d]); send it to its lexicographic index.
  std::vector<int> image(std::size_t(d) * d * d);
  for (int q = 0; q < d * d; ++q)
    for (int p = 0; p < d; ++p)
      image[std::size_t(q) * d + p] = (q / d) * d * d + p * d + (q % d);
  out.p = ExactMatrix::permutation(image);

  out.r = out.p.inverse() * out.b * out.p;
  if (out.r.is_singular())
    fail("assembled R-matrix is singular; category data is inconsistent");
  return out;
}

BraidRep braid_rep(const ExactMatrix& r, int d, int n) {
  if (d < 1) fail("alphabet size d must be positive");
  const long d3 = ipow(d, 3);
  if (r.rows() != d3 || r.cols() != d3)
    fail("braid_rep needs a d^3 x d^3 matrix (got " +
         std::to_string(r.rows()) + "x" + std::to_string(r.cols()) + " for d=" +
         std::to_string(d) + ")");
  if (n < 2) fail("braid_rep needs n >= 2 strands");
  const long dim = ipow(d, n + 1);
  if (dim > rep_dimension_cap())
    fail("representation dimension " + std::to_string(dim) +
         " exceeds the matrix size cap");
  BraidRep rep;
  rep.n = n;
  rep.d = d;
  for (int k = 1; k <= n - 1; ++k) {
    ExactMatrix g = kron(ExactMatrix::identity(int(ipow(d, k - 1))), r);
    g = kron(g, ExactMatrix::identity(int(ipow(d, n - k - 1))));
    rep.generators.push_back(std::move(g));
  }
  return rep;
}

Json braid_rep_to_json(const BraidRep& rep) {
  Json j;
  j["n"] = rep.n;
  j["d"] = rep.d;
  Json gens = Json::array();
  for (const auto& g : rep.generators) gens.push_back(matrix_to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace gybe
