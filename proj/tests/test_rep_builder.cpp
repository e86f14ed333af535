#include <catch_amalgamated.hpp>

#include "gybe/error.hpp"
#include "gybe/rep_builder.hpp"
#include "gybe/verifier.hpp"

using gybe::assemble_R;
using gybe::braid_rep;
using gybe::builtin_category;
using gybe::CategoryData;
using gybe::CycloScalar;
using gybe::direct_sum;
using gybe::ExactMatrix;
using gybe::GybeCertificate;
using gybe::is_gybe_object;
using gybe::ObjectExpr;
using gybe::root_of_unity;
using gybe::sector_matrix;
using gybe::tree_basis;

namespace {

GybeCertificate jk6_cert(const CategoryData& cat) {
  auto scan = is_gybe_object(cat.ring, ObjectExpr{{"2"}}, {"1", "3"});
  return std::get<GybeCertificate>(scan);
}

GybeCertificate ising_cert(const CategoryData& cat) {
  auto scan = is_gybe_object(cat.ring, ObjectExpr{{"1", "psi"}}, {"1", "psi"});
  return std::get<GybeCertificate>(scan);
}

ExactMatrix hdh(long p1, long p2) {
  const CycloScalar h = CycloScalar::from_terms(
      24, {{gybe::make_rational(1, 2), 3}, {gybe::make_rational(1, 2), 21}});
  ExactMatrix hm(2, 2);
  hm.set(0, 0, h);
  hm.set(0, 1, h);
  hm.set(1, 0, h);
  hm.set(1, 1, -h);
  ExactMatrix d(2, 2);
  d.set(0, 0, root_of_unity(p1, 6));
  d.set(1, 1, root_of_unity(p2, 6));
  return hm * d * hm;
}

ExactMatrix paper_p() {
  ExactMatrix one(1, 1);
  one.set(0, 0, CycloScalar(1, 1));
  ExactMatrix sx(2, 2);
  sx.set(0, 1, CycloScalar(1, 1));
  sx.set(1, 0, CycloScalar(1, 1));
  return direct_sum({one, sx, one, one, sx, one});
}

}  // namespace

TEST_CASE("tree basis tuples are lexicographic over the set alphabet") {
  const auto cat = builtin_category("jk6");
  const auto cert = jk6_cert(cat);
  const auto basis = tree_basis(cert, 2);
  CHECK(basis.alphabet == std::vector<std::string>{"1", "3"});
  REQUIRE(basis.sequences.size() == 8);
  CHECK(basis.sequences.front() == std::vector<int>{0, 0, 0});
  CHECK(basis.sequences[1] == std::vector<int>{0, 0, 1});
  CHECK(basis.sequences[2] == std::vector<int>{0, 1, 0});
  CHECK(basis.sequences.back() == std::vector<int>{1, 1, 1});

  CHECK(tree_basis(cert, 3).sequences.size() == 16);
  CHECK_THROWS_AS(tree_basis(cert, 1), gybe::Error);
  CHECK_THROWS_AS(tree_basis(cert, 64), gybe::Error);
}

TEST_CASE("jk6 sector matrices are the published HDH blocks") {
  const auto cat = builtin_category("jk6");
  const auto cert = jk6_cert(cat);
  CHECK(sector_matrix(cat, cert, "1", "1") == hdh(2, 4));
  CHECK(sector_matrix(cat, cert, "3", "1") == hdh(5, 4));
  CHECK(sector_matrix(cat, cert, "1", "3") == hdh(5, 4));
  CHECK(sector_matrix(cat, cert, "3", "3") == sector_matrix(cat, cert, "1", "1"));
  CHECK_THROWS_AS(sector_matrix(cat, cert, "0", "1"), gybe::Error);
}

TEST_CASE("jk6 assembly reproduces the published matrices exactly") {
  const auto cat = builtin_category("jk6");
  const auto cert = jk6_cert(cat);
  const auto assembled = assemble_R(cat, cert);

  // Sector order is lexicographic in (i, j) over S = (1, 3).
  REQUIRE(assembled.sector_order.size() == 4);
  CHECK(assembled.sector_order[0] == std::make_pair(std::string("1"), std::string("1")));
  CHECK(assembled.sector_order[1] == std::make_pair(std::string("1"), std::string("3")));

  CHECK(assembled.sector_blocks[0] == hdh(2, 4));
  CHECK(assembled.sector_blocks[1] == hdh(5, 4));
  CHECK(assembled.sector_blocks[2] == hdh(5, 4));
  CHECK(assembled.sector_blocks[3] == hdh(2, 4));

  CHECK(assembled.b == direct_sum({hdh(2, 4), hdh(5, 4), hdh(5, 4), hdh(2, 4)}));
  CHECK(assembled.p == paper_p());
  CHECK(assembled.r == gybe::reference_jk6_r_matrix());
  CHECK(assembled.r.is_unitary());
}

TEST_CASE("ising assembly walks the monomial path to the published matrix") {
  const auto cat = builtin_category("ising");
  const auto cert = ising_cert(cat);
  const auto assembled = assemble_R(cat, cert);
  CHECK(assembled.r == gybe::reference_ising_r_matrix());
  CHECK(assembled.p == paper_p());

  // Sector blocks: diag(1,−1), σx, σx, diag(−1,1).
  ExactMatrix diag_pm(2, 2), diag_mp(2, 2), sx(2, 2);
  diag_pm.set(0, 0, CycloScalar(1, 1));
  diag_pm.set(1, 1, CycloScalar(-1, 1));
  diag_mp.set(0, 0, CycloScalar(-1, 1));
  diag_mp.set(1, 1, CycloScalar(1, 1));
  sx.set(0, 1, CycloScalar(1, 1));
  sx.set(1, 0, CycloScalar(1, 1));
  CHECK(assembled.sector_blocks[0] == diag_pm);
  CHECK(assembled.sector_blocks[1] == sx);
  CHECK(assembled.sector_blocks[2] == sx);
  CHECK(assembled.sector_blocks[3] == diag_mp);
}

TEST_CASE("trivial braidings assemble to the identity") {
  auto cat = builtin_category("jk6");
  for (auto& [key, value] : cat.r_symbols) value = CycloScalar(1, 1);
  const auto assembled = assemble_R(cat, jk6_cert(cat));
  CHECK(assembled.r == ExactMatrix::identity(8));
}

TEST_CASE("assembled R preserves the (i0, i2) sectors") {
  const auto cat = builtin_category("jk6");
  const auto assembled = assemble_R(cat, jk6_cert(cat));
  // Lexicographic tuple t = 4·i0 + 2·i1 + i2: entries may only connect
  // tuples sharing (i0, i2).
  for (int row = 0; row < 8; ++row)
    for (int col = 0; col < 8; ++col) {
      if (assembled.r.at(row, col).is_zero()) continue;
      CHECK(row / 4 == col / 4);
      CHECK(row % 2 == col % 2);
    }
}

TEST_CASE("missing category data is reported by symbol name") {
  auto cat = builtin_category("jk6");
  const auto cert = jk6_cert(cat);
  auto without_f = cat;
  without_f.f_matrices.clear();
  CHECK_THROWS_WITH(sector_matrix(without_f, cert, "1", "1"),
                    Catch::Matchers::ContainsSubstring("F^{122}_1"));
  auto without_r = cat;
  without_r.r_symbols.clear();
  CHECK_THROWS_WITH(sector_matrix(without_r, cert, "1", "1"),
                    Catch::Matchers::ContainsSubstring("R^{2,2}_0"));
}

TEST_CASE("braid representation generators act on d^(n+1) dimensions") {
  const auto cat = builtin_category("jk6");
  const auto assembled = assemble_R(cat, jk6_cert(cat));

  const auto rep2 = braid_rep(assembled.r, 2, 2);
  REQUIRE(rep2.generators.size() == 1);
  CHECK(rep2.generators[0] == assembled.r);

  const auto rep4 = braid_rep(assembled.r, 2, 4);
  REQUIRE(rep4.generators.size() == 3);
  CHECK(rep4.generators[0].rows() == 32);
  CHECK(rep4.generators[0] * rep4.generators[2] ==
        rep4.generators[2] * rep4.generators[0]);

  CHECK_THROWS_AS(braid_rep(assembled.r, 2, 1), gybe::Error);
  CHECK_THROWS_AS(braid_rep(assembled.r, 2, 64), gybe::Error);
  CHECK_THROWS_AS(braid_rep(ExactMatrix::identity(4), 2, 3), gybe::Error);
}

TEST_CASE("ising braid rep satisfies the braid relation") {
  const auto cat = builtin_category("ising");
  const auto assembled = assemble_R(cat, ising_cert(cat));
  const auto rep = braid_rep(assembled.r, 2, 3);
  // Oracle: direct multiplication on both sides.
  const auto& g = rep.generators;
  REQUIRE(g.size() == 2);
  CHECK(g[0] * g[1] * g[0] == g[1] * g[0] * g[1]);
  CHECK(gybe::check_braid_relations(rep).ok);
}

TEST_CASE("structural far commutativity for n up to 4") {
  for (const char* name : {"jk6", "ising"}) {
    const auto cat = builtin_category(name);
    const auto cert = name == std::string("jk6") ? jk6_cert(cat) : ising_cert(cat);
    const auto assembled = assemble_R(cat, cert);
    const auto rep = braid_rep(assembled.r, 2, 4);
    for (std::size_t k = 0; k < rep.generators.size(); ++k)
      for (std::size_t l = k + 2; l < rep.generators.size(); ++l)
        CHECK(rep.generators[k] * rep.generators[l] ==
              rep.generators[l] * rep.generators[k]);
  }
}

TEST_CASE("jk6 R-matrix powers: annihilation and R^6 = I") {
  const auto cat = builtin_category("jk6");
  const auto assembled = assemble_R(cat, jk6_cert(cat));
  CHECK(gybe::annihilation_check(
      assembled.r,
      {root_of_unity(2, 6), root_of_unity(4, 6), root_of_unity(5, 6)}));
  CHECK(assembled.r.pow(6) == ExactMatrix::identity(8));
  CHECK_FALSE(assembled.r.pow(3) == ExactMatrix::identity(8));
}

TEST_CASE("sector matrices of the built-ins are unitary") {
  const auto jk6 = builtin_category("jk6");
  const auto cert = jk6_cert(jk6);
  for (const char* i : {"1", "3"})
    for (const char* j : {"1", "3"})
      CHECK(sector_matrix(jk6, cert, i, j).is_unitary());
}
