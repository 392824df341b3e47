#include <map>
#include "doctest.h"
#include "modpovm/errors.hpp"
#include "modpovm/modgroup.hpp"
#include "oracles.hpp"

using namespace modpovm;

namespace {

const PermPair& find_by_signature(const std::vector<PermPair>& ps, size_t nu2, size_t nu3,
                                  std::vector<size_t> widths) {
  for (const auto& p : ps) {
    auto s = signature(p);
    if (s.nu2 == nu2 && s.nu3 == nu3 && s.cusp_widths == widths) return p;
  }
  throw std::runtime_error("no class with requested signature");
}

}  // namespace

TEST_CASE("cycle notation round trip") {
  auto p = Permutation::from_cycles(5, "(1,2)(3,5,4)");
  CHECK(p[0] == 1);
  CHECK(p[2] == 4);
  CHECK(p.to_cycle_string() == "(1,2)(3,5,4)");
  CHECK(Permutation(4).to_cycle_string() == "()");
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1,4)"), InputError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1,2)(2,3)"), InputError);
}

TEST_CASE("perm pair validation") {
  CHECK_NOTHROW(parse_perm_pair(3, "(2,3)", "(1,2,3)"));
  CHECK_THROWS_AS(parse_perm_pair(3, "(1,2,3)", "(1,2,3)"), InputError);
  CHECK_THROWS_AS(parse_perm_pair(4, "(1,2)", "()"), InputError);
}

TEST_CASE("trivial index one") {
  auto all = enumerate_index(1);
  REQUIRE(all.size() == 1);
  auto s = signature(all[0]);
  CHECK(s.nu2 == 1);
  CHECK(s.nu3 == 1);
  CHECK(s.cusp_widths == std::vector<size_t>{1});
  CHECK(s.genus == 0);
  CHECK(s.congruence);
}

TEST_CASE("class counts agree with exhaustive conjugacy oracle") {
  for (size_t mu : {1u, 2u, 3u, 4u, 5u, 6u, 7u}) {
    CAPTURE(mu);
    CHECK(enumerate_index(mu).size() == oracle::brute_force_class_count(mu));
  }
}

TEST_CASE("known class counts up to index 10") {
  const size_t expected[] = {1, 1, 2, 2, 1, 8, 6, 7, 14, 27};
  for (size_t mu = 1; mu <= 10; ++mu) CHECK(enumerate_index(mu).size() == expected[mu - 1]);
}

TEST_CASE("enumeration output is canonical, sorted and conjugacy free") {
  for (size_t mu = 1; mu <= 7; ++mu) {
    auto cls = enumerate_index(mu);
    for (size_t i = 0; i < cls.size(); ++i) {
      CHECK(canonical_form(cls[i]) == cls[i]);
      if (i) CHECK(cls[i - 1] < cls[i]);
    }
  }
}

TEST_CASE("index 3 contains the S3 pair") {
  auto cls = enumerate_index(3);
  auto target = parse_perm_pair(3, "(2,3)", "(1,2,3)");
  CHECK(std::find(cls.begin(), cls.end(), canonical_form(target)) != cls.end());
  CHECK(canonical_form(target) == target);
}

TEST_CASE("index 5 has one class, the A5 action") {
  auto cls = enumerate_index(5);
  REQUIRE(cls.size() == 1);
  auto s = signature(cls[0]);
  CHECK(s.nu2 == 1);
  CHECK(s.nu3 == 2);
  CHECK(s.cusp_widths == std::vector<size_t>{5});
  CHECK(s.congruence);
  CHECK(group_order(cls[0]) == 60);
}

TEST_CASE("gamma0 signatures") {
  auto g2 = signature(gamma0(2));
  CHECK(g2.index == 3);
  CHECK(g2.nu2 == 1);
  CHECK(g2.nu3 == 0);
  CHECK(g2.cusp_widths == std::vector<size_t>{1, 2});
  CHECK(g2.genus == 0);
  CHECK(g2.congruence);
  CHECK(group_order(gamma0(2)) == 6);

  auto g3 = signature(gamma0(3));
  CHECK(g3.index == 4);
  CHECK(g3.nu2 == 0);
  CHECK(g3.nu3 == 1);
  CHECK(g3.cusp_widths.size() == 2);
  CHECK(group_order(gamma0(3)) == 12);
  CHECK(gamma0(1).index() == 1);
}

TEST_CASE("gamma0 and gamma indices, levels and congruence up to N=10") {
  for (unsigned N = 1; N <= 10; ++N) {
    CAPTURE(N);
    auto a = gamma0(N);
    auto sa = signature(a);
    CHECK(a.index() == psi(N));
    size_t sum = 0;
    for (size_t w : sa.cusp_widths) sum += w;
    CHECK(sum == psi(N));
    CHECK(sa.congruence);
    auto b = gamma_principal(N);
    auto sb = signature(b);
    CHECK(b.index() == gamma_index_psl(N));
    CHECK(sb.congruence);
    CHECK(sb.level == N);
  }
  CHECK(gamma_principal(2).index() == 6);
  CHECK(gamma_principal(3).index() == 12);
  CHECK(group_order(gamma_principal(3)) == 12);
}

TEST_CASE("Hsu relations agree with the factorization oracle") {
  size_t total = 0, nc = 0;
  for (size_t mu = 1; mu <= 10; ++mu)
    for (const auto& p : enumerate_index(mu)) {
      CAPTURE(p.to_string());
      bool c = is_congruence(p);
      CHECK(c == oracle::factors_through_level(p));
      ++total;
      nc += !c;
    }
  CHECK(total == 69);
  CHECK(nc > 0);
}

TEST_CASE("genus is a non-negative integer on every class up to index 9") {
  for (size_t mu = 1; mu <= 9; ++mu)
    for (const auto& p : enumerate_index(mu)) CHECK_NOTHROW(signature(p));
}

TEST_CASE("index 7 contains NC(0,6,1,1,[1 6])") {
  auto cls = enumerate_index(7);
  const auto& p = find_by_signature(cls, 1, 1, {1, 6});
  auto s = signature(p);
  CHECK_FALSE(s.congruence);
  CHECK(s.genus == 0);
  CHECK(s.level == 6);
  CHECK(signature_label(s) == "NC(0,6,1,1,[1^1 6^1])");
}

TEST_CASE("permutation matrices") {
  auto p = parse_perm_pair(3, "(2,3)", "(1,2,3)");
  auto [pe, pv] = perm_matrices(p);
  CHECK(pe(0, 0) == CycloNum(1));
  CHECK(pe(1, 2) == CycloNum(1));
  CHECK(pe(2, 1) == CycloNum(1));
  CHECK(pv(0, 1) == CycloNum(1));
  CHECK(pv(2, 0) == CycloNum(1));
  CHECK(matmul(pe, pe) == CycloMatrix::identity(3));
  CHECK(matmul(pv, matmul(pv, pv)) == CycloMatrix::identity(3));
  CHECK(perm_matrix(Permutation(4)) == CycloMatrix::identity(4));
  for (const auto& q : enumerate_index(6)) {
    auto [a, b] = perm_matrices(q);
    CHECK(matmul(a, a) == CycloMatrix::identity(6));
    CHECK(matmul(b, matmul(b, b)) == CycloMatrix::identity(6));
  }
}

TEST_CASE("group order by stabilizer chain") {
  std::vector<Permutation> s7 = {Permutation::from_cycles(7, "(1,2)"),
                                 Permutation::from_cycles(7, "(1,2,3,4,5,6,7)")};
  CHECK(group_order(s7) == 5040);
  std::vector<Permutation> a5 = {Permutation::from_cycles(5, "(1,2,3)"),
                                 Permutation::from_cycles(5, "(1,2,3,4,5)")};
  CHECK(group_order(a5) == 60);
  auto d9 = parse_perm_pair(9, "(3,4)(5,7)(8,9)", "(1,2,3)(4,5,6)(7,8,9)");
  CHECK(group_order(d9) == 432);
  CHECK_THROWS_AS(group_order(s7, 100), ResourceError);
}

TEST_CASE("conventional subgroup names") {
  std::map<std::string, size_t> seen;
  for (size_t mu = 1; mu <= 7; ++mu)
    for (const auto& p : enumerate_index(mu)) {
      auto n = subgroup_name(p);
      if (n.empty()) continue;
      ++seen[n];
      CHECK(is_congruence(p));
    }
  for (const char* n : {"Γ0(2)", "Γ0(3)", "4A⁰", "5A⁰", "Γ'", "Γ(2)", "3C⁰", "Γ0(4)", "Γ0(5)"}) CHECK(seen[n] == 1);
  CHECK(seen["7A⁰"] == 2);
  auto gp = signature(gamma_prime());
  CHECK(gp.genus == 1);
  CHECK(gp.cusp_widths == std::vector<size_t>{6});
  CHECK(subgroup_name(gamma0(2)) == "Γ0(2)");
  CHECK(subgroup_name(gamma_principal(2)) == "Γ(2)");
}
