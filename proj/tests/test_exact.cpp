#include <random>

#include "doctest.h"
#include "nclift/cyclotomic.hpp"
#include "nclift/intmat.hpp"
#include "nclift/phase.hpp"
#include "nclift/rat.hpp"

using namespace nclift;

TEST_CASE("rational normal form") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(3, 4).str() == "3/4");
  CHECK(Rat(-5).str() == "-5");
  CHECK(Rat::parse("7/3") == Rat(7, 3));
  CHECK(Rat::parse("-4") == Rat(-4));
  CHECK_THROWS_AS(Rat(1, 0), input_error);
}

TEST_CASE("phase addition wraps modulo 1") {
  CHECK(Phase(1, 2) + Phase(1, 2) == Phase(0, 1));
  CHECK(Phase(1, 3) + Phase(1, 2) == Phase(5, 6));
  CHECK(Phase(3, 4) + Phase(3, 4) == Phase(1, 2));
  CHECK(Phase(-1, 4) == Phase(3, 4));
}

TEST_CASE("phase group laws on small denominators") {
  std::vector<Phase> all;
  for (Int q = 1; q <= 12; ++q)
    for (Int p = 0; p < q; ++p) all.push_back(Phase(p, q));
  for (const auto& a : all) {
    CHECK(a + Phase() == a);
    CHECK(a + (-a) == Phase());
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int k = 0; k < 2000; ++k) {
    const Phase &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("cyclotomic arithmetic basics") {
  CHECK(CycScalar::root_power(4, 2) == CycScalar(Rat(-1), 4));
  CHECK(CycScalar::root_power(2, 1) == CycScalar(Rat(-1), 2));
  CHECK(CycScalar::root_power(6, 3) == CycScalar(Rat(-1), 6));
  // zeta_3 satisfies 1 + z + z^2 = 0.
  CycScalar z3 = CycScalar::root_power(3, 1);
  CHECK((CycScalar::one(3) + z3 + z3 * z3).is_zero());
  CHECK(z3.conj() * z3 == CycScalar::one(3));
  CycScalar a = CycScalar::one(5) + CycScalar::root_power(5, 1);
  CHECK(a * a.inverse() == CycScalar::one(5));
  // cross-conductor arithmetic lands in the compositum
  CHECK(CycScalar::root_power(2, 1) * CycScalar::root_power(3, 1) ==
        CycScalar::root_power(6, 5));
}

TEST_CASE("phase embedding is multiplicative-to-additive") {
  for (Int n : {4, 6, 8, 12, 24}) {
    for (Int p = 0; p < n; ++p)
      for (Int q = 0; q < n; ++q) {
        Phase a(p, n), b(q, n);
        CHECK(CycScalar::from_phase(a, 24) * CycScalar::from_phase(b, 24) ==
              CycScalar::from_phase(a + b, 24));
      }
  }
  CHECK_THROWS_AS(CycScalar::from_phase(Phase(1, 5), 24), input_error);
}

TEST_CASE("snf on the known examples") {
  SUBCASE("identity") {
    SnfResult r = snf(IntMatrix::identity(2));
    CHECK(r.diag() == IntVec{1, 1});
  }
  SUBCASE("diag(2,3) becomes diag(1,6)") {
    IntMatrix m{{2, 0}, {0, 3}};
    SnfResult r = snf(m);
    CHECK(r.diag() == IntVec{1, 6});
    CHECK(r.u * m * r.v == r.d);
    CHECK(std::abs(r.u.det()) == 1);
    CHECK(std::abs(r.v.det()) == 1);
  }
  SUBCASE("2I stays diag(2,2)") {
    IntMatrix m{{2, 0}, {0, 2}};
    CHECK(snf(m).diag() == IntVec{2, 2});
  }
}

TEST_CASE("snf randomized invariants") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<Int> entry(-9, 9);
  std::uniform_int_distribution<size_t> dim(1, 5);
  for (int k = 0; k < 200; ++k) {
    size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    SnfResult f = snf(m);
    CHECK(f.u * m * f.v == f.d);
    CHECK(std::abs(f.u.det()) == 1);
    CHECK(std::abs(f.v.det()) == 1);
    IntVec d = f.diag();
    for (size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (i + 1 < d.size() && d[i] != 0 && d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
      if (d[i] == 0 && i + 1 < d.size()) CHECK(d[i + 1] == 0);
    }
    for (size_t i = 0; i < f.d.rows(); ++i)
      for (size_t j = 0; j < f.d.cols(); ++j)
        if (i != j) CHECK(f.d.at(i, j) == 0);
  }
}

TEST_CASE("solve_mod examples") {
  IntMatrix a{{2}};
  CHECK_FALSE(solve_mod(a, {1}, 4).solvable);
  CHECK_FALSE(solve_mod(a, {1}, 4).certificate.empty());
  ModSolve s = solve_mod(a, {2}, 4);
  REQUIRE(s.solvable);
  CHECK((2 * s.solution[0]) % 4 == 2);
  IntMatrix id = IntMatrix::identity(3);
  ModSolve t = solve_mod(id, {1, 5, 2}, 3);
  REQUIRE(t.solvable);
  CHECK(t.solution == IntVec{1, 2, 2});
}

TEST_CASE("solve_int examples") {
  CHECK_FALSE(solve_int(IntMatrix{{2}}, {3}).solvable);
  IntSolve s = solve_int(IntMatrix{{2}}, {4});
  REQUIRE(s.solvable);
  CHECK(s.particular == IntVec{2});
  CHECK(s.kernel.empty());
  IntSolve k = solve_int(IntMatrix{{1, 1}}, {0});
  REQUIRE(k.solvable);
  REQUIRE(k.kernel.size() == 1);
  CHECK(k.kernel[0][0] == -k.kernel[0][1]);
  CHECK(k.kernel[0][0] != 0);
}

TEST_CASE("mod solver agrees with exhaustive enumeration on 2x2 systems") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<Int> entry(-3, 3);
  for (int it = 0; it < 150; ++it) {
    IntMatrix a(2, 2);
    IntVec b(2);
    for (size_t i = 0; i < 2; ++i) {
      b[i] = entry(rng);
      for (size_t j = 0; j < 2; ++j) a.at(i, j) = entry(rng);
    }
    Int n = 2 + static_cast<Int>(it % 5);
    ModSolve s = solve_mod(a, b, n);
    bool exists = false;
    for (Int x = 0; x < n && !exists; ++x)
      for (Int y = 0; y < n && !exists; ++y) {
        Int r0 = ((a.at(0, 0) * x + a.at(0, 1) * y - b[0]) % n + n) % n;
        Int r1 = ((a.at(1, 0) * x + a.at(1, 1) * y - b[1]) % n + n) % n;
        exists = (r0 == 0 && r1 == 0);
      }
    CHECK(s.solvable == exists);
    if (s.solvable) {
      IntVec ax = a * s.solution;
      for (size_t i = 0; i < 2; ++i) CHECK(((ax[i] - b[i]) % n + n) % n == 0);
    }
  }
}

TEST_CASE("quotient structure of simple lattices") {
  QuotientStructure q =
      quotient_structure(IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 3}});
  CHECK(q.factors == IntVec{6});
  QuotientStructure f = quotient_structure(IntMatrix::identity(2), IntMatrix{{1}, {1}});
  CHECK(f.factors == IntVec{0});
  QuotientStructure z2 = quotient_structure(IntMatrix::identity(2), IntMatrix(2, 0));
  CHECK(z2.factors == IntVec{0, 0});
}
