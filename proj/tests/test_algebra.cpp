#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>

#include "qparl/algebra.hpp"
#include "qparl/errors.hpp"
#include "test_support.hpp"

using namespace qparl;
using qparl::testing::make_rng;
using qparl::testing::random_matrix;

namespace {

ComplexMatrix zeros(int dim) { return ComplexMatrix::Zero(dim, dim); }

}  // namespace

TEST_CASE("single-mode lowering operator maps e_1 to e_0") {
  const LadderSet set = build_ladder_set(1);
  ComplexMatrix expected = zeros(2);
  expected(0, 1) = 1.0;
  CHECK(max_abs_diff(set.a(1), expected) == 0.0);
  CHECK(max_abs_diff(set.adag(1), expected.adjoint()) == 0.0);
}

TEST_CASE("two-mode ladder operators match the explicit sign-string matrices") {
  const LadderSet set = build_ladder_set(2);

  // a_1 = a (x) I: basis pairs (e_{1,0} -> e_{0,0}), (e_{1,1} -> e_{0,1}).
  ComplexMatrix a1 = zeros(4);
  a1(0, 2) = 1.0;
  a1(1, 3) = 1.0;
  // a_2 = Z (x) a: the parity factor flips the sign on the mode-1 "no" block.
  ComplexMatrix a2 = zeros(4);
  a2(0, 1) = 1.0;
  a2(2, 3) = -1.0;

  CHECK(max_abs_diff(set.a(1), a1) == 0.0);
  CHECK(max_abs_diff(set.a(2), a2) == 0.0);
}

TEST_CASE("canonical anticommutation relations hold for one to five modes") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const LadderSet set = build_ladder_set(n);
    const ComplexMatrix id = ComplexMatrix::Identity(set.dim(), set.dim());
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        CAPTURE(j);
        CAPTURE(k);
        const ComplexMatrix mixed = anticommutator(set.a(j), set.adag(k));
        if (j == k) {
          CHECK(max_abs_diff(mixed, id) < 1e-12);
        } else {
          CHECK(mixed.cwiseAbs().maxCoeff() < 1e-12);
        }
        CHECK(anticommutator(set.a(j), set.a(k)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(anticommutator(set.adag(j), set.adag(k)).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("ladder operators are nilpotent") {
  const LadderSet set = build_ladder_set(3);
  for (int j = 1; j <= 3; ++j) {
    CHECK((set.a(j) * set.a(j)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("cross-mode anticommutators on the explicit two-mode matrices") {
  const LadderSet set = build_ladder_set(2);
  CHECK(anticommutator(set.a(1), set.adag(2)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(max_abs_diff(anticommutator(set.a(1), set.adag(1)), ComplexMatrix::Identity(4, 4)) ==
        0.0);
}

TEST_CASE("local ladder family acts on its own tensor slot only") {
  const LadderSet set = build_local_ladder_set(2);

  ComplexMatrix a1 = zeros(4);
  a1(0, 2) = 1.0;
  a1(1, 3) = 1.0;
  // a_2 = I (x) a: no parity factor, both blocks carry +1.
  ComplexMatrix a2 = zeros(4);
  a2(0, 1) = 1.0;
  a2(2, 3) = 1.0;
  CHECK(max_abs_diff(set.a(1), a1) == 0.0);
  CHECK(max_abs_diff(set.a(2), a2) == 0.0);
}

TEST_CASE("local ladder operators commute across modes and obey same-mode relations") {
  for (int n = 2; n <= 4; ++n) {
    const LadderSet set = build_local_ladder_set(n);
    const ComplexMatrix id = ComplexMatrix::Identity(set.dim(), set.dim());
    for (int j = 1; j <= n; ++j) {
      CHECK(max_abs_diff(anticommutator(set.a(j), set.adag(j)), id) < 1e-12);
      CHECK((set.a(j) * set.a(j)).cwiseAbs().maxCoeff() == 0.0);
      for (int k = 1; k <= n; ++k) {
        if (j == k) continue;
        CHECK(commutator(set.a(j), set.a(k)).cwiseAbs().maxCoeff() == 0.0);
        CHECK(commutator(set.a(j), set.adag(k)).cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }
}

TEST_CASE("the two families agree wherever no parity string applies") {
  const LadderSet jw = build_ladder_set(3);
  const LadderSet local = build_local_ladder_set(3);
  // Mode 1 carries no string; number operators are string-free in both.
  CHECK(max_abs_diff(jw.a(1), local.a(1)) == 0.0);
  for (int j = 1; j <= 3; ++j) {
    CHECK(max_abs_diff(ComplexMatrix(jw.adag(j) * jw.a(j)),
                       ComplexMatrix(local.adag(j) * local.a(j))) == 0.0);
  }
}

TEST_CASE("ladder construction is deterministic") {
  const LadderSet first = build_ladder_set(3);
  const LadderSet second = build_ladder_set(3);
  for (int j = 0; j < 3; ++j) {
    const auto& a = first.lowering[j];
    const auto& b = second.lowering[j];
    REQUIRE(a.size() == b.size());
    CHECK(std::memcmp(a.data(), b.data(), sizeof(Complex) * static_cast<size_t>(a.size())) == 0);
  }
}

TEST_CASE("mode count guard") {
  CHECK_THROWS_AS(build_ladder_set(0), ConfigError);
  CHECK_THROWS_AS(build_ladder_set(13), ConfigError);
  CHECK_THROWS_WITH_AS(build_ladder_set(13),
                       doctest::Contains("unsupported mode count"), ConfigError);
}

TEST_CASE("kron of identities is the identity") {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs_diff(kron(id2, id2), ComplexMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("kron of the yes projector with the identity") {
  ComplexMatrix yes = zeros(2);
  yes(0, 0) = 1.0;
  ComplexMatrix expected = zeros(4);
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  CHECK(max_abs_diff(kron(yes, ComplexMatrix::Identity(2, 2)), expected) == 0.0);
}

TEST_CASE("kron trace is multiplicative") {
  auto rng = make_rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(rng, 2);
    const ComplexMatrix b = random_matrix(rng, 2);
    const Complex lhs = kron(a, b).trace();
    const Complex rhs = a.trace() * b.trace();
    CHECK(std::abs(lhs - rhs) < 1e-14);
  }
}

TEST_CASE("adjoint distributes over kron") {
  auto rng = make_rng(102);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(rng, 3);
    const ComplexMatrix b = random_matrix(rng, 2);
    CHECK(max_abs_diff(kron(a, b).adjoint(), kron(a.adjoint(), b.adjoint())) == 0.0);
  }
}

TEST_CASE("double adjoint is the identity map") {
  auto rng = make_rng(103);
  const ComplexMatrix a = random_matrix(rng, 4);
  CHECK(max_abs_diff(ComplexMatrix(a.adjoint().adjoint()), a) == 0.0);
}

TEST_CASE("commutator basics") {
  auto rng = make_rng(104);
  const ComplexMatrix a = random_matrix(rng, 3);
  CHECK(commutator(a, a).cwiseAbs().maxCoeff() == 0.0);

  ComplexMatrix yes = zeros(2), no = zeros(2);
  yes(0, 0) = 1.0;
  no(1, 1) = 1.0;
  CHECK(commutator(yes, no).cwiseAbs().maxCoeff() == 0.0);

  const LadderSet set = build_ladder_set(1);
  CHECK(max_abs_diff(anticommutator(set.a(1), set.adag(1)), ComplexMatrix::Identity(2, 2)) ==
        0.0);
}

TEST_CASE("commutator rejects mismatched dimensions") {
  CHECK_THROWS_AS(commutator(zeros(2), zeros(3)), std::invalid_argument);
  CHECK_THROWS_AS(anticommutator(zeros(4), zeros(2)), std::invalid_argument);
}
