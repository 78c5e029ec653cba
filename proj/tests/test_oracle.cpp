#include "mukai/hodge.hpp"
#include "mukai/oracle.hpp"
#include "mukai/rng.hpp"

#include <doctest.h>

#include <sstream>

using namespace mukai;

namespace {

GradedC random_graded_c(Rng& rng, long long bound) {
  GradedC x(rng.crat(bound), Vec22c(), rng.crat(bound));
  for (int i = 0; i < kH2Dim; ++i) x.c(i) = rng.crat(bound);
  return x;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("expand_pairing reproduces the pairing examples") {
  GradedI one(Int(1), Vec22i::Zero(), Int(0));
  GradedI top(Int(0), Vec22i::Zero(), Int(1));
  CHECK(expand_pairing(one, top) == Int(-1));
  CHECK(expand_pairing(one, GradedI()) == Int(0));
  GradedI hyp(Int(1), Vec22i(h2_unit<Int>(e_idx(0)) + h2_unit<Int>(f_idx(0))), Int(1));
  CHECK(expand_pairing(hyp, hyp) == Int(0));
}

TEST_CASE("expand_pairing agrees with mukai_pair" * doctest::timeout(300)) {
  Rng rng(501);
  for (int t = 0; t < 2000; ++t) {
    GradedC x = random_graded_c(rng, 10);
    GradedC y = random_graded_c(rng, 10);
    CHECK(expand_pairing(x, y) == mukai_pair(x, y));
  }
}

TEST_CASE("box oracle recovers the Example ii generators") {
  Vec22q w = Vec22q::Zero();
  w(e_idx(0)) = Rat(1);
  w(f_idx(0)) = Rat(1);
  GcyClass phi = GcyClass::validate(exp_i_omega(w));
  std::vector<int> support = {0, 1, 2, 23};
  auto found = box_pairing_kernel(phi, 2, support);

  bool has_hyperbolic = false, has_perp = false;
  for (const auto& v : found) {
    if (v(0) == Int(1) && v(23) == Int(1) && v(1).is_zero() && v(2).is_zero())
      has_hyperbolic = true;
    if (v(0).is_zero() && v(23).is_zero() && v(1) == Int(1) && v(2) == Int(-1))
      has_perp = true;
  }
  CHECK(has_hyperbolic);
  CHECK(has_perp);

  // zero support on a trivial-pic direction finds only the zero vector
  GcyClass generic = random_gcy(99, GcyKind::Symplectic, 9);
  std::vector<int> narrow = {0};
  auto only_zero = box_pairing_kernel(generic, 2, narrow);
  CHECK(only_zero.size() == 1);
  CHECK(only_zero.front() == Vec24i(Vec24i::Zero()));
}

TEST_CASE("box oracle preconditions and cancellation") {
  GcyClass phi = random_gcy(1, GcyKind::Complex, 4);
  std::vector<int> too_many = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(box_pairing_kernel(phi, 2, too_many), Error);
  std::vector<int> sup = {0, 1};
  CHECK_THROWS_AS(box_pairing_kernel(phi, 9, sup), Error);

  // the progress hook can cancel the walk early
  std::vector<int> wide = {0, 1, 2, 3, 4, 5, 6, 7};
  std::uint64_t calls = 0;
  box_pairing_kernel(phi, 2, wide, [&](std::uint64_t, std::uint64_t) {
    ++calls;
    return false;
  });
  CHECK(calls == 1);
}

TEST_CASE("snf minor characterization") {
  IMat d23(2, 2);
  d23 << Int(2), Int(0), Int(0), Int(3);
  CHECK(snf_small_check(d23));
  CHECK(snf_small_check(IMat(IMat::Zero(3, 3))));
  Rng rng(503);
  for (int t = 0; t < 200; ++t) {
    IMat m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Int(rng.range(-9, 9));
    CHECK(snf_small_check(m));
  }
  CHECK_THROWS_AS(snf_small_check(IMat(IMat::Zero(5, 5))), Error);
}

TEST_CASE("selftest passes and reports per gate" * doctest::timeout(600)) {
  std::ostringstream lines;
  SelftestOptions opt;
  opt.box = 1;  // keep the box sweep small inside the unit suite
  opt.out = &lines;
  CHECK(selftest(opt));
  CHECK(lines.str().find("gate pairing-agreement: ok") != std::string::npos);
  CHECK(lines.str().find("gate box-vs-pic: ok") != std::string::npos);
  CHECK(lines.str().find("FAIL") == std::string::npos);
}

TEST_SUITE_END();
