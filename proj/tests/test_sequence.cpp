#include <doctest.h>

#include <random>
#include <stdexcept>

#include "coseq/sequence.hpp"
#include "test_support.hpp"

using namespace coseq;

namespace {

bool squarefree(const FactoredModulus& mod) { return mod.value == mod.radical; }

}  // namespace

TEST_CASE("make_params: both anchorings") {
  const FactoredModulus twelve = factor(12);

  const SequenceParams minimal = make_params(twelve, PeriodChoice::minimal);
  CHECK(minimal.period == 2);
  CHECK(minimal.step == 6);
  CHECK((minimal.base == std::vector<int64_t>{1, 5}));

  const SequenceParams full = make_params(twelve, PeriodChoice::full);
  CHECK(full.period == 4);
  CHECK(full.step == 12);
  CHECK((full.base == std::vector<int64_t>{1, 5, 7, 11}));

  // base window: strictly increasing totatives of the step, ending at step-1
  for (const SequenceParams* p : {&minimal, &full}) {
    CHECK(p->base.front() == 1);
    CHECK(p->base.back() == p->step - 1);
    for (size_t i = 0; i + 1 < p->base.size(); ++i)
      CHECK(p->base[i] < p->base[i + 1]);
    for (int64_t b : p->base) CHECK(testsupport::coprime(b, twelve.value));
  }
}

TEST_CASE("eval_closed: examples") {
  const SequenceParams ten = make_params(factor(10), PeriodChoice::minimal);
  CHECK(eval_closed(ten, 1) == 11);
  CHECK(eval_closed(ten, 0) == 9);
  // positive coprime run after 11: 13, 17, 19, 21, 23, 27
  CHECK(eval_closed(ten, 7) == 27);
  CHECK(eval_closed(ten, 7) == testsupport::rank_value(10, 7));
  CHECK(eval_closed(ten, -4) == -1);  // P(0) - R = 9 - 10
  CHECK(eval_closed(ten, -4) == testsupport::rank_value(10, -4));
}

TEST_CASE("eval_recurrence: examples and agreement") {
  CHECK(eval_recurrence(make_params(factor(6), PeriodChoice::minimal), 3) == 13);
  CHECK(eval_recurrence(make_params(factor(2), PeriodChoice::minimal), 5) == 11);
  CHECK(eval_recurrence(make_params(factor(12), PeriodChoice::full), 1) == 13);

  const SequenceParams p = make_params(factor(30), PeriodChoice::minimal);
  for (int64_t n = -40; n <= 40; ++n)
    CHECK(eval_recurrence(p, n) == eval_closed(p, n));
}

TEST_CASE("eval_recurrence: iteration ceiling") {
  const SequenceParams two = make_params(factor(2), PeriodChoice::minimal);
  CHECK_THROWS_AS(eval_recurrence(two, 1'000'000, 999'999),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_recurrence(two, -1'000'000, 999'999),
                  std::invalid_argument);
  CHECK(eval_recurrence(two, 1'000'000, 1'000'000) == 2'000'001);
}

TEST_CASE("oracle: examples") {
  CHECK(oracle(10, -3) == 1);  // rank -Q+1 with Q = 4
  CHECK(oracle(10, 2) == 13);
  CHECK(oracle(6, -2) == -1);  // ..., -5, -1, 1, 5, 7 with 1 at rank -1
  CHECK(oracle(2, 5) == 11);
  CHECK_THROWS_AS(oracle(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(oracle(3, 100, 50), std::invalid_argument);  // budget
}

TEST_CASE("oracle_window matches the per-rank oracle") {
  for (int64_t a : {2, 6, 10, 12}) {
    const std::vector<Int> window = oracle_window(a, -15, 15);
    for (int64_t n = -15; n <= 15; ++n) {
      CHECK(window[static_cast<size_t>(n + 15)] == oracle(a, n));
      CHECK(window[static_cast<size_t>(n + 15)] ==
            testsupport::rank_value(a, n));
    }
  }
}

TEST_CASE("shift_between: examples") {
  CHECK(shift_between(factor(6), factor(12)) == 2);
  CHECK(shift_between(factor(6), factor(6)) == 0);
  CHECK(shift_between(factor(10), factor(20)) == 4);
  CHECK_THROWS_AS(shift_between(factor(6), factor(10)), std::invalid_argument);

  // shifted sequences coincide: P_12(n) == P_6(n + 2) over [-20, 20]
  const SequenceParams six = make_params(factor(6), PeriodChoice::full);
  const SequenceParams twelve = make_params(factor(12), PeriodChoice::full);
  for (int64_t n = -20; n <= 20; ++n) {
    CHECK(eval_closed(twelve, n) == eval_closed(six, n + 2));
    CHECK(eval_closed(twelve, n) == testsupport::rank_value(12, n));
  }
}

TEST_CASE("eval_canonical: same value through either machinery") {
  for (int64_t a : {2, 4, 6, 10, 12, 30, 1024}) {
    const FactoredModulus mod = factor(a);
    const SequenceParams full = make_params(mod, PeriodChoice::full);
    for (int64_t n = -30; n <= 30; ++n) {
      const Int direct = eval_closed(full, n);
      CHECK(eval_canonical(mod, n, PeriodChoice::minimal) == direct);
      CHECK(eval_canonical(mod, n, PeriodChoice::full) == direct);
    }
  }
}

TEST_CASE("anchoring: squarefree moduli agree pointwise, others shift") {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<int64_t> pick_a(2, 2000);
  std::uniform_int_distribution<int64_t> pick_n(-500, 500);
  for (int round = 0; round < 60; ++round) {
    const FactoredModulus mod = factor(pick_a(rng));
    const SequenceParams minimal = make_params(mod, PeriodChoice::minimal);
    const SequenceParams full = make_params(mod, PeriodChoice::full);
    const int64_t shift = full_anchor_shift(mod);
    if (squarefree(mod)) CHECK(shift == 0);
    for (int i = 0; i < 20; ++i) {
      const int64_t n = pick_n(rng);
      CHECK(eval_closed(full, n) == eval_closed(minimal, n + shift));
      if (squarefree(mod))
        CHECK(eval_closed(full, n) == eval_closed(minimal, n));
    }
  }
}

TEST_CASE("properties: coprimality, monotonicity, telescoping, increments") {
  std::mt19937_64 rng(987654321);
  std::uniform_int_distribution<int64_t> pick_a(2, 2000);
  std::uniform_int_distribution<int64_t> pick_n(-2000, 2000);
  std::uniform_int_distribution<int64_t> pick_k(-20, 20);
  for (int round = 0; round < 50; ++round) {
    const FactoredModulus mod = factor(pick_a(rng));
    const SequenceParams p = make_params(mod, PeriodChoice::full);
    const int64_t q = mod.radical_totient;
    for (int i = 0; i < 25; ++i) {
      const int64_t n = pick_n(rng);
      const Int v = eval_closed(p, n);
      CHECK(gcd(abs(v), Int(mod.value)) == 1);
      CHECK(v < eval_closed(p, n + 1));
      const int64_t k = pick_k(rng);
      CHECK(v == Int(k) * mod.radical + eval_closed(p, n - k * q));
      CHECK(eval_closed(p, n + q) - v == mod.radical);
      CHECK(eval_closed(p, n + mod.totient) - v == mod.value);
      // homogeneous four-term recurrence
      CHECK(eval_closed(p, n + 1) - v - eval_closed(p, n + 1 - q) +
                eval_closed(p, n - q) ==
            0);
    }
  }
}

TEST_CASE("oracle equivalence on sampled windows") {
  for (int64_t a : {2, 3, 6, 10, 12, 30, 210}) {
    const SequenceParams p = make_params(factor(a), PeriodChoice::full);
    const std::vector<Int> scan = oracle_window(a, -60, 60);
    for (int64_t n = -60; n <= 60; ++n)
      CHECK(eval_closed(p, n) == scan[static_cast<size_t>(n + 60)]);
  }
}

TEST_CASE("large indices stay exact") {
  const SequenceParams p = make_params(factor(9699690), PeriodChoice::minimal);
  const int64_t n = 1'000'000'000'000;
  const Int v = eval_closed(p, n);
  CHECK(v > 0);
  CHECK(v - eval_closed(p, n - p.period) == p.step);
  CHECK(Int(10) * p.step + eval_closed(p, n - 10 * p.period) == v);
  CHECK(gcd(v, Int(9699690)) == 1);
}

TEST_CASE("verify_window: passing windows") {
  const WindowReport thirty = verify_window(factor(30), -50, 50);
  CHECK(thirty.all_pass());
  CHECK(thirty.checks.size() == 5);

  const WindowReport two = verify_window(factor(2), 0, 10);
  CHECK(two.all_pass());
  const SequenceParams p2 = make_params(factor(2), PeriodChoice::full);
  CHECK(eval_closed(p2, 0) == 1);
  CHECK(eval_closed(p2, 10) == 21);

  // value stream of 12 equals the one of 6 shifted by shift_between
  const WindowReport twelve = verify_window(factor(12), -10, 10);
  CHECK(twelve.all_pass());
}

TEST_CASE("verify_window: rejects bad windows") {
  CHECK_THROWS_AS(verify_window(factor(6), 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(verify_window(factor(6), 7, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_window(factor(6), 0, 20'000'000),
                  std::invalid_argument);
}
