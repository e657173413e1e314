#include "freqfn/corpus.hpp"
#include "freqfn/frequency.hpp"
#include "freqfn/oracle.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace freqfn;
using freqfn::testing::make;

TEST_CASE("generate examples") {
  CHECK(make(CorpusId::F1).is_zero());
  CHECK(serialize(make(CorpusId::F2)) == "-1 1 1\n");
  CHECK(serialize(make(CorpusId::F7)) == "-1 0 1\n1 2 100\n");
  CHECK(serialize(make(CorpusId::F4, {{"k", 3}})) == "-1 1 1/3\n");
  CHECK(serialize(make(CorpusId::F3, {{"K", 3}})) == "2 3 1\n4 5 1/4\n8 9 1/9\n");
  CHECK(serialize(make(CorpusId::F3, {{"K", 4}, {"n_min", 3}})) == "8 9 1/9\n16 17 1/16\n");
  CHECK(serialize(make(CorpusId::F5, {{"K", 2}})) == "-1 0 1\n3/8 1/2 1\n3/4 1 1\n");
  CHECK(serialize(make(CorpusId::F8, {{"K", 2}})) == "7/32 1/4 1\n3/8 1/2 1\n");
}

TEST_CASE("f9 nodes and pieces") {
  const std::vector<Rat> a = f9_nodes(5);
  REQUIRE(a.size() == 5);
  CHECK(a[0] == 0);
  CHECK(a[1] == 1);
  CHECK(a[2] == Rat(3, 2));
  CHECK(a[3] == Rat(3, 2) + Rat(1, 8));
  CHECK(a[4] == Rat(13, 8) + Rat(1, 64));

  const StepFn f9 = make(CorpusId::F9, {{"K", 4}});
  CHECK(serialize(f9) ==
        "1/2 1 1\n5/4 3/2 1\n25/16 13/8 1\n209/128 105/64 1\n3361/2048 2705/1024 1\n");
}

TEST_CASE("thm4 bumps are dyadic and ordered") {
  const std::vector<Thm4Bump> bumps = thm4_bumps(Rat(1, 2), 40);
  REQUIRE(bumps.size() == 31);
  CHECK(bumps.front().m == 10);
  for (std::size_t i = 0; i < bumps.size(); ++i) {
    CHECK(Rat(bumps[i].left * pow2(40)).get_den() == 1);
    CHECK(Rat(bumps[i].value * pow2(40)).get_den() == 1);
    CHECK(bumps[i].value > 0);
    if (i > 0) CHECK(bumps[i].left >= bumps[i - 1].left + 1);
  }
  CHECK(to_double(bumps.front().left) == doctest::Approx(10 * std::pow(std::log(10.0), 1.5)));
  CHECK(make(CorpusId::Thm4, {{"M_max", 40}}).pieces().size() == 31);

  CHECK_THROWS_AS(thm4_bumps(Rat(1), 40), std::invalid_argument);
  CHECK_THROWS_AS(thm4_bumps(Rat(0), 40), std::invalid_argument);
  CHECK_THROWS_AS(thm4_bumps(Rat(1, 2), 9), std::invalid_argument);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(make(CorpusId::F4, {{"k", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make(CorpusId::F4, {{"k", Rat(1, 2)}}), std::invalid_argument);
  CHECK_THROWS_AS(make(CorpusId::F5, {{"K", -1}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_id("f6"), std::invalid_argument);
  CHECK(corpus_name(parse_corpus_id("thm4")) == "thm4");
}

TEST_CASE("closed forms and their domain errors") {
  CHECK(closed_form_maximal({CorpusId::F2, {}}, 2) == Rat(1, 3));
  CHECK(closed_form_frequency({CorpusId::F4, {{"k", 7}}}, 2) == Rat(3));
  CHECK(closed_form_frequency({CorpusId::F5, {}}, Rat(3, 8)) == Rat(5, 8));
  CHECK_FALSE(closed_form_frequency({CorpusId::F5, {}}, Rat(3, 4)).has_value());  // n = 1
  CHECK_FALSE(closed_form_frequency({CorpusId::F5, {}}, Rat(1, 3)).has_value());
  CHECK_THROWS_AS(closed_form_maximal({CorpusId::F7, {}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_frequency({CorpusId::F3, {}}, 0), std::invalid_argument);
}

TEST_CASE("engine equals the closed forms on [-8, 8] with step 1/16") {
  for (long k : {1L, 2L, 5L, 100L}) {
    for (CorpusSpec spec : {CorpusSpec{CorpusId::F2, {}}, CorpusSpec{CorpusId::F4, {{"k", k}}}}) {
      const StepFn f = generate(spec);
      for (long i = -128; i <= 128; ++i) {
        const Rat x = ratio(i, 16);
        const FreqResult r = frequency(f, x);
        CHECK(r.maximal == closed_form_maximal(spec, x));
        CHECK(r.frequency == *closed_form_frequency(spec, x));
      }
    }
  }
}

TEST_CASE("f5 special points within the truncation margin") {
  const long K = 14;
  const CorpusSpec spec{CorpusId::F5, {{"K", K}}};
  const StepFn f = generate(spec);
  for (long n = 2; n <= K - 8; ++n) {
    CAPTURE(n);
    const Rat x = 3 * pow2(-n - 1);
    CHECK(frequency(f, x).frequency == *closed_form_frequency(spec, x));
  }
}

TEST_CASE("truncation monotonicity of the masses") {
  Rat prev = 0;
  for (long K = 1; K <= 24; ++K) {
    const Rat m8 = mass(make(CorpusId::F8, {{"K", K}}));
    CHECK(m8 > prev);
    CHECK(m8 < Rat(1, 6));
    prev = m8;
    CHECK(mass(make(CorpusId::F5, {{"K", K}})) <= Rat(3, 2));
  }
}

TEST_CASE("f3 frequency vanishes in the middle of each bump") {
  const StepFn f = make(CorpusId::F3, {{"K", 12}});
  for (long n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const Rat x = pow2(n) + Rat(1, 2);
    const FreqResult r = frequency(f, x);
    CHECK(r.frequency == 0);
    CHECK(r.status == FreqStatus::ZeroByLocalLimit);
    if (n <= 6) {
      const OracleResult o = oracle_eval(f, x, default_oracle_range(f, x), 1 << 14);
      CHECK(o.approx_frequency == 0);
    }
  }
}
