#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sixvertex/permutation.hpp"
#include "sixvertex/sampling.hpp"
#include "sixvertex/tensor_space.hpp"
#include "sixvertex/weights.hpp"

using namespace sixvertex;

namespace {

// Brute-force inversion count used as the independent length oracle.
long long count_inversions(const std::vector<int>& img) {
  long long n = 0;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++n;
  return n;
}

}  // namespace

TEST_CASE("sequence reindexing follows the image convention") {
  CHECK(permute_sequence(Permutation::identity(3), std::vector<int>{7, 8, 9}) ==
        std::vector<int>{7, 8, 9});
  CHECK(permute_sequence(Permutation::cyclic(3), std::vector<int>{1, 2, 3}) ==
        std::vector<int>{2, 3, 1});
  CHECK(permute_sequence(Permutation::adjacent(1, 4), std::vector<int>{10, 20, 30, 40}) ==
        std::vector<int>{20, 10, 30, 40});
  CHECK_THROWS_AS(permute_sequence(Permutation::identity(3), std::vector<int>{1, 2}),
                  LengthMismatch);
}

TEST_CASE("adjacent words are minimal and reproduce their source") {
  CHECK(adjacent_decomposition(Permutation::identity(4)).letters.empty());

  const AdjacentWord cyc4 = adjacent_decomposition(Permutation::cyclic(4));
  CHECK(cyc4.letters == std::vector<int>{3, 2, 1});

  const Permutation reversal{std::vector<int>{3, 2, 1}};
  const AdjacentWord rev_word = adjacent_decomposition(reversal);
  CHECK(static_cast<long long>(rev_word.letters.size()) ==
        count_inversions(reversal.images()));
  CHECK(evaluate_word(rev_word, 3) == reversal);
}

TEST_CASE("decomposition round-trips for every permutation up to length five") {
  for (int L = 1; L <= 5; ++L) {
    std::vector<int> img(L);
    std::iota(img.begin(), img.end(), 1);
    do {
      const Permutation sigma{std::vector<int>(img)};
      const AdjacentWord word = adjacent_decomposition(sigma);
      CHECK(evaluate_word(word, L) == sigma);
      CHECK(static_cast<long long>(word.letters.size()) == count_inversions(img));
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("decomposition round-trips on seeded draws at length eight") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    std::vector<int> img(8);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation sigma{std::vector<int>(img)};
    CHECK(evaluate_word(adjacent_decomposition(sigma), 8) == sigma);
  }
}

TEST_CASE("inverses compose to the identity") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 1000; ++k) {
    const int L = 2 + static_cast<int>(rng() % 7);
    std::vector<int> img(L);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation sigma{std::vector<int>(img)};
    CHECK(compose(sigma, sigma.inverse()) == Permutation::identity(L));
    CHECK(compose(sigma.inverse(), sigma) == Permutation::identity(L));
  }
}

TEST_CASE("the cycle generates the expected images and inverse powers") {
  CHECK(Permutation::cyclic(1) == Permutation::identity(1));

  const Permutation cyc3 = Permutation::cyclic(3);
  CHECK(cyc3.images() == std::vector<int>{2, 3, 1});
  CHECK(compose(compose(cyc3, cyc3), cyc3) == Permutation::identity(3));

  const Permutation cyc5 = Permutation::cyclic(5);
  Permutation fourth = Permutation::identity(5);
  for (int k = 0; k < 4; ++k) fourth = compose(fourth, cyc5);
  CHECK(cyc5.inverse() == fourth);
}

TEST_CASE("adjacent generators come out of cycle conjugation") {
  CHECK(adjacent_from_cyclic(1, 4) == Permutation::adjacent(1, 4));
  CHECK(adjacent_from_cyclic(2, 3).images() == std::vector<int>{1, 3, 2});
  for (int L = 2; L <= 8; ++L)
    for (int alpha = 1; alpha <= L - 1; ++alpha)
      CHECK(adjacent_from_cyclic(alpha, L) == Permutation::adjacent(alpha, L));
  CHECK_THROWS_AS(adjacent_from_cyclic(4, 4), IndexOutOfRange);
}

TEST_CASE("plain swap operators satisfy the generator relations exactly") {
  const int L = 3;
  std::vector<MatX> rep;
  for (int a = 1; a <= L - 1; ++a)
    rep.push_back(perm_rep(Permutation::adjacent(a, L), L));
  const VerificationReport report = verify_group_relations(rep, L, 1e-14);
  CHECK(report.passed());
  CHECK(report.max_residual() == doctest::Approx(0.0));
}

TEST_CASE("braid factors with rapidity tracking satisfy the relations") {
  const WeightSet w = make_field_trig_weights({2.0, 0.0});
  ParameterSampler sampler(17);
  const auto pts = sampler.distinct_points(4, &w);
  const VerificationReport report = verify_rhat_relations(w, pts, 1e-11);
  CHECK_MESSAGE(report.passed(), "max residual ", report.max_residual());
}

TEST_CASE("an identity impostor breaks the braid relation and is reported") {
  const int L = 4;
  std::vector<MatX> rep;
  for (int a = 1; a <= L - 1; ++a)
    rep.push_back(perm_rep(Permutation::adjacent(a, L), L));
  rep[1] = MatX::Identity(dim_of(L), dim_of(L));
  const VerificationReport report = verify_group_relations(rep, L, 1e-11);
  CHECK_FALSE(report.passed());
  bool braid_failure = false;
  for (const auto& c : report.checks)
    if (!c.pass && c.id.rfind("braid[", 0) == 0) braid_failure = true;
  CHECK(braid_failure);
}

TEST_CASE("group relation checker rejects mismatched spaces") {
  std::vector<MatX> rep{MatX::Identity(4, 4), MatX::Identity(8, 8)};
  CHECK_THROWS_AS(verify_group_relations(rep, 3, 1e-12), DimensionMismatch);
}
