#pragma once

#include <map>
#include <vector>

#include "sixvertex/report.hpp"
#include "sixvertex/types.hpp"

namespace sixvertex {

/// Element of S_L stored by its one-line image sequence: sigma(i) for
/// i = 1..L. Reindexing a sequence follows out[i] = in[sigma(i)].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int L);
  static Permutation cyclic(int L);                 // (1..L) -> (2..L,1)
  static Permutation adjacent(int alpha, int L);    // swap of alpha, alpha+1

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }  // 1-based
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool operator==(const Permutation& o) const { return images_ == o.images_; }

 private:
  std::vector<int> images_;
};

/// compose(f, g)(i) = f(g(i)); permuting a sequence by f and then by g equals
/// permuting once by compose(f, g).
Permutation compose(const Permutation& f, const Permutation& g);

template <typename T>
std::vector<T> permute_sequence(const Permutation& sigma, const std::vector<T>& items) {
  if (static_cast<int>(items.size()) != sigma.size())
    throw LengthMismatch("permute_sequence: length mismatch");
  std::vector<T> out(items.size());
  for (int i = 1; i <= sigma.size(); ++i) out[i - 1] = items[sigma(i) - 1];
  return out;
}

/// Adjacent-transposition word for sigma = s_{l1} s_{l2} ... s_{lp}, evaluated
/// right to left (the last letter acts first). The length equals the
/// inversion count of sigma.
struct AdjacentWord {
  std::vector<int> letters;
};

AdjacentWord adjacent_decomposition(const Permutation& sigma);
Permutation evaluate_word(const AdjacentWord& word, int L);
long long inversion_count(const Permutation& sigma);

/// Builds the adjacent swap of (alpha, alpha+1) from powers of the cycle and
/// the first swap, and checks it against the direct construction.
Permutation adjacent_from_cyclic(int alpha, int L);

/// Braid-group relation residuals for a candidate representation of the
/// adjacent generators: rep[alpha-1] is the operator for the swap of
/// (alpha, alpha+1), alpha = 1..L-1, all on a common space.
VerificationReport verify_group_relations(const std::vector<MatX>& rep, int L,
                                          double tol);

}  // namespace sixvertex
