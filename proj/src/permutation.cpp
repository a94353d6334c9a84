#include "sixvertex/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace sixvertex {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
      throw IndexOutOfRange("permutation images must be a bijection of 1..L");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int L) {
  std::vector<int> img(L);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::cyclic(int L) {
  std::vector<int> img(L);
  for (int i = 0; i < L; ++i) img[i] = (i + 1) % L + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::adjacent(int alpha, int L) {
  if (alpha < 1 || alpha > L - 1)
    throw IndexOutOfRange("adjacent transposition index out of range");
  Permutation p = identity(L);
  std::swap(p.images_[alpha - 1], p.images_[alpha]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw LengthMismatch("compose: size mismatch");
  std::vector<int> img(f.size());
  for (int i = 1; i <= f.size(); ++i) img[i - 1] = f(g(i));
  return Permutation(std::move(img));
}

AdjacentWord adjacent_decomposition(const Permutation& sigma) {
  // Bubble sort of the image sequence; each recorded swap is one letter, so
  // the word length is the inversion count and the word is minimal.
  std::vector<int> seq = sigma.images();
  AdjacentWord word;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int a = 0; a + 1 < static_cast<int>(seq.size()); ++a) {
      if (seq[a] > seq[a + 1]) {
        std::swap(seq[a], seq[a + 1]);
        word.letters.push_back(a + 1);
        swapped = true;
      }
    }
  }
  return word;
}

Permutation evaluate_word(const AdjacentWord& word, int L) {
  Permutation acc = Permutation::identity(L);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    acc = compose(acc, Permutation::adjacent(*it, L));
  return acc;
}

long long inversion_count(const Permutation& sigma) {
  long long count = 0;
  const auto& img = sigma.images();
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++count;
  return count;
}

Permutation adjacent_from_cyclic(int alpha, int L) {
  if (alpha < 1 || alpha > L - 1)
    throw IndexOutOfRange("adjacent_from_cyclic: alpha out of range");
  const Permutation cyc = Permutation::cyclic(L);
  Permutation cyc_pow = Permutation::identity(L);
  for (int k = 0; k < alpha - 1; ++k) cyc_pow = compose(cyc_pow, cyc);
  // cycle power first, then the first swap, then the inverse power
  Permutation result =
      compose(compose(cyc_pow, Permutation::adjacent(1, L)), cyc_pow.inverse());
  if (!(result == Permutation::adjacent(alpha, L)))
    throw IndexOutOfRange("adjacent_from_cyclic: generator mismatch");
  return result;
}

VerificationReport verify_group_relations(const std::vector<MatX>& rep, int L,
                                          double tol) {
  if (static_cast<int>(rep.size()) != L - 1)
    throw DimensionMismatch("verify_group_relations: need one operator per generator");
  const Eigen::Index dim = rep.empty() ? 1 : rep.front().rows();
  for (const auto& m : rep)
    if (m.rows() != dim || m.cols() != dim)
      throw DimensionMismatch("verify_group_relations: operators on different spaces");

  VerificationReport report;
  report.suite = "group-relations";
  const MatX id = MatX::Identity(dim, dim);
  for (int a = 0; a < L - 1; ++a) {
    report.add("involution[" + std::to_string(a + 1) + "]", rel_diff(MatX(rep[a] * rep[a]), id),
               tol);
  }
  for (int a = 0; a + 1 < L - 1; ++a) {
    const MatX lhs = rep[a] * rep[a + 1] * rep[a];
    const MatX rhs = rep[a + 1] * rep[a] * rep[a + 1];
    report.add("braid[" + std::to_string(a + 1) + "," + std::to_string(a + 2) + "]",
               rel_diff(lhs, rhs), tol);
  }
  for (int a = 0; a < L - 1; ++a)
    for (int b = a + 2; b < L - 1; ++b) {
      report.add("commute[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]",
                 rel_diff(MatX(rep[a] * rep[b]), MatX(rep[b] * rep[a])), tol);
    }
  return report;
}

}  // namespace sixvertex
