#pragma once

// The group algebra k[F_S] of a free group: the free Hopf algebra on the
// grouplike coalgebra spanned by S. Words are signed letters (+i for s_i, -i for
// its inverse, i >= 1) kept in reduced form.

#include <map>
#include <string>
#include <vector>

#include "cogebra/coefficients.hpp"

namespace cogebra {

using GroupWord = std::vector<int>;

class FreeGroup {
 public:
  FreeGroup() = default;
  explicit FreeGroup(std::vector<std::string> names);
  /// s, t, u for up to three letters, else s1, s2, ...
  static FreeGroup standard(std::size_t rank);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  /// Free reduction; InputError on a letter outside the alphabet.
  GroupWord reduce(const GroupWord& w) const;
  GroupWord multiply(const GroupWord& a, const GroupWord& b) const;
  GroupWord inverse(const GroupWord& w) const;
  bool is_reduced(const GroupWord& w) const;

  /// "1", "s*t^-1*s".
  std::string format(const GroupWord& w) const;
  /// Accepts the format output and whitespace-separated letters; reduces.
  GroupWord parse(std::string_view text) const;

  friend bool operator==(const FreeGroup&, const FreeGroup&) = default;

 private:
  void check(const GroupWord& w) const;
  std::vector<std::string> names_;
};

class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  GroupAlgebraElement(Field f, FreeGroup g) : field_(std::move(f)), group_(std::move(g)) {}
  static GroupAlgebraElement basis(const Field& f, const FreeGroup& g, const GroupWord& w);
  static GroupAlgebraElement unit(const Field& f, const FreeGroup& g) { return basis(f, g, {}); }

  const Field& field() const { return field_; }
  const FreeGroup& group() const { return group_; }
  /// Reduced words with nonzero coefficients.
  const std::map<GroupWord, Scalar>& terms() const { return terms_; }
  /// Adds c * w (w is reduced first).
  void add_term(const GroupWord& w, const Scalar& c);

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

 private:
  Field field_;
  FreeGroup group_;
  std::map<GroupWord, Scalar> terms_;
};

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement scale(const GroupAlgebraElement& a, const Scalar& c);
GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement antipode(const GroupAlgebraElement& a);
Scalar counit(const GroupAlgebraElement& a);
/// Delta(w) = w (x) w: coefficients of pairs of reduced words.
std::map<std::pair<GroupWord, GroupWord>, Scalar> comultiply(const GroupAlgebraElement& a);

/// Invertible generators named after the alphabet, no further relations.
PresentedAlgebra hopf_envelope_grouplike(const FreeGroup& g, const Field& f);

struct EmbeddingReport {
  std::size_t rank = 0;
  std::size_t d = 0;
  std::size_t representations = 0;  // orbit representatives spanned
  std::size_t positive_dim = 0;     // coefficient span on words in S
  std::size_t all_dim = 0;          // on words in S and S^-1
  std::size_t positive_length = 0;
  std::size_t all_length = 0;
  bool equal = false;
};
/// Representations of F_S of dimension 1..d over a finite field: the coefficient
/// span seen on positive words against the span seen on all words.
EmbeddingReport embedding_check(std::size_t rank, std::size_t d, const Field& f,
                                std::uint64_t budget = default_budget());

}  // namespace cogebra
