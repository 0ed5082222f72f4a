#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlg/combinatorics.hpp"

namespace dlg {

/// alpha^(a): an admissible sequence at level a.
struct PosetElement {
  SignedSequence seq;
  int level = 0;

  std::string str() const;
  friend bool operator==(const PosetElement&, const PosetElement&) = default;
  friend auto operator<=>(const PosetElement&, const PosetElement&) = default;
};

/// a <= b and x_i <= y_{b-a+i}.  Works for any sequences, admissible or not.
bool leq(const PosetElement& x, const PosetElement& y);

enum class CoverType { SameLevelDoset = 1, SameLevelPlain = 2, LevelJump = 3 };

struct Cover {
  int lower;
  int upper;
  CoverType type;
  friend bool operator==(const Cover&, const Cover&) = default;
};

/// Finite poset given by its cover relation, together with a set of
/// off-diagonal pairs forming a doset.  Elements are indexed 0..size()-1.
class FiniteDoset {
 public:
  FiniteDoset() = default;
  FiniteDoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers,
              std::vector<std::pair<int, int>> pairs);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  const std::vector<int>& up(int i) const { return up_[i]; }

  bool less(int i, int j) const { return less_[i][j]; }
  bool leq(int i, int j) const { return i == j || less_[i][j]; }
  bool in_doset(int i, int j) const;
  bool is_doset_cover(int i, int j) const { return in_doset(i, j) && i != j; }

  /// Pairs comparable and interval closed: x<=y<=z, (x,z) in D iff (x,y),(y,z) in D.
  bool satisfies_doset_axiom() const;

  int minimum() const;  // -1 when not unique
  int maximum() const;

  /// Length of maximal poset chains and doset chains; nullopt when some
  /// maximal chains differ in length or in the number of doset covers.
  struct Ranks {
    int P;
    int D;
  };
  std::optional<Ranks> ranks() const;
  /// ranks() or DomainError.
  Ranks require_ranked() const;

  /// Induced doset on the elements where keep is true (used for intervals).
  FiniteDoset restrict(const std::vector<bool>& keep) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<bool>> less_;
  std::vector<std::vector<bool>> pair_;
};

/// The poset P_{d,n} and the doset D_{d,n} of admissible pairs.
struct DosetStructure {
  int d = 0;
  int n = 0;
  std::vector<PosetElement> elements;  // sorted by level, partition size, sequence
  std::vector<Cover> covers;           // sorted
  FiniteDoset doset;

  int index_of(const PosetElement& x) const;  // -1 if absent
  std::vector<Cover> covers_of(int i) const;
  /// Number of all doset elements, diagonal included.
  std::size_t doset_size() const { return elements.size() + doset.pairs().size(); }

 private:
  std::map<PosetElement, int> index_;
  friend DosetStructure build_doset(int, int, std::size_t);
  friend DosetStructure make_doset_structure(int, int, std::vector<PosetElement>, std::vector<Cover>);
};

constexpr std::size_t kDefaultMaxElements = 4096;

/// Builds P_{d,n} with classified covers and D_{d,n}; verifies ranked-ness.
DosetStructure build_doset(int d, int n, std::size_t max_elements = kDefaultMaxElements);

/// Rebuilds a structure from elements and covers (used when loading JSON).
DosetStructure make_doset_structure(int d, int n, std::vector<PosetElement> elements, std::vector<Cover> covers);

/// Covers of x in P_{d,n}, generated from the three-type rule.
std::vector<std::pair<PosetElement, CoverType>> classified_covers(const PosetElement& x, int d);

/// Removes the hook (n,1^{n-1}) from a symmetric partition when it contains it.
std::optional<Partition> hook_removal(const Partition& lambda, int n);

/// Diagram of alpha^(a) in the lattice model: the shifted path of the
/// sequence read periodically; order is diagram containment.
Partition shifted_diagram(const PosetElement& x);
PosetElement from_shifted_diagram(const Partition& diagram, int n);

/// Lattice operations of P_{d,n} through shifted diagrams.
PosetElement lattice_meet(const PosetElement& x, const PosetElement& y);
PosetElement lattice_join(const PosetElement& x, const PosetElement& y);

/// Same level, x <= y, and a saturated chain of type-1 covers joins them.
bool is_admissible_pair(const PosetElement& x, const PosetElement& y);

/// Deterministic DOT text; doset covers drawn as double lines.
std::string hasse_dot(const DosetStructure& ds);

}  // namespace dlg
