#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlg/arith.hpp"

namespace dlg {

/// Elements of <n> = {-n,...,-1,1,...,n} in increasing order.
std::vector<int> alphabet(int n);

/// 0-based index of x inside alphabet(n).
inline int position(int x, int n) { return x < 0 ? x + n : x + n - 1; }
inline int at_position(int p, int n) { return p < n ? p - n : p - n + 1; }

/// Sign of the permutation sorting s, by inversion count.  Entries distinct.
int permutation_sign(const std::vector<int>& s);

/// Young diagram inside the n x n square, rows weakly decreasing, no zero rows.
struct Partition {
  std::vector<int> rows;

  Partition() = default;
  explicit Partition(std::vector<int> r);

  int row(int r) const { return r < static_cast<int>(rows.size()) ? rows[r] : 0; }
  int size() const;
  bool contains_box(int r, int c) const { return c < row(r); }  // 0-based
  bool contains(const Partition& o) const;
  Partition transposed() const;
  bool is_symmetric() const { return transposed() == *this; }
  bool fits(int n) const;

  std::string str() const;  // "(3,3,1)", "()" when empty

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Largest p with (p^p) contained in the diagram.
int durfee(const Partition& lambda);

/// An n-element subset of <n>, stored in increasing order.
class SignedSequence {
 public:
  SignedSequence() = default;
  /// Sorts the entries; throws DomainError unless they form an n-subset of <n>.
  SignedSequence(int n, std::vector<int> entries);

  int n() const { return n_; }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](int i) const { return entries_[i]; }
  bool contains(int x) const;
  int negative_count() const;
  /// Bit p set when at_position(p, n) belongs to the sequence.
  std::uint64_t mask() const;

  friend bool operator==(const SignedSequence&, const SignedSequence&) = default;
  friend auto operator<=>(const SignedSequence&, const SignedSequence&) = default;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

std::vector<SignedSequence> all_sequences(int n);
/// Admissible sequences sorted by partition size then entries.
std::vector<SignedSequence> admissible_sequences(int n);

Partition sequence_to_partition(const SignedSequence& a);
SignedSequence partition_to_sequence(const Partition& lambda, int n);

/// Complement in <n> of {-a_1,...,-a_n}; its diagram is the reflected diagram.
SignedSequence transpose(const SignedSequence& a);
bool is_admissible(const SignedSequence& a);

/// The sign s with p_a = s * p_{a^t} on LG(n).
int sigma_sign(const SignedSequence& a);

bool is_northeast(const SignedSequence& a);
bool is_southwest(const SignedSequence& a);

/// Bruhat order: a_i <= b_i for all i (diagram containment).
bool bruhat_leq(const SignedSequence& a, const SignedSequence& b);
SignedSequence meet(const SignedSequence& a, const SignedSequence& b);
SignedSequence join(const SignedSequence& a, const SignedSequence& b);

struct AdmissiblePair {
  SignedSequence lower;
  SignedSequence upper;
  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
  friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
};

bool is_admissible_pair(const SignedSequence& lower, const SignedSequence& upper);

AdmissiblePair pi(const SignedSequence& a);

/// Boxes (row, col), 0-based, strictly above the diagonal between the two
/// diagrams, grouped into edge-connected components.
std::vector<std::vector<std::pair<int, int>>> upper_components(const AdmissiblePair& p);

/// All sequences with pi(x) == p; Northeast element first.
std::vector<SignedSequence> fiber(const AdmissiblePair& p);

/// The unique Northeast element of fiber(p).
SignedSequence northeast_representative(const AdmissiblePair& p);

/// Row lengths on and above the diagonal of a symmetric diagram.
std::vector<int> strict_partition(const SignedSequence& a);
SignedSequence from_strict_partition(const std::vector<int>& parts, int n);

/// "\bar4\bar213"; comma separated when n >= 10.
std::string format_sequence(const std::vector<int>& entries, int n);
inline std::string format_sequence(const SignedSequence& a) {
  return format_sequence(a.entries(), a.n());
}
/// Parses the bar notation, or a comma/space separated list of integers.
std::vector<int> parse_entries(const std::string& text);
SignedSequence parse_sequence(const std::string& text, int n);

}  // namespace dlg
