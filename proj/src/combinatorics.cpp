#include "dlg/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace dlg {

Z binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<int> alphabet(int n) {
  std::vector<int> out;
  for (int i = -n; i <= n; ++i)
    if (i != 0) out.push_back(i);
  return out;
}

int permutation_sign(const std::vector<int>& s) {
  long inversions = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Partition::Partition(std::vector<int> r) : rows(std::move(r)) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0) throw DomainError("partition row is negative");
    if (i > 0 && rows[i] > rows[i - 1]) throw DomainError("partition rows must weakly decrease");
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
}

int Partition::size() const {
  int s = 0;
  for (int r : rows) s += r;
  return s;
}

bool Partition::contains(const Partition& o) const {
  if (o.rows.size() > rows.size()) return false;
  for (std::size_t i = 0; i < o.rows.size(); ++i)
    if (o.rows[i] > rows[i]) return false;
  return true;
}

Partition Partition::transposed() const {
  std::vector<int> t(rows.empty() ? 0 : rows[0], 0);
  for (int r : rows)
    for (int c = 0; c < r; ++c) ++t[c];
  return Partition(std::move(t));
}

bool Partition::fits(int n) const {
  return static_cast<int>(rows.size()) <= n && (rows.empty() || rows[0] <= n);
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows[i]);
  }
  return s + ")";
}

int durfee(const Partition& lambda) {
  int p = 0;
  while (lambda.row(p) >= p + 1) ++p;
  return p;
}

SignedSequence::SignedSequence(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw DomainError("sequence needs n >= 1");
  std::sort(entries_.begin(), entries_.end());
  if (static_cast<int>(entries_.size()) != n) throw DomainError("sequence must have exactly n entries");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    int x = entries_[i];
    if (x == 0 || x < -n || x > n) throw DomainError("entry " + std::to_string(x) + " outside <n>");
    if (i && entries_[i - 1] == x) throw DomainError("repeated entry " + std::to_string(x));
  }
}

bool SignedSequence::contains(int x) const {
  return std::binary_search(entries_.begin(), entries_.end(), x);
}

int SignedSequence::negative_count() const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](int x) { return x < 0; }));
}

std::uint64_t SignedSequence::mask() const {
  std::uint64_t m = 0;
  for (int x : entries_) m |= std::uint64_t{1} << position(x, n_);
  return m;
}

std::vector<SignedSequence> all_sequences(int n) {
  std::vector<SignedSequence> out;
  const auto alpha = alphabet(n);
  std::vector<bool> pick(2 * n, false);
  std::fill(pick.begin() + n, pick.end(), true);
  do {
    std::vector<int> e;
    for (int p = 0; p < 2 * n; ++p)
      if (pick[p]) e.push_back(alpha[p]);
    out.emplace_back(n, std::move(e));
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedSequence> admissible_sequences(int n) {
  std::vector<SignedSequence> out;
  for (unsigned s = 0; s < (1u << n); ++s) {
    std::vector<int> e;
    for (int i = 1; i <= n; ++i) e.push_back((s >> (i - 1)) & 1u ? i : -i);
    out.emplace_back(n, std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const SignedSequence& a, const SignedSequence& b) {
    int sa = sequence_to_partition(a).size(), sb = sequence_to_partition(b).size();
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

Partition sequence_to_partition(const SignedSequence& a) {
  const int n = a.n();
  std::vector<int> rows(n);
  // The j-th vertical step (0-based) bounds row n-1-j on the right.
  for (int j = 0; j < n; ++j) rows[n - 1 - j] = position(a[j], n) - j;
  return Partition(std::move(rows));
}

SignedSequence partition_to_sequence(const Partition& lambda, int n) {
  if (!lambda.fits(n)) throw DomainError("partition " + lambda.str() + " does not fit the square");
  std::vector<int> e(n);
  for (int j = 0; j < n; ++j) e[j] = at_position(lambda.row(n - 1 - j) + j, n);
  return SignedSequence(n, std::move(e));
}

SignedSequence transpose(const SignedSequence& a) {
  std::vector<int> e;
  for (int x : alphabet(a.n()))
    if (!a.contains(-x)) e.push_back(x);
  return SignedSequence(a.n(), std::move(e));
}

bool is_admissible(const SignedSequence& a) {
  for (int i = 1; i <= a.n(); ++i)
    if (a.contains(i) == a.contains(-i)) return false;
  return true;
}

int sigma_sign(const SignedSequence& a) {
  const int n = a.n();
  std::vector<int> eps, eps_c, phi, phi_c;
  for (int i = 1; i <= n; ++i) {
    (a.contains(-i) ? eps : eps_c).push_back(i);
    (a.contains(i) ? phi : phi_c).push_back(i);
  }
  std::vector<int> first = eps_c, second = phi;
  first.insert(first.end(), eps.begin(), eps.end());
  second.insert(second.end(), phi_c.begin(), phi_c.end());
  return permutation_sign(first) * permutation_sign(second);
}

bool is_northeast(const SignedSequence& a) {
  const Partition lambda = sequence_to_partition(a);
  for (int r = 0; r < a.n(); ++r)
    for (int c = 0; c < std::min(r, lambda.row(r)); ++c)
      if (!lambda.contains_box(c, r)) return false;
  return true;
}

bool is_southwest(const SignedSequence& a) { return is_northeast(transpose(a)); }

bool bruhat_leq(const SignedSequence& a, const SignedSequence& b) {
  if (a.n() != b.n()) throw DomainError("sequences from different alphabets");
  for (int i = 0; i < a.n(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

SignedSequence meet(const SignedSequence& a, const SignedSequence& b) {
  std::vector<int> e(a.n());
  for (int i = 0; i < a.n(); ++i) e[i] = std::min(a[i], b[i]);
  return SignedSequence(a.n(), std::move(e));
}

SignedSequence join(const SignedSequence& a, const SignedSequence& b) {
  std::vector<int> e(a.n());
  for (int i = 0; i < a.n(); ++i) e[i] = std::max(a[i], b[i]);
  return SignedSequence(a.n(), std::move(e));
}

bool is_admissible_pair(const SignedSequence& lower, const SignedSequence& upper) {
  return is_admissible(lower) && is_admissible(upper) && bruhat_leq(lower, upper) &&
         lower.negative_count() == upper.negative_count();
}

AdmissiblePair pi(const SignedSequence& a) {
  const SignedSequence t = transpose(a);
  return {meet(a, t), join(a, t)};
}

std::vector<std::vector<std::pair<int, int>>> upper_components(const AdmissiblePair& p) {
  if (!is_admissible_pair(p.lower, p.upper))
    throw DomainError("not an admissible pair: " + format_sequence(p.lower) + ", " + format_sequence(p.upper));
  const Partition lo = sequence_to_partition(p.lower), hi = sequence_to_partition(p.upper);
  const int n = p.lower.n();
  std::set<std::pair<int, int>> boxes;
  for (int r = 0; r < n; ++r)
    for (int c = std::max(lo.row(r), r + 1); c < hi.row(r); ++c) boxes.insert({r, c});
  std::vector<std::vector<std::pair<int, int>>> comps;
  while (!boxes.empty()) {
    std::vector<std::pair<int, int>> comp{*boxes.begin()};
    boxes.erase(boxes.begin());
    for (std::size_t k = 0; k < comp.size(); ++k) {
      auto [r, c] = comp[k];
      for (auto nb : {std::pair{r - 1, c}, std::pair{r + 1, c}, std::pair{r, c - 1}, std::pair{r, c + 1}}) {
        auto it = boxes.find(nb);
        if (it != boxes.end()) {
          comp.push_back(*it);
          boxes.erase(it);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

namespace {

SignedSequence with_boxes(const Partition& base, const std::vector<std::pair<int, int>>& extra, int n) {
  std::vector<int> rows(n, 0);
  for (int r = 0; r < n; ++r) rows[r] = base.row(r);
  std::vector<std::vector<bool>> grid(n, std::vector<bool>(n, false));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < rows[r]; ++c) grid[r][c] = true;
  for (auto [r, c] : extra) grid[r][c] = true;
  for (int r = 0; r < n; ++r) {
    int len = 0;
    while (len < n && grid[r][len]) ++len;
    for (int c = len; c < n; ++c)
      if (grid[r][c]) throw InternalError("fiber candidate is not a diagram");
    rows[r] = len;
  }
  return partition_to_sequence(Partition(rows), n);
}

}  // namespace

std::vector<SignedSequence> fiber(const AdmissiblePair& p) {
  const auto comps = upper_components(p);
  const int n = p.lower.n();
  const Partition lo = sequence_to_partition(p.lower);
  const std::size_t k = comps.size();
  if (k >= 63) throw ResourceLimit("fiber too large");
  std::vector<SignedSequence> out;
  // Mask bit i clear: take S_i itself; set: take its reflection.
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    std::vector<std::pair<int, int>> extra;
    for (std::size_t i = 0; i < k; ++i)
      for (auto [r, c] : comps[i]) extra.push_back((m >> i) & 1u ? std::pair{c, r} : std::pair{r, c});
    SignedSequence g = with_boxes(lo, extra, n);
    if (!(pi(g) == p)) throw InternalError("fiber element maps to a different pair");
    out.push_back(std::move(g));
  }
  return out;
}

SignedSequence northeast_representative(const AdmissiblePair& p) {
  const auto comps = upper_components(p);
  std::vector<std::pair<int, int>> extra;
  for (const auto& comp : comps) extra.insert(extra.end(), comp.begin(), comp.end());
  return with_boxes(sequence_to_partition(p.lower), extra, p.lower.n());
}

std::vector<int> strict_partition(const SignedSequence& a) {
  if (!is_admissible(a)) throw DomainError("strict partition needs an admissible sequence");
  const Partition lambda = sequence_to_partition(a);
  std::vector<int> parts;
  for (int r = 0; lambda.row(r) > r; ++r) parts.push_back(lambda.row(r) - r);
  return parts;
}

SignedSequence from_strict_partition(const std::vector<int>& parts, int n) {
  if (static_cast<int>(parts.size()) > n) throw DomainError("too many parts");
  std::vector<std::vector<bool>> grid(n, std::vector<bool>(n, false));
  for (std::size_t r = 0; r < parts.size(); ++r) {
    if (parts[r] <= 0 || (r && parts[r] >= parts[r - 1])) throw DomainError("parts must strictly decrease");
    const int end = static_cast<int>(r) + parts[r];
    if (end > n) throw DomainError("strict partition does not fit");
    for (int c = static_cast<int>(r); c < end; ++c) grid[r][c] = grid[c][r] = true;
  }
  std::vector<int> rows(n);
  for (int r = 0; r < n; ++r) rows[r] = static_cast<int>(std::count(grid[r].begin(), grid[r].end(), true));
  return partition_to_sequence(Partition(rows), n);
}

std::string format_sequence(const std::vector<int>& entries, int n) {
  std::string s;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (n >= 10 && i) s += ",";
    if (entries[i] < 0) s += "\\bar";
    s += std::to_string(std::abs(entries[i]));
  }
  return s;
}

std::vector<int> parse_entries(const std::string& text) {
  std::vector<int> out;
  const bool list_form = text.find_first_of(",- []") != std::string::npos;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ',' || text[i] == ' ' || text[i] == '[' || text[i] == ']')) ++i;
  };
  skip();
  while (i < text.size()) {
    bool neg = false;
    if (text.compare(i, 4, "\\bar") == 0) {
      neg = true;
      i += 4;
    } else if (text[i] == '-') {
      neg = true;
      ++i;
    }
    int value = 0;
    if (i < text.size() && text[i] == '{') {
      std::size_t close = text.find('}', i);
      if (close == std::string::npos) throw DomainError("unbalanced brace in '" + text + "'");
      value = std::stoi(text.substr(i + 1, close - i - 1));
      i = close + 1;
    } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (list_form) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        value = std::stoi(text.substr(i, j - i));
        i = j;
      } else {
        value = text[i++] - '0';
      }
    } else {
      throw DomainError("cannot parse sequence '" + text + "'");
    }
    if (value == 0) throw DomainError("0 is not an element of <n>");
    out.push_back(neg ? -value : value);
    skip();
  }
  return out;
}

SignedSequence parse_sequence(const std::string& text, int n) { return SignedSequence(n, parse_entries(text)); }

}  // namespace dlg
