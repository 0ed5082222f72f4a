#include "dlg/poset.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace dlg {

std::string PosetElement::str() const { return format_sequence(seq) + "^(" + std::to_string(level) + ")"; }

bool leq(const PosetElement& x, const PosetElement& y) {
  const int n = x.seq.n();
  if (y.seq.n() != n) throw DomainError("poset elements from different alphabets");
  if (x.level > y.level) return false;
  const int s = y.level - x.level;
  for (int i = 0; i + s < n; ++i)
    if (x.seq[i] > y.seq[i + s]) return false;
  return true;
}

FiniteDoset::FiniteDoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers,
                         std::vector<std::pair<int, int>> pairs)
    : labels_(std::move(labels)), covers_(std::move(covers)), pairs_(std::move(pairs)) {
  const int m = size();
  std::sort(covers_.begin(), covers_.end());
  std::sort(pairs_.begin(), pairs_.end());
  up_.assign(m, {});
  for (auto [a, b] : covers_) {
    if (a < 0 || b < 0 || a >= m || b >= m || a == b) throw DomainError("bad cover index");
    up_[a].push_back(b);
  }
  // Transitive closure by search from each element.
  less_.assign(m, std::vector<bool>(m, false));
  for (int s = 0; s < m; ++s) {
    std::vector<int> stack(up_[s].begin(), up_[s].end());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (less_[s][v]) continue;
      less_[s][v] = true;
      for (int w : up_[v]) stack.push_back(w);
    }
    if (less_[s][s]) throw DomainError("cover relation has a cycle");
  }
  pair_.assign(m, std::vector<bool>(m, false));
  for (auto [a, b] : pairs_) {
    if (!less_[a][b]) throw DomainError("doset pair " + labels_[a] + ", " + labels_[b] + " is not comparable");
    pair_[a][b] = true;
  }
}

bool FiniteDoset::in_doset(int i, int j) const { return i == j || pair_[i][j]; }

bool FiniteDoset::satisfies_doset_axiom() const {
  const int m = size();
  for (int x = 0; x < m; ++x)
    for (int z = 0; z < m; ++z) {
      if (!leq(x, z)) continue;
      for (int y = 0; y < m; ++y) {
        if (!leq(x, y) || !leq(y, z)) continue;
        if (in_doset(x, z) != (in_doset(x, y) && in_doset(y, z))) return false;
      }
    }
  return true;
}

int FiniteDoset::minimum() const {
  for (int i = 0; i < size(); ++i) {
    bool ok = true;
    for (int j = 0; j < size() && ok; ++j) ok = leq(i, j);
    if (ok) return i;
  }
  return -1;
}

int FiniteDoset::maximum() const {
  for (int i = 0; i < size(); ++i) {
    bool ok = true;
    for (int j = 0; j < size() && ok; ++j) ok = leq(j, i);
    if (ok) return i;
  }
  return -1;
}

std::optional<FiniteDoset::Ranks> FiniteDoset::ranks() const {
  const int lo = minimum(), hi = maximum();
  if (lo < 0 || hi < 0) return std::nullopt;
  const int m = size();
  // Process in an order compatible with the poset: by number of elements below.
  std::vector<int> order(m), below(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (less(j, i)) ++below[i];
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
  std::vector<int> rank(m, -1);
  std::vector<std::set<int>> doset_steps(m);
  rank[lo] = 0;
  doset_steps[lo].insert(0);
  for (int v : order) {
    if (rank[v] < 0) return std::nullopt;
    for (int w : up_[v]) {
      if (rank[w] >= 0 && rank[w] != rank[v] + 1) return std::nullopt;
      rank[w] = rank[v] + 1;
      for (int s : doset_steps[v]) doset_steps[w].insert(s + (in_doset(v, w) ? 1 : 0));
    }
  }
  if (doset_steps[hi].size() != 1) return std::nullopt;
  return Ranks{rank[hi], rank[hi] + *doset_steps[hi].begin()};
}

FiniteDoset::Ranks FiniteDoset::require_ranked() const {
  auto r = ranks();
  if (!r) throw DomainError("doset is not ranked");
  return *r;
}

FiniteDoset FiniteDoset::restrict(const std::vector<bool>& keep) const {
  std::vector<int> newidx(size(), -1);
  std::vector<std::string> labels;
  for (int i = 0; i < size(); ++i)
    if (keep[i]) {
      newidx[i] = static_cast<int>(labels.size());
      labels.push_back(labels_[i]);
    }
  std::vector<std::pair<int, int>> covers, pairs;
  for (auto [a, b] : covers_)
    if (keep[a] && keep[b]) covers.push_back({newidx[a], newidx[b]});
  for (auto [a, b] : pairs_)
    if (keep[a] && keep[b]) pairs.push_back({newidx[a], newidx[b]});
  return FiniteDoset(std::move(labels), std::move(covers), std::move(pairs));
}

std::optional<Partition> hook_removal(const Partition& lambda, int n) {
  if (lambda.row(0) < n || lambda.row(n - 1) < 1) return std::nullopt;
  std::vector<int> rows;
  for (int r = 1; r < n; ++r) rows.push_back(lambda.row(r) - 1);
  return Partition(rows);
}

std::vector<std::pair<PosetElement, CoverType>> classified_covers(const PosetElement& x, int d) {
  const int n = x.seq.n();
  const Partition lambda = sequence_to_partition(x.seq);
  std::vector<std::pair<PosetElement, CoverType>> out;
  // Same level: add a box on or above the diagonal together with its mirror.
  for (int r = 0; r < n; ++r) {
    const int c = lambda.row(r);
    if (c < r || c >= n) continue;
    std::vector<int> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = lambda.row(i);
    rows[r] += 1;
    if (c != r) rows[c] += 1;
    bool valid = true;
    for (int i = 1; i < n; ++i) valid = valid && rows[i] <= rows[i - 1];
    if (!valid) continue;
    Partition mu(rows);
    if (!mu.is_symmetric()) continue;
    out.push_back({PosetElement{partition_to_sequence(mu, n), x.level},
                   c == r ? CoverType::SameLevelPlain : CoverType::SameLevelDoset});
  }
  if (x.level < d) {
    if (auto mu = hook_removal(lambda, n))
      out.push_back({PosetElement{partition_to_sequence(*mu, n), x.level + 1}, CoverType::LevelJump});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

bool element_order(const PosetElement& a, const PosetElement& b) {
  if (a.level != b.level) return a.level < b.level;
  int sa = sequence_to_partition(a.seq).size(), sb = sequence_to_partition(b.seq).size();
  if (sa != sb) return sa < sb;
  return a.seq < b.seq;
}

}  // namespace

DosetStructure make_doset_structure(int d, int n, std::vector<PosetElement> elements, std::vector<Cover> covers) {
  DosetStructure ds;
  ds.d = d;
  ds.n = n;
  ds.elements = std::move(elements);
  for (std::size_t i = 0; i < ds.elements.size(); ++i) {
    const auto& e = ds.elements[i];
    if (e.seq.n() != n || e.level < 0 || e.level > d || !is_admissible(e.seq))
      throw DomainError("element " + e.str() + " is not in P_{d,n}");
    if (!ds.index_.emplace(e, static_cast<int>(i)).second) throw DomainError("duplicate element " + e.str());
  }
  std::sort(covers.begin(), covers.end(), [](const Cover& a, const Cover& b) {
    return std::pair{a.lower, a.upper} < std::pair{b.lower, b.upper};
  });
  ds.covers = std::move(covers);
  std::vector<std::string> labels;
  for (const auto& e : ds.elements) labels.push_back(e.str());
  std::vector<std::pair<int, int>> cover_pairs, pairs;
  for (const auto& c : ds.covers) cover_pairs.push_back({c.lower, c.upper});
  const int m = static_cast<int>(ds.elements.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto &x = ds.elements[i], &y = ds.elements[j];
      if (i != j && x.level == y.level && is_admissible_pair(x.seq, y.seq)) pairs.push_back({i, j});
    }
  ds.doset = FiniteDoset(std::move(labels), std::move(cover_pairs), std::move(pairs));
  if (!ds.doset.ranks()) throw InternalError("P_{d,n} failed the ranked-ness check");
  return ds;
}

DosetStructure build_doset(int d, int n, std::size_t max_elements) {
  if (d < 0 || n < 1) throw DomainError("need d >= 0 and n >= 1");
  if (n > 20 || static_cast<double>(d + 1) * static_cast<double>(1u << std::min(n, 20)) > static_cast<double>(max_elements))
    throw ResourceLimit("P_{" + std::to_string(d) + "," + std::to_string(n) + "} exceeds the element cap of " +
                        std::to_string(max_elements));
  std::vector<PosetElement> elements;
  for (int a = 0; a <= d; ++a)
    for (const auto& s : admissible_sequences(n)) elements.push_back({s, a});
  std::sort(elements.begin(), elements.end(), element_order);
  std::map<PosetElement, int> idx;
  for (std::size_t i = 0; i < elements.size(); ++i) idx[elements[i]] = static_cast<int>(i);
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& [y, t] : classified_covers(elements[i], d)) covers.push_back({static_cast<int>(i), idx.at(y), t});
  return make_doset_structure(d, n, std::move(elements), std::move(covers));
}

int DosetStructure::index_of(const PosetElement& x) const {
  auto it = index_.find(x);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Cover> DosetStructure::covers_of(int i) const {
  std::vector<Cover> out;
  for (const auto& c : covers)
    if (c.lower == i) out.push_back(c);
  return out;
}

Partition shifted_diagram(const PosetElement& x) {
  const int n = x.seq.n();
  std::vector<long> t(n);
  for (int i = 0; i < n; ++i) {
    const int j = i + x.level;
    t[i] = position(x.seq[j % n], n) + 2L * n * (j / n);
  }
  std::vector<int> rows(n);
  for (int r = 0; r < n; ++r) rows[r] = static_cast<int>(t[n - 1 - r] - (n - 1 - r));
  return Partition(rows);
}

PosetElement from_shifted_diagram(const Partition& diagram, int n) {
  if (static_cast<int>(diagram.rows.size()) > n) throw DomainError("shifted diagram has too many rows");
  std::vector<int> entries;
  int level = 0;
  for (int i = 0; i < n; ++i) {
    const int t = diagram.row(n - 1 - i) + i;
    level += t / (2 * n);
    entries.push_back(at_position(t % (2 * n), n));
  }
  return PosetElement{SignedSequence(n, entries), level};
}

namespace {

Partition combine(const Partition& a, const Partition& b, bool take_min, int n) {
  std::vector<int> rows(n);
  for (int r = 0; r < n; ++r) rows[r] = take_min ? std::min(a.row(r), b.row(r)) : std::max(a.row(r), b.row(r));
  return Partition(rows);
}

}  // namespace

PosetElement lattice_meet(const PosetElement& x, const PosetElement& y) {
  const int n = x.seq.n();
  return from_shifted_diagram(combine(shifted_diagram(x), shifted_diagram(y), true, n), n);
}

PosetElement lattice_join(const PosetElement& x, const PosetElement& y) {
  const int n = x.seq.n();
  return from_shifted_diagram(combine(shifted_diagram(x), shifted_diagram(y), false, n), n);
}

bool is_admissible_pair(const PosetElement& x, const PosetElement& y) {
  if (x.level != y.level || !leq(x, y)) return false;
  std::deque<PosetElement> queue{x};
  std::set<PosetElement> seen{x};
  while (!queue.empty()) {
    PosetElement v = queue.front();
    queue.pop_front();
    if (v == y) return true;
    for (const auto& [w, t] : classified_covers(v, v.level)) {
      if (t != CoverType::SameLevelDoset || !leq(w, y) || !seen.insert(w).second) continue;
      queue.push_back(w);
    }
  }
  return false;
}

namespace {

std::string dot_label(const PosetElement& e) {
  std::string s;
  for (char c : format_sequence(e.seq)) {
    if (c == '\\') s += "\\\\";
    else s += c;
  }
  return s + "^(" + std::to_string(e.level) + ")";
}

}  // namespace

std::string hasse_dot(const DosetStructure& ds) {
  std::vector<int> order(ds.elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto &x = ds.elements[a], &y = ds.elements[b];
    return x.level != y.level ? x.level < y.level : x.seq < y.seq;
  });
  std::ostringstream out;
  out << "digraph D_" << ds.d << "_" << ds.n << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i : order) out << "  v" << i << " [label=\"" << dot_label(ds.elements[i]) << "\"];\n";
  for (const auto& c : ds.covers) {
    out << "  v" << c.lower << " -> v" << c.upper;
    if (c.type == CoverType::SameLevelDoset) out << " [style=solid, color=\"black:invis:black\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dlg
