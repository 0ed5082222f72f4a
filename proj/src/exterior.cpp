#include "dlg/exterior.hpp"

#include <algorithm>

#include "dlg/linalg.hpp"

namespace dlg {

int sort_with_sign(std::vector<int>& s) {
  int sign = 1;
  // Insertion sort, one sign flip per adjacent transposition.
  for (std::size_t i = 1; i < s.size(); ++i)
    for (std::size_t j = i; j > 0 && s[j - 1] >= s[j]; --j) {
      if (s[j - 1] == s[j]) return 0;
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] == s[i]) return 0;
  return sign;
}

namespace {

void check_entries(const std::vector<int>& e, int n, std::size_t k) {
  if (e.size() != k) throw DomainError("wrong number of factors");
  for (int x : e)
    if (x == 0 || x < -n || x > n) throw DomainError("index " + std::to_string(x) + " outside <n>");
}

void accumulate(std::map<Subset, Q>& terms, std::vector<int> entries, const Q& c) {
  const int s = sort_with_sign(entries);
  if (s == 0 || sgn(c) == 0) return;
  Q& slot = terms[entries];
  slot += s * c;
  if (sgn(slot) == 0) terms.erase(entries);
}

std::string render(const std::map<Subset, Q>& terms, int n, const std::string& symbol) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms) {
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const Q a = abs(c);
    if (a != 1) out += a.get_str() + "*";
    out += symbol + "[" + format_sequence(s, n) + "]";
  }
  return out;
}

}  // namespace

MultiVector MultiVector::basis(int n, const std::vector<int>& entries) {
  MultiVector v(n, static_cast<int>(entries.size()));
  v.add(entries, 1);
  return v;
}

Q MultiVector::coefficient(const Subset& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Q(0) : it->second;
}

void MultiVector::add(std::vector<int> entries, const Q& c) {
  check_entries(entries, n_, k_);
  accumulate(terms_, std::move(entries), c);
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
  if (o.n_ != n_ || o.k_ != k_) throw DomainError("adding multivectors of different shape");
  for (const auto& [s, c] : o.terms_) accumulate(terms_, s, c);
  return *this;
}

std::string MultiVector::str(const std::string& symbol) const { return render(terms_, n_, symbol); }

Q LinearFunctional::coefficient(const Subset& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Q(0) : it->second;
}

void LinearFunctional::add(std::vector<int> entries, const Q& c) {
  check_entries(entries, n_, k_);
  accumulate(terms_, std::move(entries), c);
}

std::string LinearFunctional::str(const std::string& symbol) const { return render(terms_, n_, symbol); }

MultiVector contract_omega(const MultiVector& v) {
  if (v.k() < 2) throw DomainError("contraction needs degree at least 2");
  MultiVector out(v.n(), v.k() - 2);
  for (const auto& [s, c] : v.terms()) {
    for (std::size_t p = 0; p < s.size() && s[p] < 0; ++p) {
      auto q = std::find(s.begin(), s.end(), -s[p]);
      if (q == s.end()) continue;
      const std::size_t qi = static_cast<std::size_t>(q - s.begin());
      // Moving s[p] to slot 0 costs p swaps, then its partner to slot 1 costs qi-1.
      const int sign = (p + qi - 1) % 2 ? -1 : 1;
      std::vector<int> rest;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != p && j != qi) rest.push_back(s[j]);
      out.add(rest, sign * c);
    }
  }
  return out;
}

LinearFunctional wedge_omega(const LinearFunctional& phi) {
  LinearFunctional out(phi.n(), phi.k() + 2, phi.level());
  for (const auto& [s, c] : phi.terms())
    for (int i = 1; i <= phi.n(); ++i) {
      if (std::binary_search(s.begin(), s.end(), i) || std::binary_search(s.begin(), s.end(), -i)) continue;
      std::vector<int> e{-i, i};
      e.insert(e.end(), s.begin(), s.end());
      out.add(e, c);
    }
  return out;
}

Q pairing(const LinearFunctional& phi, const MultiVector& v) {
  if (phi.n() != v.n() || phi.k() != v.k()) throw DomainError("pairing of mismatched degrees");
  Q acc = 0;
  for (const auto& [s, c] : phi.terms()) acc += c * v.coefficient(s);
  return acc;
}

namespace {

std::vector<Subset> subsets_of_alphabet(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > 2 * n) return out;
  const auto alpha = alphabet(n);
  std::vector<bool> pick(2 * n, false);
  std::fill(pick.begin() + (2 * n - k), pick.end(), true);
  do {
    Subset s;
    for (int p = 0; p < 2 * n; ++p)
      if (pick[p]) s.push_back(alpha[p]);
    out.push_back(s);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> subsets_of_range(int size, int k) {
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(size, false);
  std::fill(pick.begin() + (size - k), pick.end(), true);
  do {
    std::vector<int> s;
    for (int p = 0; p < size; ++p)
      if (pick[p]) s.push_back(p + 1);
    out.push_back(s);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LinearFunctional> linear_forms_L(int d, int n) {
  std::vector<LinearFunctional> out;
  if (n < 2) return out;
  for (int a = 0; a <= d; ++a)
    for (const auto& beta : subsets_of_alphabet(n, n - 2)) {
      LinearFunctional e(n, n - 2, a);
      e.add(beta, 1);
      out.push_back(wedge_omega(e));
    }
  return out;
}

std::string Weight::str() const {
  std::string out = std::to_string(H) + "H";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    out += (h[i] > 0 ? " + h" : " - h") + std::to_string(i + 1);
  }
  return out;
}

Weight weight_of(const Subset& entries, int n, int level, int d) {
  Weight w;
  w.H = d - 2 * level;
  w.h.assign(n, 0);
  for (int x : entries) {
    const bool partner = std::find(entries.begin(), entries.end(), -x) != entries.end();
    if (!partner) w.h[std::abs(x) - 1] += x > 0 ? 1 : -1;
  }
  return w;
}

bool Matching::is_descending() const {
  for (auto [a, b] : pairs)
    if (b >= a) return false;
  return true;
}

Matching canonical_matching(const std::vector<int>& alpha, int m) {
  std::vector<int> sorted = alpha, comp;
  std::sort(sorted.begin(), sorted.end());
  for (int x = 1; x <= 2 * m; ++x)
    if (!std::binary_search(sorted.begin(), sorted.end(), x)) comp.push_back(x);
  if (sorted.size() != static_cast<std::size_t>(m) || comp.size() != static_cast<std::size_t>(m))
    throw DomainError("alpha must be an m-subset of [2m]");
  Matching M;
  for (int i = 0; i < m; ++i) M.pairs[sorted[i]] = comp[i];
  return M;
}

Subset zero_weight_sequence(const std::vector<int>& alpha_plus) {
  Subset s;
  for (int x : alpha_plus) s.push_back(-x);
  s.insert(s.end(), alpha_plus.begin(), alpha_plus.end());
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

std::vector<std::vector<int>> hypercube(const std::vector<int>& alpha, const Matching& M, int m,
                                        std::vector<int>& signs) {
  std::vector<int> sorted = alpha;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> hit(2 * m + 1, false);
  for (int x : sorted) {
    if (x < 1 || x > 2 * m || hit[x]) throw DomainError("alpha must be an m-subset of [2m]");
    hit[x] = true;
  }
  if (M.pairs.size() != sorted.size()) throw DomainError("matching has the wrong size");
  std::vector<bool> image(2 * m + 1, false);
  for (int x : sorted) {
    auto it = M.pairs.find(x);
    if (it == M.pairs.end()) throw DomainError("matching misses an element of alpha");
    const int y = it->second;
    if (y < 1 || y > 2 * m || hit[y] || image[y]) throw DomainError("matching is not a bijection onto the complement");
    image[y] = true;
  }
  std::vector<std::vector<int>> out;
  signs.clear();
  for (unsigned I = 0; I < (1u << m); ++I) {
    std::vector<int> beta;
    int parity = 0;
    for (int i = 0; i < m; ++i) {
      if ((I >> i) & 1u) {
        beta.push_back(M.pairs.at(sorted[i]));
        ++parity;
      } else {
        beta.push_back(sorted[i]);
      }
    }
    std::sort(beta.begin(), beta.end());
    out.push_back(beta);
    signs.push_back(parity % 2 ? -1 : 1);
  }
  return out;
}

}  // namespace

MultiVector kernel_element(const std::vector<int>& alpha, const Matching& matching, int m) {
  std::vector<int> signs;
  const auto betas = hypercube(alpha, matching, m, signs);
  MultiVector K(2 * m, 2 * m);
  for (std::size_t j = 0; j < betas.size(); ++j) K.add(zero_weight_sequence(betas[j]), signs[j]);
  return K;
}

MultiVector slice_kernel_element(const SignedSequence& a) {
  const int n = a.n();
  std::vector<int> zero_indices, fixed, alpha;
  for (int i = 1; i <= n; ++i)
    if (a.contains(i) == a.contains(-i)) zero_indices.push_back(i);
  for (int x : a.entries())
    if (!a.contains(-x)) fixed.push_back(x);
  const int m = static_cast<int>(zero_indices.size()) / 2;
  for (int k = 0; k < 2 * m; ++k)
    if (a.contains(zero_indices[k])) alpha.push_back(k + 1);
  MultiVector K(n, n);
  if (m == 0) {
    K.add(a.entries(), 1);
    return K;
  }
  std::vector<int> signs;
  const auto betas = hypercube(alpha, canonical_matching(alpha, m), m, signs);
  for (std::size_t j = 0; j < betas.size(); ++j) {
    std::vector<int> block;
    for (int k : betas[j]) {
      block.push_back(-zero_indices[k - 1]);
      block.push_back(zero_indices[k - 1]);
    }
    std::sort(block.begin(), block.end());
    std::vector<int> e = fixed;
    e.insert(e.end(), block.begin(), block.end());
    K.add(e, signs[j]);
  }
  return K;
}

int zero_weight_dimension(int m) {
  if (m < 1) throw DomainError("m must be positive");
  const auto sources = subsets_of_range(2 * m, m);
  const auto targets = subsets_of_range(2 * m, m - 1);
  std::map<Subset, int> row_of;
  for (std::size_t r = 0; r < targets.size(); ++r) row_of[zero_weight_sequence(targets[r])] = static_cast<int>(r);
  Matrix mat(targets.size(), Row(sources.size(), 0));
  for (std::size_t c = 0; c < sources.size(); ++c) {
    const MultiVector image = contract_omega(MultiVector::basis(2 * m, zero_weight_sequence(sources[c])));
    for (const auto& [s, coeff] : image.terms()) mat[row_of.at(s)][c] = coeff;
  }
  return static_cast<int>(sources.size()) - rank(mat, static_cast<int>(sources.size()));
}

std::string PluckerIndex::str() const { return "p[" + format_sequence(seq) + "]^(" + std::to_string(level) + ")"; }

const std::map<PluckerIndex, Q>& NormalFormTable::of(const PluckerIndex& p) const {
  auto it = forms.find(p);
  if (it == forms.end()) throw DomainError("no normal form for " + p.str());
  return it->second;
}

namespace {

std::vector<int> positive_part(const SignedSequence& s) {
  std::vector<int> out;
  for (int x : s.entries())
    if (x > 0) out.push_back(x);
  return out;
}

/// Non-Northeast coordinates first, each group ordered by positive part.
bool column_order(const SignedSequence& a, const SignedSequence& b) {
  const bool na = is_northeast(a), nb = is_northeast(b);
  if (na != nb) return !na;
  auto pa = positive_part(a), pb = positive_part(b);
  return pa != pb ? pa < pb : a < b;
}

/// Eliminates the forms over the given columns and records normal forms.
void eliminate(const std::vector<PluckerIndex>& cols, const std::vector<const LinearFunctional*>& forms,
               NormalFormTable& table) {
  std::map<PluckerIndex, int> col_of;
  for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<int>(j);
  Matrix mat;
  for (const auto* f : forms) {
    Row row(cols.size(), 0);
    for (const auto& [s, c] : f->terms()) row[col_of.at({SignedSequence(f->n(), s), f->level()})] = c;
    mat.push_back(std::move(row));
  }
  const int ncols = static_cast<int>(cols.size());
  const Echelon e = row_reduce(std::move(mat), ncols);
  int non_ne = 0;
  for (const auto& c : cols)
    if (!is_northeast(c.seq)) ++non_ne;
  if (static_cast<int>(e.pivots.size()) != non_ne)
    throw InternalError("rank of L on a slice differs from the number of non-Northeast coordinates");
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] != static_cast<int>(r)) throw InternalError("a Northeast coordinate became a pivot");
    std::map<PluckerIndex, Q> combo;
    for (int j = non_ne; j < ncols; ++j)
      if (sgn(e.rows[r][j])) combo[cols[j]] = -e.rows[r][j];
    table.forms[cols[r]] = std::move(combo);
  }
  for (int j = non_ne; j < ncols; ++j) table.forms[cols[j]] = {{cols[j], Q(1)}};
}

}  // namespace

NormalFormTable northeast_normal_form(int d, int n) {
  NormalFormTable table;
  table.d = d;
  table.n = n;
  const auto forms = linear_forms_L(d, n);
  std::map<std::pair<int, Weight>, std::vector<PluckerIndex>> slices;
  for (const auto& s : all_sequences(n))
    for (int a = 0; a <= d; ++a) slices[{a, weight_of(s.entries(), n, a, d)}].push_back({s, a});
  std::map<std::pair<int, Weight>, std::vector<const LinearFunctional*>> slice_forms;
  for (const auto& f : forms) {
    std::optional<Weight> w;
    for (const auto& [s, c] : f.terms()) {
      Weight ws = weight_of(s, n, f.level(), d);
      if (w && !(*w == ws)) throw InternalError("linear form is not a weight vector");
      w = ws;
    }
    slice_forms[{f.level(), *w}].push_back(&f);
  }
  for (auto& [key, cols] : slices) {
    std::sort(cols.begin(), cols.end(), [](const PluckerIndex& x, const PluckerIndex& y) {
      return column_order(x.seq, y.seq);
    });
    eliminate(cols, slice_forms[key], table);
  }
  return table;
}

NormalFormTable northeast_normal_form_unsliced(int d, int n) {
  NormalFormTable table;
  table.d = d;
  table.n = n;
  const auto forms = linear_forms_L(d, n);
  std::vector<PluckerIndex> cols;
  for (int a = 0; a <= d; ++a)
    for (const auto& s : all_sequences(n)) cols.push_back({s, a});
  std::sort(cols.begin(), cols.end(), [](const PluckerIndex& x, const PluckerIndex& y) {
    const bool nx = is_northeast(x.seq), ny = is_northeast(y.seq);
    if (nx != ny) return !nx;
    return x.level != y.level ? x.level < y.level : column_order(x.seq, y.seq);
  });
  std::vector<const LinearFunctional*> ptrs;
  for (const auto& f : forms) ptrs.push_back(&f);
  eliminate(cols, ptrs, table);
  return table;
}

}  // namespace dlg
