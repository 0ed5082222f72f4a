#include "dlg/straightening.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace dlg {

std::vector<int> row_degrees(int d, int n) {
  if (d < 0 || n < 1) throw DomainError("need d >= 0 and n >= 1");
  const int l = d / n, q = d % n;
  std::vector<int> k(n);
  for (int i = 0; i < n; ++i) k[i] = i < q ? l + 1 : l;
  return k;
}

PolyMatrix PolyMatrix::generic(int d, int n) {
  PolyMatrix X;
  X.d = d;
  X.n = n;
  X.degrees = row_degrees(d, n);
  X.names.push_back("t");
  const auto alpha = alphabet(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j)
      for (int k = 0; k <= X.degrees[i]; ++k)
        X.names.push_back("x[" + std::to_string(i + 1) + "," + std::to_string(alpha[j]) + "]^" + std::to_string(k));
  const int nv = X.nvars();
  X.entries.assign(n, std::vector<Polynomial>(2 * n, Polynomial(nv)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      Polynomial e(nv), tk = Polynomial::constant(nv, 1);
      for (int k = 0; k <= X.degrees[i]; ++k) {
        e += Polynomial::variable(nv, X.var(i, j, k)) * tk;
        tk = tk * Polynomial::variable(nv, 0);
      }
      X.entries[i][j] = std::move(e);
    }
  return X;
}

int PolyMatrix::var(int i, int j, int k) const {
  int v = 1;
  for (int r = 0; r < i; ++r) v += 2 * n * (degrees[r] + 1);
  return v + j * (degrees[i] + 1) + k;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const int k = static_cast<int>(m.size());
  if (k == 0) throw DomainError("empty determinant");
  const int nv = m[0][0].nvars();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(nv);
  do {
    Polynomial term = Polynomial::constant(nv, permutation_sign(perm));
    for (int r = 0; r < k && !term.is_zero(); ++r) term = term * m[r][perm[r]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Polynomial phi_image(const PolyMatrix& X, const std::vector<PluckerIndex>& monomial) {
  Polynomial out = Polynomial::constant(X.nvars(), 1);
  for (const auto& p : monomial) {
    if (p.seq.n() != X.n || p.level < 0 || p.level > X.d) throw DomainError("coordinate " + p.str() + " outside the ring");
    std::vector<std::vector<Polynomial>> minor(X.n);
    for (int i = 0; i < X.n; ++i)
      for (int x : p.seq.entries()) minor[i].push_back(X.entries[i][position(x, X.n)]);
    out = out * determinant(minor).coefficient_of(0, p.level);
  }
  return out;
}

namespace {

using UPoly = std::vector<Z>;  // coefficients in t, lowest first

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

void uadd(UPoly& a, const UPoly& b, int sign) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
}

std::vector<PluckerIndex> all_coordinates(int d, int n) {
  std::vector<PluckerIndex> out;
  for (const auto& s : all_sequences(n))
    for (int a = 0; a <= d; ++a) out.push_back({s, a});
  std::sort(out.begin(), out.end());
  return out;
}

/// Values of phi(p_s^(a)) at a random integer specialization of the matrix.
std::vector<Z> random_phi_values(const std::vector<PluckerIndex>& vars, int d, int n, std::mt19937_64& rng) {
  const auto k = row_degrees(d, n);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<std::vector<UPoly>> X(n, std::vector<UPoly>(2 * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      X[i][j].resize(k[i] + 1);
      for (auto& c : X[i][j]) c = dist(rng);
    }
  std::map<SignedSequence, UPoly> minors;
  std::vector<int> perm(n);
  std::vector<Z> out;
  for (const auto& p : vars) {
    auto it = minors.find(p.seq);
    if (it == minors.end()) {
      UPoly det;
      std::iota(perm.begin(), perm.end(), 0);
      do {
        UPoly term{Z(1)};
        for (int r = 0; r < n; ++r) term = umul(term, X[r][position(p.seq[perm[r]], n)]);
        uadd(det, term, permutation_sign(perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
      it = minors.emplace(p.seq, std::move(det)).first;
    }
    out.push_back(p.level < static_cast<int>(it->second.size()) ? it->second[p.level] : Z(0));
  }
  return out;
}

std::vector<int> column_content(const PluckerIndex& p, int n) {
  std::vector<int> g(2 * n + 1, 0);
  for (int x : p.seq.entries()) g[position(x, n)] = 1;
  g[2 * n] = p.level;
  return g;
}

std::vector<int> add_grades(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

/// Scales a rational vector to coprime integers with positive first entry.
void make_primitive(Quadric& q) {
  if (q.empty()) return;
  Z den = 1, num = 0;
  for (const auto& [m, c] : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (auto& [m, c] : q) {
    c *= den;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  const int s = sgn(q.begin()->second);
  for (auto& [m, c] : q) c = c / Q(num) * s;
}

}  // namespace

QuadricSystem ideal_quadrics(int d, int n, const KernelOptions& options) {
  QuadricSystem sys;
  sys.d = d;
  sys.n = n;
  sys.vars = all_coordinates(d, n);
  const int nv = static_cast<int>(sys.vars.size());
  sys.monomial_count = static_cast<std::size_t>(nv) * (nv + 1) / 2;
  if (sys.monomial_count > options.max_monomials)
    throw ResourceLimit("degree-2 monomial count " + std::to_string(sys.monomial_count) + " exceeds the cap of " +
                        std::to_string(options.max_monomials));
  // The kernel is homogeneous for column content and total level.
  std::vector<std::vector<int>> grade(nv);
  for (int i = 0; i < nv; ++i) grade[i] = column_content(sys.vars[i], n);
  std::map<std::vector<int>, std::vector<MonomialKey>> groups;
  for (int i = 0; i < nv; ++i)
    for (int j = i; j < nv; ++j) groups[add_grades(grade[i], grade[j])].push_back({i, j});
  std::size_t largest = 0;
  for (const auto& [g, ms] : groups) largest = std::max(largest, ms.size());
  const std::size_t npoints = largest + 4;
  std::mt19937_64 rng_a(options.seed), rng_b(options.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::vector<Z>> batch_a, batch_b;
  for (std::size_t k = 0; k < npoints; ++k) {
    batch_a.push_back(random_phi_values(sys.vars, d, n, rng_a));
    batch_b.push_back(random_phi_values(sys.vars, d, n, rng_b));
  }
  auto evaluation = [&](const std::vector<std::vector<Z>>& batch, const std::vector<MonomialKey>& ms) {
    Matrix m;
    for (const auto& pt : batch) {
      Row r;
      for (auto [i, j] : ms) r.push_back(Q(pt[i] * pt[j]));
      m.push_back(std::move(r));
    }
    return m;
  };
  for (const auto& [g, ms] : groups) {
    const int cols = static_cast<int>(ms.size());
    const Matrix a = evaluation(batch_a, ms);
    const Matrix kernel = kernel_basis(a, cols);
    if (rank(evaluation(batch_b, ms), cols) != cols - static_cast<int>(kernel.size()))
      throw InternalError("evaluation rank differs between two random batches");
    for (const auto& v : kernel) {
      Quadric q;
      for (int c = 0; c < cols; ++c)
        if (sgn(v[c])) q[ms[c]] = v[c];
      make_primitive(q);
      sys.relations.push_back(std::move(q));
    }
  }
  if (options.symbolic_checks > 0 && !sys.relations.empty()) {
    const PolyMatrix X = PolyMatrix::generic(d, n);
    const std::size_t total = sys.relations.size();
    const std::size_t checks = std::min(options.symbolic_checks, total);
    for (std::size_t c = 0; c < checks; ++c) {
      const auto& q = sys.relations[c * total / checks];
      Polynomial acc(X.nvars());
      for (const auto& [m, coeff] : q) acc += phi_image(X, {sys.vars[m.first], sys.vars[m.second]}) * coeff;
      if (!acc.is_zero()) throw InternalError("a kernel relation failed symbolic verification");
    }
  }
  return sys;
}

QuasimapData random_quasimap(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5), small(-3, 3), pole(3, 400);
  QuasimapData data;
  data.n = n;
  Matrix S(n, Row(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) S[i][j] = S[j][i] = entry(rng);
  data.X0.assign(n, Row(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) data.X0[i][j] = S[i][n - 1 - j];
  for (int k = 0; k < d; ++k) {
    std::vector<int> w(n, 0);
    while (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; }))
      for (auto& x : w) x = small(rng);
    int lambda = 0;
    while (lambda == 0) lambda = small(rng);
    Matrix R(n, Row(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) R[i][j] = lambda * w[i] * w[n - 1 - j];
    data.residues.push_back(std::move(R));
    Q s;
    do {
      s = pole(rng);
    } while (std::find(data.poles.begin(), data.poles.end(), s) != data.poles.end());
    data.poles.push_back(s);
  }
  return data;
}

namespace {

Q det_q(Matrix m) {
  const int k = static_cast<int>(m.size());
  Q det = 1;
  for (int c = 0; c < k; ++c) {
    int p = c;
    while (p < k && sgn(m[p][c]) == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < k; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const Q f = m[r][c] / m[c][c];
      for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace

LagrangianPoint quasimap_coordinates(const QuasimapData& data) {
  const int n = data.n, d = static_cast<int>(data.poles.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (data.X0[i][j] != data.X0[n - 1 - j][n - 1 - i]) throw DomainError("X0 is not antidiagonal symmetric");
      for (const auto& R : data.residues)
        if (R[i][j] != R[n - 1 - j][n - 1 - i]) throw DomainError("residue is not antidiagonal symmetric");
    }
  // Sample t at 0, -1, ..., -d, away from the poles.
  std::vector<Q> ts;
  for (int k = 0; static_cast<int>(ts.size()) < d + 1; --k)
    if (std::find(data.poles.begin(), data.poles.end(), Q(k)) == data.poles.end()) ts.push_back(k);
  const auto seqs = all_sequences(n);
  std::vector<std::vector<Q>> samples(seqs.size());
  for (const Q& t : ts) {
    Matrix X = data.X0;
    Q clear = 1;
    for (int k = 0; k < d; ++k) {
      const Q inv = 1 / (t - data.poles[k]);
      clear *= t - data.poles[k];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) X[i][j] += data.residues[k][i][j] * inv;
    }
    Matrix Y(n, Row(2 * n, 0));
    for (int i = 0; i < n; ++i) {
      Y[i][i] = 1;
      for (int j = 0; j < n; ++j) Y[i][n + j] = X[i][j];
    }
    for (std::size_t s = 0; s < seqs.size(); ++s) {
      Matrix minor(n, Row(n));
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c) minor[i][c] = Y[i][position(seqs[s][c], n)];
      samples[s].push_back(det_q(std::move(minor)) * clear);
    }
  }
  // Interpolate each coordinate through the samples.
  Matrix vander(d + 1, Row(2 * (d + 1), 0));
  for (int r = 0; r <= d; ++r) {
    Q pw = 1;
    for (int c = 0; c <= d; ++c, pw *= ts[r]) vander[r][c] = pw;
    vander[r][d + 1 + r] = 1;
  }
  const Echelon inv = row_reduce(vander, 2 * (d + 1));
  LagrangianPoint pt;
  pt.n = n;
  pt.d = d;
  for (std::size_t s = 0; s < seqs.size(); ++s)
    for (int a = 0; a <= d; ++a) {
      Q c = 0;
      for (int r = 0; r <= d; ++r) c += inv.rows[a][d + 1 + r] * samples[s][r];
      pt.values[{seqs[s], a}] = c;
    }
  return pt;
}

LagrangianPoint lagrangian_point(int n, int d, std::uint64_t seed) {
  return quasimap_coordinates(random_quasimap(n, d, seed));
}

Q evaluate(const LinearFunctional& f, const LagrangianPoint& pt) {
  Q acc = 0;
  for (const auto& [s, c] : f.terms()) acc += c * pt.at({SignedSequence(f.n(), s), f.level()});
  return acc;
}

std::string StraighteningSystem::var_label(int v) const {
  const auto& it = vars[v].item;
  const auto &lo = ds.elements[it.lower], &hi = ds.elements[it.upper];
  if (it.diagonal()) return "p[" + format_sequence(lo.seq) + "]^(" + std::to_string(lo.level) + ")";
  return "p[" + format_sequence(lo.seq) + "," + format_sequence(hi.seq) + "]^(" + std::to_string(lo.level) + ")";
}

std::string StraighteningSystem::monomial_label(const MonomialKey& m) const {
  return m.first == m.second ? var_label(m.first) + "^2" : var_label(m.first) + "*" + var_label(m.second);
}

int StraighteningSystem::var_of(const PluckerIndex& ne) const {
  auto it = var_index_.find(ne);
  if (it == var_index_.end()) throw DomainError(ne.str() + " is not a Northeast coordinate");
  return it->second;
}

bool StraighteningSystem::is_standard(const MonomialKey& m) const {
  const auto &e = vars[m.first].item, &f = vars[m.second].item;
  if (m.first == m.second) return e.diagonal();
  return doset_less(ds.doset, e, f) || doset_less(ds.doset, f, e);
}

std::vector<PosetElement> StraighteningSystem::endpoints(int first, int second) const {
  const auto &e = vars[first].item, &f = vars[second].item;
  return {ds.elements[e.lower], ds.elements[e.upper], ds.elements[f.lower], ds.elements[f.upper]};
}

bool StraighteningSystem::monomial_less(const MonomialKey& a, const MonomialKey& b) const { return a < b; }

namespace {

std::vector<int> var_grade(const PluckerIndex& p, int n, int d) {
  Weight w = weight_of(p.seq.entries(), n, p.level, d);
  std::vector<int> g = w.h;
  g.push_back(p.level);
  return g;
}

}  // namespace

StraighteningSystem straightening_relations(int d, int n, const QuadricSystem& quadrics,
                                            const NormalFormTable& normal_forms) {
  StraighteningSystem sys;
  sys.d = d;
  sys.n = n;
  sys.ds = build_doset(d, n);
  const FiniteDoset& D = sys.ds.doset;
  // Variables in a linear extension of the doset order.
  for (const auto& item : doset_items(D)) {
    const auto &lo = sys.ds.elements[item.lower], &hi = sys.ds.elements[item.upper];
    sys.vars.push_back({item, {northeast_representative({lo.seq, hi.seq}), lo.level}});
  }
  for (std::size_t v = 0; v < sys.vars.size(); ++v) sys.var_index_[sys.vars[v].representative] = static_cast<int>(v);
  const int nv = static_cast<int>(sys.vars.size());

  std::vector<std::vector<int>> grade(nv);
  for (int v = 0; v < nv; ++v) grade[v] = var_grade(sys.vars[v].representative, n, d);
  std::map<std::vector<int>, std::vector<MonomialKey>> monomials;
  for (int i = 0; i < nv; ++i)
    for (int j = i; j < nv; ++j) monomials[add_grades(grade[i], grade[j])].push_back({i, j});

  // Substitute the Northeast normal form into each kernel element.
  std::map<std::vector<int>, std::vector<Quadric>> rows;
  for (const auto& q : quadrics.relations) {
    std::map<std::vector<int>, Quadric> parts;
    for (const auto& [m, c] : q) {
      for (const auto& [x, a] : normal_forms.of(quadrics.vars[m.first]))
        for (const auto& [y, b] : normal_forms.of(quadrics.vars[m.second])) {
          const int i = sys.var_of(x), j = sys.var_of(y);
          const MonomialKey key = monomial_key(i, j);
          Quadric& part = parts[add_grades(grade[i], grade[j])];
          part[key] += c * a * b;
          if (sgn(part[key]) == 0) part.erase(key);
        }
    }
    for (auto& [g, part] : parts)
      if (!part.empty()) rows[g].push_back(std::move(part));
  }

  for (const auto& [g, ms] : monomials) {
    std::vector<MonomialKey> cols;
    for (auto it = ms.rbegin(); it != ms.rend(); ++it)
      if (!sys.is_standard(*it)) cols.push_back(*it);
    const int nonstandard = static_cast<int>(cols.size());
    for (auto it = ms.rbegin(); it != ms.rend(); ++it)
      if (sys.is_standard(*it)) cols.push_back(*it);
    std::map<MonomialKey, int> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = static_cast<int>(c);
    Matrix mat;
    for (const auto& q : rows[g]) {
      Row r(cols.size(), 0);
      for (const auto& [m, c] : q) r[col_of.at(m)] = c;
      mat.push_back(std::move(r));
    }
    const Echelon e = row_reduce(std::move(mat), static_cast<int>(cols.size()));
    std::vector<bool> covered(nonstandard, false);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      const int p = e.pivots[r];
      if (p >= nonstandard) {
        sys.problems.push_back("standard monomials are dependent: relation led by " + sys.monomial_label(cols[p]));
        continue;
      }
      covered[p] = true;
      QuadraticRelation rel;
      rel.lead = cols[p];
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (sgn(e.rows[r][c])) rel.terms[cols[c]] = e.rows[r][c];
      sys.relations.push_back(std::move(rel));
    }
    for (int c = 0; c < nonstandard; ++c)
      if (!covered[c]) sys.problems.push_back("no straightening relation for " + sys.monomial_label(cols[c]));
  }
  std::sort(sys.relations.begin(), sys.relations.end(),
            [](const QuadraticRelation& a, const QuadraticRelation& b) { return a.lead < b.lead; });
  return sys;
}

StraighteningSystem straightening_relations(int d, int n, const KernelOptions& options) {
  return straightening_relations(d, n, ideal_quadrics(d, n, options), northeast_normal_form(d, n));
}

Quadric straighten(const MonomialKey& m0, const StraighteningSystem& sys) {
  std::map<MonomialKey, const QuadraticRelation*> by_lead;
  for (const auto& r : sys.relations) by_lead[r.lead] = &r;
  Quadric current{{monomial_key(m0.first, m0.second), Q(1)}};
  for (int guard = 0; guard < 64; ++guard) {
    auto bad = std::find_if(current.begin(), current.end(), [&](const auto& t) { return !sys.is_standard(t.first); });
    if (bad == current.end()) return current;
    const MonomialKey m = bad->first;
    const Q c = bad->second;
    auto it = by_lead.find(m);
    if (it == by_lead.end()) throw DomainError("no relation for " + sys.monomial_label(m));
    for (const auto& [t, a] : it->second->terms) {
      Q& slot = current[t];
      slot -= c * a;
      if (sgn(slot) == 0) current.erase(t);
    }
  }
  throw InternalError("straightening did not terminate");
}

Q evaluate(const Quadric& q, const StraighteningSystem& sys, const LagrangianPoint& pt) {
  Q acc = 0;
  for (const auto& [m, c] : q) acc += c * pt.at(sys.vars[m.first].representative) * pt.at(sys.vars[m.second].representative);
  return acc;
}

bool AslReport::passed() const {
  return basis_ok && lex_condition_ok && two_term_condition_ok && evaluation_ok && hilbert_count_ok && failures.empty();
}

std::string AslReport::str() const {
  std::ostringstream out;
  auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
  out << "ASL verification for D_{" << d << "," << n << "}\n"
      << "  doset variables:           " << variables << "\n"
      << "  standard monomials (deg 2): " << standard_monomials << "\n"
      << "  non-standard monomials:    " << nonstandard_monomials << "\n"
      << "  straightening relations:   " << relations << "\n"
      << "  HP(2):                     " << hilbert_at_two.get_str() << "\n"
      << "  (a) standard basis:        " << mark(basis_ok) << "\n"
      << "  (b) lexicographic order:   " << mark(lex_condition_ok) << "\n"
      << "  (c) two leading terms:     " << mark(two_term_condition_ok) << "\n"
      << "  (d) vanishing at " << evaluation_points << " points: " << mark(evaluation_ok) << "\n"
      << "  standard count = HP(2):    " << mark(hilbert_count_ok) << "\n";
  for (const auto& f : failures) out << "  failure: " << f << "\n";
  return out.str();
}

namespace {

bool strictly_below(const PosetElement& x, const PosetElement& y) { return !(x == y) && leq(x, y); }

/// Orders the two factors of a standard monomial so its endpoints increase.
std::vector<PosetElement> standard_endpoints(const StraighteningSystem& sys, const MonomialKey& m) {
  const auto& e = sys.vars[m.first].item;
  const auto& f = sys.vars[m.second].item;
  if (m.first == m.second || doset_less(sys.ds.doset, e, f)) return sys.endpoints(m.first, m.second);
  return sys.endpoints(m.second, m.first);
}

bool lex_smaller(const std::vector<PosetElement>& s, const std::vector<PosetElement>& m) {
  for (std::size_t l = 0; l < s.size(); ++l)
    if (!(s[l] == m[l])) return strictly_below(s[l], m[l]);
  return false;
}

}  // namespace

AslReport verify_asl(const StraighteningSystem& sys, int points, std::uint64_t seed) {
  AslReport rep;
  rep.d = sys.d;
  rep.n = sys.n;
  rep.variables = sys.vars.size();
  rep.relations = sys.relations.size();
  rep.failures = sys.problems;
  const int nv = static_cast<int>(sys.vars.size());
  std::vector<MonomialKey> standard;
  for (int i = 0; i < nv; ++i)
    for (int j = i; j < nv; ++j) (sys.is_standard({i, j}) ? standard.push_back({i, j}) : (void)++rep.nonstandard_monomials);
  rep.standard_monomials = standard.size();

  // (a) one relation per non-standard monomial, and the standard monomials
  // stay independent as functions on LQ_d(n).
  std::map<std::vector<int>, std::vector<MonomialKey>> blocks;
  for (const auto& m : standard) {
    std::vector<int> g = var_grade(sys.vars[m.first].representative, sys.n, sys.d);
    const auto h = var_grade(sys.vars[m.second].representative, sys.n, sys.d);
    for (std::size_t k = 0; k < g.size(); ++k) g[k] += h[k];
    blocks[g].push_back(m);
  }
  std::size_t largest = 0;
  for (const auto& [g, ms] : blocks) largest = std::max(largest, ms.size());
  const int npts = std::max<int>(points, static_cast<int>(largest) + 3);
  std::vector<LagrangianPoint> pts;
  for (int k = 0; k < npts; ++k) pts.push_back(lagrangian_point(sys.n, sys.d, seed + 7919ULL * k));
  bool independent = true;
  for (const auto& [g, ms] : blocks) {
    Matrix m;
    for (const auto& pt : pts) {
      Row r;
      for (const auto& key : ms) r.push_back(evaluate(Quadric{{key, Q(1)}}, sys, pt));
      m.push_back(std::move(r));
    }
    if (rank(m, static_cast<int>(ms.size())) != static_cast<int>(ms.size())) {
      independent = false;
      rep.failures.push_back("standard monomials of one weight are dependent on LQ_d(n)");
    }
  }
  rep.basis_ok = sys.problems.empty() && rep.relations == rep.nonstandard_monomials && independent;

  // (b) and (c).
  rep.lex_condition_ok = true;
  rep.two_term_condition_ok = true;
  std::map<std::pair<int, int>, int> var_of_item;
  for (int v = 0; v < nv; ++v) var_of_item[{sys.vars[v].item.lower, sys.vars[v].item.upper}] = v;
  for (const auto& rel : sys.relations) {
    bool some_order = false;
    for (const auto& [x, y] : {rel.lead, MonomialKey{rel.lead.second, rel.lead.first}}) {
      const auto ends = sys.endpoints(x, y);
      bool all = true;
      for (const auto& [t, c] : rel.terms)
        if (!(t == rel.lead) && !lex_smaller(standard_endpoints(sys, t), ends)) all = false;
      some_order = some_order || all;
    }
    if (!some_order) {
      rep.lex_condition_ok = false;
      rep.failures.push_back("lexicographic condition fails for " + sys.monomial_label(rel.lead));
    }
    const auto& e = sys.vars[rel.lead.first].item;
    const auto& f = sys.vars[rel.lead.second].item;
    std::vector<int> ends{e.lower, e.upper, f.lower, f.upper};
    std::sort(ends.begin(), ends.end(), [&](int a, int b) { return sys.ds.doset.less(a, b); });
    std::sort(ends.begin(), ends.end());
    bool chain = false;
    do {
      chain = sys.ds.doset.leq(ends[0], ends[1]) && sys.ds.doset.leq(ends[1], ends[2]) &&
              sys.ds.doset.leq(ends[2], ends[3]);
    } while (!chain && std::next_permutation(ends.begin(), ends.end()));
    if (!chain) continue;
    auto a = var_of_item.find({ends[0], ends[1]});
    auto b = var_of_item.find({ends[2], ends[3]});
    bool ok = a != var_of_item.end() && b != var_of_item.end();
    if (ok) {
      auto it = rel.terms.find(monomial_key(a->second, b->second));
      ok = it != rel.terms.end() && abs(it->second) == 1 && sys.is_standard(it->first);
    }
    if (!ok) {
      rep.two_term_condition_ok = false;
      rep.failures.push_back("two-term condition fails for " + sys.monomial_label(rel.lead));
    }
  }

  // (d).
  rep.evaluation_points = points;
  rep.evaluation_ok = true;
  for (int k = 0; k < points && rep.evaluation_ok; ++k)
    for (const auto& rel : sys.relations)
      if (sgn(evaluate(rel.terms, sys, pts[k])) != 0) {
        rep.evaluation_ok = false;
        rep.failures.push_back("relation led by " + sys.monomial_label(rel.lead) + " is nonzero at a Lagrangian point");
        break;
      }

  const auto hp = hilbert_polynomial(chain_count_matrix(sys.ds.doset));
  const Q at_two = hp(Q(2));
  rep.hilbert_at_two = at_two.get_num();
  rep.hilbert_count_ok = at_two.get_den() == 1 && at_two == Q(static_cast<long>(rep.standard_monomials));
  return rep;
}

}  // namespace dlg
