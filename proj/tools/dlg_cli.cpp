#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dlg/serialize.hpp"

using namespace dlg;
namespace fs = std::filesystem;

namespace {

constexpr const char* kBuilderVersion = "dlg-builder-1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string cache_dir;
  std::uint64_t seed = 1;
  std::size_t max_elements = kDefaultMaxElements;
  bool quiet = false;
  bool dot = false;
  bool dual = false;
  std::vector<std::string> schubert;
  std::vector<std::string> args;
};

void note(const Options& o, const std::string& msg) {
  if (!o.quiet) std::cerr << msg << "\n";
}

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
}

void expect_args(const Options& o, std::size_t count, const char* usage) {
  if (o.args.size() != count) throw UsageError(std::string("usage: dlg ") + usage);
}

std::pair<int, int> dn(const std::string& d, const std::string& n) {
  const int dd = to_int(d, "d"), nn = to_int(n, "n");
  if (dd < 0 || nn < 1) throw UsageError("need d >= 0 and n >= 1");
  return {dd, nn};
}

/// A sequence in bar or list notation, or a partition written "(3,3,1)".
SignedSequence parse_alpha(const std::string& text, int n) {
  if (!text.empty() && text.front() == '(') {
    std::vector<int> rows;
    std::string body = text.substr(1, text.find(')') == std::string::npos ? std::string::npos : text.find(')') - 1);
    std::stringstream ss(body);
    for (std::string tok; std::getline(ss, tok, ',');)
      if (!tok.empty()) rows.push_back(to_int(tok, "partition row"));
    return partition_to_sequence(Partition(rows), n);
  }
  return parse_sequence(text, n);
}

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::optional<fs::path> cache_path(const Options& o, const std::string& kind, int d, int n) {
  if (o.cache_dir.empty()) return std::nullopt;
  return fs::path(o.cache_dir) / (kind + "-d" + std::to_string(d) + "-n" + std::to_string(n) + "-" +
                                  fnv_hex(std::string(kBuilderVersion) + ":" + kind) + ".json");
}

std::optional<Json> cache_load(const Options& o, const std::string& kind, int d, int n) {
  auto p = cache_path(o, kind, d, n);
  if (!p || !fs::exists(*p)) return std::nullopt;
  std::ifstream in(*p);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    note(o, "ignoring unreadable cache file " + p->string());
    return std::nullopt;
  }
  return j;
}

void cache_store(const Options& o, const std::string& kind, int d, int n, const Json& j) {
  auto p = cache_path(o, kind, d, n);
  if (!p) return;
  std::error_code ec;
  fs::create_directories(p->parent_path(), ec);
  const fs::path tmp = p->string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
    if (!out) {
      note(o, "could not write cache file " + p->string());
      return;
    }
  }
  fs::rename(tmp, *p, ec);
}

DosetStructure load_doset(const Options& o, int d, int n) {
  if (auto j = cache_load(o, "doset", d, n)) {
    try {
      return doset_from_json(*j);
    } catch (const DomainError&) {
      note(o, "ignoring invalid cached doset");
    }
  }
  auto ds = build_doset(d, n, o.max_elements);
  cache_store(o, "doset", d, n, to_json(ds));
  return ds;
}

NormalFormTable load_normal_forms(const Options& o, int d, int n) {
  if (auto j = cache_load(o, "normal-form", d, n)) {
    try {
      return normal_forms_from_json(*j);
    } catch (const DomainError&) {
      note(o, "ignoring invalid cached normal forms");
    }
  }
  auto t = northeast_normal_form(d, n);
  cache_store(o, "normal-form", d, n, to_json(t));
  return t;
}

StraighteningSystem load_system(const Options& o, int d, int n) {
  KernelOptions k;
  k.seed = o.seed;
  load_doset(o, d, n);
  return straightening_relations(d, n, ideal_quadrics(d, n, k), load_normal_forms(o, d, n));
}

bool json_out(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const Json& j, const std::string& text) {
  if (json_out(o))
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

void require_format(const Options& o, bool dot_allowed) {
  if (o.format == "dot" && !dot_allowed) throw UsageError("--format dot is only available for hasse");
}

std::string element_text(const PosetElement& e) {
  return e.str() + "  " + sequence_to_partition(e.seq).str() + "  rank " +
         std::to_string(poset_rank(sequence_to_partition(e.seq), e.level, e.seq.n()));
}

void cmd_poset(const Options& o) {
  expect_args(o, 2, "poset d n");
  auto [d, n] = dn(o.args[0], o.args[1]);
  const auto ds = load_doset(o, d, n);
  std::ostringstream out;
  out << "P_{" << d << "," << n << "}: " << ds.elements.size() << " elements, " << ds.covers.size() << " covers\n";
  for (std::size_t i = 0; i < ds.elements.size(); ++i) out << "  [" << i << "] " << element_text(ds.elements[i]) << "\n";
  out << "covers:\n";
  for (const auto& c : ds.covers)
    out << "  " << ds.elements[c.lower].str() << " < " << ds.elements[c.upper].str() << "  (type "
        << static_cast<int>(c.type) << ")\n";
  emit(o, to_json(ds), out.str());
}

void cmd_doset(const Options& o) {
  expect_args(o, 2, "doset d n");
  auto [d, n] = dn(o.args[0], o.args[1]);
  const auto ds = load_doset(o, d, n);
  const auto r = ds.doset.require_ranked();
  std::ostringstream out;
  out << "D_{" << d << "," << n << "}: " << ds.elements.size() << " diagonal, " << ds.doset.pairs().size()
      << " off-diagonal pairs\n"
      << "P = " << r.P << ", D = " << r.D << "\n";
  Json pairs = Json::array();
  for (auto [i, j] : ds.doset.pairs()) {
    out << "  (" << format_sequence(ds.elements[i].seq) << ", " << format_sequence(ds.elements[j].seq) << ")^("
        << ds.elements[i].level << ")\n";
    pairs.push_back({i, j});
  }
  Json j = to_json(ds);
  j["pairs"] = pairs;
  j["P"] = r.P;
  j["D"] = r.D;
  emit(o, j, out.str());
}

void cmd_hasse(const Options& o) {
  expect_args(o, 2, "hasse d n [--dot]");
  auto [d, n] = dn(o.args[0], o.args[1]);
  const auto ds = load_doset(o, d, n);
  if (json_out(o)) {
    emit(o, to_json(ds), "");
    return;
  }
  std::cout << hasse_dot(ds);
}

struct HilbertInput {
  FiniteDoset doset;
  std::string name;
};

HilbertInput hilbert_input(const Options& o, const char* usage) {
  if (o.args.size() == 1 && (o.args[0] == "barbell" || o.args[0] == "diamond")) {
    if (!o.schubert.empty()) throw UsageError("--schubert needs d and n");
    return {o.args[0] == "barbell" ? barbell_fixture() : diamond_fixture(), o.args[0]};
  }
  if (o.args.size() != 2) throw UsageError(std::string("usage: dlg ") + usage);
  auto [d, n] = dn(o.args[0], o.args[1]);
  const auto ds = load_doset(o, d, n);
  std::string name = "D_{" + std::to_string(d) + "," + std::to_string(n) + "}";
  if (o.schubert.empty()) {
    if (o.dual) throw UsageError("--dual needs --schubert");
    return {ds.doset, name};
  }
  if (o.schubert.size() != 2) throw UsageError("--schubert takes a sequence and a level");
  const PosetElement x{parse_alpha(o.schubert[0], n), to_int(o.schubert[1], "level")};
  const int idx = ds.index_of(x);
  if (idx < 0) throw DomainError(x.str() + " is not an element of P_{d,n}");
  return {schubert_subdoset(ds.doset, idx, o.dual), name + (o.dual ? " above " : " below ") + x.str()};
}

void cmd_hilbert(const Options& o) {
  const auto in = hilbert_input(o, "hilbert (d n | barbell | diamond) [--schubert alpha a] [--dual]");
  const auto c = chain_count_matrix(in.doset);
  const auto hp = hilbert_polynomial(c);
  std::ostringstream out;
  out << in.name << "\n"
      << "chain counts c[u][v] (rows v, columns u):\n"
      << c.str() << "HP(w) = " << hp.str() << "\n"
      << "dimension: " << proj_dimension(c) << "\n"
      << "degree: " << proj_degree(c).get_str() << "\n";
  Json j = {{"name", in.name},
            {"chains", to_json(c)},
            {"hilbert_polynomial", to_json(hp)},
            {"dimension", proj_dimension(c)},
            {"degree", to_json(proj_degree(c))}};
  emit(o, j, out.str());
}

void cmd_degree(const Options& o) {
  const auto in = hilbert_input(o, "degree (d n | barbell | diamond) [--schubert alpha a] [--dual]");
  const auto c = chain_count_matrix(in.doset);
  emit(o, {{"name", in.name}, {"degree", to_json(proj_degree(c))}, {"dimension", proj_dimension(c)}},
       proj_degree(c).get_str() + "\n");
}

void cmd_pieri(const Options& o) {
  expect_args(o, 2, "pieri alpha n");
  const int n = to_int(o.args[1], "n");
  if (n < 1) throw UsageError("need n >= 1");
  const auto seq = parse_alpha(o.args[0], n);
  if (!is_admissible(seq)) throw DomainError(format_sequence(seq) + " is not admissible");
  const auto r = classical_pieri(sequence_to_partition(seq), n);
  emit(o, to_json(r), r.str() + "\n");
}

void cmd_qpieri(const Options& o) {
  expect_args(o, 4, "qpieri alpha a n d");
  const int a = to_int(o.args[1], "a"), n = to_int(o.args[2], "n"), d = to_int(o.args[3], "d");
  if (n < 1 || a < 0 || d < 0) throw UsageError("need a >= 0, n >= 1, d >= 0");
  const auto seq = parse_alpha(o.args[0], n);
  if (!is_admissible(seq)) throw DomainError(format_sequence(seq) + " is not admissible");
  const auto r = quantum_pieri(QHElement::schubert(sequence_to_partition(seq), n, a), d);
  emit(o, to_json(r), r.str() + "\n");
}

void cmd_schubert_degree(const Options& o) {
  expect_args(o, 3, "schubert-degree alpha d n");
  auto [d, n] = dn(o.args[1], o.args[2]);
  const auto seq = parse_alpha(o.args[0], n);
  if (!is_admissible(seq)) throw DomainError(format_sequence(seq) + " is not admissible");
  const Z deg = schubert_variety_degree(sequence_to_partition(seq), d, n);
  emit(o, {{"alpha", to_json(seq)}, {"d", d}, {"n", n}, {"degree", to_json(deg)}}, deg.get_str() + "\n");
}

void cmd_normal_form(const Options& o) {
  expect_args(o, 2, "normal-form d n");
  auto [d, n] = dn(o.args[0], o.args[1]);
  const auto t = load_normal_forms(o, d, n);
  std::ostringstream out;
  for (const auto& [p, combo] : t.forms) {
    if (combo.size() == 1 && combo.begin()->first == p) continue;
    out << p.str() << " =";
    if (combo.empty()) out << " 0";
    bool first = true;
    for (const auto& [ne, c] : combo) {
      const bool neg = sgn(c) < 0;
      out << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
      if (abs(c) != 1) out << Q(abs(c)).get_str() << "*";
      out << ne.str();
      first = false;
    }
    out << "\n";
  }
  emit(o, to_json(t), out.str());
}

std::string quadric_text(const StraighteningSystem& sys, const Quadric& q) {
  std::ostringstream out;
  bool first = true;
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    const Q& c = it->second;
    const bool neg = sgn(c) < 0;
    out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (abs(c) != 1) out << Q(abs(c)).get_str() << "*";
    out << sys.monomial_label(it->first);
    first = false;
  }
  return first ? "0" : out.str();
}

void cmd_straighten(const Options& o) {
  expect_args(o, 2, "straighten d n");
  auto [d, n] = dn(o.args[0], o.args[1]);
  const auto sys = load_system(o, d, n);
  std::ostringstream out;
  out << sys.relations.size() << " straightening relations for D_{" << d << "," << n << "}\n";
  for (const auto& r : sys.relations) {
    Quadric rest = r.terms;
    rest.erase(r.lead);
    for (auto& [m, c] : rest) c = -c;
    out << sys.monomial_label(r.lead) << " = " << quadric_text(sys, rest) << "\n";
  }
  for (const auto& p : sys.problems) out << "problem: " << p << "\n";
  emit(o, to_json(sys), out.str());
  if (!sys.problems.empty()) throw VerificationFailure("relation set is incomplete");
}

void cmd_verify(const Options& o) {
  expect_args(o, 2, "verify d n");
  auto [d, n] = dn(o.args[0], o.args[1]);
  const auto sys = load_system(o, d, n);
  const auto rep = verify_asl(sys, 20, o.seed + 6);
  emit(o, to_json(rep), rep.str());
  if (!rep.passed()) throw VerificationFailure("ASL verification failed");
}

void cmd_eval_point(const Options& o) {
  expect_args(o, 2, "eval-point n d --seed s");
  const int n = to_int(o.args[0], "n"), d = to_int(o.args[1], "d");
  if (n < 1 || d < 0) throw UsageError("need n >= 1 and d >= 0");
  const auto pt = lagrangian_point(n, d, o.seed);
  std::ostringstream out;
  for (const auto& [p, v] : pt.values) out << p.str() << " = " << v.get_str() << "\n";
  emit(o, to_json(pt), out.str());
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("DLG_CACHE_DIR")) o.cache_dir = env;
  CLI::App app{"Posets, dosets and straightening on the Lagrangian quasimap space"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--cache-dir", o.cache_dir, "Cache directory (env DLG_CACHE_DIR)");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--max-elements", o.max_elements, "Cap on |P_{d,n}|")->check(CLI::PositiveNumber);
  app.add_flag("--quiet", o.quiet, "Suppress diagnostics");

  struct Sub {
    const char* name;
    const char* help;
    void (*run)(const Options&);
  };
  const std::vector<Sub> subs = {
      {"poset", "Elements and covers of P_{d,n}", cmd_poset},
      {"doset", "Admissible pairs of D_{d,n}", cmd_doset},
      {"hasse", "Hasse diagram of P_{d,n}", cmd_hasse},
      {"hilbert", "Chain counts, Hilbert polynomial, dimension, degree", cmd_hilbert},
      {"degree", "Degree of the projective variety", cmd_degree},
      {"pieri", "Classical Pieri product with the hyperplane class", cmd_pieri},
      {"qpieri", "Quantum Pieri product", cmd_qpieri},
      {"schubert-degree", "Degree of a Schubert variety in LQ_d(n)", cmd_schubert_degree},
      {"normal-form", "Northeast normal forms modulo the linear forms", cmd_normal_form},
      {"straighten", "Straightening relations", cmd_straighten},
      {"verify", "Verify the straightening law", cmd_verify},
      {"eval-point", "Coordinates of a random point of LQ_d(n)", cmd_eval_point},
  };
  std::vector<std::pair<CLI::App*, void (*)(const Options&)>> handlers;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("args", o.args, "Positional arguments");
    sub->allow_extras(false);
    if (std::string(s.name) == "hasse") sub->add_flag("--dot", o.dot, "DOT output (default)");
    if (std::string(s.name) == "hilbert" || std::string(s.name) == "degree") {
      sub->add_option("--schubert", o.schubert, "Schubert element: alpha a")->expected(2);
      sub->add_flag("--dual", o.dual, "Use the elements above instead of below");
    }
    handlers.push_back({sub, s.run});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (auto [sub, run] : handlers)
      if (sub->parsed()) {
        require_format(o, sub->get_name() == "hasse");
        run(o);
      }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
