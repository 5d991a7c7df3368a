#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "sgqft/canonical.hpp"
#include "sgqft/enumerate.hpp"
#include "sgqft/hae.hpp"
#include "sgqft/json_io.hpp"
#include "sgqft/operators.hpp"
#include "sgqft/realization.hpp"
#include "sgqft/transforms.hpp"
#include "sgqft/verify.hpp"

namespace sgqft::cli {

namespace {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  int labels = 1;
  std::string seed_file;
  int genus = -1;
  std::string legs = "0";
  std::string graph;
  int i = 1, j = 1;
  std::string epsilon, kappa;
  int bound = 4;
  int npoints = 0;
  std::string emit = "holo";
  std::string suite = "all";
  std::string op;
};

int genus_cap() {
  const char* env = std::getenv("SGQFT_GENUS_CAP");
  if (!env || !*env) return 4;
  try {
    std::size_t used = 0;
    int cap = std::stoi(env, &used);
    if (used != std::string(env).size() || cap < 0) throw std::invalid_argument(env);
    return cap;
  } catch (const std::exception&) {
    throw ValidationError(std::string("SGQFT_GENUS_CAP must be a non-negative integer, got '") + env + "'");
  }
}

void check_genus(int g) {
  if (g < 0) throw ValidationError("--genus is required and must be non-negative");
  int cap = genus_cap();
  if (g > cap)
    throw ValidationError("genus " + std::to_string(g) + " exceeds SGQFT_GENUS_CAP=" + std::to_string(cap));
}

void check_bound(int bound) {
  if (bound < 1) throw ValidationError("--bound must be at least 1");
  check_genus((bound + 2) / 2);
}

// split on sep, ignoring separators inside [...]
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == sep && depth == 0)
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

std::vector<int> parse_legs(const Options& o) {
  std::vector<int> legs;
  for (const std::string& part : split_top(o.legs, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size() || v < 0) throw std::invalid_argument(part);
      legs.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("--legs must be a non-negative integer or a comma list, got '" + o.legs + "'");
    }
  }
  if (static_cast<int>(legs.size()) != o.labels)
    throw ValidationError("--legs needs " + std::to_string(o.labels) + " entries for --labels " +
                          std::to_string(o.labels));
  return legs;
}

TheoryIndex index_of(const Options& o) {
  check_genus(o.genus);
  TheoryIndex idx{o.genus, parse_legs(o)};
  if (!is_stable(idx)) throw ValidationError("unstable type: 2g - 2 + n must be positive");
  return idx;
}

std::string read_source(const std::string& path) {
  if (path.empty()) throw ValidationError("--graph is required");
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(what + " is not valid JSON: " + e.what());
  }
}

void check_graph_labels(const StableGraph& g, int labels) {
  auto ok = [&](int l) { return labels == 1 ? l == 0 : (l >= 1 && l <= labels); };
  std::string want = labels == 1 ? "unlabelled" : "labelled 1.." + std::to_string(labels);
  for (const Edge& e : g.edges)
    if (!ok(e.label_a) || !ok(e.label_b)) throw ValidationError("graph edges must be " + want);
  for (const Leg& l : g.legs)
    if (!ok(l.label)) throw ValidationError("graph legs must be " + want);
  int cap = genus_cap();
  if (graph_genus(g) > cap)
    throw ValidationError("graph genus " + std::to_string(graph_genus(g)) + " exceeds SGQFT_GENUS_CAP=" +
                          std::to_string(cap));
}

// a single graph object or a GraphSum array
RationalSum load_graphs(const Options& o) {
  Json j = parse_json(read_source(o.graph), "graph input");
  RationalSum s;
  try {
    if (j.is_array()) {
      for (const Json& t : j) {
        if (!t.is_object() || !t.contains("coefficient") || !t["coefficient"].is_string() || !t.contains("graph"))
          throw std::invalid_argument("graph sum entries need \"coefficient\" and \"graph\"");
        StableGraph g = graph_from_json(t["graph"]);
        check_graph_labels(g, o.labels);
        s.add(g, parse_rational(t["coefficient"].get<std::string>()));
      }
    } else {
      StableGraph g = graph_from_json(j);
      check_graph_labels(g, o.labels);
      s.add(g, Rational(1));
    }
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  return s;
}

Poly parse_poly(const std::string& text, const std::string& flag) {
  try {
    return Poly::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(flag + ": " + e.what());
  }
}

KappaMatrix kappa_matrix(const Options& o) {
  if (o.kappa.empty()) return o.labels == 1 ? scalar_kappa(Poly(Symbol::kappa())) : symbolic_kappa(o.labels);
  if (o.labels == 1) return scalar_kappa(parse_poly(o.kappa, "--kappa"));
  auto rows = split_top(o.kappa, ';');
  if (static_cast<int>(rows.size()) != o.labels)
    throw ValidationError("--kappa needs " + std::to_string(o.labels) + " rows separated by ';'");
  KappaMatrix m;
  for (const std::string& row : rows) {
    auto cells = split_top(row, ',');
    if (static_cast<int>(cells.size()) != o.labels)
      throw ValidationError("--kappa rows need " + std::to_string(o.labels) + " entries");
    m.emplace_back();
    for (const std::string& c : cells) m.back().push_back(parse_poly(c, "--kappa"));
  }
  for (int a = 0; a < o.labels; ++a)
    for (int b = 0; b < a; ++b)
      if (!(m[a][b] == m[b][a])) throw ValidationError("--kappa must be symmetric");
  return m;
}

Theory load_seed(const Options& o) {
  std::ifstream in(o.seed_file);
  if (!in) throw ValidationError("cannot read seed file '" + o.seed_file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Json j = parse_json(ss.str(), "seed file");
  try {
    Theory t = theory_from_json(j);
    for (const auto& [idx, p] : t)
      if (static_cast<int>(idx.legs.size()) != o.labels)
        throw std::invalid_argument("seed file dimension does not match --labels");
    return t;
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("seed file: ") + e.what());
  }
}

// seed entries up to the bound; absent entries are zero
Theory input_theory(const Options& o, int bound) {
  if (o.seed_file.empty()) return symbolic_theory(bound, o.labels);
  Theory seed = load_seed(o);
  Theory t;
  for (const TheoryIndex& idx : stable_indices(bound, o.labels)) {
    auto it = seed.find(idx);
    t[idx] = it == seed.end() ? Poly() : it->second;
  }
  return t;
}

// substitute --seed-file values for F symbols and --kappa for the propagator symbols
Poly specialize(const Poly& p, const Options& o) {
  std::optional<Theory> seed;
  if (!o.seed_file.empty()) seed = load_seed(o);
  std::optional<KappaMatrix> k;
  if (!o.kappa.empty()) k = kappa_matrix(o);
  return p.substitute([&](Symbol s) -> std::optional<Poly> {
    const SymbolInfo& info = s.info();
    if (seed && info.kind == SymbolKind::Theory) {
      TheoryIndex idx{info.genus, info.index};
      auto it = seed->find(idx);
      return it == seed->end() ? Poly() : it->second;
    }
    if (k && info.kind == SymbolKind::Kappa) {
      if (info.index.empty()) return (*k)[0][0];
      return (*k)[info.index[0] - 1][info.index[1] - 1];
    }
    return std::nullopt;
  });
}

class Printer {
 public:
  Printer(const Options& o, std::ostream& out) : json_(o.format == "json"), out_(out) {}

  template <class C>
  void sum(const GraphSum<C>& s) {
    if (json_) {
      out_ << sum_to_json(s).dump() << "\n";
      return;
    }
    if (s.empty()) out_ << "0\n";
    for (const auto& [key, t] : s.terms()) out_ << text(t.coeff) << " " << base64_encode(key) << " " << graph_to_json(t.graph).dump() << "\n";
  }

  void poly(const Poly& p) { out_ << (json_ ? poly_to_json(p).dump() : p.to_string()) << "\n"; }

  void theory(const Theory& t) {
    if (json_) {
      out_ << theory_to_json(t).dump() << "\n";
      return;
    }
    for (const auto& [idx, p] : t) out_ << index_key(idx) << ": " << p.to_string() << "\n";
  }

  void classes(const std::vector<GraphClass>& cs) {
    Json arr = Json::array();
    for (const GraphClass& c : cs) {
      if (json_)
        arr.push_back({{"key", base64_encode(c.key)}, {"aut_order", c.aut_order}, {"graph", graph_to_json(c.graph)}});
      else
        out_ << c.aut_order << " " << base64_encode(c.key) << " " << graph_to_json(c.graph).dump() << "\n";
    }
    if (json_) out_ << arr.dump() << "\n";
  }

  bool json() const { return json_; }
  std::ostream& out() { return out_; }

 private:
  static std::string text(const Rational& c) { return to_text(c); }
  static std::string text(const Poly& c) {
    return c.terms().size() > 1 ? "(" + c.to_string() + ")" : c.to_string();
  }

  bool json_;
  std::ostream& out_;
};

int n_labels_arg(const Options& o) { return o.labels == 1 ? 0 : o.labels; }

void check_field_label(int x, const Options& o, const char* flag) {
  if (x < 1 || x > o.labels)
    throw ValidationError(std::string(flag) + " must be in 1.." + std::to_string(o.labels));
}

int cmd_enumerate(const Options& o, Printer& p) {
  TheoryIndex idx = index_of(o);
  p.classes(o.labels == 1 ? enumerate_connected(idx.genus, idx.legs[0]) : enumerate_labelled(idx.genus, idx.legs));
  return 0;
}

int cmd_aut(const Options& o, Printer& p) {
  RationalSum s = load_graphs(o);
  if (s.size() != 1) throw ValidationError("aut expects a single graph");
  const auto& [key, t] = *s.terms().begin();
  std::uint64_t aut = automorphism_count(t.graph);
  if (p.json())
    p.out() << Json{{"aut_order", aut}, {"key", base64_encode(key)}}.dump() << "\n";
  else
    p.out() << aut << " " << base64_encode(key) << "\n";
  return 0;
}

int cmd_free_energy(const Options& o, Printer& p) {
  TheoryIndex idx = index_of(o);
  p.sum(o.labels == 1 ? abstract_F(idx.genus, idx.legs[0]) : abstract_F(idx.genus, idx.legs));
  return 0;
}

int cmd_op(const Options& o, Printer& p) {
  RationalSum s = load_graphs(o);
  if (o.labels == 1) {
    if (o.op == "K") p.sum(op_K(s));
    if (o.op == "partial") p.sum(op_partial(s));
    if (o.op == "gamma") p.sum(op_gamma(s));
    if (o.op == "D") p.sum(op_D(s));
    return 0;
  }
  check_field_label(o.i, o, "--i");
  if (o.op == "K") {
    check_field_label(o.j, o, "--j");
    p.sum(op_K(s, o.i, o.j));
  }
  if (o.op == "partial") p.sum(op_partial(s, o.i, o.labels));
  if (o.op == "gamma") p.sum(op_gamma(s, o.i, o.labels));
  if (o.op == "D") p.sum(op_D(s, o.i, o.labels));
  return 0;
}

int cmd_transform(const Options& o, Printer& p) {
  if (o.epsilon.empty()) throw ValidationError("--epsilon is required");
  Poly eps = parse_poly(o.epsilon, "--epsilon");
  p.sum(graph_transform(to_poly_sum(load_graphs(o)), eps, n_labels_arg(o)));
  return 0;
}

int cmd_dualize(const Options& o, Printer& p) {
  p.sum(duality(load_graphs(o), n_labels_arg(o)));
  return 0;
}

int cmd_realize(const Options& o, Printer& p) {
  TheoryIndex idx = index_of(o);
  Poly f = o.labels == 1 ? hat_F(idx.genus, idx.legs[0]) : hat_F(idx.genus, idx.legs);
  p.poly(specialize(f, o));
  return 0;
}

Poly dual_realized(const TheoryIndex& idx) {
  if (idx.legs.size() == 1) return dual_hat_F(idx.genus, idx.legs[0]);
  int g = grade(idx);
  Theory hat;
  for (const TheoryIndex& k : stable_indices(g, static_cast<int>(idx.legs.size()))) {
    Rational scale(1);
    for (int l : k.legs) scale *= factorial(l);
    hat[k] = hat_F(k.genus, k.legs) * scale;
  }
  KappaMatrix minus = symbolic_kappa(static_cast<int>(idx.legs.size()));
  for (auto& row : minus)
    for (Poly& c : row) c = -c;
  return s_transform(hat, minus, g).at(idx);
}

int cmd_dual_realize(const Options& o, Printer& p) {
  p.poly(specialize(dual_realized(index_of(o)), o));
  return 0;
}

int cmd_s_transform(const Options& o, Printer& p, bool wick) {
  check_bound(o.bound);
  Theory t = input_theory(o, o.bound);
  KappaMatrix k = kappa_matrix(o);
  p.theory(wick ? wick_gaussian(t, k, o.bound) : s_transform(t, k, o.bound));
  return 0;
}

int cmd_hae(const Options& o, Printer& p) {
  check_genus(o.genus);
  if (o.npoints < 0) throw ValidationError("--npoints must be non-negative");
  if (o.emit == "kz") {
    if (o.npoints != 0 || o.genus < 2) throw ValidationError("--emit kz needs genus >= 2 and --npoints 0");
    p.poly(hae::kz_symbolic(o.genus));
    return 0;
  }
  if (!is_stable_type(o.genus, o.npoints)) throw ValidationError("unstable type: 2g - 2 + n must be positive");
  p.poly(o.emit == "tilde" ? hae::tilde_F(o.genus, o.npoints) : hae::holo_F(o.genus, o.npoints));
  return 0;
}

int cmd_verify(const Options& o, Printer& p) {
  check_bound(o.bound);
  std::vector<CheckResult> results = run_suite(o.suite, o.bound);
  bool ok = true;
  Json arr = Json::array();
  for (const CheckResult& r : results) {
    ok = ok && r.passed;
    if (p.json())
      arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    else
      p.out() << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
  }
  if (p.json()) p.out() << arr.dump() << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact symbolic engine for stable graphs and quantum field theories", "sgqft"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--labels", o.labels, "field dimension N")->check(CLI::Range(1, 8));
  app.add_option("--seed-file", o.seed_file, "theory JSON");

  auto typed = [&](CLI::App* c) {
    c->add_option("--genus", o.genus, "genus")->required();
    c->add_option("--legs", o.legs, "leg count, or per-label counts a,b,.. when --labels > 1");
  };
  auto graph_in = [&](CLI::App* c) {
    c->add_option("--graph", o.graph, "graph or graph-sum JSON file, '-' for stdin")->required();
  };
  auto bounded = [&](CLI::App* c) {
    c->add_option("--bound,--genus-bound", o.bound, "bound on 2g - 2 + n");
  };

  auto* enumerate = app.add_subcommand("enumerate", "connected stable graphs of a type");
  typed(enumerate);
  auto* aut = app.add_subcommand("aut", "automorphism group order and canonical key");
  graph_in(aut);
  auto* free_energy = app.add_subcommand("free-energy", "abstract free energy as a graph sum");
  typed(free_energy);
  auto* op = app.add_subcommand("op", "apply K, partial, gamma or D");
  op->add_option("operator", o.op, "operator")->required()->check(CLI::IsMember({"K", "partial", "gamma", "D"}));
  graph_in(op);
  op->add_option("--i", o.i, "field label");
  op->add_option("--j", o.j, "second field label for K");
  auto* transform = app.add_subcommand("transform", "Fourier-like transform with parameter epsilon");
  graph_in(transform);
  transform->add_option("--epsilon", o.epsilon, "polynomial, e.g. 1, e1, e1+e2")->required();
  auto* dualize = app.add_subcommand("dualize", "duality map");
  graph_in(dualize);
  auto* realize = app.add_subcommand("realize", "Feynman realization of the free energy");
  typed(realize);
  realize->add_option("--kappa", o.kappa, "propagator");
  auto* dual_realize = app.add_subcommand("dual-realize", "dual realization (kappa -> -kappa)");
  typed(dual_realize);
  dual_realize->add_option("--kappa", o.kappa, "propagator");
  auto* s_tr = app.add_subcommand("s-transform", "propagator shift of a theory");
  bounded(s_tr);
  s_tr->add_option("--kappa", o.kappa, "propagator, or rows 'a,b;c,d' when --labels > 1");
  auto* wick = app.add_subcommand("wick", "formal Gaussian integral oracle");
  bounded(wick);
  wick->add_option("--kappa", o.kappa, "propagator, or rows 'a,b;c,d' when --labels > 1");
  auto* hae_cmd = app.add_subcommand("hae", "holomorphic anomaly: dotted, holomorphic or ambiguity form");
  hae_cmd->add_option("--genus", o.genus, "genus")->required();
  hae_cmd->add_option("--npoints", o.npoints, "number of insertions");
  hae_cmd->add_option("--emit", o.emit, "tilde|holo|kz")->check(CLI::IsMember({"tilde", "holo", "kz"}));
  auto* verify = app.add_subcommand("verify", "run identity checks");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suites));
  bounded(verify);
  for (CLI::App* c : app.get_subcommands({})) c->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    if (code != 0) err << app.help();
    return code == 0 ? 0 : 1;
  }

  Printer p(o, out);
  try {
    if (o.seed_file.size() && !(*s_tr || *wick || *realize || *dual_realize))
      throw ValidationError("--seed-file applies to realize, dual-realize, s-transform and wick");
    if (*enumerate) return cmd_enumerate(o, p);
    if (*aut) return cmd_aut(o, p);
    if (*free_energy) return cmd_free_energy(o, p);
    if (*op) return cmd_op(o, p);
    if (*transform) return cmd_transform(o, p);
    if (*dualize) return cmd_dualize(o, p);
    if (*realize) return cmd_realize(o, p);
    if (*dual_realize) return cmd_dual_realize(o, p);
    if (*s_tr) return cmd_s_transform(o, p, false);
    if (*wick) return cmd_s_transform(o, p, true);
    if (*hae_cmd) return cmd_hae(o, p);
    if (*verify) return cmd_verify(o, p);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace sgqft::cli
