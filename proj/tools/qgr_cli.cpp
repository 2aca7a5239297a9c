// qgr: invariants of QGr for path algebras and monomial algebras.
// The tool is a thin front end over the shared C API; all mathematics
// happens behind qgr.h.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "qgr.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotFiniteGk = 3;
constexpr int kExitInconclusive = 4;

struct StringOut {
  char* s = nullptr;
  ~StringOut() { qgr_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct QuiverHandle {
  qgr_quiver* q = nullptr;
  QuiverHandle() = default;
  QuiverHandle(const QuiverHandle&) = delete;
  ~QuiverHandle() { qgr_quiver_free(q); }
};

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "qgr: " << message << "\n";
  std::exit(code);
}

int status_exit(qgr_status st) {
  switch (st) {
    case QGR_OK:
      return kExitOk;
    case QGR_ERR_NOT_FINITE_GK:
      return kExitNotFiniteGk;
    case QGR_ERR_INCONCLUSIVE:
      return kExitInconclusive;
    default:
      return kExitUsage;
  }
}

void check(qgr_status st) {
  if (st != QGR_OK) die(status_exit(st), qgr_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die(kExitUsage, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return line.compare(pos, 5, "gens ") == 0 || line.compare(pos, 4, "rel ") == 0;
  }
  return false;
}

// Quiver files, quiver JSON, or algebra presentations (resolved
// through the Ufnarovskii graph).
void load_input(const std::string& path, QuiverHandle& h) {
  std::string text = read_file(path);
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    check(qgr_quiver_from_json(text.c_str(), &h.q));
    return;
  }
  if (looks_like_algebra(text)) {
    StringOut warnings;
    check(qgr_algebra_graph(text.c_str(), &h.q, &warnings.s));
    json w = json::parse(warnings.str());
    for (const auto& note : w) std::cerr << "qgr: warning: " << note.get<std::string>() << "\n";
    return;
  }
  check(qgr_quiver_parse(text.c_str(), &h.q));
}

struct Options {
  std::string format = "human";
  int cap_degree = 15;
  int cap_iterations = 50;
  bool normalized = false;
  bool verify = false;
};

void print_quiver(const qgr_quiver* q, const std::string& format) {
  const char* f = format == "human" ? "text" : format.c_str();
  StringOut out;
  check(qgr_quiver_serialize(q, f, &out.s));
  std::cout << out.str();
}

int cmd_gk(const std::string& file, const Options& opt) {
  QuiverHandle h;
  load_input(file, h);
  StringOut out;
  check(qgr_growth_json(h.q, &out.s));
  json j = json::parse(out.str());
  if (opt.verify) {
    StringOut v;
    check(qgr_growth_verify_json(h.q, &v.s));
    json vj = json::parse(v.str());
    if (!vj.at("agrees").get<bool>())
      die(kExitUsage, "growth oracle disagrees with the verdict: " +
                          vj.at("note").get<std::string>());
    std::cerr << "qgr: verified: " << vj.at("note").get<std::string>() << "\n";
  }
  if (opt.format == "json") {
    std::cout << out.str() << "\n";
  } else if (j.at("finite").get<bool>()) {
    std::cout << "GK dimension: " << j.at("gk").get<int>() << "\n";
    if (!j.at("max_chain").empty()) {
      std::cout << "witness chain of cycles:";
      for (const auto& base : j.at("max_chain").at(0)) std::cout << " " << base.get<std::string>();
      std::cout << "\n";
    }
  } else {
    std::cout << "GK dimension: infinite (exponential growth)\n";
    std::cout << "doubly cyclic vertices:";
    for (const auto& v : j.at("doubly_cyclic")) std::cout << " " << v.get<std::string>();
    std::cout << "\n";
  }
  return j.at("finite").get<bool>() ? kExitOk : kExitNotFiniteGk;
}

int cmd_cycles(const std::string& file, const Options& opt) {
  QuiverHandle h;
  load_input(file, h);
  StringOut out;
  check(qgr_cycles_json(h.q, &out.s));
  json j = json::parse(out.str());
  if (opt.format == "json") {
    std::cout << out.str() << "\n";
  } else {
    for (const auto& c : j.at("cycles")) {
      std::cout << "cycle at " << c.at("base").get<std::string>() << " (length "
                << c.at("length").get<int>() << "):";
      for (const auto& v : c.at("vertices")) std::cout << " " << v.get<std::string>();
      std::cout << "\n";
    }
    if (!j.at("doubly_cyclic").empty()) {
      std::cout << "doubly cyclic vertices:";
      for (const auto& v : j.at("doubly_cyclic")) std::cout << " " << v.get<std::string>();
      std::cout << "\n";
    }
  }
  return j.at("finite").get<bool>() ? kExitOk : kExitNotFiniteGk;
}

int cmd_ext_quiver(const std::string& file, const Options& opt, bool poset) {
  QuiverHandle h;
  load_input(file, h);
  if (poset) {
    StringOut out;
    check(qgr_ext_poset_json(h.q, &out.s));
    std::cout << out.str() << "\n";
    return kExitOk;
  }
  QuiverHandle e;
  check(qgr_ext_quiver(h.q, &e.q));
  print_quiver(e.q, opt.format);
  return kExitOk;
}

int cmd_simples(const std::string& file, const Options& opt) {
  QuiverHandle h;
  load_input(file, h);
  StringOut out;
  check(qgr_simples_json(h.q, &out.s));
  if (opt.format == "json") {
    std::cout << out.str() << "\n";
    return kExitOk;
  }
  json j = json::parse(out.str());
  for (const auto& s : j.at("simples"))
    std::cout << "O_" << s.at("vertex").get<std::string>() << " (cycle length "
              << s.at("cycle_length").get<int>() << ")\n";
  std::cout << j.at("simples").size() << " simple object(s)\n";
  return kExitOk;
}

int cmd_equiv(const std::string& file_a, const std::string& file_b, const Options& opt) {
  QuiverHandle a, b;
  load_input(file_a, a);
  load_input(file_b, b);
  int equivalent = 0;
  StringOut witness;
  qgr_status st = opt.verify ? qgr_equivalent_verified(a.q, b.q, &equivalent, &witness.s)
                             : qgr_equivalent(a.q, b.q, &equivalent, &witness.s);
  check(st);
  if (opt.format == "json") {
    std::cout << witness.str() << "\n";
  } else {
    json j = json::parse(witness.str());
    if (equivalent) {
      std::cout << "equivalent; Ext-quiver bijection:\n";
      for (const auto& [from, to] : j.at("bijection").items())
        std::cout << "  " << from << " -> " << to.get<std::string>() << "\n";
    } else {
      std::cout << "not equivalent: " << j.at("distinguishing").get<std::string>() << "\n";
    }
  }
  return equivalent ? kExitOk : kExitFalse;
}

int cmd_canonical(const std::string& file, const Options& opt) {
  QuiverHandle h;
  load_input(file, h);
  QuiverHandle canon;
  check(qgr_canonical(h.q, &canon.q));
  print_quiver(canon.q, opt.format);
  return kExitOk;
}

int cmd_k0(const std::string& file, const Options& opt, const std::string& test_vector) {
  QuiverHandle h;
  load_input(file, h);
  StringOut out;
  check(qgr_k0_json(h.q, &out.s));
  json j = json::parse(out.str());
  if (opt.format == "json") {
    std::cout << out.str() << "\n";
  } else {
    std::cout << "K0 rank: " << j.at("rank").get<int>() << "\n";
    std::cout << "cone poset covers:";
    for (const auto& cov : j.at("poset").at("covers"))
      std::cout << " " << cov.at(0).get<std::string>() << "<" << cov.at(1).get<std::string>();
    std::cout << "\nnormalization: L=" << j.at("normalization").at("L").get<unsigned>()
              << " n=" << j.at("normalization").at("n").get<unsigned>() << "\n";
    if (opt.normalized) {
      std::cout << "normalized vertex order:";
      for (const auto& v : j.at("normalization").at("perm")) std::cout << " " << v.get<std::string>();
      std::cout << "\n";
    }
  }
  if (!test_vector.empty()) {
    int member = 0;
    check(qgr_cone_contains(h.q, test_vector.c_str(), &member));
    std::cout << "vector (" << test_vector << "): " << (member ? "in" : "not in")
              << " the positive cone\n";
  }
  return kExitOk;
}

int cmd_cone_test(const std::string& file, const Options& opt, const std::string& test_vector) {
  QuiverHandle h;
  load_input(file, h);
  int member = 0;
  check(qgr_cone_contains(h.q, test_vector.c_str(), &member));
  std::cout << "delta membership: " << (member ? "member" : "nonmember") << "\n";
  if (opt.verify) {
    int verdict = -1;
    check(qgr_cone_oracle(h.q, test_vector.c_str(), opt.cap_iterations, &verdict));
    if (verdict == -1) {
      std::cout << "iteration oracle: inconclusive at cap " << opt.cap_iterations << "\n";
      return kExitInconclusive;
    }
    std::cout << "iteration oracle: " << (verdict ? "member" : "nonmember") << "\n";
    if (verdict != member) die(kExitUsage, "cone oracle disagrees with delta membership");
  }
  return member ? kExitOk : kExitFalse;
}

int cmd_hom(const std::string& file, const std::string& v, const std::string& w,
            const Options& opt) {
  QuiverHandle h;
  load_input(file, h);
  int dim = 0, stabilized = 0;
  check(qgr_hom_dim(h.q, v.c_str(), w.c_str(), opt.cap_degree, &dim, &stabilized));
  if (opt.format == "json") {
    json j{{"dim", dim}, {"stabilized", stabilized == 1}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "Hom(O_" << v << ", O_" << w << ") dimension: " << dim
              << (stabilized ? " (stabilized)" : " (NOT stabilized)") << "\n";
  }
  return stabilized ? kExitOk : kExitInconclusive;
}

// Finds an arrow v -> w in the serialized quiver, if any.
std::string find_arrow(const qgr_quiver* q, const std::string& v, const std::string& w) {
  StringOut out;
  check(qgr_quiver_serialize(q, "json", &out.s));
  json j = json::parse(out.str());
  for (const auto& a : j.at("arrows"))
    if (a.at("src") == v && a.at("tgt") == w) return a.at("id").get<std::string>();
  return "";
}

bool has_loop(const qgr_quiver* q, const std::string& v) {
  StringOut out;
  check(qgr_quiver_serialize(q, "json", &out.s));
  json j = json::parse(out.str());
  for (const auto& a : j.at("arrows"))
    if (a.at("src") == v && a.at("tgt") == v) return true;
  return false;
}

int cmd_ext_split(const std::string& file, const std::string& v, const std::string& w,
                  std::string arrow, const std::string& nu, bool auto_normalize,
                  const Options& opt) {
  QuiverHandle h;
  load_input(file, h);
  qgr_quiver* work = h.q;
  QuiverHandle normalized;

  bool shaped = has_loop(work, v) && has_loop(work, w) && !find_arrow(work, v, w).empty();
  if (!shaped) {
    if (!auto_normalize)
      die(kExitUsage,
          "vertices must carry loops joined by an arrow; apply a Veronese power first or pass "
          "--auto-normalize");
    // cycle lengths from the simples report, then the smallest Veronese
    // power d = k * n_v * n_w that realizes the shape
    StringOut simples;
    check(qgr_simples_json(h.q, &simples.s));
    json sj = json::parse(simples.str());
    unsigned nv = 0, nw = 0;
    for (const auto& s : sj.at("simples")) {
      if (s.at("vertex") == v) nv = s.at("cycle_length").get<unsigned>();
      if (s.at("vertex") == w) nw = s.at("cycle_length").get<unsigned>();
    }
    if (nv == 0 || nw == 0) die(kExitUsage, "both endpoints must be cyclic vertices");
    bool found = false;
    for (int k = 1; k <= opt.cap_iterations && !found; ++k) {
      QuiverHandle candidate;
      if (qgr_veronese(h.q, k * nv * nw, &candidate.q) != QGR_OK) break;
      if (has_loop(candidate.q, v) && has_loop(candidate.q, w) &&
          !find_arrow(candidate.q, v, w).empty()) {
        normalized.q = candidate.q;
        candidate.q = nullptr;
        found = true;
      }
    }
    if (!found)
      die(kExitInconclusive, "no Veronese power within the iteration cap realizes the shape; "
                             "there may be no extension at all");
    work = normalized.q;
    std::cerr << "qgr: note: working over a Veronese power of the input\n";
  }

  if (arrow.empty()) arrow = find_arrow(work, v, w);
  int verdict = -1, witness = -1;
  check(qgr_ext_split(work, v.c_str(), w.c_str(), arrow.c_str(), nu.c_str(), opt.cap_degree,
                      &verdict, &witness));
  if (opt.format == "json") {
    json j{{"verdict", verdict == 1 ? "split" : verdict == 0 ? "nonsplit" : "inconclusive"},
           {"witness", witness}};
    std::cout << j.dump() << "\n";
  } else if (verdict == 1) {
    std::cout << "split (section exists from degree " << witness << " on)\n";
  } else if (verdict == 0) {
    std::cout << "nonsplit (stabilized endomorphism dimension 1)\n";
  } else {
    std::cout << "inconclusive at degree cap " << opt.cap_degree << "\n";
  }
  return verdict == 1 ? kExitOk : verdict == 0 ? kExitFalse : kExitInconclusive;
}

int cmd_point_classify(const std::string& file, const std::string& point, int shift,
                       const std::string& rep_file, const Options& opt) {
  if (!rep_file.empty()) {
    std::string text = read_file(rep_file);
    StringOut out;
    qgr_status st = qgr_point_classify(text.c_str(), &out.s);
    if (st != QGR_OK) die(status_exit(st), qgr_last_error());
    std::cout << out.str() << "\n";
    return kExitOk;
  }
  if (file.empty() || point.empty())
    die(kExitUsage, "need either --rep <file> or an input quiver with --point <v>");
  QuiverHandle h;
  load_input(file, h);
  StringOut rep;
  check(qgr_point_module_json(h.q, point.c_str(), opt.cap_degree, shift, &rep.s));
  StringOut out;
  qgr_status st = qgr_point_classify(rep.s, &out.s);
  if (st != QGR_OK) die(status_exit(st), qgr_last_error());
  if (opt.format == "json") {
    std::cout << out.str() << "\n";
  } else {
    json j = json::parse(out.str());
    std::cout << "isomorphic to pi* O_" << j.at("vertex").get<std::string>() << " (cycle length "
              << j.at("cycle_length").get<unsigned>() << ", entered at degree "
              << j.at("entry_degree").get<int>() << ")\n";
  }
  return kExitOk;
}

int cmd_monomial_graph(const std::string& file, const Options& opt) {
  std::string text = read_file(file);
  QuiverHandle h;
  StringOut warnings;
  check(qgr_algebra_graph(text.c_str(), &h.q, &warnings.s));
  for (const auto& note : json::parse(warnings.str()))
    std::cerr << "qgr: warning: " << note.get<std::string>() << "\n";
  print_quiver(h.q, opt.format);
  return kExitOk;
}

int cmd_bratteli(const std::string& file, unsigned n_max, const Options& opt) {
  QuiverHandle h;
  load_input(file, h);
  StringOut out;
  check(qgr_matricial_json(h.q, n_max, &out.s));
  if (opt.format == "json") {
    std::cout << out.str() << "\n";
    return kExitOk;
  }
  json j = json::parse(out.str());
  for (std::size_t m = 0; m < j.at("bratteli").size(); ++m) {
    std::cout << "p_" << m << " =";
    for (const auto& x : j.at("bratteli").at(m)) std::cout << " " << x.get<std::string>();
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_noetherian(const std::string& file, const Options& opt) {
  QuiverHandle h;
  load_input(file, h);
  int left = 0, right = 0;
  check(qgr_noetherian(h.q, &left, &right));
  if (opt.format == "json") {
    json j{{"left", left == 1}, {"right", right == 1}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "left Noetherian: " << (left ? "yes" : "no") << "\n";
    std::cout << "right Noetherian: " << (right ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_report(const std::string& file, const Options& opt) {
  QuiverHandle h;
  load_input(file, h);
  StringOut out;
  check(qgr_report_json(h.q, opt.cap_degree, opt.cap_iterations, &out.s));
  std::cout << out.str() << "\n";
  json j = json::parse(out.str());
  return j.at("growth").at("finite").get<bool>() ? kExitOk : kExitNotFiniteGk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of the quotient category QGr for path algebras "
               "and finitely presented monomial algebras"};
  app.require_subcommand(1);

  Options opt;
  bool as_json = false;
  app.add_option("--cap-degree", opt.cap_degree, "degree truncation cap")->capture_default_str();
  app.add_option("--cap-iterations", opt.cap_iterations, "iteration cap for cone tests")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format: human|json|dot")
      ->check(CLI::IsMember({"human", "json", "dot"}))
      ->capture_default_str();
  app.add_flag("--json", as_json, "shorthand for --format json");
  app.add_flag("--normalized", opt.normalized, "echo vectors in normalized vertex order");
  app.add_flag("--verify", opt.verify, "cross-check with the brute-force oracles");

  std::string file, file_b, vertex_v, vertex_w, test_vector, nu = "1", arrow, rep_file, point;
  int shift = 0;
  unsigned n_max = 12;
  bool poset = false, auto_normalize = false;

  auto* gk = app.add_subcommand("gk", "GK dimension of the path algebra");
  gk->add_option("file", file)->required();

  auto* cycles = app.add_subcommand("cycles", "simple cycles and their poset");
  cycles->add_option("file", file)->required();

  auto* extq = app.add_subcommand("ext-quiver", "Ext-quiver E_Q");
  extq->add_option("file", file)->required();
  extq->add_flag("--poset", poset, "emit the order relation as JSON cover list");

  auto* simples = app.add_subcommand("simples", "simple objects of QGr");
  simples->add_option("file", file)->required();

  auto* equiv = app.add_subcommand("equiv", "decide QGr equivalence of two inputs");
  equiv->add_option("file_a", file)->required();
  equiv->add_option("file_b", file_b)->required();

  auto* canonical = app.add_subcommand("canonical", "canonical poset quiver Gamma(E_Q)");
  canonical->add_option("file", file)->required();

  auto* k0cmd = app.add_subcommand("k0", "ordered Grothendieck group of QGr");
  k0cmd->add_option("file", file)->required();
  k0cmd->add_option("--test-vector", test_vector, "comma-separated K0 class to test");

  auto* cone = app.add_subcommand("cone-test", "positive cone membership of a K0 class");
  cone->add_option("file", file)->required();
  cone->add_option("--test-vector", test_vector, "comma-separated K0 class")->required();

  auto* hom = app.add_subcommand("hom", "stabilized Hom dimension between cyclic point modules");
  hom->add_option("file", file)->required();
  hom->add_option("v", vertex_v)->required();
  hom->add_option("w", vertex_w)->required();

  auto* split = app.add_subcommand("ext-split", "split/nonsplit test for the extension N(nu)");
  split->add_option("file", file)->required();
  split->add_option("v", vertex_v)->required();
  split->add_option("w", vertex_w)->required();
  split->add_option("--nu", nu, "coefficient sequence, zero-padded to the cap")
      ->capture_default_str();
  split->add_option("--arrow", arrow, "connecting arrow id (default: first arrow v -> w)");
  split->add_flag("--auto-normalize", auto_normalize,
                  "apply the smallest Veronese power that realizes the loop-arrow-loop shape");

  auto* classify = app.add_subcommand("point-classify", "identify a point module up to pi*");
  classify->add_option("file", file, "quiver input (with --point)");
  classify->add_option("--point", point, "build O_v for this cyclic vertex");
  classify->add_option("--shift", shift, "shift the built module before classifying");
  classify->add_option("--rep", rep_file, "serialized representation JSON to classify");

  auto* monomial = app.add_subcommand("monomial", "monomial algebra commands");
  auto* graph = monomial->add_subcommand("graph", "Ufnarovskii graph of the algebra");
  graph->add_option("file", file)->required();
  monomial->require_subcommand(1);

  auto* bratteli = app.add_subcommand("bratteli", "dimension vectors of S(Q)");
  bratteli->add_option("file", file)->required();
  bratteli->add_option("--n-max", n_max, "number of levels")->capture_default_str();

  auto* noeth = app.add_subcommand("noetherian", "left/right Noetherian test");
  noeth->add_option("file", file)->required();

  auto* report = app.add_subcommand("report", "every invariant as one JSON document");
  report->add_option("file", file)->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  if (as_json) opt.format = "json";

  try {
    if (gk->parsed()) return cmd_gk(file, opt);
    if (cycles->parsed()) return cmd_cycles(file, opt);
    if (extq->parsed()) return cmd_ext_quiver(file, opt, poset);
    if (simples->parsed()) return cmd_simples(file, opt);
    if (equiv->parsed()) return cmd_equiv(file, file_b, opt);
    if (canonical->parsed()) return cmd_canonical(file, opt);
    if (k0cmd->parsed()) return cmd_k0(file, opt, test_vector);
    if (cone->parsed()) return cmd_cone_test(file, opt, test_vector);
    if (hom->parsed()) return cmd_hom(file, vertex_v, vertex_w, opt);
    if (split->parsed()) return cmd_ext_split(file, vertex_v, vertex_w, arrow, nu, auto_normalize, opt);
    if (classify->parsed()) return cmd_point_classify(file, point, shift, rep_file, opt);
    if (monomial->parsed()) return cmd_monomial_graph(file, opt);
    if (bratteli->parsed()) return cmd_bratteli(file, n_max, opt);
    if (noeth->parsed()) return cmd_noetherian(file, opt);
    if (report->parsed()) return cmd_report(file, opt);
  } catch (const std::exception& e) {
    die(kExitUsage, e.what());
  }
  return kExitUsage;
}
