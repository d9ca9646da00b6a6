// Command-line front end.  Everything goes through the C API in atorsion.h.

#include <atorsion.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Failure {
  std::string kind;
  std::string message;
};

void check(at_status s) {
  if (s != AT_OK) throw Failure{at_status_name(s), at_last_error()};
}

// Owns a string returned by the library.
class CString {
 public:
  CString() = default;
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
  ~CString() { at_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Matrix = std::unique_ptr<at_matrix, Deleter<at_matrix, at_matrix_free>>;
using Snf = std::unique_ptr<at_snf, Deleter<at_snf, at_snf_free>>;
using Ball = std::unique_ptr<at_ball, Deleter<at_ball, at_ball_free>>;
using Graph = std::unique_ptr<at_graph, Deleter<at_graph, at_graph_free>>;
using Complex = std::unique_ptr<at_complex, Deleter<at_complex, at_complex_free>>;
using Presentation = std::unique_ptr<at_presentation, Deleter<at_presentation, at_presentation_free>>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"io", "cannot open '" + path + "'"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string matrix_entry(const at_matrix* m, size_t i, size_t j) {
  CString s;
  check(at_matrix_get(m, i, j, s.out()));
  return s.str();
}

json matrix_json(const at_matrix* m) {
  json rows = json::array();
  for (size_t i = 0; i < at_matrix_rows(m); ++i) {
    json row = json::array();
    for (size_t j = 0; j < at_matrix_cols(m); ++j) row.push_back(matrix_entry(m, i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_text(const at_matrix* m) {
  CString s;
  check(at_matrix_format(m, s.out()));
  return s.str();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

struct FieldArgs {
  unsigned p = 2, e = 1;
  std::vector<unsigned> modulus;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "Characteristic")->required();
    cmd->add_option("--e", e, "Extension degree")->capture_default_str();
    cmd->add_option("--modulus", modulus, "Coefficients c0,c1,... of the defining polynomial")->delimiter(',');
  }
  const unsigned* mod() const { return modulus.empty() ? nullptr : modulus.data(); }
};

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

// ---- subcommand bodies ----

void run_snf(const std::string& path, bool as_json, bool transforms) {
  const auto text = read_file(path);
  at_matrix* raw = nullptr;
  check(at_matrix_parse(text.c_str(), &raw));
  Matrix a(raw);
  at_snf* sraw = nullptr;
  check(at_snf_compute(a.get(), &sraw));
  Snf s(sraw);
  std::vector<std::string> factors;
  for (size_t i = 0; i < at_snf_factor_count(s.get()); ++i) {
    CString f;
    check(at_snf_factor(s.get(), i, f.out()));
    factors.push_back(f.str());
  }
  json j{{"rows", at_matrix_rows(a.get())},
         {"cols", at_matrix_cols(a.get())},
         {"rank", at_snf_rank(s.get())},
         {"invariant_factors", factors}};
  std::ostringstream t;
  t << "rank " << at_snf_rank(s.get()) << '\n';
  t << "invariant factors " << join(factors, " ") << '\n';
  if (transforms) {
    at_matrix *u = nullptr, *d = nullptr, *v = nullptr;
    check(at_snf_transforms(s.get(), &u, &d, &v));
    Matrix mu(u), md(d), mv(v);
    j["U"] = matrix_json(u);
    j["D"] = matrix_json(d);
    j["V"] = matrix_json(v);
    t << "U\n" << matrix_text(u) << "D\n" << matrix_text(d) << "V\n" << matrix_text(v);
  }
  emit(as_json, j, t.str());
}

void run_weyl(size_t n, size_t k, bool as_json) {
  std::vector<size_t> images(n + 1);
  unsigned long len = 0;
  check(at_cycle_perm(n, k, images.data(), &len));
  std::vector<std::string> parts;
  for (auto i : images) parts.push_back(std::to_string(i));
  const std::string perm = "[" + join(parts, ",") + "]";
  json j{{"n", n}, {"k", k}, {"permutation", images}, {"length", len}, {"formula", k * (n + 1 - k)}};
  std::ostringstream t;
  t << "permutation " << perm << '\n' << "length " << len << '\n' << "k(n+1-k) " << k * (n + 1 - k) << '\n';
  emit(as_json, j, t.str());
}

void run_flags_count(const FieldArgs& f, size_t m, bool enumerate, bool as_json) {
  CString count;
  check(at_flag_count(f.p, f.e, f.mod(), f.modulus.size(), m, count.out()));
  json j{{"p", f.p}, {"e", f.e}, {"m", m}, {"count", count.str()}};
  std::string text = count.str() + "\n";
  if (enumerate) {
    size_t listed = 0;
    check(at_flag_enumerate(f.p, f.e, f.mod(), f.modulus.size(), m, &listed));
    j["enumerated"] = listed;
    text += "enumerated " + std::to_string(listed) + "\n";
  }
  emit(as_json, j, text);
}

void run_sphere_count(const FieldArgs& f, size_t m, const std::vector<size_t>& w, bool as_json) {
  if (w.size() != m) throw Failure{"dimension", "--w needs exactly m = " + std::to_string(m) + " entries"};
  size_t count = 0;
  check(at_sphere_count(f.p, f.e, f.mod(), f.modulus.size(), m, w.data(), &count));
  unsigned long len = 0;
  check(at_perm_length(w.data(), m, &len));
  unsigned long long q = 1;
  for (unsigned i = 0; i < f.e; ++i) q *= f.p;
  unsigned long long expected = 1;
  for (unsigned long i = 0; i < len; ++i) expected *= q;
  json j{{"m", m}, {"q", q}, {"w", w}, {"length", len}, {"count", count}, {"q_power_length", expected}};
  std::ostringstream t;
  t << "count " << count << "  q^length " << expected << "  (length " << len << ")\n";
  emit(as_json, j, t.str());
}

void run_ball(size_t n, unsigned p, size_t radius, unsigned long long max_vertices, const std::string& format,
              bool bases) {
  at_ball* raw = nullptr;
  check(at_ball_build(n, p, radius, max_vertices, &raw));
  Ball b(raw);
  if (format == "json") {
    CString s;
    check(at_ball_json(b.get(), bases ? 1 : 0, s.out()));
    std::cout << s.str() << '\n';
    return;
  }
  std::vector<size_t> tally(n + 1);
  check(at_ball_type_tally(b.get(), tally.data(), tally.size()));
  size_t interior = 0, plane_links = 0;
  for (size_t v = 0; v < at_ball_vertex_count(b.get()); ++v) {
    int in = 0;
    check(at_ball_vertex(b.get(), v, nullptr, nullptr, nullptr, nullptr, &in));
    if (!in) continue;
    ++interior;
    if (n < 2) continue;
    int ok = 0;
    unsigned order = 0;
    check(at_ball_link_check(b.get(), v, &ok, &order));
    if (ok && order == p) ++plane_links;
  }
  std::cout << "vertices " << at_ball_vertex_count(b.get()) << '\n'
            << "edges " << at_ball_edge_count(b.get()) << '\n'
            << "chambers " << at_ball_chamber_count(b.get()) << '\n';
  for (size_t t = 0; t < tally.size(); ++t) std::cout << "type " << t << ' ' << tally[t] << '\n';
  std::cout << "interior " << interior << '\n';
  if (n >= 2) std::cout << "interior links of order " << p << ' ' << plane_links << '\n';
}

Complex load_complex(const std::string& path) {
  const auto text = read_file(path);
  at_complex* raw = nullptr;
  check(at_complex_parse(text.c_str(), &raw));
  return Complex(raw);
}

void run_link_check(const std::string& path, bool as_json) {
  auto x = load_complex(path);
  int ok = 0;
  unsigned order = 0;
  CString report;
  check(at_complex_link_check(x.get(), &ok, &order, report.out()));
  size_t n0 = 0, n1 = 0, n2 = 0;
  long long chi = 0;
  check(at_complex_counts(x.get(), &n0, &n1, &n2, &chi));
  const auto failures = [&] {
    std::vector<std::string> lines;
    std::istringstream in(report.str());
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    return lines;
  }();
  if (as_json) {
    json j{{"ok", ok != 0}, {"n0", n0}, {"n1", n1}, {"n2", n2}, {"chi", chi}, {"failures", failures}};
    if (ok) j["order"] = order;
    std::cout << j.dump(2) << '\n';
  } else if (ok) {
    std::cout << "links ok, order " << order << '\n' << "counts " << n0 << ' ' << n1 << ' ' << n2 << '\n' << "chi " << chi << '\n';
  } else {
    for (const auto& f : failures) std::cout << f << '\n';
  }
  if (!ok)
    throw Failure{"validation", "link check failed at " + std::to_string(failures.size()) + " place(s)" +
                                    (failures.empty() ? "" : ": " + failures.front())};
}

void run_mk(const std::string& path, unsigned k, bool as_json, bool full) {
  auto x = load_complex(path);
  at_matrix* raw = nullptr;
  check(at_complex_mk(x.get(), k, &raw));
  Matrix m(raw);
  const size_t n = at_matrix_rows(m.get());
  std::vector<size_t> row_sums(n, 0), col_sums(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (matrix_entry(m.get(), i, j) != "0") {
        ++row_sums[i];
        ++col_sums[j];
      }
  const bool uniform_rows = std::all_of(row_sums.begin(), row_sums.end(), [&](size_t s) { return s == row_sums[0]; });
  const bool uniform_cols = std::all_of(col_sums.begin(), col_sums.end(), [&](size_t s) { return s == col_sums[0]; });
  json j{{"k", k}, {"size", n}, {"row_sums", row_sums}, {"column_sums", col_sums}};
  if (full) j["matrix"] = matrix_json(m.get());
  std::ostringstream t;
  t << "M_" << k << ' ' << n << 'x' << n << '\n';
  t << "row sums " << (uniform_rows && n ? std::to_string(row_sums[0]) : "mixed") << '\n';
  t << "column sums " << (uniform_cols && n ? std::to_string(col_sums[0]) : "mixed") << '\n';
  if (full) t << matrix_text(m.get());
  emit(as_json, j, t.str());
}

void run_order(const std::string& tree, const std::string& a2, bool with_mk, bool as_json) {
  if (tree.empty() == a2.empty()) throw Failure{"usage", "order needs exactly one of --tree or --a2"};
  if (with_mk && a2.empty()) throw Failure{"usage", "--with-mk applies to --a2 only"};
  at_presentation* raw = nullptr;
  if (!tree.empty()) {
    const auto text = read_file(tree);
    at_graph* g = nullptr;
    check(at_graph_parse(text.c_str(), &g));
    Graph graph(g);
    if (at_graph_low_degree_count(graph.get()) > 0 && !as_json)
      std::cerr << "warning: " << at_graph_low_degree_count(graph.get()) << " vertex(es) of degree below 3\n";
    check(at_presentation_tree(graph.get(), &raw));
  } else {
    auto x = load_complex(a2);
    check(at_presentation_a2(x.get(), with_mk ? 1 : 0, &raw));
  }
  Presentation p(raw);
  CString order, factors;
  check(at_presentation_order(p.get(), order.out()));
  check(at_presentation_invariant_factors(p.get(), factors.out()));
  size_t checks = 0;
  check(at_presentation_check_count(p.get(), &checks));
  json verified = json::array();
  std::ostringstream t;
  t << "order of [I] " << order.str() << '\n';
  t << "generators " << at_presentation_generator_count(p.get()) << '\n';
  t << "relations " << at_presentation_row_count(p.get()) << '\n';
  t << "invariant factors " << factors.str() << '\n';
  for (size_t i = 0; i < checks; ++i) {
    CString name;
    int holds = 0;
    check(at_presentation_check(p.get(), i, name.out(), &holds));
    verified.push_back({{"identity", name.str()}, {"holds", holds != 0}});
    t << (holds ? "verified " : "FAILED ") << name.str() << '\n';
  }
  json j{{"order", order.str()},
         {"generators", at_presentation_generator_count(p.get())},
         {"relations", at_presentation_row_count(p.get())},
         {"invariant_factors", split(factors.str())},
         {"identities", verified}};
  emit(as_json, j, t.str());
}

void run_bound(unsigned n, const std::string& q, const std::string& n0, bool as_json, bool family) {
  CString m, tag;
  check(at_bound(n, q.c_str(), n0.c_str(), m.out(), tag.out()));
  json j{{"n", n}, {"q", q}, {"n0", n0}, {"m", m.str()}, {"case", tag.str()}};
  std::string text = "m = " + m.str() + " (case " + tag.str() + ")\n";
  if (family) {
    CString fam;
    check(at_annihilator_family(n, q.c_str(), n0.c_str(), fam.out()));
    j["annihilator_family"] = split(fam.str());
    text += "annihilator family " + fam.str() + "\n";
  }
  emit(as_json, j, text);
}

void run_chi(unsigned n, const std::string& q, const std::string& n0, bool as_json) {
  CString value;
  int integral = 0;
  check(at_chi(n, q.c_str(), n0.c_str(), value.out(), &integral));
  json j{{"n", n}, {"q", q}, {"n0", n0}, {"chi", value.str()}, {"integral", integral != 0}};
  emit(as_json, j, "chi = " + value.str() + (integral ? " (integral)\n" : " (not integral)\n"));
}

void run_search(unsigned q, bool exhaustive, bool as_json) {
  at_complex* raw = nullptr;
  size_t solutions = 0, tried = 0;
  check(at_search_presentation(q, exhaustive ? 1 : 0, &raw, &solutions, &tried));
  Complex x(raw);
  CString text;
  check(at_complex_format(x.get(), text.out()));
  json j{{"q", q}, {"correspondences_tried", tried}, {"complex", text.str()}};
  std::ostringstream t;
  t << "# correspondences tried " << tried << '\n';
  if (exhaustive) {
    j["solutions"] = solutions;
    t << "# solutions " << solutions << '\n';
  }
  t << text.str();
  emit(as_json, j, t.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics for Ã_n buildings and the K0 class of the identity"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(at_version()));
  std::string emit_format = "text";
  auto add_emit = [&](CLI::App* cmd) {
    cmd->add_option("--emit", emit_format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };
  auto json_out = [&] { return emit_format == "json"; };

  std::string path;
  bool transforms = false;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
  snf->add_option("file", path, "Matrix file")->required();
  snf->add_flag("--transforms", transforms, "Also print U, D and V");
  add_emit(snf);

  size_t n = 0, k = 0;
  auto* weyl = app.add_subcommand("weyl-length", "The cycle c_k in S_(n+1) and its length");
  weyl->add_option("--n", n, "n")->required();
  weyl->add_option("--k", k, "k, 1 <= k <= n")->required();
  add_emit(weyl);

  FieldArgs field;
  size_t m = 0;
  bool enumerate = false;
  auto* flags = app.add_subcommand("flags", "Full flags of GF(p^e)^m");
  flags->require_subcommand(1);
  auto* flags_count = flags->add_subcommand("count", "Number of full flags");
  field.attach(flags_count);
  flags_count->add_option("--m", m, "Ambient dimension")->required();
  flags_count->add_flag("--enumerate", enumerate, "Also enumerate the flags and report how many were listed");
  add_emit(flags_count);

  FieldArgs sfield;
  size_t sm = 0;
  std::vector<size_t> w;
  auto* sphere = app.add_subcommand("sphere", "Flags at a given relative position");
  sphere->require_subcommand(1);
  auto* sphere_count = sphere->add_subcommand("count", "Count flags at position w from the standard flag");
  sfield.attach(sphere_count);
  sphere_count->add_option("--m", sm, "Ambient dimension")->required();
  sphere_count->add_option("--w", w, "Permutation in one-line notation, e.g. 2,3,1")->required()->delimiter(',');
  add_emit(sphere_count);

  size_t bn = 0, radius = 0;
  unsigned bp = 0;
  unsigned long long max_vertices = 0;
  bool no_bases = false;
  auto* ballcmd = app.add_subcommand("ball", "Ball around the standard lattice in the building of PGL(n+1, Q_p)");
  ballcmd->add_option("--n", bn, "n")->required();
  ballcmd->add_option("--p", bp, "Prime p")->required();
  ballcmd->add_option("--radius", radius, "Radius")->required();
  ballcmd->add_option("--max-vertices", max_vertices, "Override the vertex-count guard (default 1000000)");
  ballcmd->add_flag("--no-bases", no_bases, "Omit basis matrices from JSON");
  add_emit(ballcmd);

  auto* linkcmd = app.add_subcommand("link-check", "Validate the vertex links of a complex file");
  linkcmd->add_option("file", path, "Complex file")->required();
  add_emit(linkcmd);

  unsigned mk_k = 0;
  bool full = false;
  auto* mkcmd = app.add_subcommand("mk", "The matrix M_k of a complex file");
  mkcmd->add_option("file", path, "Complex file")->required();
  mkcmd->add_option("--k", mk_k, "1 or 2")->required();
  mkcmd->add_flag("--full", full, "Print the whole matrix");
  add_emit(mkcmd);

  std::string tree, a2;
  bool with_mk = false;
  auto* ordercmd = app.add_subcommand("order", "Order of [I] in the universal relation group");
  ordercmd->add_option("--tree", tree, "Graph file");
  ordercmd->add_option("--a2", a2, "Complex file");
  ordercmd->add_flag("--with-mk", with_mk, "Include the M_1 and M_2 relations");
  add_emit(ordercmd);

  unsigned kn = 0;
  std::string q, n0;
  bool family = false;
  auto* boundcmd = app.add_subcommand("bound", "The multiple m with m[I] = 0");
  boundcmd->add_option("--n", kn, "n")->required();
  boundcmd->add_option("--q", q, "q")->required();
  boundcmd->add_option("--n0", n0, "Number of vertex orbits")->required();
  boundcmd->add_flag("--family", family, "Also print the annihilator family");
  add_emit(boundcmd);

  auto* chicmd = app.add_subcommand("chi", "Euler characteristic from n, q, n0");
  chicmd->add_option("--n", kn, "n")->required();
  chicmd->add_option("--q", q, "q")->required();
  chicmd->add_option("--n0", n0, "Number of vertex orbits")->required();
  add_emit(chicmd);

  unsigned sq = 2;
  bool exhaustive = false;
  auto* searchcmd = app.add_subcommand("search-presentation", "Find a one-vertex complex of order q (q = 2)");
  searchcmd->add_option("--q", sq, "q")->capture_default_str();
  searchcmd->add_flag("--exhaustive", exhaustive, "Count every solution");
  add_emit(searchcmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::cerr << "error: usage: " << msg << '\n';
    return 2;
  }

  try {
    if (*snf) run_snf(path, json_out(), transforms);
    else if (*weyl) run_weyl(n, k, json_out());
    else if (*flags_count) run_flags_count(field, m, enumerate, json_out());
    else if (*sphere_count) run_sphere_count(sfield, sm, w, json_out());
    else if (*ballcmd) run_ball(bn, bp, radius, max_vertices, emit_format, !no_bases);
    else if (*linkcmd) run_link_check(path, json_out());
    else if (*mkcmd) run_mk(path, mk_k, json_out(), full);
    else if (*ordercmd) run_order(tree, a2, with_mk, json_out());
    else if (*boundcmd) run_bound(kn, q, n0, json_out(), family);
    else if (*chicmd) run_chi(kn, q, n0, json_out());
    else if (*searchcmd) run_search(sq, exhaustive, json_out());
  } catch (const Failure& f) {
    std::cout.flush();
    std::cerr << "error: " << f.kind << ": " << f.message << '\n';
    return 1;
  }
  return 0;
}
