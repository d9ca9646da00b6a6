#include "atorsion.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "atorsion/complexes.hpp"
#include "atorsion/exactint.hpp"
#include "atorsion/fqlinalg.hpp"
#include "atorsion/ktheory.hpp"
#include "atorsion/padic.hpp"
#include "atorsion/spherical.hpp"
#include "atorsion/weyl.hpp"

using namespace atorsion;

struct at_matrix {
  IntMatrix m;
};
struct at_snf {
  SnfResult s;
};
struct at_ball {
  BuildingBall b;
};
struct at_graph {
  QuotientGraph g;
};
struct at_complex {
  A2Complex x;
};
struct at_presentation {
  RelationPresentation p;
  std::variant<QuotientGraph, A2Complex> source;
  unsigned order = 0;  // link order, for complexes
  std::optional<std::vector<IdentityCheck>> checks;
};

namespace {

thread_local std::string last_error;

at_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::dimension: return AT_ERR_DIMENSION;
    case ErrorKind::field: return AT_ERR_FIELD;
    case ErrorKind::range: return AT_ERR_RANGE;
    case ErrorKind::size: return AT_ERR_SIZE;
    case ErrorKind::parse: return AT_ERR_PARSE;
    case ErrorKind::structure: return AT_ERR_STRUCTURE;
    case ErrorKind::validation: return AT_ERR_VALIDATION;
    case ErrorKind::inconsistency: return AT_ERR_INCONSISTENCY;
    case ErrorKind::not_found: return AT_ERR_NOT_FOUND;
  }
  return AT_ERR_INTERNAL;
}

at_status set_error(at_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
at_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return AT_OK;
  } catch (const Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(AT_ERR_SIZE, "out of memory");
  } catch (const std::exception& e) {
    return set_error(AT_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

BigInt parse_big(const char* s, const char* what) {
  if (!s) fail(ErrorKind::range, std::string(what) + " is missing");
  BigInt v;
  if (v.set_str(s, 10) != 0) fail(ErrorKind::parse, std::string(what) + " '" + s + "' is not an integer");
  return v;
}

FieldSpec field_of(unsigned p, unsigned e, const unsigned* modulus, size_t len) {
  std::vector<unsigned> mod;
  if (modulus) mod.assign(modulus, modulus + len);
  return FieldSpec(p, e, std::move(mod));
}

Permutation perm_of(const size_t* images, size_t m) {
  std::vector<unsigned> v(images, images + m);
  return Permutation(std::move(v));
}

}  // namespace

#define AT_NONNULL(ptr)                                                    \
  do {                                                                     \
    if (!(ptr)) return set_error(AT_ERR_ARGUMENT, #ptr " must not be null"); \
  } while (0)

extern "C" {

const char* at_version(void) { return "0.1.0"; }

const char* at_status_name(at_status s) {
  switch (s) {
    case AT_OK: return "ok";
    case AT_ERR_DIMENSION: return "dimension";
    case AT_ERR_FIELD: return "field";
    case AT_ERR_RANGE: return "range";
    case AT_ERR_SIZE: return "size";
    case AT_ERR_PARSE: return "parse";
    case AT_ERR_STRUCTURE: return "structure";
    case AT_ERR_VALIDATION: return "validation";
    case AT_ERR_INCONSISTENCY: return "inconsistency";
    case AT_ERR_NOT_FOUND: return "not_found";
    case AT_ERR_ARGUMENT: return "argument";
    case AT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* at_last_error(void) { return last_error.c_str(); }

void at_string_free(char* s) { std::free(s); }

// ---- matrices ----

at_status at_matrix_new(size_t rows, size_t cols, at_matrix** out) {
  AT_NONNULL(out);
  return guarded([&] { *out = new at_matrix{IntMatrix(rows, cols)}; });
}

at_status at_matrix_parse(const char* text, at_matrix** out) {
  AT_NONNULL(text);
  AT_NONNULL(out);
  return guarded([&] { *out = new at_matrix{parse_matrix(text)}; });
}

at_status at_matrix_format(const at_matrix* m, char** out) {
  AT_NONNULL(m);
  AT_NONNULL(out);
  return guarded([&] { *out = dup(format_matrix(m->m)); });
}

size_t at_matrix_rows(const at_matrix* m) { return m ? m->m.rows() : 0; }
size_t at_matrix_cols(const at_matrix* m) { return m ? m->m.cols() : 0; }

at_status at_matrix_set(at_matrix* m, size_t i, size_t j, const char* value) {
  AT_NONNULL(m);
  if (i >= m->m.rows() || j >= m->m.cols()) return set_error(AT_ERR_ARGUMENT, "matrix index out of range");
  return guarded([&] { m->m(i, j) = parse_big(value, "matrix entry"); });
}

at_status at_matrix_get(const at_matrix* m, size_t i, size_t j, char** out) {
  AT_NONNULL(m);
  AT_NONNULL(out);
  if (i >= m->m.rows() || j >= m->m.cols()) return set_error(AT_ERR_ARGUMENT, "matrix index out of range");
  return guarded([&] { *out = dup(m->m(i, j).get_str()); });
}

void at_matrix_free(at_matrix* m) { delete m; }

at_status at_snf_compute(const at_matrix* a, at_snf** out) {
  AT_NONNULL(a);
  AT_NONNULL(out);
  return guarded([&] { *out = new at_snf{snf(a->m)}; });
}

size_t at_snf_rank(const at_snf* s) { return s ? s->s.rank() : 0; }
size_t at_snf_factor_count(const at_snf* s) { return s ? s->s.invariant_factors.size() : 0; }

at_status at_snf_factor(const at_snf* s, size_t i, char** out) {
  AT_NONNULL(s);
  AT_NONNULL(out);
  if (i >= s->s.invariant_factors.size()) return set_error(AT_ERR_ARGUMENT, "invariant factor index out of range");
  return guarded([&] { *out = dup(s->s.invariant_factors[i].get_str()); });
}

at_status at_snf_transforms(const at_snf* s, at_matrix** u, at_matrix** d, at_matrix** v) {
  AT_NONNULL(s);
  return guarded([&] {
    std::unique_ptr<at_matrix> mu(u ? new at_matrix{s->s.U} : nullptr);
    std::unique_ptr<at_matrix> md(d ? new at_matrix{s->s.D} : nullptr);
    std::unique_ptr<at_matrix> mv(v ? new at_matrix{s->s.V} : nullptr);
    if (u) *u = mu.release();
    if (d) *d = md.release();
    if (v) *v = mv.release();
  });
}

void at_snf_free(at_snf* s) { delete s; }

at_status at_element_order(const at_matrix* relations, size_t index, char** out) {
  AT_NONNULL(relations);
  AT_NONNULL(out);
  if (index >= relations->m.cols()) return set_error(AT_ERR_ARGUMENT, "generator index out of range");
  return guarded([&] { *out = dup(element_order(relations->m, index).to_string()); });
}

// ---- permutations ----

at_status at_cycle_perm(size_t n, size_t k, size_t* images, unsigned long* length_out) {
  AT_NONNULL(images);
  return guarded([&] {
    const auto w = cycle_perm(n, k);
    for (size_t i = 0; i < w.degree(); ++i) images[i] = w.images()[i];
    if (length_out) *length_out = length(w);
  });
}

at_status at_perm_length(const size_t* images, size_t m, unsigned long* length_out) {
  AT_NONNULL(images);
  AT_NONNULL(length_out);
  return guarded([&] { *length_out = length(perm_of(images, m)); });
}

at_status at_poincare(size_t m, const char* q, char** out) {
  AT_NONNULL(out);
  return guarded([&] { *out = dup(poincare_polynomial(m, parse_big(q, "q")).get_str()); });
}

// ---- flags ----

at_status at_flag_count(unsigned p, unsigned e, const unsigned* modulus, size_t modulus_len, size_t m, char** out) {
  AT_NONNULL(out);
  return guarded([&] {
    const auto f = field_of(p, e, modulus, modulus_len);
    *out = dup(flag_count(f.q(), m).get_str());
  });
}

at_status at_flag_enumerate(unsigned p, unsigned e, const unsigned* modulus, size_t modulus_len, size_t m,
                            size_t* count) {
  AT_NONNULL(count);
  return guarded([&] { *count = enumerate_full_flags(field_of(p, e, modulus, modulus_len), m).size(); });
}

at_status at_sphere_count(unsigned p, unsigned e, const unsigned* modulus, size_t modulus_len, size_t m,
                          const size_t* w, size_t* count) {
  AT_NONNULL(w);
  AT_NONNULL(count);
  return guarded([&] {
    const auto f = field_of(p, e, modulus, modulus_len);
    *count = count_at_distance(f, m, standard_flag(f, m), perm_of(w, m));
  });
}

// ---- balls ----

at_status at_ball_build(size_t n, unsigned p, size_t radius, unsigned long long max_vertices, at_ball** out) {
  AT_NONNULL(out);
  return guarded([&] {
    BallLimits limits;
    if (max_vertices != 0) limits.max_vertices = max_vertices;
    *out = new at_ball{ball(n, p, radius, limits)};
  });
}

size_t at_ball_vertex_count(const at_ball* b) { return b ? b->b.vertices.size() : 0; }
size_t at_ball_edge_count(const at_ball* b) { return b ? b->b.edges.size() : 0; }
size_t at_ball_chamber_count(const at_ball* b) { return b ? b->b.chambers.size() : 0; }

at_status at_ball_type_tally(const at_ball* b, size_t* tally, size_t len) {
  AT_NONNULL(b);
  AT_NONNULL(tally);
  const auto t = b->b.type_tally();
  if (len < t.size()) return set_error(AT_ERR_ARGUMENT, "tally buffer shorter than n+1");
  for (size_t i = 0; i < t.size(); ++i) tally[i] = t[i];
  return AT_OK;
}

at_status at_ball_vertex(const at_ball* b, size_t v, unsigned* type, size_t* distance, size_t* degree,
                         size_t* chambers, int* interior) {
  AT_NONNULL(b);
  if (v >= b->b.vertices.size()) return set_error(AT_ERR_ARGUMENT, "vertex index out of range");
  return guarded([&] {
    if (type) *type = b->b.types[v];
    if (distance) *distance = b->b.distance[v];
    if (degree) *degree = b->b.adjacency[v].size();
    if (chambers) *chambers = b->b.chambers_at(v).size();
    if (interior) *interior = b->b.interior(v) ? 1 : 0;
  });
}

at_status at_ball_link_check(const at_ball* b, size_t v, int* ok, unsigned* order) {
  AT_NONNULL(b);
  AT_NONNULL(ok);
  return guarded([&] {
    const auto check = check_projective_plane(link(b->b, v).incidence);
    *ok = check.ok ? 1 : 0;
    if (order) *order = check.order;
  });
}

at_status at_ball_json(const at_ball* b, int include_bases, char** out) {
  AT_NONNULL(b);
  AT_NONNULL(out);
  return guarded([&] { *out = dup(ball_to_json(b->b, include_bases != 0)); });
}

void at_ball_free(at_ball* b) { delete b; }

// ---- graphs ----

at_status at_graph_new(size_t vertices, at_graph** out) {
  AT_NONNULL(out);
  return guarded([&] {
    auto g = std::make_unique<at_graph>();
    for (size_t i = 0; i < vertices; ++i) g->g.add_vertex();
    *out = g.release();
  });
}

at_status at_graph_parse(const char* text, at_graph** out) {
  AT_NONNULL(text);
  AT_NONNULL(out);
  return guarded([&] { *out = new at_graph{parse_graph(text)}; });
}

at_status at_graph_add_edge(at_graph* g, size_t u, size_t v) {
  AT_NONNULL(g);
  return guarded([&] { g->g.add_geometric_edge(u, v); });
}

size_t at_graph_vertex_count(const at_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t at_graph_edge_count(const at_graph* g) { return g ? g->g.geometric_edge_count() : 0; }
size_t at_graph_low_degree_count(const at_graph* g) { return g ? g->g.low_degree_vertices().size() : 0; }
void at_graph_free(at_graph* g) { delete g; }

// ---- complexes ----

at_status at_complex_parse(const char* text, at_complex** out) {
  AT_NONNULL(text);
  AT_NONNULL(out);
  return guarded([&] { *out = new at_complex{parse_complex(text)}; });
}

at_status at_complex_torus(size_t scale, at_complex** out) {
  AT_NONNULL(out);
  return guarded([&] { *out = new at_complex{torus_complex(scale)}; });
}

at_status at_complex_union(const at_complex* a, const at_complex* b, at_complex** out) {
  AT_NONNULL(a);
  AT_NONNULL(b);
  AT_NONNULL(out);
  return guarded([&] { *out = new at_complex{disjoint_union(a->x, b->x)}; });
}

at_status at_complex_format(const at_complex* x, char** out) {
  AT_NONNULL(x);
  AT_NONNULL(out);
  return guarded([&] { *out = dup(format_complex(x->x)); });
}

at_status at_complex_counts(const at_complex* x, size_t* n0, size_t* n1, size_t* n2, long long* chi_out) {
  AT_NONNULL(x);
  return guarded([&] {
    const auto c = cell_counts(x->x);
    if (n0) *n0 = c.n0;
    if (n1) *n1 = c.n1;
    if (n2) *n2 = c.n2;
    if (chi_out) *chi_out = c.chi;
  });
}

at_status at_complex_link_check(const at_complex* x, int* ok, unsigned* order, char** report) {
  AT_NONNULL(x);
  AT_NONNULL(ok);
  return guarded([&] {
    const auto r = validate_links(x->x);
    if (r.ok) cell_counts(x->x, r.order);
    std::string text;
    for (const auto& f : r.failures) text += f + "\n";
    if (report) *report = dup(text);
    *ok = r.ok ? 1 : 0;
    if (order) *order = r.order;
  });
}

at_status at_complex_mk(const at_complex* x, unsigned k, at_matrix** out) {
  AT_NONNULL(x);
  AT_NONNULL(out);
  return guarded([&] { *out = new at_matrix{build_mk(x->x, k)}; });
}

at_status at_search_presentation(unsigned q, int exhaustive, at_complex** out, size_t* solutions, size_t* tried) {
  return guarded([&] {
    auto r = search_presentation(q, exhaustive != 0);
    if (solutions) *solutions = r.solutions;
    if (tried) *tried = r.correspondences_tried;
    if (!r.complex) fail(ErrorKind::not_found, "search-presentation: no triangle presentation found");
    if (out) *out = new at_complex{std::move(*r.complex)};
  });
}

void at_complex_free(at_complex* x) { delete x; }

// ---- presentations ----

at_status at_presentation_tree(const at_graph* g, at_presentation** out) {
  AT_NONNULL(g);
  AT_NONNULL(out);
  return guarded([&] { *out = new at_presentation{tree_relations(g->g), g->g, 0, std::nullopt}; });
}

at_status at_presentation_a2(const at_complex* x, int include_mk, at_presentation** out) {
  AT_NONNULL(x);
  AT_NONNULL(out);
  return guarded([&] {
    const unsigned q = require_valid_links(x->x);
    auto p = std::make_unique<at_presentation>(at_presentation{a2_relations(x->x, include_mk != 0), x->x, q, std::nullopt});
    *out = p.release();
  });
}

size_t at_presentation_generator_count(const at_presentation* p) { return p ? p->p.generators.size() : 0; }
size_t at_presentation_row_count(const at_presentation* p) { return p ? p->p.relations.rows() : 0; }

at_status at_presentation_label(const at_presentation* p, size_t generator, char** out) {
  AT_NONNULL(p);
  AT_NONNULL(out);
  if (generator >= p->p.generators.size()) return set_error(AT_ERR_ARGUMENT, "generator index out of range");
  return guarded([&] { *out = dup(p->p.generators[generator].label()); });
}

at_status at_presentation_tag(const at_presentation* p, size_t row, char** out) {
  AT_NONNULL(p);
  AT_NONNULL(out);
  if (row >= p->p.origin.size()) return set_error(AT_ERR_ARGUMENT, "row index out of range");
  return guarded([&] { *out = dup(p->p.origin[row]); });
}

at_status at_presentation_matrix(const at_presentation* p, at_matrix** out) {
  AT_NONNULL(p);
  AT_NONNULL(out);
  return guarded([&] { *out = new at_matrix{p->p.relations}; });
}

at_status at_presentation_order(const at_presentation* p, char** out) {
  AT_NONNULL(p);
  AT_NONNULL(out);
  return guarded([&] { *out = dup(order_of_identity(p->p).to_string()); });
}

at_status at_presentation_invariant_factors(const at_presentation* p, char** out) {
  AT_NONNULL(p);
  AT_NONNULL(out);
  return guarded([&] {
    std::ostringstream s;
    if (p->p.relations.rows() > 0) {
      bool first = true;
      for (const auto& f : snf(p->p.relations).invariant_factors) {
        if (f == 0) continue;
        s << (first ? "" : " ") << f.get_str();
        first = false;
      }
    }
    *out = dup(s.str());
  });
}

static at_status ensure_checks(const at_presentation* p) {
  auto* mp = const_cast<at_presentation*>(p);
  if (mp->checks) return AT_OK;
  return guarded([&] {
    if (const auto* g = std::get_if<QuotientGraph>(&mp->source))
      mp->checks = std::vector<IdentityCheck>{tree_identity_check(*g, mp->p)};
    else
      mp->checks = a2_identity_checks(std::get<A2Complex>(mp->source), mp->p, mp->order);
  });
}

at_status at_presentation_check_count(const at_presentation* p, size_t* count) {
  AT_NONNULL(p);
  AT_NONNULL(count);
  if (auto s = ensure_checks(p); s != AT_OK) return s;
  *count = p->checks->size();
  return AT_OK;
}

at_status at_presentation_check(const at_presentation* p, size_t i, char** name, int* holds) {
  AT_NONNULL(p);
  if (auto s = ensure_checks(p); s != AT_OK) return s;
  if (i >= p->checks->size()) return set_error(AT_ERR_ARGUMENT, "check index out of range");
  return guarded([&] {
    if (name) *name = dup((*p->checks)[i].name);
    if (holds) *holds = (*p->checks)[i].holds ? 1 : 0;
  });
}

void at_presentation_free(at_presentation* p) { delete p; }

// ---- closed forms ----

at_status at_bound(unsigned n, const char* q, const char* n0, char** m, char** case_tag) {
  AT_NONNULL(m);
  return guarded([&] {
    const auto r = bound(n, parse_big(q, "q"), parse_big(n0, "n0"));
    std::unique_ptr<char, decltype(&std::free)> ms(dup(r.m.get_str()), &std::free);
    if (case_tag) *case_tag = dup(r.case_tag);
    *m = ms.release();
  });
}

at_status at_annihilator_family(unsigned n, const char* q, const char* n0, char** out) {
  AT_NONNULL(out);
  return guarded([&] {
    std::string s;
    for (const auto& v : annihilator_family(n, parse_big(q, "q"), parse_big(n0, "n0")))
      s += (s.empty() ? "" : " ") + v.get_str();
    *out = dup(s);
  });
}

at_status at_chi(unsigned n, const char* q, const char* n0, char** value, int* integral) {
  AT_NONNULL(value);
  return guarded([&] {
    const auto r = chi(n, parse_big(q, "q"), parse_big(n0, "n0"));
    if (integral) *integral = r.integral ? 1 : 0;
    *value = dup(r.value.get_str());
  });
}

}  // extern "C"
