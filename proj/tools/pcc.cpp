// Command-line front end.  Output is JSON unless --csv is given; exit code 2
// means invalid input, 3 means an enumeration budget was exceeded.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pcc/centralizer.hpp"
#include "pcc/classes.hpp"
#include "pcc/json_io.hpp"
#include "pcc/matproblem.hpp"

using namespace pcc;

namespace {

struct Options {
  std::uint64_t q = 2;
  unsigned ext = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t budget = kDefaultBudget;
  std::string matrix, lambda, poly, mu, nu;
  bool list_generators = false, reps = false, json = false, csv = false;
  int m = 1, n = 1;
};

FieldPtr field_of(std::uint64_t q, unsigned ext = 1) {
  const auto [p, e] = split_prime_power(q);
  return ff_make(p, e * ext);
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

int run_gjnf(const Options& o) {
  auto f = field_of(o.q, o.ext);
  const Matrix a = Matrix::parse(f, o.matrix);
  if (!a.is_square()) throw DimensionError("matrix must be square");
  emit(to_json(gjnf(a, o.seed)));
  return 0;
}

int run_centralizer(const Options& o) {
  auto f = field_of(o.q);
  const Partition lam = Partition::parse(o.lambda);
  const Poly p = o.poly.empty() ? Poly::linear(f, 1) : Poly::parse(f, o.poly);
  if (!p.is_monic() || !is_irreducible(p)) throw std::invalid_argument("--poly must be monic irreducible");
  auto K = extension_for(p);
  Json out = {{"lambda", lam.parts()},
              {"poly", p.to_string()},
              {"field_size", K->size()},
              {"dimension", centralizer_dim(lam, p.degree())}};
  const auto gens = generating_set(lam, K);
  out["generating_set_size"] = gens.size();
  if (o.list_generators) {
    Json list = Json::array();
    for (auto& g : gens) list.push_back({{"label", g.label()}, {"element", to_json(g.realized)}});
    out["generators"] = list;
  }
  emit(out);
  return 0;
}

int run_orbits(const Options& o) {
  auto f = field_of(o.q);
  const auto set = enumerate_orbits(Partition::parse(o.mu), Partition::parse(o.nu), f, o.budget);
  Json reps = Json::array();
  for (std::size_t k = 0; k < set.count(); ++k) reps.push_back({{"rep", to_json(set.reps[k])}, {"size", set.sizes[k]}});
  emit({{"mu", set.shape.mu().parts()}, {"nu", set.shape.nu().parts()}, {"q", o.q}, {"count", set.count()},
        {"orbits", reps}});
  return 0;
}

int run_classify(const Options& o) {
  const Partition mu = Partition::parse(o.mu), nu = Partition::parse(o.nu);
  const auto v = type_classify(mu, nu);
  emit({{"mu", mu.parts()}, {"nu", nu.parts()}, {"type", to_string(v.kind)}, {"rule", v.rule}});
  return 0;
}

void emit_count(const Options& o, int m, int n, std::uint64_t count, Json extra = Json::object()) {
  if (o.csv) {
    std::cout << "m,n,q,count\n" << m << ',' << n << ',' << o.q << ',' << count << '\n';
    return;
  }
  Json j = count_json(m, n, o.q, count);
  for (auto& [k, v] : extra.items()) j[k] = v;
  emit(j);
}

int run_parabolic(const Options& o) {
  auto f = field_of(o.q);
  const auto count = parabolic_class_count(o.m, o.n, f, o.threads, o.budget);
  Json extra = Json::object();
  if (o.reps && !o.csv) {
    Json reps = Json::array();
    for_each_parabolic_rep(o.m, o.n, f, [&](const ClassRep& r) { reps.push_back(to_json(r)); }, o.budget);
    extra["reps"] = reps;
  }
  emit_count(o, o.m, o.n, count, extra);
  return 0;
}

int run_count_poly(const Options& o) {
  const auto p = count_poly(o.m, o.n, o.threads);
  Json j = {{"m", o.m}, {"n", o.n}};
  j["coeffs"] = to_json(p)["coeffs"];
  j["poly"] = p.to_string();
  Json samples = Json::array();
  for (auto& [q, c] : p.samples) samples.push_back({q, c});
  j["samples"] = samples;
  emit(j);
  return 0;
}

int run_agl(const Options& o) {
  auto f = field_of(o.q);
  Json j = {{"n", o.n}, {"q", o.q}, {"count", agl_class_count(o.n, f)}};
  if (o.reps) {
    Json reps = Json::array();
    for (auto& r : agl_class_reps(o.n, f)) reps.push_back(r.to_string());
    j["reps"] = reps;
  }
  emit(j);
  return 0;
}

int run_oracle(const Options& o, bool affine) {
  auto f = field_of(o.q);
  Oracle orc(affine ? 1 : o.m, o.n, f, affine);
  Json j = affine ? Json{{"n", o.n}, {"q", o.q}} : Json{{"m", o.m}, {"n", o.n}, {"q", o.q}};
  j["count"] = orc.count();
  j["group_order"] = orc.group_order();
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy classes in maximal parabolic subgroups of GL_n(F_q)"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "seed for randomized internals")->capture_default_str();
  app.add_option("--threads", o.threads, "worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  app.add_option("--budget", o.budget, "enumeration budget (elements)")->capture_default_str();
  app.fallthrough();

  auto q_opt = [&](CLI::App* s) { s->add_option("--q", o.q, "field size, a prime power")->required(); };
  auto pos = CLI::PositiveNumber;

  auto* gj = app.add_subcommand("gjnf", "generalized Jordan normal form of a matrix");
  q_opt(gj);
  gj->add_option("--ext", o.ext, "work over F_{q^E}")->check(pos);
  gj->add_option("--matrix", o.matrix, "rows separated by ';', entries by spaces")->required();

  auto* ce = app.add_subcommand("centralizer", "centralizer algebra of J_lambda(C_p)");
  q_opt(ce);
  ce->add_option("--lambda", o.lambda, "partition, e.g. 4,2")->required();
  ce->add_option("--poly", o.poly, "monic irreducible p, coefficients low-to-high (default t-1)");
  ce->add_flag("--list-generators", o.list_generators);

  auto* mp = app.add_subcommand("matprob", "the orbit problem for one eigenvalue block");
  mp->require_subcommand(1);
  auto* orb = mp->add_subcommand("orbits", "enumerate orbits");
  q_opt(orb);
  orb->add_option("--mu", o.mu)->required();
  orb->add_option("--nu", o.nu)->required();
  auto* cls = mp->add_subcommand("classify", "finite or infinite type");
  cls->add_option("--mu", o.mu)->required();
  cls->add_option("--nu", o.nu)->required();

  auto* cl = app.add_subcommand("classes", "class counts and representatives");
  cl->require_subcommand(1);
  auto* par = cl->add_subcommand("parabolic", "classes of P^(m,n)(F_q)");
  q_opt(par);
  par->add_option("--m", o.m)->required()->check(pos);
  par->add_option("--n", o.n)->required()->check(pos);
  par->add_flag("--reps", o.reps);
  auto* fmt = par->add_option_group("format");
  fmt->add_flag("--json", o.json);
  fmt->add_flag("--csv", o.csv);
  fmt->require_option(0, 1);
  auto* cp = cl->add_subcommand("count-poly", "class count as a polynomial in q");
  cp->add_option("--m", o.m)->required()->check(pos);
  cp->add_option("--n", o.n)->required()->check(pos);
  auto* agl = cl->add_subcommand("agl", "classes of AGL_n(F_q)");
  q_opt(agl);
  agl->add_option("--n", o.n)->required()->check(pos);
  agl->add_flag("--reps", o.reps);

  auto* orc = app.add_subcommand("oracle", "brute-force class counts");
  orc->require_subcommand(1);
  auto* opar = orc->add_subcommand("parabolic");
  q_opt(opar);
  opar->add_option("--m", o.m)->required()->check(pos);
  opar->add_option("--n", o.n)->required()->check(pos);
  auto* oagl = orc->add_subcommand("agl");
  q_opt(oagl);
  oagl->add_option("--n", o.n)->required()->check(pos);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gj->parsed()) return run_gjnf(o);
    if (ce->parsed()) return run_centralizer(o);
    if (orb->parsed()) return run_orbits(o);
    if (cls->parsed()) return run_classify(o);
    if (par->parsed()) return run_parabolic(o);
    if (cp->parsed()) return run_count_poly(o);
    if (agl->parsed()) return run_agl(o);
    if (opar->parsed()) return run_oracle(o, false);
    if (oagl->parsed()) return run_oracle(o, true);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
