#include "cubmono/verify.hpp"

#include <chrono>
#include <functional>
#include <optional>

#include "cubmono/error.hpp"
#include "cubmono/finite_group.hpp"
#include "cubmono/fixtures.hpp"
#include "cubmono/group_engine.hpp"
#include "cubmono/heisenberg_action.hpp"
#include "cubmono/serialize.hpp"
#include "cubmono/surface_lines.hpp"

namespace cubmono {

using nlohmann::json;

Scope scope_from_string(const std::string& s) {
  if (s == "fixtures") return Scope::Fixtures;
  if (s == "pipeline") return Scope::Pipeline;
  if (s == "all") return Scope::All;
  throw Error(ErrorKind::InvalidInput, "unknown scope '" + s + "'");
}

std::string to_string(Scope s) {
  switch (s) {
    case Scope::Fixtures:
      return "fixtures";
    case Scope::Pipeline:
      return "pipeline";
    case Scope::All:
      break;
  }
  return "all";
}

namespace {

using Group = FiniteGroup<LatticeMap>;

constexpr std::size_t kWeylOrder = 51840;
constexpr std::size_t kCentralizerOrder = 648;
constexpr std::size_t kClassSize = 80;
constexpr double kNodeTol = 1e-8;

const std::map<int, std::size_t> kWeylCensus = {{1, 1},    {2, 891},  {3, 800},  {4, 5940},  {5, 5184},
                                                {6, 12960}, {8, 6480}, {9, 5760}, {10, 5184}, {12, 8640}};
// det(tI − Ω) = (t − 1)(t² + t + 1)³, ascending.
const std::array<std::int64_t, kRank + 1> kOmegaCharPoly = {-1, -2, -3, -1, 1, 3, 2, 1};

struct Outcome {
  CheckStatus status = CheckStatus::Pass;
  json observed;
  json expected;
};

Outcome outcome(bool ok, json observed, json expected) {
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(observed), std::move(expected)};
}

Outcome skipped(const std::string& why) { return {CheckStatus::Skipped, {{"skipped", why}}, nullptr}; }

class Runner {
 public:
  explicit Runner(bool propagate_ambiguity) : propagate_(propagate_ambiguity) {}

  void run(const std::string& id, const std::string& description, const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c{id, description, CheckStatus::Fail, nullptr, nullptr, 0};
    try {
      auto o = fn();
      c.status = o.status;
      c.observed = std::move(o.observed);
      c.expected = std::move(o.expected);
    } catch (const Error& e) {
      if (propagate_ && is_numerical_ambiguity(e.kind())) throw;
      c.observed = {{"error", e.what()}};
    } catch (const std::exception& e) {
      c.observed = {{"error", e.what()}};
    }
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    checks.push_back(std::move(c));
  }

  std::vector<Check> checks;

 private:
  bool propagate_;
};

json omega_summary(const LatticeMap& m) {
  const auto tc = trace_character(m);
  return {{"order", order(m)}, {"trace", tc.trace}, {"chiV6", tc.chi_v6}, {"charPoly", m.char_poly()}};
}

json omega_expected() { return {{"order", 3}, {"trace", -2}, {"chiV6", -3}, {"charPoly", kOmegaCharPoly}}; }

LatticeMap commutator(const LatticeMap& a, const LatticeMap& b) { return a * b * inverse(a) * inverse(b); }

json order24_json(const Order24Evidence<LatticeMap>& ev) {
  return {{"abelian", ev.abelian},
          {"hasOrder4", ev.has_order4},
          {"hasOrder6", ev.has_order6},
          {"sylow3Normal", ev.sylow3_normal},
          {"kind", to_string(ev.kind)}};
}

json order24_expected() {
  return {{"abelian", false}, {"hasOrder4", true}, {"hasOrder6", true}, {"sylow3Normal", false}, {"kind", "SL2(Z/3)"}};
}

bool all_valid(const Group& g) {
  for (const auto& x : g.elements())
    if (!x.is_valid()) return false;
  return true;
}

/// W(E₆) and the census, built once and shared by both suites.
class WeylCache {
 public:
  const Group& group() {
    if (!w_) {
      const auto gens = weyl_generators();
      w_ = Group::closure({gens.begin(), gens.end()}, 60000);
    }
    return *w_;
  }

 private:
  std::optional<Group> w_;
};

/// The generated group ⟨H₁, H₂, G₁, G₂⟩ against the centralizer of Ω.
void group_checks(Runner& run, const std::string& prefix, const std::function<const GeneratorSet*()>& gens,
                  WeylCache& weyl, std::optional<Group>& centralizer_out) {
  std::optional<Group> h, g, i;
  auto need = [&]() {
    const auto* s = gens();
    if (!s) throw Error(ErrorKind::InvalidInput, "generators unavailable");
    return s;
  };

  run.run(prefix + "omega.invariants", "deck class has order 3, trace -2, chi_V6 = -3, char poly (t-1)(t^2+t+1)^3",
          [&] {
            const auto o = omega_summary(need()->omega);
            return outcome(o == omega_expected() && need()->omega.is_valid(), o, omega_expected());
          });
  run.run(prefix + "omega.centralizer", "conjugacy class of the deck class has 80 elements, centralizer order 648",
          [&] {
            const auto& w = weyl.group();
            const auto cls = conjugacy_class_size(need()->omega, w);
            centralizer_out = centralizer(need()->omega, w);
            return outcome(cls == kClassSize && centralizer_out->order() == kCentralizerOrder,
                           {{"classSize", cls}, {"centralizerOrder", centralizer_out->order()}},
                           {{"classSize", kClassSize}, {"centralizerOrder", kCentralizerOrder}});
          });
  run.run(prefix + "heisenberg", "<H1,H2> has order 27, [H1,H2] is a power of the deck class, both commute with it",
          [&] {
            const auto* s = need();
            h = Group::closure({s->h1, s->h2});
            const auto c = commutator(s->h1, s->h2);
            const bool power = c == s->omega || c == s->omega * s->omega;
            const bool comm = commute(s->h1, s->omega) && commute(s->h2, s->omega);
            return outcome(h->order() == 27 && power && comm,
                           {{"order", h->order()}, {"commutatorIsOmegaPower", power}, {"commuteWithOmega", comm},
                            {"centerOrder", center(*h).size()}},
                           {{"order", 27}, {"commutatorIsOmegaPower", true}, {"commuteWithOmega", true},
                            {"centerOrder", 3}});
          });
  run.run(prefix + "g.order24", "<G1,G2> has order 24 with elements of order 4 and 6 and non-normal 3-Sylows", [&] {
    const auto* s = need();
    g = Group::closure({s->g1, s->g2});
    if (g->order() != 24) return outcome(false, {{"order", g->order()}}, {{"order", 24}});
    json obs = order24_json(identify_order24(*g));
    obs["order"] = 24;
    json exp = order24_expected();
    exp["order"] = 24;
    return outcome(obs == exp, obs, exp);
  });
  run.run(prefix + "relations", "the four conjugation relations hold exactly", [&] {
    const auto rs = conjugation_relations(*need());
    return outcome(all_hold(rs), relations_json(rs), "all pass");
  });
  run.run(prefix + "h-cap-g", "<H1,H2> and <G1,G2> meet trivially", [&] {
    if (!h || !g) return skipped("subgroups unavailable");
    const auto n = intersect(*h, *g).order();
    return outcome(n == 1, n, 1);
  });
  run.run(prefix + "i.order", "<H1,H2,G1,G2> has order 648 = 27 * 24, every element preserves the form and K", [&] {
    const auto* s = need();
    i = Group::closure({s->h1, s->h2, s->g1, s->g2});
    const bool valid = all_valid(*i);
    return outcome(i->order() == kCentralizerOrder && valid, {{"order", i->order()}, {"allValid", valid}},
                   {{"order", kCentralizerOrder}, {"allValid", true}});
  });
  run.run(prefix + "h-normal", "<H1,H2> is normal in the generated group", [&] {
    if (!h || !i) return skipped("subgroups unavailable");
    const bool n = is_normal(*h, *i);
    return outcome(n, n, true);
  });
  run.run(prefix + "i.centralizer", "generated group equals the centralizer of the deck class as a matrix set", [&] {
    if (!i || !centralizer_out) return skipped("groups unavailable");
    const bool sub = is_subset(*i, *centralizer_out);
    const bool eq = same_elements(*i, *centralizer_out);
    return outcome(eq, {{"contained", sub}, {"order", i->order()}, {"centralizerOrder", centralizer_out->order()}},
                   {{"contained", true}, {"order", kCentralizerOrder}, {"centralizerOrder", kCentralizerOrder}});
  });
  run.run(prefix + "isomorphism", "generator map into H3(Z/3) x| SL2(Z/3) extends to an isomorphism", [&] {
    if (!i) return skipped("group unavailable");
    const auto im = standard_generator_images();
    const auto r = verify_isomorphism(*i, {im.begin(), im.end()});
    json images = json::array();
    for (const auto& x : im) images.push_back(to_string(x));
    return outcome(true, {{"isomorphic", true}, {"edgesChecked", r.edges_checked}, {"images", images}},
                   {{"isomorphic", true}});
  });
}

void weyl_checks(Runner& run, WeylCache& weyl) {
  run.run("weyl.order", "closure of the six simple reflections has 51840 elements", [&] {
    const auto n = weyl.group().order();
    return outcome(n == kWeylOrder, n, kWeylOrder);
  });
  run.run("weyl.invariants", "every element of W(E6) preserves diag(1,-I6) and fixes K", [&] {
    const bool ok = all_valid(weyl.group());
    return outcome(ok, ok, true);
  });
  run.run("weyl.census", "element-order census of W(E6)", [&] {
    const auto c = census(weyl.group());
    return outcome(c == kWeylCensus, census_json(c), census_json(kWeylCensus));
  });
}

void model_checks(Runner& run, const std::optional<Group>& centralizer) {
  std::optional<FiniteGroup<SemidirectElt>> model;
  run.run("model.order", "semidirect model has 648 elements and a center of order 3", [&] {
    model = semidirect_model();
    const auto z = center(*model);
    return outcome(model->order() == kCentralizerOrder && z.size() == 3, {{"order", model->order()}, {"center", z.size()}},
                   {{"order", kCentralizerOrder}, {"center", 3}});
  });
  run.run("model.phi-action", "phi is an action by automorphisms, checked exhaustively", [&] {
    const int aut = count_automorphism_failures(phi_action), act = count_action_failures(phi_action);
    return outcome(aut == 0 && act == 0, {{"automorphismFailures", aut}, {"actionFailures", act}},
                   {{"automorphismFailures", 0}, {"actionFailures", 0}});
  });
  run.run("model.associativity", "twisted product is associative on 1000 seeded random triples", [&] {
    const int f = associativity_failures();
    return outcome(f == 0, f, 0);
  });
  run.run("model.census", "model census equals the census of the centralizer of the deck class", [&] {
    if (!model || !centralizer) return skipped("groups unavailable");
    const auto a = census(*model), b = census(*centralizer);
    return outcome(a == b, census_json(a), census_json(b));
  });
}

void fixture_checks(Runner& run, const std::string& data_dir, WeylCache& weyl, std::optional<Group>& centralizer) {
  std::optional<PaperMatrices> pm;
  std::optional<GeneratorSet> gens;
  run.run("fixtures.load", "printed matrices load with a valid checksum", [&] {
    pm = load_paper_matrices(data_dir + "/fixtures/paper_matrices.json");
    gens = GeneratorSet{pm->h1, pm->h2, pm->g1, pm->g2, pm->omega};
    return outcome(true, "loaded", "loaded");
  });
  run.run("fixtures.invariants", "each printed matrix preserves the form and fixes K", [&] {
    if (!pm) return skipped("fixtures unavailable");
    json obs = json::object();
    bool ok = true;
    const std::pair<const char*, const LatticeMap*> named[] = {
        {"Omega", &pm->omega}, {"H1", &pm->h1}, {"H2", &pm->h2}, {"G1", &pm->g1}, {"G2", &pm->g2}};
    for (const auto& [name, m] : named) {
      obs[name] = m->is_valid();
      ok &= m->is_valid();
    }
    return outcome(ok, obs, {{"Omega", true}, {"H1", true}, {"H2", true}, {"G1", true}, {"G2", true}});
  });
  group_checks(run, "fixtures.", [&]() -> const GeneratorSet* { return gens ? &*gens : nullptr; }, weyl, centralizer);
}

template <class R>
std::vector<Check> pipeline_checks(const VerifyOptions& opts, const std::string& data_dir, WeylCache& weyl,
                                   bool propagate) {
  Runner run(propagate);
  Tolerances tol;
  tol.incidence = opts.tol;
  std::optional<SurfaceData<R>> base;
  std::optional<HeisenbergData<R>> heis;
  std::optional<GeneratorSet> gens, variant_gens;
  std::optional<LoopFixtures> loops;
  std::map<std::string, MonodromyResult<R>> mono;
  std::optional<PaperMatrices> pm;
  try {
    pm = load_paper_matrices(data_dir + "/fixtures/paper_matrices.json");
  } catch (const Error&) {
  }

  run.run("pipeline.lines", "27 lines at lambda = 0, srg(27,10,1,5), 9 concurrent triples, 351/351 pairings", [&] {
    base = analyze_surface(family_lambda<R>(Complex<R>(0)), tol);
    const auto& s = *base;
    const bool srg = is_strongly_regular(s.graph, 10, 1, 5);
    const bool triples = triples_concurrent(s.graph);
    const int agree = pairing_agreement(s.graph, s.classes);
    return outcome(s.lines.size() == 27 && srg && triples && agree == 351,
                   {{"lines", s.lines.size()}, {"stronglyRegular", srg}, {"triplesConcurrent", triples},
                    {"pairingAgreement", agree}, {"sixer", s.sixer}},
                   {{"lines", 27}, {"stronglyRegular", true}, {"triplesConcurrent", true}, {"pairingAgreement", 351}});
  });

  run.run("pipeline.heisenberg-lift", "Hesse transform and lifted translations act on the 27 lines", [&] {
    if (!base) return skipped("lines unavailable");
    heis = heisenberg_matrices(*base, tol);
    const LatticeMap omega = perm_to_lattice_map(deck_permutation(), base->classes, base->sixer);
    const auto comm = compose(compose(heis->h1_perm, heis->h2_perm), compose(inverse(heis->h1_perm), inverse(heis->h2_perm)));
    const bool deck = comm == deck_permutation() || comm == inverse(deck_permutation());
    gens = GeneratorSet{heis->h1, heis->h2, LatticeMap::identity(), LatticeMap::identity(), omega};
    return outcome(heis->h1_perm.preserves(base->graph) && heis->h2_perm.preserves(base->graph) && deck,
                   {{"preservesIncidence", true}, {"commutatorIsDeck", deck},
                    {"scale", {static_cast<double>(heis->transform.scale.real()),
                               static_cast<double>(heis->transform.scale.imag())}}},
                   {{"preservesIncidence", true}, {"commutatorIsDeck", true}});
  });

  auto loop_check = [&](const std::string& name) {
    run.run("pipeline.monodromy." + name, "loop " + name + " reproduces the transcribed root and flex permutations",
            [&, name] {
              if (!base) return skipped("lines unavailable");
              if (!loops) loops = load_loop_fixtures(data_dir + "/fixtures/loop_permutations.json");
              auto r = monodromy(loop_by_name<R>(name), *base, opts.tracking);
              const auto& fx = loops->loops.at(name);
              std::vector<std::complex<double>> roots, ys;
              for (const auto& z : r.roots.base) roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
              std::vector<int> fperm;
              for (int k = 1; k < 9; ++k) {
                const auto y = r.flexes.base[k].y() / r.flexes.base[k].z();
                ys.emplace_back(static_cast<double>(y.real()), static_cast<double>(y.imag()));
                fperm.push_back(r.flexes.perm[k] - 1);
              }
              std::string why_r, why_f;
              const bool ok_r = agrees_with_fixture(roots, r.roots.perm, loops->root_nodes, fx.root_perm, kNodeTol, &why_r);
              const bool ok_f = r.flexes.perm[0] == 0 &&
                                agrees_with_fixture(ys, fperm, loops->flex_nodes, fx.flex_perm, kNodeTol, &why_f);
              json obs = {{"steps", r.roots.steps_used},
                          {"roots", cycle_notation(r.roots.perm)},
                          {"flexes", cycle_notation({r.flexes.perm.images.begin(), r.flexes.perm.images.end()})},
                          {"rootsMatch", ok_r},
                          {"flexesMatch", ok_f}};
              if (!why_r.empty()) obs["rootMismatch"] = why_r;
              if (!why_f.empty()) obs["flexMismatch"] = why_f;
              mono.emplace(name, std::move(r));
              return outcome(ok_r && ok_f, obs, {{"rootsMatch", true}, {"flexesMatch", true}});
            });
  };
  loop_check("gamma-minus");
  loop_check("gamma-plus");

  run.run("pipeline.monodromy.constant", "constant loop gives identity permutations and the identity matrix", [&] {
    if (!base) return skipped("lines unavailable");
    const auto r = monodromy(Loop<R>::constant(), *base, opts.tracking);
    const bool ok = r.lines == LinePerm::identity() && r.matrix == LatticeMap::identity() &&
                    r.flexes.perm == FlexPerm::identity();
    return outcome(ok, {{"identity", ok}}, {{"identity", true}});
  });

  run.run("pipeline.monodromy.stability", "permutations agree for 50, 100 and 200 steps", [&] {
    if (!base) return skipped("lines unavailable");
    json obs = json::object();
    bool ok = true;
    for (const char* name : {"gamma-minus", "gamma-plus"}) {
      std::optional<LinePerm> first;
      json per = json::object();
      for (int n : {50, 100, 200}) {
        auto cfg = opts.tracking;
        cfg.steps = n;
        const auto r = monodromy(loop_by_name<R>(name), *base, cfg);
        per[std::to_string(n)] = cycle_notation({r.flexes.perm.images.begin(), r.flexes.perm.images.end()});
        if (!first) first = r.lines;
        ok &= r.lines == *first;
      }
      obs[name] = per;
    }
    return outcome(ok, obs, "identical across step counts");
  });

  run.run("pipeline.monodromy.commutes", "G1 and G2 lie in W(E6) and commute with the deck class", [&] {
    if (!gens || !mono.count("gamma-minus") || !mono.count("gamma-plus")) return skipped("inputs unavailable");
    gens->g1 = mono.at("gamma-minus").matrix;
    gens->g2 = mono.at("gamma-plus").matrix;
    const bool valid = gens->g1.is_valid() && gens->g2.is_valid();
    const bool comm = commute(gens->g1, gens->omega) && commute(gens->g2, gens->omega);
    return outcome(valid && comm, {{"valid", valid}, {"commuteWithOmega", comm}},
                   {{"valid", true}, {"commuteWithOmega", true}});
  });

  run.run("pipeline.perm-homomorphism", "line permutations to lattice maps respect composition", [&] {
    if (!base || !heis || !mono.count("gamma-minus") || !mono.count("gamma-plus")) return skipped("inputs unavailable");
    const std::vector<LinePerm> perms = {deck_permutation(), heis->h1_perm, heis->h2_perm,
                                         mono.at("gamma-minus").lines, mono.at("gamma-plus").lines};
    int pairs = 0, failures = 0;
    for (const auto& s : perms)
      for (const auto& t : perms) {
        ++pairs;
        const auto lhs = perm_to_lattice_map(compose(s, t), base->classes, base->sixer);
        const auto rhs = perm_to_lattice_map(s, base->classes, base->sixer) *
                         perm_to_lattice_map(t, base->classes, base->sixer);
        failures += !(lhs == rhs);
      }
    return outcome(failures == 0, {{"pairs", pairs}, {"failures", failures}}, {{"pairs", 25}, {"failures", 0}});
  });

  run.run("pipeline.omega.matches-fixture", "computed deck class has the same char poly and character as the printed one",
          [&] {
            if (!gens) return skipped("deck class unavailable");
            if (!pm) return skipped("fixtures unavailable");
            const auto a = omega_summary(gens->omega), b = omega_summary(pm->omega);
            return outcome(a == b, a, b);
          });

  run.run("pipeline.relations.variant", "conjugation relations hold up to an accepted relabelling", [&] {
    if (!gens) return skipped("generators unavailable");
    const auto v = find_relation_variant(*gens);
    if (!v) return outcome(false, relations_json(conjugation_relations(*gens)), "some accepted relabelling");
    variant_gens = v->apply(*gens);
    return outcome(true, {{"variant", v->describe()}, {"relations", relations_json(conjugation_relations(*variant_gens))}},
                   "some accepted relabelling");
  });

  std::optional<Group> centralizer;
  group_checks(run, "pipeline.", [&]() -> const GeneratorSet* { return variant_gens ? &*variant_gens : nullptr; },
               weyl, centralizer);
  return std::move(run.checks);
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& opts) {
  const std::string data_dir = opts.data_dir.empty() ? default_data_dir() : opts.data_dir;
  VerificationReport report(to_string(opts.scope), opts.precision == Precision::Extended ? "extended" : "double");
  WeylCache weyl;
  Runner run(false);

  weyl_checks(run, weyl);
  if (opts.scope != Scope::Pipeline) {
    std::optional<Group> centralizer;
    fixture_checks(run, data_dir, weyl, centralizer);
    model_checks(run, centralizer);
  }
  for (auto& c : run.checks) report.add(std::move(c));
  if (opts.scope == Scope::Fixtures) return report;

  auto run_pipeline = [&](Precision p, bool propagate) {
    return p == Precision::Extended ? pipeline_checks<long double>(opts, data_dir, weyl, propagate)
                                    : pipeline_checks<double>(opts, data_dir, weyl, propagate);
  };
  // An ambiguity escapes the strict run; the final run records it as a failed check.
  auto record_ambiguous = [&](Precision p) {
    auto checks = run_pipeline(p, false);
    for (const auto& c : checks) report.set_numerical_ambiguity(report.numerical_ambiguity() || c.status == CheckStatus::Fail);
    return checks;
  };
  std::vector<Check> checks;
  try {
    checks = run_pipeline(opts.precision, true);
  } catch (const Error&) {
    if (opts.precision == Precision::Extended || !opts.escalate) {
      checks = record_ambiguous(opts.precision);
    } else {
      report.set_precision("extended");
      try {
        checks = run_pipeline(Precision::Extended, true);
      } catch (const Error&) {
        checks = record_ambiguous(Precision::Extended);
      }
    }
  }
  for (auto& c : checks) report.add(std::move(c));
  return report;
}

}  // namespace cubmono
