#include "cubmono/group_engine.hpp"

#include <random>
#include <sstream>

namespace cubmono {

HeisenbergElt inverse(const HeisenbergElt& x) { return HeisenbergElt::make(-x.a, -x.b, x.a * x.b - x.c); }

std::vector<SL2Z3Elt> SL2Z3Elt::all() {
  std::vector<SL2Z3Elt> out;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
          const auto m = make(p, q, r, s);
          if (m.det() == 1) out.push_back(m);
        }
  return out;
}

SL2Z3Elt inverse(const SL2Z3Elt& x) { return SL2Z3Elt::make(x.m[3], -x.m[1], -x.m[2], x.m[0]); }

HeisenbergElt phi_action(const SL2Z3Elt& m, const HeisenbergElt& h) {
  const auto [a, b] = m.apply(h.a, h.b);
  // 2 is the inverse of 2 mod 3, so this adds (a'b' − ab)/2.
  return HeisenbergElt::make(a, b, h.c + 2 * (a * b - h.a * h.b));
}

HeisenbergElt phi_action_literal(const SL2Z3Elt& m, const HeisenbergElt& h) {
  const auto [a, b] = m.apply(h.a, h.b);
  return HeisenbergElt::make(a, b, h.c);
}

namespace {

std::vector<HeisenbergElt> heisenberg_elements() {
  std::vector<HeisenbergElt> out;
  for (int t = 0; t < 27; ++t) out.push_back(HeisenbergElt::make(t / 9, t / 3, t));
  return out;
}

}  // namespace

int count_automorphism_failures(const std::function<HeisenbergElt(const SL2Z3Elt&, const HeisenbergElt&)>& phi) {
  const auto hs = heisenberg_elements();
  int bad = 0;
  for (const auto& m : SL2Z3Elt::all())
    for (const auto& h : hs)
      for (const auto& k : hs) bad += !(phi(m, h * k) == phi(m, h) * phi(m, k));
  return bad;
}

int count_action_failures(const std::function<HeisenbergElt(const SL2Z3Elt&, const HeisenbergElt&)>& phi) {
  const auto hs = heisenberg_elements();
  const auto sl = SL2Z3Elt::all();
  int bad = 0;
  for (const auto& m : sl)
    for (const auto& n : sl)
      for (const auto& h : hs) bad += !(phi(m * n, h) == phi(m, phi(n, h)));
  return bad;
}

SemidirectElt inverse(const SemidirectElt& x) {
  const SL2Z3Elt gi = inverse(x.g);
  return {phi_action(gi, inverse(x.h)), gi};
}

std::string to_string(const SemidirectElt& x) {
  std::ostringstream os;
  os << "((" << x.h.a << ',' << x.h.b << ',' << x.h.c << "),[" << x.g.m[0] << ' ' << x.g.m[1] << ';' << x.g.m[2]
     << ' ' << x.g.m[3] << "])";
  return os.str();
}

std::vector<SemidirectElt> semidirect_elements() {
  std::vector<SemidirectElt> out;
  for (const auto& h : heisenberg_elements())
    for (const auto& g : SL2Z3Elt::all()) out.push_back({h, g});
  return out;
}

FiniteGroup<SemidirectElt> semidirect_model() {
  const auto im = standard_generator_images();
  return FiniteGroup<SemidirectElt>::closure({im.begin(), im.end()}, 1000);
}

int associativity_failures(int trials, std::uint32_t seed) {
  const auto all = semidirect_elements();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    const auto& x = all[pick(rng)];
    const auto& y = all[pick(rng)];
    const auto& z = all[pick(rng)];
    bad += !((x * y) * z == x * (y * z));
  }
  return bad;
}

namespace {

RelationResult relation(std::string name, const LatticeMap& lhs, const LatticeMap& rhs) {
  RelationResult r{std::move(name), lhs == rhs, {}};
  if (!r.holds) {
    for (int i = 0; i < kRank * kRank; ++i)
      if (lhs.m[i] != rhs.m[i]) {
        r.witness = "entry (" + std::to_string(i / kRank) + "," + std::to_string(i % kRank) +
                    "): " + std::to_string(lhs.m[i]) + " vs " + std::to_string(rhs.m[i]);
        break;
      }
  }
  return r;
}

}  // namespace

std::vector<RelationResult> conjugation_relations(const GeneratorSet& s) {
  const auto g1i = inverse(s.g1), g2i = inverse(s.g2);
  return {
      relation("G1 H1 G1^-1 = Omega H1 H2", s.g1 * s.h1 * g1i, s.omega * s.h1 * s.h2),
      relation("G2 H1 G2^-1 = H1", s.g2 * s.h1 * g2i, s.h1),
      relation("G1 H2 G1^-1 = H2", s.g1 * s.h2 * g1i, s.h2),
      relation("G2 H2 G2^-1 = Omega^-1 H1^-1 H2", s.g2 * s.h2 * g2i, inverse(s.omega) * inverse(s.h1) * s.h2),
  };
}

bool all_hold(const std::vector<RelationResult>& r) {
  for (const auto& x : r)
    if (!x.holds) return false;
  return true;
}

GeneratorSet RelationVariant::apply(const GeneratorSet& s) const {
  GeneratorSet t = s;
  if (swap_h) std::swap(t.h1, t.h2);
  if (swap_g) std::swap(t.g1, t.g2);
  if (inv_h1) t.h1 = inverse(t.h1);
  if (inv_h2) t.h2 = inverse(t.h2);
  if (inv_g1) t.g1 = inverse(t.g1);
  if (inv_g2) t.g2 = inverse(t.g2);
  if (inv_omega) t.omega = inverse(t.omega);
  return t;
}

std::string RelationVariant::describe() const {
  if (is_identity()) return "as computed";
  std::string s;
  auto add = [&](bool on, const char* what) {
    if (!on) return;
    if (!s.empty()) s += ", ";
    s += what;
  };
  add(swap_h, "swap H1/H2");
  add(swap_g, "swap G1/G2");
  add(inv_h1, "invert H1");
  add(inv_h2, "invert H2");
  add(inv_g1, "invert G1");
  add(inv_g2, "invert G2");
  add(inv_omega, "invert Omega");
  return s;
}

bool RelationVariant::is_identity() const {
  return !(swap_h || swap_g || inv_h1 || inv_h2 || inv_g1 || inv_g2 || inv_omega);
}

std::optional<RelationVariant> find_relation_variant(const GeneratorSet& s) {
  for (int changes = 0; changes <= 7; ++changes)
    for (int mask = 0; mask < 128; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != changes) continue;
      const RelationVariant v{(mask & 1) != 0,  (mask & 2) != 0,  (mask & 4) != 0, (mask & 8) != 0,
                              (mask & 16) != 0, (mask & 32) != 0, (mask & 64) != 0};
      if (all_hold(conjugation_relations(v.apply(s)))) return v;
    }
  return std::nullopt;
}

std::array<SemidirectElt, 4> standard_generator_images() {
  return {SemidirectElt{HeisenbergElt::make(1, 0, 0), SL2Z3Elt::identity()},
          SemidirectElt{HeisenbergElt::make(0, 1, 0), SL2Z3Elt::identity()},
          SemidirectElt{HeisenbergElt::identity(), SL2Z3Elt::make(1, 0, 1, 1)},
          SemidirectElt{HeisenbergElt::identity(), SL2Z3Elt::make(1, 2, 0, 1)}};
}

std::array<SemidirectElt, 4> literal_generator_images() {
  auto im = standard_generator_images();
  im[0].h.c = 1;
  im[1].h.c = 1;
  return im;
}

std::string to_string(Order24Kind k) {
  switch (k) {
    case Order24Kind::SL2Z3:
      return "SL2(Z/3)";
    case Order24Kind::S4:
      return "S4";
    case Order24Kind::A4xZ2:
      return "A4 x Z/2";
    case Order24Kind::Other:
      break;
  }
  return "other";
}

}  // namespace cubmono
