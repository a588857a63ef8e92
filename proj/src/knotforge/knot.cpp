#include "flab/knotforge/knot.hpp"

#include <charconv>

#include "flab/checked.hpp"
#include "flab/error.hpp"
#include "flab/fpgroup/abelian.hpp"
#include "flab/fpgroup/fox.hpp"
#include "flab/knotforge/knot_table.hpp"

namespace flab::knotforge {

std::string_view to_string(Fibered f) {
  switch (f) {
    case Fibered::Fibered: return "Fibered";
    case Fibered::NotFibered: return "NotFibered";
    case Fibered::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw Error(ErrorCode::UnknownSpec, "bad integer in knot spec '" + std::string(whole) + "'");
  return v;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

KnotSpec parse_knot_spec(std::string_view text) {
  if (text == "trefoil") return Trefoil{};
  if (text == "figure8" || text == "figure-eight") return FigureEight{};
  if (text.starts_with("torus:")) {
    auto body = text.substr(6);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) throw Error(ErrorCode::UnknownSpec, "torus spec needs p,q");
    return TorusKnot{parse_int(body.substr(0, comma), text), parse_int(body.substr(comma + 1), text)};
  }
  if (text.starts_with("twist:")) return TwistKnot{parse_int(text.substr(6), text)};
  throw Error(ErrorCode::UnknownSpec, "unknown knot spec '" + std::string(text) + "'");
}

std::string to_string(const KnotSpec& spec) {
  return std::visit(overloaded{
                        [](const TorusKnot& t) { return "torus:" + std::to_string(t.p) + "," + std::to_string(t.q); },
                        [](const Trefoil&) { return std::string("trefoil"); },
                        [](const FigureEight&) { return std::string("figure8"); },
                        [](const TwistKnot& t) { return "twist:" + std::to_string(t.n); },
                        [](const ExplicitKnot& e) { return e.name; },
                    },
                    spec);
}

std::vector<std::int64_t> meridian_weights(const Presentation& p, const Word& meridian, const Word& longitude) {
  auto map = fpgroup::abelianization_map(p);
  auto g = map.group();
  if (g.free_rank != 1 || !g.torsion.empty())
    throw Error(ErrorCode::InvalidKnot, "knot group abelianizes to " + g.to_string() + ", expected Z");
  const std::size_t free_coord = map.dimension() - 1;
  std::int64_t m = map.image(meridian)[free_coord];
  if (m != 1 && m != -1) throw Error(ErrorCode::InvalidKnot, "meridian does not generate H1");
  std::vector<std::int64_t> w;
  for (fpgroup::Gen i = 0; i < p.generator_count(); ++i) w.push_back(m * map.image(Word::gen(i))[free_coord]);
  std::int64_t lsum = 0;
  for (const auto& s : longitude.syllables()) lsum = checked::fma(lsum, s.power, w[s.gen]);
  if (lsum != 0) throw Error(ErrorCode::InvalidKnot, "longitude is not null-homologous");
  return w;
}

KnotGroupModel torus_knot_group(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2)
    throw Error(ErrorCode::DegenerateParameters,
                "torus knot needs p, q >= 2 (got " + std::to_string(p) + "," + std::to_string(q) + ")");
  if (checked::gcd(p, q) != 1)
    throw Error(ErrorCode::NotCoprime, std::to_string(p) + " and " + std::to_string(q) + " are not coprime");

  // s = q^-1 mod p in [0, p), r = (1 - q s) / p.
  std::int64_t s = 0;
  while (checked::mul(q, s) % p != 1 % p) ++s;
  const std::int64_t r = (1 - checked::mul(q, s)) / p;

  const Word u = Word::gen(0), v = Word::gen(1);
  KnotGroupModel k;
  k.name = "torus:" + std::to_string(p) + "," + std::to_string(q);
  k.presentation = Presentation({"u", "v"}, {u.pow(p) * v.pow(-q)});
  k.meridian = u.pow(s) * v.pow(r);
  k.longitude = u.pow(p) * k.meridian.pow(-checked::mul(p, q));
  k.genus = (p - 1) * (q - 1) / 2;
  k.fibered = Fibered::Fibered;
  k.certified_fibered = true;
  k.weights = {q, p};

  FiberData f;
  f.genus = *k.genus;
  for (std::int64_t i = 1; i < p; ++i)
    for (std::int64_t j = 1; j < q; ++j) f.fiber_words.push_back(fpgroup::commutator(u.pow(i), v.pow(j)));
  k.fiber = f;
  return k;
}

namespace {

KnotGroupModel from_twist_entry(const TwistKnotEntry& e, std::string name) {
  KnotGroupModel k;
  k.name = std::move(name);
  k.presentation = Presentation::parse(e.generators, {e.relator});
  k.meridian = k.presentation.word(e.meridian);
  k.longitude = k.presentation.word(e.longitude);
  k.genus = 1;
  k.weights = meridian_weights(k.presentation, k.meridian, k.longitude);
  return k;
}

}  // namespace

KnotGroupModel standard_knot(const KnotSpec& spec) {
  if (std::holds_alternative<Trefoil>(spec)) {
    auto k = from_twist_entry(twist_knot_entry(-1), "trefoil");
    k.fibered = Fibered::Fibered;
    k.certified_fibered = true;
    k.fiber = trefoil_fiber();
    return k;
  }
  if (std::holds_alternative<FigureEight>(spec)) {
    auto k = from_twist_entry(twist_knot_entry(1), "figure8");
    k.fibered = Fibered::Fibered;
    k.certified_fibered = true;
    k.fiber = figure_eight_fiber();
    return k;
  }
  if (const auto* t = std::get_if<TwistKnot>(&spec)) {
    auto k = from_twist_entry(twist_knot_entry(t->n), "twist:" + std::to_string(t->n));
    if (t->n == -1 || t->n == 1) {
      k.fibered = Fibered::Fibered;
      k.certified_fibered = true;
      k.fiber = t->n == -1 ? trefoil_fiber() : figure_eight_fiber();
    } else {
      k.fibered = Fibered::NotFibered;  // leading coefficient |n| >= 2
    }
    return k;
  }
  throw Error(ErrorCode::UnknownSpec, "no built-in presentation for " + to_string(spec));
}

KnotGroupModel make_knot(const KnotSpec& spec) {
  if (const auto* t = std::get_if<TorusKnot>(&spec)) return torus_knot_group(t->p, t->q);
  if (const auto* e = std::get_if<ExplicitKnot>(&spec)) {
    KnotGroupModel k;
    k.name = e->name;
    k.presentation = e->presentation;
    k.meridian = e->meridian;
    k.longitude = e->longitude;
    k.genus = e->genus;
    k.weights = meridian_weights(k.presentation, k.meridian, k.longitude);
    if (k.genus == 0) {
      // Only the unknot bounds a disk; its complement fibers with disk fibers.
      if (alexander_polynomial(k) != LaurentPolynomial(1))
        throw Error(ErrorCode::InvalidKnot, "genus 0 declared but the Alexander polynomial is not 1");
      k.fibered = Fibered::Fibered;
      k.certified_fibered = true;
      k.fiber = FiberData{0, {}, std::vector<Word>{}};
    }
    return k;
  }
  return standard_knot(spec);
}

LaurentPolynomial alexander_polynomial(const KnotGroupModel& k) {
  return fpgroup::fox_alexander(k.presentation, k.weights);
}

FiberednessScreen fiberedness_screen(const KnotGroupModel& k) {
  FiberednessScreen s;
  s.alexander = alexander_polynomial(k);
  s.monic = s.alexander.is_monic();
  s.degree = s.alexander.span();
  if (!s.monic)
    s.verdict = Fibered::NotFibered;
  else if (k.certified_fibered)
    s.verdict = Fibered::Fibered;
  else
    s.verdict = Fibered::Unknown;

  if (k.genus) {
    const std::int64_t g2 = 2 * *k.genus;
    s.genus_consistent = s.degree <= g2 && (s.verdict != Fibered::Fibered || s.degree == g2);
  }
  if (s.verdict == Fibered::Fibered && k.genus == 1) {
    const auto trefoil = LaurentPolynomial::from_coefficients({1, -1, 1});
    const auto figure8 = LaurentPolynomial::from_coefficients({1, -3, 1});
    if (s.alexander != trefoil && s.alexander != figure8)
      throw Error(ErrorCode::InvalidKnot, "genus-one fibered knot must be the trefoil or the figure-eight");
  }
  return s;
}

}  // namespace flab::knotforge
