#include "flab/fourfold/fiber_sum.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "flab/error.hpp"
#include "flab/fpgroup/abelian.hpp"
#include "flab/fpgroup/tietze.hpp"

namespace flab::fourfold {

Presentation surface_complement(const Presentation& p, const ComplementSpec& spec, const std::string& tag) {
  Presentation out = p;
  const Word meridian_key = spec.meridian.canonical_cyclic();
  std::vector<Word> hidden;
  for (const auto& dead : spec.death_relators) {
    const Word key = dead.canonical_cyclic();
    auto it = std::find_if(out.relators.begin(), out.relators.end(),
                           [&](const Word& r) { return r.canonical_cyclic() == key; });
    if (it == out.relators.end())
      throw Error(ErrorCode::RelatorNotFound, "relator " + p.format(dead) + " is not in the presentation");
    out.relators.erase(it);
    if (key != meridian_key) hidden.push_back(dead);
  }
  if (!spec.exact) {
    const std::string prefix = tag.empty() ? "" : tag + ":";
    out.shadows.push_back({prefix + "meridian", {spec.meridian}, false});
    for (std::size_t i = 0; i < hidden.size(); ++i)
      out.shadows.push_back({prefix + "death" + std::to_string(i + 1), {spec.meridian, hidden[i]}, true});
  }
  out.validate();
  return out;
}

Word merged_y_word(const FourManifoldModel& x, const Word& y_word) {
  return y_word.shifted(static_cast<fpgroup::Gen>(x.pi1.generator_count()));
}

namespace {

void check_summand(const FourManifoldModel& m, const MarkedSurface& s) {
  if (s.self_intersection != 0)
    throw Error(ErrorCode::NonzeroSquare, s.label + " in " + m.name + " has square " + std::to_string(s.self_intersection));
  if (!s.images || static_cast<std::int64_t>(s.images->size()) != 2 * s.genus)
    throw Error(ErrorCode::MissingImages, s.label + " in " + m.name + " lacks its 2g pi1 images");
}

// Basis indices that survive removing the surface: classes other than the
// surface itself that pair trivially with it.
std::vector<std::size_t> survivors(const FourManifoldModel& m, const MarkedSurface& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.basis.size(); ++i) {
    if (s.homology) {
      IntVector e(m.basis.size(), 0);
      e[i] = 1;
      if (e == *s.homology || fpgroup::bilinear(m.form, e, *s.homology) != 0) continue;
    }
    out.push_back(i);
  }
  return out;
}

void add_unique(std::vector<std::string>& into, const std::string& s) {
  if (std::find(into.begin(), into.end(), s) == into.end()) into.push_back(s);
}

void add_to_group(std::vector<ZeroPairingGroup>& groups, const std::string& group, const std::string& label) {
  auto it = std::find_if(groups.begin(), groups.end(), [&](const ZeroPairingGroup& g) { return g.name == group; });
  if (it == groups.end()) {
    groups.push_back({group, {label}});
  } else {
    add_unique(it->labels, label);
  }
}

}  // namespace

FourManifoldModel fiber_sum(const FourManifoldModel& x, const std::string& sx, const FourManifoldModel& y,
                            const std::string& sy, const GluingSpec& glue) {
  const MarkedSurface& s1 = x.surface(sx);
  const MarkedSurface& s2 = y.surface(sy);
  if (s1.genus != s2.genus || s1.genus < 1)
    throw Error(ErrorCode::GenusMismatch, "cannot sum along genus " + std::to_string(s1.genus) + " and genus " +
                                              std::to_string(s2.genus));
  check_summand(x, s1);
  check_summand(y, s2);
  const std::int64_t g = s1.genus;
  if (static_cast<std::int64_t>(glue.identifications.size()) != 2 * g)
    throw Error(ErrorCode::InvalidGluing, "gluing needs " + std::to_string(2 * g) + " identifications");

  FourManifoldModel out;
  out.name = glue.name.empty() ? x.name + " # " + y.name : glue.name;
  auto nums = sum_characteristic_numbers(x.euler, x.signature, y.euler, y.signature, g);
  out.euler = nums.euler;
  out.signature = nums.signature;

  // Fundamental group.
  Presentation cx = surface_complement(x.pi1, glue.complement_x, "X");
  Presentation cy = surface_complement(y.pi1, glue.complement_y, "Y");
  std::vector<Word> extra;
  if (glue.boundary_relation)
    extra.push_back(glue.boundary_relation->first * merged_y_word(x, glue.boundary_relation->second).inverse());
  out.pi1 = fpgroup::amalgamate(cx, cy, glue.identifications, extra, glue.rename_y);
  try {
    out.b1 = fpgroup::abelianize(out.pi1).free_rank;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ShadowNotCommutator) throw;
    throw Error(ErrorCode::AbelianizationBlocked, e.what());
  }

  // Intersection form: surviving classes of both sides, then the new pairs.
  const auto keep_x = survivors(x, s1);
  const auto keep_y = survivors(y, s2);
  std::vector<std::string> labels;
  std::vector<std::size_t> map_x(x.basis.size(), SIZE_MAX), map_y(y.basis.size(), SIZE_MAX);
  for (auto i : keep_x) {
    map_x[i] = labels.size();
    labels.push_back(x.basis[i]);
  }
  for (auto i : keep_y) {
    std::string l = y.basis[i];
    while (std::find(labels.begin(), labels.end(), l) != labels.end()) l += '\'';
    map_y[i] = labels.size();
    labels.push_back(l);
  }
  IntegerMatrix form = IntegerMatrix::direct_sum(x.form.select(keep_x, keep_x), y.form.select(keep_y, keep_y));
  for (const auto& pair : glue.new_hyperbolic_pairs) {
    labels.push_back(pair.first.label);
    labels.push_back(pair.second.label);
    form = IntegerMatrix::direct_sum(form, IntegerMatrix{{0, 1}, {1, 0}});
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    throw Error(ErrorCode::InvalidGluing, "basis labels of the sum are not unique");
  out.basis = labels;
  out.form = form;
  const std::size_t dim = labels.size();
  const auto merged_gens = static_cast<fpgroup::Gen>(out.pi1.generator_count());

  auto check_images = [&](const MarkedSurface& s) {
    if (!s.images) return;
    if (static_cast<std::int64_t>(s.images->size()) != 2 * s.genus)
      throw Error(ErrorCode::InvalidGluing, "surface " + s.label + " needs " + std::to_string(2 * s.genus) + " images");
    for (const auto& w : *s.images)
      if (w.span() > merged_gens) throw Error(ErrorCode::InvalidGluing, "surface " + s.label + " image out of range");
  };

  auto carry = [&](const FourManifoldModel& from, const std::string& label, const std::vector<std::size_t>& map,
                   bool shift) {
    MarkedSurface s = from.surface(label);
    if (s.homology) {
      IntVector v(dim, 0);
      for (std::size_t i = 0; i < s.homology->size(); ++i) {
        if ((*s.homology)[i] == 0) continue;
        if (map[i] == SIZE_MAX)
          throw Error(ErrorCode::InvalidGluing, "surface " + label + " does not survive the sum");
        v[map[i]] = (*s.homology)[i];
      }
      s.homology = v;
    }
    if (s.images && shift)
      for (auto& w : *s.images) w = merged_y_word(x, w);
    check_images(s);
    out.surfaces.push_back(std::move(s));
  };
  for (const auto& l : glue.carry_x) carry(x, l, map_x, false);
  for (const auto& l : glue.carry_y) carry(y, l, map_y, true);

  for (const auto& pair : glue.new_hyperbolic_pairs)
    for (const PairMember* m : {&pair.first, &pair.second}) {
      if (!m->zero_pairing_group.empty()) add_to_group(out.zero_pairing, m->zero_pairing_group, m->label);
      if (!m->genus) continue;
      MarkedSurface s{m->label, *m->genus, 0, out.basis_vector(m->label), m->images, m->symplectic};
      check_images(s);
      out.surfaces.push_back(std::move(s));
    }

  for (const auto& ns : glue.new_surfaces) {
    IntVector v(dim, 0);
    for (const auto& [l, c] : ns.homology) {
      auto i = out.basis_index(l);
      if (!i) throw Error(ErrorCode::InvalidGluing, "surface " + ns.label + " refers to unknown class " + l);
      v[*i] = c;
    }
    MarkedSurface s{ns.label, ns.genus, fpgroup::bilinear(form, v, v), v, ns.images, ns.symplectic};
    check_images(s);
    out.surfaces.push_back(std::move(s));
  }

  // Zero-pairing groups of surviving classes carry over.
  auto carry_groups = [&](const FourManifoldModel& from, const std::vector<std::size_t>& map) {
    for (const auto& grp : from.zero_pairing)
      for (const auto& l : grp.labels) {
        auto i = from.basis_index(l);
        if (i && map[*i] != SIZE_MAX) add_to_group(out.zero_pairing, grp.name, out.basis[map[*i]]);
      }
  };
  carry_groups(x, map_x);
  carry_groups(y, map_y);

  out.symplectic = x.symplectic && y.symplectic && s1.symplectic && s2.symplectic;
  for (const auto* list : {&x.assumptions, &y.assumptions, &glue.assumptions})
    for (const auto& a : *list) add_unique(out.assumptions, a);
  if (!glue.complement_x.exact || !glue.complement_y.exact)
    add_unique(out.assumptions, "surface complement groups carry hidden relators in the normal closure of the meridian");
  return out;
}

FourManifoldModel simplify_pi1(const FourManifoldModel& m, std::size_t budget, const std::vector<std::string>& keep) {
  auto res = fpgroup::tietze_simplify_with_map(m.pi1, budget, keep);
  FourManifoldModel out = m;
  out.pi1 = res.presentation;
  for (auto& s : out.surfaces)
    if (s.images)
      for (auto& w : *s.images) w = w.substitute(res.images);
  return out;
}

}  // namespace flab::fourfold
