#include "flab/fourfold/serialize.hpp"

#include "flab/error.hpp"

namespace flab::fourfold {

std::string rational_string(const mpq_class& q) { return q.get_str(); }

namespace {

json words_json(const std::vector<Word>& ws, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(fpgroup::format_word(w, names));
  return a;
}

std::vector<Word> words_from(const json& a, const std::vector<std::string>& names) {
  std::vector<Word> out;
  for (const auto& w : a) out.push_back(fpgroup::parse_word(w.get<std::string>(), names));
  return out;
}

std::optional<std::vector<Word>> optional_words(const json& j, const char* key, const std::vector<std::string>& names) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return words_from(j.at(key), names);
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> merged_names(const FourManifoldModel& x, const FourManifoldModel& y,
                                      const fpgroup::Renaming& r) {
  auto names = x.pi1.generators;
  for (auto& n : fpgroup::renamed_generators(y.pi1, r)) names.push_back(n);
  return names;
}

json complement_json(const ComplementSpec& c, const std::vector<std::string>& names) {
  return {{"meridian", fpgroup::format_word(c.meridian, names)},
          {"death_relators", words_json(c.death_relators, names)},
          {"exact", c.exact}};
}

ComplementSpec complement_from(const json& j, const std::vector<std::string>& names) {
  ComplementSpec c;
  c.meridian = fpgroup::parse_word(j.at("meridian").get<std::string>(), names);
  c.death_relators = words_from(j.value("death_relators", json::array()), names);
  c.exact = j.value("exact", false);
  return c;
}

json member_json(const PairMember& m, const std::vector<std::string>& names) {
  json j;
  j["label"] = m.label;
  j["genus"] = m.genus ? json(*m.genus) : json(nullptr);
  j["symplectic"] = m.symplectic;
  j["images"] = m.images ? words_json(*m.images, names) : json(nullptr);
  j["group"] = m.zero_pairing_group;
  return j;
}

PairMember member_from(const json& j, const std::vector<std::string>& names) {
  PairMember m;
  m.label = j.at("label").get<std::string>();
  if (j.contains("genus") && !j.at("genus").is_null()) m.genus = j.at("genus").get<std::int64_t>();
  m.symplectic = j.value("symplectic", false);
  m.images = optional_words(j, "images", names);
  m.zero_pairing_group = j.value("group", std::string());
  return m;
}

}  // namespace

json to_json(const FourManifoldModel& m) {
  json j;
  j["schema"] = kModelSchema;
  j["name"] = m.name;
  j["euler"] = m.euler;
  j["signature"] = m.signature;
  j["b1"] = m.b1;
  j["basis"] = m.basis;
  j["form"] = fpgroup::to_json(m.form);
  j["pi1"] = fpgroup::to_json(m.pi1);
  json surfaces = json::array();
  for (const auto& s : m.surfaces) {
    json js;
    js["label"] = s.label;
    js["genus"] = s.genus;
    js["self_intersection"] = s.self_intersection;
    js["homology"] = s.homology ? json(*s.homology) : json(nullptr);
    js["images"] = s.images ? words_json(*s.images, m.pi1.generators) : json(nullptr);
    js["symplectic"] = s.symplectic;
    surfaces.push_back(js);
  }
  j["surfaces"] = surfaces;
  json groups = json::array();
  for (const auto& g : m.zero_pairing) groups.push_back({{"name", g.name}, {"labels", g.labels}});
  j["zero_pairing"] = groups;
  j["symplectic"] = m.symplectic;
  j["canonical"] = m.canonical ? json(*m.canonical) : json(nullptr);
  j["assumptions"] = m.assumptions;
  return j;
}

FourManifoldModel model_from_json(const json& j) {
  return guarded("model", [&] {
    if (j.value("schema", std::string()) != kModelSchema)
      throw Error(ErrorCode::ParseError, std::string("model schema must be ") + kModelSchema);
    FourManifoldModel m;
    m.name = j.value("name", std::string("model"));
    m.euler = j.at("euler").get<std::int64_t>();
    m.signature = j.at("signature").get<std::int64_t>();
    m.b1 = j.at("b1").get<std::int64_t>();
    m.basis = j.at("basis").get<std::vector<std::string>>();
    m.form = j.at("form").empty() ? IntegerMatrix(0, 0) : fpgroup::matrix_from_json(j.at("form"));
    m.pi1 = fpgroup::presentation_from_json(j.at("pi1"));
    for (const auto& js : j.value("surfaces", json::array())) {
      MarkedSurface s;
      s.label = js.at("label").get<std::string>();
      s.genus = js.at("genus").get<std::int64_t>();
      s.self_intersection = js.value("self_intersection", std::int64_t{0});
      if (js.contains("homology") && !js.at("homology").is_null()) s.homology = js.at("homology").get<IntVector>();
      s.images = optional_words(js, "images", m.pi1.generators);
      s.symplectic = js.value("symplectic", false);
      m.surfaces.push_back(std::move(s));
    }
    for (const auto& g : j.value("zero_pairing", json::array()))
      m.zero_pairing.push_back({g.at("name").get<std::string>(), g.at("labels").get<std::vector<std::string>>()});
    m.symplectic = j.value("symplectic", false);
    if (j.contains("canonical") && !j.at("canonical").is_null()) m.canonical = j.at("canonical").get<IntVector>();
    m.assumptions = j.value("assumptions", std::vector<std::string>{});
    return m;
  });
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json j;
  j["all_passed"] = r.all_passed();
  j["checks"] = checks;
  j["b2_plus"] = r.inertia.positive;
  j["b2_minus"] = r.inertia.negative;
  j["even"] = r.even;
  j["spin"] = r.spin;
  j["h1"] = r.h1 ? fpgroup::to_json(*r.h1) : json(nullptr);
  j["assumptions"] = r.assumptions;
  return j;
}

json to_json(const GluingFile& g, const FourManifoldModel& x, const FourManifoldModel& y) {
  const auto& xn = x.pi1.generators;
  const auto& yn = y.pi1.generators;
  const auto mn = merged_names(x, y, g.spec.rename_y);
  json j;
  j["name"] = g.spec.name;
  j["sx"] = g.sx;
  j["sy"] = g.sy;
  json ids = json::array();
  for (const auto& [a, b] : g.spec.identifications)
    ids.push_back(json::array({fpgroup::format_word(a, xn), fpgroup::format_word(b, yn)}));
  j["identifications"] = ids;
  if (g.spec.boundary_relation)
    j["boundary_relation"] = json::array({fpgroup::format_word(g.spec.boundary_relation->first, xn),
                                          fpgroup::format_word(g.spec.boundary_relation->second, yn)});
  else
    j["boundary_relation"] = nullptr;
  j["complement_x"] = complement_json(g.spec.complement_x, xn);
  j["complement_y"] = complement_json(g.spec.complement_y, yn);
  switch (g.spec.rename_y.mode) {
    case fpgroup::Renaming::Mode::Keep: j["rename_y"] = {{"mode", "keep"}}; break;
    case fpgroup::Renaming::Mode::Suffix: j["rename_y"] = {{"mode", "suffix"}, {"suffix", g.spec.rename_y.suffix}}; break;
    case fpgroup::Renaming::Mode::Explicit: j["rename_y"] = {{"mode", "explicit"}, {"names", g.spec.rename_y.names}}; break;
  }
  json pairs = json::array();
  for (const auto& p : g.spec.new_hyperbolic_pairs)
    pairs.push_back({{"first", member_json(p.first, mn)}, {"second", member_json(p.second, mn)}});
  j["new_hyperbolic_pairs"] = pairs;
  json ns = json::array();
  for (const auto& s : g.spec.new_surfaces) {
    json h = json::object();
    for (const auto& [l, c] : s.homology) h[l] = c;
    ns.push_back({{"label", s.label},
                  {"genus", s.genus},
                  {"homology", h},
                  {"images", s.images ? words_json(*s.images, mn) : json(nullptr)},
                  {"symplectic", s.symplectic}});
  }
  j["new_surfaces"] = ns;
  j["carry_x"] = g.spec.carry_x;
  j["carry_y"] = g.spec.carry_y;
  j["assumptions"] = g.spec.assumptions;
  j["keep"] = g.keep;
  return j;
}

GluingFile gluing_from_json(const json& j, const FourManifoldModel& x, const FourManifoldModel& y) {
  return guarded("gluing", [&] {
    const auto& xn = x.pi1.generators;
    const auto& yn = y.pi1.generators;
    GluingFile g;
    g.sx = j.at("sx").get<std::string>();
    g.sy = j.at("sy").get<std::string>();
    auto& s = g.spec;
    s.name = j.value("name", std::string());
    for (const auto& pr : j.at("identifications"))
      s.identifications.emplace_back(fpgroup::parse_word(pr.at(0).get<std::string>(), xn),
                                     fpgroup::parse_word(pr.at(1).get<std::string>(), yn));
    if (j.contains("boundary_relation") && !j.at("boundary_relation").is_null()) {
      const auto& b = j.at("boundary_relation");
      s.boundary_relation = std::pair{fpgroup::parse_word(b.at(0).get<std::string>(), xn),
                                      fpgroup::parse_word(b.at(1).get<std::string>(), yn)};
    }
    s.complement_x = complement_from(j.at("complement_x"), xn);
    s.complement_y = complement_from(j.at("complement_y"), yn);
    const json rn = j.value("rename_y", json{{"mode", "suffix"}});
    const std::string mode = rn.value("mode", std::string("suffix"));
    if (mode == "keep")
      s.rename_y = fpgroup::Renaming::keep();
    else if (mode == "explicit")
      s.rename_y = fpgroup::Renaming::explicit_names(rn.at("names").get<std::vector<std::string>>());
    else if (mode == "suffix")
      s.rename_y = {fpgroup::Renaming::Mode::Suffix, rn.value("suffix", std::string("'")), {}};
    else
      throw Error(ErrorCode::ParseError, "unknown rename mode '" + mode + "'");
    const auto mn = merged_names(x, y, s.rename_y);
    for (const auto& p : j.value("new_hyperbolic_pairs", json::array()))
      s.new_hyperbolic_pairs.push_back({member_from(p.at("first"), mn), member_from(p.at("second"), mn)});
    for (const auto& js : j.value("new_surfaces", json::array())) {
      NewSurface ns;
      ns.label = js.at("label").get<std::string>();
      ns.genus = js.at("genus").get<std::int64_t>();
      for (const auto& [l, c] : js.at("homology").items()) ns.homology[l] = c.get<std::int64_t>();
      ns.images = optional_words(js, "images", mn);
      ns.symplectic = js.value("symplectic", false);
      s.new_surfaces.push_back(std::move(ns));
    }
    s.carry_x = j.value("carry_x", std::vector<std::string>{});
    s.carry_y = j.value("carry_y", std::vector<std::string>{});
    s.assumptions = j.value("assumptions", std::vector<std::string>{});
    g.keep = j.value("keep", std::vector<std::string>{});
    return g;
  });
}

}  // namespace flab::fourfold
