#include "flab/fpgroup/serialize.hpp"

#include "flab/error.hpp"

namespace flab::fpgroup {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

json to_json(const Presentation& p) {
  json j;
  j["generators"] = p.generators;
  json rels = json::array();
  for (const auto& r : p.relators) rels.push_back(p.format(r));
  j["relators"] = rels;
  json sh = json::array();
  for (const auto& f : p.shadows) {
    json words = json::array();
    for (const auto& w : f.normal_generators) words.push_back(p.format(w));
    sh.push_back({{"name", f.name}, {"normal_generators", words}, {"count_known", f.count_known}});
  }
  j["shadow"] = sh;
  return j;
}

Presentation presentation_from_json(const json& j) {
  return guarded("presentation", [&] {
    Presentation p;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (const auto& r : j.at("relators")) p.relators.push_back(p.word(r.get<std::string>()));
    if (j.contains("shadow"))
      for (const auto& f : j.at("shadow")) {
        ShadowFamily fam;
        fam.name = f.at("name").get<std::string>();
        for (const auto& w : f.at("normal_generators")) fam.normal_generators.push_back(p.word(w.get<std::string>()));
        fam.count_known = f.value("count_known", false);
        p.shadows.push_back(std::move(fam));
      }
    p.validate();
    return p;
  });
}

json to_json(const AbelianGroupStructure& g) {
  return {{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"text", g.to_string()}};
}

AbelianGroupStructure abelian_from_json(const json& j) {
  return guarded("abelian group", [&] {
    AbelianGroupStructure g;
    g.free_rank = j.at("free_rank").get<std::int64_t>();
    g.torsion = j.at("torsion").get<std::vector<std::int64_t>>();
    return g;
  });
}

json to_json(const IntegerMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

IntegerMatrix matrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    std::vector<IntVector> rows;
    for (const auto& r : j) rows.push_back(r.get<IntVector>());
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    return IntegerMatrix::from_rows(rows, cols);
  });
}

json to_json(const LaurentPolynomial& p) {
  return {{"lowest_exponent", p.min_exponent()}, {"coefficients", p.coefficients()}, {"text", p.to_string()}};
}

}  // namespace flab::fpgroup
