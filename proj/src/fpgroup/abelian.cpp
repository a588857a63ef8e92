#include "flab/fpgroup/abelian.hpp"

#include <algorithm>

#include "flab/checked.hpp"
#include "flab/error.hpp"
#include "flab/fpgroup/smith.hpp"

namespace flab::fpgroup {

bool AbelianGroupStructure::has_two_torsion() const {
  return std::any_of(torsion.begin(), torsion.end(), [](std::int64_t d) { return d % 2 == 0; });
}

std::string AbelianGroupStructure::to_string() const {
  std::string s;
  if (free_rank == 1) s = "Z";
  if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
  for (auto d : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(d);
  return s.empty() ? "0" : s;
}

AbelianGroupStructure cokernel(const IntegerMatrix& relations) {
  auto snf = smith_normal_form(relations);
  AbelianGroupStructure g;
  std::size_t rank = 0;
  for (auto d : snf.diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d >= 2) g.torsion.push_back(d);
  }
  g.free_rank = static_cast<std::int64_t>(relations.cols() - rank);
  return g;
}

namespace {

IntVector exponents(const Word& w, std::size_t n) {
  IntVector v(n, 0);
  for (const auto& s : w.syllables()) v[s.gen] = checked::add(v[s.gen], s.power);
  return v;
}

}  // namespace

IntegerMatrix exponent_matrix(const Presentation& p) {
  const std::size_t n = p.generator_count();
  for (const auto& f : p.shadows)
    for (const auto& w : f.normal_generators) {
      auto e = exponents(w, n);
      if (std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x != 0; }))
        throw Error(ErrorCode::ShadowNotCommutator,
                    "shadow family '" + f.name + "' has normal generator " + p.format(w) + " with nonzero image");
    }
  std::vector<IntVector> rows;
  rows.reserve(p.relators.size());
  for (const auto& r : p.relators) rows.push_back(exponents(r, n));
  return IntegerMatrix::from_rows(rows, n);
}

AbelianGroupStructure abelianize(const Presentation& p) { return cokernel(exponent_matrix(p)); }

IntVector AbelianizationMap::image(const IntVector& e) const {
  if (e.size() != basis.rows()) throw Error(ErrorCode::DimensionMismatch, "exponent vector length");
  IntVector out(moduli.size(), 0);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    std::int64_t x = 0;
    for (std::size_t i = 0; i < e.size(); ++i) x = checked::fma(x, e[i], basis(i, columns[k]));
    if (moduli[k] > 0) x = ((x % moduli[k]) + moduli[k]) % moduli[k];
    out[k] = x;
  }
  return out;
}

IntVector AbelianizationMap::image(const Word& w) const { return image(exponents(w, basis.rows())); }

AbelianGroupStructure AbelianizationMap::group() const {
  AbelianGroupStructure g;
  for (auto m : moduli) {
    if (m == 0)
      ++g.free_rank;
    else
      g.torsion.push_back(m);
  }
  return g;
}

AbelianizationMap abelianization_map(const Presentation& p) {
  auto snf = smith_normal_form(exponent_matrix(p));
  AbelianizationMap map;
  map.basis = snf.v;
  auto diag = snf.diagonal();
  const std::size_t n = p.generator_count();
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t d = i < diag.size() ? diag[i] : 0;
    if (d >= 2) {
      map.columns.push_back(i);
      map.moduli.push_back(d);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t d = i < diag.size() ? diag[i] : 0;
    if (d == 0) {
      map.columns.push_back(i);
      map.moduli.push_back(0);
    }
  }
  return map;
}

}  // namespace flab::fpgroup
