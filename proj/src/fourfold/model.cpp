#include "flab/fourfold/model.hpp"

#include <algorithm>

#include "flab/checked.hpp"
#include "flab/error.hpp"

namespace flab::fourfold {

const MarkedSurface& FourManifoldModel::surface(std::string_view label) const {
  auto it = std::find_if(surfaces.begin(), surfaces.end(), [&](const MarkedSurface& s) { return s.label == label; });
  if (it == surfaces.end())
    throw Error(ErrorCode::UnknownSurface, "model '" + name + "' has no surface '" + std::string(label) + "'");
  return *it;
}

std::optional<std::size_t> FourManifoldModel::basis_index(std::string_view label) const {
  auto it = std::find(basis.begin(), basis.end(), label);
  if (it == basis.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis.begin());
}

IntVector FourManifoldModel::basis_vector(std::string_view label) const {
  auto i = basis_index(label);
  if (!i) throw Error(ErrorCode::UnknownSurface, "no basis class '" + std::string(label) + "'");
  IntVector v(basis.size(), 0);
  v[*i] = 1;
  return v;
}

CharNumbers char_numbers(std::int64_t euler, std::int64_t signature) {
  CharNumbers c;
  c.c1sq = checked::add(checked::mul(2, euler), checked::mul(3, signature));
  c.chi_h = mpq_class(static_cast<long>(checked::add(euler, signature)), 4);
  c.chi_h.canonicalize();
  c.chi_h_integral = c.chi_h.get_den() == 1;
  return c;
}

CharNumbers char_numbers(const FourManifoldModel& x) { return char_numbers(x.euler, x.signature); }

SumNumbers sum_characteristic_numbers(std::int64_t e1, std::int64_t s1, std::int64_t e2, std::int64_t s2,
                                      std::int64_t g) {
  SumNumbers out;
  out.euler = checked::sub(checked::add(e1, e2), checked::mul(2, checked::sub(2, checked::mul(2, g))));
  out.signature = checked::add(s1, s2);
  auto direct = char_numbers(out.euler, out.signature);
  out.c1sq = direct.c1sq;
  out.chi_h = direct.chi_h;

  auto x = char_numbers(e1, s1), y = char_numbers(e2, s2);
  std::int64_t c1sq = checked::add(checked::add(x.c1sq, y.c1sq), checked::mul(8, checked::sub(g, 1)));
  mpq_class chi = x.chi_h + y.chi_h + mpq_class(static_cast<long>(g - 1));
  if (c1sq != out.c1sq || chi != out.chi_h)
    throw Error(ErrorCode::InconsistentModel, "fiber-sum characteristic numbers disagree between routes");
  return out;
}

}  // namespace flab::fourfold
