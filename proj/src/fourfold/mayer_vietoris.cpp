#include "flab/fourfold/mayer_vietoris.hpp"

#include "flab/checked.hpp"
#include "flab/error.hpp"

namespace flab::fourfold {

MayerVietorisMap mayer_vietoris_map(const Presentation& c1, const Presentation& c2, const Word& meridian1,
                                    const Word& meridian2, const std::vector<Word>& images1,
                                    const std::vector<Word>& images2) {
  if (images1.size() != images2.size())
    throw Error(ErrorCode::DimensionMismatch, "both sides need the same number of surface generators");
  const auto a1 = fpgroup::abelianization_map(c1);
  const auto a2 = fpgroup::abelianization_map(c2);
  const std::size_t r1 = a1.dimension(), r2 = a2.dimension();

  std::vector<std::pair<Word, Word>> sources{{meridian1, meridian2}};
  MayerVietorisMap out;
  out.column_labels.push_back("lambda");
  for (std::size_t k = 0; k < images1.size(); ++k) {
    sources.emplace_back(images1[k], images2[k]);
    out.column_labels.push_back("c" + std::to_string(k + 1));
  }
  for (std::size_t i = 0; i < r1; ++i) out.row_labels.push_back("X" + std::to_string(i + 1));
  for (std::size_t i = 0; i < r2; ++i) out.row_labels.push_back("Y" + std::to_string(i + 1));

  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < r1; ++i)
    if (a1.moduli[i] > 0) torsion_rows.push_back(i);
  for (std::size_t i = 0; i < r2; ++i)
    if (a2.moduli[i] > 0) torsion_rows.push_back(r1 + i);

  IntegerMatrix m(r1 + r2, sources.size() + torsion_rows.size());
  for (std::size_t c = 0; c < sources.size(); ++c) {
    auto v1 = a1.image(sources[c].first);
    auto v2 = a2.image(sources[c].second);
    for (std::size_t i = 0; i < r1; ++i) m(i, c) = v1[i];
    for (std::size_t i = 0; i < r2; ++i) m(r1 + i, c) = checked::neg(v2[i]);
  }
  for (std::size_t k = 0; k < torsion_rows.size(); ++k) {
    const std::size_t row = torsion_rows[k];
    m(row, sources.size() + k) = row < r1 ? a1.moduli[row] : a2.moduli[row - r1];
    out.column_labels.push_back("torsion" + std::to_string(k + 1));
  }
  out.matrix = m;
  return out;
}

fpgroup::AbelianGroupStructure mv_h1_cokernel(const IntegerMatrix& map) { return fpgroup::cokernel(map.transpose()); }

}  // namespace flab::fourfold
