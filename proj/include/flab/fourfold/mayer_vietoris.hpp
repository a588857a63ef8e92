#pragma once

#include <string>
#include <vector>

#include "flab/fpgroup/abelian.hpp"
#include "flab/fourfold/model.hpp"

namespace flab::fourfold {

/// Matrix of H1(Sigma x S^1) -> H1(C1) + H1(C2) for two surface complements
/// glued along Sigma x S^1. Columns: the circle (meridian on both sides),
/// then the 2g surface generators. Column entries are (i1(c), -i2(psi c)),
/// with `images2[k]` already the psi-image of generator k written in C2.
/// Rows: H1(C1) coordinates then H1(C2) coordinates. Torsion coordinates get
/// an extra column carrying their modulus so the cokernel is exact.
struct MayerVietorisMap {
  IntegerMatrix matrix;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
};

MayerVietorisMap mayer_vietoris_map(const Presentation& c1, const Presentation& c2, const Word& meridian1,
                                    const Word& meridian2, const std::vector<Word>& images1,
                                    const std::vector<Word>& images2);

/// Cokernel of a map given as target x source matrix.
fpgroup::AbelianGroupStructure mv_h1_cokernel(const IntegerMatrix& map);

}  // namespace flab::fourfold
