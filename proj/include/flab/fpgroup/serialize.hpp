#pragma once

#include "json.hpp"

#include "flab/fpgroup/abelian.hpp"
#include "flab/fpgroup/integer_matrix.hpp"
#include "flab/fpgroup/laurent.hpp"
#include "flab/fpgroup/presentation.hpp"

namespace flab::fpgroup {

using json = nlohmann::ordered_json;

/// {"generators":[...],"relators":["a b a B A B"],"shadow":[{"name","normal_generators","count_known"}]}
json to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json to_json(const AbelianGroupStructure& g);
AbelianGroupStructure abelian_from_json(const json& j);

/// Array of rows.
json to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const json& j);

/// Dense coefficient list from t^0 upward plus the lowest exponent.
json to_json(const LaurentPolynomial& p);

}  // namespace flab::fpgroup
