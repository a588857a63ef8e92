#pragma once

#include "flab/fourfold/model.hpp"
#include "flab/knotforge/surgery.hpp"

namespace flab::fourfold {

enum class ProductForm {
  /// pi1(M) + Z: M's generators plus x, with [gen, x] = 1.
  Surgery,
  /// The same group written as a surface bundle over the torus: fiber
  /// generators g1..g2k, base generators d (monodromy) and y (circle factor).
  /// Needs monodromy words.
  Bundle,
};

/// M x S^1 for a fibered M. Surfaces: "F" (fiber) and "T_m" (section,
/// meridian times the circle), basis (F, T_m) with form H. The model is
/// symplectic when the fiber genus is at least 1.
FourManifoldModel product_with_circle(const knotforge::ThreeManifoldModel& m, ProductForm form = ProductForm::Surgery);

}  // namespace flab::fourfold
