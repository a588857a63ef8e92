#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flab/fpgroup/amalgamate.hpp"
#include "flab/fourfold/model.hpp"

namespace flab::fourfold {

/// How removing a surface's neighbourhood changes pi1 on one side. The
/// `death_relators` are the relators that only hold because the surface was
/// there (each is matched up to cyclic permutation and inversion and
/// removed). When `exact` is false, the complement group is only known up to
/// hidden relators and generators in the normal closure of the meridian; each
/// death relator other than the meridian itself survives as one hidden
/// relator in the normal closure of {meridian, relator}.
struct ComplementSpec {
  Word meridian;
  std::vector<Word> death_relators;
  bool exact = false;
};

/// Group of pi1(complement) for the surface described by `spec`.
Presentation surface_complement(const Presentation& p, const ComplementSpec& spec, const std::string& tag = "");

/// One side of a hyperbolic pair created by the sum. With a genus, the class
/// is also recorded as a square-zero surface.
struct PairMember {
  std::string label;
  std::optional<std::int64_t> genus;
  bool symplectic = false;
  std::optional<std::vector<Word>> images;  // over the merged alphabet
  std::string zero_pairing_group;           // empty: none
};

struct HyperbolicPair {
  PairMember first, second;
};

/// Additional surface in the result, homology given over result basis labels.
struct NewSurface {
  std::string label;
  std::int64_t genus = 0;
  std::map<std::string, std::int64_t> homology;
  std::optional<std::vector<Word>> images;  // over the merged alphabet
  bool symplectic = false;
};

struct GluingSpec {
  std::string name;
  /// (word in X's pi1, word in Y's pi1); 2g pairs.
  std::vector<std::pair<Word, Word>> identifications;
  /// Meridian circles identified across the sum: w_X = w_Y.
  std::optional<std::pair<Word, Word>> boundary_relation;
  std::vector<HyperbolicPair> new_hyperbolic_pairs;
  ComplementSpec complement_x, complement_y;
  fpgroup::Renaming rename_y;
  std::vector<NewSurface> new_surfaces;
  /// Surfaces kept from either side; they must live on surviving classes.
  std::vector<std::string> carry_x, carry_y;
  std::vector<std::string> assumptions;
};

/// Translates a word of Y's pi1 into the merged alphabet of a fiber sum with X.
Word merged_y_word(const FourManifoldModel& x, const Word& y_word);

/// Generalized fiber sum X #_{SX = SY} Y as algebraic data.
/// Errors: GenusMismatch, NonzeroSquare, MissingImages, AbelianizationBlocked,
/// RelatorNotFound, InvalidGluing.
FourManifoldModel fiber_sum(const FourManifoldModel& x, const std::string& sx, const FourManifoldModel& y,
                            const std::string& sy, const GluingSpec& glue);

/// Tietze-simplifies pi1 and rewrites every surface's images accordingly.
/// Generators named in `keep` survive.
FourManifoldModel simplify_pi1(const FourManifoldModel& m, std::size_t budget = 1000,
                               const std::vector<std::string>& keep = {});

}  // namespace flab::fourfold
