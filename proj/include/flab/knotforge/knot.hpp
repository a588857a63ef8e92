#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flab/fpgroup/laurent.hpp"
#include "flab/fpgroup/presentation.hpp"

namespace flab::knotforge {

using fpgroup::LaurentPolynomial;
using fpgroup::Presentation;
using fpgroup::Word;

enum class Fibered { Fibered, NotFibered, Unknown };
std::string_view to_string(Fibered f);

struct TorusKnot {
  std::int64_t p = 2, q = 3;
};
struct Trefoil {};
struct FigureEight {};
struct TwistKnot {
  std::int64_t n = 1;
};
/// Caller-supplied knot group. Never certified fibered, except the unknot
/// shape (declared genus 0 with trivial Alexander polynomial).
struct ExplicitKnot {
  std::string name = "explicit";
  Presentation presentation;
  Word meridian;
  Word longitude;
  std::optional<std::int64_t> genus;
};

using KnotSpec = std::variant<TorusKnot, Trefoil, FigureEight, TwistKnot, ExplicitKnot>;

/// "trefoil", "figure8", "torus:p,q", "twist:n".
KnotSpec parse_knot_spec(std::string_view text);
std::string to_string(const KnotSpec& spec);

/// Fiber of a fibered knot complement: free generators of the fiber's
/// fundamental group as words in the knot group, and optionally the monodromy
/// (conjugation by the meridian) written over those fiber generators, index i
/// standing for fiber_words[i].
struct FiberData {
  std::int64_t genus = 0;
  std::vector<Word> fiber_words;
  std::optional<std::vector<Word>> monodromy;
};

struct KnotGroupModel {
  std::string name;
  Presentation presentation;
  Word meridian;
  Word longitude;
  std::optional<std::int64_t> genus;
  Fibered fibered = Fibered::Unknown;
  /// Image of each generator in H1 of the complement (meridian -> 1).
  std::vector<std::int64_t> weights;
  /// True for knots whose fiberedness is known from the built-in table.
  bool certified_fibered = false;
  std::optional<FiberData> fiber;
};

/// Weights from the abelianization, oriented so the meridian maps to +1.
/// Throws InvalidKnot if H1 is not Z generated by the meridian, or if the
/// longitude is not null-homologous.
std::vector<std::int64_t> meridian_weights(const Presentation& p, const Word& meridian, const Word& longitude);

/// <u,v | u^p v^-q>, meridian u^s v^r with pr + qs = 1 and 0 <= s < p,
/// longitude u^p m^(-pq), fiber words [u^i, v^j].
KnotGroupModel torus_knot_group(std::int64_t p, std::int64_t q);

/// Trefoil, FigureEight, TwistKnot. Throws UnknownSpec for other variants.
KnotGroupModel standard_knot(const KnotSpec& spec);

/// Any spec, including torus and explicit knots.
KnotGroupModel make_knot(const KnotSpec& spec);

LaurentPolynomial alexander_polynomial(const KnotGroupModel& k);

struct FiberednessScreen {
  LaurentPolynomial alexander;
  bool monic = false;
  std::int64_t degree = 0;
  bool genus_consistent = true;
  Fibered verdict = Fibered::Unknown;
};

/// Non-monic Alexander polynomial rules fibering out. Fibered is reported
/// only for table knots. A genus-one Fibered verdict must be the trefoil or
/// the figure-eight polynomial, otherwise InvalidKnot.
FiberednessScreen fiberedness_screen(const KnotGroupModel& k);

}  // namespace flab::knotforge
