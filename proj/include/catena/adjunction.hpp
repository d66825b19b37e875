#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catena/fincat.hpp"

namespace catena {

// An adjunction is always carried with explicit unit and counit; nothing in
// this module accepts a bare "an adjoint exists".
struct Adjunction {
  CatFunctor left;   // F : A -> B
  CatFunctor right;  // U : B -> A
  NatTransformation unit;    // id_A => U F
  NatTransformation counit;  // F U => id_B
};

struct AdjunctionReport {
  bool ok = false;
  bool unit_invertible = false;    // left adjoint fully faithful
  bool counit_invertible = false;  // right adjoint fully faithful
  std::vector<std::string> failures;
};
AdjunctionReport check_adjunction(const Adjunction& adj);
// Throws unless check_adjunction(adj).ok.
void require_adjunction(const Adjunction& adj, const std::string& context);

Adjunction identity_adjunction(const CatPtr& C);
// (F' F) -| (U U')
Adjunction compose_adjunctions(const Adjunction& outer, const Adjunction& inner);

enum class AdjointSide { Right, Left };
struct AdjointSearch {
  std::optional<Adjunction> adj;
  int first_failing_object = -1;  // object of the target lacking a terminal/initial comma object
};
// Right: comma F/b needs a terminal object for every b. Left: dual.
AdjointSearch search_adjoint(const CatFunctor& F, AdjointSide side, const Caps& caps = {});

// The two hom-action functors of a unit/counit adjunction and the on-the-nose
// inverse-pair verification between B x_A Arr(A) and Arr(B) x_B A.
struct HomActionEquivalence {
  CatFunctor phi;  // B x_A Arr(A) -> Arr(B) x_B A
  CatFunctor psi;  // the other way
  bool inverse_pair = false;
  bool commutes_with_projections = false;
};
HomActionEquivalence hom_action_equivalence(const Adjunction& adj, const Caps& caps = {});

// A commuting square
//      H
//   X ---> A
//  V|      |U        filler : U.H => K.V (invertible)
//   v      v
//   Y ---> B
//      K
struct CommutingSquare {
  CatFunctor top, bottom, left, right;
  NatTransformation filler;
};
CommutingSquare strict_square(const CatFunctor& top, const CatFunctor& bottom,
                              const CatFunctor& left, const CatFunctor& right);
void validate_square(const CommutingSquare& sq);

struct MateResult {
  NatTransformation mate;
  bool invertible = false;  // "adjointable"
};
// Vertical mate F.K => H.G for F -| U (right edge) and G -| V (left edge).
MateResult vertical_mate(const CommutingSquare& sq, const Adjunction& adj_right,
                         const Adjunction& adj_left);
// Mate correspondence between parallel adjoints: sigma : U => V yields G => F.
MateResult mate_between_adjoints(const Adjunction& FU, const Adjunction& GV,
                                 const NatTransformation& sigma);

// Square with adjunctions on the horizontal edges (as left adjoints):
//        L1
//    P -----> Q
//  S |        | T      filler : T.L1 => L2.S (invertible)
//    v  L2    v
//    R -----> W
// with L1 -| R1 and L2 -| R2. Mate: S.R1 => R2.T.
MateResult mate_right_of_left(const CatFunctor& S, const CatFunctor& T, const Adjunction& adj_top,
                              const Adjunction& adj_bot, const NatTransformation& filler);
// Same square shape with strict commutation T.L1 = L2.S.
MateResult mate_right_of_left_strict(const CatFunctor& S, const CatFunctor& T,
                                     const Adjunction& adj_top, const Adjunction& adj_bot);

// Pullback-square verification: the comparison into the categorical pullback
// of the cospan must be an isomorphism of categories.
bool is_pullback_square(const CommutingSquare& sq, const Caps& caps = {});

enum class PullbackAdjunctionVariant { FullyFaithfulLeftAdjoint, OverCocartesianBase, Cube };
struct PulledBackAdjunction {
  Adjunction adj;                  // adjunction on the pulled-back edge
  bool adjointable = false;        // the square (or the relevant faces) adjointable
  bool fully_faithful = false;     // ff-ness transported where the lemma promises it
  bool counit_invertible = false;  // counit transfer for the base variant
  bool left_adjoint_cocartesian = false;  // over_cocartesian_base variant only
  std::vector<std::string> notes;
};
// Square orientation as in CommutingSquare: the attached adjunction lives on
// the right edge U; the result constructs the adjoint of the left edge V.
PulledBackAdjunction pullback_adjunction_ff_left(const CommutingSquare& sq,
                                                 const Adjunction& FU, const Caps& caps = {});
PulledBackAdjunction pullback_adjunction_over_cocartesian_base(const CommutingSquare& sq,
                                                               const Adjunction& FU,
                                                               const Caps& caps = {});

// Commutative cube: top and bottom faces are pullbacks; F0, F1, F2 are left
// adjoints; back and left faces adjointable. Induces the adjoint of the
// pullback functor and certifies the right and front faces.
struct CubeInput {
  // top face: A = A1 x_{A0} A2 with projections
  CatFunctor top_pr1, top_pr2;      // A -> A1, A -> A2
  CatFunctor top_leg1, top_leg2;    // A1 -> A0, A2 -> A0
  // bottom face: B = B1 x_{B0} B2
  CatFunctor bot_pr1, bot_pr2;
  CatFunctor bot_leg1, bot_leg2;
  Adjunction F0, F1, F2;            // left adjoints A_i -> B_i (as .left)
  CatFunctor F;                     // induced A -> B
};
PulledBackAdjunction pullback_adjunction_cube(const CubeInput& cube, const Caps& caps = {});

struct EssentialImageReport {
  std::vector<int> objects_with_invertible_unit;
  std::vector<int> essential_image;  // objects isomorphic to some U b
  bool agree = false;
};
EssentialImageReport characterize_essential_image(const Adjunction& adj);

}  // namespace catena
