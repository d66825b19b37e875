#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catena/adjunction.hpp"
#include "catena/simplex.hpp"
#include "catena/twocat.hpp"

namespace catena {

// A composable string of 1-cells, the objects of the envelope's hom
// categories. Empty strings are the identity 1-cells.
struct EnvString {
  std::vector<int> verts;  // length + 1 entries; verts.front()/back() are the endpoints
  std::vector<int> cells;  // 1-cell objects of the consecutive hom categories
  int length() const { return static_cast<int>(cells.size()); }
  bool operator==(const EnvString&) const = default;
};

// A 2-cell of the envelope: an active shape [m'] -> [m] together with one
// component per target slot, from the composite of the source sub-string over
// the slot to the target cell.
struct EnvTwoCell {
  int src = -1, tgt = -1;   // string indices within the same hom pair
  SimplexMap shape;
  std::vector<int> components;
};

struct Envelope {
  TwoCatPtr env;      // partial weight-graded strict 2-category
  TwoCatPtr source;   // A
  int cap = 4;
  std::vector<std::vector<EnvString>> strings;   // per pair index a*n+b
  std::vector<std::vector<EnvTwoCell>> cells;    // per pair: hom morphisms
  std::vector<int> delta_cell;                   // per object: () => (id_a)
  std::vector<std::vector<int>> gamma_cell;      // per triple: (f,g) => (g.f)
  int find_string(int a, int b, const EnvString& s) const;
  int singleton(int a, int b, int one_cell) const;
  int empty_string(int a) const;
};

Envelope build_envelope(const TwoCatPtr& A, int cap = 4, const Caps& caps = {});

// The universal lax functor A -/-> Env(A): identity on objects, singleton
// strings on 1-cells, canonical comparison cells.
LaxFunctor iota(const Envelope& E);
// Strictification Env(A) -> A: strings to their composites, cells to the
// pasted composite of their components.
StrictTwoFunctor lambda_functor(const Envelope& E);
// Hom-level adjunction lambda_{a,b} -| iota_{a,b} with invertible counit.
Adjunction lambda_iota_hom_adjunction(const Envelope& E, int a, int b);

StrictTwoFunctor classify_lax_functor(const Envelope& E, const LaxFunctor& F);
LaxFunctor restrict_strict_functor(const Envelope& E, const StrictTwoFunctor& G);

// Enumerations used by the classification-bijection and initiality checks.
std::vector<LaxFunctor> enumerate_lax_functors(const TwoCatPtr& A, const TwoCatPtr& B,
                                               const Caps& caps = {});
std::vector<StrictTwoFunctor> enumerate_strict_functors_from_envelope(const Envelope& E,
                                                                      const TwoCatPtr& B,
                                                                      const Caps& caps = {});

struct LaxSectWitness {
  bool ok = false;
  bool objects_bijective = false;
  std::vector<std::optional<Adjunction>> hom_adjoints;  // per pair index of the source
  std::string failure;
};
LaxSectWitness check_local_right_adjoint_sections(const StrictTwoFunctor& F,
                                                  const Caps& caps = {});

struct SectionsTriangleReport {
  bool ok = false;             // every hom square adjointable
  bool unit_criterion = false; // the whiskered-unit characterization
  bool agree = false;
  std::string failure;
};
// H : (X, F) -> (Y, G) strictly over A.
SectionsTriangleReport check_commutes_with_sections(const StrictTwoFunctor& H,
                                                    const StrictTwoFunctor& F,
                                                    const StrictTwoFunctor& G,
                                                    const Caps& caps = {});

struct EquivalentCharacterizations {
  bool relative_adjoint = false;      // (1) ff right adjoint over the base, inert-cocartesian
  bool all_fibers = false;            // (2) fiberwise adjoints + inert pushforward squares
  bool low_fibers = false;            // (3) the 0/1 reduction with s,t squares
  bool zero_equiv_one_adjoint = false;  // (4) F_0 bijective and F_1 adjoint
  bool homwise = false;               // (5) hom-wise ff right adjoints
  bool all_equal = false;
};
EquivalentCharacterizations check_equivalent_characterizations(const StrictTwoFunctor& F, int N,
                                                               const Caps& caps = {});

// Morphism version: the triangle analogue evaluated at total, fiber and
// hom-wise granularity; all must agree.
struct EquivalentCharacterizationsMorphism {
  bool total = false;
  bool all_fibers = false;
  bool low_fibers = false;
  bool homwise = false;
  bool all_equal = false;
};
EquivalentCharacterizationsMorphism check_equivalent_characterizations_morphism(
    const StrictTwoFunctor& H, const StrictTwoFunctor& F, const StrictTwoFunctor& G, int N,
    const Caps& caps = {});

struct InitialityEntry {
  int lifts = 0;
  int iso_classes = 0;
  int max_automorphisms = 0;
  bool flagged = false;  // automorphism count != 1 somewhere
  bool ok = false;       // exactly one lift up to exactly one invertible transformation
};
// Enumerates strict lifts H : Env(A) -> X with F H = lambda that commute with
// the sections, and counts invertible 2-natural transformations over A.
InitialityEntry verify_initiality(const Envelope& E, const StrictTwoFunctor& F,
                                  const Caps& caps = {});

}  // namespace catena
