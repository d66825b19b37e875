#pragma once

#include <cstdint>
#include <vector>

#include "catena/fincat.hpp"
#include "catena/twocat.hpp"

namespace catena {

// Named small categories used throughout the tests and the seeded suites.
namespace fixtures {

CatPtr terminal_category();
CatPtr walking_arrow();          // a --f--> b
CatPtr walking_iso();            // a <~> b
CatPtr discrete(int n);
CatPtr chain(int n);             // poset 0 < 1 < ... < n, thin
CatPtr parallel_pair();          // a ==f,g==> b
CatPtr three_chain();            // a -> b -> c with composite, free
CatPtr cyclic_group(int n);      // one object, Z/n
CatPtr commutative_square();     // free commuting square poset
CatPtr walking_section();        // s : a -> b, r : b -> a, r s = id_a

TwoCatPtr point_two_category();
TwoCatPtr walking_arrow_two_category();
// One object, 1-cells a chain 0..k with max composition; thin 2-cells.
TwoCatPtr max_chain_two_category(int k);
// One object, 1-cells the powers id, T, T^2 (truncated multiplication),
// Hom(T^a, T^b) a singleton: the codiscrete monad 2-category.
TwoCatPtr codiscrete_monad_two_category();
// One object; 1-cells {I, T}; Aut(T) = Z/2 acting simply transitively on
// Hom(I, T); T.T = T. Small but has genuinely non-thin 2-cells.
TwoCatPtr signed_monoid_two_category();
// Three-object thin 2-category: poset a < b < c with hom(a,c) a 2-chain.
TwoCatPtr poset_triangle_two_category();
// Two objects with an adjoint-equivalence 1-cell pair and no invertible
// 2-cell linking e.f / f.e to identities: fails completeness.
TwoCatPtr incomplete_equivalence_two_category();
// One object, trivial 1-cell with an extra invertible 2-cell on the identity:
// fails completeness by automorphism count.
TwoCatPtr fat_identity_two_category();

}  // namespace fixtures

// Seeded corpus generation. Every generator is a pure function of the seed.
struct CorpusOptions {
  int max_objects = 4;
  int max_extra_morphisms = 4;
};

// Random valid finite categories: posets, free acyclic quivers with forced
// composites, small monoids and products of those.
CatPtr random_category(Rng& rng, const CorpusOptions& opt = {});
// Random functor between given categories (uniform over the enumeration).
CatFunctor random_functor(Rng& rng, const CatPtr& C, const CatPtr& D, const Caps& caps = {});
// Random category-valued diagram on a small base (for Grothendieck tests).
struct CatDiagram;  // defined in fibration.hpp
CatDiagram random_diagram(Rng& rng, const Caps& caps = {});

std::vector<TwoCatPtr> envelope_corpus();       // the shipped 2-category corpus
std::vector<CatPtr> arrow_fact_corpus();        // >= 10 categories with <= 6 objects

}  // namespace catena
