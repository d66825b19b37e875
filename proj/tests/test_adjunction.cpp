#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catena/adjunction.hpp"
#include "catena/corpus.hpp"
#include "catena/fibration.hpp"

using namespace catena;
using namespace catena::fixtures;

// Delta -| ev0 on Arr(C) with the canonical unit (identity) and counit
// (id_a, f) : id_a -> f.
static Adjunction delta_ev0(const CatPtr& C, const ArrowResult& arr) {
  Adjunction adj;
  adj.left = arr.diag;
  adj.right = arr.ev0;
  adj.unit = identity_nat(identity_functor(C));
  adj.unit.target = compose_functors(arr.ev0, arr.diag);
  adj.counit = NatTransformation{compose_functors(arr.diag, arr.ev0),
                                 identity_functor(arr.cat), {}};
  adj.counit.component.resize(arr.cat->num_objects());
  for (int f = 0; f < arr.cat->num_objects(); ++f) {
    int ida = C->identity(C->src(f));
    int sq = arr.find_mor(ida, ida, f, f);
    REQUIRE(sq >= 0);
    adj.counit.component[f] = sq;
  }
  return adj;
}

// ev1 -| Delta with unit (f, id_b) : f -> id_b and identity counit.
static Adjunction ev1_delta(const CatPtr& C, const ArrowResult& arr) {
  Adjunction adj;
  adj.left = arr.ev1;
  adj.right = arr.diag;
  adj.counit = identity_nat(identity_functor(C));
  adj.counit.source = compose_functors(arr.ev1, arr.diag);
  adj.unit = NatTransformation{identity_functor(arr.cat),
                               compose_functors(arr.diag, arr.ev1), {}};
  adj.unit.component.resize(arr.cat->num_objects());
  for (int f = 0; f < arr.cat->num_objects(); ++f) {
    int idb = C->identity(C->tgt(f));
    int sq = arr.find_mor(f, f, idb, idb);
    REQUIRE(sq >= 0);
    adj.unit.component[f] = sq;
  }
  return adj;
}

TEST_CASE("identity adjunction validates with both sides fully faithful") {
  auto rep = check_adjunction(identity_adjunction(walking_arrow()));
  CHECK(rep.ok);
  CHECK(rep.unit_invertible);
  CHECK(rep.counit_invertible);
}

TEST_CASE("delta -| ev0 and ev1 -| delta pass on the whole corpus") {
  for (auto C : arrow_fact_corpus()) {
    auto arr = arrow_category(C);
    auto a1 = delta_ev0(C, arr);
    auto r1 = check_adjunction(a1);
    CHECK(r1.ok);
    CHECK(r1.unit_invertible);  // delta is fully faithful
    auto a2 = ev1_delta(C, arr);
    auto r2 = check_adjunction(a2);
    CHECK(r2.ok);
    CHECK(r2.counit_invertible);
  }
}

TEST_CASE("perturbed counit component is reported") {
  auto C = cyclic_group(2);  // Arr(Z/2) has parallel distinct squares
  auto arr = arrow_category(C);
  auto adj = delta_ev0(C, arr);
  bool broke = false;
  for (int f = 0; f < arr.cat->num_objects() && !broke; ++f) {
    int orig = adj.counit.component[f];
    for (int alt = 0; alt < arr.cat->num_morphisms() && !broke; ++alt) {
      if (alt == orig || arr.cat->src(alt) != arr.cat->src(orig) ||
          arr.cat->tgt(alt) != arr.cat->tgt(orig))
        continue;
      auto bad = adj;
      bad.counit.component[f] = alt;
      bool rejected = false;
      try {
        auto rep = check_adjunction(bad);
        rejected = !rep.ok;
        if (!rep.ok) CHECK_FALSE(rep.failures.empty());
      } catch (const Error&) {
        rejected = true;  // a broken component may already fail naturality
      }
      CHECK(rejected);
      broke = true;
    }
  }
  CHECK(broke);
}

TEST_CASE("search finds delta as the left adjoint of ev0") {
  for (auto C : {walking_arrow(), chain(2), walking_iso()}) {
    auto arr = arrow_category(C);
    auto found = search_adjoint(arr.ev0, AdjointSide::Left);
    REQUIRE(found.adj.has_value());
    CHECK(check_adjunction(*found.adj).unit_invertible);
    // adjoints are unique up to natural isomorphism; on skeletal inputs the
    // search returns the diagonal on the nose
    bool iso_to_diag = false;
    for (auto& t : enumerate_nats(found.adj->left, arr.diag))
      if (nat_invertible(t)) iso_to_diag = true;
    CHECK(iso_to_diag);
    if (C->num_morphisms() == 3 && C->num_objects() == 2 && !C->is_iso(2))
      CHECK(functors_equal(found.adj->left, arr.diag));
  }
}

TEST_CASE("right adjoint of the terminal functor is the terminal object") {
  auto wa = walking_arrow();
  auto bang = constant_functor(wa, terminal_category(), 0);
  auto found = search_adjoint(bang, AdjointSide::Right);
  REQUIRE(found.adj.has_value());
  CHECK(found.adj->right.obj_map[0] == 1);  // b is terminal

  auto d2 = discrete(2);
  auto bang2 = constant_functor(d2, terminal_category(), 0);
  CHECK_FALSE(search_adjoint(bang2, AdjointSide::Right).adj.has_value());
}

TEST_CASE("inclusion of two points into the walking arrow has no right adjoint") {
  auto d2 = discrete(2);
  auto wa = walking_arrow();
  CatFunctor inc{d2, wa, {0, 1}, {wa->identity(0), wa->identity(1)}};
  validate_functor(inc);
  auto found = search_adjoint(inc, AdjointSide::Right);
  CHECK_FALSE(found.adj.has_value());
  CHECK(found.first_failing_object >= 0);
}

TEST_CASE("hom action functors are inverse on the nose") {
  auto wa = walking_arrow();
  auto h0 = hom_action_equivalence(identity_adjunction(wa));
  CHECK(h0.inverse_pair);
  CHECK(h0.commutes_with_projections);
  auto arr = arrow_category(wa);
  auto adj = delta_ev0(wa, arr);
  auto h1 = hom_action_equivalence(adj);
  CHECK(h1.inverse_pair);
  auto bang = constant_functor(chain(2), terminal_category(), 0);
  auto found = search_adjoint(bang, AdjointSide::Right);
  REQUIRE(found.adj.has_value());
  CHECK(hom_action_equivalence(*found.adj).inverse_pair);
}

TEST_CASE("identity square has an invertible identity mate") {
  auto wa = walking_arrow();
  auto idf = identity_functor(wa);
  auto sq = strict_square(idf, idf, idf, idf);
  auto m = vertical_mate(sq, identity_adjunction(wa), identity_adjunction(wa));
  CHECK(m.invertible);
  for (size_t i = 0; i < m.mate.component.size(); ++i)
    CHECK(wa->is_identity(m.mate.component[i]));
}

TEST_CASE("a crafted square with a lossy right edge is not adjointable") {
  auto c1 = chain(1);
  auto pt = terminal_category();
  CatFunctor H = constant_functor(pt, c1, 1);
  CatFunctor K = identity_functor(pt);
  CatFunctor V = identity_functor(pt);
  CatFunctor U = constant_functor(c1, pt, 0);
  auto sq = strict_square(H, K, V, U);
  auto adjU = search_adjoint(U, AdjointSide::Left);
  REQUIRE(adjU.adj.has_value());
  auto m = vertical_mate(sq, *adjU.adj, identity_adjunction(pt));
  CHECK_FALSE(m.invertible);
}

TEST_CASE("units and counits commute across adjointable squares") {
  auto C = walking_arrow();
  auto arr = arrow_category(C);
  auto adjF = delta_ev0(C, arr);
  CatFunctor H = identity_functor(C);
  CatFunctor K = identity_functor(arr.cat);
  auto m = mate_right_of_left(H, K, adjF, adjF,
                              [&] {
                                auto f = identity_nat(compose_functors(K, adjF.left));
                                f.target = compose_functors(adjF.left, H);
                                return f;
                              }());
  CHECK(m.invertible);
  // counits commute: eps_{K b} . F(mate_b) = K(eps_b)
  const FinCategory& Arr = *arr.cat;
  for (int b = 0; b < Arr.num_objects(); ++b) {
    int lhs = Arr.compose(adjF.counit.component[K.obj_map[b]],
                          adjF.left.mor_map[m.mate.component[b]]);
    CHECK(lhs == K.mor_map[adjF.counit.component[b]]);
  }
  // units commute: mate_{F a} . H(eta_a) = eta_{H a}
  for (int a = 0; a < C->num_objects(); ++a) {
    int lhs = C->compose(m.mate.component[adjF.left.obj_map[a]],
                         H.mor_map[adjF.unit.component[a]]);
    CHECK(lhs == adjF.unit.component[H.obj_map[a]]);
  }
}

TEST_CASE("mate correspondence is functorial and unital") {
  auto c2 = chain(2);
  auto thin = [&](int i, int j) {
    auto h = c2->hom(i, j);
    REQUIRE(h.size() == 1);
    return h[0];
  };
  auto poset_map = [&](std::vector<int> om) {
    CatFunctor F{c2, c2, om, {}};
    F.mor_map.resize(c2->num_morphisms());
    for (int m = 0; m < c2->num_morphisms(); ++m)
      F.mor_map[m] = thin(om[c2->src(m)], om[c2->tgt(m)]);
    validate_functor(F);
    return F;
  };
  auto U1 = identity_functor(c2);
  auto U2 = poset_map({0, 0, 2});
  auto A1 = identity_adjunction(c2);
  auto f2 = search_adjoint(U2, AdjointSide::Left);
  REQUIRE(f2.adj.has_value());
  // sigma : U2 => U1 exists since U2 x <= x pointwise
  NatTransformation sigma{U2, U1, {}};
  for (int x = 0; x < 3; ++x) sigma.component.push_back(thin(U2.obj_map[x], x));
  validate_nat(sigma);
  auto tau = mate_between_adjoints(*f2.adj, A1, sigma);
  validate_nat(tau.mate);
  // unitality: the mate of the identity transformation is the identity
  NatTransformation idU{U2, U2, {}};
  for (int x = 0; x < 3; ++x) idU.component.push_back(c2->identity(U2.obj_map[x]));
  auto mid = mate_between_adjoints(*f2.adj, *f2.adj, idU);
  for (int x = 0; x < 3; ++x) CHECK(c2->is_identity(mid.mate.component[x]));
  // composition: mate(sigma . id) = mate(id) . mate(sigma) (contravariantly)
  auto composed = mate_between_adjoints(*f2.adj, A1, vcomp(sigma, idU));
  auto expected = vcomp(mid.mate, tau.mate);
  CHECK(composed.mate.component == expected.component);
}

TEST_CASE("pullback of the ev0 adjunction gives the free-fibration diagonal") {
  auto Y = walking_arrow();
  auto C = terminal_category();
  CatFunctor G = constant_functor(C, Y, 1);
  auto arr = arrow_category(Y);
  auto P = pullback_category(G, arr.ev0);
  auto sq = strict_square(P.pr1, G, P.pr0, arr.ev0);
  CHECK(is_pullback_square(sq));
  auto adjY = delta_ev0(Y, arr);
  auto pulled = pullback_adjunction_ff_left(sq, adjY);
  CHECK(pulled.fully_faithful);
  CHECK(pulled.adjointable);
  CHECK(check_adjunction(pulled.adj).ok);
  auto free = free_cocartesian_fibration(G);
  CHECK(check_adjunction(free.delta_adjunction).ok);
  CHECK(check_adjunction(free.delta_adjunction).unit_invertible);
}

TEST_CASE("identity pullback square returns the original adjunction") {
  auto C = walking_arrow();
  auto arr = arrow_category(C);
  auto adj = delta_ev0(C, arr);
  auto sq = strict_square(identity_functor(arr.cat), identity_functor(C), arr.ev0, arr.ev0);
  auto pulled = pullback_adjunction_ff_left(sq, adj);
  CHECK(pulled.fully_faithful);
  CHECK(functors_equal(pulled.adj.right, arr.ev0));
  CHECK(functors_equal(pulled.adj.left, arr.diag));
}

TEST_CASE("pullback of an adjunction along a cocartesian base works strictly") {
  auto I = chain(1);
  CatDiagram d;
  d.base = I;
  d.fiber = {walking_arrow(), walking_arrow()};
  d.transition.resize(I->num_morphisms());
  for (int k = 0; k < I->num_morphisms(); ++k)
    d.transition[k] = identity_functor(walking_arrow());
  auto gr = grothendieck_construction(d);
  auto pt = terminal_category();
  CatFunctor U{pt, I, {1}, {I->identity(1)}};
  validate_functor(U);
  auto FU = search_adjoint(U, AdjointSide::Left);
  REQUIRE(FU.adj.has_value());
  auto P = pullback_category(U, gr.fib.p);
  auto sq = strict_square(P.pr1, U, P.pr0, gr.fib.p);
  CHECK(is_pullback_square(sq));
  auto pulled = pullback_adjunction_over_cocartesian_base(sq, *FU.adj);
  CHECK(check_adjunction(pulled.adj).ok);
  CHECK(pulled.adjointable);
  CHECK(pulled.left_adjoint_cocartesian);
}

TEST_CASE("cube pullback of left adjoints") {
  auto C = walking_arrow();
  auto idadj = identity_adjunction(C);
  auto idf = identity_functor(C);
  CubeInput cube;
  auto P = pullback_category(idf, idf);
  cube.top_pr1 = P.pr0;
  cube.top_pr2 = P.pr1;
  cube.top_leg1 = idf;
  cube.top_leg2 = idf;
  cube.bot_pr1 = P.pr0;
  cube.bot_pr2 = P.pr1;
  cube.bot_leg1 = idf;
  cube.bot_leg2 = idf;
  cube.F0 = idadj;
  cube.F1 = idadj;
  cube.F2 = idadj;
  cube.F = identity_functor(P.cat);
  auto pulled = pullback_adjunction_cube(cube);
  CHECK(check_adjunction(pulled.adj).ok);
  CHECK(pulled.adjointable);
  CHECK(pulled.fully_faithful);

  // collapsing instance: verticals send chain(1) to the point
  auto c1 = chain(1);
  auto pt = terminal_category();
  CatFunctor bang = constant_functor(c1, pt, 0);
  auto Fl = search_adjoint(bang, AdjointSide::Right);
  REQUIRE(Fl.adj.has_value());
  Adjunction collapse = *Fl.adj;  // bang -| pick_1
  auto Pa = pullback_category(identity_functor(c1), identity_functor(c1));
  auto Pb = pullback_category(identity_functor(pt), identity_functor(pt));
  CubeInput cube2;
  cube2.top_pr1 = Pa.pr0;
  cube2.top_pr2 = Pa.pr1;
  cube2.top_leg1 = identity_functor(c1);
  cube2.top_leg2 = identity_functor(c1);
  cube2.bot_pr1 = Pb.pr0;
  cube2.bot_pr2 = Pb.pr1;
  cube2.bot_leg1 = identity_functor(pt);
  cube2.bot_leg2 = identity_functor(pt);
  cube2.F0 = collapse;
  cube2.F1 = collapse;
  cube2.F2 = collapse;
  CatFunctor F2{Pa.cat, Pb.cat, {}, {}};
  for (int o = 0; o < Pa.cat->num_objects(); ++o) F2.obj_map.push_back(0);
  for (int m = 0; m < Pa.cat->num_morphisms(); ++m) F2.mor_map.push_back(0);
  validate_functor(F2);
  cube2.F = F2;
  auto pulled2 = pullback_adjunction_cube(cube2);
  CHECK(check_adjunction(pulled2.adj).ok);
  CHECK(pulled2.adjointable);
}

TEST_CASE("essential image of a fully-faithful right adjoint") {
  auto idadj = identity_adjunction(walking_arrow());
  auto r0 = characterize_essential_image(idadj);
  CHECK(r0.agree);
  CHECK(r0.essential_image.size() == 2);

  auto ws = walking_section();
  auto t = find_terminal_object(ws);
  REQUIRE(t.has_value());
  auto bang = constant_functor(ws, terminal_category(), 0);
  auto adj = search_adjoint(bang, AdjointSide::Right);
  REQUIRE(adj.adj.has_value());
  auto r1 = characterize_essential_image(*adj.adj);
  CHECK(r1.agree);
  for (int b : r1.essential_image) CHECK(ws->isomorphic_objects(b, t->object));
  bool threw = false;
  try {
    auto wa = walking_arrow();
    auto nonff = search_adjoint(constant_functor(wa, terminal_category(), 0),
                                AdjointSide::Right);
    REQUIRE(nonff.adj.has_value());
    // counit of bang -| pick_b is invertible here (pt target), so craft a
    // counit-not-invertible case from ev1 -| delta instead
    auto arr = arrow_category(wa);
    auto e1d = ev1_delta(wa, arr);
    // unit of ev1 -| delta is not pointwise invertible; its counit is; flip
    // sides by characterizing delta's essential image
    auto r2 = characterize_essential_image(e1d);
    CHECK(r2.agree);
    threw = false;
  } catch (const Error& e) {
    threw = e.code == Err::CounitNotInvertible;
  }
  CHECK_FALSE(threw);
}
