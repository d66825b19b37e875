#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catena/corpus.hpp"
#include "catena/envelope.hpp"
#include "catena/fibration.hpp"

using namespace catena;
using namespace catena::fixtures;

TEST_CASE("envelope of the point counts endpoint-preserving monotone maps") {
  auto P = point_two_category();
  auto E = build_envelope(P, 4);
  const FinCategory& H = E.env->hom_at(0, 0);
  CHECK(H.num_objects() == 5);  // lengths 0..4
  for (int m = 0; m <= 4; ++m)
    for (int m2 = 0; m2 <= 4; ++m2) {
      int src = -1, tgt = -1;
      for (int s = 0; s < 5; ++s) {
        if (E.strings[0][s].length() == m) src = s;
        if (E.strings[0][s].length() == m2) tgt = s;
      }
      size_t expected = enumerate_simplex_maps(m2, m, SimplexFilter::Active).size();
      CHECK(H.hom(src, tgt).size() == expected);
    }
  // the two spot checks: |Hom(1,2)| = 2 and |Hom(2,1)| = 1
  int s1 = -1, s2 = -1;
  for (int s = 0; s < 5; ++s) {
    if (E.strings[0][s].length() == 1) s1 = s;
    if (E.strings[0][s].length() == 2) s2 = s;
  }
  CHECK(H.hom(s1, s2).size() == 2);
  CHECK(H.hom(s2, s1).size() == 1);
}

TEST_CASE("envelope hom categories of the walking arrow 2-category") {
  auto W = walking_arrow_two_category();
  auto E = build_envelope(W, 4);
  // strings a -> b: one f somewhere among identities, total length 1..4
  CHECK(E.strings[0 * 2 + 1].size() == 10);
  // strings a -> a: identity powers 0..4
  CHECK(E.strings[0 * 2 + 0].size() == 5);
  // b -> a: none
  CHECK(E.strings[1 * 2 + 0].empty());
}

TEST_CASE("envelope validates, is globular and complete, on the whole corpus") {
  for (auto& A : envelope_corpus()) {
    if (A->name == "signed") continue;  // exercised at cap 3 below to stay fast
    auto E = build_envelope(A, 4);
    auto pres = segal_fibers(E.env, 2);
    auto rep = check_globular_complete(pres);
    CHECK(rep.globular);
    CHECK(rep.complete);
  }
  auto Es = build_envelope(signed_monoid_two_category(), 3);
  auto reps = check_globular_complete(segal_fibers(Es.env, 2));
  CHECK(reps.globular);
  CHECK(reps.complete);
}

TEST_CASE("iota is a valid lax functor with fully faithful hom functors") {
  for (auto& A : {point_two_category(), walking_arrow_two_category(),
                  poset_triangle_two_category()}) {
    auto E = build_envelope(A, 4);
    auto io = iota(E);
    CHECK(validate_lax_functor(io).ok);
    const int n = A->num_objects();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        auto rep = analyze_functor(io.hom_map[a * n + b]);
        CHECK(rep.fully_faithful);
      }
  }
}

TEST_CASE("iota's fibration image preserves exactly the inert lifts") {
  auto A = walking_arrow_two_category();
  auto E = build_envelope(A, 4);
  auto io = iota(E);
  auto fm = lax_to_fibration_map(io, 3);
  auto rep = check_inert_cocartesian(fm.source, fm.target, fm.map);
  CHECK(rep.inert_cocartesian);
  const auto& delta = fm.source.pres.delta;
  int s0 = delta.find(validate_simplex_map(1, 0, {0, 0}));
  int f02 = delta.find(validate_simplex_map(1, 2, {0, 2}));
  CHECK_FALSE(rep.preserves_over[s0]);
  CHECK_FALSE(rep.preserves_over[f02]);
  for (size_t k = 0; k < rep.preserves_over.size(); ++k)
    if (delta.inert_base(static_cast<int>(k))) CHECK(rep.preserves_over[k]);
}

TEST_CASE("lambda is strict, restricts to the identity, and is homwise left adjoint to iota") {
  for (auto& A : {point_two_category(), walking_arrow_two_category(),
                  poset_triangle_two_category(), fat_identity_two_category()}) {
    auto E = build_envelope(A, 4);
    auto lam = lambda_functor(E);
    CHECK(validate_strict_two_functor(lam).ok);
    auto res = restrict_strict_functor(E, lam);
    CHECK(lax_functors_equal(res, strict_as_lax(identity_two_functor(A))));
    const int n = A->num_objects();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        auto adj = lambda_iota_hom_adjunction(E, a, b);
        auto rep = check_adjunction(adj);
        CHECK(rep.ok);
        CHECK(rep.counit_invertible);
      }
  }
}

TEST_CASE("lambda absorbs shapes: pure-shape cells with identity components collapse") {
  auto A = walking_arrow_two_category();
  auto E = build_envelope(A, 4);
  auto lam = lambda_functor(E);
  const int n = A->num_objects();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& cls = E.cells[a * n + b];
      for (size_t m = 0; m < cls.size(); ++m) {
        bool identity_components = true;
        const EnvString& t = E.strings[a * n + b][cls[m].tgt];
        for (int i = 0; i < t.length(); ++i)
          if (cls[m].components[i] !=
              A->hom_at(t.verts[i], t.verts[i + 1]).identity(t.cells[i]))
            identity_components = false;
        if (!identity_components) continue;
        int img = lam.hom_map[a * n + b].mor_map[m];
        CHECK(A->hom_at(a, b).is_identity(img));
      }
    }
}

TEST_CASE("classify of the identity lax functor equals lambda") {
  auto A = walking_arrow_two_category();
  auto E = build_envelope(A, 4);
  auto idlax = strict_as_lax(identity_two_functor(A));
  auto G = classify_lax_functor(E, idlax);
  CHECK(strict_two_functors_equal(G, lambda_functor(E)));
}

TEST_CASE("classify of a monad sends strings to monad powers") {
  auto P = point_two_category();
  auto B = signed_monoid_two_category();
  auto E = build_envelope(P, 4);
  const FinCategory& H = B->hom_at(0, 0);
  // the nontrivial monad (T, mu = id_T, eta = h0)
  LaxFunctor F;
  F.source = P;
  F.target = B;
  F.obj_map = {0};
  F.hom_map = {CatFunctor{P->hom_ptr(0, 0), B->hom_ptr(0, 0), {1}, {H.identity(1)}}};
  F.delta = {H.morphism_index("h0")};
  F.gamma = {{H.identity(1)}};
  REQUIRE(validate_lax_functor(F).ok);
  auto G = classify_lax_functor(E, F);
  // strings of length m map to T^m = T for m >= 1, I for m = 0
  for (int s = 0; s < E.env->hom_at(0, 0).num_objects(); ++s) {
    int img = G.hom_map[0].obj_map[s];
    CHECK(img == (E.strings[0][s].length() == 0 ? 0 : 1));
  }
  // round trip restores the monad data
  auto back = restrict_strict_functor(E, G);
  CHECK(lax_functors_equal(back, F));
}

TEST_CASE("restrict and classify are mutually inverse on enumerated data") {
  auto A = point_two_category();
  for (auto B : {signed_monoid_two_category(), max_chain_two_category(2)}) {
    auto E = build_envelope(A, 3);
    auto laxes = enumerate_lax_functors(A, B);
    auto stricts = enumerate_strict_functors_from_envelope(E, B);
    CHECK(laxes.size() == stricts.size());
    for (auto& F : laxes) {
      auto G = classify_lax_functor(E, F);
      auto back = restrict_strict_functor(E, G);
      CHECK(lax_functors_equal(back, F));
    }
    for (auto& G : stricts) {
      auto F = restrict_strict_functor(E, G);
      auto again = classify_lax_functor(E, F);
      CHECK(strict_two_functors_equal(again, G));
    }
  }
}

TEST_CASE("gamma iterate association independence") {
  // right-normalized iterate agrees with the left-normalized one
  auto P = point_two_category();
  auto B = signed_monoid_two_category();
  const FinCategory& H = B->hom_at(0, 0);
  LaxFunctor F;
  F.source = P;
  F.target = B;
  F.obj_map = {0};
  F.hom_map = {CatFunctor{P->hom_ptr(0, 0), B->hom_ptr(0, 0), {1}, {H.identity(1)}}};
  F.delta = {H.morphism_index("h0")};
  F.gamma = {{H.identity(1)}};
  REQUIRE(validate_lax_functor(F).ok);
  for (int len = 2; len <= 4; ++len) {
    std::vector<int> vs(len + 1, 0), cs(len, 0);
    int left = lax_gamma_iterate(F, vs, cs);
    // right-normalized: peel from the far end
    std::function<int(int)> right_iter = [&](int k) -> int {
      // composite F(c_k..c_len) => F of composite, grouping to the right
      if (k == len - 1) return H.identity(F.hom_map[0].obj_map[0]);
      int inner = right_iter(k + 1);
      // gamma_{composite(c_{k+2}..), c_{k+1}}-style step; with one object and
      // one 1-cell the bookkeeping collapses to indices
      int whisk = B->compose2(0, 0, 0, inner, H.identity(F.hom_map[0].obj_map[0]));
      int comp_rest = 0;  // the unique 1-cell of the point composes to itself
      (void)comp_rest;
      int gm = F.gamma[0][0];
      return H.compose(gm, whisk);
    };
    int right = right_iter(0);
    CHECK(left == right);
  }
}

TEST_CASE("fiber counts agree with the string-pair description") {
  // level-n fiber of the envelope presentation versus the independent
  // (active shape, source path) count
  auto count_paths = [](const TwoCat& A, int len) {
    // number of composable len-tuples of 1-cells
    std::function<long long(int, int)> from = [&](int at, int remaining) -> long long {
      if (remaining == 0) return 1;
      long long total = 0;
      for (int next = 0; next < A.num_objects(); ++next)
        total += static_cast<long long>(A.hom_at(at, next).num_objects()) *
                 from(next, remaining - 1);
      return total;
    };
    long long total = 0;
    for (int a = 0; a < A.num_objects(); ++a) total += from(a, len);
    return total;
  };
  for (auto& A : {point_two_category(), walking_arrow_two_category()}) {
    int cap = 3;
    auto E = build_envelope(A, cap);
    auto pres = segal_fibers(E.env, 2);
    for (int lvl = 0; lvl <= 2; ++lvl) {
      // independent side: sum over gap vectors (l_1..l_lvl) with sum <= cap of
      // the number of A-paths of length sum with the matching block structure;
      // summing over all gap vectors of total m gives (number of gap vectors)
      // * paths only for one-object A, so instead count pairs directly:
      long long expected = 0;
      std::function<void(int, int, std::vector<int>&)> gaps = [&](int slot, int used,
                                                                  std::vector<int>& acc) {
        if (slot == lvl) {
          // each gap vector contributes the A-paths of length `used`
          // partitioned by the blocks; block structure does not constrain
          // which path, so the count is paths(used)
          expected += count_paths(*A, used);
          return;
        }
        for (int l = 0; used + l <= cap; ++l) {
          acc.push_back(l);
          gaps(slot + 1, used + l, acc);
          acc.pop_back();
        }
      };
      std::vector<int> acc;
      gaps(0, 0, acc);
      CHECK(static_cast<long long>(pres.fiber[lvl]->num_objects()) == expected);
    }
  }
}

TEST_CASE("the iota/pr0 counit is a cocartesian lift in the envelope fibration") {
  auto A = walking_arrow_two_category();
  auto E = build_envelope(A, 3);
  auto U = unstraighten(segal_fibers(E.env, 2));
  // counit at a level-1 object (a single string s of length m): the morphism
  // over the active shape [1] -> [m] from the split singleton path to s with
  // identity components
  const SegalPresentation& PS = U.pres;
  const int n = A->num_objects();
  int checked = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (size_t s = 0; s < E.strings[a * n + b].size(); ++s) {
        const EnvString& str = E.strings[a * n + b][s];
        int m = str.length();
        if (m < 1 || m > 2) continue;  // the split path must live at level <= N
        // split path: the string's cells as singleton strings
        std::vector<int> verts = str.verts;
        std::vector<int> cells(m);
        for (int i = 0; i < m; ++i)
          cells[i] = E.singleton(str.verts[i], str.verts[i + 1], str.cells[i]);
        int split = PS.find_path(m, verts, cells);
        REQUIRE(split >= 0);
        int tot = U.gr.find_obj(m, split);
        int basek = PS.delta.find(validate_simplex_map(1, m, {0, m}));
        REQUIRE(basek >= 0);
        // the pushforward along the active base composes the split path back
        int lift = cocartesian_lift(U.gr.fib, tot, basek);
        auto [lvl, idx] = U.gr.obj_pairs[U.gr.total->tgt(lift)];
        CHECK(lvl == 1);
        CHECK(PS.path_cells[1][idx][0] == static_cast<int>(s));
        CHECK(U.gr.fib.cocart[lift]);
        ++checked;
      }
  CHECK(checked > 0);
}

TEST_CASE("local right adjoint sections hold for lambda and fail for collapses") {
  for (auto& A : {point_two_category(), walking_arrow_two_category()}) {
    auto E = build_envelope(A, 3);
    auto lam = lambda_functor(E);
    auto W = check_local_right_adjoint_sections(lam);
    CHECK(W.ok);
    auto Wid = check_local_right_adjoint_sections(identity_two_functor(A));
    CHECK(Wid.ok);
  }
  // hom-collapsing counterexample: the poset triangle onto itself squashing
  // the chain hom to its bottom cell is not an option (it keeps adjoints), so
  // collapse the fat identity instead: its hom functor to the point kills the
  // sign and has no fully-faithful right adjoint... the point hom is terminal,
  // every functor to it has a right adjoint with invertible counit only if the
  // source has a terminal object preserved appropriately; Z/2 has no terminal
  // object distinct issue: just assert the checker reports the failure.
  auto FI = fat_identity_two_category();
  auto Pt = point_two_category();
  StrictTwoFunctor collapse;
  collapse.source = FI;
  collapse.target = Pt;
  collapse.obj_map = {0};
  CatFunctor hf{FI->hom_ptr(0, 0), Pt->hom_ptr(0, 0), {0}, {0, 0}};
  collapse.hom_map = {hf};
  REQUIRE(validate_strict_two_functor(collapse).ok);
  auto W = check_local_right_adjoint_sections(collapse);
  // the hom functor Z/2 -> pt has a right adjoint (terminal object exists in
  // Z/2's underlying... Z/2 as a one-object groupoid has its object terminal?
  // Hom(x, x) = 2 elements, so no terminal object: no right adjoint at all.
  CHECK_FALSE(W.ok);
}

TEST_CASE("commuting with sections holds for identity and classify triangles") {
  auto A = walking_arrow_two_category();
  auto E = build_envelope(A, 3);
  auto lam = lambda_functor(E);
  // identity triangle over A
  auto idA = identity_two_functor(A);
  auto tri0 = check_commutes_with_sections(idA, idA, idA);
  CHECK(tri0.ok);
  CHECK(tri0.agree);
  // lambda as a morphism (Env(A), lambda) -> (A, id) over A
  auto tri1 = check_commutes_with_sections(lam, lam, idA);
  CHECK(tri1.ok);
  CHECK(tri1.agree);
}

TEST_CASE("the five characterizations agree on lambda and on a collapse") {
  for (auto& A : {point_two_category(), walking_arrow_two_category()}) {
    auto E = build_envelope(A, 3);
    auto lam = lambda_functor(E);
    auto R = check_equivalent_characterizations(lam, 3);
    CHECK(R.relative_adjoint);
    CHECK(R.all_fibers);
    CHECK(R.low_fibers);
    CHECK(R.zero_equiv_one_adjoint);
    CHECK(R.homwise);
    CHECK(R.all_equal);
    auto Rid = check_equivalent_characterizations(identity_two_functor(A), 3);
    CHECK(Rid.all_equal);
    CHECK(Rid.homwise);
  }
  // collapse with no hom adjoints: fat identity onto the point
  auto FI = fat_identity_two_category();
  auto Pt = point_two_category();
  StrictTwoFunctor collapse;
  collapse.source = FI;
  collapse.target = Pt;
  collapse.obj_map = {0};
  collapse.hom_map = {CatFunctor{FI->hom_ptr(0, 0), Pt->hom_ptr(0, 0), {0}, {0, 0}}};
  auto R = check_equivalent_characterizations(collapse, 3);
  CHECK_FALSE(R.homwise);
  CHECK_FALSE(R.relative_adjoint);
  CHECK_FALSE(R.all_fibers);
  CHECK_FALSE(R.low_fibers);
  CHECK_FALSE(R.zero_equiv_one_adjoint);
  CHECK(R.all_equal);
}

TEST_CASE("initiality: identity and lambda corpus entries have unique lifts") {
  auto A = walking_arrow_two_category();
  auto E = build_envelope(A, 3);
  // (A, id): the only lift is lambda itself
  auto entry = verify_initiality(E, identity_two_functor(A));
  CHECK(entry.ok);
  CHECK(entry.iso_classes == 1);
  CHECK(entry.max_automorphisms == 1);
  CHECK_FALSE(entry.flagged);
  // (Env(A), lambda)
  auto lam = lambda_functor(E);
  auto entry2 = verify_initiality(E, lam);
  CHECK(entry2.ok);
  CHECK(entry2.iso_classes == 1);
}
