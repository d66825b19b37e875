#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "catena/adjunction.hpp"
#include "catena/corpus.hpp"
#include "catena/fincat.hpp"

using namespace catena;
using namespace catena::fixtures;

// Independent oracle: count functors by enumerating every raw (object map,
// morphism map) pair and filtering by the functor laws afterwards.
static long long raw_functor_count(const CatPtr& C, const CatPtr& D) {
  long long count = 0;
  int no = C->num_objects(), nm = C->num_morphisms();
  std::vector<int> omap(no, 0), mmap(nm, 0);
  std::function<void(int)> mor_loop = [&](int f) {
    if (f == nm) {
      for (int x = 0; x < no; ++x)
        if (mmap[C->identity(x)] != D->identity(omap[x])) return;
      for (int g = 0; g < nm; ++g)
        if (D->src(mmap[g]) != omap[C->src(g)] || D->tgt(mmap[g]) != omap[C->tgt(g)]) return;
      for (int g = 0; g < nm; ++g)
        for (int h : C->out_morphisms(C->tgt(g)))
          if (D->compose(mmap[h], mmap[g]) != mmap[C->compose(h, g)]) return;
      ++count;
      return;
    }
    for (int img = 0; img < D->num_morphisms(); ++img) {
      mmap[f] = img;
      mor_loop(f + 1);
    }
  };
  std::function<void(int)> obj_loop = [&](int x) {
    if (x == no) {
      mor_loop(0);
      return;
    }
    for (int img = 0; img < D->num_objects(); ++img) {
      omap[x] = img;
      obj_loop(x + 1);
    }
  };
  obj_loop(0);
  return count;
}

TEST_CASE("validation accepts the tiny standard categories") {
  auto pt = terminal_category();
  CHECK(pt->num_objects() == 1);
  CHECK(pt->num_morphisms() == 1);
  auto wa = walking_arrow();
  CHECK(wa->num_objects() == 2);
  CHECK(wa->num_morphisms() == 3);
  CHECK(wa->compose(wa->identity(1), wa->morphism_index("f")) == wa->morphism_index("f"));
}

TEST_CASE("a perturbed composition table is rejected as non-associative") {
  CatBuilder b("bad");
  int a = b.add_object("a"), x = b.add_object("b"), c = b.add_object("c"), d = b.add_object("d");
  int f = b.add_morphism("f", a, x);
  int g = b.add_morphism("g", x, c);
  int h = b.add_morphism("h", c, d);
  int gf = b.add_morphism("gf", a, c);
  int hg = b.add_morphism("hg", x, d);
  int hgf = b.add_morphism("hgf", a, d);
  int hgf2 = b.add_morphism("hgf2", a, d);  // decoy target for the broken entry
  b.set_composite(g, f, gf);
  b.set_composite(h, g, hg);
  b.set_composite(h, gf, hgf);
  b.set_composite(hg, f, hgf2);  // breaks h(gf) = (hg)f
  bool threw = false;
  try {
    b.build();
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code == Err::NonAssociative);
  }
  CHECK(threw);
  b.comps.back() = {hg, f, hgf};
  CHECK_NOTHROW(b.build());
}

TEST_CASE("missing composite is reported") {
  CatBuilder b("gap");
  int a = b.add_object("a"), x = b.add_object("b"), c = b.add_object("c");
  b.add_morphism("f", a, x);
  b.add_morphism("g", x, c);
  bool threw = false;
  try {
    b.build();
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code == Err::MissingComposite);
  }
  CHECK(threw);
}

TEST_CASE("arrow category of the terminal category collapses") {
  auto pt = terminal_category();
  auto arr = arrow_category(pt);
  CHECK(arr.cat->num_objects() == 1);
  CHECK(arr.cat->num_morphisms() == 1);
  CHECK(functors_equal(arr.ev0, arr.ev1));
}

TEST_CASE("functor category of walking arrows is the expected poset") {
  auto wa = walking_arrow();
  auto fc = functor_category(wa, wa);
  CHECK(fc.objects.size() == 3);
  // const_a => id => const_b plus const_a => const_b plus three identities
  CHECK(fc.cat->num_objects() == 3);
  CHECK(fc.cat->num_morphisms() == 6);
}

TEST_CASE("pullback of identity cospan returns the category itself") {
  auto wa = walking_arrow();
  auto id = identity_functor(wa);
  auto pb = pullback_category(id, id);
  CHECK(pb.cat->num_objects() == wa->num_objects());
  CHECK(pb.cat->num_morphisms() == wa->num_morphisms());
  CHECK(is_isomorphism_of_categories(pb.pr0));
  CHECK(functors_equal(pb.pr0, pb.pr1));
}

TEST_CASE("enumeration counts match the raw-map oracle") {
  auto pt = terminal_category();
  auto wa = walking_arrow();
  auto wi = walking_iso();
  auto pp = parallel_pair();
  CHECK(enumerate_functors(pt, wa).size() == 2);  // one per object
  CHECK(enumerate_functors(wa, wa).size() == 3);
  CHECK(enumerate_functors(wa, wa).size() == static_cast<size_t>(raw_functor_count(wa, wa)));
  CHECK(enumerate_functors(pp, wa).size() == static_cast<size_t>(raw_functor_count(pp, wa)));
  CHECK(enumerate_functors(wi, wa).size() == static_cast<size_t>(raw_functor_count(wi, wa)));
  CHECK(enumerate_functors(wa, wi).size() == static_cast<size_t>(raw_functor_count(wa, wi)));
  auto sect = walking_section();
  CHECK(enumerate_functors(sect, wa).size() ==
        static_cast<size_t>(raw_functor_count(sect, wa)));
  auto idwa = identity_functor(wa);
  CHECK(enumerate_nats(idwa, idwa).size() == 1);
}

TEST_CASE("functor analysis flags") {
  auto wa = walking_arrow();
  auto pt = terminal_category();
  auto wi = walking_iso();
  auto rid = analyze_functor(identity_functor(wa));
  CHECK(rid.fully_faithful);
  CHECK(rid.essentially_surjective);
  CHECK(rid.equivalence);
  CHECK(rid.conservative);
  CHECK(rid.iso_on_objects);

  auto rb = analyze_functor(constant_functor(wa, pt, 0));
  CHECK(rb.essentially_surjective);
  CHECK_FALSE(rb.fully_faithful);

  auto ri = analyze_functor(constant_functor(pt, wi, 0));
  CHECK(ri.fully_faithful);
  CHECK(ri.essentially_surjective);
  CHECK_FALSE(ri.iso_on_objects);
}

TEST_CASE("terminal object search") {
  CHECK(find_terminal_object(terminal_category())->object == 0);
  auto wa = walking_arrow();
  CHECK(find_terminal_object(wa)->object == 1);
  CHECK_FALSE(find_terminal_object(discrete(2)).has_value());
  CHECK(find_initial_object(wa)->object == 0);
}

TEST_CASE("middle four interchange holds on enumerated instances") {
  auto wa = walking_arrow();
  auto pp = parallel_pair();
  auto funs1 = enumerate_functors(pp, wa);
  auto funs2 = enumerate_functors(wa, pp);
  int checked = 0;
  for (auto& F : funs1)
    for (auto& G : funs1) {
      auto alphas = enumerate_nats(F, G);
      for (auto& H : funs2)
        for (auto& K : funs2) {
          auto betas = enumerate_nats(H, K);
          for (auto& al : alphas)
            for (auto& be : betas) {
              auto lhs = vcomp(whisker_pre(be, G), whisker_post(H, al));
              auto rhs = vcomp(whisker_post(K, al), whisker_pre(be, F));
              CHECK(lhs.component == rhs.component);
              ++checked;
            }
        }
    }
  CHECK(checked > 50);
}

TEST_CASE("arrow-category decomposition square is a pullback against the double arrow") {
  for (auto C : {walking_arrow(), walking_iso(), chain(2)}) {
    auto arr = arrow_category(C);
    auto arr2 = arrow_category(arr.cat);
    auto P = pullback_category(arr.ev1, arr.ev0);  // composable pairs (g, f): tgt g = src f? no:
    // pullback over (ev1, ev0): pairs (u, v) with ev1(u) = ev0(v), i.e. u then v
    CatFunctor comp{P.cat, arr.cat, {}, {}};
    for (auto& [u, v] : P.obj_pairs) comp.obj_map.push_back(C->compose(v, u));
    for (int m = 0; m < P.cat->num_morphisms(); ++m) {
      auto [mu, mv] = P.mor_pairs[m];
      auto [a, b1] = arr.mor_pairs[mu];
      auto [b2, c] = arr.mor_pairs[mv];
      CHECK(b1 == b2);
      int sq = arr.find_mor(comp.obj_map[P.cat->src(m)], a, c, comp.obj_map[P.cat->tgt(m)]);
      REQUIRE(sq >= 0);
      comp.mor_map.push_back(sq);
    }
    validate_functor(comp);
    // Arr(Arr C) compared against comp x_Arr comp
    auto Q = pullback_category(comp, comp);
    CatFunctor cmp{arr2.cat, Q.cat, {}, {}};
    for (int o = 0; o < arr2.cat->num_objects(); ++o) {
      // object of Arr(Arr C): square (u, v) : f -> g
      auto [u, v] = arr.mor_pairs[o];
      int f = arr.cat->src(o);
      int g = arr.cat->tgt(o);
      // ((ev0)_*, ev1): the pair (u, g); (ev0, (ev1)_*): the pair (f, v)
      int left = P.find_obj(u, g);
      int right = P.find_obj(f, v);
      REQUIRE(left >= 0);
      REQUIRE(right >= 0);
      CHECK(comp.obj_map[left] == comp.obj_map[right]);  // both compose to the diagonal
      int q = Q.find_obj(left, right);
      REQUIRE(q >= 0);
      cmp.obj_map.push_back(q);
    }
    for (int m = 0; m < arr2.cat->num_morphisms(); ++m) {
      auto [mu, mv] = arr2.mor_pairs[m];  // morphisms of Arr(C): squares
      auto [p, q] = arr.mor_pairs[mu];    // mu : f -> f'
      auto [r, s] = arr.mor_pairs[mv];    // mv : g -> g'
      int so = arr2.cat->src(m), to = arr2.cat->tgt(m);
      int su = arr.mor_pairs[so].first, sg = arr.cat->tgt(so);
      int tu = arr.mor_pairs[to].first, tg = arr.cat->tgt(to);
      int sf = arr.cat->src(so), sv = arr.mor_pairs[so].second;
      int tf = arr.cat->src(to), tv = arr.mor_pairs[to].second;
      int sL = P.find_obj(su, sg), tL = P.find_obj(tu, tg);
      int sR = P.find_obj(sf, sv), tR = P.find_obj(tf, tv);
      // left leg morphism: ((p, r) : u -> u', mv : g -> g')
      int sq1 = arr.find_mor(su, p, r, tu);
      REQUIRE(sq1 >= 0);
      int pl = -1;
      for (int k = 0; k < P.cat->num_morphisms(); ++k)
        if (P.cat->src(k) == sL && P.cat->tgt(k) == tL &&
            P.mor_pairs[k] == std::make_pair(sq1, mv))
          pl = k;
      // right leg morphism: (mu : f -> f', (q, s) : v -> v')
      int sq2 = arr.find_mor(sv, q, s, tv);
      REQUIRE(sq2 >= 0);
      int pr = -1;
      for (int k = 0; k < P.cat->num_morphisms(); ++k)
        if (P.cat->src(k) == sR && P.cat->tgt(k) == tR &&
            P.mor_pairs[k] == std::make_pair(mu, sq2))
          pr = k;
      REQUIRE(pl >= 0);
      REQUIRE(pr >= 0);
      int qq = -1;
      for (int k = 0; k < Q.cat->num_morphisms(); ++k)
        if (Q.cat->src(k) == cmp.obj_map[so] && Q.cat->tgt(k) == cmp.obj_map[to] &&
            Q.mor_pairs[k] == std::make_pair(pl, pr))
          qq = k;
      REQUIRE(qq >= 0);
      cmp.mor_map.push_back(qq);
    }
    validate_functor(cmp);
    CHECK(is_isomorphism_of_categories(cmp));
  }
}

TEST_CASE("opposite and product behave") {
  auto wa = walking_arrow();
  auto op = opposite_category(wa);
  CHECK(op->num_morphisms() == 3);
  CHECK(op->src(wa->morphism_index("f")) == wa->tgt(wa->morphism_index("f")));
  auto pr = product_category(wa, wa);
  CHECK(pr.cat->num_objects() == 4);
  CHECK(pr.cat->num_morphisms() == 9);
  validate_functor(pr.pr0);
  validate_functor(pr.pr1);
}

TEST_CASE("comma category slice has a terminal object") {
  auto wa = walking_arrow();
  auto sl = comma_category(identity_functor(wa), constant_functor(terminal_category(), wa, 1));
  CHECK(sl.cat->num_objects() == 2);  // f and id_b
  CHECK(find_terminal_object(sl.cat).has_value());
}

TEST_CASE("functor-category size cap raises SizeExceeded") {
  Caps caps;
  caps.enum_candidates = 3;
  bool threw = false;
  try {
    enumerate_functors(chain(2), chain(2), caps);
  } catch (const Error& e) {
    threw = e.code == Err::SizeExceeded;
  }
  CHECK(threw);
}
