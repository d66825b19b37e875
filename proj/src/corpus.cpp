#include "catena/corpus.hpp"

#include <algorithm>
#include <functional>

#include "catena/fibration.hpp"

namespace catena {
namespace fixtures {

CatPtr terminal_category() {
  CatBuilder b("pt");
  b.add_object("*");
  return b.build();
}

CatPtr walking_arrow() {
  CatBuilder b("walk");
  int a = b.add_object("a"), c = b.add_object("b");
  b.add_morphism("f", a, c);
  return b.build();
}

CatPtr walking_iso() {
  CatBuilder b("iso");
  int a = b.add_object("a"), c = b.add_object("b");
  int f = b.add_morphism("f", a, c);
  int g = b.add_morphism("g", c, a);
  b.set_composite(g, f, b.idents[a]);
  b.set_composite(f, g, b.idents[c]);
  return b.build();
}

CatPtr discrete(int n) {
  CatBuilder b("disc" + std::to_string(n));
  for (int i = 0; i < n; ++i) b.add_object("o" + std::to_string(i));
  return b.build();
}

CatPtr chain(int n) {
  CatBuilder b("chain" + std::to_string(n));
  for (int i = 0; i <= n; ++i) b.add_object("c" + std::to_string(i));
  std::vector<std::vector<int>> arrow(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i) arrow[i][i] = b.idents[i];
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      arrow[i][j] = b.add_morphism("le" + std::to_string(i) + std::to_string(j), i, j);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) b.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
  return b.build();
}

CatPtr parallel_pair() {
  CatBuilder b("pp");
  int a = b.add_object("a"), c = b.add_object("b");
  b.add_morphism("f", a, c);
  b.add_morphism("g", a, c);
  return b.build();
}

CatPtr three_chain() {
  CatBuilder b("chain3f");
  int a = b.add_object("a"), c = b.add_object("b"), d = b.add_object("c");
  int f = b.add_morphism("f", a, c);
  int g = b.add_morphism("g", c, d);
  int gf = b.add_morphism("gf", a, d);
  b.set_composite(g, f, gf);
  return b.build();
}

CatPtr cyclic_group(int n) {
  CatBuilder b("Z" + std::to_string(n));
  b.add_object("*", "e0");
  std::vector<int> el(n);
  el[0] = b.idents[0];
  for (int i = 1; i < n; ++i) el[i] = b.add_morphism("e" + std::to_string(i), 0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.set_composite(el[i], el[j], el[(i + j) % n]);
  return b.build();
}

CatPtr commutative_square() {
  CatBuilder b("square");
  int a = b.add_object("a"), x = b.add_object("b"), y = b.add_object("c"), z = b.add_object("d");
  int f = b.add_morphism("f", a, x);
  int g = b.add_morphism("g", a, y);
  int h = b.add_morphism("h", x, z);
  int k = b.add_morphism("k", y, z);
  int d = b.add_morphism("diag", a, z);
  b.set_composite(h, f, d);
  b.set_composite(k, g, d);
  return b.build();
}

CatPtr walking_section() {
  CatBuilder b("sect");
  int a = b.add_object("a"), c = b.add_object("b");
  int s = b.add_morphism("s", a, c);
  int r = b.add_morphism("r", c, a);
  int e = b.add_morphism("e", c, c);  // s r, an idempotent
  b.set_composite(r, s, b.idents[a]);
  b.set_composite(s, r, e);
  b.set_composite(e, s, s);
  b.set_composite(r, e, r);
  b.set_composite(e, e, e);
  return b.build();
}

// --------------------------------------------------------------------------
// 2-category fixtures
// --------------------------------------------------------------------------

namespace {

// hom categories given; total thin-style compositions supplied as callbacks
TwoCatPtr build_twocat(
    std::string name, std::vector<std::string> objects, std::vector<CatPtr> homs,
    std::vector<int> id1,
    const std::function<int(int, int, int, int, int)>& comp1,
    const std::function<int(int, int, int, int, int)>& comp2) {
  TwoCatBuilder b;
  b.name = std::move(name);
  b.objects = std::move(objects);
  const int n = static_cast<int>(b.objects.size());
  b.init(n);
  b.hom = std::move(homs);
  b.id_one_cell = std::move(id1);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) {
        const FinCategory& AB = *b.hom[a * n + c];
        const FinCategory& BC = *b.hom[c * n + d];
        auto& t1 = b.one[(a * n + c) * n + d];
        auto& t2 = b.two[(a * n + c) * n + d];
        t1.resize(static_cast<size_t>(BC.num_objects()) * AB.num_objects());
        t2.resize(static_cast<size_t>(BC.num_morphisms()) * AB.num_morphisms());
        for (int g = 0; g < BC.num_objects(); ++g)
          for (int f = 0; f < AB.num_objects(); ++f)
            t1[static_cast<size_t>(g) * AB.num_objects() + f] = comp1(a, c, d, g, f);
        for (int bm = 0; bm < BC.num_morphisms(); ++bm)
          for (int am = 0; am < AB.num_morphisms(); ++am)
            t2[static_cast<size_t>(bm) * AB.num_morphisms() + am] = comp2(a, c, d, bm, am);
      }
  return b.build();
}

// unique morphism with prescribed endpoints; the hom category must be thin
int thin_cell(const FinCategory& H, int src, int tgt) {
  auto hs = H.hom(src, tgt);
  if (hs.size() != 1) fail(Err::BadHom, "expected a thin hom at " + H.name);
  return hs[0];
}

}  // namespace

TwoCatPtr point_two_category() {
  auto pt = terminal_category();
  return build_twocat(
      "point2", {"*"}, {pt}, {0}, [](int, int, int, int, int) { return 0; },
      [](int, int, int, int, int) { return 0; });
}

TwoCatPtr walking_arrow_two_category() {
  auto pt = terminal_category();
  CatBuilder eb("empty");
  auto empty = eb.build();
  std::vector<CatPtr> homs = {pt, pt, empty, pt};  // (a,a),(a,b),(b,a),(b,b)
  return build_twocat(
      "walk2", {"a", "b"}, homs, {0, 0}, [](int, int, int, int, int) { return 0; },
      [](int, int, int, int, int) { return 0; });
}

TwoCatPtr max_chain_two_category(int k) {
  auto H = chain(k);
  auto comp1 = [k, H](int, int, int, int g, int f) { return std::max(g, f); };
  auto comp2 = [H](int, int, int, int bm, int am) {
    const FinCategory& C = *H;
    return thin_cell(C, std::max(C.src(bm), C.src(am)), std::max(C.tgt(bm), C.tgt(am)));
  };
  return build_twocat("maxchain" + std::to_string(k), {"*"}, {H}, {0}, comp1, comp2);
}

TwoCatPtr codiscrete_monad_two_category() {
  // objects {I, T, T2, T3}; codiscrete hom (unique morphism between any two)
  CatBuilder b("powersT");
  for (int i = 0; i < 4; ++i) b.add_object("T" + std::to_string(i));
  std::vector<std::vector<int>> arrow(4, std::vector<int>(4, -1));
  for (int i = 0; i < 4; ++i) arrow[i][i] = b.idents[i];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) arrow[i][j] = b.add_morphism("c" + std::to_string(i) + std::to_string(j), i, j);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) b.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
  auto H = b.build();
  auto comp1 = [](int, int, int, int g, int f) { return std::min(g + f, 3); };
  auto comp2 = [H, comp1](int, int, int, int bm, int am) {
    const FinCategory& C = *H;
    return thin_cell(C, comp1(0, 0, 0, C.src(bm), C.src(am)),
                     comp1(0, 0, 0, C.tgt(bm), C.tgt(am)));
  };
  return build_twocat("codiscT", {"*"}, {H}, {0}, comp1, comp2);
}

TwoCatPtr signed_monoid_two_category() {
  // hom objects: 0 = I, 1 = T; morphisms: id_I, id_T, s (T=>T), h0, h1 (I=>T)
  CatBuilder b("signedhom");
  int I = b.add_object("I", "id_I");
  int T = b.add_object("T", "id_T");
  int s = b.add_morphism("s", T, T);
  int h0 = b.add_morphism("h0", I, T);
  int h1 = b.add_morphism("h1", I, T);
  b.set_composite(s, s, b.idents[T]);
  b.set_composite(s, h0, h1);
  b.set_composite(s, h1, h0);
  auto H = b.build();
  // (mor kind, index): endos sigma^i <-> {id_T: i=0, s: i=1}; h_i as named
  auto comp1 = [I, T](int, int, int, int g, int f) { return (g == 1 || f == 1) ? T : I; };
  auto comp2 = [H, I, T, s, h0, h1](int, int, int, int bm, int am) {
    const FinCategory& C = *H;
    auto kind = [&](int m, int& i) {
      // returns 0 for endo of I, 1 for endo of T (i = exponent), 2 for h_i
      if (m == C.identity(I)) return 0;
      if (m == C.identity(T)) {
        i = 0;
        return 1;
      }
      if (m == s) {
        i = 1;
        return 1;
      }
      i = (m == h1) ? 1 : 0;
      return 2;
    };
    int i = 0, j = 0;
    int kb = kind(bm, i), ka = kind(am, j);
    if (kb == 0 && ka == 0) return C.identity(I);
    if (kb == 0) return am;  // id_I acts neutrally
    if (ka == 0) return bm;
    int sum = (i + j) & 1;
    if (kb == 1 && ka == 1) return sum ? s : C.identity(T);
    if (kb == 2 && ka == 2) return sum ? h1 : h0;
    return sum ? s : C.identity(T);  // mixed h/sigma lands in End(T)
  };
  return build_twocat("signed", {"*"}, {H}, {0}, comp1, comp2);
}

TwoCatPtr poset_triangle_two_category() {
  auto pt = terminal_category();
  auto hac = chain(1);
  CatBuilder eb("none");
  auto empty = eb.build();
  // objects a, b, c; hom(a,b) = {f}, hom(b,c) = {g}, hom(a,c) = chain(1)
  std::vector<CatPtr> homs = {
      pt,    pt,    hac,   // (a,a) (a,b) (a,c)
      empty, pt,    pt,    // (b,a) (b,b) (b,c)
      empty, empty, pt,    // (c,a) (c,b) (c,c)
  };
  auto comp1 = [](int a, int b, int c, int g, int f) -> int {
    if (a == 0 && b == 1 && c == 2) return 0;  // g . f = the low cell of chain(1)
    if (a == 0 && c == 2) return (b == 0) ? g : f;  // identity on the other side
    return std::max(g, f);  // remaining homs are terminal; indexes collapse
  };
  auto comp2 = [homs, comp1](int a, int b, int c, int bm, int am) -> int {
    const FinCategory& AB = *homs[a * 3 + b];
    const FinCategory& BC = *homs[b * 3 + c];
    const FinCategory& AC = *homs[a * 3 + c];
    return thin_cell(AC, comp1(a, b, c, BC.src(bm), AB.src(am)),
                     comp1(a, b, c, BC.tgt(bm), AB.tgt(am)));
  };
  return build_twocat("tri", {"a", "b", "c"}, homs, {0, 0, 0}, comp1, comp2);
}

TwoCatPtr incomplete_equivalence_two_category() {
  auto pt = terminal_category();
  // hom(x,x): codiscrete on {id_x, ef}; hom(y,y) likewise; cross homs singletons
  auto codisc2 = [](const std::string& nm) {
    CatBuilder b(nm);
    int o0 = b.add_object("u0");
    int o1 = b.add_object("u1");
    int up = b.add_morphism("up", o0, o1);
    int dn = b.add_morphism("dn", o1, o0);
    b.set_composite(dn, up, b.idents[o0]);
    b.set_composite(up, dn, b.idents[o1]);
    return b.build();
  };
  auto hxx = codisc2("homxx");
  auto hyy = codisc2("homyy");
  std::vector<CatPtr> homs = {hxx, pt, pt, hyy};
  auto comp1 = [](int a, int b, int c, int g, int f) -> int {
    // grade: in hom(x,x)/hom(y,y), object 1 is the composite e.f / f.e
    if (a == c) {
      if (a == b) return std::max(g, f) > 0 ? 1 : 0;  // endo . endo
      return 1;                                       // e . f or f . e
    }
    // result lives in a singleton hom
    (void)b;
    (void)g;
    (void)f;
    return 0;
  };
  auto comp2 = [homs, comp1](int a, int b, int c, int bm, int am) -> int {
    const FinCategory& AB = *homs[a * 2 + b];
    const FinCategory& BC = *homs[b * 2 + c];
    const FinCategory& AC = *homs[a * 2 + c];
    return thin_cell(AC, comp1(a, b, c, BC.src(bm), AB.src(am)),
                     comp1(a, b, c, BC.tgt(bm), AB.tgt(am)));
  };
  return build_twocat("inceq", {"x", "y"}, homs, {0, 0}, comp1, comp2);
}

TwoCatPtr fat_identity_two_category() {
  auto H = cyclic_group(2);  // one 1-cell with Aut = Z/2
  auto comp1 = [](int, int, int, int, int) { return 0; };
  auto comp2 = [H](int, int, int, int bm, int am) {
    const FinCategory& C = *H;
    int i = (bm == C.identity(0)) ? 0 : 1;
    int j = (am == C.identity(0)) ? 0 : 1;
    return ((i + j) & 1) ? 1 - C.identity(0) : C.identity(0);
  };
  return build_twocat("fatid", {"*"}, {H}, {0}, comp1, comp2);
}

}  // namespace fixtures

// ===========================================================================
// Seeded corpus
// ===========================================================================

static CatPtr random_poset(Rng& rng, int maxobj) {
  int n = rng.range(1, maxobj);
  // random DAG on 0..n-1 with edges i < j, then reachability closure
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) le[i][i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.coin()) le[i][j] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = 1;
  CatBuilder b("poset");
  for (int i = 0; i < n; ++i) b.add_object("p" + std::to_string(i));
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) arrow[i][i] = b.idents[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[i][j])
        arrow[i][j] = b.add_morphism("r" + std::to_string(i) + "_" + std::to_string(j), i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (le[i][j] && le[j][k]) b.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
  return b.build();
}

static CatPtr random_free_acyclic(Rng& rng, int maxobj) {
  int n = rng.range(2, std::max(2, maxobj));
  int edges = rng.range(1, 3);
  // generators i -> j with i < j; morphisms = all distinct paths
  std::vector<std::array<int, 2>> gen;
  for (int e = 0; e < edges; ++e) {
    int i = rng.below(n - 1);
    int j = rng.range(i + 1, n - 1);
    gen.push_back({i, j});
  }
  // enumerate paths by BFS over generator sequences
  struct Path {
    int src, tgt;
    std::vector<int> gens;
  };
  std::vector<Path> paths;
  for (size_t g = 0; g < gen.size(); ++g) paths.push_back({gen[g][0], gen[g][1], {static_cast<int>(g)}});
  for (size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].gens.size() > 6) continue;
    for (size_t g = 0; g < gen.size(); ++g)
      if (gen[g][0] == paths[i].tgt) {
        Path p = paths[i];
        p.tgt = gen[g][1];
        p.gens.push_back(static_cast<int>(g));
        paths.push_back(std::move(p));
      }
  }
  CatBuilder b("free");
  for (int i = 0; i < n; ++i) b.add_object("v" + std::to_string(i));
  std::vector<int> ids;
  for (auto& p : paths) {
    std::string nm = "w";
    for (int g : p.gens) nm += std::to_string(g);
    ids.push_back(b.add_morphism(nm, p.src, p.tgt));
  }
  for (size_t i = 0; i < paths.size(); ++i)
    for (size_t j = 0; j < paths.size(); ++j) {
      if (paths[j].src != paths[i].tgt) continue;
      std::vector<int> cat = paths[i].gens;
      cat.insert(cat.end(), paths[j].gens.begin(), paths[j].gens.end());
      int found = -1;
      for (size_t k = 0; k < paths.size(); ++k)
        if (paths[k].gens == cat) found = ids[k];
      if (found < 0) fail(Err::ValidationError, "free category path closure");
      b.set_composite(ids[j], ids[i], found);
    }
  return b.build();
}

CatPtr random_category(Rng& rng, const CorpusOptions& opt) {
  switch (rng.below(6)) {
    case 0: return random_poset(rng, opt.max_objects);
    case 1: return random_free_acyclic(rng, opt.max_objects);
    case 2: return fixtures::cyclic_group(rng.range(2, 3));
    case 3: return fixtures::walking_section();
    case 4: return fixtures::walking_iso();
    default: return fixtures::chain(rng.range(1, 3));
  }
}

CatFunctor random_functor(Rng& rng, const CatPtr& C, const CatPtr& D, const Caps& caps) {
  auto all = enumerate_functors(C, D, caps);
  if (all.empty()) fail(Err::ValidationError, "no functors to sample");
  return all[rng.below(static_cast<int>(all.size()))];
}

CatDiagram random_diagram(Rng& rng, const Caps& caps) {
  CatDiagram d;
  int len = rng.range(1, 2);
  d.base = fixtures::chain(len);
  CorpusOptions opt;
  opt.max_objects = 3;
  for (int i = 0; i <= len; ++i) {
    CatPtr f = random_category(rng, opt);
    while (f->num_objects() == 0 || f->num_objects() > 3) f = random_category(rng, opt);
    d.fiber.push_back(f);
  }
  const FinCategory& I = *d.base;
  d.transition.resize(I.num_morphisms());
  std::vector<CatFunctor> cover(len);
  for (int i = 0; i < len; ++i) cover[i] = random_functor(rng, d.fiber[i], d.fiber[i + 1], caps);
  for (int k = 0; k < I.num_morphisms(); ++k) {
    int i = I.src(k), j = I.tgt(k);
    CatFunctor t = identity_functor(d.fiber[i]);
    for (int step = i; step < j; ++step) t = compose_functors(cover[step], t);
    d.transition[k] = t;
  }
  return d;
}

std::vector<TwoCatPtr> envelope_corpus() {
  // entries whose envelopes stay enumerable at string cap 4; the heavier
  // fixtures (signed monoid, codiscrete monad, incomplete equivalence) appear
  // as targets of classification and in the 2-category checks instead
  using namespace fixtures;
  return {point_two_category(), walking_arrow_two_category(), poset_triangle_two_category(),
          max_chain_two_category(1), fat_identity_two_category()};
}

std::vector<CatPtr> arrow_fact_corpus() {
  using namespace fixtures;
  return {terminal_category(), walking_arrow(),      walking_iso(),   discrete(2),
          discrete(3),         chain(2),             chain(3),        parallel_pair(),
          three_chain(),       commutative_square(), walking_section(), cyclic_group(2)};
}

}  // namespace catena
