#include "catena/twocat.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace catena {

// ===========================================================================
// TwoCat core
// ===========================================================================

int TwoCat::compose1(int a, int b, int c, int g, int f) const {
  const auto& t = one[triple(a, b, c)];
  return t[static_cast<size_t>(g) * hom_at(a, b).num_objects() + f];
}

int TwoCat::compose2(int a, int b, int c, int beta, int alpha) const {
  const auto& t = two[triple(a, b, c)];
  return t[static_cast<size_t>(beta) * hom_at(a, b).num_morphisms() + alpha];
}

int TwoCat::compose1_strict(int a, int b, int c, int g, int f) const {
  int r = compose1(a, b, c, g, f);
  if (r < 0)
    fail(Err::CapOverflow, "1-cell composite exceeds the cap in " + name + " at (" +
                               hom_at(b, c).obj_names[g] + ", " + hom_at(a, b).obj_names[f] + ")");
  return r;
}

int TwoCat::object_index(const std::string& n) const {
  for (int i = 0; i < num_objects(); ++i)
    if (obj_names[i] == n) return i;
  return -1;
}

TwoCatPtr TwoCat::make(std::string name, std::vector<std::string> objects, std::vector<CatPtr> hom,
                       std::vector<int> id_one_cell, std::vector<std::vector<int>> one,
                       std::vector<std::vector<int>> two, bool partial,
                       std::vector<std::vector<int>> cell_weight, int weight_cap) {
  auto A = std::shared_ptr<TwoCat>(new TwoCat());
  A->name = std::move(name);
  A->obj_names = std::move(objects);
  A->hom = std::move(hom);
  A->id_one_cell = std::move(id_one_cell);
  A->one = std::move(one);
  A->two = std::move(two);
  A->partial = partial;
  A->cell_weight = std::move(cell_weight);
  A->weight_cap = weight_cap;
  A->validate();
  return A;
}

void TwoCat::validate() const {
  const int n = num_objects();
  if (static_cast<int>(hom.size()) != n * n) fail(Err::BadHom, "hom grid size in " + name);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!hom[a * n + b]) fail(Err::BadHom, "missing hom(" + obj_names[a] + "," + obj_names[b] + ")");
  if (static_cast<int>(id_one_cell.size()) != n) fail(Err::BadHom, "identity 1-cell table");
  for (int a = 0; a < n; ++a) {
    if (id_one_cell[a] < 0 || id_one_cell[a] >= hom_at(a, a).num_objects())
      fail(Err::BadHom, "identity 1-cell of " + obj_names[a]);
    if (!cell_weight.empty() && weight_of(a, a, id_one_cell[a]) != 0)
      fail(Err::BadHom, "identity 1-cell must have weight zero");
  }
  if (!cell_weight.empty())
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (static_cast<int>(cell_weight[a * n + b].size()) != hom_at(a, b).num_objects())
          fail(Err::BadHom, "weight table size");

  auto defined1 = [&](int a, int b, int c, int g, int f) {
    if (weight_cap <= 0) return true;
    return weight_of(b, c, g) + weight_of(a, b, f) <= weight_cap;
  };

  // Table shape and endpoint coherence.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinCategory& AB = hom_at(a, b);
        const FinCategory& BC = hom_at(b, c);
        const FinCategory& AC = hom_at(a, c);
        const auto& t1 = one[triple(a, b, c)];
        const auto& t2 = two[triple(a, b, c)];
        if (static_cast<long long>(t1.size()) !=
            static_cast<long long>(BC.num_objects()) * AB.num_objects())
          fail(Err::BadHom, "1-cell table size at (" + obj_names[a] + obj_names[b] + obj_names[c] + ")");
        if (static_cast<long long>(t2.size()) !=
            static_cast<long long>(BC.num_morphisms()) * AB.num_morphisms())
          fail(Err::BadHom, "2-cell table size");
        for (int g = 0; g < BC.num_objects(); ++g)
          for (int f = 0; f < AB.num_objects(); ++f) {
            int h = t1[static_cast<size_t>(g) * AB.num_objects() + f];
            bool want = defined1(a, b, c, g, f);
            if (!partial && h < 0) fail(Err::MissingComposite, "1-cell composite");
            if (partial && want != (h >= 0))
              fail(Err::CapOverflow, "definedness does not match the weight grading in " + name);
            if (h >= 0) {
              if (h >= AC.num_objects()) fail(Err::BadHom, "1-cell composite out of range");
              if (!cell_weight.empty() &&
                  weight_of(a, c, h) != weight_of(b, c, g) + weight_of(a, b, f))
                fail(Err::BadHom, "composite weight must add");
            }
          }
        for (int bm = 0; bm < BC.num_morphisms(); ++bm)
          for (int am = 0; am < AB.num_morphisms(); ++am) {
            int r = t2[static_cast<size_t>(bm) * AB.num_morphisms() + am];
            bool want = defined1(a, b, c, BC.src(bm), AB.src(am)) &&
                        defined1(a, b, c, BC.tgt(bm), AB.tgt(am));
            if (!partial && r < 0) fail(Err::MissingComposite, "2-cell composite");
            if (partial && want != (r >= 0)) fail(Err::CapOverflow, "2-cell definedness");
            if (r >= 0) {
              int s = t1[static_cast<size_t>(BC.src(bm)) * AB.num_objects() + AB.src(am)];
              int t = t1[static_cast<size_t>(BC.tgt(bm)) * AB.num_objects() + AB.tgt(am)];
              if (AC.src(r) != s || AC.tgt(r) != t)
                fail(Err::BadHom, "2-cell composite endpoints");
            }
          }
      }

  // Unit laws (identity 1-cells have weight zero so everything is defined).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const FinCategory& AB = hom_at(a, b);
      for (int f = 0; f < AB.num_objects(); ++f) {
        if (compose1(a, a, b, f, id_one_cell[a]) != f)
          fail(Err::UnitViolation, obj_names[a] + ": right unit on " + AB.obj_names[f]);
        if (compose1(a, b, b, id_one_cell[b], f) != f)
          fail(Err::UnitViolation, obj_names[b] + ": left unit on " + AB.obj_names[f]);
      }
      int ida2 = hom_at(a, a).identity(id_one_cell[a]);
      int idb2 = hom_at(b, b).identity(id_one_cell[b]);
      for (int am = 0; am < AB.num_morphisms(); ++am) {
        if (compose2(a, a, b, am, ida2) != am)
          fail(Err::UnitViolation, "right unit on 2-cell " + AB.mor_names[am]);
        if (compose2(a, b, b, idb2, am) != am)
          fail(Err::UnitViolation, "left unit on 2-cell " + AB.mor_names[am]);
      }
    }

  // Associativity on 1-cells, where both associations are defined; the weight
  // grading makes the two definedness conditions coincide.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const FinCategory& AB = hom_at(a, b);
          const FinCategory& BC = hom_at(b, c);
          const FinCategory& CD = hom_at(c, d);
          for (int f = 0; f < AB.num_objects(); ++f)
            for (int g = 0; g < BC.num_objects(); ++g) {
              int gf = compose1(a, b, c, g, f);
              for (int h = 0; h < CD.num_objects(); ++h) {
                int hg = compose1(b, c, d, h, g);
                int lhs = gf >= 0 ? compose1(a, c, d, h, gf) : -1;
                int rhs = hg >= 0 ? compose1(a, b, d, hg, f) : -1;
                if (lhs != rhs)
                  fail(Err::NonAssociativeComposition,
                       "1-cells (" + CD.obj_names[h] + "," + BC.obj_names[g] + "," +
                           AB.obj_names[f] + ")");
              }
            }
        }

  // Bifunctoriality of each composition table: identities, one-variable
  // functoriality against identity 2-cells, and the sliding law. Together with
  // the whisker-associativity families below this pins down strict
  // 2-functoriality without cubic scans over 2-cells.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinCategory& AB = hom_at(a, b);
        const FinCategory& BC = hom_at(b, c);
        const FinCategory& AC = hom_at(a, c);
        for (int g = 0; g < BC.num_objects(); ++g)
          for (int f = 0; f < AB.num_objects(); ++f) {
            int h = compose1(a, b, c, g, f);
            if (h < 0) continue;
            if (compose2(a, b, c, BC.identity(g), AB.identity(f)) != AC.identity(h))
              fail(Err::NonAssociativeComposition, "identity 2-cell composite");
          }
        // one-variable functoriality; with a weight cap some configurations
        // run through an out-of-cap intermediate and cannot be stated, so
        // they are skipped (2-cells may raise the weight of their boundary)
        for (int bm = 0; bm < BC.num_morphisms(); ++bm)
          for (int bm2 : BC.out_morphisms(BC.tgt(bm)))
            for (int f = 0; f < AB.num_objects(); ++f) {
              int idf = AB.identity(f);
              int lhs = compose2(a, b, c, BC.compose(bm2, bm), idf);
              int x1 = compose2(a, b, c, bm, idf);
              int x2 = compose2(a, b, c, bm2, idf);
              if (partial && (x1 < 0 || x2 < 0)) continue;
              int rhs = (x1 >= 0 && x2 >= 0) ? AC.compose(x2, x1) : -1;
              if (lhs != rhs) fail(Err::NonAssociativeComposition, "left-whisker functoriality");
            }
        for (int am = 0; am < AB.num_morphisms(); ++am)
          for (int am2 : AB.out_morphisms(AB.tgt(am)))
            for (int g = 0; g < BC.num_objects(); ++g) {
              int idg = BC.identity(g);
              int lhs = compose2(a, b, c, idg, AB.compose(am2, am));
              int x1 = compose2(a, b, c, idg, am);
              int x2 = compose2(a, b, c, idg, am2);
              if (partial && (x1 < 0 || x2 < 0)) continue;
              int rhs = (x1 >= 0 && x2 >= 0) ? AC.compose(x2, x1) : -1;
              if (lhs != rhs) fail(Err::NonAssociativeComposition, "right-whisker functoriality");
            }
        // sliding: both whisker orders recover the table
        for (int bm = 0; bm < BC.num_morphisms(); ++bm)
          for (int am = 0; am < AB.num_morphisms(); ++am) {
            int r = compose2(a, b, c, bm, am);
            if (r < 0) continue;
            int w1 = compose2(a, b, c, bm, AB.identity(AB.src(am)));
            int w2 = compose2(a, b, c, BC.identity(BC.tgt(bm)), am);
            int w3 = compose2(a, b, c, BC.identity(BC.src(bm)), am);
            int w4 = compose2(a, b, c, bm, AB.identity(AB.tgt(am)));
            if (partial && (w1 < 0 || w2 < 0 || w3 < 0 || w4 < 0)) continue;
            if (w1 < 0 || w2 < 0 || w3 < 0 || w4 < 0 || AC.compose(w2, w1) != r ||
                AC.compose(w4, w3) != r)
              fail(Err::NonAssociativeComposition, "interchange/sliding law");
          }
      }

  // Whisker-associativity families: associativity of the 2-cell tables with
  // two identity slots, which with bifunctoriality implies it in general.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const FinCategory& AB = hom_at(a, b);
          const FinCategory& BC = hom_at(b, c);
          const FinCategory& CD = hom_at(c, d);
          for (int hm = 0; hm < CD.num_morphisms(); ++hm)
            for (int g = 0; g < BC.num_objects(); ++g)
              for (int f = 0; f < AB.num_objects(); ++f) {
                int gf = compose1(a, b, c, g, f);
                int hg_s = compose1(b, c, d, CD.src(hm), g);
                int hg_t = compose1(b, c, d, CD.tgt(hm), g);
                int lhs = gf >= 0 ? compose2(a, c, d, hm, hom_at(a, c).identity(gf)) : -1;
                int mid = (hg_s >= 0 && hg_t >= 0)
                              ? compose2(b, c, d, hm, BC.identity(g))
                              : -1;
                int rhs = mid >= 0 ? compose2(a, b, d, mid, AB.identity(f)) : -1;
                if (lhs != rhs)
                  fail(Err::NonAssociativeComposition, "whisker associativity (2,0,0)");
              }
          for (int h = 0; h < CD.num_objects(); ++h)
            for (int gm = 0; gm < BC.num_morphisms(); ++gm)
              for (int f = 0; f < AB.num_objects(); ++f) {
                int idh2 = CD.identity(h);
                int idf2 = AB.identity(f);
                int m1 = compose2(a, b, c, gm, idf2);
                int lhs = m1 >= 0 ? compose2(a, c, d, idh2, m1) : -1;
                int m2 = compose2(b, c, d, idh2, gm);
                int rhs = m2 >= 0 ? compose2(a, b, d, m2, idf2) : -1;
                if (partial && (lhs < 0 || rhs < 0)) {
                  // both routes lead through the same weights, so the two
                  // sides are defined together
                  if ((lhs < 0) != (rhs < 0))
                    fail(Err::CapOverflow, "whisker associativity definedness");
                  continue;
                }
                if (lhs != rhs)
                  fail(Err::NonAssociativeComposition, "whisker associativity (0,2,0)");
              }
          for (int h = 0; h < CD.num_objects(); ++h)
            for (int g = 0; g < BC.num_objects(); ++g)
              for (int am = 0; am < AB.num_morphisms(); ++am) {
                int hg = compose1(b, c, d, h, g);
                int m1 = compose2(a, b, c, BC.identity(g), am);
                int lhs = m1 >= 0 ? compose2(a, c, d, CD.identity(h), m1) : -1;
                int rhs = hg >= 0 ? compose2(a, b, d, hom_at(b, d).identity(hg), am) : -1;
                if (lhs != rhs)
                  fail(Err::NonAssociativeComposition, "whisker associativity (0,0,2)");
              }
        }
}

int composite_one_cells(const TwoCat& A, const std::vector<int>& vertices,
                        const std::vector<int>& cells) {
  if (vertices.size() != cells.size() + 1) fail(Err::BadHom, "path shape");
  if (cells.empty()) return A.id_one_cell[vertices[0]];
  int acc = cells[0];
  for (size_t i = 1; i < cells.size(); ++i)
    acc = A.compose1_strict(vertices[0], vertices[i], vertices[i + 1], cells[i], acc);
  return acc;
}

void TwoCatBuilder::init(int nobj) {
  hom.assign(nobj * nobj, nullptr);
  one.assign(nobj * nobj * nobj, {});
  two.assign(nobj * nobj * nobj, {});
  id_one_cell.assign(nobj, -1);
}

TwoCatPtr TwoCatBuilder::build() const {
  return TwoCat::make(name, objects, hom, id_one_cell, one, two, partial, cell_weight, weight_cap);
}

// ===========================================================================
// Strict and lax functors
// ===========================================================================

StrictTwoFunctor identity_two_functor(const TwoCatPtr& A) {
  StrictTwoFunctor F;
  F.source = F.target = A;
  F.obj_map.resize(A->num_objects());
  for (int a = 0; a < A->num_objects(); ++a) F.obj_map[a] = a;
  F.hom_map.resize(A->num_objects() * A->num_objects());
  for (int a = 0; a < A->num_objects(); ++a)
    for (int b = 0; b < A->num_objects(); ++b)
      F.hom_map[a * A->num_objects() + b] = identity_functor(A->hom_ptr(a, b));
  return F;
}

static TwoFunctorReport check_two_functor_core(const TwoCatPtr& S, const TwoCatPtr& T,
                                               const std::vector<int>& omap,
                                               const std::vector<CatFunctor>& hmap,
                                               TwoFunctorReport& rep) {
  const int n = S->num_objects();
  if (static_cast<int>(omap.size()) != n || static_cast<int>(hmap.size()) != n * n) {
    rep.failures.push_back("map shape mismatch");
    return rep;
  }
  for (int a = 0; a < n; ++a)
    if (omap[a] < 0 || omap[a] >= T->num_objects()) {
      rep.failures.push_back("object image out of range");
      return rep;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const CatFunctor& H = hmap[a * n + b];
      if (!FinCategory::same_presentation(*H.source, S->hom_at(a, b)) ||
          !FinCategory::same_presentation(*H.target, T->hom_at(omap[a], omap[b]))) {
        rep.failures.push_back("hom functor endpoints at (" + S->obj_names[a] + "," +
                               S->obj_names[b] + ")");
        return rep;
      }
      try {
        validate_functor(H);
      } catch (const Error& e) {
        rep.failures.push_back(std::string("hom functor invalid: ") + e.what());
        return rep;
      }
    }
  return rep;
}

TwoFunctorReport validate_strict_two_functor(const StrictTwoFunctor& F) {
  TwoFunctorReport rep;
  check_two_functor_core(F.source, F.target, F.obj_map, F.hom_map, rep);
  if (!rep.failures.empty()) return rep;
  const TwoCat& S = *F.source;
  const TwoCat& T = *F.target;
  const int n = S.num_objects();
  for (int a = 0; a < n; ++a)
    if (F.hom_map[a * n + a].obj_map[S.id_one_cell[a]] != T.id_one_cell[F.obj_map[a]])
      rep.failures.push_back("identity 1-cell not preserved at " + S.obj_names[a]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinCategory& AB = S.hom_at(a, b);
        const FinCategory& BC = S.hom_at(b, c);
        const CatFunctor& Fab = F.hom_map[a * n + b];
        const CatFunctor& Fbc = F.hom_map[b * n + c];
        const CatFunctor& Fac = F.hom_map[a * n + c];
        for (int g = 0; g < BC.num_objects(); ++g)
          for (int f = 0; f < AB.num_objects(); ++f) {
            int gf = S.compose1(a, b, c, g, f);
            int img = T.compose1(F.obj_map[a], F.obj_map[b], F.obj_map[c], Fbc.obj_map[g],
                                 Fab.obj_map[f]);
            if (gf >= 0) {
              if (img != Fac.obj_map[gf])
                rep.failures.push_back("1-cell composition not preserved at (" + BC.obj_names[g] +
                                       "," + AB.obj_names[f] + ")");
            } else if (img >= 0 && !S.partial) {
              rep.failures.push_back("definedness mismatch");
            }
          }
        for (int bm = 0; bm < BC.num_morphisms(); ++bm)
          for (int am = 0; am < AB.num_morphisms(); ++am) {
            int c2 = S.compose2(a, b, c, bm, am);
            if (c2 < 0) continue;
            int img = T.compose2(F.obj_map[a], F.obj_map[b], F.obj_map[c], Fbc.mor_map[bm],
                                 Fab.mor_map[am]);
            if (img != Fac.mor_map[c2])
              rep.failures.push_back("2-cell composition not preserved at (" + BC.mor_names[bm] +
                                     "," + AB.mor_names[am] + ")");
          }
      }
  rep.ok = rep.failures.empty();
  return rep;
}

TwoFunctorReport validate_lax_functor(const LaxFunctor& F) {
  TwoFunctorReport rep;
  check_two_functor_core(F.source, F.target, F.obj_map, F.hom_map, rep);
  if (!rep.failures.empty()) return rep;
  const TwoCat& S = *F.source;
  const TwoCat& T = *F.target;
  const int n = S.num_objects();
  if (static_cast<int>(F.delta.size()) != n) {
    rep.failures.push_back("delta table size");
    return rep;
  }
  if (static_cast<int>(F.gamma.size()) != n * n * n) {
    rep.failures.push_back("gamma table shape");
    return rep;
  }
  // delta_a : id_{Fa} => F(id_a)
  for (int a = 0; a < n; ++a) {
    const FinCategory& H = T.hom_at(F.obj_map[a], F.obj_map[a]);
    int d = F.delta[a];
    if (d < 0 || d >= H.num_morphisms() || H.src(d) != T.id_one_cell[F.obj_map[a]] ||
        H.tgt(d) != F.hom_map[a * n + a].obj_map[S.id_one_cell[a]]) {
      rep.failures.push_back("delta endpoints at " + S.obj_names[a]);
      return rep;
    }
  }
  // gamma_{g,f} : F(g) . F(f) => F(g . f)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinCategory& AB = S.hom_at(a, b);
        const FinCategory& BC = S.hom_at(b, c);
        const FinCategory& H = T.hom_at(F.obj_map[a], F.obj_map[c]);
        const auto& gam = F.gamma[S.triple(a, b, c)];
        if (static_cast<long long>(gam.size()) !=
            static_cast<long long>(BC.num_objects()) * AB.num_objects()) {
          rep.failures.push_back("gamma table size");
          return rep;
        }
        for (int g = 0; g < BC.num_objects(); ++g)
          for (int f = 0; f < AB.num_objects(); ++f) {
            int gf = S.compose1(a, b, c, g, f);
            int gm = gam[static_cast<size_t>(g) * AB.num_objects() + f];
            if (gf < 0) {
              if (gm >= 0) rep.failures.push_back("gamma defined past the cap");
              continue;
            }
            int src = T.compose1(F.obj_map[a], F.obj_map[b], F.obj_map[c],
                                 F.hom_map[b * n + c].obj_map[g], F.hom_map[a * n + b].obj_map[f]);
            int tgt = F.hom_map[a * n + c].obj_map[gf];
            if (gm < 0 || src < 0 || H.src(gm) != src || H.tgt(gm) != tgt) {
              rep.failures.push_back("gamma endpoints at (" + BC.obj_names[g] + "," +
                                     AB.obj_names[f] + ")");
              return rep;
            }
          }
      }
  // Naturality of gamma in both variables.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinCategory& AB = S.hom_at(a, b);
        const FinCategory& BC = S.hom_at(b, c);
        const FinCategory& H = T.hom_at(F.obj_map[a], F.obj_map[c]);
        const auto& gam = F.gamma[S.triple(a, b, c)];
        auto gamma_at = [&](int g, int f) {
          return gam[static_cast<size_t>(g) * AB.num_objects() + f];
        };
        for (int bm = 0; bm < BC.num_morphisms(); ++bm)
          for (int am = 0; am < AB.num_morphisms(); ++am) {
            int c2 = S.compose2(a, b, c, bm, am);
            if (c2 < 0) continue;
            int imgpair = T.compose2(F.obj_map[a], F.obj_map[b], F.obj_map[c],
                                     F.hom_map[b * n + c].mor_map[bm],
                                     F.hom_map[a * n + b].mor_map[am]);
            int lhs = H.compose(F.hom_map[a * n + c].mor_map[c2],
                                gamma_at(BC.src(bm), AB.src(am)));
            int rhs = H.compose(gamma_at(BC.tgt(bm), AB.tgt(am)), imgpair);
            if (lhs != rhs) {
              rep.failures.push_back("gamma naturality at (" + BC.mor_names[bm] + "," +
                                     AB.mor_names[am] + ")");
            }
          }
      }
  // Unit axioms.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const FinCategory& AB = S.hom_at(a, b);
      const FinCategory& H = T.hom_at(F.obj_map[a], F.obj_map[b]);
      for (int f = 0; f < AB.num_objects(); ++f) {
        int Ff = F.hom_map[a * n + b].obj_map[f];
        // left: gamma_{id_b, f} . (delta_b * id_{Ff}) = id_{Ff}
        int whisk = T.compose2(F.obj_map[a], F.obj_map[b], F.obj_map[b], F.delta[b],
                               H.identity(Ff));
        int gl = F.gamma[S.triple(a, b, b)][static_cast<size_t>(S.id_one_cell[b]) *
                                                AB.num_objects() +
                                            f];
        if (whisk < 0 || gl < 0 || H.compose(gl, whisk) != H.identity(Ff))
          rep.failures.push_back("left unit axiom at " + AB.obj_names[f]);
        // right: gamma_{f, id_a} . (id_{Ff} * delta_a) = id_{Ff}
        int whisk2 = T.compose2(F.obj_map[a], F.obj_map[a], F.obj_map[b], H.identity(Ff),
                                F.delta[a]);
        const FinCategory& AA = S.hom_at(a, a);
        int gr = F.gamma[S.triple(a, a, b)][static_cast<size_t>(f) * AA.num_objects() +
                                            S.id_one_cell[a]];
        if (whisk2 < 0 || gr < 0 || H.compose(gr, whisk2) != H.identity(Ff))
          rep.failures.push_back("right unit axiom at " + AB.obj_names[f]);
      }
    }
  // Associativity axiom.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const FinCategory& AB = S.hom_at(a, b);
          const FinCategory& BC = S.hom_at(b, c);
          const FinCategory& CD = S.hom_at(c, d);
          const FinCategory& H = T.hom_at(F.obj_map[a], F.obj_map[d]);
          for (int f = 0; f < AB.num_objects(); ++f)
            for (int g = 0; g < BC.num_objects(); ++g)
              for (int h = 0; h < CD.num_objects(); ++h) {
                int gf = S.compose1(a, b, c, g, f);
                int hg = S.compose1(b, c, d, h, g);
                if (gf < 0 || hg < 0) continue;
                int hgf = S.compose1(a, c, d, h, gf);
                if (hgf < 0) continue;
                int Ff = F.hom_map[a * n + b].obj_map[f];
                int Fh = F.hom_map[c * n + d].obj_map[h];
                // route 1: (id_{Fh} * gamma_{g,f}) then gamma_{h, gf}
                int w1 = T.compose2(
                    F.obj_map[a], F.obj_map[c], F.obj_map[d],
                    T.hom_at(F.obj_map[c], F.obj_map[d]).identity(Fh),
                    F.gamma[S.triple(a, b, c)][static_cast<size_t>(g) * AB.num_objects() + f]);
                int g1 = F.gamma[S.triple(a, c, d)]
                                [static_cast<size_t>(h) * S.hom_at(a, c).num_objects() + gf];
                // route 2: (gamma_{h,g} * id_{Ff}) then gamma_{hg, f}
                int w2 = T.compose2(
                    F.obj_map[a], F.obj_map[b], F.obj_map[d],
                    F.gamma[S.triple(b, c, d)][static_cast<size_t>(h) * BC.num_objects() + g],
                    T.hom_at(F.obj_map[a], F.obj_map[b]).identity(Ff));
                int g2 = F.gamma[S.triple(a, b, d)]
                                [static_cast<size_t>(hg) * AB.num_objects() + f];
                if (w1 < 0 || w2 < 0 || g1 < 0 || g2 < 0 ||
                    H.compose(g1, w1) != H.compose(g2, w2))
                  rep.failures.push_back("associativity axiom at (" + CD.obj_names[h] + "," +
                                         BC.obj_names[g] + "," + AB.obj_names[f] + ")");
              }
        }
  rep.ok = rep.failures.empty();
  return rep;
}

LaxFunctor strict_as_lax(const StrictTwoFunctor& F) {
  LaxFunctor L;
  L.source = F.source;
  L.target = F.target;
  L.obj_map = F.obj_map;
  L.hom_map = F.hom_map;
  const TwoCat& S = *F.source;
  const TwoCat& T = *F.target;
  const int n = S.num_objects();
  L.delta.resize(n);
  for (int a = 0; a < n; ++a)
    L.delta[a] = T.hom_at(L.obj_map[a], L.obj_map[a])
                     .identity(T.id_one_cell[L.obj_map[a]]);
  L.gamma.resize(n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinCategory& AB = S.hom_at(a, b);
        const FinCategory& BC = S.hom_at(b, c);
        auto& gam = L.gamma[S.triple(a, b, c)];
        gam.assign(static_cast<size_t>(BC.num_objects()) * AB.num_objects(), -1);
        for (int g = 0; g < BC.num_objects(); ++g)
          for (int f = 0; f < AB.num_objects(); ++f) {
            int gf = S.compose1(a, b, c, g, f);
            if (gf < 0) continue;
            gam[static_cast<size_t>(g) * AB.num_objects() + f] =
                T.hom_at(L.obj_map[a], L.obj_map[c]).identity(L.hom_map[a * n + c].obj_map[gf]);
          }
      }
  return L;
}

std::optional<StrictTwoFunctor> lax_as_strict(const LaxFunctor& F) {
  const TwoCat& S = *F.source;
  const int n = S.num_objects();
  for (int a = 0; a < n; ++a) {
    const FinCategory& H = F.target->hom_at(F.obj_map[a], F.obj_map[a]);
    if (H.src(F.delta[a]) != H.tgt(F.delta[a]) || !H.is_identity(F.delta[a])) return std::nullopt;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int v : F.gamma[S.triple(a, b, c)])
          if (v >= 0 && !F.target->hom_at(F.obj_map[a], F.obj_map[c]).is_identity(v))
            return std::nullopt;
  StrictTwoFunctor G;
  G.source = F.source;
  G.target = F.target;
  G.obj_map = F.obj_map;
  G.hom_map = F.hom_map;
  if (!validate_strict_two_functor(G).ok) return std::nullopt;
  return G;
}

StrictTwoFunctor compose_strict_two_functors(const StrictTwoFunctor& G, const StrictTwoFunctor& F) {
  StrictTwoFunctor H;
  H.source = F.source;
  H.target = G.target;
  const int n = F.source->num_objects();
  H.obj_map.resize(n);
  H.hom_map.resize(n * n);
  for (int a = 0; a < n; ++a) H.obj_map[a] = G.obj_map[F.obj_map[a]];
  const int m = F.target->num_objects();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      H.hom_map[a * n + b] =
          compose_functors(G.hom_map[F.obj_map[a] * m + F.obj_map[b]], F.hom_map[a * n + b]);
  return H;
}

bool strict_two_functors_equal(const StrictTwoFunctor& F, const StrictTwoFunctor& G) {
  if (F.obj_map != G.obj_map) return false;
  for (size_t i = 0; i < F.hom_map.size(); ++i)
    if (F.hom_map[i].obj_map != G.hom_map[i].obj_map ||
        F.hom_map[i].mor_map != G.hom_map[i].mor_map)
      return false;
  return true;
}

bool lax_functors_equal(const LaxFunctor& F, const LaxFunctor& G) {
  if (F.obj_map != G.obj_map || F.delta != G.delta || F.gamma != G.gamma) return false;
  for (size_t i = 0; i < F.hom_map.size(); ++i)
    if (F.hom_map[i].obj_map != G.hom_map[i].obj_map ||
        F.hom_map[i].mor_map != G.hom_map[i].mor_map)
      return false;
  return true;
}

// ===========================================================================
// Segal presentation
// ===========================================================================

int SegalPresentation::find_path(int level, const std::vector<int>& vertices,
                                 const std::vector<int>& cells) const {
  const auto& vs = path_vertices[level];
  const auto& cs = path_cells[level];
  for (size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == vertices && cs[i] == cells) return static_cast<int>(i);
  return -1;
}

int SegalPresentation::find_level_morphism(int level, int src_path, int tgt_path,
                                           const std::vector<int>& components) const {
  for (int m : fiber[level]->hom(src_path, tgt_path))
    if (mor_components[level][m] == components) return m;
  return -1;
}

// unique vertical filler u with u . lift = target_mor, in a Grothendieck total
static int unique_vertical_filler(const GrothendieckResult& gr, int lift, int target_mor) {
  const FinCategory& X = *gr.total;
  const FinCategory& D = *gr.fib.p.target;
  int found = -1;
  for (int u : X.hom(X.tgt(lift), X.tgt(target_mor)))
    if (gr.fib.p.mor_map[u] == D.identity(gr.fib.p.obj_map[X.tgt(lift)]) &&
        X.compose(u, lift) == target_mor) {
      if (found >= 0) fail(Err::ValidationError, "vertical filler not unique");
      found = u;
    }
  if (found < 0) fail(Err::ValidationError, "vertical filler missing");
  return found;
}

namespace {

struct PathLevel {
  CatPtr cat;
  std::vector<std::vector<int>> verts;  // per object
  std::vector<std::vector<int>> cells;
  std::vector<std::vector<int>> morsplit;  // per morphism: component 2-cells
};

int path_weight(const TwoCat& A, const std::vector<int>& verts, const std::vector<int>& cells) {
  int w = 0;
  for (size_t i = 0; i < cells.size(); ++i) w += A.weight_of(verts[i], verts[i + 1], cells[i]);
  return w;
}

PathLevel build_path_level(const TwoCat& A, int level, const Caps& caps) {
  PathLevel L;
  CatBuilder b(A.name + "_X" + std::to_string(level));
  // enumerate paths
  std::vector<int> verts, cells;
  std::function<void(int)> go = [&](int k) {
    if (k == level) {
      if (A.weight_cap > 0 && path_weight(A, verts, cells) > A.weight_cap) return;
      L.verts.push_back(verts);
      L.cells.push_back(cells);
      return;
    }
    int at = verts.back();
    for (int next = 0; next < A.num_objects(); ++next) {
      const FinCategory& H = A.hom_at(at, next);
      for (int f = 0; f < H.num_objects(); ++f) {
        verts.push_back(next);
        cells.push_back(f);
        go(k + 1);
        verts.pop_back();
        cells.pop_back();
      }
    }
  };
  for (int a = 0; a < A.num_objects(); ++a) {
    verts = {a};
    cells = {};
    go(0);
  }
  if (static_cast<long long>(L.verts.size()) > caps.derived_objects)
    fail(Err::SizeExceeded, "path level object count");
  for (size_t i = 0; i < L.verts.size(); ++i) {
    // names carry the vertices: hom categories of different pairs may reuse
    // object names
    std::string nm = A.obj_names[L.verts[i][0]];
    for (size_t k = 0; k < L.cells[i].size(); ++k)
      nm += "." + A.hom_at(L.verts[i][k], L.verts[i][k + 1]).obj_names[L.cells[i][k]] + ">" +
            A.obj_names[L.verts[i][k + 1]];
    b.objects.push_back(nm);
  }
  // morphisms: componentwise 2-cell tuples between paths with equal vertices
  std::vector<int> idents(L.verts.size(), -1);
  std::vector<int> msrc, mtgt;
  for (size_t i = 0; i < L.verts.size(); ++i)
    for (size_t j = 0; j < L.verts.size(); ++j) {
      if (L.verts[i] != L.verts[j]) continue;
      // all tuples of 2-cells cell_i[k] => cell_j[k]
      std::vector<std::vector<int>> choices(level);
      bool any = true;
      for (int k = 0; k < level && any; ++k) {
        const FinCategory& H = A.hom_at(L.verts[i][k], L.verts[i][k + 1]);
        choices[k] = H.hom(L.cells[i][k], L.cells[j][k]);
        if (choices[k].empty()) any = false;
      }
      if (!any) continue;
      std::vector<int> pick(level, 0);
      std::function<void(int, std::vector<int>&)> emit = [&](int k, std::vector<int>& acc) {
        if (k == level) {
          int id = static_cast<int>(b.mors.size());
          std::string nm = "t" + std::to_string(id);
          b.mors.push_back(nm);
          b.srcs.push_back(static_cast<int>(i));
          b.tgts.push_back(static_cast<int>(j));
          L.morsplit.push_back(acc);
          if (i == j) {
            bool isid = true;
            for (int k2 = 0; k2 < level; ++k2) {
              const FinCategory& H = A.hom_at(L.verts[i][k2], L.verts[i][k2 + 1]);
              if (acc[k2] != H.identity(L.cells[i][k2])) isid = false;
            }
            if (isid) idents[i] = id;
          }
          return;
        }
        for (int c : choices[k]) {
          acc.push_back(c);
          emit(k + 1, acc);
          acc.pop_back();
        }
      };
      std::vector<int> acc;
      emit(0, acc);
    }
  if (level == 0)
    for (size_t i = 0; i < L.verts.size(); ++i)
      if (idents[i] < 0) fail(Err::ValidationError, "level-0 identity missing");
  std::vector<std::array<int, 3>> comps;
  for (size_t m1 = 0; m1 < L.morsplit.size(); ++m1)
    for (size_t m2 = 0; m2 < L.morsplit.size(); ++m2) {
      if (b.srcs[m2] != b.tgts[m1]) continue;
      std::vector<int> comp(level);
      int i = b.srcs[m1];
      for (int k = 0; k < level; ++k) {
        const FinCategory& H = A.hom_at(L.verts[i][k], L.verts[i][k + 1]);
        comp[k] = H.compose(L.morsplit[m2][k], L.morsplit[m1][k]);
      }
      // find the morphism with this split
      int found = -1;
      for (size_t m3 = 0; m3 < L.morsplit.size(); ++m3)
        if (b.srcs[m3] == b.srcs[m1] && b.tgts[m3] == b.tgts[m2] && L.morsplit[m3] == comp) {
          found = static_cast<int>(m3);
          break;
        }
      if (found < 0) fail(Err::ValidationError, "path level composition gap");
      comps.push_back({static_cast<int>(m2), static_cast<int>(m1), found});
    }
  L.cat = FinCategory::make(b.name, b.objects, b.mors, b.srcs, b.tgts, idents, comps);
  return L;
}

}  // namespace

SegalPresentation segal_fibers(const TwoCatPtr& A, int N, const Caps& caps) {
  if (N < 2) fail(Err::TruncationTooSmall, "need N >= 2");
  SegalPresentation P;
  P.N = N;
  P.origin = A;
  P.delta = truncated_simplex_category(N, caps);
  std::vector<PathLevel> levels;
  for (int k = 0; k <= N; ++k) levels.push_back(build_path_level(*A, k, caps));
  for (auto& L : levels) {
    P.fiber.push_back(L.cat);
    P.path_vertices.push_back(L.verts);
    P.path_cells.push_back(L.cells);
    P.mor_components.push_back(L.morsplit);
  }
  // action per delta_op morphism: morphism k of delta_op goes from
  // delta.tgt(k) to delta.src(k) (same morphism ids as delta); underlying map
  // alpha : [delta.src(k)] -> [delta.tgt(k)]; functor X_{tgt} -> X_{src}.
  const FinCategory& D = *P.delta.delta;
  P.action.resize(D.num_morphisms());
  for (int k = 0; k < D.num_morphisms(); ++k) {
    const SimplexMap& al = P.delta.map_of[k];
    int from = al.m;  // fiber level the functor leaves
    int to = al.n;
    const PathLevel& src = levels[from];
    const PathLevel& dst = levels[to];
    CatFunctor act{src.cat, dst.cat, {}, {}};
    act.obj_map.resize(src.cat->num_objects());
    for (int o = 0; o < src.cat->num_objects(); ++o) {
      std::vector<int> nv(to + 1), nc(to);
      for (int i = 0; i <= to; ++i) nv[i] = src.verts[o][al.values[i]];
      for (int i = 1; i <= to; ++i) {
        std::vector<int> segv(src.verts[o].begin() + al.values[i - 1],
                              src.verts[o].begin() + al.values[i] + 1);
        std::vector<int> segc(src.cells[o].begin() + al.values[i - 1],
                              src.cells[o].begin() + al.values[i]);
        nc[i - 1] = composite_one_cells(*A, segv, segc);
      }
      int idx = -1;
      for (size_t j = 0; j < dst.verts.size(); ++j)
        if (dst.verts[j] == nv && dst.cells[j] == nc) {
          idx = static_cast<int>(j);
          break;
        }
      if (idx < 0) fail(Err::ValidationError, "face image path missing");
      act.obj_map[o] = idx;
    }
    act.mor_map.resize(src.cat->num_morphisms());
    for (int m = 0; m < src.cat->num_morphisms(); ++m) {
      int o = src.cat->src(m);
      int o2 = src.cat->tgt(m);
      std::vector<int> comp(to);
      for (int i = 1; i <= to; ++i) {
        // horizontal composite of the component 2-cells over the segment
        int lo = al.values[i - 1], hi = al.values[i];
        if (lo == hi) {
          int v = src.verts[o][lo];
          comp[i - 1] = A->hom_at(v, v).identity(A->id_one_cell[v]);
          continue;
        }
        int accv_src = src.cells[o][lo];
        int acc = src.morsplit[m][lo];
        int base = src.verts[o][lo];
        int cur_tgt_cell = src.cells[o2][lo];
        (void)cur_tgt_cell;
        int mid = src.verts[o][lo + 1];
        for (int k2 = lo + 1; k2 < hi; ++k2) {
          int nxt = src.verts[o][k2 + 1];
          acc = A->compose2(base, mid, nxt, src.morsplit[m][k2], acc);
          if (acc < 0) fail(Err::CapOverflow, "segment 2-cell composite undefined");
          accv_src = A->compose1_strict(base, mid, nxt, src.cells[o][k2], accv_src);
          mid = nxt;
        }
        comp[i - 1] = acc;
      }
      // locate the destination morphism
      int so = act.obj_map[o], to2 = act.obj_map[o2];
      int found = -1;
      for (int mm = 0; mm < dst.cat->num_morphisms(); ++mm)
        if (dst.cat->src(mm) == so && dst.cat->tgt(mm) == to2 && dst.morsplit[mm] == comp) {
          found = mm;
          break;
        }
      if (found < 0) fail(Err::ValidationError, "face image 2-cell missing");
      act.mor_map[m] = found;
    }
    validate_functor(act);
    P.action[k] = std::move(act);
  }
  // Strict functoriality of the action over delta_op.
  for (int k = 0; k < D.num_morphisms(); ++k)
    for (int k2 = 0; k2 < D.num_morphisms(); ++k2) {
      // composition in delta_op: k : m -> n (map [n]->[m]), then k2 : n -> l
      // (map [l]->[n]); composite map [l]->[m].
      if (P.delta.map_of[k2].m != P.delta.map_of[k].n) continue;
      auto comp_map = compose_simplex(P.delta.map_of[k], P.delta.map_of[k2]);
      int kk = P.delta.find(comp_map);
      if (!functors_equal(compose_functors(P.action[k2], P.action[k]), P.action[kk]))
        fail(Err::ValidationError, "presentation action not functorial");
    }
  return P;
}

GlobularCompleteReport check_globular_complete(const SegalPresentation& pres) {
  GlobularCompleteReport R;
  const FinCategory& X0 = *pres.fiber[0];
  R.globular = true;
  for (int m = 0; m < X0.num_morphisms(); ++m)
    if (!X0.is_identity(m)) R.globular = false;
  const TwoCat& A = *pres.origin;
  const int n = A.num_objects();
  // equivalence 1-cells: f in hom(a,b) with g, and invertible 2-cells
  // g f ~ id_a and f g ~ id_b
  auto iso_cells = [&](int a, int b, int f, int f2) {
    const FinCategory& H = A.hom_at(a, b);
    for (int m : H.hom(f, f2))
      if (H.is_iso(m)) return true;
    return false;
  };
  std::vector<std::vector<int>> equivalences(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const FinCategory& H = A.hom_at(a, b);
      for (int f = 0; f < H.num_objects(); ++f) {
        bool is_equiv = false;
        const FinCategory& H2 = A.hom_at(b, a);
        for (int g = 0; g < H2.num_objects() && !is_equiv; ++g) {
          int gf = A.compose1(a, b, a, g, f);
          int fg = A.compose1(b, a, b, f, g);
          if (gf < 0 || fg < 0) continue;
          if (iso_cells(a, a, gf, A.id_one_cell[a]) && iso_cells(b, b, fg, A.id_one_cell[b]))
            is_equiv = true;
        }
        if (is_equiv) equivalences[a * n + b].push_back(f);
      }
    }
  // complete: every equivalence is linked to an identity by an invertible
  // 2-cell, and identity 1-cells have trivial invertible 2-cell automorphisms.
  R.complete = true;
  for (int a = 0; a < n && R.complete; ++a)
    for (int b = 0; b < n && R.complete; ++b)
      for (int f : equivalences[a * n + b]) {
        if (a != b) {
          R.complete = false;
          R.witness = "equivalence between distinct objects " + A.obj_names[a] + ", " +
                      A.obj_names[b];
          break;
        }
        if (!iso_cells(a, a, f, A.id_one_cell[a])) {
          R.complete = false;
          R.witness = "equivalence not linked to the identity at " + A.obj_names[a];
          break;
        }
      }
  for (int a = 0; a < n && R.complete; ++a) {
    const FinCategory& H = A.hom_at(a, a);
    int count = 0;
    for (int m : H.hom(A.id_one_cell[a], A.id_one_cell[a]))
      if (H.is_iso(m)) ++count;
    if (count != 1) {
      R.complete = false;
      R.witness = "identity 1-cell at " + A.obj_names[a] + " has " + std::to_string(count) +
                  " invertible automorphism 2-cells";
    }
  }
  return R;
}

TwoCatPtr rebuild_from_presentation(const SegalPresentation& pres) {
  const TwoCat& A = *pres.origin;
  const int n = A.num_objects();
  TwoCatBuilder b;
  b.name = A.name;
  b.objects = A.obj_names;
  b.init(n);
  b.partial = A.partial;
  b.cell_weight = A.cell_weight;
  b.weight_cap = A.weight_cap;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) b.hom[a * n + c] = A.hom_ptr(a, c);
  // identities from the degeneracy [1] -> [0]
  int s0 = pres.delta.find(validate_simplex_map(1, 0, {0, 0}));
  for (int a = 0; a < n; ++a) {
    int p0 = pres.find_path(0, {a}, {});
    int img = pres.action[s0].obj_map[p0];
    b.id_one_cell[a] = pres.path_cells[1][img][0];
  }
  // composition from the active face (0,2) : [1] -> [2]
  int f02 = pres.delta.find(validate_simplex_map(1, 2, {0, 2}));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) {
        const FinCategory& AB = A.hom_at(a, c);
        const FinCategory& BC = A.hom_at(c, d);
        auto& t1 = b.one[(a * n + c) * n + d];
        auto& t2 = b.two[(a * n + c) * n + d];
        t1.assign(static_cast<size_t>(BC.num_objects()) * AB.num_objects(), -1);
        t2.assign(static_cast<size_t>(BC.num_morphisms()) * AB.num_morphisms(), -1);
        for (int g = 0; g < BC.num_objects(); ++g)
          for (int f = 0; f < AB.num_objects(); ++f) {
            int p = pres.find_path(2, {a, c, d}, {f, g});
            if (p < 0) continue;  // weight-capped pair
            int img = pres.action[f02].obj_map[p];
            t1[static_cast<size_t>(g) * AB.num_objects() + f] = pres.path_cells[1][img][0];
          }
        for (int bm = 0; bm < BC.num_morphisms(); ++bm)
          for (int am = 0; am < AB.num_morphisms(); ++am) {
            int p = pres.find_path(2, {a, c, d}, {AB.src(am), BC.src(bm)});
            if (p < 0) continue;
            int q = pres.find_path(2, {a, c, d}, {AB.tgt(am), BC.tgt(bm)});
            if (q < 0) continue;
            int m2 = pres.find_level_morphism(2, p, q, {am, bm});
            if (m2 < 0) fail(Err::ValidationError, "level-2 tuple missing");
            int img = pres.action[f02].mor_map[m2];
            t2[static_cast<size_t>(bm) * AB.num_morphisms() + am] =
                pres.mor_components[1][img][0];
          }
      }
  return b.build();
}

Unstraightened unstraighten(const SegalPresentation& pres, const Caps& caps) {
  Unstraightened U;
  U.pres = pres;
  CatDiagram d;
  d.base = pres.delta.delta_op;
  const FinCategory& Dop = *pres.delta.delta_op;
  d.fiber.resize(Dop.num_objects());
  for (int i = 0; i < Dop.num_objects(); ++i) d.fiber[i] = pres.fiber[i];
  d.transition.resize(Dop.num_morphisms());
  for (int k = 0; k < Dop.num_morphisms(); ++k) d.transition[k] = pres.action[k];
  U.gr = grothendieck_construction(d, caps);
  return U;
}

InertCocartReport check_inert_cocartesian(const Unstraightened& X, const Unstraightened& Y,
                                          const CatFunctor& T) {
  if (X.pres.N != Y.pres.N) fail(Err::TruncationMismatch, "presentations truncated differently");
  if (!functors_equal(compose_functors(Y.gr.fib.p, T), X.gr.fib.p))
    fail(Err::EndpointMismatch, "map does not live over the base");
  InertCocartReport R;
  R.inert_cocartesian = true;
  const FinCategory& D = *X.pres.delta.delta_op;
  R.preserves_over.assign(D.num_morphisms(), 1);
  for (int m = 0; m < X.gr.total->num_morphisms(); ++m) {
    if (!X.gr.fib.cocart[m]) continue;
    int base = X.gr.fib.p.mor_map[m];
    bool preserved = Y.gr.fib.cocart[T.mor_map[m]] != 0;
    if (!preserved) {
      R.preserves_over[base] = 0;
      if (X.pres.delta.inert_base(base)) {
        R.inert_cocartesian = false;
        if (R.failing_edge < 0) R.failing_edge = base;
      }
    }
  }
  return R;
}

// ---------------------------------------------------------------------------
// Lax functor <-> fibration map dictionary
// ---------------------------------------------------------------------------

int lax_gamma_iterate(const LaxFunctor& F, const std::vector<int>& vs,
                      const std::vector<int>& cs) {
  const TwoCat& S = *F.source;
  const TwoCat& T = *F.target;
  const int n = S.num_objects();
  int a = vs.front();
  if (cs.empty()) return F.delta[a];
  const int fa = F.obj_map[a];
  if (cs.size() == 1) {
    int img = F.hom_map[a * n + vs[1]].obj_map[cs[0]];
    return T.hom_at(fa, F.obj_map[vs[1]]).identity(img);
  }
  int acc_src_cell = F.hom_map[a * n + vs[1]].obj_map[cs[0]];
  int acc = T.hom_at(fa, F.obj_map[vs[1]]).identity(acc_src_cell);
  std::vector<int> pre_v = {vs[0], vs[1]};
  std::vector<int> pre_c = {cs[0]};
  for (size_t k = 1; k < cs.size(); ++k) {
    int b = vs[k], c = vs[k + 1];
    int comp_pre = composite_one_cells(S, pre_v, pre_c);
    int Fck = F.hom_map[b * n + c].obj_map[cs[k]];
    int fb = F.obj_map[b], fc = F.obj_map[c];
    int w = T.compose2(fa, fb, fc, T.hom_at(fb, fc).identity(Fck), acc);
    if (w < 0) fail(Err::CapOverflow, "gamma iterate whisker out of cap");
    int gm = F.gamma[S.triple(vs[0], b, c)]
                    [static_cast<size_t>(cs[k]) * S.hom_at(vs[0], b).num_objects() + comp_pre];
    if (gm < 0) fail(Err::CapOverflow, "gamma iterate out of cap");
    acc = T.hom_at(fa, fc).compose(gm, w);
    pre_v.push_back(c);
    pre_c.push_back(cs[k]);
  }
  return acc;
}

FibrationMap lax_to_fibration_map(const LaxFunctor& F, int N, const Caps& caps) {
  if (N < 3) fail(Err::TruncationTooSmall, "lax encoding needs N >= 3");
  if (!validate_lax_functor(F).ok) fail(Err::ValidationError, "lax functor invalid");
  FibrationMap fm;
  fm.source = unstraighten(segal_fibers(F.source, N, caps), caps);
  fm.target = unstraighten(segal_fibers(F.target, N, caps), caps);
  const TwoCat& S = *F.source;
  const TwoCat& T = *F.target;
  const int n = S.num_objects();
  const SegalPresentation& PS = fm.source.pres;
  const SegalPresentation& PT = fm.target.pres;

  // image of a source path under F
  auto map_path = [&](int level, int idx, std::vector<int>& nv, std::vector<int>& nc) {
    const auto& vs = PS.path_vertices[level][idx];
    const auto& cs = PS.path_cells[level][idx];
    nv.resize(vs.size());
    nc.resize(cs.size());
    for (size_t i = 0; i < vs.size(); ++i) nv[i] = F.obj_map[vs[i]];
    for (size_t i = 0; i < cs.size(); ++i)
      nc[i] = F.hom_map[vs[i] * n + vs[i + 1]].obj_map[cs[i]];
  };

  auto gamma_iter = [&](const std::vector<int>& vs, const std::vector<int>& cs) {
    return lax_gamma_iterate(F, vs, cs);
  };

  CatFunctor M{fm.source.gr.total, fm.target.gr.total, {}, {}};
  M.obj_map.resize(fm.source.gr.total->num_objects());
  for (int o = 0; o < fm.source.gr.total->num_objects(); ++o) {
    auto [lvl, idx] = fm.source.gr.obj_pairs[o];
    std::vector<int> nv, nc;
    map_path(lvl, idx, nv, nc);
    int ti = PT.find_path(lvl, nv, nc);
    if (ti < 0) fail(Err::CapOverflow, "image path missing in the target presentation");
    M.obj_map[o] = fm.target.gr.find_obj(lvl, ti);
  }
  M.mor_map.resize(fm.source.gr.total->num_morphisms());
  for (int m = 0; m < fm.source.gr.total->num_morphisms(); ++m) {
    auto [basek, tau] = fm.source.gr.mor_pairs[m];
    const SimplexMap& al = PS.delta.map_of[basek];  // [k] -> [nlvl]
    int so = fm.source.gr.total->src(m);
    auto [slvl, sidx] = fm.source.gr.obj_pairs[so];
    (void)slvl;
    auto [tlvl, tidx] = fm.source.gr.obj_pairs[fm.source.gr.total->tgt(m)];
    // target component: per slot i of [k]: gamma-iterate over the segment of
    // the source path, composed with F of the fiber component tau_i.
    const auto& svs = PS.path_vertices[slvl][sidx];
    const auto& scs = PS.path_cells[slvl][sidx];
    std::vector<int> comp(tlvl);
    for (int i = 1; i <= tlvl; ++i) {
      int lo = al.values[i - 1], hi = al.values[i];
      std::vector<int> segv(svs.begin() + lo, svs.begin() + hi + 1);
      std::vector<int> segc(scs.begin() + lo, scs.begin() + hi);
      int gi = gamma_iter(segv, segc);
      // F of the fiber morphism component tau_i
      int tau_comp = PS.mor_components[tlvl][tau][i - 1];
      int a0 = svs[lo], b0 = svs[hi];
      int tgtcell = PS.path_cells[tlvl][tidx][i - 1];
      (void)tgtcell;
      int Ftau =
          F.hom_map[a0 * n + b0].mor_map[tau_comp];
      comp[i - 1] = T.hom_at(F.obj_map[a0], F.obj_map[b0]).compose(Ftau, gi);
    }
    // locate the target total morphism: base = basek, fiber morphism with the
    // computed components from M(src) pushed along alpha
    std::vector<int> tv, tc;
    map_path(tlvl, tidx, tv, tc);
    int t_path = PT.find_path(tlvl, tv, tc);
    int src_img_obj = M.obj_map[so];
    auto [ilvl, ipath] = fm.target.gr.obj_pairs[src_img_obj];
    (void)ilvl;
    // fiber morphism in target presentation: from action[basek](ipath) to t_path
    int pushed = PT.action[basek].obj_map[ipath];
    int fiber_mor = PT.find_level_morphism(tlvl, pushed, t_path, comp);
    if (fiber_mor < 0) fail(Err::ValidationError, "image 2-cell tuple missing");
    int tm = fm.target.gr.find_mor(src_img_obj, basek, fiber_mor);
    if (tm < 0) fail(Err::ValidationError, "image total morphism missing");
    M.mor_map[m] = tm;
  }
  validate_functor(M);
  if (!functors_equal(compose_functors(fm.target.gr.fib.p, M), fm.source.gr.fib.p))
    fail(Err::ValidationError, "fibration map does not live over the base");
  fm.map = std::move(M);
  return fm;
}

LaxFunctor fibration_map_to_lax(const FibrationMap& fm) {
  const SegalPresentation& PS = fm.source.pres;
  const SegalPresentation& PT = fm.target.pres;
  const TwoCatPtr S = PS.origin;
  const TwoCatPtr T = PT.origin;
  const int n = S->num_objects();
  LaxFunctor F;
  F.source = S;
  F.target = T;
  F.obj_map.resize(n);
  for (int a = 0; a < n; ++a) {
    int p0 = PS.find_path(0, {a}, {});
    int tot = fm.source.gr.find_obj(0, p0);
    auto [lvl, idx] = fm.target.gr.obj_pairs[fm.map.obj_map[tot]];
    (void)lvl;
    F.obj_map[a] = PT.path_vertices[0][idx][0];
  }
  F.hom_map.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const FinCategory& H = S->hom_at(a, b);
      CatFunctor Hf{S->hom_ptr(a, b), T->hom_ptr(F.obj_map[a], F.obj_map[b]), {}, {}};
      Hf.obj_map.resize(H.num_objects());
      Hf.mor_map.resize(H.num_morphisms());
      for (int f = 0; f < H.num_objects(); ++f) {
        int p1 = PS.find_path(1, {a, b}, {f});
        int tot = fm.source.gr.find_obj(1, p1);
        auto [lvl, idx] = fm.target.gr.obj_pairs[fm.map.obj_map[tot]];
        (void)lvl;
        Hf.obj_map[f] = PT.path_cells[1][idx][0];
      }
      for (int mcell = 0; mcell < H.num_morphisms(); ++mcell) {
        int p1 = PS.find_path(1, {a, b}, {H.src(mcell)});
        int q1 = PS.find_path(1, {a, b}, {H.tgt(mcell)});
        int fib_mor = PS.find_level_morphism(1, p1, q1, {mcell});
        int tot_src = fm.source.gr.find_obj(1, p1);
        int id_base = PS.delta.find(identity_simplex_map(1));
        int tm = fm.source.gr.find_mor(tot_src, id_base, fib_mor);
        int img = fm.map.mor_map[tm];
        int img_fib = fm.target.gr.mor_pairs[img].second;
        Hf.mor_map[mcell] = PT.mor_components[1][img_fib][0];
      }
      validate_functor(Hf);
      F.hom_map[a * n + b] = std::move(Hf);
    }
  // delta from the lift over the degeneracy [1] -> [0]
  F.delta.resize(n);
  int s0 = PS.delta.find(validate_simplex_map(1, 0, {0, 0}));
  for (int a = 0; a < n; ++a) {
    int p0 = PS.find_path(0, {a}, {});
    int tot = fm.source.gr.find_obj(0, p0);
    int lift = cocartesian_lift(fm.source.gr.fib, tot, s0);
    int img = fm.map.mor_map[lift];
    // chosen lift downstairs of the image object
    int tot_img = fm.map.obj_map[tot];
    int lift2 = cocartesian_lift(fm.target.gr.fib, tot_img, s0);
    // unique vertical filler u with u . lift2 = img
    int u = unique_vertical_filler(fm.target.gr, lift2, img);
    F.delta[a] = PT.mor_components[1][fm.target.gr.mor_pairs[u].second][0];
  }
  // gamma from lifts over (0,2) : [1] -> [2]
  F.gamma.resize(n * n * n);
  int f02 = PS.delta.find(validate_simplex_map(1, 2, {0, 2}));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinCategory& AB = S->hom_at(a, b);
        const FinCategory& BC = S->hom_at(b, c);
        auto& gam = F.gamma[S->triple(a, b, c)];
        gam.assign(static_cast<size_t>(BC.num_objects()) * AB.num_objects(), -1);
        for (int g = 0; g < BC.num_objects(); ++g)
          for (int f = 0; f < AB.num_objects(); ++f) {
            if (S->compose1(a, b, c, g, f) < 0) continue;
            int p2 = PS.find_path(2, {a, b, c}, {f, g});
            if (p2 < 0) continue;
            int tot = fm.source.gr.find_obj(2, p2);
            int lift = cocartesian_lift(fm.source.gr.fib, tot, f02);
            int img = fm.map.mor_map[lift];
            int tot_img = fm.map.obj_map[tot];
            int lift2 = cocartesian_lift(fm.target.gr.fib, tot_img, f02);
            int u = unique_vertical_filler(fm.target.gr, lift2, img);
            gam[static_cast<size_t>(g) * AB.num_objects() + f] =
                PT.mor_components[1][fm.target.gr.mor_pairs[u].second][0];
          }
      }
  auto rep = validate_lax_functor(F);
  if (!rep.ok)
    fail(Err::ValidationError, "decoded lax functor invalid: " +
                                   (rep.failures.empty() ? "?" : rep.failures[0]));
  return F;
}

}  // namespace catena
