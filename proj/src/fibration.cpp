#include "catena/fibration.hpp"

#include <algorithm>

namespace catena {

bool cocartesian_status(const CatFunctor& p, int f, LiftViolation* witness) {
  const FinCategory& X = *p.source;
  const FinCategory& B = *p.target;
  int x = X.src(f), y = X.tgt(f);
  for (int z = 0; z < X.num_objects(); ++z)
    for (int g : X.hom(x, z))
      for (int h : B.hom(p.obj_map[y], p.obj_map[z])) {
        if (B.compose(h, p.mor_map[f]) != p.mor_map[g]) continue;
        int count = 0;
        for (int u : X.hom(y, z))
          if (p.mor_map[u] == h && X.compose(u, f) == g) ++count;
        if (count != 1) {
          if (witness) {
            witness->mor = f;
            witness->detail = "factorization (" + X.mor_names[g] + ", " + B.mor_names[h] +
                              ") admits " + std::to_string(count) + " fillers";
          }
          return false;
        }
      }
  return true;
}

FibrationAnalysis analyze_fibration(const CatFunctor& p) {
  validate_functor(p);
  FibrationAnalysis fib;
  fib.p = p;
  const FinCategory& X = *p.source;
  const FinCategory& B = *p.target;
  fib.cocart.assign(X.num_morphisms(), 0);
  for (int f = 0; f < X.num_morphisms(); ++f)
    fib.cocart[f] = cocartesian_status(p, f) ? 1 : 0;
  fib.lift.assign(static_cast<size_t>(X.num_objects()) * B.num_morphisms(), -1);
  fib.is_fibration = true;
  for (int x = 0; x < X.num_objects(); ++x)
    for (int h : B.out_morphisms(p.obj_map[x])) {
      int chosen = -1;
      if (B.is_identity(h)) {
        chosen = X.identity(x);  // identities are always cocartesian over identities
      } else {
        for (int f : X.out_morphisms(x))
          if (p.mor_map[f] == h && fib.cocart[f]) {
            chosen = f;
            break;  // morphisms scanned in id order: least id wins
          }
      }
      fib.lift[static_cast<size_t>(x) * B.num_morphisms() + h] = chosen;
      if (chosen < 0 && !fib.first_missing) {
        fib.is_fibration = false;
        fib.first_missing = std::make_pair(x, h);
      } else if (chosen < 0) {
        fib.is_fibration = false;
      }
    }
  return fib;
}

int cocartesian_lift(const FibrationAnalysis& fib, int x, int h) {
  const FinCategory& X = *fib.p.source;
  const FinCategory& B = *fib.p.target;
  if (B.src(h) != fib.p.obj_map[x]) fail(Err::EndpointMismatch, "lift request endpoints");
  int chosen = fib.lift_of(x, h);
  if (chosen < 0)
    fail(Err::NoLift, "no cocartesian lift of " + X.obj_names[x] + " along " + B.mor_names[h]);
  // Any two valid lifts are connected by a unique vertical isomorphism.
  for (int f : X.out_morphisms(x)) {
    if (fib.p.mor_map[f] != h || !fib.cocart[f] || f == chosen) continue;
    int links = 0;
    for (int u : X.hom(X.tgt(chosen), X.tgt(f)))
      if (fib.p.mor_map[u] == B.identity(B.tgt(h)) && X.compose(u, chosen) == f && X.is_iso(u))
        ++links;
    if (links != 1)
      fail(Err::ValidationError, "parallel lifts of " + X.obj_names[x] + " along " +
                                     B.mor_names[h] + " not uniquely vertically isomorphic");
  }
  return chosen;
}

CocartFunctorReport check_cocartesian_functor(const FibrationAnalysis& p,
                                              const FibrationAnalysis& q, const CatFunctor& F,
                                              const CatFunctor& G) {
  if (!functors_equal(compose_functors(q.p, F), compose_functors(G, p.p)))
    fail(Err::EndpointMismatch, "cocartesian functor square does not commute");
  CocartFunctorReport r;
  r.cocartesian = true;
  for (int f = 0; f < p.p.source->num_morphisms(); ++f)
    if (p.cocart[f] && !q.cocart[F.mor_map[f]]) {
      r.cocartesian = false;
      r.counterexample = f;
      break;
    }
  return r;
}

// ---------------------------------------------------------------------------
// Grothendieck construction
// ---------------------------------------------------------------------------

void validate_diagram(const CatDiagram& d) {
  const FinCategory& I = *d.base;
  if (static_cast<int>(d.fiber.size()) != I.num_objects() ||
      static_cast<int>(d.transition.size()) != I.num_morphisms())
    fail(Err::ValidationError, "diagram shape mismatch");
  for (int k = 0; k < I.num_morphisms(); ++k) {
    const CatFunctor& t = d.transition[k];
    validate_functor(t);
    if (!FinCategory::same_presentation(*t.source, *d.fiber[I.src(k)]) ||
        !FinCategory::same_presentation(*t.target, *d.fiber[I.tgt(k)]))
      fail(Err::EndpointMismatch, "transition endpoints for " + I.mor_names[k]);
  }
  for (int i = 0; i < I.num_objects(); ++i)
    if (!functors_equal(d.transition[I.identity(i)], identity_functor(d.fiber[i])))
      fail(Err::ValidationError, "identity transition at " + I.obj_names[i]);
  for (int k = 0; k < I.num_morphisms(); ++k)
    for (int k2 : I.out_morphisms(I.tgt(k)))
      if (!functors_equal(d.transition[I.compose(k2, k)],
                          compose_functors(d.transition[k2], d.transition[k])))
        fail(Err::ValidationError,
             "transitions not strictly functorial at " + I.mor_names[k2] + " . " + I.mor_names[k]);
}

int GrothendieckResult::find_obj(int i, int x) const {
  for (size_t k = 0; k < obj_pairs.size(); ++k)
    if (obj_pairs[k] == std::make_pair(i, x)) return static_cast<int>(k);
  return -1;
}
int GrothendieckResult::find_mor(int src_obj, int k, int phi) const {
  for (size_t m = 0; m < mor_pairs.size(); ++m)
    if (total->src(static_cast<int>(m)) == src_obj && mor_pairs[m] == std::make_pair(k, phi))
      return static_cast<int>(m);
  return -1;
}
SubcatResult GrothendieckResult::fiber_subcat(int i) const {
  std::vector<int> objs;
  for (size_t k = 0; k < obj_pairs.size(); ++k)
    if (obj_pairs[k].first == i) objs.push_back(static_cast<int>(k));
  std::vector<int> mors;
  const FinCategory& I = *fib.p.target;
  for (size_t m = 0; m < mor_pairs.size(); ++m)
    if (mor_pairs[m].first == I.identity(i)) mors.push_back(static_cast<int>(m));
  return subcategory(total, objs, mors, total->name + "|" + I.obj_names[i]);
}

GrothendieckResult grothendieck_construction(const CatDiagram& d, const Caps& caps, bool verify) {
  validate_diagram(d);
  const FinCategory& I = *d.base;
  GrothendieckResult R;
  CatBuilder b("Gr(" + I.name + ")");
  long long total_objs = 0;
  for (int i = 0; i < I.num_objects(); ++i) total_objs += d.fiber[i]->num_objects();
  if (total_objs > caps.derived_objects) fail(Err::SizeExceeded, "Grothendieck total object count");
  std::vector<std::vector<int>> obj_of(I.num_objects());
  for (int i = 0; i < I.num_objects(); ++i) {
    obj_of[i].resize(d.fiber[i]->num_objects());
    for (int x = 0; x < d.fiber[i]->num_objects(); ++x) {
      obj_of[i][x] = static_cast<int>(b.objects.size());
      b.objects.push_back(I.obj_names[i] + ":" + d.fiber[i]->obj_names[x]);
      R.obj_pairs.push_back({i, x});
    }
  }
  // morphism (k : i -> j, phi : F_k(x) -> x') from (i, x) to (j, x')
  std::vector<int> idents(b.objects.size(), -1);
  std::unordered_map<long long, int> mor_of;  // key (src total obj, k, phi)
  auto mkey = [&](long long s, int k, int phi) {
    return (s * I.num_morphisms() + k) * 1000003ll + phi;
  };
  for (size_t s = 0; s < R.obj_pairs.size(); ++s) {
    auto [i, x] = R.obj_pairs[s];
    for (int k : I.out_morphisms(i)) {
      int j = I.tgt(k);
      int fx = d.transition[k].obj_map[x];
      for (int x2 = 0; x2 < d.fiber[j]->num_objects(); ++x2)
        for (int phi : d.fiber[j]->hom(fx, x2)) {
          mor_of[mkey(static_cast<long long>(s), k, phi)] = static_cast<int>(b.mors.size());
          b.mors.push_back(I.mor_names[k] + ":" + d.fiber[j]->mor_names[phi] + "@" +
                           std::to_string(s));
          b.srcs.push_back(static_cast<int>(s));
          b.tgts.push_back(obj_of[j][x2]);
          R.mor_pairs.push_back({k, phi});
        }
    }
  }
  for (size_t s = 0; s < R.obj_pairs.size(); ++s) {
    auto [i, x] = R.obj_pairs[s];
    idents[s] = mor_of.at(mkey(static_cast<long long>(s), I.identity(i), d.fiber[i]->identity(x)));
  }
  std::vector<std::array<int, 3>> comps;
  for (size_t m1 = 0; m1 < R.mor_pairs.size(); ++m1) {
    auto [k1, phi1] = R.mor_pairs[m1];
    int mid = b.tgts[m1];
    auto [j, xj] = R.obj_pairs[mid];
    (void)xj;
    for (int k2 : I.out_morphisms(j)) {
      int jj = I.tgt(k2);
      int pushed = d.transition[k2].mor_map[phi1];  // F_{k2}(phi1)
      for (int x3 = 0; x3 < d.fiber[jj]->num_objects(); ++x3)
        for (int phi2 : d.fiber[jj]->hom(d.transition[k2].obj_map[R.obj_pairs[mid].second], x3)) {
          // (k2, phi2) . (k1, phi1) = (k2 k1, phi2 . F_{k2}(phi1))
          int m2 = mor_of.at(mkey(static_cast<long long>(mid), k2, phi2));
          int kk = I.compose(k2, k1);
          int phic = d.fiber[jj]->compose(phi2, pushed);
          comps.push_back({m2, static_cast<int>(m1), mor_of.at(mkey(b.srcs[m1], kk, phic))});
        }
    }
  }
  R.total = verify ? FinCategory::make(b.name, b.objects, b.mors, b.srcs, b.tgts, idents, comps)
                   : FinCategory::make_trusted(b.name, b.objects, b.mors, b.srcs, b.tgts, idents,
                                               comps);
  CatFunctor proj{R.total, d.base, {}, {}};
  for (auto& op : R.obj_pairs) proj.obj_map.push_back(op.first);
  for (auto& mp : R.mor_pairs) proj.mor_map.push_back(mp.first);
  if (verify) {
    validate_functor(proj);
    R.fib = analyze_fibration(proj);
    if (!R.fib.is_fibration)
      fail(Err::ValidationError, "Grothendieck projection failed the fibration check");
    // cross-check the constructed characterization against the analysis
    for (size_t m = 0; m < R.mor_pairs.size(); ++m) {
      auto [k, phi] = R.mor_pairs[m];
      bool iso = d.fiber[I.tgt(k)]->is_iso(phi);
      if (iso != (R.fib.cocart[m] != 0))
        fail(Err::ValidationError, "fiber-iso characterization of cocartesian lifts failed");
    }
    return R;
  }
  R.fib.p = proj;
  R.fib.is_fibration = true;
  R.fib.cocart.assign(R.total->num_morphisms(), 0);
  for (size_t m = 0; m < R.mor_pairs.size(); ++m) {
    auto [k, phi] = R.mor_pairs[m];
    R.fib.cocart[m] = d.fiber[I.tgt(k)]->is_iso(phi) ? 1 : 0;
  }
  R.fib.lift.assign(static_cast<size_t>(R.total->num_objects()) * I.num_morphisms(), -1);
  for (size_t o = 0; o < R.obj_pairs.size(); ++o) {
    auto [i, x] = R.obj_pairs[o];
    for (int k : I.out_morphisms(i)) {
      int lf = I.is_identity(k)
                   ? R.total->identity(static_cast<int>(o))
                   : mor_of.at(mkey(static_cast<long long>(o), k,
                                    d.fiber[I.tgt(k)]->identity(d.transition[k].obj_map[x])));
      R.fib.lift[o * I.num_morphisms() + k] = lf;
    }
  }
  return R;
}

// ---------------------------------------------------------------------------
// Free cocartesian fibration
// ---------------------------------------------------------------------------

FreeFibrationResult free_cocartesian_fibration(const CatFunctor& G, const Caps& caps) {
  validate_functor(G);
  FreeFibrationResult R;
  R.comma = comma_category(G, identity_functor(G.target), caps);
  R.total = R.comma.cat;
  R.pr0 = R.comma.pr0;
  CatFunctor ev1 = R.comma.pr1;  // to Y
  R.fib = analyze_fibration(ev1);
  if (!R.fib.is_fibration) fail(Err::ValidationError, "free fibration failed the fibration check");
  const FinCategory& C = *G.source;
  const FinCategory& Y = *G.target;
  R.delta = CatFunctor{G.source, R.total, {}, {}};
  R.delta.obj_map.resize(C.num_objects());
  R.delta.mor_map.resize(C.num_morphisms(), -1);
  for (int c = 0; c < C.num_objects(); ++c) {
    int o = R.comma.find_obj(c, G.obj_map[c], Y.identity(G.obj_map[c]));
    if (o < 0) fail(Err::ValidationError, "free fibration misses diagonal object");
    R.delta.obj_map[c] = o;
  }
  for (int u = 0; u < C.num_morphisms(); ++u) {
    int s = R.delta.obj_map[C.src(u)], t = R.delta.obj_map[C.tgt(u)];
    int found = -1;
    for (int m = 0; m < R.total->num_morphisms(); ++m)
      if (R.total->src(m) == s && R.total->tgt(m) == t &&
          R.comma.mor_pairs[m] == std::make_pair(u, G.mor_map[u])) {
        found = m;
        break;
      }
    if (found < 0) fail(Err::ValidationError, "free fibration misses diagonal square");
    R.delta.mor_map[u] = found;
  }
  validate_functor(R.delta);
  // Delta_G -| pr0 with identity unit; counit at (c, f : G c -> y) = (id_c, f).
  Adjunction adj;
  adj.left = R.delta;
  adj.right = R.pr0;
  adj.unit = identity_nat(identity_functor(G.source));
  adj.unit.target = compose_functors(R.pr0, R.delta);
  adj.counit = NatTransformation{compose_functors(R.delta, R.pr0), identity_functor(R.total), {}};
  adj.counit.component.resize(R.total->num_objects(), -1);
  for (int o = 0; o < R.total->num_objects(); ++o) {
    auto [c, y, f] = R.comma.objects[o];
    (void)y;
    int s = R.delta.obj_map[c];
    int found = -1;
    for (int m = 0; m < R.total->num_morphisms(); ++m)
      if (R.total->src(m) == s && R.total->tgt(m) == o &&
          R.comma.mor_pairs[m] == std::make_pair(C.identity(c), f)) {
        found = m;
        break;
      }
    if (found < 0) fail(Err::ValidationError, "free fibration misses counit component");
    adj.counit.component[o] = found;
  }
  require_adjunction(adj, "Delta_G -| pr0");
  R.delta_adjunction = std::move(adj);
  return R;
}

FreeFibrationUP free_fibration_universal_property(const FreeFibrationResult& free,
                                                  const FibrationAnalysis& p, const Caps& caps) {
  FreeFibrationUP up;
  CatFunctor ev1 = free.fib.p;
  // cocartesian functors total -> X over Y
  auto overs = enumerate_functors_over(ev1, p.p, caps);
  std::vector<CatFunctor> cocart_overs;
  for (auto& H : overs) {
    bool ok = true;
    for (int f = 0; f < free.total->num_morphisms() && ok; ++f)
      if (free.fib.cocart[f] && !p.cocart[H.mor_map[f]]) ok = false;
    if (ok) cocart_overs.push_back(H);
  }
  up.cocart_over_count = static_cast<long long>(cocart_overs.size());
  // plain functors C -> X over Y (against G)
  CatFunctor Gq{free.pr0.target, ev1.target, {}, {}};
  // q := ev1 . delta = G
  Gq = compose_functors(ev1, free.delta);
  auto plains = enumerate_functors_over(Gq, p.p, caps);
  up.plain_over_count = static_cast<long long>(plains.size());
  // restriction along delta must biject
  std::vector<char> hit(plains.size(), 0);
  bool injective = true;
  for (auto& H : cocart_overs) {
    auto res = compose_functors(H, free.delta);
    int found = -1;
    for (size_t i = 0; i < plains.size(); ++i)
      if (functors_equal(plains[i], res)) {
        found = static_cast<int>(i);
        break;
      }
    if (found < 0) fail(Err::ValidationError, "restriction left the enumerated set");
    if (hit[found]) injective = false;
    hit[found] = 1;
  }
  bool surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  up.bijective = injective && surjective &&
                 up.cocart_over_count == up.plain_over_count;
  return up;
}

// ---------------------------------------------------------------------------
// Directed lifting
// ---------------------------------------------------------------------------

DirectedLiftResult directed_lift(const Adjunction& adj, const FibrationAnalysis& p,
                                 const CatFunctor& H, const CatFunctor& K,
                                 const NatTransformation& alpha, const Caps& caps) {
  require_adjunction(adj, "directed_lift adjunction");
  if (!p.is_fibration) fail(Err::HypothesisFailed, "directed_lift needs a fibration");
  const CatFunctor& F = adj.left;   // A -> B
  const CatFunctor& U = adj.right;  // B -> A
  // alpha : p H => K F
  if (!functors_equal(alpha.source, compose_functors(p.p, H)) ||
      !functors_equal(alpha.target, compose_functors(K, F)))
    fail(Err::EndpointMismatch, "directed_lift filler endpoints");
  validate_nat(alpha);
  const FinCategory& A = *F.source;
  const FinCategory& B = *F.target;
  const FinCategory& X = *p.p.source;
  const FinCategory& Y = *p.p.target;

  DirectedLiftResult R;
  // ell_b : H U b --cocart--> L b over K(eps_b) . alpha_{U b}
  std::vector<int> ell(B.num_objects(), -1);
  CatFunctor L{K.source, p.p.source, {}, {}};
  L.obj_map.assign(B.num_objects(), -1);
  L.mor_map.assign(B.num_morphisms(), -1);
  for (int b = 0; b < B.num_objects(); ++b) {
    int base = Y.compose(K.mor_map[adj.counit.component[b]], alpha.component[U.obj_map[b]]);
    int lf = cocartesian_lift(p, H.obj_map[U.obj_map[b]], base);
    ell[b] = lf;
    L.obj_map[b] = X.tgt(lf);
  }
  for (int g = 0; g < B.num_morphisms(); ++g) {
    int b = B.src(g), b2 = B.tgt(g);
    int want = X.compose(ell[b2], H.mor_map[U.mor_map[g]]);
    int found = -1;
    for (int u : X.hom(L.obj_map[b], L.obj_map[b2]))
      if (p.p.mor_map[u] == K.mor_map[g] && X.compose(u, ell[b]) == want) {
        if (found >= 0) fail(Err::ValidationError, "directed lift filler not unique");
        found = u;
      }
    if (found < 0) fail(Err::ValidationError, "directed lift filler missing for " + B.mor_names[g]);
    L.mor_map[g] = found;
  }
  validate_functor(L);
  if (!functors_equal(compose_functors(p.p, L), K))
    fail(Err::ValidationError, "directed lift does not sit over K");
  R.lift = L;
  // comparison theta : H => L F, theta_a = ell_{F a} . H(eta_a)
  R.comparison = NatTransformation{H, compose_functors(L, F), {}};
  R.comparison.component.resize(A.num_objects());
  for (int a = 0; a < A.num_objects(); ++a)
    R.comparison.component[a] = X.compose(ell[F.obj_map[a]], H.mor_map[adj.unit.component[a]]);
  validate_nat(R.comparison);
  // p theta must recover alpha
  for (int a = 0; a < A.num_objects(); ++a)
    if (p.p.mor_map[R.comparison.component[a]] != alpha.component[a])
      fail(Err::ValidationError, "comparison does not project to the given filler");
  R.strict_commutation = functors_equal(compose_functors(L, F), H) &&
                         [&] {
                           for (int a = 0; a < A.num_objects(); ++a)
                             if (R.comparison.component[a] != X.identity(H.obj_map[a])) return false;
                           return true;
                         }();

  // Initiality among lifts recovering the same lax square: enumerate all
  // (L', theta') and demand a unique vertical map (L, theta) -> (L', theta').
  long long budget = caps.enum_candidates;
  auto all_lifts = enumerate_functors_over(K, p.p, caps);
  R.initiality_computed = true;
  R.initial = true;
  long long competitors = 0;
  for (auto& L2 : all_lifts) {
    // candidate thetas
    std::vector<NatTransformation> thetas;
    {
      NatTransformation t{H, compose_functors(L2, F), {}};
      t.component.assign(A.num_objects(), -1);
      std::function<void(int)> go = [&](int a) {
        if (--budget < 0) {
          R.initiality_computed = false;
          return;
        }
        if (a == A.num_objects()) {
          NatTransformation cand = t;
          try {
            validate_nat(cand);
          } catch (const Error&) {
            return;
          }
          thetas.push_back(cand);
          return;
        }
        for (int c : X.hom(H.obj_map[a], L2.obj_map[F.obj_map[a]])) {
          if (p.p.mor_map[c] != alpha.component[a]) continue;
          t.component[a] = c;
          go(a + 1);
          t.component[a] = -1;
        }
      };
      go(0);
    }
    for (auto& theta2 : thetas) {
      ++competitors;
      // unique nu : L => L2 vertical with (nu F) . theta = theta2
      int count = 0;
      std::vector<int> nu(B.num_objects(), -1);
      std::function<void(int)> pick = [&](int b) {
        if (b == B.num_objects()) {
          NatTransformation n{L, L2, nu};
          try {
            validate_nat(n);
          } catch (const Error&) {
            return;
          }
          for (int a = 0; a < A.num_objects(); ++a)
            if (X.compose(nu[F.obj_map[a]], R.comparison.component[a]) != theta2.component[a])
              return;
          ++count;
          return;
        }
        for (int c : X.hom(L.obj_map[b], L2.obj_map[b])) {
          if (p.p.mor_map[c] != Y.identity(K.obj_map[b])) continue;
          nu[b] = c;
          pick(b + 1);
          nu[b] = -1;
        }
      };
      pick(0);
      if (count != 1) R.initial = false;
    }
  }
  R.competing_lifts = competitors;
  return R;
}

// ---------------------------------------------------------------------------
// Fibers and relative adjunctions
// ---------------------------------------------------------------------------

SubcatResult fiber_category(const CatFunctor& p, int i) {
  const FinCategory& X = *p.source;
  const FinCategory& I = *p.target;
  std::vector<int> objs, mors;
  for (int x = 0; x < X.num_objects(); ++x)
    if (p.obj_map[x] == i) objs.push_back(x);
  for (int f = 0; f < X.num_morphisms(); ++f)
    if (p.mor_map[f] == I.identity(i)) mors.push_back(f);
  return subcategory(p.source, objs, mors, X.name + "|" + I.obj_names[i]);
}

CatFunctor pushforward_functor(const FibrationAnalysis& fib, int base_mor,
                               const SubcatResult& fiber_src, const SubcatResult& fiber_tgt) {
  const FinCategory& X = *fib.p.source;
  const FinCategory& I = *fib.p.target;
  int j = I.tgt(base_mor);
  CatFunctor K{fiber_src.cat, fiber_tgt.cat, {}, {}};
  K.obj_map.resize(fiber_src.cat->num_objects());
  K.mor_map.resize(fiber_src.cat->num_morphisms());
  for (int o = 0; o < fiber_src.cat->num_objects(); ++o) {
    int x = fiber_src.obj_of[o];
    int lf = cocartesian_lift(fib, x, base_mor);
    int idx = fiber_tgt.obj_back[X.tgt(lf)];
    if (idx < 0) fail(Err::ValidationError, "pushforward left the target fiber");
    K.obj_map[o] = idx;
  }
  for (int m = 0; m < fiber_src.cat->num_morphisms(); ++m) {
    int v = fiber_src.mor_of[m];
    int x = X.src(v), x2 = X.tgt(v);
    int lx = cocartesian_lift(fib, x, base_mor);
    int lx2 = cocartesian_lift(fib, x2, base_mor);
    int want = X.compose(lx2, v);
    int found = -1;
    for (int u : X.hom(X.tgt(lx), X.tgt(lx2)))
      if (fib.p.mor_map[u] == I.identity(j) && X.compose(u, lx) == want) {
        found = u;
        break;  // unique by cocartesianness of lx
      }
    if (found < 0) fail(Err::ValidationError, "pushforward filler missing");
    K.mor_map[m] = fiber_tgt.mor_back[found];
    if (K.mor_map[m] < 0) fail(Err::ValidationError, "pushforward filler left the fiber");
  }
  validate_functor(K);
  return K;
}

void validate_relative_adjunction(const RelativeAdjunction& rel) {
  require_adjunction(rel.adj, "relative adjunction");
  const FinCategory& I = *rel.base;
  if (!functors_equal(compose_functors(rel.pB, rel.adj.left), rel.pA) ||
      !functors_equal(compose_functors(rel.pA, rel.adj.right), rel.pB))
    fail(Err::NotOverBase, "functors not over the base");
  for (size_t a = 0; a < rel.adj.unit.component.size(); ++a)
    if (rel.pA.mor_map[rel.adj.unit.component[a]] !=
        I.identity(rel.pA.obj_map[static_cast<int>(a)]))
      fail(Err::NotOverBase, "unit component escapes the fiber");
  for (size_t b = 0; b < rel.adj.counit.component.size(); ++b)
    if (rel.pB.mor_map[rel.adj.counit.component[b]] !=
        I.identity(rel.pB.obj_map[static_cast<int>(b)]))
      fail(Err::NotOverBase, "counit component escapes the fiber");
}

GlueReport glue_fiberwise_adjoints(const FibrationAnalysis& pA, const FibrationAnalysis& pB,
                                   const CatFunctor& F, const std::vector<Adjunction>& fiber_adjs,
                                   const Caps& caps) {
  (void)caps;
  if (!pA.is_fibration || !pB.is_fibration)
    fail(Err::HypothesisFailed, "glue_fiberwise_adjoints needs fibrations");
  if (!functors_equal(compose_functors(pB.p, F), pA.p))
    fail(Err::NotOverBase, "F is not over the base");
  auto creport = check_cocartesian_functor(pA, pB, F, identity_functor(pA.p.target));
  if (!creport.cocartesian) fail(Err::HypothesisFailed, "F is not a cocartesian functor");
  const FinCategory& I = *pA.p.target;
  const FinCategory& A = *pA.p.source;
  const FinCategory& B = *pB.p.source;
  if (static_cast<int>(fiber_adjs.size()) != I.num_objects())
    fail(Err::FiberAdjointMissing, "expected one adjunction per base object");

  std::vector<SubcatResult> fibA, fibB;
  for (int i = 0; i < I.num_objects(); ++i) {
    fibA.push_back(fiber_category(pA.p, i));
    fibB.push_back(fiber_category(pB.p, i));
  }
  // The given fiber adjunction must have the restriction of F as its left leg.
  for (int i = 0; i < I.num_objects(); ++i) {
    require_adjunction(fiber_adjs[i], "fiber adjunction at " + I.obj_names[i]);
    CatFunctor Fi{fibA[i].cat, fibB[i].cat, {}, {}};
    for (int o = 0; o < fibA[i].cat->num_objects(); ++o)
      Fi.obj_map.push_back(fibB[i].obj_back[F.obj_map[fibA[i].obj_of[o]]]);
    for (int m = 0; m < fibA[i].cat->num_morphisms(); ++m)
      Fi.mor_map.push_back(fibB[i].mor_back[F.mor_map[fibA[i].mor_of[m]]]);
    if (!functors_equal(Fi, fiber_adjs[i].left))
      fail(Err::FiberAdjointMissing,
           "fiber adjunction at " + I.obj_names[i] + " does not restrict F");
  }

  // Assemble the total right adjoint from the fiber data.
  GlueReport R;
  CatFunctor U{pB.p.source, pA.p.source, {}, {}};
  U.obj_map.assign(B.num_objects(), -1);
  U.mor_map.assign(B.num_morphisms(), -1);
  std::vector<int> eps(B.num_objects(), -1);  // counit components in B
  for (int b = 0; b < B.num_objects(); ++b) {
    int i = pB.p.obj_map[b];
    int bf = fibB[i].obj_back[b];
    U.obj_map[b] = fibA[i].obj_of[fiber_adjs[i].right.obj_map[bf]];
    eps[b] = fibB[i].mor_of[fiber_adjs[i].counit.component[bf]];
  }
  for (int g = 0; g < B.num_morphisms(); ++g) {
    int b = B.src(g), b2 = B.tgt(g);
    int want = B.compose(g, eps[b]);
    int found = -1;
    for (int u : A.hom(U.obj_map[b], U.obj_map[b2]))
      if (B.compose(eps[b2], F.mor_map[u]) == want) {
        if (found >= 0)
          fail(Err::ValidationError, "glued adjoint morphism not unique at " + B.mor_names[g]);
        found = u;
      }
    if (found < 0)
      fail(Err::FiberAdjointMissing, "no glued adjoint morphism for " + B.mor_names[g]);
    U.mor_map[g] = found;
  }
  validate_functor(U);
  Adjunction adj;
  adj.left = F;
  adj.right = U;
  adj.counit = NatTransformation{compose_functors(F, U), identity_functor(pB.p.source), eps};
  adj.unit = NatTransformation{identity_functor(pA.p.source), compose_functors(U, F), {}};
  adj.unit.component.assign(A.num_objects(), -1);
  for (int a = 0; a < A.num_objects(); ++a) {
    int Fa = F.obj_map[a];
    int found = -1;
    for (int u : A.hom(a, U.obj_map[Fa]))
      if (B.compose(eps[Fa], F.mor_map[u]) == B.identity(Fa)) {
        if (found >= 0) fail(Err::ValidationError, "glued unit not unique");
        found = u;
      }
    if (found < 0) fail(Err::FiberAdjointMissing, "no glued unit at " + A.obj_names[a]);
    adj.unit.component[a] = found;
  }
  require_adjunction(adj, "glued relative adjunction");
  R.rel.base = pA.p.target;
  R.rel.pA = pA.p;
  R.rel.pB = pB.p;
  R.rel.adj = adj;
  R.rel.functors_over_base = functors_equal(compose_functors(pA.p, U), pB.p);
  R.rel.unit_over_base = true;
  for (int a = 0; a < A.num_objects(); ++a)
    if (pA.p.mor_map[adj.unit.component[a]] != I.identity(pA.p.obj_map[a]))
      R.rel.unit_over_base = false;
  R.rel.counit_over_base = true;
  for (int b = 0; b < B.num_objects(); ++b)
    if (pB.p.mor_map[eps[b]] != I.identity(pB.p.obj_map[b])) R.rel.counit_over_base = false;
  validate_relative_adjunction(R.rel);

  // Restriction to each fiber recovers the given adjoint exactly.
  R.fibers_recovered = true;
  for (int i = 0; i < I.num_objects(); ++i) {
    for (int o = 0; o < fibB[i].cat->num_objects(); ++o)
      if (U.obj_map[fibB[i].obj_of[o]] != fibA[i].obj_of[fiber_adjs[i].right.obj_map[o]])
        R.fibers_recovered = false;
    for (int m = 0; m < fibB[i].cat->num_morphisms(); ++m)
      if (U.mor_map[fibB[i].mor_of[m]] != fibA[i].mor_of[fiber_adjs[i].right.mor_map[m]])
        R.fibers_recovered = false;
  }

  // Cocartesianness of U versus per-base-morphism adjointability.
  auto ucheck = check_cocartesian_functor(pB, pA, U, identity_functor(pA.p.target));
  R.right_adjoint_cocartesian = ucheck.cocartesian;
  R.pushforward_adjointable.assign(I.num_morphisms(), 0);
  bool all_adjointable = true;
  for (int k = 0; k < I.num_morphisms(); ++k) {
    int i = I.src(k), j = I.tgt(k);
    auto kA = pushforward_functor(pA, k, fibA[i], fibA[j]);
    auto kB = pushforward_functor(pB, k, fibB[i], fibB[j]);
    // canonical filler c_x : kB(F_i x) -> F_j(kA x), the unique vertical
    // comparison between the chosen lifts
    NatTransformation filler{compose_functors(kB, fiber_adjs[i].left),
                             compose_functors(fiber_adjs[j].left, kA), {}};
    filler.component.resize(fibA[i].cat->num_objects());
    bool filler_ok = true;
    for (int o = 0; o < fibA[i].cat->num_objects() && filler_ok; ++o) {
      int x = fibA[i].obj_of[o];
      int lA = cocartesian_lift(pA, x, k);
      int lB = cocartesian_lift(pB, F.obj_map[x], k);
      int flA = F.mor_map[lA];
      int found = -1;
      for (int u : B.hom(B.tgt(lB), F.obj_map[A.tgt(lA)]))
        if (pB.p.mor_map[u] == I.identity(j) && B.compose(u, lB) == flA) {
          found = u;
          break;
        }
      if (found < 0) {
        filler_ok = false;
        break;
      }
      filler.component[o] = fibB[j].mor_back[found];
      if (filler.component[o] < 0) filler_ok = false;
    }
    bool k_adjointable = false;
    if (filler_ok) {
      try {
        auto m = mate_right_of_left(kA, kB, fiber_adjs[i], fiber_adjs[j], filler);
        k_adjointable = m.invertible;
      } catch (const Error&) {
        k_adjointable = false;
      }
    }
    R.pushforward_adjointable[k] = k_adjointable ? 1 : 0;
    if (!k_adjointable) all_adjointable = false;
  }
  R.equivalence_holds = (R.right_adjoint_cocartesian == all_adjointable);
  return R;
}

std::vector<Adjunction> split_relative_adjoint(const RelativeAdjunction& rel, const Caps& caps) {
  (void)caps;
  validate_relative_adjunction(rel);
  const FinCategory& I = *rel.base;
  std::vector<Adjunction> out;
  for (int i = 0; i < I.num_objects(); ++i) {
    auto fa = fiber_category(rel.pA, i);
    auto fb = fiber_category(rel.pB, i);
    Adjunction adj;
    adj.left = CatFunctor{fa.cat, fb.cat, {}, {}};
    adj.right = CatFunctor{fb.cat, fa.cat, {}, {}};
    for (int o = 0; o < fa.cat->num_objects(); ++o)
      adj.left.obj_map.push_back(fb.obj_back[rel.adj.left.obj_map[fa.obj_of[o]]]);
    for (int m = 0; m < fa.cat->num_morphisms(); ++m)
      adj.left.mor_map.push_back(fb.mor_back[rel.adj.left.mor_map[fa.mor_of[m]]]);
    for (int o = 0; o < fb.cat->num_objects(); ++o)
      adj.right.obj_map.push_back(fa.obj_back[rel.adj.right.obj_map[fb.obj_of[o]]]);
    for (int m = 0; m < fb.cat->num_morphisms(); ++m)
      adj.right.mor_map.push_back(fa.mor_back[rel.adj.right.mor_map[fb.mor_of[m]]]);
    adj.unit = NatTransformation{identity_functor(fa.cat),
                                 compose_functors(adj.right, adj.left), {}};
    for (int o = 0; o < fa.cat->num_objects(); ++o)
      adj.unit.component.push_back(fa.mor_back[rel.adj.unit.component[fa.obj_of[o]]]);
    adj.counit = NatTransformation{compose_functors(adj.left, adj.right),
                                   identity_functor(fb.cat), {}};
    for (int o = 0; o < fb.cat->num_objects(); ++o)
      adj.counit.component.push_back(fb.mor_back[rel.adj.counit.component[fb.obj_of[o]]]);
    require_adjunction(adj, "fiber restriction at " + I.obj_names[i]);
    out.push_back(std::move(adj));
  }
  return out;
}

RelativeAdjunction base_change_relative_adjunction(const RelativeAdjunction& rel,
                                                   const CatFunctor& t, const Caps& caps) {
  validate_relative_adjunction(rel);
  if (!FinCategory::same_presentation(*t.target, *rel.base))
    fail(Err::EndpointMismatch, "base change target");
  auto PA = pullback_category(t, rel.pA, caps);
  auto PB = pullback_category(t, rel.pB, caps);
  RelativeAdjunction out;
  out.base = t.source;
  out.pA = PA.pr0;
  out.pB = PB.pr0;
  const FinCategory& Ip = *t.source;
  auto lift_functor = [&](const CatFunctor& G, const PullbackResult& src,
                          const PullbackResult& dst) {
    // G on the second legs, identity on the first
    CatFunctor H{src.cat, dst.cat, {}, {}};
    for (auto& op : src.obj_pairs) {
      int o = dst.find_obj(op.first, G.obj_map[op.second]);
      if (o < 0) fail(Err::ValidationError, "base change misses object");
      H.obj_map.push_back(o);
    }
    for (auto& mp : src.mor_pairs) {
      int m = dst.find_mor(mp.first, G.mor_map[mp.second]);
      if (m < 0) fail(Err::ValidationError, "base change misses morphism");
      H.mor_map.push_back(m);
    }
    validate_functor(H);
    return H;
  };
  out.adj.left = lift_functor(rel.adj.left, PA, PB);
  out.adj.right = lift_functor(rel.adj.right, PB, PA);
  out.adj.unit = NatTransformation{identity_functor(PA.cat),
                                   compose_functors(out.adj.right, out.adj.left), {}};
  for (auto& op : PA.obj_pairs) {
    int m = PA.find_mor(Ip.identity(op.first), rel.adj.unit.component[op.second]);
    if (m < 0) fail(Err::ValidationError, "base change misses unit component");
    out.adj.unit.component.push_back(m);
  }
  out.adj.counit = NatTransformation{compose_functors(out.adj.left, out.adj.right),
                                     identity_functor(PB.cat), {}};
  for (auto& op : PB.obj_pairs) {
    int m = PB.find_mor(Ip.identity(op.first), rel.adj.counit.component[op.second]);
    if (m < 0) fail(Err::ValidationError, "base change misses counit component");
    out.adj.counit.component.push_back(m);
  }
  require_adjunction(out.adj, "base-changed adjunction");
  out.functors_over_base = functors_equal(compose_functors(out.pB, out.adj.left), out.pA) &&
                           functors_equal(compose_functors(out.pA, out.adj.right), out.pB);
  out.unit_over_base = true;
  for (size_t a = 0; a < out.adj.unit.component.size(); ++a)
    if (out.pA.mor_map[out.adj.unit.component[a]] !=
        Ip.identity(out.pA.obj_map[static_cast<int>(a)]))
      out.unit_over_base = false;
  out.counit_over_base = true;
  for (size_t b = 0; b < out.adj.counit.component.size(); ++b)
    if (out.pB.mor_map[out.adj.counit.component[b]] !=
        Ip.identity(out.pB.obj_map[static_cast<int>(b)]))
      out.counit_over_base = false;
  validate_relative_adjunction(out);
  return out;
}

bool fibration_definition_consistent(const CatFunctor& p, const Caps& caps) {
  // (ev0, p_*) : Arr(X) -> X x_B Arr(B) has a fully-faithful left adjoint iff
  // the elementwise analysis says "fibration".
  auto elementwise = analyze_fibration(p);
  auto arrX = arrow_category(p.source, caps);
  auto arrB = arrow_category(p.target, caps);
  auto XB = pullback_category(p, arrB.ev0, caps);
  CatFunctor cmp{arrX.cat, XB.cat, {}, {}};
  for (int f = 0; f < arrX.cat->num_objects(); ++f) {
    int o = XB.find_obj(p.source->src(f), p.mor_map[f]);
    if (o < 0) return false;
    cmp.obj_map.push_back(o);
  }
  for (int m = 0; m < arrX.cat->num_morphisms(); ++m) {
    auto [u, v] = arrX.mor_pairs[m];
    int sq = arrB.find_mor(p.mor_map[arrX.cat->src(m)], p.mor_map[u], p.mor_map[v],
                           p.mor_map[arrX.cat->tgt(m)]);
    if (sq < 0) return false;
    int mm = XB.find_mor(u, sq);
    if (mm < 0) return false;
    cmp.mor_map.push_back(mm);
  }
  validate_functor(cmp);
  auto found = search_adjoint(cmp, AdjointSide::Left, caps);
  bool ff_left = found.adj.has_value() && check_adjunction(*found.adj).unit_invertible;
  return ff_left == elementwise.is_fibration;
}

}  // namespace catena
