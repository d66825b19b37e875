#include "catena/envelope.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "catena/fibration.hpp"

namespace catena {

int Envelope::find_string(int a, int b, const EnvString& s) const {
  const auto& lst = strings[a * source->num_objects() + b];
  for (size_t i = 0; i < lst.size(); ++i)
    if (lst[i] == s) return static_cast<int>(i);
  return -1;
}

int Envelope::singleton(int a, int b, int one_cell) const {
  return find_string(a, b, EnvString{{a, b}, {one_cell}});
}

int Envelope::empty_string(int a) const { return find_string(a, a, EnvString{{a}, {}}); }

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};
using CellIndex = std::unordered_map<std::vector<int>, int, VecHash>;

std::vector<int> cell_key(const EnvTwoCell& c) {
  std::vector<int> k = {c.src, c.tgt, c.shape.n, c.shape.m};
  k.insert(k.end(), c.shape.values.begin(), c.shape.values.end());
  k.insert(k.end(), c.components.begin(), c.components.end());
  return k;
}

// left-normalized composite of the 1-cells of a string segment
int segment_composite(const TwoCat& A, const EnvString& s, int lo, int hi) {
  std::vector<int> vs(s.verts.begin() + lo, s.verts.begin() + hi + 1);
  std::vector<int> cs(s.cells.begin() + lo, s.cells.begin() + hi);
  return composite_one_cells(A, vs, cs);
}

std::string string_name(const TwoCat& A, const EnvString& s) {
  if (s.cells.empty()) return "<>" + A.obj_names[s.verts[0]];
  std::string nm = "<";
  for (size_t i = 0; i < s.cells.size(); ++i) {
    if (i) nm += ".";
    nm += A.hom_at(s.verts[i], s.verts[i + 1]).obj_names[s.cells[i]];
    nm += "@" + A.obj_names[s.verts[i + 1]];
  }
  return nm + ">";
}

EnvString concat_strings(const EnvString& f, const EnvString& g) {
  EnvString out;
  out.verts = f.verts;
  out.verts.insert(out.verts.end(), g.verts.begin() + 1, g.verts.end());
  out.cells = f.cells;
  out.cells.insert(out.cells.end(), g.cells.begin(), g.cells.end());
  return out;
}

}  // namespace

Envelope build_envelope(const TwoCatPtr& A, int cap, const Caps& caps) {
  if (cap < 3) fail(Err::HypothesisFailed, "envelope cap must be at least 3");
  Envelope E;
  E.source = A;
  E.cap = cap;
  const int n = A->num_objects();
  E.strings.assign(n * n, {});
  E.cells.assign(n * n, {});

  for (int a = 0; a < n; ++a) {
    std::vector<int> verts = {a}, cells;
    std::function<void(int)> grow = [&](int len) {
      int at = verts.back();
      E.strings[a * n + at].push_back(EnvString{verts, cells});
      if (len == cap) return;
      for (int next = 0; next < n; ++next) {
        const FinCategory& H = A->hom_at(at, next);
        for (int f = 0; f < H.num_objects(); ++f) {
          verts.push_back(next);
          cells.push_back(f);
          grow(len + 1);
          verts.pop_back();
          cells.pop_back();
        }
      }
    };
    grow(0);
  }
  long long total_strings = 0;
  for (auto& v : E.strings) total_strings += static_cast<long long>(v.size());
  if (total_strings > caps.derived_objects) fail(Err::SizeExceeded, "envelope string count");

  TwoCatBuilder b;
  b.name = "Env(" + A->name + ")";
  b.objects = A->obj_names;
  b.init(n);
  b.partial = true;
  b.weight_cap = cap;
  b.cell_weight.assign(n * n, {});
  std::vector<CellIndex> indexes(n * n);
  Caps local = caps;
  local.simplex_rank = std::max(caps.simplex_rank, cap);

  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const auto& strs = E.strings[a * n + c];
      auto& cls = E.cells[a * n + c];
      CellIndex& index = indexes[a * n + c];
      CatBuilder cb("EnvHom(" + A->obj_names[a] + "," + A->obj_names[c] + ")");
      for (auto& s : strs) {
        cb.objects.push_back(string_name(*A, s));
        b.cell_weight[a * n + c].push_back(s.length());
      }
      std::vector<int> idents(strs.size(), -1);
      for (size_t si = 0; si < strs.size(); ++si)
        for (size_t ti = 0; ti < strs.size(); ++ti) {
          const EnvString& s = strs[si];
          const EnvString& t = strs[ti];
          for (auto& shape :
               enumerate_simplex_maps(t.length(), s.length(), SimplexFilter::Active, local)) {
            bool vc = true;
            for (int i = 0; i <= shape.n && vc; ++i)
              if (t.verts[i] != s.verts[shape.values[i]]) vc = false;
            if (!vc) continue;
            std::vector<std::vector<int>> choices(t.length());
            bool any = true;
            for (int i = 1; i <= t.length() && any; ++i) {
              int comp = segment_composite(*A, s, shape.values[i - 1], shape.values[i]);
              choices[i - 1] = A->hom_at(t.verts[i - 1], t.verts[i]).hom(comp, t.cells[i - 1]);
              if (choices[i - 1].empty()) any = false;
            }
            if (!any) continue;
            std::vector<int> pick;
            std::function<void(int)> emit = [&](int slot) {
              if (slot == t.length()) {
                EnvTwoCell cell;
                cell.src = static_cast<int>(si);
                cell.tgt = static_cast<int>(ti);
                cell.shape = shape;
                cell.components = pick;
                int id = static_cast<int>(cb.mors.size());
                cb.mors.push_back("c" + std::to_string(id));
                cb.srcs.push_back(cell.src);
                cb.tgts.push_back(cell.tgt);
                index[cell_key(cell)] = id;
                if (si == ti && shape == identity_simplex_map(s.length())) {
                  bool isid = true;
                  for (int i = 0; i < t.length(); ++i)
                    if (pick[i] != A->hom_at(t.verts[i], t.verts[i + 1]).identity(t.cells[i]))
                      isid = false;
                  if (isid) idents[si] = id;
                }
                cls.push_back(std::move(cell));
                return;
              }
              for (int c2 : choices[slot]) {
                pick.push_back(c2);
                emit(slot + 1);
                pick.pop_back();
              }
            };
            emit(0);
          }
        }
      if (static_cast<long long>(cb.mors.size()) > caps.enum_candidates)
        fail(Err::SizeExceeded, "envelope hom morphism count");
      // vertical composition: shapes compose, components paste along segments
      std::vector<std::vector<int>> by_src(strs.size());
      for (size_t m = 0; m < cls.size(); ++m) by_src[cls[m].src].push_back(static_cast<int>(m));
      std::vector<std::array<int, 3>> comps;
      for (size_t m1 = 0; m1 < cls.size(); ++m1)
        for (int m2i : by_src[cls[m1].tgt]) {
          size_t m2 = static_cast<size_t>(m2i);
          const EnvTwoCell& sigma = cls[m1];
          const EnvTwoCell& tau = cls[m2];
          EnvTwoCell out;
          out.src = sigma.src;
          out.tgt = tau.tgt;
          out.shape = compose_simplex(sigma.shape, tau.shape);
          const EnvString& t = strs[sigma.tgt];
          const EnvString& u = strs[tau.tgt];
          out.components.resize(u.length());
          for (int j = 1; j <= u.length(); ++j) {
            int lo = tau.shape.values[j - 1], hi = tau.shape.values[j];
            int base_v = u.verts[j - 1];
            int acc;
            if (lo == hi) {
              acc = A->hom_at(base_v, base_v).identity(A->id_one_cell[base_v]);
            } else {
              acc = sigma.components[lo];
              int mid = t.verts[lo + 1];
              for (int i = lo + 1; i < hi; ++i) {
                int nxt = t.verts[i + 1];
                acc = A->compose2(base_v, mid, nxt, sigma.components[i], acc);
                if (acc < 0) fail(Err::CapOverflow, "envelope vertical composite");
                mid = nxt;
              }
            }
            out.components[j - 1] =
                A->hom_at(u.verts[j - 1], u.verts[j]).compose(tau.components[j - 1], acc);
          }
          auto it = index.find(cell_key(out));
          if (it == index.end()) fail(Err::ValidationError, "envelope composition left the hom");
          comps.push_back({static_cast<int>(m2), static_cast<int>(m1), it->second});
        }
      b.hom[a * n + c] =
          FinCategory::make(cb.name, cb.objects, cb.mors, cb.srcs, cb.tgts, idents, comps);
    }
  for (int a = 0; a < n; ++a) b.id_one_cell[a] = E.empty_string(a);

  // horizontal composition: concatenation and ordinal sums, capped
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) {
        const auto& sAB = E.strings[a * n + c];
        const auto& sBC = E.strings[c * n + d];
        auto& t1 = b.one[(a * n + c) * n + d];
        auto& t2 = b.two[(a * n + c) * n + d];
        t1.assign(sBC.size() * sAB.size(), -1);
        for (size_t g = 0; g < sBC.size(); ++g)
          for (size_t f = 0; f < sAB.size(); ++f) {
            if (sBC[g].length() + sAB[f].length() > cap) continue;
            int idx = E.find_string(a, d, concat_strings(sAB[f], sBC[g]));
            if (idx < 0) fail(Err::ValidationError, "concatenation missing");
            t1[g * sAB.size() + f] = idx;
          }
        const auto& cAB = E.cells[a * n + c];
        const auto& cBC = E.cells[c * n + d];
        const CellIndex& acindex = indexes[a * n + d];
        t2.assign(cBC.size() * cAB.size(), -1);
        for (size_t bm = 0; bm < cBC.size(); ++bm)
          for (size_t am = 0; am < cAB.size(); ++am) {
            const EnvTwoCell& right = cBC[bm];
            const EnvTwoCell& left = cAB[am];
            int ssum = sAB[left.src].length() + sBC[right.src].length();
            int tsum = sAB[left.tgt].length() + sBC[right.tgt].length();
            if (ssum > cap || tsum > cap) continue;
            EnvTwoCell out;
            out.src = E.find_string(a, d, concat_strings(sAB[left.src], sBC[right.src]));
            out.tgt = E.find_string(a, d, concat_strings(sAB[left.tgt], sBC[right.tgt]));
            out.shape = ordinal_sum(left.shape, right.shape);
            out.components = left.components;
            out.components.insert(out.components.end(), right.components.begin(),
                                  right.components.end());
            auto it = acindex.find(cell_key(out));
            if (it == acindex.end())
              fail(Err::ValidationError, "horizontal composite cell missing");
            t2[bm * cAB.size() + am] = it->second;
          }
      }
  E.env = b.build();

  // canonical comparison cells
  E.delta_cell.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    EnvTwoCell want;
    want.src = E.empty_string(a);
    want.tgt = E.singleton(a, a, A->id_one_cell[a]);
    want.shape = validate_simplex_map(1, 0, {0, 0});
    want.components = {A->hom_at(a, a).identity(A->id_one_cell[a])};
    auto it = indexes[a * n + a].find(cell_key(want));
    if (it == indexes[a * n + a].end()) fail(Err::ValidationError, "canonical delta cell missing");
    E.delta_cell[a] = it->second;
  }
  E.gamma_cell.assign(n * n * n, {});
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) {
        const FinCategory& AB = A->hom_at(a, c);
        const FinCategory& BC = A->hom_at(c, d);
        auto& gam = E.gamma_cell[(a * n + c) * n + d];
        gam.assign(static_cast<size_t>(BC.num_objects()) * AB.num_objects(), -1);
        for (int g = 0; g < BC.num_objects(); ++g)
          for (int f = 0; f < AB.num_objects(); ++f) {
            int gf = A->compose1(a, c, d, g, f);
            EnvTwoCell want;
            want.src = E.find_string(a, d, EnvString{{a, c, d}, {f, g}});
            want.tgt = E.singleton(a, d, gf);
            want.shape = validate_simplex_map(1, 2, {0, 2});
            want.components = {A->hom_at(a, d).identity(gf)};
            auto it = indexes[a * n + d].find(cell_key(want));
            if (it == indexes[a * n + d].end())
              fail(Err::ValidationError, "canonical gamma cell missing");
            gam[static_cast<size_t>(g) * AB.num_objects() + f] = it->second;
          }
      }
  return E;
}

LaxFunctor iota(const Envelope& E) {
  const TwoCat& A = *E.source;
  const int n = A.num_objects();
  LaxFunctor F;
  F.source = E.source;
  F.target = E.env;
  F.obj_map.resize(n);
  for (int a = 0; a < n; ++a) F.obj_map[a] = a;
  F.hom_map.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const FinCategory& H = A.hom_at(a, c);
      const auto& cls = E.cells[a * n + c];
      CatFunctor hf{A.hom_ptr(a, c), E.env->hom_ptr(a, c), {}, {}};
      hf.obj_map.resize(H.num_objects());
      hf.mor_map.resize(H.num_morphisms());
      for (int f = 0; f < H.num_objects(); ++f) hf.obj_map[f] = E.singleton(a, c, f);
      for (int m2 = 0; m2 < H.num_morphisms(); ++m2) {
        int found = -1;
        for (size_t m = 0; m < cls.size(); ++m)
          if (cls[m].src == hf.obj_map[H.src(m2)] && cls[m].tgt == hf.obj_map[H.tgt(m2)] &&
              cls[m].shape == identity_simplex_map(1) && cls[m].components[0] == m2)
            found = static_cast<int>(m);
        if (found < 0) fail(Err::ValidationError, "iota misses a 2-cell image");
        hf.mor_map[m2] = found;
      }
      validate_functor(hf);
      F.hom_map[a * n + c] = std::move(hf);
    }
  F.delta = E.delta_cell;
  F.gamma = E.gamma_cell;
  return F;
}

StrictTwoFunctor lambda_functor(const Envelope& E) {
  const TwoCat& A = *E.source;
  const int n = A.num_objects();
  StrictTwoFunctor L;
  L.source = E.env;
  L.target = E.source;
  L.obj_map.resize(n);
  for (int a = 0; a < n; ++a) L.obj_map[a] = a;
  L.hom_map.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const auto& strs = E.strings[a * n + c];
      const auto& cls = E.cells[a * n + c];
      CatFunctor hf{E.env->hom_ptr(a, c), A.hom_ptr(a, c), {}, {}};
      hf.obj_map.resize(strs.size());
      for (size_t s = 0; s < strs.size(); ++s)
        hf.obj_map[s] = segment_composite(A, strs[s], 0, strs[s].length());
      hf.mor_map.resize(cls.size());
      for (size_t m = 0; m < cls.size(); ++m) {
        const EnvTwoCell& cell = cls[m];
        const EnvString& t = strs[cell.tgt];
        if (t.length() == 0) {
          hf.mor_map[m] = A.hom_at(a, a).identity(A.id_one_cell[a]);
          continue;
        }
        int acc = cell.components[0];
        int base = t.verts[0];
        int mid = t.verts[1];
        for (int i = 1; i < t.length(); ++i) {
          int nxt = t.verts[i + 1];
          acc = A.compose2(base, mid, nxt, cell.components[i], acc);
          if (acc < 0) fail(Err::CapOverflow, "lambda pasting");
          mid = nxt;
        }
        hf.mor_map[m] = acc;
      }
      validate_functor(hf);
      L.hom_map[a * n + c] = std::move(hf);
    }
  return L;
}

Adjunction lambda_iota_hom_adjunction(const Envelope& E, int a, int b) {
  const TwoCat& A = *E.source;
  const int n = A.num_objects();
  auto lam = lambda_functor(E);
  auto io = iota(E);
  Adjunction adj;
  adj.left = lam.hom_map[a * n + b];
  adj.right = io.hom_map[a * n + b];
  adj.counit = identity_nat(identity_functor(A.hom_ptr(a, b)));
  adj.counit.source = compose_functors(adj.left, adj.right);
  adj.unit = NatTransformation{identity_functor(E.env->hom_ptr(a, b)),
                               compose_functors(adj.right, adj.left), {}};
  const auto& strs = E.strings[a * n + b];
  const auto& cls = E.cells[a * n + b];
  adj.unit.component.resize(strs.size(), -1);
  for (size_t s = 0; s < strs.size(); ++s) {
    int comp = segment_composite(A, strs[s], 0, strs[s].length());
    int tgt = E.singleton(a, b, comp);
    SimplexMap want = validate_simplex_map(1, strs[s].length(), {0, strs[s].length()});
    for (size_t m = 0; m < cls.size(); ++m)
      if (cls[m].src == static_cast<int>(s) && cls[m].tgt == tgt && cls[m].shape == want &&
          cls[m].components[0] == A.hom_at(a, b).identity(comp))
        adj.unit.component[s] = static_cast<int>(m);
    if (adj.unit.component[s] < 0) fail(Err::ValidationError, "lambda/iota unit missing");
  }
  require_adjunction(adj, "lambda -| iota homwise");
  return adj;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

// Classify-style extension of raw lax data to the envelope, without assuming
// coherence of the data; reports failure instead of throwing.
std::optional<StrictTwoFunctor> try_extend(const Envelope& E, const LaxFunctor& F) {
  const TwoCat& A = *E.source;
  const TwoCat& B = *F.target;
  const int n = A.num_objects();
  StrictTwoFunctor G;
  G.source = E.env;
  G.target = F.target;
  G.obj_map = F.obj_map;
  G.hom_map.resize(n * n);
  try {
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        const auto& strs = E.strings[a * n + c];
        const auto& cls = E.cells[a * n + c];
        CatFunctor hf{E.env->hom_ptr(a, c), B.hom_ptr(F.obj_map[a], F.obj_map[c]), {}, {}};
        hf.obj_map.resize(strs.size());
        for (size_t s = 0; s < strs.size(); ++s) {
          std::vector<int> vs(strs[s].verts.size()), cs(strs[s].cells.size());
          for (size_t i = 0; i < vs.size(); ++i) vs[i] = F.obj_map[strs[s].verts[i]];
          for (size_t i = 0; i < cs.size(); ++i)
            cs[i] =
                F.hom_map[strs[s].verts[i] * n + strs[s].verts[i + 1]].obj_map[strs[s].cells[i]];
          hf.obj_map[s] = composite_one_cells(B, vs, cs);
        }
        hf.mor_map.resize(cls.size());
        for (size_t m = 0; m < cls.size(); ++m) {
          const EnvTwoCell& cell = cls[m];
          const EnvString& s = strs[cell.src];
          const EnvString& t = strs[cell.tgt];
          if (t.length() == 0) {
            hf.mor_map[m] = lax_gamma_iterate(F, s.verts, s.cells);
            continue;
          }
          int acc = -1;
          int base = F.obj_map[t.verts[0]];
          for (int i = 1; i <= t.length(); ++i) {
            int lo = cell.shape.values[i - 1], hi = cell.shape.values[i];
            std::vector<int> segv(s.verts.begin() + lo, s.verts.begin() + hi + 1);
            std::vector<int> segc(s.cells.begin() + lo, s.cells.begin() + hi);
            int gi = lax_gamma_iterate(F, segv, segc);
            int av = t.verts[i - 1], bv = t.verts[i];
            int Fcomp = F.hom_map[av * n + bv].mor_map[cell.components[i - 1]];
            int slot = B.hom_at(F.obj_map[av], F.obj_map[bv]).compose(Fcomp, gi);
            if (i == 1) {
              acc = slot;
            } else {
              acc = B.compose2(base, F.obj_map[av], F.obj_map[bv], slot, acc);
              if (acc < 0) return std::nullopt;
            }
          }
          hf.mor_map[m] = acc;
        }
        validate_functor(hf);
        G.hom_map[a * n + c] = std::move(hf);
      }
  } catch (const Error&) {
    return std::nullopt;
  }
  return G;
}

}  // namespace

StrictTwoFunctor classify_lax_functor(const Envelope& E, const LaxFunctor& F) {
  if (!validate_lax_functor(F).ok) fail(Err::ValidationError, "classify: invalid lax functor");
  auto G = try_extend(E, F);
  if (!G) fail(Err::CapOverflow, "classify: extension left the target's cap");
  auto rep = validate_strict_two_functor(*G);
  if (!rep.ok)
    fail(Err::ValidationError, "classify produced an invalid strict functor: " +
                                   (rep.failures.empty() ? "?" : rep.failures[0]));
  return *G;
}

LaxFunctor restrict_strict_functor(const Envelope& E, const StrictTwoFunctor& G) {
  auto rep = validate_strict_two_functor(G);
  if (!rep.ok) fail(Err::ValidationError, "restrict: invalid strict functor");
  const TwoCat& A = *E.source;
  const int n = A.num_objects();
  auto io = iota(E);
  LaxFunctor F;
  F.source = E.source;
  F.target = G.target;
  F.obj_map = G.obj_map;
  F.hom_map.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      F.hom_map[a * n + c] = compose_functors(G.hom_map[a * n + c], io.hom_map[a * n + c]);
  F.delta.resize(n);
  for (int a = 0; a < n; ++a) F.delta[a] = G.hom_map[a * n + a].mor_map[E.delta_cell[a]];
  F.gamma.resize(n * n * n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) {
        const auto& gam = E.gamma_cell[(a * n + c) * n + d];
        auto& out = F.gamma[A.triple(a, c, d)];
        out.resize(gam.size());
        for (size_t i = 0; i < gam.size(); ++i)
          out[i] = gam[i] < 0 ? -1 : G.hom_map[a * n + d].mor_map[gam[i]];
      }
  auto lrep = validate_lax_functor(F);
  if (!lrep.ok)
    fail(Err::ValidationError,
         "restriction is not lax: " + (lrep.failures.empty() ? "?" : lrep.failures[0]));
  return F;
}

// ---------------------------------------------------------------------------
// Enumerations
// ---------------------------------------------------------------------------

namespace {

// All raw lax-functor-shaped tuples (object map, hom functors, delta, gamma),
// with no coherence filtering; the sink decides what to keep.
void enumerate_raw_lax_data(const TwoCatPtr& A, const TwoCatPtr& B, const Caps& caps,
                            const std::function<void(LaxFunctor&)>& sink) {
  const int n = A->num_objects();
  std::vector<int> omap(n, 0);
  long long budget = caps.enum_candidates;
  std::function<void(int)> objs = [&](int a) {
    if (a < n) {
      for (int img = 0; img < B->num_objects(); ++img) {
        omap[a] = img;
        objs(a + 1);
      }
      return;
    }
    std::vector<std::vector<CatFunctor>> homchoices(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        homchoices[x * n + y] =
            enumerate_functors(A->hom_ptr(x, y), B->hom_ptr(omap[x], omap[y]), caps);
        if (homchoices[x * n + y].empty()) return;
      }
    std::vector<int> hpick(n * n, 0);
    std::function<void(int)> homs = [&](int idx) {
      if (--budget < 0) fail(Err::SizeExceeded, "lax data enumeration");
      if (idx < n * n) {
        for (size_t k = 0; k < homchoices[idx].size(); ++k) {
          hpick[idx] = static_cast<int>(k);
          homs(idx + 1);
        }
        return;
      }
      LaxFunctor F;
      F.source = A;
      F.target = B;
      F.obj_map = omap;
      F.hom_map.resize(n * n);
      for (int i = 0; i < n * n; ++i) F.hom_map[i] = homchoices[i][hpick[i]];
      std::vector<std::vector<int>> dcands(n);
      for (int x = 0; x < n; ++x) {
        const FinCategory& H = B->hom_at(omap[x], omap[x]);
        dcands[x] =
            H.hom(B->id_one_cell[omap[x]], F.hom_map[x * n + x].obj_map[A->id_one_cell[x]]);
        if (dcands[x].empty()) return;
      }
      struct GEntry {
        int tri, slot;
        std::vector<int> cands;
      };
      std::vector<GEntry> gentries;
      for (int x2 = 0; x2 < n; ++x2)
        for (int y2 = 0; y2 < n; ++y2)
          for (int z2 = 0; z2 < n; ++z2) {
            const FinCategory& AB = A->hom_at(x2, y2);
            const FinCategory& BC = A->hom_at(y2, z2);
            for (int g = 0; g < BC.num_objects(); ++g)
              for (int f = 0; f < AB.num_objects(); ++f) {
                int gf = A->compose1(x2, y2, z2, g, f);
                if (gf < 0) continue;
                int src =
                    B->compose1(omap[x2], omap[y2], omap[z2], F.hom_map[y2 * n + z2].obj_map[g],
                                F.hom_map[x2 * n + y2].obj_map[f]);
                if (src < 0) return;  // image pair exceeds the target's cap
                int tgt = F.hom_map[x2 * n + z2].obj_map[gf];
                GEntry e;
                e.tri = A->triple(x2, y2, z2);
                e.slot = g * AB.num_objects() + f;
                e.cands = B->hom_at(omap[x2], omap[z2]).hom(src, tgt);
                if (e.cands.empty()) return;
                gentries.push_back(std::move(e));
              }
          }
      F.gamma.assign(n * n * n, {});
      for (int x2 = 0; x2 < n; ++x2)
        for (int y2 = 0; y2 < n; ++y2)
          for (int z2 = 0; z2 < n; ++z2)
            F.gamma[A->triple(x2, y2, z2)].assign(
                static_cast<size_t>(A->hom_at(y2, z2).num_objects()) *
                    A->hom_at(x2, y2).num_objects(),
                -1);
      F.delta.assign(n, -1);
      std::vector<int> dsel(n, 0);
      std::function<void(int)> deltas = [&](int x) {
        if (x < n) {
          for (size_t k = 0; k < dcands[x].size(); ++k) {
            dsel[x] = static_cast<int>(k);
            deltas(x + 1);
          }
          return;
        }
        for (int x2 = 0; x2 < n; ++x2) F.delta[x2] = dcands[x2][dsel[x2]];
        std::function<void(size_t)> gammas = [&](size_t gi) {
          if (--budget < 0) fail(Err::SizeExceeded, "lax data enumeration");
          if (gi == gentries.size()) {
            sink(F);
            return;
          }
          for (int cand : gentries[gi].cands) {
            F.gamma[gentries[gi].tri][gentries[gi].slot] = cand;
            gammas(gi + 1);
          }
          F.gamma[gentries[gi].tri][gentries[gi].slot] = -1;
        };
        gammas(0);
      };
      deltas(0);
    };
    homs(0);
  };
  objs(0);
}

}  // namespace

std::vector<LaxFunctor> enumerate_lax_functors(const TwoCatPtr& A, const TwoCatPtr& B,
                                               const Caps& caps) {
  std::vector<LaxFunctor> out;
  enumerate_raw_lax_data(A, B, caps, [&](LaxFunctor& F) {
    if (validate_lax_functor(F).ok) out.push_back(F);
  });
  return out;
}

std::vector<StrictTwoFunctor> enumerate_strict_functors_from_envelope(const Envelope& E,
                                                                      const TwoCatPtr& B,
                                                                      const Caps& caps) {
  std::vector<StrictTwoFunctor> out;
  enumerate_raw_lax_data(E.source, B, caps, [&](LaxFunctor& F) {
    auto ext = try_extend(E, F);
    if (ext && validate_strict_two_functor(*ext).ok) out.push_back(*ext);
  });
  return out;
}

// ---------------------------------------------------------------------------
// LaxSect checkers
// ---------------------------------------------------------------------------

LaxSectWitness check_local_right_adjoint_sections(const StrictTwoFunctor& F, const Caps& caps) {
  LaxSectWitness W;
  auto rep = validate_strict_two_functor(F);
  if (!rep.ok) {
    W.failure = "functor invalid";
    return W;
  }
  const int n = F.source->num_objects();
  std::vector<int> seen(F.target->num_objects(), 0);
  for (int x : F.obj_map) seen[x]++;
  W.objects_bijective = F.source->num_objects() == F.target->num_objects() &&
                        std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; });
  W.hom_adjoints.assign(n * n, std::nullopt);
  bool all = W.objects_bijective;
  if (!W.objects_bijective) W.failure = "object map not bijective";
  for (int a = 0; a < n && all; ++a)
    for (int b = 0; b < n && all; ++b) {
      auto found = search_adjoint(F.hom_map[a * n + b], AdjointSide::Right, caps);
      if (!found.adj || !check_adjunction(*found.adj).counit_invertible) {
        all = false;
        W.failure = "hom functor at (" + F.source->obj_names[a] + "," + F.source->obj_names[b] +
                    ") lacks a fully-faithful right adjoint";
        break;
      }
      W.hom_adjoints[a * n + b] = std::move(found.adj);
    }
  W.ok = all;
  return W;
}

SectionsTriangleReport check_commutes_with_sections(const StrictTwoFunctor& H,
                                                    const StrictTwoFunctor& F,
                                                    const StrictTwoFunctor& G, const Caps& caps) {
  SectionsTriangleReport R;
  if (!strict_two_functors_equal(compose_strict_two_functors(G, H), F))
    fail(Err::HypothesisFailed, "triangle does not commute strictly");
  auto WF = check_local_right_adjoint_sections(F, caps);
  auto WG = check_local_right_adjoint_sections(G, caps);
  if (!WF.ok || !WG.ok) fail(Err::HypothesisFailed, "legs lack local right adjoint sections");
  const int n = F.source->num_objects();
  const int m = G.source->num_objects();
  R.ok = true;
  R.unit_criterion = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Adjunction& adjF = *WF.hom_adjoints[a * n + b];
      int ha = H.obj_map[a], hb = H.obj_map[b];
      const Adjunction& adjG = *WG.hom_adjoints[ha * m + hb];
      auto T = identity_functor(F.target->hom_ptr(F.obj_map[a], F.obj_map[b]));
      auto mate = mate_right_of_left_strict(H.hom_map[a * n + b], T, adjF, adjG);
      if (!mate.invertible) {
        R.ok = false;
        R.failure = "hom square at (" + F.source->obj_names[a] + "," + F.source->obj_names[b] +
                    ") not adjointable";
      }
      // unit-whiskering criterion: eta^G at H(U_F(phi)) invertible for all phi
      const FinCategory& Yhom = *adjG.left.source;
      for (size_t phi = 0; phi < adjF.right.obj_map.size(); ++phi) {
        int y = H.hom_map[a * n + b].obj_map[adjF.right.obj_map[phi]];
        if (!Yhom.is_iso(adjG.unit.component[y])) R.unit_criterion = false;
      }
    }
  R.agree = R.ok == R.unit_criterion;
  return R;
}

// ---------------------------------------------------------------------------
// Equivalent characterizations
// ---------------------------------------------------------------------------

namespace {

// fiber functor X_n -> A_n induced by a strict 2-functor on path levels
CatFunctor level_functor(const StrictTwoFunctor& G, const SegalPresentation& PX,
                         const SegalPresentation& PA, int level) {
  const TwoCat& X = *G.source;
  const int n = X.num_objects();
  CatFunctor out{PX.fiber[level], PA.fiber[level], {}, {}};
  out.obj_map.resize(PX.fiber[level]->num_objects());
  for (int o = 0; o < PX.fiber[level]->num_objects(); ++o) {
    std::vector<int> nv(PX.path_vertices[level][o].size());
    std::vector<int> nc(PX.path_cells[level][o].size());
    for (size_t i = 0; i < nv.size(); ++i) nv[i] = G.obj_map[PX.path_vertices[level][o][i]];
    for (size_t i = 0; i < nc.size(); ++i) {
      int va = PX.path_vertices[level][o][i], vb = PX.path_vertices[level][o][i + 1];
      nc[i] = G.hom_map[va * n + vb].obj_map[PX.path_cells[level][o][i]];
    }
    int idx = PA.find_path(level, nv, nc);
    if (idx < 0) fail(Err::ValidationError, "level functor misses a path");
    out.obj_map[o] = idx;
  }
  out.mor_map.resize(PX.fiber[level]->num_morphisms());
  for (int mm = 0; mm < PX.fiber[level]->num_morphisms(); ++mm) {
    std::vector<int> comps(level);
    int o = PX.fiber[level]->src(mm);
    for (int i = 0; i < level; ++i) {
      int va = PX.path_vertices[level][o][i], vb = PX.path_vertices[level][o][i + 1];
      comps[i] = G.hom_map[va * n + vb].mor_map[PX.mor_components[level][mm][i]];
    }
    int idx = PA.find_level_morphism(level, out.obj_map[o],
                                     out.obj_map[PX.fiber[level]->tgt(mm)], comps);
    if (idx < 0) fail(Err::ValidationError, "level functor misses a tuple");
    out.mor_map[mm] = idx;
  }
  validate_functor(out);
  return out;
}

bool ff_right_adjoint_exists(const CatFunctor& F, const Caps& caps, Adjunction* out = nullptr) {
  auto found = search_adjoint(F, AdjointSide::Right, caps);
  if (!found.adj) return false;
  if (!check_adjunction(*found.adj).counit_invertible) return false;
  if (out) *out = *found.adj;
  return true;
}

}  // namespace

EquivalentCharacterizations check_equivalent_characterizations(const StrictTwoFunctor& F, int N,
                                                               const Caps& caps) {
  EquivalentCharacterizations R;
  auto PX = segal_fibers(F.source, N, caps);
  auto PA = segal_fibers(F.target, N, caps);
  std::vector<CatFunctor> lv;
  for (int k = 0; k <= N; ++k) lv.push_back(level_functor(F, PX, PA, k));

  // (5) hom-wise
  {
    auto W = check_local_right_adjoint_sections(F, caps);
    R.homwise = W.ok;
  }
  // (4) F_0 bijective + F_1 ff right adjoint
  {
    auto a0 = analyze_functor(lv[0]);
    R.zero_equiv_one_adjoint = a0.iso_on_objects && ff_right_adjoint_exists(lv[1], caps);
  }
  // (3) and (2): fiber adjoints + adjointable pushforward squares
  auto square_adjointable = [&](int base_mor, const Adjunction& an, const Adjunction& am) {
    const SimplexMap& al = PX.delta.map_of[base_mor];
    (void)al;
    auto mate = mate_right_of_left_strict(PX.action[base_mor], PA.action[base_mor], an, am);
    return mate.invertible;
  };
  {
    std::vector<std::optional<Adjunction>> adjs(N + 1);
    bool fibers_ok = true;
    for (int k = 0; k <= N && fibers_ok; ++k) {
      Adjunction a;
      if (ff_right_adjoint_exists(lv[k], caps, &a))
        adjs[k] = a;
      else
        fibers_ok = false;
    }
    if (fibers_ok) {
      bool inert_ok = true;
      const FinCategory& D = *PX.delta.delta;
      for (int k = 0; k < D.num_morphisms() && inert_ok; ++k) {
        if (!PX.delta.inert_base(k)) continue;
        const SimplexMap& al = PX.delta.map_of[k];
        if (!square_adjointable(k, *adjs[al.m], *adjs[al.n])) inert_ok = false;
      }
      R.all_fibers = inert_ok;
      // (3): only levels 0/1 and the two vertex inclusions
      int s_edge = PX.delta.find(validate_simplex_map(0, 1, {0}));
      int t_edge = PX.delta.find(validate_simplex_map(0, 1, {1}));
      R.low_fibers = square_adjointable(s_edge, *adjs[1], *adjs[0]) &&
                     square_adjointable(t_edge, *adjs[1], *adjs[0]);
    } else {
      R.all_fibers = false;
      // (3) needs only levels 0 and 1
      Adjunction a0, a1;
      bool ok = ff_right_adjoint_exists(lv[0], caps, &a0) &&
                ff_right_adjoint_exists(lv[1], caps, &a1);
      if (ok) {
        int s_edge = PX.delta.find(validate_simplex_map(0, 1, {0}));
        int t_edge = PX.delta.find(validate_simplex_map(0, 1, {1}));
        R.low_fibers =
            square_adjointable(s_edge, a1, a0) && square_adjointable(t_edge, a1, a0);
      } else {
        R.low_fibers = false;
      }
    }
  }
  // (1): relative ff right adjoint over the truncated base, inert-cocartesian
  {
    R.relative_adjoint = false;
    try {
      auto UX = unstraighten(PX, caps);
      auto UA = unstraighten(PA, caps);
      // total functor over the base
      CatFunctor T{UX.gr.total, UA.gr.total, {}, {}};
      T.obj_map.resize(UX.gr.total->num_objects());
      for (int o = 0; o < UX.gr.total->num_objects(); ++o) {
        auto [l, i] = UX.gr.obj_pairs[o];
        T.obj_map[o] = UA.gr.find_obj(l, lv[l].obj_map[i]);
      }
      T.mor_map.resize(UX.gr.total->num_morphisms());
      for (int mm = 0; mm < UX.gr.total->num_morphisms(); ++mm) {
        auto [k, phi] = UX.gr.mor_pairs[mm];
        auto [l, i] = UX.gr.obj_pairs[UX.gr.total->tgt(mm)];
        (void)i;
        T.mor_map[mm] = UA.gr.find_mor(T.obj_map[UX.gr.total->src(mm)], k, lv[l].mor_map[phi]);
        if (T.mor_map[mm] < 0) fail(Err::ValidationError, "total functor misses a morphism");
      }
      validate_functor(T);
      std::vector<Adjunction> fiber_adjs;
      bool ok = true;
      const FinCategory& Dop = *PX.delta.delta_op;
      for (int i = 0; i < Dop.num_objects() && ok; ++i) {
        auto fx = fiber_category(UX.gr.fib.p, i);
        auto fa = fiber_category(UA.gr.fib.p, i);
        CatFunctor Fi{fx.cat, fa.cat, {}, {}};
        for (int o = 0; o < fx.cat->num_objects(); ++o)
          Fi.obj_map.push_back(fa.obj_back[T.obj_map[fx.obj_of[o]]]);
        for (int m2 = 0; m2 < fx.cat->num_morphisms(); ++m2)
          Fi.mor_map.push_back(fa.mor_back[T.mor_map[fx.mor_of[m2]]]);
        validate_functor(Fi);
        Adjunction ai;
        if (!ff_right_adjoint_exists(Fi, caps, &ai))
          ok = false;
        else
          fiber_adjs.push_back(ai);
      }
      if (ok) {
        auto glued = glue_fiberwise_adjoints(UX.gr.fib, UA.gr.fib, T, fiber_adjs, caps);
        bool ff = check_adjunction(glued.rel.adj).counit_invertible;
        // U inert-cocartesian: lifts over inert base morphisms preserved
        bool inert_pres = true;
        const CatFunctor& U = glued.rel.adj.right;
        for (int m2 = 0; m2 < UA.gr.total->num_morphisms() && inert_pres; ++m2) {
          if (!UA.gr.fib.cocart[m2]) continue;
          int basem = UA.gr.fib.p.mor_map[m2];
          if (!PX.delta.inert_base(basem)) continue;
          if (!UX.gr.fib.cocart[U.mor_map[m2]]) inert_pres = false;
        }
        R.relative_adjoint = glued.rel.ok() && ff && inert_pres;
      }
    } catch (const Error&) {
      R.relative_adjoint = false;
    }
  }
  R.all_equal = (R.relative_adjoint == R.all_fibers) && (R.all_fibers == R.low_fibers) &&
                (R.low_fibers == R.zero_equiv_one_adjoint) &&
                (R.zero_equiv_one_adjoint == R.homwise);
  return R;
}

EquivalentCharacterizationsMorphism check_equivalent_characterizations_morphism(
    const StrictTwoFunctor& H, const StrictTwoFunctor& F, const StrictTwoFunctor& G, int N,
    const Caps& caps) {
  EquivalentCharacterizationsMorphism R;
  if (!strict_two_functors_equal(compose_strict_two_functors(G, H), F))
    fail(Err::HypothesisFailed, "triangle does not commute strictly");
  auto PX = segal_fibers(F.source, N, caps);
  auto PY = segal_fibers(G.source, N, caps);
  auto PA = segal_fibers(F.target, N, caps);
  std::vector<CatFunctor> lvF, lvG, lvH;
  for (int k = 0; k <= N; ++k) {
    lvF.push_back(level_functor(F, PX, PA, k));
    lvG.push_back(level_functor(G, PY, PA, k));
    lvH.push_back(level_functor(H, PX, PY, k));
  }
  std::vector<Adjunction> aF(N + 1), aG(N + 1);
  for (int k = 0; k <= N; ++k) {
    if (!ff_right_adjoint_exists(lvF[k], caps, &aF[k]) ||
        !ff_right_adjoint_exists(lvG[k], caps, &aG[k]))
      fail(Err::HypothesisFailed, "legs lack fiberwise right adjoints");
  }
  auto fiber_adjointable = [&](int k) {
    auto T = identity_functor(PA.fiber[k]);
    auto mate = mate_right_of_left_strict(lvH[k], T, aF[k], aG[k]);
    return mate.invertible;
  };
  R.all_fibers = true;
  for (int k = 0; k <= N; ++k)
    if (!fiber_adjointable(k)) R.all_fibers = false;
  R.low_fibers = fiber_adjointable(0) && fiber_adjointable(1);
  // hom-wise via the 2-functor checker
  auto tri = check_commutes_with_sections(H, F, G, caps);
  R.homwise = tri.ok;
  // total: glue both relative adjoints and compute the total mate
  {
    auto UX = unstraighten(PX, caps);
    auto UY = unstraighten(PY, caps);
    auto UA = unstraighten(PA, caps);
    auto total_functor = [&](const std::vector<CatFunctor>& lvs, const Unstraightened& S,
                             const Unstraightened& T2) {
      CatFunctor T{S.gr.total, T2.gr.total, {}, {}};
      T.obj_map.resize(S.gr.total->num_objects());
      for (int o = 0; o < S.gr.total->num_objects(); ++o) {
        auto [l, i] = S.gr.obj_pairs[o];
        T.obj_map[o] = T2.gr.find_obj(l, lvs[l].obj_map[i]);
      }
      T.mor_map.resize(S.gr.total->num_morphisms());
      for (int mm = 0; mm < S.gr.total->num_morphisms(); ++mm) {
        auto [k, phi] = S.gr.mor_pairs[mm];
        auto [l, i] = S.gr.obj_pairs[S.gr.total->tgt(mm)];
        (void)i;
        T.mor_map[mm] = T2.gr.find_mor(T.obj_map[S.gr.total->src(mm)], k, lvs[l].mor_map[phi]);
      }
      validate_functor(T);
      return T;
    };
    auto TF = total_functor(lvF, UX, UA);
    auto TG = total_functor(lvG, UY, UA);
    auto TH = total_functor(lvH, UX, UY);
    auto fibs = [&](const Unstraightened& S, const Unstraightened& T2, const CatFunctor& T) {
      std::vector<Adjunction> out;
      const FinCategory& Dop = *PX.delta.delta_op;
      for (int i = 0; i < Dop.num_objects(); ++i) {
        auto fx = fiber_category(S.gr.fib.p, i);
        auto fa = fiber_category(T2.gr.fib.p, i);
        CatFunctor Fi{fx.cat, fa.cat, {}, {}};
        for (int o = 0; o < fx.cat->num_objects(); ++o)
          Fi.obj_map.push_back(fa.obj_back[T.obj_map[fx.obj_of[o]]]);
        for (int m2 = 0; m2 < fx.cat->num_morphisms(); ++m2)
          Fi.mor_map.push_back(fa.mor_back[T.mor_map[fx.mor_of[m2]]]);
        Adjunction ai;
        if (!ff_right_adjoint_exists(Fi, caps, &ai))
          fail(Err::HypothesisFailed, "fiber adjoint missing");
        out.push_back(ai);
      }
      return out;
    };
    auto gluedF = glue_fiberwise_adjoints(UX.gr.fib, UA.gr.fib, TF, fibs(UX, UA, TF), caps);
    auto gluedG = glue_fiberwise_adjoints(UY.gr.fib, UA.gr.fib, TG, fibs(UY, UA, TG), caps);
    auto T = identity_functor(UA.gr.total);
    auto mate = mate_right_of_left_strict(TH, T, gluedF.rel.adj, gluedG.rel.adj);
    R.total = mate.invertible;
  }
  R.all_equal =
      (R.total == R.all_fibers) && (R.all_fibers == R.low_fibers) && (R.low_fibers == R.homwise);
  return R;
}

// ---------------------------------------------------------------------------
// Initiality
// ---------------------------------------------------------------------------

InitialityEntry verify_initiality(const Envelope& E, const StrictTwoFunctor& F,
                                  const Caps& caps) {
  InitialityEntry R;
  auto W = check_local_right_adjoint_sections(F, caps);
  if (!W.ok) fail(Err::HypothesisFailed, "not a LaxSect object: " + W.failure);
  auto lam = lambda_functor(E);
  const TwoCat& A = *E.source;
  const TwoCat& X = *F.source;
  const int n = A.num_objects();
  // object map of any lift is forced by bijectivity of F on objects
  std::vector<int> hobj(n, -1);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < X.num_objects(); ++x)
      if (F.obj_map[x] == a) hobj[a] = x;

  // restriction data h : A -/-> X with F . h = identity lax data; enumerate
  // sections of the hom functors together with delta/gamma candidates over
  // the identities
  std::vector<std::vector<CatFunctor>> sections(n * n);
  for (int a = 0; a < n; ++a)
    for (int b2 = 0; b2 < n; ++b2) {
      auto all = enumerate_functors_over(identity_functor(A.hom_ptr(a, b2)),
                                         F.hom_map[hobj[a] * n + hobj[b2]], caps);
      sections[a * n + b2] = std::move(all);
      if (sections[a * n + b2].empty()) return R;  // no lift can exist
    }
  std::vector<StrictTwoFunctor> lifts;
  std::vector<int> spick(n * n, 0);
  std::function<void(int)> pick_sections = [&](int idx) {
    if (idx < n * n) {
      for (size_t k = 0; k < sections[idx].size(); ++k) {
        spick[idx] = static_cast<int>(k);
        pick_sections(idx + 1);
      }
      return;
    }
    LaxFunctor h;
    h.source = E.source;
    h.target = F.source;
    h.obj_map = hobj;
    h.hom_map.resize(n * n);
    for (int i = 0; i < n * n; ++i) h.hom_map[i] = sections[i][spick[i]];
    // delta candidates over the identity 2-cell
    std::vector<std::vector<int>> dcands(n);
    for (int a = 0; a < n; ++a) {
      const FinCategory& XH = X.hom_at(hobj[a], hobj[a]);
      const CatFunctor& Fh = F.hom_map[hobj[a] * n + hobj[a]];
      for (int c : XH.hom(X.id_one_cell[hobj[a]], h.hom_map[a * n + a].obj_map[A.id_one_cell[a]]))
        if (Fh.mor_map[c] == A.hom_at(a, a).identity(A.id_one_cell[a])) dcands[a].push_back(c);
      if (dcands[a].empty()) return;
    }
    struct GEntry {
      int tri, slot;
      std::vector<int> cands;
    };
    std::vector<GEntry> gentries;
    for (int a = 0; a < n; ++a)
      for (int b2 = 0; b2 < n; ++b2)
        for (int c = 0; c < n; ++c) {
          const FinCategory& AB = A.hom_at(a, b2);
          const FinCategory& BC = A.hom_at(b2, c);
          const CatFunctor& Fh = F.hom_map[hobj[a] * n + hobj[c]];
          for (int g = 0; g < BC.num_objects(); ++g)
            for (int f = 0; f < AB.num_objects(); ++f) {
              int gf = A.compose1(a, b2, c, g, f);
              int src = X.compose1(hobj[a], hobj[b2], hobj[c], h.hom_map[b2 * n + c].obj_map[g],
                                   h.hom_map[a * n + b2].obj_map[f]);
              if (src < 0) return;
              int tgt = h.hom_map[a * n + c].obj_map[gf];
              GEntry e;
              e.tri = A.triple(a, b2, c);
              e.slot = g * AB.num_objects() + f;
              for (int cand : X.hom_at(hobj[a], hobj[c]).hom(src, tgt))
                if (Fh.mor_map[cand] == A.hom_at(a, c).identity(gf)) e.cands.push_back(cand);
              if (e.cands.empty()) return;
              gentries.push_back(std::move(e));
            }
        }
    h.gamma.assign(n * n * n, {});
    for (int a = 0; a < n; ++a)
      for (int b2 = 0; b2 < n; ++b2)
        for (int c = 0; c < n; ++c)
          h.gamma[A.triple(a, b2, c)].assign(
              static_cast<size_t>(A.hom_at(b2, c).num_objects()) * A.hom_at(a, b2).num_objects(),
              -1);
    h.delta.assign(n, -1);
    std::vector<int> dsel(n, 0);
    std::function<void(int)> deltas = [&](int a) {
      if (a < n) {
        for (size_t k = 0; k < dcands[a].size(); ++k) {
          dsel[a] = static_cast<int>(k);
          deltas(a + 1);
        }
        return;
      }
      for (int a2 = 0; a2 < n; ++a2) h.delta[a2] = dcands[a2][dsel[a2]];
      std::function<void(size_t)> gammas = [&](size_t gi) {
        if (gi == gentries.size()) {
          auto ext = try_extend(E, h);
          if (!ext || !validate_strict_two_functor(*ext).ok) return;
          // F . H = lambda on the nose
          if (!strict_two_functors_equal(compose_strict_two_functors(F, *ext), lam)) return;
          try {
            auto tri = check_commutes_with_sections(*ext, lam, F, caps);
            if (!tri.ok) return;
          } catch (const Error&) {
            return;
          }
          lifts.push_back(*ext);
          return;
        }
        for (int cand : gentries[gi].cands) {
          h.gamma[gentries[gi].tri][gentries[gi].slot] = cand;
          gammas(gi + 1);
        }
        h.gamma[gentries[gi].tri][gentries[gi].slot] = -1;
      };
      gammas(0);
    };
    deltas(0);
  };
  pick_sections(0);

  R.lifts = static_cast<int>(lifts.size());
  if (lifts.empty()) return R;

  // count invertible strict 2-natural transformations over A between lifts
  auto transformations = [&](const StrictTwoFunctor& H1, const StrictTwoFunctor& H2) {
    // components rho_a in X(H1 a, H2 a) over the identity of A at a
    std::vector<std::vector<int>> cands(n);
    for (int a = 0; a < n; ++a) {
      const FinCategory& XH = X.hom_at(H1.obj_map[a], H2.obj_map[a]);
      const CatFunctor& Fh = F.hom_map[H1.obj_map[a] * n + H2.obj_map[a]];
      for (int r = 0; r < XH.num_objects(); ++r)
        if (Fh.obj_map[r] == A.id_one_cell[a]) cands[a].push_back(r);
    }
    long long count = 0;
    std::vector<int> rho(n, -1);
    // equivalence predicate for invertibility of components
    auto is_equivalence_cell = [&](int a, int b2, int cell) {
      const FinCategory& H = X.hom_at(a, b2);
      (void)H;
      const FinCategory& BA = X.hom_at(b2, a);
      for (int g = 0; g < BA.num_objects(); ++g) {
        int gf = X.compose1(a, b2, a, g, cell);
        int fg = X.compose1(b2, a, b2, cell, g);
        if (gf < 0 || fg < 0) continue;
        bool li = false, ri = false;
        for (int m2 : X.hom_at(a, a).hom(gf, X.id_one_cell[a]))
          if (X.hom_at(a, a).is_iso(m2)) li = true;
        for (int m2 : X.hom_at(b2, b2).hom(fg, X.id_one_cell[b2]))
          if (X.hom_at(b2, b2).is_iso(m2)) ri = true;
        if (li && ri) return true;
      }
      return false;
    };
    std::function<void(int)> go = [&](int a) {
      if (a == n) {
        // strict naturality on 1-cells and 2-cells of Env(A)
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            const FinCategory& EH = E.env->hom_at(x, y);
            for (int s = 0; s < EH.num_objects(); ++s) {
              int lhs = X.compose1(H1.obj_map[x], H1.obj_map[y], H2.obj_map[y], rho[y],
                                   H1.hom_map[x * n + y].obj_map[s]);
              int rhs = X.compose1(H1.obj_map[x], H2.obj_map[x], H2.obj_map[y],
                                   H2.hom_map[x * n + y].obj_map[s], rho[x]);
              if (lhs < 0 || rhs < 0 || lhs != rhs) return;
            }
            for (int m2 = 0; m2 < EH.num_morphisms(); ++m2) {
              int l = X.compose2(H1.obj_map[x], H1.obj_map[y], H2.obj_map[y],
                                 X.hom_at(H1.obj_map[y], H2.obj_map[y]).identity(rho[y]),
                                 H1.hom_map[x * n + y].mor_map[m2]);
              int r = X.compose2(H1.obj_map[x], H2.obj_map[x], H2.obj_map[y],
                                 H2.hom_map[x * n + y].mor_map[m2],
                                 X.hom_at(H1.obj_map[x], H2.obj_map[x]).identity(rho[x]));
              if (l < 0 || r < 0 || l != r) return;
            }
          }
        for (int a2 = 0; a2 < n; ++a2)
          if (!is_equivalence_cell(H1.obj_map[a2], H2.obj_map[a2], rho[a2])) return;
        ++count;
        return;
      }
      for (int r : cands[a]) {
        rho[a] = r;
        go(a + 1);
      }
    };
    go(0);
    return count;
  };

  // iso classes and automorphism counts
  std::vector<int> cls(lifts.size(), -1);
  int nclasses = 0;
  for (size_t i = 0; i < lifts.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = nclasses++;
    for (size_t j = i + 1; j < lifts.size(); ++j)
      if (cls[j] < 0 && transformations(lifts[i], lifts[j]) > 0) cls[j] = cls[i];
  }
  R.iso_classes = nclasses;
  R.max_automorphisms = 0;
  bool pairwise_unique = true;
  for (size_t i = 0; i < lifts.size(); ++i)
    for (size_t j = 0; j < lifts.size(); ++j) {
      long long c = transformations(lifts[i], lifts[j]);
      if (i == j) R.max_automorphisms = std::max<long long>(R.max_automorphisms, c);
      if (c != 1) pairwise_unique = false;
    }
  R.flagged = R.max_automorphisms != 1;
  R.ok = R.iso_classes == 1 && pairwise_unique;
  return R;
}

}  // namespace catena
