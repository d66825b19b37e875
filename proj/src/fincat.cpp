#include "catena/fincat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace catena {

const char* err_name(Err e) {
  switch (e) {
    case Err::MissingComposite: return "MissingComposite";
    case Err::NonAssociative: return "NonAssociative";
    case Err::UnitLawViolation: return "UnitLawViolation";
    case Err::DanglingEndpoint: return "DanglingEndpoint";
    case Err::SizeExceeded: return "SizeExceeded";
    case Err::IncompatibleCospan: return "IncompatibleCospan";
    case Err::NotMonotone: return "NotMonotone";
    case Err::OutOfRange: return "OutOfRange";
    case Err::EndpointMismatch: return "EndpointMismatch";
    case Err::MissingAdjunction: return "MissingAdjunction";
    case Err::HypothesisFailed: return "HypothesisFailed";
    case Err::NotAPullback: return "NotAPullback";
    case Err::CounitNotInvertible: return "CounitNotInvertible";
    case Err::NoLift: return "NoLift";
    case Err::FiberAdjointMissing: return "FiberAdjointMissing";
    case Err::NotOverBase: return "NotOverBase";
    case Err::NonAssociativeComposition: return "NonAssociativeComposition";
    case Err::UnitViolation: return "UnitViolation";
    case Err::BadHom: return "BadHom";
    case Err::TruncationMismatch: return "TruncationMismatch";
    case Err::TruncationTooSmall: return "TruncationTooSmall";
    case Err::CapOverflow: return "CapOverflow";
    case Err::ParseError: return "ParseError";
    case Err::UnresolvedReference: return "UnresolvedReference";
    case Err::ValidationError: return "ValidationError";
    case Err::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// ===========================================================================
// FinCategory
// ===========================================================================

int FinCategory::compose(int g, int f) const {
  const auto& row = comp_[f];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(g, -1));
  if (it == row.end() || it->first != g)
    fail(Err::MissingComposite, "no composite " + mor_names[g] + " . " + mor_names[f] + " in " + name);
  return it->second;
}

std::vector<int> FinCategory::hom(int x, int y) const {
  std::vector<int> result;
  for (int f : out_[x])
    if (mor_tgt[f] == y) result.push_back(f);
  return result;
}

int FinCategory::inverse(int f) const { return inverse_[f]; }

bool FinCategory::isomorphic_objects(int x, int y) const {
  if (x == y) return true;
  for (int f : out_[x])
    if (mor_tgt[f] == y && is_iso(f)) return true;
  return false;
}

int FinCategory::object_index(const std::string& n) const {
  auto it = obj_index_.find(n);
  return it == obj_index_.end() ? -1 : it->second;
}

int FinCategory::morphism_index(const std::string& n) const {
  auto it = mor_index_.find(n);
  return it == mor_index_.end() ? -1 : it->second;
}

std::string FinCategory::describe_morphism(int f) const {
  return mor_names[f] + " : " + obj_names[mor_src[f]] + " -> " + obj_names[mor_tgt[f]];
}

void FinCategory::freeze(bool check_laws) {
  const int n = num_objects();
  const int m = num_morphisms();
  out_.assign(n, {});
  in_.assign(n, {});
  for (int f = 0; f < m; ++f) {
    if (mor_src[f] < 0 || mor_src[f] >= n || mor_tgt[f] < 0 || mor_tgt[f] >= n)
      fail(Err::DanglingEndpoint, "morphism " + mor_names[f] + " in " + name);
    out_[mor_src[f]].push_back(f);
    in_[mor_tgt[f]].push_back(f);
  }
  for (auto& row : comp_) std::sort(row.begin(), row.end());

  obj_index_.reserve(n);
  for (int x = 0; x < n; ++x) obj_index_[obj_names[x]] = x;
  mor_index_.reserve(m);
  for (int f = 0; f < m; ++f) mor_index_[mor_names[f]] = f;
  if (static_cast<int>(obj_index_.size()) != n)
    fail(Err::ValidationError, "duplicate object names in " + name);
  if (static_cast<int>(mor_index_.size()) != m)
    fail(Err::ValidationError, "duplicate morphism names in " + name);

  if (check_laws) validate();

  inverse_.assign(m, -1);
  for (int f = 0; f < m; ++f) {
    if (inverse_[f] >= 0) continue;
    for (int g : out_[mor_tgt[f]]) {
      if (mor_tgt[g] != mor_src[f]) continue;
      if (compose(g, f) == obj_identity[mor_src[f]] && compose(f, g) == obj_identity[mor_src[g]]) {
        inverse_[f] = g;
        inverse_[g] = f;
        break;
      }
    }
  }
}

void FinCategory::validate() const {
  const int n = num_objects();
  const int m = num_morphisms();
  if (static_cast<int>(obj_identity.size()) != n)
    fail(Err::ValidationError, "identity table size mismatch in " + name);
  for (int x = 0; x < n; ++x) {
    int e = obj_identity[x];
    if (e < 0 || e >= m) fail(Err::DanglingEndpoint, "identity of " + obj_names[x] + " in " + name);
    if (mor_src[e] != x || mor_tgt[e] != x)
      fail(Err::UnitLawViolation,
           "identity " + mor_names[e] + " of " + obj_names[x] + " has wrong endpoints in " + name);
  }
  // Totality on composable pairs, endpoint coherence.
  for (int f = 0; f < m; ++f) {
    size_t found = 0;
    for (int g : out_[mor_tgt[f]]) {
      const auto& row = comp_[f];
      auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(g, -1));
      if (it == row.end() || it->first != g)
        fail(Err::MissingComposite, mor_names[g] + " . " + mor_names[f] + " in " + name);
      int h = it->second;
      ++found;
      if (h < 0 || h >= m)
        fail(Err::DanglingEndpoint, "composite of " + mor_names[g] + " . " + mor_names[f]);
      if (mor_src[h] != mor_src[f] || mor_tgt[h] != mor_tgt[g])
        fail(Err::DanglingEndpoint,
             "composite " + mor_names[h] + " of " + mor_names[g] + " . " + mor_names[f] +
                 " has wrong endpoints in " + name);
    }
    if (comp_[f].size() != found)
      fail(Err::MissingComposite,
           "table for " + mor_names[f] + " in " + name + " has non-composable entries");
  }
  // Unit laws.
  for (int f = 0; f < m; ++f) {
    if (compose(f, obj_identity[mor_src[f]]) != f)
      fail(Err::UnitLawViolation, mor_names[f] + " . id != " + mor_names[f] + " in " + name);
    if (compose(obj_identity[mor_tgt[f]], f) != f)
      fail(Err::UnitLawViolation, "id . " + mor_names[f] + " != " + mor_names[f] + " in " + name);
  }
  // Associativity over composable triples, walked through the out-lists so
  // the cost tracks the number of actual triples.
  for (int f = 0; f < m; ++f) {
    for (int g : out_[mor_tgt[f]]) {
      int gf = compose(g, f);
      for (int h : out_[mor_tgt[g]]) {
        if (compose(h, gf) != compose(compose(h, g), f))
          fail(Err::NonAssociative,
               mor_names[h] + " . " + mor_names[g] + " . " + mor_names[f] + " in " + name);
      }
    }
  }
}

CatPtr FinCategory::make(std::string name, std::vector<std::string> objects,
                         std::vector<std::string> mor_names, std::vector<int> mor_src,
                         std::vector<int> mor_tgt, std::vector<int> identities,
                         const std::vector<std::array<int, 3>>& comp) {
  return FinCategory::make_impl(std::move(name), std::move(objects), std::move(mor_names), std::move(mor_src),
                   std::move(mor_tgt), std::move(identities), comp, true);
}

CatPtr FinCategory::make_trusted(std::string name, std::vector<std::string> objects,
                                 std::vector<std::string> mor_names, std::vector<int> mor_src,
                                 std::vector<int> mor_tgt, std::vector<int> identities,
                                 const std::vector<std::array<int, 3>>& comp) {
  return FinCategory::make_impl(std::move(name), std::move(objects), std::move(mor_names), std::move(mor_src),
                   std::move(mor_tgt), std::move(identities), comp, false);
}

CatPtr FinCategory::make_impl(std::string name, std::vector<std::string> objects,
                              std::vector<std::string> mor_names, std::vector<int> mor_src,
                              std::vector<int> mor_tgt, std::vector<int> identities,
                              const std::vector<std::array<int, 3>>& comp, bool check_laws) {
  auto cat = std::shared_ptr<FinCategory>(new FinCategory());
  cat->name = std::move(name);
  cat->obj_names = std::move(objects);
  cat->mor_names = std::move(mor_names);
  cat->mor_src = std::move(mor_src);
  cat->mor_tgt = std::move(mor_tgt);
  cat->obj_identity = std::move(identities);
  const int m = cat->num_morphisms();
  cat->comp_.assign(m, {});

  std::vector<std::vector<std::pair<int, int>>>& table = cat->comp_;
  auto put = [&](int g, int f, int h) {
    for (auto& e : table[f])
      if (e.first == g) {
        if (e.second != h)
          fail(Err::ValidationError, "conflicting composites for " + cat->mor_names[g] + " . " +
                                         cat->mor_names[f] + " in " + cat->name);
        return;
      }
    table[f].push_back({g, h});
  };
  // Unit composites are forced; explicit entries are checked against them.
  for (int f = 0; f < m; ++f) {
    if (cat->mor_src[f] >= static_cast<int>(cat->obj_identity.size()) || cat->mor_src[f] < 0 ||
        cat->mor_tgt[f] < 0 || cat->mor_tgt[f] >= static_cast<int>(cat->obj_identity.size()))
      fail(Err::DanglingEndpoint, "morphism " + cat->mor_names[f]);
    put(f, cat->obj_identity[cat->mor_src[f]], f);
    put(cat->obj_identity[cat->mor_tgt[f]], f, f);
  }
  for (const auto& e : comp) put(e[0], e[1], e[2]);
  cat->freeze(check_laws);
  return cat;
}

bool FinCategory::same_presentation(const FinCategory& a, const FinCategory& b) {
  if (a.obj_names != b.obj_names || a.mor_names != b.mor_names) return false;
  if (a.mor_src != b.mor_src || a.mor_tgt != b.mor_tgt) return false;
  if (a.obj_identity != b.obj_identity) return false;
  return a.comp_ == b.comp_;
}

int CatBuilder::add_object(const std::string& obj_name, const std::string& id_name) {
  int x = static_cast<int>(objects.size());
  objects.push_back(obj_name);
  int e = static_cast<int>(mors.size());
  mors.push_back(id_name.empty() ? "id_" + obj_name : id_name);
  srcs.push_back(x);
  tgts.push_back(x);
  idents.push_back(e);
  return x;
}

int CatBuilder::add_morphism(const std::string& mor_name, int s, int t) {
  int f = static_cast<int>(mors.size());
  mors.push_back(mor_name);
  srcs.push_back(s);
  tgts.push_back(t);
  return f;
}

CatPtr CatBuilder::build() const {
  return FinCategory::make(name, objects, mors, srcs, tgts, idents, comps);
}

// ===========================================================================
// Functors and natural transformations
// ===========================================================================

static bool same_cat(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  return a && b && FinCategory::same_presentation(*a, *b);
}

void validate_functor(const CatFunctor& F) {
  const FinCategory& C = *F.source;
  const FinCategory& D = *F.target;
  if (static_cast<int>(F.obj_map.size()) != C.num_objects() ||
      static_cast<int>(F.mor_map.size()) != C.num_morphisms())
    fail(Err::ValidationError, "functor map size mismatch (" + C.name + " -> " + D.name + ")");
  for (int x = 0; x < C.num_objects(); ++x)
    if (F.obj_map[x] < 0 || F.obj_map[x] >= D.num_objects())
      fail(Err::DanglingEndpoint, "object image of " + C.obj_names[x]);
  for (int f = 0; f < C.num_morphisms(); ++f) {
    int ff = F.mor_map[f];
    if (ff < 0 || ff >= D.num_morphisms()) fail(Err::DanglingEndpoint, "image of " + C.mor_names[f]);
    if (D.src(ff) != F.obj_map[C.src(f)] || D.tgt(ff) != F.obj_map[C.tgt(f)])
      fail(Err::EndpointMismatch, "image of " + C.mor_names[f] + " has wrong endpoints");
  }
  for (int x = 0; x < C.num_objects(); ++x)
    if (F.mor_map[C.identity(x)] != D.identity(F.obj_map[x]))
      fail(Err::ValidationError, "identity of " + C.obj_names[x] + " not preserved");
  for (int f = 0; f < C.num_morphisms(); ++f)
    for (int g : C.out_morphisms(C.tgt(f)))
      if (F.mor_map[C.compose(g, f)] != D.compose(F.mor_map[g], F.mor_map[f]))
        fail(Err::ValidationError,
             "composition " + C.mor_names[g] + " . " + C.mor_names[f] + " not preserved");
}

CatFunctor identity_functor(const CatPtr& C) {
  CatFunctor F{C, C, {}, {}};
  F.obj_map.resize(C->num_objects());
  F.mor_map.resize(C->num_morphisms());
  for (int x = 0; x < C->num_objects(); ++x) F.obj_map[x] = x;
  for (int f = 0; f < C->num_morphisms(); ++f) F.mor_map[f] = f;
  return F;
}

CatFunctor constant_functor(const CatPtr& C, const CatPtr& D, int obj) {
  CatFunctor F{C, D, std::vector<int>(C->num_objects(), obj),
               std::vector<int>(C->num_morphisms(), D->identity(obj))};
  return F;
}

CatFunctor compose_functors(const CatFunctor& G, const CatFunctor& F) {
  if (!same_cat(F.target, G.source)) fail(Err::EndpointMismatch, "functor composition endpoints");
  CatFunctor H{F.source, G.target, {}, {}};
  H.obj_map.resize(F.obj_map.size());
  H.mor_map.resize(F.mor_map.size());
  for (size_t x = 0; x < F.obj_map.size(); ++x) H.obj_map[x] = G.obj_map[F.obj_map[x]];
  for (size_t f = 0; f < F.mor_map.size(); ++f) H.mor_map[f] = G.mor_map[F.mor_map[f]];
  return H;
}

bool functors_equal(const CatFunctor& F, const CatFunctor& G) {
  return same_cat(F.source, G.source) && same_cat(F.target, G.target) && F.obj_map == G.obj_map &&
         F.mor_map == G.mor_map;
}

void validate_nat(const NatTransformation& a) {
  const CatFunctor& F = a.source;
  const CatFunctor& G = a.target;
  if (!same_cat(F.source, G.source) || !same_cat(F.target, G.target))
    fail(Err::EndpointMismatch, "natural transformation endpoints");
  const FinCategory& C = *F.source;
  const FinCategory& D = *F.target;
  if (static_cast<int>(a.component.size()) != C.num_objects())
    fail(Err::ValidationError, "component count");
  for (int x = 0; x < C.num_objects(); ++x) {
    int c = a.component[x];
    if (c < 0 || c >= D.num_morphisms() || D.src(c) != F.obj_map[x] || D.tgt(c) != G.obj_map[x])
      fail(Err::EndpointMismatch, "component at " + C.obj_names[x]);
  }
  for (int f = 0; f < C.num_morphisms(); ++f) {
    int x = C.src(f), y = C.tgt(f);
    if (D.compose(a.component[y], F.mor_map[f]) != D.compose(G.mor_map[f], a.component[x]))
      fail(Err::ValidationError, "naturality at " + C.mor_names[f]);
  }
}

NatTransformation identity_nat(const CatFunctor& F) {
  NatTransformation a{F, F, {}};
  a.component.resize(F.obj_map.size());
  for (size_t x = 0; x < F.obj_map.size(); ++x)
    a.component[x] = F.target->identity(F.obj_map[x]);
  return a;
}

NatTransformation vcomp(const NatTransformation& beta, const NatTransformation& alpha) {
  if (alpha.target.obj_map != beta.source.obj_map || alpha.target.mor_map != beta.source.mor_map)
    fail(Err::EndpointMismatch, "vertical composition of transformations");
  NatTransformation c{alpha.source, beta.target, {}};
  const FinCategory& D = *alpha.source.target;
  c.component.resize(alpha.component.size());
  for (size_t x = 0; x < alpha.component.size(); ++x)
    c.component[x] = D.compose(beta.component[x], alpha.component[x]);
  return c;
}

NatTransformation whisker_pre(const NatTransformation& alpha, const CatFunctor& H) {
  NatTransformation r{compose_functors(alpha.source, H), compose_functors(alpha.target, H), {}};
  r.component.resize(H.obj_map.size());
  for (size_t x = 0; x < H.obj_map.size(); ++x) r.component[x] = alpha.component[H.obj_map[x]];
  return r;
}

NatTransformation whisker_post(const CatFunctor& K, const NatTransformation& alpha) {
  NatTransformation r{compose_functors(K, alpha.source), compose_functors(K, alpha.target), {}};
  r.component.resize(alpha.component.size());
  for (size_t x = 0; x < alpha.component.size(); ++x)
    r.component[x] = K.mor_map[alpha.component[x]];
  return r;
}

bool nat_invertible(const NatTransformation& a) {
  const FinCategory& D = *a.source.target;
  for (int c : a.component)
    if (!D.is_iso(c)) return false;
  return true;
}

NatTransformation nat_inverse(const NatTransformation& a) {
  const FinCategory& D = *a.source.target;
  NatTransformation r{a.target, a.source, {}};
  r.component.resize(a.component.size());
  for (size_t x = 0; x < a.component.size(); ++x) {
    int inv = D.inverse(a.component[x]);
    if (inv < 0) fail(Err::ValidationError, "transformation not invertible at component " +
                                                std::to_string(x));
    r.component[x] = inv;
  }
  return r;
}

bool nats_equal(const NatTransformation& a, const NatTransformation& b) {
  return a.component == b.component && functors_equal(a.source, b.source) &&
         functors_equal(a.target, b.target);
}

// ===========================================================================
// Derived categories
// ===========================================================================

CatPtr opposite_category(const CatPtr& C) {
  CatBuilder b(C->name + "^op");
  b.objects = C->obj_names;
  b.mors = C->mor_names;
  b.srcs = C->mor_tgt;
  b.tgts = C->mor_src;
  b.idents = C->obj_identity;
  for (int f = 0; f < C->num_morphisms(); ++f)
    for (int g : C->out_morphisms(C->tgt(f)))
      b.comps.push_back({f, g, C->compose(g, f)});  // comp_op(f, g) = comp(g, f)
  return FinCategory::make(b.name, b.objects, b.mors, b.srcs, b.tgts, b.idents, b.comps);
}

int ProductResult::obj(int x, int y) const { return x * nobj1 + y; }
int ProductResult::mor(int u, int v) const { return u * nmor1 + v; }

ProductResult product_category(const CatPtr& C, const CatPtr& D, const Caps& caps) {
  long long no = 1ll * C->num_objects() * D->num_objects();
  if (no > caps.derived_objects) fail(Err::SizeExceeded, "product object count " + std::to_string(no));
  ProductResult R;
  R.nobj1 = D->num_objects();
  R.nmor1 = D->num_morphisms();
  CatBuilder b("(" + C->name + " x " + D->name + ")");
  std::vector<int> idents;
  for (int x = 0; x < C->num_objects(); ++x)
    for (int y = 0; y < D->num_objects(); ++y)
      b.objects.push_back("(" + C->obj_names[x] + "|" + D->obj_names[y] + ")");
  for (int u = 0; u < C->num_morphisms(); ++u)
    for (int v = 0; v < D->num_morphisms(); ++v) {
      b.mors.push_back("(" + C->mor_names[u] + "|" + D->mor_names[v] + ")");
      b.srcs.push_back(R.obj(C->src(u), D->src(v)));
      b.tgts.push_back(R.obj(C->tgt(u), D->tgt(v)));
    }
  for (int x = 0; x < C->num_objects(); ++x)
    for (int y = 0; y < D->num_objects(); ++y)
      idents.push_back(R.mor(C->identity(x), D->identity(y)));
  std::vector<std::array<int, 3>> comps;
  for (int u = 0; u < C->num_morphisms(); ++u)
    for (int u2 : C->out_morphisms(C->tgt(u)))
      for (int v = 0; v < D->num_morphisms(); ++v)
        for (int v2 : D->out_morphisms(D->tgt(v)))
          comps.push_back({R.mor(u2, v2), R.mor(u, v), R.mor(C->compose(u2, u), D->compose(v2, v))});
  R.cat = FinCategory::make(b.name, b.objects, b.mors, b.srcs, b.tgts, idents, comps);
  R.pr0 = CatFunctor{R.cat, C, {}, {}};
  R.pr1 = CatFunctor{R.cat, D, {}, {}};
  for (int x = 0; x < C->num_objects(); ++x)
    for (int y = 0; y < D->num_objects(); ++y) {
      R.pr0.obj_map.push_back(x);
      R.pr1.obj_map.push_back(y);
    }
  for (int u = 0; u < C->num_morphisms(); ++u)
    for (int v = 0; v < D->num_morphisms(); ++v) {
      R.pr0.mor_map.push_back(u);
      R.pr1.mor_map.push_back(v);
    }
  return R;
}

int PullbackResult::find_obj(int x, int y) const {
  for (size_t i = 0; i < obj_pairs.size(); ++i)
    if (obj_pairs[i] == std::make_pair(x, y)) return static_cast<int>(i);
  return -1;
}
int PullbackResult::find_mor(int u, int v) const {
  for (size_t i = 0; i < mor_pairs.size(); ++i)
    if (mor_pairs[i] == std::make_pair(u, v)) return static_cast<int>(i);
  return -1;
}

PullbackResult pullback_category(const CatFunctor& F, const CatFunctor& G, const Caps& caps) {
  if (!same_cat(F.target, G.target)) fail(Err::IncompatibleCospan, "pullback legs disagree on target");
  const CatPtr C = F.source, D = G.source;
  PullbackResult R;
  std::vector<int> obj_of(C->num_objects() * D->num_objects(), -1);
  CatBuilder b("(" + C->name + " x_" + F.target->name + " " + D->name + ")");
  std::vector<int> idents;
  for (int x = 0; x < C->num_objects(); ++x)
    for (int y = 0; y < D->num_objects(); ++y)
      if (F.obj_map[x] == G.obj_map[y]) {
        obj_of[x * D->num_objects() + y] = static_cast<int>(b.objects.size());
        b.objects.push_back("(" + C->obj_names[x] + "|" + D->obj_names[y] + ")");
        R.obj_pairs.push_back({x, y});
      }
  if (static_cast<long long>(b.objects.size()) > caps.derived_objects)
    fail(Err::SizeExceeded, "pullback object count");
  std::unordered_map<long long, int> mor_of;
  for (int u = 0; u < C->num_morphisms(); ++u)
    for (int v = 0; v < D->num_morphisms(); ++v)
      if (F.mor_map[u] == G.mor_map[v]) {
        mor_of[1ll * u * D->num_morphisms() + v] = static_cast<int>(b.mors.size());
        b.mors.push_back("(" + C->mor_names[u] + "|" + D->mor_names[v] + ")");
        b.srcs.push_back(obj_of[C->src(u) * D->num_objects() + D->src(v)]);
        b.tgts.push_back(obj_of[C->tgt(u) * D->num_objects() + D->tgt(v)]);
        R.mor_pairs.push_back({u, v});
      }
  for (auto& p : R.obj_pairs)
    idents.push_back(mor_of.at(1ll * C->identity(p.first) * D->num_morphisms() + D->identity(p.second)));
  std::vector<std::array<int, 3>> comps;
  for (size_t i = 0; i < R.mor_pairs.size(); ++i) {
    auto [u, v] = R.mor_pairs[i];
    for (int u2 : C->out_morphisms(C->tgt(u)))
      for (int v2 : D->out_morphisms(D->tgt(v))) {
        auto it = mor_of.find(1ll * u2 * D->num_morphisms() + v2);
        if (it == mor_of.end()) continue;
        auto ct = mor_of.find(1ll * C->compose(u2, u) * D->num_morphisms() + D->compose(v2, v));
        comps.push_back({it->second, static_cast<int>(i), ct->second});
      }
  }
  R.cat = FinCategory::make(b.name, b.objects, b.mors, b.srcs, b.tgts, idents, comps);
  R.pr0 = CatFunctor{R.cat, C, {}, {}};
  R.pr1 = CatFunctor{R.cat, D, {}, {}};
  for (auto& p : R.obj_pairs) {
    R.pr0.obj_map.push_back(p.first);
    R.pr1.obj_map.push_back(p.second);
  }
  for (auto& p : R.mor_pairs) {
    R.pr0.mor_map.push_back(p.first);
    R.pr1.mor_map.push_back(p.second);
  }
  return R;
}

int CommaResult::find_obj(int c, int d, int phi) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i][0] == c && objects[i][1] == d && objects[i][2] == phi) return static_cast<int>(i);
  return -1;
}

CommaResult comma_category(const CatFunctor& F, const CatFunctor& G, const Caps& caps) {
  if (!same_cat(F.target, G.target)) fail(Err::IncompatibleCospan, "comma legs disagree on target");
  const CatPtr C = F.source, D = G.source;
  const FinCategory& E = *F.target;
  CommaResult R;
  CatBuilder b("(" + C->name + " / " + D->name + ")");
  std::vector<int> idents;
  std::unordered_map<long long, int> obj_of;  // key (c * nD + d) * nmorE + phi
  for (int c = 0; c < C->num_objects(); ++c)
    for (int d = 0; d < D->num_objects(); ++d)
      for (int phi : E.hom(F.obj_map[c], G.obj_map[d])) {
        long long key = (1ll * c * D->num_objects() + d) * E.num_morphisms() + phi;
        obj_of[key] = static_cast<int>(b.objects.size());
        b.objects.push_back("(" + C->obj_names[c] + "|" + D->obj_names[d] + "|" + E.mor_names[phi] + ")");
        R.objects.push_back({c, d, phi});
      }
  if (static_cast<long long>(b.objects.size()) > caps.derived_objects)
    fail(Err::SizeExceeded, "comma object count");
  // morphisms (u, v) : (c,d,phi) -> (c',d',phi') with phi' . F u = G v . phi.
  // The same pair (u, v) can point at several targets, so the key carries both
  // endpoints.
  std::unordered_map<long long, int> mor_of;  // key (source obj, u, v, target obj)
  const long long nmu = C->num_morphisms();
  const long long nmv = D->num_morphisms();
  const long long nob = static_cast<long long>(R.objects.size());
  auto mor_key = [&](long long i, int u, int v, long long j) {
    return ((i * nmu + u) * nmv + v) * nob + j;
  };
  for (size_t i = 0; i < R.objects.size(); ++i) {
    auto [c, d, phi] = R.objects[i];
    for (int u : C->out_morphisms(c))
      for (int v : D->out_morphisms(d)) {
        int lhs = E.compose(G.mor_map[v], phi);
        for (int phi2 : E.hom(F.obj_map[C->tgt(u)], G.obj_map[D->tgt(v)])) {
          if (E.compose(phi2, F.mor_map[u]) != lhs) continue;
          long long tkey = (1ll * C->tgt(u) * D->num_objects() + D->tgt(v)) * E.num_morphisms() + phi2;
          int j = obj_of.at(tkey);
          mor_of[mor_key(static_cast<long long>(i), u, v, j)] = static_cast<int>(b.mors.size());
          b.mors.push_back("(" + C->mor_names[u] + "|" + D->mor_names[v] + ")@" + std::to_string(i) +
                           ">" + std::to_string(j));
          b.srcs.push_back(static_cast<int>(i));
          b.tgts.push_back(j);
          R.mor_pairs.push_back({u, v});
        }
      }
  }
  for (size_t i = 0; i < R.objects.size(); ++i) {
    auto [c, d, phi] = R.objects[i];
    (void)phi;
    idents.push_back(mor_of.at(
        mor_key(static_cast<long long>(i), C->identity(c), D->identity(d), static_cast<long long>(i))));
  }
  std::vector<std::array<int, 3>> comps;
  for (size_t k = 0; k < R.mor_pairs.size(); ++k) {
    int j = b.tgts[k];
    auto [u, v] = R.mor_pairs[k];
    for (size_t k2 = 0; k2 < R.mor_pairs.size(); ++k2) {
      if (b.srcs[k2] != j) continue;
      auto [u2, v2] = R.mor_pairs[k2];
      long long ckey = mor_key(b.srcs[k], C->compose(u2, u), D->compose(v2, v), b.tgts[k2]);
      comps.push_back({static_cast<int>(k2), static_cast<int>(k), mor_of.at(ckey)});
    }
  }
  R.cat = FinCategory::make(b.name, b.objects, b.mors, b.srcs, b.tgts, idents, comps);
  R.pr0 = CatFunctor{R.cat, C, {}, {}};
  R.pr1 = CatFunctor{R.cat, D, {}, {}};
  for (auto& o : R.objects) {
    R.pr0.obj_map.push_back(o[0]);
    R.pr1.obj_map.push_back(o[1]);
  }
  for (auto& p : R.mor_pairs) {
    R.pr0.mor_map.push_back(p.first);
    R.pr1.mor_map.push_back(p.second);
  }
  return R;
}

int ArrowResult::find_mor(int src_obj, int u, int v, int tgt_obj) const {
  for (size_t i = 0; i < mor_pairs.size(); ++i)
    if (mor_pairs[i] == std::make_pair(u, v) && cat->src(static_cast<int>(i)) == src_obj &&
        cat->tgt(static_cast<int>(i)) == tgt_obj)
      return static_cast<int>(i);
  return -1;
}

ArrowResult arrow_category(const CatPtr& C, const Caps& caps) {
  ArrowResult R;
  CatBuilder b("Arr(" + C->name + ")");
  // objects = morphisms of C
  for (int f = 0; f < C->num_morphisms(); ++f) b.objects.push_back(C->mor_names[f]);
  if (static_cast<long long>(b.objects.size()) > caps.derived_objects)
    fail(Err::SizeExceeded, "arrow category object count");
  std::vector<int> idents(C->num_morphisms(), -1);
  // key (source object f, u, v, target object g): the pair (u, v) alone does
  // not pin down the target square edge.
  std::unordered_map<long long, int> mor_of;
  const long long nm = C->num_morphisms();
  auto mor_key = [&](int f, int u, int v, int g) {
    return ((1ll * f * nm + u) * nm + v) * nm + g;
  };
  std::vector<std::vector<int>> by_src(C->num_morphisms());
  for (int f = 0; f < C->num_morphisms(); ++f)
    for (int u : C->out_morphisms(C->src(f)))
      for (int v : C->out_morphisms(C->tgt(f)))
        for (int g : C->hom(C->tgt(u), C->tgt(v))) {
          if (C->compose(g, u) != C->compose(v, f)) continue;
          int k = static_cast<int>(b.mors.size());
          mor_of[mor_key(f, u, v, g)] = k;
          b.mors.push_back("(" + C->mor_names[u] + "|" + C->mor_names[v] + ")@" + C->mor_names[f] +
                           ">" + C->mor_names[g]);
          b.srcs.push_back(f);
          b.tgts.push_back(g);
          by_src[f].push_back(k);
          R.mor_pairs.push_back({u, v});
        }
  for (int f = 0; f < C->num_morphisms(); ++f)
    idents[f] = mor_of.at(mor_key(f, C->identity(C->src(f)), C->identity(C->tgt(f)), f));
  std::vector<std::array<int, 3>> comps;
  for (size_t k = 0; k < R.mor_pairs.size(); ++k) {
    int g = b.tgts[k];
    auto [u, v] = R.mor_pairs[k];
    for (int k2 : by_src[g]) {
      auto [u2, v2] = R.mor_pairs[k2];
      long long ckey = mor_key(b.srcs[k], C->compose(u2, u), C->compose(v2, v), b.tgts[k2]);
      comps.push_back({k2, static_cast<int>(k), mor_of.at(ckey)});
    }
  }
  R.cat = FinCategory::make(b.name, b.objects, b.mors, b.srcs, b.tgts, idents, comps);
  R.ev0 = CatFunctor{R.cat, C, {}, {}};
  R.ev1 = CatFunctor{R.cat, C, {}, {}};
  for (int f = 0; f < C->num_morphisms(); ++f) {
    R.ev0.obj_map.push_back(C->src(f));
    R.ev1.obj_map.push_back(C->tgt(f));
  }
  for (auto& p : R.mor_pairs) {
    R.ev0.mor_map.push_back(p.first);
    R.ev1.mor_map.push_back(p.second);
  }
  R.diag = CatFunctor{C, R.cat, {}, {}};
  for (int x = 0; x < C->num_objects(); ++x) R.diag.obj_map.push_back(C->identity(x));
  for (int u = 0; u < C->num_morphisms(); ++u)
    R.diag.mor_map.push_back(mor_of.at(mor_key(C->identity(C->src(u)), u, u, C->identity(C->tgt(u)))));
  return R;
}

int FunctorCategoryResult::find_functor(const CatFunctor& F) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i].obj_map == F.obj_map && objects[i].mor_map == F.mor_map)
      return static_cast<int>(i);
  return -1;
}
int FunctorCategoryResult::find_nat(const NatTransformation& a) const {
  for (size_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].component == a.component &&
        morphisms[i].source.obj_map == a.source.obj_map &&
        morphisms[i].target.obj_map == a.target.obj_map &&
        morphisms[i].source.mor_map == a.source.mor_map &&
        morphisms[i].target.mor_map == a.target.mor_map)
      return static_cast<int>(i);
  return -1;
}

FunctorCategoryResult functor_category(const CatPtr& C, const CatPtr& D, const Caps& caps) {
  FunctorCategoryResult R;
  R.objects = enumerate_functors(C, D, caps);
  if (static_cast<long long>(R.objects.size()) > caps.derived_objects)
    fail(Err::SizeExceeded, "functor category object count");
  CatBuilder b("Fun(" + C->name + "," + D->name + ")");
  std::vector<int> idents(R.objects.size(), -1);
  std::vector<std::array<int, 3>> comps;
  std::vector<std::vector<std::vector<int>>> nat_idx(R.objects.size());
  for (size_t i = 0; i < R.objects.size(); ++i) {
    b.objects.push_back("fun" + std::to_string(i));
    nat_idx[i].resize(R.objects.size());
  }
  for (size_t i = 0; i < R.objects.size(); ++i)
    for (size_t j = 0; j < R.objects.size(); ++j) {
      auto nats = enumerate_nats(R.objects[i], R.objects[j], caps);
      for (auto& a : nats) {
        int k = static_cast<int>(b.mors.size());
        b.mors.push_back("nt" + std::to_string(k));
        b.srcs.push_back(static_cast<int>(i));
        b.tgts.push_back(static_cast<int>(j));
        nat_idx[i][j].push_back(k);
        R.morphisms.push_back(a);
      }
    }
  for (size_t i = 0; i < R.objects.size(); ++i) {
    auto idn = identity_nat(R.objects[i]);
    for (int k : nat_idx[i][i])
      if (R.morphisms[k].component == idn.component) idents[i] = k;
  }
  for (size_t i = 0; i < R.morphisms.size(); ++i) {
    int mid = b.tgts[i];
    for (size_t j = 0; j < R.morphisms.size(); ++j) {
      if (b.srcs[j] != mid) continue;
      auto c = vcomp(R.morphisms[j], R.morphisms[i]);
      for (int k : nat_idx[b.srcs[i]][b.tgts[j]])
        if (R.morphisms[k].component == c.component) {
          comps.push_back({static_cast<int>(j), static_cast<int>(i), k});
          break;
        }
    }
  }
  R.cat = FinCategory::make(b.name, b.objects, b.mors, b.srcs, b.tgts, idents, comps);
  return R;
}

SubcatResult full_subcategory(const CatPtr& C, const std::vector<int>& objs, std::string name) {
  std::vector<int> keep(C->num_objects(), 0);
  for (int x : objs) keep[x] = 1;
  std::vector<int> mors;
  for (int f = 0; f < C->num_morphisms(); ++f)
    if (keep[C->src(f)] && keep[C->tgt(f)]) mors.push_back(f);
  return subcategory(C, objs, mors, std::move(name));
}

SubcatResult subcategory(const CatPtr& C, const std::vector<int>& objs,
                         const std::vector<int>& mors, std::string name) {
  SubcatResult R;
  R.obj_of = objs;
  R.mor_of = mors;
  R.obj_back.assign(C->num_objects(), -1);
  R.mor_back.assign(C->num_morphisms(), -1);
  for (size_t i = 0; i < objs.size(); ++i) R.obj_back[objs[i]] = static_cast<int>(i);
  for (size_t i = 0; i < mors.size(); ++i) R.mor_back[mors[i]] = static_cast<int>(i);
  CatBuilder b(name.empty() ? "sub(" + C->name + ")" : std::move(name));
  for (int x : objs) b.objects.push_back(C->obj_names[x]);
  std::vector<int> idents;
  for (int x : objs) {
    int e = R.mor_back[C->identity(x)];
    if (e < 0) fail(Err::ValidationError, "subcategory misses identity of " + C->obj_names[x]);
    idents.push_back(e);
  }
  for (int f : mors) {
    if (R.obj_back[C->src(f)] < 0 || R.obj_back[C->tgt(f)] < 0)
      fail(Err::DanglingEndpoint, "subcategory morphism " + C->mor_names[f]);
    b.mors.push_back(C->mor_names[f]);
    b.srcs.push_back(R.obj_back[C->src(f)]);
    b.tgts.push_back(R.obj_back[C->tgt(f)]);
  }
  std::vector<std::array<int, 3>> comps;
  for (size_t i = 0; i < mors.size(); ++i)
    for (size_t j = 0; j < mors.size(); ++j) {
      if (!C->composable(mors[j], mors[i])) continue;
      int h = R.mor_back[C->compose(mors[j], mors[i])];
      if (h < 0)
        fail(Err::MissingComposite, "subcategory not closed under composition at " +
                                        C->mor_names[mors[j]] + " . " + C->mor_names[mors[i]]);
      comps.push_back({static_cast<int>(j), static_cast<int>(i), h});
    }
  R.cat = FinCategory::make(b.name, b.objects, b.mors, b.srcs, b.tgts, idents, comps);
  R.incl = CatFunctor{R.cat, C, R.obj_of, R.mor_of};
  return R;
}

// ===========================================================================
// Enumeration and analysis
// ===========================================================================

std::vector<CatFunctor> enumerate_functors(const CatPtr& C, const CatPtr& D, const Caps& caps) {
  std::vector<CatFunctor> out;
  const int no = C->num_objects();
  const int nm = C->num_morphisms();
  // Non-identity morphisms get assigned by backtracking; identities are forced.
  std::vector<int> free_mors;
  for (int f = 0; f < nm; ++f)
    if (!C->is_identity(f)) free_mors.push_back(f);

  std::vector<int> omap(no, 0), mmap(nm, -1);
  long long visited = 0;

  // Candidate count guard before starting: |obj(D)|^|obj(C)| drives the walk.
  double est = 1;
  for (int i = 0; i < no; ++i) est *= std::max(1, D->num_objects());
  if (est > static_cast<double>(caps.enum_candidates) * 1e6)
    fail(Err::SizeExceeded, "functor enumeration space too large");

  auto consistent_mor = [&](int f, int img) {
    if (D->src(img) != omap[C->src(f)] || D->tgt(img) != omap[C->tgt(f)]) return false;
    // check all compositions with already-assigned morphisms
    for (int g = 0; g < nm; ++g) {
      if (mmap[g] < 0) continue;
      if (C->composable(g, f)) {
        int gf = C->compose(g, f);
        if (mmap[gf] >= 0 && D->compose(mmap[g], img) != mmap[gf]) return false;
      }
      if (C->composable(f, g)) {
        int fg = C->compose(f, g);
        if (mmap[fg] >= 0 && D->compose(img, mmap[g]) != mmap[fg]) return false;
      }
    }
    if (C->composable(f, f)) {
      int ff = C->compose(f, f);
      if (mmap[ff] >= 0 && D->compose(img, img) != mmap[ff]) return false;
    }
    return true;
  };

  std::function<void(size_t)> assign_mors = [&](size_t k) {
    if (++visited > caps.enum_candidates)
      fail(Err::SizeExceeded, "functor enumeration candidate cap");
    if (k == free_mors.size()) {
      CatFunctor F{C, D, omap, mmap};
      validate_functor(F);  // belt and braces; search invariants should ensure it
      out.push_back(std::move(F));
      return;
    }
    int f = free_mors[k];
    for (int img : D->hom(omap[C->src(f)], omap[C->tgt(f)])) {
      if (!consistent_mor(f, img)) continue;
      mmap[f] = img;
      assign_mors(k + 1);
      mmap[f] = -1;
    }
  };

  std::function<void(int)> assign_objs = [&](int x) {
    if (x == no) {
      for (int y = 0; y < no; ++y) mmap[C->identity(y)] = D->identity(omap[y]);
      assign_mors(0);
      for (int y = 0; y < no; ++y) mmap[C->identity(y)] = -1;
      return;
    }
    for (int img = 0; img < D->num_objects(); ++img) {
      omap[x] = img;
      assign_objs(x + 1);
    }
  };
  if (no == 0) {
    out.push_back(CatFunctor{C, D, {}, {}});
    return out;
  }
  assign_objs(0);
  return out;
}

std::vector<NatTransformation> enumerate_nats(const CatFunctor& F, const CatFunctor& G,
                                              const Caps& caps) {
  std::vector<NatTransformation> out;
  const FinCategory& C = *F.source;
  const FinCategory& D = *F.target;
  const int no = C.num_objects();
  std::vector<int> comp(no, -1);
  long long visited = 0;
  std::function<void(int)> go = [&](int x) {
    if (++visited > caps.enum_candidates)
      fail(Err::SizeExceeded, "transformation enumeration candidate cap");
    if (x == no) {
      out.push_back(NatTransformation{F, G, comp});
      return;
    }
    for (int c : D.hom(F.obj_map[x], G.obj_map[x])) {
      bool ok = true;
      // naturality against already-fixed components
      for (int f = 0; f < C.num_morphisms() && ok; ++f) {
        int sx = C.src(f), tx = C.tgt(f);
        if (sx == x && comp[tx] >= 0 && tx != x) {
          if (D.compose(comp[tx], F.mor_map[f]) != D.compose(G.mor_map[f], c)) ok = false;
        } else if (tx == x && comp[sx] >= 0 && sx != x) {
          if (D.compose(c, F.mor_map[f]) != D.compose(G.mor_map[f], comp[sx])) ok = false;
        } else if (sx == x && tx == x) {
          if (D.compose(c, F.mor_map[f]) != D.compose(G.mor_map[f], c)) ok = false;
        }
      }
      if (!ok) continue;
      comp[x] = c;
      go(x + 1);
      comp[x] = -1;
    }
  };
  go(0);
  return out;
}

std::vector<CatFunctor> enumerate_functors_over(const CatFunctor& q, const CatFunctor& p,
                                                const Caps& caps) {
  // Backtracking as in enumerate_functors, with images pinned to the fibers.
  std::vector<CatFunctor> out;
  const CatPtr T = q.source;
  const CatPtr X = p.source;
  if (!FinCategory::same_presentation(*q.target, *p.target))
    fail(Err::EndpointMismatch, "enumerate_functors_over bases differ");
  const int no = T->num_objects();
  const int nm = T->num_morphisms();
  std::vector<std::vector<int>> obj_candidates(no);
  for (int t = 0; t < no; ++t)
    for (int x = 0; x < X->num_objects(); ++x)
      if (p.obj_map[x] == q.obj_map[t]) obj_candidates[t].push_back(x);
  std::vector<int> free_mors;
  for (int f = 0; f < nm; ++f)
    if (!T->is_identity(f)) free_mors.push_back(f);
  std::vector<int> omap(no, -1), mmap(nm, -1);
  long long visited = 0;

  auto consistent_mor = [&](int f, int img) {
    if (X->src(img) != omap[T->src(f)] || X->tgt(img) != omap[T->tgt(f)]) return false;
    if (p.mor_map[img] != q.mor_map[f]) return false;
    for (int g = 0; g < nm; ++g) {
      if (mmap[g] < 0) continue;
      if (T->composable(g, f)) {
        int gf = T->compose(g, f);
        if (mmap[gf] >= 0 && X->compose(mmap[g], img) != mmap[gf]) return false;
      }
      if (T->composable(f, g)) {
        int fg = T->compose(f, g);
        if (mmap[fg] >= 0 && X->compose(img, mmap[g]) != mmap[fg]) return false;
      }
    }
    if (T->composable(f, f)) {
      int ff = T->compose(f, f);
      if (mmap[ff] >= 0 && X->compose(img, img) != mmap[ff]) return false;
    }
    return true;
  };
  std::function<void(size_t)> assign_mors = [&](size_t k) {
    if (++visited > caps.enum_candidates) fail(Err::SizeExceeded, "over-enumeration candidate cap");
    if (k == free_mors.size()) {
      CatFunctor F{T, X, omap, mmap};
      validate_functor(F);
      out.push_back(std::move(F));
      return;
    }
    int f = free_mors[k];
    for (int img : X->hom(omap[T->src(f)], omap[T->tgt(f)])) {
      if (!consistent_mor(f, img)) continue;
      mmap[f] = img;
      assign_mors(k + 1);
      mmap[f] = -1;
    }
  };
  std::function<void(int)> assign_objs = [&](int t) {
    if (t == no) {
      for (int y = 0; y < no; ++y) mmap[T->identity(y)] = X->identity(omap[y]);
      assign_mors(0);
      for (int y = 0; y < no; ++y) mmap[T->identity(y)] = -1;
      return;
    }
    for (int img : obj_candidates[t]) {
      omap[t] = img;
      assign_objs(t + 1);
    }
  };
  if (no == 0) {
    out.push_back(CatFunctor{T, X, {}, {}});
    return out;
  }
  assign_objs(0);
  return out;
}

FunctorReport analyze_functor(const CatFunctor& F) {
  FunctorReport r;
  const FinCategory& C = *F.source;
  const FinCategory& D = *F.target;
  r.fully_faithful = true;
  for (int x = 0; x < C.num_objects() && r.fully_faithful; ++x)
    for (int y = 0; y < C.num_objects() && r.fully_faithful; ++y) {
      auto dom = C.hom(x, y);
      auto cod = D.hom(F.obj_map[x], F.obj_map[y]);
      if (dom.size() != cod.size()) {
        r.fully_faithful = false;
        break;
      }
      std::vector<int> images;
      for (int f : dom) images.push_back(F.mor_map[f]);
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) r.fully_faithful = false;
    }
  r.essentially_surjective = true;
  for (int d = 0; d < D.num_objects(); ++d) {
    bool hit = false;
    for (int x = 0; x < C.num_objects() && !hit; ++x)
      if (D.isomorphic_objects(F.obj_map[x], d)) hit = true;
    if (!hit) {
      r.essentially_surjective = false;
      break;
    }
  }
  r.equivalence = r.fully_faithful && r.essentially_surjective;
  r.conservative = true;
  for (int f = 0; f < C.num_morphisms(); ++f)
    if (D.is_iso(F.mor_map[f]) && !C.is_iso(f)) {
      r.conservative = false;
      break;
    }
  std::vector<int> seen(D.num_objects(), 0);
  for (int x : F.obj_map) seen[x]++;
  r.iso_on_objects = C.num_objects() == D.num_objects() &&
                     std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; });
  return r;
}

static std::optional<TerminalWitness> find_extremal(const CatPtr& C, bool terminal) {
  for (int t = 0; t < C->num_objects(); ++t) {
    TerminalWitness w;
    w.object = t;
    w.arrows.assign(C->num_objects(), -1);
    bool ok = true;
    for (int x = 0; x < C->num_objects() && ok; ++x) {
      auto h = terminal ? C->hom(x, t) : C->hom(t, x);
      if (h.size() != 1)
        ok = false;
      else
        w.arrows[x] = h[0];
    }
    if (ok) return w;
  }
  return std::nullopt;
}

std::optional<TerminalWitness> find_terminal_object(const CatPtr& C) {
  return find_extremal(C, true);
}
std::optional<TerminalWitness> find_initial_object(const CatPtr& C) {
  return find_extremal(C, false);
}

bool is_isomorphism_of_categories(const CatFunctor& F) {
  const FinCategory& C = *F.source;
  const FinCategory& D = *F.target;
  if (C.num_objects() != D.num_objects() || C.num_morphisms() != D.num_morphisms()) return false;
  std::vector<int> oseen(D.num_objects(), 0), mseen(D.num_morphisms(), 0);
  for (int x : F.obj_map) oseen[x]++;
  for (int f : F.mor_map) mseen[f]++;
  auto one = [](int k) { return k == 1; };
  return std::all_of(oseen.begin(), oseen.end(), one) &&
         std::all_of(mseen.begin(), mseen.end(), one);
}

}  // namespace catena
