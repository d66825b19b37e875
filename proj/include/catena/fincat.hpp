#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catena/common.hpp"

namespace catena {

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

// A finite category by complete presentation: every morphism is listed and
// the composition table is total on composable pairs. Validation happens at
// construction; instances are immutable afterwards.
class FinCategory {
 public:
  std::string name;
  std::vector<std::string> obj_names;
  std::vector<std::string> mor_names;
  std::vector<int> mor_src;
  std::vector<int> mor_tgt;
  std::vector<int> obj_identity;  // per object: morphism id

  int num_objects() const { return static_cast<int>(obj_names.size()); }
  int num_morphisms() const { return static_cast<int>(mor_names.size()); }

  int src(int f) const { return mor_src[f]; }
  int tgt(int f) const { return mor_tgt[f]; }
  int identity(int x) const { return obj_identity[x]; }
  bool is_identity(int f) const { return obj_identity[mor_src[f]] == f && mor_src[f] == mor_tgt[f]; }

  // compose(g, f) = g after f; requires src(g) == tgt(f).
  int compose(int g, int f) const;
  bool composable(int g, int f) const { return mor_src[g] == mor_tgt[f]; }

  const std::vector<int>& out_morphisms(int x) const { return out_[x]; }
  const std::vector<int>& in_morphisms(int x) const { return in_[x]; }
  // Morphisms x -> y in id order.
  std::vector<int> hom(int x, int y) const;

  bool is_iso(int f) const { return inverse_[f] >= 0; }
  int inverse(int f) const;  // -1 when not invertible
  bool isomorphic_objects(int x, int y) const;

  int object_index(const std::string& n) const;    // -1 when absent
  int morphism_index(const std::string& n) const;  // -1 when absent

  std::string describe_morphism(int f) const;

  // Builds and validates. comp lists composites of non-forced pairs as
  // (g, f, g_after_f); pairs involving identities are filled in from the unit
  // laws and checked for consistency when supplied anyway.
  static CatPtr make(std::string name,
                     std::vector<std::string> objects,
                     std::vector<std::string> mor_names,
                     std::vector<int> mor_src,
                     std::vector<int> mor_tgt,
                     std::vector<int> identities,
                     const std::vector<std::array<int, 3>>& comp);
  // Same, but skips the law scan. Only for constructions whose laws hold by
  // a theorem about already-validated inputs (Grothendieck totals); tests
  // re-validate small instances through the checked path.
  static CatPtr make_trusted(std::string name,
                             std::vector<std::string> objects,
                             std::vector<std::string> mor_names,
                             std::vector<int> mor_src,
                             std::vector<int> mor_tgt,
                             std::vector<int> identities,
                             const std::vector<std::array<int, 3>>& comp);
  // Full law scan on demand (what make() runs).
  void revalidate() const { validate(); }

  static bool same_presentation(const FinCategory& a, const FinCategory& b);

 private:
  friend struct CatBuilder;
  FinCategory() = default;
  static CatPtr make_impl(std::string name, std::vector<std::string> objects,
                          std::vector<std::string> mor_names, std::vector<int> mor_src,
                          std::vector<int> mor_tgt, std::vector<int> identities,
                          const std::vector<std::array<int, 3>>& comp, bool check_laws);
  void freeze(bool check_laws);  // index + invert (+ validate)
  void validate() const;

  // Composition is stored per-f as a sorted (g -> g∘f) row: categories of
  // fiber products get large enough that an m×m matrix is wasteful.
  std::vector<std::vector<std::pair<int, int>>> comp_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<int> inverse_;
  std::unordered_map<std::string, int> obj_index_, mor_index_;
};

// Mutable staging area for a category under construction.
struct CatBuilder {
  std::string name;
  std::vector<std::string> objects;
  std::vector<std::string> mors;
  std::vector<int> srcs, tgts;
  std::vector<int> idents;                  // per object, filled by add_object
  std::vector<std::array<int, 3>> comps;    // (g, f, g∘f)

  explicit CatBuilder(std::string n) : name(std::move(n)) {}
  int add_object(const std::string& obj_name, const std::string& id_name = "");
  int add_morphism(const std::string& mor_name, int s, int t);
  void set_composite(int g, int f, int h) { comps.push_back({g, f, h}); }
  CatPtr build() const;
};

// -------------------------------------------------------------------------
// Functors and natural transformations
// -------------------------------------------------------------------------

struct CatFunctor {
  CatPtr source;
  CatPtr target;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  int on_obj(int x) const { return obj_map[x]; }
  int on_mor(int f) const { return mor_map[f]; }
};

// Throws EndpointMismatch / ValidationError naming the offending ids.
void validate_functor(const CatFunctor& F);
CatFunctor identity_functor(const CatPtr& C);
CatFunctor constant_functor(const CatPtr& C, const CatPtr& D, int obj);
// G ∘ F
CatFunctor compose_functors(const CatFunctor& G, const CatFunctor& F);
bool functors_equal(const CatFunctor& F, const CatFunctor& G);

struct NatTransformation {
  CatFunctor source;  // F
  CatFunctor target;  // G, same endpoints
  std::vector<int> component;  // per object of the source category
};

void validate_nat(const NatTransformation& a);
NatTransformation identity_nat(const CatFunctor& F);
// β ∘v α for α : F ⇒ G, β : G ⇒ H
NatTransformation vcomp(const NatTransformation& beta, const NatTransformation& alpha);
// α ▹ H : F∘H ⇒ G∘H for H landing in the source category of α
NatTransformation whisker_pre(const NatTransformation& alpha, const CatFunctor& H);
// K ◃ α : K∘F ⇒ K∘G
NatTransformation whisker_post(const CatFunctor& K, const NatTransformation& alpha);
bool nat_invertible(const NatTransformation& a);
NatTransformation nat_inverse(const NatTransformation& a);
bool nats_equal(const NatTransformation& a, const NatTransformation& b);

// -------------------------------------------------------------------------
// Derived categories
// -------------------------------------------------------------------------

CatPtr opposite_category(const CatPtr& C);

struct ProductResult {
  CatPtr cat;
  CatFunctor pr0, pr1;
  // pair (x, y) -> object/morphism index
  int obj(int x, int y) const;
  int mor(int u, int v) const;
  int nobj1 = 0, nmor1 = 0;
};
ProductResult product_category(const CatPtr& C, const CatPtr& D, const Caps& caps = {});

struct PullbackResult {
  CatPtr cat;
  CatFunctor pr0, pr1;  // to the source of F resp. G
  std::vector<std::pair<int, int>> obj_pairs, mor_pairs;
  int find_obj(int x, int y) const;
  int find_mor(int u, int v) const;
};
// F : C -> E, G : D -> E with equal targets.
PullbackResult pullback_category(const CatFunctor& F, const CatFunctor& G, const Caps& caps = {});

struct CommaResult {
  CatPtr cat;
  CatFunctor pr0, pr1;  // to the sources of F resp. G
  // object k of cat is (c, d, φ : F c -> G d)
  std::vector<std::array<int, 3>> objects;
  std::vector<std::pair<int, int>> mor_pairs;  // (u in C, v in D)
  int find_obj(int c, int d, int phi) const;
};
CommaResult comma_category(const CatFunctor& F, const CatFunctor& G, const Caps& caps = {});

struct ArrowResult {
  CatPtr cat;       // objects = morphisms of C, morphisms = commuting squares
  CatFunctor ev0, ev1, diag;
  std::vector<std::pair<int, int>> mor_pairs;  // square (u, v)
  // Squares are keyed by all four pieces of data; (u, v) alone is ambiguous.
  int find_mor(int src_obj, int u, int v, int tgt_obj) const;
};
ArrowResult arrow_category(const CatPtr& C, const Caps& caps = {});

struct FunctorCategoryResult {
  CatPtr cat;
  std::vector<CatFunctor> objects;
  std::vector<NatTransformation> morphisms;
  int find_functor(const CatFunctor& F) const;
  int find_nat(const NatTransformation& a) const;
};
FunctorCategoryResult functor_category(const CatPtr& C, const CatPtr& D, const Caps& caps = {});

struct SubcatResult {
  CatPtr cat;
  CatFunctor incl;
  std::vector<int> obj_of, mor_of;  // sub index -> ambient index
  std::vector<int> obj_back, mor_back;  // ambient index -> sub index or -1
};
SubcatResult full_subcategory(const CatPtr& C, const std::vector<int>& objs, std::string name = "");
// Objects plus an explicit morphism subset (must be closed under composition
// and contain the identities of the chosen objects).
SubcatResult subcategory(const CatPtr& C, const std::vector<int>& objs,
                         const std::vector<int>& mors, std::string name = "");

// -------------------------------------------------------------------------
// Enumeration and analysis
// -------------------------------------------------------------------------

std::vector<CatFunctor> enumerate_functors(const CatPtr& C, const CatPtr& D, const Caps& caps = {});
std::vector<NatTransformation> enumerate_nats(const CatFunctor& F, const CatFunctor& G,
                                              const Caps& caps = {});
// All H : source(q) -> source(p) with p . H = q on the nose.
std::vector<CatFunctor> enumerate_functors_over(const CatFunctor& q, const CatFunctor& p,
                                                const Caps& caps = {});

struct FunctorReport {
  bool fully_faithful = false;
  bool essentially_surjective = false;
  bool equivalence = false;
  bool conservative = false;
  bool iso_on_objects = false;
};
FunctorReport analyze_functor(const CatFunctor& F);

struct TerminalWitness {
  int object;
  std::vector<int> arrows;  // per object x: the unique x -> t
};
std::optional<TerminalWitness> find_terminal_object(const CatPtr& C);
std::optional<TerminalWitness> find_initial_object(const CatPtr& C);

// Strict isomorphism of categories established by an explicit functor that is
// bijective on objects and morphisms.
bool is_isomorphism_of_categories(const CatFunctor& F);

}  // namespace catena
