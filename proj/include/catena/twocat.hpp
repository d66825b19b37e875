#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catena/fibration.hpp"
#include "catena/fincat.hpp"
#include "catena/simplex.hpp"

namespace catena {

class TwoCat;
using TwoCatPtr = std::shared_ptr<const TwoCat>;

// A strict finite 2-category: objects, a hom category per ordered pair, an
// identity 1-cell per object and composition tables for 1-cells and 2-cells.
// Composition may be partial (capped constructions such as envelopes mark the
// out-of-cap entries with -1 and set `partial`); validation then checks the
// laws on every defined composite and requires totality otherwise.
class TwoCat {
 public:
  std::string name;
  std::vector<std::string> obj_names;
  std::vector<CatPtr> hom;       // index a * n + b
  std::vector<int> id_one_cell;  // per object: object index in hom(a,a)
  // per triple (a,b,c) with index (a*n+b)*n+c:
  //   one[g * |hom(a,b)obj| + f]  -> object of hom(a,c)   (g in hom(b,c))
  //   two[beta * |hom(a,b)mor| + alpha] -> morphism of hom(a,c)
  std::vector<std::vector<int>> one, two;
  bool partial = false;
  // Weight grading drives partiality: a composite is defined exactly when the
  // weights sum to at most weight_cap. weight_cap == 0 means ungraded/total.
  // Envelope homs grade 1-cells by string length.
  std::vector<std::vector<int>> cell_weight;  // per pair index, per hom object
  int weight_cap = 0;
  int weight_of(int a, int b, int one_cell) const {
    return cell_weight.empty() ? 0 : cell_weight[a * num_objects() + b][one_cell];
  }

  int num_objects() const { return static_cast<int>(obj_names.size()); }
  const FinCategory& hom_at(int a, int b) const { return *hom[a * num_objects() + b]; }
  CatPtr hom_ptr(int a, int b) const { return hom[a * num_objects() + b]; }
  int triple(int a, int b, int c) const { return (a * num_objects() + b) * num_objects() + c; }

  // g in hom(b,c), f in hom(a,b); -1 only in partial mode (cap overflow).
  int compose1(int a, int b, int c, int g, int f) const;
  int compose2(int a, int b, int c, int beta, int alpha) const;
  // Throwing variants used where overflow must be loud.
  int compose1_strict(int a, int b, int c, int g, int f) const;

  int object_index(const std::string& n) const;

  static TwoCatPtr make(std::string name, std::vector<std::string> objects,
                        std::vector<CatPtr> hom, std::vector<int> id_one_cell,
                        std::vector<std::vector<int>> one, std::vector<std::vector<int>> two,
                        bool partial = false, std::vector<std::vector<int>> cell_weight = {},
                        int weight_cap = 0);

 private:
  TwoCat() = default;
  void validate() const;
};

// Left-normalized composite of a path of 1-cells between listed vertices;
// empty path gives the identity 1-cell. Vertices has one more entry than
// cells. Throws CapOverflow in partial mode when a composite is undefined.
int composite_one_cells(const TwoCat& A, const std::vector<int>& vertices,
                        const std::vector<int>& cells);

struct StrictTwoFunctor {
  TwoCatPtr source, target;
  std::vector<int> obj_map;
  std::vector<CatFunctor> hom_map;  // per pair index a*n+b
};

struct LaxFunctor {
  TwoCatPtr source, target;
  std::vector<int> obj_map;
  std::vector<CatFunctor> hom_map;
  std::vector<int> delta;                // per object a: 2-cell id_{Fa} => F(id_a)
  std::vector<std::vector<int>> gamma;   // per triple (a,b,c): [g * |hom(a,b)obj| + f]
};

struct TwoFunctorReport {
  bool ok = false;
  std::vector<std::string> failures;
};
TwoFunctorReport validate_strict_two_functor(const StrictTwoFunctor& F);
TwoFunctorReport validate_lax_functor(const LaxFunctor& F);

// Left-normalized comparison cell of a lax functor over a path segment:
// composite of the F-images => F(composite); delta on empty segments.
int lax_gamma_iterate(const LaxFunctor& F, const std::vector<int>& seg_verts,
                      const std::vector<int>& seg_cells);

StrictTwoFunctor identity_two_functor(const TwoCatPtr& A);
LaxFunctor strict_as_lax(const StrictTwoFunctor& F);
// Requires invertible delta and gamma; transports to a strict functor and
// validates (the transport exists only when they are identities, which is the
// strict-model reading; otherwise reports the blocking cell).
std::optional<StrictTwoFunctor> lax_as_strict(const LaxFunctor& F);
StrictTwoFunctor compose_strict_two_functors(const StrictTwoFunctor& G, const StrictTwoFunctor& F);
bool strict_two_functors_equal(const StrictTwoFunctor& F, const StrictTwoFunctor& G);
bool lax_functors_equal(const LaxFunctor& F, const LaxFunctor& G);

// ---------------------------------------------------------------------------
// Truncated Segal presentation and unstraightening
// ---------------------------------------------------------------------------

struct SegalPresentation {
  int N = 0;
  TwoCatPtr origin;                       // the 2-category it was built from
  TruncatedSimplexCategory delta;         // shared truncated base bookkeeping
  std::vector<CatPtr> fiber;              // X_0 .. X_N
  // action per morphism of delta_op: for the morphism d_n -> d_k (underlying
  // simplex map [k] -> [n]) a functor X_n -> X_k.
  std::vector<CatFunctor> action;
  // path bookkeeping: per level, each object is a path (vertices, cells) and
  // each morphism a tuple of component 2-cells
  std::vector<std::vector<std::vector<int>>> path_vertices;
  std::vector<std::vector<std::vector<int>>> path_cells;
  std::vector<std::vector<std::vector<int>>> mor_components;
  int find_path(int level, const std::vector<int>& vertices, const std::vector<int>& cells) const;
  int find_level_morphism(int level, int src_path, int tgt_path,
                          const std::vector<int>& components) const;
};
SegalPresentation segal_fibers(const TwoCatPtr& A, int N, const Caps& caps = {});

struct GlobularCompleteReport {
  bool globular = false;
  bool complete = false;
  std::string witness;
};
GlobularCompleteReport check_globular_complete(const SegalPresentation& pres);

// Rebuild the 2-category from its presentation; must equal the input on the
// nose (asserted by tests).
TwoCatPtr rebuild_from_presentation(const SegalPresentation& pres);

struct Unstraightened {
  SegalPresentation pres;
  GrothendieckResult gr;  // fibration over delta_op
};
Unstraightened unstraighten(const SegalPresentation& pres, const Caps& caps = {});

struct InertCocartReport {
  bool inert_cocartesian = false;
  int failing_edge = -1;           // base morphism id on failure
  std::vector<char> preserves_over;  // per base morphism: all lifts over it preserved
};
InertCocartReport check_inert_cocartesian(const Unstraightened& X, const Unstraightened& Y,
                                          const CatFunctor& T);

// Encode a lax functor as a map of unstraightened presentations and back.
struct FibrationMap {
  Unstraightened source, target;
  CatFunctor map;
};
FibrationMap lax_to_fibration_map(const LaxFunctor& F, int N, const Caps& caps = {});
LaxFunctor fibration_map_to_lax(const FibrationMap& fm);

// Builder used by fixtures, parsers and the envelope construction.
struct TwoCatBuilder {
  std::string name;
  std::vector<std::string> objects;
  std::vector<CatPtr> hom;
  std::vector<int> id_one_cell;
  std::vector<std::vector<int>> one, two;
  bool partial = false;
  std::vector<std::vector<int>> cell_weight;
  int weight_cap = 0;

  void init(int nobj);  // resizes hom/one/two tables
  TwoCatPtr build() const;
};

// Identity 2-cell on a 1-cell / vertical composition helpers on hom data.
inline int id2(const FinCategory& homcat, int one_cell) { return homcat.identity(one_cell); }

}  // namespace catena
