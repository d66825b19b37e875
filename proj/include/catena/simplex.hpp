#pragma once

#include <string>
#include <vector>

#include "catena/common.hpp"
#include "catena/fincat.hpp"

namespace catena {

// A monotone map [n] -> [m] of finite nonempty ordinals, stored in the Delta
// orientation. Consumers working over Delta^op reindex, never this type.
struct SimplexMap {
  int n = 0;  // domain rank, representing {0, ..., n}
  int m = 0;  // codomain rank
  std::vector<int> values;  // n + 1 entries in {0, ..., m}

  int operator()(int i) const { return values[i]; }
  bool operator==(const SimplexMap& o) const = default;
  std::string render() const;  // "[n]->[m]:v0,v1,...,vn"
};

SimplexMap validate_simplex_map(int n, int m, std::vector<int> values);
SimplexMap identity_simplex_map(int n);
// beta after alpha
SimplexMap compose_simplex(const SimplexMap& beta, const SimplexMap& alpha);
// Concatenation [n0]+[n1] -> [m0]+[m1] used by envelope shape composition.
SimplexMap ordinal_sum(const SimplexMap& a, const SimplexMap& b);
SimplexMap parse_simplex_map(const std::string& text);

struct SimplexClass {
  bool active = false;
  bool inert = false;
};
SimplexClass classify_simplex_map(const SimplexMap& a);

struct ActiveInertFactorization {
  SimplexMap active;  // [n] -> [alpha(n) - alpha(0)]
  SimplexMap inert;   // shifted interval inclusion into [m]
};
ActiveInertFactorization factorize_active_inert(const SimplexMap& a);

enum class SimplexFilter { All, Active, Inert };
std::vector<SimplexMap> enumerate_simplex_maps(int n, int m, SimplexFilter filter,
                                               const Caps& caps = {});

// The truncated simplex category Delta_{<=N} as a finite category, objects
// d0..dN and one morphism per monotone map, plus op bookkeeping for bases.
struct TruncatedSimplexCategory {
  CatPtr delta;        // morphism d_n -> d_m is a simplex map [n] -> [m]
  CatPtr delta_op;     // morphism d_n -> d_k is a simplex map [k] -> [n]
  int N = 0;
  std::vector<SimplexMap> map_of;  // per morphism id (same ids in both)
  int find(const SimplexMap& a) const;
  bool inert_base(int mor) const;   // classification of the underlying map
  bool active_base(int mor) const;
};
TruncatedSimplexCategory truncated_simplex_category(int N, const Caps& caps = {});

}  // namespace catena
