#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catena/simplex.hpp"

using namespace catena;

TEST_CASE("validation of monotone maps") {
  auto s = validate_simplex_map(1, 2, {0, 2});
  CHECK(s.render() == "[1]->[2]:0,2");
  CHECK_NOTHROW(validate_simplex_map(1, 0, {0, 0}));
  bool threw = false;
  try {
    validate_simplex_map(2, 1, {1, 0, 1});
  } catch (const Error& e) {
    threw = e.code == Err::NotMonotone;
  }
  CHECK(threw);
  threw = false;
  try {
    validate_simplex_map(1, 1, {0, 5});
  } catch (const Error& e) {
    threw = e.code == Err::OutOfRange;
  }
  CHECK(threw);
}

TEST_CASE("classification from the definition") {
  auto c1 = classify_simplex_map(validate_simplex_map(1, 2, {0, 2}));
  CHECK(c1.active);
  CHECK_FALSE(c1.inert);
  auto c2 = classify_simplex_map(validate_simplex_map(1, 0, {0, 0}));
  CHECK(c2.active);
  CHECK_FALSE(c2.inert);
  auto c3 = classify_simplex_map(identity_simplex_map(3));
  CHECK(c3.active);
  CHECK(c3.inert);
  auto c4 = classify_simplex_map(validate_simplex_map(1, 3, {1, 2}));
  CHECK_FALSE(c4.active);
  CHECK(c4.inert);
}

TEST_CASE("factorization recomposes and is unique by brute force") {
  auto shifted = validate_simplex_map(1, 3, {1, 2});
  auto fac = factorize_active_inert(shifted);
  CHECK(fac.active == identity_simplex_map(1));
  CHECK(compose_simplex(fac.inert, fac.active) == shifted);

  auto idm = identity_simplex_map(2);
  auto fid = factorize_active_inert(idm);
  CHECK(fid.active == idm);
  CHECK(fid.inert == idm);

  auto a02 = validate_simplex_map(1, 2, {0, 2});
  auto f02 = factorize_active_inert(a02);
  CHECK(f02.active == a02);
  CHECK(f02.inert == identity_simplex_map(2));

  // exhaustive uniqueness for all maps of ranks <= 4
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (auto& alpha : enumerate_simplex_maps(n, m, SimplexFilter::All)) {
        auto fac2 = factorize_active_inert(alpha);
        CHECK(classify_simplex_map(fac2.active).active);
        CHECK(classify_simplex_map(fac2.inert).inert);
        CHECK(compose_simplex(fac2.inert, fac2.active) == alpha);
        int count = 0;
        for (int mid = 0; mid <= m; ++mid)
          for (auto& a : enumerate_simplex_maps(n, mid, SimplexFilter::Active))
            for (auto& i : enumerate_simplex_maps(mid, m, SimplexFilter::Inert))
              if (compose_simplex(i, a) == alpha) ++count;
        CHECK(count == 1);
      }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_simplex_maps(2, 1, SimplexFilter::Active).size() == 2);
  CHECK(enumerate_simplex_maps(1, 2, SimplexFilter::Inert).size() == 2);
  CHECK(enumerate_simplex_maps(0, 0, SimplexFilter::All).size() == 1);
  bool threw = false;
  try {
    enumerate_simplex_maps(9, 1, SimplexFilter::All);
  } catch (const Error& e) {
    threw = e.code == Err::SizeExceeded;
  }
  CHECK(threw);
}

TEST_CASE("classes are closed under composition up to rank 5") {
  Caps caps;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (int l = 0; l <= 3; ++l)
        for (auto& a : enumerate_simplex_maps(n, m, SimplexFilter::All, caps))
          for (auto& b : enumerate_simplex_maps(m, l, SimplexFilter::All, caps)) {
            auto c = compose_simplex(b, a);
            auto ca = classify_simplex_map(a);
            auto cb = classify_simplex_map(b);
            auto cc = classify_simplex_map(c);
            if (ca.active && cb.active) CHECK(cc.active);
            if (ca.inert && cb.inert) CHECK(cc.inert);
          }
}

TEST_CASE("inert maps into the next rank decompose as edge extensions") {
  // every inert [n] -> [n+1] is either the bottom-skipping or top-skipping
  // inclusion; iterated decomposition recomposes arbitrary inerts
  for (int n = 0; n <= 4; ++n) {
    auto inerts = enumerate_simplex_maps(n, n + 1, SimplexFilter::Inert);
    CHECK(inerts.size() == 2);
    for (auto& i : inerts) CHECK((i.values[0] == 0 || i.values[n] == n + 1));
  }
  for (int n = 0; n <= 3; ++n)
    for (int m = n; m <= 4; ++m)
      for (auto& i : enumerate_simplex_maps(n, m, SimplexFilter::Inert)) {
        // peel off one edge extension at a time and recompose
        SimplexMap acc = i;
        std::vector<SimplexMap> steps;
        while (acc.m > acc.n) {
          // reduce codomain by dropping an unused endpoint
          std::vector<int> v = acc.values;
          SimplexMap step;
          if (v[0] > 0) {
            // bottom extension [acc.m - 1] -> [acc.m] skipping 0... invert it
            std::vector<int> inc(acc.m);
            for (int k = 0; k < acc.m; ++k) inc[k] = k + 1;
            step = validate_simplex_map(acc.m - 1, acc.m, inc);
            for (auto& x : v) --x;
          } else {
            std::vector<int> inc(acc.m);
            for (int k = 0; k < acc.m; ++k) inc[k] = k;
            step = validate_simplex_map(acc.m - 1, acc.m, inc);
          }
          steps.push_back(step);
          acc = validate_simplex_map(acc.n, acc.m - 1, v);
        }
        CHECK(acc == identity_simplex_map(n));
        SimplexMap rebuilt = acc;
        for (auto it = steps.rbegin(); it != steps.rend(); ++it)
          rebuilt = compose_simplex(*it, rebuilt);
        CHECK(rebuilt == i);
      }
}

TEST_CASE("factorization round-trips for all maps of ranks <= 5") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m)
      for (auto& a : enumerate_simplex_maps(n, m, SimplexFilter::All)) {
        auto f = factorize_active_inert(a);
        CHECK(compose_simplex(f.inert, f.active) == a);
      }
}

TEST_CASE("textual rendering round-trips") {
  auto a = validate_simplex_map(2, 3, {0, 2, 2});
  CHECK(parse_simplex_map(a.render()) == a);
}

TEST_CASE("truncated simplex category composes correctly") {
  auto T = truncated_simplex_category(2);
  const FinCategory& D = *T.delta;
  // morphism count: sum over n,m <= 2 of C(n+m+1, n+1)
  CHECK(D.num_morphisms() == 1 + 2 + 3 + 1 + 3 + 6 + 1 + 4 + 10);
  CHECK(D.num_objects() == 3);
  // opposite agrees
  CHECK(T.delta_op->num_morphisms() == D.num_morphisms());
  // inert/active bookkeeping
  int k = T.find(validate_simplex_map(1, 2, {0, 2}));
  CHECK(k >= 0);
  CHECK(T.active_base(k));
  CHECK_FALSE(T.inert_base(k));
}
