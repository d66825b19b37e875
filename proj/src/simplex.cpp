#include "catena/simplex.hpp"

#include <algorithm>
#include <sstream>

namespace catena {

std::string SimplexMap::render() const {
  std::ostringstream os;
  os << "[" << n << "]->[" << m << "]:";
  for (int i = 0; i <= n; ++i) {
    if (i) os << ",";
    os << values[i];
  }
  return os.str();
}

SimplexMap validate_simplex_map(int n, int m, std::vector<int> values) {
  if (n < 0 || m < 0) fail(Err::OutOfRange, "negative rank");
  if (static_cast<int>(values.size()) != n + 1)
    fail(Err::OutOfRange, "expected " + std::to_string(n + 1) + " values");
  for (int i = 0; i <= n; ++i) {
    if (values[i] < 0 || values[i] > m)
      fail(Err::OutOfRange, "value " + std::to_string(values[i]) + " at position " +
                                std::to_string(i) + " outside [0," + std::to_string(m) + "]");
    if (i > 0 && values[i] < values[i - 1])
      fail(Err::NotMonotone, std::to_string(values[i - 1]) + " > " + std::to_string(values[i]) +
                                 " at position " + std::to_string(i));
  }
  return SimplexMap{n, m, std::move(values)};
}

SimplexMap identity_simplex_map(int n) {
  std::vector<int> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i;
  return SimplexMap{n, n, std::move(v)};
}

SimplexMap compose_simplex(const SimplexMap& beta, const SimplexMap& alpha) {
  if (alpha.m != beta.n) fail(Err::EndpointMismatch, "simplex composition ranks");
  std::vector<int> v(alpha.n + 1);
  for (int i = 0; i <= alpha.n; ++i) v[i] = beta.values[alpha.values[i]];
  return SimplexMap{alpha.n, beta.m, std::move(v)};
}

SimplexMap ordinal_sum(const SimplexMap& a, const SimplexMap& b) {
  // Concatenation on generators; the shared vertex forces a to hit its top
  // and b its bottom, which the active/active envelope use satisfies.
  if (a.values[a.n] != a.m || b.values[0] != 0)
    fail(Err::HypothesisFailed, "ordinal sum needs boundary-preserving maps");
  std::vector<int> v(a.n + b.n + 1);
  for (int i = 0; i <= a.n; ++i) v[i] = a.values[i];
  for (int i = 1; i <= b.n; ++i) v[a.n + i] = a.m + b.values[i];
  return SimplexMap{a.n + b.n, a.m + b.m, std::move(v)};
}

SimplexMap parse_simplex_map(const std::string& text) {
  // format: [n]->[m]:v0,v1,...,vn
  auto bad = [&]() -> void { fail(Err::ParseError, "simplex map '" + text + "'"); };
  size_t p1 = text.find("]->[");
  if (text.empty() || text[0] != '[' || p1 == std::string::npos) bad();
  size_t p2 = text.find("]:", p1 + 4);
  if (p2 == std::string::npos) bad();
  int n = 0, m = 0;
  try {
    n = std::stoi(text.substr(1, p1 - 1));
    m = std::stoi(text.substr(p1 + 4, p2 - p1 - 4));
  } catch (...) {
    bad();
  }
  std::vector<int> vals;
  std::stringstream ss(text.substr(p2 + 2));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      vals.push_back(std::stoi(tok));
    } catch (...) {
      bad();
    }
  }
  return validate_simplex_map(n, m, std::move(vals));
}

SimplexClass classify_simplex_map(const SimplexMap& a) {
  SimplexClass c;
  c.active = a.values[0] == 0 && a.values[a.n] == a.m;
  c.inert = true;
  for (int i = 0; i < a.n; ++i)
    if (a.values[i + 1] != a.values[i] + 1) {
      c.inert = false;
      break;
    }
  return c;
}

ActiveInertFactorization factorize_active_inert(const SimplexMap& a) {
  int lo = a.values[0], hi = a.values[a.n];
  std::vector<int> act(a.n + 1), inrt(hi - lo + 1);
  for (int i = 0; i <= a.n; ++i) act[i] = a.values[i] - lo;
  for (int i = 0; i <= hi - lo; ++i) inrt[i] = lo + i;
  return ActiveInertFactorization{SimplexMap{a.n, hi - lo, std::move(act)},
                                  SimplexMap{hi - lo, a.m, std::move(inrt)}};
}

static void enumerate_monotone(int n, int m, std::vector<int>& cur,
                               std::vector<std::vector<int>>& out, long long cap) {
  if (static_cast<long long>(out.size()) > cap) fail(Err::SizeExceeded, "simplex map enumeration");
  if (static_cast<int>(cur.size()) == n + 1) {
    out.push_back(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int v = lo; v <= m; ++v) {
    cur.push_back(v);
    enumerate_monotone(n, m, cur, out, cap);
    cur.pop_back();
  }
}

std::vector<SimplexMap> enumerate_simplex_maps(int n, int m, SimplexFilter filter,
                                               const Caps& caps) {
  if (n > caps.simplex_rank || m > caps.simplex_rank)
    fail(Err::SizeExceeded, "rank above cap " + std::to_string(caps.simplex_rank));
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  enumerate_monotone(n, m, cur, raw, caps.enum_candidates);
  std::vector<SimplexMap> out;
  for (auto& v : raw) {
    SimplexMap s{n, m, v};
    auto c = classify_simplex_map(s);
    if (filter == SimplexFilter::Active && !c.active) continue;
    if (filter == SimplexFilter::Inert && !c.inert) continue;
    out.push_back(std::move(s));
  }
  return out;
}

int TruncatedSimplexCategory::find(const SimplexMap& a) const {
  for (size_t i = 0; i < map_of.size(); ++i)
    if (map_of[i] == a) return static_cast<int>(i);
  return -1;
}
bool TruncatedSimplexCategory::inert_base(int mor) const {
  return classify_simplex_map(map_of[mor]).inert;
}
bool TruncatedSimplexCategory::active_base(int mor) const {
  return classify_simplex_map(map_of[mor]).active;
}

TruncatedSimplexCategory truncated_simplex_category(int N, const Caps& caps) {
  TruncatedSimplexCategory R;
  R.N = N;
  CatBuilder b("Delta<=" + std::to_string(N));
  std::vector<int> idents;
  for (int i = 0; i <= N; ++i) b.objects.push_back("d" + std::to_string(i));
  Caps local = caps;
  local.simplex_rank = std::max(caps.simplex_rank, N);
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= N; ++m)
      for (auto& s : enumerate_simplex_maps(n, m, SimplexFilter::All, local)) {
        b.mors.push_back(s.render());
        b.srcs.push_back(n);
        b.tgts.push_back(m);
        R.map_of.push_back(s);
      }
  idents.resize(N + 1);
  for (size_t k = 0; k < R.map_of.size(); ++k)
    if (R.map_of[k] == identity_simplex_map(R.map_of[k].n))
      idents[R.map_of[k].n] = static_cast<int>(k);
  std::vector<std::array<int, 3>> comps;
  for (size_t i = 0; i < R.map_of.size(); ++i)
    for (size_t j = 0; j < R.map_of.size(); ++j)
      if (R.map_of[j].n == R.map_of[i].m) {
        auto c = compose_simplex(R.map_of[j], R.map_of[i]);
        comps.push_back({static_cast<int>(j), static_cast<int>(i), R.find(c)});
      }
  R.delta = FinCategory::make(b.name, b.objects, b.mors, b.srcs, b.tgts, idents, comps);
  R.delta_op = opposite_category(R.delta);
  return R;
}

}  // namespace catena
