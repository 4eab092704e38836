#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galmck/relweyl.hpp"

using namespace galmck;
using namespace galmck::relweyl;
using namespace galmck::chevnorm;
using cyclo::Cyclotomic;

TEST_CASE("stabilizers agree with the element-level oracle") {
  for (auto [lab, q] : std::vector<std::pair<const char*, long>>{{"C2", 5}, {"G2", 3}}) {
    const auto& rs = rootsys::RootSystem::get(lab);
    auto d = build_torus(rs, q, false);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      TorusChar lam{std::vector<long>(rs.rank())};
      for (auto& e : lam.exps) e = (long)(rng() % (q - 1));
      auto stab = stabilizer_W(d, lam);
      // oracle: w stabilizes lambda iff lambda(w t w^{-1}) = lambda(t) for all t
      for (int w = 0; w < rs.weyl_order(); ++w) {
        bool fixes = true;
        for (long ti = 0; ti < d.order() && fixes; ++ti) {
          TorusElt t{std::vector<long>(rs.rank())};
          long tt = ti;
          for (int i = 0; i < rs.rank(); ++i) { t.c[i] = tt % d.invariants[i]; tt /= d.invariants[i]; }
          fixes = eval_char(d, lam, torus_weyl_act(d, w, t)) == eval_char(d, lam, t);
        }
        CHECK(fixes == std::binary_search(stab.begin(), stab.end(), w));
      }
    }
  }
}

TEST_CASE("stabilizer edge cases") {
  const auto& rs = rootsys::RootSystem::get("C2");
  auto d = build_torus(rs, 5, false);
  TorusChar triv{{0, 0}};
  CHECK((long)stabilizer_W(d, triv).size() == rs.weyl_order());
  // regular orbit: trivial stabilizer
  TorusChar reg{{1, 0}};
  if (orbit_size(d, reg) == rs.weyl_order())
    CHECK(stabilizer_W(d, reg).size() == 1);
  // order-2 lambda supported on the long simple coroot
  TorusChar lam{{0, 2}};
  auto stab = stabilizer_W(d, lam);
  CHECK(stab.size() * orbit_size(d, lam) == (size_t)rs.weyl_order());
}

TEST_CASE("rel weyl data: lambda trivial gives R = W, C = 1") {
  for (auto [lab, q] : std::vector<std::pair<const char*, long>>{
           {"C2", 5}, {"B3", 5}, {"G2", 5}}) {
    const auto& rs = rootsys::RootSystem::get(lab);
    auto d = build_torus(rs, q, false);
    TorusChar triv{std::vector<long>(rs.rank(), 0)};
    auto rel = rel_weyl_data(d, triv);
    CHECK(rel.Rlambda.size() == (size_t)rs.weyl_order());
    CHECK(rel.Clambda.size() == 1);
    CHECK(rel.DeltaLambda.size() == (size_t)rs.rank());
  }
}

TEST_CASE("B4 example: R(lambda) of order 64 with C2 x C2 factors") {
  const auto& rs = rootsys::RootSystem::get("B4");
  for (long q : {3L, 5L}) {
    auto d = build_torus(rs, q, false);
    TorusChar lam{{0, (q - 1) / 2, 0, 0}};
    auto rel = rel_weyl_data(d, lam);
    CHECK(rel.Rlambda.size() == 64);
    CHECK(rel.components == std::vector<std::string>{"B2", "B2"});
    CHECK(rel.Wlambda.size() == 128);
    CHECK(rel.Clambda.size() == 2);
    // C(lambda) is generated by the image of c = n_{e1-e3}(-1) n_{e2-e4}(-1)
    ExtWeylGroup V(rs);
    int g1 = rs.root_index({1, 1, 0, 0});
    int g2 = rs.root_index({0, 1, 1, 0});
    auto c = V.mult(V.n_root(g1), V.n_root(g2));
    CHECK(std::binary_search(rel.Clambda.begin(), rel.Clambda.end(), c.w));
    CHECK(c.w != rs.identity());
    // rc decomposition splits each element uniquely
    for (int w : rel.Wlambda) {
      auto [wr, wc] = rc_decompose(rs, rel, w);
      CHECK(rs.mult(wr, wc) == w);
      CHECK(std::binary_search(rel.Rlambda.begin(), rel.Rlambda.end(), wr));
      CHECK(std::binary_search(rel.Clambda.begin(), rel.Clambda.end(), wc));
    }
  }
}

TEST_CASE("G2: C(lambda) trivial for every lambda") {
  const auto& rs = rootsys::RootSystem::get("G2");
  for (long q : {5L, 11L}) {
    auto d = build_torus(rs, q, false);
    for (auto& lam : orbit_representatives(d)) {
      auto rel = rel_weyl_data(d, lam);
      CHECK(rel.Clambda.size() == 1);
      CHECK(rel.Rlambda.size() == rel.Wlambda.size());
    }
  }
}

TEST_CASE("orbit representatives partition Irr(T)") {
  const auto& rs = rootsys::RootSystem::get("B3");
  auto d = build_torus(rs, 3, false);
  auto reps = orbit_representatives(d);
  long total = 0;
  for (auto& r : reps) {
    total += orbit_size(d, r);
    CHECK(canonical_rep(d, r) == r);
  }
  CHECK(total == d.order());
}

TEST_CASE("enumerate_params: G2(5) ell = 2 count matches full Dixon on N") {
  const auto& rs = rootsys::RootSystem::get("G2");
  auto d = build_torus(rs, 5, false);
  auto ps = enumerate_params(rs, 5, 2, false, d);
  // independent oracle: the full character table of N
  Normalizer N(rs, 5, false);
  smallgroup::GroupOps ops;
  ops.id = {0};
  ops.mult = [&N](const smallgroup::Elem& a, const smallgroup::Elem& b) {
    return smallgroup::Elem{N.mult(a[0], b[0])};
  };
  ops.inv = [&N](const smallgroup::Elem& a) { return smallgroup::Elem{N.inv(a[0])}; };
  std::vector<smallgroup::Elem> gens;
  for (long i = 1; i < N.order(); ++i) gens.push_back({i});
  smallgroup::ExplicitGroup NG(ops, gens);
  CHECK(NG.order() == 192);
  auto table = charkit::dixon_table(NG);
  long odd = 0;
  for (auto& f : table.irreducibles)
    if (f.degree().rational_value().get_num() % 2 != 0) ++odd;
  CHECK((long)ps.params.size() == odd);
}

TEST_CASE("twisted C2 at q = 3: surviving lambda1 all have order <= 2") {
  const auto& rs = rootsys::RootSystem::get("C2");
  auto d = build_torus(rs, 3, true);
  auto ps = enumerate_params(rs, 3, 2, true, d);
  CHECK(!ps.params.empty());
  for (auto& orb : ps.orbits) CHECK(char_order(d, orb.lambda) <= 2);
}

TEST_CASE("order <= 2 filter for B3, B4, D4, G2 at ell = 2") {
  for (auto [lab, q] : std::vector<std::pair<const char*, long>>{
           {"B3", 5}, {"B4", 5}, {"D4", 5}, {"G2", 5}, {"B3", 13}}) {
    const auto& rs = rootsys::RootSystem::get(lab);
    auto d = build_torus(rs, q, false);
    auto ps = enumerate_params(rs, q, 2, false, d);
    for (auto& orb : ps.orbits) CHECK(char_order(d, orb.lambda) <= 2);
  }
}

TEST_CASE("galois action on lambda: dual paths agree") {
  std::mt19937_64 rng(11);
  for (auto [lab, q, tw] : std::vector<std::tuple<const char*, long, bool>>{
           {"C2", 5, false}, {"B3", 3, true}, {"G2", 11, false}}) {
    const auto& rs = rootsys::RootSystem::get(lab);
    auto d = build_torus(rs, q, tw);
    long L = 1;
    for (long di : d.invariants) L = numth::lcm(L, di);
    for (long ell : {2L, 3L, 5L}) {
      auto gens = cyclo::h_ell_generators(ell, L);
      for (int trial = 0; trial < 34; ++trial) {
        TorusChar lam{std::vector<long>(rs.rank())};
        for (size_t i = 0; i < lam.exps.size(); ++i) lam.exps[i] = (long)(rng() % d.invariants[i]);
        for (auto& g : gens) {
          auto a = galois_on_lambda(d, g.base.unit, lam);
          auto b = semisimple_label_action(d, ell, g.r, g.b, lam);
          CHECK(a == b);
          CHECK(char_order(d, a) == char_order(d, lam));
        }
      }
    }
  }
}

TEST_CASE("lambda squared trivial is fixed by every sigma") {
  const auto& rs = rootsys::RootSystem::get("C2");
  auto d = build_torus(rs, 5, false);
  TorusChar lam{{2, 2}};
  CHECK(char_order(d, lam) <= 2);
  for (long u : {1L, 3L}) CHECK(galois_on_lambda(d, u, lam) == lam);
}
