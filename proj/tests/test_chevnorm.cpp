#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galmck/chevnorm.hpp"

using namespace galmck;
using namespace galmck::chevnorm;
using smallgroup::Elem;
using smallgroup::ExplicitGroup;

namespace {

ExplicitGroup v_group(const ExtWeylGroup& V) {
  return ExplicitGroup(V.group_ops(), V.generator_elems());
}

// 4x4 matrices over F_q as a concrete model of Sp4 = C2, used as an
// independent oracle for the cocycle arithmetic in V
struct Sp4Model {
  long q;
  using M = std::array<std::array<long, 4>, 4>;
  M id() const {
    M m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
  }
  M mul(const M& a, const M& b) const {
    M r{};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        if (a[i][k] == 0) continue;
        for (int j = 0; j < 4; ++j) r[i][j] = numth::mod(r[i][j] + a[i][k] * b[k][j], q);
      }
    return r;
  }
  M x_root(int which, bool positive, long t) const {
    // basis u1 u2 w1 w2; form <u_i, w_i> = 1
    // roots: 0 = e1-e2 (short), 1 = 2e2 (long)
    M m = id();
    t = numth::mod(t, q);
    if (which == 0) {
      if (positive) { m[0][1] = t; m[3][2] = numth::mod(-t, q); }
      else { m[1][0] = t; m[2][3] = numth::mod(-t, q); }
    } else {
      if (positive) m[1][3] = t;
      else m[3][1] = t;
    }
    return m;
  }
  M n_gen(int which, long t) const {
    long ti = numth::inv_mod(numth::mod(t, q), q);
    return mul(mul(x_root(which, true, t), x_root(which, false, numth::mod(-ti, q))),
               x_root(which, true, t));
  }
  M h_gen(int which, long t) const {  // h_alpha(t) = n_alpha(t) n_alpha(1)^{-1}
    M n1inv = n_gen(which, -1);       // n(1)^{-1} = n(-1)
    return mul(n_gen(which, t), n1inv);
  }
};

}  // namespace

TEST_CASE("V of A1 is cyclic of order 4") {
  const auto& rs = rootsys::RootSystem::get("A1");
  ExtWeylGroup V(rs);
  ExplicitGroup g = v_group(V);
  CHECK(g.order() == 4);
  // n^2 = h, h^2 = 1
  auto n = V.gen(0);
  auto n2 = V.mult(n, n);
  CHECK(n2.w == rs.identity());
  CHECK(n2.h.bits == std::vector<int>{1});
  auto n4 = V.mult(n2, n2);
  CHECK(n4 == V.one());
  // cyclic: element of order 4 exists
  long maxo = 0;
  for (int i = 0; i < g.order(); ++i) maxo = std::max(maxo, g.element_order(i));
  CHECK(maxo == 4);
}

TEST_CASE("defining relation n^2 = h for every root") {
  for (const char* lab : {"A2", "C2", "B3", "G2", "D4"}) {
    const auto& rs = rootsys::RootSystem::get(lab);
    ExtWeylGroup V(rs);
    for (int r = 0; r < rs.num_roots(); ++r) {
      auto n = V.n_root(r);
      auto n2 = V.mult(n, n);
      CHECK(n2.w == rs.identity());
      CHECK(n2.h == V.h_root(r));
      // image in W is the reflection
      CHECK(n.w == rs.reflection(r));
    }
  }
}

TEST_CASE("|V| = 2^rank |W|") {
  for (const char* lab : {"A1", "A2", "C2", "B3", "G2"}) {
    const auto& rs = rootsys::RootSystem::get(lab);
    ExtWeylGroup V(rs);
    ExplicitGroup g = v_group(V);
    CHECK(g.order() == V.order());
    CHECK(g.order() == (1L << rs.rank()) * rs.weyl_order());
  }
}

TEST_CASE("braid independence of canonical lifts (exhaustive rank 2)") {
  for (const char* lab : {"A2", "C2", "G2"}) {
    const auto& rs = rootsys::RootSystem::get(lab);
    ExtWeylGroup V(rs);
    for (int w = 0; w < rs.weyl_order(); ++w) {
      for (auto& word : rs.all_reduced_words(w)) {
        ExtWeylElt prod = V.one();
        for (uint8_t s : word) prod = V.mult(prod, V.gen(s));
        CHECK(prod.w == w);
        CHECK(prod.h.bits == std::vector<int>(rs.rank(), 0));
      }
    }
  }
}

TEST_CASE("associativity of v_mult") {
  // exhaustive for rank <= 2
  for (const char* lab : {"A1", "C2"}) {
    const auto& rs = rootsys::RootSystem::get(lab);
    ExtWeylGroup V(rs);
    ExplicitGroup g = v_group(V);
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        for (int c = 0; c < g.order(); ++c)
          CHECK(g.mult(g.mult(a, b), c) == g.mult(a, g.mult(b, c)));
  }
  // randomized for rank 3
  {
    const auto& rs = rootsys::RootSystem::get("B3");
    ExtWeylGroup V(rs);
    std::mt19937_64 rng(7);
    auto rnd = [&]() {
      ExtWeylElt v;
      v.w = (int)(rng() % rs.weyl_order());
      v.h.bits.resize(rs.rank());
      for (auto& b : v.h.bits) b = (int)(rng() % 2);
      return v;
    };
    for (int t = 0; t < 10000; ++t) {
      auto a = rnd(), b = rnd(), c = rnd();
      CHECK(V.mult(V.mult(a, b), c) == V.mult(a, V.mult(b, c)));
      CHECK(V.mult(a, V.inverse(a)) == V.one());
    }
  }
}

TEST_CASE("Sp4 matrix model is an oracle for the C2 cocycle") {
  const auto& rs = rootsys::RootSystem::get("C2");
  ExtWeylGroup V(rs);
  for (long q : {3L, 5L}) {
    Sp4Model M{q};
    // sanity in the model: n^2 = h(-1), h(t) diagonal
    for (int s = 0; s < 2; ++s) {
      auto n = M.n_gen(s, 1);
      auto nn = M.mul(n, n);
      auto h = M.h_gen(s, q - 1);  // h(-1)
      CHECK(nn == h);
    }
    // phi: V -> Sp4(q), (h, w) -> H-part * product along canonical word
    auto phi = [&](const ExtWeylElt& v) {
      auto m = M.id();
      // bits are coords against simple coroots: h = prod h_s(-1)^{bit}
      for (int s = 0; s < 2; ++s)
        if (v.h.bits[s]) m = M.mul(m, M.h_gen(s, q - 1));
      for (uint8_t s : rs.word(v.w)) m = M.mul(m, M.n_gen(s, q - 1));  // n_s(-1)
      return m;
    };
    ExplicitGroup g = v_group(V);
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        auto va = V.decode(g.element(a)), vb = V.decode(g.element(b));
        auto lhs = phi(V.mult(va, vb));
        auto rhs = M.mul(phi(va), phi(vb));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("torus invariants") {
  const auto& c2 = rootsys::RootSystem::get("C2");
  auto split = build_torus(c2, 3, false);
  CHECK(split.invariants == std::vector<long>{2, 2});
  auto tw = build_torus(c2, 3, true);
  CHECK(tw.invariants == std::vector<long>{4, 4});
  CHECK(tw.order() == 16);
  const auto& a1 = rootsys::RootSystem::get("A1");
  auto tw1 = build_torus(a1, 3, true);
  CHECK(tw1.invariants == std::vector<long>{4});
  const auto& a2 = rootsys::RootSystem::get("A2");
  CHECK_THROWS_AS(build_torus(a2, 3, true), Error);  // w0 not central
  auto sp = build_torus(rootsys::RootSystem::get("B3"), 5, false);
  CHECK(sp.invariants == std::vector<long>{4, 4, 4});
}

TEST_CASE("torus Weyl action: rank-1 model, s_alpha on h_alpha(s)") {
  const auto& rs = rootsys::RootSystem::get("A1");
  auto d = build_torus(rs, 7, false);
  // h_alpha(zeta^a) has coordinate a; s_alpha sends it to h_alpha(zeta^-a)
  TorusElt t{{2}};
  auto u = torus_weyl_act(d, rs.simple_reflection(0), t);
  CHECK(u.c == std::vector<long>{numth::mod(-2, 6)});
  // identity acts trivially
  CHECK(torus_weyl_act(d, rs.identity(), t) == t);
}

TEST_CASE("torus Weyl action against the Sp4 model") {
  const auto& rs = rootsys::RootSystem::get("C2");
  long q = 5;
  auto d = build_torus(rs, q, false);
  Sp4Model M{q};
  long zeta = 2;  // generator of F5^x
  auto torus_matrix = [&](const TorusElt& t) {
    auto m = M.id();
    for (int s = 0; s < 2; ++s) {
      long val = numth::pow_mod(zeta, t.c[s], q);
      m = M.mul(m, M.h_gen(s, val));
    }
    return m;
  };
  ExtWeylGroup V(rs);
  for (int w : {rs.simple_reflection(0), rs.simple_reflection(1),
                rs.mult(rs.simple_reflection(0), rs.simple_reflection(1))}) {
    auto nw = M.id();
    for (uint8_t s : rs.word(w)) nw = M.mul(nw, M.n_gen(s, q - 1));
    // inverse of nw in the model
    auto nwinv = nw;
    {
      // matrix inverse by repeated multiplication (order is finite and small)
      auto acc = nw;
      while (true) {
        auto nxt = M.mul(acc, nw);
        if (nxt == M.id()) break;
        acc = nxt;
      }
      nwinv = acc;
    }
    for (long a = 0; a < 4; ++a)
      for (long b = 0; b < 4; ++b) {
        TorusElt t{{a, b}};
        auto conj = M.mul(M.mul(nw, torus_matrix(t)), nwinv);
        auto expect = torus_matrix(torus_weyl_act(d, w, t));
        CHECK(conj == expect);
      }
  }
}

TEST_CASE("embed_H") {
  const auto& rs = rootsys::RootSystem::get("C2");
  for (long q : {3L, 5L, 7L, 9L, 11L, 13L}) {
    auto d = build_torus(rs, q, false);
    // h_alpha(-1) has exponent (q-1)/2 in its own coordinate
    HElt h1{{1, 0}};
    auto t = embed_H(d, h1);
    CHECK(t.c == std::vector<long>{(q - 1) / 2, 0});
    auto t2 = torus_mult(d, t, t);
    CHECK(t2 == torus_identity(d));
  }
  // q even: trivial image
  for (long q : {2L, 4L}) {
    auto d = build_torus(rs, q, false);
    CHECK(embed_H(d, HElt{{1, 1}}) == torus_identity(d));
  }
  // twisted case: image has order <= 2 as well
  for (long q : {3L, 7L}) {
    auto d = build_torus(rs, q, true);
    HElt h{{1, 1}};
    auto t = embed_H(d, h);
    CHECK(torus_mult(d, t, t) == torus_identity(d));
    CHECK_FALSE(t == torus_identity(d));
  }
}

TEST_CASE("|H| = (2, q-1)^rank inside T") {
  for (const char* lab : {"A1", "C2", "B3", "G2"}) {
    const auto& rs = rootsys::RootSystem::get(lab);
    ExtWeylGroup V(rs);
    for (long q : {2L, 3L, 4L, 5L, 7L, 9L, 11L, 13L}) {
      auto d = build_torus(rs, q, false);
      std::set<std::vector<long>> images;
      for (long mask = 0; mask < (1 << rs.rank()); ++mask) {
        HElt h{std::vector<int>(rs.rank())};
        for (int i = 0; i < rs.rank(); ++i) h.bits[i] = (int)((mask >> i) & 1);
        images.insert(embed_H(d, h).c);
      }
      long expect = 1;
      long base = (q % 2 == 0) ? 1 : 2;
      for (int i = 0; i < rs.rank(); ++i) expect *= base;
      CHECK((long)images.size() == expect);
    }
  }
}

TEST_CASE("center orders") {
  auto zc = [&](const char* lab, long q, bool tw) {
    auto d = build_torus(rootsys::RootSystem::get(lab), q, tw);
    return (long)center_elements(d).size();
  };
  CHECK(zc("G2", 5, false) == 1);
  CHECK(zc("G2", 3, true) == 1);
  CHECK(zc("C2", 5, false) == 2);
  CHECK(zc("C2", 4, false) == 1);
  CHECK(zc("B3", 7, false) == 2);
  CHECK(zc("F4", 3, false) == 1);
  CHECK(zc("A1", 9, false) == 2);
  CHECK(zc("D4", 5, false) == 4);
}

TEST_CASE("normalizer orders and structure") {
  struct Row { const char* lab; long q; bool tw; long order; };
  for (auto [lab, q, tw, ord] : std::vector<Row>{{"C2", 3, false, 32},
                                                 {"G2", 5, false, 192},
                                                 {"C2", 3, true, 128},
                                                 {"A1", 3, true, 8}}) {
    Normalizer N(rootsys::RootSystem::get(lab), q, tw);
    CHECK(N.order() == ord);
  }
}

TEST_CASE("N multiplication: associativity, inverses, N/T = W, T cap V = H") {
  std::mt19937_64 rng(99);
  for (auto [lab, q, tw] : std::vector<std::tuple<const char*, long, bool>>{
           {"C2", 3, false}, {"C2", 3, true}, {"G2", 5, false}, {"B3", 3, false}}) {
    const auto& rs = rootsys::RootSystem::get(lab);
    Normalizer N(rs, q, tw);
    long n = N.order();
    for (int t = 0; t < 3000; ++t) {
      long a = (long)(rng() % n), b = (long)(rng() % n), c = (long)(rng() % n);
      CHECK(N.mult(N.mult(a, b), c) == N.mult(a, N.mult(b, c)));
      CHECK(N.mult(a, N.inv(a)) == N.identity());
      // quotient map to W is a homomorphism
      auto [ta, wa] = N.element(a);
      auto [tb, wb] = N.element(b);
      auto [tc, wc] = N.element(N.mult(a, b));
      CHECK(wc == rs.mult(wa, wb));
    }
    // T cap V = H: V-images with trivial Weyl part
    ExtWeylGroup V(rs);
    ExplicitGroup vg = v_group(V);
    std::set<long> tv;
    for (int i = 0; i < vg.order(); ++i) {
      auto v = V.decode(vg.element(i));
      long img = N.v_image(v);
      auto [tpart, wpart] = N.element(img);
      if (wpart == rs.identity()) tv.insert(N.t_index(tpart));
    }
    long expect = 1;
    for (int i = 0; i < rs.rank(); ++i) expect *= (q % 2 == 0 ? 1 : 2);
    CHECK((long)tv.size() == expect);
    // v_image is a homomorphism
    for (int t = 0; t < 500; ++t) {
      int a = (int)(rng() % vg.order()), b = (int)(rng() % vg.order());
      auto va = V.decode(vg.element(a)), vb = V.decode(vg.element(b));
      CHECK(N.v_image(V.mult(va, vb)) == N.mult(N.v_image(va), N.v_image(vb)));
    }
  }
}

TEST_CASE("class enumeration of a small N") {
  Normalizer N(rootsys::RootSystem::get("C2"), 3, false);
  long total = 0;
  for (int c = 0; c < N.num_classes(); ++c) total += N.class_size(c);
  CHECK(total == N.order());
  // identity class first
  CHECK(N.class_rep(0) == 0);
  CHECK(N.class_size(0) == 1);
  CHECK(N.exponent() % 2 == 0);
  // class function sanity: conjugation preserves classes
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    long x = (long)(rng() % N.order()), g = (long)(rng() % N.order());
    CHECK(N.class_of(N.mult(N.mult(g, x), N.inv(g))) == N.class_of(x));
  }
}

TEST_CASE("w0-hat squares to a specific H element in C2") {
  const auto& rs = rootsys::RootSystem::get("C2");
  ExtWeylGroup V(rs);
  ExtWeylElt w0hat{HElt{{0, 0}}, rs.w0()};
  auto sq = V.mult(w0hat, w0hat);
  CHECK(sq.w == rs.identity());
  // oracle: compute in the Sp4 model over F3 and F5 and identify the H part
  for (long q : {3L, 5L}) {
    Sp4Model M{q};
    auto m = M.id();
    for (uint8_t s : rs.word(rs.w0())) m = M.mul(m, M.n_gen(s, q - 1));
    auto m2 = M.mul(m, m);
    auto expect = M.id();
    for (int s = 0; s < 2; ++s)
      if (sq.h.bits[s]) expect = M.mul(expect, M.h_gen(s, q - 1));
    CHECK(m2 == expect);
  }
}
