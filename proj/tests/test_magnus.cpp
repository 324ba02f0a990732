#include "doctest.h"

#include "generators.hpp"
#include "linkinv/magnus.hpp"

using namespace linkinv;

namespace {
const FreeWord X = FreeWord::generator(0);
const FreeWord Y = FreeWord::generator(1);

Monomial mono(std::vector<int> vars) { return monom::from_letters(vars); }
}  // namespace

TEST_CASE("expand of a generator is 1 + X") {
  MagnusSeries s = expand_default(X, 3);
  CHECK(s.coeff(monom::one) == 1);
  CHECK(s.coeff(mono({1})) == 1);
  CHECK(s.terms().size() == 2);
}

TEST_CASE("commutator expands to 1 + XY - YX at degree 2") {
  MagnusSeries s = expand_default(FreeWord::commutator(X, Y), 2);
  CHECK(s.coeff(monom::one) == 1);
  CHECK(s.coeff(mono({1, 2})) == 1);
  CHECK(s.coeff(mono({2, 1})) == -1);
  CHECK(s.coeff(mono({1})) == 0);
  CHECK(s.coeff(mono({2})) == 0);
}

TEST_CASE("group law: w * w^-1 expands to 1") {
  testgen::Rng rng(20240811);
  for (int i = 0; i < 50; ++i) {
    FreeWord w = testgen::random_word(rng, 3, 6);
    CHECK(expand_default(w * w.inverse(), 5).is_unit());
  }
}

TEST_CASE("lcs weights of basic commutators") {
  CHECK(lcs_weight(X, 5) == 1);
  CHECK(lcs_weight(FreeWord::commutator(X, Y), 5) == 2);
  CHECK(lcs_weight(FreeWord::commutator(FreeWord::commutator(X, Y), Y), 5) == 3);
  CHECK(lcs_weight(FreeWord(), 5) == std::nullopt);
}

TEST_CASE("homomorphism law on random pairs") {
  testgen::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    FreeWord u = testgen::random_word(rng, 3, 5);
    FreeWord v = testgen::random_word(rng, 3, 5);
    MagnusSeries lhs = expand_default(u * v, 5);
    MagnusSeries rhs = expand_default(u, 5) * expand_default(v, 5);
    CHECK((lhs - rhs).terms().empty());
  }
}

TEST_CASE("inverse law on random words") {
  testgen::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    FreeWord w = testgen::random_word(rng, 3, 6);
    MagnusSeries s = expand_default(w, 5);
    MagnusSeries t = expand_default(w.inverse(), 5);
    CHECK((s * t).is_unit());
    CHECK(s.inverse().dump() == t.dump());
  }
}

TEST_CASE("Magnus embedding: nontrivial reduced words expand nontrivially") {
  testgen::Rng rng(13);
  for (int i = 0; i < 150; ++i) {
    FreeWord w = testgen::random_reduced_nontrivial(rng, 3, 8);
    CHECK(!expand_default(w, 9).is_unit());
  }
}

TEST_CASE("weight superadditivity under commutators") {
  testgen::Rng rng(17);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 100; ++i) {
    FreeWord u = testgen::random_reduced_nontrivial(rng, 2, 5);
    FreeWord v = testgen::random_reduced_nontrivial(rng, 2, 5);
    auto wu = lcs_weight(u, 9), wv = lcs_weight(v, 9);
    if (!wu || !wv || *wu + *wv > 9) continue;
    auto wc = lcs_weight(FreeWord::commutator(u, v), 9);
    if (wc) CHECK(*wc >= *wu + *wv);
    ++checked;
  }
  CHECK(checked == 100);
}

// Weight form of the normal-closure tower identity: elements of
// [<g>, n-fold <g>-tower over F] and of the (n+1)-fold left-normed
// commutator subgroup have weight >= n+2.
TEST_CASE("tower commutator weights") {
  testgen::Rng rng(19);
  std::uniform_int_distribution<int> pw(1, 2);
  for (int n = 1; n <= 2; ++n) {
    for (int i = 0; i < 60; ++i) {
      // tower sample: t_0 = random word; t_j = (g^e)^{t_{j-1} product}
      FreeWord g = X;
      FreeWord t = testgen::random_word(rng, 3, 4);
      for (int j = 1; j <= n; ++j) t = g.pow(pw(rng)).conjugate(t);
      FreeWord lhs = FreeWord::commutator(g.pow(pw(rng)), t);
      auto w = lcs_weight(lhs, 9);
      if (w) CHECK(*w >= n + 2);

      // right-hand side sample: left-normed [..[[h,g],g]..,g] with n+1 g's
      FreeWord c = testgen::random_word(rng, 3, 4);
      for (int j = 0; j <= n; ++j) c = FreeWord::commutator(c, g.pow(pw(rng)));
      auto wc = lcs_weight(c, 9);
      if (wc) CHECK(*wc >= n + 2);
    }
  }
}

// The rewriting identity behind the twisted-longitude normal form: with
// l = sum n_i and lambda = prod (x^{n_i})^{g_i},
//   x^-l lambda = prod over i of  x^-n_i (x^{n_i})^{g_i} h_i
// with h_i = [(x^{n_i})^{g_i}, x^{l-(n_1+..+n_i)}] in the convention
// [u,v] = u^-1 v^-1 u v.  Checked as free words.
TEST_CASE("twisted longitude rewriting identity") {
  testgen::Rng rng(23);
  std::uniform_int_distribution<int> nd(-2, 2);
  std::uniform_int_distribution<int> rd(1, 4);
  auto paper_comm = [](const FreeWord& u, const FreeWord& v) {
    return u.inverse() * v.inverse() * u * v;
  };
  for (int trial = 0; trial < 100; ++trial) {
    int r = rd(rng);
    FreeWord x = X;
    std::vector<int> n(r);
    std::vector<FreeWord> gconj(r);
    int l = 0;
    for (int i = 0; i < r; ++i) {
      n[i] = nd(rng);
      l += n[i];
      gconj[i] = x.pow(n[i]).conjugate(testgen::random_word(rng, 3, 4));
    }
    FreeWord lambda;
    for (int i = 0; i < r; ++i) lambda = lambda * gconj[i];
    FreeWord lhs = x.pow(-l) * lambda;

    FreeWord rhs;
    int prefix = 0;
    for (int i = 0; i < r; ++i) {
      prefix += n[i];
      rhs = rhs * x.pow(-n[i]) * gconj[i];
      if (i + 1 < r) rhs = rhs * paper_comm(gconj[i], x.pow(l - prefix));
    }
    CHECK(lhs.reduced() == rhs.reduced());
  }
}

TEST_CASE("monomial filter keeps subword-reachable coefficients intact") {
  testgen::Rng rng(29);
  Monomial target = mono({1, 1, 2});
  MonomialFilter f = MonomialFilter::subwords_of({target});
  for (int i = 0; i < 50; ++i) {
    FreeWord w = testgen::random_word(rng, 2, 8);
    MagnusSeries full = expand_default(w, 3);
    std::map<int, MagnusSeries> images;
    for (int gidx = 0; gidx < 2; ++gidx) images.emplace(gidx, MagnusSeries::meridian(gidx + 1, 3));
    MagnusSeries filtered = expand(w, images, 3, f);
    CHECK(filtered.coeff(target) == full.coeff(target));
  }
}
