#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brank/tensor.hpp"

using namespace brank;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v(static_cast<int>(xs.size()));
  int i = 0;
  for (long x : xs) v[i++] = Rational(x);
  return v;
}

Vector random_vec(Rng& rng, int dim, long lo = -9, long hi = 9) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Rational(rng.uniform(lo, hi));
  return v;
}

Matrix random_invertible(Rng& rng, int n) {
  while (true) {
    Matrix m(n, n);
    for (auto& x : m.a) x = Rational(rng.uniform(-5, 5));
    if (det(m) != 0) return m;
  }
}

}  // namespace

TEST_CASE("rational parsing round trip") {
  CHECK(rat_from_string("3/6") == rat(1, 2));
  CHECK(rat_from_string("-4/2") == rat(-2));
  CHECK(rat_to_string(rat(-2, 4)) == "-1/2");
  CHECK(rat_to_string(rat(7)) == "7");
  CHECK_THROWS(rat_from_string("1/0"));
  CHECK_THROWS(rat_from_string("x"));
  CHECK_THROWS(rat_from_string("1.5"));
}

TEST_CASE("tensor_from_terms basics") {
  CHECK(tensor_from_terms({}, {2, 2, 2}).is_zero());

  Rank1Term e111{Rational(1), vec({1, 0}), vec({1, 0}), vec({1, 0})};
  Tensor3 t = tensor_from_terms({e111}, {2, 2, 2});
  CHECK(t.at(0, 0, 0) == 1);
  Rational sum = 0;
  for (auto& x : t.e) sum += abs(x);
  CHECK(sum == 1);

  Rank1Term bad{Rational(1), vec({1, 0, 0}), vec({1, 0}), vec({1, 0})};
  CHECK_THROWS(tensor_from_terms({bad}, {2, 2, 2}));
}

TEST_CASE("tensor_from_terms is linear in the term list") {
  Rng rng(11);
  std::vector<Rank1Term> t1, t2;
  for (int i = 0; i < 3; ++i)
    t1.push_back({Rational(rng.uniform(-3, 3)), random_vec(rng, 2), random_vec(rng, 3), random_vec(rng, 2)});
  for (int i = 0; i < 4; ++i)
    t2.push_back({Rational(rng.uniform(-3, 3)), random_vec(rng, 2), random_vec(rng, 3), random_vec(rng, 2)});
  std::vector<Rank1Term> both = t1;
  both.insert(both.end(), t2.begin(), t2.end());
  Dims d{2, 3, 2};
  CHECK(tensor_from_terms(both, d) == tensor_from_terms(t1, d) + tensor_from_terms(t2, d));
}

TEST_CASE("mmult tensor") {
  Tensor3 one = mmult_tensor(1);
  CHECK(one.at(0, 0, 0) == 1);
  CHECK(one.e.size() == 1);

  Tensor3 m = mmult_tensor(2);
  int nonzero = 0;
  for (auto& x : m.e) {
    if (x != 0) {
      CHECK(x == 1);
      ++nonzero;
    }
  }
  CHECK(nonzero == 8);
  // pinned positions: entry ((i,j),(j,k),(k,i))
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) CHECK(m.at(i * 2 + j, j * 2 + k, k * 2 + i) == 1);
  CHECK(multilinear_rank(m) == std::array<int, 3>{4, 4, 4});
}

TEST_CASE("flattening ranks") {
  Tensor3 z(2, 2, 2);
  CHECK(matrix_rank(flattening(z, Factor::A)) == 0);

  Tensor3 r1 = rank1(rat(3), vec({1, 2}), vec({0, 1}), vec({1, 1}));
  CHECK(multilinear_rank(r1) == std::array<int, 3>{1, 1, 1});

  Matrix fa = flattening(mmult_tensor(2), Factor::A);
  CHECK(fa.rows == 4);
  CHECK(fa.cols == 16);
  CHECK(matrix_rank(fa) == 4);
}

TEST_CASE("W tensor has multilinear rank (2,2,2)") {
  std::vector<Rank1Term> w = {
      {Rational(1), vec({1, 0}), vec({1, 0}), vec({0, 1})},
      {Rational(1), vec({1, 0}), vec({0, 1}), vec({1, 0})},
      {Rational(1), vec({0, 1}), vec({1, 0}), vec({1, 0})},
  };
  CHECK(multilinear_rank(tensor_from_terms(w, {2, 2, 2})) == std::array<int, 3>{2, 2, 2});
}

TEST_CASE("multilinear rank is basis invariant") {
  Rng rng(5);
  Tensor3 m = mmult_tensor(2);
  for (int trial = 0; trial < 5; ++trial) {
    Tensor3 g = change_basis(m, random_invertible(rng, 4), random_invertible(rng, 4),
                             random_invertible(rng, 4));
    CHECK(multilinear_rank(g) == std::array<int, 3>{4, 4, 4});
  }
}

TEST_CASE("flattening rank bounded by term count") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    int r = 1 + static_cast<int>(rng.uniform(0, 4));
    std::vector<Rank1Term> terms;
    for (int i = 0; i < r; ++i)
      terms.push_back({Rational(rng.uniform(-4, 4)), random_vec(rng, 3), random_vec(rng, 4),
                       random_vec(rng, 3)});
    auto mr = multilinear_rank(tensor_from_terms(terms, {3, 4, 3}));
    for (int d : mr) CHECK(d <= r);
  }
}

TEST_CASE("contract") {
  Tensor3 m = mmult_tensor(2);
  // dual to the identity matrix in the B slot: X |-> X, full rank
  Vector id_dual = vec({1, 0, 0, 1});
  CHECK(matrix_rank(contract(m, id_dual, Factor::B)) == 4);
  // dual to a rank-1 matrix: image is a two dimensional left ideal
  Vector r1_dual = vec({1, 0, 0, 0});
  CHECK(matrix_rank(contract(m, r1_dual, Factor::B)) == 2);

  // annihilated factor gives the zero map
  Tensor3 t = rank1(rat(1), vec({1, 2}), vec({1, 1}), vec({2, 5}));
  Vector ann = vec({1, -1});
  Matrix z = contract(t, ann, Factor::B);
  for (auto& x : z.a) CHECK(x == 0);

  CHECK_THROWS(contract(m, vec({1, 0}), Factor::B));
}

TEST_CASE("contract is linear in the dual") {
  Rng rng(13);
  Tensor3 t(3, 4, 2);
  for (auto& x : t.e) x = Rational(rng.uniform(-6, 6));
  Vector u = random_vec(rng, 4), v = random_vec(rng, 4);
  Rational a = rat(3, 2), b = rat(-5);
  Vector w = a * u + b * v;
  Matrix lhs = contract(t, w, Factor::B);
  Matrix rhs(3, 2);
  Matrix mu = contract(t, u, Factor::B), mv = contract(t, v, Factor::B);
  for (size_t i = 0; i < rhs.a.size(); ++i) rhs.a[i] = a * mu.a[i] + b * mv.a[i];
  CHECK(lhs == rhs);
}

TEST_CASE("matrix rank basics") {
  CHECK(matrix_rank(Matrix::identity(4)) == 4);
  Matrix outer(3, 3);
  Vector u = vec({1, 2, 3}), v = vec({2, 0, -1});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) outer.at(i, j) = u[i] * v[j];
  CHECK(matrix_rank(outer) == 1);
}

TEST_CASE("linear algebra helpers") {
  Matrix m(2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
  CHECK(matrix_rank(m) == 1);
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) {
    Rational s = 0;
    for (int c = 0; c < 3; ++c) s += m.at(0, c) * v[c];
    CHECK(s == 0);
  }

  std::vector<Vector> vs = {vec({1, 0, 1}), vec({0, 1, 1}), vec({1, 1, 2})};
  auto dep = linear_dependency(vs);
  REQUIRE(dep.has_value());
  Vector acc(3);
  for (int i = 0; i < 3; ++i) acc += (*dep)[i] * vs[i];
  CHECK(acc.is_zero());
  CHECK(in_span({vec({1, 0, 1}), vec({0, 1, 1})}, vec({2, 3, 5})));
  CHECK(!in_span({vec({1, 0, 1}), vec({0, 1, 1})}, vec({0, 0, 1})));

  Matrix inv_test(2, 2);
  inv_test.at(0, 0) = 2; inv_test.at(0, 1) = 1; inv_test.at(1, 0) = 1; inv_test.at(1, 1) = 1;
  auto inv = inverse(inv_test);
  REQUIRE(inv.has_value());
  CHECK((*inv) * inv_test == Matrix::identity(2));
  CHECK(det(inv_test) == 1);
}
