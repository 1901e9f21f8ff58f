#include "doctest.h"

#include <random>

#include "tarc/matrix.hpp"

using namespace tarc;
using namespace tarc::linalg;

namespace {

Matrix random_matrix(gf::FieldPtr F, std::size_t n, std::mt19937_64& rng)
{
  Matrix m(F, n, n);
  std::uniform_int_distribution<gf::Elem> dist(0, F->q() - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, dist(rng));
  return m;
}

} // namespace

TEST_CASE("kernel and rank")
{
  auto F = gf::make_field(5, 1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_matrix(F, 6, rng);
    // Force a dependency among rows.
    for (std::size_t j = 0; j < 6; ++j)
      a.set(5, j, F->add(a.at(0, j), F->mul(2, a.at(1, j))));
    auto k = a.left_kernel();
    CHECK(k.rows() + a.rank() == 6);
    for (std::size_t i = 0; i < k.rows(); ++i)
      CHECK(is_zero_vector(a.apply(k.row(i))));
  }
}

TEST_CASE("minimal polynomial annihilates and is minimal")
{
  std::mt19937_64 rng(11);
  for (auto p : {2u, 3u, 7u}) {
    auto F = gf::make_field(p, 1);
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t n = 2 + trial % 7;
      auto m = random_matrix(F, n, rng);
      auto mu = minimal_polynomial(m);
      CHECK(mu.lead() == 1);
      CHECK(evaluate(mu, m) == Matrix(F, n, n));
      CHECK(mu.degree() <= static_cast<int>(n));
      // Degree check against the dimension of the algebra spanned by powers.
      RowSpace powers(F, n * n);
      Matrix cur = Matrix::identity(F, n);
      int dim = 0;
      while (true) {
        Vec flat;
        for (std::size_t i = 0; i < n; ++i)
          flat.insert(flat.end(), cur.row(i).begin(), cur.row(i).end());
        if (!powers.insert(flat))
          break;
        ++dim;
        cur = cur * m;
      }
      CHECK(dim == mu.degree());
    }
  }
}

TEST_CASE("powers and text round trip")
{
  auto F = gf::make_field(2, 2);
  Matrix m(F, {{0, 1}, {1, 3}});
  CHECK(m.pow(0).is_identity());
  CHECK(m.pow(5) == m * m * m * m * m);
  CHECK(Matrix::from_text(F, m.to_text()) == m);
  CHECK_THROWS(Matrix(F, {{0, 4}, {1, 1}}));
}
