#include "tarc/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tarc::linalg {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
  : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

Matrix::Matrix(FieldPtr field, std::vector<Vec> rows)
  : field_(std::move(field)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size())
{
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("Matrix: ragged rows");
    for (Elem e : r) {
      if (!field_->contains(e))
        throw std::invalid_argument("Matrix: entry outside the field");
      data_.push_back(e);
    }
  }
}

Matrix Matrix::identity(FieldPtr field, std::size_t n)
{
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i, 1);
  return m;
}

std::vector<Vec> Matrix::row_vectors() const
{
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rows_; ++i)
    out.emplace_back(row(i).begin(), row(i).end());
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const
{
  if (cols_ != o.rows_)
    throw std::invalid_argument("Matrix::operator*: shape mismatch");
  const auto& F = *field_;
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Elem a = at(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        Elem b = o.at(k, j);
        if (b)
          out.data_[i * o.cols_ + j] = F.add(out.data_[i * o.cols_ + j], F.mul(a, b));
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const
{
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix::operator+: shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_->add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::scaled(Elem c) const
{
  Matrix out(*this);
  for (auto& x : out.data_)
    x = field_->mul(x, c);
  return out;
}

Matrix Matrix::pow(const BigInt& e) const
{
  if (!is_square())
    throw std::invalid_argument("Matrix::pow: matrix must be square");
  if (e < 0)
    throw std::invalid_argument("Matrix::pow: negative exponent");
  Matrix result = identity(field_, rows_);
  if (e == 0)
    return result;
  const auto bits = boost::multiprecision::msb(e);
  for (std::size_t i = bits + 1; i-- > 0;) {
    result = result * result;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i)))
      result = result * *this;
  }
  return result;
}

Matrix Matrix::transpose() const
{
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out.set(j, i, at(i, j));
  return out;
}

Matrix Matrix::inverse() const
{
  if (!is_square())
    throw std::invalid_argument("Matrix::inverse: matrix must be square");
  std::vector<Vec> aug;
  for (std::size_t i = 0; i < rows_; ++i) {
    Vec r(row(i).begin(), row(i).end());
    r.resize(2 * cols_, 0);
    r[cols_ + i] = 1;
    aug.push_back(std::move(r));
  }
  aug = rref(field_, std::move(aug));
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i >= aug.size() || aug[i][i] != 1)
      throw std::domain_error("Matrix::inverse: singular matrix");
    for (std::size_t j = 0; j < cols_; ++j)
      out.set(i, j, aug[i][cols_ + j]);
  }
  return out;
}

bool Matrix::is_identity() const
{
  if (!is_square())
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u))
        return false;
  return true;
}

Vec Matrix::apply(std::span<const Elem> v) const
{
  if (v.size() != rows_)
    throw std::invalid_argument("Matrix::apply: vector length mismatch");
  const auto& F = *field_;
  Vec out(cols_, 0);
  for (std::size_t k = 0; k < rows_; ++k) {
    if (v[k] == 0)
      continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      Elem b = at(k, j);
      if (b)
        out[j] = F.add(out[j], F.mul(v[k], b));
    }
  }
  return out;
}

std::size_t Matrix::rank() const { return rref(field_, row_vectors()).size(); }

Matrix Matrix::left_kernel() const
{
  // v M = 0  <=>  M^T v^T = 0: null space of the transpose.
  auto reduced = rref(field_, transpose().row_vectors());
  const std::size_t n = rows_;
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (const auto& r : reduced) {
    auto it = std::find_if(r.begin(), r.end(), [](Elem e) { return e != 0; });
    auto c = static_cast<std::size_t>(it - r.begin());
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < reduced.size(); ++k)
      v[pivot_col[k]] = field_->neg(reduced[k][free]);
    basis.push_back(std::move(v));
  }
  basis = rref(field_, std::move(basis));
  if (basis.empty())
    return Matrix(field_, 0, n);
  return Matrix(field_, std::move(basis));
}

std::string Matrix::to_text() const
{
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "") << at(i, j);
    os << '\n';
  }
  return os.str();
}

Matrix Matrix::from_text(FieldPtr field, const std::string& text)
{
  std::vector<Vec> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    Vec r;
    long long v;
    while (ls >> v) {
      if (v < 0)
        throw std::invalid_argument("Matrix::from_text: negative entry");
      r.push_back(static_cast<Elem>(v));
    }
    if (!ls.eof())
      throw std::invalid_argument("Matrix::from_text: malformed entry");
    if (!r.empty())
      rows.push_back(std::move(r));
  }
  return Matrix(std::move(field), std::move(rows));
}

std::vector<Vec> rref(FieldPtr field, std::vector<Vec> rows)
{
  const auto& F = *field;
  if (rows.empty())
    return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[r], rows[pivot]);
    Elem inv = F.inv(rows[r][c]);
    for (auto& x : rows[r])
      x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      Elem factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(factor, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

RowSpace::RowSpace(FieldPtr field, std::size_t dim) : field_(std::move(field)), ambient_(dim) {}

Vec RowSpace::reduce(Vec v) const
{
  const auto& F = *field_;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Elem c = v[pivots_[k]];
    if (c == 0)
      continue;
    const auto& r = rows_[k];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (r[j])
        v[j] = F.sub(v[j], F.mul(c, r[j]));
  }
  return v;
}

bool RowSpace::contains(const Vec& v) const { return is_zero_vector(reduce(v)); }

bool RowSpace::insert(const Vec& v)
{
  if (v.size() != ambient_)
    throw std::invalid_argument("RowSpace::insert: dimension mismatch");
  Vec w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](Elem e) { return e != 0; });
  if (it == w.end())
    return false;
  const auto& F = *field_;
  const auto pc = static_cast<std::size_t>(it - w.begin());
  Elem inv = F.inv(w[pc]);
  for (auto& x : w)
    x = F.mul(x, inv);
  // Keep existing rows reduced with respect to the new pivot.
  for (auto& r : rows_) {
    Elem c = r[pc];
    if (c == 0)
      continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (w[j])
        r[j] = F.sub(r[j], F.mul(c, w[j]));
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(pc);
  return true;
}

std::vector<Vec> RowSpace::basis() const
{
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
  std::vector<Vec> out;
  for (auto i : order)
    out.push_back(rows_[i]);
  return out;
}

bool is_zero_vector(std::span<const Elem> v)
{
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

namespace {

// Minimal polynomial of v relative to m: least monic g with v g(m) = 0.
gf::Poly local_minimal_polynomial(const Matrix& m, Vec v, std::vector<Vec>& krylov)
{
  const auto& field = m.field();
  const auto& F = *field;
  const std::size_t n = m.rows();

  // Each reduced row carries its expression in the Krylov vectors v m^k.
  std::vector<Vec> reduced;
  std::vector<Vec> combo;
  std::vector<std::size_t> pivots;
  Vec current = std::move(v);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec w = current;
    Vec c(k + 1, 0);
    c[k] = 1;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      Elem a = w[pivots[i]];
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        if (reduced[i][j])
          w[j] = F.sub(w[j], F.mul(a, reduced[i][j]));
      for (std::size_t j = 0; j < combo[i].size(); ++j)
        if (combo[i][j])
          c[j] = F.sub(c[j], F.mul(a, combo[i][j]));
    }
    auto it = std::find_if(w.begin(), w.end(), [](Elem e) { return e != 0; });
    if (it == w.end())
      return gf::Poly(field, c).monic();
    auto pc = static_cast<std::size_t>(it - w.begin());
    Elem inv = F.inv(w[pc]);
    for (auto& x : w)
      x = F.mul(x, inv);
    for (auto& x : c)
      x = F.mul(x, inv);
    reduced.push_back(std::move(w));
    combo.push_back(std::move(c));
    pivots.push_back(pc);
    krylov.push_back(current);
    current = m.apply(current);
  }
  throw std::logic_error("minimal_polynomial: Krylov sequence did not terminate");
}

} // namespace

gf::Poly minimal_polynomial(const Matrix& m)
{
  if (!m.is_square())
    throw std::invalid_argument("minimal_polynomial: matrix must be square");
  const auto& field = m.field();
  const std::size_t n = m.rows();
  gf::Poly mu = gf::Poly::constant(field, 1);
  RowSpace covered(field, n);
  for (std::size_t i = 0; i < n && covered.rank() < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    if (covered.contains(e))
      continue;
    std::vector<Vec> krylov;
    gf::Poly local = local_minimal_polynomial(m, e, krylov);
    for (const auto& k : krylov)
      covered.insert(k);
    mu = ((mu * local) / gf::gcd(mu, local)).monic();
  }
  return mu;
}

Matrix evaluate(const gf::Poly& g, const Matrix& m)
{
  const auto& field = m.field();
  Matrix acc(field, m.rows(), m.cols());
  const Matrix id = Matrix::identity(field, m.rows());
  for (std::size_t i = g.coeffs().size(); i-- > 0;)
    acc = acc * m + id.scaled(g.coeffs()[i]);
  return acc;
}

} // namespace tarc::linalg
