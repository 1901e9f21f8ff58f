#include "tarc/eqcode.hpp"

#include <algorithm>
#include <stdexcept>

#include "tarc/numth.hpp"

namespace tarc::eqcode {

std::size_t weight(const Vec& v)
{
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

Code::Code(FieldPtr field, std::size_t length, std::vector<Vec> spanning)
  : field_(std::move(field)), length_(length)
{
  for (const auto& v : spanning)
    if (v.size() != length_)
      throw std::invalid_argument("Code: vector length mismatch");
  basis_ = linalg::rref(field_, std::move(spanning));
}

bool Code::contains(const Vec& v) const
{
  if (v.size() != length_)
    return false;
  linalg::RowSpace s(field_, length_);
  for (const auto& b : basis_)
    s.insert(b);
  return s.contains(v);
}

bool Code::is_invariant(const Matrix& m) const
{
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vec& b) { return contains(m.apply(b)); });
}

std::vector<Vec> Code::codewords() const
{
  const std::uint64_t q = field_->q();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    count *= q;
    if (count > (1u << 24))
      throw std::length_error("Code::codewords: too many codewords");
  }
  std::vector<Vec> out;
  out.reserve(count);
  std::vector<Elem> coeffs(basis_.size(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t x = idx;
    for (auto& c : coeffs) {
      c = static_cast<Elem>(x % q);
      x /= q;
    }
    Vec w(length_, 0);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!coeffs[k])
        continue;
      for (std::size_t j = 0; j < length_; ++j)
        w[j] = field_->add(w[j], field_->mul(coeffs[k], basis_[k][j]));
    }
    out.push_back(std::move(w));
  }
  return out;
}

nlohmann::json field_to_json(const gf::Field& field)
{
  return {{"p", field.p()}, {"f", field.f()}, {"modulus", field.modulus()}};
}

FieldPtr field_from_json(const nlohmann::json& j)
{
  auto field = gf::make_field(j.at("p").get<std::uint64_t>(), j.at("f").get<unsigned>());
  if (j.contains("modulus") && j.at("modulus").get<std::vector<std::uint32_t>>() != field->modulus())
    throw std::invalid_argument("field_from_json: modulus differs from the canonical one");
  return field;
}

nlohmann::json Code::to_json() const
{
  return {{"field", field_to_json(*field_)}, {"n", length_}, {"k", dimension()}, {"basis", basis_}};
}

Code Code::from_json(const nlohmann::json& j)
{
  Code c(field_from_json(j.at("field")), j.at("n").get<std::size_t>(),
         j.at("basis").get<std::vector<Vec>>());
  if (c.dimension() != j.at("k").get<std::size_t>())
    throw std::invalid_argument("Code::from_json: basis rank differs from k");
  return c;
}

std::uint64_t matrix_order(const Matrix& m, std::uint64_t multiple)
{
  if (!m.pow(multiple).is_identity())
    throw std::logic_error("matrix_order: given exponent does not annihilate");
  std::uint64_t ord = multiple;
  for (auto [r, e] : numth::factorize(multiple)) {
    (void)e;
    while (ord % r == 0 && m.pow(ord / r).is_identity())
      ord /= r;
  }
  return ord;
}

ShiftMatrix build_shift_matrix(const FieldPtr& field)
{
  const auto& F = *field;
  ShiftMatrix s;
  s.field = field;
  s.n = F.q() + 1;
  auto gl = gf::eta_lambda(field);
  s.eta = gl.eta.code();
  s.lambda = gl.lambda.code();
  const Elem el = F.mul(s.eta, s.lambda);

  s.D = Matrix(field, s.n, s.n);
  s.P = Matrix(field, s.n, s.n);
  for (std::size_t i = 0; i < s.n; ++i) {
    s.D.set(i, i, i == 1 ? s.lambda : el);
    s.P.set(i, (i + 1) % s.n, 1);
  }
  s.A = s.D * s.P;

  if (s.A.pow(s.n) != Matrix::identity(field, s.n).scaled(F.mul(el, s.lambda)))
    throw std::logic_error("build_shift_matrix: A^n != eta*lambda^2 I");
  const std::uint64_t expected = s.n * (F.q() - 1);
  s.order = matrix_order(s.A, expected);
  if (s.order != expected)
    throw std::logic_error("build_shift_matrix: A does not have order n(q-1)");
  return s;
}

InvariantDecomposition decompose_invariant(const Matrix& m)
{
  if (!m.is_square())
    throw std::invalid_argument("decompose_invariant: matrix must be square");
  const auto& field = m.field();
  const std::size_t n = m.rows();
  if (m.rank() != n)
    throw std::domain_error("decompose_invariant: matrix is singular");
  const gf::Poly mu = linalg::minimal_polynomial(m);
  if (!gf::is_squarefree(mu))
    throw std::domain_error("decompose_invariant: action is not semisimple");

  InvariantDecomposition out;
  std::vector<std::pair<gf::Poly, std::uint64_t>> factors;
  for (auto& g : gf::factor_squarefree(mu)) {
    std::uint64_t ord = gf::order_of_x(g);
    out.order = numth::lcm(out.order, ord);
    factors.emplace_back(std::move(g), ord);
  }
  out.degenerate = out.order == 1;

  linalg::RowSpace total(field, n);
  for (const auto& [g, ord] : factors) {
    const Matrix kernel = linalg::evaluate(g, m).left_kernel();
    const auto d = static_cast<std::size_t>(g.degree());
    linalg::RowSpace isotypic(field, n);
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
      Vec v(kernel.row(r).begin(), kernel.row(r).end());
      if (isotypic.contains(v))
        continue;
      std::vector<Vec> cyclic;
      for (std::size_t k = 0; k < d; ++k) {
        cyclic.push_back(v);
        isotypic.insert(v);
        total.insert(v);
        v = m.apply(v);
      }
      InvariantComponent c{Code(field, n, std::move(cyclic)), g, out.order / ord, ord == out.order};
      if (c.code.dimension() != d)
        throw std::logic_error("decompose_invariant: cyclic subspace has wrong dimension");
      out.components.push_back(std::move(c));
    }
  }
  if (total.rank() != n)
    throw std::logic_error("decompose_invariant: components do not span");

  std::sort(out.components.begin(), out.components.end(),
            [](const auto& a, const auto& b) { return a.code < b.code; });
  std::vector<Vec> stacked;
  for (const auto& c : out.components)
    stacked.insert(stacked.end(), c.code.basis().begin(), c.code.basis().end());
  out.change_of_basis = Matrix(field, std::move(stacked));
  if (out.change_of_basis.rank() != n)
    throw std::logic_error("decompose_invariant: sum is not direct");
  return out;
}

Code find_faithful_irreducible_code(std::uint64_t q)
{
  auto params = numth::validate_c1(q);
  if (!params.valid)
    throw std::invalid_argument("find_faithful_irreducible_code: q rejected (" + params.violated_clause + ")");
  auto field = gf::make_field(params.p, params.f);
  auto shift = build_shift_matrix(field);
  auto dec = decompose_invariant(shift.A);
  for (const auto& c : dec.components)
    if (c.faithful)
      return c.code;
  throw std::logic_error("find_faithful_irreducible_code: no faithful component");
}

std::map<std::size_t, std::uint64_t> weight_profile(const Code& code)
{
  std::map<std::size_t, std::uint64_t> profile;
  if (code.dimension() == 0)
    return profile;
  for (const auto& w : code.codewords()) {
    auto wt = weight(w);
    if (wt)
      ++profile[wt];
  }
  return profile;
}

bool is_equidistant(const Code& code) { return weight_profile(code).size() == 1; }

bool is_regular_on_nonzero(const Code& code, const Matrix& m)
{
  if (!code.is_invariant(m))
    throw std::invalid_argument("is_regular_on_nonzero: code is not invariant");
  if (code.dimension() == 0)
    return false;
  std::uint64_t nonzero = 1;
  for (std::size_t i = 0; i < code.dimension(); ++i)
    nonzero *= code.field()->q();
  nonzero -= 1;
  // Regular: one orbit covering the nonzero words, of size |<m>|.
  const Vec start = code.basis().front();
  Vec v = start;
  std::uint64_t size = 0;
  do {
    v = m.apply(v);
    ++size;
    if (size > nonzero)
      return false;
  } while (v != start);
  return size == nonzero && m.pow(size).is_identity();
}

std::vector<Code> coordinate_kernels(const Code& code)
{
  const auto& field = code.field();
  const auto& basis = code.basis();
  std::vector<Code> out;
  for (std::size_t i = 0; i < code.length(); ++i) {
    if (basis.empty()) {
      out.emplace_back(field, code.length());
      continue;
    }
    Matrix column(field, basis.size(), 1);
    for (std::size_t k = 0; k < basis.size(); ++k)
      column.set(k, 0, basis[k][i]);
    Matrix coeffs = column.left_kernel();
    std::vector<Vec> words;
    for (std::size_t r = 0; r < coeffs.rows(); ++r) {
      Vec w(code.length(), 0);
      for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t j = 0; j < code.length(); ++j)
          w[j] = field->add(w[j], field->mul(coeffs.at(r, k), basis[k][j]));
      words.push_back(std::move(w));
    }
    out.emplace_back(field, code.length(), std::move(words));
  }
  return out;
}

} // namespace tarc::eqcode
