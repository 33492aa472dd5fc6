#include "sl2tilt/ffmod.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "sl2tilt/errors.hpp"

namespace sl2tilt::ffmod {

namespace {

constexpr int kMaxFieldSize = 1024;
constexpr unsigned kSeed = 20240611U;

using Poly = std::vector<int>;  // coefficients low to high

// Remainder of a modulo a monic g over F_p.
Poly poly_mod(Poly a, const Poly& g, int p) {
  const int dg = static_cast<int>(g.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= dg; --d) {
    const int c = a[static_cast<std::size_t>(d)] % p;
    if (c == 0) continue;
    for (int k = 0; k <= dg; ++k) {
      auto& slot = a[static_cast<std::size_t>(d - dg + k)];
      slot = ((slot - c * g[static_cast<std::size_t>(k)]) % p + p) % p;
    }
  }
  a.resize(static_cast<std::size_t>(std::max(dg, 0)));
  return a;
}

Poly monic(const std::vector<int>& low, int p) {
  Poly f;
  for (int c : low) f.push_back(((c % p) + p) % p);
  f.push_back(1);
  return f;
}

std::vector<int> to_coeffs(int v, int p, int n) {
  std::vector<int> c(static_cast<std::size_t>(n));
  for (auto& x : c) {
    x = v % p;
    v /= p;
  }
  return c;
}

int from_coeffs(const std::vector<int>& c, int p) {
  int v = 0;
  for (std::size_t i = c.size(); i > 0; --i) v = v * p + c[i - 1];
  return v;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

void require_same_field(const MatrixModule& x, const MatrixModule& y) {
  if (x.field.get() != y.field.get()) throw DomainError("modules are defined over different field objects");
}

Matrix natural_t(const FiniteField& f) {
  Matrix t(2, 2);
  t(0, 0) = f.alpha_pow(-1);
  t(1, 1) = f.alpha();
  return t;
}

Matrix natural_u(const FiniteField& f, int k) {
  Matrix u = Matrix::identity(2);
  u(0, 1) = f.alpha_pow(k);
  return u;
}

// Sym^k of a 2x2 matrix on the basis e1^{k-j} e2^j.
Matrix symmetric_power(const FiniteField& f, const Matrix& g, int k) {
  const Elem a = g(0, 0);
  const Elem b = g(1, 0);
  const Elem c = g(0, 1);
  const Elem d = g(1, 1);
  Matrix out(k + 1, k + 1);
  for (int j = 0; j <= k; ++j) {
    std::vector<Elem> poly{1};
    auto times = [&](Elem x, Elem y) {
      std::vector<Elem> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] = f.add(next[i], f.mul(poly[i], x));
        next[i + 1] = f.add(next[i + 1], f.mul(poly[i], y));
      }
      poly = std::move(next);
    };
    for (int s = 0; s < k - j; ++s) times(a, b);
    for (int s = 0; s < j; ++s) times(c, d);
    for (int i = 0; i <= k; ++i) out(i, j) = poly[static_cast<std::size_t>(i)];
  }
  return out;
}

Matrix frob_matrix(const FiniteField& f, const Matrix& a, int e) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = f.frob(a(i, j), e);
  }
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

Matrix combine(const FiniteField& f, const std::vector<Matrix>& basis, const std::vector<Elem>& coeffs) {
  Matrix out(basis.front().rows(), basis.front().cols());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (coeffs[b] != 0) out = add(f, out, scale(f, basis[b], coeffs[b]));
  }
  return out;
}

// Flattens each matrix into one row of the result.
Matrix stack_rows(const std::vector<Matrix>& ms) {
  if (ms.empty()) return Matrix();
  const int width = ms.front().rows() * ms.front().cols();
  Matrix out(static_cast<int>(ms.size()), width);
  for (std::size_t r = 0; r < ms.size(); ++r) {
    int c = 0;
    for (int i = 0; i < ms[r].rows(); ++i) {
      for (int j = 0; j < ms[r].cols(); ++j) out(static_cast<int>(r), c++) = ms[r](i, j);
    }
  }
  return out;
}

std::vector<std::vector<int>> matrix_json(const Matrix& m) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(m(i, j));
  }
  return rows;
}

}  // namespace

// ---------------------------------------------------------------- field

bool FiniteField::is_irreducible(int p, const std::vector<int>& monic_low_coeffs) {
  const Poly f = monic(monic_low_coeffs, p);
  const int n = static_cast<int>(monic_low_coeffs.size());
  for (int d = 1; 2 * d <= n; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int v = 0; v < count; ++v) {
      const Poly g = monic(to_coeffs(v, p, d), p);
      const Poly r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
    }
  }
  return n >= 1;
}

std::vector<int> FiniteField::default_polynomial(int p, int n) {
  int count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  for (int v = 0; v < count; ++v) {
    auto c = to_coeffs(v, p, n);
    if (is_irreducible(p, c)) return c;
  }
  throw DomainError("no irreducible polynomial found");
}

std::shared_ptr<const FiniteField> FiniteField::create(int p, int n) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  return create(p, n, default_polynomial(p, n));
}

std::shared_ptr<const FiniteField> FiniteField::create(int p, int n, const std::vector<int>& poly) {
  return std::shared_ptr<const FiniteField>(new FiniteField(p, n, poly));
}

FiniteField::FiniteField(int p, int n, std::vector<int> poly) : params_(p, n), poly_(std::move(poly)) {
  if (params_.q() > kMaxFieldSize) throw DomainError("field too large for the matrix oracle (q > 1024)");
  if (static_cast<int>(poly_.size()) != n) throw DomainError("polynomial must have n low coefficients");
  for (auto& c : poly_) c = ((c % p) + p) % p;
  if (!is_irreducible(p, poly_)) throw DomainError("polynomial is not irreducible over F_p");

  const int qq = q();
  const Poly f = monic(poly_, p);
  auto polymul = [&](int x, int y) {
    const auto a = to_coeffs(x, p, n);
    const auto b = to_coeffs(y, p, n);
    Poly r(static_cast<std::size_t>(2 * n), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    for (auto& c : r) c %= p;
    return from_coeffs(poly_mod(r, f, p), p);
  };

  add_.assign(static_cast<std::size_t>(qq) * qq, 0);
  neg_.assign(static_cast<std::size_t>(qq), 0);
  for (int x = 0; x < qq; ++x) {
    const auto a = to_coeffs(x, p, n);
    std::vector<int> na(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) na[i] = (p - a[i]) % p;
    neg_[static_cast<std::size_t>(x)] = static_cast<Elem>(from_coeffs(na, p));
    for (int y = 0; y < qq; ++y) {
      const auto b = to_coeffs(y, p, n);
      std::vector<int> s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = (a[i] + b[i]) % p;
      add_[idx(static_cast<Elem>(x), static_cast<Elem>(y))] = static_cast<Elem>(from_coeffs(s, p));
    }
  }

  int generator = 1;
  if (qq > 2) {
    for (generator = 2; generator < qq; ++generator) {
      int x = generator;
      int order = 1;
      while (x != 1) {
        x = polymul(x, generator);
        ++order;
      }
      if (order == qq - 1) break;
    }
  }
  exp_.assign(static_cast<std::size_t>(qq - 1), 1);
  log_.assign(static_cast<std::size_t>(qq), -1);
  for (int e = 1; e < qq - 1; ++e) exp_[static_cast<std::size_t>(e)] = static_cast<Elem>(polymul(exp_[static_cast<std::size_t>(e - 1)], generator));
  for (int e = 0; e < qq - 1; ++e) log_[exp_[static_cast<std::size_t>(e)]] = e;

  mul_.assign(static_cast<std::size_t>(qq) * qq, 0);
  for (int x = 1; x < qq; ++x) {
    for (int y = 1; y < qq; ++y) {
      const int e = (log_[static_cast<std::size_t>(x)] + log_[static_cast<std::size_t>(y)]) % (qq - 1);
      mul_[idx(static_cast<Elem>(x), static_cast<Elem>(y))] = exp_[static_cast<std::size_t>(e)];
    }
  }

  coords_.assign(static_cast<std::size_t>(qq), {});
  for (int v = 0; v < qq; ++v) {
    const auto c = to_coeffs(v, p, n);
    Elem x = 0;
    for (int k = 0; k < n; ++k) x = add(x, mul(from_int(c[static_cast<std::size_t>(k)]), alpha_pow(k)));
    coords_[x] = c;
  }
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero");
  const int m = q() - 1;
  return exp_[static_cast<std::size_t>((m - log_[a]) % m)];
}

Elem FiniteField::pow(Elem a, std::int64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::int64_t m = q() - 1;
  const std::int64_t k = ((log_[a] * (e % m)) % m + m) % m;
  return exp_[static_cast<std::size_t>(k)];
}

Elem FiniteField::frob(Elem a, int e) const { return pow(a, params_.pow(e)); }

Elem FiniteField::alpha_pow(std::int64_t e) const {
  const std::int64_t m = q() - 1;
  return exp_[static_cast<std::size_t>(((e % m) + m) % m)];
}

Elem FiniteField::from_int(std::int64_t k) const { return static_cast<Elem>(((k % p()) + p()) % p()); }

// ---------------------------------------------------------------- matrices

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(int j) const {
  Matrix c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

Matrix multiply(const FiniteField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch in multiply");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    Elem* ci = c.row(i);
    for (int l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (x == 0) continue;
      const Elem* bl = b.row(l);
      for (int j = 0; j < b.cols(); ++j) {
        if (bl[j] != 0) ci[j] = f.add(ci[j], f.mul(x, bl[j]));
      }
    }
  }
  return c;
}

Matrix add(const FiniteField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch in add");
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  }
  return c;
}

Matrix scale(const FiniteField& f, const Matrix& a, Elem s) {
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = f.mul(s, a(i, j));
  }
  return c;
}

Matrix kron(const FiniteField& f, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const Elem x = a(i, j);
      if (x == 0) continue;
      for (int k = 0; k < b.rows(); ++k) {
        for (int l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
      }
    }
  }
  return c;
}

Matrix power(const FiniteField& f, const Matrix& a, std::int64_t e) {
  if (e < 0) throw DomainError("negative matrix power");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (e > 0) {
    if (e & 1) result = multiply(f, result, base);
    base = multiply(f, base, base);
    e >>= 1;
  }
  return result;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DomainError("row mismatch in hcat");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Echelon rref(const FiniteField& f, Matrix a) {
  Echelon out;
  int r = 0;
  const int width = a.cols();
  for (int c = 0; c < width && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) std::swap_ranges(a.row(pivot), a.row(pivot) + width, a.row(r));
    Elem* pr = a.row(r);
    const Elem iv = f.inv(pr[c]);
    for (int j = c; j < width; ++j) pr[j] = f.mul(iv, pr[j]);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Elem* ri = a.row(i);
      const Elem factor = ri[c];
      if (factor == 0) continue;
      const Elem minus = f.neg(factor);
      for (int j = c; j < width; ++j) {
        if (pr[j] != 0) ri[j] = f.add(ri[j], f.mul(minus, pr[j]));
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = Matrix(r, width);
  for (int i = 0; i < r; ++i) std::copy(a.row(i), a.row(i) + width, out.reduced.row(i));
  return out;
}

int rank(const FiniteField& f, const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return static_cast<int>(rref(f, a).pivots.size());
}

Matrix nullspace(const FiniteField& f, const Matrix& a) {
  const Echelon e = rref(f, a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> free;
  for (int c = 0; c < a.cols(); ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  }
  Matrix basis(a.cols(), static_cast<int>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], static_cast<int>(k)) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      basis(e.pivots[i], static_cast<int>(k)) = f.neg(e.reduced(static_cast<int>(i), free[k]));
    }
  }
  return basis;
}

Matrix solve(const FiniteField& f, const Matrix& a, const Matrix& b) {
  const Echelon e = rref(f, hcat(a, b));
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const int pc = e.pivots[i];
    if (pc >= a.cols()) throw DomainError("linear system has no solution");
    for (int j = 0; j < b.cols(); ++j) x(pc, j) = e.reduced(static_cast<int>(i), a.cols() + j);
  }
  return x;
}

// ---------------------------------------------------------------- modules

std::vector<const Matrix*> MatrixModule::generators() const {
  std::vector<const Matrix*> g{&t};
  for (const auto& m : u) g.push_back(&m);
  return g;
}

MatrixModule build_U(std::int64_t i, const FieldPtr& field) {
  MatrixModule m{field, Matrix(1, 1), {}};
  m.t(0, 0) = field->alpha_pow(i);
  for (int k = 0; k < field->n(); ++k) m.u.push_back(Matrix::identity(1));
  return m;
}

MatrixModule build_M(std::int64_t a, const FieldPtr& field) {
  const FiniteField& f = *field;
  const auto digits = to_digits(a, f.params());
  auto assemble = [&](const Matrix& g) {
    Matrix acc = Matrix::identity(1);
    for (int i = 0; i < f.n(); ++i) {
      acc = kron(f, acc, symmetric_power(f, frob_matrix(f, g, i), digits.digits[static_cast<std::size_t>(i)]));
    }
    return acc;
  };
  MatrixModule m{field, assemble(natural_t(f)), {}};
  for (int k = 0; k < f.n(); ++k) m.u.push_back(assemble(natural_u(f, k)));
  return m;
}

MatrixModule twist(const MatrixModule& x, std::int64_t j) {
  MatrixModule m = x;
  m.t = scale(*x.field, x.t, x.field->alpha_pow(j));
  return m;
}

MatrixModule tensor(const MatrixModule& x, const MatrixModule& y) {
  require_same_field(x, y);
  const FiniteField& f = *x.field;
  MatrixModule m{x.field, kron(f, x.t, y.t), {}};
  for (std::size_t k = 0; k < x.u.size(); ++k) m.u.push_back(kron(f, x.u[k], y.u[k]));
  return m;
}

MatrixModule direct_sum(const MatrixModule& x, const MatrixModule& y) {
  require_same_field(x, y);
  MatrixModule m{x.field, block_diag(x.t, y.t), {}};
  for (std::size_t k = 0; k < x.u.size(); ++k) m.u.push_back(block_diag(x.u[k], y.u[k]));
  return m;
}

MatrixModule frobenius_twist(const MatrixModule& x, int e) {
  const FiniteField& f = *x.field;
  MatrixModule m{x.field, frob_matrix(f, x.t, e), {}};
  for (const auto& g : x.u) m.u.push_back(frob_matrix(f, g, e));
  return m;
}

MatrixModule module_of_symbol(const StableSymbol& s, const FieldPtr& field) {
  if (s.is_zero()) throw DomainError("the zero symbol has no module representative");
  MatrixModule m = twist(build_M(s.idx(), field), s.u());
  return s.omega() == 1 ? heller(m) : m;
}

std::vector<Matrix> hom_basis(const MatrixModule& x, const MatrixModule& y) {
  require_same_field(x, y);
  const FiniteField& f = *x.field;
  const int dx = x.dim();
  const int dy = y.dim();
  const auto gx = x.generators();
  const auto gy = y.generators();
  Matrix eq(static_cast<int>(gx.size()) * dx * dy, dx * dy);
  int row = 0;
  for (std::size_t g = 0; g < gx.size(); ++g) {
    const Matrix& xg = *gx[g];
    const Matrix& yg = *gy[g];
    for (int r = 0; r < dy; ++r) {
      for (int c = 0; c < dx; ++c, ++row) {
        Elem* e = eq.row(row);
        for (int k = 0; k < dx; ++k) {
          if (xg(k, c) != 0) e[r * dx + k] = f.add(e[r * dx + k], xg(k, c));
        }
        for (int k = 0; k < dy; ++k) {
          if (yg(r, k) != 0) e[k * dx + c] = f.sub(e[k * dx + c], yg(r, k));
        }
      }
    }
  }
  const Matrix ns = nullspace(f, eq);
  std::vector<Matrix> out;
  for (int v = 0; v < ns.cols(); ++v) {
    Matrix h(dy, dx);
    for (int r = 0; r < dy; ++r) {
      for (int c = 0; c < dx; ++c) h(r, c) = ns(r * dx + c, v);
    }
    out.push_back(std::move(h));
  }
  return out;
}

int hom_dim(const MatrixModule& x, const MatrixModule& y) { return static_cast<int>(hom_basis(x, y).size()); }

std::vector<int> head_weights(const MatrixModule& x) {
  std::vector<int> w(static_cast<std::size_t>(x.field->q() - 1));
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = hom_dim(x, build_U(static_cast<std::int64_t>(k), x.field));
  return w;
}

std::vector<int> socle_weights(const MatrixModule& x) {
  std::vector<int> w(static_cast<std::size_t>(x.field->q() - 1));
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = hom_dim(build_U(static_cast<std::int64_t>(k), x.field), x);
  return w;
}

ProjectiveCover projective_cover(const MatrixModule& y) {
  const FiniteField& f = *y.field;
  const auto weights = head_weights(y);
  const MatrixModule steinberg = build_M(f.params().steinberg(), y.field);
  std::optional<MatrixModule> p;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    for (int c = 0; c < weights[k]; ++c) {
      MatrixModule summand = twist(steinberg, static_cast<std::int64_t>(k));
      p = p ? direct_sum(*p, summand) : summand;
    }
  }
  if (!p) throw NoSurjectionFound("module has empty head");
  const auto basis = hom_basis(*p, y);
  if (basis.empty()) throw NoSurjectionFound("Hom(P, Y) is zero");
  for (const auto& h : basis) {
    if (rank(f, h) == y.dim()) return {*p, h};
  }
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> pick(0, f.q() - 1);
  std::vector<Elem> coeffs(basis.size());
  for (int attempt = 0; attempt < 256; ++attempt) {
    for (auto& c : coeffs) c = static_cast<Elem>(pick(rng));
    Matrix h = combine(f, basis, coeffs);
    if (rank(f, h) == y.dim()) return {*p, std::move(h)};
  }
  throw NoSurjectionFound("no surjection from the projective cover found");
}

int stable_hom_dim_oracle(const MatrixModule& x, const MatrixModule& y, const ProjectiveCover& cover_of_y) {
  const FiniteField& f = *x.field;
  const int total = hom_dim(x, y);
  if (total == 0) return 0;
  std::vector<Matrix> through;
  for (const auto& h : hom_basis(x, cover_of_y.module)) through.push_back(multiply(f, cover_of_y.surjection, h));
  return total - (through.empty() ? 0 : rank(f, stack_rows(through)));
}

int stable_hom_dim_oracle(const MatrixModule& x, const MatrixModule& y) {
  return stable_hom_dim_oracle(x, y, projective_cover(y));
}

MatrixModule heller(const MatrixModule& x) {
  const ProjectiveCover cover = projective_cover(x);
  if (cover.module.dim() == x.dim()) throw DomainError("Heller translate of a projective module");
  return kernel_module(cover.module, cover.surjection);
}

int ext1_oracle(const MatrixModule& x, const MatrixModule& y) { return stable_hom_dim_oracle(heller(x), y); }

bool is_isomorphic(const MatrixModule& x, const MatrixModule& y) {
  if (x.dim() != y.dim()) return false;
  const FiniteField& f = *x.field;
  const auto basis = hom_basis(x, y);
  if (basis.empty()) return false;
  for (const auto& h : basis) {
    if (rank(f, h) == x.dim()) return true;
  }
  std::vector<Elem> coeffs(basis.size());
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> pick(0, f.q() - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (auto& c : coeffs) c = static_cast<Elem>(pick(rng));
    if (rank(f, combine(f, basis, coeffs)) == x.dim()) return true;
  }
  double combos = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) combos *= f.q();
  if (combos > 4096) return false;
  std::fill(coeffs.begin(), coeffs.end(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < coeffs.size() && coeffs[i] == f.q() - 1) coeffs[i++] = 0;
    if (i == coeffs.size()) return false;
    ++coeffs[i];
    if (rank(f, combine(f, basis, coeffs)) == x.dim()) return true;
  }
}

bool is_projective(const MatrixModule& x) { return stable_hom_dim_oracle(x, x) == 0; }

MatrixModule kernel_module(const MatrixModule& x, const Matrix& f) {
  const FiniteField& field = *x.field;
  const Matrix k = nullspace(field, f);
  if (k.cols() == 0) throw DomainError("kernel is zero");
  MatrixModule m{x.field, solve(field, k, multiply(field, x.t, k)), {}};
  for (const auto& g : x.u) m.u.push_back(solve(field, k, multiply(field, g, k)));
  return m;
}

MatrixModule cokernel_module(const MatrixModule& y, const Matrix& f) {
  const FiniteField& field = *y.field;
  const Matrix q = transpose(nullspace(field, transpose(f)));
  if (q.rows() == 0) throw DomainError("cokernel is zero");
  const Matrix s = solve(field, q, Matrix::identity(q.rows()));
  auto induced = [&](const Matrix& g) { return multiply(field, multiply(field, q, g), s); };
  MatrixModule m{y.field, induced(y.t), {}};
  for (const auto& g : y.u) m.u.push_back(induced(g));
  return m;
}

bool verify_ses_ifill(std::int64_t b, int i, const FieldPtr& field) {
  const FiniteField& f = *field;
  const GroupParams& params = f.params();
  const int bi = to_digits(b, params).digits.at(static_cast<std::size_t>(i));
  if (bi > params.p() - 2) throw DomainError("verify_ses_ifill needs b_i <= p-2");
  const MatrixModule sub = twist(build_M(flip_digit(b, i, params), field), -params.pow(i + 1));
  const MatrixModule mid = twist(build_M(fill_digit(b, i, params), field), -params.pow(i) * (params.p() - 1 - bi));
  const MatrixModule quo = build_M(b, field);
  if (sub.dim() + quo.dim() != mid.dim()) return false;

  const auto basis = hom_basis(sub, mid);
  if (basis.empty()) return false;
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> pick(0, f.q() - 1);
  std::vector<Elem> coeffs(basis.size());
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix h = attempt < static_cast<int>(basis.size()) ? basis[static_cast<std::size_t>(attempt)] : Matrix();
    if (h.rows() == 0) {
      for (auto& c : coeffs) c = static_cast<Elem>(pick(rng));
      h = combine(f, basis, coeffs);
    }
    if (rank(f, h) != sub.dim()) continue;
    const MatrixModule cok = cokernel_module(mid, h);
    if (!is_isomorphic(cok, quo)) continue;
    return !is_isomorphic(mid, direct_sum(sub, quo));
  }
  return false;
}

bool check_group_relations(const MatrixModule& x) {
  const FiniteField& f = *x.field;
  const int d = x.dim();
  const Matrix id = Matrix::identity(d);
  if (!(power(f, x.t, f.q() - 1) == id)) return false;
  const Matrix t_inv = power(f, x.t, f.q() - 2);
  const Matrix minus_id = scale(f, id, f.neg(1));
  for (std::size_t k = 0; k < x.u.size(); ++k) {
    if (!power(f, add(f, x.u[k], minus_id), f.p()).is_zero()) return false;
    for (std::size_t l = 0; l < x.u.size(); ++l) {
      if (!(multiply(f, x.u[k], x.u[l]) == multiply(f, x.u[l], x.u[k]))) return false;
    }
    const auto& coords = f.alpha_coords(f.alpha_pow(static_cast<std::int64_t>(k) - 2));
    Matrix expected = id;
    for (std::size_t l = 0; l < coords.size(); ++l) expected = multiply(f, expected, power(f, x.u[l], coords[l]));
    if (!(multiply(f, multiply(f, x.t, x.u[k]), t_inv) == expected)) return false;
  }
  return true;
}

void convention_self_test(const FieldPtr& field) {
  const FiniteField& f = *field;
  const std::int64_t top = f.params().steinberg();
  for (std::int64_t b : {std::int64_t{0}, std::int64_t{1}, top - 1}) {
    if (b < 0 || b >= top) continue;
    const auto w = head_weights(build_M(b, field));
    for (std::size_t k = 0; k < w.size(); ++k) {
      const int expected = static_cast<std::int64_t>(k) == f.params().reduce(b) ? 1 : 0;
      if (w[k] != expected) {
        throw EngineAssertion("head(M_" + std::to_string(b) +
                              ") is not U_b: flip the sign of the exponent in the t generator");
      }
    }
  }
  if (!is_isomorphic(frobenius_twist(build_U(1, field)), build_U(f.p(), field))) {
    throw EngineAssertion("Frobenius twist of U_1 is not U_p");
  }
}

nlohmann::json to_json(const MatrixModule& x) {
  nlohmann::json u = nlohmann::json::array();
  for (const auto& g : x.u) u.push_back(matrix_json(g));
  return {{"p", x.field->p()},
          {"n", x.field->n()},
          {"polynomial", x.field->polynomial()},
          {"alpha", x.field->alpha()},
          {"dim", x.dim()},
          {"t", matrix_json(x.t)},
          {"u", u}};
}

}  // namespace sl2tilt::ffmod
