#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sl2tilt/basep.hpp"
#include "sl2tilt/symbols.hpp"

namespace sl2tilt::ffmod {

using Elem = std::uint16_t;

/// F_q as F_p[x]/(f). An element is encoded as sum c_i p^i, c_i its x^i coefficient.
class FiniteField {
 public:
  /// Uses the first monic irreducible polynomial of degree n.
  static std::shared_ptr<const FiniteField> create(int p, int n);
  /// poly holds the n low coefficients of a monic degree-n polynomial, low to high.
  static std::shared_ptr<const FiniteField> create(int p, int n, const std::vector<int>& poly);

  static bool is_irreducible(int p, const std::vector<int>& monic_low_coeffs);
  static std::vector<int> default_polynomial(int p, int n);

  const GroupParams& params() const { return params_; }
  int p() const { return params_.p(); }
  int n() const { return params_.n(); }
  int q() const { return static_cast<int>(params_.q()); }
  const std::vector<int>& polynomial() const { return poly_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  /// Throws DomainError on 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::int64_t e) const;
  /// x^{p^e}.
  Elem frob(Elem a, int e) const;

  /// The fixed generator of the multiplicative group.
  Elem alpha() const { return exp_[1 % exp_.size()]; }
  /// alpha^e for any integer e.
  Elem alpha_pow(std::int64_t e) const;
  /// Image of an integer in the prime field.
  Elem from_int(std::int64_t k) const;
  /// F_p coordinates (c_0..c_{n-1}) with x = sum c_k alpha^k.
  const std::vector<int>& alpha_coords(Elem x) const { return coords_[x]; }

 private:
  FiniteField(int p, int n, std::vector<int> poly);
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q()) + b; }

  GroupParams params_;
  std::vector<int> poly_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> exp_;
  std::vector<int> log_;
  std::vector<std::vector<int>> coords_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Elem operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Elem* row(int i) { return data_.data() + static_cast<std::size_t>(i) * cols_; }
  const Elem* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * cols_; }
  Matrix column(int j) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

Matrix multiply(const FiniteField& f, const Matrix& a, const Matrix& b);
Matrix add(const FiniteField& f, const Matrix& a, const Matrix& b);
Matrix scale(const FiniteField& f, const Matrix& a, Elem s);
Matrix kron(const FiniteField& f, const Matrix& a, const Matrix& b);
Matrix power(const FiniteField& f, const Matrix& a, std::int64_t e);
/// Horizontal concatenation.
Matrix hcat(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;  ///< rank rows in reduced row echelon form
  std::vector<int> pivots;
};
Echelon rref(const FiniteField& f, Matrix a);
int rank(const FiniteField& f, const Matrix& a);
/// Columns form a basis of {x : a x = 0}.
Matrix nullspace(const FiniteField& f, const Matrix& a);
/// Some x with a x = b; throws DomainError when none exists.
Matrix solve(const FiniteField& f, const Matrix& a, const Matrix& b);

/// Generator matrices of an FH-module, acting on column vectors.
///
/// t is diag(alpha^-1, alpha) and u[k] is the unipotent with entry alpha^k.
struct MatrixModule {
  FieldPtr field;
  Matrix t;
  std::vector<Matrix> u;

  int dim() const { return t.rows(); }
  /// t, u[0], ..., u[n-1].
  std::vector<const Matrix*> generators() const;
};

MatrixModule build_U(std::int64_t i, const FieldPtr& field);
/// Restriction of the simple SL_2(q)-module with highest weight a; a = q-1 is the Steinberg module.
MatrixModule build_M(std::int64_t a, const FieldPtr& field);
/// X (x) U_j.
MatrixModule twist(const MatrixModule& x, std::int64_t j);
MatrixModule tensor(const MatrixModule& x, const MatrixModule& y);
MatrixModule direct_sum(const MatrixModule& x, const MatrixModule& y);
/// Entrywise x -> x^{p^e} on every generator.
MatrixModule frobenius_twist(const MatrixModule& x, int e = 1);
/// U_u (x) M_idx, with Heller applied when omega = 1. Throws DomainError on the zero symbol.
MatrixModule module_of_symbol(const StableSymbol& s, const FieldPtr& field);

/// Basis of Hom_FH(X, Y) as dim(Y) x dim(X) matrices.
std::vector<Matrix> hom_basis(const MatrixModule& x, const MatrixModule& y);
int hom_dim(const MatrixModule& x, const MatrixModule& y);

/// Multiplicity of U_k in the head (socle) for k = 0..q-2.
std::vector<int> head_weights(const MatrixModule& x);
std::vector<int> socle_weights(const MatrixModule& x);

struct ProjectiveCover {
  MatrixModule module;
  Matrix surjection;  ///< dim(Y) x dim(P)
};
/// One U_k (x) M_{q-1} summand per head factor U_k, and a surjection onto Y.
ProjectiveCover projective_cover(const MatrixModule& y);

int stable_hom_dim_oracle(const MatrixModule& x, const MatrixModule& y);
int stable_hom_dim_oracle(const MatrixModule& x, const MatrixModule& y, const ProjectiveCover& cover_of_y);
/// Kernel of the projective cover. Throws DomainError for projective input.
MatrixModule heller(const MatrixModule& x);
int ext1_oracle(const MatrixModule& x, const MatrixModule& y);

bool is_isomorphic(const MatrixModule& x, const MatrixModule& y);
bool is_projective(const MatrixModule& x);

/// Submodule ker(f) for f: X -> Y (dim(Y) x dim(X)).
MatrixModule kernel_module(const MatrixModule& x, const Matrix& f);
/// Quotient Y / im(f) for f: X -> Y.
MatrixModule cokernel_module(const MatrixModule& y, const Matrix& f);

/// Existence of a non-split 0 -> U_{-p^{i+1}} M_{b(i')} -> U_{-p^i(p-1-b_i)} M_{b(i-bar)} -> M_b -> 0.
bool verify_ses_ifill(std::int64_t b, int i, const FieldPtr& field);

/// t^{q-1} = 1, (u_k - 1)^p = 0, u's commute, t u_c t^-1 = u_{alpha^-2 c}.
bool check_group_relations(const MatrixModule& x);

/// Checks head(M_b) = U_b and Frob(U_i) = U_{pi} on a few b; throws EngineAssertion otherwise.
void convention_self_test(const FieldPtr& field);

nlohmann::json to_json(const MatrixModule& x);

}  // namespace sl2tilt::ffmod
