#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "evp/field.hpp"

namespace evp {

/// A homogeneous linear functional K^m -> K given by its coefficient vector;
/// evaluation is the dot product, no constant term.
struct LinearForm {
  FieldDescriptor field;
  std::vector<Scalar> coeffs;

  std::size_t arity() const { return coeffs.size(); }
  Scalar evaluate(const FieldWord& w) const;

  bool operator==(const LinearForm&) const = default;
};

/// Dense rectangular matrix of exact field scalars, row major.
struct Matrix {
  FieldDescriptor field;
  std::vector<std::vector<Scalar>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }

  static Matrix zero(const FieldDescriptor& f, std::size_t r, std::size_t c);
  static Matrix identity(const FieldDescriptor& f, std::size_t n);
};

struct RowReduction {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form over the exact field. Pivot choice is the first
/// nonzero entry in column order, so the result is deterministic.
RowReduction row_reduce(const Matrix& m);

/// Basis of the right kernel {x : Mx = 0}, derived from the RREF in the
/// standard way (one vector per free column, in column order). The column
/// count is explicit so a system with no rows keeps its ambient dimension.
std::vector<FieldWord> kernel_basis(const Matrix& m, std::size_t ncols);

/// A finite symmetric fragment of a bilinear form over e_0..e_{N-1}.
struct BilinearFragment {
  FieldDescriptor field;
  std::vector<std::vector<Scalar>> entries;  // N x N, symmetric

  std::size_t dimension() const { return entries.size(); }
  void validate() const;

  /// Phi(u, v) = u^T M v.
  Scalar apply(const FieldWord& u, const FieldWord& v) const;
};

/// Basis of U-perp within the fragment: all x with Phi(u, x) = 0 for every
/// u in U. Deterministic via kernel_basis of the Gram rows u^T M.
std::vector<FieldWord> orthogonal_complement(const BilinearFragment& phi,
                                             const std::vector<FieldWord>& u);

/// A field-valued prediction rule at one index: maps a word of length m to a
/// value. Used as the input of coefficients_of.
using FieldRule = std::function<Scalar(const FieldWord&)>;

/// Extracts the coefficient vector of a rule declared linear by evaluating it
/// on unit words, then replays a deterministic sample of words against the dot
/// product; a mismatch raises NotLinear.
LinearForm coefficients_of(const FieldRule& rule, std::size_t arity,
                           const FieldDescriptor& field);

/// Descriptor of the k-th linear form in the normative enumeration: arity m
/// and per-coefficient field-enumeration indices.
struct FormDescriptor {
  std::size_t arity = 0;
  std::vector<std::uint64_t> coeff_indices;
};

/// All linear functionals K^m -> K (m >= 1), enumerated by total weight
/// w = m + sum(coefficient indices), lexicographically within a weight
/// (arity first, then the index tuple). Stable across runs.
std::vector<LinearForm> enumerate_linear_forms(const FieldDescriptor& f,
                                               std::size_t up_to);

FormDescriptor nth_form_descriptor(const FieldDescriptor& f,
                                   std::uint64_t index);
LinearForm realize_form(const FieldDescriptor& f, const FormDescriptor& d);

}  // namespace evp
