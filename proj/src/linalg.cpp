#include "evp/linalg.hpp"

namespace evp {

Scalar LinearForm::evaluate(const FieldWord& w) const {
  if (w.size() != coeffs.size())
    throw DomainError(ErrorCode::DimensionMismatch,
                      "form arity " + std::to_string(coeffs.size()) +
                          " applied to word of length " +
                          std::to_string(w.size()));
  Scalar acc = Scalar::zero(field);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    acc = acc + coeffs[i] * w[i];
  return acc;
}

Matrix Matrix::zero(const FieldDescriptor& f, std::size_t r, std::size_t c) {
  Matrix m;
  m.field = f;
  m.rows.assign(r, std::vector<Scalar>(c, Scalar::zero(f)));
  return m;
}

Matrix Matrix::identity(const FieldDescriptor& f, std::size_t n) {
  Matrix m = zero(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = Scalar::one(f);
  return m;
}

RowReduction row_reduce(const Matrix& m) {
  RowReduction out;
  out.rref = m;
  auto& rows = out.rref.rows;
  const std::size_t nrows = rows.size();
  const std::size_t ncols = out.rref.col_count();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < nrows; ++col) {
    std::size_t pivot = lead;
    while (pivot < nrows && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == nrows) continue;
    std::swap(rows[lead], rows[pivot]);
    Scalar inv = rows[lead][col].inverse();
    for (auto& x : rows[lead]) x = x * inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == lead || rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col];
      for (std::size_t c = 0; c < ncols; ++c)
        rows[r][c] = rows[r][c] - factor * rows[lead][c];
    }
    out.pivot_columns.push_back(col);
    ++lead;
  }
  out.rank = out.pivot_columns.size();
  return out;
}

std::vector<FieldWord> kernel_basis(const Matrix& m, std::size_t ncols) {
  RowReduction rr = row_reduce(m);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;

  std::vector<FieldWord> basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    FieldWord v(ncols, Scalar::zero(m.field));
    v[free_col] = Scalar::one(m.field);
    for (std::size_t r = 0; r < rr.pivot_columns.size(); ++r) {
      std::size_t pc = rr.pivot_columns[r];
      v[pc] = -rr.rref.rows[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void BilinearFragment::validate() const {
  const std::size_t n = entries.size();
  for (const auto& row : entries)
    if (row.size() != n)
      throw DomainError(ErrorCode::DimensionMismatch,
                        "fragment matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(entries[i][j] == entries[j][i]))
        throw DomainError(ErrorCode::InvalidArgument,
                          "fragment matrix is not symmetric");
}

Scalar BilinearFragment::apply(const FieldWord& u, const FieldWord& v) const {
  const std::size_t n = dimension();
  if (u.size() != n || v.size() != n)
    throw DomainError(ErrorCode::DimensionMismatch,
                      "vector length does not match fragment dimension");
  Scalar acc = Scalar::zero(field);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      acc = acc + u[i] * entries[i][j] * v[j];
  }
  return acc;
}

std::vector<FieldWord> orthogonal_complement(
    const BilinearFragment& phi, const std::vector<FieldWord>& u) {
  const std::size_t n = phi.dimension();
  Matrix gram = Matrix::zero(phi.field, u.size(), n);
  for (std::size_t r = 0; r < u.size(); ++r) {
    if (u[r].size() != n)
      throw DomainError(ErrorCode::DimensionMismatch,
                        "U vector length does not match fragment dimension");
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc = Scalar::zero(phi.field);
      for (std::size_t i = 0; i < n; ++i)
        acc = acc + u[r][i] * phi.entries[i][j];
      gram.rows[r][j] = acc;
    }
  }
  return kernel_basis(gram, n);
}

LinearForm coefficients_of(const FieldRule& rule, std::size_t arity,
                           const FieldDescriptor& field) {
  LinearForm form;
  form.field = field;
  FieldWord unit(arity, Scalar::zero(field));
  for (std::size_t i = 0; i < arity; ++i) {
    unit[i] = Scalar::one(field);
    form.coeffs.push_back(rule(unit));
    unit[i] = Scalar::zero(field);
  }

  auto check = [&](const FieldWord& w) {
    if (!(rule(w) == form.evaluate(w)))
      throw DomainError(ErrorCode::NotLinear,
                        "rule disagrees with its extracted linear form");
  };

  // Deterministic sample: zero, unit pairs and triples, and a few scaled
  // pseudo-random words. This is a sample check, not a linearity proof.
  check(FieldWord(arity, Scalar::zero(field)));
  for (std::size_t i = 0; i < arity; ++i) {
    for (std::size_t j = i + 1; j < arity; ++j) {
      FieldWord w(arity, Scalar::zero(field));
      w[i] = Scalar::one(field);
      w[j] = Scalar::one(field);
      check(w);
      for (std::size_t k = j + 1; k < arity; ++k) {
        w[k] = Scalar::one(field);
        check(w);
        w[k] = Scalar::zero(field);
      }
    }
  }
  const std::uint64_t limit = field.finite() ? field.p : 7;
  for (std::uint64_t salt = 1; salt <= 3; ++salt) {
    FieldWord w;
    for (std::size_t i = 0; i < arity; ++i)
      w.push_back(Scalar::from_int(
          field, static_cast<std::int64_t>((salt * (i + 2) * 2654435761ULL) %
                                           limit)));
    check(w);
  }
  return form;
}

FormDescriptor nth_form_descriptor(const FieldDescriptor& f,
                                   std::uint64_t index) {
  const bool finite = f.finite();
  const std::uint64_t max_index = finite ? f.p : 0;
  std::uint64_t seen = 0;
  for (std::uint64_t weight = 1;; ++weight) {
    for (std::size_t arity = 1; arity <= weight; ++arity) {
      const std::uint64_t budget = weight - arity;
      // index tuples of length `arity` summing to `budget`, lexicographic
      std::vector<std::uint64_t> tuple(arity, 0);
      std::function<bool(std::size_t, std::uint64_t)> walk =
          [&](std::size_t pos, std::uint64_t remaining) -> bool {
        if (pos + 1 == arity) {
          if (finite && remaining >= max_index) return false;
          tuple[pos] = remaining;
          if (seen++ == index) return true;
          return false;
        }
        for (std::uint64_t v = 0; v <= remaining; ++v) {
          if (finite && v >= max_index) break;
          tuple[pos] = v;
          if (walk(pos + 1, remaining - v)) return true;
        }
        return false;
      };
      if (walk(0, budget)) return FormDescriptor{arity, tuple};
    }
  }
}

LinearForm realize_form(const FieldDescriptor& f, const FormDescriptor& d) {
  LinearForm form;
  form.field = f;
  for (std::uint64_t idx : d.coeff_indices)
    form.coeffs.push_back(enumerate_field(f, idx));
  return form;
}

std::vector<LinearForm> enumerate_linear_forms(const FieldDescriptor& f,
                                               std::size_t up_to) {
  std::vector<LinearForm> forms;
  for (std::size_t k = 0; k < up_to; ++k)
    forms.push_back(realize_form(f, nth_form_descriptor(f, k)));
  return forms;
}

}  // namespace evp
