#include "forcealg/matrix_forcing.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace forcealg {

namespace {

void require_unit_scale(const Scalar& c) {
  if (c.is_zero()) throw std::invalid_argument("scale factor must be a unit (nonzero constant)");
}

Polynomial minor_det(const ForcingMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m.entries[rows[0]][cols[0]];
  Polynomial acc = Polynomial::zero(m.base);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    Polynomial cofactor = m.entries[rows[0]][cols[k]] * minor_det(m, sub_rows, sub_cols);
    acc = (k % 2 == 0) ? acc + cofactor : acc - cofactor;
  }
  return acc;
}

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] + (k - i) < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

ForcingMatrix ForcingMatrix::make(RingPtr base, std::vector<std::vector<Polynomial>> entries,
                                  std::vector<Polynomial> vec, std::vector<std::string> t_names) {
  if (entries.empty()) throw std::invalid_argument("forcing matrix needs at least one row");
  std::size_t n = entries[0].size();
  for (const auto& row : entries) {
    if (row.size() != n) throw std::invalid_argument("forcing matrix must be rectangular");
    for (const Polynomial& e : row) require_same_ring(*base, *e.ring());
  }
  if (vec.size() != entries.size())
    throw std::invalid_argument("inhomogeneous vector length must equal the row count");
  for (const Polynomial& e : vec) require_same_ring(*base, *e.ring());
  if (t_names.empty())
    for (std::size_t i = 0; i < n; ++i) t_names.push_back("T" + std::to_string(i + 1));
  if (t_names.size() != n) throw std::invalid_argument("need one T variable per column");
  for (std::size_t i = 0; i < t_names.size(); ++i) {
    const std::string& t = t_names[i];
    if (t == "__z" || t == "__t") throw std::invalid_argument("reserved variable name '" + t + "'");
    if (base->var_index(t))
      throw std::invalid_argument("forcing variable '" + t + "' collides with a base variable");
    for (std::size_t j = i + 1; j < t_names.size(); ++j)
      if (t == t_names[j]) throw std::invalid_argument("duplicate forcing variable '" + t + "'");
  }
  return ForcingMatrix{std::move(base), std::move(entries), std::move(vec), std::move(t_names)};
}

bool ForcingMatrix::homogeneous() const {
  return std::all_of(vec.begin(), vec.end(), [](const Polynomial& g) { return g.is_zero(); });
}

RingPtr matrix_forcing_ring(const ForcingMatrix& m) {
  std::vector<std::string> vars = m.base->vars();
  vars.insert(vars.end(), m.t_names.begin(), m.t_names.end());
  return PolyRing::make(m.base->field(), std::move(vars), m.base->nvars());
}

std::vector<Polynomial> forcing_elements(const ForcingMatrix& m) {
  RingPtr b = matrix_forcing_ring(m);
  std::vector<Polynomial> hs;
  hs.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Polynomial h = m.vec[i].embed_into(b);
    for (std::size_t j = 0; j < m.cols(); ++j)
      h = h + m.entries[i][j].embed_into(b) * Polynomial::variable(b, m.t_names[j]);
    hs.push_back(h);
  }
  return hs;
}

Ideal forcing_ideal(const ForcingMatrix& m) {
  return Ideal(matrix_forcing_ring(m), forcing_elements(m));
}

ForcingMatrix row_op(const ForcingMatrix& m, const ElementaryOp& op) {
  ForcingMatrix out = m;
  if (const auto* swap = std::get_if<SwapOp>(&op)) {
    if (swap->a >= m.rows() || swap->b >= m.rows()) throw std::out_of_range("row index");
    std::swap(out.entries[swap->a], out.entries[swap->b]);
    std::swap(out.vec[swap->a], out.vec[swap->b]);
  } else if (const auto* scale = std::get_if<ScaleOp>(&op)) {
    if (scale->index >= m.rows()) throw std::out_of_range("row index");
    require_unit_scale(scale->factor);
    for (Polynomial& e : out.entries[scale->index]) e = e.scaled(scale->factor);
    out.vec[scale->index] = out.vec[scale->index].scaled(scale->factor);
  } else {
    const auto& add = std::get<AddMultipleOp>(op);
    if (add.target >= m.rows() || add.source >= m.rows()) throw std::out_of_range("row index");
    if (add.target == add.source) throw std::invalid_argument("row op needs distinct rows");
    require_same_ring(*m.base, *add.factor.ring());
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.entries[add.target][j] = out.entries[add.target][j] + add.factor * out.entries[add.source][j];
    out.vec[add.target] = out.vec[add.target] + add.factor * out.vec[add.source];
  }
  return out;
}

ColOpResult col_op(const ForcingMatrix& m, const ElementaryOp& op) {
  ColOpResult out{m, {}};
  RingPtr b = matrix_forcing_ring(m);
  auto tvar = [&](std::size_t j) { return Polynomial::variable(b, m.t_names[j]); };

  if (const auto* swap = std::get_if<SwapOp>(&op)) {
    if (swap->a >= m.cols() || swap->b >= m.cols()) throw std::out_of_range("column index");
    for (auto& row : out.matrix.entries) std::swap(row[swap->a], row[swap->b]);
    out.subst.forward.insert_or_assign(m.t_names[swap->a], tvar(swap->b));
    out.subst.forward.insert_or_assign(m.t_names[swap->b], tvar(swap->a));
    out.subst.inverse = out.subst.forward;
  } else if (const auto* scale = std::get_if<ScaleOp>(&op)) {
    if (scale->index >= m.cols()) throw std::out_of_range("column index");
    require_unit_scale(scale->factor);
    if (!(scale->factor.field() == b->field()))
      throw std::invalid_argument("scale factor field does not match the ring");
    for (auto& row : out.matrix.entries) row[scale->index] = row[scale->index].scaled(scale->factor);
    out.subst.forward.insert_or_assign(m.t_names[scale->index], tvar(scale->index).scaled(scale->factor));
    out.subst.inverse.insert_or_assign(m.t_names[scale->index],
                                       tvar(scale->index).scaled(scale->factor.inverse()));
  } else {
    const auto& add = std::get<AddMultipleOp>(op);
    if (add.target >= m.cols() || add.source >= m.cols()) throw std::out_of_range("column index");
    if (add.target == add.source) throw std::invalid_argument("column op needs distinct columns");
    require_same_ring(*m.base, *add.factor.ring());
    for (auto& row : out.matrix.entries)
      row[add.target] = row[add.target] + add.factor * row[add.source];
    Polynomial d = add.factor.embed_into(b);
    out.subst.forward.insert_or_assign(m.t_names[add.source], tvar(add.source) + d * tvar(add.target));
    out.subst.inverse.insert_or_assign(m.t_names[add.source], tvar(add.source) - d * tvar(add.target));
  }
  return out;
}

Polynomial determinant(const ForcingMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<std::size_t> all(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) all[i] = i;
  return minor_det(m, all, all);
}

Ideal fitting_ideal(const ForcingMatrix& m, std::size_t size) {
  if (size < 1 || size > std::min(m.rows(), m.cols()))
    throw std::out_of_range("minor size must lie in [1, min(m, n)]");
  std::vector<Polynomial> gens;
  combinations(m.rows(), size, [&](const std::vector<std::size_t>& rows) {
    combinations(m.cols(), size, [&](const std::vector<std::size_t>& cols) {
      gens.push_back(minor_det(m, rows, cols));
    });
  });
  return Ideal(m.base, std::move(gens));
}

CriterionReport is_regular_sequence(const ForcingMatrix& m) {
  CriterionReport r;
  std::vector<Polynomial> hs = forcing_elements(m);
  std::int64_t rows = static_cast<std::int64_t>(m.rows());
  r.witnesses.emplace_back("m", Codim::of(rows));
  if (std::any_of(hs.begin(), hs.end(), [](const Polynomial& h) { return h.is_zero(); })) {
    r.verdict = Verdict::Degenerate;
    r.branch = "zero forcing element";
    return r;
  }
  Codim c = codimension(Ideal(hs[0].ring(), hs));
  r.witnesses.emplace_back("codim_H", c);
  if (c.is_unit()) {
    r.verdict = Verdict::No;
    r.branch = "H = B";
    r.notes.push_back("the forcing elements generate the unit ideal");
    return r;
  }
  if (c.value() > rows) throw std::logic_error("codimension exceeds the generator count");
  if (c.value() == rows) {
    r.verdict = Verdict::Yes;
    r.branch = "codim(H) = m";
  } else {
    r.verdict = Verdict::No;
    r.branch = "codim(H) < m";
  }
  return r;
}

CriterionReport regular_sequence_necessary_check(const ForcingMatrix& m) {
  CriterionReport r;
  std::int64_t rows = static_cast<std::int64_t>(m.rows());
  std::int64_t cols = static_cast<std::int64_t>(m.cols());
  r.witnesses.emplace_back("m", Codim::of(rows));
  r.witnesses.emplace_back("n", Codim::of(cols));
  if (!m.homogeneous()) {
    r.verdict = Verdict::Degenerate;
    r.branch = "inhomogeneous datum";
    r.notes.push_back("the necessary condition applies to the homogeneous case only");
    return r;
  }
  r.notes.push_back("necessary condition only: a regular sequence of m forcing forms needs m <= n "
                    "and a nonzero maximal Fitting ideal");
  if (rows > cols) {
    r.verdict = Verdict::No;
    r.branch = "m > n";
    return r;
  }
  Ideal fit = fitting_ideal(m, static_cast<std::size_t>(std::min(rows, cols)));
  bool nonzero = std::any_of(fit.gens().begin(), fit.gens().end(),
                             [](const Polynomial& g) { return !g.is_zero(); });
  if (nonzero) {
    r.verdict = Verdict::Yes;
    r.branch = "m <= n and I_min(m,n) != 0";
  } else {
    r.verdict = Verdict::No;
    r.branch = "I_min(m,n) = 0";
  }
  return r;
}

bool adjoint_membership_check(const ForcingMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjoint check needs a square matrix");
  if (!m.homogeneous()) throw std::invalid_argument("adjoint check needs a homogeneous datum");
  Ideal h = forcing_ideal(m);
  RingPtr b = h.ring();
  Polynomial det = determinant(m).embed_into(b);
  for (const auto& t : m.t_names)
    if (!membership(det * Polynomial::variable(b, t), h)) return false;
  return true;
}

FiberDescription matrix_fiber(const ForcingMatrix& m, const Point& point) {
  std::size_t rows = m.rows(), cols = m.cols();
  // augmented system [A | -b] for A·T = -b
  std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols + 1, Scalar::zero(m.base->field())));
  FiberDescription out;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = m.entries[i][j].evaluate(point);
      out.residue_point.push_back(a[i][j]);
    }
    a[i][cols] = -m.vec[i].evaluate(point);
  }
  for (std::size_t i = 0; i < rows; ++i) out.residue_point.push_back(-a[i][cols]);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    Scalar inv = a[rank][col].inverse();
    for (std::size_t j = col; j <= cols; ++j) a[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      Scalar factor = a[i][col];
      for (std::size_t j = col; j <= cols; ++j) a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  bool consistent = true;
  for (std::size_t i = rank; i < rows; ++i)
    if (!a[i][cols].is_zero()) consistent = false;

  out.rank = static_cast<std::int64_t>(rank);
  if (!consistent) {
    out.status = FiberDescription::Status::Empty;
    out.dim = -1;
  } else {
    out.status = FiberDescription::Status::AffineSpace;
    out.dim = static_cast<std::int64_t>(cols) - out.rank;
  }
  return out;
}

}  // namespace forcealg
