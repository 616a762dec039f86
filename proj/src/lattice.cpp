#include "mlfb/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace mlfb {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Malformed: return "malformed";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::NonCoprime: return "non-coprime";
    case ErrorCode::NonPositive: return "non-positive";
    case ErrorCode::NotSimplicial: return "not-simplicial";
    case ErrorCode::NotUnimodular: return "not-unimodular";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::NotLatticeFree: return "not-lattice-free";
    case ErrorCode::NotMaximal: return "not-maximal";
    case ErrorCode::ReductionStuck: return "reduction-stuck";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::BoxTooLarge: return "box-too-large";
  }
  return "unknown";
}

// ---------------------------------------------------------------- IntVec

IntVec::IntVec(std::initializer_list<long> values) {
  coords_.reserve(values.size());
  for (long v : values) coords_.emplace_back(v);
}

IntVec IntVec::unit(std::size_t n, std::size_t i) {
  IntVec e(n);
  e[i] = 1;
  return e;
}

bool IntVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

static void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths differ: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

IntVec& IntVec::operator+=(const IntVec& other) {
  require_same_size(size(), other.size());
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

IntVec& IntVec::operator-=(const IntVec& other) {
  require_same_size(size(), other.size());
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

IntVec& IntVec::operator*=(const Integer& k) {
  for (auto& x : coords_) x *= k;
  return *this;
}

IntVec IntVec::operator-() const {
  IntVec r(*this);
  for (auto& x : r.coords_) x = -x;
  return r;
}

bool operator==(const IntVec& a, const IntVec& b) { return a.coords_ == b.coords_; }

bool operator<(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

Integer dot(const IntVec& a, const IntVec& b) {
  require_same_size(a.size(), b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------- IntMat

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(std::span<const IntVec> rows) {
  if (rows.empty()) return {};
  IntMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_size(rows[i].size(), m.cols_);
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::from_columns(std::span<const IntVec> cols) {
  if (cols.empty()) return {};
  IntMat m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntVec IntMat::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void IntMat::set_col(std::size_t j, const IntVec& v) {
  require_same_size(v.size(), rows_);
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  require_same_size(cols_, rhs.rows_);
  IntMat p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += x * rhs(k, j);
    }
  return p;
}

IntVec IntMat::operator*(const IntVec& v) const {
  require_same_size(cols_, v.size());
  IntVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r[i] = row_dot(i, v);
  return r;
}

Integer IntMat::row_dot(std::size_t i, const IntVec& v) const {
  Integer s = 0;
  for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
  return s;
}

bool operator==(const IntMat& a, const IntMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
  }
  return os << ']';
}

Integer determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMat unimodular_inverse(const IntMat& u) {
  if (u.rows() != u.cols()) throw Error(ErrorCode::NotUnimodular, "matrix is not square");
  Integer det = determinant(u);
  if (abs(det) != 1) {
    throw Error(ErrorCode::NotUnimodular, "determinant is " + det.get_str() + ", not +-1");
  }
  // For unimodular U the column HNF is the identity, so the transform is U^-1.
  HermiteForm f = hnf(u);
  assert(f.h == IntMat::identity(u.rows()));
  return f.u;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                     const auto& fn) {
  if (cur.size() == k) {
    fn(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    for_each_subset(n, k, cur, i + 1, fn);
    cur.pop_back();
  }
}

}  // namespace

Integer max_subdeterminant(const IntMat& m) {
  Integer best = 0;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<std::size_t> rs;
    for_each_subset(m.rows(), k, rs, 0, [&](const std::vector<std::size_t>& rows) {
      std::vector<std::size_t> cs;
      for_each_subset(m.cols(), k, cs, 0, [&](const std::vector<std::size_t>& cols) {
        IntMat sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        Integer d = abs(determinant(sub));
        if (d > best) best = d;
      });
    });
  }
  return best;
}

// ---------------------------------------------------------------- gcd / HNF

Bezout extended_gcd(const Integer& x, const Integer& y) {
  Integer old_r = x, r = y;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (sgn(r) != 0) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (sgn(old_r) < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

namespace {

// (col_i, col_j) <- (col_i * p + col_j * q, col_i * r + col_j * s)
void combine_columns(IntMat& m, std::size_t i, std::size_t j, const Integer& p, const Integer& q,
                     const Integer& r, const Integer& s) {
  for (std::size_t row = 0; row < m.rows(); ++row) {
    Integer ci = m(row, i), cj = m(row, j);
    m(row, i) = ci * p + cj * q;
    m(row, j) = ci * r + cj * s;
  }
}

void add_column_multiple(IntMat& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t row = 0; row < m.rows(); ++row) m(row, dst) += k * m(row, src);
}

void negate_column(IntMat& m, std::size_t j) {
  for (std::size_t row = 0; row < m.rows(); ++row) m(row, j) = -m(row, j);
}

}  // namespace

HermiteForm hnf(const IntMat& m) {
  IntMat h = m;
  IntMat u = IntMat::identity(m.cols());
  std::size_t pc = 0;
  for (std::size_t r = 0; r < h.rows() && pc < h.cols(); ++r) {
    for (std::size_t j = pc + 1; j < h.cols(); ++j) {
      if (sgn(h(r, j)) == 0) continue;
      Integer a = h(r, pc), b = h(r, j);
      Bezout e = extended_gcd(a, b);
      Integer bg = b / e.g, ag = a / e.g;
      // [[s, -b/g], [t, a/g]] has determinant 1.
      combine_columns(h, pc, j, e.s, e.t, -bg, ag);
      combine_columns(u, pc, j, e.s, e.t, -bg, ag);
    }
    if (sgn(h(r, pc)) == 0) continue;
    if (sgn(h(r, pc)) < 0) {
      negate_column(h, pc);
      negate_column(u, pc);
    }
    const Integer pivot = h(r, pc);
    for (std::size_t k = 0; k < pc; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, k).get_mpz_t(), pivot.get_mpz_t());
      if (sgn(q) == 0) continue;
      add_column_multiple(h, k, pc, -q);
      add_column_multiple(u, k, pc, -q);
    }
    ++pc;
  }
  return {std::move(h), std::move(u)};
}

IntMat kernel_lattice_basis(const IntVec& a) {
  const std::size_t n = a.size();
  if (n < 2) throw Error(ErrorCode::Malformed, "kernel basis needs at least two weights");
  Integer g = 0;
  for (const auto& x : a) {
    if (sgn(x) <= 0) throw Error(ErrorCode::NonPositive, "weight " + x.get_str() + " is not positive");
    g = gcd(g, x);
  }
  if (g != 1) throw Error(ErrorCode::NonCoprime, "weights have common divisor " + g.get_str());

  IntMat row(1, n);
  for (std::size_t j = 0; j < n; ++j) row(0, j) = a[j];
  HermiteForm f = hnf(row);
  // H = (1, 0, ..., 0), so columns 1..n-1 of U span the kernel.
  IntMat k(n, n - 1);
  for (std::size_t j = 1; j < n; ++j) k.set_col(j - 1, f.u.col(j));
  return hnf(k).h;
}

IntVec signed_maximal_minors(const IntMat& m) {
  if (m.rows() != m.cols() + 1) {
    throw Error(ErrorCode::DimensionMismatch, "maximal minors need an (n+1) x n matrix");
  }
  const std::size_t n = m.cols();
  IntVec out(m.rows());
  for (std::size_t skip = 0; skip < m.rows(); ++skip) {
    IntMat sub(n, n);
    for (std::size_t i = 0, r = 0; i < m.rows(); ++i) {
      if (i == skip) continue;
      for (std::size_t j = 0; j < n; ++j) sub(r, j) = m(i, j);
      ++r;
    }
    out[skip] = determinant(sub);
    if (skip % 2 == 1) out[skip] = -out[skip];
  }
  return out;
}

// ---------------------------------------------------------------- polyhedral helpers

IntVec max_vectors(std::span<const IntVec> vectors) {
  if (vectors.empty()) throw Error(ErrorCode::DimensionMismatch, "max of an empty family");
  IntVec m = vectors[0];
  for (std::size_t k = 1; k < vectors.size(); ++k) {
    require_same_size(vectors[k].size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (vectors[k][i] > m[i]) m[i] = vectors[k][i];
  }
  return m;
}

IntVec body_rhs(const IntMat& a, std::span<const IntVec> points) {
  if (points.empty()) throw Error(ErrorCode::DimensionMismatch, "body of an empty point set");
  std::vector<IntVec> images;
  images.reserve(points.size());
  for (const auto& p : points) images.push_back(a * p);
  return max_vectors(images);
}

int lex_sign(const IntVec& w) {
  for (const auto& x : w) {
    if (int s = sgn(x)) return s;
  }
  return 0;
}

// ---------------------------------------------------------------- SimplicialData

namespace {

IntVec left_annihilator(const IntMat& a) {
  // y^T A = 0  <=>  A^T y = 0.
  HermiteForm f = hnf(a.transpose());
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = 0; j < f.h.cols(); ++j)
    if (f.h.col(j).is_zero()) zero_cols.push_back(j);
  if (zero_cols.size() != 1) {
    throw Error(ErrorCode::NotSimplicial, "matrix does not have full column rank");
  }
  IntVec y = f.u.col(zero_cols[0]);
  if (lex_sign(y) < 0) y = -y;
  return y;
}

}  // namespace

SimplicialData::SimplicialData(IntMat a) : a_(std::move(a)) {
  if (a_.cols() < 1 || a_.rows() != a_.cols() + 1) {
    throw Error(ErrorCode::NotSimplicial, "matrix must have shape (d+1) x d with d >= 1");
  }
  y_ = left_annihilator(a_);
  validate();
}

SimplicialData::SimplicialData(IntMat a, IntVec y) : a_(std::move(a)), y_(std::move(y)) {
  if (a_.cols() < 1 || a_.rows() != a_.cols() + 1) {
    throw Error(ErrorCode::NotSimplicial, "matrix must have shape (d+1) x d with d >= 1");
  }
  if (y_.size() != a_.rows()) throw Error(ErrorCode::DimensionMismatch, "annihilator length mismatch");
  validate();
}

SimplicialData SimplicialData::from_weights(const IntVec& a) {
  return SimplicialData(kernel_lattice_basis(a), a);
}

void SimplicialData::validate() {
  for (const auto& x : y_) {
    if (sgn(x) <= 0) {
      throw Error(ErrorCode::NotSimplicial, "no strictly positive vector annihilates the matrix");
    }
  }
  for (std::size_t j = 0; j < a_.cols(); ++j) {
    if (sgn(dot(y_, a_.col(j))) != 0) {
      throw Error(ErrorCode::NotSimplicial, "annihilator does not annihilate column " + std::to_string(j));
    }
  }
  IntVec minors = signed_maximal_minors(a_);
  for (std::size_t i = 0; i < minors.size(); ++i) {
    if (sgn(minors[i]) == 0) {
      throw Error(ErrorCode::NotSimplicial, "d x d minor without row " + std::to_string(i) + " vanishes");
    }
  }
}

}  // namespace mlfb
