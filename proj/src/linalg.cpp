#include "cohom/linalg.hpp"
#include "cohom/error.hpp"

namespace cohom {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = AlgNum(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty())
    return Mat();
  Mat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw Error(ErrorKind::Parse, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t height) {
  Mat m(height, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < height; ++i)
      m(i, j) = cols[j][i];
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

AlgNum Mat::trace() const {
  AlgNum s;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    s += (*this)(i, i);
  return s;
}

bool Mat::is_zero() const { return cohom::is_zero(data_); }

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.data_)
    x = -x;
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorKind::Invariant, "matrix shape mismatch in sum");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorKind::Invariant, "matrix shape mismatch in difference");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= o.data_[i];
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorKind::Invariant, "matrix shape mismatch in product");
  Mat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const AlgNum& x = a(i, k);
      if (x.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const AlgNum& y = b(k, j);
        if (!y.is_zero())
          c(i, j) += x * y;
      }
    }
  return c;
}

Mat operator*(const AlgNum& s, const Mat& a) {
  Mat r = a;
  for (auto& x : r.data_)
    x = s * x;
  return r;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols_ != v.size())
    throw Error(ErrorKind::Invariant, "matrix/vector shape mismatch");
  Vec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero())
        out[i] += a(i, j) * v[j];
  return out;
}

Vec vzero(std::size_t n) { return Vec(n); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = AlgNum(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero())
      return false;
  return true;
}

AlgNum dot(const Vec& a, const Vec& b) {
  AlgNum s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero())
      s += a[i] * b[i];
  return s;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}

Vec operator*(const AlgNum& s, const Vec& v) {
  Vec r(v.size());
  if (s.is_zero())
    return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      r[i] = s * v[i];
  return r;
}

std::size_t leading_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      return i;
  return v.size();
}

Vec normalize_leading(const Vec& v) {
  std::size_t i = leading_index(v);
  if (i == v.size())
    throw Error(ErrorKind::Internal, "cannot normalize a zero vector");
  return v[i].inv() * v;
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

namespace {

// x -= c * y, skipping zero entries of y
void axpy(Vec& x, const AlgNum& c, const Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!y[i].is_zero())
      x[i] -= c * y[i];
}

} // namespace

Echelon rref(const std::vector<Vec>& input, std::size_t width) {
  std::vector<Vec> m = input;
  Echelon e;
  e.width = width;
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero())
      ++piv;
    if (piv == m.size())
      continue;
    std::swap(m[r], m[piv]);
    AlgNum s = m[r][c].inv();
    for (auto& x : m[r])
      if (!x.is_zero())
        x *= s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero())
        continue;
      AlgNum f = m[i][c];
      axpy(m[i], f, m[r]);
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t width) {
  Echelon e = rref(rows, width);
  std::vector<bool> is_pivot(width, false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < width; ++f) {
    if (is_pivot[f])
      continue;
    Vec x(width);
    x[f] = AlgNum(1);
    for (std::size_t k = 0; k < e.rows.size(); ++k)
      if (!e.rows[k][f].is_zero())
        x[e.pivots[k]] = -e.rows[k][f];
    basis.push_back(std::move(x));
  }
  return rref(basis, width).rows;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  std::vector<Vec> aug;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vec r = a.row(i);
    r.push_back(b[i]);
    aug.push_back(std::move(r));
  }
  Echelon e = rref(aug, a.cols() + 1);
  Vec x(a.cols());
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (e.pivots[k] == a.cols())
      return std::nullopt;
    x[e.pivots[k]] = e.rows[k][a.cols()];
  }
  return x;
}

Mat inverse(const Mat& a) {
  if (!a.square())
    throw Error(ErrorKind::Invariant, "inverse of a non-square matrix");
  std::size_t n = a.rows();
  std::vector<Vec> aug;
  for (std::size_t i = 0; i < n; ++i) {
    Vec r = a.row(i);
    r.resize(2 * n);
    r[n + i] = AlgNum(1);
    aug.push_back(std::move(r));
  }
  Echelon e = rref(aug, 2 * n);
  if (e.rank() < n || e.pivots[n - 1] != n - 1)
    throw Error(ErrorKind::Invariant, "matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = e.rows[i][n + j];
  return inv;
}

std::pair<Vec, Vec> SpanBasis::reduce(const Vec& v) const {
  Vec x = v;
  Vec combo(count_);
  for (const auto& row : rows_) {
    if (x[row.pivot].is_zero())
      continue;
    AlgNum c = x[row.pivot];
    axpy(x, c, row.v);
    for (std::size_t i = 0; i < row.combo.size(); ++i)
      if (!row.combo[i].is_zero())
        combo[i] += c * row.combo[i];
  }
  return {std::move(x), std::move(combo)};
}

bool SpanBasis::add(const Vec& v) {
  if (v.size() != width_)
    throw Error(ErrorKind::Internal, "span vector width mismatch");
  auto [x, combo] = reduce(v);
  std::size_t p = leading_index(x);
  if (p == width_)
    return false;
  // x = v - sum combo_i a_i  =>  x / x_p expressed in accepted vectors
  Vec c(count_ + 1);
  for (std::size_t i = 0; i < count_; ++i)
    c[i] = -combo[i];
  c[count_] = AlgNum(1);
  AlgNum s = x[p].inv();
  for (auto& e : x)
    if (!e.is_zero())
      e *= s;
  for (auto& e : c)
    if (!e.is_zero())
      e *= s;
  rows_.push_back({std::move(x), p, std::move(c)});
  ++count_;
  return true;
}

bool SpanBasis::contains(const Vec& v) const { return is_zero(reduce(v).first); }

std::optional<Vec> SpanBasis::coordinates(const Vec& v) const {
  auto [x, combo] = reduce(v);
  if (!is_zero(x))
    return std::nullopt;
  return combo;
}

} // namespace cohom
