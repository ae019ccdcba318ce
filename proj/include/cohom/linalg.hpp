#pragma once

#include "cohom/exactnum.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cohom {

using Vec = std::vector<AlgNum>;

/// Dense matrix over AlgNum, row-major.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t height);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  AlgNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const AlgNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  /// Entries flattened row-major (used to test linear membership of matrices).
  const Vec& flat() const { return data_; }

  Mat transpose() const;
  AlgNum trace() const;
  bool is_zero() const;

  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const AlgNum& s, const Mat& a);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  Vec data_;
};

Vec vzero(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
AlgNum dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const AlgNum& s, const Vec& v);
/// Index of the first nonzero entry, or v.size().
std::size_t leading_index(const Vec& v);
/// v scaled so that its leading entry is 1 (v must be nonzero).
Vec normalize_leading(const Vec& v);
std::string to_string(const Vec& v);

/// Reduced row echelon form of a list of equal-length rows.
struct Echelon {
  std::vector<Vec> rows;            // nonzero, pivot entry 1
  std::vector<std::size_t> pivots;  // pivot column per row, increasing
  std::size_t width = 0;
  std::size_t rank() const { return rows.size(); }
};

Echelon rref(const std::vector<Vec>& rows, std::size_t width);

/// Basis of { x : r . x = 0 for every row r }, returned in reduced echelon form.
std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t width);

/// Any solution x of A x = b (free variables zero), or nullopt.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Exact inverse; throws on singular input.
Mat inverse(const Mat& a);

/**
 * Incrementally built span of vectors that remembers how each echelon row
 * is expressed in the inserted vectors, so membership tests also return
 * coordinates.
 */
class SpanBasis {
public:
  explicit SpanBasis(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return count_; }
  std::size_t rank() const { return rows_.size(); }

  /// Insert v; returns false (and records nothing) if v is already in the span.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  /// Coordinates of v in the accepted (independent) inserted vectors.
  std::optional<Vec> coordinates(const Vec& v) const;

private:
  struct Row {
    Vec v;
    std::size_t pivot;
    Vec combo;  // v = sum combo[i] * accepted[i]
  };
  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
  /// Reduce v against the rows; returns remainder and the accumulated combination.
  std::pair<Vec, Vec> reduce(const Vec& v) const;
};

} // namespace cohom
