#include "topobim/bool_matrix.hpp"

#include "topobim/error.hpp"

namespace topobim {

BoolMatrix::BoolMatrix(int n) : n_(static_cast<std::uint8_t>(n)) {
  if (n < 0 || n > kMaxLabels) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "matrix side " + std::to_string(n) + " exceeds " + std::to_string(kMaxLabels));
  }
}

BoolMatrix BoolMatrix::identity(int n) {
  BoolMatrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[idx(i)] = bit(i);
  return m;
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::vector<bool>>& rows) {
  BoolMatrix m(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::kMalformedInput, "relation matrix is not square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j]) m.rows_[i] |= bit(static_cast<int>(j));
    }
  }
  return m;
}

void BoolMatrix::set(int i, int j, bool value) {
  if (value) {
    rows_[idx(i)] |= bit(j);
  } else {
    rows_[idx(i)] &= ~bit(j);
  }
}

Mask BoolMatrix::column(int j) const {
  Mask c = 0;
  for (int i = 0; i < n_; ++i) {
    if (get(i, j)) c |= bit(i);
  }
  return c;
}

bool BoolMatrix::is_reflexive() const {
  for (int i = 0; i < n_; ++i) {
    if (!get(i, i)) return false;
  }
  return true;
}

bool BoolMatrix::is_transitive() const {
  // Row i must absorb the row of every j it reaches.
  for (int i = 0; i < n_; ++i) {
    Mask r = rows_[idx(i)];
    for (Mask rest = r; rest; rest &= rest - 1) {
      int j = std::countr_zero(rest);
      if (!is_subset(rows_[idx(j)], r)) return false;
    }
  }
  return true;
}

bool BoolMatrix::is_contained_in(const BoolMatrix& other) const {
  if (n_ != other.n_) return false;
  for (int i = 0; i < n_; ++i) {
    if (!is_subset(rows_[idx(i)], other.rows_[idx(i)])) return false;
  }
  return true;
}

BoolMatrix BoolMatrix::transposed() const {
  BoolMatrix t(n_);
  for (int j = 0; j < n_; ++j) t.rows_[idx(j)] = column(j);
  return t;
}

BoolMatrix& BoolMatrix::operator|=(const BoolMatrix& other) {
  for (int i = 0; i < n_; ++i) rows_[idx(i)] |= other.rows_[idx(i)];
  return *this;
}

std::vector<std::vector<bool>> BoolMatrix::to_rows() const {
  std::vector<std::vector<bool>> out(idx(n_), std::vector<bool>(idx(n_), false));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[idx(i)][idx(j)] = get(i, j);
  }
  return out;
}

std::size_t BoolMatrix::hash() const {
  std::size_t h = n_;
  for (int i = 0; i < n_; ++i) h = h * 1000003u ^ rows_[idx(i)];
  return h;
}

BoolMatrix transitive_closure(const BoolMatrix& rel) {
  BoolMatrix c = rel;
  const int n = rel.size();
  for (int i = 0; i < n; ++i) c.set(i, i);
  for (int k = 0; k < n; ++k) {
    const Mask via = c.row(k);
    for (int i = 0; i < n; ++i) {
      if (c.get(i, k)) c.set_row(i, c.row(i) | via);
    }
  }
  return c;
}

}  // namespace topobim
