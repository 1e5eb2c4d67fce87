// The free module V^(x)4n with its {1,2}-word basis indexed by
// I_n = {-2n+1, ..., 2n}, sparse vectors over the Laurent ring, and
// column-sparse operator algebra.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sympblob/laurent.hpp"

namespace sympblob {

struct OutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadN : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Largest supported chain half-width; 2^(4n)-dimensional spaces get big fast.
inline constexpr int kDefaultMaxN = 5;

// Runtime limit, overridable through the SYMPBLOB_MAX_N environment variable.
int max_supported_n();
void require_valid_n(int n);  // throws BadN unless 1 <= n <= max_supported_n()

// Array index of a chain position p in I_n; the map p -> p + 2n - 1 is a
// bijection I_n -> {0, ..., 4n-1}.
int slot(int pos, int n);

using WordIndex = std::uint32_t;

inline WordIndex word_count(int n) { return WordIndex{1} << (4 * n); }

// A basis word of V^(x)4n: 4n letters in {1,2}, encoded as bits of an integer
// (bit b at slot s means letter b+1 at that slot).
class BasisWord {
 public:
  BasisWord(int n, WordIndex index);
  static BasisWord from_letters(int n, std::span<const int> letters);

  int n() const { return n_; }
  int length() const { return 4 * n_; }
  WordIndex index() const { return index_; }

  int letter_at_slot(int s) const;
  int letter_at(int pos) const { return letter_at_slot(slot(pos, n_)); }
  BasisWord with_letter(int pos, int letter) const;

  std::string str() const;  // "(1,2,1,2)" in slot order

  friend bool operator==(const BasisWord&, const BasisWord&) = default;
  friend auto operator<=>(const BasisWord&, const BasisWord&) = default;

 private:
  int n_;
  WordIndex index_;
};

// Element of V^(x)4n: finitely many basis words with nonzero Laurent
// coefficients, sorted by word index.
class TensorVector {
 public:
  struct Entry {
    WordIndex word;
    LaurentPoly coeff;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  explicit TensorVector(int n) : n_(n) { require_valid_n(n); }
  static TensorVector unit(int n, WordIndex word);
  static TensorVector from_entries(int n, std::vector<Entry> entries);

  int n() const { return n_; }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const LaurentPoly* coefficient(WordIndex word) const;

  std::string str() const;

  friend bool operator==(const TensorVector&, const TensorVector&) = default;

 private:
  int n_;
  std::vector<Entry> entries_;
};

// A-linear endomorphism of V^(x)4n stored column-sparsely: the image of each
// basis word, absent columns meaning zero. Linearity fixes the rest.
class SparseOperator {
 public:
  struct Column {
    WordIndex word;
    TensorVector image;
    friend bool operator==(const Column&, const Column&) = default;
  };

  explicit SparseOperator(int n) : n_(n) { require_valid_n(n); }
  // Columns must be presorted by word with nonzero images.
  static SparseOperator from_columns(int n, std::vector<Column> columns);

  int n() const { return n_; }
  std::size_t column_count() const { return columns_.size(); }
  const std::vector<Column>& columns() const { return columns_; }
  const TensorVector* column(WordIndex word) const;
  bool is_zero() const { return columns_.empty(); }

  friend bool operator==(const SparseOperator&, const SparseOperator&) = default;

 private:
  int n_;
  std::vector<Column> columns_;
};

SparseOperator identity_op(int n);
TensorVector apply(const SparseOperator& op, const TensorVector& v);
// Columns of (f after g): the column of w is apply(f, g's column of w).
SparseOperator compose(const SparseOperator& f, const SparseOperator& g);
SparseOperator scalar_mul(const LaurentPoly& c, const SparseOperator& f);
bool op_eq(const SparseOperator& f, const SparseOperator& g);

// First column (in word order) on which f and g differ, with both images
// rendered; nullopt when the operators are equal.
struct ColumnDifference {
  WordIndex word;
  std::string lhs_image;
  std::string rhs_image;
};
std::optional<ColumnDifference> first_difference(const SparseOperator& f,
                                                 const SparseOperator& g);

// One line per nonzero entry: "row_word_index col_word_index coefficient".
void write_triplets(std::ostream& out, const SparseOperator& op);

}  // namespace sympblob
