#include "sympblob/tensor_space.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace sympblob {

int max_supported_n() {
  static const int value = [] {
    if (const char* env = std::getenv("SYMPBLOB_MAX_N")) {
      char* end = nullptr;
      long parsed = std::strtol(env, &end, 10);
      if (end != env && parsed >= 1 && parsed <= 6) return static_cast<int>(parsed);
    }
    return kDefaultMaxN;
  }();
  return value;
}

void require_valid_n(int n) {
  if (n < 1 || n > max_supported_n())
    throw BadN("n must be between 1 and " + std::to_string(max_supported_n()) + ", got " +
               std::to_string(n));
}

int slot(int pos, int n) {
  require_valid_n(n);
  if (pos < -2 * n + 1 || pos > 2 * n)
    throw OutOfRange("position " + std::to_string(pos) + " outside I_" + std::to_string(n));
  return pos + 2 * n - 1;
}

BasisWord::BasisWord(int n, WordIndex index) : n_(n), index_(index) {
  require_valid_n(n);
  if (index >= word_count(n))
    throw OutOfRange("word index " + std::to_string(index) + " out of range for n=" +
                     std::to_string(n));
}

BasisWord BasisWord::from_letters(int n, std::span<const int> letters) {
  require_valid_n(n);
  if (static_cast<int>(letters.size()) != 4 * n)
    throw OutOfRange("expected " + std::to_string(4 * n) + " letters");
  WordIndex index = 0;
  for (int s = 0; s < 4 * n; ++s) {
    if (letters[s] != 1 && letters[s] != 2) throw OutOfRange("letters must be 1 or 2");
    if (letters[s] == 2) index |= WordIndex{1} << s;
  }
  return BasisWord(n, index);
}

int BasisWord::letter_at_slot(int s) const {
  if (s < 0 || s >= 4 * n_) throw OutOfRange("slot " + std::to_string(s) + " out of range");
  return static_cast<int>((index_ >> s) & 1u) + 1;
}

BasisWord BasisWord::with_letter(int pos, int letter) const {
  if (letter != 1 && letter != 2) throw OutOfRange("letters must be 1 or 2");
  int s = slot(pos, n_);
  WordIndex mask = WordIndex{1} << s;
  WordIndex index = letter == 2 ? (index_ | mask) : (index_ & ~mask);
  return BasisWord(n_, index);
}

std::string BasisWord::str() const {
  std::string out = "(";
  for (int s = 0; s < 4 * n_; ++s) {
    if (s) out += ',';
    out += static_cast<char>('0' + letter_at_slot(s));
  }
  out += ')';
  return out;
}

TensorVector TensorVector::unit(int n, WordIndex word) {
  TensorVector v(n);
  v.entries_.push_back({word, LaurentPoly(1)});
  return v;
}

TensorVector TensorVector::from_entries(int n, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& s, const Entry& t) { return s.word < t.word; });
  TensorVector v(n);
  v.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().word == e.word) {
      v.entries_.back().coeff += e.coeff;
      if (v.entries_.back().coeff.is_zero()) v.entries_.pop_back();
    } else if (!e.coeff.is_zero()) {
      v.entries_.push_back(std::move(e));
    }
  }
  return v;
}

const LaurentPoly* TensorVector::coefficient(WordIndex word) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), word,
                             [](const Entry& e, WordIndex w) { return e.word < w; });
  return (it != entries_.end() && it->word == word) ? &it->coeff : nullptr;
}

std::string TensorVector::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& e : entries_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << e.coeff.str() << ")*[" << e.word << ']';
  }
  return out.str();
}

SparseOperator SparseOperator::from_columns(int n, std::vector<Column> columns) {
  SparseOperator op(n);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].image.n() != n) throw DimensionMismatch("column dimension mismatch");
    if (i > 0 && columns[i - 1].word >= columns[i].word)
      throw DimensionMismatch("columns must be strictly sorted by word");
  }
  op.columns_ = std::move(columns);
  return op;
}

const TensorVector* SparseOperator::column(WordIndex word) const {
  auto it = std::lower_bound(columns_.begin(), columns_.end(), word,
                             [](const Column& c, WordIndex w) { return c.word < w; });
  return (it != columns_.end() && it->word == word) ? &it->image : nullptr;
}

SparseOperator identity_op(int n) {
  require_valid_n(n);
  std::vector<SparseOperator::Column> cols;
  cols.reserve(word_count(n));
  for (WordIndex w = 0; w < word_count(n); ++w) cols.push_back({w, TensorVector::unit(n, w)});
  return SparseOperator::from_columns(n, std::move(cols));
}

TensorVector apply(const SparseOperator& op, const TensorVector& v) {
  if (op.n() != v.n()) throw DimensionMismatch("operator/vector dimension mismatch");
  std::vector<TensorVector::Entry> acc;
  for (const auto& [word, coeff] : v.entries()) {
    const TensorVector* col = op.column(word);
    if (!col) continue;
    for (const auto& out : col->entries()) acc.push_back({out.word, coeff * out.coeff});
  }
  return TensorVector::from_entries(op.n(), std::move(acc));
}

SparseOperator compose(const SparseOperator& f, const SparseOperator& g) {
  if (f.n() != g.n()) throw DimensionMismatch("operator dimension mismatch");
  std::vector<SparseOperator::Column> cols;
  cols.reserve(g.column_count());
  for (const auto& col : g.columns()) {
    TensorVector image = apply(f, col.image);
    if (!image.is_zero()) cols.push_back({col.word, std::move(image)});
  }
  return SparseOperator::from_columns(f.n(), std::move(cols));
}

SparseOperator scalar_mul(const LaurentPoly& c, const SparseOperator& f) {
  if (c.is_zero()) return SparseOperator(f.n());
  std::vector<SparseOperator::Column> cols;
  cols.reserve(f.column_count());
  for (const auto& col : f.columns()) {
    std::vector<TensorVector::Entry> entries;
    entries.reserve(col.image.entries().size());
    for (const auto& e : col.image.entries()) entries.push_back({e.word, c * e.coeff});
    TensorVector image = TensorVector::from_entries(f.n(), std::move(entries));
    if (!image.is_zero()) cols.push_back({col.word, std::move(image)});
  }
  return SparseOperator::from_columns(f.n(), std::move(cols));
}

bool op_eq(const SparseOperator& f, const SparseOperator& g) { return f == g; }

std::optional<ColumnDifference> first_difference(const SparseOperator& f,
                                                 const SparseOperator& g) {
  auto it = f.columns().begin();
  auto jt = g.columns().begin();
  while (it != f.columns().end() || jt != g.columns().end()) {
    if (jt == g.columns().end() || (it != f.columns().end() && it->word < jt->word)) {
      return ColumnDifference{it->word, it->image.str(), "0"};
    }
    if (it == f.columns().end() || jt->word < it->word) {
      return ColumnDifference{jt->word, "0", jt->image.str()};
    }
    if (!(it->image == jt->image)) {
      return ColumnDifference{it->word, it->image.str(), jt->image.str()};
    }
    ++it;
    ++jt;
  }
  return std::nullopt;
}

void write_triplets(std::ostream& out, const SparseOperator& op) {
  for (const auto& col : op.columns())
    for (const auto& e : col.image.entries())
      out << e.word << ' ' << col.word << ' ' << e.coeff.token() << '\n';
}

}  // namespace sympblob
