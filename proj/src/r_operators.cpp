#include "sympblob/r_operators.hpp"

#include <algorithm>

namespace sympblob {

SparseOperator build_r(int n, int pos, const UnitMonomial& q) {
  require_valid_n(n);
  const bool wrap = pos == 2 * n;
  const int s_first = slot(pos, n);
  const int s_second = wrap ? 0 : s_first + 1;
  const WordIndex bit_first = WordIndex{1} << s_first;
  const WordIndex bit_second = WordIndex{1} << s_second;

  // q^e for the three exponents that occur (2-l and 1-l with l in {1,2}).
  const LaurentPoly q_pow[3] = {q.inverse().to_poly(), LaurentPoly(1), q.to_poly()};

  std::vector<SparseOperator::Column> cols;
  cols.reserve(word_count(n) / 2);
  for (WordIndex w = 0; w < word_count(n); ++w) {
    const int l_first = static_cast<int>((w >> s_first) & 1u) + 1;
    const int l_second = static_cast<int>((w >> s_second) & 1u) + 1;
    if (l_first == l_second) continue;
    const WordIndex cleared = w & ~(bit_first | bit_second);
    const WordIndex out12 = cleared | bit_second;  // letter 1 at first, 2 at second
    const WordIndex out21 = cleared | bit_first;
    std::vector<TensorVector::Entry> entries;
    entries.push_back({out12, q_pow[2 - l_first + 1]});
    entries.push_back({out21, q_pow[1 - l_first + 1]});
    cols.push_back({w, TensorVector::from_entries(n, std::move(entries))});
  }
  return SparseOperator::from_columns(n, std::move(cols));
}

std::array<std::array<LaurentPoly, 4>, 4> block_matrix_oracle(const UnitMonomial& q) {
  std::array<std::array<LaurentPoly, 4>, 4> m;
  m[1][1] = q.to_poly();
  m[1][2] = LaurentPoly(1);
  m[2][1] = LaurentPoly(1);
  m[2][2] = q.inverse().to_poly();
  return m;
}

std::string Generator::str() const {
  switch (kind) {
    case Kind::U:
      return "U" + std::to_string(index);
    case Kind::E:
      return "e";
    case Kind::F:
      return "f";
  }
  return "?";
}

std::string word_str(const GeneratorWord& word) {
  std::string out;
  for (const auto& g : word) {
    if (!out.empty()) out += ' ';
    out += g.str();
  }
  return out;
}

std::vector<RFactor> gen_r_factors(int n, const Generator& g) {
  require_valid_n(n);
  const auto var = [](Var v) { return UnitMonomial::variable(v); };
  switch (g.kind) {
    case Generator::Kind::U: {
      if (g.index < 1 || g.index > n - 1)
        throw BadGenerator("U" + std::to_string(g.index) + " is not a generator for n=" +
                           std::to_string(n));
      const int i = g.index;
      return {{-n - i, var(Var::a)},
              {-n + i, var(Var::b)},
              {n - i, var(Var::c)},
              {n + i, var(Var::d)}};
    }
    case Generator::Kind::E:
      return {{-n, var(Var::x)}, {n, var(Var::y)}};
    case Generator::Kind::F:
      return {{0, var(Var::z)}, {2 * n, var(Var::w)}};
  }
  throw BadGenerator("unknown generator");
}

namespace {

SparseOperator fold_factors(int n, const std::vector<RFactor>& factors) {
  if (factors.empty()) return identity_op(n);
  SparseOperator acc = build_r(n, factors[0].pos, factors[0].q);
  for (std::size_t k = 1; k < factors.size(); ++k)
    acc = compose(acc, build_r(n, factors[k].pos, factors[k].q));
  return acc;
}

}  // namespace

SparseOperator gen_image(int n, const Generator& g) { return fold_factors(n, gen_r_factors(n, g)); }

SparseOperator word_image(int n, const GeneratorWord& word) {
  std::vector<RFactor> factors;
  for (const auto& g : word) {
    auto fs = gen_r_factors(n, g);
    factors.insert(factors.end(), fs.begin(), fs.end());
  }
  return fold_factors(n, factors);
}

ThetaAssignment theta_target(int n) {
  require_valid_n(n);
  const auto var = [](Var v) { return UnitMonomial::variable(v); };
  const UnitMonomial a = var(Var::a), b = var(Var::b), c = var(Var::c), d = var(Var::d);
  const UnitMonomial x = var(Var::x), y = var(Var::y), z = var(Var::z), w = var(Var::w);

  ThetaAssignment t;
  t.delta = two_bracket(a) * two_bracket(b) * two_bracket(c) * two_bracket(d);
  t.delta_l = two_bracket(x) * two_bracket(y);
  t.delta_r = two_bracket(z) * two_bracket(w);
  t.kappa_l = two_bracket(a * b / x) * two_bracket(c * d / y);
  t.kappa_r = two_bracket(a * d / w) * two_bracket(b * c / z);
  const UnitMonomial ratio = n % 2 == 1 ? (x * y) / (z * w) : (a * b * c * d) / (x * y * z * w);
  t.kappa = two_bracket(ratio) + LaurentPoly(2);
  return t;
}

std::pair<GeneratorWord, GeneratorWord> ij_words(int n) {
  require_valid_n(n);
  GeneratorWord i_word, j_word;
  if (n % 2 == 1) {
    for (int i = 1; i <= n - 2; i += 2) i_word.push_back(Generator::u(i));
    i_word.push_back(Generator::f());
    j_word.push_back(Generator::e());
    for (int i = 2; i <= n - 1; i += 2) j_word.push_back(Generator::u(i));
  } else {
    for (int i = 1; i <= n - 1; i += 2) i_word.push_back(Generator::u(i));
    j_word.push_back(Generator::e());
    for (int i = 2; i <= n - 2; i += 2) j_word.push_back(Generator::u(i));
    j_word.push_back(Generator::f());
  }
  return {i_word, j_word};
}

std::vector<UnitMonomial> ij_position_monomials(int n) {
  require_valid_n(n);
  std::vector<UnitMonomial> qs(4 * n);
  for (int pos = -2 * n + 1; pos <= 2 * n; ++pos) {
    Var v;
    if (pos == -n)
      v = Var::x;
    else if (pos == 0)
      v = Var::z;
    else if (pos == n)
      v = Var::y;
    else if (pos == 2 * n)
      v = Var::w;
    else if (pos < -n)
      v = Var::a;
    else if (pos < 0)
      v = Var::b;
    else if (pos < n)
      v = Var::c;
    else
      v = Var::d;
    qs[slot(pos, n)] = UnitMonomial::variable(v);
  }
  return qs;
}

}  // namespace sympblob
