#include "distinv/closed_forms.hpp"

#include <string>

namespace distinv {

namespace {

void append(std::vector<mpz_class>& d, long value, long copies) {
  for (long i = 0; i < copies; ++i) d.emplace_back(value);
}

}  // namespace

SnfResult snf_complete(MatrixKind kind, int n) {
  if (n < 2) throw Error("snf_complete needs n >= 2");
  std::vector<mpz_class> d{1};
  switch (kind) {
    case MatrixKind::L:
    case MatrixKind::Atr:
    case MatrixKind::Ddeg:
      append(d, n, n - 2);
      d.emplace_back(0);
      break;
    case MatrixKind::Q:
    case MatrixKind::AtrPlus:
    case MatrixKind::DdegPlus: {
      append(d, n - 2, n - 2);
      d.push_back(mpz_class(2) * (n - 1) * (n - 2));
      break;
    }
    default:
      throw Error("snf_complete: unsupported matrix kind " + std::string(to_string(kind)));
  }
  // For n = 2 the plus family degenerates to (1, 0), which is also what
  // Q(K_2) = [[1, 1], [1, 1]] gives.
  return SnfResult::from_diagonal(d);
}

SnfResult snf_star(MatrixKind kind, int leaves) {
  if (leaves < 1) throw Error("snf_star needs at least one leaf");
  const long m = leaves;
  std::vector<mpz_class> d;
  if (kind == MatrixKind::DdegPlus) {
    append(d, 1, m);
    d.push_back(mpz_class(2) * m * (m - 1));
  } else if (kind == MatrixKind::Ddeg) {
    if ((2 * m + 1) % 3 == 0) {
      d.emplace_back(1);
      append(d, 3, m - 1);
      d.push_back(mpz_class(2) * m * (m - 1));
    } else {
      append(d, 1, 2);
      append(d, 3, m - 2);
      d.push_back(mpz_class(6) * m * (m - 1));
    }
  } else {
    throw Error("snf_star: unsupported matrix kind " + std::string(to_string(kind)));
  }
  return SnfResult::from_diagonal(d);
}

SnfResult snf_tree_distance(int vertices) {
  if (vertices < 2) throw Error("snf_tree_distance needs at least 2 vertices");
  if (vertices == 2) return SnfResult::from_diagonal({1, 1});
  const long n = vertices - 1;
  std::vector<mpz_class> d{1, 1};
  append(d, 2, n - 2);
  d.emplace_back(2 * n);
  return SnfResult::from_diagonal(d);
}

mpz_class tree_distance_determinant(int vertices) {
  if (vertices < 2) throw Error("tree_distance_determinant needs at least 2 vertices");
  const unsigned long n = static_cast<unsigned long>(vertices - 1);
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, n - 1);
  mpz_class det = power * n;
  return n % 2 == 0 ? det : mpz_class(-det);
}

}  // namespace distinv
