#include "coxdesc/coxeter_type.hpp"

#include <cctype>
#include <charconv>

#include "coxdesc/errors.hpp"

namespace coxdesc {
namespace {

int fixed_rank(Family f) {
  switch (f) {
    case Family::I2:
      return 2;
    case Family::H3:
      return 3;
    case Family::H4:
    case Family::F4:
      return 4;
    case Family::E6:
      return 6;
    case Family::E7:
      return 7;
    case Family::E8:
      return 8;
    default:
      return 0;
  }
}

CoxeterMatrix identity_matrix(int n) {
  CoxeterMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

// 1-based edge
void edge(CoxeterMatrix& m, int i, int j, int value) {
  m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = value;
  m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = value;
}

int parse_positive(std::string_view digits, std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("malformed Coxeter type '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

CoxeterType CoxeterType::make(Family family, int rank, int dihedral_m) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw InvalidArgument("type A requires rank >= 1");
      break;
    case Family::B:
      if (rank < 2) throw InvalidArgument("type B requires rank >= 2");
      break;
    case Family::D:
      if (rank < 3) throw InvalidArgument("type D requires rank >= 3");
      break;
    case Family::I2:
      if (rank != 2) throw InvalidArgument("type I2 has rank 2");
      if (dihedral_m < 3) throw InvalidArgument("type I2(m) requires m >= 3");
      break;
    default:
      if (rank != fixed_rank(family)) {
        throw InvalidArgument("type " + CoxeterType{family, fixed_rank(family), 0}.label() + " has rank " +
                              std::to_string(fixed_rank(family)));
      }
  }
  if (rank > 31) throw InvalidArgument("rank above 31 is not supported");
  return CoxeterType{family, rank, family == Family::I2 ? dihedral_m : 0};
}

CoxeterType CoxeterType::parse(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty Coxeter type");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const std::string_view rest = text.substr(1);
  switch (letter) {
    case 'A':
      return make(Family::A, parse_positive(rest, text));
    case 'B':
      return make(Family::B, parse_positive(rest, text));
    case 'D':
      return make(Family::D, parse_positive(rest, text));
    case 'I': {
      if (rest.substr(0, 2) != "2:") throw InvalidArgument("dihedral types are written I2:m, got '" + std::string(text) + "'");
      return make(Family::I2, 2, parse_positive(rest.substr(2), text));
    }
    case 'H': {
      const int n = parse_positive(rest, text);
      if (n == 3) return make(Family::H3, 3);
      if (n == 4) return make(Family::H4, 4);
      break;
    }
    case 'F':
      if (parse_positive(rest, text) == 4) return make(Family::F4, 4);
      break;
    case 'E': {
      const int n = parse_positive(rest, text);
      if (n == 6) return make(Family::E6, 6);
      if (n == 7) return make(Family::E7, 7);
      if (n == 8) return make(Family::E8, 8);
      break;
    }
    case 'G':
      if (rest == "2") return make(Family::I2, 2, 6);
      break;
    default:
      break;
  }
  throw InvalidArgument("unknown Coxeter type '" + std::string(text) + "'");
}

std::string CoxeterType::label() const {
  switch (family) {
    case Family::A:
      return "A" + std::to_string(rank);
    case Family::B:
      return "B" + std::to_string(rank);
    case Family::D:
      return "D" + std::to_string(rank);
    case Family::I2:
      return "I2:" + std::to_string(dihedral_m);
    case Family::H3:
      return "H3";
    case Family::H4:
      return "H4";
    case Family::F4:
      return "F4";
    case Family::E6:
      return "E6";
    case Family::E7:
      return "E7";
    case Family::E8:
      return "E8";
  }
  return "?";
}

bool CoxeterType::is_classical() const {
  return family == Family::A || family == Family::B || family == Family::D;
}

CoxeterMatrix classical_coxeter_matrix(Family family, int n) {
  if ((family == Family::A && n < 1) || (family == Family::B && n < 2) || (family == Family::D && n < 3)) return {};
  CoxeterMatrix m = identity_matrix(n);
  switch (family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edge(m, i, i + 1, 3);
      break;
    case Family::B:
      edge(m, 1, 2, 4);
      for (int i = 2; i < n; ++i) edge(m, i, i + 1, 3);
      break;
    case Family::D:
      edge(m, 1, 3, 3);
      edge(m, 2, 3, 3);
      for (int i = 3; i < n; ++i) edge(m, i, i + 1, 3);
      break;
    default:
      return {};
  }
  return m;
}

CoxeterMatrix CoxeterType::coxeter_matrix() const {
  if (is_classical()) return classical_coxeter_matrix(family, rank);
  CoxeterMatrix m = identity_matrix(rank);
  switch (family) {
    case Family::I2:
      edge(m, 1, 2, dihedral_m);
      break;
    case Family::H3:
    case Family::H4:
      edge(m, 1, 2, 5);
      for (int i = 2; i < rank; ++i) edge(m, i, i + 1, 3);
      break;
    case Family::F4:
      edge(m, 1, 2, 3);
      edge(m, 2, 3, 4);
      edge(m, 3, 4, 3);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      edge(m, 1, 3, 3);
      edge(m, 2, 4, 3);
      for (int i = 3; i < rank; ++i) edge(m, i, i + 1, 3);
      break;
    default:
      break;
  }
  return m;
}

BigInt CoxeterType::order() const {
  const auto n = static_cast<unsigned>(rank);
  switch (family) {
    case Family::A:
      return factorial(n + 1);
    case Family::B:
      return power_of_two(n) * factorial(n);
    case Family::D:
      return power_of_two(n - 1) * factorial(n);
    case Family::I2:
      return BigInt(2 * dihedral_m);
    case Family::H3:
      return BigInt(120);
    case Family::H4:
      return BigInt(14400);
    case Family::F4:
      return BigInt(1152);
    case Family::E6:
      return BigInt(51840);
    case Family::E7:
      return BigInt(2903040);
    case Family::E8:
      return BigInt(696729600);
  }
  return BigInt(0);
}

}  // namespace coxdesc
